#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "minlines/errors.hpp"
#include "minlines/lattice.hpp"

namespace minlines {

/// A subset of the simple roots, addressed by 1-based Bourbaki node number.
/// Used for Levi sets I, supports, descent sets and perpendicular sets alike.
class ParabolicSet {
 public:
  ParabolicSet() = default;
  explicit ParabolicSet(int rank) : rank_(rank) {
    detail::require(rank >= 0 && rank <= kMaxRank, "rank out of range");
  }
  ParabolicSet(int rank, std::initializer_list<int> nodes) : ParabolicSet(rank) {
    for (int k : nodes) insert(k);
  }
  ParabolicSet(int rank, const std::vector<int>& nodes) : ParabolicSet(rank) {
    for (int k : nodes) insert(k);
  }

  static ParabolicSet all(int rank) {
    ParabolicSet s(rank);
    s.bits_ = rank == 0 ? 0u : ((1u << rank) - 1u);
    return s;
  }
  /// S \ {node}: the Levi set of the maximal parabolic P^node.
  static ParabolicSet maximal(int rank, int node) {
    ParabolicSet s = all(rank);
    s.erase(node);
    return s;
  }

  int rank() const { return rank_; }
  bool contains(int node) const { return node >= 1 && node <= rank_ && (bits_ >> (node - 1)) & 1u; }
  void insert(int node) {
    check(node);
    bits_ |= 1u << (node - 1);
  }
  void erase(int node) {
    check(node);
    bits_ &= ~(1u << (node - 1));
  }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  std::vector<int> nodes() const {
    std::vector<int> out;
    for (int k = 1; k <= rank_; ++k)
      if (contains(k)) out.push_back(k);
    return out;
  }

  ParabolicSet complement() const {
    ParabolicSet s = all(rank_);
    s.bits_ &= ~bits_;
    return s;
  }
  bool subset_of(const ParabolicSet& o) const { return (bits_ & ~o.bits_) == 0; }

  friend ParabolicSet operator|(ParabolicSet a, const ParabolicSet& b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend ParabolicSet operator&(ParabolicSet a, const ParabolicSet& b) {
    a.bits_ &= b.bits_;
    return a;
  }
  friend ParabolicSet operator-(ParabolicSet a, const ParabolicSet& b) {
    a.bits_ &= ~b.bits_;
    return a;
  }
  friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;

  /// "{1,3,4}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int k : nodes()) {
      if (!first) out += ",";
      out += std::to_string(k);
      first = false;
    }
    return out + "}";
  }

 private:
  void check(int node) const {
    detail::require(node >= 1 && node <= rank_,
                    "simple root index " + std::to_string(node) + " out of range 1.." +
                        std::to_string(rank_));
  }

  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

/// The support of a root as a set of simple roots.
template <class Tag>
ParabolicSet support_of(const Coeffs<Tag>& v) {
  return ParabolicSet(v.rank(), v.support());
}

}  // namespace minlines
