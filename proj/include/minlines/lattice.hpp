#pragma once

// Dense integer coefficient vectors over a fixed basis of a rank <= 16 lattice:
// roots (simple-root basis), coroots (simple-coroot basis) and weights
// (fundamental-weight basis). The three are distinct types so that a root can
// never be paired with a root by accident.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "minlines/errors.hpp"

namespace minlines {

inline constexpr int kMaxRank = 16;

template <class Tag>
class Coeffs {
 public:
  Coeffs() = default;
  explicit Coeffs(int rank) : rank_(rank) {
    detail::require(rank >= 0 && rank <= kMaxRank, "rank out of range");
  }
  Coeffs(std::initializer_list<int> values) : Coeffs(static_cast<int>(values.size())) {
    std::copy(values.begin(), values.end(), c_.begin());
  }
  explicit Coeffs(const std::vector<int>& values) : Coeffs(static_cast<int>(values.size())) {
    std::copy(values.begin(), values.end(), c_.begin());
  }

  static Coeffs unit(int rank, int index) {
    Coeffs v(rank);
    v.c_[index] = 1;
    return v;
  }

  int rank() const { return rank_; }
  // 0-based coordinate access; node k (1-based) lives at index k-1.
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }

  int sum() const { return std::accumulate(c_.begin(), c_.begin() + rank_, 0); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
  }
  bool nonnegative() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
  }
  bool nonpositive() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x <= 0; });
  }
  /// Nonzero and all coordinates >= 0.
  bool positive() const { return nonnegative() && !is_zero(); }
  bool negative() const { return nonpositive() && !is_zero(); }

  /// Simple roots (as 1-based nodes) with nonzero coefficient.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) out.push_back(i + 1);
    return out;
  }

  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

  Coeffs operator-() const {
    Coeffs r(*this);
    for (int i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
    return r;
  }
  Coeffs& operator+=(const Coeffs& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Coeffs& operator-=(const Coeffs& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Coeffs& operator*=(int k) {
    for (int i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
  }
  friend Coeffs operator+(Coeffs a, const Coeffs& b) { return a += b; }
  friend Coeffs operator-(Coeffs a, const Coeffs& b) { return a -= b; }
  friend Coeffs operator*(int k, Coeffs a) { return a *= k; }

  friend bool operator==(const Coeffs&, const Coeffs&) = default;
  friend auto operator<=>(const Coeffs&, const Coeffs&) = default;

  /// Coefficientwise partial order: a <= b iff b - a has no negative entry.
  friend bool dominated_by(const Coeffs& a, const Coeffs& b) { return (b - a).nonnegative(); }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int i = 0; i < rank_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(c_[i] + 64);
    return h;
  }

 private:
  void check_rank(const Coeffs& o) const {
    detail::require(o.rank_ == rank_, "coefficient vectors of different rank");
  }

  int rank_ = 0;
  std::array<int, kMaxRank> c_{};
};

struct RootTag {};
struct CorootTag {};
struct WeightTag {};

/// Integer vector in simple-root coordinates.
using Root = Coeffs<RootTag>;
/// Integer vector in simple-coroot coordinates.
using Coroot = Coeffs<CorootTag>;
/// Integer vector in fundamental-weight coordinates.
using Weight = Coeffs<WeightTag>;

/// Height: the coordinate sum (equals the pairing with rho for coroots).
template <class Tag>
int height(const Coeffs<Tag>& v) {
  return v.sum();
}

/// Pairing of a weight with a coroot. Fundamental weights are dual to simple
/// coroots, so this is the plain dot product.
inline int pairing(const Weight& lambda, const Coroot& c) {
  detail::require(lambda.rank() == c.rank(), "pairing across different root systems");
  int s = 0;
  for (int i = 0; i < c.rank(); ++i) s += lambda[i] * c[i];
  return s;
}

/// "a1+a2-2a4" style rendering, for diagnostics and tables.
template <class Tag>
std::string to_string(const Coeffs<Tag>& v, const char* prefix = "a") {
  std::string out;
  for (int i = 0; i < v.rank(); ++i) {
    int k = v[i];
    if (k == 0) continue;
    if (k < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (k != 1 && k != -1) out += std::to_string(k < 0 ? -k : k);
    out += prefix + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace minlines

template <class Tag>
struct std::hash<minlines::Coeffs<Tag>> {
  std::size_t operator()(const minlines::Coeffs<Tag>& v) const noexcept { return v.hash(); }
};
