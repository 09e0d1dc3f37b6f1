#pragma once

// Cartan and root-system arithmetic for crystallographic types, Bourbaki
// numbering (see docs/bourbaki_numbering.md). Nodes are 1-based everywhere in
// the public interface; coefficient vectors are 0-based arrays.
//
// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee> (row = coroot).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minlines/errors.hpp"
#include "minlines/lattice.hpp"
#include "minlines/parabolic_set.hpp"

namespace minlines {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;

  std::string to_string() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }

  void validate() const {
    bool ok = false;
    switch (family) {
      case Family::A: ok = rank >= 1; break;
      case Family::B:
      case Family::C: ok = rank >= 2; break;
      case Family::D: ok = rank >= 3; break;
      case Family::E: ok = rank >= 6 && rank <= 8; break;
      case Family::F: ok = rank == 4; break;
      case Family::G: ok = rank == 2; break;
    }
    detail::require(ok, "invalid rank " + std::to_string(rank) + " for family " +
                            std::string(1, static_cast<char>(family)));
  }
};

/// A (possibly reducible) Cartan type: components laid out block-diagonally,
/// nodes numbered consecutively.
struct CartanType {
  std::vector<DynkinType> components;

  friend bool operator==(const CartanType&, const CartanType&) = default;

  int rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
  }
  bool irreducible() const { return components.size() == 1; }
  bool simply_laced() const {
    return std::all_of(components.begin(), components.end(),
                       [](const DynkinType& t) { return t.simply_laced(); });
  }
  std::string to_string() const {
    std::string out;
    for (const auto& c : components) {
      if (!out.empty()) out += "x";
      out += c.to_string();
    }
    return out;
  }
};

/// Parses "A4", "d5", "E7", or products such as "A2xA1" (case-insensitive).
inline CartanType parse_cartan_type(const std::string& text) {
  CartanType t;
  std::size_t pos = 0;
  auto fail = [&]() -> CartanType { throw PreconditionError("cannot parse Dynkin type '" + text + "'"); };
  while (pos < text.size()) {
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (f < 'A' || f > 'G') return fail();
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 3) return fail();
    DynkinType d{static_cast<Family>(f), std::stoi(text.substr(start, pos - start))};
    d.validate();
    t.components.push_back(d);
    if (pos < text.size()) {
      char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
      if (sep != 'x' && sep != '+') return fail();
      ++pos;
      if (pos == text.size()) return fail();
    }
  }
  if (t.components.empty()) return fail();
  detail::require(t.rank() <= kMaxRank, "total rank exceeds " + std::to_string(kMaxRank));
  return t;
}

using CartanMatrix = std::vector<std::vector<int>>;

/// Cartan matrix of an irreducible type in Bourbaki numbering.
inline CartanMatrix cartan_matrix(const DynkinType& t) {
  t.validate();
  const int n = t.rank;
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      bond(1, 2);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

inline CartanMatrix cartan_matrix(const CartanType& t) {
  const int n = t.rank();
  CartanMatrix a(n, std::vector<int>(n, 0));
  int off = 0;
  for (const auto& c : t.components) {
    auto block = cartan_matrix(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) a[off + i][off + j] = block[i][j];
    off += c.rank;
  }
  return a;
}

/// Order of the Weyl group of an irreducible type.
inline std::uint64_t weyl_group_order(const DynkinType& t) {
  auto fact = [](int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
  };
  switch (t.family) {
    case Family::A: return fact(t.rank + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << t.rank) * fact(t.rank);
    case Family::D: return (std::uint64_t{1} << (t.rank - 1)) * fact(t.rank);
    case Family::E:
      return t.rank == 6 ? 51840u : t.rank == 7 ? 2903040u : 696729600u;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

/// A connected component of a Dynkin subdiagram together with the Bourbaki
/// labelling of its nodes: bourbaki[p] is the original node carrying label p+1.
struct DiagramComponent {
  DynkinType type;
  std::vector<int> bourbaki;

  /// Bourbaki label (1-based) of an original node, or 0 if absent.
  int label_of(int node) const {
    auto it = std::find(bourbaki.begin(), bourbaki.end(), node);
    return it == bourbaki.end() ? 0 : static_cast<int>(it - bourbaki.begin()) + 1;
  }
};

/// Splits the subdiagram on `nodes` into connected components and identifies
/// each with its Bourbaki type and numbering. Components are returned ordered
/// by their smallest original node.
inline std::vector<DiagramComponent> identify_components(const CartanMatrix& a,
                                                         const ParabolicSet& nodes) {
  auto linked = [&](int u, int v) { return u != v && a[u - 1][v - 1] != 0; };
  auto bond_order = [&](int u, int v) { return a[u - 1][v - 1] * a[v - 1][u - 1]; };
  std::vector<DiagramComponent> out;
  ParabolicSet seen(nodes.rank());
  for (int start : nodes.nodes()) {
    if (seen.contains(start)) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : nodes.nodes())
        if (!seen.contains(v) && linked(u, v)) {
          seen.insert(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    const int k = static_cast<int>(comp.size());
    auto neighbours = [&](int u) {
      std::vector<int> nb;
      for (int v : comp)
        if (linked(u, v)) nb.push_back(v);
      return nb;
    };
    // Walks from `from` away from `prev` until the end of a chain.
    auto walk = [&](int prev, int from) {
      std::vector<int> arm{from};
      while (true) {
        std::vector<int> next;
        for (int v : neighbours(arm.back()))
          if (v != prev) next.push_back(v);
        if (next.empty()) break;
        detail::require(next.size() == 1, "Dynkin diagram is not a tree of the expected shape");
        prev = arm.back();
        arm.push_back(next[0]);
      }
      return arm;
    };

    DiagramComponent dc;
    int branch = 0;
    for (int u : comp) {
      auto deg = neighbours(u).size();
      detail::require(deg <= 3, "unsupported Dynkin diagram");
      if (deg == 3) {
        detail::require(branch == 0, "unsupported Dynkin diagram");
        branch = u;
      }
    }
    if (branch != 0) {
      std::vector<std::vector<int>> arms;
      for (int v : neighbours(branch)) {
        detail::require(bond_order(branch, v) == 1, "unsupported Dynkin diagram");
        arms.push_back(walk(branch, v));
      }
      std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
      });
      const auto l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
      if (l0 == 1 && l1 == 1) {
        // D_k: long arm carries labels 1..k-3, branch k-2, short arms k-1, k.
        if (l2 == 1) {
          // D4: put the smallest node on the "long" arm so D4 maps to itself.
          std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
          std::rotate(arms.begin(), arms.begin() + 1, arms.end());
        }
        dc.type = {Family::D, k};
        std::vector<int> lng = arms[2];
        std::reverse(lng.begin(), lng.end());
        dc.bourbaki = lng;
        dc.bourbaki.push_back(branch);
        int s1 = arms[0][0], s2 = arms[1][0];
        dc.bourbaki.push_back(std::min(s1, s2));
        dc.bourbaki.push_back(std::max(s1, s2));
      } else if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
        // E_k: 1-3-4-5-..., 2 hangs off 4. With arm lengths (1,2,2) either
        // two-chain may serve as the 3-1 side; prefer the one with the smallest node.
        std::vector<int> side = arms[1], tail = arms[2];
        if (l2 == 2 && *std::min_element(tail.begin(), tail.end()) < *std::min_element(side.begin(), side.end()))
          std::swap(side, tail);
        dc.type = {Family::E, k};
        dc.bourbaki = {side[1], arms[0][0], side[0], branch};
        for (int v : tail) dc.bourbaki.push_back(v);
      } else {
        throw PreconditionError("unsupported Dynkin diagram");
      }
    } else {
      // A path. Start from an end node.
      int end = comp[0];
      for (int u : comp)
        if (neighbours(u).size() <= 1) {
          end = u;
          break;
        }
      std::vector<int> path = walk(0, end);
      int multi_at = -1, order = 1;
      for (int p = 0; p + 1 < k; ++p) {
        int b = bond_order(path[p], path[p + 1]);
        if (b > 1) {
          detail::require(multi_at < 0, "unsupported Dynkin diagram");
          multi_at = p;
          order = b;
        }
      }
      if (order == 1) {
        if (path.front() > path.back()) std::reverse(path.begin(), path.end());
        dc.type = {Family::A, k};
      } else if (order == 3) {
        detail::require(k == 2, "unsupported Dynkin diagram");
        // alpha_1 short: <alpha_2, alpha_1^vee> = -3.
        if (a[path[0] - 1][path[1] - 1] != -3) std::swap(path[0], path[1]);
        dc.type = {Family::G, 2};
      } else if (order == 2) {
        if (k == 4 && (multi_at == 1)) {
          // F4: labels 1,2 long; row of label 3 has -2 against label 2.
          if (a[path[2] - 1][path[1] - 1] != -2) std::reverse(path.begin(), path.end());
          dc.type = {Family::F, 4};
        } else {
          detail::require(multi_at == 0 || multi_at == k - 2, "unsupported Dynkin diagram");
          if (multi_at == 0) std::reverse(path.begin(), path.end());
          if (k == 2 && a[path[1] - 1][path[0] - 1] != -2) std::reverse(path.begin(), path.end());
          // Double bond now sits between labels k-1 and k.
          bool last_short = a[path[k - 1] - 1][path[k - 2] - 1] == -2;
          dc.type = {last_short ? Family::B : Family::C, k};
        }
      } else {
        throw PreconditionError("unsupported Dynkin diagram");
      }
      dc.bourbaki = path;
    }
    out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end(), [](const DiagramComponent& x, const DiagramComponent& y) {
    return *std::min_element(x.bourbaki.begin(), x.bourbaki.end()) <
           *std::min_element(y.bourbaki.begin(), y.bourbaki.end());
  });
  return out;
}

/// "A1xA2" label of a subdiagram; "none" for the empty set.
inline std::string type_label(const std::vector<DiagramComponent>& comps) {
  if (comps.empty()) return "none";
  std::string out;
  for (const auto& c : comps) {
    if (!out.empty()) out += "x";
    out += c.type.to_string();
  }
  return out;
}

/// Finite root system with its positive roots, generated by closure under the
/// simple reflections starting from the simple roots. Immutable once built.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const CartanType& type) {
    return std::shared_ptr<const RootSystem>(new RootSystem(type));
  }
  static std::shared_ptr<const RootSystem> build(const std::string& type) {
    return build(parse_cartan_type(type));
  }

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  bool simply_laced() const { return type_.simply_laced(); }
  bool irreducible() const { return type_.irreducible(); }
  /// <alpha_j, alpha_i^vee>, 1-based nodes.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const CartanMatrix& cartan_matrix() const { return cartan_; }

  std::span<const Root> positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }

  Root simple_root(int node) const {
    check_node(node);
    return Root::unit(rank_, node - 1);
  }
  Coroot simple_coroot(int node) const {
    check_node(node);
    return Coroot::unit(rank_, node - 1);
  }
  Weight fundamental_weight(int node) const {
    check_node(node);
    return Weight::unit(rank_, node - 1);
  }
  /// rho = sum of fundamental weights.
  Weight rho() const {
    Weight r(rank_);
    for (int i = 0; i < rank_; ++i) r[i] = 1;
    return r;
  }

  bool is_root(const Root& b) const {
    if (b.rank() != rank_) return false;
    return index_.count(b.positive() ? b : -b) > 0;
  }
  bool is_simple_root(const Root& b) const { return b.positive() && b.sum() == 1 && b.rank() == rank_; }

  /// Index of a positive root in positive_roots(), or -1.
  int index_of(const Root& b) const {
    auto it = index_.find(b);
    return it == index_.end() ? -1 : it->second;
  }

  /// beta^vee for any root beta (of either sign).
  Coroot coroot(const Root& b) const {
    detail::require(b.rank() == rank_, "root from a different root system");
    if (b.negative()) return -coroot(-b);
    int idx = index_of(b);
    detail::require(idx >= 0, "not a root: " + to_string(b));
    return coroots_[idx];
  }
  /// Inverse of coroot(): the root whose coroot is c.
  Root root_of_coroot(const Coroot& c) const {
    detail::require(c.rank() == rank_, "coroot from a different root system");
    if (c.negative()) return -root_of_coroot(-c);
    auto it = coroot_index_.find(c);
    detail::require(it != coroot_index_.end(), "not a coroot: " + to_string(c));
    return positive_[it->second];
  }

  /// <b, c>; bilinear, <alpha_i, alpha_j^vee> = cartan(j, i).
  int pairing(const Root& b, const Coroot& c) const {
    detail::require(b.rank() == rank_ && c.rank() == rank_, "pairing across different root systems");
    int s = 0;
    for (int k = 0; k < rank_; ++k) {
      if (c[k] == 0) continue;
      int inner = 0;
      for (int j = 0; j < rank_; ++j) inner += b[j] * cartan_[k][j];
      s += c[k] * inner;
    }
    return s;
  }
  /// <b, alpha_i^vee>.
  int pairing_simple(const Root& b, int node) const {
    int s = 0;
    const auto& row = cartan_[node - 1];
    for (int j = 0; j < rank_; ++j) s += b[j] * row[j];
    return s;
  }

  /// Weight coordinates of a root lattice element: <b, alpha_i^vee>.
  Weight to_weight(const Root& b) const {
    Weight w(rank_);
    for (int i = 1; i <= rank_; ++i) w[i - 1] = pairing_simple(b, i);
    return w;
  }

  /// s_i(b) = b - <b, alpha_i^vee> alpha_i.
  Root reflect(int node, Root b) const {
    b[node - 1] -= pairing_simple(b, node);
    return b;
  }
  /// s_i(c) = c - <alpha_i, c> alpha_i^vee.
  Coroot reflect(int node, Coroot c) const {
    int p = 0;
    for (int k = 0; k < rank_; ++k) p += c[k] * cartan_[k][node - 1];
    c[node - 1] -= p;
    return c;
  }

  /// Positive roots supported in I (the roots of the Levi L_I).
  std::vector<Root> positive_roots_in(const ParabolicSet& I) const {
    std::vector<Root> out;
    for (const auto& b : positive_)
      if (support_of(b).subset_of(I)) out.push_back(b);
    return out;
  }

  /// 2 rho = sum of positive roots, in root coordinates.
  Root two_rho() const {
    Root s(rank_);
    for (const auto& b : positive_) s += b;
    return s;
  }

  /// The highest root (dominance maximum of R+). Irreducible systems only.
  Root highest_root() const {
    detail::require(irreducible(), "highest root requested for a reducible root system");
    Root best = positive_.back();  // sorted by height: the last root is the tallest
    for (const auto& b : positive_) detail::ensure(dominated_by(b, best), "highest root is not a dominance maximum");
    return best;
  }

  /// <lambda, beta^vee> <= 1 for all positive beta (and = 1 for some).
  bool is_minuscule_weight(const Weight& lambda) const {
    detail::require(lambda.rank() == rank_, "weight from a different root system");
    int ones = 0, others = 0;
    for (int i = 0; i < rank_; ++i) {
      if (lambda[i] == 1) ++ones;
      else if (lambda[i] != 0) ++others;
    }
    detail::require(ones == 1 && others == 0, "is_minuscule_weight expects a fundamental weight");
    int mx = 0;
    for (const auto& c : coroots_) mx = std::max(mx, minlines::pairing(lambda, c));
    return mx == 1;
  }
  bool is_minuscule_node(int node) const { return is_minuscule_weight(fundamental_weight(node)); }

  /// alpha^perp = {beta in S : <beta, alpha^vee> = 0}.
  ParabolicSet perpendicular(int node) const {
    ParabolicSet s(rank_);
    for (int j = 1; j <= rank_; ++j)
      if (cartan(node, j) == 0) s.insert(j);
    return s;
  }

  /// Connected components of the subdiagram on I, with Bourbaki labels.
  std::vector<DiagramComponent> components(const ParabolicSet& I) const {
    return identify_components(cartan_, I);
  }
  ParabolicSet all_nodes() const { return ParabolicSet::all(rank_); }

  void check_node(int node) const {
    detail::require(node >= 1 && node <= rank_, "simple root index " + std::to_string(node) +
                                                    " out of range 1.." + std::to_string(rank_));
  }

 private:
  explicit RootSystem(const CartanType& type)
      : type_(type), rank_(type.rank()), cartan_(minlines::cartan_matrix(type)) {
    std::vector<std::pair<Root, Coroot>> found;
    std::queue<std::pair<Root, Coroot>> todo;
    std::unordered_map<Root, int> seen;
    for (int i = 1; i <= rank_; ++i) {
      auto p = std::make_pair(Root::unit(rank_, i - 1), Coroot::unit(rank_, i - 1));
      seen.emplace(p.first, 0);
      todo.push(p);
    }
    while (!todo.empty()) {
      auto [b, c] = todo.front();
      todo.pop();
      found.emplace_back(b, c);
      for (int i = 1; i <= rank_; ++i) {
        Root nb = reflect(i, b);
        if (!nb.positive() || seen.count(nb)) continue;
        seen.emplace(nb, 0);
        todo.emplace(nb, reflect(i, c));
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
      int hx = x.first.sum(), hy = y.first.sum();
      if (hx != hy) return hx < hy;
      return x.first > y.first;  // simple roots come out in node order
    });
    for (auto& [b, c] : found) {
      index_.emplace(b, static_cast<int>(positive_.size()));
      coroot_index_.emplace(c, static_cast<int>(positive_.size()));
      positive_.push_back(b);
      coroots_.push_back(c);
    }
  }

  CartanType type_;
  int rank_;
  CartanMatrix cartan_;
  std::vector<Root> positive_;
  std::vector<Coroot> coroots_;
  std::unordered_map<Root, int> index_;
  std::unordered_map<Coroot, int> coroot_index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Free-function forms of the root-system operations.
inline RootSystemPtr build_root_system(const std::string& type) { return RootSystem::build(type); }
inline int pairing(const RootSystem& R, const Root& b, const Coroot& c) { return R.pairing(b, c); }
inline Root highest_root(const RootSystem& R) { return R.highest_root(); }
inline bool is_minuscule_weight(const Weight& w, const RootSystem& R) { return R.is_minuscule_weight(w); }

}  // namespace minlines
