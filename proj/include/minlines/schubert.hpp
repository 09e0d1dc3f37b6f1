#pragma once

// T-stable curves, degrees, lines through a point and smoothness for Schubert
// varieties X(w) in G/P_I, all computed from root and Weyl group data.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minlines/errors.hpp"
#include "minlines/lattice.hpp"
#include "minlines/parabolic_set.hpp"
#include "minlines/rootsys.hpp"
#include "minlines/tables.hpp"
#include "minlines/weyl.hpp"

namespace minlines {

/// G/P_I.
class FlagSpace {
 public:
  FlagSpace(RootSystemPtr sys, ParabolicSet levi) : sys_(std::move(sys)), levi_(std::move(levi)) {
    detail::require(levi_.rank() == sys_->rank(), "Levi set rank does not match the root system");
  }
  /// G/P^node, the maximal parabolic with Levi set S \ {node}.
  static FlagSpace maximal(RootSystemPtr sys, int node) {
    sys->check_node(node);
    int r = sys->rank();
    return FlagSpace(std::move(sys), ParabolicSet::maximal(r, node));
  }

  const RootSystem& system() const { return *sys_; }
  const RootSystemPtr& system_ptr() const { return sys_; }
  const ParabolicSet& levi() const { return levi_; }
  /// S \ I.
  ParabolicSet descent_nodes() const { return levi_.complement(); }

  bool is_maximal() const { return descent_nodes().size() == 1; }
  /// The node alpha of P = P^alpha; requires a maximal parabolic.
  int node() const {
    detail::require(is_maximal(), "flag space " + levi_.to_string() + " is not G/P for a maximal parabolic");
    return descent_nodes().nodes().front();
  }
  bool is_minuscule() const {
    return sys_->irreducible() && is_maximal() && sys_->is_minuscule_node(node());
  }
  void require_minuscule() const {
    detail::require(is_minuscule(), "G/P_I with I = " + levi_.to_string() + " in " + sys_->type().to_string() +
                                        " is not a minuscule homogeneous space");
  }

  /// varpi_I = sum of the fundamental weights outside I.
  Weight ample_weight() const {
    Weight w(sys_->rank());
    for (int a : descent_nodes().nodes()) w[a - 1] = 1;
    return w;
  }
  /// 2 rho_I = sum of R+_I, as a weight.
  Weight two_rho_levi() const {
    Root s(sys_->rank());
    for (const auto& b : sys_->positive_roots_in(levi_)) s += b;
    return sys_->to_weight(s);
  }

 private:
  RootSystemPtr sys_;
  ParabolicSet levi_;
};

/// X(w) in G/P_I, with w in W^I.
struct SchubertVariety {
  FlagSpace space;
  WeylElement w;

  static SchubertVariety make(FlagSpace space, WeylElement w) {
    detail::require(w.system().type() == space.system().type(), "element and flag space use different root systems");
    detail::require(is_min_coset_rep(w, space.levi()),
                    "w = " + format_word(w.reduced_word()) + " is not a minimal coset representative for I = " +
                        space.levi().to_string());
    return SchubertVariety{std::move(space), std::move(w)};
  }
  int dimension() const { return w.length(); }
};

/// C_{w,beta} = closure of G_beta wx. For curves inside X(w) beta is negative;
/// for curves in G/P through wx it is w(gamma) with gamma in R+ \ R+_I and may
/// have either sign.
struct TStableCurve {
  WeylElement w;
  Root beta;

  /// w^{-1}(beta^vee).
  Coroot pulled_back_coroot() const { return w.act_inverse(w.system().coroot(beta)); }
};

inline std::vector<TStableCurve> t_curves_through_flag(const FlagSpace& space, const WeylElement& w) {
  detail::require(is_min_coset_rep(w, space.levi()), "w is not a minimal coset representative");
  std::vector<TStableCurve> out;
  for (const auto& g : space.system().positive_roots())
    if (!support_of(g).subset_of(space.levi())) out.push_back({w, w.act(g)});
  return out;
}

/// The l(w) curves through wx contained in X(w): beta in w(R+) cap R-, listed
/// in the order of -beta among the positive roots.
inline std::vector<TStableCurve> t_curves_through_schubert(const SchubertVariety& X) {
  std::vector<TStableCurve> out;
  for (const auto& b : X.space.system().positive_roots())
    if (X.w.act_inverse(-b).positive()) out.push_back({X.w, -b});
  detail::ensure(static_cast<int>(out.size()) == X.w.length(), "curve count differs from the length of w");
  return out;
}

/// L(lambda) . C_{w,beta} = <lambda, w^{-1}(beta^vee)>.
inline int curve_degree(const FlagSpace& space, const TStableCurve& C, const Weight& lambda) {
  for (int i = 1; i <= lambda.rank(); ++i)
    detail::require(lambda[i - 1] == 0 || !space.levi().contains(i),
                    "weight is not a character of P: its support meets I = " + space.levi().to_string());
  return pairing(lambda, C.pulled_back_coroot());
}

/// Degrees against each fundamental weight outside I, keyed by node.
inline std::vector<std::pair<int, int>> curve_degrees(const FlagSpace& space, const TStableCurve& C) {
  std::vector<std::pair<int, int>> out;
  for (int a : space.descent_nodes().nodes())
    out.emplace_back(a, curve_degree(space, C, space.system().fundamental_weight(a)));
  return out;
}

/// -K_{G/P} . C = ht(w^{-1} beta^vee) + ht(w_{0,I} w^{-1} beta^vee), checked
/// against the pairing with 2(rho - rho_I).
inline int anticanonical_degree(const FlagSpace& space, const TStableCurve& C) {
  const Coroot c = C.pulled_back_coroot();
  const WeylElement w0I = longest_element(space.system_ptr(), space.levi());
  const int value = height(c) + height(w0I.act(c));
  Weight two_rho(space.system().rank());
  for (int i = 0; i < two_rho.rank(); ++i) two_rho[i] = 2;
  const int check = pairing(two_rho - space.two_rho_levi(), c);
  detail::ensure(value == check, "anticanonical degree formulas disagree");
  return value;
}

/// X(w) is covered by G-translates of the Schubert line X(s_alpha) iff w(alpha) < 0.
inline bool covered_by_schubert_line(const SchubertVariety& X, int alpha) {
  X.space.system().check_node(alpha);
  detail::require(!X.space.levi().contains(alpha), "alpha must lie outside I");
  return X.w.has_right_descent(alpha);
}

/// Variety of lines through the base point of G_J / P^alpha, where G_J is the
/// simple factor of the subsystem on J containing alpha.
struct LinesThroughPoint {
  int node = 0;
  ParabolicSet ambient;          // the simple factor of J containing alpha
  int dimension = 0;             // #(R+_I \ R+_{I cap alpha-perp})
  int height_dimension = 0;      // ht(w_{0,I}(alpha^vee)) - 1
  ParabolicSet levi;             // I = ambient \ {alpha}
  std::string levi_type;
  ParabolicSet stabilizer_levi;  // I cap alpha-perp
  std::string stabilizer_type;
  std::optional<MinusculeSpaceLabels> labels;
};

/// Whether alpha_node is a long root within its simple factor of J.
inline bool is_long_simple_root(const RootSystem& R, const ParabolicSet& J, int node) {
  Root top(R.rank());
  for (const auto& b : R.positive_roots_in(J))
    if (b[node - 1] > 0 && height(b) > height(top)) top = b;
  // theta^vee has the theta-coefficient at a node exactly when that node is as long as theta.
  return R.coroot(top)[node - 1] == top[node - 1];
}

inline LinesThroughPoint lines_through_point(const RootSystemPtr& sys, const ParabolicSet& J, int node) {
  sys->check_node(node);
  detail::require(J.contains(node), "node " + std::to_string(node) + " is not in " + J.to_string());
  const auto comps = sys->components(J);
  const DiagramComponent* comp = nullptr;
  for (const auto& c : comps)
    if (c.label_of(node) != 0) comp = &c;
  LinesThroughPoint r;
  r.node = node;
  r.ambient = ParabolicSet(sys->rank(), comp->bourbaki);
  detail::require(is_long_simple_root(*sys, r.ambient, node),
                  "alpha_" + std::to_string(node) + " is a short root; lines through a point are not homogeneous");
  r.levi = r.ambient;
  r.levi.erase(node);
  r.stabilizer_levi = r.levi & sys->perpendicular(node);
  r.levi_type = type_label(sys->components(r.levi));
  r.stabilizer_type = type_label(sys->components(r.stabilizer_levi));
  r.dimension = static_cast<int>(sys->positive_roots_in(r.levi).size() -
                                 sys->positive_roots_in(r.stabilizer_levi).size());
  const WeylElement w0I = longest_element(sys, r.levi);
  r.height_dimension = height(w0I.act(sys->simple_coroot(node))) - 1;
  detail::ensure(r.dimension == r.height_dimension, "line-space dimension formulas disagree");
  r.labels = minuscule_space_labels(comp->type, comp->label_of(node));
  if (r.labels) {
    detail::ensure(r.labels->lines_dimension == r.dimension, "line-space dimension disagrees with the table");
    detail::ensure(r.labels->levi == r.levi_type, "Levi type disagrees with the table");
  }
  return r;
}

/// Lines through the base point of G/P^alpha for simple G.
inline LinesThroughPoint lines_through_point_space(const FlagSpace& space) {
  detail::require(space.system().irreducible(), "lines through a point need a simple group");
  return lines_through_point(space.system_ptr(), space.system().all_nodes(), space.node());
}

struct LineFamilyReport {
  WeylElement v;   // minimal in v W_{I cap alpha-perp}
  Root root;       // v(alpha)
  int dimension = 0;
};

/// The W_I-orbit of alpha with the minimal representative carrying alpha to
/// each orbit root, found by raising roots one simple reflection at a time.
inline std::vector<std::pair<Root, WeylElement>> levi_orbit(const RootSystemPtr& sys, const ParabolicSet& I,
                                                            int alpha) {
  std::vector<std::pair<Root, WeylElement>> out{{sys->simple_root(alpha), WeylElement::identity(sys)}};
  std::unordered_map<Root, int> seen{{out[0].first, 0}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : I.nodes()) {
      if (sys->pairing_simple(out[k].first, i) >= 0) continue;
      Root up = sys->reflect(i, out[k].first);
      if (seen.count(up)) continue;
      seen.emplace(up, static_cast<int>(out.size()));
      WeylElement v = out[k].second.left_multiply(i);
      detail::ensure(v.act(sys->simple_root(alpha)) == up, "orbit representative does not carry alpha to its root");
      out.emplace_back(up, std::move(v));
    }
  }
  return out;
}

/// Families of lines through wx on X(w) in a minuscule G/P^alpha: the
/// Bruhat-maximal v among the minimal representatives with w v(alpha) < 0.
inline std::vector<LineFamilyReport> line_families_on_schubert(const SchubertVariety& X) {
  X.space.require_minuscule();
  const int alpha = X.space.node();
  std::vector<std::pair<Root, WeylElement>> D;
  for (auto& [root, v] : levi_orbit(X.space.system_ptr(), X.space.levi(), alpha))
    if (X.w.act(root).negative()) D.emplace_back(root, v);
  std::vector<LineFamilyReport> out;
  for (const auto& [root, v] : D) {
    bool maximal = true;
    for (const auto& other : D)
      if (!(other.second == v) && bruhat_leq(v, other.second)) maximal = false;
    if (maximal) out.push_back({v, root, v.length()});
  }
  std::sort(out.begin(), out.end(), [](const LineFamilyReport& a, const LineFamilyReport& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.v.reduced_word() < b.v.reduced_word();
  });
  return out;
}

/// X(w) is smooth iff Supp(w) is contained in I_w, for w minuscule relative to
/// its support (X(w) is then a single orbit of P_w cap G_w).
inline bool is_smooth_element(const WeylElement& w) {
  if (w.is_identity()) return true;
  detail::require(is_minuscule_in_support(w), "smoothness test needs a minuscule element");
  return support(w).subset_of(parabolic_invariants(w).lower);
}

inline bool is_smooth_minuscule(const SchubertVariety& X) {
  X.space.require_minuscule();
  return is_smooth_element(X.w);
}

}  // namespace minlines
