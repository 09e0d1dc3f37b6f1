#pragma once

// Bott-Samelson data of a reduced word: the beta sequence, intersection
// numbers with the Picard basis L_1..L_l, anticanonical degrees of the
// T-stable curves C_j through the base point, and which C_j are lines or
// minimal. Everything is a word-index formula; no variety is built.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minlines/errors.hpp"
#include "minlines/lattice.hpp"
#include "minlines/rootsys.hpp"
#include "minlines/schubert.hpp"
#include "minlines/weyl.hpp"

namespace minlines {

class BSVariety {
 public:
  static BSVariety make(const FlagSpace& space, Word word) {
    const auto& sys = space.system_ptr();
    detail::require(sys->simply_laced(), "Bott-Samelson computations need a simply-laced root system");
    auto [w, reduced] = evaluate_word(sys, word);
    detail::require(reduced, "word '" + format_word(word) + "' is not reduced");
    detail::require(is_min_coset_rep(w, space.levi()),
                    "product of '" + format_word(word) + "' is not in W^I for I = " + space.levi().to_string());
    return BSVariety(space, std::move(word), std::move(w));
  }

  const FlagSpace& space() const { return space_; }
  const RootSystem& system() const { return space_.system(); }
  const Word& word() const { return word_; }
  const WeylElement& product() const { return w_; }
  int length() const { return static_cast<int>(word_.size()); }
  int letter(int j) const { return word_[j - 1]; }

  void check_index(int j) const {
    detail::require(j >= 1 && j <= length(),
                    "curve index " + std::to_string(j) + " out of range 1.." + std::to_string(length()));
  }

  /// s_{i_l} ... s_{i_{j+1}} applied to v (letters after j, innermost first).
  template <class Tag>
  Coeffs<Tag> suffix_apply(int j, Coeffs<Tag> v) const {
    return suffix_apply_upto(j, length(), v);
  }
  /// s_{i_k} ... s_{i_{j+1}} applied to v.
  template <class Tag>
  Coeffs<Tag> suffix_apply_upto(int j, int k, Coeffs<Tag> v) const {
    for (int m = j + 1; m <= k; ++m) v = system().reflect(letter(m), v);
    return v;
  }

 private:
  BSVariety(FlagSpace space, Word word, WeylElement w)
      : space_(std::move(space)), word_(std::move(word)), w_(std::move(w)) {}

  FlagSpace space_;
  Word word_;
  WeylElement w_;
};

/// beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}).
inline std::vector<Root> beta_sequence(const BSVariety& X) {
  std::vector<Root> out;
  WeylElement prefix = WeylElement::identity(X.space().system_ptr());
  for (int k : X.word()) {
    out.push_back(prefix.act(X.system().simple_root(k)));
    prefix = prefix.right_multiply(k);
  }
  return out;
}

/// L_k . C_j: zero for j > k, else the alpha_{i_k}^vee coefficient of
/// s_{i_k} ... s_{i_{j+1}}(alpha_{i_j}^vee).
inline int pic_degree(const BSVariety& X, int k, int j) {
  X.check_index(k);
  X.check_index(j);
  if (j > k) return 0;
  Coroot c = X.suffix_apply_upto(j, k, X.system().simple_coroot(X.letter(j)));
  return c[X.letter(k) - 1];
}

/// -K . C_j = ht(s_{i_l} ... s_{i_{j+1}}(alpha_{i_j}^vee)) + 1.
inline int anticanonical_degree_bs(const BSVariety& X, int j) {
  X.check_index(j);
  return height(X.suffix_apply(j, X.system().simple_coroot(X.letter(j)))) + 1;
}

/// C_j is a line iff s_{i_j} commutes with every later letter.
inline bool is_line_bs(const BSVariety& X, int j) {
  X.check_index(j);
  bool commutes = true;
  for (int m = j + 1; m <= X.length(); ++m)
    if (!letters_commute(X.system(), X.letter(j), X.letter(m))) commutes = false;
  bool zero_degrees = true;
  for (int k = j + 1; k <= X.length(); ++k)
    if (pic_degree(X, k, j) != 0) zero_degrees = false;
  detail::ensure(commutes == zero_degrees, "line criterion disagrees with the Picard degrees");
  return commutes;
}

/// The suffix root s_{i_l} ... s_{i_{j+1}}(alpha_{i_j}).
inline Root suffix_root(const BSVariety& X, int j) {
  X.check_index(j);
  return X.suffix_apply(j, X.system().simple_root(X.letter(j)));
}

/// Whether w = s_{i_1} .. (s_{i_j} omitted) .. s_{i_l} s_k for some simple k;
/// returns that k. Evaluated as a group identity, independently of roots.
inline std::optional<int> exchange_target(const BSVariety& X, int j) {
  X.check_index(j);
  Word hat = X.word();
  hat.erase(hat.begin() + (j - 1));
  const WeylElement omitted = WeylElement::from_word(X.space().system_ptr(), hat);
  for (int k = 1; k <= X.system().rank(); ++k)
    if (omitted.right_multiply(k) == X.product()) return k;
  return std::nullopt;
}

struct MinimalCurve {
  int j = 0;
  int target = 0;  // the simple root alpha_k the suffix root equals
};

/// Indices j whose suffix root is simple: these C_j span the minimal families.
inline std::vector<MinimalCurve> minimal_curves_bs(const BSVariety& X) {
  std::vector<MinimalCurve> out;
  ParabolicSet targets(X.system().rank());
  for (int j = 1; j <= X.length(); ++j) {
    Root r = suffix_root(X, j);
    if (!X.system().is_simple_root(r)) continue;
    const int k = r.support().front();
    out.push_back({j, k});
    targets.insert(k);
    detail::ensure(exchange_target(X, j) == k, "exchange identity fails for a minimal curve");
  }
  ParabolicSet descents(X.system().rank());
  for (int i = 1; i <= X.system().rank(); ++i)
    if (X.product().has_right_descent(i)) descents.insert(i);
  detail::ensure(targets == descents, "minimal-curve targets differ from the right descents of w");
  return out;
}

struct BSCurveRow {
  int j = 0;
  Root beta;
  int antican = 0;
  bool is_line = false;
  bool minimal = false;
  std::optional<int> target;
};

inline std::vector<BSCurveRow> bs_report(const BSVariety& X) {
  const auto betas = beta_sequence(X);
  const auto mins = minimal_curves_bs(X);
  std::vector<BSCurveRow> out;
  for (int j = 1; j <= X.length(); ++j) {
    BSCurveRow row{j, betas[j - 1], anticanonical_degree_bs(X, j), is_line_bs(X, j), false, std::nullopt};
    for (const auto& m : mins)
      if (m.j == j) {
        row.minimal = true;
        row.target = m.target;
      }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace minlines
