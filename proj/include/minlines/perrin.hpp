#pragma once

// Quivers of minuscule reduced words, decompositions into blocks by peak
// orderings, and checks of the block-level statements about them: descents,
// supports, root inequalities, length additivity and stabilizers.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minlines/errors.hpp"
#include "minlines/lattice.hpp"
#include "minlines/parabolic_set.hpp"
#include "minlines/rootsys.hpp"
#include "minlines/schubert.hpp"
#include "minlines/weyl.hpp"

namespace minlines {

/// Letters 1..r of a word, colored by their simple roots, with i below j when
/// a chain of non-orthogonal colors leads from i forward to j.
class Quiver {
 public:
  Quiver(const RootSystem& R, Word word) : word_(std::move(word)) {
    const int r = size();
    below_.assign(r, std::vector<char>(r, 0));
    for (int j = 0; j < r; ++j) {
      below_[j][j] = 1;
      for (int k = 0; k < j; ++k) {
        if (R.cartan(word_[k], word_[j]) == 0) continue;
        for (int i = 0; i <= k; ++i)
          if (below_[i][k]) below_[i][j] = 1;
      }
    }
    for (int j = 0; j < r; ++j) {
      bool minimal = true;
      for (int i = 0; i < j; ++i)
        if (below_[i][j]) minimal = false;
      if (minimal) peaks_.push_back(j + 1);
    }
  }

  const Word& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  /// Simple root carried by letter j (1-based).
  int color(int j) const { return word_[j - 1]; }
  /// i precedes-or-equals j in the quiver order.
  bool precedes(int i, int j) const { return below_[i - 1][j - 1] != 0; }
  /// Minimal letters, in word order.
  const std::vector<int>& peaks() const { return peaks_; }
  std::vector<int> peak_colors() const {
    std::vector<int> out;
    for (int p : peaks_) out.push_back(color(p));
    return out;
  }

 private:
  Word word_;
  std::vector<std::vector<char>> below_;
  std::vector<int> peaks_;
};

/// Quiver of a reduced word whose product is minuscule (relative to its
/// support); peak colors are checked against the left descents.
inline Quiver build_quiver(const RootSystemPtr& sys, const Word& word) {
  detail::require(sys->simply_laced(), "quivers need a simply-laced root system");
  auto [w, reduced] = evaluate_word(sys, word);
  detail::require(reduced, "word '" + format_word(word) + "' is not reduced");
  detail::require(w.is_identity() || is_minuscule_in_support(w),
                  "product of '" + format_word(word) + "' is not a minuscule element");
  Quiver q(*sys, word);
  ParabolicSet colors(sys->rank(), q.peak_colors());
  detail::ensure(colors == left_descents(w), "peak colors differ from the left descents of w");
  detail::ensure(colors.size() == static_cast<int>(q.peaks().size()), "two peaks share a color");
  return q;
}

/// Peak colors in word order of the peaks.
inline std::vector<int> standard_peak_order(const Quiver& q) { return q.peak_colors(); }

/// Blocks (w_1, ..., w_m) with w = w_1 ... w_m and additive lengths.
struct GeneralizedDecomposition {
  RootSystemPtr sys;
  Word word;                          // the input word
  std::vector<Word> block_words;
  std::vector<WeylElement> blocks;
  std::vector<int> boundaries;        // cumulative letter offsets 0 = l_1 < ... < l_{m+1} = r
  std::vector<int> letter_block;      // block (1-based) of each input letter
  std::vector<int> peak_order;        // peak colors, for construction1 output
  bool construction1 = false;

  int size() const { return static_cast<int>(blocks.size()); }
  WeylElement product() const { return WeylElement::from_word(sys, refined_word()); }
  /// Concatenation of the block words.
  Word refined_word() const {
    Word out;
    for (const auto& b : block_words) out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  /// w_i ... w_m.
  WeylElement tail(int i) const {
    WeylElement t = WeylElement::identity(sys);
    for (int k = i; k <= size(); ++k)
      for (int a : block_words[k - 1]) t = t.right_multiply(a);
    return t;
  }
};

namespace detail {
inline void finish_decomposition(GeneralizedDecomposition& d) {
  d.boundaries = {0};
  for (const auto& b : d.block_words) {
    auto [e, reduced] = evaluate_word(d.sys, b);
    require(reduced, "block '" + format_word(b) + "' is not reduced");
    require(!b.empty(), "empty block");
    d.blocks.push_back(std::move(e));
    d.boundaries.push_back(d.boundaries.back() + static_cast<int>(b.size()));
  }
}
}  // namespace detail

/// A decomposition given block by block (no provenance).
inline GeneralizedDecomposition make_decomposition(const RootSystemPtr& sys, const std::vector<Word>& blocks) {
  detail::require(sys->simply_laced(), "generalized decompositions need a simply-laced root system");
  GeneralizedDecomposition d;
  d.sys = sys;
  d.block_words = blocks;
  detail::finish_decomposition(d);
  d.word = d.refined_word();
  for (int i = 1; i <= d.size(); ++i)
    for (std::size_t k = 0; k < blocks[i - 1].size(); ++k) d.letter_block.push_back(i);
  detail::require(evaluate_word(sys, d.word).reduced, "block lengths are not additive");
  return d;
}

/// For each peak color in turn, split off the remaining letters
/// lying above that peak and above no other remaining peak.
inline GeneralizedDecomposition construction1(const RootSystemPtr& sys, const Word& word,
                                              const std::vector<int>& peak_order) {
  const Quiver q = build_quiver(sys, word);
  const auto colors = q.peak_colors();
  {
    auto a = colors, b = peak_order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    detail::require(a == b, "peak order must list each peak color " + ParabolicSet(sys->rank(), colors).to_string() +
                                " exactly once");
  }
  GeneralizedDecomposition d;
  d.sys = sys;
  d.word = word;
  d.peak_order = peak_order;
  d.construction1 = true;
  d.letter_block.assign(word.size(), 0);

  std::vector<int> remaining(word.size());  // input positions, 1-based
  for (std::size_t k = 0; k < word.size(); ++k) remaining[k] = static_cast<int>(k) + 1;
  std::vector<int> pending = peak_order;
  for (std::size_t step = 0; step < peak_order.size(); ++step) {
    Word sub;
    for (int p : remaining) sub.push_back(word[p - 1]);
    const Quiver rq(*sys, sub);
    auto rc = rq.peak_colors();
    auto pc = pending;
    std::sort(rc.begin(), rc.end());
    std::sort(pc.begin(), pc.end());
    detail::ensure(rc == pc, "peaks changed while splitting off blocks");
    const int color = peak_order[step];
    int peak = 0;
    for (int p : rq.peaks())
      if (rq.color(p) == color) peak = p;
    Word block;
    std::vector<int> rest;
    for (int j = 1; j <= rq.size(); ++j) {
      bool mine = rq.precedes(peak, j);
      for (int p : rq.peaks())
        if (p != peak && rq.precedes(p, j)) mine = false;
      if (mine) {
        block.push_back(rq.color(j));
        d.letter_block[remaining[j - 1] - 1] = static_cast<int>(step) + 1;
      } else {
        rest.push_back(remaining[j - 1]);
      }
    }
    d.block_words.push_back(std::move(block));
    remaining = std::move(rest);
    pending.erase(std::find(pending.begin(), pending.end(), color));
  }
  detail::ensure(remaining.empty(), "letters left over after the last peak");
  detail::finish_decomposition(d);
  const WeylElement w = WeylElement::from_word(sys, word);
  detail::ensure(d.boundaries.back() == w.length(), "block lengths are not additive");
  detail::ensure(d.product() == w, "blocks do not multiply to w");
  return d;
}

struct GoodnessRow {
  int block = 0;
  ParabolicSet left_set;     // I^{w_i} cap Supp(w_i)
  ParabolicSet tail_lower;   // I_{w_{i+1} ... w_m}
  ParabolicSet right_set;    // w_i^perp cup Supp(w_i)
  bool left = false;         // left_set within tail_lower
  bool right = false;        // tail_lower within right_set
};

struct GoodnessReport {
  std::vector<GoodnessRow> rows;
  bool construction1 = false;
  bool good() const {
    return std::all_of(rows.begin(), rows.end(), [](const GoodnessRow& r) { return r.left && r.right; });
  }
};

/// Both inclusions of the goodness condition, reported separately per block.
inline GoodnessReport goodness_check(const GeneralizedDecomposition& d) {
  GoodnessReport rep;
  rep.construction1 = d.construction1;
  for (int i = 1; i < d.size(); ++i) {
    const WeylElement& wi = d.blocks[i - 1];
    const auto inv = parabolic_invariants(wi);
    const ParabolicSet supp = support(wi);
    GoodnessRow row;
    row.block = i;
    row.left_set = inv.upper & supp;
    row.tail_lower = parabolic_invariants(d.tail(i + 1)).lower;
    row.right_set = inv.perp | supp;
    row.left = row.left_set.subset_of(row.tail_lower);
    row.right = row.tail_lower.subset_of(row.right_set);
    rep.rows.push_back(row);
  }
  return rep;
}

/// gamma_i = v_i(beta_1) with v_i = s_{beta_i} ... s_{beta_1}, beta_j the color of letter j.
inline std::vector<Root> gamma_sequence(const RootSystemPtr& sys, const Word& word) {
  require_reduced(sys, word);
  std::vector<Root> out;
  if (word.empty()) return out;
  Root g = sys->simple_root(word[0]);
  for (int k : word) {
    g = sys->reflect(k, g);
    out.push_back(g);
  }
  const WeylElement w = WeylElement::from_word(sys, word);
  detail::ensure(out.back() == w.act_inverse(sys->simple_root(word[0])), "gamma_r differs from w^{-1}(beta_1)");
  return out;
}

/// A shortest v with v(gamma) = alpha_0, by greedy ascent through the lowest
/// simple root with negative pairing.
inline WeylElement minimal_lift(const RootSystemPtr& sys, const Root& gamma) {
  detail::require(sys->irreducible(), "minimal lift needs an irreducible root system");
  detail::require(sys->simply_laced(), "minimal lift needs a simply-laced root system");
  detail::require(gamma.positive() && sys->is_root(gamma), "minimal lift needs a positive root");
  const Root top = sys->highest_root();
  WeylElement v = WeylElement::identity(sys);
  Root cur = gamma;
  while (cur != top) {
    int step = 0;
    for (int i = 1; i <= sys->rank() && step == 0; ++i)
      if (sys->pairing_simple(cur, i) < 0) step = i;
    detail::ensure(step != 0, "ascent stalled below the highest root");
    cur = sys->reflect(step, cur);
    v = v.left_multiply(step);
  }
  detail::ensure(v.length() == height(top) - height(gamma), "lift is not of minimal length");
  const Coroot gc = sys->coroot(gamma);
  for (const auto& mu : v.inversion_set())
    detail::ensure(sys->pairing(mu, gc) == -1, "inversion of the lift does not pair to -1 with gamma");
  return v;
}

struct StabilizerReport {
  std::vector<WeylElement> at_w;        // v in W_{Supp(w_1)} fixing wx
  std::vector<WeylElement> at_block;    // v in W_{Supp(w_1)} fixing w_1 x_1
  bool equal = false;
};

inline void sort_elements(std::vector<WeylElement>& v) {
  std::vector<std::pair<std::pair<int, Word>, std::size_t>> keys;
  for (std::size_t k = 0; k < v.size(); ++k) keys.push_back({{v[k].length(), v[k].reduced_word()}, k});
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (const auto& key : keys) out.push_back(std::move(v[key.second]));
  v = std::move(out);
}

/// {v in W_J : v x W_I = x W_I} = W_J cap x W_I x^{-1}, enumerating whichever
/// of W_J and W_I is smaller.
inline std::vector<WeylElement> coset_stabilizer(const RootSystemPtr& sys, const WeylElement& x,
                                                 const ParabolicSet& I, const ParabolicSet& J, std::uint64_t cap) {
  std::vector<WeylElement> out;
  if (parabolic_order(*sys, J) <= parabolic_order(*sys, I)) {
    for_each_in_parabolic(
        sys, J,
        [&](const WeylElement& v) {
          if (min_coset_rep(v * x, I) == x) out.push_back(v);
        },
        cap);
  } else {
    const WeylElement xi = x.inverse();
    for_each_in_parabolic(
        sys, I,
        [&](const WeylElement& u) {
          WeylElement v = x * u * xi;
          if (support(v).subset_of(J)) out.push_back(std::move(v));
        },
        cap);
  }
  sort_elements(out);
  return out;
}

inline StabilizerReport stabilizer_weyl_groups(const GeneralizedDecomposition& d,
                                               std::uint64_t cap = default_enumeration_cap()) {
  const WeylElement w = d.product();
  const WeylElement& w1 = d.blocks.front();
  const ParabolicSet S1 = support(w1);
  StabilizerReport rep;
  rep.at_w = coset_stabilizer(d.sys, w, upper_set(w), S1, cap);
  rep.at_block = d.size() == 1 ? rep.at_w : coset_stabilizer(d.sys, w1, upper_set(w1), S1, cap);
  rep.equal = rep.at_w == rep.at_block;
  return rep;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BlockCheckReport {
  int beta1 = 0;
  std::vector<CheckResult> checks;
  StabilizerReport stabilizers;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

/// Block-level statements for a construction1 decomposition, each evaluated
/// with a witness. beta_1 is the color of the first peak of the ordering.
inline BlockCheckReport section5_checks(const GeneralizedDecomposition& d,
                                      std::uint64_t cap = default_enumeration_cap()) {
  detail::require(d.sys->simply_laced(), "these checks need a simply-laced root system");
  detail::require(d.size() >= 1, "empty decomposition");
  const RootSystem& R = *d.sys;
  const WeylElement w = d.product();
  const WeylElement& w1 = d.blocks.front();
  const WeylElement rest = d.tail(2);
  BlockCheckReport rep;
  rep.beta1 = d.block_words.front().front();
  const Root b1 = R.simple_root(rep.beta1);
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const ParabolicSet ld = left_descents(w1);
  add("first_block_unique_left_descent", ld == ParabolicSet(R.rank(), {rep.beta1}),
      "left descents of w_1: " + ld.to_string());

  std::string bad;
  for (const auto& mu : w.inverse().inversion_set())
    if (R.pairing(mu, R.coroot(b1)) < 0) bad += (bad.empty() ? "" : ", ") + to_string(mu);
  add("nonnegative_pairing", bad.empty(), bad.empty() ? "all inversions of w^{-1} pair >= 0 with beta_1"
                                                      : "negative pairing: " + bad);

  const Root r1 = w1.act_inverse(b1);
  const ParabolicSet s1 = support(w1), s2 = support_of(r1);
  add("support_equality", s1 == s2, "Supp(w_1) = " + s1.to_string() + ", support of w_1^{-1}(beta_1) = " + s2.to_string());

  const Root rw = w.act_inverse(b1);
  if (d.size() == 1) {
    add("strict_root_inequality", rw == r1, "single block: w = w_1");
  } else {
    add("strict_root_inequality", dominated_by(rw, r1) && rw != r1,
        "w_1^{-1}(beta_1) = " + to_string(r1) + ", w^{-1}(beta_1) = " + to_string(rw));
  }

  int failures = 0;
  std::uint64_t tried = 0;
  if (rest.is_identity()) {
    tried = parabolic_order(R, s1);  // u * e = u for every u
  } else {
    for_each_in_parabolic(
        d.sys, s1,
        [&](const WeylElement& u) {
          ++tried;
          if ((u * rest).length() != u.length() + rest.length()) ++failures;
        },
        cap);
  }
  add("length_additivity", failures == 0,
      std::to_string(tried) + " elements of W_Supp(w_1), " + std::to_string(failures) + " failures");

  const auto gam = gamma_sequence(d.sys, d.refined_word());
  bool mono = true;
  for (std::size_t k = 0; k < gam.size(); ++k) {
    if (!gam[k].negative()) mono = false;
    if (k > 0 && !dominated_by(gam[k], gam[k - 1])) mono = false;
  }
  add("gamma_monotone", mono, std::to_string(gam.size()) + " terms");

  std::string multi;
  for (int i = 1; i <= d.size(); ++i)
    if (left_descents(d.blocks[i - 1]).size() != 1) multi += (multi.empty() ? "" : ",") + std::to_string(i);
  add("blocks_unique_left_descent", multi.empty(), multi.empty() ? "every block" : "failing blocks: " + multi);

  rep.stabilizers = stabilizer_weyl_groups(d, cap);
  add("stabilizers_equal", rep.stabilizers.equal,
      std::to_string(rep.stabilizers.at_w.size()) + " vs " + std::to_string(rep.stabilizers.at_block.size()) +
          " elements");
  return rep;
}

struct MinimalFamilyReport {
  int block = 0;
  int alpha = 0;             // the left descent of w_i in this factor
  int tail_height = 0;       // ht(-(w_i ... w_m)^{-1}(alpha))
  int block_height = 0;      // ht(-w_i^{-1}(alpha))
  bool minimal = false;
  std::optional<int> dimension;
  LinesThroughPoint fiber;   // lines through a point of X(w_i)
};

/// Per block and per simple factor of the tail's support, compare the two
/// heights; equality means the family of curves in that block is minimal.
inline std::vector<MinimalFamilyReport> minimal_families_generalized(const GeneralizedDecomposition& d) {
  detail::require(d.sys->simply_laced(), "minimal families need a simply-laced root system");
  const RootSystem& R = *d.sys;
  for (int i = 1; i <= d.size(); ++i) {
    const WeylElement& wi = d.blocks[i - 1];
    detail::require(is_minuscule_in_support(wi), "block " + std::to_string(i) + " is not minuscule");
    detail::require(is_smooth_element(wi), "block " + std::to_string(i) + " is singular");
  }
  std::vector<MinimalFamilyReport> out;
  for (int i = 1; i <= d.size(); ++i) {
    const WeylElement& wi = d.blocks[i - 1];
    const WeylElement tail = d.tail(i);
    const int descent = *unique_right_descent(wi);
    const LinesThroughPoint fiber = lines_through_point(d.sys, support(wi), descent);
    for (const auto& comp : R.components(support(tail))) {
      for (int a : comp.bourbaki) {
        if (!wi.has_left_descent(a)) continue;
        MinimalFamilyReport row;
        row.block = i;
        row.alpha = a;
        row.tail_height = height(-tail.act_inverse(R.simple_root(a)));
        row.block_height = height(-wi.act_inverse(R.simple_root(a)));
        detail::ensure(row.tail_height >= row.block_height, "tail height below block height");
        row.minimal = row.tail_height == row.block_height;
        row.fiber = fiber;
        if (row.minimal) {
          row.dimension = height(-wi.act_inverse(R.simple_coroot(a))) - 1;
          detail::ensure(*row.dimension == fiber.dimension, "family dimension disagrees with the lines in the block");
        }
        out.push_back(std::move(row));
      }
    }
  }
  return out;
}

}  // namespace minlines
