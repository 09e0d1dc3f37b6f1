#pragma once

// Weyl group elements stored as the images of the simple roots, together with
// the images under the inverse (so left and right descents are both O(rank)).
// Reduced words are recovered on demand by descent extraction.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "minlines/errors.hpp"
#include "minlines/lattice.hpp"
#include "minlines/parabolic_set.hpp"
#include "minlines/rootsys.hpp"

namespace minlines {

/// Sequence of 1-based simple reflection indices i_1 .. i_l.
using Word = std::vector<int>;

/// Parses "2 1 4 3 2", "2,1,4,3,2" or "s2 s1"; the empty string is the empty word.
inline Word parse_word(const std::string& text) {
  Word w;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '\t') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t p = 0;
    if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) p = 1;
    detail::require(p < tok.size(), "bad letter '" + tok + "' in word");
    for (std::size_t q = p; q < tok.size(); ++q)
      detail::require(std::isdigit(static_cast<unsigned char>(tok[q])), "bad letter '" + tok + "' in word");
    w.push_back(std::stoi(tok.substr(p)));
  }
  return w;
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (int k : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k);
  }
  return out;
}

class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(RootSystemPtr sys) {
    WeylElement w;
    const int n = sys->rank();
    for (int i = 1; i <= n; ++i) {
      w.images_.push_back(sys->simple_root(i));
      w.inverse_images_.push_back(sys->simple_root(i));
    }
    w.sys_ = std::move(sys);
    return w;
  }

  static WeylElement simple(RootSystemPtr sys, int node) {
    sys->check_node(node);
    return identity(std::move(sys)).right_multiply(node);
  }

  /// Product s_{i_1} ... s_{i_l}; reducedness is available via length().
  static WeylElement from_word(RootSystemPtr sys, const Word& word) {
    WeylElement w = identity(sys);
    for (int k : word) {
      w.sys_->check_node(k);
      w = w.right_multiply(k);
    }
    return w;
  }

  /// The reflection s_beta for a root beta.
  static WeylElement reflection(RootSystemPtr sys, const Root& beta) {
    detail::require(sys->is_root(beta), "reflection requested for a non-root");
    Coroot bc = sys->coroot(beta);
    WeylElement w;
    for (int i = 1; i <= sys->rank(); ++i) {
      Root a = sys->simple_root(i);
      Root img = a - sys->pairing(a, bc) * beta;
      w.images_.push_back(img);
      w.inverse_images_.push_back(img);  // involution
    }
    w.sys_ = std::move(sys);
    w.length_ = w.count_inversions();
    return w;
  }

  const RootSystem& system() const { return *sys_; }
  const RootSystemPtr& system_ptr() const { return sys_; }
  int rank() const { return static_cast<int>(images_.size()); }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  /// w(alpha_i).
  const Root& simple_image(int node) const { return images_[node - 1]; }
  /// w^{-1}(alpha_i).
  const Root& inverse_simple_image(int node) const { return inverse_images_[node - 1]; }

  Root act(const Root& b) const { return apply(images_, b); }
  Root act_inverse(const Root& b) const { return apply(inverse_images_, b); }
  /// w(c) for a coroot: w(beta^vee) = (w beta)^vee.
  Coroot act(const Coroot& c) const { return sys_->coroot(act(sys_->root_of_coroot(c))); }
  Coroot act_inverse(const Coroot& c) const { return sys_->coroot(act_inverse(sys_->root_of_coroot(c))); }

  /// w s_i < w, i.e. w(alpha_i) < 0.
  bool has_right_descent(int node) const { return images_[node - 1].negative(); }
  /// s_i w < w, i.e. w^{-1}(alpha_i) < 0.
  bool has_left_descent(int node) const { return inverse_images_[node - 1].negative(); }

  WeylElement right_multiply(int node) const {
    // (w s_i)(alpha_j) = w(alpha_j) - <alpha_j, alpha_i^vee> w(alpha_i)
    // (w s_i)^{-1}(alpha_j) = s_i(w^{-1}(alpha_j))
    WeylElement r = *this;
    const Root wi = images_[node - 1];
    for (int j = 1; j <= rank(); ++j) {
      int a = sys_->cartan(node, j);
      if (a != 0) r.images_[j - 1] -= a * wi;
      r.inverse_images_[j - 1] = sys_->reflect(node, inverse_images_[j - 1]);
    }
    r.length_ = length_ + (wi.positive() ? 1 : -1);
    return r;
  }

  WeylElement left_multiply(int node) const {
    WeylElement r = *this;
    const Root vi = inverse_images_[node - 1];
    for (int j = 1; j <= rank(); ++j) {
      int a = sys_->cartan(node, j);
      if (a != 0) r.inverse_images_[j - 1] -= a * vi;
      r.images_[j - 1] = sys_->reflect(node, images_[j - 1]);
    }
    r.length_ = length_ + (vi.positive() ? 1 : -1);
    return r;
  }

  WeylElement inverse() const {
    WeylElement r = *this;
    std::swap(r.images_, r.inverse_images_);
    return r;
  }

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
    detail::require(u.sys_->type() == v.sys_->type(), "product of elements of different Weyl groups");
    WeylElement r;
    r.sys_ = u.sys_;
    for (int j = 0; j < u.rank(); ++j) {
      r.images_.push_back(u.act(v.images_[j]));
      r.inverse_images_.push_back(v.act_inverse(u.inverse_images_[j]));
    }
    r.length_ = r.count_inversions();
    return r;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.images_ == b.images_; }

  /// Lexicographically least reduced word (greedy smallest left descent).
  Word reduced_word() const {
    Word out;
    WeylElement cur = *this;
    while (cur.length_ > 0) {
      for (int i = 1; i <= rank(); ++i)
        if (cur.has_left_descent(i)) {
          out.push_back(i);
          cur = cur.left_multiply(i);
          break;
        }
    }
    return out;
  }

  /// R+(w) = {gamma in R+ : w(gamma) in R-}, in positive_roots() order.
  std::vector<Root> inversion_set() const {
    std::vector<Root> out;
    for (const auto& g : sys_->positive_roots())
      if (act(g).negative()) out.push_back(g);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& r : images_) h = h * 31u + r.hash();
    return h;
  }

 private:
  static Root apply(const std::vector<Root>& table, const Root& b) {
    detail::require(b.rank() == static_cast<int>(table.size()), "root from a different root system");
    Root out(b.rank());
    for (int i = 0; i < b.rank(); ++i)
      if (b[i] != 0) out += b[i] * table[i];
    return out;
  }

  int count_inversions() const {
    int n = 0;
    for (const auto& g : sys_->positive_roots())
      if (act(g).negative()) ++n;
    return n;
  }

  RootSystemPtr sys_;
  std::vector<Root> images_;
  std::vector<Root> inverse_images_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};
using ElementSet = std::unordered_set<WeylElement, WeylElementHash>;

/// Result of evaluating a word: the element and whether the word was reduced.
struct WordValue {
  WeylElement element;
  bool reduced = false;
};

inline WordValue evaluate_word(RootSystemPtr sys, const Word& word) {
  WeylElement w = WeylElement::from_word(std::move(sys), word);
  bool reduced = w.length() == static_cast<int>(word.size());
  return {std::move(w), reduced};
}

inline void require_reduced(const RootSystemPtr& sys, const Word& word) {
  detail::require(evaluate_word(sys, word).reduced, "word '" + format_word(word) + "' is not reduced");
}

inline Root act_on_root(const WeylElement& w, const Root& b) { return w.act(b); }
inline std::vector<Root> inversion_set(const WeylElement& w) { return w.inversion_set(); }

/// Bruhat order: u <= w. Greedy leftmost subword of a fixed reduced word of w:
/// scan its letters left to right, peeling s_i off u whenever s_i is a left
/// descent of what remains; u <= w iff nothing remains.
inline bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  detail::require(u.system().type() == w.system().type(), "Bruhat comparison across Weyl groups");
  if (u.length() > w.length()) return false;
  WeylElement cur = u;
  for (int i : w.reduced_word()) {
    if (cur.has_left_descent(i)) cur = cur.left_multiply(i);
    if (cur.is_identity()) return true;
  }
  return cur.is_identity();
}

/// The unique minimal-length element of w W_I (strip right descents in I).
inline WeylElement min_coset_rep(const WeylElement& w, const ParabolicSet& I) {
  WeylElement cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a : I.nodes())
      if (cur.has_right_descent(a)) {
        cur = cur.right_multiply(a);
        changed = true;
      }
  }
  return cur;
}

inline bool is_min_coset_rep(const WeylElement& w, const ParabolicSet& I) {
  for (int a : I.nodes())
    if (w.has_right_descent(a)) return false;
  return true;
}

/// Longest element of W_I.
inline WeylElement longest_element(const RootSystemPtr& sys, const ParabolicSet& I) {
  WeylElement cur = WeylElement::identity(sys);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a : I.nodes())
      if (!cur.has_right_descent(a)) {
        cur = cur.right_multiply(a);
        changed = true;
      }
  }
  return cur;
}

/// Supp(w): letters of any reduced word.
inline ParabolicSet support(const WeylElement& w) {
  return ParabolicSet(w.rank(), w.reduced_word());
}

/// I^w = {alpha in S : w(alpha) > 0}.
inline ParabolicSet upper_set(const WeylElement& w) {
  ParabolicSet s(w.rank());
  for (int i = 1; i <= w.rank(); ++i)
    if (!w.has_right_descent(i)) s.insert(i);
  return s;
}

/// Left descents {alpha in S : w^{-1}(alpha) < 0} = R+(w^{-1}) cap S.
inline ParabolicSet left_descents(const WeylElement& w) {
  ParabolicSet s(w.rank());
  for (int i = 1; i <= w.rank(); ++i)
    if (w.has_left_descent(i)) s.insert(i);
  return s;
}

struct ParabolicInvariants {
  ParabolicSet upper;   // I^w
  ParabolicSet lower;   // I_w, non-strict coset Bruhat order
  ParabolicSet perp;    // w^perp
};

inline ParabolicInvariants parabolic_invariants(const WeylElement& w) {
  ParabolicInvariants r;
  r.upper = upper_set(w);
  r.lower = ParabolicSet(w.rank());
  r.perp = ParabolicSet(w.rank());
  const WeylElement rep = min_coset_rep(w, r.upper);
  for (int a = 1; a <= w.rank(); ++a) {
    WeylElement sw = w.left_multiply(a);
    if (bruhat_leq(min_coset_rep(sw, r.upper), rep)) r.lower.insert(a);
    if (sw == w.right_multiply(a)) r.perp.insert(a);
  }
  return r;
}

/// Whether s_a and s_b commute (a == b included).
inline bool letters_commute(const RootSystem& R, int a, int b) { return a == b || R.cartan(a, b) == 0; }

/// The "minuscule" node of w: the unique right descent, when there is exactly one.
inline std::optional<int> unique_right_descent(const WeylElement& w) {
  std::optional<int> d;
  for (int i = 1; i <= w.rank(); ++i)
    if (w.has_right_descent(i)) {
      if (d) return std::nullopt;
      d = i;
    }
  return d;
}

/// w is minuscule: S \ I^w = {alpha} with varpi_alpha minuscule for G.
inline bool is_minuscule_element(const WeylElement& w) {
  const RootSystem& R = w.system();
  detail::require(R.irreducible(), "minuscule test needs an irreducible root system");
  detail::require(R.simply_laced(), "minuscule test needs a simply-laced root system");
  auto d = unique_right_descent(w);
  return d && R.is_minuscule_node(*d);
}

/// w is minuscule relative to its own support: S \ I^w = {alpha} and
/// varpi_alpha is minuscule for the simple factor of Supp(w) containing alpha,
/// i.e. G_w / (P^w cap G_w) is minuscule.
inline bool is_minuscule_in_support(const WeylElement& w) {
  const RootSystem& R = w.system();
  detail::require(R.simply_laced(), "minuscule test needs a simply-laced root system");
  auto d = unique_right_descent(w);
  if (!d) return false;
  const ParabolicSet supp = support(w);
  // <varpi_alpha, beta^vee> over positive roots supported in Supp(w); in a
  // simply-laced system this is the alpha-coefficient of beta.
  for (const auto& b : R.positive_roots())
    if (support_of(b).subset_of(supp) && b[*d - 1] > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::uint64_t default_enumeration_cap() {
  if (const char* env = std::getenv("MINLINES_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ull;
}

/// |W_J|, from the Dynkin types of the components of J.
inline std::uint64_t parabolic_order(const RootSystem& R, const ParabolicSet& J) {
  std::uint64_t n = 1;
  for (const auto& c : R.components(J)) n *= weyl_group_order(c.type);
  return n;
}

/// All elements of W_J, breadth-first by length. Throws CapExceededError when
/// |W_J| exceeds the cap.
inline std::vector<WeylElement> enumerate_parabolic(const RootSystemPtr& sys, const ParabolicSet& J,
                                                    std::uint64_t cap = default_enumeration_cap()) {
  const std::uint64_t order = parabolic_order(*sys, J);
  if (order > cap)
    throw CapExceededError("enumeration of a Weyl group of order " + std::to_string(order) +
                           " exceeds the cap " + std::to_string(cap) + " (MINLINES_ENUM_CAP)");
  std::vector<WeylElement> out{WeylElement::identity(sys)};
  ElementSet seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int a : J.nodes()) {
      if (out[k].has_right_descent(a)) continue;
      WeylElement n = out[k].right_multiply(a);
      if (seen.insert(n).second) out.push_back(std::move(n));
    }
  }
  detail::ensure(out.size() == order, "parabolic subgroup enumeration produced the wrong order");
  return out;
}

/// Calls f on every element of W_J without storing them: depth-first over the
/// tree where the parent of v is v s_d, d the smallest right descent of v.
/// Memory is O(length); the cap applies as for enumerate_parabolic.
template <class F>
void for_each_in_parabolic(const RootSystemPtr& sys, const ParabolicSet& J, F&& f,
                           std::uint64_t cap = default_enumeration_cap()) {
  const std::uint64_t order = parabolic_order(*sys, J);
  if (order > cap)
    throw CapExceededError("enumeration of a Weyl group of order " + std::to_string(order) +
                           " exceeds the cap " + std::to_string(cap) + " (MINLINES_ENUM_CAP)");
  const std::vector<int> nodes = J.nodes();
  auto smallest_descent = [&](const WeylElement& v) {
    for (int a : nodes)
      if (v.has_right_descent(a)) return a;
    return 0;
  };
  std::uint64_t visited = 0;
  std::vector<WeylElement> stack{WeylElement::identity(sys)};
  while (!stack.empty()) {
    WeylElement v = std::move(stack.back());
    stack.pop_back();
    ++visited;
    for (int a : nodes) {
      if (v.has_right_descent(a)) continue;
      WeylElement c = v.right_multiply(a);
      if (smallest_descent(c) == a) stack.push_back(std::move(c));
    }
    f(static_cast<const WeylElement&>(v));
  }
  detail::ensure(visited == order, "parabolic subgroup traversal visited the wrong number of elements");
}

inline std::vector<WeylElement> enumerate_group(const RootSystemPtr& sys,
                                                std::uint64_t cap = default_enumeration_cap()) {
  return enumerate_parabolic(sys, sys->all_nodes(), cap);
}

/// W^I, the minimal coset representatives, breadth-first by length. W^I is
/// closed under left factors, so it grows from e by left multiplication.
inline std::vector<WeylElement> enumerate_min_coset_reps(const RootSystemPtr& sys, const ParabolicSet& I,
                                                         std::uint64_t cap = default_enumeration_cap()) {
  const std::uint64_t order = parabolic_order(*sys, sys->all_nodes()) / parabolic_order(*sys, I);
  if (order > cap)
    throw CapExceededError("enumeration of " + std::to_string(order) + " coset representatives exceeds the cap " +
                           std::to_string(cap) + " (MINLINES_ENUM_CAP)");
  std::vector<WeylElement> out{WeylElement::identity(sys)};
  ElementSet seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int a = 1; a <= sys->rank(); ++a) {
      if (out[k].has_left_descent(a)) continue;
      WeylElement n = out[k].left_multiply(a);
      if (!is_min_coset_rep(n, I)) continue;
      if (seen.insert(n).second) out.push_back(std::move(n));
    }
  }
  detail::ensure(out.size() == order, "coset representative enumeration produced the wrong count");
  return out;
}

/// Every reduced word of w (depth-first over right descents), in lexicographic
/// order. Throws CapExceededError beyond `cap` words.
inline std::vector<Word> all_reduced_words(const WeylElement& w, std::uint64_t cap = default_enumeration_cap()) {
  std::vector<Word> out;
  Word suffix;  // built right to left
  std::function<void(const WeylElement&)> rec = [&](const WeylElement& cur) {
    if (cur.is_identity()) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      if (out.size() > cap) throw CapExceededError("reduced word enumeration exceeds the cap");
      return;
    }
    for (int i = 1; i <= cur.rank(); ++i)
      if (cur.has_right_descent(i)) {
        suffix.push_back(i);
        rec(cur.right_multiply(i));
        suffix.pop_back();
      }
  };
  rec(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minlines
