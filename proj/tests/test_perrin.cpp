#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include "minlines/perrin.hpp"
#include "oracles.hpp"

using namespace minlines;

namespace {
WeylElement W(const RootSystemPtr& R, Word w) { return WeylElement::from_word(R, w); }

const Word kSl5{2, 1, 4, 3, 2};
const Word kSl9{3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3, 8, 7, 6, 5, 4};

std::vector<std::string> block_strings(const GeneralizedDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& b : d.block_words) out.push_back(format_word(b));
  return out;
}

// Distance from gamma to the highest root in the graph of simple reflections.
std::map<Root, int> distances_to_top(const RootSystem& R) {
  std::map<Root, int> dist{{R.highest_root(), 0}};
  std::queue<Root> q;
  q.push(R.highest_root());
  while (!q.empty()) {
    Root r = q.front();
    q.pop();
    for (int i = 1; i <= R.rank(); ++i) {
      Root s = R.reflect(i, r);
      if (!s.positive() || dist.count(s)) continue;
      dist[s] = dist[r] + 1;
      q.push(s);
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_orders(std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  std::vector<std::vector<int>> out;
  do out.push_back(colors);
  while (std::next_permutation(colors.begin(), colors.end()));
  return out;
}
}  // namespace

TEST(Quiver, Sl5Example) {
  auto A4 = RootSystem::build("A4");
  const auto q = build_quiver(A4, kSl5);
  EXPECT_EQ(q.peaks(), (std::vector<int>{1, 3}));
  EXPECT_EQ(q.peak_colors(), (std::vector<int>{2, 4}));
  EXPECT_TRUE(q.precedes(1, 5));
  EXPECT_TRUE(q.precedes(3, 4));
  EXPECT_FALSE(q.precedes(1, 3));
}

TEST(Quiver, Sl9Example) {
  auto A8 = RootSystem::build("A8");
  const auto q = build_quiver(A8, kSl9);
  EXPECT_EQ(q.peaks(), (std::vector<int>{1, 4, 12}));
  EXPECT_EQ(q.peak_colors(), (std::vector<int>{3, 5, 8}));
  EXPECT_EQ(standard_peak_order(q), (std::vector<int>{3, 5, 8}));
}

TEST(Quiver, Preconditions) {
  auto A3 = RootSystem::build("A3");
  EXPECT_THROW(build_quiver(A3, {1, 1}), PreconditionError);
  EXPECT_THROW(build_quiver(A3, {2, 1, 3, 2, 1}), PreconditionError);  // two right descents
  EXPECT_THROW(build_quiver(RootSystem::build("B3"), {1}), PreconditionError);
}

// Peaks are an invariant of the heap: every reduced word of a minuscule
// element gives the same peak colors and the same construction1 blocks.
TEST(Quiver, PeaksInvariantUnderCommutations) {
  for (auto [type, node] : std::vector<std::pair<std::string, int>>{{"A5", 3}, {"D5", 5}, {"E6", 1}}) {
    auto R = RootSystem::build(type);
    for (const auto& w : oracle::minuscule_elements(R, node)) {
      if (w.is_identity()) continue;
      const auto words = all_reduced_words(w);
      const auto q0 = build_quiver(R, words.front());
      const auto d0 = construction1(R, words.front(), standard_peak_order(q0));
      for (std::size_t k = 1; k < words.size(); k += 3) {
        const auto q = build_quiver(R, words[k]);
        auto a = q.peak_colors(), b = q0.peak_colors();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        const auto d = construction1(R, words[k], d0.peak_order);
        EXPECT_EQ(d.blocks, d0.blocks) << type << " " << format_word(words[k]);
      }
    }
  }
}

TEST(Construction1, Sl5Orderings) {
  auto A4 = RootSystem::build("A4");
  auto d = construction1(A4, kSl5, {2, 4});
  EXPECT_EQ(block_strings(d), (std::vector<std::string>{"2 1", "4 3 2"}));
  EXPECT_EQ(d.boundaries, (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(d.letter_block, (std::vector<int>{1, 1, 2, 2, 2}));
  EXPECT_EQ(d.tail(2), W(A4, {4, 3, 2}));
  d = construction1(A4, kSl5, {4, 2});
  EXPECT_EQ(block_strings(d), (std::vector<std::string>{"4", "2 1 3 2"}));
  EXPECT_EQ(d.product(), W(A4, kSl5));
  EXPECT_THROW(construction1(A4, kSl5, {2}), PreconditionError);
  EXPECT_THROW(construction1(A4, kSl5, {2, 3}), PreconditionError);
}

TEST(Construction1, Sl9Orderings) {
  auto A8 = RootSystem::build("A8");
  auto d = construction1(A8, kSl9, {3, 5, 8});
  EXPECT_EQ(block_strings(d), (std::vector<std::string>{"3 2 1", "5 4 3 2 6 5 4 3", "8 7 6 5 4"}));
  d = construction1(A8, kSl9, {8, 3, 5});
  EXPECT_EQ(block_strings(d), (std::vector<std::string>{"8", "3 2 1", "5 4 3 2 6 5 4 3 7 6 5 4"}));
}

TEST(Decomposition, ExplicitBlocks) {
  auto A3 = RootSystem::build("A3");
  const auto d = make_decomposition(A3, {{1}, {3, 2}});
  EXPECT_EQ(d.size(), 2);
  EXPECT_EQ(d.boundaries, (std::vector<int>{0, 1, 3}));
  EXPECT_FALSE(d.construction1);
  EXPECT_THROW(make_decomposition(A3, {{1, 2}, {2, 1}}), PreconditionError);
}

TEST(Goodness, Sl5StandardFailsOnTheRight) {
  auto A4 = RootSystem::build("A4");
  const auto rep = goodness_check(construction1(A4, kSl5, {2, 4}));
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_TRUE(rep.rows[0].left);
  EXPECT_FALSE(rep.rows[0].right);
  // alpha_3 is in I of the tail s4s3s2 but neither in Supp(s2s1) nor perpendicular to it.
  EXPECT_TRUE(rep.rows[0].tail_lower.contains(3));
  EXPECT_FALSE(rep.rows[0].right_set.contains(3));
  EXPECT_FALSE(rep.good());
}

TEST(Gamma, EndsAtInverseImageOfFirstLetter) {
  auto A8 = RootSystem::build("A8");
  const auto gam = gamma_sequence(A8, kSl9);
  ASSERT_EQ(gam.size(), kSl9.size());
  // In the permutation model, w^{-1}(e_a - e_b) = e_{p^{-1}(a)} - e_{p^{-1}(b)}.
  const auto p = oracle::Perm::from_word(8, kSl9);
  std::vector<int> inv(p.p.size());
  for (std::size_t k = 0; k < p.p.size(); ++k) inv[p.p[k] - 1] = static_cast<int>(k) + 1;
  const int a = kSl9.front();
  EXPECT_EQ(gam.back(), oracle::Perm::difference(8, inv[a - 1], inv[a]));
  for (std::size_t k = 1; k < gam.size(); ++k) EXPECT_TRUE(dominated_by(gam[k], gam[k - 1]));
}

TEST(MinimalLift, Examples) {
  auto A3 = RootSystem::build("A3");
  EXPECT_TRUE(minimal_lift(A3, Root({1, 1, 1})).is_identity());
  const auto v = minimal_lift(A3, Root({0, 1, 0}));
  EXPECT_EQ(v.length(), 2);
  EXPECT_EQ(v.act(Root({0, 1, 0})), Root({1, 1, 1}));
  EXPECT_THROW(minimal_lift(A3, Root({-1, 0, 0})), PreconditionError);
  EXPECT_THROW(minimal_lift(A3, Root({1, 0, 1})), PreconditionError);
  EXPECT_THROW(minimal_lift(RootSystem::build("B3"), Root({1, 0, 0})), PreconditionError);
}

TEST(MinimalLift, RandomRootsAgainstBreadthFirstSearch) {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (std::string t : {"A5", "D5", "E6", "E7"}) {
    auto R = RootSystem::build(t);
    const auto dist = distances_to_top(*R);
    const auto& pos = R->positive_roots();
    std::uniform_int_distribution<std::size_t> pick(0, pos.size() - 1);
    for (int k = 0; k < 50; ++k) {
      const Root g = pos[pick(rng)];
      const auto v = minimal_lift(R, g);
      EXPECT_EQ(v.act(g), R->highest_root());
      EXPECT_EQ(v.length(), dist.at(g)) << t << " " << to_string(g);
      for (const auto& mu : v.inversion_set()) EXPECT_EQ(R->pairing(mu, R->coroot(g)), -1);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 200);
}

TEST(Stabilizers, Sl5) {
  auto A4 = RootSystem::build("A4");
  auto rep = stabilizer_weyl_groups(construction1(A4, kSl5, {2, 4}));
  ASSERT_EQ(rep.at_w.size(), 2u);
  EXPECT_TRUE(rep.at_w[0].is_identity());
  EXPECT_EQ(rep.at_w[1], WeylElement::simple(A4, 1));
  EXPECT_TRUE(rep.equal);
  rep = stabilizer_weyl_groups(construction1(A4, kSl5, {4, 2}));
  ASSERT_EQ(rep.at_w.size(), 1u);
  EXPECT_TRUE(rep.at_w[0].is_identity());
}

TEST(BlockChecks, Sl5AndSl9) {
  auto A4 = RootSystem::build("A4");
  auto rep = section5_checks(construction1(A4, kSl5, {2, 4}));
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.beta1, 2);
  rep = section5_checks(construction1(A4, kSl5, {4, 2}));
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.beta1, 4);
  auto A8 = RootSystem::build("A8");
  for (const auto& order : all_orders({3, 5, 8})) {
    const auto r = section5_checks(construction1(A8, kSl9, order));
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
}

TEST(BlockChecks, EveryOrderingOnSmallSpaces) {
  for (auto [type, node] : std::vector<std::pair<std::string, int>>{{"A4", 2}, {"D4", 1}, {"D5", 5}}) {
    auto R = RootSystem::build(type);
    for (const auto& w : oracle::minuscule_elements(R, node)) {
      if (w.is_identity()) continue;
      const Word word = w.reduced_word();
      for (const auto& order : all_orders(build_quiver(R, word).peak_colors())) {
        const auto r = section5_checks(construction1(R, word, order));
        for (const auto& c : r.checks)
          EXPECT_TRUE(c.passed) << type << " " << format_word(word) << " " << c.name << ": " << c.detail;
      }
    }
  }
}

TEST(Families, Sl5Standard) {
  auto A4 = RootSystem::build("A4");
  const auto fam = minimal_families_generalized(construction1(A4, kSl5, {2, 4}));
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam[0].block, 1);
  EXPECT_EQ(fam[0].tail_height, 3);
  EXPECT_EQ(fam[0].block_height, 2);
  EXPECT_FALSE(fam[0].minimal);
  EXPECT_FALSE(fam[0].dimension.has_value());
  EXPECT_EQ(fam[1].block, 2);
  EXPECT_TRUE(fam[1].minimal);
  EXPECT_EQ(fam[1].dimension, 2);
}

TEST(Families, Gr24Blocks) {
  auto A3 = RootSystem::build("A3");
  const auto fam = minimal_families_generalized(make_decomposition(A3, {{1}, {3, 2}}));
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_FALSE(fam[0].minimal);
  EXPECT_TRUE(fam[1].minimal);
  EXPECT_EQ(fam[1].dimension, 1);
  EXPECT_EQ(fam[1].fiber.labels->lines, "P^1");
  EXPECT_THROW(minimal_families_generalized(make_decomposition(A3, {{1, 3, 2}})), PreconditionError);
}

// The last block always carries a minimal family: its tail is itself.
TEST(Families, LastBlockIsMinimal) {
  for (auto [type, node] : std::vector<std::pair<std::string, int>>{{"A5", 3}, {"D5", 1}}) {
    auto R = RootSystem::build(type);
    for (const auto& w : oracle::minuscule_elements(R, node)) {
      if (w.is_identity()) continue;
      const Word word = w.reduced_word();
      const auto d = construction1(R, word, standard_peak_order(build_quiver(R, word)));
      bool smooth = true;
      for (const auto& b : d.blocks) smooth = smooth && is_smooth_element(b);
      if (!smooth) continue;
      const auto fam = minimal_families_generalized(d);
      bool last = false;
      for (const auto& f : fam) last = last || (f.block == d.size() && f.minimal);
      EXPECT_TRUE(last) << type << " " << format_word(word);
    }
  }
}

// Both ways of computing W_J cap x W_I x^{-1} agree.
TEST(Stabilizers, EnumerationDirectionDoesNotMatter) {
  auto D5 = RootSystem::build("D5");
  for (const auto& x : oracle::minuscule_elements(D5, 5)) {
    const ParabolicSet I = upper_set(x);
    for (const ParabolicSet& J : {ParabolicSet(5, {1, 2}), ParabolicSet(5, {2, 3, 4, 5}), D5->all_nodes()}) {
      std::vector<WeylElement> direct;
      for (const auto& v : enumerate_parabolic(D5, J))
        if (min_coset_rep(v * x, I) == x) direct.push_back(v);
      sort_elements(direct);
      EXPECT_EQ(coset_stabilizer(D5, x, I, J, default_enumeration_cap()), direct);
    }
  }
}
