#include <gtest/gtest.h>

#include "minlines/schubert.hpp"
#include "oracles.hpp"

using namespace minlines;

namespace {
WeylElement W(const RootSystemPtr& R, Word w) { return WeylElement::from_word(R, w); }

// Fano index of the minuscule G/P^node: the anticanonical degree of a line.
int fano_index(const RootSystem& R, int node) {
  const int n = R.rank();
  switch (R.type().components.at(0).family) {
    case Family::A: return n + 1;
    case Family::D: return 2 * n - 2;
    case Family::E: return R.rank() == 6 ? 12 : 18;
    default: (void)node; return -1;
  }
}

struct Space {
  std::string type;
  int node;
};
}  // namespace

TEST(FlagSpace, Basics) {
  auto A3 = RootSystem::build("A3");
  const FlagSpace X(A3, ParabolicSet(3, {1, 3}));
  EXPECT_EQ(X.node(), 2);
  EXPECT_TRUE(X.is_minuscule());
  EXPECT_EQ(X.ample_weight(), Weight({0, 1, 0}));
  const FlagSpace F(A3, ParabolicSet(3));
  EXPECT_FALSE(F.is_maximal());
  EXPECT_THROW(F.node(), PreconditionError);
  EXPECT_FALSE(FlagSpace::maximal(RootSystem::build("E8"), 8).is_minuscule());
  EXPECT_THROW(FlagSpace(A3, ParabolicSet(4)), PreconditionError);
}

TEST(SchubertVariety, RequiresMinimalRepresentative) {
  auto A3 = RootSystem::build("A3");
  const auto X = FlagSpace::maximal(A3, 2);
  EXPECT_NO_THROW(SchubertVariety::make(X, W(A3, {1, 3, 2})));
  EXPECT_THROW(SchubertVariety::make(X, W(A3, {1, 3, 2, 1})), PreconditionError);
  EXPECT_EQ(SchubertVariety::make(X, W(A3, {1, 3, 2})).dimension(), 3);
}

TEST(Curves, Gr24Example) {
  auto A3 = RootSystem::build("A3");
  const auto X = FlagSpace::maximal(A3, 2);
  const auto S = SchubertVariety::make(X, W(A3, {1, 3, 2}));
  const auto curves = t_curves_through_schubert(S);
  ASSERT_EQ(curves.size(), 3u);
  EXPECT_EQ(curves[0].beta, Root({-1, 0, 0}));
  EXPECT_EQ(curves[1].beta, Root({0, 0, -1}));
  EXPECT_EQ(curves[2].beta, Root({-1, -1, -1}));
  for (const auto& C : curves) {
    EXPECT_EQ(curve_degree(X, C, X.ample_weight()), 1);
    EXPECT_EQ(anticanonical_degree(X, C), 4);
  }
  EXPECT_THROW(curve_degree(X, curves[0], A3->fundamental_weight(1)), PreconditionError);
}

TEST(Curves, ThroughIdentityOfFlagSpace) {
  auto A3 = RootSystem::build("A3");
  const FlagSpace X(A3, ParabolicSet(3, {1, 3}));
  const auto curves = t_curves_through_flag(X, WeylElement::identity(A3));
  ASSERT_EQ(curves.size(), 4u);
  for (const auto& C : curves) EXPECT_TRUE(C.beta.positive());
  EXPECT_EQ(t_curves_through_flag(FlagSpace(A3, ParabolicSet(3)), WeylElement::identity(A3)).size(), 6u);
}

TEST(Curves, FullFlagDegreesAndAnticanonical) {
  auto A2 = RootSystem::build("A2");
  const FlagSpace F(A2, ParabolicSet(2));
  const auto w = W(A2, {1, 2, 1});
  const auto curves = t_curves_through_schubert(SchubertVariety::make(F, w));
  ASSERT_EQ(curves.size(), 3u);
  for (const auto& C : curves) {
    // -K of the full flag variety is 2 rho; a curve of class beta^vee has degree 2 ht.
    EXPECT_EQ(anticanonical_degree(F, C), 2 * height(C.pulled_back_coroot()));
    const auto d = curve_degrees(F, C);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].first, 1);
    EXPECT_EQ(d[1].first, 2);
  }
}

TEST(Curves, AnticanonicalExamples) {
  auto E7 = RootSystem::build("E7");
  const auto X = FlagSpace::maximal(E7, 7);
  const auto S = SchubertVariety::make(X, W(E7, {7}));
  EXPECT_EQ(anticanonical_degree(X, t_curves_through_schubert(S).at(0)), 18);
  auto A1 = RootSystem::build("A1");
  const FlagSpace P1(A1, ParabolicSet(1));
  EXPECT_EQ(anticanonical_degree(P1, t_curves_through_schubert(SchubertVariety::make(P1, W(A1, {1}))).at(0)), 2);
}

// Every T-stable curve through wx in X(w) of a minuscule space is a line, and
// its anticanonical degree is the Fano index.
TEST(Curves, AllCurvesAreLinesOnMinusculeSpaces) {
  for (const Space& s : {Space{"A4", 2}, Space{"A5", 3}, Space{"D5", 1}, Space{"D5", 5}, Space{"E6", 1}}) {
    auto R = RootSystem::build(s.type);
    const auto X = FlagSpace::maximal(R, s.node);
    const int index = fano_index(*R, s.node);
    for (const auto& w : oracle::minuscule_elements(R, s.node)) {
      const auto curves = t_curves_through_schubert(SchubertVariety::make(X, w));
      EXPECT_EQ(static_cast<int>(curves.size()), w.length());
      // <varpi, w^{-1} beta^vee> = <w varpi, beta^vee>, w varpi by simple reflections.
      const Weight wv = oracle::act_on_weight(*R, w.reduced_word(), R->fundamental_weight(s.node));
      for (const auto& C : curves) {
        int direct = 0;
        for (int i = 0; i < R->rank(); ++i) direct += wv[i] * C.beta[i];
        EXPECT_EQ(direct, 1) << s.type << " " << format_word(w.reduced_word());
        EXPECT_EQ(curve_degree(X, C, X.ample_weight()), 1);
        EXPECT_EQ(anticanonical_degree(X, C), index);
      }
    }
  }
}

TEST(Curves, CoveredBySchubertLine) {
  auto A3 = RootSystem::build("A3");
  const auto X = FlagSpace::maximal(A3, 2);
  EXPECT_TRUE(covered_by_schubert_line(SchubertVariety::make(X, W(A3, {1, 3, 2})), 2));
  EXPECT_FALSE(covered_by_schubert_line(SchubertVariety::make(X, W(A3, {})), 2));
  EXPECT_THROW(covered_by_schubert_line(SchubertVariety::make(X, W(A3, {})), 1), PreconditionError);
}

TEST(Lines, TableRowsTypeA) {
  for (int n = 1; n <= 7; ++n) {
    auto R = RootSystem::build("A" + std::to_string(n));
    for (int m = 1; m <= n; ++m) {
      const auto L = lines_through_point_space(FlagSpace::maximal(R, m));
      EXPECT_EQ(L.dimension, n - 1);
      EXPECT_EQ(L.height_dimension, n - 1);
      ASSERT_TRUE(L.labels.has_value());
      EXPECT_EQ(L.labels->space, "G(" + std::to_string(m) + "," + std::to_string(n + 1) + ")");
    }
  }
  auto A4 = RootSystem::build("A4");
  const auto L = lines_through_point_space(FlagSpace::maximal(A4, 2));
  EXPECT_EQ(L.levi_type, "A1xA2");
  EXPECT_EQ(L.labels->lines, "P^1* x P^2");
  EXPECT_EQ(L.stabilizer_type, "A1");
  EXPECT_EQ(lines_through_point_space(FlagSpace::maximal(A4, 1)).labels->lines, "P^3");
  EXPECT_EQ(lines_through_point_space(FlagSpace::maximal(RootSystem::build("A1"), 1)).labels->lines, "point");
}

TEST(Lines, TableRowsTypeD) {
  for (int n = 4; n <= 6; ++n) {
    auto R = RootSystem::build("D" + std::to_string(n));
    const auto Q = lines_through_point_space(FlagSpace::maximal(R, 1));
    EXPECT_EQ(Q.dimension, 2 * n - 4);
    EXPECT_EQ(Q.labels->space, "Q^" + std::to_string(2 * n - 2));
    EXPECT_EQ(Q.levi_type, (n == 4 ? "A" : "D") + std::to_string(n - 1));
    for (int node : {n - 1, n}) {
      const auto S = lines_through_point_space(FlagSpace::maximal(R, node));
      EXPECT_EQ(S.dimension, 2 * (n - 2));
      EXPECT_EQ(S.labels->lines, "G(2," + std::to_string(n) + ")");
      EXPECT_EQ(S.levi_type, "A" + std::to_string(n - 1));
    }
  }
}

TEST(Lines, TableRowsTypeE) {
  auto E6 = RootSystem::build("E6");
  for (int node : {1, 6}) {
    const auto L = lines_through_point_space(FlagSpace::maximal(E6, node));
    EXPECT_EQ(L.dimension, 10);
    EXPECT_EQ(L.levi_type, "D5");
    EXPECT_EQ(L.labels->lines, "S^10");
  }
  const auto L = lines_through_point_space(FlagSpace::maximal(RootSystem::build("E7"), 7));
  EXPECT_EQ(L.dimension, 16);
  EXPECT_EQ(L.levi_type, "E6");
  EXPECT_EQ(L.labels->space, "X^27");
}

TEST(Lines, NonMinusculeAndShortRoots) {
  auto E8 = RootSystem::build("E8");
  const auto L = lines_through_point_space(FlagSpace::maximal(E8, 8));
  EXPECT_FALSE(L.labels.has_value());
  EXPECT_EQ(L.dimension, L.height_dimension);
  EXPECT_THROW(lines_through_point_space(FlagSpace::maximal(RootSystem::build("B3"), 3)), PreconditionError);
  EXPECT_NO_THROW(lines_through_point_space(FlagSpace::maximal(RootSystem::build("B3"), 1)));
}

TEST(Lines, SubsetAmbient) {
  auto E6 = RootSystem::build("E6");
  // G_J for J = {2,3,4,5} is D4 with alpha_2 a leaf: lines through a point of Q^6.
  const auto L = lines_through_point(E6, ParabolicSet(6, {2, 3, 4, 5}), 2);
  EXPECT_EQ(L.dimension, 4);
  EXPECT_EQ(L.ambient, ParabolicSet(6, {2, 3, 4, 5}));
  EXPECT_THROW(lines_through_point(E6, ParabolicSet(6, {3, 4}), 2), PreconditionError);
}

TEST(LineFamilies, Gr24Examples) {
  auto A3 = RootSystem::build("A3");
  const auto X = FlagSpace::maximal(A3, 2);
  auto fam = line_families_on_schubert(SchubertVariety::make(X, W(A3, {1, 3, 2})));
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam[0].v, W(A3, {1}));
  EXPECT_EQ(fam[1].v, W(A3, {3}));
  EXPECT_EQ(fam[0].root, Root({1, 1, 0}));
  fam = line_families_on_schubert(SchubertVariety::make(X, W(A3, {2})));
  ASSERT_EQ(fam.size(), 1u);
  EXPECT_EQ(fam[0].dimension, 0);
  EXPECT_TRUE(line_families_on_schubert(SchubertVariety::make(X, W(A3, {}))).empty());
}

TEST(LineFamilies, MaximalAndCovering) {
  for (const Space& s : {Space{"A4", 2}, Space{"D5", 1}, Space{"D5", 5}, Space{"E6", 1}}) {
    auto R = RootSystem::build(s.type);
    const auto X = FlagSpace::maximal(R, s.node);
    const auto orbit = levi_orbit(R, X.levi(), s.node);
    for (const auto& w : oracle::minuscule_elements(R, s.node)) {
      const auto fam = line_families_on_schubert(SchubertVariety::make(X, w));
      EXPECT_EQ(fam.empty(), w.is_identity());
      for (const auto& f : fam) {
        EXPECT_TRUE(w.act(f.root).negative());
        EXPECT_EQ(f.v.act(R->simple_root(s.node)), f.root);
      }
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = 0; b < fam.size(); ++b)
          EXPECT_TRUE(a == b || !bruhat_leq(fam[a].v, fam[b].v));
      for (const auto& [root, v] : orbit) {
        if (!w.act(root).negative()) continue;
        bool below = false;
        for (const auto& f : fam) below = below || bruhat_leq(v, f.v);
        EXPECT_TRUE(below);
      }
    }
    // On the whole space one family: all lines through the point.
    const auto top = longest_element(R, R->all_nodes());
    const auto w0P = min_coset_rep(top, X.levi());
    const auto fam = line_families_on_schubert(SchubertVariety::make(X, w0P));
    ASSERT_EQ(fam.size(), 1u);
    EXPECT_EQ(fam[0].dimension, lines_through_point_space(X).dimension);
  }
}

TEST(Smoothness, Examples) {
  auto A3 = RootSystem::build("A3");
  const auto X = FlagSpace::maximal(A3, 2);
  EXPECT_FALSE(is_smooth_minuscule(SchubertVariety::make(X, W(A3, {1, 3, 2}))));
  EXPECT_TRUE(is_smooth_minuscule(SchubertVariety::make(X, W(A3, {3, 2}))));
  EXPECT_TRUE(is_smooth_minuscule(SchubertVariety::make(X, W(A3, {}))));
  EXPECT_TRUE(is_smooth_minuscule(SchubertVariety::make(X, W(A3, {2, 1, 3, 2}))));
}

// In a Grassmannian, X(w) is smooth iff its partition is a rectangle.
TEST(Smoothness, GrassmannianRectangles) {
  for (const Space& s : {Space{"A4", 2}, Space{"A5", 3}, Space{"A6", 2}}) {
    auto R = RootSystem::build(s.type);
    const auto X = FlagSpace::maximal(R, s.node);
    for (const auto& w : oracle::minuscule_elements(R, s.node)) {
      const auto p = oracle::Perm::from_word(R->rank(), w.reduced_word());
      EXPECT_EQ(is_smooth_minuscule(SchubertVariety::make(X, w)),
                oracle::is_rectangle(oracle::grassmannian_partition(p, s.node)))
          << s.type << " " << format_word(w.reduced_word());
    }
  }
}

TEST(Smoothness, AgreesWithCurveCount) {
  for (const Space& s : {Space{"A4", 2}, Space{"D4", 1}, Space{"D5", 5}}) {
    auto R = RootSystem::build(s.type);
    const auto X = FlagSpace::maximal(R, s.node);
    for (const auto& w : oracle::minuscule_elements(R, s.node))
      EXPECT_EQ(is_smooth_minuscule(SchubertVariety::make(X, w)), oracle::smooth_by_curve_count(w, X.levi()))
          << s.type << " " << format_word(w.reduced_word());
  }
}

TEST(Smoothness, RequiresMinusculeSpace) {
  auto B3 = RootSystem::build("B3");
  const auto X = FlagSpace::maximal(B3, 1);
  EXPECT_THROW(is_smooth_minuscule(SchubertVariety::make(X, W(B3, {1}))), PreconditionError);
}
