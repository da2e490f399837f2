#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "asmkit/atlas.hpp"
#include "asmkit/core.hpp"
#include "asmkit/enumerate.hpp"

using namespace asmkit;
using Rows = std::vector<std::vector<int>>;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

template <class F>
Error error_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(Errc::ParseError, "");
}

// Corner sums computed straight from the definition.
Rows corner_sums(Asm const& a) {
  int const n = a.n();
  Rows c(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int p = 0; p < i; ++p)
        for (int q = 0; q < j; ++q) c[i][j] += a(p, q);
  return c;
}

std::string bits(BitGrid const& b) {
  std::string s;
  for (int r = 0; r < b.rows(); ++r) {
    if (r) s += ' ';
    for (int c = 0; c < b.cols(); ++c) s += b.get(r, c) ? '1' : '0';
  }
  return s;
}

}  // namespace

TEST(AsmValidation, AcceptsIdentityAndAtlas) {
  EXPECT_EQ(Asm::identity(4).n(), 4);
  for (auto const& r : atlas::order3_asms()) EXPECT_NO_THROW(Asm::from_rows(r));
  auto const a = Asm::from_rows(atlas::order4_example());
  EXPECT_EQ(a.count(-1), 1);
  EXPECT_EQ(a.count(1), 5);
}

TEST(AsmValidation, RejectsWithCodesAndPositions) {
  EXPECT_EQ(code_of([] { Asm::from_rows({{1, 0}, {0}}); }), Errc::NotSquare);
  EXPECT_EQ(code_of([] { Asm::from_rows({{1, 0, 0}, {0, 1, 0}}); }), Errc::NotSquare);
  EXPECT_EQ(code_of([] { Asm::from_rows({}); }), Errc::ZeroOrder);

  auto e = error_of([] { Asm::from_rows({{1, 0}, {0, 2}}); });
  EXPECT_EQ(e.code(), Errc::BadEntryValue);
  EXPECT_EQ(e.row(), 2);
  EXPECT_EQ(e.col(), 2);

  e = error_of([] { Asm::from_rows({{1, 0}, {1, 0}}); });
  EXPECT_EQ(e.code(), Errc::AlternationViolated);
  EXPECT_EQ(e.row(), 2);
  EXPECT_EQ(e.col(), 1);

  e = error_of([] { Asm::from_rows({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}}); });
  EXPECT_EQ(e.code(), Errc::AlternationViolated);
  EXPECT_EQ(e.row(), 1);
  EXPECT_EQ(e.col(), 1);

  e = error_of([] { Asm::from_rows({{0, 0}, {0, 1}}); });
  EXPECT_EQ(e.code(), Errc::AlternationViolated);
  EXPECT_EQ(e.row(), 1);
  EXPECT_FALSE(e.col().has_value());
}

TEST(AsmValidation, ErrorTextCarriesCode) {
  auto e = error_of([] { Asm::from_rows({{1, 1}, {0, 0}}); });
  EXPECT_EQ(std::string(e.what()).rfind("AlternationViolated: ", 0), 0u);
  EXPECT_EQ(std::string(e.what()), "AlternationViolated: " + e.message());
}

TEST(CornerSum, MatchesDefinitionAndRejectsBadSteps) {
  for (int n = 1; n <= 5; ++n)
    for_each_asm(n, [](Asm const& a) {
      ASSERT_EQ(asm_to_corner_sum(a).entries().to_rows(), corner_sums(a));
    });
  EXPECT_EQ(code_of([] { CornerSum(Grid<int>::from_rows({{0, 0}, {0, 2}})); }), Errc::InvariantViolated);
  EXPECT_EQ(code_of([] { CornerSum(Grid<int>::from_rows({{0}})); }), Errc::ZeroOrder);
  EXPECT_EQ(code_of([] { CornerSum(Grid<int>::from_rows({{0, 0, 0}, {0, 0, 1}})); }), Errc::NotSquare);
}

TEST(HeightFunction, MatchesCornerSumFormula) {
  for (int n = 1; n <= 5; ++n)
    for_each_asm(n, [](Asm const& a) {
      auto const c = corner_sums(a);
      auto const h = asm_to_height(a);
      for (int i = 0; i <= a.n(); ++i)
        for (int j = 0; j <= a.n(); ++j) ASSERT_EQ(h(i, j), i + j - 2 * c[i][j]);
    });
}

TEST(HeightFunction, ValidationErrors) {
  EXPECT_EQ(code_of([] { HeightFunction(Grid<int>::from_rows({{0, 1}, {1, 2}})); }), Errc::InvariantViolated);
  auto e = error_of([] {
    HeightFunction(Grid<int>::from_rows({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}));
  });
  EXPECT_EQ(e.code(), Errc::ParityViolated);
  EXPECT_EQ(e.row(), 1);
  EXPECT_EQ(e.col(), 1);
  EXPECT_EQ(code_of([] {
              HeightFunction(Grid<int>::from_rows({{0, 1, 2}, {1, 4, 1}, {2, 1, 0}}));
            }),
            Errc::InvariantViolated);
}

TEST(HeightFunction, ExtremesAreIdentityAndAntiIdentity) {
  int const n = 4;
  Grid<int> lo(n + 1, n + 1), hi(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      lo(i, j) = min_height(i, j);
      hi(i, j) = max_height(n, i, j);
    }
  EXPECT_EQ(height_to_asm(HeightFunction(lo)), Asm::identity(n));
  Grid<int> anti(n, n, 0);
  for (int i = 0; i < n; ++i) anti(i, n - 1 - i) = 1;
  EXPECT_EQ(height_to_asm(HeightFunction(hi)), Asm(anti));
}

TEST(ThreeColoring, IsHeightModThreeAndLifts) {
  for (int n = 1; n <= 5; ++n)
    for_each_asm(n, [](Asm const& a) {
      auto const h = asm_to_height(a);
      auto const t = height_to_coloring(h);
      for (int i = 0; i <= a.n(); ++i)
        for (int j = 0; j <= a.n(); ++j) ASSERT_EQ(t(i, j), h(i, j) % 3);
      ASSERT_EQ(coloring_to_height(t), h);
    });
}

TEST(ThreeColoring, RejectsAdjacentEqualColors) {
  EXPECT_EQ(code_of([] { ThreeColoring(Grid<int>::from_rows({{0, 1}, {1, 1}})); }), Errc::InvariantViolated);
  EXPECT_EQ(code_of([] { ThreeColoring(Grid<int>::from_rows({{0, 1}, {1, 3}})); }), Errc::BadEntryValue);
}

TEST(ThreeColoring, LiftFailsOnInconsistentColors) {
  // Valid proper coloring with the right boundary whose lift leaves the
  // height-function range.
  Grid<int> g = Grid<int>::from_rows({{0, 1, 2, 0}, {1, 2, 0, 2}, {2, 0, 1, 1}, {0, 2, 1, 0}});
  EXPECT_ANY_THROW(lift_coloring(g));
}

TEST(MonotoneTriangle, RowsAreColumnsOfPartialSums) {
  for (int n = 1; n <= 5; ++n)
    for_each_asm(n, [](Asm const& a) {
      auto const m = asm_to_monotone(a);
      auto const c = corner_sums(a);
      for (int k = 0; k < a.n(); ++k) {
        std::vector<int> expect;
        for (int j = 1; j <= a.n(); ++j)
          if (c[k + 1][j] - c[k + 1][j - 1] == 1) expect.push_back(j);
        ASSERT_EQ(m.rows()[k], expect);
      }
      ASSERT_EQ(monotone_to_asm(m), a);
    });
  EXPECT_EQ(asm_to_monotone(Asm::from_rows(atlas::order4_example())).rows(), atlas::order4_example_triangle());
}

TEST(MonotoneTriangle, ValidationErrors) {
  EXPECT_EQ(code_of([] { MonotoneTriangle({}); }), Errc::ZeroOrder);
  EXPECT_EQ(code_of([] { MonotoneTriangle({{2}, {2, 1}}); }), Errc::InvariantViolated);
  EXPECT_EQ(code_of([] { MonotoneTriangle({{1}, {2, 3}, {1, 2, 3}}); }), Errc::InvariantViolated);
  EXPECT_EQ(code_of([] { MonotoneTriangle({{1}, {1, 3}}); }), Errc::InvariantViolated);
}

TEST(Atlas, OrderThreeRepresentations) {
  auto const& asms = atlas::order3_asms();
  ASSERT_EQ(asms.size(), 7u);
  std::set<Asm> listed;
  for (std::size_t k = 0; k < asms.size(); ++k) {
    auto const a = Asm::from_rows(asms[k]);
    listed.insert(a);
    EXPECT_EQ(asm_to_corner_sum(a).entries().to_rows(), atlas::order3_corner_sums()[k]);
    EXPECT_EQ(asm_to_height(a).entries().to_rows(), atlas::order3_heights()[k]);
    EXPECT_EQ(height_to_coloring(asm_to_height(a)).entries().to_rows(), atlas::order3_colorings()[k]);
    EXPECT_EQ(asm_to_monotone(a).rows(), atlas::order3_triangles()[k]);
  }
  auto const all = enumerate_asms(3);
  EXPECT_EQ(std::set<Asm>(all.begin(), all.end()), listed);
}

TEST(SixVertex, OrderThreeIceStates) {
  // Horizontal edge rows then vertical edge rows; 1 = right / up.
  std::vector<std::string> const expect = {
      "1110 1100 1000 | 111 110 100 000", "1110 1000 1100 | 111 110 010 000",
      "1100 1110 1000 | 111 101 100 000", "1100 1010 1100 | 111 101 010 000",
      "1100 1000 1110 | 111 101 001 000", "1000 1110 1100 | 111 011 010 000",
      "1000 1100 1110 | 111 011 001 000",
  };
  for (std::size_t k = 0; k < expect.size(); ++k) {
    auto const s = asm_to_six_vertex(Asm::from_rows(atlas::order3_asms()[k]));
    EXPECT_EQ(bits(s.horizontal()) + " | " + bits(s.vertical()), expect[k]) << "state " << k + 1;
  }
}

TEST(SixVertex, VertexTypesEncodeEntries) {
  for (int n = 1; n <= 5; ++n)
    for_each_asm(n, [](Asm const& a) {
      auto const s = asm_to_six_vertex(a);
      auto const tiles = tile_type_map(s);
      for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c) ASSERT_EQ(vertex_entry(tiles(r, c)), a(r, c));
      ASSERT_EQ(six_vertex_to_asm(s), a);
    });
}

TEST(SixVertex, ValidationErrors) {
  BitGrid h(2, 3), v(3, 2);
  EXPECT_EQ(code_of([&] { SixVertexState(h, v); }), Errc::BoundaryViolated);
  auto const s = asm_to_six_vertex(Asm::identity(2));
  BitGrid bad = s.horizontal();
  bad.flip(0, 1);
  auto e = error_of([&] { SixVertexState(bad, s.vertical()); });
  EXPECT_EQ(e.code(), Errc::IceRuleViolated);
  EXPECT_EQ(e.row(), 1);
  EXPECT_EQ(code_of([] { SixVertexState(BitGrid(2, 2), BitGrid(3, 2)); }), Errc::NotSquare);
}

TEST(Fpl, ImageIsFullyPackedAndInvertible) {
  for (int n = 1; n <= 5; ++n)
    for_each_asm(n, [](Asm const& a) {
      auto const s = asm_to_six_vertex(a);
      auto const f = six_vertex_to_fpl(s);
      ASSERT_EQ(fpl_to_six_vertex(f), s);
    });
}

TEST(Fpl, ParityFixesTopLeftStub) {
  EXPECT_FALSE(is_odd_vertex(0, 1));
  EXPECT_TRUE(is_odd_vertex(1, 1));
  // The top-left stub (above internal vertex (1,1)) is always selected.
  EXPECT_TRUE(FplState::boundary_selected_vertical(0, 0));
}

TEST(Fpl, ValidationErrors) {
  auto const f = six_vertex_to_fpl(asm_to_six_vertex(Asm::identity(3)));
  BitGrid h = f.horizontal();
  h.flip(1, 1);
  EXPECT_EQ(code_of([&] { FplState(h, f.vertical()); }), Errc::InvariantViolated);
  BitGrid b = f.horizontal();
  b.flip(0, 0);
  EXPECT_EQ(code_of([&] { FplState(b, f.vertical()); }), Errc::BoundaryViolated);
}

TEST(LinkPattern, ValidationAndSymmetries) {
  LinkPattern const p({{1, 12}, {2, 11}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
  EXPECT_EQ(p.key(), "1-12,2-11,3-4,5-6,7-8,9-10");
  EXPECT_EQ(p.partner(11), 2);
  EXPECT_EQ(p.rotated().key(), "1-2,3-12,4-5,6-7,8-9,10-11");
  EXPECT_EQ(p.reflected().key(), "1-12,2-11,3-4,5-6,7-8,9-10");
  EXPECT_EQ(LinkPattern::adjacent_pairs(3).key(), "1-2,3-4,5-6");
  EXPECT_EQ(code_of([] { LinkPattern({{1, 3}, {2, 4}}); }), Errc::InvariantViolated);
  EXPECT_EQ(code_of([] { LinkPattern({{1, 4}, {2, 5}, {3, 6}}); }), Errc::CrossingDetected);
  EXPECT_EQ(code_of([] { LinkPattern({}); }), Errc::ZeroOrder);
}

TEST(RoundTrip, EveryRepresentationUpToOrderFive) {
  for (int n = 1; n <= 5; ++n)
    for_each_asm(n, [](Asm const& a) {
      ASSERT_EQ(corner_sum_to_asm(asm_to_corner_sum(a)), a);
      ASSERT_EQ(height_to_asm(asm_to_height(a)), a);
      ASSERT_EQ(height_to_asm(coloring_to_height(height_to_coloring(asm_to_height(a)))), a);
      ASSERT_EQ(monotone_to_asm(asm_to_monotone(a)), a);
      ASSERT_EQ(six_vertex_to_asm(fpl_to_six_vertex(six_vertex_to_fpl(asm_to_six_vertex(a)))), a);
    });
}
