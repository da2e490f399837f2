#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <vector>

#include "asmkit/atlas.hpp"
#include "asmkit/fpl.hpp"

using namespace asmkit;

namespace {

using Point = std::pair<int, int>;
using Polyline = std::vector<Point>;

// Builds an FPL state from drawn polylines. Drawing coordinates: x grows to
// the right, y grows upward, and the order-n drawing spans 1..n+2 both ways.
FplState from_lines(int n, std::vector<Polyline> const& lines) {
  BitGrid h(n, n + 1), v(n + 1, n);
  int const top = n + 2;
  for (auto const& l : lines)
    for (std::size_t k = 1; k < l.size(); ++k) {
      auto [x0, y0] = l[k - 1];
      auto const [x1, y1] = l[k];
      while (x0 != x1 || y0 != y1) {
        int const nx = x0 + (x1 > x0) - (x1 < x0), ny = y0 + (y1 > y0) - (y1 < y0);
        if (ny == y0) {
          h.set(top - y0 - 1, std::min(x0, nx) - 1, true);
        } else {
          v.set(top - std::max(y0, ny), x0 - 2, true);
        }
        x0 = nx;
        y0 = ny;
      }
    }
  return FplState(h, v);
}

std::vector<Polyline> const kOrder3Stubs = {{{2, 4}, {2, 5}}, {{4, 4}, {4, 5}}, {{2, 1}, {2, 2}},
                                            {{4, 1}, {4, 2}}, {{1, 3}, {2, 3}}, {{4, 3}, {5, 3}}};

std::vector<std::vector<Polyline>> const kOrder3Drawings = {
    {{{2, 4}, {3, 4}, {3, 2}, {4, 2}}, {{4, 4}, {4, 3}}, {{2, 2}, {2, 3}}},
    {{{2, 4}, {3, 4}, {3, 3}, {2, 3}}, {{4, 4}, {4, 3}}, {{2, 2}, {4, 2}}},
    {{{2, 4}, {4, 4}}, {{2, 2}, {2, 3}}, {{4, 2}, {3, 2}, {3, 3}, {4, 3}}},
    {{{2, 4}, {4, 4}}, {{2, 3}, {4, 3}}, {{2, 2}, {4, 2}}},
    {{{2, 4}, {4, 4}}, {{2, 3}, {3, 3}, {3, 2}, {2, 2}}, {{4, 2}, {4, 3}}},
    {{{2, 4}, {2, 3}}, {{2, 2}, {4, 2}}, {{4, 4}, {3, 4}, {3, 3}, {4, 3}}},
    {{{2, 4}, {2, 3}}, {{4, 3}, {4, 2}}, {{4, 4}, {3, 4}, {3, 2}, {2, 2}}},
};

std::vector<Polyline> const kOrder6Drawing = {
    {{1, 6}, {2, 6}, {2, 8}},
    {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {3, 7}, {4, 7}, {4, 8}},
    {{1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 2}, {3, 2}, {3, 1}},
    {{6, 8}, {6, 7}, {5, 7}, {5, 6}, {4, 6}, {4, 5}, {6, 5}, {6, 6}, {7, 6}, {7, 7}, {8, 7}},
    {{8, 5}, {7, 5}, {7, 3}, {8, 3}},
    {{5, 1}, {5, 2}, {7, 2}, {7, 1}},
    {{5, 3}, {6, 3}, {6, 4}, {5, 4}, {5, 3}},
};

// Link pattern by connected components of the selected edges, ignoring the
// walk order entirely.
LinkPattern pattern_by_components(FplState const& f) {
  int const n = f.n(), side = n + 2;
  std::vector<int> parent(side * side);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto id = [&](int r, int c) { return r * side + c; };
  for (int r = 0; r < n; ++r)
    for (int e = 0; e <= n; ++e)
      if (f.horizontal().get(r, e)) parent[find(id(r + 1, e))] = find(id(r + 1, e + 1));
  for (int e = 0; e <= n; ++e)
    for (int c = 0; c < n; ++c)
      if (f.vertical().get(e, c)) parent[find(id(e, c + 1))] = find(id(e + 1, c + 1));
  auto const stubs = stub_vertices(f);
  std::map<int, std::vector<int>> by_root;
  for (std::size_t k = 0; k < stubs.size(); ++k)
    by_root[find(id(stubs[k].first, stubs[k].second))].push_back(static_cast<int>(k) + 1);
  std::vector<std::pair<int, int>> pairs;
  for (auto const& [root, labels] : by_root) {
    EXPECT_EQ(labels.size(), 2u);
    pairs.emplace_back(labels.front(), labels.back());
  }
  return LinkPattern(pairs);
}

}  // namespace

TEST(FplGolden, OrderThreeDrawings) {
  auto const& asms = atlas::order3_asms();
  for (std::size_t k = 0; k < asms.size(); ++k) {
    auto lines = kOrder3Stubs;
    lines.insert(lines.end(), kOrder3Drawings[k].begin(), kOrder3Drawings[k].end());
    auto const drawn = from_lines(3, lines);
    EXPECT_EQ(six_vertex_to_fpl(asm_to_six_vertex(Asm::from_rows(asms[k]))), drawn) << "state " << k + 1;
  }
}

TEST(FplGolden, OrderSixLinkPattern) {
  auto const f = from_lines(6, kOrder6Drawing);
  auto const d = link_pattern(f);
  EXPECT_EQ(d.pattern.key(), "1-12,2-11,3-4,5-6,7-8,9-10");
  EXPECT_EQ(d.open_paths.size(), 6u);
  ASSERT_EQ(d.closed_loops.size(), 1u);
  EXPECT_EQ(d.closed_loops.front().size(), 4u);
  EXPECT_EQ(stub_vertices(f).front(), (GridVertex{0, 1}));
  // The drawing is a genuine ice state.
  EXPECT_NO_THROW(six_vertex_to_asm(fpl_to_six_vertex(f)));
}

TEST(FplDecomposition, PathsCoverEveryEdgeOnce) {
  for_each_asm(5, [](Asm const& a) {
    auto const f = six_vertex_to_fpl(asm_to_six_vertex(a));
    auto const d = link_pattern(f);
    std::size_t edges = 0;
    for (auto const& p : d.open_paths) {
      edges += p.vertices.size() - 1;
      ASSERT_EQ(d.pattern.partner(p.from), p.to);
    }
    for (auto const& l : d.closed_loops) edges += l.size();
    std::size_t selected = 0;
    for (int r = 0; r < 5; ++r)
      for (int e = 0; e <= 5; ++e) selected += f.horizontal().get(r, e) + f.vertical().get(e, r);
    ASSERT_EQ(edges, selected);
  });
}

TEST(FplHistogram, MatchesComponentOracle) {
  for (int n = 1; n <= 5; ++n) {
    LinkHistogram expect;
    for_each_asm(n, [&](Asm const& a) { ++expect[pattern_by_components(six_vertex_to_fpl(asm_to_six_vertex(a)))]; });
    EXPECT_EQ(count_by_link_pattern(n), expect) << "n=" << n;
  }
}

TEST(FplHistogram, TotalsAndPatternCounts) {
  std::vector<int> const catalan = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    auto const h = count_by_link_pattern(n);
    BigCount total = 0;
    for (auto const& [p, c] : h) total += c;
    EXPECT_EQ(total, count_formula(n));
    EXPECT_EQ(static_cast<int>(h.size()), catalan[n - 1]) << "every pattern occurs, n=" << n;
  }
  EXPECT_THROW(count_by_link_pattern(8), Error);
}

TEST(FplHistogram, RotationAndReflectionInvariance) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(wieland_check(n).holds()) << "n=" << n;
}

TEST(FplHistogram, NestingCount) {
  for (int n = 2; n <= 6; ++n) {
    auto const r = nesting_check(n);
    EXPECT_TRUE(r.equal) << "n=" << n;
    EXPECT_EQ(r.count, count_formula(n - 1));
  }
  EXPECT_THROW(nesting_check(1), Error);
}

TEST(FplHistogram, OneTwoLinking) {
  std::vector<int> const counts = {1, 1, 3, 17, 169, 2886};
  for (int n = 1; n <= 6; ++n) {
    auto const r = wilson_fraction(n);
    EXPECT_EQ(r.count, counts[n - 1]);
    EXPECT_TRUE(r.equal) << "n=" << n;
    EXPECT_EQ(wilson_prediction(n), counts[n - 1]);
  }
  for (int n = 1; n <= 40; ++n) {
    auto const q = wilson_prediction_exact(n);
    if (is_integer(q)) {
      EXPECT_NO_THROW(wilson_prediction(n));
    } else {
      try {
        wilson_prediction(n);
        ADD_FAILURE() << "expected NonIntegerPrediction at n=" << n;
      } catch (Error const& e) {
        EXPECT_EQ(e.code(), Errc::NonIntegerPrediction);
      }
    }
  }
}
