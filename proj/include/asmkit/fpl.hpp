#pragma once

// Fully packed loops: path/loop decomposition, link-pattern histograms and the
// rotation/reflection, nesting and 1-2 linking checks.

#include <map>
#include <utility>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/core.hpp"
#include "asmkit/enumerate.hpp"
#include "asmkit/error.hpp"

namespace asmkit {

/// Vertex of the tic-tac-toe graph in grid coordinates (see is_odd_vertex).
using GridVertex = std::pair<int, int>;

struct OpenPath {
  int from = 0;  // stub label
  int to = 0;
  std::vector<GridVertex> vertices;  // external end to external end
};

struct FplDecomposition {
  LinkPattern pattern;
  std::vector<OpenPath> open_paths;                   // one per arc, from its smaller label
  std::vector<std::vector<GridVertex>> closed_loops;  // first vertex not repeated
};

/// Selected boundary stubs in clockwise order from the top-left one; entry k
/// is the external vertex labelled k+1.
inline std::vector<GridVertex> stub_vertices(FplState const& f) {
  int const n = f.n();
  std::vector<GridVertex> out;
  for (int c = 0; c < n; ++c)
    if (f.vertical().get(0, c)) out.emplace_back(0, c + 1);
  for (int r = 0; r < n; ++r)
    if (f.horizontal().get(r, n)) out.emplace_back(r + 1, n + 1);
  for (int c = n - 1; c >= 0; --c)
    if (f.vertical().get(n, c)) out.emplace_back(n + 1, c + 1);
  for (int r = n - 1; r >= 0; --r)
    if (f.horizontal().get(r, 0)) out.emplace_back(r + 1, 0);
  return out;
}

namespace detail {

class FplWalker {
 public:
  explicit FplWalker(FplState const& f) : f_(f), n_(f.n()), used_(2 * n_ * (n_ + 1), false) {}

  bool external(GridVertex v) const {
    return v.first == 0 || v.second == 0 || v.first == n_ + 1 || v.second == n_ + 1;
  }

  // Selected edges at v as (edge id, other end).
  std::vector<std::pair<int, GridVertex>> incident(GridVertex v) const {
    auto [gr, gc] = v;
    std::vector<std::pair<int, GridVertex>> out;
    if (gc >= 1 && gc <= n_) {
      if (gr >= 1 && f_.vertical().get(gr - 1, gc - 1)) out.push_back({vid(gr - 1, gc - 1), {gr - 1, gc}});
      if (gr <= n_ && f_.vertical().get(gr, gc - 1)) out.push_back({vid(gr, gc - 1), {gr + 1, gc}});
    }
    if (gr >= 1 && gr <= n_) {
      if (gc >= 1 && f_.horizontal().get(gr - 1, gc - 1)) out.push_back({hid(gr - 1, gc - 1), {gr, gc - 1}});
      if (gc <= n_ && f_.horizontal().get(gr - 1, gc)) out.push_back({hid(gr - 1, gc), {gr, gc + 1}});
    }
    return out;
  }

  // Follows unused edges from v until it cannot continue; returns visited vertices.
  std::vector<GridVertex> walk(GridVertex v) {
    std::vector<GridVertex> path{v};
    for (;;) {
      bool moved = false;
      for (auto const& [id, w] : incident(path.back()))
        if (!used_[id]) {
          used_[id] = true;
          path.push_back(w);
          moved = true;
          break;
        }
      if (!moved || external(path.back())) return path;
    }
  }

  std::vector<std::vector<GridVertex>> remaining_loops() {
    std::vector<std::vector<GridVertex>> loops;
    for (int r = 1; r <= n_; ++r)
      for (int c = 1; c <= n_; ++c)
        for (auto const& [id, w] : incident({r, c}))
          if (!used_[id]) {
            auto cyc = walk({r, c});
            if (cyc.back() != GridVertex{r, c}) throw Error(Errc::InvariantViolated, "open path without stub");
            cyc.pop_back();
            loops.push_back(std::move(cyc));
          }
    return loops;
  }

 private:
  int hid(int r, int e) const { return r * (n_ + 1) + e; }
  int vid(int e, int c) const { return n_ * (n_ + 1) + e * n_ + c; }

  FplState const& f_;
  int n_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Traces every open path from its stub and collects the closed loops. Throws
/// CrossingDetected if the arcs cross, which a valid state cannot produce.
inline FplDecomposition link_pattern(FplState const& f) {
  auto const stubs = stub_vertices(f);
  int const m = static_cast<int>(stubs.size());
  if (m != 2 * f.n()) throw Error(Errc::BoundaryViolated, "expected 2n selected stubs");
  std::map<GridVertex, int> label;
  for (int k = 0; k < m; ++k) label[stubs[k]] = k + 1;
  detail::FplWalker walker(f);
  std::vector<OpenPath> paths;
  std::vector<bool> done(m + 1, false);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= m; ++k) {
    if (done[k]) continue;
    auto verts = walker.walk(stubs[k - 1]);
    auto it = label.find(verts.back());
    if (verts.size() < 2 || it == label.end())
      throw Error(Errc::InvariantViolated, "path from stub " + std::to_string(k) + " does not end at a stub");
    done[k] = done[it->second] = true;
    pairs.emplace_back(k, it->second);
    paths.push_back({k, it->second, std::move(verts)});
  }
  LinkPattern pattern(std::move(pairs));
  return {std::move(pattern), std::move(paths), walker.remaining_loops()};
}

inline LinkPattern link_pattern_of(Asm const& a) {
  return link_pattern(six_vertex_to_fpl(asm_to_six_vertex(a))).pattern;
}

using LinkHistogram = std::map<LinkPattern, BigCount>;

/// Number of FPL states of order n with each link pattern.
inline LinkHistogram count_by_link_pattern(int n) {
  if (n > 7) throw Error(Errc::InvariantViolated, "link-pattern histogram supports n <= 7");
  return reduce_asms<LinkHistogram>(
      n, LinkHistogram{}, [](LinkHistogram& h, Asm const& a) { ++h[link_pattern_of(a)]; },
      [](LinkHistogram& into, LinkHistogram const& part) {
        for (auto const& [p, c] : part) into[p] += c;
      });
}

inline BigCount histogram_count(LinkHistogram const& h, LinkPattern const& p) {
  auto it = h.find(p);
  return it == h.end() ? BigCount(0) : it->second;
}

struct WielandReport {
  int n = 0;
  LinkHistogram histogram;
  bool rotation_invariant = false;
  bool reflection_invariant = false;
  bool holds() const { return rotation_invariant && reflection_invariant; }
};

inline WielandReport wieland_check(int n) {
  WielandReport r{n, count_by_link_pattern(n)};
  r.rotation_invariant = r.reflection_invariant = true;
  for (auto const& [p, c] : r.histogram) {
    if (histogram_count(r.histogram, p.rotated()) != c) r.rotation_invariant = false;
    if (histogram_count(r.histogram, p.reflected()) != c) r.reflection_invariant = false;
  }
  return r;
}

struct NestingReport {
  int n = 0;
  BigCount count = 0;     // states linking 1-2, 3-4, ..., (2n-1)-2n
  BigCount expected = 0;  // A(n-1)
  bool equal = false;
};

inline NestingReport nesting_check(int n) {
  if (n < 2) throw Error(Errc::InvariantViolated, "nesting check needs n >= 2");
  auto const h = count_by_link_pattern(n);
  NestingReport r{n, histogram_count(h, LinkPattern::adjacent_pairs(n)), count_formula(n - 1)};
  r.equal = r.count == r.expected;
  return r;
}

/// A(n) * (3/2) * (n^2+1) / (4n^2-1).
inline Rational wilson_prediction_exact(int n) {
  detail::require_order(n);
  BigInt const nn = BigInt(n) * n;
  return Rational(count_formula(n)) * Rational(3, 2) * Rational(nn + 1, 4 * nn - 1);
}

/// The prediction as an integer; throws NonIntegerPrediction otherwise.
inline BigCount wilson_prediction(int n) {
  auto const q = wilson_prediction_exact(n);
  if (!is_integer(q)) throw Error(Errc::NonIntegerPrediction, "prediction " + to_decimal(q) + " is not an integer");
  return boost::multiprecision::numerator(q);
}

struct WilsonReport {
  int n = 0;
  BigCount count = 0;  // states linking 1 with 2
  Rational predicted = 0;
  bool prediction_integral = false;
  bool equal = false;
};

inline WilsonReport wilson_fraction(int n) {
  WilsonReport r;
  r.n = n;
  r.predicted = wilson_prediction_exact(n);
  r.prediction_integral = is_integer(r.predicted);
  for (auto const& [p, c] : count_by_link_pattern(n))
    if (p.partner(1) == 2) r.count += c;
  r.equal = r.prediction_integral && Rational(r.count) == r.predicted;
  return r;
}

}  // namespace asmkit
