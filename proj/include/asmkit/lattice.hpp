#pragma once

// The distributive lattice of height functions, its poset of join-irreducibles
// (a tetrahedral stack of C(n+1,3) elements) and order ideals of that poset.
//
// Element (i,j,l) sits over interior site (i,j) at level l, with
// 0 <= l < (hmax(i,j) - hmin(i,j)) / 2. A height function h contains (i,j,l)
// in its ideal iff l < (hmax(i,j) - h(i,j)) / 2, so the maximum height
// function has the empty ideal and the minimum one the full ideal. The
// tetrahedron's orientation is fixed by this choice; the mirror convention
// (counting up from hmin) gives an isomorphic poset.

#include <algorithm>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/core.hpp"
#include "asmkit/error.hpp"

namespace asmkit {

inline HeightFunction join(HeightFunction const& a, HeightFunction const& b) {
  if (a.n() != b.n()) throw Error(Errc::OrderMismatch, "height functions of different orders");
  int const n = a.n();
  Grid<int> g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) g(i, j) = std::max(a(i, j), b(i, j));
  return HeightFunction(std::move(g));
}

inline HeightFunction meet(HeightFunction const& a, HeightFunction const& b) {
  if (a.n() != b.n()) throw Error(Errc::OrderMismatch, "height functions of different orders");
  int const n = a.n();
  Grid<int> g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) g(i, j) = std::min(a(i, j), b(i, j));
  return HeightFunction(std::move(g));
}

struct PosetElement {
  int i = 0;
  int j = 0;
  int level = 0;
  int rank = 0;

  friend bool operator==(PosetElement const&, PosetElement const&) = default;
};

class TetraPoset {
 public:
  explicit TetraPoset(int n) : n_(n) {
    if (n < 1) throw Error(Errc::ZeroOrder, "order must be at least 1");
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        for (int l = 0; l < fiber_size(i, j); ++l) {
          index_[{i, j, l}] = static_cast<int>(elements_.size());
          elements_.push_back({i, j, l, n - max_height(n, i, j) + 2 * l});
        }
    build_covers();
  }

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  std::vector<PosetElement> const& elements() const noexcept { return elements_; }
  PosetElement const& element(int k) const { return elements_[k]; }

  int fiber_size(int i, int j) const { return (max_height(n_, i, j) - min_height(i, j)) / 2; }

  /// Index of (i,j,l), or -1 when there is no such element.
  int index_of(int i, int j, int l) const {
    auto it = index_.find({i, j, l});
    return it == index_.end() ? -1 : it->second;
  }

  /// Elements covered by element k.
  std::vector<int> const& lower_covers(int k) const { return lower_[k]; }
  /// Elements covering element k.
  std::vector<int> const& upper_covers(int k) const { return upper_[k]; }

  bool leq(int a, int b) const { return a == b || below_[b][a]; }

  /// Number of elements at each rank 0..n-2.
  std::vector<int> rank_sizes() const {
    std::vector<int> out(std::max(0, n_ - 1), 0);
    for (auto const& e : elements_) ++out[e.rank];
    return out;
  }

 private:
  // Generating relations: the fiber chain, plus the adjacency constraint
  // |h - h'| = 1 written on levels. For a neighbour with hmax' = hmax + 1,
  // (i',j',l) <= (i,j,l); with hmax' = hmax - 1, (i',j',l-1) <= (i,j,l).
  void build_covers() {
    int const m = size();
    std::vector<std::vector<int>> gen(m);
    for (int k = 0; k < m; ++k) {
      auto const& e = elements_[k];
      if (e.level > 0) gen[k].push_back(index_of(e.i, e.j, e.level - 1));
      int const hm = max_height(n_, e.i, e.j);
      for (auto [di, dj] : {std::pair{-1, 0}, std::pair{1, 0}, std::pair{0, -1}, std::pair{0, 1}}) {
        int const i2 = e.i + di, j2 = e.j + dj;
        if (i2 < 1 || j2 < 1 || i2 >= n_ || j2 >= n_) continue;
        int const l2 = max_height(n_, i2, j2) == hm + 1 ? e.level : e.level - 1;
        if (int const y = index_of(i2, j2, l2); y >= 0) gen[k].push_back(y);
      }
    }
    // Transitive closure, processing elements by rank so lower sets are final.
    std::vector<int> order(m);
    for (int k = 0; k < m; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return elements_[a].rank < elements_[b].rank; });
    below_.assign(m, std::vector<bool>(m, false));
    for (int k : order)
      for (int y : gen[k]) {
        below_[k][y] = true;
        for (int z = 0; z < m; ++z)
          if (below_[y][z]) below_[k][z] = true;
      }
    lower_.assign(m, {});
    upper_.assign(m, {});
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        if (!below_[x][y]) continue;
        bool cover = true;
        for (int z = 0; z < m && cover; ++z)
          if (below_[x][z] && below_[z][y]) cover = false;
        if (cover) {
          lower_[x].push_back(y);
          upper_[y].push_back(x);
        }
      }
  }

  int n_;
  std::vector<PosetElement> elements_;
  std::map<std::tuple<int, int, int>, int> index_;
  std::vector<std::vector<bool>> below_;  // below_[x][y]: y < x
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
};

inline std::shared_ptr<TetraPoset const> build_poset(int n) { return std::make_shared<TetraPoset const>(n); }

class OrderIdeal {
 public:
  OrderIdeal(std::shared_ptr<TetraPoset const> poset, std::vector<bool> members)
      : poset_(std::move(poset)), members_(std::move(members)) {
    if (static_cast<int>(members_.size()) != poset_->size())
      throw Error(Errc::InvariantViolated, "membership vector has wrong length");
    for (int x = 0; x < poset_->size(); ++x) {
      if (!members_[x]) continue;
      for (int y : poset_->lower_covers(x))
        if (!members_[y]) {
          auto const& e = poset_->element(x);
          throw Error(Errc::NotDownwardClosed,
                      "element (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                          std::to_string(e.level) + ") present without an element below it");
        }
    }
  }

  TetraPoset const& poset() const noexcept { return *poset_; }
  std::shared_ptr<TetraPoset const> const& poset_ptr() const noexcept { return poset_; }
  std::vector<bool> const& members() const noexcept { return members_; }
  bool contains(int k) const { return members_[k]; }
  int size() const { return static_cast<int>(std::count(members_.begin(), members_.end(), true)); }

  /// Members as (i,j,level), sorted.
  std::vector<std::tuple<int, int, int>> triples() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int k = 0; k < poset_->size(); ++k)
      if (members_[k]) {
        auto const& e = poset_->element(k);
        out.emplace_back(e.i, e.j, e.level);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(OrderIdeal const& a, OrderIdeal const& b) {
    return a.poset_->n() == b.poset_->n() && a.members_ == b.members_;
  }

 private:
  std::shared_ptr<TetraPoset const> poset_;
  std::vector<bool> members_;
};

inline OrderIdeal ideal_union(OrderIdeal const& a, OrderIdeal const& b) {
  std::vector<bool> m(a.members().size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = a.members()[k] || b.members()[k];
  return OrderIdeal(a.poset_ptr(), std::move(m));
}

inline OrderIdeal ideal_intersection(OrderIdeal const& a, OrderIdeal const& b) {
  std::vector<bool> m(a.members().size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = a.members()[k] && b.members()[k];
  return OrderIdeal(a.poset_ptr(), std::move(m));
}

inline OrderIdeal height_to_ideal(HeightFunction const& h, std::shared_ptr<TetraPoset const> poset) {
  if (poset->n() != h.n()) throw Error(Errc::OrderMismatch, "poset and height function orders differ");
  std::vector<bool> m(poset->size(), false);
  for (int k = 0; k < poset->size(); ++k) {
    auto const& e = poset->element(k);
    m[k] = e.level < (max_height(h.n(), e.i, e.j) - h(e.i, e.j)) / 2;
  }
  return OrderIdeal(std::move(poset), std::move(m));
}

inline OrderIdeal height_to_ideal(HeightFunction const& h) { return height_to_ideal(h, build_poset(h.n())); }

inline HeightFunction ideal_to_height(OrderIdeal const& ideal) {
  auto const& p = ideal.poset();
  int const n = p.n();
  Grid<int> g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) g(i, j) = max_height(n, i, j);
  for (int k = 0; k < p.size(); ++k)
    if (ideal.contains(k)) {
      auto const& e = p.element(k);
      g(e.i, e.j) -= 2;
    }
  return HeightFunction(std::move(g));
}

/// Number of order ideals, by a transfer over rows of interior sites. A row
/// profile is the number of elements taken from each fiber of the row; the
/// poset's cover relations are the only constraints consulted.
inline BigCount count_ideals(TetraPoset const& p) {
  int const n = p.n();
  if (n <= 1) return 1;
  int const w = n - 1;  // sites per row, columns 1..n-1
  struct Constraint {
    int upper_j, upper_level, lower_j, lower_level;  // upper taken => lower taken
  };
  // intra[j]: constraints within a row whose later column is j; inter[i]:
  // constraints between site rows i and i+1, stored as (upper in row i?).
  std::vector<std::vector<std::vector<Constraint>>> intra(n, std::vector<std::vector<Constraint>>(n));
  struct Cross {
    bool upper_in_first;
    Constraint c;
  };
  std::vector<std::vector<Cross>> inter(n);
  for (int x = 0; x < p.size(); ++x)
    for (int y : p.lower_covers(x)) {
      auto const& ex = p.element(x);
      auto const& ey = p.element(y);
      Constraint c{ex.j, ex.level, ey.j, ey.level};
      if (ex.i == ey.i) {
        if (ex.j != ey.j) intra[ex.i][std::max(ex.j, ey.j)].push_back(c);
      } else {
        int const first = std::min(ex.i, ey.i);
        inter[first].push_back({ex.i == first, c});
      }
    }
  auto holds = [](Constraint const& c, int upper_taken, int lower_taken) {
    return !(upper_taken > c.upper_level) || lower_taken > c.lower_level;
  };
  auto row_states = [&](int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> k(w + 1, 0);  // k[j], j = 1..w
    auto rec = [&](auto&& self, int j) -> void {
      if (j > w) {
        out.push_back(k);
        return;
      }
      for (int t = 0; t <= p.fiber_size(i, j); ++t) {
        k[j] = t;
        bool ok = true;
        for (auto const& c : intra[i][j]) ok = ok && holds(c, k[c.upper_j], k[c.lower_j]);
        if (ok) self(self, j + 1);
      }
    };
    rec(rec, 1);
    return out;
  };
  std::vector<std::vector<int>> prev_states = row_states(1);
  std::vector<BigCount> prev_counts(prev_states.size(), 1);
  for (int i = 2; i <= w; ++i) {
    auto states = row_states(i);
    std::vector<BigCount> counts(states.size(), 0);
    for (std::size_t a = 0; a < prev_states.size(); ++a)
      for (std::size_t b = 0; b < states.size(); ++b) {
        bool ok = true;
        for (auto const& x : inter[i - 1]) {
          auto const& up = x.upper_in_first ? prev_states[a] : states[b];
          auto const& lo = x.upper_in_first ? states[b] : prev_states[a];
          ok = ok && holds(x.c, up[x.c.upper_j], lo[x.c.lower_j]);
          if (!ok) break;
        }
        if (ok) counts[b] += prev_counts[a];
      }
    prev_states = std::move(states);
    prev_counts = std::move(counts);
  }
  BigCount total = 0;
  for (auto const& c : prev_counts) total += c;
  return total;
}

}  // namespace asmkit
