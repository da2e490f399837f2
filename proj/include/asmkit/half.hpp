#pragma once

// Half boards: the (n+1) x (2n+1) partial height-function matrices forming the
// top half of an order-2n height function, and the half-ASMs they induce.

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/enumerate.hpp"
#include "asmkit/error.hpp"
#include "asmkit/grid.hpp"

namespace asmkit {

/// Bottom row n, n+c_1, n, n+c_2, ..., n+c_n, n with each c_i = +-1.
struct FixedAlternating {
  std::vector<int> c;
};
/// Bottom row free apart from its two end cells.
struct FreeBottom {};

struct HalfSpec {
  int n = 0;
  std::variant<FixedAlternating, FreeBottom> variant;

  void validate() const {
    if (n < 1) throw Error(Errc::ZeroOrder, "half-order must be at least 1");
    if (auto const* f = std::get_if<FixedAlternating>(&variant)) {
      if (static_cast<int>(f->c.size()) != n)
        throw Error(Errc::InvariantViolated, "boundary vector must have length n");
      for (int v : f->c)
        if (v != 1 && v != -1) throw Error(Errc::InvariantViolated, "boundary entries must be +1 or -1");
    }
  }
};

/// A half board is a HeightFunction-like array with every cell of the first
/// row and the two side columns fixed, plus a mask of fixed bottom cells.
struct HalfBoard {
  int n = 0;
  Grid<int> values;  // (n+1) x (2n+1); only fixed cells are meaningful before filling
  Grid<int> fixed;   // 1 where the value is prescribed

  static HalfBoard from_spec(HalfSpec const& spec) {
    spec.validate();
    int const n = spec.n, w = 2 * n + 1;
    HalfBoard b{n, Grid<int>(n + 1, w, 0), Grid<int>(n + 1, w, 0)};
    auto fix = [&](int i, int j, int v) {
      b.values(i, j) = v;
      b.fixed(i, j) = 1;
    };
    for (int j = 0; j < w; ++j) fix(0, j, j);
    for (int i = 0; i <= n; ++i) {
      fix(i, 0, i);
      fix(i, w - 1, 2 * n - i);
    }
    if (auto const* f = std::get_if<FixedAlternating>(&spec.variant)) {
      for (int m = 1; m <= n; ++m) {
        fix(n, 2 * m - 1, n + f->c[m - 1]);
        fix(n, 2 * m, n);
      }
    }
    return b;
  }

  /// Half-ASM entry a_{i,j} (1-based, 1 <= i <= n, 1 <= j <= 2n) of a filled board.
  int half_asm_entry(int i, int j) const {
    return (values(i - 1, j) + values(i, j - 1) - values(i, j) - values(i - 1, j - 1)) / 2;
  }

  Grid<int> half_asm() const {
    Grid<int> a(n, 2 * n, 0);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= 2 * n; ++j) a(i - 1, j - 1) = half_asm_entry(i, j);
    return a;
  }
};

namespace detail {

using HalfRow = std::vector<int>;
using HalfPoly = std::vector<BigCount>;

inline std::uint64_t encode_half_row(HalfRow const& r) {
  std::uint64_t m = 0;
  for (std::size_t j = 1; j < r.size(); ++j)
    if (r[j] < r[j - 1]) m |= std::uint64_t{1} << (j - 1);
  return m;
}

inline HalfRow decode_half_row(std::uint64_t m, int start, int width) {
  HalfRow r(width);
  r[0] = start;
  for (int j = 1; j < width; ++j) r[j] = r[j - 1] + (((m >> (j - 1)) & 1u) ? -1 : 1);
  return r;
}

/// Enumerates rows q that can sit below p on the board: q starts at `start`,
/// ends at `end`, moves by one between neighbours and by one from p, and
/// honours any fixed cells in `fixed_row`.
template <class Visit>
void for_each_half_successor(HalfRow const& p, int start, int end, HalfRow const* fixed_values,
                             std::vector<int> const* fixed_mask, Visit&& visit) {
  int const w = static_cast<int>(p.size());
  HalfRow q(w);
  q[0] = start;
  if (std::abs(q[0] - p[0]) != 1) return;
  auto rec = [&](auto&& self, int j) -> void {
    if (j == w) {
      if (q[w - 1] == end) visit(q);
      return;
    }
    for (int v : {p[j] - 1, p[j] + 1}) {
      if (std::abs(v - q[j - 1]) != 1) continue;
      if (fixed_mask && (*fixed_mask)[j] && (*fixed_values)[j] != v) continue;
      q[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 1);
}

inline int count_minus_ones(HalfRow const& p, HalfRow const& q) {
  int k = 0;
  for (std::size_t j = 1; j < p.size(); ++j)
    if ((p[j] + q[j - 1] - q[j] - p[j - 1]) / 2 == -1) ++k;
  return k;
}

inline void add_shifted(HalfPoly& into, HalfPoly const& p, int shift) {
  if (into.size() < p.size() + shift) into.resize(p.size() + shift);
  for (std::size_t k = 0; k < p.size(); ++k) into[k + shift] += p[k];
}

/// Row states of rows 0..n-1 with, per state, the distribution of -1 counts in
/// the half-ASM rows generated so far.
inline std::map<std::uint64_t, HalfPoly> half_layers_until_last(int n) {
  int const w = 2 * n + 1;
  HalfRow top(w);
  for (int j = 0; j < w; ++j) top[j] = j;
  std::map<std::uint64_t, HalfPoly> layer{{encode_half_row(top), HalfPoly{1}}};
  for (int i = 0; i + 1 < n; ++i) {
    std::map<std::uint64_t, HalfPoly> next;
    for (auto const& [m, poly] : layer) {
      HalfRow const p = decode_half_row(m, i, w);
      for_each_half_successor(p, i + 1, 2 * n - i - 1, nullptr, nullptr, [&](HalfRow const& q) {
        add_shifted(next[encode_half_row(q)], poly, count_minus_ones(p, q));
      });
    }
    layer = std::move(next);
  }
  return layer;
}

/// Distribution of -1 counts over all fillings of the board for `spec`.
inline HalfPoly half_distribution(HalfSpec const& spec,
                                  std::map<std::uint64_t, HalfPoly> const& upper_layers) {
  int const n = spec.n, w = 2 * n + 1;
  HalfBoard const board = HalfBoard::from_spec(spec);
  HalfRow const bottom_values(board.values.row(n).begin(), board.values.row(n).end());
  std::vector<int> const bottom_mask(board.fixed.row(n).begin(), board.fixed.row(n).end());
  HalfPoly out;
  for (auto const& [m, poly] : upper_layers) {
    HalfRow const p = decode_half_row(m, n - 1, w);
    for_each_half_successor(p, n, n, &bottom_values, &bottom_mask,
                            [&](HalfRow const& q) { add_shifted(out, poly, count_minus_ones(p, q)); });
  }
  if (out.empty()) out.push_back(0);
  return out;
}

inline BigCount poly_sum(HalfPoly const& p, int base) {
  BigCount acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * base + *it;
  return acc;
}

}  // namespace detail

/// Number of completions N(c) of the half board with fixed alternating bottom row.
inline BigCount half_count(HalfSpec const& spec) {
  spec.validate();
  if (!std::holds_alternative<FixedAlternating>(spec.variant))
    throw Error(Errc::InvariantViolated, "half_count needs a FixedAlternating boundary");
  return detail::poly_sum(detail::half_distribution(spec, detail::half_layers_until_last(spec.n)), 1);
}

/// Sum over completions of 2^(number of -1 entries in the induced half-ASM).
inline BigCount half_2_enumeration(HalfSpec const& spec) {
  spec.validate();
  return detail::poly_sum(detail::half_distribution(spec, detail::half_layers_until_last(spec.n)), 2);
}

/// half_2_enumeration summed over all 2^n FixedAlternating boundary vectors.
inline BigCount half_2_enumeration_fixed_total(int n) {
  if (n < 1) throw Error(Errc::ZeroOrder, "half-order must be at least 1");
  auto const upper = detail::half_layers_until_last(n);
  BigCount total = 0;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    FixedAlternating f;
    for (int k = 0; k < n; ++k) f.c.push_back(((bits >> k) & 1u) ? -1 : 1);
    total += detail::poly_sum(detail::half_distribution({n, f}, upper), 2);
  }
  return total;
}

struct HalfAverage {
  int k = 0;               // sum of the boundary vector
  int vectors = 0;         // how many boundary vectors have that sum
  BigCount total = 0;      // sum of N(c) over them
  Rational average = 0;
};

struct HalfAverageReport {
  int n = 0;
  std::vector<HalfAverage> by_k;  // k = -n, -n+2, ..., n
  bool all_equal = false;
};

/// Averages N(c) over boundary vectors grouped by their sum.
inline HalfAverageReport half_average_property(int n) {
  if (n < 1) throw Error(Errc::ZeroOrder, "half-order must be at least 1");
  if (n > 20) throw Error(Errc::InvariantViolated, "half_average_property supports n <= 20");
  auto const upper = detail::half_layers_until_last(n);
  HalfAverageReport rep;
  rep.n = n;
  for (int k = -n; k <= n; k += 2) rep.by_k.push_back({k, 0, 0, 0});
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    FixedAlternating f;
    int sum = 0;
    for (int t = 0; t < n; ++t) {
      int const c = ((bits >> t) & 1u) ? -1 : 1;
      f.c.push_back(c);
      sum += c;
    }
    auto& slot = rep.by_k[(sum + n) / 2];
    slot.total += detail::poly_sum(detail::half_distribution({n, f}, upper), 1);
    ++slot.vectors;
  }
  for (auto& s : rep.by_k) s.average = Rational(s.total) / s.vectors;
  rep.all_equal = true;
  for (auto const& s : rep.by_k) rep.all_equal = rep.all_equal && s.average == rep.by_k.front().average;
  return rep;
}

}  // namespace asmkit
