#pragma once

// Exhaustive generation of ASMs and exact (weighted) counting.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/core.hpp"
#include "asmkit/error.hpp"
#include "asmkit/parallel.hpp"

namespace asmkit {

namespace detail {

inline void require_order(int n) {
  if (n < 1) throw Error(Errc::ZeroOrder, "order must be at least 1");
}

/// Depth-first generation of monotone triangles, top row first, each row in
/// increasing lexicographic order. Builds the ASM row by row as row
/// differences of the 0/1 indicator of consecutive triangle rows.
template <class Visit>
class TriangleWalker {
 public:
  TriangleWalker(int n, Visit& visit) : n_(n), visit_(visit), a_(n, n, 0), rows_(n), in_prev_(n + 1, 0) {}

  void run(std::optional<int> top) {
    if (top) {
      rows_[0] = {*top};
      emit_row(0);
    } else {
      rows_[0].assign(1, 0);
      fill(0, 0);
    }
  }

 private:
  // Chooses entry m of triangle row k (0-based), interlacing row k-1.
  void fill(int k, int m) {
    auto& t = rows_[k];
    if (m == k + 1) {
      emit_row(k);
      return;
    }
    int lo = 1, hi = n_;
    if (k > 0) {
      auto const& r = rows_[k - 1];
      if (m > 0) lo = r[m - 1];
      if (m < k) hi = r[m];
    }
    if (m > 0) lo = std::max(lo, t[m - 1] + 1);
    for (int v = lo; v <= hi; ++v) {
      t[m] = v;
      fill(k, m + 1);
    }
  }

  void emit_row(int k) {
    std::vector<int> in_cur(n_ + 1, 0);
    for (int v : rows_[k]) in_cur[v] = 1;
    for (int j = 0; j < n_; ++j) a_(k, j) = in_cur[j + 1] - in_prev_[j + 1];
    if (k + 1 == n_) {
      visit_(Asm(a_));
    } else {
      auto saved = std::exchange(in_prev_, std::move(in_cur));
      rows_[k + 1].assign(k + 2, 0);
      fill(k + 1, 0);
      in_prev_ = std::move(saved);
    }
  }

  int n_;
  Visit& visit_;
  Grid<int> a_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> in_prev_;
};

}  // namespace detail

/// Visits every ASM of order n exactly once, ordered lexicographically by the
/// rows of the monotone triangle read top-down. With `top`, visits only the
/// ASMs whose triangle's top entry (the column of the +1 in row 1) is `top`;
/// these slices partition the full stream.
template <class Visit>
void for_each_asm(int n, Visit&& visit, std::optional<int> top = std::nullopt) {
  detail::require_order(n);
  detail::TriangleWalker<std::remove_reference_t<Visit>> walker(n, visit);
  walker.run(top);
}

inline std::vector<Asm> enumerate_asms(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](Asm const& a) { out.push_back(a); });
  return out;
}

/// Folds `map` over all ASMs of order n, slicing the stream by the top entry of
/// the monotone triangle and combining slice results in slice order.
template <class R, class Map, class Combine>
R reduce_asms(int n, R init, Map map, Combine combine) {
  detail::require_order(n);
  auto slices = parallel_map<R>(n, [&](int k) {
    R acc = init;
    for_each_asm(n, [&](Asm const& a) { map(acc, a); }, k + 1);
    return acc;
  });
  R total = std::move(init);
  for (auto& s : slices) combine(total, s);
  return total;
}

inline BigCount count_brute(int n) {
  return reduce_asms<BigCount>(
      n, BigCount(0), [](BigCount& acc, Asm const&) { ++acc; },
      [](BigCount& a, BigCount const& b) { a += b; });
}

/// A(n) = prod_{k=0}^{n-1} (3k+1)! / (n+k)!
inline BigCount count_formula(int n) {
  detail::require_order(n);
  BigInt num = 1, den = 1;
  auto fact = [](int m) {
    BigInt f = 1;
    for (int t = 2; t <= m; ++t) f *= t;
    return f;
  };
  for (int k = 0; k < n; ++k) {
    num *= fact(3 * k + 1);
    den *= fact(n + k);
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// Row-profile transfer matrix
// ---------------------------------------------------------------------------

/// Row state after i rows: bit j set iff column j+1 has partial column sum 1,
/// i.e. the height-function row i steps down entering column j+1.
using RowMask = std::uint64_t;

/// Calls `next(T)` for every row state T that can follow S: each step of the
/// height row moves by exactly one, which means the running count of set bits
/// in T minus S stays in {0,1} and ends at 1.
template <class Next>
void for_each_successor(int n, RowMask s, Next&& next) {
  auto rec = [&](auto&& self, int j, int diff, RowMask t) -> void {
    if (j == n) {
      if (diff == 1) next(t);
      return;
    }
    int const sj = static_cast<int>((s >> j) & 1u);
    for (int tj = 0; tj <= 1; ++tj) {
      int const d = diff + tj - sj;
      if (d == 0 || d == 1) self(self, j + 1, d, tj ? (t | (RowMask{1} << j)) : t);
    }
  };
  rec(rec, 0, 0, RowMask{0});
}

/// Distribution of a per-row additive statistic over all ASMs of order n:
/// entry k of the result counts ASMs whose statistic totals k. `exponent(i,S,T)`
/// scores row i (0-based), whose entries are bit(T) - bit(S).
template <class Exponent>
std::vector<BigCount> transfer_distribution(int n, Exponent&& exponent) {
  detail::require_order(n);
  if (n > 63) throw Error(Errc::InvariantViolated, "transfer matrix supports n <= 63");
  using Poly = std::vector<BigCount>;
  auto add_shifted = [](Poly& into, Poly const& p, int shift) {
    if (into.size() < p.size() + shift) into.resize(p.size() + shift);
    for (std::size_t k = 0; k < p.size(); ++k) into[k + shift] += p[k];
  };
  std::map<RowMask, Poly> layer{{RowMask{0}, Poly{1}}};
  for (int i = 0; i < n; ++i) {
    std::map<RowMask, Poly> next;
    for (auto const& [s, poly] : layer)
      for_each_successor(n, s, [&](RowMask t) { add_shifted(next[t], poly, exponent(i, s, t)); });
    layer = std::move(next);
  }
  RowMask const full = n == 64 ? ~RowMask{0} : ((RowMask{1} << n) - 1);
  Poly out = layer.at(full);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

inline BigCount count_transfer(int n) {
  BigCount total = 0;
  for (auto const& c : transfer_distribution(n, [](int, RowMask, RowMask) { return 0; })) total += c;
  return total;
}

/// Coefficient k counts the ASMs of order n with exactly k entries equal to -1.
inline std::vector<BigCount> minus_one_distribution(int n) {
  return transfer_distribution(n, [](int, RowMask s, RowMask t) { return std::popcount(s & ~t); });
}

inline Rational evaluate(std::vector<BigCount> const& coeffs, Rational const& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

/// Sum over ASMs of x^(number of -1 entries).
inline Rational x_enumeration(int n, Rational const& x) { return evaluate(minus_one_distribution(n), x); }

/// Checkerboard phase for the hybrid weight. `OneOneEven`: cell (i,j), 1-based,
/// is even iff i+j is even, so (1,1) is even.
enum class HybridPhase { OneOneEven, OneOneOdd };

/// Distribution of k = #{even cells holding -1} + #{odd cells holding +1}.
inline std::vector<BigCount> hybrid_distribution(int n, HybridPhase phase) {
  int const flip = phase == HybridPhase::OneOneEven ? 0 : 1;
  return transfer_distribution(n, [n, flip](int i, RowMask s, RowMask t) {
    int k = 0;
    for (int j = 0; j < n; ++j) {
      int const a = static_cast<int>((t >> j) & 1u) - static_cast<int>((s >> j) & 1u);
      bool const even = ((i + 1 + j + 1 + flip) % 2) == 0;
      if ((even && a == -1) || (!even && a == 1)) ++k;
    }
    return k;
  });
}

/// Writes v = 2^a 5^b if possible.
inline std::optional<std::pair<unsigned, unsigned>> factor_2_5(BigInt v) {
  if (v <= 0) return std::nullopt;
  unsigned a = 0, b = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++a;
  }
  while (v % 5 == 0) {
    v /= 5;
    ++b;
  }
  if (v != 1) return std::nullopt;
  return std::pair{a, b};
}

struct HybridResult {
  BigCount value;
  unsigned twos = 0;
  unsigned fives = 0;
};

/// Sum over ASMs of 2^k for the hybrid statistic. Throws FactorizationFailed
/// when the total is not of the form 2^a 5^b.
inline HybridResult hybrid_2_enumeration(int n, HybridPhase phase = HybridPhase::OneOneEven) {
  auto const v = evaluate(hybrid_distribution(n, phase), Rational(2));
  BigInt value = boost::multiprecision::numerator(v);
  auto f = factor_2_5(value);
  if (!f) throw Error(Errc::FactorizationFailed, "hybrid 2-enumeration " + value.str() + " is not 2^a 5^b");
  return {value, f->first, f->second};
}

}  // namespace asmkit
