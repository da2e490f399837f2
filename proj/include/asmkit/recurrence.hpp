#pragma once

// The octahedron recurrence
//   f(i,j,k+1) = (f(i+1,j,k) f(i-1,j,k) + lambda f(i,j+1,k) f(i,j-1,k)) / f(i,j,k-1)
// from layers f(.,.,-1) = x, f(.,.,0) = y, and the cube recurrence
//   f(i,j,k) = (f(i-1,j,k) f(i,j-1,k-1) + f(i,j-1,k) f(i-1,j,k-1) + f(i,j,k-1) f(i-1,j-1,k))
//              / f(i-1,j-1,k-1)
// from layers x, y, z on i+j+k = -1, 0, 1. Both are evaluated symbolically over
// the dependency cone of a single target site.

#include <cstdlib>
#include <map>
#include <optional>
#include <memory>
#include <tuple>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/core.hpp"
#include "asmkit/error.hpp"
#include "asmkit/laurent.hpp"
#include "asmkit/parallel.hpp"

namespace asmkit {

namespace detail {

inline void require_level(int n) {
  if (n < 1) throw Error(Errc::ZeroOrder, "level must be at least 1");
}

// Sites (i,j) at level k of the cone below (0,0,n): |i|+|j| <= n-k, i+j = n-k mod 2.
inline std::vector<std::pair<int, int>> cone_sites(int n, int k) {
  std::vector<std::pair<int, int>> out;
  int const r = n - k;
  for (int i = -r; i <= r; ++i)
    for (int j = -r; j <= r; ++j)
      if (std::abs(i) + std::abs(j) <= r && ((i + j - r) % 2 + 2) % 2 == 0) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

/// f(0,0,n) of the octahedron recurrence. Sites of one level are computed in
/// parallel; every division must be exact.
inline LaurentPoly octahedron(int n, int lambda = 1) {
  detail::require_level(n);
  using Level = std::map<std::pair<int, int>, LaurentPoly>;
  Level older, old;
  for (auto [i, j] : detail::cone_sites(n, -1)) older[{i, j}] = LaurentPoly::var(VarId::plane(Layer::X, i, j));
  for (auto [i, j] : detail::cone_sites(n, 0)) old[{i, j}] = LaurentPoly::var(VarId::plane(Layer::Y, i, j));
  for (int k = 1; k <= n; ++k) {
    auto const sites = detail::cone_sites(n, k);
    auto values = parallel_map<LaurentPoly>(static_cast<int>(sites.size()), [&](int s) {
      auto [i, j] = sites[s];
      LaurentPoly const num =
          old.at({i + 1, j}) * old.at({i - 1, j}) + LaurentPoly(lambda) * (old.at({i, j + 1}) * old.at({i, j - 1}));
      return exact_divide(num, older.at({i, j}));
    });
    Level next;
    for (std::size_t s = 0; s < sites.size(); ++s) next[sites[s]] = std::move(values[s]);
    older = std::move(old);
    old = std::move(next);
  }
  return old.at({0, 0});
}

/// The values F_k = f(.,.,k) with every variable set to 1:
/// F_{-1} = F_0 = 1, F_{k+1} = (1 + lambda) F_k^2 / F_{k-1}.
inline std::vector<Rational> octahedron_all_ones(int n, int lambda = 1) {
  std::vector<Rational> f{1, 1};  // k = -1, 0
  for (int k = 1; k <= n; ++k) {
    auto const& a = f[f.size() - 1];
    auto const& b = f[f.size() - 2];
    f.push_back(Rational(1 + lambda) * a * a / b);
  }
  return {f.begin() + 2, f.end()};
}

struct AuditReport {
  std::size_t terms = 0;
  int min_exponent = 0;
  int max_exponent = 0;
};

namespace detail {

inline AuditReport audit(LaurentPoly const& p, int lo, int hi) {
  AuditReport r{p.size(), 0, 0};
  for (auto const& [m, c] : p.terms()) {
    if (c != 1) throw Error(Errc::AuditFailed, "coefficient " + c.str() + " on " + m.to_string());
    for (auto const& [v, e] : m.terms()) {
      if (e < lo || e > hi)
        throw Error(Errc::AuditFailed, "exponent " + std::to_string(e) + " of " + v.name() + " in " + m.to_string());
      r.min_exponent = std::min(r.min_exponent, e);
      r.max_exponent = std::max(r.max_exponent, e);
    }
  }
  return r;
}

}  // namespace detail

/// All coefficients 1, all exponents in {-1,0,1}.
inline AuditReport audit_octahedron(LaurentPoly const& p) { return detail::audit(p, -1, 1); }

struct CompatiblePair {
  Asm lower;  // order n, from the sign-flipped x exponents
  Asm upper;  // order n+1, from the y exponents

  friend bool operator==(CompatiblePair const&, CompatiblePair const&) = default;
};

/// Decodes each monomial of a level-n octahedron value. y(i,j) with
/// |i|+|j| <= n sits at row (i+j+n)/2, column (i-j+n)/2 of the upper matrix;
/// x(i,j) with |i|+|j| <= n-1 at row (i+j+n-1)/2, column (i-j+n-1)/2 of the
/// lower one.
inline std::vector<CompatiblePair> extract_pairs(LaurentPoly const& p, int n) {
  detail::require_level(n);
  std::vector<CompatiblePair> out;
  out.reserve(p.size());
  for (auto const& [m, c] : p.terms()) {
    Grid<int> lower(n, n, 0), upper(n + 1, n + 1, 0);
    for (auto const& [v, e] : m.terms()) {
      int const r = v.layer == Layer::Y ? n : n - 1;
      if (v.has_k || v.layer == Layer::Z || std::abs(v.i) + std::abs(v.j) > r || ((v.i + v.j + r) % 2 != 0))
        throw Error(Errc::DecodeFailed, "variable " + v.name() + " outside the decoding window");
      int const row = (v.i + v.j + r) / 2, col = (v.i - v.j + r) / 2;
      if (v.layer == Layer::Y) upper(row, col) = e;
      else lower(row, col) = -e;
    }
    try {
      out.push_back({Asm(std::move(lower)), Asm(std::move(upper))});
    } catch (Error const& err) {
      throw Error(Errc::DecodeFailed, "monomial " + m.to_string() + " does not decode: " + err.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cube recurrence
// ---------------------------------------------------------------------------

/// The site of the cube recurrence used as level n: i+j+k = n, coordinates as
/// balanced as possible.
inline std::tuple<int, int, int> cube_site(int n) {
  int const k = n / 3, j = (n - k) / 2, i = n - j - k;
  return {i, j, k};
}

namespace detail {

class CubeSolver {
 public:
  LaurentPoly const& at(int i, int j, int k) {
    auto key = std::tuple{i, j, k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly v;
    int const s = i + j + k;
    if (s <= 1) {
      Layer const l = s <= -1 ? Layer::X : s == 0 ? Layer::Y : Layer::Z;
      if (s < -1) throw Error(Errc::InvariantViolated, "cube site below the initial layers");
      v = LaurentPoly::var(VarId::space(l, i, j, k));
    } else {
      LaurentPoly num = at(i - 1, j, k) * at(i, j - 1, k - 1);
      num += at(i, j - 1, k) * at(i - 1, j, k - 1);
      num += at(i, j, k - 1) * at(i - 1, j - 1, k);
      v = exact_divide(num, at(i - 1, j - 1, k - 1));
    }
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::map<std::tuple<int, int, int>, LaurentPoly> memo_;
};

}  // namespace detail

inline LaurentPoly cube_at(int i, int j, int k) {
  detail::CubeSolver solver;
  return solver.at(i, j, k);
}

/// f at cube_site(n).
inline LaurentPoly cube(int n) {
  detail::require_level(n);
  auto [i, j, k] = cube_site(n);
  return cube_at(i, j, k);
}

/// G_s = f on the plane i+j+k = s with every variable 1:
/// G_{-1} = G_0 = G_1 = 1, G_s = 3 G_{s-1} G_{s-2} / G_{s-3}.
inline std::vector<Rational> cube_all_ones(int n) {
  std::vector<Rational> g{1, 1, 1};  // s = -1, 0, 1
  for (int s = 2; s <= n; ++s) {
    std::size_t const t = g.size();
    g.push_back(3 * g[t - 1] * g[t - 2] / g[t - 3]);
  }
  return {g.begin() + 2, g.begin() + 2 + n};
}

/// All coefficients 1, exponents in [-1, 4], and, given the level, 3^floor(n^2/4) terms.
inline AuditReport audit_cube(LaurentPoly const& p, std::optional<int> n = std::nullopt) {
  auto r = detail::audit(p, -1, 4);
  if (n && BigInt(r.terms) != pow_big(3, static_cast<unsigned>(*n * *n / 4)))
    throw Error(Errc::AuditFailed, std::to_string(r.terms) + " terms at level " + std::to_string(*n));
  return r;
}

}  // namespace asmkit
