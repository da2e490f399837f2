#pragma once

// Exact uniform sampling by monotone coupling from the past on height
// functions, frozen-site maps, and tiling renderers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "asmkit/core.hpp"
#include "asmkit/error.hpp"
#include "asmkit/parallel.hpp"

namespace asmkit {

/// Counter-based SplitMix64: value(t) is the SplitMix64 output for state
/// seed + (t+1) * 0x9E3779B97F4A7C15, so any step can be replayed directly.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t value(std::uint64_t t) const { return mix(seed_ + (t + 1) * kGolden); }

  /// Independent source for the k-th of several samples drawn from one seed.
  RandomSource stream(std::uint64_t k) const { return RandomSource(mix(seed_ ^ mix(k + kGolden))); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  std::uint64_t seed_;
};

inline std::pair<HeightFunction, HeightFunction> extreme_heights(int n) {
  if (n < 1) throw Error(Errc::ZeroOrder, "order must be at least 1");
  Grid<int> hi(n + 1, n + 1), lo(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      hi(i, j) = max_height(n, i, j);
      lo(i, j) = min_height(i, j);
    }
  return {HeightFunction(std::move(hi)), HeightFunction(std::move(lo))};
}

namespace detail {

// h is the row-major (n+1)x(n+1) height matrix with stride w = n+1.
inline void glauber_apply(int* h, int w, int i, int j, bool coin) {
  int* c = h + i * w + j;
  int const v = c[-w];
  if (c[w] == v && c[-1] == v && c[1] == v) *c = coin ? v + 1 : v - 1;
}

}  // namespace detail

/// Single-site heat-bath move at interior site (i,j), 1 <= i,j <= n-1.
inline HeightFunction glauber_step(HeightFunction const& h, int i, int j, bool coin) {
  int const n = h.n();
  if (i < 1 || j < 1 || i >= n || j >= n) throw Error(Errc::InvariantViolated, "site must be interior", i, j);
  Grid<int> g = h.entries();
  detail::glauber_apply(g.data().data(), n + 1, i, j, coin);
  return HeightFunction(std::move(g));
}

/// The (site, coin) pair used at time -s, s >= 1.
inline std::pair<std::pair<int, int>, bool> cftp_move(int n, RandomSource const& rng, std::uint64_t s) {
  std::uint64_t const v = rng.value(s - 1);
  auto const m = static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(n - 1);
  auto const site = static_cast<int>(v % m);
  return {{site / (n - 1) + 1, site % (n - 1) + 1}, (v >> 63) != 0};
}

struct CftpOptions {
  /// Largest time window tried before giving up.
  std::uint64_t max_window = std::uint64_t{1} << 40;
};

struct CftpResult {
  Asm sample;
  std::uint64_t coalescence_time = 0;  // window T at which the chains met
  std::uint64_t steps = 0;             // coupled updates performed over all windows
};

inline CftpResult cftp_run(int n, RandomSource const& rng, CftpOptions const& opt = {}) {
  auto const [top, bottom] = extreme_heights(n);
  if (top == bottom) return {height_to_asm(top), 0, 0};
  int const w = n + 1;
  std::uint64_t steps = 0;
  for (std::uint64_t t = 1;; t *= 2) {
    if (t > opt.max_window)
      throw Error(Errc::CoalescenceTimeout,
                  "no coalescence within a window of " + std::to_string(opt.max_window) + " steps");
    std::vector<int> hi(top.entries().data().begin(), top.entries().data().end());
    std::vector<int> lo(bottom.entries().data().begin(), bottom.entries().data().end());
    for (std::uint64_t s = t; s >= 1; --s) {
      auto const [site, coin] = cftp_move(n, rng, s);
      auto const [i, j] = site;
      detail::glauber_apply(hi.data(), w, i, j, coin);
      detail::glauber_apply(lo.data(), w, i, j, coin);
    }
    steps += t;
    if (hi == lo) {
      Grid<int> g(w, w);
      std::copy(hi.begin(), hi.end(), g.data().begin());
      return {height_to_asm(HeightFunction(std::move(g))), t, steps};
    }
  }
}

inline Asm cftp_sample(int n, RandomSource const& rng, CftpOptions const& opt = {}) {
  return cftp_run(n, rng, opt).sample;
}

/// `count` samples using rng.stream(0..count-1); the result does not depend on
/// the number of worker threads.
inline std::vector<CftpResult> cftp_samples(int n, RandomSource const& rng, int count, CftpOptions const& opt = {}) {
  return parallel_map<CftpResult>(count, [&](int k) { return cftp_run(n, rng.stream(k), opt); });
}

// ---------------------------------------------------------------------------
// Frozen sites
// ---------------------------------------------------------------------------

class FrozenMap {
 public:
  explicit FrozenMap(HeightFunction const& h) : n_(h.n()), flags_(n_ + 1, n_ + 1, 0) {
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j)
        flags_(i, j) = h(i, j) == max_height(n_, i, j) || h(i, j) == min_height(i, j);
  }

  int n() const noexcept { return n_; }
  bool frozen(int i, int j) const { return flags_(i, j) != 0; }
  Grid<int> const& flags() const noexcept { return flags_; }

  int frozen_count() const {
    return static_cast<int>(std::count(flags_.data().begin(), flags_.data().end(), 1));
  }

  /// Whether every site of the four k x k corner blocks is frozen.
  bool corners_frozen(int k) const {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (!frozen(a, b) || !frozen(a, n_ - b) || !frozen(n_ - a, b) || !frozen(n_ - a, n_ - b)) return false;
    return true;
  }

  /// '#' for frozen sites, '.' otherwise, one line per row.
  std::string to_text() const {
    std::string s;
    for (int i = 0; i <= n_; ++i) {
      for (int j = 0; j <= n_; ++j) s += frozen(i, j) ? '#' : '.';
      s += '\n';
    }
    return s;
  }

 private:
  int n_;
  Grid<int> flags_;
};

inline FrozenMap frozen_map(HeightFunction const& h) { return FrozenMap(h); }

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

enum class RenderFormat { Text, Ppm, Svg };

inline RenderFormat parse_render_format(std::string const& s) {
  if (s == "text") return RenderFormat::Text;
  if (s == "ppm") return RenderFormat::Ppm;
  if (s == "svg") return RenderFormat::Svg;
  throw Error(Errc::UnsupportedFormat, "unknown render format '" + s + "'");
}

/// Fill colour per vertex type, in VertexType order.
inline constexpr std::array<std::array<std::uint8_t, 3>, 6> kTilePalette = {{
    {0xd6, 0x27, 0x28},  // Plus
    {0x1f, 0x77, 0xb4},  // Minus
    {0x2c, 0xa0, 0x2c},  // RightUp
    {0xff, 0x7f, 0x0e},  // LeftDown
    {0x94, 0x67, 0xbd},  // LeftUp
    {0xe5, 0xc3, 0x1a},  // RightDown
}};

inline std::string hex_color(VertexType t) {
  auto const& c = kTilePalette[static_cast<int>(t)];
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

namespace detail {

inline std::string render_text(SixVertexState const& s) {
  std::string out;
  for (int r = 0; r < s.n(); ++r) {
    for (int c = 0; c < s.n(); ++c) out += vertex_glyph(s.type_at(r, c));
    out += '\n';
  }
  return out;
}

inline std::string render_ppm(SixVertexState const& s, int cell) {
  int const side = s.n() * cell;
  std::string out = "P6\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      auto const& c = kTilePalette[static_cast<int>(s.type_at(y / cell, x / cell))];
      out.append(reinterpret_cast<char const*>(c.data()), 3);
    }
  return out;
}

// Each tile is a square whose four sides bow outward where the edge arrow
// leaves the vertex and inward where it enters, so the arrow field can be read
// off the outline.
inline std::string render_svg(SixVertexState const& s, int cell) {
  int const n = s.n(), side = n * cell;
  double const b = cell * 0.2;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(side) + "\" height=\"" +
                    std::to_string(side) + "\" viewBox=\"0 0 " + std::to_string(side) + " " +
                    std::to_string(side) + "\">\n";
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      VertexType const t = s.type_at(r, c);
      double const x0 = c * cell, y0 = r * cell, x1 = x0 + cell, y1 = y0 + cell;
      double const mx = x0 + cell / 2.0, my = y0 + cell / 2.0;
      // Signed offsets in screen coordinates; a shared side gets the same
      // control point from both of its tiles.
      double const top = s.points_up(r, c) ? -b : b;
      double const bottom = s.points_up(r + 1, c) ? b : -b;
      double const left = s.points_right(r, c) ? b : -b;
      double const right = s.points_right(r, c + 1) ? b : -b;
      std::string d = "M" + num(x0) + "," + num(y0) + " Q" + num(mx) + "," + num(y0 + top) + " " + num(x1) + "," +
                      num(y0) + " Q" + num(x1 + right) + "," + num(my) + " " + num(x1) + "," + num(y1) + " Q" +
                      num(mx) + "," + num(y1 - bottom) + " " + num(x0) + "," + num(y1) + " Q" + num(x0 + left) +
                      "," + num(my) + " " + num(x0) + "," + num(y0) + " Z";
      out += "<g class=\"" + std::string(tile_name(t)) + "\"><path d=\"" + d + "\" fill=\"" + hex_color(t) +
             "\" stroke=\"#000\" stroke-width=\"0.5\"/></g>\n";
    }
  out += "</svg>\n";
  return out;
}

}  // namespace detail

/// Text: one glyph per vertex. PPM: binary P6, `cell` pixels per vertex. SVG:
/// one <g> per tile, classed by tile name.
inline std::string render_tiling(SixVertexState const& s, RenderFormat format, int cell = 8) {
  switch (format) {
    case RenderFormat::Text: return detail::render_text(s);
    case RenderFormat::Ppm: return detail::render_ppm(s, cell);
    case RenderFormat::Svg: return detail::render_svg(s, cell);
  }
  throw Error(Errc::UnsupportedFormat, "unknown render format");
}

inline std::string render_tiling(SixVertexState const& s, std::string const& format, int cell = 8) {
  return render_tiling(s, parse_render_format(format), cell);
}

}  // namespace asmkit
