#pragma once

// Validated representations of alternating-sign matrices and the bijections
// among them. Indexing is 0-based internally; error positions are reported
// 1-based for ASM rows/columns and 0-based for (n+1)x(n+1) matrices, matching
// how those objects are usually written down.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asmkit/error.hpp"
#include "asmkit/grid.hpp"

namespace asmkit {

// ---------------------------------------------------------------------------
// Asm
// ---------------------------------------------------------------------------

class Asm {
 public:
  /// Validates `entries`; throws Error{NotSquare|ZeroOrder|BadEntryValue|AlternationViolated}.
  explicit Asm(Grid<int> entries) : entries_(std::move(entries)) { validate(); }

  static Asm from_rows(std::vector<std::vector<int>> const& rows) {
    return Asm(Grid<int>::from_rows(rows));
  }

  static Asm identity(int n) {
    Grid<int> g(n, n, 0);
    for (int i = 0; i < n; ++i) g(i, i) = 1;
    return Asm(std::move(g));
  }

  int n() const noexcept { return entries_.rows(); }
  int operator()(int i, int j) const { return entries_(i, j); }
  Grid<int> const& entries() const noexcept { return entries_; }

  int count(int value) const {
    return static_cast<int>(std::count(entries_.data().begin(), entries_.data().end(), value));
  }

  friend bool operator==(Asm const&, Asm const&) = default;
  friend auto operator<=>(Asm const& a, Asm const& b) { return a.entries_ <=> b.entries_; }

 private:
  void validate() const {
    if (!entries_.square()) throw Error(Errc::NotSquare, "ASM must be a square matrix");
    int const n = entries_.rows();
    if (n == 0) throw Error(Errc::ZeroOrder, "order must be at least 1");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int v = entries_(i, j);
        if (v < -1 || v > 1)
          throw Error(Errc::BadEntryValue, "entry must be -1, 0 or +1", i + 1, j + 1);
      }
    // Prefix sums of every line stay in {0,1} and the line sums to 1.
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) {
        s += entries_(i, j);
        if (s < 0 || s > 1)
          throw Error(Errc::AlternationViolated, "row " + std::to_string(i + 1), i + 1, j + 1);
      }
      if (s != 1)
        throw Error(Errc::AlternationViolated, "row " + std::to_string(i + 1) + " does not sum to 1",
                    i + 1, std::nullopt);
    }
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int i = 0; i < n; ++i) {
        s += entries_(i, j);
        if (s < 0 || s > 1)
          throw Error(Errc::AlternationViolated, "column " + std::to_string(j + 1), i + 1, j + 1);
      }
      if (s != 1)
        throw Error(Errc::AlternationViolated,
                    "column " + std::to_string(j + 1) + " does not sum to 1", std::nullopt, j + 1);
    }
  }

  Grid<int> entries_;
};

inline Asm validate_asm(Grid<int> entries) { return Asm(std::move(entries)); }

// ---------------------------------------------------------------------------
// CornerSum / HeightFunction / ThreeColoring
// ---------------------------------------------------------------------------

namespace detail {

inline int order_of_boundary_matrix(Grid<int> const& g, char const* what) {
  if (!g.square()) throw Error(Errc::NotSquare, std::string(what) + " must be square");
  if (g.rows() < 2) throw Error(Errc::ZeroOrder, std::string(what) + " must have order >= 1");
  return g.rows() - 1;
}

}  // namespace detail

class CornerSum {
 public:
  explicit CornerSum(Grid<int> entries) : entries_(std::move(entries)) { validate(); }

  int n() const noexcept { return entries_.rows() - 1; }
  int operator()(int i, int j) const { return entries_(i, j); }
  Grid<int> const& entries() const noexcept { return entries_; }

  friend bool operator==(CornerSum const&, CornerSum const&) = default;

 private:
  void validate() const {
    int const n = detail::order_of_boundary_matrix(entries_, "corner-sum matrix");
    auto fail = [](std::string m, int i, int j) {
      throw Error(Errc::InvariantViolated, std::move(m), i, j);
    };
    for (int k = 0; k <= n; ++k) {
      if (entries_(0, k) != 0) fail("row 0 must be zero", 0, k);
      if (entries_(k, 0) != 0) fail("column 0 must be zero", k, 0);
      if (entries_(n, k) != k) fail("row n must read 0..n", n, k);
      if (entries_(k, n) != k) fail("column n must read 0..n", k, n);
    }
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int d = entries_(i, j) - entries_(i, j - 1);
        if (d != 0 && d != 1) fail("row step must be 0 or 1", i, j);
        int e = entries_(j, i) - entries_(j - 1, i);
        if (e != 0 && e != 1) fail("column step must be 0 or 1", j, i);
      }
  }

  Grid<int> entries_;
};

/// Sitewise maximum height over all height functions of order n.
constexpr int max_height(int n, int i, int j) { return std::min(i + j, 2 * n - i - j); }
/// Sitewise minimum height over all height functions of order n.
constexpr int min_height(int i, int j) { return i > j ? i - j : j - i; }

class HeightFunction {
 public:
  explicit HeightFunction(Grid<int> entries) : entries_(std::move(entries)) { validate(); }

  int n() const noexcept { return entries_.rows() - 1; }
  int operator()(int i, int j) const { return entries_(i, j); }
  Grid<int> const& entries() const noexcept { return entries_; }

  friend bool operator==(HeightFunction const&, HeightFunction const&) = default;
  friend auto operator<=>(HeightFunction const& a, HeightFunction const& b) {
    return a.entries_ <=> b.entries_;
  }

  /// Entrywise order; the lattice order on height functions.
  bool leq(HeightFunction const& other) const {
    auto a = entries_.data();
    auto b = other.entries_.data();
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  }

 private:
  void validate() const {
    int const n = detail::order_of_boundary_matrix(entries_, "height-function matrix");
    for (int k = 0; k <= n; ++k) {
      if (entries_(0, k) != k || entries_(k, 0) != k)
        throw Error(Errc::InvariantViolated, "first row/column must read 0..n", 0, k);
      if (entries_(n, k) != n - k || entries_(k, n) != n - k)
        throw Error(Errc::InvariantViolated, "last row/column must read n..0", n, k);
    }
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (((i + j - entries_(i, j)) % 2 + 2) % 2 != 0)
          throw Error(Errc::ParityViolated, "i+j-h must be even", i, j);
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (std::abs(entries_(i, j) - entries_(i, j - 1)) != 1)
          throw Error(Errc::InvariantViolated, "row-adjacent entries must differ by 1", i, j);
        if (std::abs(entries_(j, i) - entries_(j - 1, i)) != 1)
          throw Error(Errc::InvariantViolated, "column-adjacent entries must differ by 1", j, i);
      }
  }

  Grid<int> entries_;
};

class ThreeColoring {
 public:
  explicit ThreeColoring(Grid<int> entries) : entries_(std::move(entries)) { validate(); }

  int n() const noexcept { return entries_.rows() - 1; }
  int operator()(int i, int j) const { return entries_(i, j); }
  Grid<int> const& entries() const noexcept { return entries_; }

  friend bool operator==(ThreeColoring const&, ThreeColoring const&) = default;

 private:
  void validate() const {
    int const n = detail::order_of_boundary_matrix(entries_, "3-coloring");
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        int v = entries_(i, j);
        if (v < 0 || v > 2) throw Error(Errc::BadEntryValue, "colors are 0, 1, 2", i, j);
        if (i > 0 && entries_(i - 1, j) == v)
          throw Error(Errc::InvariantViolated, "adjacent colors must differ", i, j);
        if (j > 0 && entries_(i, j - 1) == v)
          throw Error(Errc::InvariantViolated, "adjacent colors must differ", i, j);
      }
    for (int k = 0; k <= n; ++k) {
      if (entries_(0, k) != k % 3 || entries_(k, 0) != k % 3)
        throw Error(Errc::InvariantViolated, "colors must increase mod 3 along first row/column", 0, k);
      if (entries_(n, k) != (n - k) % 3 || entries_(k, n) != (n - k) % 3)
        throw Error(Errc::InvariantViolated, "colors must decrease mod 3 along last row/column", n, k);
    }
  }

  Grid<int> entries_;
};

// ---------------------------------------------------------------------------
// MonotoneTriangle
// ---------------------------------------------------------------------------

class MonotoneTriangle {
 public:
  /// rows[k] has k+1 strictly increasing entries in 1..n; rows.back() is 1..n.
  explicit MonotoneTriangle(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    validate();
  }

  int n() const noexcept { return static_cast<int>(rows_.size()); }
  std::vector<std::vector<int>> const& rows() const noexcept { return rows_; }

  friend bool operator==(MonotoneTriangle const&, MonotoneTriangle const&) = default;
  friend auto operator<=>(MonotoneTriangle const& a, MonotoneTriangle const& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  void validate() const {
    int const n = n_checked();
    for (int k = 0; k < n; ++k) {
      auto const& r = rows_[k];
      if (static_cast<int>(r.size()) != k + 1)
        throw Error(Errc::InvariantViolated, "row " + std::to_string(k + 1) + " has wrong length", k + 1);
      for (int m = 0; m <= k; ++m) {
        if (r[m] < 1 || r[m] > n) throw Error(Errc::InvariantViolated, "entry out of 1..n", k + 1, m + 1);
        if (m > 0 && r[m] <= r[m - 1])
          throw Error(Errc::InvariantViolated, "rows must strictly increase", k + 1, m + 1);
      }
      if (k + 1 < n) {
        auto const& below = rows_[k + 1];
        if (below.size() != r.size() + 1) continue;  // reported on the next iteration
        for (int m = 0; m <= k; ++m)
          if (r[m] < below[m] || r[m] > below[m + 1])
            throw Error(Errc::InvariantViolated, "diagonals must weakly increase", k + 1, m + 1);
      }
    }
    for (int m = 0; m < n; ++m)
      if (rows_.back()[m] != m + 1)
        throw Error(Errc::InvariantViolated, "bottom row must be 1..n", n, m + 1);
  }

  int n_checked() const {
    if (rows_.empty()) throw Error(Errc::ZeroOrder, "monotone triangle must have at least one row");
    return static_cast<int>(rows_.size());
  }

  std::vector<std::vector<int>> rows_;
};

// ---------------------------------------------------------------------------
// Bit matrices for edge data
// ---------------------------------------------------------------------------

class BitGrid {
 public:
  BitGrid() = default;
  BitGrid(int rows, int cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
        words_(static_cast<std::size_t>(rows) * words_per_row_, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool get(int r, int c) const {
    return (words_[index(r, c)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) {
    auto& w = words_[index(r, c)];
    std::uint64_t const bit = std::uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(int r, int c) { words_[index(r, c)] ^= std::uint64_t{1} << (c & 63); }

  friend bool operator==(BitGrid const&, BitGrid const&) = default;
  friend auto operator<=>(BitGrid const&, BitGrid const&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * words_per_row_ + static_cast<std::size_t>(c >> 6);
  }

  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

// ---------------------------------------------------------------------------
// Six-vertex (square ice) states with domain-wall boundary
// ---------------------------------------------------------------------------

/// The six vertex types, in the usual display order: the +1 vertex (horizontal
/// arrows in, vertical out), the -1 vertex (horizontal out, vertical in), then
/// the four zero vertices named by the directions their arrows point.
enum class VertexType : std::uint8_t { Plus, Minus, RightUp, LeftDown, LeftUp, RightDown };

inline constexpr std::array<VertexType, 6> kVertexTypes = {
    VertexType::Plus,   VertexType::Minus,  VertexType::RightUp,
    VertexType::LeftDown, VertexType::LeftUp, VertexType::RightDown};

constexpr int vertex_entry(VertexType t) {
  return t == VertexType::Plus ? 1 : t == VertexType::Minus ? -1 : 0;
}

/// Text glyph for a vertex type.
constexpr char vertex_glyph(VertexType t) {
  constexpr char glyphs[] = {'+', '-', '>', '<', '^', 'v'};
  return glyphs[static_cast<int>(t)];
}

/// Gasket/basket tile realizing the vertex type. Rotations are clockwise.
constexpr char const* tile_name(VertexType t) {
  switch (t) {
    case VertexType::Plus: return "gasket";
    case VertexType::Minus: return "gasket-r90";
    case VertexType::RightUp: return "basket-r270";
    case VertexType::LeftDown: return "basket-r90";
    case VertexType::LeftUp: return "basket-r180";
    case VertexType::RightDown: return "basket";
  }
  return "?";
}

class SixVertexState {
 public:
  /// `horizontal` is n x (n+1): edge e of row r joins columns e-1 and e, with e=0
  /// and e=n the boundary edges; bit 1 = arrow points right. `vertical` is
  /// (n+1) x n: edge e of column c joins rows e-1 and e; bit 1 = arrow points up.
  SixVertexState(BitGrid horizontal, BitGrid vertical)
      : horizontal_(std::move(horizontal)), vertical_(std::move(vertical)) {
    validate();
  }

  int n() const noexcept { return horizontal_.rows(); }
  BitGrid const& horizontal() const noexcept { return horizontal_; }
  BitGrid const& vertical() const noexcept { return vertical_; }

  bool points_right(int r, int e) const { return horizontal_.get(r, e); }
  bool points_up(int e, int c) const { return vertical_.get(e, c); }

  VertexType type_at(int r, int c) const { return *classify(horizontal_, vertical_, r, c); }

  friend bool operator==(SixVertexState const&, SixVertexState const&) = default;
  friend auto operator<=>(SixVertexState const&, SixVertexState const&) = default;

  static std::optional<VertexType> classify(BitGrid const& h, BitGrid const& v, int r, int c) {
    bool const l = h.get(r, c), rt = h.get(r, c + 1);
    bool const up = v.get(r, c), dn = v.get(r + 1, c);
    if (l && !rt && up && !dn) return VertexType::Plus;
    if (!l && rt && !up && dn) return VertexType::Minus;
    if (l && rt && up && dn) return VertexType::RightUp;
    if (!l && !rt && !up && !dn) return VertexType::LeftDown;
    if (!l && !rt && up && dn) return VertexType::LeftUp;
    if (l && rt && !up && !dn) return VertexType::RightDown;
    return std::nullopt;
  }

 private:
  void validate() const {
    int const n = horizontal_.rows();
    if (n == 0) throw Error(Errc::ZeroOrder, "six-vertex state must have order >= 1");
    if (horizontal_.cols() != n + 1 || vertical_.rows() != n + 1 || vertical_.cols() != n)
      throw Error(Errc::NotSquare, "edge arrays must be n x (n+1) and (n+1) x n");
    for (int k = 0; k < n; ++k) {
      if (!horizontal_.get(k, 0) || horizontal_.get(k, n))
        throw Error(Errc::BoundaryViolated, "side arrows must point inward", k + 1);
      if (!vertical_.get(0, k) || vertical_.get(n, k))
        throw Error(Errc::BoundaryViolated, "top/bottom arrows must point outward", std::nullopt, k + 1);
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!classify(horizontal_, vertical_, r, c))
          throw Error(Errc::IceRuleViolated, "vertex must have two arrows in and two out", r + 1, c + 1);
  }

  BitGrid horizontal_;
  BitGrid vertical_;
};

// ---------------------------------------------------------------------------
// Fully packed loops and link patterns
// ---------------------------------------------------------------------------

/// Grid coordinates place internal vertex (r,c) of the tic-tac-toe graph at
/// (r+1, c+1); external vertices sit on rows/columns 0 and n+1. The leftmost
/// top external vertex (0,1) is even, so a vertex is odd iff its coordinate
/// sum is even.
constexpr bool is_odd_vertex(int grid_row, int grid_col) { return (grid_row + grid_col) % 2 == 0; }

namespace detail {

/// Whether the edge is selected in the FPL image of an ice state, given its
/// orientation. Horizontal edge (r,e) joins grid (r+1,e)->(r+1,e+1).
constexpr bool fpl_selects_horizontal(int r, int e, bool right) {
  return right ? is_odd_vertex(r + 1, e) : is_odd_vertex(r + 1, e + 1);
}
/// Vertical edge (e,c) joins grid (e,c+1) (upper) and (e+1,c+1) (lower).
constexpr bool fpl_selects_vertical(int e, int c, bool up) {
  return up ? is_odd_vertex(e + 1, c + 1) : is_odd_vertex(e, c + 1);
}

}  // namespace detail

class FplState {
 public:
  /// Same edge layout as SixVertexState; bit 1 = edge selected.
  FplState(BitGrid horizontal, BitGrid vertical)
      : horizontal_(std::move(horizontal)), vertical_(std::move(vertical)) {
    validate();
  }

  int n() const noexcept { return horizontal_.rows(); }
  BitGrid const& horizontal() const noexcept { return horizontal_; }
  BitGrid const& vertical() const noexcept { return vertical_; }

  friend bool operator==(FplState const&, FplState const&) = default;
  friend auto operator<=>(FplState const&, FplState const&) = default;

  /// Selection status every FPL state has on its 4n boundary stubs.
  static bool boundary_selected_horizontal(int r, int e) {
    return detail::fpl_selects_horizontal(r, e, e == 0);
  }
  static bool boundary_selected_vertical(int e, int c) {
    return detail::fpl_selects_vertical(e, c, e == 0);
  }

 private:
  void validate() const {
    int const n = horizontal_.rows();
    if (n == 0) throw Error(Errc::ZeroOrder, "FPL state must have order >= 1");
    if (horizontal_.cols() != n + 1 || vertical_.rows() != n + 1 || vertical_.cols() != n)
      throw Error(Errc::NotSquare, "edge arrays must be n x (n+1) and (n+1) x n");
    for (int k = 0; k < n; ++k) {
      if (horizontal_.get(k, 0) != boundary_selected_horizontal(k, 0) ||
          horizontal_.get(k, n) != boundary_selected_horizontal(k, n))
        throw Error(Errc::BoundaryViolated, "side stubs must alternate", k + 1);
      if (vertical_.get(0, k) != boundary_selected_vertical(0, k) ||
          vertical_.get(n, k) != boundary_selected_vertical(n, k))
        throw Error(Errc::BoundaryViolated, "top/bottom stubs must alternate", std::nullopt, k + 1);
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int deg = horizontal_.get(r, c) + horizontal_.get(r, c + 1) + vertical_.get(r, c) +
                  vertical_.get(r + 1, c);
        if (deg != 2)
          throw Error(Errc::InvariantViolated, "internal vertex must have degree 2", r + 1, c + 1);
      }
  }

  BitGrid horizontal_;
  BitGrid vertical_;
};

/// Non-crossing perfect matching of 1..2n pairing odd with even labels.
class LinkPattern {
 public:
  explicit LinkPattern(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    for (auto& [a, b] : pairs_)
      if (a > b) std::swap(a, b);
    std::sort(pairs_.begin(), pairs_.end());
    validate();
  }

  int n() const noexcept { return static_cast<int>(pairs_.size()); }
  std::vector<std::pair<int, int>> const& pairs() const noexcept { return pairs_; }

  int partner(int label) const {
    for (auto [a, b] : pairs_) {
      if (a == label) return b;
      if (b == label) return a;
    }
    return 0;
  }

  /// Relabel i -> i+1 (mod 2n).
  LinkPattern rotated() const {
    int const m = 2 * n();
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : pairs_) out.emplace_back(a % m + 1, b % m + 1);
    return LinkPattern(std::move(out));
  }

  /// Relabel i -> 2n+1-i.
  LinkPattern reflected() const {
    int const m = 2 * n();
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : pairs_) out.emplace_back(m + 1 - a, m + 1 - b);
    return LinkPattern(std::move(out));
  }

  /// "1-12,2-11,..." with pairs sorted by their smaller label.
  std::string key() const {
    std::string s;
    for (auto [a, b] : pairs_) {
      if (!s.empty()) s += ',';
      s += std::to_string(a) + '-' + std::to_string(b);
    }
    return s;
  }

  /// (1,2)(3,4)...(2n-1,2n)
  static LinkPattern adjacent_pairs(int n) {
    std::vector<std::pair<int, int>> p;
    for (int k = 0; k < n; ++k) p.emplace_back(2 * k + 1, 2 * k + 2);
    return LinkPattern(std::move(p));
  }

  friend bool operator==(LinkPattern const&, LinkPattern const&) = default;
  friend auto operator<=>(LinkPattern const&, LinkPattern const&) = default;

 private:
  void validate() const {
    int const m = 2 * n();
    if (m == 0) throw Error(Errc::ZeroOrder, "link pattern must have at least one arc");
    std::vector<int> seen(m + 1, 0);
    for (auto [a, b] : pairs_) {
      if (a < 1 || b > m || a == b) throw Error(Errc::InvariantViolated, "labels must lie in 1..2n");
      if (seen[a]++ || seen[b]++) throw Error(Errc::InvariantViolated, "labels must be matched once");
      if ((a + b) % 2 == 0) throw Error(Errc::InvariantViolated, "arcs must join odd with even labels");
    }
    for (auto [a, b] : pairs_)
      for (auto [c, d] : pairs_)
        if (a < c && c < b && b < d) throw Error(Errc::CrossingDetected, "arcs cross");
  }

  std::vector<std::pair<int, int>> pairs_;
};

// ---------------------------------------------------------------------------
// Bijections
// ---------------------------------------------------------------------------

inline CornerSum asm_to_corner_sum(Asm const& a) {
  int const n = a.n();
  Grid<int> c(n + 1, n + 1, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      c(i, j) = a(i - 1, j - 1) + c(i - 1, j) + c(i, j - 1) - c(i - 1, j - 1);
  return CornerSum(std::move(c));
}

inline Asm corner_sum_to_asm(CornerSum const& c) {
  int const n = c.n();
  Grid<int> a(n, n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = c(i, j) - c(i - 1, j) - c(i, j - 1) + c(i - 1, j - 1);
  try {
    return Asm(std::move(a));
  } catch (Error const& e) {
    throw Error(Errc::InvariantViolated, std::string("corner-sum matrix does not encode an ASM: ") + e.what());
  }
}

inline HeightFunction corner_sum_to_height(CornerSum const& c) {
  int const n = c.n();
  Grid<int> h(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) h(i, j) = i + j - 2 * c(i, j);
  return HeightFunction(std::move(h));
}

inline CornerSum height_to_corner_sum(HeightFunction const& h) {
  int const n = h.n();
  Grid<int> c(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      int const d = i + j - h(i, j);
      if (d % 2 != 0) throw Error(Errc::ParityViolated, "i+j-h must be even", i, j);
      c(i, j) = d / 2;
    }
  return CornerSum(std::move(c));
}

inline HeightFunction asm_to_height(Asm const& a) { return corner_sum_to_height(asm_to_corner_sum(a)); }
inline Asm height_to_asm(HeightFunction const& h) { return corner_sum_to_asm(height_to_corner_sum(h)); }

inline ThreeColoring height_to_coloring(HeightFunction const& h) {
  int const n = h.n();
  Grid<int> t(n + 1, n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) t(i, j) = h(i, j) % 3;
  return ThreeColoring(std::move(t));
}

/// Lifts a proposed coloring to the unique height function reducing to it.
/// Boundary heights are fixed; interior cells are resolved row-major from the
/// cell above (color +1 mod 3 => height +1, color -1 mod 3 => height -1) and
/// then checked against the left neighbour. Throws NoLift at the first
/// inconsistent cell.
inline HeightFunction lift_coloring(Grid<int> const& colors) {
  int const n = detail::order_of_boundary_matrix(colors, "3-coloring");
  Grid<int> h(n + 1, n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    h(0, k) = k;
    h(k, 0) = k;
    h(n, k) = n - k;
    h(k, n) = n - k;
  }
  auto mod3 = [](int v) { return ((v % 3) + 3) % 3; };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      bool const boundary = i == 0 || j == 0 || i == n || j == n;
      if (!boundary) {
        int const d = mod3(colors(i, j) - colors(i - 1, j));
        if (d == 0) throw Error(Errc::NoLift, "adjacent cells share a color", i, j);
        h(i, j) = h(i - 1, j) + (d == 1 ? 1 : -1);
      }
      if (mod3(h(i, j)) != colors(i, j)) throw Error(Errc::NoLift, "color disagrees with height", i, j);
      if (j > 0 && std::abs(h(i, j) - h(i, j - 1)) != 1)
        throw Error(Errc::NoLift, "left neighbour inconsistent", i, j);
      if (i > 0 && std::abs(h(i, j) - h(i - 1, j)) != 1)
        throw Error(Errc::NoLift, "upper neighbour inconsistent", i, j);
    }
  return HeightFunction(std::move(h));
}

inline HeightFunction coloring_to_height(ThreeColoring const& t) { return lift_coloring(t.entries()); }

inline MonotoneTriangle asm_to_monotone(Asm const& a) {
  int const n = a.n();
  std::vector<int> partial(n, 0);
  std::vector<std::vector<int>> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> row;
    for (int j = 0; j < n; ++j) {
      partial[j] += a(i, j);
      if (partial[j] == 1) row.push_back(j + 1);
    }
    rows.push_back(std::move(row));
  }
  return MonotoneTriangle(std::move(rows));
}

inline Asm monotone_to_asm(MonotoneTriangle const& m) {
  int const n = m.n();
  Grid<int> a(n, n, 0);
  std::vector<int> prev(n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> cur(n, 0);
    for (int v : m.rows()[i]) cur[v - 1] = 1;
    for (int j = 0; j < n; ++j) a(i, j) = cur[j] - prev[j];
    prev = std::move(cur);
  }
  try {
    return Asm(std::move(a));
  } catch (Error const& e) {
    throw Error(Errc::InvariantViolated, std::string("triangle does not encode an ASM: ") + e.what());
  }
}

inline SixVertexState asm_to_six_vertex(Asm const& a) {
  int const n = a.n();
  BitGrid h(n, n + 1), v(n + 1, n);
  // Horizontal edge e of row r points right iff the row sum left of it is 0;
  // vertical edge e of column c points up iff the column sum above it is 0.
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int e = 0; e <= n; ++e) {
      h.set(r, e, s == 0);
      if (e < n) s += a(r, e);
    }
  }
  for (int c = 0; c < n; ++c) {
    int s = 0;
    for (int e = 0; e <= n; ++e) {
      v.set(e, c, s == 0);
      if (e < n) s += a(e, c);
    }
  }
  return SixVertexState(std::move(h), std::move(v));
}

inline Asm six_vertex_to_asm(SixVertexState const& s) {
  int const n = s.n();
  Grid<int> a(n, n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = vertex_entry(s.type_at(r, c));
  return Asm(std::move(a));
}

inline Grid<VertexType> tile_type_map(SixVertexState const& s) {
  int const n = s.n();
  Grid<VertexType> out(n, n, VertexType::Plus);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = s.type_at(r, c);
  return out;
}

inline FplState six_vertex_to_fpl(SixVertexState const& s) {
  int const n = s.n();
  BitGrid h(n, n + 1), v(n + 1, n);
  for (int r = 0; r < n; ++r)
    for (int e = 0; e <= n; ++e) h.set(r, e, detail::fpl_selects_horizontal(r, e, s.points_right(r, e)));
  for (int e = 0; e <= n; ++e)
    for (int c = 0; c < n; ++c) v.set(e, c, detail::fpl_selects_vertical(e, c, s.points_up(e, c)));
  return FplState(std::move(h), std::move(v));
}

/// Inverse of six_vertex_to_fpl: selected edges point odd -> even, the rest even -> odd.
inline SixVertexState fpl_to_six_vertex(FplState const& f) {
  int const n = f.n();
  BitGrid h(n, n + 1), v(n + 1, n);
  for (int r = 0; r < n; ++r)
    for (int e = 0; e <= n; ++e) {
      bool const left_odd = is_odd_vertex(r + 1, e);
      h.set(r, e, f.horizontal().get(r, e) == left_odd);
    }
  for (int e = 0; e <= n; ++e)
    for (int c = 0; c < n; ++c) {
      bool const lower_odd = is_odd_vertex(e + 1, c + 1);
      v.set(e, c, f.vertical().get(e, c) == lower_odd);
    }
  return SixVertexState(std::move(h), std::move(v));
}

}  // namespace asmkit
