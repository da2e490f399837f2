#pragma once

// The dihedral group D4 acting on square matrices, its ten subgroups, and
// counting ASMs invariant under a subgroup.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/core.hpp"
#include "asmkit/enumerate.hpp"

namespace asmkit {

/// Elements of D4 as maps on matrix positions. Rotations are clockwise.
enum class Symmetry { Identity, Rot90, Rot180, Rot270, FlipRows, FlipCols, Transpose, AntiTranspose };

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::Identity, Symmetry::Rot90,    Symmetry::Rot180,    Symmetry::Rot270,
    Symmetry::FlipRows, Symmetry::FlipCols, Symmetry::Transpose, Symmetry::AntiTranspose};

template <class T>
Grid<T> apply(Symmetry s, Grid<T> const& g) {
  int const n = g.rows();
  Grid<T> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int const m = n - 1;
      T const& v = g(i, j);
      switch (s) {
        case Symmetry::Identity: out(i, j) = v; break;
        case Symmetry::Rot90: out(j, m - i) = v; break;
        case Symmetry::Rot180: out(m - i, m - j) = v; break;
        case Symmetry::Rot270: out(m - j, i) = v; break;
        case Symmetry::FlipRows: out(m - i, j) = v; break;
        case Symmetry::FlipCols: out(i, m - j) = v; break;
        case Symmetry::Transpose: out(j, i) = v; break;
        case Symmetry::AntiTranspose: out(m - j, m - i) = v; break;
      }
    }
  return out;
}

inline Asm apply(Symmetry s, Asm const& a) { return Asm(apply(s, a.entries())); }

/// The ten subgroups of D4.
enum class SymmetryGroup {
  Trivial,
  HalfTurn,         // {e, r^2}
  QuarterTurn,      // C4
  Horizontal,       // {e, flip rows}
  Vertical,         // {e, flip columns}
  Diagonal,         // {e, transpose}
  AntiDiagonal,     // {e, anti-transpose}
  BothAxes,         // {e, flip rows, flip columns, r^2}
  BothDiagonals,    // {e, transpose, anti-transpose, r^2}
  Full,             // D4
};

inline constexpr std::array<SymmetryGroup, 10> kAllGroups = {
    SymmetryGroup::Trivial,      SymmetryGroup::HalfTurn,     SymmetryGroup::QuarterTurn,
    SymmetryGroup::Horizontal,   SymmetryGroup::Vertical,     SymmetryGroup::Diagonal,
    SymmetryGroup::AntiDiagonal, SymmetryGroup::BothAxes,     SymmetryGroup::BothDiagonals,
    SymmetryGroup::Full};

inline std::vector<Symmetry> elements(SymmetryGroup g) {
  using S = Symmetry;
  switch (g) {
    case SymmetryGroup::Trivial: return {S::Identity};
    case SymmetryGroup::HalfTurn: return {S::Identity, S::Rot180};
    case SymmetryGroup::QuarterTurn: return {S::Identity, S::Rot90, S::Rot180, S::Rot270};
    case SymmetryGroup::Horizontal: return {S::Identity, S::FlipRows};
    case SymmetryGroup::Vertical: return {S::Identity, S::FlipCols};
    case SymmetryGroup::Diagonal: return {S::Identity, S::Transpose};
    case SymmetryGroup::AntiDiagonal: return {S::Identity, S::AntiTranspose};
    case SymmetryGroup::BothAxes: return {S::Identity, S::FlipRows, S::FlipCols, S::Rot180};
    case SymmetryGroup::BothDiagonals: return {S::Identity, S::Transpose, S::AntiTranspose, S::Rot180};
    case SymmetryGroup::Full: return {kAllSymmetries.begin(), kAllSymmetries.end()};
  }
  return {};
}

inline constexpr std::string_view group_name(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::Trivial: return "trivial";
    case SymmetryGroup::HalfTurn: return "half-turn";
    case SymmetryGroup::QuarterTurn: return "quarter-turn";
    case SymmetryGroup::Horizontal: return "horizontal";
    case SymmetryGroup::Vertical: return "vertical";
    case SymmetryGroup::Diagonal: return "diagonal";
    case SymmetryGroup::AntiDiagonal: return "antidiagonal";
    case SymmetryGroup::BothAxes: return "both-axes";
    case SymmetryGroup::BothDiagonals: return "both-diagonals";
    case SymmetryGroup::Full: return "full";
  }
  return "?";
}

inline std::optional<SymmetryGroup> parse_group(std::string_view name) {
  for (auto g : kAllGroups)
    if (group_name(g) == name) return g;
  return std::nullopt;
}

inline bool is_invariant(Asm const& a, SymmetryGroup g) {
  for (auto s : elements(g))
    if (apply(s, a.entries()) != a.entries()) return false;
  return true;
}

/// Counts ASMs of order n fixed by every element of g, by filtering the
/// enumeration stream.
inline BigCount count_symmetric(int n, SymmetryGroup g) {
  return reduce_asms<BigCount>(
      n, BigCount(0),
      [g](BigCount& acc, Asm const& a) {
        if (is_invariant(a, g)) ++acc;
      },
      [](BigCount& a, BigCount const& b) { a += b; });
}

}  // namespace asmkit
