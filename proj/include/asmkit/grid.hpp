#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace asmkit {

/// Dense row-major rectangular array with 0-based indexing.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  /// Builds from nested rows; ragged input yields a grid whose `ragged()` is true
  /// so validators can report it instead of asserting.
  static Grid from_rows(std::vector<std::vector<T>> const& rows) {
    Grid g;
    g.rows_ = static_cast<int>(rows.size());
    g.cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (auto const& r : rows) {
      if (static_cast<int>(r.size()) != g.cols_) g.ragged_ = true;
    }
    if (g.ragged_) return g;
    g.data_.reserve(static_cast<std::size_t>(g.rows_) * g.cols_);
    for (auto const& r : rows) g.data_.insert(g.data_.end(), r.begin(), r.end());
    return g;
  }

  static Grid from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<std::vector<T>> v;
    for (auto const& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool ragged() const noexcept { return ragged_; }
  bool square() const noexcept { return !ragged_ && rows_ == cols_; }

  T& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  T const& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  std::span<T const> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<T const> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (int r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
  }

  friend bool operator==(Grid const&, Grid const&) = default;
  friend auto operator<=>(Grid const& a, Grid const& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  bool ragged_ = false;
  std::vector<T> data_;
};

}  // namespace asmkit
