#pragma once

// The seven order-3 objects in each representation, listed in the same order
// so that entry k of every table corresponds to entry k of the others, plus
// one order-4 example with its monotone triangle.

#include <vector>

namespace asmkit::atlas {

using Rows = std::vector<std::vector<int>>;

inline std::vector<Rows> const& order3_asms() {
  static std::vector<Rows> const v = {
      {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},  {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
      {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},  {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}},
      {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},  {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
  };
  return v;
}

inline std::vector<Rows> const& order3_corner_sums() {
  static std::vector<Rows> const v = {
      {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 2}, {0, 1, 2, 3}},
      {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 2}, {0, 1, 2, 3}},
      {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 2}, {0, 1, 2, 3}},
      {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 2}, {0, 1, 2, 3}},
      {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}},
      {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 2}, {0, 1, 2, 3}},
      {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}},
  };
  return v;
}

inline std::vector<Rows> const& order3_heights() {
  static std::vector<Rows> const v = {
      {{0, 1, 2, 3}, {1, 2, 3, 2}, {2, 3, 2, 1}, {3, 2, 1, 0}},
      {{0, 1, 2, 3}, {1, 2, 3, 2}, {2, 1, 2, 1}, {3, 2, 1, 0}},
      {{0, 1, 2, 3}, {1, 2, 1, 2}, {2, 3, 2, 1}, {3, 2, 1, 0}},
      {{0, 1, 2, 3}, {1, 2, 1, 2}, {2, 1, 2, 1}, {3, 2, 1, 0}},
      {{0, 1, 2, 3}, {1, 2, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}},
      {{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 2, 1}, {3, 2, 1, 0}},
      {{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}},
  };
  return v;
}

inline std::vector<Rows> const& order3_colorings() {
  static std::vector<Rows> const v = {
      {{0, 1, 2, 0}, {1, 2, 0, 2}, {2, 0, 2, 1}, {0, 2, 1, 0}},
      {{0, 1, 2, 0}, {1, 2, 0, 2}, {2, 1, 2, 1}, {0, 2, 1, 0}},
      {{0, 1, 2, 0}, {1, 2, 1, 2}, {2, 0, 2, 1}, {0, 2, 1, 0}},
      {{0, 1, 2, 0}, {1, 2, 1, 2}, {2, 1, 2, 1}, {0, 2, 1, 0}},
      {{0, 1, 2, 0}, {1, 2, 1, 2}, {2, 1, 0, 1}, {0, 2, 1, 0}},
      {{0, 1, 2, 0}, {1, 0, 1, 2}, {2, 1, 2, 1}, {0, 2, 1, 0}},
      {{0, 1, 2, 0}, {1, 0, 1, 2}, {2, 1, 0, 1}, {0, 2, 1, 0}},
  };
  return v;
}

inline std::vector<Rows> const& order3_triangles() {
  static std::vector<Rows> const v = {
      {{3}, {2, 3}, {1, 2, 3}}, {{3}, {1, 3}, {1, 2, 3}}, {{2}, {2, 3}, {1, 2, 3}}, {{2}, {1, 3}, {1, 2, 3}},
      {{2}, {1, 2}, {1, 2, 3}}, {{1}, {1, 3}, {1, 2, 3}}, {{1}, {1, 2}, {1, 2, 3}},
  };
  return v;
}

inline Rows const& order4_example() {
  static Rows const v = {{0, 1, 0, 0}, {1, -1, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}};
  return v;
}

inline Rows const& order4_example_triangle() {
  static Rows const v = {{2}, {1, 3}, {1, 3, 4}, {1, 2, 3, 4}};
  return v;
}

}  // namespace asmkit::atlas
