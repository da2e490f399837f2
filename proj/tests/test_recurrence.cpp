#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "asmkit/enumerate.hpp"
#include "asmkit/recurrence.hpp"

using namespace asmkit;

namespace {

LaurentPoly x(int i, int j) { return LaurentPoly::var(VarId::plane(Layer::X, i, j)); }
LaurentPoly y(int i, int j) { return LaurentPoly::var(VarId::plane(Layer::Y, i, j)); }

LaurentPoly random_poly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> var(0, 3), exp(-2, 2), coeff(-3, 3);
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < 3; ++k) m = m * Monomial(VarId::plane(Layer::X, var(rng), 0), exp(rng));
    p.add_term(m, coeff(rng));
  }
  return p;
}

// Random nonzero rationals keyed by variable, drawn lazily.
struct RandomValues {
  explicit RandomValues(unsigned seed) : rng(seed) {}
  std::mt19937 rng;
  std::map<VarId, Rational> values;
  Rational operator()(VarId const& v) {
    auto it = values.find(v);
    if (it != values.end()) return it->second;
    std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
    Rational r(num(rng), den(rng));
    if (sign(rng)) r = -r;
    return values.emplace(v, r).first->second;
  }
};

// Octahedron recurrence run directly on numbers.
Rational octahedron_numeric(int n, int lambda, RandomValues& val) {
  std::map<std::tuple<int, int, int>, Rational> f;
  std::function<Rational(int, int, int)> at = [&](int i, int j, int k) -> Rational {
    if (k == -1) return val(VarId::plane(Layer::X, i, j));
    if (k == 0) return val(VarId::plane(Layer::Y, i, j));
    auto key = std::tuple{i, j, k};
    if (auto it = f.find(key); it != f.end()) return it->second;
    Rational const r = (at(i + 1, j, k - 1) * at(i - 1, j, k - 1) + lambda * at(i, j + 1, k - 1) * at(i, j - 1, k - 1)) /
                       at(i, j, k - 2);
    return f.emplace(key, r).first->second;
  };
  return at(0, 0, n);
}

Rational cube_numeric(int i, int j, int k, RandomValues& val) {
  std::map<std::tuple<int, int, int>, Rational> f;
  std::function<Rational(int, int, int)> at = [&](int a, int b, int c) -> Rational {
    int const s = a + b + c;
    if (s <= 1) return val(VarId::space(s == -1 ? Layer::X : s == 0 ? Layer::Y : Layer::Z, a, b, c));
    auto key = std::tuple{a, b, c};
    if (auto it = f.find(key); it != f.end()) return it->second;
    Rational const r = (at(a - 1, b, c) * at(a, b - 1, c - 1) + at(a, b - 1, c) * at(a - 1, b, c - 1) +
                        at(a, b, c - 1) * at(a - 1, b - 1, c)) /
                       at(a - 1, b - 1, c - 1);
    return f.emplace(key, r).first->second;
  };
  return at(i, j, k);
}

}  // namespace

TEST(Laurent, NamesAndPrinting) {
  EXPECT_EQ(VarId::plane(Layer::X, 0, 1).name(), "x(0,1)");
  EXPECT_EQ(VarId::space(Layer::Z, 0, 0, -1).name(), "z(0,0,-1)");
  auto const p = x(0, 0) * y(1, 0) - LaurentPoly(2) * x(0, 0) * x(0, 0) + LaurentPoly(3);
  EXPECT_EQ(p.to_string(), "-2*x(0,0)^2 + x(0,0)*y(1,0) + 3");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  Monomial const m = Monomial(VarId::plane(Layer::X, 0, 0)) / Monomial(VarId::plane(Layer::Y, 0, 0), 2);
  EXPECT_EQ(m.to_string(), "x(0,0)*y(0,0)^-2");
  EXPECT_EQ(m.exponent(VarId::plane(Layer::Y, 0, 0)), -2);
}

TEST(Laurent, OrderIsMultiplicative) {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto const a = random_poly(rng, 1), b = random_poly(rng, 1), c = random_poly(rng, 1);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto const ma = a.leading().first, mb = b.leading().first, mc = c.leading().first;
    if (ma < mb) {
      EXPECT_LT(ma * mc, mb * mc);
    }
  }
}

TEST(Laurent, ExactDivisionInvertsMultiplication) {
  std::mt19937 rng(2);
  for (int t = 0; t < 100; ++t) {
    auto const a = random_poly(rng, 4), b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
}

TEST(Laurent, NotDivisible) {
  auto const one = LaurentPoly(1);
  EXPECT_THROW(exact_divide(x(0, 0) * x(0, 0) + one, x(0, 0) + one), Error);
  EXPECT_THROW(exact_divide(x(0, 0), LaurentPoly()), Error);
  try {
    exact_divide(x(0, 0) + LaurentPoly(3), LaurentPoly(2));
    ADD_FAILURE();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
}

TEST(Laurent, EvaluateWithNegativeExponents) {
  auto const p = exact_divide(x(0, 0) * x(0, 0) + y(0, 0), x(0, 0));
  auto const v = evaluate(p, [](VarId const& id) { return id.layer == Layer::X ? Rational(2) : Rational(3); });
  EXPECT_EQ(v, Rational(7, 2));
}

TEST(Octahedron, TermCountsAndAudit) {
  for (int n = 1; n <= 4; ++n) {
    auto const p = octahedron(n);
    auto const a = audit_octahedron(p);
    EXPECT_EQ(BigInt(a.terms), pow_big(2, static_cast<unsigned>(n * (n + 1) / 2)));
    EXPECT_GE(a.min_exponent, -1);
    EXPECT_LE(a.max_exponent, 1);
  }
  EXPECT_EQ(octahedron(1).to_string(), "x(0,0)^-1*y(-1,0)*y(1,0) + x(0,0)^-1*y(0,-1)*y(0,1)");
  EXPECT_THROW(octahedron(0), Error);
}

TEST(Octahedron, AgreesWithNumericRecurrence) {
  for (int lambda : {1, -1, 2}) {
    std::vector<LaurentPoly> polys;
    for (int n = 1; n <= 3; ++n) polys.push_back(octahedron(n, lambda));
    for (int trial = 0; trial < 50; ++trial) {
      for (int n = 1; n <= 3; ++n) {
        RandomValues val(static_cast<unsigned>(1000 * lambda + 10 * trial + n));
        auto const direct = octahedron_numeric(n, lambda, val);
        EXPECT_EQ(evaluate(polys[n - 1], std::ref(val)), direct) << "lambda=" << lambda << " n=" << n;
      }
    }
  }
}

TEST(Octahedron, AllOnes) {
  for (int lambda : {1, 2, 3}) {
    auto const ones = octahedron_all_ones(4, lambda);
    for (int n = 1; n <= 4; ++n)
      EXPECT_EQ(evaluate(octahedron(n, lambda), [](VarId const&) { return Rational(1); }), ones[n - 1]);
  }
}

TEST(CompatiblePairs, CoverBothOrdersWithPowerOfTwoMultiplicities) {
  for (int n = 1; n <= 4; ++n) {
    auto const pairs = extract_pairs(octahedron(n), n);
    std::map<Asm, int> by_upper, by_lower;
    for (auto const& p : pairs) {
      ASSERT_EQ(p.lower.n(), n);
      ASSERT_EQ(p.upper.n(), n + 1);
      ++by_upper[p.upper];
      ++by_lower[p.lower];
    }
    EXPECT_EQ(BigCount(by_upper.size()), count_formula(n + 1));
    EXPECT_EQ(BigCount(by_lower.size()), count_formula(n));
    for (auto const& [b, k] : by_upper) EXPECT_EQ(k, 1 << b.count(-1));
    for (auto const& [a, k] : by_lower) EXPECT_EQ(k, 1 << a.count(1));
    std::set<std::pair<Asm, Asm>> distinct;
    for (auto const& p : pairs) distinct.emplace(p.lower, p.upper);
    EXPECT_EQ(distinct.size(), pairs.size());
  }
}

TEST(CompatiblePairs, DecodeErrors) {
  try {
    extract_pairs(octahedron(2), 3);
    ADD_FAILURE();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::DecodeFailed);
  }
  EXPECT_THROW(extract_pairs(LaurentPoly::var(VarId::space(Layer::Z, 0, 0, 1)), 1), Error);
  EXPECT_THROW(extract_pairs(y(0, 1), 1), Error);
}

TEST(Cube, TermCountsAndAudit) {
  std::vector<int> const terms = {1, 3, 9, 81, 729};
  for (int n = 1; n <= 5; ++n) {
    auto const p = cube(n);
    auto const [i, j, k] = cube_site(n);
    EXPECT_EQ(i + j + k, n);
    auto const a = audit_cube(p, n);
    EXPECT_EQ(static_cast<int>(a.terms), terms[n - 1]);
    EXPECT_GE(a.min_exponent, -1);
  }
  EXPECT_THROW(audit_cube(LaurentPoly(x(0, 0)) + x(0, 1), 1), Error);
  EXPECT_THROW(audit_octahedron(LaurentPoly(2) * x(0, 0)), Error);
}

TEST(Cube, AgreesWithNumericRecurrence) {
  for (int trial = 0; trial < 50; ++trial)
    for (int n = 2; n <= 4; ++n) {
      auto const [i, j, k] = cube_site(n);
      RandomValues val(static_cast<unsigned>(trial * 7 + n));
      auto const direct = cube_numeric(i, j, k, val);
      EXPECT_EQ(evaluate(cube(n), std::ref(val)), direct) << "n=" << n;
    }
}

TEST(Cube, AllOnes) {
  auto const g = cube_all_ones(5);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(evaluate(cube(n), [](VarId const&) { return Rational(1); }), g[n - 1]);
}
