#pragma once

// The acceptance criteria as runnable checks, shared by the acceptance test
// binary and `asmkit selftest`.

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "asmkit/atlas.hpp"
#include "asmkit/core.hpp"
#include "asmkit/enumerate.hpp"
#include "asmkit/fpl.hpp"
#include "asmkit/half.hpp"
#include "asmkit/hankel.hpp"
#include "asmkit/lattice.hpp"
#include "asmkit/recurrence.hpp"
#include "asmkit/sample.hpp"

namespace asmkit::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // first failures, or a summary when passing
  double seconds = 0;
};

namespace detail {

class Checker {
 public:
  void expect(bool ok, std::string const& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  template <class F>
  void guard(std::string const& what, F&& f) {
    try {
      f();
    } catch (std::exception const& e) {
      expect(false, what + ": " + e.what());
    }
  }

  bool passed() const { return failed_ == 0; }

  std::string detail(std::string const& summary) const {
    if (failed_ == 0) return summary + " (" + std::to_string(checks_) + " checks)";
    std::string s = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed";
    for (auto const& f : failures_) s += "; " + f;
    return s;
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

inline std::string str(BigInt const& v) { return v.str(); }

/// Every bijection pair composes to the identity, starting from a.
inline bool round_trips(Asm const& a) {
  auto const c = asm_to_corner_sum(a);
  auto const h = corner_sum_to_height(c);
  auto const t = height_to_coloring(h);
  auto const m = asm_to_monotone(a);
  auto const s = asm_to_six_vertex(a);
  auto const f = six_vertex_to_fpl(s);
  auto const poset = build_poset(a.n());
  auto const ideal = height_to_ideal(h, poset);
  return corner_sum_to_asm(c) == a && height_to_corner_sum(h) == c && coloring_to_height(t) == h &&
         monotone_to_asm(m) == a && asm_to_monotone(monotone_to_asm(m)) == m && six_vertex_to_asm(s) == a &&
         asm_to_six_vertex(six_vertex_to_asm(s)) == s && fpl_to_six_vertex(f) == s &&
         six_vertex_to_fpl(fpl_to_six_vertex(f)) == f && ideal_to_height(ideal) == h &&
         height_to_ideal(ideal_to_height(ideal), poset) == ideal && height_to_asm(h) == a;
}

/// Series coefficients of (1 - (1-9x)^(1/3)) / (3x) from the binomial series
/// (1-9x)^(1/3) = sum_k C(1/3, k) (-9x)^k.
inline std::vector<Rational> binomial_series(int m) {
  std::vector<Rational> out;
  for (int k = 1; k <= m; ++k) {
    Rational binom = 1;
    for (int t = 0; t < k; ++t) binom *= (Rational(1, 3) - t) / Rational(t + 1);
    out.push_back(-binom * pow_rational(Rational(-9), static_cast<unsigned>(k)) / 3);
  }
  return out;
}

}  // namespace detail

inline Result counting_agreement() {
  detail::Checker ck;
  std::vector<int> const expected = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    BigInt const want = expected[n - 1];
    auto const tag = "n=" + std::to_string(n);
    ck.expect(count_formula(n) == want, tag + " formula " + detail::str(count_formula(n)));
    ck.expect(BigInt(enumerate_asms(n).size()) == want, tag + " enumeration");
    ck.expect(count_transfer(n) == want, tag + " transfer " + detail::str(count_transfer(n)));
    ck.expect(count_ideals(*build_poset(n)) == want, tag + " ideals");
  }
  return {1, "counting agreement", ck.passed(), ck.detail("formula = enumeration = transfer = ideals for n=1..6")};
}

inline Result order3_atlas() {
  detail::Checker ck;
  ck.guard("atlas", [&] {
    for (std::size_t k = 0; k < 7; ++k) {
      auto const tag = "object " + std::to_string(k + 1);
      Asm const a = Asm::from_rows(atlas::order3_asms()[k]);
      CornerSum const c(Grid<int>::from_rows(atlas::order3_corner_sums()[k]));
      HeightFunction const h(Grid<int>::from_rows(atlas::order3_heights()[k]));
      ThreeColoring const t(Grid<int>::from_rows(atlas::order3_colorings()[k]));
      MonotoneTriangle const m(atlas::order3_triangles()[k]);
      ck.expect(asm_to_corner_sum(a) == c, tag + " corner sum");
      ck.expect(corner_sum_to_height(c) == h, tag + " height");
      ck.expect(height_to_coloring(h) == t, tag + " coloring");
      ck.expect(asm_to_monotone(a) == m, tag + " triangle");
      ck.expect(corner_sum_to_asm(c) == a && height_to_corner_sum(h) == c && coloring_to_height(t) == h &&
                    monotone_to_asm(m) == a,
                tag + " inverse maps");
    }
    std::set<Asm> listed, generated;
    for (auto const& r : atlas::order3_asms()) listed.insert(Asm::from_rows(r));
    for (auto const& a : enumerate_asms(3)) generated.insert(a);
    ck.expect(listed == generated, "generated order-3 set");
    ck.expect(asm_to_monotone(Asm::from_rows(atlas::order4_example())) ==
                  MonotoneTriangle(atlas::order4_example_triangle()),
              "order-4 example triangle");
  });
  return {2, "golden order-3 atlas", ck.passed(), ck.detail("7 objects x 5 representations, order-4 triangle")};
}

inline Result round_trip_suite() {
  detail::Checker ck;
  int n5 = 0;
  for_each_asm(5, [&](Asm const& a) {
    ++n5;
    ck.expect(detail::round_trips(a), "order-5 round trip");
  });
  ck.expect(n5 == 429, "order-5 count");
  for (int n : {8, 10}) {
    ck.guard("sampling n=" + std::to_string(n), [&] {
      auto const samples = cftp_samples(n, RandomSource(20240000 + n), 1000);
      for (auto const& s : samples) ck.expect(detail::round_trips(s.sample), "order-" + std::to_string(n) + " round trip");
    });
  }
  return {3, "round-trip property suite", ck.passed(), ck.detail("429 order-5 ASMs, 1000 samples each at n=8,10")};
}

inline Result weighted_identities() {
  detail::Checker ck;
  for (int n = 1; n <= 10; ++n) {
    auto const tag = "n=" + std::to_string(n);
    ck.expect(x_enumeration(n, 2) == Rational(pow_big(2, static_cast<unsigned>(n * (n - 1) / 2))), tag + " x=2");
    ck.expect(x_enumeration(n, 1) == Rational(count_formula(n)), tag + " x=1");
  }
  return {4, "weighted identities", ck.passed(), ck.detail("x=1 and x=2 enumerations for n=1..10")};
}

inline Result hybrid_identity() {
  detail::Checker ck;
  std::string values;
  for (int n = 1; n <= 8; ++n)
    ck.guard("n=" + std::to_string(n), [&] {
      auto const r = hybrid_2_enumeration(n, HybridPhase::OneOneEven);
      values += (values.empty() ? "" : ",") + std::string("2^") + std::to_string(r.twos) + "*5^" + std::to_string(r.fives);
      ck.expect(pow_big(2, r.twos) * pow_big(5, r.fives) == r.value, "factorization");
    });
  return {5, "hybrid identity", ck.passed(), ck.detail("(1,1) even: " + values)};
}

inline Result half_suite() {
  detail::Checker ck;
  for (int n = 1; n <= 5; ++n)
    ck.expect(half_2_enumeration_fixed_total(n) == pow_big(2, static_cast<unsigned>(n * n)),
              "fixed total n=" + std::to_string(n));
  std::vector<int> const free_values = {2, 20, 896, 177408};
  for (int n = 1; n <= 4; ++n)
    ck.expect(half_2_enumeration({n, FreeBottom{}}) == free_values[n - 1], "free bottom n=" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) ck.expect(half_average_property(n).all_equal, "average property n=" + std::to_string(n));
  return {6, "half-ASM suite", ck.passed(), ck.detail("fixed totals, free-bottom values, averages")};
}

inline Result fpl_suite() {
  detail::Checker ck;
  for (int n = 1; n <= 6; ++n) {
    auto const tag = "n=" + std::to_string(n);
    ck.guard(tag, [&] {
      auto const h = count_by_link_pattern(n);
      BigCount total = 0, linked12 = 0;
      bool rot = true, refl = true;
      for (auto const& [p, c] : h) {
        total += c;
        if (p.partner(1) == 2) linked12 += c;
        rot = rot && histogram_count(h, p.rotated()) == c;
        refl = refl && histogram_count(h, p.reflected()) == c;
      }
      ck.expect(total == count_formula(n), tag + " histogram total");
      if (n <= 5) ck.expect(rot && refl, tag + " rotation/reflection invariance");
      if (n >= 2)
        ck.expect(histogram_count(h, LinkPattern::adjacent_pairs(n)) == count_formula(n - 1), tag + " nesting count");
      ck.expect(Rational(linked12) == wilson_prediction_exact(n), tag + " 1-2 linking count");
    });
  }
  return {7, "FPL suite", ck.passed(), ck.detail("totals, invariance, nesting, 1-2 linking for n<=6")};
}

inline Result hankel_suite() {
  detail::Checker ck;
  for (int n = 1; n <= 6; ++n) ck.expect(hankel_identity(n).equal, "n=" + std::to_string(n));
  auto const lib = catalan3_coefficients(3);
  auto const series = detail::binomial_series(3);
  std::vector<int> const want = {1, 3, 15};
  for (int k = 0; k < 3; ++k) {
    ck.expect(series[k] == want[k], "binomial coefficient " + std::to_string(k));
    ck.expect(lib[k] == want[k], "library coefficient " + std::to_string(k));
  }
  return {8, "Hankel identity", ck.passed(), ck.detail("det = 3^C(n,2) A(n) for n=1..6; series 1,3,15")};
}

/// Pinned output of cftp_run(5, RandomSource(42)).
inline atlas::Rows const& seed42_order5_golden() {
  static atlas::Rows const v = {{0, 0, 1, 0, 0}, {1, 0, -1, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}};
  return v;
}
inline constexpr std::uint64_t kSeed42Order5Time = 1024;

/// Frozen-corner smoke check: samples, corner block size, and required passes.
inline constexpr int kFrozenSamples = 100;
inline constexpr int kFrozenBlock = 5;
inline constexpr int kFrozenRequired = 90;

inline Result sampler_suite() {
  detail::Checker ck;
  std::string summary;
  ck.guard("chi-square", [&] {
    auto const samples = cftp_samples(3, RandomSource(7), 70000);
    std::map<Asm, int> freq;
    for (auto const& s : samples) ++freq[s.sample];
    double stat = 0;
    double const e = 70000.0 / 7;
    for (auto const& [a, c] : freq) stat += (c - e) * (c - e) / e;
    stat += (7 - static_cast<int>(freq.size())) * e;
    double const p = boost::math::cdf(boost::math::complement(boost::math::chi_squared(6), stat));
    ck.expect(freq.size() == 7 && p > 0.001, "chi-square p=" + std::to_string(p));
    summary += "chi2 p=" + std::to_string(p);
  });
  ck.guard("monotonicity", [&] {
    std::vector<HeightFunction> hs;
    for_each_asm(4, [&](Asm const& a) { hs.push_back(asm_to_height(a)); });
    for (auto const& lo : hs)
      for (auto const& hi : hs) {
        if (!lo.leq(hi)) continue;
        for (int i = 1; i < 4; ++i)
          for (int j = 1; j < 4; ++j)
            for (bool coin : {false, true})
              ck.expect(glauber_step(lo, i, j, coin).leq(glauber_step(hi, i, j, coin)), "monotone step");
      }
  });
  ck.guard("determinism", [&] {
    auto const a = cftp_run(5, RandomSource(42));
    auto const b = cftp_run(5, RandomSource(42));
    ck.expect(a.sample == b.sample && a.coalescence_time == b.coalescence_time, "repeatable");
    ck.expect(a.sample == Asm::from_rows(seed42_order5_golden()) && a.coalescence_time == kSeed42Order5Time,
              "seed 42 golden");
  });
  ck.guard("frozen corners", [&] {
    auto const samples = cftp_samples(40, RandomSource(40), kFrozenSamples);
    int frozen = 0;
    for (auto const& s : samples) frozen += frozen_map(asm_to_height(s.sample)).corners_frozen(kFrozenBlock);
    ck.expect(frozen >= kFrozenRequired, "frozen corners in " + std::to_string(frozen) + " samples");
    summary += ", frozen corners " + std::to_string(frozen) + "/" + std::to_string(kFrozenSamples);
  });
  return {9, "sampler", ck.passed(), ck.detail(summary)};
}

inline Result recurrence_suite() {
  detail::Checker ck;
  for (int n = 1; n <= 4; ++n) {
    auto const tag = "n=" + std::to_string(n);
    ck.guard("octahedron " + tag, [&] {
      auto const p = octahedron(n, 1);
      auto const audit = audit_octahedron(p);
      ck.expect(BigInt(audit.terms) == pow_big(2, static_cast<unsigned>(n * (n + 1) / 2)), tag + " octahedron terms");
      auto const pairs = extract_pairs(p, n);
      ck.expect(pairs.size() == p.size(), tag + " pairs decoded");
      if (n == 2) {
        std::set<Asm> uppers, listed;
        for (auto const& q : pairs) uppers.insert(q.upper);
        for (auto const& r : atlas::order3_asms()) listed.insert(Asm::from_rows(r));
        ck.expect(uppers == listed, "n=2 uppers");
      }
      auto const ones = evaluate(p, [](VarId const&) { return Rational(1); });
      ck.expect(ones == Rational(pow_big(2, static_cast<unsigned>(n * (n + 1) / 2))), tag + " all-ones value");
      ck.expect(octahedron_all_ones(n).back() == ones, tag + " all-ones recurrence");
    });
    for (int lambda : {-1, 2})
      ck.guard("octahedron " + tag + " lambda=" + std::to_string(lambda), [&] { octahedron(n, lambda); });
    ck.guard("cube " + tag, [&] {
      auto const audit = audit_cube(cube(n), n);
      ck.expect(audit.min_exponent >= -1 && audit.max_exponent <= 4, tag + " cube exponents");
    });
  }
  return {10, "recurrence suite", ck.passed(), ck.detail("octahedron, pairs, all-ones, cube for n=1..4")};
}

struct Criterion {
  int id;
  std::string title;
  std::function<Result()> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "counting agreement", counting_agreement},
      {2, "golden order-3 atlas", order3_atlas},
      {3, "round-trip property suite", round_trip_suite},
      {4, "weighted identities", weighted_identities},
      {5, "hybrid identity", hybrid_identity},
      {6, "half-ASM suite", half_suite},
      {7, "FPL suite", fpl_suite},
      {8, "Hankel identity", hankel_suite},
      {9, "sampler", sampler_suite},
      {10, "recurrence suite", recurrence_suite},
  };
}

/// Runs one criterion, converting an escaped exception into a failure.
inline Result run(Criterion const& c) {
  auto const t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = c.run();
  } catch (std::exception const& e) {
    r = {c.id, c.title, false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string format_line(Result const& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << ": " << r.detail;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << " [" << r.seconds << "s]";
  return s.str();
}

}  // namespace asmkit::acceptance
