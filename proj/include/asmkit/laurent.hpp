#pragma once

// Sparse multivariate Laurent polynomials with integer coefficients.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/error.hpp"

namespace asmkit {

enum class Layer : std::uint8_t { X, Y, Z };

constexpr char layer_char(Layer l) { return l == Layer::X ? 'x' : l == Layer::Y ? 'y' : 'z'; }

struct VarId {
  Layer layer = Layer::X;
  int i = 0;
  int j = 0;
  int k = 0;
  bool has_k = false;  // written x(i,j,k) rather than x(i,j)

  friend bool operator==(VarId const&, VarId const&) = default;
  friend auto operator<=>(VarId const& a, VarId const& b) {
    return std::tie(a.layer, a.i, a.j, a.k, a.has_k) <=> std::tie(b.layer, b.i, b.j, b.k, b.has_k);
  }

  std::string name() const {
    std::string s(1, layer_char(layer));
    s += "(" + std::to_string(i) + "," + std::to_string(j);
    if (has_k) s += "," + std::to_string(k);
    return s + ")";
  }

  static VarId plane(Layer l, int i, int j) { return {l, i, j, 0, false}; }
  static VarId space(Layer l, int i, int j, int k) { return {l, i, j, k, true}; }
};

/// Exponent vector stored as (variable, nonzero exponent) sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, int e = 1) {
    if (e != 0) terms_.emplace_back(v, e);
  }

  std::vector<std::pair<VarId, int>> const& terms() const noexcept { return terms_; }
  bool is_one() const noexcept { return terms_.empty(); }

  int exponent(VarId const& v) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](auto const& t, VarId const& x) { return t.first < x; });
    return it != terms_.end() && it->first == v ? it->second : 0;
  }

  friend Monomial operator*(Monomial const& a, Monomial const& b) { return combine(a, b, 1); }
  friend Monomial operator/(Monomial const& a, Monomial const& b) { return combine(a, b, -1); }

  friend bool operator==(Monomial const&, Monomial const&) = default;

  /// Lexicographic term order: at the smallest variable whose exponents differ,
  /// the larger exponent wins. Compatible with multiplication.
  friend std::strong_ordering operator<=>(Monomial const& a, Monomial const& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first))
        return ia->second <=> 0;
      if (ia == a.terms_.end() || ib->first < ia->first) return 0 <=> ib->second;
      if (ia->second != ib->second) return ia->second <=> ib->second;
      ++ia;
      ++ib;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (terms_.empty()) return "1";
    std::string s;
    for (auto const& [v, e] : terms_) {
      if (!s.empty()) s += '*';
      s += v.name();
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  static Monomial combine(Monomial const& a, Monomial const& b, int sign) {
    Monomial out;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.emplace_back(ib->first, sign * ib->second);
        ++ib;
      } else {
        int const e = ia->second + sign * ib->second;
        if (e != 0) out.terms_.emplace_back(ia->first, e);
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  std::vector<std::pair<VarId, int>> terms_;
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(BigInt c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
  }
  LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(Monomial m, BigInt c = 1) {
    if (c != 0) terms_.emplace(std::move(m), std::move(c));
  }

  static LaurentPoly var(VarId v) { return LaurentPoly(Monomial(v)); }

  Terms const& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest term under the monomial order.
  std::pair<Monomial, BigInt> leading() const {
    if (terms_.empty()) throw Error(Errc::InvariantViolated, "zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  void add_term(Monomial const& m, BigInt const& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(LaurentPoly const& o) {
    for (auto const& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(LaurentPoly const& o) {
    for (auto const& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }

  friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly out;
    for (auto const& [ma, ca] : a.terms_)
      for (auto const& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto const& [m, c] = *it;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      BigInt const a = abs(c);
      if (m.is_one()) s += a.str();
      else s += (a == 1 ? "" : a.str() + "*") + m.to_string();
    }
    return s;
  }

 private:
  Terms terms_;
};

/// Quotient of num by den when it is a Laurent polynomial; NotDivisible
/// otherwise, naming the leading term that could not be cancelled.
inline LaurentPoly exact_divide(LaurentPoly const& num, LaurentPoly const& den) {
  if (den.is_zero()) throw Error(Errc::NotDivisible, "division by zero polynomial");
  // Per-variable exponent box any quotient term must lie in.
  std::map<VarId, std::pair<int, int>> box;
  auto extent = [](LaurentPoly const& p) {
    std::map<VarId, std::pair<int, int>> out;
    for (auto const& [m, c] : p.terms())
      for (auto const& [v, e] : m.terms()) out.try_emplace(v, 0, 0);
    for (auto& [v, r] : out) {
      bool first = true;
      for (auto const& [m, c] : p.terms()) {
        int const e = m.exponent(v);
        r = first ? std::pair{e, e} : std::pair{std::min(r.first, e), std::max(r.second, e)};
        first = false;
      }
    }
    return out;
  };
  auto const en = extent(num), ed = extent(den);
  auto range_of = [](auto const& m, VarId const& v) {
    auto it = m.find(v);
    return it == m.end() ? std::pair{0, 0} : it->second;
  };
  for (auto const* src : {&en, &ed})
    for (auto const& [v, r] : *src) {
      auto const a = range_of(en, v), b = range_of(ed, v);
      box[v] = {a.first - b.first, a.second - b.second};
    }
  auto in_box = [&](Monomial const& m) {
    for (auto const& [v, r] : box) {
      int const e = m.exponent(v);
      if (e < r.first || e > r.second) return false;
    }
    for (auto const& [v, e] : m.terms())
      if (!box.count(v)) return false;
    return true;
  };
  auto const [dm, dc] = den.leading();
  LaurentPoly rem = num, quot;
  while (!rem.is_zero()) {
    auto const [rm, rc] = rem.leading();
    Monomial const qm = rm / dm;
    if (rc % dc != 0 || !in_box(qm))
      throw Error(Errc::NotDivisible, "remainder term " + rc.str() + "*" + rm.to_string() + " not cancelled");
    LaurentPoly const t(qm, rc / dc);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

/// Substitutes a rational value for every variable.
inline Rational evaluate(LaurentPoly const& p, std::function<Rational(VarId const&)> const& value) {
  std::map<VarId, Rational> cache;
  Rational acc = 0;
  for (auto const& [m, c] : p.terms()) {
    Rational t(c);
    for (auto const& [v, e] : m.terms()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, value(v)).first;
      t *= e > 0 ? pow_rational(it->second, static_cast<unsigned>(e))
                 : 1 / pow_rational(it->second, static_cast<unsigned>(-e));
    }
    acc += t;
  }
  return acc;
}

}  // namespace asmkit
