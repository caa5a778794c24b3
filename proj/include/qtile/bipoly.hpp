#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace qtile {

/// Exponent pair of a monomial a^ea q^eq. Both may be negative.
struct Exponent {
  int a = 0;
  int q = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Laurent polynomial in a and q with arbitrary-precision integer
/// coefficients. Terms are kept sorted by (ea, eq) with no zero coefficients,
/// so structural equality is polynomial equality.
class BiPoly {
 public:
  struct Term {
    Exponent e;
    mpz_class coeff;
    bool operator==(const Term& o) const { return e == o.e && coeff == o.coeff; }
  };

  BiPoly() = default;
  BiPoly(long c);  // NOLINT: integers are constants
  explicit BiPoly(const mpz_class& c);
  static BiPoly monomial(const mpz_class& c, int ea, int eq);
  static BiPoly monomial(int ea, int eq) { return monomial(1, ea, eq); }
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static BiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Single term with coefficient +1 or -1.
  bool is_unit() const;
  mpz_class coeff(int ea, int eq) const;
  int min_q() const;
  int max_q() const;
  std::size_t size() const { return terms_.size(); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  bool operator==(const BiPoly&) const = default;

  BiPoly shifted(int ea, int eq) const;
  /// this * (1 - a^ea q^eq), done as a linear merge.
  BiPoly times_one_minus(int ea, int eq) const;
  /// Drops all terms with q-exponent > max_q.
  BiPoly truncated_q(int max_q) const;
  /// Substitutes a := 1.
  BiPoly at_a_one() const;
  mpq_class evaluate(const mpq_class& a, const mpq_class& q) const;

  /// Canonical text `c * a^e1 * q^e2 + ...`; the zero polynomial is `0`.
  std::string to_string() const;
  /// Canonical JSON: array of [coeff_string, e_a, e_q] triples in term order.
  nlohmann::json to_json() const;
  static BiPoly from_json(const nlohmann::json& j);

 private:
  std::vector<Term> terms_;
};

mpq_class pow_q(const mpq_class& x, int e);

}  // namespace qtile
