#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtile/bipoly.hpp"

namespace qtile {

/// The factor (1 - a^delta q^m). delta is 0 or 1; m >= 1 when delta == 0.
struct QAtom {
  int delta = 0;
  int m = 1;
  auto operator<=>(const QAtom&) const = default;
};

/// Sorted (atom, multiplicity) list; positive multiplicities sit in the
/// numerator, negative ones in the denominator. Zero entries are never kept.
using AtomPowers = std::vector<std::pair<QAtom, int>>;

/// Rational function poly * prod atom^k over atoms (1 - a^delta q^m).
///
/// Denominators are always products of atoms, so no gcd is needed:
/// two values are compared by dividing out the common atom powers and
/// cross-multiplying the expanded remainders.
class QRational {
 public:
  QRational() = default;  // zero
  QRational(long c) : poly_(c) {}  // NOLINT: integers are constants
  explicit QRational(BiPoly p) : poly_(std::move(p)) {}
  QRational(BiPoly p, AtomPowers atoms);

  static QRational one() { return QRational(1); }
  static QRational monomial(int ea, int eq) { return QRational(BiPoly::monomial(ea, eq)); }
  /// (1 - a^delta q^m). For delta == 0 a negative m is rewritten as
  /// -q^m (1 - q^-m); m == 0 with delta == 0 gives zero.
  static QRational one_minus(int delta, int m);

  const BiPoly& poly() const { return poly_; }
  const AtomPowers& atoms() const { return atoms_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// Multiplicity of an atom (negative when it divides).
  int multiplicity(const QAtom& atom) const;

  QRational operator-() const;
  QRational& operator*=(const QRational& o);
  /// Divisor must be a unit monomial times atoms; otherwise throws
  /// std::domain_error.
  QRational& operator/=(const QRational& o);
  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  friend QRational operator*(QRational x, const QRational& y) { return x *= y; }
  friend QRational operator/(QRational x, const QRational& y) { return x /= y; }
  friend QRational operator+(QRational x, const QRational& y) { return x += y; }
  friend QRational operator-(QRational x, const QRational& y) { return x -= y; }
  QRational pow(int k) const;

  /// Value equality of the rational functions.
  friend bool operator==(const QRational& x, const QRational& y);

  /// nullopt when a denominator atom vanishes at the point.
  std::optional<mpq_class> evaluate(const mpq_class& a, const mpq_class& q) const;
  /// Substitutes a := 1. Throws std::domain_error if a denominator atom
  /// becomes zero.
  QRational at_a_one() const;

  BiPoly expanded_numerator() const;
  BiPoly expanded_denominator() const;

  std::string to_string() const;
  /// {"poly": BiPoly JSON, "atoms": [[delta, m, multiplicity], ...]}
  nlohmann::json to_json() const;
  /// {"num": ..., "den": ...} with both sides expanded.
  nlohmann::json to_expanded_json() const;

 private:
  void normalize();

  BiPoly poly_;
  AtomPowers atoms_;

  friend class QSum;
};

/// Expands poly * prod atom^k; every k must be non-negative.
BiPoly expand_atoms(BiPoly poly, const AtomPowers& atoms);

/// Sum accumulator. Terms are grouped by atom signature and only brought to
/// a common denominator once, at total().
class QSum {
 public:
  void add(const QRational& x);
  QRational total() const;
  std::size_t groups() const { return groups_.size(); }

 private:
  std::map<AtomPowers, BiPoly> groups_;
};

/// (x; qstep)_N with x = a^delta q^m and qstep = q^step, step = +-1.
/// Negative N uses (x;p)_{-M} = 1 / (x p^{-M}; p)_M.
QRational poch(int delta, int m, int step, int N);

}  // namespace qtile
