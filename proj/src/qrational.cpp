#include "qtile/qrational.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtile {

namespace {

AtomPowers combine(const AtomPowers& x, const AtomPowers& y, int sign) {
  AtomPowers out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back({y[j].first, sign * y[j].second});
      ++j;
    } else {
      int k = x[i].second + sign * y[j].second;
      if (k != 0) out.push_back({x[i].first, k});
      ++i;
      ++j;
    }
  }
  return out;
}

// Elementwise min over the union (missing entries count as zero).
AtomPowers meet(const AtomPowers& x, const AtomPowers& y) {
  AtomPowers out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      if (x[i].second < 0) out.push_back(x[i]);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      if (y[j].second < 0) out.push_back(y[j]);
      ++j;
    } else {
      int k = std::min(x[i].second, y[j].second);
      if (k != 0) out.push_back({x[i].first, k});
      ++i;
      ++j;
    }
  }
  return out;
}

BiPoly expand_minus(const BiPoly& poly, const AtomPowers& atoms, const AtomPowers& base) {
  return expand_atoms(poly, combine(atoms, base, -1));
}

}  // namespace

BiPoly expand_atoms(BiPoly poly, const AtomPowers& atoms) {
  for (const auto& [atom, k] : atoms) {
    if (k < 0) throw std::logic_error("expand_atoms: negative multiplicity");
    for (int t = 0; t < k; ++t) poly = poly.times_one_minus(atom.delta, atom.m);
  }
  return poly;
}

QRational::QRational(BiPoly p, AtomPowers atoms) : poly_(std::move(p)), atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  AtomPowers merged;
  for (const auto& [a, k] : atoms_) {
    if (a.delta != 0 && a.delta != 1) throw std::invalid_argument("atom delta must be 0 or 1");
    if (a.delta == 0 && a.m < 1) throw std::invalid_argument("q-only atom needs m >= 1");
    if (!merged.empty() && merged.back().first == a)
      merged.back().second += k;
    else
      merged.push_back({a, k});
  }
  atoms_ = std::move(merged);
  normalize();
}

void QRational::normalize() {
  if (poly_.is_zero()) {
    atoms_.clear();
    return;
  }
  std::erase_if(atoms_, [](const auto& e) { return e.second == 0; });
}

QRational QRational::one_minus(int delta, int m) {
  if (delta == 0) {
    if (m == 0) return QRational();
    if (m < 0) return QRational(BiPoly::monomial(-1, 0, m), {{QAtom{0, -m}, 1}});
  }
  return QRational(BiPoly(1), {{QAtom{delta, m}, 1}});
}

int QRational::multiplicity(const QAtom& atom) const {
  for (const auto& [a, k] : atoms_)
    if (a == atom) return k;
  return 0;
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.poly_ = -r.poly_;
  return r;
}

QRational& QRational::operator*=(const QRational& o) {
  poly_ = poly_ * o.poly_;
  atoms_ = combine(atoms_, o.atoms_, +1);
  normalize();
  return *this;
}

QRational& QRational::operator/=(const QRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!o.poly_.is_unit())
    throw std::domain_error("division requires a unit monomial times atoms");
  const auto& t = o.poly_.terms()[0];
  poly_ = poly_.shifted(-t.e.a, -t.e.q);
  if (t.coeff < 0) poly_ = -poly_;
  atoms_ = combine(atoms_, o.atoms_, -1);
  normalize();
  return *this;
}

QRational& QRational::operator+=(const QRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  AtomPowers base = meet(atoms_, o.atoms_);
  BiPoly sum = expand_minus(poly_, atoms_, base) + expand_minus(o.poly_, o.atoms_, base);
  poly_ = std::move(sum);
  atoms_ = std::move(base);
  normalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational QRational::pow(int k) const {
  if (k < 0) return QRational(1) / pow(-k);
  QRational r(1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

bool operator==(const QRational& x, const QRational& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
  if (x.atoms_ == y.atoms_) return x.poly_ == y.poly_;
  AtomPowers base = meet(x.atoms_, y.atoms_);
  return expand_minus(x.poly_, x.atoms_, base) == expand_minus(y.poly_, y.atoms_, base);
}

std::optional<mpq_class> QRational::evaluate(const mpq_class& a, const mpq_class& q) const {
  mpq_class v = poly_.evaluate(a, q);
  for (const auto& [atom, k] : atoms_) {
    mpq_class f = 1 - pow_q(a, atom.delta) * pow_q(q, atom.m);
    if (f == 0) {
      if (k < 0) return std::nullopt;
      return mpq_class(0);
    }
    v *= pow_q(f, k);
  }
  return v;
}

QRational QRational::at_a_one() const {
  QRational r(poly_.at_a_one());
  for (const auto& [atom, k] : atoms_) {
    if (atom.m == 0) {
      if (k < 0) throw std::domain_error("a := 1 makes a denominator vanish");
      return QRational();
    }
    r *= one_minus(0, atom.m).pow(k);
  }
  return r;
}

BiPoly QRational::expanded_numerator() const {
  AtomPowers num;
  for (const auto& e : atoms_)
    if (e.second > 0) num.push_back(e);
  return expand_atoms(poly_, num);
}

BiPoly QRational::expanded_denominator() const {
  AtomPowers den;
  for (const auto& [a, k] : atoms_)
    if (k < 0) den.push_back({a, -k});
  return expand_atoms(BiPoly(1), den);
}

std::string QRational::to_string() const {
  if (is_zero()) return "0";
  std::string num = "(" + poly_.to_string() + ")", den;
  for (const auto& [a, k] : atoms_) {
    std::string f = "(1 - " + std::string(a.delta ? "a*" : "") + "q^" + std::to_string(a.m) + ")";
    if (std::abs(k) != 1) f += "^" + std::to_string(std::abs(k));
    if (k > 0)
      num += " * " + f;
    else
      den += (den.empty() ? "" : " * ") + f;
  }
  return den.empty() ? num : num + " / (" + den + ")";
}

nlohmann::json QRational::to_json() const {
  auto atoms = nlohmann::json::array();
  for (const auto& [a, k] : atoms_) atoms.push_back({a.delta, a.m, k});
  return {{"poly", poly_.to_json()}, {"atoms", atoms}};
}

nlohmann::json QRational::to_expanded_json() const {
  return {{"num", expanded_numerator().to_json()}, {"den", expanded_denominator().to_json()}};
}

void QSum::add(const QRational& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = groups_.try_emplace(x.atoms_, x.poly_);
  if (!inserted) {
    it->second += x.poly_;
  }
}

QRational QSum::total() const {
  AtomPowers base;
  bool first = true;
  for (const auto& [atoms, poly] : groups_) {
    if (poly.is_zero()) continue;
    base = first ? atoms : meet(base, atoms);
    first = false;
  }
  if (first) return QRational();
  BiPoly sum;
  for (const auto& [atoms, poly] : groups_) {
    if (poly.is_zero()) continue;
    sum += expand_minus(poly, atoms, base);
  }
  return QRational(std::move(sum), base);
}

QRational poch(int delta, int m, int step, int N) {
  if (step != 1 && step != -1) throw std::invalid_argument("poch step must be +1 or -1");
  if (N < 0) {
    int M = -N;
    return QRational(1) / poch(delta, m - step * M, step, M);
  }
  QRational r(1);
  for (int j = 0; j < N; ++j) r *= QRational::one_minus(delta, m + step * j);
  return r;
}

}  // namespace qtile
