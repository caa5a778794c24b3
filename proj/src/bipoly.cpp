#include "qtile/bipoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtile {

namespace {

// Merge two sorted term lists as x + sign*y.
std::vector<BiPoly::Term> merge(const std::vector<BiPoly::Term>& x,
                                const std::vector<BiPoly::Term>& y, int sign) {
  std::vector<BiPoly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].e < y[j].e)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].e < x[i].e) {
      out.push_back({y[j].e, sign > 0 ? mpz_class(y[j].coeff) : mpz_class(-y[j].coeff)});
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(x[i].coeff + y[j].coeff)
                             : mpz_class(x[i].coeff - y[j].coeff);
      if (c != 0) out.push_back({x[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

mpq_class pow_q(const mpq_class& x, int e) {
  mpq_class base = x, result = 1;
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    base = 1 / x;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

BiPoly::BiPoly(long c) {
  if (c != 0) terms_.push_back({{0, 0}, mpz_class(c)});
}

BiPoly::BiPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

BiPoly BiPoly::monomial(const mpz_class& c, int ea, int eq) {
  BiPoly p;
  if (c != 0) p.terms_.push_back({{ea, eq}, c});
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.e < y.e; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().e == t.e) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  BiPoly p;
  for (auto& t : merged)
    if (t.coeff != 0) p.terms_.push_back(std::move(t));
  return p;
}

bool BiPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

mpz_class BiPoly::coeff(int ea, int eq) const {
  Exponent e{ea, eq};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.e < x; });
  if (it != terms_.end() && it->e == e) return it->coeff;
  return 0;
}

int BiPoly::min_q() const {
  if (terms_.empty()) throw std::domain_error("min_q of zero polynomial");
  int m = terms_[0].e.q;
  for (const auto& t : terms_) m = std::min(m, t.e.q);
  return m;
}

int BiPoly::max_q() const {
  if (terms_.empty()) throw std::domain_error("max_q of zero polynomial");
  int m = terms_[0].e.q;
  for (const auto& t : terms_) m = std::max(m, t.e.q);
  return m;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.is_monomial() && y.terms_[0].coeff == 1) return x.shifted(y.terms_[0].e.a, y.terms_[0].e.q);
  if (x.is_monomial() && x.terms_[0].coeff == 1) return y.shifted(x.terms_[0].e.a, x.terms_[0].e.q);
  std::map<Exponent, mpz_class> acc;
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) {
      acc[{s.e.a + t.e.a, s.e.q + t.e.q}] += s.coeff * t.coeff;
    }
  }
  BiPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back({e, std::move(c)});
  return p;
}

BiPoly BiPoly::shifted(int ea, int eq) const {
  BiPoly p = *this;
  for (auto& t : p.terms_) {
    t.e.a += ea;
    t.e.q += eq;
  }
  return p;
}

BiPoly BiPoly::times_one_minus(int ea, int eq) const {
  BiPoly p;
  p.terms_ = merge(terms_, shifted(ea, eq).terms_, -1);
  return p;
}

BiPoly BiPoly::truncated_q(int max_q) const {
  BiPoly p;
  for (const auto& t : terms_)
    if (t.e.q <= max_q) p.terms_.push_back(t);
  return p;
}

BiPoly BiPoly::at_a_one() const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({{0, t.e.q}, t.coeff});
  return from_terms(std::move(ts));
}

mpq_class BiPoly::evaluate(const mpq_class& a, const mpq_class& q) const {
  mpq_class s = 0;
  for (const auto& t : terms_) s += mpq_class(t.coeff) * pow_q(a, t.e.a) * pow_q(q, t.e.q);
  return s;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    const auto& t = terms_[i];
    s += t.coeff.get_str() + " * a^" + std::to_string(t.e.a) + " * q^" + std::to_string(t.e.q);
  }
  return s;
}

nlohmann::json BiPoly::to_json() const {
  auto j = nlohmann::json::array();
  for (const auto& t : terms_) j.push_back({t.coeff.get_str(), t.e.a, t.e.q});
  return j;
}

BiPoly BiPoly::from_json(const nlohmann::json& j) {
  std::vector<Term> ts;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("BiPoly JSON terms are triples");
    ts.push_back({{t[1].get<int>(), t[2].get<int>()}, mpz_class(t[0].get<std::string>())});
  }
  return from_terms(std::move(ts));
}

}  // namespace qtile
