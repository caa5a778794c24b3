#include "qtile/products.hpp"

#include <map>
#include <stdexcept>

namespace qtile {

namespace {

void require_valid(const BoxBounds& b) {
  if (!b.valid()) throw std::invalid_argument("box bounds must be non-negative");
}

// prod (1 - a^delta q^{i+j+k-1}) / (1 - a^delta q^{i+j+k-2}) built directly
// as atom multiplicities; the telescoping in k cancels as it is collected.
QRational box_ratio(const BoxBounds& b, int delta) {
  require_valid(b);
  std::map<QAtom, int> mult;
  for (int i = 1; i <= b.r; ++i)
    for (int j = 1; j <= b.c; ++j)
      for (int k = 1; k <= b.n; ++k) {
        // i+j+k-2 >= 1, so no (1 - q^0) factor can occur.
        ++mult[QAtom{delta, i + j + k - 1}];
        --mult[QAtom{delta, i + j + k - 2}];
      }
  AtomPowers atoms;
  for (auto& [a, k] : mult)
    if (k != 0) atoms.push_back({a, k});
  return QRational(BiPoly(1), std::move(atoms));
}

}  // namespace

QRational macmahon_product(const BoxBounds& b) { return box_ratio(b, 0); }

mpz_class macmahon_count(const BoxBounds& b) {
  require_valid(b);
  mpq_class x(1);
  for (int i = 1; i <= b.r; ++i)
    for (int j = 1; j <= b.c; ++j)
      for (int k = 1; k <= b.n; ++k) x *= mpq_class(i + j + k - 1, i + j + k - 2);
  x.canonicalize();
  if (x.get_den() != 1) throw std::logic_error("box count is not an integer");
  return x.get_num();
}

QRational kamioka_rhs(const BoxBounds& b) { return box_ratio(b, 1); }

QRational kamioka_weight(const std::vector<int>& profile, int n) {
  QRational w(1);
  for (std::size_t idx = 0; idx < profile.size(); ++idx) {
    int k = static_cast<int>(idx) + 1;
    if (k > n) throw std::invalid_argument("Durfee profile longer than the part bound");
    w *= poch(0, n - k + 1, 1, profile[idx]);
    w /= poch(1, n - k + 1, 1, profile[idx]);
  }
  return w;
}

QRational kamioka_weight(const PlanePartition& pi, int n) {
  if (pi.max_part() > n) throw std::invalid_argument("plane partition exceeds the part bound");
  return kamioka_weight(durfee_profile(pi), n);
}

QRational kamioka_lhs(const BoxBounds& b) {
  require_valid(b);
  std::map<std::vector<int>, std::map<Exponent, long>> groups;
  for_each_in_box(b, [&](const PlanePartition& pi) {
    ++groups[durfee_profile(pi)][Exponent{static_cast<int>(trace(pi)), static_cast<int>(norm(pi))}];
  });
  QSum sum;
  for (const auto& [profile, monos] : groups) {
    std::vector<BiPoly::Term> terms;
    for (const auto& [e, count] : monos) terms.push_back({e, mpz_class(count)});
    sum.add(QRational(BiPoly::from_terms(std::move(terms))) * kamioka_weight(profile, b.n));
  }
  return sum.total();
}

BiPoly macmahon_lhs(const BoxBounds& b) {
  require_valid(b);
  std::map<int, long> counts;
  for_each_in_box(b, [&](const PlanePartition& pi) { ++counts[static_cast<int>(norm(pi))]; });
  std::vector<BiPoly::Term> terms;
  for (const auto& [e, c] : counts) terms.push_back({{0, e}, mpz_class(c)});
  return BiPoly::from_terms(std::move(terms));
}

BiPoly stanley_series(int r, int c, int N) {
  if (r < 0 || c < 0 || N < 0) throw std::invalid_argument("stanley_series needs r, c, N >= 0");
  BiPoly acc(1);
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= c; ++j) {
      int m = i + j - 1;
      std::vector<BiPoly::Term> geo;
      for (int k = 0; k * m <= N; ++k) geo.push_back({{k, k * m}, mpz_class(1)});
      acc = (acc * BiPoly::from_terms(std::move(geo))).truncated_q(N);
    }
  }
  return acc;
}

BiPoly stanley_enumerated(int r, int c, int N) {
  if (r < 0 || c < 0 || N < 0) throw std::invalid_argument("stanley_enumerated needs r, c, N >= 0");
  std::map<Exponent, long> counts;
  if (r == 0 || c == 0) return BiPoly(1);
  std::vector<int> cells(static_cast<std::size_t>(r) * c, 0);
  const int total = r * c;
  auto rec = [&](auto&& self, int pos, int budget, int tr, int used) -> void {
    if (pos == total) {
      ++counts[{tr, used}];
      return;
    }
    int i = pos / c, j = pos % c;
    int hi = budget;
    if (i > 0) hi = std::min(hi, cells[pos - c]);
    if (j > 0) hi = std::min(hi, cells[pos - 1]);
    for (int v = 0; v <= hi; ++v) {
      cells[pos] = v;
      self(self, pos + 1, budget - v, tr + (i == j ? v : 0), used + v);
    }
    cells[pos] = 0;
  };
  rec(rec, 0, N, 0, 0);
  std::vector<BiPoly::Term> terms;
  for (const auto& [e, k] : counts) terms.push_back({e, mpz_class(k)});
  return BiPoly::from_terms(std::move(terms));
}

QRational lemma_factor_A(const BoxBounds& b) {
  require_valid(b);
  QRational A(1);
  for (int i = 1; i <= b.d(); ++i) {
    A *= poch(1, b.n + i - 1, -1, i - 1);
    A /= poch(0, b.n + i - 1, -1, i - 1);
  }
  return A;
}

QRational lemma_monomial(const BoxBounds& b, LemmaExponent e) {
  require_valid(b);
  const int d = b.d();
  const int shift = e == LemmaExponent::Corrected ? b.n - 1 : b.n + 1;
  const int ea = -d * (d + 1) / 2 - shift * d;
  const int eq = -b.c * (b.r * (b.r + 1) / 2 + (b.n - 1) * b.r);
  return QRational::monomial(ea, eq);
}

QRational phi(const BoxBounds& b, LemmaExponent e) {
  return lemma_monomial(b, e) * lemma_factor_A(b) * kamioka_rhs(b);
}

QRational axis_correction(const BoxBounds& b) {
  require_valid(b);
  const int t = b.n + b.c - 1;
  return QRational::monomial(-t, 0) * poch(0, b.n, -1, 1 - b.c) / poch(1, b.n, -1, 1 - b.c);
}

QRational recurrence_first_coeff(const BoxBounds& b) {
  return QRational::monomial(0, -b.n - b.r + 1);
}

QRational recurrence_second_coeff(const BoxBounds& b) {
  const int d = b.d();
  QRational up = QRational::one_minus(1, b.n + 1) / QRational::one_minus(0, b.n + 1);
  QRational down = QRational::one_minus(0, b.n) / QRational::one_minus(1, b.n);
  return up.pow(d - 1) * down.pow(d);
}

std::string PhiRecurrenceResult::detail() const {
  std::string s;
  if (!first_matches) s += "first summand differs from (1-aq^{r+c-1})/(1-aq^{r+c+n-1}): " + first.to_string();
  if (!second_matches) {
    if (!s.empty()) s += "; ";
    s += "second summand differs from aq^{r+c-1}(1-q^n)/(1-aq^{r+c+n-1}): " + second.to_string();
  }
  return s;
}

PhiRecurrenceResult phi_recurrence_check(const BoxBounds& b, RecurrenceForm form, LemmaExponent e) {
  if (b.r < 1 || b.c < 1 || b.n < 1) throw std::invalid_argument("phi_recurrence_check needs r, c, n >= 1");
  const int r = b.r, c = b.c, n = b.n;
  auto P = [&](int rr, int cc, int nn) { return phi(BoxBounds{rr, cc, nn}, e); };
  const QRational base = P(r, c, n) * P(r - 1, c - 1, n);
  QRational k1 = recurrence_first_coeff(b);
  if (form == RecurrenceForm::AxisCorrected && r == c) k1 *= axis_correction(b);

  PhiRecurrenceResult res;
  res.first = k1 * P(r - 1, c, n) * P(r, c - 1, n) / base;
  res.second = recurrence_second_coeff(b) * P(r, c, n - 1) * P(r - 1, c - 1, n + 1) / base;
  const QRational denom = QRational::one_minus(1, r + c + n - 1);
  res.first_matches = res.first == QRational::one_minus(1, r + c - 1) / denom;
  res.second_matches =
      res.second == QRational::monomial(1, r + c - 1) * QRational::one_minus(0, n) / denom;
  res.holds = res.first + res.second == QRational(1);
  return res;
}

}  // namespace qtile
