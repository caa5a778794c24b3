#pragma once

#include <string>

#include "qtile/bipoly.hpp"
#include "qtile/partition.hpp"
#include "qtile/qrational.hpp"

namespace qtile {

/// prod_{i<=r, j<=c, k<=n} (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2}).
QRational macmahon_product(const BoxBounds& b);
/// |P(r,c,n)| = prod_{i,j,k} (i+j+k-1)/(i+j+k-2), the q -> 1 limit of
/// macmahon_product.
mpz_class macmahon_count(const BoxBounds& b);
/// prod_{i,j,k} (1 - a q^{i+j+k-1}) / (1 - a q^{i+j+k-2}).
QRational kamioka_rhs(const BoxBounds& b);
/// w_n(pi; a, q) = prod_{k=1}^{pi_11} (q^{n-k+1};q)_{D_k} / (a q^{n-k+1};q)_{D_k}.
QRational kamioka_weight(const PlanePartition& pi, int n);
/// Weight depends on pi only through its Durfee profile.
QRational kamioka_weight(const std::vector<int>& profile, int n);
/// Sum over P(r,c,n) of a^tr q^|pi| w_n(pi). Terms are grouped by Durfee
/// profile before the common-denominator sum.
QRational kamioka_lhs(const BoxBounds& b);
/// Sum over P(r,c,n) of q^|pi|.
BiPoly macmahon_lhs(const BoxBounds& b);
/// prod_{i<=r, j<=c} 1/(1 - a q^{i+j-1}) expanded up to q-degree N.
BiPoly stanley_series(int r, int c, int N);
/// Sum of a^tr q^|pi| over plane partitions with at most r rows, c columns
/// and norm at most N (brute-force side of the Stanley check).
BiPoly stanley_enumerated(int r, int c, int N);

/// A = prod_{i=1}^{d} (a q^{n+i-1}; q^-1)_{i-1} / (q^{n+i-1}; q^-1)_{i-1}.
QRational lemma_factor_A(const BoxBounds& b);

/// Which a-exponent to use in the global monomial of the hexagon formula.
enum class LemmaExponent {
  Corrected,  ///< a^{-d(d+1)/2 - (n-1)d}, matches the n = 0 base case
  AsPrinted,  ///< a^{-d(d+1)/2 - (n+1)d}
};

/// a^{-d(d+1)/2 - (n -+ 1)d} q^{-c(r(r+1)/2 + (n-1)r)}.
QRational lemma_monomial(const BoxBounds& b, LemmaExponent e = LemmaExponent::Corrected);
/// Closed form of the wt tiling generating function of H_{r,c,n}:
/// lemma_monomial * A * kamioka_rhs.
QRational phi(const BoxBounds& b, LemmaExponent e = LemmaExponent::Corrected);

/// wt of the floor lozenge of pile cell (c,c) divided by its off-axis value
/// q^{-t}, t = n+c-1: a^{-t} (q^n;q^-1)_{1-c} / (a q^n;q^-1)_{1-c}.
/// This lozenge is forced by the corner deletions exactly when r >= c.
QRational axis_correction(const BoxBounds& b);

/// Coefficient of the first Kuo term, q^{-n-r+1}.
QRational recurrence_first_coeff(const BoxBounds& b);
/// Coefficient of the second Kuo term,
/// (1-aq^{n+1})^{d-1} (1-q^n)^d / ((1-q^{n+1})^{d-1} (1-aq^n)^d).
QRational recurrence_second_coeff(const BoxBounds& b);

enum class RecurrenceForm {
  AsPrinted,      ///< coefficients exactly as displayed
  AxisCorrected,  ///< first coefficient times axis_correction when r == c
};

struct PhiRecurrenceResult {
  bool holds = false;
  bool first_matches = false;   ///< first summand == (1-aq^{r+c-1})/(1-aq^{r+c+n-1})
  bool second_matches = false;  ///< second == a q^{r+c-1}(1-q^n)/(1-aq^{r+c+n-1})
  QRational first;
  QRational second;
  std::string detail() const;
};

/// Checks that phi satisfies the Kuo recurrence, normalised to "... = 1".
/// Requires r, c, n >= 1.
PhiRecurrenceResult phi_recurrence_check(const BoxBounds& b,
                                         RecurrenceForm form = RecurrenceForm::AsPrinted,
                                         LemmaExponent e = LemmaExponent::Corrected);

}  // namespace qtile
