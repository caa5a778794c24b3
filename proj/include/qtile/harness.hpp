#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtile/matching.hpp"
#include "qtile/partition.hpp"

namespace qtile {

struct VerificationReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  long long millis = 0;
  /// On failure: both sides as expanded {"num", "den"} BiPoly JSON, plus
  /// whatever the check wants to add.
  std::optional<nlohmann::json> witness;

  /// {identity, params, status, millis, witness?}; millis is written as 0
  /// when timing is off, so reruns compare byte for byte.
  nlohmann::json to_json(bool timing = true) const;
};

nlohmann::json box_params(const BoxBounds& b);
nlohmann::json side_witness(const QRational& lhs, const QRational& rhs);

VerificationReport verify_kamioka(const BoxBounds& b);
/// Also checks the number of partitions against macmahon_count.
VerificationReport verify_macmahon(const BoxBounds& b);
VerificationReport verify_stanley(int r, int c, int N);
/// Kuo condensation on the hexagon dual graph with the corner placement.
VerificationReport verify_kuo(const BoxBounds& b);
/// Kuo condensation on random grid case `index`; the case depends only on
/// (seed, index).
VerificationReport verify_kuo_grid(unsigned seed, int index);

/// Lemma prefactor: A wt(T_pi) / (q^|pi| a^tr w_n) must be the same for all
/// pi in the box. Passes iff it is uniform and equals
/// A^2 a^{-d(d+1)/2-(n-1)d} q^{-c(r(r+1)/2+(n-1)r)}; the params record
/// whether the printed statement holds as well.
VerificationReport verify_lemma(const BoxBounds& b);
VerificationReport verify_gen_fn(const BoxBounds& b, LemmaExponent e);
VerificationReport verify_reductions(const BoxBounds& b, ReductionForm form);
VerificationReport verify_recurrence(const BoxBounds& b, RecurrenceForm form);
VerificationReport verify_phi_recurrence(const BoxBounds& b, RecurrenceForm form);

enum class ChainForm { Corrected, AsPrinted };

/// Lemma, sum of wt against phi, the five reductions, the tiling
/// recurrence and the phi recurrence, stopping at the first failure. The
/// last three need r, c, n >= 1 and are skipped otherwise.
VerificationReport verify_proof_chain(const BoxBounds& b, ChainForm form = ChainForm::Corrected);

/// All boxes 0..max (or 1..max with positive = true), r slowest.
std::vector<BoxBounds> box_grid(const BoxBounds& max, bool positive = false);

using Task = std::function<VerificationReport()>;

/// Runs tasks on up to `jobs` threads and hands the reports to `emit` in
/// task order as soon as each prefix is complete. An exception inside a
/// task becomes a failing report.
void run_campaign(const std::vector<Task>& tasks, int jobs,
                  const std::function<void(const VerificationReport&)>& emit);

}  // namespace qtile
