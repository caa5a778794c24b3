// qtile: enumerate plane partitions, run identity campaigns, draw tilings.
//
// Exit status: 0 all checks passed, 1 an identity failed, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtile/harness.hpp"
#include "qtile/lattice.hpp"
#include "qtile/products.hpp"
#include "qtile/render.hpp"

using namespace qtile;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool extended() {
  const char* v = std::getenv("QTILE_EXTENDED");
  return v != nullptr && std::string(v) == "1";
}

BoxBounds parse_max(const std::vector<int>& v) {
  if (v.empty()) {
    int k = extended() ? 4 : 3;
    return {k, k, k};
  }
  BoxBounds b;
  if (v.size() == 1)
    b = {v[0], v[0], v[0]};
  else if (v.size() == 3)
    b = {v[0], v[1], v[2]};
  else
    throw UsageError("--max takes one value k or three values R C N");
  if (!b.valid()) throw UsageError("--max bounds must be non-negative");
  return b;
}

// Output goes to --out when given, otherwise standard output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct VerifyOpts {
  std::string suite;
  std::vector<int> max;
  int jobs = 0;
  unsigned seed = 0;
  int grid_cases = -1;
  int norm = 8;
  bool as_printed = false;
  bool no_timing = false;
  std::string out;
};

std::vector<Task> verify_tasks(const VerifyOpts& o, CLI::App* sub) {
  const BoxBounds max = parse_max(o.max);
  const bool max_given = sub->count("--max") > 0;
  const auto rf = o.as_printed ? RecurrenceForm::AsPrinted : RecurrenceForm::AxisCorrected;
  const auto redf = o.as_printed ? ReductionForm::AsPrinted : ReductionForm::AxisCorrected;
  const auto chain = o.as_printed ? ChainForm::AsPrinted : ChainForm::Corrected;
  std::vector<Task> tasks;
  const std::string& s = o.suite;
  const bool all = s == "all";

  if (s == "kamioka" || all)
    for (auto b : box_grid(max)) tasks.push_back([b] { return verify_kamioka(b); });
  if (s == "macmahon" || all)
    for (auto b : box_grid(max)) tasks.push_back([b] { return verify_macmahon(b); });
  if (s == "stanley" || all) {
    if (o.norm < 0) throw UsageError("--norm must be non-negative");
    for (int r = 0; r <= max.r; ++r)
      for (int c = 0; c <= max.c; ++c) tasks.push_back([r, c, N = o.norm] { return verify_stanley(r, c, N); });
  }
  if (s == "kuo" || all) {
    // --grid-cases alone selects only the random grid suite.
    if (o.grid_cases < 0 || max_given || all)
      for (auto b : box_grid(max, true)) tasks.push_back([b] { return verify_kuo(b); });
    for (int k = 0; k < o.grid_cases; ++k) tasks.push_back([seed = o.seed, k] { return verify_kuo_grid(seed, k); });
  }
  if (s == "lemma")
    for (auto b : box_grid(max)) tasks.push_back([b] { return verify_lemma(b); });
  if (s == "reductions")
    for (auto b : box_grid(max, true)) tasks.push_back([b, redf] { return verify_reductions(b, redf); });
  if (s == "recurrence")
    for (auto b : box_grid(max, true)) tasks.push_back([b, rf] { return verify_recurrence(b, rf); });
  if (s == "phi-recurrence")
    for (auto b : box_grid(max, true)) tasks.push_back([b, rf] { return verify_phi_recurrence(b, rf); });
  if (s == "proof-chain" || all)
    for (auto b : box_grid(max)) tasks.push_back([b, chain] { return verify_proof_chain(b, chain); });
  return tasks;
}

int run_verify(const VerifyOpts& o, CLI::App* sub) {
  std::vector<Task> tasks = verify_tasks(o, sub);
  Sink sink(o.out);
  int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int passed = 0, failed = 0;
  run_campaign(tasks, jobs, [&](const VerificationReport& rep) {
    sink.os() << rep.to_json(!o.no_timing).dump() << "\n";
    sink.os().flush();
    (rep.pass ? passed : failed)++;
  });
  std::cerr << o.suite << ": " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kPass : kFail;
}

int run_enumerate(const std::vector<int>& box, const std::string& out) {
  BoxBounds b{box[0], box[1], box[2]};
  if (!b.valid()) throw UsageError("box bounds must be non-negative");
  Sink sink(out);
  mpz_class count = 0;
  for_each_in_box(b, [&](const PlanePartition& pi) {
    sink.os() << format_plane_partition(pi) << "\n";
    ++count;
  });
  const mpz_class expected = macmahon_count(b);
  std::cerr << "count " << count.get_str() << ", product oracle " << expected.get_str() << ": "
            << (count == expected ? "match" : "MISMATCH") << "\n";
  return count == expected ? kPass : kFail;
}

struct RenderOpts {
  std::vector<int> box;
  std::string partition;
  long index = -1;
  std::string format = "svg";
  bool paths = false;
  double scale = 24.0;
  std::string out;
};

nlohmann::json tiling_json(const LozengeTiling& t) {
  auto tri = [](const TriCoord& c) { return nlohmann::json{c.x, c.y, c.up ? "up" : "down"}; };
  nlohmann::json ls = nlohmann::json::array();
  for (const auto& l : t.lozenges())
    ls.push_back({{"orientation", to_string(l.orientation)}, {"up", tri(l.up)}, {"down", tri(l.down)}});
  const BoxBounds& b = t.region().bounds();
  return {{"bounds", box_params(b)}, {"partition", format_plane_partition(tiling_to_pp(t))}, {"lozenges", ls}};
}

int run_render(const RenderOpts& o) {
  BoxBounds b{o.box[0], o.box[1], o.box[2]};
  if (!b.valid()) throw UsageError("box bounds must be non-negative");
  if (!o.partition.empty() && o.index >= 0) throw UsageError("give a partition or --index, not both");
  if (o.scale <= 0) throw UsageError("--scale must be positive");
  PlanePartition pi;
  if (!o.partition.empty()) {
    try {
      pi = parse_plane_partition(o.partition);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
    if (!pi.fits(b)) throw UsageError("partition " + o.partition + " does not fit in box " + to_string(b));
  } else {
    long want = o.index < 0 ? 0 : o.index, k = 0;
    bool found = false;
    for_each_in_box(b, [&](const PlanePartition& p) {
      if (k++ == want) {
        pi = p;
        found = true;
      }
    });
    if (!found) throw UsageError("--index " + std::to_string(want) + " is past the last partition");
  }
  const LozengeTiling t = pp_to_tiling(pi, b);
  Sink sink(o.out);
  if (o.format == "svg") {
    sink.os() << render_svg(t, SvgOptions{o.scale, o.paths});
  } else if (o.format == "ascii") {
    sink.os() << render_ascii(t);
  } else {
    if (t.region().triangles().empty()) return kPass;
    sink.os() << tiling_json(t).dump() << "\n";
  }
  return kPass;
}

int run_bench(const std::vector<int>& maxv, bool enumerate_only, const std::string& out) {
  const BoxBounds max = parse_max(maxv);
  Sink sink(out);
  using clock = std::chrono::steady_clock;
  for (const auto& b : box_grid(max)) {
    auto t0 = clock::now();
    long count = 0;
    for_each_in_box(b, [&](const PlanePartition&) { ++count; });
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    nlohmann::json row = {{"box", box_params(b)},
                          {"partitions", count},
                          {"enumerate_ms", secs * 1000},
                          {"per_second", secs > 0 ? count / secs : 0.0}};
    if (!enumerate_only) {
      VerificationReport rep = verify_kamioka(b);
      row["kamioka_ms"] = rep.millis;
      row["kamioka_status"] = rep.pass ? "pass" : "fail";
    }
    sink.os() << row.dump() << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane partitions, lozenge tilings and their generating functions"};
  app.require_subcommand(1);

  std::vector<int> enum_box;
  std::string enum_out;
  auto* en = app.add_subcommand("enumerate", "List P(R,C,N) in canonical order, one partition per line");
  en->add_option("box", enum_box, "R C N")->expected(3)->required();
  en->add_option("--out", enum_out, "Output file");

  VerifyOpts vo;
  auto* ve = app.add_subcommand("verify", "Run a verification campaign, JSON lines on stdout");
  ve->add_option("suite", vo.suite, "Campaign")
      ->required()
      ->check(CLI::IsMember({"kamioka", "macmahon", "stanley", "kuo", "proof-chain", "all", "lemma", "reductions",
                             "recurrence", "phi-recurrence"}));
  ve->add_option("--max", vo.max, "k for the cube 0..k, or R C N")->expected(1, 3);
  ve->add_option("--jobs", vo.jobs, "Worker threads (default: all cores)");
  ve->add_option("--seed", vo.seed, "Seed for random grid cases")->capture_default_str();
  ve->add_option("--grid-cases", vo.grid_cases, "Number of random grid Kuo cases");
  ve->add_option("--norm", vo.norm, "Norm bound N for the stanley suite")->capture_default_str();
  ve->add_flag("--as-printed", vo.as_printed, "Use the formulas exactly as displayed, without the axis correction");
  ve->add_flag("--no-timing", vo.no_timing, "Write millis as 0");
  ve->add_option("--out", vo.out, "Output file");

  RenderOpts ro;
  auto* re = app.add_subcommand("render", "Draw one tiling of H(R,C,N)");
  re->add_option("box", ro.box, "R C N")->expected(3)->required();
  re->add_option("partition", ro.partition, "Plane partition such as [[2,1],[1]]");
  re->add_option("--index", ro.index, "Position in the enumeration order");
  re->add_option("--format", ro.format, "svg, ascii or json")->check(CLI::IsMember({"svg", "ascii", "json"}));
  re->add_flag("--paths", ro.paths, "Overlay the lozenge paths (svg)");
  re->add_option("--scale", ro.scale, "Pixels per triangle side")->capture_default_str();
  re->add_option("--out", ro.out, "Output file");

  std::vector<int> bench_max;
  bool bench_enum_only = false;
  std::string bench_out;
  auto* be = app.add_subcommand("bench", "Time enumeration and the Kamioka check per box");
  be->add_option("--max", bench_max, "k or R C N")->expected(1, 3);
  be->add_flag("--enumerate-only", bench_enum_only, "Skip the Kamioka timing");
  be->add_option("--out", bench_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) return run_enumerate(enum_box, enum_out);
    if (*ve) return run_verify(vo, ve);
    if (*re) return run_render(ro);
    if (*be) return run_bench(bench_max, bench_enum_only, bench_out);
  } catch (const UsageError& e) {
    std::cerr << "qtile: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
