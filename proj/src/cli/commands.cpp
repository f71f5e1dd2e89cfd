#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>

#include "ls2pc/cli.hpp"
#include "ls2pc/csv.hpp"
#include "ls2pc/datagen.hpp"
#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/iterations.hpp"
#include "ls2pc/metrics.hpp"
#include "ls2pc/pca_oracle.hpp"

namespace ls2pc::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kSchemaVersion = 1;
constexpr double kCompareTolerance = 1e-8;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Emitted when a command finishes but cannot produce a rate.
class NoRateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string input;
  std::size_t d = 0;
  std::optional<std::uint64_t> seed;
  std::string u0_path;
  std::string out_path;
  bool center = false;
  bool no_timestamp = false;
};

// Flag > LS2PC_SEED > 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LS2PC_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
      throw UsageError(std::string("LS2PC_SEED is not an unsigned integer: ") + env);
    }
    return v;
  }
  return 0;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json rows_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

fs::path meta_path_for(const fs::path& data_path) {
  fs::path meta = data_path;
  meta.replace_extension(".meta.json");
  return meta;
}

std::optional<json> load_meta(const fs::path& data_path) {
  const fs::path meta = meta_path_for(data_path);
  std::ifstream in(meta);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed metadata " + meta.string() + ": " + e.what());
  }
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + out_path);
  file << text;
}

// CSV rows are samples; the library wants samples as columns.
DataMatrix load_data(const CommonFlags& flags, bool require_more_samples) {
  Matrix table = csv::read(flags.input);
  if (flags.center) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      auto column = table.col(j);
      double mean = 0.0;
      for (double v : column) mean += v;
      mean /= static_cast<double>(column.size());
      for (double& v : column) v -= mean;
    }
  }
  DataMatrix data(transpose(table));
  if (require_more_samples && data.samples() <= data.dim()) {
    throw UsageError("need more samples than dimensions (N > p); got N=" +
                     std::to_string(data.samples()) + ", p=" + std::to_string(data.dim()));
  }
  if (flags.d < 1 || flags.d > data.dim()) {
    throw UsageError("--d must lie in [1, " + std::to_string(data.dim()) + "]");
  }
  return data;
}

// The generator draws its axes from random_orthonormal(p, p, seed), so a start
// drawn from the same seed would already span the answer.
constexpr std::uint64_t kStartSeedMask = 0x9e3779b97f4a7c15ULL;

Basis initial_basis(const CommonFlags& flags, std::size_t p, std::uint64_t seed) {
  if (flags.u0_path.empty()) return random_orthonormal(p, flags.d, seed ^ kStartSeedMask);
  const Matrix u0 = csv::read(flags.u0_path);
  if (u0.rows() != p || u0.cols() != flags.d) {
    throw UsageError("--u0 must be a " + std::to_string(p) + " x " + std::to_string(flags.d) +
                     " CSV (rows are coordinates, columns are basis vectors)");
  }
  return gram_schmidt(u0);
}

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--input,-i", flags.input, "Data CSV, one sample per row")->required();
  cmd.add_option("--d", flags.d, "Subspace dimension")->required();
  cmd.add_option("--seed", flags.seed, "Seed for the random initial basis (overrides LS2PC_SEED)");
  cmd.add_option("--u0", flags.u0_path, "Initial basis CSV (p rows, d columns)");
  cmd.add_flag("--center", flags.center, "Subtract the per-feature mean before fitting");
  cmd.add_option("--out,-o", flags.out_path, "Write JSON here instead of stdout");
  cmd.add_flag("--no-timestamp", flags.no_timestamp, "Omit the generated_at field");
}

json finish(json doc, bool no_timestamp) {
  if (!no_timestamp) doc["generated_at"] = utc_timestamp();
  return doc;
}

// ---- generate ----

struct GenerateFlags {
  std::size_t p = 0;
  std::size_t n = 0;
  std::vector<double> spectrum;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> d;
  std::string out_path;
  bool no_timestamp = false;
};

int cmd_generate(const GenerateFlags& flags) {
  if (flags.p == 0 || flags.n <= flags.p) throw UsageError("need 1 <= p < n");
  if (flags.spectrum.size() != flags.p) {
    throw UsageError("--spectrum needs exactly p = " + std::to_string(flags.p) + " values");
  }
  const std::size_t d = flags.d.value_or(flags.p);
  if (d < 1 || d > flags.p) throw UsageError("--d must lie in [1, p]");
  std::optional<Spectrum> spectrum;
  try {
    spectrum.emplace(flags.spectrum);
  } catch (const Error& e) {
    throw UsageError(std::string("--spectrum: ") + e.what());
  }
  const std::uint64_t seed = resolve_seed(flags.seed);
  const GenSpec spec{flags.p, flags.n, *spectrum, seed};
  const GeneratedInstance inst = generate_with_spectrum(spec);

  const fs::path out_path(flags.out_path);
  try {
    csv::write(out_path, transpose(inst.data.matrix()));
  } catch (const csv::ParseError& e) {
    throw UsageError(e.what());
  }

  json meta;
  meta["schema"] = kSchemaVersion;
  meta["spec"] = {{"p", flags.p}, {"n", flags.n}, {"spectrum", flags.spectrum}, {"seed", seed}};
  meta["prescribed_spectrum"] = flags.spectrum;
  meta["oracle_dim"] = d;
  meta["oracle_basis"] = rows_json(inst.principal_axes.leading(d).matrix());
  emit(finish(std::move(meta), flags.no_timestamp), meta_path_for(out_path).string(), std::cout);
  return kOk;
}

// ---- fit ----

struct FitFlags {
  CommonFlags common;
  std::string algorithm = "ls2pc";
  double eps = 1e-10;
  std::size_t max_iter = 1000;
  std::string stop_metric = "projector";
  bool oracle = false;
};

int cmd_fit(const FitFlags& flags, std::ostream& out) {
  const CommonFlags& common = flags.common;
  if (flags.algorithm == "power" && common.d != 1) {
    throw UsageError("--algorithm power computes a single vector; use --d 1");
  }
  const DataMatrix data = load_data(common, true);
  const std::uint64_t seed = resolve_seed(common.seed);
  const Basis u0 = initial_basis(common, data.dim(), seed);
  const PrincipalSpace truth = pca_topd(data, common.d);

  IterationSettings settings;
  settings.eps = flags.eps;
  settings.max_iter = flags.max_iter;
  settings.stop_metric = flags.stop_metric == "raw" ? StopMetric::RawBasisDifference
                                                    : StopMetric::ProjectorDistance;
  if (flags.oracle) settings.oracle = OracleReference{truth.basis, truth.degenerate_gap};

  std::optional<SubspaceResult> result;
  if (flags.algorithm == "ls2pc") {
    result = ls2pc(data, u0, settings);
  } else if (flags.algorithm == "subspace") {
    result = subspace_iteration(scatter(data), u0, settings);
  } else {
    result = power_iteration(scatter(data), u0.column(0), settings);
  }

  json doc;
  doc["schema"] = kSchemaVersion;
  if (auto meta = load_meta(common.input); meta && meta->contains("spec")) doc["spec"] = (*meta)["spec"];
  doc["settings"] = {{"algorithm", flags.algorithm},
                     {"d", common.d},
                     {"eps", flags.eps},
                     {"max_iter", flags.max_iter},
                     {"stop_metric", to_string(settings.stop_metric)},
                     {"center", common.center},
                     {"seed", seed},
                     {"u0", common.u0_path.empty() ? "random" : "file"},
                     {"oracle", flags.oracle}};
  json res;
  res["basis"] = rows_json(result->basis.matrix());
  res["iterations"] = result->iterations;
  res["terminated"] = to_string(result->terminated);
  res["degenerate_gap"] = truth.degenerate_gap;
  if (result->condition) {
    res["condition"] = {{"satisfied", result->condition->satisfied},
                        {"smallest_cosine", result->condition->smallest_cosine}};
  }
  if (flags.oracle) res["oracle_error"] = subspace_distance(result->basis, truth.basis);
  res["warnings"] = result->warnings;
  doc["result"] = std::move(res);

  json trace = json::array();
  for (const IterationStep& step : result->trace.steps) {
    json entry = {{"k", step.k}, {"step_change", step.step_change}};
    if (step.oracle_error) entry["oracle_error"] = *step.oracle_error;
    trace.push_back(std::move(entry));
  }
  doc["trace"] = std::move(trace);
  emit(finish(std::move(doc), common.no_timestamp), common.out_path, out);
  return kOk;
}

// ---- compare ----

struct CompareFlags {
  CommonFlags common;
  std::size_t k = 30;
};

int cmd_compare(const CompareFlags& flags, std::ostream& out) {
  const CommonFlags& common = flags.common;
  const DataMatrix data = load_data(common, true);
  const std::uint64_t seed = resolve_seed(common.seed);
  const Basis u0 = initial_basis(common, data.dim(), seed);
  const std::vector<double> distances = run_paired(data, u0, flags.k);
  const double max_distance = *std::max_element(distances.begin(), distances.end());
  const bool passed = max_distance <= kCompareTolerance;

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["settings"] = {{"d", common.d},
                     {"k", flags.k},
                     {"center", common.center},
                     {"seed", seed},
                     {"u0", common.u0_path.empty() ? "random" : "file"}};
  doc["distances"] = distances;
  doc["max_distance"] = max_distance;
  doc["tolerance"] = kCompareTolerance;
  doc["passed"] = passed;
  emit(finish(std::move(doc), common.no_timestamp), common.out_path, out);
  return passed ? kOk : kCheckFailed;
}

// ---- rate ----

struct RateFlags {
  CommonFlags common;
  std::size_t k_lo = 5;
  std::size_t k_hi = 25;
  double band = 0.2;
  std::optional<double> predicted;
  double eps = 1e-15;
};

int cmd_rate(const RateFlags& flags, std::ostream& out) {
  const CommonFlags& common = flags.common;
  if (flags.k_lo >= flags.k_hi) throw UsageError("--k-lo must be smaller than --k-hi");
  if (!(flags.band > 0.0)) throw UsageError("--band must be positive");
  const DataMatrix data = load_data(common, true);
  if (common.d >= data.dim()) throw UsageError("a rate needs d < p");
  const PrincipalSpace truth = pca_topd(data, common.d);

  double predicted = 0.0;
  std::string predicted_source;
  if (flags.predicted) {
    predicted = *flags.predicted;
    predicted_source = "flag";
    if (truth.degenerate_gap) {
      throw NoRateError("singular values d and d+1 of the data coincide; no rate is defined");
    }
  } else {
    const auto meta = load_meta(common.input);
    if (!meta || !meta->contains("prescribed_spectrum")) {
      throw UsageError("no prescribed spectrum: give --predicted or keep the .meta.json file");
    }
    const Spectrum prescribed((*meta)["prescribed_spectrum"].get<std::vector<double>>());
    if (prescribed.size() != data.dim()) {
      throw UsageError("metadata spectrum length differs from the data dimension");
    }
    if (has_degenerate_gap(prescribed, common.d)) {
      throw NoRateError("prescribed singular values d and d+1 coincide; no rate is defined");
    }
    predicted = predicted_rate(prescribed, common.d);
    predicted_source = "metadata";
  }

  const std::uint64_t seed = resolve_seed(common.seed);
  const Basis u0 = initial_basis(common, data.dim(), seed);
  IterationSettings settings;
  settings.eps = flags.eps;
  settings.max_iter = flags.k_hi;
  settings.oracle = OracleReference{truth.basis, truth.degenerate_gap};
  const SubspaceResult result = ls2pc(data, u0, settings);
  const std::vector<double> errors = error_sequence(result.trace, truth.basis);

  const std::size_t k_hi_used = clip_window(errors, flags.k_lo, flags.k_hi);
  if (flags.k_lo >= errors.size() || k_hi_used <= flags.k_lo) {
    throw Error(ErrorCode::WindowAtFloor,
                "errors reach the numerical floor before the window [" +
                    std::to_string(flags.k_lo) + ", " + std::to_string(flags.k_hi) + "] has two points");
  }
  const RateEstimate fit = estimate_rate(errors, flags.k_lo, k_hi_used);
  const bool within = std::abs(fit.ratio - predicted) <= flags.band * predicted;

  json doc;
  doc["schema"] = kSchemaVersion;
  if (auto meta = load_meta(common.input); meta && meta->contains("spec")) doc["spec"] = (*meta)["spec"];
  doc["settings"] = {{"d", common.d},
                     {"k_lo", flags.k_lo},
                     {"k_hi", flags.k_hi},
                     {"band", flags.band},
                     {"eps", flags.eps},
                     {"center", common.center},
                     {"seed", seed},
                     {"u0", common.u0_path.empty() ? "random" : "file"}};
  doc["predicted"] = predicted;
  doc["predicted_source"] = predicted_source;
  doc["fitted"] = fit.ratio;
  doc["per_step"] = fit.per_step_ratios;
  doc["window"] = {{"k_lo", flags.k_lo}, {"k_hi", k_hi_used}};
  doc["errors"] = errors;
  doc["within_band"] = within;
  emit(finish(std::move(doc), common.no_timestamp), common.out_path, out);
  return within ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal subspaces by iterative least squares"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Write a data set with a prescribed spectrum");
  generate->add_option("--p", gen.p, "Ambient dimension")->required();
  generate->add_option("--n", gen.n, "Number of samples")->required();
  generate->add_option("--spectrum", gen.spectrum, "Singular values, comma separated")
      ->required()
      ->delimiter(',');
  generate->add_option("--seed", gen.seed, "Generator seed (overrides LS2PC_SEED)");
  generate->add_option("--d", gen.d, "Columns of the principal axes to record (default p)");
  generate->add_option("--out,-o", gen.out_path, "Output CSV; metadata goes next to it")->required();
  generate->add_flag("--no-timestamp", gen.no_timestamp, "Omit the generated_at field");

  FitFlags fit;
  auto* fit_cmd = app.add_subcommand("fit", "Approximate the leading principal subspace");
  add_common(*fit_cmd, fit.common);
  fit_cmd->add_option("--algorithm", fit.algorithm, "ls2pc, subspace or power")
      ->check(CLI::IsMember({"ls2pc", "subspace", "power"}));
  fit_cmd->add_option("--eps", fit.eps, "Stopping threshold")->check(CLI::PositiveNumber);
  fit_cmd->add_option("--max-iter", fit.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  fit_cmd->add_option("--stop-metric", fit.stop_metric, "projector or raw")
      ->check(CLI::IsMember({"projector", "raw"}));
  fit_cmd->add_flag("--oracle", fit.oracle, "Track the error against an eigensolver reference");

  CompareFlags cmp;
  auto* compare = app.add_subcommand("compare", "Run LS2PC and Subspace Iterations in lockstep");
  add_common(*compare, cmp.common);
  compare->add_option("--k", cmp.k, "Number of steps");

  RateFlags rate;
  auto* rate_cmd = app.add_subcommand("rate", "Fit the geometric convergence factor");
  add_common(*rate_cmd, rate.common);
  rate_cmd->add_option("--k-lo", rate.k_lo, "First iteration of the fit window");
  rate_cmd->add_option("--k-hi", rate.k_hi, "Last iteration of the fit window");
  rate_cmd->add_option("--band", rate.band, "Accepted relative deviation from the prediction");
  rate_cmd->add_option("--predicted", rate.predicted, "Predicted factor (default: from metadata)");
  rate_cmd->add_option("--eps", rate.eps, "Stopping threshold")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ls2pc: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (fit_cmd->parsed()) return cmd_fit(fit, out);
    if (compare->parsed()) return cmd_compare(cmp, out);
    if (rate_cmd->parsed()) return cmd_rate(rate, out);
  } catch (const UsageError& e) {
    err << "ls2pc: " << e.what() << "\n";
    return kUsage;
  } catch (const csv::ParseError& e) {
    err << "ls2pc: " << e.what() << "\n";
    return kUsage;
  } catch (const NoRateError& e) {
    err << "ls2pc: " << e.what() << "\n";
    return kNoRate;
  } catch (const Error& e) {
    err << "ls2pc: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ConditionViolated: return kConditionViolated;
      case ErrorCode::WindowAtFloor: return kNoRate;
      case ErrorCode::InvalidArgument:
      case ErrorCode::DimensionMismatch: return kUsage;
      default: return kNumerical;
    }
  }
  return kUsage;
}

}  // namespace ls2pc::cli
