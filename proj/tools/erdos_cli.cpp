// erdos: command-line front end for verifying, decomposing and enumerating
// Erdos matrices with exact rational arithmetic.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error,
// 3 input error, 4 enumeration truncated by the budget.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "erdos/assignment.hpp"
#include "erdos/birkhoff.hpp"
#include "erdos/enumerator.hpp"
#include "erdos/errors.hpp"
#include "erdos/gram.hpp"
#include "erdos/json_io.hpp"
#include "erdos/matrix.hpp"
#include "erdos/surd.hpp"

namespace {

using nlohmann::json;
using namespace erdos;

enum Exit : int { kOk = 0, kVerdictFalse = 1, kUsage = 2, kInput = 3, kTruncated = 4 };

struct Common {
  std::string format = "json";
  bool approx = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

BistochasticMatrix load_bistochastic(const std::string& path) {
  return BistochasticMatrix::from(parse_matrix(read_input(path)));
}

std::chrono::milliseconds parse_duration(const std::string& text) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--budget", "malformed duration '" + text + "'");
  }
  const std::string unit = text.substr(pos);
  long long ms = 0;
  if (unit.empty() || unit == "s") {
    ms = value * 1000;
  } else if (unit == "ms") {
    ms = value;
  } else if (unit == "m") {
    ms = value * 60'000;
  } else if (unit == "h") {
    ms = value * 3'600'000;
  } else {
    throw CLI::ValidationError("--budget", "unknown duration unit '" + unit + "' (use ms, s, m or h)");
  }
  if (value <= 0) throw CLI::ValidationError("--budget", "duration must be positive");
  return std::chrono::milliseconds(ms);
}

int default_workers() {
  if (const char* env = std::getenv("ERDOS_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const Common& common, const std::string& command, int n, const json& payload, const std::string& table) {
  if (common.format == "table") {
    std::cout << table;
  } else {
    std::cout << envelope(command, n, payload).dump(2) << '\n';
  }
}

std::string matrix_block(const RationalMatrix& m, const std::string& indent = "  ") {
  std::istringstream lines(format_matrix(m));
  std::string out;
  std::string line;
  while (std::getline(lines, line)) out += indent + line + '\n';
  return out;
}

void add_approx(json& payload, const char* key, const Rational& q) { payload[std::string(key) + "_approx"] = q.to_double(); }

int cmd_verify(const Common& common, const std::string& file, const std::string& method_name) {
  const auto a = load_bistochastic(file);
  const MaxTraceMethod method = method_name == "brute"       ? MaxTraceMethod::brute
                                : method_name == "hungarian" ? MaxTraceMethod::hungarian
                                                             : MaxTraceMethod::automatic;
  const auto verdict = is_erdos(a, method);
  json payload = to_json(verdict);
  payload["matrix"] = to_json(a.matrix());
  if (common.approx) {
    add_approx(payload, "frob_sq", verdict.frob_sq);
    add_approx(payload, "delta", verdict.delta);
  }
  std::ostringstream t;
  t << "matrix (n = " << a.n() << "):\n" << matrix_block(a.matrix());
  t << "frob_sq  " << verdict.frob_sq << '\n';
  t << "maxtr    " << verdict.certificate.value << '\n';
  t << "delta    " << verdict.delta << '\n';
  t << "witnesses (" << verdict.certificate.witnesses.size() << (verdict.certificate.method == MaxTraceMethod::brute ? ", complete" : ", one shown") << "):";
  for (std::size_t k = 0; k < verdict.certificate.witnesses.size() && k < kMaxWitnessesShown; ++k)
    t << ' ' << verdict.certificate.witnesses[k].cycle_notation();
  t << "\nverdict  " << (verdict.erdos ? "Erdos" : "not Erdos") << '\n';
  emit(common, "verify", static_cast<int>(a.n()), payload, t.str());
  return verdict.erdos ? kOk : kVerdictFalse;
}

int cmd_enumerate(const Common& common, const EnumerationOptions& options) {
  std::cerr << "enumerating n = " << options.n << " with " << options.workers << " worker(s)";
  if (options.budget) std::cerr << ", budget " << options.budget->count() << " ms";
  std::cerr << '\n';
  const auto report = enumerate_erdos(options);
  std::cerr << "visited " << report.sets_visited << " sets in " << report.elapsed.count() << " ms; "
            << report.classes.size() << " classes" << (report.complete ? "" : " (truncated)") << '\n';

  std::ostringstream t;
  t << "n = " << report.n << ", max support " << report.max_support << ", " << report.classes.size() << " classes, "
    << (report.complete ? "complete" : "TRUNCATED") << '\n';
  t << "sets visited " << report.sets_visited << "; rejected: dependent " << report.rejected_dependent << ", negative weight "
    << report.rejected_negative << ", maxtr exceeded " << report.rejected_maxtr << '\n';
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const auto& c = report.classes[k];
    t << "\n#" << (k + 1) << "  value " << c.common_value << ", support";
    for (std::size_t s = 0; s < c.support.size(); ++s) t << ' ' << c.weights[s] << "*" << c.support[s].cycle_notation();
    t << '\n' << matrix_block(c.canonical.matrix());
  }
  emit(common, "enumerate", report.n, to_json(report, common.approx), t.str());
  return report.complete ? kOk : kTruncated;
}

int cmd_decompose(const Common& common, const std::string& file, const std::string& reduce) {
  const auto a = load_bistochastic(file);
  ConvexDecomposition d = decompose(a);
  json payload;
  payload["reduce"] = reduce;
  try {
    if (reduce == "affine") d = reduce_affine(std::move(d));
    if (reduce == "linear") d = reduce_linear(std::move(d));
  } catch (const ReductionError& e) {
    payload["reduced"] = false;
    payload["reason"] = e.what();
    emit(common, "decompose", static_cast<int>(a.n()), payload, std::string("reduction failed: ") + e.what() + '\n');
    return kVerdictFalse;
  }
  if (d.reconstruct() != a.matrix()) throw InternalError("decomposition does not reconstruct the input");
  payload["reduced"] = true;
  payload["terms"] = to_json(d);
  payload["term_count"] = d.size();
  const auto perms = d.perms();
  payload["linearly_independent"] = linear_independent(perms);
  payload["affinely_independent"] = affine_independent(perms);
  std::ostringstream t;
  t << d.size() << " terms (" << (linear_independent(perms) ? "linearly independent" : "linearly dependent") << ")\n";
  for (const auto& term : d.terms) t << "  " << term.coef << "  " << term.perm.cycle_notation() << '\n';
  emit(common, "decompose", static_cast<int>(a.n()), payload, t.str());
  return kOk;
}

int cmd_canon(const Common& common, const std::string& file) {
  const auto a = load_bistochastic(file);
  const auto c = canonical_form(a);
  json payload = {{"matrix", to_json(c.matrix())}};
  if (common.approx) payload["matrix_approx"] = approx_json(c.matrix());
  emit(common, "canon", static_cast<int>(a.n()), payload, format_matrix(c.matrix()));
  return kOk;
}

int cmd_family(const Common& common, int n) {
  const auto reps = conjugacy_class_reps(n);
  const auto family = half_identity_family(n);
  json members = json::array();
  std::ostringstream t;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto verdict = is_erdos(family[k]);
    members.push_back({{"perm", to_json(reps[k])},
                       {"cycle_type", cycle_type(reps[k]).parts},
                       {"matrix", to_json(family[k].matrix())},
                       {"frob_sq", verdict.frob_sq.str()},
                       {"erdos", verdict.erdos}});
    t << "(I + P)/2 for P = " << reps[k].cycle_notation() << ", frob_sq " << verdict.frob_sq << ", "
      << (verdict.erdos ? "Erdos" : "not Erdos") << '\n'
      << matrix_block(family[k].matrix());
  }
  emit(common, "family", n, json{{"count", family.size()}, {"members", std::move(members)}}, t.str());
  return kOk;
}

int cmd_bound(const Common& common, int n) {
  const auto b = count_bound(n);
  json payload = {{"total_bound", b.total.get_str()}, {"equivalence_bound", b.equivalence.get_str()}};
  std::ostringstream t;
  t << "total bound        " << b.total.get_str() << '\n' << "equivalence bound  " << b.equivalence.get_str() << '\n';
  emit(common, "bound", n, payload, t.str());
  return kOk;
}

int cmd_omega2(const Common& common, const std::string& alpha_text) {
  const Rational alpha = Rational::parse(alpha_text);
  const auto ps = omega2(alpha);
  json values = json::array();
  std::ostringstream t;
  for (const auto& p : ps) {
    json v = {{"p", p.str()}, {"delta", delta2_of_p(p).str()}};
    if (common.approx) v["p_approx"] = p.to_double();
    values.push_back(std::move(v));
    t << p.str() << '\n';
  }
  json payload = {{"alpha", alpha.str()}, {"solutions", std::move(values)}, {"classes", omega2_class_count(alpha)}};
  emit(common, "omega2", 2, payload, t.str());
  return kOk;
}

int cmd_maxdelta(const Common& common, int n) {
  const auto m = max_delta_matrix(n);
  const Rational d = delta(m);
  json payload = {{"matrix", to_json(m.matrix())}, {"delta", d.str()}};
  if (common.approx) add_approx(payload, "delta", d);
  emit(common, "maxdelta", n, payload, format_matrix(m.matrix()) + "delta " + d.str() + '\n');
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification, decomposition and enumeration of Erdos matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--approx", common.approx, "Add decimal renderings next to exact values");

  std::string file;
  std::string method = "auto";
  auto* verify = app.add_subcommand("verify", "Check whether a matrix file is an Erdos matrix");
  verify->add_option("file", file, "Matrix file ('-' for stdin)")->required();
  verify->add_option("--method", method, "Maximal-trace method")->check(CLI::IsMember({"brute", "hungarian", "auto"}));

  EnumerationOptions options;
  options.workers = default_workers();
  std::string budget;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate Erdos matrices up to equivalence");
  enumerate->add_option("-n,--dim", options.n, "Dimension")->required();
  enumerate->add_option("--max-support", options.max_support, "Largest support size (default (n-1)^2+1)");
  enumerate->add_option("--budget", budget, "Time budget, e.g. 90s, 10m, 1h");
  enumerate->add_option("--workers", options.workers, "Worker threads (default $ERDOS_WORKERS or core count)");
  enumerate->add_flag("--set-key-filter", options.set_key_filter, "Skip sets equivalent to one already solved");

  std::string reduce = "none";
  auto* decompose_cmd = app.add_subcommand("decompose", "Birkhoff-von Neumann decomposition of a matrix file");
  decompose_cmd->add_option("file", file, "Matrix file ('-' for stdin)")->required();
  decompose_cmd->add_option("--reduce", reduce, "Support reduction")->check(CLI::IsMember({"none", "affine", "linear"}));

  auto* canon = app.add_subcommand("canon", "Canonical form under row and column permutations");
  canon->add_option("file", file, "Matrix file ('-' for stdin)")->required();

  int n = 0;
  auto* family = app.add_subcommand("family", "The (I + P)/2 Erdos matrices, one per conjugacy class");
  family->add_option("n,-n,--dim", n, "Dimension")->required()->check(CLI::Range(1, kMaxEnumerableN));
  auto* bound = app.add_subcommand("bound", "Upper bounds on the number of Erdos matrices");
  bound->add_option("n,-n,--dim", n, "Dimension")->required()->check(CLI::Range(2, 20));
  std::string alpha;
  auto* omega = app.add_subcommand("omega2", "All 2x2 matrices with discrepancy alpha");
  omega->add_option("alpha", alpha, "Rational alpha in [0, 1/4]")->required();
  auto* maxdelta = app.add_subcommand("maxdelta", "The matrix maximising the discrepancy");
  maxdelta->add_option("n,-n,--dim", n, "Dimension")->required()->check(CLI::Range(1, kMaxEnumerableN));

  try {
    app.parse(argc, argv);
    if (!budget.empty()) options.budget = parse_duration(budget);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(common, file, method);
    if (*enumerate) return cmd_enumerate(common, options);
    if (*decompose_cmd) return cmd_decompose(common, file, reduce);
    if (*canon) return cmd_canon(common, file);
    if (*family) return cmd_family(common, n);
    if (*bound) return cmd_bound(common, n);
    if (*omega) return cmd_omega2(common, alpha);
    if (*maxdelta) return cmd_maxdelta(common, n);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
