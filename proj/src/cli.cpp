#include "opnorm/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <random>
#include <set>
#include <charconv>
#include <sstream>

#include "opnorm/detect.hpp"
#include "opnorm/exact_norms.hpp"
#include "opnorm/generators.hpp"
#include "opnorm/io.hpp"
#include "opnorm/linalg.hpp"
#include "opnorm/oracle.hpp"

namespace opnorm::cli {
namespace {

using nlohmann::json;

constexpr double kDominanceTol = 1e-7;
constexpr double kVerifyGapTol = 1e-4;

[[noreturn]] void input_error(const std::string& message) { fail(ErrorKind::kInput, message); }

Exponent parse_exponent(const std::string& token, const char* name) {
  try {
    return Exponent::parse(token);
  } catch (const Error& e) {
    input_error(std::string("--") + name + ": " + e.what());
  }
}

json vector_json(std::span<const double> v) { return json(std::vector<double>(v.begin(), v.end())); }

json query_json(const NormQuery& q) {
  return {{"q", q.q.to_string()}, {"r", q.r.to_string()}};
}

json detection_json(const DetectionReport& report) {
  json checks = json::array();
  json matches = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"class", std::string(to_string(c.kind))},
                      {"matched", c.matched},
                      {"detail", c.detail}});
    if (c.matched) matches.push_back(std::string(to_string(c.kind)));
  }
  return {{"matches", matches},
          {"checks", checks},
          {"tolerances",
           {{"orthonormal", report.tolerances_used.orthonormal},
            {"rank_one", report.tolerances_used.rank_one},
            {"entry", report.tolerances_used.entry}}}};
}

json exact_json(const ExactResult& r, std::string_view source) {
  return {{"value", r.value},
          {"class", std::string(to_string(r.certificate.kind))},
          {"citation", r.citation},
          {"maximizer", vector_json(r.maximizer)},
          {"source", std::string(source)}};
}

json estimate_json(const OracleEstimate& e) {
  return {{"value", e.value},
          {"candidate", vector_json(e.candidate)},
          {"converged", e.converged},
          {"seed", e.seed},
          {"restarts", e.restarts_used},
          {"iterations", e.iterations_used}};
}

json error_json(const Error& e) {
  return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

OracleConfig oracle_config(std::optional<std::uint64_t> seed) {
  OracleConfig config;
  config.seed = resolve_seed(seed);
  return config;
}

double relative_gap(double exact, double estimate) {
  return exact == 0.0 ? estimate : (exact - estimate) / exact;
}

// --- generate parameter helpers -------------------------------------------

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  bool has(const std::string& key) const { return raw_.contains(key); }

  const std::string& text(const std::string& key) {
    used_.insert(key);
    const auto it = raw_.find(key);
    if (it == raw_.end()) input_error("missing parameter '" + key + "'");
    return it->second;
  }

  std::size_t count(const std::string& key) {
    const std::string& s = text(key);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      input_error("parameter '" + key + "' must be a non-negative integer");
    }
    return v;
  }

  std::size_t count_or(const std::string& key, std::size_t fallback) {
    return has(key) ? count(key) : fallback;
  }

  double real(const std::string& key) { return parse_real(text(key), key); }

  DenseVector reals(const std::string& key) {
    DenseVector out;
    for (const auto& item : split(text(key))) out.push_back(parse_real(item, key));
    return out;
  }

  DenseVector signs(const std::string& key) {
    DenseVector out;
    for (const auto& item : split(text(key))) {
      if (item == "+" || item == "1" || item == "+1") {
        out.push_back(1.0);
      } else if (item == "-" || item == "-1" || item == "−" || item == "−1") {
        out.push_back(-1.0);
      } else {
        input_error("parameter '" + key + "' must list signs (+ or -)");
      }
    }
    return out;
  }

  Exponent exponent(const std::string& key) { return parse_exponent(text(key), key.c_str()); }

  std::vector<Exponent> exponents(const std::string& key) {
    std::vector<Exponent> out;
    for (const auto& item : split(text(key))) out.push_back(parse_exponent(item, key.c_str()));
    return out;
  }

  void reject_unused() const {
    for (const auto& [key, value] : raw_) {
      if (!used_.contains(key)) input_error("unknown parameter '" + key + "' for this class");
    }
  }

 private:
  static std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (out.empty()) input_error("empty list parameter");
    return out;
  }

  static double parse_real(const std::string& s, const std::string& key) {
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(v)) {
      input_error("parameter '" + key + "' has a bad number '" + s + "'");
    }
    return v;
  }

  const std::map<std::string, std::string>& raw_;
  std::set<std::string> used_;
};

GeneratedInstance build_instance(const std::string& name, Params& p, std::mt19937_64& rng) {
  if (name == "diagonal") return generate_diagonal(p.reals("diag"));
  if (name == "rank-one") return generate_rank_one(p.reals("u"), p.reals("v"));
  if (name == "vandermonde") {
    return generate_vandermonde(p.reals("a1"), p.exponents("q_prime"), p.exponent("q"));
  }
  if (name == "hadamard" || name == "sign-row-orthonormal") {
    return generate_hadamard(p.count("n"));
  }
  if (name == "svd-class") {
    const std::size_t n = p.count("n");
    DenseVector tau = p.has("tau") ? p.signs("tau") : DenseVector(n, 1.0);
    DenseVector sigma = p.reals("sigmas");
    if (tau.size() != n || sigma.size() != n) input_error("sigmas and tau need n entries");
    return generate_svd_class(std::move(sigma), std::move(tau), rng);
  }
  if (name == "shear") return generate_shear(p.real("gamma"), p.count("n"));
  if (name == "composite-shear") {
    const std::size_t n = p.count("n");
    DenseVector sigma = p.reals("sigmas");
    if (sigma.size() != n) input_error("sigmas needs n entries");
    return generate_composite_shear(std::move(sigma), p.exponent("q"), rng);
  }
  if (name == "k-regular") {
    const std::string layout_name = p.has("layout") ? p.text("layout") : "circulant";
    const auto layout = k_regular_layout_from_string(layout_name);
    if (!layout) input_error("unknown k-regular layout '" + layout_name + "'");
    const std::size_t k = p.count_or("k", 2);
    return generate_k_regular(p.count("n"), k, *layout, rng);
  }
  if (name == "scaled-orthogonal") {
    const std::size_t n = p.count("n");
    const std::string basis = p.has("basis") ? p.text("basis") : "random";
    DenseMatrix u = basis == "hadamard" ? normalized_hadamard(n)
                    : basis == "random" ? linalg::random_orthogonal(n, rng)
                                        : (input_error("basis must be hadamard or random"),
                                           DenseMatrix::identity(1));
    return generate_scaled_orthogonal(std::move(u), p.count_or("row", 0), p.exponent("q"));
  }
  if (name == "orthogonal-svd") {
    DenseVector sigma = p.reals("sigmas");
    if (p.has("n") && p.count("n") != sigma.size()) input_error("sigmas needs n entries");
    return generate_orthogonal_svd(std::move(sigma), p.exponent("q"), rng);
  }
  if (name == "one-to-r") {
    const std::size_t m = p.count("m");
    const std::size_t n = p.count("n");
    const Exponent r = p.has("r") ? p.exponent("r") : Exponent(2.0);
    if (m == 0 || n == 0) input_error("m and n must be positive");
    return generate_one_to_r(linalg::random_gaussian(m, n, rng), r);
  }
  input_error("unknown class '" + name + "'");
}

// --- table rendering -------------------------------------------------------

std::string rounded(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void render_table(const json& doc, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_table(value, name, out);
    } else if (value.is_number_float()) {
      out << name << "\t" << io::canonical_dump(value) << "\t" << rounded(value.get<double>())
          << "\n";
    } else {
      out << name << "\t" << io::canonical_dump(value) << "\n";
    }
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
    case ErrorKind::kShape:
    case ErrorKind::kInvalidExponent:
    case ErrorKind::kNonFinite:
      return kExitInput;
    case ErrorKind::kNotInClass:
    case ErrorKind::kPreconditionViolation:
    case ErrorKind::kSingularScaling:
    case ErrorKind::kNotInvertible:
    case ErrorKind::kDegenerateShear:
      return kExitNotInClass;
    case ErrorKind::kUnsupportedExponent:
    case ErrorKind::kUnsupportedDimension:
      return kExitUnsupportedExponent;
    case ErrorKind::kCertificateMismatch:
      return kExitVerificationFailed;
    default:
      return kExitInternal;
  }
}

std::optional<Mode> mode_from_string(std::string_view name) {
  if (name == "exact") return Mode::kExact;
  if (name == "estimate") return Mode::kEstimate;
  if (name == "both") return Mode::kBoth;
  if (name == "bound") return Mode::kBound;
  return std::nullopt;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
  if (explicit_seed) return *explicit_seed;
  if (const char* env = std::getenv("OPNORM_SEED"); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      input_error("OPNORM_SEED must be a decimal 64-bit integer");
    }
    return v;
  }
  return 0;
}

std::string witness_path_for(const std::string& matrix_out) {
  return matrix_out + ".witness.json";
}

CommandOutcome cmd_compute(const ComputeRequest& request) {
  const DenseMatrix a = io::read_matrix_csv(request.matrix_path);
  const NormQuery query{parse_exponent(request.q, "q"), parse_exponent(request.r, "r")};
  json doc{{"schema_version", std::string(io::kResultSchema)},
           {"input_digest", io::matrix_digest(a)},
           {"query", query_json(query)}};
  const DetectionReport report = detect(a, query);
  doc["detection"] = detection_json(report);

  std::optional<ExactResult> exact;
  if (request.mode == Mode::kExact || request.mode == Mode::kBoth) {
    try {
      if (request.witness_path) {
        const io::Witness w =
            io::witness_from_json(json::parse(io::read_text_file(*request.witness_path)));
        if (w.matrix_digest != io::matrix_digest(a)) {
          fail(ErrorKind::kCertificateMismatch, "witness digest does not match the matrix");
        }
        exact = solve_exact(w.certificate, a, query);
        doc["exact"] = exact_json(*exact, "witness");
      } else {
        exact = exact_from_detection(a, query, report);
        doc["exact"] = exact_json(*exact, "detection");
      }
    } catch (const Error& e) {
      doc["error"] = error_json(e);
      return {doc, exit_code_for(e.kind())};
    } catch (const json::exception& e) {
      input_error(std::string("witness is not valid JSON: ") + e.what());
    }
  }
  if (request.mode == Mode::kEstimate || request.mode == Mode::kBoth) {
    const OracleEstimate est = multistart(a, query, oracle_config(request.seed));
    doc["estimate"] = estimate_json(est);
    if (exact) doc["gap"] = relative_gap(exact->value, est.value);
  }
  if (request.mode == Mode::kBound) {
    try {
      doc["bound"] = {{"value", hadamard_upper_bound(a, query)},
                      {"formula", "min of row-norm / sigma_max interpolation bounds"}};
    } catch (const Error& e) {
      doc["error"] = error_json(e);
      return {doc, exit_code_for(e.kind())};
    }
  }
  return {doc, kExitOk};
}

CommandOutcome cmd_generate(const GenerateRequest& request) {
  Params params(request.params);
  std::uint64_t seed = params.has("seed") ? params.count("seed") : resolve_seed(request.seed);
  std::mt19937_64 rng(seed);
  GeneratedInstance inst = [&] {
    try {
      return build_instance(request.class_name, params, rng);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInput) throw;
      input_error(std::string("cannot build ") + request.class_name + ": " + e.what());
    }
  }();
  params.reject_unused();
  const std::string witness_path = witness_path_for(request.out);
  io::write_text_file(request.out, io::format_matrix_csv(inst.matrix));
  // The witness digest refers to the matrix as written, i.e. after the CSV
  // round trip.
  const DenseMatrix written = io::read_matrix_csv(request.out);
  const json witness = io::witness_to_json(written, inst.certificate);
  io::write_text_file(witness_path, io::canonical_dump(witness) + "\n");
  json doc{{"schema_version", std::string(io::kResultSchema)},
           {"class", std::string(to_string(inst.certificate.kind))},
           {"matrix", request.out},
           {"witness", witness_path},
           {"input_digest", io::matrix_digest(written)},
           {"rows", written.rows()},
           {"cols", written.cols()},
           {"seed", seed}};
  return {doc, kExitOk};
}

CommandOutcome cmd_detect(const std::string& matrix_path, const std::string& q,
                          const std::string& r) {
  const DenseMatrix a = io::read_matrix_csv(matrix_path);
  const NormQuery query{parse_exponent(q, "q"), parse_exponent(r, "r")};
  json doc{{"schema_version", std::string(io::kResultSchema)},
           {"input_digest", io::matrix_digest(a)},
           {"query", query_json(query)},
           {"detection", detection_json(detect(a, query))}};
  return {doc, kExitOk};
}

CommandOutcome cmd_grothendieck(const GrothendieckRequest& request) {
  const DenseMatrix a = io::read_matrix_csv(request.matrix_path);
  const Exponent p = parse_exponent(request.p, "p");
  const Exponent q = parse_exponent(request.q, "q");
  json doc{{"schema_version", std::string(io::kResultSchema)},
           {"input_digest", io::matrix_digest(a)},
           {"grothendieck", {{"p", p.to_string()}, {"q", q.to_string()}}}};
  std::optional<double> exact_value;
  if (request.mode == Mode::kExact || request.mode == Mode::kBoth) {
    try {
      const GrothendieckResult g = grothendieck_value(a, p, q);
      doc["leg"] = std::string(to_string(g.leg));
      doc["query"] = query_json(g.query);
      doc["value"] = g.value;
      doc["exact"] = exact_json(g.exact, "detection");
      exact_value = g.value;
    } catch (const Error& e) {
      doc["error"] = error_json(e);
      return {doc, exit_code_for(e.kind())};
    }
  }
  if (request.mode == Mode::kEstimate || request.mode == Mode::kBoth) {
    const NormQuery direct{q, p.conjugate()};
    const OracleEstimate est = multistart(a, direct, oracle_config(request.seed));
    doc["estimate"] = estimate_json(est);
    if (!exact_value) {
      doc["leg"] = "direct";
      doc["query"] = query_json(direct);
      doc["value"] = est.value;
    } else {
      doc["gap"] = relative_gap(*exact_value, est.value);
    }
  }
  if (request.mode == Mode::kBound) input_error("grothendieck supports exact, estimate or both");
  return {doc, kExitOk};
}

CommandOutcome cmd_verify(const VerifyRequest& request) {
  const DenseMatrix a = io::read_matrix_csv(request.matrix_path);
  const NormQuery query{parse_exponent(request.q, "q"), parse_exponent(request.r, "r")};
  io::Witness witness = [&] {
    try {
      return io::witness_from_json(json::parse(io::read_text_file(request.witness_path)));
    } catch (const json::exception& e) {
      input_error(std::string("witness is not valid JSON: ") + e.what());
    }
  }();
  const std::string digest = io::matrix_digest(a);
  json doc{{"schema_version", std::string(io::kResultSchema)},
           {"input_digest", digest},
           {"query", query_json(query)},
           {"class", std::string(to_string(witness.certificate.kind))}};
  json checks = json::object();
  bool ok = true;
  auto record = [&](const char* name, bool pass, json detail) {
    checks[name] = {{"pass", pass}, {"detail", std::move(detail)}};
    ok = ok && pass;
  };

  const bool digest_ok = witness.matrix_digest == digest;
  record("digest", digest_ok, witness.matrix_digest);

  std::optional<ExactResult> exact;
  try {
    exact = solve_exact(witness.certificate, a, query);
    record("certificate", true,
           {{"defect", certificate_defect(a, query, exact->value, exact->maximizer)}});
    doc["exact"] = exact_json(*exact, "witness");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kUnsupportedExponent || e.kind() == ErrorKind::kInput) throw;
    record("certificate", false, error_json(e));
  }

  if (exact) {
    const OracleEstimate est = multistart(a, query, oracle_config(request.seed));
    doc["estimate"] = estimate_json(est);
    const double gap = relative_gap(exact->value, est.value);
    doc["gap"] = gap;
    record("dominance", est.value <= exact->value * (1.0 + kDominanceTol),
           {{"estimate", est.value}, {"exact", exact->value}, {"tolerance", kDominanceTol}});
    record("oracle_gap", gap <= kVerifyGapTol, {{"gap", gap}, {"tolerance", kVerifyGapTol}});
  }
  doc["checks"] = checks;
  doc["verified"] = ok;
  return {doc, ok ? kExitOk : kExitVerificationFailed};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and estimated induced matrix norms ||A||_{q->r}"};
  app.require_subcommand(1);

  bool as_json = false;
  std::optional<std::uint64_t> seed;
  std::string mode_name = "exact";

  ComputeRequest compute;
  std::string witness;
  auto* c = app.add_subcommand("compute", "Exact value, oracle estimate, or upper bound");
  c->add_option("--matrix", compute.matrix_path, "Matrix CSV")->required();
  c->add_option("--q", compute.q, "Input exponent (e.g. 2, 4/3, inf)")->required();
  c->add_option("--r", compute.r, "Output exponent")->required();
  c->add_option("--mode", mode_name, "exact|estimate|both|bound");
  c->add_option("--witness", witness, "Class witness JSON written by generate");
  c->add_option("--seed", seed, "Oracle seed (overrides OPNORM_SEED)");
  c->add_flag("--json", as_json, "Emit the canonical JSON document");

  GenerateRequest generate;
  std::vector<std::string> params;
  auto* g = app.add_subcommand("generate", "Write a class instance and its witness");
  g->add_option("--class", generate.class_name, "Class name")->required();
  g->add_option("--param", params, "key=value parameter (repeatable)");
  g->add_option("--out", generate.out, "Matrix CSV path")->required();
  g->add_option("--seed", seed, "Seed for randomised constructions");
  g->add_flag("--json", as_json, "Emit the canonical JSON document");

  std::string d_matrix, d_q, d_r;
  auto* d = app.add_subcommand("detect", "Report the certified classes a matrix belongs to");
  d->add_option("--matrix", d_matrix, "Matrix CSV")->required();
  d->add_option("--q", d_q, "Input exponent")->required();
  d->add_option("--r", d_r, "Output exponent")->required();
  d->add_flag("--json", as_json, "Emit the canonical JSON document");

  GrothendieckRequest groth;
  auto* gr = app.add_subcommand("grothendieck", "G_A(p, q) = ||A||_{q->p*}");
  gr->add_option("--matrix", groth.matrix_path, "Matrix CSV")->required();
  gr->add_option("--p", groth.p, "Exponent p")->required();
  gr->add_option("--q", groth.q, "Exponent q")->required();
  gr->add_option("--mode", mode_name, "exact|estimate|both");
  gr->add_option("--seed", seed, "Oracle seed (overrides OPNORM_SEED)");
  gr->add_flag("--json", as_json, "Emit the canonical JSON document");

  VerifyRequest verify;
  auto* v = app.add_subcommand("verify", "Re-check a witness against a matrix");
  v->add_option("--matrix", verify.matrix_path, "Matrix CSV")->required();
  v->add_option("--witness", verify.witness_path, "Witness JSON")->required();
  v->add_option("--q", verify.q, "Input exponent")->required();
  v->add_option("--r", verify.r, "Output exponent")->required();
  v->add_option("--seed", seed, "Oracle seed (overrides OPNORM_SEED)");
  v->add_flag("--json", as_json, "Emit the canonical JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CommandOutcome outcome;
  try {
    const auto mode = mode_from_string(mode_name);
    if (!mode) input_error("unknown mode '" + mode_name + "'");
    if (*c) {
      compute.mode = *mode;
      compute.seed = seed;
      if (!witness.empty()) compute.witness_path = witness;
      outcome = cmd_compute(compute);
    } else if (*g) {
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) input_error("--param expects key=value");
        generate.params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      generate.seed = seed;
      outcome = cmd_generate(generate);
    } else if (*d) {
      outcome = cmd_detect(d_matrix, d_q, d_r);
    } else if (*gr) {
      groth.mode = *mode;
      groth.seed = seed;
      outcome = cmd_grothendieck(groth);
    } else {
      verify.seed = seed;
      outcome = cmd_verify(verify);
    }
  } catch (const Error& e) {
    err << "opnorm: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "opnorm: internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (as_json) {
    out << io::canonical_dump(outcome.document) << "\n";
  } else {
    render_table(outcome.document, "", out);
  }
  if (outcome.exit_code != kExitOk && outcome.document.contains("error")) {
    err << "opnorm: " << outcome.document["error"]["kind"].get<std::string>() << ": "
        << outcome.document["error"]["message"].get<std::string>() << "\n";
  }
  return outcome.exit_code;
}

}  // namespace opnorm::cli
