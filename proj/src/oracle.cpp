#include "opnorm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "opnorm/error.hpp"

namespace opnorm {
namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Scales v to unit q-norm in place; false when v is zero.
bool normalize(DenseVector& v, const Exponent& q) {
  const double norm = vector_norm(v, q);
  if (!(norm > 0.0) || !std::isfinite(norm)) return false;
  for (double& x : v) x /= norm;
  return true;
}

// phi_s applied to v / max|v|; the direction is all the power map needs.
DenseVector scaled_duality(std::span<const double> v, const Exponent& s) {
  const double m = max_abs(v);
  DenseVector scaled(v.begin(), v.end());
  for (double& x : scaled) x /= m;
  return duality_map(scaled, s);
}

DenseVector perturbed(std::span<const double> x0, std::size_t attempt) {
  DenseVector x(x0.begin(), x0.end());
  const double step = 1e-3 * static_cast<double>(attempt);
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] += step * static_cast<double>(j + 1) / static_cast<double>(x.size()) *
            (j % 2 == 0 ? 1.0 : -1.0);
  }
  return x;
}

// Value of a normalized candidate, evaluated from scratch.
double evaluate(const DenseMatrix& a, const DenseVector& x, const Exponent& r) {
  return vector_norm(opnorm::apply(a, x), r);
}

bool better(const OracleEstimate& lhs, const OracleEstimate& rhs) {
  if (lhs.value != rhs.value) return lhs.value > rhs.value;
  return std::lexicographical_compare(lhs.candidate.begin(), lhs.candidate.end(),
                                      rhs.candidate.begin(), rhs.candidate.end());
}

constexpr std::size_t kMaxPerturbations = 3;

}  // namespace

std::uint64_t restart_stream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser on seed + (index + 1) * golden gamma.
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

OracleEstimate power_iteration(const DenseMatrix& a, const NormQuery& query,
                               std::span<const double> x0, const OracleConfig& config) {
  if (!(query.q > Exponent(1.0))) {
    fail(ErrorKind::kUnsupportedExponent,
         "power iteration needs q > 1; use the vertex search for q = 1");
  }
  if (x0.size() != a.cols()) fail(ErrorKind::kShape, "start vector has the wrong length");
  const Exponent q_star = query.q_star();

  OracleEstimate best;
  best.seed = config.seed;
  best.restarts_used = 1;

  for (std::size_t attempt = 0; attempt <= kMaxPerturbations; ++attempt) {
    DenseVector x = attempt == 0 ? DenseVector(x0.begin(), x0.end()) : perturbed(x0, attempt);
    if (!normalize(x, query.q)) {
      if (attempt == 0) fail(ErrorKind::kPreconditionViolation, "start vector is zero");
      continue;
    }
    DenseVector y = opnorm::apply(a, x);
    double value = vector_norm(y, query.r);
    best.candidate = x;
    best.value = value;
    if (value == 0.0) continue;  // Ax = 0: restart from a perturbed start

    bool stalled = false;
    for (std::size_t it = 1; it <= config.max_iters; ++it) {
      const DenseVector w = apply_transpose(a, scaled_duality(y, query.r));
      if (max_abs(w) == 0.0) {
        stalled = true;
        break;
      }
      DenseVector next = scaled_duality(w, q_star);
      if (!normalize(next, query.q)) {
        stalled = true;
        break;
      }
      y = opnorm::apply(a, next);
      const double next_value = vector_norm(y, query.r);
      best.iterations_used = it;
      if (next_value == 0.0) {
        stalled = true;
        break;
      }
      const double change = std::abs(next_value - value);
      x = std::move(next);
      value = next_value;
      if (value > best.value) {
        best.value = value;
        best.candidate = x;
      }
      if (change <= config.conv_tol * value) {
        best.converged = true;
        break;
      }
    }
    if (!stalled || best.value > 0.0) break;
  }
  best.value = evaluate(a, best.candidate, query.r);
  return best;
}

OracleEstimate multistart(const DenseMatrix& a, const NormQuery& query,
                          const OracleConfig& config) {
  if (config.restarts < 1 || !(config.conv_tol > 0.0)) {
    fail(ErrorKind::kPreconditionViolation, "oracle needs restarts >= 1 and conv_tol > 0");
  }
  if (!(query.q > Exponent(1.0))) {
    OracleEstimate out = vertex_search_q1(a, query.r);
    out.seed = config.seed;
    return out;
  }
  const std::size_t n = a.cols();
  std::vector<DenseVector> starts;
  for (std::size_t j = 0; j < n; ++j) starts.push_back(unit_vector(n, j));
  starts.emplace_back(n, 1.0);
  DenseVector alternating(n);
  for (std::size_t j = 0; j < n; ++j) alternating[j] = j % 2 == 0 ? 1.0 : -1.0;
  starts.push_back(std::move(alternating));

  for (std::size_t k = 0; k < config.restarts; ++k) {
    std::mt19937_64 rng(restart_stream_seed(config.seed, k));
    std::normal_distribution<double> gauss(0.0, 1.0);
    DenseVector x(n);
    do {
      for (double& v : x) v = gauss(rng);
    } while (max_abs(x) == 0.0);
    starts.push_back(std::move(x));
  }

  OracleEstimate best;
  bool have = false;
  std::size_t total_iterations = 0;
  for (const DenseVector& start : starts) {
    OracleEstimate run = power_iteration(a, query, start, config);
    total_iterations += run.iterations_used;
    if (!have || better(run, best)) {
      best = std::move(run);
      have = true;
    }
  }
  best.iterations_used = total_iterations;
  best.restarts_used = starts.size();
  best.seed = config.seed;
  return best;
}

OracleEstimate grid_lower_bound(const DenseMatrix& a, const NormQuery& query,
                                const OracleConfig& config) {
  const std::size_t n = a.cols();
  if (n > 3) fail(ErrorKind::kUnsupportedDimension, "grid search supports at most 3 columns");
  const std::size_t g = std::max<std::size_t>(config.grid_points, 1);
  constexpr double kPi = std::numbers::pi;

  OracleEstimate best;
  best.seed = config.seed;
  best.converged = true;
  best.restarts_used = 1;
  bool have = false;
  std::size_t count = 0;
  // Generalized polar coordinates: c -> sgn(c)|c|^{2/q} carries the Euclidean
  // sphere onto the q-sphere, so the cube vertices are hit exactly when q = inf.
  const double power = 2.0 * query.q.reciprocal();
  auto consider = [&](DenseVector x) {
    for (double& c : x) c = c == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(c), power), c);
    if (!normalize(x, query.q)) return;
    ++count;
    OracleEstimate cand;
    cand.value = evaluate(a, x, query.r);
    cand.candidate = std::move(x);
    if (!have || better(cand, best)) {
      best.value = cand.value;
      best.candidate = std::move(cand.candidate);
      have = true;
    }
  };

  if (n == 1) {
    consider({1.0});
    consider({-1.0});
  } else if (n == 2) {
    for (std::size_t k = 0; k < g; ++k) {
      const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(g);
      consider({std::cos(t), std::sin(t)});
    }
  } else {
    for (std::size_t i = 0; i <= g; ++i) {
      const double theta = kPi * static_cast<double>(i) / static_cast<double>(g);
      for (std::size_t j = 0; j < g; ++j) {
        const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(g);
        consider({std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                  std::cos(theta)});
      }
    }
  }
  best.iterations_used = count;
  return best;
}

OracleEstimate vertex_search_q1(const DenseMatrix& a, const Exponent& r) {
  OracleEstimate best;
  best.converged = true;
  best.restarts_used = 1;
  best.value = -1.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    DenseVector e = unit_vector(a.cols(), j);
    const double v = vector_norm(opnorm::apply(a, e), r);
    if (v > best.value) {
      best.value = v;
      best.candidate = std::move(e);
    }
  }
  best.iterations_used = a.cols();
  return best;
}

}  // namespace opnorm
