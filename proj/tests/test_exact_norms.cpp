#include <doctest.h>

#include <cmath>
#include <random>

#include "opnorm/detect.hpp"
#include "opnorm/error.hpp"
#include "opnorm/exact_norms.hpp"
#include "opnorm/generators.hpp"
#include "opnorm/linalg.hpp"
#include "opnorm/oracle.hpp"
#include "support.hpp"

using namespace opnorm;
using namespace opnorm::testing;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an opnorm::Error");
  return ErrorKind::kInput;
}

OracleConfig oracle(std::uint64_t seed = 1) {
  OracleConfig c;
  c.seed = seed;
  return c;
}

double oracle_value(const DenseMatrix& a, const NormQuery& q) {
  return multistart(a, q, oracle()).value;
}

void check_certificate(const DenseMatrix& a, const NormQuery& q, const ExactResult& r) {
  CHECK(std::abs(vector_norm(r.maximizer, q.q) - 1.0) <= 1e-9);
  CHECK(rel_diff(vector_norm(opnorm::apply(a, r.maximizer), q.r), r.value) <= 1e-9);
}

}  // namespace

TEST_CASE("diagonal examples") {
  const auto r = diagonal_norm(std::vector<double>{3, -1, 2}, query(ex(2), ex(3)));
  CHECK(r.value == 3.0);
  CHECK(r.maximizer == unit_vector(3, 0));
  CHECK(r.certificate.kind == ClassKind::kDiagonal);

  const auto s = diagonal_norm(std::vector<double>{1, 1}, query(ex(2), ex(1)));
  CHECK(rel_diff(s.value, std::sqrt(2.0)) <= 1e-15);
  OracleConfig grid = oracle();
  const double g = grid_lower_bound(DenseMatrix::identity(2), query(ex(2), ex(1)), grid).value;
  CHECK(std::abs(g - s.value) <= 1e-3);

  CHECK(diagonal_norm(std::vector<double>{0, 0, 0}, query(ex(3), ex(2))).value == 0.0);
  CHECK(diagonal_norm(std::vector<double>{0, 0, 0}, query(ex(3), ex(2))).maximizer ==
        unit_vector(3, 0));
  // smallest argmax on ties
  CHECK(diagonal_norm(std::vector<double>{2, -2}, query(ex(2), ex(2))).maximizer ==
        unit_vector(2, 0));
}

TEST_CASE("diagonal q > r branch including q = inf") {
  const std::vector<double> d{1.0, -2.0, 0.5};
  const DenseMatrix a = DenseMatrix::diagonal(d);
  for (const auto& q : {query(inf(), ex(2)), query(ex(4), ex(1.5)), query(inf(), ex(1)),
                        query(ex(3), ex(2))}) {
    const auto r = diagonal_norm(d, q);
    check_certificate(a, q, r);
    CHECK(rel_diff(r.value, oracle_value(a, q)) <= 1e-6);
  }
  CHECK(rel_diff(diagonal_norm(d, query(inf(), ex(1))).value, 3.5) <= 1e-15);
}

TEST_CASE("diagonal continuity as q decreases to r") {
  const std::vector<double> d{0.5, 3.0, -1.0, 2.0};
  const double r = 2.0;
  double previous = 0.0;
  for (int k = 2; k <= 6; ++k) {
    const double v = diagonal_norm(d, query(ex(r + std::pow(10.0, -k)), ex(r))).value;
    CHECK(v >= 3.0);
    if (k > 2) CHECK(v <= previous + 1e-12);
    previous = v;
  }
  CHECK(std::abs(previous - 3.0) <= 1e-5);
}

TEST_CASE("diagonal transpose duality") {
  std::mt19937_64 rng(2);
  const std::vector<Exponent> es{ex(1), ex(1.5), ex(2), ex(3), inf()};
  for (int t = 0; t < 10; ++t) {
    const auto d = random_vector(4, rng, -5, 5);
    for (const auto& q : es) {
      for (const auto& r : es) {
        const double direct = diagonal_norm(d, query(q, r)).value;
        const double dual = diagonal_norm(d, query(r.conjugate(), q.conjugate())).value;
        CHECK(rel_diff(direct, dual) <= 1e-12);
      }
    }
  }
}

TEST_CASE("rank-one examples") {
  CHECK(rank_one_norm({{1, 0}, {0, 1}}, query(ex(2), ex(2))).value == 1.0);
  const auto r = rank_one_norm({{1, 1}, {1, 1}}, query(ex(2), ex(2)));
  CHECK(rel_diff(r.value, 2.0) <= 1e-15);
  CHECK(rel_diff(r.value, reference_sigma_max(DenseMatrix{{1, 1}, {1, 1}})) <= 1e-12);
  const auto s = rank_one_norm({{1, 2, 2}, {3, 4}}, query(ex(1), ex(2)));
  CHECK(s.value == 12.0);
  const DenseMatrix a{{3, 4}, {6, 8}, {6, 8}};
  CHECK(one_to_r_norm(a, ex(2)).value == s.value);
  CHECK(rank_one_norm({{0, 0}, {1, 2}}, query(ex(2), ex(2))).value == 0.0);
}

TEST_CASE("rank-one maximizer feasibility across exponents") {
  std::mt19937_64 rng(4);
  const std::vector<Exponent> es{ex(1), ex(1.3), ex(2), ex(4), inf()};
  for (int t = 0; t < 10; ++t) {
    RankOneFactors f{random_vector(3, rng, -2, 2), random_vector(4, rng, -2, 2)};
    const DenseMatrix a = generate_rank_one(f.u, f.v).matrix;
    for (const auto& q : es)
      for (const auto& r : es) check_certificate(a, query(q, r), rank_one_norm(f, query(q, r)));
  }
}

TEST_CASE("scaling homogeneity") {
  std::mt19937_64 rng(6);
  const NormQuery q = query(ex(3), ex(2));
  const auto d = random_vector(4, rng, -3, 3);
  for (double c : {-2.5, 0.3, 7.0}) {
    std::vector<double> cd(d);
    for (double& x : cd) x *= c;
    CHECK(rel_diff(diagonal_norm(cd, q).value, std::abs(c) * diagonal_norm(d, q).value) <= 1e-12);
    RankOneFactors f{random_vector(3, rng, -1, 1), random_vector(3, rng, -1, 1)};
    RankOneFactors cf{f.u, f.v};
    for (double& x : cf.u) x *= c;
    CHECK(rel_diff(rank_one_norm(cf, q).value, std::abs(c) * rank_one_norm(f, q).value) <= 1e-12);
    SvdClassSpec s = make_svd_class({3, 1, 1, 0.5}, {1, -1, 1, 1}, rng);
    SvdClassSpec cs = s;
    for (double& x : cs.sigma) x *= std::abs(c);
    const NormQuery q4 = query(ex(4), ex(3));
    CHECK(rel_diff(svd_class_norm(cs, q4).value, std::abs(c) * svd_class_norm(s, q4).value) <= 1e-12);
  }
}

TEST_CASE("one-row reduction of the nonzero-row bound") {
  const DenseMatrix a{{1, -2, 3}};
  const NormQuery q = query(ex(3), ex(2));
  const double bound = nonzero_row_upper_bound(a, q, {}, {});
  CHECK(rel_diff(bound, vector_norm(a.row(0), ex(1.5))) <= 1e-15);
}

TEST_CASE("nonzero-row bound dominates the spectral norm") {
  std::mt19937_64 rng(12);
  const std::vector<Exponent> pp{ex(2), ex(2)}, qp{ex(2), ex(2)};
  const std::vector<Exponent> pp1{inf(), ex(3)}, qp1{ex(1), ex(1.5)};
  for (int t = 0; t < 20; ++t) {
    const DenseMatrix a = random_matrix(3, 3, rng, 0.1, 2.0);
    const double sigma = reference_sigma_max(a);
    CHECK(nonzero_row_upper_bound(a, query(ex(2), ex(2)), pp, qp) >= sigma * (1 - 1e-12));
    CHECK(nonzero_row_upper_bound(a, query(ex(2), ex(2)), pp1, qp1) >= sigma * (1 - 1e-12));
  }
}

TEST_CASE("nonzero-row bound preconditions") {
  const DenseMatrix zero_first{{1, 0}, {1, 1}};
  const std::vector<Exponent> pp{ex(2)}, qp{ex(2)};
  CHECK(kind_of([&] { nonzero_row_upper_bound(zero_first, query(ex(3), ex(2)), pp, qp); }) ==
        ErrorKind::kPreconditionViolation);
  const DenseMatrix a{{1, 2}, {1, 1}};
  const std::vector<Exponent> big_pp{ex(4.0 / 3.0)}, big_qp{ex(4)};
  CHECK(kind_of([&] { nonzero_row_upper_bound(a, query(ex(3), ex(2)), big_pp, big_qp); }) ==
        ErrorKind::kPreconditionViolation);
}

TEST_CASE("vandermonde build examples") {
  const NormQuery q = query(ex(3), ex(2));
  const auto ones = VandermondeSpec::make({1, 1, 1}, {ex(1.5), ex(2)}, ex(3));
  const DenseMatrix a = vandermonde_build(ones, q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) CHECK(a(i, j) == 1.0);

  const auto two_three = VandermondeSpec::make({2, 3}, {ex(2)}, ex(3));
  const double alpha = two_three.alphas().at(0);
  const DenseMatrix b = vandermonde_build(two_three, q);
  CHECK(b(1, 0) == std::pow(2.0, 1.0 / alpha));
  CHECK(b(1, 1) == std::pow(3.0, 1.0 / alpha));

  CHECK(kind_of([&] { vandermonde_build(two_three, query(ex(4), ex(2))); }) ==
        ErrorKind::kPreconditionViolation);
  CHECK(kind_of([] { VandermondeSpec::make({1, 0}, {ex(2)}, ex(3)); }) ==
        ErrorKind::kPreconditionViolation);
  CHECK(kind_of([] { VandermondeSpec::make({1, 2}, {ex(4)}, ex(3)); }) ==
        ErrorKind::kPreconditionViolation);
}

TEST_CASE("vandermonde row exponents collapse to one") {
  // With 1/p' + 1/q' = 1 the exponent works out to 1/alpha = 1 for every pair.
  const auto spec = VandermondeSpec::make({1.5, -0.5, 2}, {ex(1), ex(1.5), ex(2.5), ex(3)}, ex(3));
  for (double alpha : spec.alphas()) CHECK(std::abs(alpha - 1.0) <= 1e-14);
}

TEST_CASE("vandermonde value") {
  const NormQuery q = query(ex(3), ex(2));
  SUBCASE("single row equals the rank-one value") {
    const auto spec = VandermondeSpec::make({2, -1, 3}, {}, ex(3));
    const auto r = vandermonde_norm(spec, q);
    CHECK(rel_diff(r.value, vector_norm(spec.a1, ex(1.5))) <= 1e-15);
  }
  SUBCASE("ones, one extra row, oracle") {
    const auto spec = VandermondeSpec::make({1, 1}, {ex(2)}, ex(3));
    const auto r = vandermonde_norm(spec, q);
    const DenseMatrix a = vandermonde_build(spec, q);
    CHECK(std::abs(r.value - oracle_value(a, q)) <= 1e-4 * r.value);
  }
  SUBCASE("random specs: feasibility, bound equality and the rank-one cross-check") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> qd(1.5, 5.0);
    for (int t = 0; t < 20; ++t) {
      const double qv = qd(rng);
      const NormQuery qq = query(ex(qv), ex(1.0 + qd(rng)));
      auto a1 = random_vector(2 + t % 4, rng, 0.2, 3.0);
      for (std::size_t j = 0; j < a1.size(); j += 2) a1[j] = -a1[j];
      std::vector<Exponent> qp;
      for (int i = 0; i < 1 + t % 3; ++i) {
        qp.push_back(ex(1.0 + (qv - 1.0) * std::uniform_real_distribution<double>(0, 1)(rng)));
      }
      const auto spec = VandermondeSpec::make(a1, qp, ex(qv));
      const auto r = vandermonde_norm(spec, qq);
      const DenseMatrix a = vandermonde_build(spec, qq);
      check_certificate(a, qq, r);
      const double bound = nonzero_row_upper_bound(a, qq, spec.p_prime, spec.q_prime);
      CHECK(rel_diff(r.value, bound) <= 1e-12);
      CHECK(row_profile_residual(a, qq, spec.p_prime, spec.q_prime) < 1e-10);
      // Rows are copies of a1, so the matrix is ones * a1^T.
      DenseVector ones(a.rows(), 1.0);
      CHECK(rel_diff(r.value, rank_one_norm({ones, a1}, qq).value) <= 1e-12);
    }
  }
}

TEST_CASE("sign-row orthonormal examples") {
  const DenseMatrix h2 = normalized_hadamard(2);
  CHECK(rel_diff(sign_row_orthonormal_norm(h2, query(ex(2), ex(2))).value, 1.0) <= 1e-15);
  const auto r = sign_row_orthonormal_norm(h2, query(ex(4), ex(2)));
  CHECK(rel_diff(r.value, std::pow(2.0, 0.25)) <= 1e-15);
  // max ||x||_2 over the unit 4-sphere in R^2 is 2^{1/4}, attained at (1,1)/2^{1/4}
  CHECK(rel_diff(oracle_value(h2, query(ex(4), ex(2))), std::pow(2.0, 0.25)) <= 1e-8);
  const DenseMatrix h4 = normalized_hadamard(4);
  const auto s = sign_row_orthonormal_norm(h4, query(ex(6), ex(3)));
  CHECK(rel_diff(s.value, std::cbrt(4.0)) <= 1e-15);
  CHECK(std::abs(s.value - oracle_value(h4, query(ex(6), ex(3)))) <= 1e-6 * s.value);
}

TEST_CASE("sign-row orthonormal gates") {
  const DenseMatrix h2 = normalized_hadamard(2);
  CHECK(kind_of([&] { sign_row_orthonormal_norm(h2, query(ex(1.5), ex(2))); }) ==
        ErrorKind::kNotInClass);
  CHECK(kind_of([&] { sign_row_orthonormal_norm(h2, query(ex(3), ex(1.5))); }) ==
        ErrorKind::kNotInClass);
  std::mt19937_64 rng(1);
  const DenseMatrix rot = linalg::random_orthogonal(3, rng);
  CHECK(kind_of([&] { sign_row_orthonormal_norm(rot, query(ex(3), ex(2))); }) ==
        ErrorKind::kNotInClass);
}

TEST_CASE("hadamard upper bound") {
  CHECK(rel_diff(hadamard_upper_bound(DenseMatrix::identity(5), query(ex(2), ex(2))), 1.0) <= 1e-14);
  const DenseMatrix h4 = normalized_hadamard(4);
  CHECK(rel_diff(hadamard_upper_bound(h4, query(ex(4), ex(4))),
                 sign_row_orthonormal_norm(h4, query(ex(4), ex(4))).value) <= 1e-12);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const DenseMatrix g = linalg::random_gaussian(3, 3, rng);
    CHECK(hadamard_upper_bound(g, query(ex(2), ex(2))) >= oracle_value(g, query(ex(2), ex(2))) * (1 - 1e-9));
  }
  CHECK(kind_of([&] { hadamard_upper_bound(h4, query(ex(1.5), ex(2))); }) ==
        ErrorKind::kUnsupportedExponent);
}

TEST_CASE("svd class") {
  std::mt19937_64 rng(9);
  SUBCASE("identity sigma over a Hadamard basis reduces to the sign-row case") {
    const DenseMatrix h4 = normalized_hadamard(4);
    SvdClassSpec spec{DenseMatrix::identity(4), {1, 1, 1, 1}, h4.transpose(), {1, 1, 1, 1}};
    const auto r = svd_class_norm(spec, query(ex(3), ex(2)));
    CHECK(rel_diff(r.value, sign_row_orthonormal_norm(spec.assemble(), query(ex(3), ex(2))).value) <= 1e-14);
  }
  SUBCASE("n = 4, sigma = (3,1,1,1), q = 4") {
    SvdClassSpec spec = make_svd_class({3, 1, 1, 1}, {1, 1, -1, -1}, rng);
    const NormQuery q = query(ex(4), ex(4));
    const auto r = svd_class_norm(spec, q);
    CHECK(rel_diff(r.value, 3.0 * std::pow(4.0, 0.25)) <= 1e-14);
    const DenseMatrix a = spec.assemble();
    check_certificate(a, q, r);
    CHECK(std::abs(r.value - oracle_value(a, q)) <= 1e-5 * r.value);
  }
  SUBCASE("invariant violations") {
    CHECK(kind_of([&] { make_svd_class({1, 3, 1}, {1, 1, 1}, rng); }) == ErrorKind::kNotInClass);
    SvdClassSpec spec = make_svd_class({3, 1, 1}, {1, 1, 1}, rng);
    spec.sigma = {1, 3, 1};
    CHECK(kind_of([&] { svd_class_norm(spec, query(ex(2), ex(2))); }) == ErrorKind::kNotInClass);
    spec.sigma = {3, 1, 1};
    spec.tau = {1, -1, 1};
    CHECK(kind_of([&] { svd_class_norm(spec, query(ex(2), ex(2))); }) == ErrorKind::kNotInClass);
    SvdClassSpec ok = make_svd_class({3, 1, 1}, {1, 1, 1}, rng);
    CHECK(kind_of([&] { svd_class_norm(ok, query(ex(1.5), ex(2))); }) == ErrorKind::kNotInClass);
  }
}

TEST_CASE("shear") {
  SUBCASE("identity when gamma = 0") {
    const auto r = shear_norm(0.0, 3, query(ex(3), ex(3)));
    CHECK(r.value == 1.0);
    CHECK(r.maximizer == unit_vector(3, 0));
  }
  SUBCASE("spectral consistency at q = 2") {
    for (double g : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const auto r = shear_norm(g, 3, query(ex(2), ex(2)));
      CHECK(rel_diff(r.value, reference_sigma_max(shear_matrix(g, 3))) <= 1e-9);
    }
    CHECK(rel_diff(shear_norm(1.0, 2, query(ex(2), ex(2))).value, (1 + std::sqrt(5.0)) / 2) <= 1e-14);
  }
  SUBCASE("gamma = 2, q = 3, n = 4") {
    const NormQuery q = query(ex(3), ex(3));
    const auto r = shear_norm(2.0, 4, q);
    CHECK(rel_diff(r.value, 2.4882251412993758128) <= 1e-13);
    check_certificate(shear_matrix(2.0, 4), q, r);
    CHECK(std::abs(r.value - oracle_value(shear_matrix(2.0, 4), q)) <= 1e-5 * r.value);
  }
  SUBCASE("negative gamma mirrors the positive case") {
    const NormQuery q = query(ex(1.5), ex(1.5));
    CHECK(rel_diff(shear_norm(-0.7, 2, q).value, shear_norm(0.7, 2, q).value) <= 1e-15);
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { shear_norm(1.0, 2, query(ex(2), ex(3))); }) == ErrorKind::kUnsupportedExponent);
    CHECK(kind_of([] { shear_norm(1.0, 2, query(inf(), inf())); }) == ErrorKind::kUnsupportedExponent);
    CHECK(kind_of([] { shear_norm(1.0, 1, query(ex(2), ex(2))); }) == ErrorKind::kPreconditionViolation);
  }
}

TEST_CASE("composite shear formula plumbing") {
  std::mt19937_64 rng(14);
  SUBCASE("value is the svd-class value over xi") {
    SvdClassSpec b = make_svd_class({2, 1}, {1, 1}, rng);
    const NormQuery q = query(ex(2), ex(2));
    const auto r = composite_shear_norm(b, q);
    const auto& p = std::get<CompositeShearPayload>(r.certificate.payload);
    CHECK(rel_diff(r.value, svd_class_norm(b, q).value / p.xi) <= 1e-14);
    CHECK(rel_diff(p.gamma, 0.81171459794737770063) <= 1e-12);
  }
  SUBCASE("maximizer feasibility on random specs") {
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 2 + t % 3;
      DenseVector sigma = random_vector(n, rng, 0.5, 2.0);
      sigma[0] = 3.0;
      SvdClassSpec b = make_svd_class(sigma, DenseVector(n, 1.0), rng);
      const NormQuery q = query(ex(2.0 + t % 2), ex(2.0 + t % 3));
      const auto r = composite_shear_norm(b, q);
      const auto& p = std::get<CompositeShearPayload>(r.certificate.payload);
      check_certificate(p.a, q, r);
    }
  }
  SUBCASE("errors") {
    SvdClassSpec singular{DenseMatrix::identity(2), {1, 0}, normalized_hadamard(2).transpose(), {1, 1}};
    CHECK(kind_of([&] { composite_shear_norm(singular, query(ex(2), ex(2))); }) ==
          ErrorKind::kNotInvertible);
    SvdClassSpec ok{DenseMatrix::identity(2), {1, 1}, normalized_hadamard(2).transpose(), {1, 1}};
    CHECK(kind_of([&] { composite_shear_norm(ok, query(inf(), ex(2))); }) ==
          ErrorKind::kUnsupportedExponent);
  }
}

TEST_CASE("k-regular") {
  std::mt19937_64 rng(10);
  SUBCASE("bidiagonal Toeplitz with wrap has norm 2") {
    KRegularSpec spec = make_k_regular(5, 2, KRegularLayout::kBidiagonal, rng);
    const DenseMatrix a = spec.assemble();
    CHECK(a(4, 0) == 1.0);
    CHECK(a(0, 0) == 1.0);
    CHECK(a(0, 1) == 1.0);
    const NormQuery q = query(ex(3), ex(3));
    CHECK(k_regular_norm(spec, q).value == 2.0);
    CHECK(std::abs(oracle_value(a, q) - 2.0) <= 1e-6);
  }
  SUBCASE("identity is 1-regular") {
    KRegularSpec spec = make_k_regular(4, 1, KRegularLayout::kCirculant, rng);
    CHECK(spec.assemble() == DenseMatrix::identity(4));
    for (double q : {1.0, 1.5, 3.0}) CHECK(k_regular_norm(spec, query(ex(q), ex(q))).value == 1.0);
  }
  SUBCASE("all-ones matrix matches the rank-one formula") {
    KRegularSpec spec = make_k_regular(5, 5, KRegularLayout::kCirculant, rng);
    const NormQuery q = query(ex(2), ex(2));
    const double via_rank_one = rank_one_norm({DenseVector(5, 1.0), DenseVector(5, 1.0)}, q).value;
    CHECK(k_regular_norm(spec, q).value == 5.0);
    CHECK(rel_diff(via_rank_one, 5.0) <= 1e-15);
  }
  SUBCASE("signed bidiagonal, odd n, alternating maximizer") {
    for (std::size_t n : {3u, 5u, 7u}) {
      KRegularSpec spec = make_k_regular(n, 2, KRegularLayout::kSignedBidiagonal, rng);
      const NormQuery q = query(ex(3), ex(3));
      const auto r = k_regular_norm(spec, q);
      CHECK(r.value == 2.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double expected = ((i + 1) % 2 == 0 ? 1.0 : -1.0) * std::pow(double(n), -1.0 / 3.0);
        CHECK(rel_diff(r.maximizer[i], expected) <= 1e-15);
      }
    }
  }
  SUBCASE("structure violations") {
    KRegularSpec spec = make_k_regular(4, 2, KRegularLayout::kCirculant, rng);
    spec.index_lists[0] = {0, 0};
    CHECK(kind_of([&] { k_regular_norm(spec, query(ex(2), ex(2))); }) == ErrorKind::kNotInClass);
    KRegularSpec good = make_k_regular(4, 2, KRegularLayout::kCirculant, rng);
    CHECK(kind_of([&] { k_regular_norm(good, query(ex(2), ex(3))); }) == ErrorKind::kUnsupportedExponent);
  }
  SUBCASE("permutation invariance") {
    KRegularSpec spec = make_k_regular(6, 3, KRegularLayout::kRandom, rng);
    const DenseMatrix a = spec.assemble();
    const DenseMatrix b = permute(a, random_permutation(6, rng), random_permutation(6, rng));
    const NormQuery q = query(ex(2.5), ex(2.5));
    const auto ra = exact_from_detection(a, q, detect(a, q));
    const auto rb = exact_from_detection(b, q, detect(b, q));
    CHECK(ra.value == rb.value);
    const std::vector<double> d{1, -3, 2};
    const std::vector<std::size_t> p{2, 0, 1};
    const DenseMatrix da = DenseMatrix::diagonal(d);
    const DenseMatrix db = permute(da, p, p);
    CHECK(exact_from_detection(da, q, detect(da, q)).value ==
          exact_from_detection(db, q, detect(db, q)).value);
  }
}

TEST_CASE("scaled orthogonal") {
  SUBCASE("U = I, q = 4") {
    const auto spec = ScaledOrthogonalSpec::make(DenseMatrix::identity(3), 0, ex(4));
    CHECK(spec.lambda == DenseVector{1, 0, 0});
    CHECK(scaled_orthogonal_norm(spec, query(ex(4), ex(2))).value == 1.0);
  }
  SUBCASE("Hadamard 2x2, q = 4") {
    const auto spec = ScaledOrthogonalSpec::make(normalized_hadamard(2), 0, ex(4));
    const NormQuery q = query(ex(4), ex(3));
    const auto r = scaled_orthogonal_norm(spec, q);
    CHECK(std::abs(oracle_value(spec.assemble(), q) - 1.0) <= 1e-6);
    check_certificate(spec.assemble(), q, r);
  }
  SUBCASE("maximizer q-norm is the row's squared 2-norm") {
    std::mt19937_64 rng(15);
    const auto spec = ScaledOrthogonalSpec::make(linalg::random_orthogonal(5, rng), 2, ex(3));
    const auto r = scaled_orthogonal_norm(spec, query(ex(3), ex(2)));
    CHECK(std::abs(vector_norm(r.maximizer, ex(3)) - 1.0) <= 1e-12);
  }
  SUBCASE("errors") {
    auto spec = ScaledOrthogonalSpec::make(DenseMatrix{{1, 1}, {0, 1}}, 0, ex(4));
    CHECK(kind_of([&] { scaled_orthogonal_norm(spec, query(ex(4), ex(2))); }) == ErrorKind::kNotInClass);
    auto wrong_q = ScaledOrthogonalSpec::make(normalized_hadamard(2), 0, ex(4));
    CHECK(kind_of([&] { scaled_orthogonal_norm(wrong_q, query(ex(3), ex(2))); }) ==
          ErrorKind::kNotInClass);
  }
}

TEST_CASE("orthogonal svd") {
  SUBCASE("V = I has a singular scaling") {
    const auto spec = OrthogonalSvdSpec::make(DenseMatrix::identity(3), {2, 1, 1},
                                              DenseMatrix::identity(3), ex(4));
    CHECK(kind_of([&] { orthogonal_svd_norm(spec, query(ex(4), ex(2))); }) ==
          ErrorKind::kSingularScaling);
  }
  SUBCASE("Hadamard V, sigma = diag(2, 1), q = 4") {
    const auto spec = OrthogonalSvdSpec::make(DenseMatrix::identity(2), {2, 1},
                                              normalized_hadamard(2), ex(4));
    const NormQuery q = query(ex(4), ex(4));
    const auto r = orthogonal_svd_norm(spec, q);
    CHECK(r.value == 2.0);
    CHECK(std::abs(oracle_value(spec.assemble(), q) - 2.0) <= 1e-5 * 2.0);
  }
  SUBCASE("sign flips of sigma leave the value unchanged") {
    const auto a = OrthogonalSvdSpec::make(DenseMatrix::identity(2), {2, 1}, normalized_hadamard(2), ex(3));
    const auto b = OrthogonalSvdSpec::make(DenseMatrix::identity(2), {-2, -1}, normalized_hadamard(2), ex(3));
    CHECK(orthogonal_svd_norm(a, query(ex(3), ex(2))).value ==
          orthogonal_svd_norm(b, query(ex(3), ex(2))).value);
  }
  SUBCASE("leading entry must carry the largest magnitude") {
    const auto spec = OrthogonalSvdSpec::make(DenseMatrix::identity(2), {1, 2}, normalized_hadamard(2), ex(4));
    CHECK(kind_of([&] { orthogonal_svd_norm(spec, query(ex(4), ex(2))); }) == ErrorKind::kNotInClass);
  }
  SUBCASE("rectangular factors are refused") {
    const auto spec = OrthogonalSvdSpec::make(DenseMatrix{{1, 0}, {0, 1}, {0, 0}}, {2, 1},
                                              normalized_hadamard(2), ex(4));
    CHECK(kind_of([&] { orthogonal_svd_norm(spec, query(ex(4), ex(2))); }) ==
          ErrorKind::kPreconditionViolation);
  }
}

TEST_CASE("one to r") {
  const auto r = one_to_r_norm(DenseMatrix{{1, 0}, {0, 2}}, ex(2));
  CHECK(r.value == 2.0);
  CHECK(r.maximizer == unit_vector(2, 1));
  const auto s = one_to_r_norm(DenseMatrix{{3, 1}, {4, 1}}, ex(2));
  CHECK(s.value == 5.0);
  CHECK(s.maximizer == unit_vector(2, 0));
  std::mt19937_64 rng(16);
  const DenseMatrix a = random_matrix(4, 3, rng);
  const NormQuery q = query(ex(1), ex(2.5));
  CHECK(rel_diff(one_to_r_norm(a, ex(2.5)).value, multistart(a, q, oracle()).value) <= 1e-6);
}

TEST_CASE("certificate verification rejects a wrong value") {
  const DenseMatrix a = DenseMatrix::identity(2);
  CHECK(kind_of([&] { verify_certificate(a, query(ex(2), ex(2)), 1.1, unit_vector(2, 0)); }) ==
        ErrorKind::kCertificateMismatch);
  CHECK(kind_of([&] {
          verify_certificate(a, query(ex(2), ex(2)), 1.0, std::vector<double>{1.0, 1.0});
        }) == ErrorKind::kCertificateMismatch);
  CHECK(certificate_defect(a, query(ex(2), ex(2)), 1.0, unit_vector(2, 0)) == 0.0);
}

TEST_CASE("grothendieck value") {
  const auto g = grothendieck_value(DenseMatrix::identity(2), ex(2), ex(2));
  CHECK(g.value == 1.0);
  CHECK(g.leg == DualityLeg::kDirect);
  const auto h = grothendieck_value(normalized_hadamard(4), ex(2), ex(4));
  CHECK(rel_diff(h.value, std::pow(4.0, 0.25)) <= 1e-15);
  // q = 1.5 < 2 keeps the direct leg out of the orthonormal class; the
  // transpose leg ||H^T||_{4 -> 3} is certified.
  const auto t = grothendieck_value(normalized_hadamard(4), ex(4), ex(1.5));
  CHECK(t.leg == DualityLeg::kTranspose);
  CHECK(rel_diff(t.value, std::pow(4.0, 0.25)) <= 1e-15);
  std::mt19937_64 rng(3);
  const DenseMatrix r = linalg::random_gaussian(3, 3, rng);
  CHECK(kind_of([&] { grothendieck_value(r, ex(2), ex(2.5)); }) == ErrorKind::kNotInClass);
}

TEST_CASE("oracle duality round trip") {
  std::mt19937_64 rng(17);
  OracleConfig c = oracle(5);
  const std::vector<NormQuery> qs{query(ex(2), ex(3)), query(ex(3), ex(1.5)), query(ex(1.5), ex(4)),
                                  query(ex(4), ex(2.5))};
  for (int t = 0; t < 20; ++t) {
    const DenseMatrix a = random_matrix(2 + t % 3, 2 + (t / 3) % 3, rng);
    const NormQuery& q = qs[t % qs.size()];
    const double direct = multistart(a, q, c).value;
    const double dual = multistart(a.transpose(), query(q.r.conjugate(), q.q.conjugate()), c).value;
    CHECK(rel_diff(direct, dual) <= 1e-5);
  }
}
