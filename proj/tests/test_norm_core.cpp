#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "opnorm/dense.hpp"
#include "opnorm/error.hpp"
#include "opnorm/exponent.hpp"
#include "opnorm/oracle.hpp"
#include "support.hpp"

using namespace opnorm;
using namespace opnorm::testing;

TEST_CASE("exponent construction and parsing") {
  CHECK_THROWS_AS(Exponent(0.5), Error);
  CHECK_THROWS_AS(Exponent(std::nan("")), Error);
  CHECK_THROWS_AS(Exponent(std::numeric_limits<double>::infinity()), Error);
  CHECK(Exponent::parse("inf").is_inf());
  CHECK(Exponent::parse("2.5").value() == 2.5);
  CHECK(Exponent::parse("4/3").value() == 4.0 / 3.0);
  CHECK_THROWS_AS(Exponent::parse("abc"), Error);
  CHECK_THROWS_AS(Exponent::parse("1/2"), Error);
  CHECK_THROWS_AS(Exponent::parse("3/0"), Error);
  CHECK(Exponent::parse("inf").to_string() == "inf");
  CHECK(Exponent::parse(Exponent(4.0 / 3.0).to_string()) == Exponent(4.0 / 3.0));
}

TEST_CASE("holder conjugate examples") {
  CHECK(holder_conjugate(ex(2)) == ex(2));
  CHECK(holder_conjugate(ex(4)).value() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(holder_conjugate(ex(1)).is_inf());
  CHECK(holder_conjugate(inf()) == ex(1));
  CHECK(holder_conjugate(ex(1.0 + 1e-15)).is_inf());
}

TEST_CASE("conjugate involution") {
  for (double p : {1.0, 1.2, 1.5, 2.0, 3.0, 10.0}) {
    const Exponent back = holder_conjugate(holder_conjugate(ex(p)));
    CHECK(rel_diff(back.value(), p) <= 1e-14);
  }
  CHECK(holder_conjugate(holder_conjugate(inf())).is_inf());
}

TEST_CASE("vector norm examples") {
  CHECK(vector_norm(std::vector<double>{3, 4}, ex(2)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(vector_norm(std::vector<double>{1, -1, 1}, inf()) == 1.0);
  // 2^{2/3} from a long-double evaluation of the defining sum.
  const double expected = reference_norm({1, 1}, ex(1.5));
  CHECK(rel_diff(vector_norm(std::vector<double>{1, 1}, ex(1.5)), expected) <= 1e-15);
  CHECK(rel_diff(expected, 1.5874010519681994) <= 1e-15);
  CHECK(vector_norm(std::vector<double>{0, 0}, ex(3)) == 0.0);
  CHECK(vector_norm(std::vector<double>{1e300, 1e300}, ex(2)) ==
        doctest::Approx(std::sqrt(2.0) * 1e300));
}

TEST_CASE("vector norm homogeneity and monotonicity in p") {
  std::mt19937_64 rng(11);
  const std::vector<Exponent> ps{ex(1), ex(1.2), ex(1.5), ex(2), ex(3), ex(7), ex(20), inf()};
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = random_vector(1 + trial % 9, rng, -10, 10);
    const double c = std::uniform_real_distribution<double>(-5, 5)(rng);
    std::vector<double> cv(v);
    for (double& x : cv) x *= c;
    double previous = std::numeric_limits<double>::infinity();
    for (const auto& p : ps) {
      CHECK(rel_diff(vector_norm(cv, p), std::abs(c) * vector_norm(v, p)) <= 1e-12);
      const double now = vector_norm(v, p);
      CHECK(now <= previous * (1 + 1e-14));
      previous = now;
    }
  }
}

TEST_CASE("dense matrix invariants") {
  CHECK_THROWS_AS(DenseMatrix(0, 2, {}), Error);
  CHECK_THROWS_AS(DenseMatrix(1, 2, {1.0}), Error);
  CHECK_THROWS_AS(DenseMatrix(1, 1, {std::nan("")}), Error);
  const DenseMatrix a{{1, 2}, {3, 4}, {5, 6}};
  CHECK(a.rows() == 3);
  CHECK(a.cols() == 2);
  CHECK(a.transpose()(1, 2) == 6);
  CHECK(a.column(1) == DenseVector{2, 4, 6});
}

TEST_CASE("apply examples") {
  CHECK(opnorm::apply(DenseMatrix::identity(3), std::vector<double>{1, 2, 3}) ==
        DenseVector{1, 2, 3});
  CHECK(opnorm::apply(DenseMatrix::zeros(2, 2), std::vector<double>{7, -1}) ==
        DenseVector{0, 0});
  CHECK(opnorm::apply(DenseMatrix{{1, 1}, {0, 1}}, std::vector<double>{1, 1}) ==
        DenseVector{2, 1});
  try {
    opnorm::apply(DenseMatrix::identity(2), std::vector<double>{1, 2, 3});
    FAIL("expected a shape error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kShape);
  }
  CHECK(apply_transpose(DenseMatrix{{1, 2}, {3, 4}}, std::vector<double>{1, 0}) ==
        DenseVector{1, 2});
}

TEST_CASE("permute examples") {
  const DenseMatrix a{{1, 0}, {0, 2}};
  const std::vector<std::size_t> id{0, 1}, swap{1, 0};
  CHECK(permute(a, id, id) == a);
  CHECK(permute(a, swap, id) == DenseMatrix{{0, 2}, {1, 0}});
  const std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS_AS(permute(a, bad, id), Error);
  const std::vector<std::size_t> short_perm{0};
  CHECK_THROWS_AS(permute(a, short_perm, id), Error);
}

TEST_CASE("oracle estimate is invariant under row and column exchanges") {
  std::mt19937_64 rng(5);
  OracleConfig config;
  config.restarts = 32;
  config.seed = 3;
  const std::vector<NormQuery> queries{query(ex(2), ex(2)), query(ex(3), ex(1.5)),
                                       query(ex(1.5), ex(4)), query(ex(4), inf())};
  for (int trial = 0; trial < 8; ++trial) {
    const DenseMatrix a = random_matrix(2 + trial % 4, 2 + (trial * 3) % 4, rng);
    const auto rp = random_permutation(a.rows(), rng);
    const auto cp = random_permutation(a.cols(), rng);
    const DenseMatrix b = permute(a, rp, cp);
    for (const auto& q : queries) {
      const double va = multistart(a, q, config).value;
      const double vb = multistart(b, q, config).value;
      CHECK(rel_diff(va, vb) <= 1e-6);
    }
  }
}

TEST_CASE("duality map") {
  CHECK(duality_map(std::vector<double>{-2, 3}, ex(2)) == DenseVector{-2, 3});
  CHECK(duality_map(std::vector<double>{-2, 3}, ex(1)) == DenseVector{-1, 1});
  CHECK(duality_map(std::vector<double>{-4, 3}, inf()) == DenseVector{-1, 0});
}
