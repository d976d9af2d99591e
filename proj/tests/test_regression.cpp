#include <doctest.h>

#include <cmath>
#include <random>

#include "lant/errors.hpp"
#include "lant/oracle.hpp"
#include "lant/regression.hpp"
#include "helpers.hpp"

using namespace lant;

TEST_CASE("q = p_n returns the log primes") {
  const LpeResult r = log_prime_estimator(prime_candidates(10), 10);
  REQUIRE(r.ln_q_hat.size() == 4);
  CHECK(std::abs(r.ln_q_hat[0] - std::log(2.0)) < 1e-10);
  CHECK(std::abs(r.ln_q_hat[1] - std::log(3.0)) < 1e-10);
  CHECK(std::abs(r.ln_q_hat[2] - std::log(5.0)) < 1e-10);
  CHECK(std::abs(r.ln_q_hat[3] - std::log(7.0)) < 1e-10);
  CHECK(r.rss < 1e-18);
}

TEST_CASE("q = z_n switches off the composites") {
  const LpeResult r = log_prime_estimator(natural_candidates(10), 10);
  const bool prime[11] = {false, false, true, true,  false, true,
                          false, true,  false, false, false};
  for (Index i = 1; i <= 10; ++i) {
    const double expected = prime[i] ? std::log(static_cast<double>(i)) : 0.0;
    CHECK(std::abs(r.ln_q_hat[i - 1] - expected) < 1e-10);
  }
}

TEST_CASE("case I estimates match the high-precision reference") {
  const auto q = CandidatePrimeVector(20, (Int64Vector(4) << 3, 5, 11, 17).finished());
  const LpeResult r = log_prime_estimator(q, 20);
  const Vector reference = oracle::ols_reference(q, 20);
  for (Index j = 0; j < 4; ++j) CHECK(std::abs(r.ln_q_hat[j] - reference[j]) < 1e-8);
  // deterministic for fixed input
  const LpeResult again = log_prime_estimator(q, 20);
  CHECK(r.ln_q_hat == again.ln_q_hat);
}

TEST_CASE("predict reproduces the log identity and linearity") {
  const FactorizationMatrix f = prime_factorization_matrix(10);
  Vector ln_p(4);
  ln_p << std::log(2.0), std::log(3.0), std::log(5.0), std::log(7.0);
  const Vector predicted = predict(f, ln_p);
  for (Index r = 1; r <= 10; ++r)
    CHECK(std::abs(predicted[r - 1] - std::log(static_cast<double>(r))) < 1e-12);

  CHECK(predict(f, Vector::Zero(4)).isZero(0.0));
  CHECK_THROWS_AS(predict(f, Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("missing primes leave nonzero residuals where they are needed") {
  const auto q = CandidatePrimeVector(10, (Int64Vector(2) << 2, 5).finished());
  const LpeResult r = log_prime_estimator(q, 10);
  // cross-check the whole fit against the independent OLS route
  const Vector reference = oracle::ols_reference(q, 10);
  const FactorizationMatrix f = candidate_factorization(q, 10);
  const Vector ref_fit = predict(f, reference);
  for (Index row = 1; row <= 10; ++row) {
    const double ref_res = std::log(static_cast<double>(row)) - ref_fit[row - 1];
    CHECK(std::abs(r.residuals[row - 1] - ref_res) < 1e-8);
  }
  for (Index row : {3, 7, 9}) CHECK(std::abs(r.residuals[row - 1]) > 1.0);
}

TEST_CASE("result invariants tie the pieces together") {
  const auto q = CandidatePrimeVector(20, (Int64Vector(4) << 3, 5, 11, 17).finished());
  const LpeResult r = log_prime_estimator(q, 20);
  const FactorizationMatrix f = candidate_factorization(q, 20);
  const Vector refit = predict(f, r.ln_q_hat);
  CHECK((r.ln_z_hat - refit).lpNorm<Eigen::Infinity>() < 1e-12);
  CHECK(std::abs(r.rss - r.residuals.squaredNorm()) < 1e-12);
  CHECK(r.prediction_error == r.rss);
  double est = 0.0;
  for (Index j = 0; j < q.size(); ++j) {
    const double d = std::log(static_cast<double>(q.values[j])) - r.ln_q_hat[j];
    est += d * d;
  }
  CHECK(std::abs(r.estimation_error - est) < 1e-12);
}

TEST_CASE("normal equations hold at the solution") {
  for (Index n : {10, 50, 200}) {
    const auto q = natural_candidates(n);
    const LpeResult r = log_prime_estimator(q, n);
    const FactorizationMatrix f = candidate_factorization(q, n);
    // F^T F ln_q_hat == F^T ln z componentwise
    const Index m = f.cols();
    for (Index j = 0; j < m; ++j) {
      double lhs = 0.0;
      for (Index k = 0; k < m; ++k)
        lhs += static_cast<double>(column_dot(f.columns[j], f.columns[k])) * r.ln_q_hat[k];
      double rhs = 0.0;
      for (const auto& [row, value] : f.columns[j].entries)
        rhs += static_cast<double>(value) * std::log(static_cast<double>(row));
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("classification of the four candidate cases") {
  const ConsistencyReport consistent = classify(prime_candidates(20), 20);
  CHECK(consistent.valid);
  CHECK(consistent.complete);
  CHECK(consistent.consistent);

  const ConsistencyReport naturals_case = classify(natural_candidates(20), 20);
  CHECK(naturals_case.complete);
  CHECK_FALSE(naturals_case.valid);
  CHECK_FALSE(naturals_case.consistent);

  const auto subset = CandidatePrimeVector(20, (Int64Vector(4) << 3, 5, 11, 17).finished());
  const ConsistencyReport case1 = classify(subset, 20);
  CHECK_FALSE(case1.complete);
  CHECK_FALSE(case1.valid);
  CHECK_FALSE(case1.consistent);
}

TEST_CASE("recover_primes equals the sieve") {
  CHECK(testing::equal_values(recover_primes(10).values, oracle::sieve(10).values));
  CHECK(testing::equal_values(recover_primes(2).values, oracle::sieve(2).values));
  CHECK(testing::equal_values(recover_primes(100).values, oracle::sieve(100).values));
  CHECK_THROWS_AS(recover_primes(1), std::invalid_argument);
}

TEST_CASE("supersets keep primes and zero out the rest") {
  std::mt19937_64 rng(8812);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 20 + static_cast<Index>(rng() % 181);
    std::vector<std::int64_t> values;
    const auto primes = primes_up_to(n);
    std::vector<bool> is_p(n + 1, false);
    for (Index j = 0; j < primes.values.size(); ++j) is_p[primes.values[j]] = true;
    bool added_composite = false;
    for (std::int64_t v = 1; v <= n; ++v) {
      if (is_p[v]) {
        values.push_back(v);
      } else if (rng() % 4 == 0) {
        values.push_back(v);
        added_composite = true;
      }
    }
    if (!added_composite) values.insert(values.begin(), 1);
    std::sort(values.begin(), values.end());
    const auto q = CandidatePrimeVector(
        n, Eigen::Map<const Int64Vector>(values.data(), values.size()));
    const LpeResult r = log_prime_estimator(q, n);
    for (Index j = 0; j < q.size(); ++j) {
      const double expected =
          is_p[q.values[j]] ? std::log(static_cast<double>(q.values[j])) : 0.0;
      CAPTURE(n);
      CAPTURE(q.values[j]);
      CHECK(std::abs(r.ln_q_hat[j] - expected) < 1e-9);
    }
  }
}

TEST_CASE("the estimator minimizes the residual sum of squares locally") {
  std::mt19937_64 rng(424242);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto rss_of = [](const FactorizationMatrix& f, const Vector& beta) {
    const Vector fit = predict(f, beta);
    double rss = 0.0;
    for (Index r = 1; r <= f.n; ++r) {
      const double e = std::log(static_cast<double>(r)) - fit[r - 1];
      rss += e * e;
    }
    return rss;
  };
  const auto q = CandidatePrimeVector(20, (Int64Vector(4) << 3, 5, 11, 17).finished());
  const LpeResult r = log_prime_estimator(q, 20);
  const FactorizationMatrix f = candidate_factorization(q, 20);
  for (int trial = 0; trial < 100; ++trial) {
    Vector delta(q.size());
    for (Index j = 0; j < q.size(); ++j) delta[j] = gauss(rng);
    delta *= std::uniform_real_distribution<double>(0.0, 1.0)(rng) / delta.norm();
    CHECK(rss_of(f, r.ln_q_hat + delta) >= r.rss - 1e-9);
  }
}

TEST_CASE("a singular system surfaces the offending column") {
  Matrix gram(2, 2);
  gram << 1.0, 1.0, 1.0, 1.0;  // rank 1
  Vector rhs(2);
  rhs << 1.0, 1.0;
  try {
    solve_normal_equations(gram, rhs);
    FAIL("expected SingularDesignError");
  } catch (const SingularDesignError& e) {
    CHECK(e.column() == 2);
  }
}
