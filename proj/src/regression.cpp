#include "lant/regression.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lant/errors.hpp"

namespace lant {

Vector solve_normal_equations(Matrix gram, Vector rhs) {
  const Index m = gram.rows();
  if (gram.cols() != m || rhs.size() != m)
    throw std::invalid_argument("solve_normal_equations: dimension mismatch");
  double max_initial_pivot = 0.0;
  for (Index k = 0; k < m; ++k)
    max_initial_pivot = std::max(max_initial_pivot, std::abs(gram(k, k)));
  const double threshold = kPivotRelTolerance * max_initial_pivot;

  for (Index k = 0; k < m; ++k) {
    Index pivot_row = k;
    gram.col(k).tail(m - k).cwiseAbs().maxCoeff(&pivot_row);
    pivot_row += k;
    const double pivot = gram(pivot_row, k);
    if (std::abs(pivot) <= threshold)
      throw SingularDesignError(
          "singular design: pivot " + std::to_string(pivot) + " at column " +
              std::to_string(k + 1) + " below tolerance",
          static_cast<std::int64_t>(k + 1));
    if (pivot_row != k) {
      gram.row(k).swap(gram.row(pivot_row));
      std::swap(rhs[k], rhs[pivot_row]);
    }
    const Index rest = m - k - 1;
    if (rest == 0) continue;
    Vector multipliers = gram.col(k).tail(rest) / pivot;
    gram.bottomRightCorner(rest, rest).noalias() -=
        multipliers * gram.row(k).tail(rest);
    rhs.tail(rest) -= multipliers * rhs[k];
  }
  Vector x(m);
  for (Index i = m - 1; i >= 0; --i) {
    double s = rhs[i];
    for (Index j = i + 1; j < m; ++j) s -= gram(i, j) * x[j];
    x[i] = s / gram(i, i);
  }
  return x;
}

LpeResult log_prime_estimator(const CandidatePrimeVector& q, Index n) {
  const FactorizationMatrix f = candidate_factorization(q, n);
  const Index m = f.cols();
  if (m == 0) throw std::invalid_argument("log_prime_estimator: empty candidate vector");

  Int64Matrix gram_exact(m, m);
  for (Index j = 0; j < m; ++j)
    for (Index k = j; k < m; ++k) {
      const std::int64_t dot = column_dot(f.columns[j], f.columns[k]);
      gram_exact(j, k) = dot;
      gram_exact(k, j) = dot;
    }
  Vector rhs(m);
  for (Index j = 0; j < m; ++j) {
    double s = 0.0;
    for (const auto& [row, value] : f.columns[j].entries)
      s += static_cast<double>(value) * std::log(static_cast<double>(row));
    rhs[j] = s;
  }

  LpeResult result;
  result.q = q;
  result.ln_q_hat = solve_normal_equations(gram_exact.cast<double>(), rhs);
  result.ln_z_hat = predict(f, result.ln_q_hat);

  result.residuals.resize(n);
  for (Index r = 1; r <= n; ++r)
    result.residuals[r - 1] = std::log(static_cast<double>(r)) - result.ln_z_hat[r - 1];
  result.rss = result.residuals.squaredNorm();
  result.prediction_error = result.rss;
  double est = 0.0;
  for (Index j = 0; j < m; ++j) {
    const double d = std::log(static_cast<double>(q.values[j])) - result.ln_q_hat[j];
    est += d * d;
  }
  result.estimation_error = est;
  return result;
}

Vector predict(const FactorizationMatrix& f, const Vector& ln_q_hat) {
  if (ln_q_hat.size() != f.cols())
    throw std::invalid_argument("predict: coefficient length " +
                                std::to_string(ln_q_hat.size()) + " does not match " +
                                std::to_string(f.cols()) + " columns");
  Vector out = Vector::Zero(f.n);
  for (Index j = 0; j < f.cols(); ++j)
    for (const auto& [row, value] : f.columns[j].entries)
      out[row - 1] += static_cast<double>(value) * ln_q_hat[j];
  return out;
}

ConsistencyReport classify(const LpeResult& result, double tol) {
  ConsistencyReport report;
  for (Index j = 0; j < result.q.size(); ++j) {
    const double d =
        std::abs(std::log(static_cast<double>(result.q.values[j])) - result.ln_q_hat[j]);
    report.max_estimation_deviation = std::max(report.max_estimation_deviation, d);
  }
  for (Index r = 1; r <= result.q.n; ++r) {
    const double d =
        std::abs(std::log(static_cast<double>(r)) - result.ln_z_hat[r - 1]);
    report.max_prediction_deviation = std::max(report.max_prediction_deviation, d);
  }
  report.valid = report.max_estimation_deviation <= tol;
  report.complete = report.max_prediction_deviation <= tol;
  report.consistent = report.valid && report.complete;
  return report;
}

ConsistencyReport classify(const CandidatePrimeVector& q, Index n, double tol) {
  return classify(log_prime_estimator(q, n), tol);
}

PrimeVector recover_primes(Index n) {
  if (n < 2) throw std::invalid_argument("recover_primes: n must be >= 2");
  const LpeResult lpe = log_prime_estimator(natural_candidates(n), n);
  std::vector<std::int64_t> primes;
  for (Index i = 2; i <= n; ++i)
    if (std::abs(lpe.ln_q_hat[i - 1] - std::log(static_cast<double>(i))) <= kLogTolerance)
      primes.push_back(i);
  PrimeVector out;
  out.n = n;
  out.values = Eigen::Map<const Int64Vector>(primes.data(), primes.size());
  return out;
}

}  // namespace lant
