#include "lant/numtheory.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lant/core.hpp"
#include "lant/errors.hpp"
#include "lant/inversion.hpp"

namespace lant {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

constexpr Index kExactDeterminantMaxPrimes = 200;

// Largest integer power base^e that stays <= x, compared in long double
// (exact for integer values below 2^63).
bool ipow_leq(Index base, Index exponent, double x) {
  long double acc = 1.0L;
  for (Index t = 0; t < exponent; ++t) {
    acc *= static_cast<long double>(base);
    if (acc > static_cast<long double>(x)) return false;
  }
  return true;
}

// floor(x^(1/k)) corrected by integer power comparison.
Index integer_root_floor(double x, Index k) {
  Index m = static_cast<Index>(std::pow(x, 1.0 / static_cast<double>(k)));
  while (!ipow_leq(m, k, x) && m > 0) --m;
  while (ipow_leq(m + 1, k, x)) ++m;
  return m;
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth, double& error_acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = 1.0 / std::log(lm);
  const double frm = 1.0 / std::log(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    error_acc += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, error_acc) +
         adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, error_acc);
}

// Exact fraction-free (Bareiss) determinant of the integer Gram matrix.
// Leading minors of a positive definite matrix are positive, so no
// pivoting is needed.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const Index size = static_cast<Index>(m.size());
  if (size == 0) return 1;
  BigInt previous = 1;
  for (Index k = 0; k + 1 < size; ++k) {
    const BigInt& pivot = m[k][k];
    if (pivot == 0) throw std::runtime_error("bareiss_determinant: zero pivot");
    for (Index i = k + 1; i < size; ++i)
      for (Index j = k + 1; j < size; ++j)
        m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / previous;
    previous = pivot;
  }
  return m[size - 1][size - 1];
}

std::vector<std::vector<BigInt>> exact_gram(const FactorizationMatrix& f) {
  const Index m = f.cols();
  std::vector<std::vector<BigInt>> gram(m, std::vector<BigInt>(m));
  for (Index j = 0; j < m; ++j)
    for (Index k = j; k < m; ++k) {
      const std::int64_t dot = column_dot(f.columns[j], f.columns[k]);
      gram[j][k] = dot;
      gram[k][j] = dot;
    }
  return gram;
}

}  // namespace

Primality is_prime(const Vector& ln_q_hat, Index i) {
  if (i == 0) throw std::invalid_argument("is_prime: ip(0) is not defined");
  if (i < 0 || i > ln_q_hat.size())
    throw std::invalid_argument("is_prime: need 1 <= i <= n");
  if (i == 1) return Primality::indeterminate;
  const double ratio = ln_q_hat[i - 1] / std::log(static_cast<double>(i));
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > kIsPrimeTolerance || (rounded != 0.0 && rounded != 1.0))
    throw NumericalInconsistencyError("is_prime: ratio " + std::to_string(ratio) +
                                      " at i = " + std::to_string(i) +
                                      " does not round to {0, 1}");
  return rounded == 1.0 ? Primality::prime : Primality::composite;
}

Primality is_prime(Index i, Index n) {
  if (n < 2) throw std::invalid_argument("is_prime: n must be >= 2");
  if (i == 0) throw std::invalid_argument("is_prime: ip(0) is not defined");
  if (i < 0 || i > n) throw std::invalid_argument("is_prime: need 1 <= i <= n");
  return is_prime(lpe_via_inverse(n), i);
}

Index prime_count(Index n) {
  if (n < 1) throw std::invalid_argument("prime_count: n must be >= 1");
  if (n == 1) return 0;
  const Vector ln_q_hat = lpe_via_inverse(n);
  Index count = 0;
  for (Index i = 2; i <= n; ++i)
    if (is_prime(ln_q_hat, i) == Primality::prime) ++count;
  return count;
}

double chebyshev_first(Index n) {
  if (n < 1) throw std::invalid_argument("chebyshev_first: n must be >= 1");
  return lpe_via_inverse(n).sum();
}

NtfValue chebyshev_second(double x, Index n_cap) {
  if (x < 1.0) throw std::invalid_argument("chebyshev_second: x must be >= 1");
  if (x > static_cast<double>(n_cap))
    throw std::invalid_argument("chebyshev_second: x exceeds n_cap");
  NtfValue out;
  out.path = NtfPath::lant;
  double sum = 0.0;
  Index terms = 0;
  for (Index k = 1; ipow_leq(2, k, x); ++k) {
    const Index m = integer_root_floor(x, k);
    sum += chebyshev_first(m);
    ++terms;
  }
  out.value = sum;
  out.error_estimate = static_cast<double>(terms) * 1e-9;
  return out;
}

double von_mangoldt(const Vector& ln_q_hat, Index i) {
  const Index n = ln_q_hat.size();
  if (i < 2 || i > n) throw std::invalid_argument("von_mangoldt: need 2 <= i <= n");
  const double ln_i = std::log(static_cast<double>(i));
  const double tol = std::max(1.0, ln_i) * 1e-9;
  double sum = 0.0;
  // Row i of F_n(z_n) is nonzero only at divisors of i; other terms have
  // F[i,j] = 0 and fail the bracket since ln i > 0.
  auto bracket = [&](Index j) {
    std::int64_t f_ij = 0;
    for (Index power = j; power <= i; power = (power <= i / j) ? power * j : i + 1)
      if (i % power == 0) ++f_ij;
    if (std::abs(ln_i - static_cast<double>(f_ij) * ln_q_hat[j - 1]) <= tol)
      sum += ln_q_hat[j - 1];
  };
  for (Index d = 2; d * d <= i; ++d) {
    if (i % d != 0) continue;
    bracket(d);
    if (d != i / d) bracket(i / d);
  }
  bracket(i);
  return sum;
}

double von_mangoldt(Index i, Index n) {
  if (n < 2) throw std::invalid_argument("von_mangoldt: n must be >= 2");
  if (i < 2 || i > n) throw std::invalid_argument("von_mangoldt: need 2 <= i <= n");
  return von_mangoldt(lpe_via_inverse(n), i);
}

bool von_mangoldt_psi_check(double x) {
  if (x < 1.0) throw std::invalid_argument("von_mangoldt_psi_check: x must be >= 1");
  const Index m = static_cast<Index>(x);
  double lambda_sum = 0.0;
  if (m >= 2) {
    const Vector ln_q_hat = lpe_via_inverse(m);
    for (Index i = 2; i <= m; ++i) lambda_sum += von_mangoldt(ln_q_hat, i);
  }
  return std::abs(lambda_sum - chebyshev_second(x).value) < 1e-8;
}

ZetaValue zeta_eta(std::complex<double> s, std::int64_t terms) {
  if (s.real() <= 0.0) throw std::domain_error("zeta_eta: requires Re(s) > 0");
  if (terms < 10) throw std::invalid_argument("zeta_eta: terms must be >= 10");
  const std::complex<double> denom =
      1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(denom) <= 1e-12)
    throw SingularPrefactorError("zeta_eta: prefactor pole near s = 1 + 2 pi i k / ln 2");
  const std::complex<double> prefactor = 1.0 / denom;
  std::complex<double> sum = 0.0;
  double sign = 1.0;
  for (std::int64_t k = 1; k <= terms; ++k) {
    const double lk = std::log(static_cast<double>(k));
    sum += sign * std::exp(std::complex<double>(-s.real() * lk, -s.imag() * lk));
    sign = -sign;
  }
  ZetaValue out;
  out.value = prefactor * sum;
  out.path = NtfPath::lant;
  out.error_estimate =
      std::abs(prefactor) * std::pow(static_cast<double>(terms + 1), -s.real());
  return out;
}

NtfValue logarithmic_integral(double x) {
  if (x < 2.0) throw std::domain_error("logarithmic_integral: x must be >= 2");
  NtfValue out;
  out.path = NtfPath::lant;
  if (x == 2.0) {
    out.value = 0.0;
    out.error_estimate = 0.0;
    return out;
  }
  const double fa = 1.0 / std::log(2.0);
  const double fb = 1.0 / std::log(x);
  const double mid = 0.5 * (2.0 + x);
  const double fm = 1.0 / std::log(mid);
  const double whole = (x - 2.0) / 6.0 * (fa + 4.0 * fm + fb);
  double error_acc = 0.0;
  out.value = adaptive_simpson(2.0, x, fa, fm, fb, whole, 1e-10, 48, error_acc);
  out.error_estimate = error_acc;
  return out;
}

bool schoenfield_check(double x) {
  if (x < 2657.0) throw std::domain_error("schoenfield_check: bound requires x >= 2657");
  const double pi_x = static_cast<double>(prime_count(static_cast<Index>(x)));
  const double li_x = logarithmic_integral(x).value;
  const double bound = std::sqrt(x) * std::log(x) / (8.0 * std::acos(-1.0));
  return std::abs(pi_x - li_x) <= bound;
}

double ld_exact(Index n) {
  if (n < 2) throw std::invalid_argument("ld: n must be >= 2");
  const BigInt det = bareiss_determinant(exact_gram(prime_factorization_matrix(n)));
  return static_cast<double>(log(HighFloat(det)));
}

double ld_floating(Index n) {
  if (n < 2) throw std::invalid_argument("ld: n must be >= 2");
  const FactorizationMatrix f = prime_factorization_matrix(n);
  const Index m = f.cols();
  Matrix gram(m, m);
  for (Index j = 0; j < m; ++j)
    for (Index k = j; k < m; ++k) {
      const double dot = static_cast<double>(column_dot(f.columns[j], f.columns[k]));
      gram(j, k) = dot;
      gram(k, j) = dot;
    }
  const Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("ld: Cholesky failed on the Gram matrix");
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

double ld(Index n) {
  if (n < 2) throw std::invalid_argument("ld: n must be >= 2");
  const Index primes = primes_up_to(n).values.size();
  return primes <= kExactDeterminantMaxPrimes ? ld_exact(n) : ld_floating(n);
}

std::vector<ConjectureSample> conjecture_scan(Index n_min, Index n_max, Index step) {
  if (n_min < 2 || n_min > n_max) throw std::invalid_argument("conjecture_scan: need 2 <= n_min <= n_max");
  if (step < 1) throw std::invalid_argument("conjecture_scan: step must be >= 1");
  std::vector<ConjectureSample> samples;
  for (Index n = n_min; n <= n_max; n += step) {
    ConjectureSample s;
    s.n = n;
    s.ld = ld(n);
    s.li = logarithmic_integral(static_cast<double>(n)).value;
    s.ratio = s.li != 0.0 ? s.ld / s.li : std::numeric_limits<double>::quiet_NaN();
    samples.push_back(s);
  }
  return samples;
}

}  // namespace lant
