#include "lant/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include "lant/errors.hpp"

namespace lant::oracle {

namespace {
using HighFloat = boost::multiprecision::cpp_bin_float_50;
}

PrimeVector sieve(Index n) {
  if (n < 1) throw std::invalid_argument("sieve: n must be >= 1");
  std::vector<std::int64_t> primes;
  if (n >= 2) primes.push_back(2);
  // Odd-only sieve: index k represents the odd number 2k + 1.
  const Index half = (n - 1) / 2;
  std::vector<bool> composite(static_cast<std::size_t>(half) + 1, false);
  for (Index k = 1; k <= half; ++k) {
    if (composite[k]) continue;
    const std::int64_t p = 2 * k + 1;
    primes.push_back(p);
    for (std::int64_t m = p * p; m <= n; m += 2 * p) composite[(m - 1) / 2] = true;
  }
  PrimeVector out;
  out.n = n;
  out.values = Eigen::Map<const Int64Vector>(primes.data(), primes.size());
  return out;
}

Index prime_count(Index n) { return sieve(n).values.size(); }

Factorization factorize(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  Factorization f;
  f.n = n;
  std::int64_t rest = n;
  for (std::int64_t d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    std::int64_t e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    f.factors.emplace_back(d, e);
  }
  if (rest > 1) f.factors.emplace_back(rest, 1);
  return f;
}

std::int64_t p_adic_valuation(std::int64_t p, std::int64_t r) {
  if (p < 2 || r < 1) throw std::invalid_argument("p_adic_valuation: p >= 2, r >= 1");
  std::int64_t e = 0;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  return e;
}

double chebyshev_first(Index n) {
  if (n < 1) throw std::invalid_argument("chebyshev_first oracle: n must be >= 1");
  double sum = 0.0;
  const PrimeVector p = sieve(n);
  for (Index j = 0; j < p.values.size(); ++j) sum += std::log(static_cast<double>(p.values[j]));
  return sum;
}

double chebyshev_second(double x) {
  if (x < 1.0) throw std::invalid_argument("chebyshev_second oracle: x must be >= 1");
  if (x < 2.0) return 0.0;
  const Index bound = static_cast<Index>(x);
  double sum = 0.0;
  const PrimeVector primes = sieve(bound);
  for (Index j = 0; j < primes.values.size(); ++j) {
    const std::int64_t p = primes.values[j];
    for (std::int64_t power = p; static_cast<double>(power) <= x;) {
      sum += std::log(static_cast<double>(p));
      if (power > bound / p) break;
      power *= p;
    }
  }
  return sum;
}

double von_mangoldt(std::int64_t i) {
  if (i < 1) throw std::invalid_argument("von_mangoldt oracle: i must be >= 1");
  if (i == 1) return 0.0;
  const Factorization f = factorize(i);
  if (f.factors.size() == 1) return std::log(static_cast<double>(f.factors[0].first));
  return 0.0;
}

std::complex<double> zeta_direct(std::complex<double> s, std::int64_t terms, double* tail_bound) {
  if (s.real() <= 1.0)
    throw std::domain_error("zeta_direct: Dirichlet series requires Re(s) > 1");
  if (terms < 1) throw std::invalid_argument("zeta_direct: terms must be >= 1");
  std::complex<double> sum = 0.0;
  for (std::int64_t k = 1; k <= terms; ++k) {
    const double lk = std::log(static_cast<double>(k));
    sum += std::exp(std::complex<double>(-s.real() * lk, -s.imag() * lk));
  }
  if (tail_bound != nullptr) {
    // |tail| <= integral_terms^inf t^(-Re s) dt
    *tail_bound = std::pow(static_cast<double>(terms), 1.0 - s.real()) / (s.real() - 1.0);
  }
  return sum;
}

std::complex<double> zeta_euler(std::complex<double> s, Index prime_bound) {
  if (s.real() <= 1.0) throw std::domain_error("zeta_euler: Euler product requires Re(s) > 1");
  const PrimeVector primes = sieve(prime_bound);
  std::complex<double> product = 1.0;
  for (Index j = 0; j < primes.values.size(); ++j) {
    const double lp = std::log(static_cast<double>(primes.values[j]));
    const std::complex<double> p_pow =
        std::exp(std::complex<double>(-s.real() * lp, -s.imag() * lp));
    product *= 1.0 / (1.0 - p_pow);
  }
  return product;
}

double logarithmic_integral(double x) {
  if (x < 2.0) throw std::domain_error("logarithmic_integral oracle: x must be >= 2");
  if (x == 2.0) return 0.0;
  // Composite Simpson on a grid fine enough that h^4 error is far below
  // the 1e-10 the adaptive path aims for.
  const Index panels = std::max<Index>(200000, static_cast<Index>(10.0 * (x - 2.0)));
  const double h = (x - 2.0) / (2.0 * panels);
  auto f = [](double t) { return 1.0 / std::log(t); };
  double sum = f(2.0) + f(x);
  for (Index k = 1; k < 2 * panels; ++k)
    sum += f(2.0 + k * h) * ((k % 2 == 1) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

Vector ols_reference(const CandidatePrimeVector& q, Index n) {
  if (q.n != n) throw std::invalid_argument("ols_reference: q was built for a different n");
  const Index m = q.size();
  // Design entries by repeated division: how many powers of q_j divide r.
  std::vector<std::vector<std::int64_t>> design(m, std::vector<std::int64_t>(n, 0));
  for (Index j = 0; j < m; ++j) {
    const std::int64_t c = q.values[j];
    for (Index r = 1; r <= n; ++r) {
      if (c == 1) {
        design[j][r - 1] = 1;
        continue;
      }
      std::int64_t rest = r;
      std::int64_t e = 0;
      while (rest % c == 0) {
        rest /= c;
        ++e;
      }
      design[j][r - 1] = e;
    }
  }
  // Exact integer Gram, high-precision right side.
  std::vector<std::vector<HighFloat>> a(m, std::vector<HighFloat>(m + 1));
  for (Index j = 0; j < m; ++j) {
    for (Index k = 0; k < m; ++k) {
      BigInt dot = 0;
      for (Index r = 0; r < n; ++r) dot += BigInt(design[j][r]) * design[k][r];
      a[j][k] = HighFloat(dot);
    }
    HighFloat rhs = 0;
    for (Index r = 0; r < n; ++r)
      if (design[j][r] != 0) rhs += HighFloat(design[j][r]) * log(HighFloat(r + 1));
    a[j][m] = rhs;
  }
  // Elimination with partial pivoting at 50 digits.
  for (Index k = 0; k < m; ++k) {
    Index pivot_row = k;
    for (Index i = k + 1; i < m; ++i)
      if (abs(a[i][k]) > abs(a[pivot_row][k])) pivot_row = i;
    if (a[pivot_row][k] == 0)
      throw SingularDesignError("ols_reference: zero pivot", static_cast<std::int64_t>(k + 1));
    std::swap(a[k], a[pivot_row]);
    for (Index i = k + 1; i < m; ++i) {
      const HighFloat factor = a[i][k] / a[k][k];
      for (Index col = k; col <= m; ++col) a[i][col] -= factor * a[k][col];
    }
  }
  Vector beta(m);
  std::vector<HighFloat> x(m);
  for (Index i = m - 1; i >= 0; --i) {
    HighFloat s = a[i][m];
    for (Index col = i + 1; col < m; ++col) s -= a[i][col] * x[col];
    x[i] = s / a[i][i];
    beta[i] = static_cast<double>(x[i]);
  }
  return beta;
}

}  // namespace lant::oracle
