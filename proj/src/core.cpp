#include "lant/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lant {

std::int64_t SparseColumn::value_at(Index row) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), row,
                             [](const auto& e, Index r) { return e.first < r; });
  if (it != entries.end() && it->first == row) return it->second;
  return 0;
}

std::int64_t SparseColumn::value_sum() const {
  std::int64_t s = 0;
  for (const auto& [row, value] : entries) s += value;
  return s;
}

CandidatePrimeVector::CandidatePrimeVector(Index n_, Int64Vector values_)
    : n(n_), values(std::move(values_)) {
  if (n < 1) throw std::invalid_argument("candidate primes: n must be >= 1");
  for (Index j = 0; j < values.size(); ++j) {
    if (values[j] < 1 || values[j] > n)
      throw std::invalid_argument("candidate primes: value " + std::to_string(values[j]) +
                                  " outside [1, " + std::to_string(n) + "]");
    if (j > 0 && values[j] <= values[j - 1])
      throw std::invalid_argument("candidate primes: values must be strictly ascending, got " +
                                  std::to_string(values[j - 1]) + " before " +
                                  std::to_string(values[j]));
  }
}

std::int64_t FactorizationMatrix::entry(Index row, Index col) const {
  return columns[col - 1].value_at(row);
}

std::int64_t column_dot(const SparseColumn& a, const SparseColumn& b) {
  std::int64_t dot = 0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return dot;
}

Index floor_log(Index base, Index limit) {
  if (base < 2 || limit < 1) throw std::invalid_argument("floor_log: base >= 2, limit >= 1");
  Index e = 0;
  Index power = 1;
  while (power <= limit / base) {
    power *= base;
    ++e;
  }
  return e;
}

NaturalVector naturals(Index n) {
  if (n < 1) throw std::invalid_argument("naturals: n must be >= 1");
  NaturalVector z{n, Int64Vector::LinSpaced(n, 1, n)};
  return z;
}

PrimeVector primes_up_to(Index n) {
  if (n < 1) throw std::invalid_argument("primes_up_to: n must be >= 1");
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::int64_t> primes;
  for (Index i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (Index j = i; j <= n / i; ++j) composite[i * j] = true;
  }
  PrimeVector p;
  p.n = n;
  p.values = Eigen::Map<const Int64Vector>(primes.data(), primes.size());
  return p;
}

CandidatePrimeVector prime_candidates(Index n) {
  PrimeVector p = primes_up_to(n);
  return CandidatePrimeVector(n, std::move(p.values));
}

CandidatePrimeVector natural_candidates(Index n) {
  return CandidatePrimeVector(n, naturals(n).values);
}

SparseColumn periodic_elementary(Index i, Index n) {
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("periodic_elementary: need 1 <= i <= n");
  SparseColumn col;
  col.n = n;
  col.entries.reserve(n / i);
  for (Index k = i; k <= n; k += i) col.entries.emplace_back(k, 1);
  return col;
}

SparseColumn factorization_vector(Index i, Index n) {
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("factorization_vector: need 1 <= i <= n");
  SparseColumn col;
  col.n = n;
  if (i == 1) {
    col.entries.reserve(n);
    for (Index r = 1; r <= n; ++r) col.entries.emplace_back(r, 1);
    return col;
  }
  // Accumulate e_{i^j|n} for every power i^j <= n; entry at row r ends up
  // as the number of powers of i dividing r. Only multiples of i can be
  // nonzero, so counts is indexed by r/i.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n / i) + 1, 0);
  for (Index power = i; power <= n; power = (power <= n / i) ? power * i : n + 1)
    for (Index r = power; r <= n; r += power) counts[r / i] += 1;
  col.entries.reserve(counts.size());
  for (Index m = 1; m * i <= n; ++m)
    if (counts[m] > 0) col.entries.emplace_back(m * i, counts[m]);
  return col;
}

FactorizationMatrix candidate_factorization(const CandidatePrimeVector& q, Index n) {
  if (q.n != n)
    throw std::invalid_argument("candidate_factorization: q was built for n = " +
                                std::to_string(q.n) + ", not " + std::to_string(n));
  FactorizationMatrix f;
  f.n = n;
  f.q = q;
  f.columns.reserve(q.size());
  for (Index j = 0; j < q.size(); ++j)
    f.columns.push_back(factorization_vector(q.values[j], n));
  return f;
}

FactorizationMatrix prime_factorization_matrix(Index n) {
  if (n < 2) throw std::invalid_argument("prime_factorization_matrix: n must be >= 2");
  return candidate_factorization(prime_candidates(n), n);
}

}  // namespace lant
