#ifndef ALTSUM_COEFFICIENTS_HPP
#define ALTSUM_COEFFICIENTS_HPP

#include <memory>
#include <vector>

#include "altsum/numerics.hpp"

namespace altsum {

/// Exact coefficients of order m, 1-indexed by j (index 0 unused).
/// gamma[j] alternates in sign starting positive, rho[j] = gamma[j]*j, and
/// tau[r] = gamma[r] + gamma[r+2] + ... (tail with step 2). The weighted sums
/// sum_j gamma[j]*j and sum over the symmetric tau range both equal 1.
struct CoefficientTable {
    long m = 0;
    std::vector<Rational> gamma;
    std::vector<Rational> tau;
    std::vector<Rational> rho;

    const Rational& gamma_at(long j) const { return gamma[static_cast<size_t>(j)]; }
    const Rational& tau_at(long r) const { return tau[static_cast<size_t>(r)]; }
    const Rational& rho_at(long j) const { return rho[static_cast<size_t>(j)]; }
};

/// gamma[j] = (-1)^(j-1) * (2/j) * C(2m, m+j)/C(2m, m) for j = 1..m, exact.
/// The binomial ratio is built incrementally, O(m) big-rational operations.
std::vector<Rational> gamma_table(long m);

/// rho[j] = gamma[j]*j via the downward recursion
/// rho[m] = (-1)^(m-1) * 2 / C(2m, m), rho[j-1] = rho[j] * (m+j)/(j-m-1).
std::vector<Rational> rho_downward(long m);

/// tau[r] = sum of gamma[r], gamma[r+2], ... computed as reverse cumulative
/// tails (one pass, two running tails).
std::vector<Rational> tau_table(long m);

/// The full (gamma, tau, rho) table, cached per m for the process lifetime.
/// Completed tables are immutable and safe to share across threads.
std::shared_ptr<const CoefficientTable> coefficient_table(long m);

/// Exact Bernoulli numbers B_0..B_N from the classical recurrence
/// sum_{a=0}^{b-1} C(b,a) B_a = 0; odd indices > 1 are exactly zero.
struct BernoulliCache {
    std::vector<Rational> values; // values[k] = B_k
    long highest() const { return static_cast<long>(values.size()) - 1; }
};

BernoulliCache bernoulli_numbers(long n);

/// B_k from the shared process-wide cache (grown on demand).
Rational bernoulli(long k);

/// B_p recovered from the order-m tau table:
/// 2^(-p) * (tau[1]*(-1)^p + sum_{b=2}^{m} tau[b]*[(b-2)^p + (-b)^p]),
/// with 0^0 := 1. Valid for 0 <= p <= 2m-1.
Rational bernoulli_from_tau(long m, long p);

/// sum_j |gamma[j]| * j^(2m+1), exact. Controls the remainder bounds.
Rational gamma_weighted_power_sum(long m);

/// sum_j gamma[j] * j^q for odd q in [1, 2m-1]: equals 1 for q = 1, else 0.
/// Exposed as a self-test utility.
Rational odd_power_cancellation(long m, long q);

} // namespace altsum

#endif
