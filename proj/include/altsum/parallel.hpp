#ifndef ALTSUM_PARALLEL_HPP
#define ALTSUM_PARALLEL_HPP

#include <vector>

#include "altsum/alt_engine.hpp"
#include "altsum/bounds.hpp"
#include "altsum/functions.hpp"

namespace altsum {

/// Canonical split of the coefficient range into k_star even-sized blocks:
/// with q, r the quotient/remainder of (m/2) / k_star,
///   ell_k = 2(q + [k <= r]),  m_k = 2(k q + min(k, r)).
/// Every block length is even and >= 4, so m >= 4 k_star is required.
struct Partition {
    long k_star = 1;
    std::vector<long> ell;     // ell[k-1], k = 1..k_star
    std::vector<long> m_marks; // m_marks[k], k = 0..k_star; m_marks[0] = 0
};

Partition make_partition(long m, long k_star);

/// The six per-worker terminals. theta values are exact rationals; the
/// terminal theta_ev equals tau_{m_{k-1}+2} - tau_{m_k+2} and theta_od
/// equals tau_{m_{k-1}+1} - tau_{m_k+1}, so suffix sums over workers
/// reconstruct the tau values the master needs.
struct WorkerOutput {
    Rational theta_ev;
    Rational theta_od;
    std::vector<BigComplex> eta_ev;
    std::vector<BigComplex> eta_od;
    std::vector<BigComplex> sigma_ev;
    std::vector<BigComplex> sigma_od;
};

/// Seed values rho_ev(k,0) for each worker, built from per-block products of
/// nu_j = (j-m-1)/(m+j) (one block per worker, then a k_star-step prefix
/// multiply), so no binomial coefficient is ever formed.
std::vector<Rational> worker_seeds(long m, const Partition& partition);

/// One worker's downward pass over its coefficient block: ell_k/2 steps, each
/// updating the running rho/gamma/theta scalars and the four accumulators
/// against H_j = F(c - j/2) + F(c + j/2 - 1) [j >= 2]. Live state outside the
/// current H_j is O(1) values.
WorkerOutput worker_pass(long k, const Partition& partition, long m, long c,
                         const FunctionSpec& spec, long digits, const Rational& seed);

/// Master combine: suffix-sums the theta terminals into tau values, then
/// G = sum_k (tau_{m_k+2} eta_ev + sigma_ev + tau_{m_k+1} eta_od + sigma_od).
std::vector<BigComplex> assemble(const std::vector<WorkerOutput>& outputs,
                                 const Partition& partition, long digits);

/// G_{m,F}(n) computed with k_star workers; agrees with stabilizer_g to
/// working precision (operation order differs).
std::vector<BigComplex> parallel_stabilizer(const FunctionSpec& spec, long n, long m,
                                            long digits, long k_star);

/// sum_{k=0}^{count-1} f(k) over k_star contiguous ranges, partials combined
/// in ascending range order (deterministic for fixed k_star).
std::vector<BigComplex> parallel_partial_sum(const FunctionSpec& spec, long count, long digits,
                                             long k_star);

/// Parallel generalized sum: range-partitioned partial sum plus the worker
/// scheme for G. k_star is clamped to m/4 for the G part; k_star = 1
/// delegates to the serial engine (identical operation order).
SumResult parallel_generalized_sum(const FunctionSpec& spec, const SummationPlan& plan,
                                   long k_star);

/// Hardware parallelism as seen by OpenMP.
long hardware_workers();

} // namespace altsum

#endif
