#include "altsum/parallel.hpp"

#include <chrono>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altsum {

long hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Partition make_partition(long m, long k_star) {
    if (m < 2 || m % 2 != 0) throw argument_error("make_partition needs even m >= 2");
    if (k_star < 1) throw argument_error("make_partition needs k_star >= 1");
    if (m < 4 * k_star)
        throw argument_error("make_partition needs m >= 4*k_star; max admissible k_star = " +
                             std::to_string(m / 4));
    long half = m / 2;
    long q = half / k_star;
    long r = half % k_star;
    Partition p;
    p.k_star = k_star;
    p.ell.resize(static_cast<size_t>(k_star));
    p.m_marks.resize(static_cast<size_t>(k_star) + 1);
    p.m_marks[0] = 0;
    for (long k = 1; k <= k_star; ++k) {
        p.ell[static_cast<size_t>(k - 1)] = 2 * (q + (k <= r ? 1 : 0));
        p.m_marks[static_cast<size_t>(k)] = 2 * (k * q + std::min(k, r));
    }
    return p;
}

std::vector<Rational> worker_seeds(long m, const Partition& partition) {
    long k_star = partition.k_star;
    std::vector<Rational> blocks(static_cast<size_t>(k_star));
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(static) num_threads(static_cast<int>(k_star))
    for (long k = 1; k <= k_star; ++k) {
        try {
            // N_k = prod_{j = m_{k-1}+1}^{m_k} (j - m - 1)/(m + j)
            Rational prod(1);
            for (long j = partition.m_marks[static_cast<size_t>(k - 1)] + 1;
                 j <= partition.m_marks[static_cast<size_t>(k)]; ++j)
                prod *= make_rational(j - m - 1, m + j);
            blocks[static_cast<size_t>(k - 1)] = prod;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Rational> seeds(static_cast<size_t>(k_star));
    Rational running(-2);
    for (long k = 1; k <= k_star; ++k) {
        running *= blocks[static_cast<size_t>(k - 1)];
        seeds[static_cast<size_t>(k - 1)] = running;
    }
    return seeds;
}

WorkerOutput worker_pass(long k, const Partition& partition, long m, long c,
                         const FunctionSpec& spec, long digits, const Rational& seed) {
    if (k < 1 || k > partition.k_star) throw argument_error("worker index out of range");
    long hi = partition.m_marks[static_cast<size_t>(k)];
    long steps = partition.ell[static_cast<size_t>(k - 1)] / 2;

    auto H = [&](long j) { // F(c - j/2) + F(c + j/2 - 1) [j >= 2], points exact
        auto v = spec.F(BigReal(make_rational(2 * c - j, 2), digits));
        if (j >= 2) {
            auto w = spec.F(BigReal(make_rational(2 * c + j - 2, 2), digits));
            for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        }
        return v;
    };

    auto scaled = [&](const std::vector<BigComplex>& v, const Rational& s) {
        BigReal sr(s, digits);
        std::vector<BigComplex> out;
        out.reserve(v.size());
        for (const auto& z : v) out.push_back(z * sr);
        return out;
    };

    WorkerOutput out;
    Rational rho_ev = seed;
    Rational rho_od = rho_ev * make_rational(m + hi, hi - m - 1);
    Rational gamma_ev = rho_ev / hi;
    Rational gamma_od = rho_od / (hi - 1);
    out.theta_ev = gamma_ev;
    out.theta_od = gamma_od;
    out.eta_ev = H(hi);
    out.eta_od = H(hi - 1);
    out.sigma_ev = scaled(out.eta_ev, gamma_ev);
    out.sigma_od = scaled(out.eta_od, gamma_od);

    for (long i = 1; i < steps; ++i) {
        long j = hi - 2 * i;
        rho_ev = rho_od * make_rational(m + j + 1, j - m);
        rho_od = rho_ev * make_rational(m + j, j - m - 1);
        gamma_ev = rho_ev / j;
        gamma_od = rho_od / (j - 1);
        out.theta_ev += gamma_ev;
        out.theta_od += gamma_od;

        auto h_ev = H(j);
        BigReal th_ev(out.theta_ev, digits);
        for (size_t t = 0; t < h_ev.size(); ++t) {
            out.eta_ev[t] += h_ev[t];
            out.sigma_ev[t] += h_ev[t] * th_ev;
        }
        auto h_od = H(j - 1);
        BigReal th_od(out.theta_od, digits);
        for (size_t t = 0; t < h_od.size(); ++t) {
            out.eta_od[t] += h_od[t];
            out.sigma_od[t] += h_od[t] * th_od;
        }
    }
    return out;
}

std::vector<BigComplex> assemble(const std::vector<WorkerOutput>& outputs,
                                 const Partition& partition, long digits) {
    long k_star = partition.k_star;
    if (static_cast<long>(outputs.size()) != k_star)
        throw argument_error("assemble needs one output per worker");

    // tau_{m_k+2} and tau_{m_k+1} as suffix sums of the theta terminals
    std::vector<Rational> tau_ev(static_cast<size_t>(k_star) + 1, Rational(0));
    std::vector<Rational> tau_od(static_cast<size_t>(k_star) + 1, Rational(0));
    for (long k = k_star - 1; k >= 0; --k) {
        tau_ev[static_cast<size_t>(k)] =
            tau_ev[static_cast<size_t>(k + 1)] + outputs[static_cast<size_t>(k)].theta_ev;
        tau_od[static_cast<size_t>(k)] =
            tau_od[static_cast<size_t>(k + 1)] + outputs[static_cast<size_t>(k)].theta_od;
    }

    size_t q = outputs[0].eta_ev.size();
    std::vector<BigComplex> g(q, BigComplex(BigReal(0L, digits)));
    for (long k = 1; k <= k_star; ++k) {
        const WorkerOutput& w = outputs[static_cast<size_t>(k - 1)];
        BigReal te(tau_ev[static_cast<size_t>(k)], digits);
        BigReal to(tau_od[static_cast<size_t>(k)], digits);
        for (size_t t = 0; t < q; ++t) {
            g[t] += w.eta_ev[t] * te;
            g[t] += w.sigma_ev[t];
            g[t] += w.eta_od[t] * to;
            g[t] += w.sigma_od[t];
        }
    }
    return g;
}

std::vector<BigComplex> parallel_stabilizer(const FunctionSpec& spec, long n, long m,
                                            long digits, long k_star) {
    Partition partition = make_partition(m, k_star);
    std::vector<Rational> seeds = worker_seeds(m, partition);
    std::vector<WorkerOutput> outputs(static_cast<size_t>(k_star));
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(static) num_threads(static_cast<int>(k_star))
    for (long k = 1; k <= k_star; ++k) {
        try {
            outputs[static_cast<size_t>(k - 1)] = worker_pass(
                k, partition, m, n, spec, digits, seeds[static_cast<size_t>(k - 1)]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return assemble(outputs, partition, digits);
}

std::vector<BigComplex> parallel_partial_sum(const FunctionSpec& spec, long count, long digits,
                                             long k_star) {
    if (count < 0) throw argument_error("parallel_partial_sum needs count >= 0");
    if (k_star < 1) k_star = 1;
    if (k_star > count) k_star = count > 0 ? count : 1;

    std::vector<std::vector<BigComplex>> partials(
        static_cast<size_t>(k_star),
        std::vector<BigComplex>(spec.q, BigComplex(BigReal(0L, digits))));
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(static) num_threads(static_cast<int>(k_star))
    for (long r = 0; r < k_star; ++r) {
        try {
            long lo = count * r / k_star;
            long hi = count * (r + 1) / k_star;
            auto& acc = partials[static_cast<size_t>(r)];
            for (long k = lo; k < hi; ++k) {
                auto fk = spec.f(BigReal(k, digits));
                for (size_t i = 0; i < acc.size(); ++i) acc[i] += fk[i];
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<BigComplex> total(spec.q, BigComplex(BigReal(0L, digits)));
    for (long r = 0; r < k_star; ++r)
        for (size_t i = 0; i < total.size(); ++i) total[i] += partials[static_cast<size_t>(r)][i];
    return total;
}

SumResult parallel_generalized_sum(const FunctionSpec& spec, const SummationPlan& plan,
                                   long k_star) {
    if (plan.engine != Engine::alt)
        throw argument_error("parallel_generalized_sum needs an alt plan");
    if (k_star < 1) k_star = 1;
    if (k_star == 1) return alt_generalized_sum(spec, plan);
    if (plan.m <= spec.m0)
        throw argument_error("parallel_generalized_sum needs plan.m >= m0 + 1");

    long kg = std::min(k_star, plan.m / 4); // the G part needs m >= 4*k
    if (kg < 1) kg = 1;

    auto t0 = std::chrono::steady_clock::now();
    long d1 = plan.d1;
    auto partial = parallel_partial_sum(spec, plan.c, d1, k_star);
    auto g = kg == 1 ? stabilizer_g(spec, plan.c, plan.m, d1)
                     : parallel_stabilizer(spec, plan.c, plan.m, d1, kg);
    for (size_t i = 0; i < partial.size(); ++i) partial[i] -= g[i];

    SumResult result;
    result.value = std::move(partial);
    result.d = plan.d;
    result.m = plan.m;
    result.n_or_c = plan.c;
    result.d1 = d1;
    result.bound = plan.bound;
    result.method = SumResult::Method::alt_parallel;
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace altsum
