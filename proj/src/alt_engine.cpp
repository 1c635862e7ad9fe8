#include "altsum/alt_engine.hpp"

#include <chrono>
#include <map>

#include "altsum/coefficients.hpp"

namespace altsum {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::vector<BigComplex> zero_vector(size_t q, long digits) {
    return std::vector<BigComplex>(q, BigComplex(BigReal(0L, digits)));
}

void add_scaled(std::vector<BigComplex>& acc, const std::vector<BigComplex>& v,
                const BigReal& s) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += v[i] * s;
}

} // namespace

std::vector<BigComplex> stabilizer_g(const FunctionSpec& spec, long n, long m, long digits) {
    if (m < 1) throw argument_error("stabilizer_g needs m >= 1");
    if (n < 0) throw argument_error("stabilizer_g needs n >= 0");
    auto table = coefficient_table(m);

    auto eval_F = [&](long twice_x) { // point = twice_x / 2, exact
        return spec.F(BigReal(make_rational(twice_x, 2), digits));
    };

    std::vector<BigComplex> acc = zero_vector(spec.q, digits);
    add_scaled(acc, eval_F(2 * n - 1), BigReal(table->tau_at(1), digits));
    for (long alpha = 1; alpha <= m - 1; ++alpha) {
        auto left = eval_F(2 * n - 1 - alpha);
        auto right = eval_F(2 * n - 1 + alpha);
        for (size_t i = 0; i < left.size(); ++i) left[i] += right[i];
        add_scaled(acc, left, BigReal(table->tau_at(1 + alpha), digits));
    }
    return acc;
}

Rational stabilizer_g_exact(const RationalPolynomial& antiderivative, const Rational& n, long m) {
    if (m < 1) throw argument_error("stabilizer_g_exact needs m >= 1");
    auto table = coefficient_table(m);
    Rational half = make_rational(1, 2);
    Rational acc = table->tau_at(1) * antiderivative.eval(n - half);
    for (long alpha = 1; alpha <= m - 1; ++alpha) {
        Rational off = make_rational(alpha, 2);
        acc += table->tau_at(1 + alpha) *
               (antiderivative.eval(n - half - off) + antiderivative.eval(n - half + off));
    }
    return acc;
}

std::vector<BigComplex> alt_finite_sum(const FunctionSpec& spec, long n, long m, long digits) {
    if (n < 1) throw argument_error("alt_finite_sum needs n >= 1");
    auto g_n = stabilizer_g(spec, n, m, digits);
    auto g_0 = stabilizer_g(spec, 0, m, digits);
    for (size_t i = 0; i < g_n.size(); ++i) g_n[i] -= g_0[i];
    return g_n;
}

Rational alt_finite_sum_exact(const RationalPolynomial& f, long n, long m) {
    if (n < 1) throw argument_error("alt_finite_sum_exact needs n >= 1");
    RationalPolynomial F = f.antiderivative();
    return stabilizer_g_exact(F, Rational(n), m) - stabilizer_g_exact(F, Rational(0), m);
}

SumResult alt_generalized_sum(const FunctionSpec& spec, const SummationPlan& plan) {
    if (plan.engine != Engine::alt)
        throw argument_error("alt_generalized_sum needs an alt plan");
    if (plan.m <= spec.m0)
        throw argument_error("alt_generalized_sum needs plan.m >= m0 + 1");
    if (plan.c < 1) throw argument_error("alt_generalized_sum needs c >= 1");

    auto t0 = clock_type::now();
    long d1 = plan.d1;
    std::vector<BigComplex> partial = zero_vector(spec.q, d1);
    for (long k = 0; k < plan.c; ++k) {
        auto fk = spec.f(BigReal(k, d1));
        for (size_t i = 0; i < partial.size(); ++i) partial[i] += fk[i];
    }
    auto g = stabilizer_g(spec, plan.c, plan.m, d1);
    for (size_t i = 0; i < partial.size(); ++i) partial[i] -= g[i];

    SumResult result;
    result.value = std::move(partial);
    result.d = plan.d;
    result.m = plan.m;
    result.n_or_c = plan.c;
    result.d1 = d1;
    result.bound = plan.bound;
    result.method = SumResult::Method::alt_serial;
    result.elapsed_ms = ms_since(t0);
    return result;
}

SumResult euler_gamma_with_plan(const SummationPlan& plan, long workers) {
    if (plan.engine != Engine::alt)
        throw argument_error("euler_gamma_with_plan needs an alt plan");
    if (workers < 1) workers = 1;
    auto t0 = clock_type::now();
    long d1 = plan.d1;
    long m = plan.m;
    long c = plan.c;
    auto table = coefficient_table(m);

    // logarithm arguments: 2c+1, then (2c+1)^2 - (j-1)^2 for j = 2..m
    Integer base = Integer(2 * c + 1);
    Integer base2 = base * base;
    std::vector<Integer> args(static_cast<size_t>(m));
    args[0] = base;
    for (long j = 2; j <= m; ++j) args[static_cast<size_t>(j - 1)] = base2 - Integer(j - 1) * Integer(j - 1);

    std::vector<BigReal> logs(static_cast<size_t>(m), BigReal(0L, d1));
#pragma omp parallel for schedule(static) num_threads(static_cast<int>(workers))
    for (long j = 1; j <= m; ++j)
        logs[static_cast<size_t>(j - 1)] = ln(BigReal(args[static_cast<size_t>(j - 1)], d1));

    BigReal acc(harmonic_number(static_cast<unsigned long>(c)), d1);
    acc += ln(BigReal(2L, d1));
    for (long j = 1; j <= m; ++j)
        acc -= BigReal(table->tau_at(j), d1) * logs[static_cast<size_t>(j - 1)];

    SumResult result;
    result.value = {BigComplex(std::move(acc))};
    result.d = plan.d;
    result.m = m;
    result.n_or_c = c;
    result.d1 = d1;
    result.bound = plan.bound;
    result.method = SumResult::Method::alt_serial;
    result.elapsed_ms = ms_since(t0);
    return result;
}

SumResult euler_gamma(long d) {
    return euler_gamma_with_plan(plan_euler_alt(d));
}

std::vector<WeightPiece> weight_function(long m, long n) {
    if (m < 1) throw argument_error("weight_function needs m >= 1");
    if (n < m - 1) throw argument_error("weight_function needs n >= m-1");
    auto table = coefficient_table(m);

    std::map<std::pair<Rational, Rational>, Rational> merged;
    for (long alpha = 1 - m; alpha <= m - 1; ++alpha) {
        Rational lo = make_rational(alpha - 1, 2);
        Rational hi = make_rational(2 * n - 1 - alpha, 2);
        if (!(lo < hi)) continue;
        merged[{lo, hi}] += table->tau_at(1 + (alpha < 0 ? -alpha : alpha));
    }
    std::vector<WeightPiece> out;
    out.reserve(merged.size());
    for (auto& [iv, w] : merged) out.push_back({iv.first, iv.second, w});
    return out;
}

} // namespace altsum
