#include "altsum/em_engine.hpp"

#include <chrono>

#include "altsum/coefficients.hpp"
#include "altsum/parallel.hpp"

namespace altsum {

namespace {

Rational em_correction_coeff(long j) { // B_{2j} / (2j)!
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
    return bernoulli(2 * j) / Rational(fact);
}

} // namespace

std::vector<BigComplex> em_stabilizer_g(const FunctionSpec& spec, long n, long m, long digits) {
    if (m < 1) throw argument_error("em_stabilizer_g needs m >= 1");
    if (n < 1) throw argument_error("em_stabilizer_g needs n >= 1");
    if (m >= 2 && !spec.has_derivatives())
        throw capability_error("summand '" + spec.name +
                               "' has no derivative oracle; the Euler-Maclaurin path needs one");

    BigReal x(n - 1, digits);
    auto acc = spec.F(x);
    auto fx = spec.f(x);
    BigReal half(0.5, digits);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += fx[i] * half;
    for (long j = 1; j <= m - 1; ++j) {
        BigReal coeff(em_correction_coeff(j), digits);
        auto der = (*spec.odd_derivatives)(x, 2 * j - 1);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += der[i] * coeff;
    }
    return acc;
}

Rational em_stabilizer_g_exact(const RationalPolynomial& f, const Rational& n, long m) {
    if (m < 1) throw argument_error("em_stabilizer_g_exact needs m >= 1");
    Rational x = n - 1;
    RationalPolynomial F = f.antiderivative();
    Rational acc = F.eval(x) + f.eval(x) / 2;
    RationalPolynomial der = f.derivative();
    for (long j = 1; j <= m - 1; ++j) {
        acc += em_correction_coeff(j) * der.eval(x);
        der = der.derivative().derivative();
    }
    return acc;
}

std::vector<BigComplex> em_finite_sum(const FunctionSpec& spec, long n, long m, long digits) {
    if (n < 1) throw argument_error("em_finite_sum needs n >= 1");
    if (m >= 2 && !spec.has_derivatives())
        throw capability_error("summand '" + spec.name +
                               "' has no derivative oracle; the Euler-Maclaurin path needs one");
    BigReal hi(n - 1, digits);
    BigReal lo(0L, digits);
    auto acc = spec.F(hi);
    auto F0 = spec.F(lo);
    auto f_hi = spec.f(hi);
    auto f_lo = spec.f(lo);
    BigReal half(0.5, digits);
    for (size_t i = 0; i < acc.size(); ++i) {
        acc[i] -= F0[i];
        acc[i] += (f_hi[i] + f_lo[i]) * half;
    }
    for (long j = 1; j <= m - 1; ++j) {
        BigReal coeff(em_correction_coeff(j), digits);
        auto d_hi = (*spec.odd_derivatives)(hi, 2 * j - 1);
        auto d_lo = (*spec.odd_derivatives)(lo, 2 * j - 1);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += (d_hi[i] - d_lo[i]) * coeff;
    }
    return acc;
}

Rational em_finite_sum_exact(const RationalPolynomial& f, long n, long m) {
    if (n < 1) throw argument_error("em_finite_sum_exact needs n >= 1");
    RationalPolynomial F = f.antiderivative();
    Rational hi(n - 1);
    Rational lo(0);
    Rational acc = F.eval(hi) - F.eval(lo) + (f.eval(hi) + f.eval(lo)) / 2;
    RationalPolynomial der = f.derivative();
    for (long j = 1; j <= m - 1; ++j) {
        acc += em_correction_coeff(j) * (der.eval(hi) - der.eval(lo));
        der = der.derivative().derivative();
    }
    return acc;
}

SumResult em_generalized_sum(const FunctionSpec& spec, const SummationPlan& plan, long workers) {
    if (plan.engine != Engine::em)
        throw argument_error("em_generalized_sum needs an em plan");
    if (plan.m <= spec.m0)
        throw argument_error("em_generalized_sum needs plan.m >= m0 + 1");
    if (!spec.has_derivatives())
        throw capability_error("summand '" + spec.name +
                               "' has no derivative oracle; the Euler-Maclaurin path needs one");
    if (workers < 1) workers = 1;

    auto t0 = std::chrono::steady_clock::now();
    long d1 = plan.d1;
    auto partial = parallel_partial_sum(spec, plan.c + 1, d1, workers);
    auto g = em_stabilizer_g(spec, plan.c + 1, plan.m, d1);
    for (size_t i = 0; i < partial.size(); ++i) partial[i] -= g[i];

    SumResult result;
    result.value = std::move(partial);
    result.d = plan.d;
    result.m = plan.m;
    result.n_or_c = plan.c;
    result.d1 = d1;
    result.bound = plan.bound;
    result.method = SumResult::Method::em;
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

Rational faulhaber_sum(long p, long n) {
    if (p < 0 || n < 0) throw argument_error("faulhaber_sum needs p, n >= 0");
    Rational acc(0);
    Integer binom(1); // C(p+1, 0)
    Integer npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(p + 1)); // n^(p+1)
    for (long a = 0; a <= p; ++a) {
        if (a > 0) {
            binom *= (p + 2 - a);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(a));
            if (n == 0)
                npow = 0; // n^(p+1-a) with n = 0 (a < p+1 here)
            else
                mpz_divexact_ui(npow.get_mpz_t(), npow.get_mpz_t(),
                                static_cast<unsigned long>(n));
        }
        acc += bernoulli(a) * Rational(binom * npow);
    }
    return acc / (p + 1);
}

} // namespace altsum
