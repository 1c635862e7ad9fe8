#ifndef ALTSUM_ALT_ENGINE_HPP
#define ALTSUM_ALT_ENGINE_HPP

#include <vector>

#include "altsum/bounds.hpp"
#include "altsum/functions.hpp"
#include "altsum/numerics.hpp"
#include "altsum/rational_polynomial.hpp"

namespace altsum {

/// Result of a (generalized) summation: one value per component, the plan
/// actually used, the certified remainder bound when one exists (exact
/// polynomial mode has none), and timing.
struct SumResult {
    enum class Method { alt_serial, alt_parallel, em };

    std::vector<BigComplex> value;
    long d = 0;
    long m = 0;
    long n_or_c = 0;
    long d1 = 0;
    std::optional<BigReal> bound;
    double elapsed_ms = 0.0;
    Method method = Method::alt_serial;
};

/// Boundary term G_{m,F}(n): tau_1 F(n-1/2) plus the paired values
/// tau_{1+a} [F(n-1/2-a/2) + F(n-1/2+a/2)], a = 1..m-1. Exactly 2m-1
/// antiderivative evaluations; its difference across endpoints is the
/// finite-sum approximation, and its n -> infinity limit defines the
/// generalized sum.
std::vector<BigComplex> stabilizer_g(const FunctionSpec& spec, long n, long m, long digits);

/// The same boundary term for a rational antiderivative polynomial, exact.
Rational stabilizer_g_exact(const RationalPolynomial& antiderivative, const Rational& n, long m);

/// Finite-sum approximation A_m = G(n) - G(0) for sum_{k=0}^{n-1} f(k).
/// Exact (remainder zero) when f is a polynomial of degree <= 2m-1.
std::vector<BigComplex> alt_finite_sum(const FunctionSpec& spec, long n, long m, long digits);

/// Exact-rational A_m for a polynomial summand.
Rational alt_finite_sum_exact(const RationalPolynomial& f, long n, long m);

/// Generalized sum via the shift: sum_{k=0}^{c-1} f(k) - G_{m,F}(c), with the
/// certified bound copied from the plan. Needs plan.m >= spec.m0 + 1.
SumResult alt_generalized_sum(const FunctionSpec& spec, const SummationPlan& plan);

/// Euler's constant by the specialized rearrangement
///   H_c + ln 2 - tau_1 ln(2c+1) - sum_{j=2}^m tau_j ln((2c+1)^2 - (j-1)^2),
/// which nearly halves the logarithm count; H_c is summed exactly in
/// rationals and rounded once. Workers parallelize the logarithm batch; the
/// fold order is fixed, so the result does not depend on the thread count.
SumResult euler_gamma_with_plan(const SummationPlan& plan, long workers = 1);
SumResult euler_gamma(long d);

/// One piece of the piecewise-constant weight h_m: weight on the half-open
/// interval (lo, hi].
struct WeightPiece {
    Rational lo;
    Rational hi;
    Rational weight;
};

/// The weight function h_m for n terms as (interval, weight) pieces, in
/// ascending interval order; pieces with coinciding intervals are merged and
/// empty intervals dropped. Needs n >= m-1. The weighted lengths sum to n.
std::vector<WeightPiece> weight_function(long m, long n);

} // namespace altsum

#endif
