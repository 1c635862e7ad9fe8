#ifndef ALTSUM_EM_ENGINE_HPP
#define ALTSUM_EM_ENGINE_HPP

#include <vector>

#include "altsum/alt_engine.hpp"
#include "altsum/bounds.hpp"
#include "altsum/functions.hpp"
#include "altsum/rational_polynomial.hpp"

namespace altsum {

/// Euler-Maclaurin boundary term
///   G^EM_{m,F}(n) = F(n-1) + f(n-1)/2 + sum_{j=1}^{m-1} B_{2j}/(2j)! f^(2j-1)(n-1).
/// Needs the spec's derivative oracle when m >= 2. Kept as the independent
/// cross-check for the antiderivative-only engine.
std::vector<BigComplex> em_stabilizer_g(const FunctionSpec& spec, long n, long m, long digits);

/// Exact-rational G^EM for a polynomial summand.
Rational em_stabilizer_g_exact(const RationalPolynomial& f, const Rational& n, long m);

/// Finite-sum approximation
///   A^EM_m = [F(n-1) - F(0)] + [f(n-1)+f(0)]/2
///            + sum_{j=1}^{m-1} B_{2j}/(2j)! [f^(2j-1)(n-1) - f^(2j-1)(0)].
/// Exact when f is a polynomial of degree < 2m-1.
std::vector<BigComplex> em_finite_sum(const FunctionSpec& spec, long n, long m, long digits);

/// Exact-rational A^EM_m for a polynomial summand.
Rational em_finite_sum_exact(const RationalPolynomial& f, long n, long m);

/// Generalized sum via the shift: sum_{k=0}^{c} f(k) - G^EM_{m,F}(c+1).
/// `workers` parallelizes only the partial sum; the derivative chain is a
/// single strand.
SumResult em_generalized_sum(const FunctionSpec& spec, const SummationPlan& plan,
                             long workers = 1);

/// sum_{k=0}^{n-1} k^p = 1/(p+1) sum_{a=0}^{p} B_a C(p+1, a) n^(p+1-a),
/// exact (0^0 := 1).
Rational faulhaber_sum(long p, long n);

} // namespace altsum

#endif
