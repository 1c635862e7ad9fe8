#ifndef ALTSUM_BOUNDS_HPP
#define ALTSUM_BOUNDS_HPP

#include <optional>
#include <utility>

#include "altsum/functions.hpp"
#include "altsum/numerics.hpp"

namespace altsum {

enum class Engine { alt, em };

/// Universal decay constants. lambda_star is the maximum of
/// (1-t)^(t-1) (1+t)^(-1-t) t^2 over (0,1); kappa = sqrt(lambda_star/4)
/// controls the tail decay rate (kappa*m/(c-m/2))^(2m) of the antiderivative
/// route, and kappa_em = 1/(pi*e) the corresponding Euler-Maclaurin rate.
/// Stored to 50 digits; the test suite recomputes lambda_star independently.
BigReal lambda_star(long digits);
BigReal kappa(long digits);
BigReal kappa_em(long digits);

/// 1/2 * 10^(-d): the accuracy target for d correct digits.
BigReal accuracy_target(long d, long digits);

/// Relative evaluation costs used by the planner. The defaults model the
/// common case where one antiderivative value costs about as much as one
/// summand value and the coefficients are nearly free.
struct CostModel {
    double t_f = 1.0;
    double t_F = 1.0;
    double t_tau = 0.01;
    double t_der = 1.0; // Euler-Maclaurin derivative cost scale
    double eps = 0.5;   // exponent in the t_der * m^(2+eps) derivative model

    void validate() const;
    /// T_F ~ T_f >> T_tau: the regime where m ~ 0.53 d is near-optimal.
    bool typical() const {
        return t_F <= 1.25 * t_f && t_F >= 0.8 * t_f && t_tau <= 0.05 * t_f;
    }
};

/// A validated (m, c, working-precision) selection whose certified remainder
/// bound is at most 1/2 * 10^(-d). m is always even so the same plan can
/// drive the parallel path.
struct SummationPlan {
    long d = 0;
    long m = 0;
    long c = 0;
    long d1 = 0;
    BigReal bound;
    Engine engine = Engine::alt;
};

struct PlanOverrides {
    std::optional<long> m;
    std::optional<long> c;
};

/// Certified tail bound for the antiderivative route with theta0 = pi/2:
///   1.001 pi mu 3^lambda / ((2m+1)(2m-1-lambda))
///     * (lambda_star/4)^m * m^(2m+1) / (c+a-m/2-1/2)^(2m-1-lambda)
/// (1.0331 replaces 1.001 when m = 1). Decreasing in c.
BigReal alt_remainder_bound(const AnalyticityCertificate& cert, long m, long c, long digits);

/// Same bound for a general sector angle theta0, using the exact coefficient
/// sum rather than its closed-form estimate:
///   mu (2+sin theta0)^lambda / ((2m+1)(2m-1-lambda)(2 sin theta0)^(2m))
///     * sum_j |gamma_j| j^(2m+1) / (c+a-m/2-1/2)^(2m-1-lambda).
BigReal alt_remainder_bound_general(const AnalyticityCertificate& cert, long m, long c,
                                    long digits);

/// Euler-Maclaurin tail bound (theta0 = pi/2, m >= 4, lambda < 2m-2):
///   2.02 mu 3^lambda / (2m-2-lambda) * (2m-1)!/(2pi)^(2m-1) / (c+a)^(2m-2-lambda).
BigReal em_remainder_bound(const AnalyticityCertificate& cert, long m, long c, long digits);

/// Specialized bounds for the harmonic summand f(x) = 1/(x+1): slightly
/// sharper than the generic bounds above.
BigReal euler_alt_bound(long m, long c, long digits);  // m >= 2, c > (m-1)/2
BigReal euler_em_bound(long m, long c, long digits);   // m >= 4
std::pair<BigReal, BigReal> euler_special_bounds(long m, long c, long digits);

/// Remainder bound from a caller-supplied sup bound M on the shifted
/// derivative sums: M / ((2m+1)! 2^(2m)) * sum_j |gamma_j| j^(2m+1).
BigReal bound_from_M(const BigReal& M, long m, long digits);

/// Plans the antiderivative route: picks even m (near cost-optimal for the
/// given cost model), then the smallest c whose certified bound meets the
/// target, then the working precision. `m_min` lets callers enforce
/// m > m0 for the summand at hand. Overrides pin m and/or c; a pinned pair
/// that cannot meet the target raises planning_error.
SummationPlan plan_alt(long d, const AnalyticityCertificate& cert, const CostModel& costs = {},
                       const PlanOverrides& overrides = {}, long m_min = 2);

/// Same for the Euler-Maclaurin route: m = smallest even integer of at least
/// max(4, d/(2(1+eps) log10 d)), c from the bound root.
SummationPlan plan_em(long d, const AnalyticityCertificate& cert, const CostModel& costs = {},
                      const PlanOverrides& overrides = {}, long m_min = 4);

/// Euler-constant plans driven by the specialized bounds. The antiderivative
/// route accounts for ln being much costlier than one division at high
/// precision (T_F ~ 10 sqrt(d) T_f) and for the halved logarithm count.
SummationPlan plan_euler_alt(long d, const PlanOverrides& overrides = {});
SummationPlan plan_euler_em(long d, double eps = 0.5, const PlanOverrides& overrides = {});

} // namespace altsum

#endif
