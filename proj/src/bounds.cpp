#include "altsum/bounds.hpp"

#include <cmath>

#include "altsum/coefficients.hpp"

namespace altsum {

namespace {

const char* kLambdaStar = "0.30812021193851280624789747871915433419329331038844";
const char* kKappa      = "0.27754288494686402528234679456941132341357690881669";
const char* kKappaEm    = "0.11709966304863832138048453693333374442782984255212";

constexpr long kPlanDigits = 60; // precision for bound evaluation and roots

long even_ceil(double x) {
    long k = static_cast<long>(std::ceil(x / 2.0 - 1e-12));
    return 2 * (k < 1 ? 1 : k);
}

BigReal ln_factorial(long n, long digits) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return ln(BigReal(f, digits));
}

} // namespace

BigReal lambda_star(long digits) { return BigReal(std::string(kLambdaStar), digits); }
BigReal kappa(long digits) { return BigReal(std::string(kKappa), digits); }
BigReal kappa_em(long digits) { return BigReal(std::string(kKappaEm), digits); }

BigReal accuracy_target(long d, long digits) {
    return pow10(-d, digits) / 2;
}

void CostModel::validate() const {
    if (!(t_f > 0)) throw argument_error("cost model needs t_f > 0");
    if (t_F < 0 || t_tau < 0 || t_der < 0 || eps <= 0)
        throw argument_error("cost model needs nonnegative costs and eps > 0");
}

BigReal alt_remainder_bound(const AnalyticityCertificate& cert, long m, long c, long digits) {
    if (m < 1) throw argument_error("alt_remainder_bound needs m >= 1");
    BigReal lam(cert.lambda, digits);
    if (!(cert.lambda < 2.0 * m - 1.0))
        throw argument_error("alt_remainder_bound needs lambda < 2m-1");
    BigReal base = BigReal(cert.a, digits) + c - BigReal(m, digits) / 2 - BigReal(0.5, digits);
    if (base.sign() <= 0)
        throw argument_error("alt_remainder_bound needs c + a - m/2 - 1/2 > 0");

    BigReal front(m == 1 ? "1.0331" : "1.001", digits);
    BigReal num = front * const_pi(digits) * BigReal(cert.mu, digits) *
                  pow(BigReal(3L, digits), lam);
    BigReal den = BigReal(2 * m + 1, digits) * (BigReal(2 * m - 1, digits) - lam);
    BigReal decay = pow_si(lambda_star(digits) / 4, m) * pow_si(BigReal(m, digits), 2 * m + 1);
    BigReal tail = pow(base, BigReal(2 * m - 1, digits) - lam);
    return num / den * decay / tail;
}

BigReal alt_remainder_bound_general(const AnalyticityCertificate& cert, long m, long c,
                                    long digits) {
    if (m < 1) throw argument_error("alt_remainder_bound_general needs m >= 1");
    if (!(cert.lambda < 2.0 * m - 1.0))
        throw argument_error("alt_remainder_bound_general needs lambda < 2m-1");
    if (2.0 * (c + cert.a) < m + 3)
        throw argument_error("alt_remainder_bound_general needs c + a >= (m+3)/2");
    BigReal lam(cert.lambda, digits);
    BigReal st = sin(BigReal(cert.theta0, digits));
    BigReal coeff_sum(gamma_weighted_power_sum(m), digits);
    BigReal num = BigReal(cert.mu, digits) * pow(st + 2, lam) * coeff_sum;
    BigReal den = BigReal(2 * m + 1, digits) * (BigReal(2 * m - 1, digits) - lam) *
                  pow_si(st * 2, 2 * m);
    BigReal base = BigReal(cert.a, digits) + c - BigReal(m, digits) / 2 - BigReal(0.5, digits);
    return num / den / pow(base, BigReal(2 * m - 1, digits) - lam);
}

BigReal em_remainder_bound(const AnalyticityCertificate& cert, long m, long c, long digits) {
    if (m < 4) throw argument_error("em_remainder_bound needs m >= 4");
    if (!(cert.lambda < 2.0 * m - 2.0))
        throw argument_error("em_remainder_bound needs lambda < 2m-2");
    BigReal base = BigReal(cert.a, digits) + c;
    if (base.sign() <= 0) throw argument_error("em_remainder_bound needs c + a > 0");
    BigReal lam(cert.lambda, digits);
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * m - 1));
    BigReal num = BigReal("2.02", digits) * BigReal(cert.mu, digits) *
                  pow(BigReal(3L, digits), lam) * BigReal(fact, digits);
    BigReal den = (BigReal(2 * m - 2, digits) - lam) * pow_si(const_pi(digits) * 2, 2 * m - 1);
    return num / den / pow(base, BigReal(2 * m - 2, digits) - lam);
}

BigReal euler_alt_bound(long m, long c, long digits) {
    if (m < 2) throw argument_error("euler_alt_bound needs m >= 2");
    if (2 * c <= m - 1) throw argument_error("euler_alt_bound needs c > (m-1)/2");
    BigReal num = BigReal("1.001", digits) * const_pi(digits);
    BigReal den = BigReal(2 * m + 1, digits) * (2 * m);
    BigReal decay = pow_si(lambda_star(digits) / 4, m) * pow_si(BigReal(m, digits), 2 * m + 1);
    BigReal base = BigReal(c, digits) - BigReal(m, digits) / 2 + BigReal(0.5, digits);
    return num / den * decay / pow_si(base, 2 * m);
}

BigReal euler_em_bound(long m, long c, long digits) {
    if (m < 4) throw argument_error("euler_em_bound needs m >= 4");
    if (c < 1) throw argument_error("euler_em_bound needs c >= 1");
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * m - 2));
    BigReal num = BigReal("2.02", digits) * BigReal(fact, digits);
    BigReal den = pow_si(const_pi(digits) * 2, 2 * m - 1) * pow_si(BigReal(c + 1, digits), 2 * m - 1);
    return num / den;
}

std::pair<BigReal, BigReal> euler_special_bounds(long m, long c, long digits) {
    return {euler_alt_bound(m, c, digits), euler_em_bound(m, c, digits)};
}

BigReal bound_from_M(const BigReal& M, long m, long digits) {
    if (m < 1) throw argument_error("bound_from_M needs m >= 1");
    if (M.sign() < 0) throw argument_error("bound_from_M needs M >= 0");
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * m + 1));
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * m));
    BigReal coeff(gamma_weighted_power_sum(m), digits);
    return M.to_precision(digits) * coeff / BigReal(Integer(fact * two_pow), digits);
}

namespace {

double lambert_m_estimate(long d, double omega) {
    // m minimizing K m (1 + omega 10^(d/(2m))):
    //   m = ln(10)/(1 + W(1/(e*omega))) * d/2
    BigReal w = lambert_w(BigReal(1.0 / (M_E * omega), 25));
    double denom = 1.0 + w.to_double();
    return std::log(10.0) / denom * static_cast<double>(d) / 2.0;
}

long sector_min_c_alt(const AnalyticityCertificate& cert, long m) {
    // c + a >= (m+3)/2 and c + a - m/2 - 1/2 > 0
    long c = static_cast<long>(std::ceil((m + 3) / 2.0 - cert.a));
    while (!(static_cast<double>(c) + cert.a >= (m + 3) / 2.0)) ++c;
    return c < 1 ? 1 : c;
}

/// smallest c >= c_min with bound(c) <= target, starting from a closed-form
/// guess; Bound must be decreasing in c
template <typename Bound>
long settle_c(long guess, long c_min, const BigReal& target, Bound&& bound) {
    long c = guess < c_min ? c_min : guess;
    while (c > c_min && bound(c - 1) <= target) --c;
    long attempts = 0;
    while (bound(c) > target) {
        ++c;
        if (++attempts > 1000000)
            throw planning_error("no c meets the accuracy target");
    }
    return c;
}

void require_even(long m, const char* who) {
    if (m < 2 || m % 2 != 0)
        throw argument_error(std::string(who) + " needs an even m >= 2");
}

} // namespace

SummationPlan plan_alt(long d, const AnalyticityCertificate& cert, const CostModel& costs,
                       const PlanOverrides& overrides, long m_min) {
    if (d < 6) throw argument_error("plan_alt needs d >= 6");
    cert.validate();
    costs.validate();
    if (m_min < 2) m_min = 2;

    long m;
    if (overrides.m) {
        m = *overrides.m;
        require_even(m, "plan_alt override");
    } else if (costs.typical()) {
        m = 2 * ((53 * d + 199) / 200); // 2*ceil(0.53*d/2), exact
    } else {
        double K = costs.t_f / 2 + costs.t_tau + 2 * costs.t_F;
        double omega = kappa(25).to_double() * costs.t_f / K;
        m = even_ceil(lambert_m_estimate(d, omega));
    }
    if (m < m_min) m = m_min + (m_min % 2);

    // the sector bound needs lambda < 2m-1
    while (!(cert.lambda < 2.0 * m - 1.0)) {
        if (overrides.m) throw planning_error("pinned m has lambda >= 2m-1");
        m += 2;
        if (m > 64 * d) throw planning_error("m escalation exceeded 64*d");
    }

    BigReal target = accuracy_target(d, kPlanDigits);
    auto bound_at = [&](long m_, long c_) {
        return alt_remainder_bound(cert, m_, c_, kPlanDigits);
    };

    long c;
    if (overrides.c) {
        c = *overrides.c;
        while (true) {
            if (static_cast<double>(c) + cert.a - m / 2.0 - 0.5 <= 0 ||
                static_cast<double>(c) + cert.a < (m + 3) / 2.0) {
                if (overrides.m) throw planning_error("pinned (m, c) violates the sector condition");
                throw planning_error("pinned c violates the sector condition at every admissible m");
            }
            if (bound_at(m, c) <= target) break;
            if (overrides.m) throw planning_error("pinned (m, c) misses the accuracy target");
            m += 2;
            if (m > 64 * d) throw planning_error("m escalation exceeded 64*d");
        }
    } else {
        // ceiling of the closed-form root of bound = target:
        //   c = (m+1)/2 - a + (2*10^d * 1.001 pi mu 3^l k^(2m) m^(2m+1)
        //                      / ((2m+1)(2m-1-l)))^(1/(2m-1-l))
        long c_min = sector_min_c_alt(cert, m);
        if (cert.mu == 0.0) {
            c = c_min;
        } else {
            BigReal lam(cert.lambda, kPlanDigits);
            BigReal lnX = ln(BigReal(2L, kPlanDigits)) +
                          BigReal(d, kPlanDigits) * ln(BigReal(10L, kPlanDigits)) +
                          ln(BigReal(m == 1 ? "1.0331" : "1.001", kPlanDigits) *
                             const_pi(kPlanDigits)) +
                          ln(BigReal(cert.mu, kPlanDigits)) + lam * ln(BigReal(3L, kPlanDigits)) +
                          ln(kappa(kPlanDigits)) * (2 * m) +
                          ln(BigReal(m, kPlanDigits)) * (2 * m + 1) -
                          ln(BigReal(2 * m + 1, kPlanDigits)) -
                          ln(BigReal(2 * m - 1, kPlanDigits) - lam);
            BigReal root = exp(lnX / (BigReal(2 * m - 1, kPlanDigits) - lam));
            BigReal c_real = root + BigReal((m + 1) / 2.0 - cert.a, kPlanDigits);
            long guess = c_real.ceil_to_integer().get_si();
            c = settle_c(guess, c_min, target, [&](long cc) { return bound_at(m, cc); });
        }
    }

    SummationPlan plan;
    plan.d = d;
    plan.m = m;
    plan.c = c;
    plan.d1 = d + guard_digits(d, m, c);
    plan.bound = bound_at(m, c);
    plan.engine = Engine::alt;
    if (plan.bound > target) throw planning_error("planned bound misses the accuracy target");
    return plan;
}

SummationPlan plan_em(long d, const AnalyticityCertificate& cert, const CostModel& costs,
                      const PlanOverrides& overrides, long m_min) {
    if (d < 6) throw argument_error("plan_em needs d >= 6");
    cert.validate();
    costs.validate();
    if (m_min < 4) m_min = 4;

    long m;
    if (overrides.m) {
        m = *overrides.m;
        require_even(m, "plan_em override");
        if (m < 4) throw argument_error("plan_em needs m >= 4");
    } else {
        double m_est = static_cast<double>(d) /
                       (2.0 * (1.0 + costs.eps) * std::log10(static_cast<double>(d)));
        m = even_ceil(m_est);
        if (m < 4) m = 4;
    }
    if (m < m_min) m = m_min + (m_min % 2);

    while (!(cert.lambda < 2.0 * m - 2.0)) {
        if (overrides.m) throw planning_error("pinned m has lambda >= 2m-2");
        m += 2;
        if (m > 64 * d) throw planning_error("m escalation exceeded 64*d");
    }

    BigReal target = accuracy_target(d, kPlanDigits);
    auto bound_at = [&](long m_, long c_) { return em_remainder_bound(cert, m_, c_, kPlanDigits); };

    long c_min = static_cast<long>(std::floor(-cert.a)) + 1;
    if (c_min < 1) c_min = 1;

    long c;
    if (overrides.c) {
        c = *overrides.c;
        while (true) {
            if (static_cast<double>(c) + cert.a <= 0) {
                throw planning_error("pinned c violates c + a > 0");
            }
            if (bound_at(m, c) <= target) break;
            if (overrides.m) throw planning_error("pinned (m, c) misses the accuracy target");
            m += 2;
            if (m > 64 * d) throw planning_error("m escalation exceeded 64*d");
        }
    } else if (cert.mu == 0.0) {
        c = c_min;
    } else {
        BigReal lam(cert.lambda, kPlanDigits);
        BigReal lnX = ln(BigReal(2L, kPlanDigits)) +
                      BigReal(d, kPlanDigits) * ln(BigReal(10L, kPlanDigits)) +
                      ln(BigReal("2.02", kPlanDigits) * BigReal(cert.mu, kPlanDigits)) +
                      lam * ln(BigReal(3L, kPlanDigits)) + ln_factorial(2 * m - 1, kPlanDigits) -
                      ln(BigReal(2 * m - 2, kPlanDigits) - lam) -
                      ln(const_pi(kPlanDigits) * 2) * (2 * m - 1);
        BigReal root = exp(lnX / (BigReal(2 * m - 2, kPlanDigits) - lam));
        BigReal c_real = root - BigReal(cert.a, kPlanDigits);
        long guess = c_real.ceil_to_integer().get_si();
        c = settle_c(guess, c_min, target, [&](long cc) { return bound_at(m, cc); });
    }

    SummationPlan plan;
    plan.d = d;
    plan.m = m;
    plan.c = c;
    plan.d1 = d + guard_digits(d, m, c);
    plan.bound = bound_at(m, c);
    plan.engine = Engine::em;
    if (plan.bound > target) throw planning_error("planned bound misses the accuracy target");
    return plan;
}

SummationPlan plan_euler_alt(long d, const PlanOverrides& overrides) {
    if (d < 6) throw argument_error("plan_euler_alt needs d >= 6");

    long m;
    if (overrides.m) {
        m = *overrides.m;
        require_even(m, "plan_euler_alt override");
    } else {
        // ln is ~10 sqrt(d) times a division at this scale, and the paired
        // logarithms halve the antiderivative count, so K ~ T_F here.
        double omega = kappa(25).to_double() / (10.0 * std::sqrt(static_cast<double>(d)));
        m = even_ceil(lambert_m_estimate(d, omega));
    }

    BigReal target = accuracy_target(d, kPlanDigits);
    auto bound_at = [&](long c_) { return euler_alt_bound(m, c_, kPlanDigits); };
    long c_min = m / 2 + 1; // c > (m-1)/2 with a unit of slack

    long c;
    if (overrides.c) {
        c = *overrides.c;
        if (2 * c <= m - 1) throw planning_error("pinned c violates c > (m-1)/2");
        if (bound_at(c) > target) throw planning_error("pinned (m, c) misses the accuracy target");
    } else {
        // c = ceil((m-1)/2 + (2*10^d*1.001 k^(2m) m^(2m+1)/((2m+1)2m))^(1/(2m)))
        BigReal lnX = ln(BigReal(2L, kPlanDigits)) +
                      BigReal(d, kPlanDigits) * ln(BigReal(10L, kPlanDigits)) +
                      ln(BigReal("1.001", kPlanDigits)) + ln(kappa(kPlanDigits)) * (2 * m) +
                      ln(BigReal(m, kPlanDigits)) * (2 * m + 1) -
                      ln(BigReal(2 * m + 1, kPlanDigits)) - ln(BigReal(2 * m, kPlanDigits));
        BigReal root = exp(lnX / (2 * m));
        BigReal c_real = root + BigReal((m - 1) / 2.0, kPlanDigits);
        long guess = c_real.ceil_to_integer().get_si();
        c = settle_c(guess, c_min, target, bound_at);
    }

    SummationPlan plan;
    plan.d = d;
    plan.m = m;
    plan.c = c;
    plan.d1 = d + guard_digits(d, m, c);
    plan.bound = bound_at(c);
    plan.engine = Engine::alt;
    if (plan.bound > target) throw planning_error("planned bound misses the accuracy target");
    return plan;
}

SummationPlan plan_euler_em(long d, double eps, const PlanOverrides& overrides) {
    if (d < 6) throw argument_error("plan_euler_em needs d >= 6");
    if (eps <= 0) throw argument_error("plan_euler_em needs eps > 0");

    long m;
    if (overrides.m) {
        m = *overrides.m;
        require_even(m, "plan_euler_em override");
        if (m < 4) throw argument_error("plan_euler_em needs m >= 4");
    } else {
        m = even_ceil(static_cast<double>(d) /
                      (2.0 * (1.0 + eps) * std::log10(static_cast<double>(d))));
        if (m < 4) m = 4;
    }

    BigReal target = accuracy_target(d, kPlanDigits);
    auto bound_at = [&](long c_) { return euler_em_bound(m, c_, kPlanDigits); };

    long c;
    if (overrides.c) {
        c = *overrides.c;
        if (c < 1) throw planning_error("pinned c must be >= 1");
        if (bound_at(c) > target) throw planning_error("pinned (m, c) misses the accuracy target");
    } else {
        // (c+1) = (2*10^d*2.02 (2m-2)! / (2pi)^(2m-1))^(1/(2m-1))
        BigReal lnX = ln(BigReal(2L, kPlanDigits)) +
                      BigReal(d, kPlanDigits) * ln(BigReal(10L, kPlanDigits)) +
                      ln(BigReal("2.02", kPlanDigits)) + ln_factorial(2 * m - 2, kPlanDigits) -
                      ln(const_pi(kPlanDigits) * 2) * (2 * m - 1);
        BigReal root = exp(lnX / (2 * m - 1));
        long guess = (root - 1).ceil_to_integer().get_si();
        c = settle_c(guess, 1, target, bound_at);
    }

    SummationPlan plan;
    plan.d = d;
    plan.m = m;
    plan.c = c;
    plan.d1 = d + guard_digits(d, m, c);
    plan.bound = bound_at(c);
    plan.engine = Engine::em;
    if (plan.bound > target) throw planning_error("planned bound misses the accuracy target");
    return plan;
}

} // namespace altsum
