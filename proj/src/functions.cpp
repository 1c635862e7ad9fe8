#include "altsum/functions.hpp"

#include <cctype>
#include <cmath>
#include <random>

namespace altsum {

std::string to_string(const ComplexQ& z) {
    if (z.im == 0) return to_string(z.re);
    std::string out = (z.re == 0) ? "" : to_string(z.re);
    if (z.im > 0 && !out.empty()) out += "+";
    out += to_string(z.im) + "i";
    return out;
}

namespace {

Rational parse_rational_term(const std::string& token) {
    if (token.empty() || token == "+") return Rational(1);
    if (token == "-") return Rational(-1);

    std::string body = token;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    if (body.empty()) throw argument_error("empty number in: " + token);

    Rational value;
    auto dot = body.find('.');
    if (dot != std::string::npos) {
        std::string digitsonly = body.substr(0, dot) + body.substr(dot + 1);
        size_t frac_len = body.size() - dot - 1;
        for (char ch : digitsonly)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw argument_error("unparsable number: " + token);
        Integer num(digitsonly.empty() ? "0" : digitsonly);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        value = make_rational(num, den);
    } else {
        // integer or a/b
        if (mpq_set_str(value.get_mpq_t(), body.c_str(), 10) != 0)
            throw argument_error("unparsable number: " + token);
        value.canonicalize();
    }
    return negative ? Rational(-value) : value;
}

} // namespace

ComplexQ parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw argument_error("empty complex literal");

    // split at the last top-level sign (never index 0)
    size_t split = std::string::npos;
    for (size_t idx = s.size(); idx-- > 1;) {
        if (s[idx] == '+' || s[idx] == '-') {
            split = idx;
            break;
        }
    }

    ComplexQ z;
    auto is_imag = [](const std::string& t) { return !t.empty() && t.back() == 'i'; };
    if (split != std::string::npos) {
        std::string first = s.substr(0, split);
        std::string second = s.substr(split);
        if (!is_imag(second)) {
            if (is_imag(first))
                throw argument_error("imaginary part must come last in: " + text);
            throw argument_error("unparsable complex literal: " + text);
        }
        second.pop_back();
        z.re = parse_rational_term(first);
        z.im = parse_rational_term(second);
    } else if (is_imag(s)) {
        std::string body = s;
        body.pop_back();
        z.im = parse_rational_term(body);
    } else {
        z.re = parse_rational_term(s);
    }
    return z;
}

BigComplex to_big_complex(const ComplexQ& z, long digits) {
    return {BigReal(z.re, digits), BigReal(z.im, digits)};
}

void AnalyticityCertificate::validate() const {
    if (lambda < 0) throw argument_error("certificate needs lambda >= 0");
    if (mu < 0) throw argument_error("certificate needs mu >= 0");
    if (!(theta0 > 0.0) || theta0 > 1.5707963267948967)
        throw argument_error("certificate needs theta0 in (0, pi/2]");
}

namespace {

constexpr long kCheckDigits = 48;

/// Central-difference spot check that F' = f at three fixed pseudo-random
/// points; a cheap guard against mismatched user inputs, not a proof.
void run_antiderivative_check(const FunctionSpec& spec) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> uni(1.0, 4.0);
    BigReal h = pow10(-kCheckDigits / 3, kCheckDigits);
    BigReal tol_base = pow10(-kCheckDigits / 2, kCheckDigits);
    for (int trial = 0; trial < 3; ++trial) {
        double xd = uni(rng);
        BigReal x(xd, kCheckDigits);
        auto hi = spec.F(x + h);
        auto lo = spec.F(x - h);
        auto fx = spec.f(x);
        if (hi.size() != spec.q || lo.size() != spec.q || fx.size() != spec.q)
            throw argument_error("evaluator returned wrong component count");
        for (size_t k = 0; k < spec.q; ++k) {
            BigComplex diff = (hi[k] - lo[k]) / (h * 2);
            BigReal err = abs(diff - fx[k]);
            BigReal tol = tol_base * (abs(fx[k]) + 1);
            if (err > tol)
                throw argument_error("antiderivative check failed for '" + spec.name +
                                     "' at x = " + std::to_string(xd) + " (component " +
                                     std::to_string(k) + ")");
        }
    }
}

double to_double_up(const Rational& r) {
    double v = mpq_get_d(r.get_mpq_t());
    return (Rational(v) < r) ? std::nextafter(v, HUGE_VAL) : v;
}

double to_double_down(const Rational& r) {
    double v = mpq_get_d(r.get_mpq_t());
    return (Rational(v) > r) ? std::nextafter(v, -HUGE_VAL) : v;
}

/// least integer strictly greater than x
long least_int_greater(const Rational& x) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return fl.get_si() + 1;
}

ComplexQ neg_complex(const ComplexQ& z) { return {-z.re, -z.im}; }

} // namespace

FunctionSpec power_family(const std::vector<ComplexQ>& p_list, const ComplexQ& delta,
                          std::optional<double> a_opt) {
    if (p_list.empty()) throw argument_error("power_family needs at least one exponent");
    for (const auto& p : p_list)
        if (p.re == 1 && p.im == 0)
            throw domain_error("power_family has a pole at p = 1");
    if (delta.im == 0 && delta.re <= 0)
        throw domain_error("power_family needs delta off the cut (-inf, 0]");

    double a = a_opt.value_or(to_double_down(delta.re - 1));
    if (Rational(a) > delta.re - 1)
        throw argument_error("power_family certificate needs a <= Re(delta) - 1");

    // componentwise certificate, combined by max(mu) and max(lambda)
    double mu = 0.0, lambda = 0.0;
    double gap = std::hypot(mpq_get_d(Rational(delta.re - 1 - Rational(a)).get_mpq_t()),
                            mpq_get_d(delta.im.get_mpq_t()));
    for (const auto& p : p_list) {
        double re_p = mpq_get_d(p.re.get_mpq_t());
        double im_p = std::fabs(mpq_get_d(p.im.get_mpq_t()));
        double mu_k = std::exp(1.5707963267948966 * im_p);
        double lam_k = 0.0;
        if (p.re < 0) {
            lam_k = to_double_up(-p.re);
            mu_k *= std::pow(1.0 + gap, -re_p);
        }
        mu = std::max(mu, mu_k);
        lambda = std::max(lambda, lam_k);
    }
    mu *= 1.0 + 1e-9; // keep the asserted bound on the safe side of rounding

    // smallest admissible stabilizer order: least integer > 1 - min Re(p)/2
    Rational min_re = p_list[0].re;
    for (const auto& p : p_list)
        if (p.re < min_re) min_re = p.re;
    long m0 = std::max(1L, least_int_greater(Rational(1) - min_re / 2));

    FunctionSpec spec;
    spec.name = "power";
    spec.q = p_list.size();
    spec.cert = {a, lambda, mu, 1.5707963267948966};
    spec.m0 = m0;

    auto ps = p_list;
    auto de = delta;
    spec.f = [ps, de](const BigReal& x) {
        long d = x.digits();
        BigComplex z{x + BigReal(de.re, d), BigReal(de.im, d)};
        std::vector<BigComplex> out;
        out.reserve(ps.size());
        for (const auto& p : ps) out.push_back(pow(z, to_big_complex(neg_complex(p), d)));
        return out;
    };
    spec.F = [ps, de](const BigReal& x) {
        long d = x.digits();
        BigComplex z{x + BigReal(de.re, d), BigReal(de.im, d)};
        std::vector<BigComplex> out;
        out.reserve(ps.size());
        for (const auto& p : ps) {
            ComplexQ e{Rational(1) - p.re, -p.im};
            out.push_back(pow(z, to_big_complex(e, d)) / to_big_complex(e, d));
        }
        return out;
    };
    spec.odd_derivatives = [ps, de](const BigReal& x, long order) {
        if (order < 1 || order % 2 == 0)
            throw argument_error("derivative oracle handles odd orders only");
        long d = x.digits();
        BigComplex z{x + BigReal(de.re, d), BigReal(de.im, d)};
        std::vector<BigComplex> out;
        out.reserve(ps.size());
        for (const auto& p : ps) {
            // -p(p+1)...(p+order-1) * (x+delta)^(-p-order), exact coefficient
            ComplexQ coeff{Rational(-1), Rational(0)};
            for (long t = 0; t < order; ++t)
                coeff = coeff * ComplexQ{p.re + t, p.im};
            ComplexQ e = neg_complex(ComplexQ{p.re + order, p.im});
            out.push_back(pow(z, to_big_complex(e, d)) * to_big_complex(coeff, d));
        }
        return out;
    };

    run_antiderivative_check(spec);
    return spec;
}

FunctionSpec reciprocal_spec() {
    FunctionSpec spec;
    spec.name = "reciprocal";
    spec.q = 1;
    spec.cert = {0.0, 0.0, 1.0, 1.5707963267948966};
    spec.m0 = 1;
    spec.f = [](const BigReal& x) {
        return std::vector<BigComplex>{BigComplex(BigReal(1L, x.digits()) / (x + 1))};
    };
    spec.F = [](const BigReal& x) {
        return std::vector<BigComplex>{BigComplex(ln(x + 1))};
    };
    spec.odd_derivatives = [](const BigReal& x, long order) {
        if (order < 1 || order % 2 == 0)
            throw argument_error("derivative oracle handles odd orders only");
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(order));
        BigReal num(fact, x.digits());
        BigReal val = -num / pow_si(x + 1, order + 1);
        return std::vector<BigComplex>{BigComplex(std::move(val))};
    };
    run_antiderivative_check(spec);
    return spec;
}

FunctionSpec sqrt_example_spec() {
    FunctionSpec spec;
    spec.name = "sqrt-example";
    spec.q = 1;
    double mu = std::nextafter(24.0 / std::sqrt(5.0), HUGE_VAL);
    spec.cert = {-2.0, 2.0, mu, 1.5707963267948966};
    spec.m0 = 2;
    spec.f = [](const BigReal& x) {
        BigReal s = sqrt(x * x + 1);
        BigReal x3 = x * x * x;
        return std::vector<BigComplex>{BigComplex(x3 * 3 / s)};
    };
    spec.F = [](const BigReal& x) {
        BigReal s = sqrt(x * x + 1);
        return std::vector<BigComplex>{BigComplex((x * x - 2) * s)};
    };
    run_antiderivative_check(spec);
    return spec;
}

FunctionSpec custom_spec(std::string name, size_t q, Evaluator f, Evaluator F,
                         std::optional<DerivativeEvaluator> odd_derivatives,
                         AnalyticityCertificate cert, long m0) {
    cert.validate();
    if (m0 < 1) throw argument_error("custom_spec needs m0 >= 1");
    if (q < 1) throw argument_error("custom_spec needs q >= 1");
    FunctionSpec spec;
    spec.name = std::move(name);
    spec.q = q;
    spec.f = std::move(f);
    spec.F = std::move(F);
    spec.odd_derivatives = std::move(odd_derivatives);
    spec.cert = cert;
    spec.m0 = m0;
    run_antiderivative_check(spec);
    return spec;
}

FunctionSpec builtin_spec(const std::string& name, const std::vector<ComplexQ>& p_list,
                          const ComplexQ& delta) {
    if (name == "reciprocal") return reciprocal_spec();
    if (name == "sqrt-example") return sqrt_example_spec();
    if (name == "power") {
        if (p_list.empty()) throw argument_error("builtin 'power' needs --p");
        return power_family(p_list, delta);
    }
    throw argument_error("unknown builtin '" + name +
                         "' (expected power, reciprocal, or sqrt-example)");
}

FunctionSpec shift_spec(const FunctionSpec& spec, long c) {
    FunctionSpec out = spec;
    out.name = spec.name + "+shift" + std::to_string(c);
    out.cert.a = spec.cert.a + static_cast<double>(c);
    Evaluator f0 = spec.f;
    Evaluator F0 = spec.F;
    out.f = [f0, c](const BigReal& x) { return f0(x + c); };
    out.F = [F0, c](const BigReal& x) { return F0(x + c); };
    if (spec.odd_derivatives) {
        DerivativeEvaluator d0 = *spec.odd_derivatives;
        out.odd_derivatives = [d0, c](const BigReal& x, long order) { return d0(x + c, order); };
    }
    return out;
}

} // namespace altsum
