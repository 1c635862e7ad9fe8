#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "altsum/alt_engine.hpp"
#include "altsum/coefficients.hpp"
#include "altsum/em_engine.hpp"

using namespace altsum;

namespace {

/// Test oracle: the order-m approximation as the raw double sum
/// sum_j gamma_j sum_{i=0}^{j-1} [F(n-1+j/2-i) - F(i-j/2)], exact rationals.
Rational finite_sum_double_form(const RationalPolynomial& f, long n, long m) {
    RationalPolynomial F = f.antiderivative();
    auto table = coefficient_table(m);
    Rational acc(0);
    for (long j = 1; j <= m; ++j) {
        Rational inner(0);
        for (long i = 0; i <= j - 1; ++i) {
            Rational hi = Rational(n - 1 - i) + make_rational(j, 2);
            Rational lo = Rational(i) - make_rational(j, 2);
            inner += F.eval(hi) - F.eval(lo);
        }
        acc += table->gamma_at(j) * inner;
    }
    return acc;
}

FunctionSpec constant_one_spec() {
    auto one = [](const BigReal& x) {
        return std::vector<BigComplex>{BigComplex(BigReal(1L, x.digits()))};
    };
    auto ident = [](const BigReal& x) { return std::vector<BigComplex>{BigComplex(x)}; };
    return custom_spec("one", 1, one, ident, std::nullopt,
                       {0.0, 0.0, 1.0, 1.5707963267948966}, 1);
}

RationalPolynomial random_poly(std::mt19937_64& rng, long max_degree) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12), deg(0, max_degree);
    long degree = deg(rng);
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    for (auto& c : coeffs) c = make_rational(num(rng), den(rng));
    if (coeffs.back() == 0) coeffs.back() = Rational(1);
    return RationalPolynomial(std::move(coeffs));
}

} // namespace

TEST_CASE("boundary term for the identity antiderivative") {
    FunctionSpec one = constant_one_spec();
    for (long m : {1L, 3L, 8L}) {
        auto g = stabilizer_g(one, 7, m, 30);
        CHECK(abs(g[0].re - BigReal(6.5, 30)) <= pow10(-27, 30));
        CHECK(g[0].im.is_zero());
    }
}

TEST_CASE("boundary term for the harmonic summand at order 1 is ln(n+1/2)") {
    FunctionSpec spec = reciprocal_spec();
    long d = 40;
    auto g = stabilizer_g(spec, 100, 1, d);
    CHECK(abs(g[0].re - ln(BigReal("100.5", d))) <= pow10(-38, d));
}

TEST_CASE("boundary term for the sqrt summand at order 2") {
    FunctionSpec spec = sqrt_example_spec();
    long d = 40;
    auto g = stabilizer_g(spec, 10, 2, d);
    auto F = [&](const char* x) { return spec.F(BigReal(std::string(x), d))[0].re; };
    BigReal expected = F("9.5") * BigReal(make_rational(4, 3), d) -
                       (F("9") + F("10")) / 6;
    CHECK(abs(g[0].re - expected) <= pow10(-36, d));
}

TEST_CASE("exact finite sums of small polynomials") {
    RationalPolynomial x({Rational(0), Rational(1)});
    CHECK(alt_finite_sum_exact(x, 5, 1) == 10);

    RationalPolynomial x3({Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(alt_finite_sum_exact(x3, 3, 2) == 9);

    RationalPolynomial one({Rational(1)});
    for (long m = 1; m <= 6; ++m) CHECK(alt_finite_sum_exact(one, 9, m) == 9);
}

TEST_CASE("polynomial exactness, 50 random cases") {
    std::mt19937_64 rng(914);
    std::uniform_int_distribution<long> pick_m(1, 6), pick_n(1, 40);
    for (int trial = 0; trial < 50; ++trial) {
        long m = pick_m(rng);
        long n = pick_n(rng);
        RationalPolynomial f = random_poly(rng, 2 * m - 1);
        Rational direct = f.sum_over_prefix(n);
        REQUIRE(alt_finite_sum_exact(f, n, m) == direct);
        REQUIRE(finite_sum_double_form(f, n, m) == direct);
    }
}

TEST_CASE("telescoping across endpoints (exact mode)") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        long m = 3;
        RationalPolynomial f = random_poly(rng, 5);
        RationalPolynomial F = f.antiderivative();
        long n1 = 4, n2 = 19;
        Rational lhs = alt_finite_sum_exact(f, n2, m) - alt_finite_sum_exact(f, n1, m);
        Rational rhs = stabilizer_g_exact(F, Rational(n2), m) -
                       stabilizer_g_exact(F, Rational(n1), m);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("shift consistency of the boundary term") {
    FunctionSpec spec = reciprocal_spec();
    long d = 40;
    long m = 4;
    for (long c : {3L, 7L, 20L}) {
        FunctionSpec shifted = shift_spec(spec, c);
        auto lhs = stabilizer_g(shifted, 10, m, d);
        auto rhs = stabilizer_g(spec, 10 + c, m, d);
        CHECK(max_abs_diff(lhs, rhs) <= pow10(-(d - 2), d));
    }
}

TEST_CASE("generalized sum reaches zeta(2)") {
    FunctionSpec spec = power_family({parse_complex("2")}, parse_complex("1"));
    SummationPlan plan = plan_alt(10, spec.cert, {}, {}, spec.m0 + 1);
    SumResult r = alt_generalized_sum(spec, plan);
    BigReal ref = const_pi(40) * const_pi(40) / 6;
    CHECK(abs(r.value[0].re - ref) <= pow10(-10, 40));
    CHECK(r.value[0].im.to_double() == doctest::Approx(0.0));
    CHECK(*r.bound <= accuracy_target(10, 40));
}

TEST_CASE("generalized sum rejects mismatched plans") {
    FunctionSpec spec = sqrt_example_spec(); // m0 = 2
    SummationPlan plan = plan_alt(10, spec.cert, {}, {.m = 2, .c = {}}, 2);
    CHECK_THROWS_AS(alt_generalized_sum(spec, plan), argument_error);
}

TEST_CASE("euler constant at 10 and 50 digits") {
    SumResult r10 = euler_gamma(10);
    CHECK(r10.value[0].re.to_fixed_string(10) == "0.5772156649");

    // double-run stability: d1 and d1 + 10 agree on the target digits
    SummationPlan plan = plan_euler_alt(50);
    SumResult a = euler_gamma_with_plan(plan);
    SummationPlan wide = plan;
    wide.d1 += 10;
    SumResult b = euler_gamma_with_plan(wide);
    CHECK(max_abs_diff(a.value, b.value) <= pow10(-50, 40));
}

TEST_CASE("euler path agrees with the generic engine on the same summand") {
    FunctionSpec spec = reciprocal_spec();
    SummationPlan generic = plan_alt(15, spec.cert, {}, {}, spec.m0 + 1);
    SumResult via_generic = alt_generalized_sum(spec, generic);
    SumResult via_euler = euler_gamma(15);
    CHECK(max_abs_diff(via_generic.value, via_euler.value) <= pow10(-15, 40));
}

TEST_CASE("divergent sqrt series, two plans agree") {
    FunctionSpec spec = sqrt_example_spec();
    SummationPlan p1 = plan_alt(50, spec.cert, {}, {}, spec.m0 + 1);
    SummationPlan p2 = plan_alt(50, spec.cert, {}, {.m = p1.m + 10, .c = {}}, spec.m0 + 1);
    SumResult r1 = alt_generalized_sum(spec, p1);
    SumResult r2 = alt_generalized_sum(spec, p2);
    CHECK(max_abs_diff(r1.value, r2.value) <= pow10(-50, 60));
}

TEST_CASE("boundary terms of both engines drift together (harmonic)") {
    // G(n) - G_em(n) = ln(1 + 1/(2n)) - 1/(2n) = O(n^-2): decade ratio ~ 100
    FunctionSpec spec = reciprocal_spec();
    long d = 60;
    auto diff_at = [&](long n) {
        auto g = stabilizer_g(spec, n, 1, d);
        auto gem = em_stabilizer_g(spec, n, 1, d);
        return g[0].re - gem[0].re;
    };
    BigReal prev = diff_at(1000);
    for (long t = 4; t <= 7; ++t) {
        long n = 1;
        for (long i = 0; i < t; ++i) n *= 10;
        BigReal cur = diff_at(n);
        BigReal ratio = prev / cur;
        CHECK(ratio >= BigReal(90L, d));
        CHECK(ratio <= BigReal(110L, d));
        prev = cur;
    }
}

TEST_CASE("boundary terms of both engines drift together (sqrt, order 2)") {
    // same comparison needs a first derivative; supply the closed form
    auto base = sqrt_example_spec();
    DerivativeEvaluator der = [](const BigReal& x, long order) -> std::vector<BigComplex> {
        if (order != 1) throw argument_error("only order 1 in this test");
        BigReal u = x * x + 1;
        BigReal num = (x * x * 2 + 3) * (x * x) * 3;
        return {BigComplex(num / (u * sqrt(u)))};
    };
    FunctionSpec spec = custom_spec("sqrt+der", 1, base.f, base.F, der, base.cert, base.m0);

    long d = 60;
    auto diff_at = [&](long n) {
        auto g = stabilizer_g(spec, n, 2, d);
        auto gem = em_stabilizer_g(spec, n, 2, d);
        return abs(g[0].re - gem[0].re);
    };
    BigReal ratio = diff_at(1000) / diff_at(10000);
    CHECK(ratio >= BigReal(80000L, d));
    CHECK(ratio <= BigReal(120000L, d));
}

TEST_CASE("weight pieces") {
    auto w1 = weight_function(1, 10);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0].lo == make_rational(-1, 2));
    CHECK(w1[0].hi == make_rational(19, 2));
    CHECK(w1[0].weight == 1);

    auto w3 = weight_function(3, 10);
    REQUIRE(w3.size() == 5);
    bool found_center = false;
    for (const auto& p : w3)
        if (p.lo == make_rational(-1, 2) && p.hi == make_rational(19, 2)) {
            CHECK(p.weight == make_rational(23, 15));
            found_center = true;
        }
    CHECK(found_center);

    // total weighted length equals the term count
    for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 5}, {3, 10}, {5, 4}, {6, 9}}) {
        Rational total(0);
        for (const auto& p : weight_function(m, n)) total += p.weight * (p.hi - p.lo);
        CHECK(total == n);
    }

    CHECK_THROWS_AS(weight_function(5, 3), argument_error);
}
