#ifndef ALTSUM_FUNCTIONS_HPP
#define ALTSUM_FUNCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "altsum/numerics.hpp"

namespace altsum {

/// Complex number with exact rational parts; used for exponents p and
/// offsets delta so that evaluation points stay exact at any precision.
struct ComplexQ {
    Rational re{0};
    Rational im{0};

    bool is_real() const { return im == 0; }
    ComplexQ operator+(const ComplexQ& o) const { return {re + o.re, im + o.im}; }
    ComplexQ operator-(const ComplexQ& o) const { return {re - o.re, im - o.im}; }
    ComplexQ operator*(const ComplexQ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexQ operator-() const { return {-re, -im}; }
    bool operator==(const ComplexQ& o) const { return re == o.re && im == o.im; }
};

std::string to_string(const ComplexQ& z);
/// Parses "2", "-1+1i", "0.5-2i", "1i", "i". Decimal parts become exact
/// rationals.
ComplexQ parse_complex(const std::string& text);

BigComplex to_big_complex(const ComplexQ& z, long digits);

/// Growth certificate for the summand: asserts |f(z)| <= mu * |z+a+1|^lambda
/// on the sector {-a + r e^(i t): r >= 0, |t| <= theta0}. The engines trust
/// it; it is not machine-verified. For user functions the Phragmen-Lindelof
/// principle usually lets one check the inequality on the sector boundary
/// only.
struct AnalyticityCertificate {
    double a = 0.0;
    double lambda = 0.0;      // >= 0
    double mu = 0.0;          // >= 0
    double theta0 = 1.5707963267948966; // in (0, pi/2]

    void validate() const;
};

/// Evaluators take a point whose precision sets the working precision and
/// must return one value per component at that precision. They are required
/// to be pure and callable concurrently.
using Evaluator = std::function<std::vector<BigComplex>(const BigReal&)>;
/// (point, odd order 2j-1) -> per-component derivative values.
using DerivativeEvaluator = std::function<std::vector<BigComplex>(const BigReal&, long)>;

/// The summand bundle: f, an antiderivative F, an optional odd-derivative
/// oracle (only the Euler-Maclaurin path needs it), the component count q,
/// the growth certificate, and the minimal stabilizer order m0.
struct FunctionSpec {
    std::string name;
    size_t q = 1;
    Evaluator f;
    Evaluator F;
    std::optional<DerivativeEvaluator> odd_derivatives;
    AnalyticityCertificate cert;
    long m0 = 1;

    bool has_derivatives() const { return odd_derivatives.has_value(); }
};

/// Vector power summand: f_k(x) = (x+delta)^(-p_k) with antiderivative
/// F_k(x) = (x+delta)^(1-p_k)/(1-p_k) and closed-form odd derivatives.
/// `a` must satisfy a <= Re(delta) - 1; defaults to Re(delta) - 1.
FunctionSpec power_family(const std::vector<ComplexQ>& p_list, const ComplexQ& delta,
                          std::optional<double> a = std::nullopt);

/// f(x) = 1/(x+1), F(x) = ln(x+1), f^(k)(x) = (-1)^k k!/(x+1)^(k+1).
FunctionSpec reciprocal_spec();

/// f(x) = 3x^3/sqrt(x^2+1), F(x) = (x^2-2) sqrt(x^2+1). No derivative
/// oracle.
FunctionSpec sqrt_example_spec();

/// Wraps user evaluators and runs the F' = f spot-check (central difference
/// at 3 fixed pseudo-random points); throws argument_error naming the
/// offending point on mismatch.
FunctionSpec custom_spec(std::string name, size_t q, Evaluator f, Evaluator F,
                         std::optional<DerivativeEvaluator> odd_derivatives,
                         AnalyticityCertificate cert, long m0);

/// Builtin lookup for the CLI: "power", "reciprocal", "sqrt-example".
/// "power" needs p/delta parameters and is built via power_family.
FunctionSpec builtin_spec(const std::string& name,
                          const std::vector<ComplexQ>& p_list = {},
                          const ComplexQ& delta = ComplexQ{Rational(1), Rational(0)});

/// The c-shift f_c(x) = f(x+c); the certificate vertex moves with it.
FunctionSpec shift_spec(const FunctionSpec& spec, long c);

} // namespace altsum

#endif
