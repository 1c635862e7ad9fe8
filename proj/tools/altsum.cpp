#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altsum/alt_engine.hpp"
#include "altsum/bounds.hpp"
#include "altsum/coefficients.hpp"
#include "altsum/em_engine.hpp"
#include "altsum/functions.hpp"
#include "altsum/output.hpp"
#include "altsum/parallel.hpp"
#include "altsum/rational_polynomial.hpp"

namespace {

using namespace altsum;

struct CommonOpts {
    long digits = 10;
    std::string engine = "alt";
    long workers = 1;
    long m_override = 0;
    long c_override = 0;
    std::string format = "text";
    bool calibrate = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_engine = true) {
    cmd->add_option("--digits,-d", opts.digits, "requested correct digits (>= 6)");
    if (with_engine)
        cmd->add_option("--engine", opts.engine, "alt | em")
            ->check(CLI::IsMember({"alt", "em"}));
    cmd->add_option("--workers", opts.workers, "worker count; 0 = hardware parallelism");
    cmd->add_option("--m", opts.m_override, "pin the order m (even)");
    cmd->add_option("--c", opts.c_override, "pin the shift c");
    cmd->add_option("--format", opts.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
}

PlanOverrides overrides_of(const CommonOpts& opts) {
    PlanOverrides ov;
    if (opts.m_override > 0) ov.m = opts.m_override;
    if (opts.c_override > 0) ov.c = opts.c_override;
    return ov;
}

long resolve_workers(long requested) {
    return requested == 0 ? hardware_workers() : requested;
}

/// Relative f/F costs from live micro-timings at roughly the working scale.
CostModel calibrate_costs(const FunctionSpec& spec, long d) {
    long probe_digits = d + 20;
    auto time_evals = [&](const Evaluator& ev) {
        auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < 8; ++i) ev(BigReal(make_rational(2 * i + 21, 2), probe_digits));
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    double tf = time_evals(spec.f);
    double tF = time_evals(spec.F);
    CostModel costs;
    costs.t_f = tf > 0 ? tf : 1e-9;
    costs.t_F = tF > 0 ? tF : costs.t_f;
    costs.t_tau = costs.t_f / 100;
    return costs;
}

void emit(const OutputRecord& rec, const std::string& format) {
    if (format == "json")
        std::cout << to_json_string(rec) << "\n";
    else
        std::cout << to_text(rec);
}

int cmd_compute(const std::string& function, const std::vector<std::string>& p_strings,
                const std::string& delta_string, const CommonOpts& opts) {
    std::vector<ComplexQ> p_list;
    for (const auto& s : p_strings) p_list.push_back(parse_complex(s));
    ComplexQ delta = parse_complex(delta_string);

    FunctionSpec spec = builtin_spec(function, p_list, delta);
    CostModel costs = opts.calibrate ? calibrate_costs(spec, opts.digits) : CostModel{};
    long workers = resolve_workers(opts.workers);

    SummationPlan plan;
    if (opts.engine == "em")
        plan = plan_em(opts.digits, spec.cert, costs, overrides_of(opts),
                       std::max(4L, spec.m0 + 1));
    else
        plan = plan_alt(opts.digits, spec.cert, costs, overrides_of(opts), spec.m0 + 1);

    SumResult result = run_validated(plan, [&](long d1) {
        SummationPlan p = plan;
        p.d1 = d1;
        if (opts.engine == "em") return em_generalized_sum(spec, p, workers);
        if (workers > 1) return parallel_generalized_sum(spec, p, workers);
        return alt_generalized_sum(spec, p);
    });
    emit(make_record(result, plan.engine, workers), opts.format);
    return 0;
}

int cmd_euler(const CommonOpts& opts) {
    long workers = resolve_workers(opts.workers);
    if (opts.engine == "em") {
        SummationPlan plan = plan_euler_em(opts.digits, 0.5, overrides_of(opts));
        FunctionSpec spec = reciprocal_spec();
        SumResult result = run_validated(plan, [&](long d1) {
            SummationPlan p = plan;
            p.d1 = d1;
            return em_generalized_sum(spec, p, workers);
        });
        emit(make_record(result, Engine::em, workers), opts.format);
        return 0;
    }
    SummationPlan plan = plan_euler_alt(opts.digits, overrides_of(opts));
    SumResult result = run_validated(plan, [&](long d1) {
        SummationPlan p = plan;
        p.d1 = d1;
        return euler_gamma_with_plan(p, workers);
    });
    emit(make_record(result, Engine::alt, workers), opts.format);
    return 0;
}

int cmd_coeffs(long m, const std::string& format) {
    auto table = coefficient_table(m);
    if (format == "json") {
        std::ostringstream out;
        out << "{\"m\":" << m << ",\"gamma\":[";
        for (long j = 1; j <= m; ++j)
            out << (j > 1 ? "," : "") << "\"" << to_string(table->gamma_at(j)) << "\"";
        out << "],\"tau\":[";
        for (long j = 1; j <= m; ++j)
            out << (j > 1 ? "," : "") << "\"" << to_string(table->tau_at(j)) << "\"";
        out << "],\"rho\":[";
        for (long j = 1; j <= m; ++j)
            out << (j > 1 ? "," : "") << "\"" << to_string(table->rho_at(j)) << "\"";
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "m = " << m << "\n";
        std::cout << "j\tgamma\ttau\trho\n";
        for (long j = 1; j <= m; ++j)
            std::cout << j << "\t" << to_string(table->gamma_at(j)) << "\t"
                      << to_string(table->tau_at(j)) << "\t" << to_string(table->rho_at(j))
                      << "\n";
    }
    return 0;
}

int cmd_weights(long m, long n, const std::string& format) {
    auto pieces = weight_function(m, n);
    Rational total(0);
    for (const auto& p : pieces) total += p.weight * (p.hi - p.lo);
    if (format == "json") {
        std::ostringstream out;
        out << "{\"m\":" << m << ",\"n\":" << n << ",\"pieces\":[";
        for (size_t i = 0; i < pieces.size(); ++i) {
            out << (i > 0 ? "," : "") << "{\"lo\":\"" << to_string(pieces[i].lo) << "\",\"hi\":\""
                << to_string(pieces[i].hi) << "\",\"weight\":\"" << to_string(pieces[i].weight)
                << "\"}";
        }
        out << "],\"total_weighted_length\":\"" << to_string(total) << "\"}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "m = " << m << "  n = " << n << "\n";
        for (const auto& p : pieces)
            std::cout << "(" << to_string(p.lo) << ", " << to_string(p.hi) << "]\tweight "
                      << to_string(p.weight) << "\n";
        std::cout << "total weighted length = " << to_string(total) << "\n";
    }
    return 0;
}

int cmd_verify() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok  " : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };

    // coefficient identities
    bool rho_ok = true, sum_ok = true, cancel_ok = true, tau_ok = true;
    for (long m = 1; m <= 60; ++m) {
        auto table = coefficient_table(m);
        auto rho = rho_downward(m);
        Rational weighted(0);
        for (long j = 1; j <= m; ++j) {
            if (rho[static_cast<size_t>(j)] != table->gamma_at(j) * j) rho_ok = false;
            weighted += table->gamma_at(j) * j;
        }
        if (weighted != 1) sum_ok = false;
        for (long q = 3; q <= 2 * m - 1; q += 2)
            if (odd_power_cancellation(m, q) != 0) cancel_ok = false;
        Rational tsum = table->tau_at(1);
        for (long r = 2; r <= m; ++r) tsum += table->tau_at(r) * 2;
        if (tsum != 1) tau_ok = false;
    }
    check("downward recursion matches gamma*j (m <= 60)", rho_ok);
    check("weighted coefficient sum is 1 (m <= 60)", sum_ok);
    check("odd power sums cancel (m <= 60)", cancel_ok);
    check("symmetric tau sum is 1 (m <= 60)", tau_ok);

    bool bern_ok = true;
    auto bcache = bernoulli_numbers(50);
    for (long m = 1; m <= 25 && bern_ok; ++m)
        for (long p = 0; p <= 2 * m - 1; ++p)
            if (bernoulli_from_tau(m, p) != bcache.values[static_cast<size_t>(p)]) bern_ok = false;
    check("Bernoulli numbers recovered from tau (m <= 25)", bern_ok);

    bool faul_ok = true;
    for (long p = 0; p <= 12 && faul_ok; ++p)
        for (long n = 0; n <= 50; n += 7) {
            Rational direct(0);
            for (long k = 0; k < n; ++k) direct += pow_int(Rational(k), static_cast<unsigned long>(p));
            if (faulhaber_sum(p, n) != direct) faul_ok = false;
        }
    check("Faulhaber matches direct power sums", faul_ok);

    bool poly_ok = true;
    for (long m = 1; m <= 4 && poly_ok; ++m) {
        RationalPolynomial f({make_rational(1, 3), make_rational(-2, 5), Rational(1),
                              make_rational(7, 2)});
        while (f.degree() > 2 * m - 1) f.coeffs.pop_back();
        long n = 17;
        if (alt_finite_sum_exact(f, n, m) != f.sum_over_prefix(n)) poly_ok = false;
    }
    check("polynomial sums are exact", poly_ok);

    // universal constants
    BigReal ls = lambda_star(50);
    bool lam_ok = ls.to_fixed_string(4).substr(0, 6) == "0.3081";
    check("decay constant prefix 0.3081", lam_ok);
    BigReal kap = kappa(50);
    check("kappa prefix 0.27754", kap.to_fixed_string(5).substr(0, 7) == "0.27754");

    // cross-engine spot checks
    {
        FunctionSpec zeta2 = power_family({ComplexQ{Rational(2), Rational(0)}},
                                          ComplexQ{Rational(1), Rational(0)});
        auto plan = plan_alt(10, zeta2.cert, CostModel{}, {}, zeta2.m0 + 1);
        auto alt = alt_generalized_sum(zeta2, plan);
        BigReal ref = const_pi(plan.d1) * const_pi(plan.d1) / 6;
        check("zeta(2) to 10 digits", abs(alt.value[0].re - ref) <= pow10(-10, 30));

        auto em_plan = plan_em(10, zeta2.cert, CostModel{}, {}, std::max(4L, zeta2.m0 + 1));
        auto em = em_generalized_sum(zeta2, em_plan);
        check("alt and em engines agree on zeta(2)",
              max_abs_diff(alt.value, em.value) <= pow10(-10, 30));
    }
    {
        auto plan = plan_euler_alt(20);
        auto serial = euler_gamma_with_plan(plan);
        FunctionSpec rec = reciprocal_spec();
        auto par = parallel_generalized_sum(rec, plan, 2);
        check("parallel matches serial for the Euler constant",
              max_abs_diff(serial.value, par.value) <= pow10(-20, 30));
    }

    std::cout << (failures == 0 ? "verify: all checks passed\n"
                                : "verify: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 1;
}

struct BenchRow {
    std::string suite;
    long d, m, c, d1;
    double serial_ms, parallel_ms;
    long workers;
};

int cmd_bench(const std::string& suite, const std::string& digits_list, long workers_opt) {
    std::vector<long> ds;
    std::stringstream ss(digits_list);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) ds.push_back(std::stol(tok));
    if (ds.empty()) throw argument_error("bench needs --digits-list d1,d2,...");
    long workers = workers_opt == 0 ? hardware_workers() : workers_opt;

    std::cout << "suite\td\tm\tc\td1\tserial_ms\tpar_ms(x" << workers
              << ")\tspeedup\tpeak_mem_bytes\n";
    for (long d : ds) {
        BenchRow row{suite, d, 0, 0, 0, 0.0, 0.0, workers};
        if (suite == "euler") {
            auto plan = plan_euler_alt(d);
            row.m = plan.m; row.c = plan.c; row.d1 = plan.d1;
            row.serial_ms = euler_gamma_with_plan(plan, 1).elapsed_ms;
            row.parallel_ms = euler_gamma_with_plan(plan, workers).elapsed_ms;
        } else if (suite == "zeta") {
            std::vector<ComplexQ> ps = {parse_complex("-1+1i"), parse_complex("1i"),
                                        parse_complex("1+1i"), parse_complex("2+1i")};
            FunctionSpec spec = power_family(ps, parse_complex("1i"));
            auto plan = plan_alt(d, spec.cert, CostModel{}, {}, spec.m0 + 1);
            row.m = plan.m; row.c = plan.c; row.d1 = plan.d1;
            row.serial_ms = alt_generalized_sum(spec, plan).elapsed_ms;
            row.parallel_ms = parallel_generalized_sum(spec, plan, workers).elapsed_ms;
        } else if (suite == "sqrt") {
            FunctionSpec spec = sqrt_example_spec();
            auto plan = plan_alt(d, spec.cert, CostModel{}, {}, spec.m0 + 1);
            row.m = plan.m; row.c = plan.c; row.d1 = plan.d1;
            row.serial_ms = alt_generalized_sum(spec, plan).elapsed_ms;
            row.parallel_ms = parallel_generalized_sum(spec, plan, workers).elapsed_ms;
        } else {
            throw argument_error("unknown bench suite '" + suite + "'");
        }
        double speedup = row.parallel_ms > 0 ? row.serial_ms / row.parallel_ms : 0.0;
        std::cout << row.suite << "\t" << row.d << "\t" << row.m << "\t" << row.c << "\t"
                  << row.d1 << "\t" << static_cast<long>(row.serial_ms) << "\t"
                  << static_cast<long>(row.parallel_ms) << "\t" << speedup << "\t"
                  << peak_memory_bytes() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision summation of finite and (possibly divergent) infinite series\n"
                 "using antiderivative-only approximations with certified error bounds"};
    app.require_subcommand(1);

    CommonOpts sum_opts, zeta_opts, euler_opts;
    std::string sum_function;
    std::vector<std::string> sum_p, zeta_p;
    std::string sum_delta = "1", zeta_delta = "1";

    auto* sum_cmd = app.add_subcommand("sum", "compute a generalized sum of a builtin summand");
    sum_cmd->add_option("function", sum_function, "power | reciprocal | sqrt-example")
        ->required();
    sum_cmd->add_option("--p", sum_p, "exponent(s) for 'power', e.g. 2 or -1+1i");
    sum_cmd->add_option("--delta", sum_delta, "offset for 'power', e.g. 1 or 1i");
    add_common(sum_cmd, sum_opts);
    sum_cmd->add_flag("--calibrate", sum_opts.calibrate, "micro-time f and F to pick m");

    auto* zeta_cmd = app.add_subcommand("zeta", "Hurwitz zeta values zeta(p, delta)");
    zeta_cmd->add_option("--p", zeta_p, "exponent list")->required();
    zeta_cmd->add_option("--delta", zeta_delta, "offset");
    add_common(zeta_cmd, zeta_opts);
    zeta_cmd->add_flag("--calibrate", zeta_opts.calibrate, "micro-time f and F to pick m");

    auto* euler_cmd = app.add_subcommand("euler", "Euler's constant (fast log-paired path)");
    add_common(euler_cmd, euler_opts);

    long coeffs_m = 1;
    std::string coeffs_format = "text";
    auto* coeffs_cmd = app.add_subcommand("coeffs", "dump gamma/tau/rho as exact fractions");
    coeffs_cmd->add_option("--m", coeffs_m, "order")->required();
    coeffs_cmd->add_option("--format", coeffs_format)->check(CLI::IsMember({"text", "json"}));

    long weights_m = 1, weights_n = 10;
    std::string weights_format = "text";
    auto* weights_cmd = app.add_subcommand("weights", "dump the piecewise-constant weight h_m");
    weights_cmd->add_option("--m", weights_m, "order")->required();
    weights_cmd->add_option("--n", weights_n, "term count")->required();
    weights_cmd->add_option("--format", weights_format)->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");

    std::string bench_suite = "euler", bench_digits = "500,1000";
    long bench_workers = 0;
    auto* bench_cmd = app.add_subcommand("bench", "serial vs parallel timing rows");
    bench_cmd->add_option("--suite", bench_suite, "sqrt | zeta | euler")
        ->check(CLI::IsMember({"sqrt", "zeta", "euler"}));
    bench_cmd->add_option("--digits-list", bench_digits, "comma-separated digit counts");
    bench_cmd->add_option("--workers", bench_workers, "0 = hardware parallelism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sum_cmd->parsed()) return cmd_compute(sum_function, sum_p, sum_delta, sum_opts);
        if (zeta_cmd->parsed()) {
            if (zeta_p.empty()) throw argument_error("zeta needs --p");
            return cmd_compute("power", zeta_p, zeta_delta, zeta_opts);
        }
        if (euler_cmd->parsed()) return cmd_euler(euler_opts);
        if (coeffs_cmd->parsed()) return cmd_coeffs(coeffs_m, coeffs_format);
        if (weights_cmd->parsed()) return cmd_weights(weights_m, weights_n, weights_format);
        if (verify_cmd->parsed()) return cmd_verify();
        if (bench_cmd->parsed()) return cmd_bench(bench_suite, bench_digits, bench_workers);
    } catch (const capability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const accuracy_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
