#include "altsum/coefficients.hpp"

#include <map>
#include <mutex>

namespace altsum {

std::vector<Rational> gamma_table(long m) {
    if (m < 1) throw argument_error("gamma_table needs m >= 1");
    std::vector<Rational> g(static_cast<size_t>(m) + 1);
    // ratio_j = C(2m, m+j)/C(2m, m); ratio_j/ratio_{j-1} = (m-j+1)/(m+j)
    Rational ratio(1);
    for (long j = 1; j <= m; ++j) {
        ratio *= make_rational(m - j + 1, m + j);
        Rational v = ratio * make_rational(2, j);
        if (j % 2 == 0) v = -v;
        g[static_cast<size_t>(j)] = v;
    }
    return g;
}

std::vector<Rational> rho_downward(long m) {
    if (m < 1) throw argument_error("rho_downward needs m >= 1");
    std::vector<Rational> rho(static_cast<size_t>(m) + 1);
    Integer central = binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
    Rational r = make_rational(Integer(m % 2 == 1 ? 2 : -2), central);
    rho[static_cast<size_t>(m)] = r;
    for (long j = m; j >= 2; --j) {
        r *= make_rational(m + j, j - m - 1);
        rho[static_cast<size_t>(j - 1)] = r;
    }
    return rho;
}

std::vector<Rational> tau_table(long m) {
    if (m < 1) throw argument_error("tau_table needs m >= 1");
    std::vector<Rational> g = gamma_table(m);
    std::vector<Rational> tau(static_cast<size_t>(m) + 1);
    // reverse pass: tau[r] = gamma[r] + tau[r+2]
    for (long r = m; r >= 1; --r) {
        tau[static_cast<size_t>(r)] = g[static_cast<size_t>(r)];
        if (r + 2 <= m) tau[static_cast<size_t>(r)] += tau[static_cast<size_t>(r + 2)];
    }
    return tau;
}

namespace {
std::mutex table_mutex;
std::map<long, std::shared_ptr<const CoefficientTable>> table_cache;
} // namespace

std::shared_ptr<const CoefficientTable> coefficient_table(long m) {
    if (m < 1) throw argument_error("coefficient_table needs m >= 1");
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = table_cache.find(m);
        if (it != table_cache.end()) return it->second;
    }
    auto t = std::make_shared<CoefficientTable>();
    t->m = m;
    t->gamma = gamma_table(m);
    t->tau.assign(static_cast<size_t>(m) + 1, Rational(0));
    t->rho.assign(static_cast<size_t>(m) + 1, Rational(0));
    for (long r = m; r >= 1; --r) {
        t->tau[static_cast<size_t>(r)] = t->gamma[static_cast<size_t>(r)];
        if (r + 2 <= m) t->tau[static_cast<size_t>(r)] += t->tau[static_cast<size_t>(r + 2)];
        t->rho[static_cast<size_t>(r)] = t->gamma[static_cast<size_t>(r)] * r;
    }
    std::lock_guard<std::mutex> lock(table_mutex);
    auto [it, inserted] = table_cache.emplace(m, std::move(t));
    (void)inserted;
    return it->second;
}

BernoulliCache bernoulli_numbers(long n) {
    if (n < 0) n = 0;
    BernoulliCache cache;
    cache.values.reserve(static_cast<size_t>(n) + 1);
    cache.values.emplace_back(1);
    if (n >= 1) cache.values.push_back(make_rational(-1, 2));
    for (long b = 2; b <= n; ++b) {
        if (b % 2 == 1) {
            cache.values.emplace_back(0);
            continue;
        }
        // B_b = -1/(b+1) * sum_{a=0}^{b-1} C(b+1, a) B_a, binomials built
        // incrementally along the row
        Rational acc(0);
        Integer binom(1); // C(b+1, 0)
        for (long a = 0; a <= b - 1; ++a) {
            if (a > 0) {
                binom *= (b + 2 - a);
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                                static_cast<unsigned long>(a));
            }
            if (a % 2 == 0 || a == 1) // odd B_a with a >= 3 vanish
                acc += Rational(binom) * cache.values[static_cast<size_t>(a)];
        }
        acc /= (b + 1);
        cache.values.push_back(-acc);
    }
    return cache;
}

namespace {
std::mutex bernoulli_mutex;
BernoulliCache shared_bernoulli;
} // namespace

Rational bernoulli(long k) {
    if (k < 0) throw argument_error("bernoulli index must be nonnegative");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (shared_bernoulli.highest() < k)
        shared_bernoulli = bernoulli_numbers(k + 16);
    return shared_bernoulli.values[static_cast<size_t>(k)];
}

Rational bernoulli_from_tau(long m, long p) {
    if (m < 1) throw argument_error("bernoulli_from_tau needs m >= 1");
    if (p < 0 || p > 2 * m - 1)
        throw argument_error("bernoulli_from_tau needs 0 <= p <= 2m-1");
    auto table = coefficient_table(m);

    auto ipow = [](long base, long e) { // (base)^e as exact integer, 0^0 = 1
        Integer out;
        Integer b(base);
        mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
        return out;
    };

    Rational sum = table->tau_at(1) * (p % 2 == 0 ? 1 : -1);
    for (long b = 2; b <= m; ++b)
        sum += table->tau_at(b) * Rational(ipow(b - 2, p) + ipow(-b, p));
    Rational scale = make_rational(Integer(1), ipow(2, p));
    return scale * sum;
}

Rational gamma_weighted_power_sum(long m) {
    if (m < 1) throw argument_error("gamma_weighted_power_sum needs m >= 1");
    auto table = coefficient_table(m);
    Rational sum(0);
    for (long j = 1; j <= m; ++j) {
        Integer jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(2 * m + 1));
        sum += abs(table->gamma_at(j)) * Rational(jp);
    }
    return sum;
}

Rational odd_power_cancellation(long m, long q) {
    if (m < 1) throw argument_error("odd_power_cancellation needs m >= 1");
    if (q < 1 || q > 2 * m - 1 || q % 2 == 0)
        throw argument_error("odd_power_cancellation needs odd q in [1, 2m-1]");
    auto table = coefficient_table(m);
    Rational sum(0);
    for (long j = 1; j <= m; ++j) {
        Integer jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(q));
        sum += table->gamma_at(j) * Rational(jp);
    }
    return sum;
}

} // namespace altsum
