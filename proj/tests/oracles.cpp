#include "oracles.hpp"

#include <cstdlib>
#include <stdexcept>

namespace oracle {

std::vector<mpz_class> euler_product_pow(int power, int nterms) {
    if (power < 0 || nterms < 1) throw std::invalid_argument("euler_product_pow: bad arguments");
    std::vector<mpz_class> c(static_cast<size_t>(nterms), 0);
    c[0] = 1;
    for (int rep = 0; rep < power; ++rep)
        for (int j = 1; j < nterms; ++j)
            for (int n = nterms - 1; n >= j; --n)
                c[static_cast<size_t>(n)] -= c[static_cast<size_t>(n - j)];
    return c;
}

std::vector<mpz_class> euler_product_pentagonal(int nterms) {
    std::vector<mpz_class> c(static_cast<size_t>(nterms), 0);
    for (long long k = 0;; ++k) {
        const long long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
        if (e1 >= nterms && e2 >= nterms) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        if (e1 < nterms) c[static_cast<size_t>(e1)] += sign;
        if (k > 0 && e2 < nterms) c[static_cast<size_t>(e2)] += sign;
    }
    return c;
}

std::vector<mpz_class> euler_product_cubed(int nterms) {
    std::vector<mpz_class> c(static_cast<size_t>(nterms), 0);
    for (long long m = 0;; ++m) {
        const long long e = m * (m + 1) / 2;
        if (e >= nterms) break;
        const long odd = static_cast<long>(2 * m + 1);
        c[static_cast<size_t>(e)] += (m % 2 == 0 ? odd : -odd);
    }
    return c;
}

mpz_class sigma(unsigned k, long long n) {
    if (n < 1) throw std::invalid_argument("sigma: n must be >= 1");
    mpz_class total = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
        total += p;
        const long long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), k);
            total += p;
        }
    }
    return total;
}

std::vector<mpz_class> eisenstein4(int nterms) {
    std::vector<mpz_class> c(static_cast<size_t>(nterms), 0);
    c[0] = 1;
    for (long long n = 1; n < nterms; ++n) c[static_cast<size_t>(n)] = 240 * sigma(3, n);
    return c;
}

std::vector<mpz_class> eisenstein6(int nterms) {
    std::vector<mpz_class> c(static_cast<size_t>(nterms), 0);
    c[0] = 1;
    for (long long n = 1; n < nterms; ++n) c[static_cast<size_t>(n)] = -504 * sigma(5, n);
    return c;
}

namespace {

std::vector<mpz_class> mul_trunc(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

std::vector<mpz_class> delta_coeffs(int nterms) {
    const auto e4 = eisenstein4(nterms), e6 = eisenstein6(nterms);
    const auto e4cubed = mul_trunc(mul_trunc(e4, e4), e4);
    const auto e6sq = mul_trunc(e6, e6);
    std::vector<mpz_class> out(static_cast<size_t>(nterms));
    for (size_t n = 0; n < out.size(); ++n) {
        mpz_class num = e4cubed[n] - e6sq[n];
        if (num % 1728 != 0) throw std::logic_error("delta_coeffs: inexact division");
        out[n] = num / 1728;
    }
    return out;
}

long long lattice_count(long long step, long long a, long long b, long long n4) {
    if (step < 1 || n4 < 0) throw std::invalid_argument("lattice_count: bad arguments");
    long long bound = 0;
    while (bound * bound < n4) ++bound;
    long long count = 0;
    for (long long x = -bound; x <= bound; ++x) {
        if (((x - a) % step + step) % step != 0) continue;
        for (long long y = -bound; y <= bound; ++y) {
            if (((y - b) % step + step) % step != 0) continue;
            if (x * x + y * y == n4) ++count;
        }
    }
    return count;
}

long long residue_square_count(long long step, long long mu, long long rsq) {
    if (step < 1 || rsq < 0) throw std::invalid_argument("residue_square_count: bad arguments");
    long long bound = 0;
    while (bound * bound < rsq) ++bound;
    long long count = 0;
    for (long long r = -bound; r <= bound; ++r) {
        if (((r - mu) % step + step) % step != 0) continue;
        if (r * r == rsq) ++count;
    }
    return count;
}

}  // namespace oracle
