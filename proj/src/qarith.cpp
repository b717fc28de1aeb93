#include "grassmann/qarith.hpp"

#include <string>

namespace grassmann {

Integer qint(long m, long q) {
    if (m < 0) {
        throw std::domain_error("qint: m must be non-negative, got " + std::to_string(m));
    }
    if (q < 2) {
        throw std::domain_error("qint: q must be at least 2");
    }
    // (q^m - 1)/(q - 1) = 1 + q + ... + q^{m-1}
    Integer acc = 0;
    Integer pw = 1;
    for (long j = 0; j < m; ++j) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

Integer qfactorial(long m, long q) {
    if (m < 0) {
        throw std::domain_error("qfactorial: m must be non-negative");
    }
    Integer acc = 1;
    for (long j = 2; j <= m; ++j) {
        acc *= qint(j, q);
    }
    return acc;
}

Integer gauss_binom(long m, long r, long q) {
    if (r < 0 || r > m) {
        throw std::domain_error("gauss_binom: require 0 <= r <= m");
    }
    // Product form avoids the large intermediate factorials:
    // prod_{j=1}^{r} [m-r+j]/[j], with every prefix an integer.
    Integer num = 1;
    Integer den = 1;
    for (long j = 1; j <= r; ++j) {
        num *= qint(m - r + j, q);
        den *= qint(j, q);
    }
    Integer quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) {
        throw std::logic_error("gauss_binom: inexact division (bug)");
    }
    return quot;
}

Integer qpow(long q, long e) {
    if (e < 0) {
        throw std::domain_error("qpow: negative exponent; use qpow_r");
    }
    Integer acc = 1;
    for (long j = 0; j < e; ++j) acc *= q;
    return acc;
}

Rational qpow_r(long q, long e) {
    if (e >= 0) return Rational(qpow(q, e));
    return Rational(1) / Rational(qpow(q, -e));
}

bool is_prime_power(long q, long* p_out, long* e_out) {
    if (q < 2) return false;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime
    long e = 0;
    long v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

QParams QParams::make(long q, long n, long k) {
    if (!is_prime_power(q)) {
        throw std::invalid_argument("QParams: q = " + std::to_string(q) + " is not a prime power");
    }
    if (!(n > 2 * k && 2 * k >= 6)) {
        throw std::invalid_argument("QParams: require n > 2k >= 6, got n = " + std::to_string(n) +
                                    ", k = " + std::to_string(k));
    }
    QParams P;
    P.q = q;
    P.n = n;
    P.k = k;
    P.qints.resize(n + 1);
    for (long m = 0; m <= n; ++m) P.qints[m] = qint(m, q);
    P.valency = q * P.qints[k] * P.qints[n - k];
    P.b.resize(k + 1);
    P.c.resize(k + 1);
    P.a.resize(k + 1);
    P.theta.resize(k + 1);
    for (long i = 0; i <= k; ++i) {
        P.b[i] = qpow(q, 2 * i + 1) * P.qints[k - i] * P.qints[n - k - i];
        P.c[i] = P.qints[i] * P.qints[i];
        P.a[i] = P.valency - P.b[i] - P.c[i];
        P.theta[i] = qpow(q, i + 1) * P.qints[k - i] * P.qints[n - k - i] - P.qints[i];
        if (P.a[i] < 0) {
            throw std::logic_error("QParams: negative a_i (bug)");
        }
    }
    for (long i = 0; i < k; ++i) {
        if (P.theta[i] <= P.theta[i + 1]) {
            throw std::logic_error("QParams: eigenvalues not strictly decreasing (bug)");
        }
    }
    return P;
}

Integer QParams::qi(long m) const {
    if (m >= 0 && m <= n) return qints[m];
    return qint(m, q);
}

Integer QParams::eigenvalue(long i) const {
    if (i < 0 || i > k) {
        throw std::domain_error("eigenvalue: index out of range 0..k");
    }
    return theta[i];
}

std::vector<Integer> QParams::sphere_sizes() const {
    std::vector<Integer> sizes(k + 1);
    sizes[0] = 1;
    for (long i = 0; i < k; ++i) {
        Integer quot, rem;
        boost::multiprecision::divide_qr(sizes[i] * b[i], c[i + 1], quot, rem);
        if (rem != 0) {
            throw std::logic_error("sphere_sizes: inexact k_i b_i / c_{i+1}");
        }
        sizes[i + 1] = quot;
    }
    return sizes;
}

Integer QParams::vertex_count() const { return gauss_binom(n, k, q); }

}  // namespace grassmann
