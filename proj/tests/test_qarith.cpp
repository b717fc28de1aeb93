#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grassmann/qarith.hpp"

using namespace grassmann;

namespace {

// Independent oracle: count ell-dim RREF matrices by pivot pattern,
// summing q^(free entries) over all pivot-column subsets.
Integer count_by_pivot_patterns(long m, long r, long q) {
    if (r == 0) return 1;
    Integer total = 0;
    std::vector<long> piv(r);
    for (long t = 0; t < r; ++t) piv[t] = t;
    for (;;) {
        long free_cnt = 0;
        for (long t = 0; t < r; ++t) free_cnt += m - piv[t] - (r - t);
        total += qpow(q, free_cnt);
        long t = r - 1;
        while (t >= 0 && piv[t] == m - r + t) --t;
        if (t < 0) break;
        ++piv[t];
        for (long u = t + 1; u < r; ++u) piv[u] = piv[u - 1] + 1;
    }
    return total;
}

}  // namespace

TEST_CASE("qint matches the geometric-sum definition") {
    CHECK(qint(0, 2) == 0);
    CHECK(qint(1, 2) == 1);
    CHECK(qint(3, 2) == 7);
    CHECK(qint(7, 2) == 127);
    CHECK(qint(2, 3) == 4);
    CHECK(qint(3, 3) == 13);
    // direct evaluation of (q^m - 1)/(q - 1)
    for (long q : {2L, 3L, 5L}) {
        for (long m = 0; m <= 20; ++m) {
            const Integer direct = (qpow(q, m) - 1) / (q - 1);
            CHECK(qint(m, q) == direct);
        }
    }
    CHECK_THROWS_AS(qint(-1, 2), std::domain_error);
}

TEST_CASE("gauss_binom counts subspaces") {
    CHECK(gauss_binom(5, 0, 2) == 1);
    CHECK(gauss_binom(0, 0, 2) == 1);
    CHECK(gauss_binom(7, 1, 2) == 127);
    CHECK(gauss_binom(7, 3, 2) == 11811);
    CHECK(gauss_binom(9, 4, 2) == 3309747);
    CHECK_THROWS_AS(gauss_binom(5, -1, 2), std::domain_error);
    CHECK_THROWS_AS(gauss_binom(5, 6, 2), std::domain_error);

    // symmetry and the pivot-pattern oracle up to m = 12
    for (long q : {2L, 3L}) {
        for (long m = 0; m <= 12; ++m) {
            for (long r = 0; r <= m; ++r) {
                const Integer g = gauss_binom(m, r, q);
                CHECK(g == count_by_pivot_patterns(m, r, q));
                CHECK(g == gauss_binom(m, m - r, q));
            }
        }
    }
}

TEST_CASE("intersection numbers and eigenvalues at (2,7,3)") {
    const QParams P = QParams::make(2, 7, 3);
    CHECK(P.valency == 210);
    CHECK(P.b == std::vector<Integer>{210, 168, 96, 0});
    CHECK(P.c == std::vector<Integer>{0, 1, 9, 49});
    CHECK(P.a == std::vector<Integer>{0, 41, 105, 161});
    CHECK(P.theta == std::vector<Integer>{210, 83, 21, -7});
    CHECK(P.eigenvalue(0) == P.valency);
    CHECK(P.eigenvalue(1) == 83);
    CHECK(P.eigenvalue(3) == -7);
    CHECK_THROWS_AS(P.eigenvalue(4), std::domain_error);
    CHECK_THROWS_AS(P.eigenvalue(-1), std::domain_error);
}

TEST_CASE("intersection numbers at other parameters") {
    const QParams P3 = QParams::make(3, 7, 3);
    CHECK(P3.c[3] == 169);
    CHECK(P3.a[0] == 0);
    CHECK(P3.theta[1] == 467);

    const QParams P9 = QParams::make(2, 9, 4);
    CHECK(P9.valency == 930);
    CHECK(P9.b[3] == 384);
    CHECK(P9.c[3] == 49);
}

TEST_CASE("parameter identities hold across a grid") {
    for (auto [q, n, k] : {std::tuple<long, long, long>{2, 7, 3},
                           {2, 9, 4},
                           {3, 7, 3},
                           {2, 11, 4},
                           {4, 7, 3}}) {
        const QParams P = QParams::make(q, n, k);
        CHECK(P.b[0] == P.valency);
        CHECK(P.c[1] == 1);
        CHECK(P.a[0] == 0);
        CHECK(P.b[k] == 0);
        for (long i = 0; i <= k; ++i) {
            CHECK(P.b[i] + P.a[i] + P.c[i] == P.valency);
        }
        CHECK(P.theta[0] == P.valency);
        CHECK(P.theta[1] == qpow(q, 2) * P.qi(k - 1) * P.qi(n - k - 1) - 1);
        for (long i = 0; i < k; ++i) CHECK(P.theta[i] > P.theta[i + 1]);

        Integer total = 0;
        for (const Integer& s : P.sphere_sizes()) total += s;
        CHECK(total == P.vertex_count());
    }
}

TEST_CASE("sphere sizes at (2,7,3)") {
    const QParams P = QParams::make(2, 7, 3);
    CHECK(P.sphere_sizes() == std::vector<Integer>{1, 210, 3920, 7680});
}

TEST_CASE("QParams validation") {
    CHECK_THROWS_AS(QParams::make(2, 6, 3), std::invalid_argument);   // n > 2k fails
    CHECK_THROWS_AS(QParams::make(2, 7, 2), std::invalid_argument);   // 2k >= 6 fails
    CHECK_THROWS_AS(QParams::make(6, 13, 3), std::invalid_argument);  // q not a prime power
    CHECK_THROWS_AS(QParams::make(1, 7, 3), std::invalid_argument);
    CHECK_NOTHROW(QParams::make(8, 7, 3));
    CHECK_NOTHROW(QParams::make(9, 7, 3));
}

TEST_CASE("prime power recognition") {
    long p = 0, e = 0;
    CHECK(is_prime_power(8, &p, &e));
    CHECK(p == 2);
    CHECK(e == 3);
    CHECK(is_prime_power(9, &p, &e));
    CHECK(p == 3);
    CHECK(e == 2);
    CHECK(is_prime_power(97));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(0));
}

TEST_CASE("qpow_r handles negative exponents") {
    CHECK(qpow_r(2, 3) == 8);
    CHECK(qpow_r(2, 0) == 1);
    CHECK(qpow_r(2, -3) == Rational(1, 8));
    CHECK(qpow_r(3, -2) == Rational(1, 9));
}
