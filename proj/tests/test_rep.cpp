#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grassmann/recover.hpp"
#include "grassmann/rep.hpp"

#include <random>

using namespace grassmann;

namespace {

struct Ctx {
    Geometry G;
    RepSpace R;
    explicit Ctx(QParams P) : G(std::move(P)), R(G) {}
};

Ctx& ctx273() {
    static Ctx c(QParams::make(2, 7, 3));
    return c;
}

Subspace random_subspace(const Geometry& G, long dim_hint, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(G.params.q) - 1);
    std::vector<Row> rows(dim_hint, Row(G.params.n, 0));
    for (auto& r : rows) {
        for (auto& e : r) e = static_cast<uint8_t>(d(rng));
    }
    return Subspace::rref(G.F, G.params.n, rows);
}

}  // namespace

TEST_CASE("hat of the trivial subspaces vanishes") {
    auto& [G, R] = ctx273();
    CHECK(R.hat(Subspace::zero(G.F, 7)).is_zero());
    CHECK(R.hat(Subspace::full(G.F, 7)).is_zero());
}

TEST_CASE("point-hat inner products: (C2) and (C3)") {
    auto& [G, R] = ctx273();
    const RepVector h0 = R.point_hat(0);
    CHECK(R.inner(h0, h0) == 126);  // [n] - 1
    for (PointId t : {1, 17, 126}) {
        CHECK(R.inner(h0, R.point_hat(t)) == -1);
    }
    // point_hat agrees with hat of the 1-dim subspace
    for (PointId s : {0, 5, 100}) {
        CHECK(R.point_hat(s) == R.hat(G.points.point(s)));
    }
}

TEST_CASE("every hat lift has zero coordinate sum") {
    auto& [G, R] = ctx273();
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        const Subspace u = random_subspace(G, static_cast<long>(rng() % 8), rng);
        CHECK(R.hat(u).coordinate_sum() == 0);
    }
}

TEST_CASE("inner-product law against the closed form") {
    auto& [G, R] = ctx273();
    const QParams& P = G.params;
    std::mt19937_64 rng(37);
    for (int t = 0; t < 1000; ++t) {
        const Subspace u = random_subspace(G, static_cast<long>(rng() % 8), rng);
        const Subspace v = random_subspace(G, static_cast<long>(rng() % 8), rng);
        const Integer expect = RepSpace::predicted_inner(u.dim(), v.dim(), meet(u, v).dim(), P);
        CHECK(R.inner(R.hat(u), R.hat(v)) == expect);
    }

    // specializations: norms q^i[i][n-i], and vertex pairs by distance
    for (int t = 0; t < 100; ++t) {
        const Subspace u = random_subspace(G, static_cast<long>(rng() % 8), rng);
        const long i = u.dim();
        CHECK(R.inner(R.hat(u), R.hat(u)) == qpow(2, i) * P.qi(i) * P.qi(7 - i));
    }
    for (long i = 0; i <= 3; ++i) {
        auto [x, y] = witness_pair(G, i, rng());
        CHECK(R.inner(R.hat(x), R.hat(y)) == P.qi(7) * P.qi(3 - i) - P.qi(3) * P.qi(3));
    }
    // frozen: distance 2 at (2,7,3), and the vertex norm 840
    auto [x, y] = witness_pair(G, 2, 41);
    CHECK(R.inner(R.hat(x), R.hat(y)) == 78);
    CHECK(R.inner(R.hat(x), R.hat(x)) == 840);
}

TEST_CASE("predicted_inner validates its dimension triple") {
    const QParams P = QParams::make(2, 7, 3);
    CHECK(RepSpace::predicted_inner(3, 3, 3, P) == 840);
    CHECK(RepSpace::predicted_inner(3, 3, 1, P) == 78);
    CHECK_THROWS_AS(RepSpace::predicted_inner(3, 3, 4, P), std::invalid_argument);
    CHECK_THROWS_AS(RepSpace::predicted_inner(5, 5, 2, P), std::invalid_argument);  // 5+5-7 > 2
    CHECK_THROWS_AS(RepSpace::predicted_inner(8, 3, 3, P), std::invalid_argument);
}

TEST_CASE("inner rejects vectors off the representation lattice") {
    auto& [G, R] = ctx273();
    RepVector raw(127);
    raw[0] = 1;
    CHECK_THROWS_AS(R.inner(raw, raw), std::logic_error);
}

TEST_CASE("GL action is an isometry") {
    auto& [G, R] = ctx273();
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        const Subspace u = random_subspace(G, static_cast<long>(rng() % 8), rng);
        const Subspace v = random_subspace(G, static_cast<long>(rng() % 8), rng);
        const GLMatrix sigma = gl_random(G.F, 7, rng());
        CHECK(R.inner(R.hat(u), R.hat(v)) ==
              R.inner(R.hat(gl_apply(G.F, sigma, u)), R.hat(gl_apply(G.F, sigma, v))));
    }
}

TEST_CASE("eigen-sum: neighbor hats sum to theta_1 times the vertex hat") {
    auto& [G, R] = ctx273();
    std::mt19937_64 rng(47);
    CHECK(G.params.theta[1] == 83);
    for (int t = 0; t < 20; ++t) {
        const Subspace x = gl_apply(G.F, gl_random(G.F, 7, rng()), G.standard_k_subspace());
        CHECK(R.theta1_residual(x).is_zero());
    }
}

TEST_CASE("eigen-sum at q = 3: coefficient 467") {
    Geometry G(QParams::make(3, 7, 3));
    RepSpace R(G);
    CHECK(G.params.theta[1] == 467);
    std::mt19937_64 rng(53);
    const Subspace x = gl_apply(G.F, gl_random(G.F, 7, rng()), G.standard_k_subspace());
    RepVector sum(static_cast<size_t>(G.points.count()));
    for (const Subspace& z : neighbors(G, x)) sum += R.hat(z);
    RepVector expect = R.hat(x);
    expect *= Integer(467);
    CHECK(sum == expect);
}

TEST_CASE("rank of the point-hat family is [n]-1") {
    auto& [G, R] = ctx273();
    std::vector<RepVector> hats;
    for (PointId s = 0; s < 127; ++s) hats.push_back(R.point_hat(s));
    CHECK(rep_rank(hats) == 126);

    // any 126 of the 127 point hats form a basis
    std::mt19937_64 rng(59);
    for (int t = 0; t < 3; ++t) {
        std::vector<RepVector> subset;
        const size_t skip = rng() % 127;
        for (size_t s = 0; s < 127; ++s) {
            if (s != skip) subset.push_back(hats[s]);
        }
        CHECK(rep_rank(subset) == 126);
    }

    RepVector total(127);
    for (const RepVector& h : hats) total += h;
    CHECK(total.is_zero());  // (C4)
}

TEST_CASE("vertex hats span the whole space") {
    auto& [G, R] = ctx273();
    std::mt19937_64 rng(61);
    std::vector<RepVector> hats;
    for (int t = 0; t < 200; ++t) {
        const Subspace x = gl_apply(G.F, gl_random(G.F, 7, rng()), G.standard_k_subspace());
        hats.push_back(R.hat(x));
    }
    CHECK(rep_rank(hats) == 126);
    // adding point hats cannot push the rank past [n]-1
    for (PointId s = 0; s < 20; ++s) hats.push_back(R.point_hat(s));
    CHECK(rep_rank(hats) == 126);
}

TEST_CASE("kernel test: a point-hat combination vanishes iff constant") {
    auto& [G, R] = ctx273();

    std::map<PointId, Rational> all_ones;
    for (PointId s = 0; s < 127; ++s) all_ones[s] = 1;
    auto r1 = R.kernel_constant_check(all_ones);
    CHECK(r1.sum_is_zero);
    CHECK(r1.coeffs_constant);
    CHECK(r1.consistent());

    auto r2 = R.kernel_constant_check({{PointId(3), Rational(1)}});
    CHECK_FALSE(r2.sum_is_zero);
    CHECK_FALSE(r2.coeffs_constant);
    CHECK(r2.consistent());

    // indicator of Omega(u) for a proper subspace: nonzero, with norm
    // q^i[i][n-i] > 0 through the hat identification
    std::mt19937_64 rng(67);
    const Subspace u = witness_pair(G, 2, rng()).first;
    std::map<PointId, Rational> omega_ind;
    for (PointId s : G.points.omega(u)) omega_ind[s] = 1;
    auto r3 = R.kernel_constant_check(omega_ind);
    CHECK_FALSE(r3.sum_is_zero);
    CHECK_FALSE(r3.coeffs_constant);
    CHECK(R.inner(R.hat(u), R.hat(u)) > 0);

    // constant value other than one also vanishes
    std::map<PointId, Rational> twos;
    for (PointId s = 0; s < 127; ++s) twos[s] = Rational(2, 3);
    CHECK(R.kernel_constant_check(twos).sum_is_zero);
}

TEST_CASE("int_rank on explicit matrices") {
    CHECK(int_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(int_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(int_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(int_rank({{2, 3, 5}, {7, 11, 13}, {9, 14, 18}}) == 2);  // third row = sum
    CHECK(int_rank({{2, 3, 5}, {7, 11, 13}, {1, 0, 0}}) == 3);
    CHECK(int_rank({{2, 3, 5}, {7, 11, 13}, {1, 0, 0}, {11, 17, 23}}) == 3);
}
