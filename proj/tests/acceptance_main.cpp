// Acceptance suite: runs every acceptance criterion at desk scale and
// prints one pass/fail line per criterion. All comparisons are exact.

#include "grassmann/checks.hpp"
#include "grassmann/explorer.hpp"
#include "grassmann/graph.hpp"
#include "grassmann/recover.hpp"
#include "grassmann/rep.hpp"

#include <chrono>
#include <filesystem>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

using namespace grassmann;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty()) {
        std::printf("[PASS] %2d %-34s (%.2fs)\n", id, label.c_str(), secs);
    } else {
        std::printf("[FAIL] %2d %-34s (%.2fs): %s\n", id, label.c_str(), secs, error.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

[[noreturn]] void bail(const std::string& msg) { throw std::runtime_error(msg); }

void expect(bool ok, const std::string& msg) {
    if (!ok) bail(msg);
}

struct Ctx {
    Geometry G;
    RepSpace R;
    explicit Ctx(QParams P) : G(std::move(P)), R(G) {}
};

}  // namespace

int main() {
    Ctx c273(QParams::make(2, 7, 3));
    Geometry& G = c273.G;
    RepSpace& R = c273.R;
    const QParams& P = G.params;
    std::mt19937_64 rng(20250810);

    // Built once, shared by criteria 2, 12, 13.
    NativeGraph native;

    criterion(1, "parameter closed forms", [&] {
        expect(P.valency == 210, "valency");
        expect(P.b == std::vector<Integer>{210, 168, 96, 0}, "b array");
        expect(P.c == std::vector<Integer>{0, 1, 9, 49}, "c array");
        expect(P.theta == std::vector<Integer>{210, 83, 21, -7}, "eigenvalues");
    });

    criterion(2, "enumeration vs formula", [&] {
        expect(enumerate_rref(G.F, 7, 1).size() == 127, "|P_1| != 127");
        native = NativeGraph::build(G);
        expect(native.vertices.size() == 11811, "|X| != 11811");
        expect(P.vertex_count() == 11811, "closed form != 11811");
    });

    criterion(3, "point-hat axioms", [&] {
        std::vector<RepVector> hats;
        for (PointId s = 0; s < 127; ++s) hats.push_back(R.point_hat(s));
        for (PointId s = 0; s < 127; ++s) {
            for (PointId t = s; t < 127; ++t) {
                const Integer ip = R.inner(hats[s], hats[t]);
                expect(ip == (s == t ? Integer(126) : Integer(-1)),
                       "point-hat inner product off at (" + std::to_string(s) + "," +
                           std::to_string(t) + ")");
            }
        }
        RepVector sum(127);
        for (const auto& h : hats) sum += h;
        expect(sum.is_zero(), "point hats do not sum to zero");
        expect(rep_rank(hats) == 126, "point-hat rank != 126");
        // kernel test both ways
        std::map<PointId, Rational> ones;
        for (PointId s = 0; s < 127; ++s) ones[s] = 1;
        expect(R.kernel_constant_check(ones).sum_is_zero, "constant combination not in kernel");
        expect(!R.kernel_constant_check({{PointId(0), Rational(1)}}).sum_is_zero,
               "indicator combination in kernel");
    });

    criterion(4, "inner-product law, 1000 pairs", [&] {
        std::uniform_int_distribution<long> dd(0, 7);
        std::uniform_int_distribution<int> de(0, 1);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Row> rows(dd(rng), Row(7, 0));
            for (auto& r : rows) {
                for (auto& e : r) e = static_cast<uint8_t>(de(rng));
            }
            const Subspace u = Subspace::rref(G.F, 7, rows);
            rows.assign(dd(rng), Row(7, 0));
            for (auto& r : rows) {
                for (auto& e : r) e = static_cast<uint8_t>(de(rng));
            }
            const Subspace v = Subspace::rref(G.F, 7, rows);
            const Integer expected =
                RepSpace::predicted_inner(u.dim(), v.dim(), meet(u, v).dim(), P);
            expect(R.inner(R.hat(u), R.hat(v)) == expected, "inner law violated");
            expect(R.inner(R.hat(u), R.hat(u)) ==
                       qpow(2, u.dim()) * P.qi(u.dim()) * P.qi(7 - u.dim()),
                   "norm specialization violated");
        }
        for (long i = 0; i <= 3; ++i) {
            auto [x, y] = witness_pair(G, i, rng());
            expect(R.inner(R.hat(x), R.hat(y)) == P.qi(7) * P.qi(3 - i) - 49,
                   "vertex-pair specialization violated");
        }
    });

    criterion(5, "eigen-sum, both fields", [&] {
        for (int t = 0; t < 20; ++t) {
            const Subspace x = gl_apply(G.F, gl_random(G.F, 7, rng()), G.standard_k_subspace());
            expect(R.theta1_residual(x).is_zero(), "eigen-sum fails at (2,7,3)");
        }
        expect(P.theta[1] == 83, "theta_1 != 83");
        Ctx c373(QParams::make(3, 7, 3));
        expect(c373.G.params.theta[1] == 467, "theta_1 != 467 at q=3");
        for (int t = 0; t < 3; ++t) {
            const Subspace x = gl_apply(c373.G.F, gl_random(c373.G.F, 7, rng()),
                                        c373.G.standard_k_subspace());
            expect(c373.R.theta1_residual(x).is_zero(), "eigen-sum fails at (3,7,3)");
        }
    });

    criterion(6, "vertex-hat span", [&] {
        std::vector<RepVector> hats;
        for (int t = 0; t < 500; ++t) {
            const Subspace x = gl_apply(G.F, gl_random(G.F, 7, rng()), G.standard_k_subspace());
            hats.push_back(R.hat(x));
        }
        expect(rep_rank(hats) == 126, "rank of 500 vertex hats != 126");
    });

    criterion(7, "Gram tables two ways", [&] {
        const GramTable geo = gram_closed_form(GramKind::Geometric, P, 2);
        const std::vector<std::vector<Integer>> frozen = {{840, 78, 120, 672},
                                                          {78, 840, 120, 672},
                                                          {120, 120, 126, 96},
                                                          {672, 672, 96, 2976}};
        expect(geo.entries == frozen, "geometric table != frozen matrix");
        auto [x, y] = witness_pair(G, 2, rng());
        for (GramKind kind : {GramKind::Geometric, GramKind::Mixed, GramKind::Combinatorial}) {
            expect(gram_closed_form(kind, P, 2).entries == gram_empirical(R, x, y, kind).entries,
                   "closed form != empirical at (2,7,3)");
        }
        Ctx c294(QParams::make(2, 9, 4));
        for (long i : {2L, 3L}) {
            auto [x9, y9] = witness_pair(c294.G, i, rng());
            for (GramKind kind :
                 {GramKind::Geometric, GramKind::Mixed, GramKind::Combinatorial}) {
                expect(gram_closed_form(kind, c294.G.params, i).entries ==
                           gram_empirical(c294.R, x9, y9, kind).entries,
                       "closed form != empirical at (2,9,4), i=" + std::to_string(i));
            }
        }
    });

    criterion(8, "M_i inversion on the grid", [&] {
        for (auto [q, n, k, i] : {std::tuple<long, long, long, long>{2, 7, 3, 2},
                                  {2, 9, 4, 2},
                                  {2, 9, 4, 3},
                                  {3, 7, 3, 2}}) {
            const QParams Pi = QParams::make(q, n, k);
            const GramTable gm = gram_closed_form(GramKind::Geometric, Pi, i);
            RatMatrix M(4, std::vector<Rational>(4));
            for (int r = 0; r < 4; ++r) {
                for (int cidx = 0; cidx < 4; ++cidx) M[r][cidx] = Rational(gm.entries[r][cidx]);
            }
            expect(rat_is_identity(rat_mul(M, m_inverse(Pi, i))),
                   "M * M^{-1} != I at (" + std::to_string(q) + "," + std::to_string(n) + "," +
                       std::to_string(k) + "), i=" + std::to_string(i));
        }
    });

    criterion(9, "basis ranks and determinant", [&] {
        auto [x, y] = witness_pair(G, 2, rng());
        expect(int_rank(gram_empirical(R, x, y, GramKind::Geometric).entries) == 4,
               "geometric rank != 4");
        expect(int_rank(gram_empirical(R, x, y, GramKind::Combinatorial).entries) == 4,
               "combinatorial rank != 4");
        const RepVector& hm = R.hat(meet(x, y));
        const RepVector& hj = R.hat(join(x, y));
        RepVector hxy = R.hat(x);
        hxy += R.hat(y);
        auto gram_of = [&](const std::vector<const RepVector*>& vs) {
            std::vector<std::vector<Integer>> m(vs.size(), std::vector<Integer>(vs.size()));
            for (size_t r = 0; r < vs.size(); ++r) {
                for (size_t cidx = 0; cidx < vs.size(); ++cidx) {
                    m[r][cidx] = R.inner(*vs[r], *vs[cidx]);
                }
            }
            return m;
        };
        expect(int_rank(gram_of({&hxy, &hm, &hj})) == 3, "bar rank != 3");
        expect(int_rank(gram_of({&hm, &hj})) == 2, "check rank != 2");
        const Rational det =
            rat_det(transition(Direction::GeoToComb, BasisVariant::Full, P, 2).entries);
        expect(det == Rational(-32), "det != -32");
        expect(det == transition_det_closed_form(P, 2), "det != closed form");
        for (BasisVariant v : {BasisVariant::Full, BasisVariant::Bar, BasisVariant::Check}) {
            expect(rat_is_identity(rat_mul(transition(Direction::GeoToComb, v, P, 2).entries,
                                           transition(Direction::CombToGeo, v, P, 2).entries)),
                   "transition pair not inverse");
        }
    });

    criterion(10, "HEADLINE recovery, 50 pairs per grid point", [&] {
        for (auto [q, n, k] : {std::tuple<long, long, long>{2, 7, 3}, {2, 9, 4}, {3, 7, 3}}) {
            Ctx ctx(QParams::make(q, n, k));
            for (long i = 2; i < k; ++i) {
                for (int t = 0; t < 50; ++t) {
                    auto [x, y] = witness_pair(ctx.G, i, rng());
                    const RepVector& hm = ctx.R.hat(meet(x, y));
                    const RepVector& hj = ctx.R.hat(join(x, y));
                    for (BasisVariant v :
                         {BasisVariant::Full, BasisVariant::Bar, BasisVariant::Check}) {
                        auto [rm, rj] = recover_meet_join(ctx.R, x, y, v);
                        expect(rm == hm && rj == hj,
                               "recovery failed at (" + std::to_string(q) + "," +
                                   std::to_string(n) + "," + std::to_string(k) +
                                   "), i=" + std::to_string(i));
                    }
                }
            }
        }
    });

    criterion(11, "balanced sets and perp vector", [&] {
        for (long i : {2L}) {
            auto [x, y] = witness_pair(G, i, rng());
            auto [Bxy, Cxy] = bc_vectors(R, x, y);
            auto [Byx, Cyx] = bc_vectors(R, y, x);
            RepVector diff = R.hat(x);
            diff -= R.hat(y);
            RepVector zd = diff;
            zd *= balance_zeta(P, i);
            expect(Bxy - Byx == zd, "B balance identity fails");
            RepVector xd = diff;
            xd *= balance_xi(P, i);
            expect(Cxy - Cyx == xd, "C balance identity fails");
            expect(balance_zeta(P, 2) == 48 && balance_xi(P, 2) == 0, "zeta/xi frozen values");

            const RepVector v = perp_vector(R, x, y);
            expect(!v.is_zero(), "perp vector is zero");
            expect(R.inner(v, R.hat(meet(x, y))) == 0, "perp not orthogonal to meet");
            expect(R.inner(v, R.hat(join(x, y))) == 0, "perp not orthogonal to join");
            RepVector Cbar = Cxy;
            RepVector xix = R.hat(x);
            xix *= balance_xi(P, i);
            Cbar -= xix;
            RepVector lhs = v;
            lhs *= P.qi(i - 1);
            RepVector rhs = R.hat(x);
            rhs += R.hat(y);
            rhs *= (qpow(2, i - 1) + 1) * P.qi(i);
            RepVector cb2 = Cbar;
            cb2 *= Integer(2);
            rhs -= cb2;
            expect(lhs == rhs, "perp C-bar identity fails");
        }
        // nonzero xi exercised at (2,9,4), i = 3
        Ctx c294(QParams::make(2, 9, 4));
        auto [x, y] = witness_pair(c294.G, 3, rng());
        auto [Bxy, Cxy] = bc_vectors(c294.R, x, y);
        auto [Byx, Cyx] = bc_vectors(c294.R, y, x);
        RepVector diff = c294.R.hat(x);
        diff -= c294.R.hat(y);
        RepVector zd = diff;
        zd *= balance_zeta(c294.G.params, 3);
        RepVector xd = diff;
        xd *= balance_xi(c294.G.params, 3);
        expect(Bxy - Byx == zd && Cxy - Cyx == xd, "balance identities fail at (2,9,4)");
    });

    criterion(12, "explorer round trip and probes", [&] {
        const std::string path =
            (std::filesystem::temp_directory_path() / "acceptance_j273.drg").string();
        export_graph(native, P, path);
        const ExternalGraph g = load_graph(path);
        expect(g.vertex_count() == 11811, "reloaded vertex count");

        auto [xs, ys] = witness_pair(G, 2, rng());
        const ProbeReport rep = run_uniqueness_probes(g, native.id_of(xs), native.id_of(ys));
        expect(rep.i == 2, "pair distance");
        expect(rep.p1.allowed == std::vector<Integer>{120, -7}, "allowed value set");
        expect(rep.p1.all_allowed, "spectrum not within {120, -7}");
        expect(rep.p2.equitable, "partner partition not equitable");
        expect(rep.l0_class_size == 651, "value-120 class size != 651");
        expect(Integer(651) == gauss_binom(6, 2, 2), "651 != gauss_binom(6,2,2)");
        expect(rep.p3.closed, "value-120 class not geodesically closed");
        expect(rep.p3.diameter == 2, "value-120 class diameter != 2");
        std::remove(path.c_str());
    });

    criterion(13, "distance oracle, 500-vertex sample", [&] {
        std::uniform_int_distribution<size_t> dv(0, native.vertices.size() - 1);
        const int32_t src = static_cast<int32_t>(dv(rng));
        const std::vector<int> dist = native.bfs(src);
        for (int t = 0; t < 500; ++t) {
            const size_t w = dv(rng);
            expect(dist[w] == distance(native.vertices[src], native.vertices[w]),
                   "BFS distance != k - dim(meet)");
        }
    });

    if (failures == 0) {
        std::printf("acceptance: all 13 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
