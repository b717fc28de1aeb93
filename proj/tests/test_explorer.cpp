#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grassmann/explorer.hpp"
#include "grassmann/recover.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace grassmann;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
}

struct Native273 {
    Geometry G;
    NativeGraph g;
    std::string path;
    Native273() : G(QParams::make(2, 7, 3)), g(NativeGraph::build(G)), path(temp_path("t_j273.drg")) {
        export_graph(g, G.params, path);
    }
};

Native273& native273() {
    static Native273 n;
    return n;
}

}  // namespace

TEST_CASE("cosine table: recurrence equals the closed form") {
    CHECK(cosine_table(QParams::make(2, 7, 3)) == std::vector<Integer>{840, 332, 78, -49});
    // w_0 is the normalization q^k[k][n-k]
    CHECK(cosine_table(QParams::make(2, 7, 3))[0] == 840);
    CHECK(cosine_table(QParams::make(3, 7, 3))[0] == 27 * 13 * 40);
    const QParams P9 = QParams::make(2, 9, 4);
    const auto w9 = cosine_table(P9);
    for (long h = 0; h <= 4; ++h) {
        CHECK(w9[h] == P9.qi(9) * P9.qi(4 - h) - P9.qi(4) * P9.qi(4));
    }

    // recurrence residual: c_h w_{h-1} + a_h w_h + b_h w_{h+1} = theta_1 w_h
    const QParams P = QParams::make(2, 7, 3);
    const auto w = cosine_table(P);
    for (long h = 1; h < 3; ++h) {
        CHECK(P.c[h] * w[h - 1] + P.a[h] * w[h] + P.b[h] * w[h + 1] == P.theta[1] * w[h]);
    }
}

TEST_CASE("rho coefficients equal the recovery coefficients") {
    const QParams P = QParams::make(2, 7, 3);
    const RhoCoeffs rc = rho_meet_join_coeffs(P, 2);
    CHECK(rc.cap == std::array<Rational, 4>{Rational(7, 4), Rational(1, 4), Rational(-1, 32),
                                            Rational(-1, 8)});
    CHECK(rc.plus == std::array<Rational, 4>{Rational(-9), Rational(-3), Rational(1, 8),
                                             Rational(3, 2)});
    const TransitionMatrix tr = transition(Direction::CombToGeo, BasisVariant::Full, P, 2);
    for (int t = 0; t < 4; ++t) {
        CHECK(rc.cap[t] == tr.entries[t][2]);
        CHECK(rc.plus[t] == tr.entries[t][3]);
    }
}

TEST_CASE("malformed graph files are rejected") {
    const std::string p = temp_path("t_bad.drg");

    write_file(p, "bogus 2 7 3\nvertices 3\n");
    CHECK_THROWS_WITH_AS(load_graph(p), doctest::Contains("drg"), std::runtime_error);

    write_file(p, "drg 2 6 3\nvertices 5\n");  // invalid parameters
    CHECK_THROWS_AS(load_graph(p), std::invalid_argument);

    write_file(p, "drg 2 7 3\nvertices 5\n");  // wrong vertex count
    CHECK_THROWS_WITH_AS(load_graph(p), doctest::Contains("vertex count"), std::runtime_error);

    std::remove(p.c_str());
    CHECK_THROWS_AS(load_graph(p), std::runtime_error);  // missing file
}

TEST_CASE("export / reload round trip validates") {
    Native273& n = native273();
    const ExternalGraph g = load_graph(n.path);
    CHECK(g.vertex_count() == 11811);
    CHECK(g.adj[0].size() == 210);
}

TEST_CASE("tampered graphs fail validation") {
    Native273& n = native273();

    // remove one edge: two vertices drop below degree kappa
    {
        std::vector<std::vector<int32_t>> adj = n.g.adj;
        const int32_t a = 0;
        const int32_t b = adj[0][0];
        adj[a].erase(adj[a].begin());
        adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
        NativeGraph broken;
        broken.vertices = n.g.vertices;
        broken.index = n.g.index;
        broken.adj = std::move(adj);
        const std::string p = temp_path("t_edge_removed.drg");
        export_graph(broken, n.G.params, p);
        CHECK_THROWS_WITH_AS(load_graph(p), doctest::Contains("degree"), std::runtime_error);
        std::remove(p.c_str());
    }

    // swap two edges (degree-preserving): sampled intersection numbers break
    {
        std::vector<std::vector<int32_t>> adj = n.g.adj;
        // pick endpoints a-b and c-d with all four distinct and no cross edges
        int32_t a = 0, b = -1, c = -1, d = -1;
        for (int32_t cand : adj[0]) { b = cand; break; }
        for (int32_t x = 1; x < 11811 && c < 0; ++x) {
            if (x == b) continue;
            const bool xa = std::binary_search(adj[a].begin(), adj[a].end(), x);
            const bool xb = std::binary_search(adj[b].begin(), adj[b].end(), x);
            if (xa || xb) continue;
            for (int32_t y : adj[x]) {
                if (y == a || y == b || y <= x) continue;
                const bool ya = std::binary_search(adj[a].begin(), adj[a].end(), y);
                const bool yb = std::binary_search(adj[b].begin(), adj[b].end(), y);
                if (!ya && !yb) {
                    c = x;
                    d = y;
                    break;
                }
            }
        }
        REQUIRE(c >= 0);
        auto drop = [&](int32_t u, int32_t v) {
            adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
        };
        auto add = [&](int32_t u, int32_t v) {
            adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
        };
        drop(a, b); drop(b, a); drop(c, d); drop(d, c);
        add(a, c); add(c, a); add(b, d); add(d, b);
        NativeGraph broken;
        broken.vertices = n.g.vertices;
        broken.index = n.g.index;
        broken.adj = std::move(adj);
        const std::string p = temp_path("t_edge_swapped.drg");
        export_graph(broken, n.G.params, p);
        // the exhaustive profile check from root 0 (= a) catches the swap
        CHECK_THROWS_AS(load_graph(p), std::runtime_error);
        std::remove(p.c_str());
    }
}

TEST_CASE("uniqueness probes on the genuine graph") {
    Native273& n = native273();
    const ExternalGraph g = load_graph(n.path);

    // fixed pair at distance 2 through the id map
    auto [xs, ys] = witness_pair(n.G, 2, 137);
    const int32_t x = n.g.id_of(xs);
    const int32_t y = n.g.id_of(ys);

    const ProbeReport rep = run_uniqueness_probes(g, x, y);
    CHECK(rep.i == 2);

    // problem 1: spectrum within {120, -7}, one value per vertex
    CHECK(rep.p1.allowed == std::vector<Integer>{120, -7});
    CHECK(rep.p1.all_allowed);
    long total = 0;
    for (const auto& [v, cnt] : rep.p1.spectrum) total += cnt;
    CHECK(total == 11811);
    CHECK(rep.p1.spectrum.at(Rational(120)) == 651);   // k-spaces over a fixed 1-space
    CHECK(rep.p1.spectrum.at(Rational(-7)) == 11160);

    // the value at z' = x' itself: q^k[k-i][n-k] = 120
    // (x contains the meet, so it sits in the l = 0 class)
    CHECK(rep.p2.class_of[x] == 0);
    CHECK(rep.p2.class_values[0] == Rational(120));

    // problem 2: two classes, equitable
    CHECK(rep.p2.class_sizes == std::vector<long>{651, 11160});
    CHECK(rep.p2.equitable);

    // problem 3: the l = 0 class is geodesically closed with diameter 2
    CHECK(rep.l0_class_size == 651);
    CHECK(rep.p3.closed);
    CHECK(rep.p3.diameter == 2);
    CHECK(rep.p3_ok);

    // cross-oracle: the standalone entry points agree with the combined run
    const Problem1Result p1 = problem1_spectrum(g, x, y);
    CHECK(p1.spectrum == rep.p1.spectrum);
    CHECK(p1.all_allowed);
}

TEST_CASE("full-pipeline cross-oracle: rho machinery equals hat machinery") {
    // The distance-and-cosine route must reproduce the exact inner products
    // that the subspace-lattice route computes, vertex by vertex.
    Native273& n = native273();
    const ExternalGraph g = load_graph(n.path);
    RepSpace R(n.G);

    auto [xs, ys] = witness_pair(n.G, 2, 139);
    const int32_t x = n.g.id_of(xs);
    const int32_t y = n.g.id_of(ys);
    const Problem2Result p2 = problem2_partner_partition(g, x, y);

    const RepVector& hm = R.hat(meet(xs, ys));
    for (long v = 0; v < g.vertex_count(); ++v) {
        const Integer hat_val = R.inner(hm, R.hat(n.g.vertices[v]));
        CHECK(Rational(hat_val) == p2.class_values[p2.class_of[v]]);
    }
}

TEST_CASE("problem 3 edge cases") {
    Native273& n = native273();
    ExternalGraph g;
    g.params = n.G.params;
    g.adj = n.g.adj;

    const Problem3Result single = problem3_geodesic_closure(g, {0});
    CHECK(single.closed);
    CHECK(single.diameter == 0);

    const Problem3Result edge = problem3_geodesic_closure(g, {0, g.adj[0][0]});
    CHECK(edge.closed);
    CHECK(edge.diameter == 1);

    // a pair at distance 2 without its midpoints is not closed
    const std::vector<int> d0 = g.bfs(0);
    int32_t far = -1;
    for (long v = 0; v < g.vertex_count(); ++v) {
        if (d0[v] == 2) {
            far = static_cast<int32_t>(v);
            break;
        }
    }
    REQUIRE(far >= 0);
    const Problem3Result open = problem3_geodesic_closure(g, {0, far});
    CHECK_FALSE(open.closed);

    CHECK_THROWS_AS(problem3_geodesic_closure(g, {}), std::invalid_argument);
}

TEST_CASE("probe rejects pairs at the wrong distance") {
    Native273& n = native273();
    const ExternalGraph g = load_graph(n.path);
    CHECK_THROWS_AS(problem1_spectrum(g, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(problem1_spectrum(g, 0, g.adj[0][0]), std::invalid_argument);
}
