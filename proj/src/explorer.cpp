#include "grassmann/explorer.hpp"

#include "grassmann/recover.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace grassmann {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("graph file: " + msg); }

// Inner products of rho(x' meet y') against every vertex, from BFS
// distances and the cosine table only.
std::vector<Rational> rho_cap_inner_products(const ExternalGraph& g, int32_t x, int32_t y,
                                             long* i_out) {
    const QParams& P = g.params;
    const std::vector<int> dx = g.bfs(x);
    const long i = dx[y];
    if (!(1 < i && i < P.k)) {
        throw std::invalid_argument("uniqueness probe: require 1 < d(x,y) < k, got d = " +
                                    std::to_string(i));
    }
    if (i_out) *i_out = i;
    const std::vector<int> dy = g.bfs(y);

    std::vector<int32_t> B, C;
    for (int32_t z : g.adj[x]) {
        if (dy[z] == i + 1) B.push_back(z);
        if (dy[z] == i - 1) C.push_back(z);
    }

    const std::vector<Integer> w = cosine_table(P);
    const RhoCoeffs coeffs = rho_meet_join_coeffs(P, i);

    const long nverts = g.vertex_count();
    // Integer accumulation of the B/C cosine sums, rational combination last.
    std::vector<Integer> sumB(nverts, Integer(0)), sumC(nverts, Integer(0));
    for (int32_t b : B) {
        const std::vector<int> db = g.bfs(b);
        for (long z = 0; z < nverts; ++z) sumB[z] += w[db[z]];
    }
    for (int32_t c : C) {
        const std::vector<int> dc = g.bfs(c);
        for (long z = 0; z < nverts; ++z) sumC[z] += w[dc[z]];
    }

    std::vector<Rational> values(nverts);
    for (long z = 0; z < nverts; ++z) {
        values[z] = coeffs.cap[0] * Rational(w[dx[z]]) + coeffs.cap[1] * Rational(w[dy[z]]) +
                    coeffs.cap[2] * Rational(sumB[z]) + coeffs.cap[3] * Rational(sumC[z]);
    }
    return values;
}

Problem1Result spectrum_from_values(const std::vector<Rational>& values, const QParams& P,
                                    long i) {
    Problem1Result out;
    for (long l = 0; l <= P.k - i; ++l) {
        out.allowed.push_back(P.qi(P.n) * P.qi(P.k - i - l) - P.qi(P.k - i) * P.qi(P.k));
    }
    for (const Rational& v : values) ++out.spectrum[v];
    out.all_allowed = true;
    for (const auto& [v, cnt] : out.spectrum) {
        const bool hit = std::any_of(out.allowed.begin(), out.allowed.end(),
                                     [&](const Integer& a) { return Rational(a) == v; });
        if (!hit) {
            out.all_allowed = false;
            break;
        }
    }
    return out;
}

Problem2Result partition_from_values(const ExternalGraph& g, const std::vector<Rational>& values) {
    Problem2Result out;
    // Classes sorted by value, descending (the l = 0 value comes first on
    // a genuine Grassmann graph).
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.class_values = sorted;
    std::map<Rational, int32_t> idx;
    for (size_t c = 0; c < sorted.size(); ++c) idx[sorted[c]] = static_cast<int32_t>(c);

    const long nverts = g.vertex_count();
    out.class_of.resize(nverts);
    out.class_sizes.assign(sorted.size(), 0);
    for (long v = 0; v < nverts; ++v) {
        out.class_of[v] = idx.at(values[v]);
        ++out.class_sizes[out.class_of[v]];
    }

    // Equitable check, exact and exhaustive: within each class, every vertex
    // must see the same per-class neighbor counts.
    const size_t nclasses = sorted.size();
    std::vector<std::vector<long>> profile(nclasses);
    std::vector<bool> seen(nclasses, false);
    out.equitable = true;
    std::vector<long> counts(nclasses);
    for (long v = 0; v < nverts && out.equitable; ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int32_t w : g.adj[v]) ++counts[out.class_of[w]];
        const int32_t c = out.class_of[v];
        if (!seen[c]) {
            profile[c] = counts;
            seen[c] = true;
        } else if (profile[c] != counts) {
            out.equitable = false;
        }
    }
    return out;
}

}  // namespace

std::vector<int> ExternalGraph::bfs(int32_t src) const {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int32_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const int32_t v = queue.front();
        queue.pop_front();
        for (int32_t w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

ExternalGraph load_graph(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);

    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const size_t a = raw.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        lines.push_back(raw);
    }
    if (lines.size() < 2) fail("missing header lines");

    long q = 0, n = 0, k = 0;
    {
        std::istringstream hs(lines[0]);
        std::string tag;
        hs >> tag >> q >> n >> k;
        if (tag != "drg" || !hs) fail("first line must be 'drg q n k'");
    }
    ExternalGraph g;
    g.params = QParams::make(q, n, k);

    long declared = 0;
    {
        std::istringstream vs(lines[1]);
        std::string tag;
        vs >> tag >> declared;
        if (tag != "vertices" || !vs) fail("second line must be 'vertices N'");
    }
    const Integer expected = g.params.vertex_count();
    if (Integer(declared) != expected) {
        fail("vertex count " + std::to_string(declared) + " does not match " + expected.str() +
             " for J_" + std::to_string(q) + "(" + std::to_string(n) + "," + std::to_string(k) +
             ")");
    }
    if (lines.size() != static_cast<size_t>(declared) + 2) {
        fail("expected " + std::to_string(declared) + " adjacency lines, got " +
             std::to_string(lines.size() - 2));
    }

    g.adj.assign(declared, {});
    for (long v = 0; v < declared; ++v) {
        std::istringstream ls(lines[v + 2]);
        std::string head;
        ls >> head;
        if (head != std::to_string(v) + ":") {
            fail("adjacency line " + std::to_string(v) + " must start with '" + std::to_string(v) +
                 ":'");
        }
        long w;
        long prev = -1;
        while (ls >> w) {
            if (w < 0 || w >= declared) fail("neighbor id out of range on line for vertex " +
                                             std::to_string(v));
            if (w == v) fail("self-loop at vertex " + std::to_string(v));
            if (w <= prev) fail("neighbors not sorted strictly ascending at vertex " +
                                std::to_string(v));
            prev = w;
            g.adj[v].push_back(static_cast<int32_t>(w));
        }
    }

    // kappa-regularity and symmetry.
    const Integer kappa = g.params.valency;
    for (long v = 0; v < declared; ++v) {
        if (Integer(static_cast<long>(g.adj[v].size())) != kappa) {
            fail("vertex " + std::to_string(v) + " has degree " +
                 std::to_string(g.adj[v].size()) + ", expected " + kappa.str());
        }
        for (int32_t w : g.adj[v]) {
            if (!std::binary_search(g.adj[w].begin(), g.adj[w].end(), static_cast<int32_t>(v))) {
                fail("edge " + std::to_string(v) + "-" + std::to_string(w) + " is not symmetric");
            }
        }
    }

    // Connectivity.
    const std::vector<int> d0 = g.bfs(0);
    if (std::any_of(d0.begin(), d0.end(), [](int d) { return d < 0; })) {
        fail("graph is disconnected");
    }

    // Intersection-number check: from vertex 0 and a few random roots,
    // sphere sizes must match the intersection array, and every vertex y
    // must see exactly (c_h, a_h, b_h) neighbors at distances h-1, h, h+1
    // from the root, h = d(root, y).
    const std::vector<Integer> spheres = g.params.sphere_sizes();
    const long diam = g.params.k;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> pick(0, declared - 1);
    std::vector<long> roots{0};
    for (int t = 0; t < opts.sample_roots; ++t) roots.push_back(pick(rng));
    for (long root : roots) {
        const std::vector<int> dr = (root == 0) ? d0 : g.bfs(static_cast<int32_t>(root));
        std::vector<long> found(diam + 1, 0);
        for (int d : dr) {
            if (d > diam) fail("distance " + std::to_string(d) + " from vertex " +
                            std::to_string(root) + " exceeds the diameter k");
            ++found[d];
        }
        for (long h = 0; h <= diam; ++h) {
            if (Integer(found[h]) != spheres[h]) {
                fail("sphere of radius " + std::to_string(h) + " around vertex " +
                     std::to_string(root) + " has " + std::to_string(found[h]) +
                     " vertices, expected " + spheres[h].str());
            }
        }
        for (long y = 0; y < declared; ++y) {
            const long h = dr[y];
            if (h == 0) continue;
            long nb = 0, na = 0, nc = 0;
            for (int32_t z : g.adj[y]) {
                if (dr[z] == h + 1) ++nb;
                else if (dr[z] == h) ++na;
                else ++nc;
            }
            if (Integer(nb) != g.params.b[h] || Integer(na) != g.params.a[h] ||
                Integer(nc) != g.params.c[h]) {
                fail("intersection numbers at pair (" + std::to_string(root) + ", " +
                     std::to_string(y) + ") at distance " + std::to_string(h) + " are (" +
                     std::to_string(nb) + ", " + std::to_string(na) + ", " + std::to_string(nc) +
                     "), expected (" + g.params.b[h].str() + ", " + g.params.a[h].str() + ", " +
                     g.params.c[h].str() + ")");
            }
        }
    }
    return g;
}

void export_graph(const NativeGraph& g, const QParams& P, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_graph: cannot write " + path);
    out << "# Grassmann graph J_" << P.q << "(" << P.n << "," << P.k << ")\n";
    out << "drg " << P.q << " " << P.n << " " << P.k << "\n";
    out << "vertices " << g.vertices.size() << "\n";
    for (size_t v = 0; v < g.adj.size(); ++v) {
        out << v << ":";
        for (int32_t w : g.adj[v]) out << " " << w;
        out << "\n";
    }
    if (!out) throw std::runtime_error("export_graph: write failure on " + path);
}

std::vector<Integer> cosine_table(const QParams& P) {
    const Integer theta1 = P.theta[1];
    std::vector<Integer> w(P.k + 1);
    w[0] = qpow(P.q, P.k) * P.qi(P.k) * P.qi(P.n - P.k);
    for (long h = 0; h < P.k; ++h) {
        // c_h w_{h-1} + a_h w_h + b_h w_{h+1} = theta_1 w_h
        Integer rhs = theta1 * w[h] - P.a[h] * w[h];
        if (h > 0) rhs -= P.c[h] * w[h - 1];
        Integer quot, rem;
        boost::multiprecision::divide_qr(rhs, P.b[h], quot, rem);
        if (rem != 0) {
            throw std::logic_error("cosine_table: recurrence left the integers");
        }
        w[h + 1] = quot;
    }
    for (long h = 0; h <= P.k; ++h) {
        const Integer closed = P.qi(P.n) * P.qi(P.k - h) - P.qi(P.k) * P.qi(P.k);
        if (w[h] != closed) {
            throw std::logic_error("cosine_table: recurrence value " + w[h].str() +
                                   " at distance " + std::to_string(h) +
                                   " disagrees with closed form " + closed.str());
        }
    }
    return w;
}

RhoCoeffs rho_meet_join_coeffs(const QParams& P, long i) {
    const TransitionMatrix tr = transition(Direction::CombToGeo, BasisVariant::Full, P, i);
    RhoCoeffs rc;
    for (int t = 0; t < 4; ++t) {
        rc.cap[t] = tr.entries[t][2];
        rc.plus[t] = tr.entries[t][3];
    }
    return rc;
}

Problem1Result problem1_spectrum(const ExternalGraph& g, int32_t x, int32_t y) {
    long i = 0;
    const std::vector<Rational> values = rho_cap_inner_products(g, x, y, &i);
    return spectrum_from_values(values, g.params, i);
}

Problem2Result problem2_partner_partition(const ExternalGraph& g, int32_t x, int32_t y) {
    const std::vector<Rational> values = rho_cap_inner_products(g, x, y, nullptr);
    return partition_from_values(g, values);
}

Problem3Result problem3_geodesic_closure(const ExternalGraph& g,
                                         const std::vector<int32_t>& vertex_set) {
    if (vertex_set.empty()) {
        throw std::invalid_argument("problem3_geodesic_closure: empty vertex set");
    }
    const long nverts = g.vertex_count();
    std::vector<bool> in_set(nverts, false);
    for (int32_t v : vertex_set) in_set[v] = true;

    std::vector<std::vector<int>> dist;
    dist.reserve(vertex_set.size());
    for (int32_t v : vertex_set) dist.push_back(g.bfs(v));

    Problem3Result out;
    out.closed = true;
    out.diameter = 0;
    // Closure via geodesic predecessors: for every (a, b) in the set, each
    // neighbor of b one step closer to a must lie in the set; induction on
    // distance covers the interior of every geodesic.
    for (size_t ai = 0; ai < vertex_set.size(); ++ai) {
        const std::vector<int>& da = dist[ai];
        for (int32_t b : vertex_set) {
            const int d = da[b];
            if (d > out.diameter) out.diameter = d;
            if (d <= 1) continue;
            for (int32_t w : g.adj[b]) {
                if (da[w] == d - 1 && !in_set[w]) {
                    out.closed = false;
                    return out;
                }
            }
        }
    }
    return out;
}

ProbeReport run_uniqueness_probes(const ExternalGraph& g, int32_t x, int32_t y) {
    ProbeReport rep;
    const std::vector<Rational> values = rho_cap_inner_products(g, x, y, &rep.i);
    rep.p1 = spectrum_from_values(values, g.params, rep.i);
    rep.p2 = partition_from_values(g, values);

    const Rational l0_value(rep.p1.allowed.front());  // l = 0 entry
    std::vector<int32_t> l0_class;
    for (long v = 0; v < g.vertex_count(); ++v) {
        if (values[v] == l0_value) l0_class.push_back(static_cast<int32_t>(v));
    }
    rep.l0_class_size = static_cast<long>(l0_class.size());
    if (!l0_class.empty()) {
        rep.p3 = problem3_geodesic_closure(g, l0_class);
        rep.p3_ok = rep.p3.closed && rep.p3.diameter == rep.i;
    }
    return rep;
}

}  // namespace grassmann
