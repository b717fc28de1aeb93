#include "grassmann/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace grassmann {

Subspace Geometry::standard_k_subspace() const {
    std::vector<Row> rows(params.k, Row(params.n, 0));
    for (long i = 0; i < params.k; ++i) rows[i][i] = 1;
    return Subspace::rref(F, params.n, rows);
}

long distance(const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("distance: vertices must have equal dimension");
    }
    return x.dim() - meet(x, y).dim();
}

std::vector<Subspace> neighbors(const Geometry& G, const Subspace& x) {
    const long k = G.params.k;
    if (x.dim() != k) {
        throw std::invalid_argument("neighbors: vertex must have dimension k");
    }
    const Field& F = G.F;
    const long n = G.params.n;

    // Points outside x, as rows.
    std::vector<PointId> inside = G.points.omega(x);
    std::vector<bool> in_x(G.points.count(), false);
    for (PointId s : inside) in_x[s] = true;

    std::vector<Subspace> out;
    std::unordered_set<std::string> seen;
    // Hyperplanes of x: coefficient (k-1)-subspaces of F_q^k mapped through
    // x's basis rows.
    for (const Subspace& cw : enumerate_rref(F, k, k - 1)) {
        std::vector<Row> wrows;
        wrows.reserve(k - 1);
        for (const Row& c : cw.rows()) {
            Row v(n, 0);
            for (long r = 0; r < k; ++r) {
                if (!c[r]) continue;
                for (long j = 0; j < n; ++j) {
                    v[j] = F.add(v[j], F.mul(c[r], x.row(r)[j]));
                }
            }
            wrows.push_back(std::move(v));
        }
        for (PointId s = 0; s < G.points.count(); ++s) {
            if (in_x[s]) continue;
            std::vector<Row> zrows = wrows;
            zrows.push_back(G.points.rep(s));
            Subspace z = Subspace::rref(F, n, zrows);
            if (seen.insert(z.key()).second) out.push_back(std::move(z));
        }
    }
    return out;
}

BCSets bc_sets(const Geometry& G, const Subspace& x, const Subspace& y) {
    const long i = distance(x, y);
    if (!(1 < i && i < G.params.k)) {
        throw std::invalid_argument("bc_sets: require 1 < d(x,y) < k");
    }
    BCSets out;
    for (Subspace& z : neighbors(G, x)) {
        const long dyz = distance(y, z);
        if (dyz == i + 1) {
            out.B.push_back(std::move(z));
        } else if (dyz == i - 1) {
            out.C.push_back(std::move(z));
        }
    }
    return out;
}

NativeGraph NativeGraph::build(const Geometry& G, size_t cap) {
    const Integer total = G.params.vertex_count();
    if (total > Integer(cap)) {
        throw std::runtime_error("NativeGraph: vertex count " + total.str() +
                                 " exceeds cap " + std::to_string(cap));
    }
    NativeGraph g;
    for_each_rref(G.F, G.params.n, G.params.k, [&](const Subspace& s) {
        g.index.emplace(s.key(), static_cast<int32_t>(g.vertices.size()));
        g.vertices.push_back(s);
        return true;
    });
    g.adj.resize(g.vertices.size());
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        std::vector<int32_t> ids;
        for (const Subspace& z : neighbors(G, g.vertices[v])) {
            ids.push_back(g.index.at(z.key()));
        }
        std::sort(ids.begin(), ids.end());
        g.adj[v] = std::move(ids);
    }
    return g;
}

int32_t NativeGraph::id_of(const Subspace& x) const {
    auto it = index.find(x.key());
    if (it == index.end()) throw std::invalid_argument("NativeGraph: unknown vertex");
    return it->second;
}

std::vector<int> NativeGraph::bfs(int32_t src) const {
    std::vector<int> dist(vertices.size(), -1);
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

OrbitPartition stab_partition_p1(const Geometry& G, const Subspace& u, const Subspace& v) {
    const long n = G.params.n;
    if (u.dim() == 0 || u.dim() == n || v.dim() == 0 || v.dim() == n) {
        throw std::invalid_argument("stab_partition_p1: u, v must be proper nonzero subspaces");
    }
    if (u == v) {
        throw std::invalid_argument("stab_partition_p1: u and v must be distinct");
    }

    const long npts = G.points.count();
    std::vector<bool> in_u(npts, false), in_v(npts, false), in_m(npts, false), in_j(npts, false);
    for (PointId s : G.points.omega(u)) in_u[s] = true;
    for (PointId s : G.points.omega(v)) in_v[s] = true;
    const Subspace m = meet(u, v);
    const Subspace j = join(u, v);
    for (PointId s : G.points.omega(m)) in_m[s] = true;
    for (PointId s : G.points.omega(j)) in_j[s] = true;

    const bool u_in_v = v.contains(u);
    const bool v_in_u = u.contains(v);
    const bool meet_zero = (m.dim() == 0);
    const bool join_full = (j.dim() == n);

    OrbitPartition part;
    auto cell = [&](auto&& pred) {
        std::vector<PointId> ids;
        for (PointId s = 0; s < npts; ++s) {
            if (pred(s)) ids.push_back(s);
        }
        part.cells.push_back(std::move(ids));
    };

    if (u_in_v) {
        part.case_id = 5;
        cell([&](PointId s) { return in_u[s]; });
        cell([&](PointId s) { return in_v[s] && !in_u[s]; });
        cell([&](PointId s) { return !in_v[s]; });
    } else if (v_in_u) {
        part.case_id = 6;
        cell([&](PointId s) { return in_v[s]; });
        cell([&](PointId s) { return in_u[s] && !in_v[s]; });
        cell([&](PointId s) { return !in_u[s]; });
    } else if (!meet_zero && !join_full) {
        part.case_id = 1;
        cell([&](PointId s) { return in_m[s]; });
        cell([&](PointId s) { return in_u[s] && !in_m[s]; });
        cell([&](PointId s) { return in_v[s] && !in_m[s]; });
        cell([&](PointId s) { return in_j[s] && !in_u[s] && !in_v[s]; });
        cell([&](PointId s) { return !in_j[s]; });
    } else if (!meet_zero && join_full) {
        part.case_id = 2;
        cell([&](PointId s) { return in_m[s]; });
        cell([&](PointId s) { return in_u[s] && !in_m[s]; });
        cell([&](PointId s) { return in_v[s] && !in_m[s]; });
        cell([&](PointId s) { return !in_u[s] && !in_v[s]; });
    } else if (meet_zero && !join_full) {
        part.case_id = 3;
        cell([&](PointId s) { return in_u[s]; });
        cell([&](PointId s) { return in_v[s]; });
        cell([&](PointId s) { return in_j[s] && !in_u[s] && !in_v[s]; });
        cell([&](PointId s) { return !in_j[s]; });
    } else {
        part.case_id = 4;
        cell([&](PointId s) { return in_u[s]; });
        cell([&](PointId s) { return in_v[s]; });
        cell([&](PointId s) { return !in_u[s] && !in_v[s]; });
    }
    return part;
}

}  // namespace grassmann
