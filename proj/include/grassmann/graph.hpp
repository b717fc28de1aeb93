#pragma once

#include "grassmann/qarith.hpp"
#include "grassmann/subspace.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace grassmann {

/// Shared immutable context for one parameter triple: field, projective
/// points, and the validated parameters.
struct Geometry {
    QParams params;
    const Field& F;
    PointSpace points;

    explicit Geometry(const QParams& P)
        : params(P), F(Field::get(P.q)), points(F, P.n) {}

    Subspace standard_k_subspace() const;  // span{e_0..e_{k-1}}
};

/// Path-length distance in J_q(n,k), computed algebraically as
/// k - dim(x meet y). Valid for the native Grassmann graph only.
long distance(const Subspace& x, const Subspace& y);

/// The kappa = q[k][n-k] vertices adjacent to x, generated locally as
/// {w + s : w a hyperplane of x, s a point outside x}, deduplicated.
std::vector<Subspace> neighbors(const Geometry& G, const Subspace& x);

struct BCSets {
    std::vector<Subspace> B;  // z in Gamma(x) with d(y,z) = d(x,y)+1
    std::vector<Subspace> C;  // z in Gamma(x) with d(y,z) = d(x,y)-1
};

/// Requires 1 < d(x,y) < k.
BCSets bc_sets(const Geometry& G, const Subspace& x, const Subspace& y);

/// The fully materialized graph, for the BFS oracle and for export.
struct NativeGraph {
    std::vector<Subspace> vertices;               // enumerate_rref order
    std::unordered_map<std::string, int32_t> index;  // Subspace::key -> id
    std::vector<std::vector<int32_t>> adj;        // sorted neighbor ids

    /// Refuses when the vertex count exceeds cap.
    static NativeGraph build(const Geometry& G, size_t cap = 50000);

    int32_t id_of(const Subspace& x) const;
    std::vector<int> bfs(int32_t src) const;  // distances; -1 unreachable
};

/// Orbit partition of P_1 under the containment-defined cells for the
/// stabilizer of the distinct proper pair (u, v); case_id follows the
/// six-way split: 1..4 by (meet nonzero?, join full?) for incomparable
/// pairs, 5 for u in v, 6 for v in u.
struct OrbitPartition {
    int case_id = 0;
    std::vector<std::vector<PointId>> cells;
};

OrbitPartition stab_partition_p1(const Geometry& G, const Subspace& u, const Subspace& v);

}  // namespace grassmann
