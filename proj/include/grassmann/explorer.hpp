#pragma once

#include "grassmann/graph.hpp"
#include "grassmann/qarith.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace grassmann {

/// Adjacency structure loaded from file for representation experiments on
/// graphs that claim Grassmann intersection numbers. Distances here always
/// come from BFS; nothing assumes the graph actually is J_q(n,k).
struct ExternalGraph {
    QParams params;
    std::vector<std::vector<int32_t>> adj;  // sorted neighbor ids

    long vertex_count() const { return static_cast<long>(adj.size()); }
    std::vector<int> bfs(int32_t src) const;
};

struct LoadOptions {
    int sample_roots = 3;  // extra BFS roots for the intersection-number check
    uint64_t seed = 1;
};

/// Parses and validates the documented text format:
///   line 1: "drg q n k"; line 2: "vertices N"; then N lines "v: n1 n2 ...".
/// Blank lines and '#' comments are ignored. Validation covers parameter
/// sanity, vertex count, sortedness, symmetry, simplicity, connectivity,
/// kappa-regularity, and sampled b_i/c_i counts.
ExternalGraph load_graph(const std::string& path, const LoadOptions& opts = {});

/// Writes the materialized native graph in the same format.
void export_graph(const NativeGraph& g, const QParams& P, const std::string& path);

/// Distance-indexed inner products w_0..w_k of the theta_1 representation
/// normalized to |rho|^2 = q^k[k][n-k], computed from the three-term
/// recurrence and checked against the closed form [n][k-i] - [k]^2.
std::vector<Integer> cosine_table(const QParams& P);

/// Coefficient 4-tuples over (rho(x'), rho(y'), B_{x'y'}, C_{x'y'}) used to
/// mimic hat(x meet y) and hat(x join y) in an external graph.
struct RhoCoeffs {
    std::array<Rational, 4> cap;   // mimics hat(x meet y)
    std::array<Rational, 4> plus;  // mimics hat(x join y)
};
RhoCoeffs rho_meet_join_coeffs(const QParams& P, long i);

struct Problem1Result {
    std::map<Rational, long> spectrum;  // observed value -> multiplicity
    std::vector<Integer> allowed;       // [n][k-i-l] - [k-i][k], 0 <= l <= k-i
    bool all_allowed = false;
};

struct Problem2Result {
    std::vector<int32_t> class_of;      // vertex -> class index
    std::vector<Rational> class_values; // sorted descending
    std::vector<long> class_sizes;
    bool equitable = false;
};

struct Problem3Result {
    bool closed = false;
    long diameter = -1;
};

Problem1Result problem1_spectrum(const ExternalGraph& g, int32_t x, int32_t y);
Problem2Result problem2_partner_partition(const ExternalGraph& g, int32_t x, int32_t y);
Problem3Result problem3_geodesic_closure(const ExternalGraph& g,
                                         const std::vector<int32_t>& vertex_set);

/// Runs all three probes for one pair, sharing the BFS work: problem 3 is
/// applied to the class attaining the l = 0 value with expected diameter
/// d(x,y).
struct ProbeReport {
    long i = 0;
    Problem1Result p1;
    Problem2Result p2;
    Problem3Result p3;
    long l0_class_size = -1;  // -1 when the l = 0 value is not attained
    bool p3_ok = false;
};
ProbeReport run_uniqueness_probes(const ExternalGraph& g, int32_t x, int32_t y);

}  // namespace grassmann
