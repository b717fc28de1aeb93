#pragma once

#include "grassmann/graph.hpp"
#include "grassmann/qarith.hpp"
#include "grassmann/rep.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace grassmann {

enum class GramKind { Geometric, Mixed, Combinatorial };
enum class BasisVariant { Full, Bar, Check };
enum class Direction { GeoToComb, CombToGeo };

/// Exact integer table of pairwise inner products for a named basis.
/// Geometric and combinatorial tables are symmetric 4x4; the mixed table
/// has combinatorial-basis rows against geometric-basis columns.
struct GramTable {
    GramKind kind;
    long i = 0;
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<Integer>> entries;
};

/// Closed-form table for distance i, 1 < i < k.
GramTable gram_closed_form(GramKind kind, const QParams& P, long i);

/// The same table computed from actual hat vectors for a witness pair.
GramTable gram_empirical(const RepSpace& R, const Subspace& x, const Subspace& y, GramKind kind);

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
bool rat_is_identity(const RatMatrix& m);
Rational rat_det(RatMatrix m);

/// Closed-form inverse of the geometric Gram matrix M_i.
RatMatrix m_inverse(const QParams& P, long i);

struct TransitionMatrix {
    Direction dir;
    BasisVariant variant;
    long i = 0;
    std::vector<std::string> from_labels, to_labels;  // columns express to-basis over from-basis
    RatMatrix entries;
};

/// Transition matrices between the geometric and combinatorial bases
/// (full 4x4, bar 3x3, check 2x2); paired directions are exact inverses.
TransitionMatrix transition(Direction dir, BasisVariant variant, const QParams& P, long i);

/// det of the full geo->comb transition: -q^{k+i}[i-1][n-2k].
Rational transition_det_closed_form(const QParams& P, long i);

/// Coefficient columns of the B/C vectors (or bar/check relatives) over the
/// geometric basis of the corresponding fixed subspace.
struct GeometricCoeffs {
    BasisVariant variant;
    std::vector<std::string> basis_labels;
    std::vector<Integer> B, C;
};
GeometricCoeffs coeffs_in_geometric(BasisVariant variant, const QParams& P, long i);

Integer balance_zeta(const QParams& P, long i);  // q^{2i}[k-i][n-k-i]
Integer balance_xi(const QParams& P, long i);    // q[i][i-2]

/// B_xy and C_xy as exact hat-vector sums; requires 1 < d(x,y) < k.
std::pair<RepVector, RepVector> bc_vectors(const RepSpace& R, const Subspace& x,
                                           const Subspace& y);

/// Reconstructs hat(x meet y) and hat(x join y) from x-hat, y-hat and the
/// distance-defined B/C vectors only, per the chosen variant. Throws if the
/// rational combination fails to land on the integer lattice.
std::pair<RepVector, RepVector> recover_meet_join(const RepSpace& R, const Subspace& x,
                                                  const Subspace& y, BasisVariant variant);

/// (q^i+1)(x-hat + y-hat) - 2q^i hat(x meet y) - 2 hat(x join y): spans the
/// orthogonal complement of Fix(meet, join) inside the swap-fixed subspace.
RepVector perp_vector(const RepSpace& R, const Subspace& x, const Subspace& y);

/// Deterministic vertex pair at distance i: a standard adapted pair moved
/// by a seeded random GL element (seed 0 keeps the standard pair).
std::pair<Subspace, Subspace> witness_pair(const Geometry& G, long i, uint64_t seed);

/// A GL element swapping x and y: exchanges complements of the meet inside
/// x and y, identity elsewhere.
GLMatrix swap_sigma(const Geometry& G, const Subspace& x, const Subspace& y);

}  // namespace grassmann
