#pragma once

#include "grassmann/gf.hpp"
#include "grassmann/qarith.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace grassmann {

using Row = std::vector<uint8_t>;
using GLMatrix = std::vector<Row>;  // n rows of length n
using PointId = int32_t;

/// A subspace of F_q^n held in reduced row-echelon form: leading ones,
/// strictly increasing pivot columns, zeros above and below each pivot.
/// The form is unique per subspace, so equality is memberwise equality.
class Subspace {
public:
    /// Canonical form of the span of the given rows (empty list -> zero space).
    static Subspace rref(const Field& F, long n, const std::vector<Row>& rows);
    static Subspace zero(const Field& F, long n);
    static Subspace full(const Field& F, long n);

    long n() const { return n_; }
    long dim() const { return static_cast<long>(rows_.size()); }
    long q() const { return q_; }
    const std::vector<Row>& rows() const { return rows_; }
    const Row& row(long i) const { return rows_[i]; }

    /// True iff other is contained in this subspace.
    bool contains(const Subspace& other) const;
    bool contains_vector(const Row& v) const;

    bool operator==(const Subspace& o) const {
        return q_ == o.q_ && n_ == o.n_ && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Byte key for hashing/indexing (canonical form makes this injective).
    std::string key() const;

    /// One line per basis row, entries as integers separated by spaces,
    /// rows joined by ';'. The zero subspace serializes as "-".
    std::string serialize() const;
    static Subspace parse(const Field& F, long n, const std::string& text);

private:
    Subspace(const Field& F, long n) : q_(F.q()), n_(n) {}
    long q_;
    long n_;
    std::vector<Row> rows_;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const { return std::hash<std::string>()(s.key()); }
};

Subspace meet(const Subspace& u, const Subspace& v);
Subspace join(const Subspace& u, const Subspace& v);

/// All ell-dimensional subspaces of F_q^n, each exactly once, in a fixed
/// deterministic order: pivot-column sets ascending lexicographically,
/// then free entries counted in base q (row-major, last slot fastest).
std::vector<Subspace> enumerate_rref(const Field& F, long n, long ell);

/// Streaming variant of enumerate_rref; stops early if fn returns false.
void for_each_rref(const Field& F, long n, long ell,
                   const std::function<bool(const Subspace&)>& fn);

/// The projective points P_1 of F_q^n. A point is identified by its
/// normalized representative (first nonzero coordinate = 1); PointIds
/// run 0..[n]-1 in lexicographic order of those representatives.
class PointSpace {
public:
    PointSpace(const Field& F, long n);

    long count() const { return static_cast<long>(reps_.size()); }
    const Field& field() const { return F_; }
    long n() const { return n_; }

    const Row& rep(PointId s) const { return reps_[s]; }
    PointId id_of_vector(const Row& v) const;  // any nonzero vector
    PointId id_of_point(const Subspace& s) const;
    Subspace point(PointId s) const;

    /// PointIds of the 1-dim subspaces contained in u, sorted ascending;
    /// cardinality [dim u].
    std::vector<PointId> omega(const Subspace& u) const;

private:
    const Field& F_;
    long n_;
    std::vector<Row> reps_;
    std::unordered_map<uint64_t, PointId> lookup_;  // packed rep -> id
    uint64_t pack(const Row& v) const;
};

// --- GL(V) -----------------------------------------------------------------

GLMatrix gl_identity(long n);
bool gl_is_invertible(const Field& F, const GLMatrix& m);
GLMatrix gl_mul(const Field& F, const GLMatrix& lhs, const GLMatrix& rhs);
GLMatrix gl_inverse(const Field& F, const GLMatrix& m);

/// Uniform-ish random invertible matrix by rejection sampling; deterministic
/// given the seed.
GLMatrix gl_random(const Field& F, long n, uint64_t seed);

Row apply_row(const Field& F, const Row& v, const GLMatrix& sigma);  // v * sigma
Subspace gl_apply(const Field& F, const GLMatrix& sigma, const Subspace& u);

/// Extends the rows of `base` (independent) to a basis of `target` using
/// target's canonical rows; returns only the added rows.
std::vector<Row> extend_basis(const Field& F, const Subspace& base, const Subspace& target);

}  // namespace grassmann
