#pragma once

#include "grassmann/graph.hpp"
#include "grassmann/qarith.hpp"
#include "grassmann/subspace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace grassmann {

/// Exact integer vector of length [n] indexed by PointId. Coordinates hold
/// the scaled lift: the point vector for s is [n] e_s - 1 (all-ones), so a
/// subspace hat is [n] chi_Omega(u) - [dim u] * 1. Inner products divide the
/// coordinate dot product by [n], which recovers the unscaled values exactly.
class RepVector {
public:
    RepVector() = default;
    explicit RepVector(size_t len) : coords_(len) {}

    size_t size() const { return coords_.size(); }
    Integer& operator[](size_t i) { return coords_[i]; }
    const Integer& operator[](size_t i) const { return coords_[i]; }

    bool is_zero() const;
    Integer coordinate_sum() const;

    RepVector& operator+=(const RepVector& o);
    RepVector& operator-=(const RepVector& o);
    RepVector& operator*=(const Integer& c);
    friend RepVector operator+(RepVector a, const RepVector& b) { return a += b; }
    friend RepVector operator-(RepVector a, const RepVector& b) { return a -= b; }
    friend RepVector operator*(const Integer& c, RepVector a) { return a *= c; }
    bool operator==(const RepVector& o) const { return coords_ == o.coords_; }
    bool operator!=(const RepVector& o) const { return !(*this == o); }

private:
    std::vector<Integer> coords_;
};

/// The hat machinery over a geometry's point space, with a memo keyed by
/// canonical subspace form.
class RepSpace {
public:
    explicit RepSpace(const Geometry& G) : G_(G) {}

    const Geometry& geometry() const { return G_; }
    long dim_ambient() const { return G_.points.count(); }  // [n]

    /// The lift of u-hat; memoized per canonical form.
    const RepVector& hat(const Subspace& u) const;
    RepVector point_hat(PointId s) const;

    /// sum of hats over a family, accumulated directly (no memo traffic);
    /// cost is sum of |Omega(u)| rather than family-size * [n].
    RepVector hat_sum(const std::vector<Subspace>& family) const;

    /// <a, b> = dot(a, b)/[n]; throws if the division is inexact (the
    /// argument is then not in the integer span of the point hats).
    Integer inner(const RepVector& a, const RepVector& b) const;

    /// [n][h] - [i][j] with i = dim u, j = dim v, h = dim(u meet v);
    /// rejects inconsistent dimension triples.
    static Integer predicted_inner(long dim_u, long dim_v, long dim_meet, const QParams& P);

    /// sum_{z in Gamma(x)} z-hat - theta_1 x-hat; zero iff the eigen-sum
    /// identity holds for x.
    RepVector theta1_residual(const Subspace& x) const;

    struct KernelCheck {
        bool sum_is_zero = false;
        bool coeffs_constant = false;
        bool consistent() const { return sum_is_zero == coeffs_constant; }
    };
    /// Tests sum alpha_s s-hat = 0 against "alpha constant"; missing
    /// coefficients are treated as zero.
    KernelCheck kernel_constant_check(const std::map<PointId, Rational>& coeffs) const;

private:
    const Geometry& G_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, std::unique_ptr<RepVector>> memo_;
};

/// Rank over the rationals of integer row vectors, by fraction-free
/// (Bareiss) elimination.
long int_rank(std::vector<std::vector<Integer>> m);

long rep_rank(const std::vector<RepVector>& vectors);

}  // namespace grassmann
