#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace grassmann {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q-integer [m] = (q^m - 1)/(q - 1). Rejects m < 0.
Integer qint(long m, long q);

/// q-factorial [m]! = [m][m-1]...[1], with [0]! = 1.
Integer qfactorial(long m, long q);

/// Gaussian binomial coefficient: the number of r-dimensional subspaces
/// of an m-dimensional space over F_q. Rejects r < 0 or r > m.
Integer gauss_binom(long m, long r, long q);

/// q^e for e >= 0.
Integer qpow(long q, long e);

/// q^e for any integer e, as an exact rational.
Rational qpow_r(long q, long e);

/// True iff q = p^e for a prime p and e >= 1; reports p and e when asked.
bool is_prime_power(long q, long* p_out = nullptr, long* e_out = nullptr);

/// Validated parameter triple (q, n, k) with n > 2k >= 6, plus the derived
/// graph data: q-integer table, valency, intersection numbers, eigenvalues.
struct QParams {
    long q = 0;
    long n = 0;
    long k = 0;
    std::vector<Integer> qints;  // [0..n]
    Integer valency;             // kappa = q[k][n-k]
    std::vector<Integer> b;      // b_i = q^{2i+1}[k-i][n-k-i], 0..k
    std::vector<Integer> a;      // a_i = kappa - b_i - c_i
    std::vector<Integer> c;      // c_i = [i]^2
    std::vector<Integer> theta;  // theta_i = q^{i+1}[k-i][n-k-i] - [i]

    static QParams make(long q, long n, long k);

    /// [m] from the precomputed table; falls back to qint for m > n.
    Integer qi(long m) const;

    Integer eigenvalue(long i) const;

    /// Sphere sizes k_0..k_k around a vertex, k_{i+1} = k_i b_i / c_{i+1}.
    std::vector<Integer> sphere_sizes() const;

    /// Number of vertices of J_q(n,k).
    Integer vertex_count() const;
};

}  // namespace grassmann
