#include "grassmann/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassmann {

bool RepVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

Integer RepVector::coordinate_sum() const {
    Integer acc = 0;
    for (const Integer& x : coords_) acc += x;
    return acc;
}

RepVector& RepVector::operator+=(const RepVector& o) {
    if (size() != o.size()) throw std::invalid_argument("RepVector: size mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

RepVector& RepVector::operator-=(const RepVector& o) {
    if (size() != o.size()) throw std::invalid_argument("RepVector: size mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

RepVector& RepVector::operator*=(const Integer& c) {
    for (Integer& x : coords_) x *= c;
    return *this;
}

const RepVector& RepSpace::hat(const Subspace& u) const {
    const std::string key = u.key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return *it->second;
    }
    const long npts = G_.points.count();
    auto vec = std::make_unique<RepVector>(static_cast<size_t>(npts));
    const std::vector<PointId> om = G_.points.omega(u);
    const Integer size_om = static_cast<long>(om.size());
    for (long s = 0; s < npts; ++s) (*vec)[s] = -size_om;
    for (PointId s : om) (*vec)[s] += npts;
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(key, std::move(vec));
    return *it->second;
}

RepVector RepSpace::point_hat(PointId s) const {
    const long npts = G_.points.count();
    RepVector v(static_cast<size_t>(npts));
    for (long t = 0; t < npts; ++t) v[t] = -1;
    v[s] += npts;
    return v;
}

RepVector RepSpace::hat_sum(const std::vector<Subspace>& family) const {
    const long npts = G_.points.count();
    RepVector acc(static_cast<size_t>(npts));
    Integer omega_total = 0;
    for (const Subspace& u : family) {
        const std::vector<PointId> om = G_.points.omega(u);
        omega_total += static_cast<long>(om.size());
        for (PointId s : om) acc[s] += npts;
    }
    for (long s = 0; s < npts; ++s) acc[s] -= omega_total;
    return acc;
}

Integer RepSpace::inner(const RepVector& a, const RepVector& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("inner: size mismatch");
    Integer dot = 0;
    for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    Integer quot, rem;
    boost::multiprecision::divide_qr(dot, Integer(G_.points.count()), quot, rem);
    if (rem != 0) {
        throw std::logic_error("inner: dot product not divisible by [n]; "
                               "operand is not a representation vector");
    }
    return quot;
}

Integer RepSpace::predicted_inner(long dim_u, long dim_v, long dim_meet, const QParams& P) {
    const long lo = std::max(0L, dim_u + dim_v - P.n);
    const long hi = std::min(dim_u, dim_v);
    if (dim_u < 0 || dim_u > P.n || dim_v < 0 || dim_v > P.n || dim_meet < lo || dim_meet > hi) {
        throw std::invalid_argument("predicted_inner: inconsistent dimensions");
    }
    return P.qi(P.n) * P.qi(dim_meet) - P.qi(dim_u) * P.qi(dim_v);
}

RepVector RepSpace::theta1_residual(const Subspace& x) const {
    if (x.dim() != G_.params.k) {
        throw std::invalid_argument("theta1_residual: vertex must have dimension k");
    }
    RepVector acc = hat_sum(neighbors(G_, x));
    RepVector scaled = hat(x);
    scaled *= G_.params.theta[1];
    acc -= scaled;
    return acc;
}

RepSpace::KernelCheck RepSpace::kernel_constant_check(
    const std::map<PointId, Rational>& coeffs) const {
    const long npts = G_.points.count();
    // Work with the lifts over rationals: sum_s alpha_s ([n] e_s - 1).
    std::vector<Rational> v(npts, Rational(0));
    Rational total = 0;
    for (const auto& [s, alpha] : coeffs) {
        if (s < 0 || s >= npts) throw std::invalid_argument("kernel_constant_check: bad PointId");
        v[s] += Rational(npts) * alpha;
        total += alpha;
    }
    KernelCheck out;
    out.sum_is_zero = true;
    for (long s = 0; s < npts; ++s) {
        if (v[s] - total != 0) {
            out.sum_is_zero = false;
            break;
        }
    }
    out.coeffs_constant = true;
    const Rational first = coeffs.count(0) ? coeffs.at(0) : Rational(0);
    for (PointId s = 0; s < npts; ++s) {
        const Rational alpha = coeffs.count(s) ? coeffs.at(s) : Rational(0);
        if (alpha != first) {
            out.coeffs_constant = false;
            break;
        }
    }
    return out;
}

long int_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const size_t ncols = m[0].size();
    size_t rank = 0;
    Integer prev = 1;
    for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const Integer piv = m[rank][col];
        for (size_t r = rank + 1; r < m.size(); ++r) {
            for (size_t j = col + 1; j < ncols; ++j) {
                m[r][j] = (m[r][j] * piv - m[r][col] * m[rank][j]) / prev;
            }
            m[r][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return static_cast<long>(rank);
}

long rep_rank(const std::vector<RepVector>& vectors) {
    std::vector<std::vector<Integer>> m;
    m.reserve(vectors.size());
    for (const RepVector& v : vectors) {
        std::vector<Integer> row(v.size());
        for (size_t i = 0; i < v.size(); ++i) row[i] = v[i];
        m.push_back(std::move(row));
    }
    return int_rank(std::move(m));
}

}  // namespace grassmann
