#include "grassmann/recover.hpp"

#include <stdexcept>

namespace grassmann {

namespace {

void require_mid_distance(long i, const QParams& P, const char* who) {
    if (!(1 < i && i < P.k)) {
        throw std::invalid_argument(std::string(who) + ": require 1 < i < k, got i = " +
                                    std::to_string(i));
    }
}

Integer to_integer(const Rational& r, const char* who) {
    if (boost::multiprecision::denominator(r) != 1) {
        throw std::logic_error(std::string(who) + ": non-integer value " + r.str());
    }
    return boost::multiprecision::numerator(r);
}

const std::vector<std::string> kGeoLabels = {"x_hat", "y_hat", "meet_hat", "join_hat"};
const std::vector<std::string> kCombLabels = {"x_hat", "y_hat", "B", "C"};
const std::vector<std::string> kBarGeoLabels = {"x_hat+y_hat", "meet_hat", "join_hat"};
const std::vector<std::string> kBarCombLabels = {"x_hat+y_hat", "B_bar", "C_bar"};
const std::vector<std::string> kCheckGeoLabels = {"meet_hat", "join_hat"};
const std::vector<std::string> kCheckCombLabels = {"B_check", "C_check"};

}  // namespace

GramTable gram_closed_form(GramKind kind, const QParams& P, long i) {
    require_mid_distance(i, P, "gram_closed_form");
    const long q = P.q, n = P.n, k = P.k;
    auto Q = [&](long m) { return P.qi(m); };
    auto pw = [&](long e) { return qpow_r(q, e); };

    const Integer g_xx = qpow(q, k) * Q(k) * Q(n - k);
    const Integer g_xy = Q(n) * Q(k - i) - Q(k) * Q(k);
    const Integer g_xm = qpow(q, k) * Q(k - i) * Q(n - k);
    const Integer g_xj = qpow(q, k + i) * Q(k) * Q(n - k - i);
    const Integer g_mm = qpow(q, k - i) * Q(k - i) * Q(n - k + i);
    const Integer g_mj = qpow(q, k + i) * Q(k - i) * Q(n - k - i);
    const Integer g_jj = qpow(q, k + i) * Q(k + i) * Q(n - k - i);

    const Integer bi = P.b[i];
    const Integer ci = P.c[i];
    const Integer Bx = bi * (Q(n) * Q(k - 1) - Q(k) * Q(k));
    const Integer By = bi * (Q(n) * Q(k - i - 1) - Q(k) * Q(k));
    const Integer Bm = bi * (Q(n) * Q(k - i - 1) - Q(k - i) * Q(k));
    const Integer Bj = bi * (Q(n) * Q(k - 1) - Q(k) * Q(k + i));
    const Integer Cx = ci * (Q(n) * Q(k - 1) - Q(k) * Q(k));
    const Integer Cy = ci * (Q(n) * Q(k - i + 1) - Q(k) * Q(k));
    const Integer Cm = qpow(q, k) * ci * Q(k - i) * Q(n - k);
    const Integer Cj = qpow(q, k + i) * ci * Q(k) * Q(n - k - i);

    GramTable t;
    t.kind = kind;
    t.i = i;
    switch (kind) {
        case GramKind::Geometric:
            t.row_labels = t.col_labels = kGeoLabels;
            t.entries = {{g_xx, g_xy, g_xm, g_xj},
                         {g_xy, g_xx, g_xm, g_xj},
                         {g_xm, g_xm, g_mm, g_mj},
                         {g_xj, g_xj, g_mj, g_jj}};
            break;
        case GramKind::Mixed:
            t.row_labels = kCombLabels;
            t.col_labels = kGeoLabels;
            t.entries = {{g_xx, g_xy, g_xm, g_xj},
                         {g_xy, g_xx, g_xm, g_xj},
                         {Bx, By, Bm, Bj},
                         {Cx, Cy, Cm, Cj}};
            break;
        case GramKind::Combinatorial: {
            // <B,B>: the q^{k-i-2} factor can carry a negative exponent at
            // i = k-1; the assembled entry is still an integer.
            const Rational bb =
                Rational(qpow(q, 4 * i + 2) * Q(k - i) * Q(n - k - i)) *
                (pw(k - i - 2) * Rational(Q(n) * (Q(k - i) + Q(n - k - i))) +
                 Rational(Q(k - i) * Q(n - k - i) * (Q(n) * Q(k - 2) - Q(k) * Q(k))));
            const Integer BB = to_integer(bb, "gram <B,B>");
            const Integer BC =
                qpow(q, 2 * i + 1) * Q(k - i) * Q(n - k - i) * ci * (Q(n) * Q(k - 2) - Q(k) * Q(k));
            const Integer CC =
                ci * (qpow(q, k - 2) * Q(n) * (2 * q * Q(i - 1) + q + 1) +
                      ci * (Q(n) * Q(k - 2) - Q(k) * Q(k)));
            t.row_labels = t.col_labels = kCombLabels;
            t.entries = {{g_xx, g_xy, Bx, Cx},
                         {g_xy, g_xx, By, Cy},
                         {Bx, By, BB, BC},
                         {Cx, Cy, BC, CC}};
            break;
        }
    }
    return t;
}

GramTable gram_empirical(const RepSpace& R, const Subspace& x, const Subspace& y,
                         GramKind kind) {
    const QParams& P = R.geometry().params;
    const long i = distance(x, y);
    require_mid_distance(i, P, "gram_empirical");

    const RepVector& hx = R.hat(x);
    const RepVector& hy = R.hat(y);
    const RepVector& hm = R.hat(meet(x, y));
    const RepVector& hj = R.hat(join(x, y));
    auto [B, C] = bc_vectors(R, x, y);

    std::vector<const RepVector*> rows, cols;
    GramTable t;
    t.kind = kind;
    t.i = i;
    switch (kind) {
        case GramKind::Geometric:
            rows = cols = {&hx, &hy, &hm, &hj};
            t.row_labels = t.col_labels = kGeoLabels;
            break;
        case GramKind::Mixed:
            rows = {&hx, &hy, &B, &C};
            cols = {&hx, &hy, &hm, &hj};
            t.row_labels = kCombLabels;
            t.col_labels = kGeoLabels;
            break;
        case GramKind::Combinatorial:
            rows = cols = {&hx, &hy, &B, &C};
            t.row_labels = t.col_labels = kCombLabels;
            break;
    }
    t.entries.assign(rows.size(), std::vector<Integer>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            t.entries[r][c] = R.inner(*rows[r], *cols[c]);
        }
    }
    return t;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    const size_t nr = a.size(), inner = b.size(), nc = b[0].size();
    RatMatrix out(nr, std::vector<Rational>(nc, Rational(0)));
    for (size_t r = 0; r < nr; ++r) {
        for (size_t t = 0; t < inner; ++t) {
            if (a[r][t] == 0) continue;
            for (size_t c = 0; c < nc; ++c) out[r][c] += a[r][t] * b[t][c];
        }
    }
    return out;
}

bool rat_is_identity(const RatMatrix& m) {
    for (size_t r = 0; r < m.size(); ++r) {
        for (size_t c = 0; c < m[r].size(); ++c) {
            if (m[r][c] != Rational(r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

Rational rat_det(RatMatrix m) {
    const size_t n = m.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

RatMatrix m_inverse(const QParams& P, long i) {
    require_mid_distance(i, P, "m_inverse");
    const long q = P.q, n = P.n, k = P.k;
    auto Q = [&](long m) { return Rational(P.qi(m)); };
    const Rational qi = Rational(qpow(q, i));
    const Rational pref =
        Rational(1) / (Rational(qpow(q, k - i)) * Rational(q - 1) * Q(i) * Q(i) * Q(n));
    RatMatrix m = {
        {qi, 1, -qi, -1},
        {1, qi, -qi, -1},
        {-qi, -qi, (qi * Q(k) - Q(i)) / Q(k - i), 1},
        {-1, -1, 1, (qi * Q(n - k) - Q(i)) / (Rational(qpow(q, 2 * i)) * Q(n - k - i))}};
    for (auto& row : m) {
        for (Rational& e : row) e *= pref;
    }
    return m;
}

TransitionMatrix transition(Direction dir, BasisVariant variant, const QParams& P, long i) {
    require_mid_distance(i, P, "transition");
    const long q = P.q, n = P.n, k = P.k;
    auto Q = [&](long m) { return Rational(P.qi(m)); };
    auto pw = [&](long e) { return qpow_r(q, e); };
    const Rational d = Q(n - 2 * k);   // [n-2k], nonzero since n > 2k
    const Rational im1 = Q(i - 1);     // [i-1], nonzero since i > 1

    TransitionMatrix t;
    t.dir = dir;
    t.variant = variant;
    t.i = i;

    if (dir == Direction::GeoToComb) {
        switch (variant) {
            case BasisVariant::Full:
                t.from_labels = kGeoLabels;
                t.to_labels = kCombLabels;
                t.entries = {{1, 0, pw(2 * i) * Q(k - i) * Q(n - k - i), Rational(q) * im1 * im1},
                             {0, 1, 0, pw(i - 1)},
                             {0, 0, -pw(2 * i) * Q(n - k - i), pw(i) * im1},
                             {0, 0, -pw(i) * Q(k - i), im1}};
                break;
            case BasisVariant::Bar:
                t.from_labels = kBarGeoLabels;
                t.to_labels = kBarCombLabels;
                t.entries = {{1, 0, pw(i - 1)},
                             {0, -pw(2 * i) * Q(n - k - i), pw(i) * im1},
                             {0, -pw(i) * Q(k - i), im1}};
                break;
            case BasisVariant::Check:
                t.from_labels = kCheckGeoLabels;
                t.to_labels = kCheckCombLabels;
                t.entries = {{-pw(2 * i) * Q(n - k - i), pw(i) * im1},
                             {-pw(i) * Q(k - i), im1}};
                break;
        }
        return t;
    }

    // CombToGeo: columns express the geometric basis over the combinatorial.
    const Rational c_mx = Q(k - i) * Q(n - k - 1) / (pw(k - 1) * d);
    const Rational c_my = Q(k - i) / (pw(k - i + 1) * im1 * d);
    const Rational c_mB = Rational(-1) / (pw(k + i) * d);
    const Rational c_mC = -Q(k - i) / (pw(k) * im1 * d);
    const Rational c_jx = -Q(k - 1) * Q(n - k - i) / (pw(k - i - 1) * d);
    const Rational c_jy = -Q(n - k - i) / (pw(k - 2 * i + 1) * im1 * d);
    const Rational c_jB = Rational(1) / (pw(k) * d);
    const Rational c_jC = Q(n - k - i) / (pw(k - i) * im1 * d);

    switch (variant) {
        case BasisVariant::Full:
            t.from_labels = kCombLabels;
            t.to_labels = kGeoLabels;
            t.entries = {{1, 0, c_mx, c_jx}, {0, 1, c_my, c_jy}, {0, 0, c_mB, c_jB},
                         {0, 0, c_mC, c_jC}};
            break;
        case BasisVariant::Bar:
            t.from_labels = kBarCombLabels;
            t.to_labels = kBarGeoLabels;
            t.entries = {{1, c_my, c_jy}, {0, c_mB, c_jB}, {0, c_mC, c_jC}};
            break;
        case BasisVariant::Check:
            t.from_labels = kCheckCombLabels;
            t.to_labels = kCheckGeoLabels;
            t.entries = {{c_mB, c_jB}, {c_mC, c_jC}};
            break;
    }
    return t;
}

Rational transition_det_closed_form(const QParams& P, long i) {
    require_mid_distance(i, P, "transition_det_closed_form");
    return -Rational(qpow(P.q, P.k + i) * P.qi(i - 1) * P.qi(P.n - 2 * P.k));
}

GeometricCoeffs coeffs_in_geometric(BasisVariant variant, const QParams& P, long i) {
    require_mid_distance(i, P, "coeffs_in_geometric");
    const long q = P.q, n = P.n, k = P.k;
    auto Q = [&](long m) { return P.qi(m); };

    const Integer B_m = -qpow(q, 2 * i) * Q(n - k - i);
    const Integer B_j = -qpow(q, i) * Q(k - i);
    const Integer C_m = qpow(q, i) * Q(i - 1);
    const Integer C_j = Q(i - 1);

    GeometricCoeffs gc;
    gc.variant = variant;
    switch (variant) {
        case BasisVariant::Full:
            gc.basis_labels = kGeoLabels;
            gc.B = {qpow(q, 2 * i) * Q(k - i) * Q(n - k - i), 0, B_m, B_j};
            gc.C = {q * Q(i - 1) * Q(i - 1), qpow(q, i - 1), C_m, C_j};
            break;
        case BasisVariant::Bar:
            gc.basis_labels = kBarGeoLabels;
            gc.B = {0, B_m, B_j};
            gc.C = {qpow(q, i - 1), C_m, C_j};
            break;
        case BasisVariant::Check:
            gc.basis_labels = kCheckGeoLabels;
            gc.B = {B_m, B_j};
            gc.C = {C_m, C_j};
            break;
    }
    return gc;
}

Integer balance_zeta(const QParams& P, long i) {
    require_mid_distance(i, P, "balance_zeta");
    return qpow(P.q, 2 * i) * P.qi(P.k - i) * P.qi(P.n - P.k - i);
}

Integer balance_xi(const QParams& P, long i) {
    require_mid_distance(i, P, "balance_xi");
    return P.q * P.qi(i) * P.qi(i - 2);
}

std::pair<RepVector, RepVector> bc_vectors(const RepSpace& R, const Subspace& x,
                                           const Subspace& y) {
    const BCSets sets = bc_sets(R.geometry(), x, y);
    return {R.hat_sum(sets.B), R.hat_sum(sets.C)};
}

std::pair<RepVector, RepVector> recover_meet_join(const RepSpace& R, const Subspace& x,
                                                  const Subspace& y, BasisVariant variant) {
    const Geometry& G = R.geometry();
    const QParams& P = G.params;
    const long i = distance(x, y);
    require_mid_distance(i, P, "recover_meet_join");

    const RepVector& hx = R.hat(x);
    const RepVector& hy = R.hat(y);
    auto [B, C] = bc_vectors(R, x, y);

    std::vector<RepVector> basis;
    switch (variant) {
        case BasisVariant::Full: {
            basis = {hx, hy, std::move(B), std::move(C)};
            break;
        }
        case BasisVariant::Bar: {
            RepVector hxy = hx;
            hxy += hy;
            RepVector Bbar = std::move(B);
            RepVector zx = hx;
            zx *= balance_zeta(P, i);
            Bbar -= zx;
            RepVector Cbar = std::move(C);
            RepVector xx = hx;
            xx *= balance_xi(P, i);
            Cbar -= xx;
            basis = {std::move(hxy), std::move(Bbar), std::move(Cbar)};
            break;
        }
        case BasisVariant::Check: {
            RepVector hxy = hx;
            hxy += hy;
            RepVector Bbar = std::move(B);
            RepVector zx = hx;
            zx *= balance_zeta(P, i);
            Bbar -= zx;
            RepVector Cbar = std::move(C);
            RepVector xx = hx;
            xx *= balance_xi(P, i);
            Cbar -= xx;
            RepVector Cchk = std::move(Cbar);
            RepVector sxy = hxy;
            sxy *= qpow(P.q, i - 1);
            Cchk -= sxy;
            basis = {std::move(Bbar), std::move(Cchk)};
            break;
        }
    }

    const TransitionMatrix tr = transition(Direction::CombToGeo, variant, P, i);
    const size_t dim = basis.size();
    const size_t meet_col = tr.entries[0].size() - 2;
    const size_t join_col = tr.entries[0].size() - 1;
    const long npts = G.points.count();

    auto combine = [&](size_t col) {
        std::vector<Rational> acc(npts, Rational(0));
        for (size_t t = 0; t < dim; ++t) {
            const Rational& coef = tr.entries[t][col];
            if (coef == 0) continue;
            for (long s = 0; s < npts; ++s) acc[s] += coef * Rational(basis[t][s]);
        }
        RepVector out(static_cast<size_t>(npts));
        for (long s = 0; s < npts; ++s) {
            out[s] = to_integer(acc[s], "recover_meet_join");
        }
        return out;
    };

    return {combine(meet_col), combine(join_col)};
}

RepVector perp_vector(const RepSpace& R, const Subspace& x, const Subspace& y) {
    const QParams& P = R.geometry().params;
    const long i = distance(x, y);
    require_mid_distance(i, P, "perp_vector");
    RepVector v = R.hat(x);
    v += R.hat(y);
    v *= qpow(P.q, i) + 1;
    RepVector m2 = R.hat(meet(x, y));
    m2 *= 2 * qpow(P.q, i);
    v -= m2;
    RepVector j2 = R.hat(join(x, y));
    j2 *= 2;
    v -= j2;
    return v;
}

std::pair<Subspace, Subspace> witness_pair(const Geometry& G, long i, uint64_t seed) {
    const QParams& P = G.params;
    if (i < 0 || i > P.k) {
        throw std::domain_error("witness_pair: require 0 <= i <= k");
    }
    // x = span{e_0..e_{k-1}}, y = span{e_0..e_{k-i-1}, e_k..e_{k+i-1}}:
    // the meet is the common (k-i)-dim block.
    std::vector<Row> xr, yr;
    for (long t = 0; t < P.k; ++t) {
        Row r(P.n, 0);
        r[t] = 1;
        xr.push_back(std::move(r));
    }
    for (long t = 0; t < P.k - i; ++t) {
        Row r(P.n, 0);
        r[t] = 1;
        yr.push_back(std::move(r));
    }
    for (long t = 0; t < i; ++t) {
        Row r(P.n, 0);
        r[P.k + t] = 1;
        yr.push_back(std::move(r));
    }
    Subspace x = Subspace::rref(G.F, P.n, xr);
    Subspace y = Subspace::rref(G.F, P.n, yr);
    if (seed != 0) {
        const GLMatrix sigma = gl_random(G.F, P.n, seed);
        x = gl_apply(G.F, sigma, x);
        y = gl_apply(G.F, sigma, y);
    }
    return {std::move(x), std::move(y)};
}

GLMatrix swap_sigma(const Geometry& G, const Subspace& x, const Subspace& y) {
    const Field& F = G.F;
    const long n = G.params.n;
    const Subspace m = meet(x, y);
    const Subspace j = join(x, y);
    const std::vector<Row> R = m.rows();
    const std::vector<Row> S = extend_basis(F, m, x);
    const std::vector<Row> T = extend_basis(F, m, y);
    if (S.size() != T.size()) {
        throw std::invalid_argument("swap_sigma: vertices of different dimension");
    }
    const std::vector<Row> Q = extend_basis(F, j, Subspace::full(F, n));

    GLMatrix basis, swapped;
    auto append = [](GLMatrix& dst, const std::vector<Row>& rows) {
        dst.insert(dst.end(), rows.begin(), rows.end());
    };
    append(basis, R);
    append(basis, S);
    append(basis, T);
    append(basis, Q);
    append(swapped, R);
    append(swapped, T);
    append(swapped, S);
    append(swapped, Q);

    return gl_mul(F, gl_inverse(F, basis), swapped);
}

}  // namespace grassmann
