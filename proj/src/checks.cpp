#include "grassmann/checks.hpp"

#include "grassmann/explorer.hpp"
#include "grassmann/graph.hpp"
#include "grassmann/recover.hpp"
#include "grassmann/rep.hpp"
#include "grassmann/subspace.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace grassmann {

namespace {

class Runner {
public:
    Runner(const QParams& P, const VerifyOptions& opts)
        : P_(P), opts_(opts), G_(P), R_(G_), rng_(opts.seed) {}

    std::vector<CheckResult> run();

private:
    const QParams& P_;
    VerifyOptions opts_;
    Geometry G_;
    RepSpace R_;
    std::mt19937_64 rng_;
    std::vector<CheckResult> results_;

    void check(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();  // empty or summary on success
            r.passed = true;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results_.push_back(std::move(r));
    }

    [[noreturn]] static void bad(const std::string& msg) { throw std::runtime_error(msg); }

    uint64_t draw() { return rng_(); }

    Subspace random_vertex() {
        return gl_apply(G_.F, gl_random(G_.F, P_.n, draw()), G_.standard_k_subspace());
    }

    Subspace random_subspace(long dim_hint) {
        std::vector<Row> rows(dim_hint, Row(P_.n, 0));
        std::uniform_int_distribution<int> d(0, static_cast<int>(P_.q) - 1);
        for (auto& r : rows) {
            for (auto& e : r) e = static_cast<uint8_t>(d(rng_));
        }
        return Subspace::rref(G_.F, P_.n, rows);
    }

    // Exact rank of a family of hat vectors known to lie in the sum-zero
    // hyperplane: a mod-p rank certifies >=, the exact coordinate sums
    // certify <=. Used where full Bareiss elimination would be slow.
    bool hat_family_rank_is(const std::vector<const RepVector*>& vecs, long expected) {
        static constexpr int64_t p = 1000003;
        for (const RepVector* v : vecs) {
            if (v->coordinate_sum() != 0) bad("hat vector with nonzero coordinate sum");
        }
        std::vector<std::vector<int64_t>> m(vecs.size());
        for (size_t r = 0; r < vecs.size(); ++r) {
            m[r].resize(vecs[r]->size());
            for (size_t c = 0; c < m[r].size(); ++c) {
                m[r][c] = static_cast<int64_t>((*vecs[r])[c] % p);
                if (m[r][c] < 0) m[r][c] += p;
            }
        }
        const size_t ncols = m.empty() ? 0 : m[0].size();
        size_t rank = 0;
        for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
            size_t piv = rank;
            while (piv < m.size() && m[piv][col] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[rank], m[piv]);
            // modular inverse by Fermat
            int64_t inv = 1, base = m[rank][col] % p, e = p - 2;
            while (e) {
                if (e & 1) inv = (__int128)inv * base % p;
                base = (__int128)base * base % p;
                e >>= 1;
            }
            for (size_t r = rank + 1; r < m.size(); ++r) {
                if (m[r][col] == 0) continue;
                const int64_t f = (__int128)m[r][col] * inv % p;
                for (size_t c = col; c < ncols; ++c) {
                    m[r][c] = (m[r][c] - (__int128)f * m[rank][c]) % p;
                    if (m[r][c] < 0) m[r][c] += p;
                }
            }
            ++rank;
        }
        // rank_mod_p <= rank_Q <= [n]-1; equality of the bounds pins it.
        return static_cast<long>(rank) == expected;
    }

    void arithmetic_checks();
    void field_and_lattice_checks();
    void representation_checks();
    void graph_checks();
    void fixsubspace_checks();
    void explorer_checks();
};

void Runner::arithmetic_checks() {
    check("parameter-closed-forms", [&] {
        if (P_.b[0] != P_.valency) bad("b_0 != valency");
        if (P_.a[0] != 0) bad("a_0 != 0");
        if (P_.c[1] != 1) bad("c_1 != 1");
        for (long i = 0; i <= P_.k; ++i) {
            if (P_.b[i] + P_.a[i] + P_.c[i] != P_.valency) {
                bad("b+a+c != valency at i = " + std::to_string(i));
            }
        }
        if (P_.theta[0] != P_.valency) bad("theta_0 != valency");
        for (long i = 0; i < P_.k; ++i) {
            if (P_.theta[i] <= P_.theta[i + 1]) bad("eigenvalues not strictly decreasing");
        }
        const Integer t1 = qpow(P_.q, 2) * P_.qi(P_.k - 1) * P_.qi(P_.n - P_.k - 1) - 1;
        if (P_.theta[1] != t1) bad("theta_1 mismatch with q^2[k-1][n-k-1]-1");
        return "valency " + P_.valency.str();
    });

    check("qbinom-pivot-count", [&] {
        // Independent count of ell-dim subspaces: sum over pivot-column
        // patterns of q^(number of free entries).
        for (long ell = 0; ell <= P_.n; ++ell) {
            Integer total = 0;
            std::vector<long> piv(ell);
            for (long t = 0; t < ell; ++t) piv[t] = t;
            if (ell == 0) {
                total = 1;
            } else {
                for (;;) {
                    long free_cnt = 0;
                    for (long r = 0; r < ell; ++r) free_cnt += P_.n - piv[r] - (ell - r);
                    total += qpow(P_.q, free_cnt);
                    long t = ell - 1;
                    while (t >= 0 && piv[t] == P_.n - ell + t) --t;
                    if (t < 0) break;
                    ++piv[t];
                    for (long u = t + 1; u < ell; ++u) piv[u] = piv[u - 1] + 1;
                }
            }
            if (total != gauss_binom(P_.n, ell, P_.q)) {
                bad("pivot-pattern count disagrees at ell = " + std::to_string(ell));
            }
        }
        return "";
    });

    check("sphere-size-sum", [&] {
        const std::vector<Integer> sizes = P_.sphere_sizes();
        Integer total = 0;
        for (const Integer& s : sizes) total += s;
        if (total != P_.vertex_count()) bad("sphere sizes sum " + total.str() + " != vertex count");
        return "total " + total.str();
    });
}

void Runner::field_and_lattice_checks() {
    check("field-axioms", [&] {
        const Field& F = G_.F;
        const long q = P_.q;
        for (long x = 0; x < q; ++x) {
            if (F.add(x, 0) != x || F.mul(x, 1) != x) bad("identity axiom");
            if (F.add(x, F.neg(x)) != 0) bad("additive inverse");
            if (x != 0 && F.mul(x, F.inv(x)) != 1) bad("multiplicative inverse");
            for (long y = 0; y < q; ++y) {
                if (F.add(x, y) != F.add(y, x) || F.mul(x, y) != F.mul(y, x)) bad("commutativity");
                for (long z = 0; z < q; ++z) {
                    if (F.add(F.add(x, y), z) != F.add(x, F.add(y, z))) bad("add associativity");
                    if (F.mul(F.mul(x, y), z) != F.mul(x, F.mul(y, z))) bad("mul associativity");
                    if (F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z))) {
                        bad("distributivity");
                    }
                }
            }
        }
        return "q = " + std::to_string(q) + " exhaustive";
    });

    check("rref-canonical-uniqueness", [&] {
        std::uniform_int_distribution<long> dd(0, P_.n);
        std::uniform_int_distribution<int> de(0, static_cast<int>(P_.q) - 1);
        for (long t = 0; t < opts_.sample; ++t) {
            const Subspace u = random_subspace(dd(rng_));
            // Random respanning: mix rows through a random invertible
            // coefficient matrix plus redundant combinations.
            if (u.dim() == 0) continue;
            const GLMatrix mix = gl_random(G_.F, u.dim(), draw());
            std::vector<Row> rows;
            for (long r = 0; r < u.dim(); ++r) {
                Row v(P_.n, 0);
                for (long s = 0; s < u.dim(); ++s) {
                    if (!mix[r][s]) continue;
                    for (long j = 0; j < P_.n; ++j) {
                        v[j] = G_.F.add(v[j], G_.F.mul(mix[r][s], u.row(s)[j]));
                    }
                }
                rows.push_back(std::move(v));
            }
            std::vector<uint8_t> co(u.dim());
            for (auto& cc : co) cc = static_cast<uint8_t>(de(rng_));
            Row extra(P_.n, 0);
            for (long r = 0; r < u.dim(); ++r) {
                if (!co[r]) continue;
                for (long j = 0; j < P_.n; ++j) {
                    extra[j] = G_.F.add(extra[j], G_.F.mul(co[r], u.row(r)[j]));
                }
            }
            rows.push_back(extra);
            if (Subspace::rref(G_.F, P_.n, rows) != u) bad("respanned set canonicalized differently");
        }
        return "";
    });

    check("lattice-modularity", [&] {
        std::uniform_int_distribution<long> dd(0, P_.n);
        for (long t = 0; t < opts_.sample; ++t) {
            const Subspace u = random_subspace(dd(rng_));
            const Subspace v = random_subspace(dd(rng_));
            if (u.dim() + v.dim() != meet(u, v).dim() + join(u, v).dim()) {
                bad("dim u + dim v != dim meet + dim join for " + u.serialize() + " | " +
                    v.serialize());
            }
        }
        return "";
    });

    check("lattice-laws", [&] {
        std::uniform_int_distribution<long> dd(0, P_.n);
        const Subspace V = Subspace::full(G_.F, P_.n);
        const Subspace O = Subspace::zero(G_.F, P_.n);
        for (long t = 0; t < opts_.sample / 2; ++t) {
            const Subspace u = random_subspace(dd(rng_));
            const Subspace v = random_subspace(dd(rng_));
            const Subspace w = random_subspace(dd(rng_));
            if (meet(u, V) != u || join(u, O) != u) bad("identity element law");
            if (meet(u, u) != u || join(u, u) != u) bad("idempotence");
            if (meet(u, v) != meet(v, u) || join(u, v) != join(v, u)) bad("commutativity");
            if (meet(meet(u, v), w) != meet(u, meet(v, w))) bad("meet associativity");
            if (join(join(u, v), w) != join(u, join(v, w))) bad("join associativity");
            if (meet(u, join(u, v)) != u || join(u, meet(u, v)) != u) bad("absorption");
        }
        return "";
    });

    check("omega-cardinality", [&] {
        std::uniform_int_distribution<long> dd(0, P_.n);
        for (long t = 0; t < opts_.sample; ++t) {
            const Subspace u = random_subspace(dd(rng_));
            const Subspace v = random_subspace(dd(rng_));
            if (Integer(static_cast<long>(G_.points.omega(u).size())) != P_.qi(u.dim())) {
                bad("|Omega(u)| != [dim u] for " + u.serialize());
            }
            std::vector<PointId> a = G_.points.omega(u), b = G_.points.omega(v), inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (inter != G_.points.omega(meet(u, v))) {
                bad("Omega(u) cap Omega(v) != Omega(u cap v)");
            }
        }
        return "";
    });
}

void Runner::representation_checks() {
    check("point-hat-gram", [&] {
        const long npts = G_.points.count();
        const Integer diag = Integer(npts) - 1;
        const bool full = npts <= 150;
        std::uniform_int_distribution<long> dp(0, npts - 1);
        long pairs = 0;
        auto probe = [&](PointId s, PointId t) {
            const Integer ip = R_.inner(R_.point_hat(s), R_.point_hat(t));
            const Integer expect = (s == t) ? diag : Integer(-1);
            if (ip != expect) {
                bad("point-hat inner (" + std::to_string(s) + "," + std::to_string(t) + ") = " +
                    ip.str());
            }
            ++pairs;
        };
        if (full) {
            for (PointId s = 0; s < npts; ++s) {
                for (PointId t = s; t < npts; ++t) probe(s, t);
            }
        } else {
            for (long r = 0; r < opts_.sample * 10; ++r) probe(dp(rng_), dp(rng_));
        }
        return (full ? "all " : "sampled ") + std::to_string(pairs) + " pairs";
    });

    check("point-hat-sum-zero", [&] {
        RepVector acc(static_cast<size_t>(G_.points.count()));
        for (PointId s = 0; s < G_.points.count(); ++s) acc += R_.point_hat(s);
        if (!acc.is_zero()) bad("sum of point hats is nonzero");
        return "";
    });

    check("point-hat-rank", [&] {
        const long npts = G_.points.count();
        if (npts <= 150) {
            std::vector<RepVector> hats;
            for (PointId s = 0; s < npts; ++s) hats.push_back(R_.point_hat(s));
            if (rep_rank(hats) != npts - 1) bad("rank of all point hats != [n]-1");
        } else {
            std::vector<RepVector> store;
            std::vector<const RepVector*> hats;
            for (PointId s = 0; s < npts; ++s) store.push_back(R_.point_hat(s));
            for (const RepVector& v : store) hats.push_back(&v);
            if (!hat_family_rank_is(hats, npts - 1)) bad("rank of all point hats != [n]-1");
        }
        return "rank " + std::to_string(npts - 1);
    });

    check("kernel-constant", [&] {
        std::map<PointId, Rational> all_ones;
        for (PointId s = 0; s < G_.points.count(); ++s) all_ones[s] = 1;
        auto r1 = R_.kernel_constant_check(all_ones);
        if (!r1.sum_is_zero || !r1.coeffs_constant) bad("constant coefficients should vanish");
        auto r2 = R_.kernel_constant_check({{PointId(0), Rational(1)}});
        if (r2.sum_is_zero || r2.coeffs_constant) bad("single indicator should not vanish");
        return "";
    });

    check("inner-product-law", [&] {
        std::uniform_int_distribution<long> dd(0, P_.n);
        for (long t = 0; t < opts_.sample; ++t) {
            const Subspace u = random_subspace(dd(rng_));
            const Subspace v = random_subspace(dd(rng_));
            const Integer got = R_.inner(R_.hat(u), R_.hat(v));
            const Integer expect =
                RepSpace::predicted_inner(u.dim(), v.dim(), meet(u, v).dim(), P_);
            if (got != expect) {
                bad("inner law fails: got " + got.str() + ", expected " + expect.str() + " for " +
                    u.serialize() + " | " + v.serialize());
            }
        }
        return "";
    });

    check("gl-isometry", [&] {
        std::uniform_int_distribution<long> dd(0, P_.n);
        for (long t = 0; t < opts_.sample / 4; ++t) {
            const Subspace u = random_subspace(dd(rng_));
            const Subspace v = random_subspace(dd(rng_));
            const GLMatrix sigma = gl_random(G_.F, P_.n, draw());
            const Integer lhs = R_.inner(R_.hat(u), R_.hat(v));
            const Integer rhs =
                R_.inner(R_.hat(gl_apply(G_.F, sigma, u)), R_.hat(gl_apply(G_.F, sigma, v)));
            if (lhs != rhs) bad("inner product not GL-invariant");
        }
        return "";
    });

    check("eigen-sum", [&] {
        const long reps = std::max(3L, opts_.sample / 10);
        for (long t = 0; t < reps; ++t) {
            const Subspace x = random_vertex();
            if (!R_.theta1_residual(x).is_zero()) {
                bad("neighbor hat sum != theta_1 * hat for " + x.serialize());
            }
        }
        return "theta_1 = " + P_.theta[1].str();
    });

    check("vertex-hat-span", [&] {
        const long npts = G_.points.count();
        const long count = npts + 20;  // enough vectors to reach rank [n]-1
        std::vector<const RepVector*> hats;
        std::vector<Subspace> verts;
        for (long t = 0; t < count; ++t) verts.push_back(random_vertex());
        for (const Subspace& x : verts) hats.push_back(&R_.hat(x));
        if (npts <= 150) {
            std::vector<RepVector> copy;
            for (auto* h : hats) copy.push_back(*h);
            if (rep_rank(copy) != npts - 1) bad("vertex hats do not span");
        } else {
            if (!hat_family_rank_is(hats, npts - 1)) bad("vertex hats do not span");
        }
        return std::to_string(count) + " vertices, rank " + std::to_string(npts - 1);
    });
}

void Runner::graph_checks() {
    check("neighbor-count", [&] {
        for (long t = 0; t < std::max(2L, opts_.sample / 40); ++t) {
            const Subspace x = random_vertex();
            const auto nb = neighbors(G_, x);
            if (Integer(static_cast<long>(nb.size())) != P_.valency) {
                bad("|Gamma(x)| = " + std::to_string(nb.size()));
            }
            for (const Subspace& z : nb) {
                if (distance(x, z) != 1) bad("generated neighbor not at distance 1");
            }
        }
        return "valency " + P_.valency.str();
    });

    check("empirical-p-numbers", [&] {
        const long per = std::max(5L, opts_.sample / 10);
        for (long h = 1; h <= P_.k; ++h) {
            for (long t = 0; t < per; ++t) {
                auto [x, y] = witness_pair(G_, h, draw());
                long nb = 0, na = 0, nc = 0;
                for (const Subspace& z : neighbors(G_, x)) {
                    const long d = distance(y, z);
                    if (d == h + 1) ++nb;
                    else if (d == h) ++na;
                    else if (d == h - 1) ++nc;
                }
                if (Integer(nb) != P_.b[h] || Integer(na) != P_.a[h] || Integer(nc) != P_.c[h]) {
                    bad("(b,a,c) at distance " + std::to_string(h) + " = (" + std::to_string(nb) +
                        "," + std::to_string(na) + "," + std::to_string(nc) + ")");
                }
            }
        }
        return "";
    });

    check("stab-partition", [&] {
        for (long i = 1; i <= P_.k; ++i) {
            auto [x, y] = witness_pair(G_, i, draw());
            const OrbitPartition part = stab_partition_p1(G_, x, y);
            const int expected_case = (i < P_.k) ? 1 : 3;
            if (part.case_id != expected_case) {
                bad("case id " + std::to_string(part.case_id) + " at distance " +
                    std::to_string(i));
            }
            std::vector<bool> seen(G_.points.count(), false);
            long total = 0;
            for (const auto& cell : part.cells) {
                for (PointId s : cell) {
                    if (seen[s]) bad("cells overlap");
                    seen[s] = true;
                    ++total;
                }
            }
            if (total != G_.points.count()) bad("cells do not cover P_1");
        }
        return "";
    });

    check("distance-vs-bfs", [&] {
        if (P_.vertex_count() > Integer(static_cast<long>(opts_.cap))) {
            return std::string("skipped: vertex count ") + P_.vertex_count().str() +
                   " exceeds cap " + std::to_string(opts_.cap);
        }
        const NativeGraph g = NativeGraph::build(G_, opts_.cap);
        std::uniform_int_distribution<size_t> dv(0, g.vertices.size() - 1);
        const size_t src = dv(rng_);
        const std::vector<int> dist = g.bfs(static_cast<int32_t>(src));
        for (long t = 0; t < opts_.sample; ++t) {
            const size_t w = dv(rng_);
            if (dist[w] != distance(g.vertices[src], g.vertices[w])) {
                bad("BFS distance disagrees with k - dim(meet)");
            }
        }
        const std::vector<Integer> sizes = P_.sphere_sizes();
        std::vector<long> found(P_.k + 1, 0);
        for (int d : dist) {
            if (d < 0 || d > P_.k) bad("BFS reached distance outside 0..k");
            ++found[d];
        }
        for (long h = 0; h <= P_.k; ++h) {
            if (Integer(found[h]) != sizes[h]) bad("sphere size mismatch at distance " +
                                                   std::to_string(h));
        }
        return std::string("sphere sizes verified from BFS");
    });
}

void Runner::fixsubspace_checks() {
    check("gram-tables", [&] {
        for (long i = 2; i < P_.k; ++i) {
            auto [x, y] = witness_pair(G_, i, draw());
            for (GramKind kind :
                 {GramKind::Geometric, GramKind::Mixed, GramKind::Combinatorial}) {
                if (gram_closed_form(kind, P_, i).entries !=
                    gram_empirical(R_, x, y, kind).entries) {
                    bad("gram table mismatch at i = " + std::to_string(i));
                }
            }
        }
        return "";
    });

    check("m-inverse", [&] {
        for (long i = 2; i < P_.k; ++i) {
            const GramTable g = gram_closed_form(GramKind::Geometric, P_, i);
            RatMatrix M(4, std::vector<Rational>(4));
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) M[r][c] = Rational(g.entries[r][c]);
            }
            if (!rat_is_identity(rat_mul(M, m_inverse(P_, i)))) {
                bad("M_i * inverse != I at i = " + std::to_string(i));
            }
        }
        return "";
    });

    check("transition-inverses", [&] {
        for (long i = 2; i < P_.k; ++i) {
            for (BasisVariant v : {BasisVariant::Full, BasisVariant::Bar, BasisVariant::Check}) {
                const auto fwd = transition(Direction::GeoToComb, v, P_, i);
                const auto bwd = transition(Direction::CombToGeo, v, P_, i);
                if (!rat_is_identity(rat_mul(fwd.entries, bwd.entries)) ||
                    !rat_is_identity(rat_mul(bwd.entries, fwd.entries))) {
                    bad("transition pair is not inverse at i = " + std::to_string(i));
                }
            }
            if (rat_det(transition(Direction::GeoToComb, BasisVariant::Full, P_, i).entries) !=
                transition_det_closed_form(P_, i)) {
                bad("transition determinant mismatch at i = " + std::to_string(i));
            }
        }
        return "";
    });

    check("geometric-coefficients", [&] {
        for (long i = 2; i < P_.k; ++i) {
            auto [x, y] = witness_pair(G_, i, draw());
            const RepVector& hx = R_.hat(x);
            const RepVector& hy = R_.hat(y);
            const RepVector& hm = R_.hat(meet(x, y));
            const RepVector& hj = R_.hat(join(x, y));
            auto [B, C] = bc_vectors(R_, x, y);
            const auto gc = coeffs_in_geometric(BasisVariant::Full, P_, i);
            auto build = [&](const std::vector<Integer>& co) {
                RepVector acc(hx.size());
                RepVector t = hx; t *= co[0]; acc += t;
                t = hy; t *= co[1]; acc += t;
                t = hm; t *= co[2]; acc += t;
                t = hj; t *= co[3]; acc += t;
                return acc;
            };
            if (build(gc.B) != B) bad("B coefficients wrong at i = " + std::to_string(i));
            if (build(gc.C) != C) bad("C coefficients wrong at i = " + std::to_string(i));
        }
        return "";
    });

    check("balanced-sets", [&] {
        for (long i = 2; i < P_.k; ++i) {
            auto [x, y] = witness_pair(G_, i, draw());
            auto [Bxy, Cxy] = bc_vectors(R_, x, y);
            auto [Byx, Cyx] = bc_vectors(R_, y, x);
            RepVector diff = R_.hat(x);
            diff -= R_.hat(y);
            RepVector zd = diff; zd *= balance_zeta(P_, i);
            RepVector xd = diff; xd *= balance_xi(P_, i);
            if (Bxy - Byx != zd) bad("B_xy - B_yx != zeta (x-hat - y-hat)");
            if (Cxy - Cyx != xd) bad("C_xy - C_yx != xi (x-hat - y-hat)");
        }
        return "";
    });

    check("perp-vector", [&] {
        for (long i = 2; i < P_.k; ++i) {
            auto [x, y] = witness_pair(G_, i, draw());
            const RepVector v = perp_vector(R_, x, y);
            if (v.is_zero()) bad("perp vector is zero");
            if (R_.inner(v, R_.hat(meet(x, y))) != 0) bad("perp not orthogonal to meet hat");
            if (R_.inner(v, R_.hat(join(x, y))) != 0) bad("perp not orthogonal to join hat");
            // [i-1] * v = (q^{i-1}+1)[i](x-hat + y-hat) - 2 C_bar
            auto [B, C] = bc_vectors(R_, x, y);
            RepVector Cbar = std::move(C);
            RepVector xi_x = R_.hat(x);
            xi_x *= balance_xi(P_, i);
            Cbar -= xi_x;
            RepVector lhs = v;
            lhs *= P_.qi(i - 1);
            RepVector rhs = R_.hat(x);
            rhs += R_.hat(y);
            rhs *= (qpow(P_.q, i - 1) + 1) * P_.qi(i);
            RepVector c2 = std::move(Cbar);
            c2 *= 2;
            rhs -= c2;
            if (lhs != rhs) bad("orthogonal-complement identity fails at i = " +
                                std::to_string(i));
        }
        return "";
    });

    check("basis-ranks", [&] {
        for (long i = 2; i < P_.k; ++i) {
            auto [x, y] = witness_pair(G_, i, draw());
            const GramTable geo = gram_empirical(R_, x, y, GramKind::Geometric);
            const GramTable comb = gram_empirical(R_, x, y, GramKind::Combinatorial);
            if (int_rank(geo.entries) != 4) bad("geometric Gram rank != 4");
            if (int_rank(comb.entries) != 4) bad("combinatorial Gram rank != 4");
            const RepVector& hx = R_.hat(x);
            const RepVector& hy = R_.hat(y);
            const RepVector& hm = R_.hat(meet(x, y));
            const RepVector& hj = R_.hat(join(x, y));
            RepVector hxy = hx;
            hxy += hy;
            auto gram_of = [&](const std::vector<const RepVector*>& vs) {
                std::vector<std::vector<Integer>> m(vs.size(), std::vector<Integer>(vs.size()));
                for (size_t r = 0; r < vs.size(); ++r) {
                    for (size_t c = 0; c < vs.size(); ++c) m[r][c] = R_.inner(*vs[r], *vs[c]);
                }
                return m;
            };
            if (int_rank(gram_of({&hxy, &hm, &hj})) != 3) bad("bar basis Gram rank != 3");
            if (int_rank(gram_of({&hm, &hj})) != 2) bad("check basis Gram rank != 2");
        }
        return "ranks 4/4/3/2";
    });

    check("swap-eigenspace", [&] {
        for (long i = 2; i < P_.k; ++i) {
            auto [x, y] = witness_pair(G_, i, draw());
            const GLMatrix sigma = swap_sigma(G_, x, y);
            if (gl_apply(G_.F, sigma, x) != y || gl_apply(G_.F, sigma, y) != x) {
                bad("sigma does not swap the vertices");
            }
            if (gl_apply(G_.F, sigma, meet(x, y)) != meet(x, y)) bad("sigma moves the meet");
            if (gl_apply(G_.F, sigma, join(x, y)) != join(x, y)) bad("sigma moves the join");
        }
        return "";
    });

    check("recovery", [&] {
        const long per = std::max(3L, opts_.sample / 25);
        for (long i = 2; i < P_.k; ++i) {
            for (long t = 0; t < per; ++t) {
                auto [x, y] = witness_pair(G_, i, draw());
                const RepVector& hm = R_.hat(meet(x, y));
                const RepVector& hj = R_.hat(join(x, y));
                for (BasisVariant v :
                     {BasisVariant::Full, BasisVariant::Bar, BasisVariant::Check}) {
                    auto [rm, rj] = recover_meet_join(R_, x, y, v);
                    if (rm != hm || rj != hj) {
                        bad("recovered vectors differ from hat(meet)/hat(join) at i = " +
                            std::to_string(i));
                    }
                }
            }
        }
        return "all variants exact";
    });
}

void Runner::explorer_checks() {
    check("cosine-table", [&] {
        const std::vector<Integer> w = cosine_table(P_);  // throws on any mismatch
        std::ostringstream os;
        for (size_t h = 0; h < w.size(); ++h) os << (h ? " " : "") << w[h];
        return os.str();
    });

    check("rho-coefficient-denominators", [&] {
        for (long i = 2; i < P_.k; ++i) {
            const RhoCoeffs rc = rho_meet_join_coeffs(P_, i);
            const Integer bound = qpow(P_.q, P_.k + i) * P_.qi(i - 1) * P_.qi(P_.n - 2 * P_.k);
            for (const auto& arr : {rc.cap, rc.plus}) {
                for (const Rational& c : arr) {
                    if (bound % boost::multiprecision::denominator(c) != 0) {
                        bad("coefficient denominator does not divide q^{k+i}[i-1][n-2k]");
                    }
                }
            }
        }
        return "";
    });
}

std::vector<CheckResult> Runner::run() {
    arithmetic_checks();
    field_and_lattice_checks();
    representation_checks();
    graph_checks();
    fixsubspace_checks();
    explorer_checks();
    return std::move(results_);
}

}  // namespace

std::vector<CheckResult> run_verification(const QParams& P, const VerifyOptions& opts) {
    return Runner(P, opts).run();
}

}  // namespace grassmann
