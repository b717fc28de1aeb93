#include "grassmann/subspace.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace grassmann {

namespace {

// In-place RREF over F_q; returns rank. Rows keep their length.
long rref_in_place(const Field& F, std::vector<Row>& m) {
    if (m.empty()) return 0;
    const long ncols = static_cast<long>(m[0].size());
    long rank = 0;
    for (long col = 0; col < ncols && rank < static_cast<long>(m.size()); ++col) {
        long pivot = -1;
        for (long r = rank; r < static_cast<long>(m.size()); ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const uint8_t scale = F.inv(m[rank][col]);
        for (long j = col; j < ncols; ++j) m[rank][j] = F.mul(m[rank][j], scale);
        for (long r = 0; r < static_cast<long>(m.size()); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const uint8_t factor = m[r][col];
            for (long j = col; j < ncols; ++j) {
                m[r][j] = F.sub(m[r][j], F.mul(factor, m[rank][j]));
            }
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

void check_same_space(const Subspace& u, const Subspace& v) {
    if (u.n() != v.n() || u.q() != v.q()) {
        throw std::invalid_argument("subspace operands live in different ambient spaces");
    }
}

}  // namespace

Subspace Subspace::rref(const Field& F, long n, const std::vector<Row>& rows) {
    for (const Row& r : rows) {
        if (static_cast<long>(r.size()) != n) {
            throw std::invalid_argument("Subspace::rref: row of wrong length");
        }
        for (uint8_t x : r) {
            if (x >= F.q()) throw std::invalid_argument("Subspace::rref: entry out of field range");
        }
    }
    Subspace s(F, n);
    s.rows_ = rows;
    rref_in_place(F, s.rows_);
    return s;
}

Subspace Subspace::zero(const Field& F, long n) { return Subspace(F, n); }

Subspace Subspace::full(const Field& F, long n) {
    std::vector<Row> rows(n, Row(n, 0));
    for (long i = 0; i < n; ++i) rows[i][i] = 1;
    Subspace s(F, n);
    s.rows_ = std::move(rows);
    return s;
}

bool Subspace::contains_vector(const Row& v) const {
    const Field& F = Field::get(q_);
    Row w = v;
    // Reduce against the RREF rows; contained iff reduction reaches zero.
    for (const Row& r : rows_) {
        long pivot = 0;
        while (r[pivot] == 0) ++pivot;
        if (w[pivot] != 0) {
            const uint8_t factor = w[pivot];
            for (long j = pivot; j < n_; ++j) w[j] = F.sub(w[j], F.mul(factor, r[j]));
        }
    }
    return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    check_same_space(*this, other);
    if (other.dim() > dim()) return false;
    for (const Row& r : other.rows_) {
        if (!contains_vector(r)) return false;
    }
    return true;
}

std::string Subspace::key() const {
    std::string out;
    out.reserve(2 + rows_.size() * n_);
    out.push_back(static_cast<char>(dim()));
    for (const Row& r : rows_) out.append(r.begin(), r.end());
    return out;
}

std::string Subspace::serialize() const {
    if (rows_.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << ';';
        for (long j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << static_cast<int>(rows_[i][j]);
        }
    }
    return os.str();
}

Subspace Subspace::parse(const Field& F, long n, const std::string& text) {
    if (text == "-" || text.empty()) return zero(F, n);
    std::vector<Row> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        Row r;
        std::istringstream is(part);
        int x;
        while (is >> x) {
            if (x < 0 || x >= F.q()) throw std::invalid_argument("Subspace::parse: bad entry");
            r.push_back(static_cast<uint8_t>(x));
        }
        if (static_cast<long>(r.size()) != n) {
            throw std::invalid_argument("Subspace::parse: row of wrong length");
        }
        rows.push_back(std::move(r));
    }
    return rref(F, n, rows);
}

Subspace meet(const Subspace& u, const Subspace& v) {
    check_same_space(u, v);
    const Field& F = Field::get(u.q());
    const long n = u.n();
    // Zassenhaus: rref of [U U; V 0]; rows with zero left block carry a
    // basis of the intersection in the right block.
    std::vector<Row> m;
    m.reserve(u.dim() + v.dim());
    for (const Row& r : u.rows()) {
        Row w(2 * n, 0);
        std::copy(r.begin(), r.end(), w.begin());
        std::copy(r.begin(), r.end(), w.begin() + n);
        m.push_back(std::move(w));
    }
    for (const Row& r : v.rows()) {
        Row w(2 * n, 0);
        std::copy(r.begin(), r.end(), w.begin());
        m.push_back(std::move(w));
    }
    rref_in_place(F, m);
    std::vector<Row> inter;
    for (const Row& w : m) {
        const bool left_zero =
            std::all_of(w.begin(), w.begin() + n, [](uint8_t x) { return x == 0; });
        if (left_zero) {
            inter.emplace_back(w.begin() + n, w.end());
        }
    }
    return Subspace::rref(F, n, inter);
}

Subspace join(const Subspace& u, const Subspace& v) {
    check_same_space(u, v);
    const Field& F = Field::get(u.q());
    std::vector<Row> rows = u.rows();
    rows.insert(rows.end(), v.rows().begin(), v.rows().end());
    return Subspace::rref(F, u.n(), rows);
}

void for_each_rref(const Field& F, long n, long ell,
                   const std::function<bool(const Subspace&)>& fn) {
    if (ell < 0 || ell > n) {
        throw std::domain_error("enumerate: require 0 <= ell <= n");
    }
    if (ell == 0) {
        fn(Subspace::zero(F, n));
        return;
    }
    const long q = F.q();
    // Iterate pivot-column subsets in lexicographic order.
    std::vector<long> piv(ell);
    for (long i = 0; i < ell; ++i) piv[i] = i;
    for (;;) {
        // Free slots: entries right of each pivot that are not pivot columns
        // and not below a later pivot (RREF forces zeros in pivot columns).
        std::vector<std::pair<long, long>> free_slots;  // (row, col), row-major
        std::vector<bool> is_piv(n, false);
        for (long c : piv) is_piv[c] = true;
        for (long r = 0; r < ell; ++r) {
            for (long col = piv[r] + 1; col < n; ++col) {
                if (!is_piv[col]) free_slots.emplace_back(r, col);
            }
        }
        std::vector<Row> rows(ell, Row(n, 0));
        for (long r = 0; r < ell; ++r) rows[r][piv[r]] = 1;
        std::vector<uint8_t> digits(free_slots.size(), 0);
        for (;;) {
            for (size_t t = 0; t < free_slots.size(); ++t) {
                rows[free_slots[t].first][free_slots[t].second] = digits[t];
            }
            Subspace s = Subspace::rref(F, n, rows);  // already RREF; normalizes defensively
            if (!fn(s)) return;
            // Odometer, last slot fastest.
            size_t t = free_slots.size();
            while (t > 0) {
                --t;
                if (++digits[t] < q) break;
                digits[t] = 0;
                if (t == 0) goto next_pivots;
            }
            if (free_slots.empty()) break;
        }
    next_pivots:
        // Next pivot combination in lex order.
        long i = ell - 1;
        while (i >= 0 && piv[i] == n - ell + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (long j = i + 1; j < ell; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> enumerate_rref(const Field& F, long n, long ell) {
    std::vector<Subspace> out;
    for_each_rref(F, n, ell, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

PointSpace::PointSpace(const Field& F, long n) : F_(F), n_(n) {
    // All q^n vectors in lexicographic order (index 0 most significant),
    // keeping those whose first nonzero coordinate is 1.
    Row v(n, 0);
    for (;;) {
        long first = -1;
        for (long i = 0; i < n; ++i) {
            if (v[i] != 0) {
                first = i;
                break;
            }
        }
        if (first >= 0 && v[first] == 1) {
            const PointId id = static_cast<PointId>(reps_.size());
            reps_.push_back(v);
            lookup_.emplace(pack(v), id);
        }
        long i = n - 1;
        while (i >= 0 && v[i] == F.q() - 1) {
            v[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++v[i];
    }
}

uint64_t PointSpace::pack(const Row& v) const {
    uint64_t acc = 0;
    for (long i = 0; i < n_; ++i) acc = acc * static_cast<uint64_t>(F_.q()) + v[i];
    return acc;
}

PointId PointSpace::id_of_vector(const Row& v) const {
    if (static_cast<long>(v.size()) != n_) {
        throw std::invalid_argument("PointSpace: vector of wrong length");
    }
    long first = -1;
    for (long i = 0; i < n_; ++i) {
        if (v[i] != 0) {
            first = i;
            break;
        }
    }
    if (first < 0) throw std::invalid_argument("PointSpace: zero vector has no point");
    Row w = v;
    if (w[first] != 1) {
        const uint8_t scale = F_.inv(w[first]);
        for (long i = first; i < n_; ++i) w[i] = F_.mul(w[i], scale);
    }
    return lookup_.at(pack(w));
}

PointId PointSpace::id_of_point(const Subspace& s) const {
    if (s.dim() != 1) throw std::invalid_argument("PointSpace: subspace is not a point");
    return id_of_vector(s.row(0));
}

Subspace PointSpace::point(PointId s) const {
    return Subspace::rref(F_, n_, {reps_.at(s)});
}

std::vector<PointId> PointSpace::omega(const Subspace& u) const {
    // One normalized coefficient vector (first nonzero = 1) per 1-dim
    // subspace of u: [dim u] of them.
    const long d = u.dim();
    std::vector<PointId> out;
    if (d == 0) return out;
    std::vector<uint8_t> coef(d, 0);
    const long q = F_.q();
    std::function<void(long)> walk = [&](long lead) {
        // coef[lead] = 1, positions > lead arbitrary
        Row v(n_, 0);
        for (;;) {
            for (long j = 0; j < n_; ++j) {
                uint8_t acc = 0;
                for (long r = lead; r < d; ++r) {
                    if (coef[r]) acc = F_.add(acc, F_.mul(coef[r], u.row(r)[j]));
                }
                v[j] = acc;
            }
            out.push_back(id_of_vector(v));
            long t = d - 1;
            while (t > lead && coef[t] == q - 1) coef[t--] = 0;
            if (t == lead) break;
            ++coef[t];
        }
    };
    for (long lead = 0; lead < d; ++lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[lead] = 1;
        walk(lead);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GLMatrix gl_identity(long n) {
    GLMatrix m(n, Row(n, 0));
    for (long i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool gl_is_invertible(const Field& F, const GLMatrix& m) {
    const long n = static_cast<long>(m.size());
    std::vector<Row> copy = m;
    return rref_in_place(F, copy) == n;
}

GLMatrix gl_mul(const Field& F, const GLMatrix& lhs, const GLMatrix& rhs) {
    const long n = static_cast<long>(lhs.size());
    GLMatrix out(n, Row(n, 0));
    for (long i = 0; i < n; ++i) {
        for (long t = 0; t < n; ++t) {
            const uint8_t a = lhs[i][t];
            if (!a) continue;
            for (long j = 0; j < n; ++j) {
                out[i][j] = F.add(out[i][j], F.mul(a, rhs[t][j]));
            }
        }
    }
    return out;
}

GLMatrix gl_inverse(const Field& F, const GLMatrix& m) {
    const long n = static_cast<long>(m.size());
    std::vector<Row> aug(n, Row(2 * n, 0));
    for (long i = 0; i < n; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][n + i] = 1;
    }
    if (rref_in_place(F, aug) != n) {
        throw std::invalid_argument("gl_inverse: matrix is singular");
    }
    GLMatrix inv(n, Row(n, 0));
    for (long i = 0; i < n; ++i) {
        std::copy(aug[i].begin() + n, aug[i].end(), inv[i].begin());
    }
    return inv;
}

GLMatrix gl_random(const Field& F, long n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, static_cast<int>(F.q()) - 1);
    for (;;) {
        GLMatrix m(n, Row(n, 0));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) m[i][j] = static_cast<uint8_t>(dist(rng));
        }
        if (gl_is_invertible(F, m)) return m;
    }
}

Row apply_row(const Field& F, const Row& v, const GLMatrix& sigma) {
    const long n = static_cast<long>(v.size());
    Row out(n, 0);
    for (long i = 0; i < n; ++i) {
        const uint8_t a = v[i];
        if (!a) continue;
        for (long j = 0; j < n; ++j) out[j] = F.add(out[j], F.mul(a, sigma[i][j]));
    }
    return out;
}

Subspace gl_apply(const Field& F, const GLMatrix& sigma, const Subspace& u) {
    if (static_cast<long>(sigma.size()) != u.n()) {
        throw std::invalid_argument("gl_apply: dimension mismatch");
    }
    if (!gl_is_invertible(F, sigma)) {
        throw std::invalid_argument("gl_apply: matrix is singular");
    }
    std::vector<Row> rows;
    rows.reserve(u.dim());
    for (const Row& r : u.rows()) rows.push_back(apply_row(F, r, sigma));
    return Subspace::rref(F, u.n(), rows);
}

std::vector<Row> extend_basis(const Field& F, const Subspace& base, const Subspace& target) {
    std::vector<Row> work = base.rows();
    std::vector<Row> added;
    long rank = static_cast<long>(work.size());
    for (const Row& r : target.rows()) {
        std::vector<Row> trial = work;
        trial.push_back(r);
        std::vector<Row> probe = trial;
        if (rref_in_place(F, probe) > rank) {
            work = std::move(trial);
            added.push_back(r);
            ++rank;
        }
    }
    if (rank != target.dim()) {
        throw std::invalid_argument("extend_basis: base is not contained in target");
    }
    return added;
}

}  // namespace grassmann
