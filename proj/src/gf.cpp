#include "grassmann/gf.hpp"

#include "grassmann/qarith.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace grassmann {

namespace {

// Irreducible polynomial for F_{p^e}, encoded as the coefficients of
// x^e = poly(x), packed base p (constant term first).
long reduction_poly(long q) {
    switch (q) {
        case 4: return 0b11;      // x^2 = x + 1 over F_2
        case 8: return 0b011;     // x^3 = x + 1 over F_2
        case 9: return 2;         // x^2 = -1 = 2 over F_3
        default: throw std::invalid_argument("Field: unsupported extension field");
    }
}

void unpack(long v, long p, long e, long* digits) {
    for (long i = 0; i < e; ++i) {
        digits[i] = v % p;
        v /= p;
    }
}

long pack(const long* digits, long p, long e) {
    long v = 0;
    for (long i = e - 1; i >= 0; --i) v = v * p + digits[i];
    return v;
}

}  // namespace

Field::Field(long q) : q_(q) {
    if (!is_prime_power(q, &p_, &e_)) {
        throw std::invalid_argument("Field: q = " + std::to_string(q) + " is not a prime power");
    }
    if (e_ == 1) {
        if (q > 97) {
            throw std::invalid_argument("Field: prime q > 97 not supported");
        }
    } else if (q != 4 && q != 8 && q != 9) {
        throw std::invalid_argument("Field: extension field q = " + std::to_string(q) +
                                    " not supported (only 4, 8, 9)");
    }

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    if (e_ == 1) {
        for (long a = 0; a < q; ++a) {
            neg_[a] = static_cast<uint8_t>((q - a) % q);
            for (long b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<uint8_t>((a + b) % q);
                mul_[a * q + b] = static_cast<uint8_t>((a * b) % q);
            }
        }
    } else {
        const long red = reduction_poly(q);
        long da[4], db[4], prod[8], redd[4];
        unpack(red, p_, e_, redd);
        for (long a = 0; a < q; ++a) {
            unpack(a, p_, e_, da);
            long nd[4];
            for (long i = 0; i < e_; ++i) nd[i] = (p_ - da[i]) % p_;
            neg_[a] = static_cast<uint8_t>(pack(nd, p_, e_));
            for (long b = 0; b < q; ++b) {
                unpack(b, p_, e_, db);
                long sd[4];
                for (long i = 0; i < e_; ++i) sd[i] = (da[i] + db[i]) % p_;
                add_[a * q + b] = static_cast<uint8_t>(pack(sd, p_, e_));
                for (long i = 0; i < 2 * e_; ++i) prod[i] = 0;
                for (long i = 0; i < e_; ++i)
                    for (long j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                // reduce x^{e+t} via x^e = redd
                for (long t = 2 * e_ - 2; t >= e_; --t) {
                    const long coef = prod[t];
                    if (coef == 0) continue;
                    prod[t] = 0;
                    for (long i = 0; i < e_; ++i)
                        prod[t - e_ + i] = (prod[t - e_ + i] + coef * redd[i]) % p_;
                }
                mul_[a * q + b] = static_cast<uint8_t>(pack(prod, p_, e_));
            }
        }
    }

    for (long a = 1; a < q; ++a) {
        for (long b = 1; b < q; ++b) {
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<uint8_t>(b);
                break;
            }
        }
        if (inv_[a] == 0) {
            throw std::logic_error("Field: element without inverse (bad reduction polynomial)");
        }
    }
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    return inv_[a];
}

const Field& Field::get(long q) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
        it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
    }
    return *it->second;
}

}  // namespace grassmann
