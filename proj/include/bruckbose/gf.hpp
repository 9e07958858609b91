#pragma once

// Exact arithmetic for the tower GF(p) <= GF(q) <= GF(q^3), q = p^h.
//
// Elements are integer codes:
//   GF(q):   code = a0 + a1*p + ... + a_{h-1}*p^{h-1}, the ai being the
//            coefficients over GF(p) of the residue class, constant term first;
//   GF(q^3): code = c0 + c1*q + c2*q^2, the ci being GF(q) codes in the basis
//            (1, w, w^2), where w is the class of the extension variable.
// GF(q) embeds into GF(q^3) as the codes < q. All arithmetic is table-driven;
// a GaloisTower is immutable after construction and safe to share across
// threads.

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "bruckbose/common.hpp"

namespace bruckbose {

namespace detail {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// GF(b)[x]/(m) with elements coded in digit base b, built on top of add/mul
// tables of the coefficient field. Used both to construct the tower tables and
// to test candidate moduli for irreducibility and primitivity.
struct QuotientRing {
    int base = 0, deg = 0, size = 0;
    std::vector<Fel> mod;  // non-leading coefficients of the monic modulus
    const std::vector<Fel>* badd = nullptr;
    const std::vector<Fel>* bmul = nullptr;

    QuotientRing(int b, std::vector<Fel> m, const std::vector<Fel>& ba,
                 const std::vector<Fel>& bm)
        : base(b), deg(int(m.size())), mod(std::move(m)), badd(&ba), bmul(&bm) {
        size = 1;
        for (int i = 0; i < deg; ++i) size *= base;
    }

    Fel badd_at(Fel a, Fel b) const { return (*badd)[std::size_t(a) * base + b]; }
    Fel bmul_at(Fel a, Fel b) const { return (*bmul)[std::size_t(a) * base + b]; }
    Fel bneg(Fel a) const {
        for (int x = 0; x < base; ++x)
            if (badd_at(a, Fel(x)) == 0) return Fel(x);
        throw InternalError("no additive inverse in base field");
    }

    std::vector<Fel> digits(Fel c) const {
        std::vector<Fel> d(deg);
        int v = c;
        for (int i = 0; i < deg; ++i) {
            d[i] = Fel(v % base);
            v /= base;
        }
        return d;
    }
    Fel code(std::span<const Fel> d) const {
        int c = 0;
        for (int i = deg; i-- > 0;) c = c * base + (i < int(d.size()) ? d[i] : 0);
        return Fel(c);
    }

    Fel add(Fel a, Fel b) const {
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < deg; ++i) da[i] = badd_at(da[i], db[i]);
        return code(da);
    }

    Fel mul(Fel a, Fel b) const {
        auto da = digits(a), db = digits(b);
        std::vector<Fel> raw(std::size_t(2 * deg - 1), 0);
        for (int i = 0; i < deg; ++i)
            for (int j = 0; j < deg; ++j)
                raw[i + j] = badd_at(raw[i + j], bmul_at(da[i], db[j]));
        for (int k = 2 * deg - 2; k >= deg; --k) {  // x^deg = -(mod)
            Fel c = raw[k];
            if (c == 0) continue;
            raw[k] = 0;
            for (int i = 0; i < deg; ++i)
                raw[k - deg + i] = badd_at(raw[k - deg + i], bneg(bmul_at(c, mod[i])));
        }
        raw.resize(deg);
        return code(raw);
    }

    // Multiplicative order of the class of x (code = base). Call only when the
    // modulus is irreducible so the quotient is a field.
    int order_of_x() const {
        Fel x = Fel(base), acc = x;
        int ord = 1;
        while (acc != 1) {
            acc = mul(acc, x);
            if (++ord > size) throw InternalError("order search did not terminate");
        }
        return ord;
    }
};

// Root test of a monic polynomial in the coefficient field itself; for degrees
// 2 and 3 "no root" is equivalent to irreducibility.
inline bool monic_has_root(int fsize, std::span<const Fel> nonleading,
                           const std::vector<Fel>& fadd, const std::vector<Fel>& fmul) {
    for (int r = 0; r < fsize; ++r) {
        Fel acc = 1;  // leading coefficient
        for (std::size_t i = nonleading.size(); i-- > 0;) {
            acc = fmul[std::size_t(acc) * fsize + r];
            acc = fadd[std::size_t(acc) * fsize + nonleading[i]];
        }
        if (acc == 0) return true;
    }
    return false;
}

}  // namespace detail

class GaloisTower {
public:
    // Canonical tower for q: defining polynomials are the lexicographically
    // smallest primitive monic polynomials of the required degree, coefficient
    // tuples ordered from the constant term up.
    explicit GaloisTower(int q);

    // Explicit tower; polynomials are validated (irreducible and primitive).
    // gfq_poly holds the h non-leading coefficients of the modulus of GF(q)
    // over GF(p); cubic the 3 non-leading coefficients of the modulus of
    // GF(q^3) over GF(q). Leading coefficient 1 is implied.
    GaloisTower(int p, int h, std::vector<Fel> gfq_poly, std::array<Fel, 3> cubic);

    int p() const { return p_; }
    int h() const { return h_; }
    Fel q() const { return q_; }
    int q3() const { return q3_; }
    Fel omega() const { return q_; }  // class of the extension variable: (0,1,0)

    const std::vector<Fel>& gfq_poly() const { return gfq_poly_; }
    const std::array<Fel, 3>& cubic_poly() const { return cubic_; }

    Fel add(Fel a, Fel b) const { return add_[std::size_t(a) * q3_ + b]; }
    Fel mul(Fel a, Fel b) const { return mul_[std::size_t(a) * q3_ + b]; }
    Fel neg(Fel a) const { return neg_[a]; }
    Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }

    Fel inv(Fel a) const {
        if (a == 0) throw PreconditionError("inverse of zero");
        return inv_[a];
    }
    Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }

    Fel pow(Fel a, long long e) const;

    // x -> x^q, the Frobenius map of the tower.
    Fel frobenius(Fel a) const { return frob_[a]; }

    // a lies in GF(q) iff Frobenius fixes it; with this encoding that is
    // exactly code < q.
    bool in_subfield(Fel a) const { return a < q_; }

    std::array<Fel, 3> vec(Fel a) const {
        return {Fel(a % q_), Fel((a / q_) % q_), Fel(a / (q_ * q_))};
    }
    Fel unvec(const std::array<Fel, 3>& c) const {
        for (Fel x : c)
            if (x >= q_) throw PreconditionError("unvec: coordinate not in GF(q)");
        return Fel(c[0] + c[1] * q_ + c[2] * q_ * q_);
    }

    // Roots in GF(q^3) of a nonzero polynomial of degree <= 3, coefficients
    // constant term first, listed ascending by code with multiplicity.
    std::vector<Fel> poly_roots(std::span<const Fel> coeffs) const;

private:
    void init(int p, int h, std::vector<Fel> gfq_poly, std::array<Fel, 3> cubic,
              bool validate_polys);
    static std::vector<Fel> prime_tables_add(int p);
    static std::vector<Fel> prime_tables_mul(int p);

    int p_ = 0, h_ = 0;
    Fel q_ = 0;
    int q3_ = 0;
    std::vector<Fel> gfq_poly_;
    std::array<Fel, 3> cubic_{};
    std::vector<Fel> add_, mul_;
    std::vector<Fel> neg_, inv_, frob_;
};

// Horner evaluation; coefficients constant term first.
inline Fel poly_eval(const GaloisTower& gf, std::span<const Fel> coeffs, Fel x) {
    Fel acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = gf.add(gf.mul(acc, x), coeffs[i]);
    return acc;
}

inline std::vector<Fel> poly_mul(const GaloisTower& gf, std::span<const Fel> a,
                                 std::span<const Fel> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Fel> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = gf.add(out[i + j], gf.mul(a[i], b[j]));
    return out;
}

// Coefficient-wise Frobenius.
inline std::vector<Fel> poly_conj(const GaloisTower& gf, std::span<const Fel> a) {
    std::vector<Fel> out(a.begin(), a.end());
    for (Fel& c : out) c = gf.frobenius(c);
    return out;
}

inline std::vector<Fel> GaloisTower::prime_tables_add(int p) {
    std::vector<Fel> t(std::size_t(p) * p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) t[std::size_t(a) * p + b] = Fel((a + b) % p);
    return t;
}

inline std::vector<Fel> GaloisTower::prime_tables_mul(int p) {
    std::vector<Fel> t(std::size_t(p) * p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) t[std::size_t(a) * p + b] = Fel((a * b) % p);
    return t;
}

inline GaloisTower::GaloisTower(int q) {
    static const int supported[] = {2, 3, 4, 5, 7, 8, 9};
    if (std::find(std::begin(supported), std::end(supported), q) == std::end(supported))
        throw PreconditionError("unsupported q (prime powers 2..9 only)");
    int p = q, h = 1;
    for (int cand = 2; cand <= q; ++cand) {
        if (!detail::is_prime(cand)) continue;
        int e = 0, v = q;
        while (v % cand == 0) {
            v /= cand;
            ++e;
        }
        if (v == 1 && e >= 1) {
            p = cand;
            h = e;
            break;
        }
    }

    auto padd = prime_tables_add(p);
    auto pmul = prime_tables_mul(p);

    // GF(q) modulus: lexicographically smallest primitive monic degree-h
    // polynomial over GF(p).
    std::vector<Fel> gfq_poly(h, 0);
    if (h == 1) {
        bool found = false;
        for (int c0 = 0; c0 < p && !found; ++c0) {
            int root = (p - c0) % p;  // root of x + c0
            if (root == 0) continue;
            int ord = 1, acc = root;
            while (acc != 1) {
                acc = (acc * root) % p;
                ++ord;
            }
            if (ord == p - 1) {
                gfq_poly = {Fel(c0)};
                found = true;
            }
        }
        if (!found) throw InternalError("no primitive linear polynomial");
    } else {
        bool found = false;
        std::vector<Fel> cand(h, 0);
        std::size_t total = 1;
        for (int i = 0; i < h; ++i) total *= std::size_t(p);
        for (std::size_t n = 0; n < total && !found; ++n) {
            std::size_t v = n;
            // lexicographic on (c0, c1, ...): c0 is the most significant digit
            for (int i = h; i-- > 0;) {
                cand[i] = Fel(v % p);
                v /= p;
            }
            if (detail::monic_has_root(p, cand, padd, pmul)) continue;
            detail::QuotientRing ring(p, cand, padd, pmul);
            if (ring.order_of_x() == ring.size - 1) {
                gfq_poly = cand;
                found = true;
            }
        }
        if (!found) throw InternalError("no primitive polynomial for GF(q)");
    }

    // GF(q) tables, then the cubic modulus over GF(q).
    std::vector<Fel> qadd(std::size_t(q) * q), qmul(std::size_t(q) * q);
    {
        detail::QuotientRing ring(p, gfq_poly, padd, pmul);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                qadd[std::size_t(a) * q + b] = h == 1 ? padd[std::size_t(a) * q + b]
                                                      : ring.add(Fel(a), Fel(b));
                qmul[std::size_t(a) * q + b] = h == 1 ? pmul[std::size_t(a) * q + b]
                                                      : ring.mul(Fel(a), Fel(b));
            }
    }

    std::array<Fel, 3> cubic{};
    {
        bool found = false;
        std::array<Fel, 3> cand{};
        for (int c0 = 0; c0 < q && !found; ++c0)
            for (int c1 = 0; c1 < q && !found; ++c1)
                for (int c2 = 0; c2 < q && !found; ++c2) {
                    cand = {Fel(c0), Fel(c1), Fel(c2)};
                    if (detail::monic_has_root(q, cand, qadd, qmul)) continue;
                    detail::QuotientRing ring(q, {cand.begin(), cand.end()}, qadd, qmul);
                    if (ring.order_of_x() == ring.size - 1) {
                        cubic = cand;
                        found = true;
                    }
                }
        if (!found) throw InternalError("no primitive cubic over GF(q)");
    }

    init(p, h, std::move(gfq_poly), cubic, false);
}

inline GaloisTower::GaloisTower(int p, int h, std::vector<Fel> gfq_poly,
                                std::array<Fel, 3> cubic) {
    init(p, h, std::move(gfq_poly), cubic, true);
}

inline void GaloisTower::init(int p, int h, std::vector<Fel> gfq_poly,
                              std::array<Fel, 3> cubic, bool validate_polys) {
    if (!detail::is_prime(p)) throw PreconditionError("p must be prime");
    if (h < 1 || h > 3) throw PreconditionError("extension degree h must be 1..3");
    if (int(gfq_poly.size()) != h)
        throw PreconditionError("gfq_poly must list the h non-leading coefficients");
    int q = 1;
    for (int i = 0; i < h; ++i) q *= p;
    if (q > 9) throw PreconditionError("unsupported q (prime powers 2..9 only)");
    for (Fel c : gfq_poly)
        if (c >= p) throw PreconditionError("gfq_poly coefficient out of range");
    for (Fel c : cubic)
        if (c >= q) throw PreconditionError("cubic coefficient out of range");

    p_ = p;
    h_ = h;
    q_ = Fel(q);
    q3_ = q * q * q;
    gfq_poly_ = std::move(gfq_poly);
    cubic_ = cubic;

    auto padd = prime_tables_add(p);
    auto pmul = prime_tables_mul(p);

    if (validate_polys && h >= 2 &&
        detail::monic_has_root(p, gfq_poly_, padd, pmul))
        throw PreconditionError("gfq_poly is reducible over GF(p)");
    if (validate_polys && h == 1) {
        int root = (p - gfq_poly_[0]) % p;  // root of x + c0
        int ord = 0, acc = 1;
        do {
            acc = (acc * root) % p;
            ++ord;
        } while (acc != 1 && ord <= p);
        if (root == 0 || acc != 1 || ord != p - 1)
            throw PreconditionError("gfq_poly is not primitive");
    }

    std::vector<Fel> qadd(std::size_t(q) * q), qmul(std::size_t(q) * q);
    if (h == 1) {
        qadd = padd;
        qmul = pmul;
    } else {
        detail::QuotientRing ring(p, gfq_poly_, padd, pmul);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                qadd[std::size_t(a) * q + b] = ring.add(Fel(a), Fel(b));
                qmul[std::size_t(a) * q + b] = ring.mul(Fel(a), Fel(b));
            }
    }
    if (validate_polys && h >= 2) {
        detail::QuotientRing ring(p, gfq_poly_, padd, pmul);
        if (ring.order_of_x() != q - 1)
            throw PreconditionError("gfq_poly is not primitive");
    }

    if (validate_polys &&
        detail::monic_has_root(q, cubic_, qadd, qmul))
        throw PreconditionError("cubic modulus is reducible over GF(q)");

    detail::QuotientRing ring3(q, {cubic_.begin(), cubic_.end()}, qadd, qmul);
    if (validate_polys && ring3.order_of_x() != q3_ - 1)
        throw PreconditionError("cubic modulus is not primitive (omega must generate)");

    add_.resize(std::size_t(q3_) * q3_);
    mul_.resize(std::size_t(q3_) * q3_);
    neg_.resize(q3_);
    inv_.assign(q3_, 0);
    frob_.resize(q3_);
    for (int a = 0; a < q3_; ++a) {
        for (int b = 0; b < q3_; ++b) {
            add_[std::size_t(a) * q3_ + b] = ring3.add(Fel(a), Fel(b));
            mul_[std::size_t(a) * q3_ + b] = ring3.mul(Fel(a), Fel(b));
        }
    }
    for (int a = 0; a < q3_; ++a) {
        for (int b = 0; b < q3_; ++b)
            if (add_[std::size_t(a) * q3_ + b] == 0) {
                neg_[a] = Fel(b);
                break;
            }
    }

    // exp/log chain on the primitive element omega; yields inverses, the
    // Frobenius table, and (for the canonical constructor) re-checks that
    // omega generates.
    std::vector<int> log(q3_, -1);
    std::vector<Fel> exp(q3_ - 1);
    Fel acc = 1;
    for (int k = 0; k < q3_ - 1; ++k) {
        if (log[acc] != -1) throw InternalError("omega does not generate GF(q3)*");
        exp[k] = acc;
        log[acc] = k;
        acc = mul(acc, omega());
    }
    if (acc != 1) throw InternalError("omega order mismatch");
    int ord = q3_ - 1;
    for (int k = 0; k < ord; ++k) inv_[exp[k]] = exp[(ord - k) % ord];
    frob_[0] = 0;
    for (int k = 0; k < ord; ++k) frob_[exp[k]] = exp[int(std::int64_t(k) * q_ % ord)];
}

inline Fel GaloisTower::pow(Fel a, long long e) const {
    if (a == 0) {
        if (e <= 0) throw PreconditionError("0^e undefined for e <= 0");
        return 0;
    }
    long long m = e % (q3_ - 1);
    if (m < 0) m += q3_ - 1;
    Fel acc = 1, base = a;
    while (m > 0) {
        if (m & 1) acc = mul(acc, base);
        base = mul(base, base);
        m >>= 1;
    }
    return acc;
}

inline std::vector<Fel> GaloisTower::poly_roots(std::span<const Fel> coeffs) const {
    std::vector<Fel> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw PreconditionError("poly_roots: zero polynomial");
    if (c.size() > 4) throw PreconditionError("poly_roots: degree must be <= 3");
    std::vector<Fel> roots;
    Fel r = 0;
    while (c.size() > 1) {
        // next root >= r, ascending
        bool found = false;
        for (int x = r; x < q3_; ++x) {
            if (poly_eval(*this, c, Fel(x)) == 0) {
                r = Fel(x);
                found = true;
                break;
            }
        }
        if (!found) break;
        roots.push_back(r);
        // synthetic division by (x - r)
        std::vector<Fel> quo(c.size() - 1);
        Fel carry = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            quo[i] = carry;
            carry = add(c[i], mul(carry, r));
        }
        if (carry != 0) throw InternalError("deflation remainder nonzero");
        c = std::move(quo);
    }
    return roots;
}

}  // namespace bruckbose
