#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "noisyxor/bitlin.hpp"

namespace noisyxor {

namespace gf2poly {

// Polynomials over GF(2) as bitmasks, bit i = coefficient of x^i.
// Wide enough for modulus search up to degree ~60.
using Mask = unsigned __int128;

inline int degree(Mask a) {
    if (a == 0) return -1;
    int d = 0;
    while (a >> 1) {
        a >>= 1;
        ++d;
    }
    return d;
}

inline Mask mul(Mask a, Mask b) {
    Mask r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline Mask mod(Mask a, Mask m) {
    const int dm = degree(m);
    int da = degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = degree(a);
    }
    return a;
}

inline Mask gcd(Mask a, Mask b) {
    while (b) {
        Mask t = mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

inline bool irreducible(Mask e) {
    const int d = degree(e);
    if (d < 1) return false;
    if (d == 1) return true;
    // no factor of degree <= d/2 (trial division; desk-scale degrees only)
    for (int fd = 1; 2 * fd <= d; ++fd) {
        for (Mask f = Mask(1) << fd; f < (Mask(2) << fd); ++f) {
            if (mod(e, f) == 0) return false;
        }
    }
    return true;
}

// Lexicographically-least monic irreducible of the given degree, comparing
// coefficient strings from the top degree down (= integer order on masks).
inline Mask find_irreducible(int deg) {
    if (deg < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    if (deg > 48) throw std::invalid_argument("find_irreducible: degree beyond desk scale");
    for (Mask e = Mask(1) << deg; e < (Mask(2) << deg); ++e)
        if (irreducible(e)) return e;
    throw std::logic_error("irreducible polynomial search failed"); // unreachable
}

} // namespace gf2poly

// The field F_{2^q}: elements are q-bit masks over the polynomial basis
// 1, x, ..., x^{q-1} under the canonical (lex-least irreducible) modulus.
struct FieldCtx {
    uint32_t q = 0;
    uint64_t modulus = 0; // degree-q irreducible over GF(2), bit i = coeff of x^i

    FieldCtx() = default;
    explicit FieldCtx(uint32_t q_) : q(q_) {
        if (q_ < 1 || q_ > 30) throw std::invalid_argument("FieldCtx: q out of range [1,30]");
        modulus = uint64_t(gf2poly::find_irreducible(int(q_)));
    }
    FieldCtx(uint32_t q_, uint64_t mod_) : q(q_), modulus(mod_) {
        if (!gf2poly::irreducible(gf2poly::Mask(mod_)) || gf2poly::degree(gf2poly::Mask(mod_)) != int(q_))
            throw std::invalid_argument("FieldCtx: modulus not irreducible of degree q");
    }

    uint64_t order() const { return uint64_t(1) << q; }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.q == b.q && a.modulus == b.modulus;
    }
};

inline uint64_t field_add(const FieldCtx&, uint64_t a, uint64_t b) { return a ^ b; }

inline uint64_t field_mul(const FieldCtx& ctx, uint64_t a, uint64_t b) {
    unsigned __int128 r = 0, x = a;
    while (b) {
        if (b & 1) r ^= x;
        x <<= 1;
        b >>= 1;
    }
    // reduce degree 2q-2 .. q down to < q
    const unsigned __int128 m = ctx.modulus;
    for (int d = 2 * int(ctx.q) - 2; d >= int(ctx.q); --d)
        if ((r >> d) & 1) r ^= m << (d - ctx.q);
    return uint64_t(r);
}

inline uint64_t field_pow(const FieldCtx& ctx, uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = field_mul(ctx, r, a);
        a = field_mul(ctx, a, a);
        e >>= 1;
    }
    return r;
}

inline uint64_t field_inv(const FieldCtx& ctx, uint64_t a) {
    if (a == 0) throw std::invalid_argument("field_inv: zero has no inverse");
    return field_pow(ctx, a, ctx.order() - 2);
}

// Polynomial over F_{2^q}; coeffs[i] = coefficient of X^i. Fixed-context
// value type; arithmetic never mutates operands.
struct FqPoly {
    FieldCtx ctx;
    std::vector<uint64_t> coeffs;

    FqPoly() = default;
    FqPoly(FieldCtx c, std::vector<uint64_t> co) : ctx(c), coeffs(std::move(co)) {}

    int degree() const {
        for (size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i]) return int(i);
        return -1;
    }
    bool is_zero() const { return degree() < 0; }
    uint64_t coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    friend bool operator==(const FqPoly& a, const FqPoly& b) {
        FqPoly x = a, y = b;
        x.trim();
        y.trim();
        return x.ctx == y.ctx && x.coeffs == y.coeffs;
    }
};

inline FqPoly poly_add(const FqPoly& a, const FqPoly& b) {
    FqPoly r = a;
    if (b.coeffs.size() > r.coeffs.size()) r.coeffs.resize(b.coeffs.size(), 0);
    for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] ^= b.coeffs[i];
    return r;
}

inline FqPoly poly_mul(const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return FqPoly(a.ctx, {});
    FqPoly r(a.ctx, std::vector<uint64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (!a.coeffs[i]) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            if (b.coeffs[j]) r.coeffs[i + j] ^= field_mul(a.ctx, a.coeffs[i], b.coeffs[j]);
    }
    return r;
}

// Remainder of f modulo monic e.
inline FqPoly mod_reduce(const FqPoly& f, const FqPoly& e) {
    const int de = e.degree();
    if (de < 0) throw std::invalid_argument("mod_reduce: zero modulus");
    if (e.coeffs[size_t(de)] != 1) throw std::invalid_argument("mod_reduce: modulus must be monic");
    FqPoly r = f;
    for (int d = r.degree(); d >= de; d = r.degree()) {
        const uint64_t lead = r.coeffs[size_t(d)];
        for (int i = 0; i <= de; ++i)
            r.coeffs[size_t(d - de + i)] ^= field_mul(r.ctx, lead, e.coeffs[size_t(i)]);
    }
    r.coeffs.resize(size_t(de), 0);
    return r;
}

inline FqPoly poly_divmod(const FqPoly& f, const FqPoly& e, FqPoly& quotient) {
    const int de = e.degree();
    if (de < 0) throw std::invalid_argument("poly_divmod: zero divisor");
    const uint64_t lead_inv = field_inv(f.ctx, e.coeffs[size_t(de)]);
    FqPoly r = f;
    quotient = FqPoly(f.ctx, std::vector<uint64_t>(f.coeffs.size(), 0));
    for (int d = r.degree(); d >= de; d = r.degree()) {
        const uint64_t c = field_mul(f.ctx, r.coeffs[size_t(d)], lead_inv);
        quotient.coeffs[size_t(d - de)] = c;
        for (int i = 0; i <= de; ++i)
            r.coeffs[size_t(d - de + i)] ^= field_mul(f.ctx, c, e.coeffs[size_t(i)]);
    }
    r.trim();
    quotient.trim();
    return r;
}

inline FqPoly poly_gcd(FqPoly a, FqPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        FqPoly q;
        FqPoly r = poly_divmod(a, b, q);
        a = b;
        b = r;
    }
    // normalize monic
    if (!a.is_zero()) {
        const uint64_t inv = field_inv(a.ctx, a.coeffs[size_t(a.degree())]);
        for (auto& c : a.coeffs) c = field_mul(a.ctx, c, inv);
    }
    return a;
}

inline uint64_t evaluate(const FqPoly& f, uint64_t y) {
    uint64_t acc = 0;
    for (size_t i = f.coeffs.size(); i-- > 0;)
        acc = field_add(f.ctx, field_mul(f.ctx, acc, y), f.coeffs[i]);
    return acc;
}

// f^2 in characteristic 2: coefficients square, exponents double.
inline FqPoly poly_square(const FqPoly& f) {
    FqPoly r(f.ctx, std::vector<uint64_t>(f.coeffs.empty() ? 0 : 2 * f.coeffs.size() - 1, 0));
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        if (f.coeffs[i]) r.coeffs[2 * i] = field_mul(f.ctx, f.coeffs[i], f.coeffs[i]);
    return r;
}

// f^{h^i} mod E with h = 2^t: t*i successive squarings, each reduced mod E.
inline FqPoly frobenius_iter(const FqPoly& f, uint32_t t, uint32_t i, const FqPoly& e) {
    FqPoly r = mod_reduce(f, e);
    const uint64_t steps = uint64_t(t) * i;
    for (uint64_t s = 0; s < steps; ++s) r = mod_reduce(poly_square(r), e);
    return r;
}

// X^{Q^i} mod e, computed as i rounds of q squarings each.
inline FqPoly x_to_Q_pow(const FqPoly& e, uint32_t i) {
    FqPoly x(e.ctx, {0, 1});
    FqPoly r = mod_reduce(x, e);
    for (uint32_t round = 0; round < i; ++round)
        for (uint32_t s = 0; s < e.ctx.q; ++s) r = mod_reduce(poly_square(r), e);
    return r;
}

inline FqPoly poly_derivative(const FqPoly& f) {
    FqPoly r(f.ctx, {});
    if (f.coeffs.size() > 1) {
        r.coeffs.assign(f.coeffs.size() - 1, 0);
        for (size_t i = 1; i < f.coeffs.size(); ++i)
            if (i & 1) r.coeffs[i - 1] = f.coeffs[i]; // char 2: even exponents vanish
    }
    return r;
}

// Squarefree and no factor of degree <= deg/2: gcd(E, X^{Q^i} - X) = 1.
inline bool poly_irreducible(const FqPoly& e) {
    const int d = e.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const FqPoly der = poly_derivative(e);
    if (der.is_zero() || poly_gcd(e, der).degree() != 0) return false;
    FqPoly x(e.ctx, {0, 1});
    for (int i = 1; 2 * i <= d; ++i) {
        FqPoly g = poly_gcd(e, poly_add(x_to_Q_pow(e, uint32_t(i)), x));
        if (g.degree() != 0) return false;
    }
    return true;
}

// Lex-least monic irreducible of the given degree over F_Q: coefficients
// compared from the top degree down, each by its integer mask.
inline FqPoly find_irreducible_fq(const FieldCtx& ctx, uint32_t deg) {
    if (deg < 1) throw std::invalid_argument("find_irreducible_fq: degree must be >= 1");
    std::vector<uint64_t> co(deg + 1, 0);
    co[deg] = 1;
    const uint64_t order = ctx.order();
    while (true) {
        FqPoly cand(ctx, co);
        if (poly_irreducible(cand)) return cand;
        // odometer on coefficients below the leading one, X^0 least significant
        size_t i = 0;
        for (; i < deg; ++i) {
            if (++co[i] < order) break;
            co[i] = 0;
        }
        if (i == deg) throw std::logic_error("irreducible search over F_Q exhausted"); // unreachable
    }
}

// vec(.) for F_Q[X]_{<= deg_bound}: coefficient masks concatenated, X^0 first.
inline BitVector poly_to_bits(const FqPoly& f, uint32_t deg_bound) {
    const uint32_t q = f.ctx.q;
    BitVector v(size_t(deg_bound + 1) * q);
    for (uint32_t i = 0; i <= deg_bound; ++i) {
        const uint64_t c = f.coeff(i);
        for (uint32_t b = 0; b < q; ++b)
            if ((c >> b) & 1) v.set(size_t(i) * q + b, true);
    }
    return v;
}

inline FqPoly poly_from_bits(const FieldCtx& ctx, const BitVector& v, uint32_t deg_bound) {
    if (v.size() != size_t(deg_bound + 1) * ctx.q)
        throw std::invalid_argument("poly_from_bits: length mismatch");
    std::vector<uint64_t> co(deg_bound + 1, 0);
    for (uint32_t i = 0; i <= deg_bound; ++i)
        for (uint32_t b = 0; b < ctx.q; ++b)
            if (v.get(size_t(i) * ctx.q + b)) co[i] |= uint64_t(1) << b;
    return FqPoly(ctx, std::move(co));
}

// Matrix of a GF(2)-linear map between pinned-basis spaces: column j is the
// image of basis vector j. Linearity is the caller's responsibility.
template <class MapFn>
inline BitMatrix linear_map_matrix(MapFn&& map, size_t in_bits, size_t out_bits) {
    BitMatrix a(out_bits, in_bits);
    for (size_t j = 0; j < in_bits; ++j) {
        BitVector e(in_bits);
        e.set(j, true);
        const BitVector img = map(e);
        if (img.size() != out_bits) throw std::invalid_argument("linear_map_matrix: bad image size");
        for (size_t i = 0; i < out_bits; ++i)
            if (img.get(i)) a.set(i, j, true);
    }
    return a;
}

} // namespace noisyxor
