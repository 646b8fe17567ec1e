#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "noisyxor/bitlin.hpp"

namespace noisyxor {

// Monomials of degree <= r over m variables, ordered by (degree, lex on the
// sorted element tuple). Mask bit i-1 <=> variable i.
inline std::vector<uint32_t> rm_monomials(uint32_t m, int r) {
    if (m > 30) throw std::invalid_argument("rm_monomials: m beyond desk scale");
    std::vector<uint32_t> out;
    if (r < 0) return out;
    out.push_back(0);
    for (int deg = 1; deg <= r && deg <= int(m); ++deg) {
        std::vector<uint32_t> idx(size_t(deg));
        for (int i = 0; i < deg; ++i) idx[size_t(i)] = uint32_t(i); // elements idx[i]+1
        while (true) {
            uint32_t mask = 0;
            for (uint32_t v : idx) mask |= uint32_t(1) << v;
            out.push_back(mask);
            int i = deg - 1;
            while (i >= 0 && idx[size_t(i)] == m - uint32_t(deg - i)) --i;
            if (i < 0) break;
            ++idx[size_t(i)];
            for (int j = i + 1; j < deg; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
        }
    }
    return out;
}

inline mpz_class rm_dimension(uint32_t m, int r) {
    if (r < 0) return 0;
    mpz_class dim = 0;
    mpz_class binom;
    for (int i = 0; i <= r && i <= int(m); ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), m, unsigned(i));
        dim += binom;
    }
    return dim;
}

// Exact rate of RM(m, r): big-integer numerator over 2^m.
inline mpq_class rm_rate(uint32_t m, int r) {
    if (r > int(m)) throw std::invalid_argument("rm_rate: r > m");
    mpz_class den = 1;
    den <<= m;
    mpq_class rate(rm_dimension(m, r), den);
    rate.canonicalize();
    return rate;
}

// Evaluation vector of monomial `mask` on all of F_2^m, points in integer
// order with v_1 the least-significant bit.
inline BitVector rm_monomial_eval(uint32_t m, uint32_t mask) {
    const size_t n = size_t(1) << m;
    BitVector v(n);
    for (size_t p = 0; p < n; ++p)
        if ((p & mask) == mask) v.set(p, true);
    return v;
}

// Reed-Muller code RM(m, r) with pinned monomial and point orderings. The
// generator matrix and its transpose are built eagerly; the object is
// immutable afterwards and safe to share across threads.
struct RmCode {
    uint32_t m;
    int r;
    std::vector<uint32_t> monomials;
    size_t dim;
    size_t n; // blocklength 2^m
    BitMatrix G;  // dim x n
    BitMatrix Gt; // n x dim

    RmCode(uint32_t m_, int r_) : m(m_), r(r_) {
        if (r > int(m) || r < -1) throw std::invalid_argument("RmCode: need -1 <= r <= m");
        if (m > 20) throw std::invalid_argument("RmCode: m beyond desk scale");
        monomials = rm_monomials(m, r);
        dim = monomials.size();
        n = size_t(1) << m;
        G = BitMatrix(dim, n);
        for (size_t j = 0; j < dim; ++j) G.row(j) = rm_monomial_eval(m, monomials[j]);
        Gt = transpose(G);
    }
};

// Shared per-(m, r) cache; codes are immutable so concurrent readers are fine.
inline std::shared_ptr<const RmCode> get_rm_code(uint32_t m, int r) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, int>, std::shared_ptr<const RmCode>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto code = std::make_shared<const RmCode>(m, r);
    cache.emplace(key, code);
    return code;
}

// Generator of the dual RM(m, m-r-1); zero rows when r = m.
inline BitMatrix rm_parity_check(const RmCode& code) {
    if (code.r >= int(code.m)) return BitMatrix(0, code.n);
    return get_rm_code(code.m, int(code.m) - code.r - 1)->G;
}

inline BitVector rm_encode(const RmCode& code, const BitVector& message) {
    if (message.size() != code.dim) throw std::invalid_argument("rm_encode: message length mismatch");
    return vec_mat(message, code.G);
}

// Zero syndrome against the dual generator.
inline bool rm_is_codeword(const RmCode& code, const BitVector& word) {
    if (word.size() != code.n) throw std::invalid_argument("rm_is_codeword: length mismatch");
    const BitMatrix h = rm_parity_check(code);
    for (size_t i = 0; i < h.rows(); ++i)
        if (dot(h.row(i), word)) return false;
    return true;
}

// Erasure pattern is recoverable iff no nonzero codeword is supported inside
// it, i.e. the generator restricted to the kept points has full rank.
inline bool rm_erasure_correctable(const RmCode& code, const BitVector& erased) {
    if (erased.size() != code.n) throw std::invalid_argument("erasure_correctable: length mismatch");
    const BitVector keep = ~erased;
    BitMatrix masked(code.dim, code.n);
    for (size_t i = 0; i < code.dim; ++i) masked.row(i) = code.G.row(i) & keep;
    return rank(masked) == code.dim;
}

enum class ErasureStatus { Ok, Ambiguous, Inconsistent };

struct ErasureDecodeResult {
    ErasureStatus status;
    BitVector codeword; // full-length, valid when status == Ok
    BitVector message;  // valid when status == Ok
};

// Unique codeword agreeing with y off the erasures, found by eliminating the
// generator columns restricted to the kept points. No RM-specific shortcuts;
// desk-scale blocklengths keep plain elimination cheap.
inline ErasureDecodeResult rm_erasure_decode(const RmCode& code, const BitVector& y,
                                             const BitVector& erased) {
    if (y.size() != code.n || erased.size() != code.n)
        throw std::invalid_argument("erasure_decode: length mismatch");
    // equations: for each kept point p, <Gt_p, msg> = y_p
    const size_t width = code.dim + 1;
    std::vector<BitVector> eqs;
    eqs.reserve(code.n);
    for (size_t p = 0; p < code.n; ++p) {
        if (erased.get(p)) continue;
        BitVector row(width);
        const BitVector& g = code.Gt.row(p);
        for (size_t wi = 0; wi < g.words(); ++wi) row.word(wi) = g.word(wi);
        row.clear_trailing();
        row.set(code.dim, y.get(p));
        eqs.push_back(std::move(row));
    }
    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t c = 0; c < code.dim && pr < eqs.size(); ++c) {
        size_t sel = pr;
        while (sel < eqs.size() && !eqs[sel].get(c)) ++sel;
        if (sel == eqs.size()) continue;
        std::swap(eqs[sel], eqs[pr]);
        for (size_t i = 0; i < eqs.size(); ++i)
            if (i != pr && eqs[i].get(c)) eqs[i] ^= eqs[pr];
        pivots.push_back(c);
        ++pr;
    }
    for (size_t i = pr; i < eqs.size(); ++i)
        if (eqs[i].get(code.dim)) return {ErasureStatus::Inconsistent, {}, {}};
    if (pivots.size() < code.dim) return {ErasureStatus::Ambiguous, {}, {}};

    BitVector msg(code.dim);
    for (size_t p = 0; p < pivots.size(); ++p)
        if (eqs[p].get(code.dim)) msg.set(pivots[p], true);
    return {ErasureStatus::Ok, rm_encode(code, msg), msg};
}

// In-place ANF (Moebius) transform: evaluation table -> multilinear
// coefficients indexed by subset mask. Involution over GF(2).
inline BitVector anf_transform(const BitVector& table, uint32_t m) {
    if (table.size() != size_t(1) << m) throw std::invalid_argument("anf_transform: length mismatch");
    BitVector a = table;
    for (uint32_t b = 0; b < m; ++b) {
        const size_t step = size_t(1) << b;
        for (size_t x = 0; x < a.size(); ++x)
            if (x & step)
                if (a.get(x ^ step)) a.flip(x);
    }
    return a;
}

} // namespace noisyxor
