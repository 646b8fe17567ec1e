#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noisyxor {

// Dense bit-packed vector over GF(2). Coordinate j lives in word j/64 at bit
// j%64 (little-endian within the word); trailing bits beyond len stay zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    size_t size() const { return len_; }
    size_t words() const { return w_.size(); }
    uint64_t word(size_t i) const { return w_[i]; }
    uint64_t& word(size_t i) { return w_[i]; }

    bool get(size_t j) const { return (w_[j >> 6] >> (j & 63)) & 1u; }
    void set(size_t j, bool v) {
        const uint64_t m = uint64_t(1) << (j & 63);
        if (v)
            w_[j >> 6] |= m;
        else
            w_[j >> 6] &= ~m;
    }
    void flip(size_t j) { w_[j >> 6] ^= uint64_t(1) << (j & 63); }

    void clear_trailing() {
        if (len_ % 64 && !w_.empty()) w_.back() &= (uint64_t(1) << (len_ % 64)) - 1;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.len_ != len_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    BitVector operator&(const BitVector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("BitVector and: length mismatch");
        BitVector r(len_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    // Complement within length.
    BitVector operator~() const {
        BitVector r(len_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.clear_trailing();
        return r;
    }

    size_t weight() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.len_ == b.len_ && a.w_ == b.w_;
    }

    // Parity of <a, b>.
    friend bool dot(const BitVector& a, const BitVector& b) {
        if (a.len_ != b.len_) throw std::invalid_argument("dot: length mismatch");
        uint64_t acc = 0;
        for (size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
        return std::popcount(acc) & 1u;
    }

    // Indices of set bits, ascending.
    std::vector<uint32_t> support() const {
        std::vector<uint32_t> s;
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                s.push_back(uint32_t(64 * i + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return s;
    }

    // Lowercase hex, ceil(len/4) digits, least-significant digit (rightmost)
    // holds coordinates 0..3.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        const size_t nd = (len_ + 3) / 4;
        std::string s(nd, '0');
        for (size_t t = 0; t < nd; ++t) {
            const unsigned nib = unsigned(w_[t / 16] >> (4 * (t % 16))) & 0xF;
            s[nd - 1 - t] = digits[nib];
        }
        return s;
    }
    static BitVector from_hex(const std::string& s, size_t len) {
        BitVector v(len);
        const size_t nd = s.size();
        if (nd != (len + 3) / 4) throw std::invalid_argument("from_hex: digit count mismatch");
        for (size_t t = 0; t < nd; ++t) {
            const char c = s[nd - 1 - t];
            unsigned nib;
            if (c >= '0' && c <= '9')
                nib = unsigned(c - '0');
            else if (c >= 'a' && c <= 'f')
                nib = unsigned(c - 'a') + 10;
            else
                throw std::invalid_argument("from_hex: bad digit");
            v.w_[t / 16] |= uint64_t(nib) << (4 * (t % 16));
        }
        BitVector chk = v;
        chk.clear_trailing();
        if (!(chk == v)) throw std::invalid_argument("from_hex: bits set beyond length");
        return v;
    }

  private:
    size_t len_ = 0;
    std::vector<uint64_t> w_;
};

// Row-major dense matrix over GF(2); every row is a BitVector of equal length.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVector(cols)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const BitVector& row(size_t i) const { return r_[i]; }
    BitVector& row(size_t i) { return r_[i]; }

    bool get(size_t i, size_t j) const { return r_[i].get(j); }
    void set(size_t i, size_t j, bool v) { r_[i].set(j, v); }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> r_;
};

inline BitMatrix transpose(const BitMatrix& a) {
    BitMatrix t(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        const BitVector& r = a.row(i);
        for (size_t wi = 0; wi < r.words(); ++wi) {
            uint64_t w = r.word(wi);
            while (w) {
                const size_t j = 64 * wi + size_t(std::countr_zero(w));
                t.set(j, i, true);
                w &= w - 1;
            }
        }
    }
    return t;
}

// y = A * x.
inline BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
    BitVector y(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        if (dot(a.row(i), x)) y.set(i, true);
    return y;
}

// z^T * A, i.e. the XOR of the rows of A selected by z.
inline BitVector vec_mat(const BitVector& z, const BitMatrix& a) {
    if (z.size() != a.rows()) throw std::invalid_argument("vec_mat: dimension mismatch");
    BitVector y(a.cols());
    for (size_t wi = 0; wi < z.words(); ++wi) {
        uint64_t w = z.word(wi);
        while (w) {
            y ^= a.row(64 * wi + size_t(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return y;
}

inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) c.row(i) = vec_mat(a.row(i), b);
    return c;
}

namespace detail {

// In-place reduced row echelon form with first-nonzero pivoting; returns the
// pivot column of each pivot row, in order. Deterministic by construction.
inline std::vector<size_t> rref(BitMatrix& m) {
    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        size_t sel = pr;
        while (sel < m.rows() && !m.get(sel, c)) ++sel;
        if (sel == m.rows()) continue;
        std::swap(m.row(sel), m.row(pr));
        for (size_t i = 0; i < m.rows(); ++i)
            if (i != pr && m.get(i, c)) m.row(i) ^= m.row(pr);
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

} // namespace detail

inline size_t rank(const BitMatrix& a) {
    BitMatrix m = a;
    size_t pr = 0;
    for (size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        size_t sel = pr;
        while (sel < m.rows() && !m.get(sel, c)) ++sel;
        if (sel == m.rows()) continue;
        std::swap(m.row(sel), m.row(pr));
        for (size_t i = sel + 1; i < m.rows(); ++i)
            if (m.get(i, c)) m.row(i) ^= m.row(pr);
        ++pr;
    }
    return pr;
}

// Basis of {v : A v = 0}, assembled from the RREF: one vector per free
// column, in ascending free-column order (canonical for golden tests).
inline std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    BitMatrix m = a;
    const std::vector<size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(a.cols());
        v.set(f, true);
        for (size_t p = 0; p < pivots.size(); ++p)
            if (m.get(p, f)) v.set(pivots[p], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct LinearSolution {
    BitVector particular;           // one x with A x = b
    std::vector<BitVector> kernel;  // basis of {v : A v = 0}
};

// Gaussian elimination on [A | b]; nullopt when inconsistent.
inline std::optional<LinearSolution> solve(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t wi = 0; wi < a.row(i).words(); ++wi) aug.row(i).word(wi) = a.row(i).word(wi);
        aug.set(i, a.cols(), b.get(i));
    }

    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
        size_t sel = pr;
        while (sel < a.rows() && !aug.get(sel, c)) ++sel;
        if (sel == a.rows()) continue;
        std::swap(aug.row(sel), aug.row(pr));
        for (size_t i = 0; i < a.rows(); ++i)
            if (i != pr && aug.get(i, c)) aug.row(i) ^= aug.row(pr);
        pivots.push_back(c);
        ++pr;
    }
    for (size_t i = pr; i < a.rows(); ++i)
        if (aug.get(i, a.cols())) return std::nullopt;

    LinearSolution sol;
    sol.particular = BitVector(a.cols());
    for (size_t p = 0; p < pivots.size(); ++p)
        if (aug.get(p, a.cols())) sol.particular.set(pivots[p], true);

    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(a.cols());
        v.set(f, true);
        for (size_t p = 0; p < pivots.size(); ++p)
            if (aug.get(p, f)) v.set(pivots[p], true);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

// Basis of {z : z^T A = 0}.
inline std::vector<BitVector> left_kernel_basis(const BitMatrix& a) {
    return kernel_basis(transpose(a));
}

inline bool in_column_span(const BitMatrix& a, const BitVector& v) {
    if (v.size() != a.rows()) throw std::invalid_argument("in_column_span: length mismatch");
    return solve(a, v).has_value();
}

} // namespace noisyxor
