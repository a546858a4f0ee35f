#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dekomp/errors.hpp"

namespace dekomp {

// Dense linear algebra over GF(p). Entries are kept reduced to [0, p).
// p stays small (it is a ring characteristic), so plain int64 arithmetic is exact.

inline std::int64_t gf_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DomainError("gf_inv: not invertible mod p");
    return ((t % p) + p) % p;
}

struct GfMat {
    std::int64_t p = 2;
    int rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    GfMat() = default;
    GfMat(std::int64_t p_, int r, int c) : p(p_), rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    std::int64_t& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    static GfMat identity(std::int64_t p, int n) {
        GfMat m(p, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const GfMat& o) const {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const GfMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto v : a)
            if (v != 0) return false;
        return true;
    }

    GfMat mul(const GfMat& o) const {
        if (cols != o.rows || p != o.p) throw DomainError("GfMat::mul: shape/field mismatch");
        GfMat r(p, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                std::int64_t v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j)
                    r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % p;
            }
        return r;
    }

    GfMat add(const GfMat& o) const {
        if (rows != o.rows || cols != o.cols) throw DomainError("GfMat::add: shape mismatch");
        GfMat r(p, rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + o.a[i]) % p;
        return r;
    }

    GfMat sub(const GfMat& o) const {
        if (rows != o.rows || cols != o.cols) throw DomainError("GfMat::sub: shape mismatch");
        GfMat r(p, rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = ((a[i] - o.a[i]) % p + p) % p;
        return r;
    }

    GfMat scale(std::int64_t c) const {
        GfMat r(p, rows, cols);
        c = ((c % p) + p) % p;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] * c) % p;
        return r;
    }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
        if (int(x.size()) != cols) throw DomainError("GfMat::apply: size mismatch");
        std::vector<std::int64_t> r(rows, 0);
        for (int i = 0; i < rows; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < cols; ++j) s += at(i, j) * x[j];
            r[i] = s % p;
        }
        return r;
    }
};

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(GfMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        std::int64_t inv = gf_inv(m.at(r, c), m.p);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = (m.at(r, j) * inv) % m.p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            std::int64_t f = m.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = ((m.at(i, j) - f * m.at(r, j)) % m.p + m.p) % m.p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int gf_rank(GfMat m) { return int(rref(m).size()); }

// Basis of {x : A x = 0}, one solution per row of the result.
inline GfMat right_kernel(GfMat m) {
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    GfMat ker(m.p, int(free_cols.size()), m.cols);
    for (int k = 0; k < int(free_cols.size()); ++k) {
        int fc = free_cols[k];
        ker.at(k, fc) = 1;
        for (int r = 0; r < int(piv.size()); ++r) {
            std::int64_t v = m.at(r, fc);
            if (v != 0) ker.at(k, piv[r]) = (m.p - v) % m.p;
        }
    }
    return ker;
}

// One solution of A x = b, or nullopt. Free variables are set to zero.
inline std::optional<std::vector<std::int64_t>> solve_right(const GfMat& A,
                                                            const std::vector<std::int64_t>& b) {
    if (int(b.size()) != A.rows) throw DomainError("solve_right: size mismatch");
    GfMat aug(A.p, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = ((b[i] % A.p) + A.p) % A.p;
    }
    std::vector<int> piv = rref(aug);
    std::vector<std::int64_t> x(A.cols, 0);
    for (int r = 0; r < int(piv.size()); ++r) {
        if (piv[r] == A.cols) return std::nullopt;  // row (0..0 | 1): inconsistent
        x[piv[r]] = aug.at(r, A.cols);
    }
    return x;
}

inline std::optional<GfMat> gf_inverse(const GfMat& m) {
    if (m.rows != m.cols) return std::nullopt;
    GfMat aug(m.p, m.rows, 2 * m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    std::vector<int> piv = rref(aug);
    if (int(piv.size()) != m.rows) return std::nullopt;
    for (int r = 0; r < int(piv.size()); ++r)
        if (piv[r] != r) return std::nullopt;
    GfMat inv(m.p, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = m.at(i, m.cols + j);
    return inv;
}

// Incremental row space with reduced echelon rows; the membership test used all
// over the module engine.
class GfSpan {
public:
    GfSpan(std::int64_t p, int ambient) : p_(p), n_(ambient) {}

    int dim() const { return int(rows_.size()); }
    int ambient() const { return n_; }
    std::int64_t p() const { return p_; }

    // Reduce v against the current echelon rows.
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::int64_t f = v[piv_[r]] % p_;
            if (f == 0) continue;
            for (int j = 0; j < n_; ++j) v[j] = ((v[j] - f * rows_[r][j]) % p_ + p_) % p_;
        }
        for (auto& x : v) x = ((x % p_) + p_) % p_;
        return v;
    }

    bool contains(const std::vector<std::int64_t>& v) const {
        auto r = reduce(v);
        for (auto x : r)
            if (x != 0) return false;
        return true;
    }

    // Returns true if v enlarged the span.
    bool add(const std::vector<std::int64_t>& v) {
        auto r = reduce(v);
        int pc = -1;
        for (int j = 0; j < n_; ++j)
            if (r[j] != 0) {
                pc = j;
                break;
            }
        if (pc < 0) return false;
        std::int64_t inv = gf_inv(r[pc], p_);
        for (auto& x : r) x = (x * inv) % p_;
        // keep earlier rows reduced against the new one
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::int64_t f = rows_[k][pc];
            if (f == 0) continue;
            for (int j = 0; j < n_; ++j)
                rows_[k][j] = ((rows_[k][j] - f * r[j]) % p_ + p_) % p_;
        }
        // insert keeping pivots sorted
        std::size_t pos = 0;
        while (pos < piv_.size() && piv_[pos] < pc) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(r));
        piv_.insert(piv_.begin() + pos, pc);
        return true;
    }

    const std::vector<std::vector<std::int64_t>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    bool operator==(const GfSpan& o) const {
        return p_ == o.p_ && n_ == o.n_ && rows_ == o.rows_;
    }

private:
    std::int64_t p_;
    int n_;
    std::vector<std::vector<std::int64_t>> rows_;  // reduced echelon
    std::vector<int> piv_;
};

}  // namespace dekomp
