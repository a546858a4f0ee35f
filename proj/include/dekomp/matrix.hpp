#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dekomp/ring.hpp"

namespace dekomp {

// A u x v relationship matrix over a ring; row i encodes the relation
// sum_j a_ij e_j among the generators e_1..e_v. u = 0 or v = 0 is allowed.
class Mat {
public:
    Mat(Ring ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(std::size_t(rows) * cols, Elem{}) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    static Mat identity(const Ring& r, int n) {
        Mat m(r, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = r.one();
        return m;
    }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!ring_.is_zero(e)) return false;
        return true;
    }

    bool row_is_zero(int i) const {
        for (int j = 0; j < cols_; ++j)
            if (!ring_.is_zero(at(i, j))) return false;
        return true;
    }

    bool col_is_zero(int j) const {
        for (int i = 0; i < rows_; ++i)
            if (!ring_.is_zero(at(i, j))) return false;
        return true;
    }

    Mat mul(const Mat& o) const {
        if (ring_ != o.ring_) throw DomainError("matrix product: ring mismatch");
        if (cols_ != o.rows_) throw DomainError("matrix product: dimension mismatch");
        Mat r(ring_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& v = at(i, k);
                if (ring_.is_zero(v)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (ring_.is_zero(o.at(k, j))) continue;
                    r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(v, o.at(k, j)));
                }
            }
        return r;
    }

    // Canonical text, including the header lines of the file format.
    std::string to_text() const {
        std::ostringstream os;
        os << "ring " << ring_.to_string() << "\n";
        os << "matrix " << rows_ << " " << cols_ << "\n";
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) os << " ";
                os << ring_.format_elem(at(i, j));
            }
            os << "\n";
        }
        return os.str();
    }

    // Entries only, one row per line (used in reports).
    std::string body_text() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) os << " ";
                os << ring_.format_elem(at(i, j));
            }
            if (i + 1 < rows_) os << "\n";
        }
        return os.str();
    }

    static Mat parse_text(const std::string& text);

private:
    Ring ring_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

inline Mat Mat::parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            std::size_t h = line.find('#');
            if (h != std::string::npos) line = line.substr(0, h);
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = line.find_last_not_of(" \t\r");
            out = line.substr(b, e - b + 1);
            return true;
        }
        return false;
    };
    std::string l;
    if (!next_content_line(l) || l.rfind("ring ", 0) != 0)
        throw ParseError("expected 'ring <descriptor>' on line " + std::to_string(lineno), lineno);
    Ring ring = Ring::parse(l.substr(5));
    if (!next_content_line(l) || l.rfind("matrix ", 0) != 0)
        throw ParseError("expected 'matrix <u> <v>' on line " + std::to_string(lineno), lineno);
    std::istringstream hs(l.substr(7));
    int u = -1, v = -1;
    hs >> u >> v;
    if (u < 0 || v < 0)
        throw ParseError("bad matrix dimensions on line " + std::to_string(lineno), lineno);
    Mat m(ring, u, v);
    for (int i = 0; i < u; ++i) {
        if (!next_content_line(l))
            throw ParseError("missing matrix row " + std::to_string(i + 1), lineno);
        std::istringstream rs(l);
        std::string tok;
        for (int j = 0; j < v; ++j) {
            if (!(rs >> tok))
                throw ParseError("row " + std::to_string(i + 1) + " has fewer than " +
                                     std::to_string(v) + " entries (line " +
                                     std::to_string(lineno) + ")",
                                 lineno);
            m.at(i, j) = ring.parse_elem(tok);
        }
        if (rs >> tok)
            throw ParseError("row " + std::to_string(i + 1) + " has extra entries (line " +
                                 std::to_string(lineno) + ")",
                             lineno);
    }
    if (next_content_line(l))
        throw ParseError("trailing content after matrix rows (line " + std::to_string(lineno) + ")",
                         lineno);
    return m;
}

// ---------------------------------------------------------------------------
// Blocks
// ---------------------------------------------------------------------------

// Column classes under the row-linking rule: two columns are linked when some
// row is nonzero in both. Classes are the connected components; all-zero
// columns are singletons.
struct BlockPartition {
    std::vector<std::vector<int>> classes;  // sorted columns, classes ordered by minimum
    int bn = 0;
};

inline BlockPartition detect_blocks(const Mat& A) {
    int v = A.cols();
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rank_(v, 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    };
    for (int i = 0; i < A.rows(); ++i) {
        int first = -1;
        for (int j = 0; j < v; ++j) {
            if (A.ring().is_zero(A.at(i, j))) continue;
            if (first < 0)
                first = j;
            else
                unite(first, j);
        }
    }
    BlockPartition bp;
    std::vector<int> root_class(v, -1);
    for (int j = 0; j < v; ++j) {
        int r = find(j);
        if (root_class[r] < 0) {
            root_class[r] = int(bp.classes.size());
            bp.classes.push_back({});
        }
        bp.classes[root_class[r]].push_back(j);
    }
    bp.bn = int(bp.classes.size());
    return bp;
}

// ---------------------------------------------------------------------------
// Invertible transforms
// ---------------------------------------------------------------------------

struct TransformPair {
    Mat P, Pinv, Q, Qinv;

    TransformPair(Mat p, Mat pinv, Mat q, Mat qinv)
        : P(std::move(p)), Pinv(std::move(pinv)), Q(std::move(q)), Qinv(std::move(qinv)) {
        verify();
    }

    void verify() const {
        const Ring& r = P.ring();
        if (P.mul(Pinv) != Mat::identity(r, P.rows()) ||
            Pinv.mul(P) != Mat::identity(r, P.rows()))
            throw DomainError("TransformPair: P inverse failed verification");
        if (Q.mul(Qinv) != Mat::identity(r, Q.rows()) ||
            Qinv.mul(Q) != Mat::identity(r, Q.rows()))
            throw DomainError("TransformPair: Q inverse failed verification");
    }
};

inline Mat apply_transform(const Mat& A, const TransformPair& t) {
    if (t.P.cols() != A.rows() || A.cols() != t.Q.rows())
        throw DomainError("apply_transform: dimension mismatch");
    return t.P.mul(A).mul(t.Q);
}

// Square invertible matrix built as a product of random elementary operations
// (row swaps, unit scalings, transvections), with its inverse tracked exactly.
// Deterministic for a fixed seed.
class InvertibleBuilder {
public:
    InvertibleBuilder(const Ring& ring, int n, std::uint64_t seed)
        : ring_(ring), n_(n), m_(Mat::identity(ring, n)), inv_(Mat::identity(ring, n)),
          rng_(seed) {}

    void randomize(int op_count) {
        if (n_ == 0) return;
        for (int k = 0; k < op_count; ++k) {
            int choice = n_ >= 2 ? int(rng_() % 3) : 1;
            switch (choice) {
                case 0: {  // swap
                    int i = int(rng_() % n_), j = int(rng_() % n_);
                    if (i != j) swap_rows(i, j);
                    break;
                }
                case 1: {  // scale by a unit
                    int i = int(rng_() % n_);
                    scale_row(i, random_unit());
                    break;
                }
                default: {  // transvection
                    int i = int(rng_() % n_), j = int(rng_() % n_);
                    if (i != j) add_multiple(i, j, random_elem());
                    break;
                }
            }
        }
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < n_; ++c) std::swap(m_.at(i, c), m_.at(j, c));
        for (int r = 0; r < n_; ++r) std::swap(inv_.at(r, i), inv_.at(r, j));
    }

    void scale_row(int i, const Elem& u) {
        Elem uinv = *ring_.try_invert(u);
        for (int c = 0; c < n_; ++c) m_.at(i, c) = ring_.mul(u, m_.at(i, c));
        for (int r = 0; r < n_; ++r) inv_.at(r, i) = ring_.mul(inv_.at(r, i), uinv);
    }

    // row_i += r * row_j
    void add_multiple(int i, int j, const Elem& r) {
        for (int c = 0; c < n_; ++c)
            m_.at(i, c) = ring_.add(m_.at(i, c), ring_.mul(r, m_.at(j, c)));
        for (int rr = 0; rr < n_; ++rr)
            inv_.at(rr, j) = ring_.sub(inv_.at(rr, j), ring_.mul(inv_.at(rr, i), r));
    }

    Mat matrix() const { return m_; }
    Mat inverse() const { return inv_; }

private:
    Elem random_unit() {
        if (ring_.kind() == Ring::Kind::Integers)
            return ring_.from_int(rng_() % 2 == 0 ? 1 : -1);
        Int sz = ring_.size();
        for (int tries = 0; tries < 1024; ++tries) {
            Elem e = ring_.element_at(Int(rng_() % std::uint64_t(sz)));
            if (ring_.is_unit(e)) return e;
        }
        return ring_.one();
    }

    Elem random_elem() {
        if (ring_.kind() == Ring::Kind::Integers)
            return ring_.from_int(Int(std::int64_t(rng_() % 7)) - 3);
        Int sz = ring_.size();
        return ring_.element_at(Int(rng_() % std::uint64_t(sz)));
    }

    Ring ring_;
    int n_;
    Mat m_, inv_;
    std::mt19937_64 rng_;
};

inline TransformPair random_invertible(const Ring& ring, int n, std::uint64_t seed,
                                       int op_count = -1) {
    if (!ring.is_finite() && ring.kind() != Ring::Kind::Integers)
        throw DomainError("random_invertible: ring must be finite or Z");
    if (op_count < 0) op_count = std::max(8, 6 * n);
    InvertibleBuilder pb(ring, n, seed * 2 + 1);
    pb.randomize(op_count);
    InvertibleBuilder qb(ring, n, seed * 2 + 2);
    qb.randomize(op_count);
    (void)qb;
    return TransformPair(pb.matrix(), pb.inverse(), qb.matrix(), qb.inverse());
}

// A single random invertible square matrix with its inverse.
inline std::pair<Mat, Mat> random_invertible_single(const Ring& ring, int n, std::uint64_t seed,
                                                    int op_count = -1) {
    if (op_count < 0) op_count = std::max(8, 6 * n);
    InvertibleBuilder b(ring, n, seed);
    b.randomize(op_count);
    return {b.matrix(), b.inverse()};
}

// ---------------------------------------------------------------------------
// Presentation minimization
// ---------------------------------------------------------------------------

struct MinimizeResult {
    Mat matrix;
    std::vector<std::string> audit;
};

namespace detail {

inline Mat drop_row_col(const Mat& A, int ri, int cj) {
    Mat r(A.ring(), A.rows() - (ri >= 0 ? 1 : 0), A.cols() - (cj >= 0 ? 1 : 0));
    int ii = 0;
    for (int i = 0; i < A.rows(); ++i) {
        if (i == ri) continue;
        int jj = 0;
        for (int j = 0; j < A.cols(); ++j) {
            if (j == cj) continue;
            r.at(ii, jj) = A.at(i, j);
            ++jj;
        }
        ++ii;
    }
    return r;
}

}  // namespace detail

// Presentation reduction: strips zero rows and duplicate rows everywhere; over
// local rings additionally cancels unit pivots (generator j is redundant when
// some a_ij is a unit). The result presents a module isomorphic to the input's.
inline MinimizeResult minimize_presentation(const Mat& A0) {
    const Ring& R = A0.ring();
    bool unit_pivots = R.is_local();
    Mat A = A0;
    std::vector<std::string> audit;
    bool changed = true;
    while (changed) {
        changed = false;
        // zero rows
        for (int i = 0; i < A.rows(); ++i) {
            if (A.row_is_zero(i)) {
                audit.push_back("drop zero row " + std::to_string(i + 1));
                A = detail::drop_row_col(A, i, -1);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // duplicate rows (row subtraction would leave a zero row)
        for (int i = 0; i < A.rows() && !changed; ++i)
            for (int k = i + 1; k < A.rows() && !changed; ++k) {
                bool same = true;
                for (int j = 0; j < A.cols(); ++j)
                    if (!(A.at(i, j) == A.at(k, j))) {
                        same = false;
                        break;
                    }
                if (same) {
                    audit.push_back("drop duplicate row " + std::to_string(k + 1) + " (= row " +
                                    std::to_string(i + 1) + ")");
                    A = detail::drop_row_col(A, k, -1);
                    changed = true;
                }
            }
        if (changed || !unit_pivots) continue;
        // first unit entry in row-major order
        for (int i = 0; i < A.rows() && !changed; ++i)
            for (int j = 0; j < A.cols() && !changed; ++j) {
                auto inv = R.try_invert(A.at(i, j));
                if (!inv) continue;
                // clear column j with row operations
                for (int k = 0; k < A.rows(); ++k) {
                    if (k == i || R.is_zero(A.at(k, j))) continue;
                    Elem f = R.mul(A.at(k, j), *inv);
                    for (int c = 0; c < A.cols(); ++c)
                        A.at(k, c) = R.sub(A.at(k, c), R.mul(f, A.at(i, c)));
                }
                // clear row i with column operations (only row i is affected now)
                for (int c = 0; c < A.cols(); ++c) {
                    if (c == j || R.is_zero(A.at(i, c))) continue;
                    A.at(i, c) = R.zero();
                }
                audit.push_back("unit pivot at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "): delete row and column");
                A = detail::drop_row_col(A, i, j);
                changed = true;
            }
    }
    return {A, audit};
}

// ---------------------------------------------------------------------------
// Direct sums
// ---------------------------------------------------------------------------

inline Mat direct_sum(const Mat& A, const Mat& B) {
    if (A.ring() != B.ring()) throw DomainError("direct_sum: ring mismatch");
    Mat r(A.ring(), A.rows() + B.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) r.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) r.at(A.rows() + i, A.cols() + j) = B.at(i, j);
    return r;
}

}  // namespace dekomp
