#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace superklr {

// Dense integer matrix, row major. Sizes here are desk scale; arithmetic is
// guarded against overflow rather than made arbitrary precision.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    std::int64_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matmul shape");
        IntMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                std::int64_t v = at(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) = checked(r.at(i, j), v * o.at(k, j));
            }
        return r;
    }

    IntMat operator+(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matadd shape");
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked(a_[i], o.a_[i]);
        return r;
    }

    IntMat operator*(std::int64_t s) const {
        IntMat r = *this;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    // Entrywise proportionality by +1 or -1; requires both nonzero.
    // Returns 0 when not proportional.
    int proportionality_sign(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return 0;
        int sign = 0;
        for (size_t i = 0; i < a_.size(); ++i) {
            if (a_[i] == 0 && o.a_[i] == 0) continue;
            if (a_[i] == o.a_[i]) {
                if (sign == -1) return 0;
                sign = 1;
            } else if (a_[i] == -o.a_[i]) {
                if (sign == 1) return 0;
                sign = -1;
            } else {
                return 0;
            }
        }
        return sign;
    }

    static std::int64_t checked(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

struct SmithResult {
    std::vector<std::int64_t> invariant_factors; // nonzero diagonal of the SNF
    int rank = 0;
    IntMat right; // V with A*V column-reduced; last cols - rank columns span ker A
};

// Smith normal form by gcd pivoting. Tracks the right transform so integer
// kernels come out as primitive lattice bases.
inline SmithResult smith(IntMat a) {
    const int m = a.rows(), n = a.cols();
    IntMat v = IntMat::identity(n);

    auto row_op = [&](int dst, int src, std::int64_t q) {
        for (int j = 0; j < n; ++j) a.at(dst, j) = IntMat::checked(a.at(dst, j), -q * a.at(src, j));
    };
    auto col_op = [&](int dst, int src, std::int64_t q) {
        for (int i = 0; i < m; ++i) a.at(i, dst) = IntMat::checked(a.at(i, dst), -q * a.at(i, src));
        for (int i = 0; i < n; ++i) v.at(i, dst) = IntMat::checked(v.at(i, dst), -q * v.at(i, src));
    };
    auto swap_rows = [&](int r1, int r2) {
        for (int j = 0; j < n; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    };
    auto swap_cols = [&](int c1, int c2) {
        for (int i = 0; i < m; ++i) std::swap(a.at(i, c1), a.at(i, c2));
        for (int i = 0; i < n; ++i) std::swap(v.at(i, c1), v.at(i, c2));
    };

    SmithResult out;
    int t = 0;
    while (t < m && t < n) {
        // Find the smallest nonzero pivot candidate.
        int pr = -1, pc = -1;
        std::int64_t best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                std::int64_t x = std::llabs(a.at(i, j));
                if (x && (best == 0 || x < best)) {
                    best = x;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        if (pr != t) swap_rows(t, pr);
        if (pc != t) swap_cols(t, pc);

        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                std::int64_t q = a.at(i, t) / a.at(t, t);
                row_op(i, t, q);
                if (a.at(i, t) != 0) {
                    swap_rows(t, i);
                    again = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                std::int64_t q = a.at(t, j) / a.at(t, t);
                col_op(j, t, q);
                if (a.at(t, j) != 0) {
                    swap_cols(t, j);
                    again = true;
                }
            }
        }
        ++t;
    }
    out.rank = t;

    // Enforce the divisibility chain d1 | d2 | ... on the diagonal.
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            std::int64_t &di = a.at(i, i), &dj = a.at(j, j);
            if (dj % di == 0) continue;
            std::int64_t g = std::gcd(di, dj);
            dj = di / g * dj;
            di = g;
        }
    for (int i = 0; i < t; ++i) out.invariant_factors.push_back(std::llabs(a.at(i, i)));
    out.right = std::move(v);
    return out;
}

// Primitive basis of { x : A x = 0 } as columns.
inline IntMat kernel(const IntMat& a) {
    SmithResult s = smith(a);
    const int n = a.cols();
    const int k = n - s.rank;
    IntMat out(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) out.at(i, j) = s.right.at(i, s.rank + j);
    return out;
}

// Solves A x = b exactly over the integers (b a column matrix); returns false
// when no integral solution exists.
inline bool solve(const IntMat& a, const IntMat& b, IntMat& x) {
    const int m = a.rows(), n = a.cols();
    if (b.rows() != m) throw std::invalid_argument("solve shape");
    // Row-reduce [A | b] over Z with full column tracking on A only.
    IntMat aa = a, bb = b;
    IntMat v = IntMat::identity(n);
    int t = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && t < m; ++col) {
        // gcd-reduce column `col` below row t
        while (true) {
            int pr = -1;
            std::int64_t best = 0;
            for (int i = t; i < m; ++i) {
                std::int64_t xv = std::llabs(aa.at(i, col));
                if (xv && (best == 0 || xv < best)) {
                    best = xv;
                    pr = i;
                }
            }
            if (pr < 0) break;
            if (pr != t) {
                for (int j = 0; j < n; ++j) std::swap(aa.at(t, j), aa.at(pr, j));
                for (int j = 0; j < bb.cols(); ++j) std::swap(bb.at(t, j), bb.at(pr, j));
            }
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (aa.at(i, col) == 0) continue;
                std::int64_t q = aa.at(i, col) / aa.at(t, col);
                for (int j = 0; j < n; ++j)
                    aa.at(i, j) = IntMat::checked(aa.at(i, j), -q * aa.at(t, j));
                for (int j = 0; j < bb.cols(); ++j)
                    bb.at(i, j) = IntMat::checked(bb.at(i, j), -q * bb.at(t, j));
                if (aa.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (aa.at(t, col) != 0) {
            pivot_col.push_back(col);
            ++t;
        }
    }
    (void)v;
    // Back substitution over Q with integrality checks.
    const int bcols = b.cols();
    x = IntMat(n, bcols);
    for (int bc = 0; bc < bcols; ++bc) {
        std::vector<std::int64_t> xv(n, 0);
        for (int i = t - 1; i >= 0; --i) {
            int pc = pivot_col[i];
            std::int64_t rhs = bb.at(i, bc);
            for (int j = pc + 1; j < n; ++j) rhs = IntMat::checked(rhs, -aa.at(i, j) * xv[j]);
            if (rhs % aa.at(i, pc) != 0) return false;
            xv[pc] = rhs / aa.at(i, pc);
        }
        // Consistency for the zero rows.
        for (int i = t; i < m; ++i) {
            std::int64_t rhs = bb.at(i, bc);
            for (int j = 0; j < n; ++j) rhs = IntMat::checked(rhs, -aa.at(i, j) * xv[j]);
            if (rhs != 0) return false;
        }
        for (int i = 0; i < n; ++i) x.at(i, bc) = xv[i];
    }
    return true;
}

// Rank over the prime field F_p.
inline int rank_mod_p(IntMat a, std::int64_t p) {
    const int m = a.rows(), n = a.cols();
    auto norm = [&](std::int64_t v) {
        v %= p;
        if (v < 0) v += p;
        return v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = norm(a.at(i, j));
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pr = -1;
        for (int i = rank; i < m; ++i)
            if (a.at(i, col)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != rank)
            for (int j = 0; j < n; ++j) std::swap(a.at(rank, j), a.at(pr, j));
        // Invert the pivot mod p.
        std::int64_t inv = 1, base = a.at(rank, col), e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int j = 0; j < n; ++j) a.at(rank, j) = a.at(rank, j) * inv % p;
        for (int i = 0; i < m; ++i) {
            if (i == rank || a.at(i, col) == 0) continue;
            std::int64_t f = a.at(i, col);
            for (int j = 0; j < n; ++j) a.at(i, j) = norm(a.at(i, j) - f * a.at(rank, j));
        }
        ++rank;
    }
    return rank;
}

} // namespace superklr
