#pragma once

// Exact integer and rational linear algebra for the homology computations.
// Matrices are small and dense; entries use arbitrary-precision integers so
// the Smith reduction never overflows.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "khlab/complex.hpp"

namespace khlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;  // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

    BigInt& at(int r, int c) { return a[size_t(r) * size_t(cols) + size_t(c)]; }
    const BigInt& at(int r, int c) const { return a[size_t(r) * size_t(cols) + size_t(c)]; }

    static IntMat from_triplets(int rows, int cols, const std::vector<Triplet>& ts) {
        IntMat m(rows, cols);
        for (auto& t : ts) m.at(t.row, t.col) += t.val;
        return m;
    }
};

struct SnfResult {
    std::vector<BigInt> invariants;  // nonzero diagonal, d1 | d2 | ...
    int rank = 0;
};

// Smith normal form by gcd-minimizing pivot selection: repeatedly move the
// smallest nonzero entry of the working submatrix to the pivot seat and
// reduce its row and column by division, then fix up divisibility.
inline SnfResult smith_normal_form(IntMat m) {
    using std::swap;
    const int R = m.rows, C = m.cols;
    int t = 0;
    auto nonzero_in_sub = [&](int& pi, int& pj) {
        bool found = false;
        BigInt best;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                if (m.at(i, j) == 0) continue;
                BigInt v = abs(m.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    };
    while (t < R && t < C) {
        int pi = 0, pj = 0;
        if (!nonzero_in_sub(pi, pj)) break;
        for (int j = 0; j < C; ++j) swap(m.at(t, j), m.at(pi, j));
        for (int i = 0; i < R; ++i) swap(m.at(i, t), m.at(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear column t by division; a nonzero remainder becomes the
            // new, strictly smaller pivot
            for (int i = t + 1; i < R; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                for (int j = t; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    for (int j = t; j < C; ++j) swap(m.at(t, j), m.at(i, j));
                    clean = false;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                for (int i = t; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (int i = t; i < R; ++i) swap(m.at(i, t), m.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix-up: drag a non-multiple into the pivot column
            for (int i = t + 1; i < R && clean; ++i)
                for (int j = t + 1; j < C && clean; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (int c = t; c < C; ++c) m.at(t, c) += m.at(i, c);
                        clean = false;
                    }
        }
        ++t;
    }
    SnfResult out;
    for (int k = 0; k < t; ++k) {
        BigInt d = abs(m.at(k, k));
        if (d != 0) out.invariants.push_back(d);
    }
    std::sort(out.invariants.begin(), out.invariants.end());
    out.rank = int(out.invariants.size());
    return out;
}

// Rank over GF(2), rows packed into machine words.
inline int rank_f2(const IntMat& m) {
    const int R = m.rows, C = m.cols;
    const int W = (C + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(size_t(R), std::vector<uint64_t>(size_t(W), 0));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
            if (m.at(i, j) % 2 != 0) rows[size_t(i)][size_t(j / 64)] ^= uint64_t(1) << (j % 64);
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int w = col / 64;
        uint64_t bit = uint64_t(1) << (col % 64);
        int pivot = -1;
        for (int i = rank; i < R; ++i)
            if (rows[size_t(i)][size_t(w)] & bit) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[size_t(rank)], rows[size_t(pivot)]);
        for (int i = 0; i < R; ++i) {
            if (i == rank) continue;
            if (rows[size_t(i)][size_t(w)] & bit)
                for (int k = 0; k < W; ++k) rows[size_t(i)][size_t(k)] ^= rows[size_t(rank)][size_t(k)];
        }
        ++rank;
    }
    return rank;
}

// Rank over Q via fraction-free (Bareiss) elimination.
inline int rank_q(IntMat m) {
    const int R = m.rows, C = m.cols;
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < C && rank < R; ++col) {
        int pivot = -1;
        for (int i = rank; i < R; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < C; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        for (int i = rank + 1; i < R; ++i) {
            for (int j = col + 1; j < C; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

// --- rational elimination utilities ------------------------------------

using RatMat = std::vector<std::vector<Rational>>;  // row-major

inline RatMat rat_from_int(const IntMat& m) {
    RatMat r(size_t(m.rows), std::vector<Rational>(size_t(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[size_t(i)][size_t(j)] = m.at(i, j);
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int R = int(m.size()), C = int(m[0].size());
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int p = -1;
        for (int i = row; i < R; ++i)
            if (m[size_t(i)][size_t(col)] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[size_t(row)], m[size_t(p)]);
        Rational inv = m[size_t(row)][size_t(col)];
        for (int j = 0; j < C; ++j) m[size_t(row)][size_t(j)] /= inv;
        for (int i = 0; i < R; ++i) {
            if (i == row) continue;
            Rational f = m[size_t(i)][size_t(col)];
            if (f == 0) continue;
            for (int j = 0; j < C; ++j)
                m[size_t(i)][size_t(j)] -= f * m[size_t(row)][size_t(j)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of the null space of an integer matrix, as rational column vectors.
inline std::vector<std::vector<Rational>> kernel_basis(const IntMat& m) {
    RatMat r = rat_from_int(m);
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(size_t(m.cols), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[size_t(free)]) continue;
        std::vector<Rational> v(size_t(m.cols));
        v[size_t(free)] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[size_t(pivots[pr])] = -r[pr][size_t(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Incremental rational row-space: add vectors, track rank growth.
class RatSpan {
public:
    // Returns true if v was independent of the span (and absorbs it).
    bool add(std::vector<Rational> v) {
        for (auto& [col, row] : pivots_) {
            Rational f = v[size_t(col)];
            if (f == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[size_t(row)][j];
        }
        int lead = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { lead = int(j); break; }
        if (lead < 0) return false;
        Rational inv = v[size_t(lead)];
        for (auto& x : v) x /= inv;
        pivots_.emplace_back(lead, int(rows_.size()));
        rows_.push_back(std::move(v));
        return true;
    }
    int rank() const { return int(rows_.size()); }

private:
    std::vector<std::pair<int, int>> pivots_;  // (pivot column, row index)
    std::vector<std::vector<Rational>> rows_;
};

}  // namespace khlab
