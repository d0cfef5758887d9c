#pragma once

// Lee homology over Q and the Rasmussen invariant.
//
// The Lee differential does not preserve the quantum grading but never
// lowers it, so g(v) = j(v) + n_plus - 2 n_minus filters the complex.
// S-levels are computed by rank analysis of the maps H(F^k C) -> H(C)
// across descending k:
//   rho(k) = sum_i  dim(ker d_i  cap F^k) - dim(im d_{i-1} cap F^k)
// s_max is the largest k with rho(k) >= 1, s_min the largest k where the
// filtered classes still span all of the Lee homology.

#include <climits>
#include <map>
#include <stdexcept>
#include <vector>

#include "khlab/complex.hpp"
#include "khlab/homology.hpp"
#include "khlab/linalg.hpp"

namespace khlab {

inline constexpr int kFiltrationInfinity = INT_MAX;

// Chain inside one homological level: (generator index, coefficient).
using SparseChain = std::vector<std::pair<int, Rational>>;

struct LeeResult {
    int total_dimension = 0;
    std::map<int, int> dim_by_degree;  // normalized homological degree -> dim
    // One representative cycle per homology class, with its level.
    std::vector<std::pair<int, SparseChain>> representatives;
};

struct RasmussenResult {
    int s_min = 0;
    int s_max = 0;
    int s = 0;
    double slice_genus_lower_bound() const { return double(s < 0 ? -s : s) / 2.0; }
};

// Normalized quantum filtration level of a chain; +infinity sentinel for 0.
inline int filtration_level(const BigradedComplex& cx, int level, const SparseChain& chain) {
    int g = kFiltrationInfinity;
    for (auto& [gen, coeff] : chain) {
        if (coeff == 0) continue;
        int v = cx.gens(level)[size_t(gen)].j + cx.shift().quantum;
        if (v < g) g = v;
    }
    return g;
}

namespace detail {

inline IntMat level_matrix(const BigradedComplex& cx, int k) {
    if (k < 0 || k + 1 >= cx.levels()) return IntMat(0, 0);
    IntMat m(int(cx.gens(k + 1).size()), int(cx.gens(k).size()));
    for (auto& t : cx.diff(k)) m.at(t.row, t.col) += t.val;
    return m;
}

}  // namespace detail

inline LeeResult lee_homology(const KnotDiagram& d, int cap = kDefaultCap) {
    BigradedComplex cx = BigradedComplex::cube(d, FrobeniusAlgebraSpec::lee(), cap);
    if (!cx.differential_squares_to_zero())
        throw std::runtime_error("Lee differential does not square to zero");

    LeeResult out;
    for (int k = 0; k < cx.levels(); ++k) {
        IntMat d_out = detail::level_matrix(cx, k);
        IntMat d_in = detail::level_matrix(cx, k - 1);

        std::vector<std::vector<Rational>> cycles;
        if (d_out.rows == 0) {
            // top level or zero map: everything is a cycle
            cycles.resize(cx.gens(k).size());
            for (size_t g = 0; g < cx.gens(k).size(); ++g) {
                cycles[g].assign(cx.gens(k).size(), Rational(0));
                cycles[g][g] = 1;
            }
        } else {
            cycles = kernel_basis(d_out);
        }

        RatSpan span;
        for (int c = 0; c < d_in.cols; ++c) {
            std::vector<Rational> col(size_t(d_in.rows));
            for (int r = 0; r < d_in.rows; ++r) col[size_t(r)] = d_in.at(r, c);
            span.add(std::move(col));
        }
        int dim_k = 0;
        for (auto& z : cycles) {
            if (span.add(std::vector<Rational>(z))) {
                ++dim_k;
                SparseChain chain;
                for (size_t g = 0; g < z.size(); ++g)
                    if (z[g] != 0) chain.emplace_back(int(g), z[g]);
                out.representatives.emplace_back(k + cx.shift().homological, std::move(chain));
            }
        }
        if (dim_k > 0) out.dim_by_degree[k + cx.shift().homological] = dim_k;
        out.total_dimension += dim_k;
    }
    return out;
}

inline RasmussenResult rasmussen_s(const KnotDiagram& d, int cap = kDefaultCap) {
    if (d.component_count() != 1)
        throw std::invalid_argument("s-invariant requires a knot (one component)");
    BigradedComplex cx = BigradedComplex::cube(d, FrobeniusAlgebraSpec::lee(), cap);
    if (!cx.differential_squares_to_zero())
        throw std::runtime_error("Lee differential does not square to zero");
    const int qshift = cx.shift().quantum;

    // Collect the filtration levels present.
    int g_min = INT_MAX, g_max = INT_MIN;
    for (int k = 0; k < cx.levels(); ++k)
        for (auto& g : cx.gens(k)) {
            int v = g.j + qshift;
            g_min = std::min(g_min, v);
            g_max = std::max(g_max, v);
        }

    // rho(k) accumulated over levels, for k in [g_min, g_max].
    const int K = g_max - g_min + 1;
    std::vector<int> rho(size_t(K), 0);

    for (int k = 0; k < cx.levels(); ++k) {
        IntMat d_out = detail::level_matrix(cx, k);
        IntMat d_in = detail::level_matrix(cx, k - 1);
        const int n_gens = int(cx.gens(k).size());
        const int rows_out = d_out.rows;

        // Generators of this level sorted by descending g.
        auto order = std::vector<int>(size_t(n_gens));
        for (int g = 0; g < n_gens; ++g) order[size_t(g)] = g;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return cx.gens(k)[size_t(a)].j > cx.gens(k)[size_t(b)].j;
        });

        // dim(ker d_out cap F^t): add columns of d_out in descending g and
        // track the column rank; kernel dim = #cols so far - rank.
        {
            RatSpan span;
            int added = 0;
            size_t pos = 0;
            for (int t = g_max; t >= g_min; --t) {
                while (pos < order.size() &&
                       cx.gens(k)[size_t(order[pos])].j + qshift >= t) {
                    int c = order[pos++];
                    std::vector<Rational> col(size_t(std::max(rows_out, 1)));
                    for (int r = 0; r < rows_out; ++r) col[size_t(r)] = d_out.at(r, c);
                    span.add(std::move(col));
                    ++added;
                }
                rho[size_t(t - g_min)] += added - span.rank();
            }
        }

        // dim(im d_in cap F^t) = rank(d_in) - rank(rows of d_in with g < t).
        if (d_in.cols > 0 && d_in.rows > 0) {
            int full_rank = rank_q(d_in);
            // Add rows in ascending g; rank after adding all rows with
            // g < t gives the projection rank away from F^t.
            auto row_order = std::vector<int>(size_t(n_gens));
            for (int g = 0; g < n_gens; ++g) row_order[size_t(g)] = g;
            std::sort(row_order.begin(), row_order.end(), [&](int a, int b) {
                return cx.gens(k)[size_t(a)].j < cx.gens(k)[size_t(b)].j;
            });
            RatSpan span;
            size_t pos = 0;
            for (int t = g_min; t <= g_max; ++t) {
                while (pos < row_order.size() &&
                       cx.gens(k)[size_t(row_order[pos])].j + qshift < t) {
                    int r = row_order[pos++];
                    std::vector<Rational> row(size_t(d_in.cols));
                    for (int c = 0; c < d_in.cols; ++c) row[size_t(c)] = d_in.at(r, c);
                    span.add(std::move(row));
                }
                rho[size_t(t - g_min)] -= full_rank - span.rank();
            }
        }
    }

    int total = rho[0];  // F^{g_min} is everything
    if (total <= 0) throw std::runtime_error("Lee homology unexpectedly trivial");

    RasmussenResult r;
    r.s_max = g_min;
    r.s_min = g_min;
    for (int t = g_min; t <= g_max; ++t) {
        if (rho[size_t(t - g_min)] >= 1) r.s_max = std::max(r.s_max, t);
        if (rho[size_t(t - g_min)] == total) r.s_min = std::max(r.s_min, t);
    }
    if ((r.s_min + r.s_max) % 2 != 0)
        throw std::runtime_error("s_min + s_max is odd; filtration bookkeeping bug");
    r.s = (r.s_min + r.s_max) / 2;
    return r;
}

}  // namespace khlab
