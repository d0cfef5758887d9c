#pragma once

// Exact homology of a bigraded complex: free ranks and torsion over Z via
// Smith normal form, dimensions over Z/2 and Q, with normalized gradings
// (i - n_minus, j + n_plus - 2 n_minus).  The quantum grading must be
// preserved by the differential (Khovanov and DR complexes); blocks are
// computed per j-column independently.

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "khlab/bracket.hpp"
#include "khlab/complex.hpp"
#include "khlab/linalg.hpp"

namespace khlab {

enum class Coeff : uint8_t { Z, Z2, Q };

inline const char* coeff_name(Coeff c) {
    switch (c) {
        case Coeff::Z: return "Z";
        case Coeff::Z2: return "Z2";
        default: return "Q";
    }
}

struct HomologyEntry {
    long long free_rank = 0;
    std::vector<long long> torsion;  // prime powers per invariant factor
    bool operator==(const HomologyEntry&) const = default;
};

struct HomologyTable {
    Coeff coeff = Coeff::Z;
    std::map<std::pair<int, int>, HomologyEntry> entries;  // normalized (i, j)
    bool operator==(const HomologyTable& o) const {
        return coeff == o.coeff && entries == o.entries;
    }

    long long total_rank() const {
        long long n = 0;
        for (auto& [k, e] : entries) n += e.free_rank;
        return n;
    }
};

namespace detail {

inline std::vector<long long> prime_power_factors(BigInt d) {
    std::vector<long long> out;
    for (BigInt p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            BigInt pk = 1;
            while (d % p == 0) {
                d /= p;
                pk *= p;
            }
            out.push_back(pk.convert_to<long long>());
        }
    }
    if (d > 1) out.push_back(d.convert_to<long long>());
    return out;
}

}  // namespace detail

inline HomologyTable homology(const BigradedComplex& cx, Coeff coeff) {
    if (!cx.differential_squares_to_zero())
        throw std::runtime_error("differential does not square to zero (sign bug upstream)");
    if (!cx.preserves_j())
        throw std::invalid_argument("homology() needs a j-preserving complex");

    // Per level: local position of each generator inside its j-column.
    const int L = cx.levels();
    auto local = std::vector<std::vector<int>>(size_t(L));
    auto col_dims = std::vector<std::map<int, int>>(size_t(L));  // j -> dim
    for (int k = 0; k < L; ++k) {
        local[size_t(k)].resize(cx.gens(k).size());
        for (size_t g = 0; g < cx.gens(k).size(); ++g) {
            int j = cx.gens(k)[g].j;
            local[size_t(k)][g] = col_dims[size_t(k)][j]++;
        }
    }

    // Block matrices per (level, j).
    std::map<std::pair<int, int>, IntMat> blocks;
    for (int k = 0; k + 1 < L; ++k) {
        for (auto& [j, cols] : col_dims[size_t(k)]) {
            auto rows_it = col_dims[size_t(k) + 1].find(j);
            int rows = rows_it == col_dims[size_t(k) + 1].end() ? 0 : rows_it->second;
            blocks.emplace(std::pair{k, j}, IntMat(rows, cols));
        }
        for (auto& t : cx.diff(k)) {
            int j = cx.gens(k)[size_t(t.col)].j;
            blocks.at({k, j}).at(local[size_t(k) + 1][size_t(t.row)],
                                 local[size_t(k)][size_t(t.col)]) += t.val;
        }
    }

    // Ranks (and torsion for Z) per block.
    std::map<std::pair<int, int>, int> rank;
    std::map<std::pair<int, int>, std::vector<long long>> torsion;
    for (auto& [key, m] : blocks) {
        if (m.rows == 0 || m.cols == 0) {
            rank[key] = 0;
            continue;
        }
        switch (coeff) {
            case Coeff::Z: {
                SnfResult snf = smith_normal_form(m);
                rank[key] = snf.rank;
                auto& tor = torsion[key];
                for (auto& dinv : snf.invariants)
                    if (dinv > 1)
                        for (long long pk : detail::prime_power_factors(dinv)) tor.push_back(pk);
                break;
            }
            case Coeff::Z2: rank[key] = rank_f2(m); break;
            case Coeff::Q: rank[key] = rank_q(m); break;
        }
    }

    GradingShift shift = cx.shift();
    HomologyTable table;
    table.coeff = coeff;
    for (int k = 0; k < L; ++k) {
        for (auto& [j, dim] : col_dims[size_t(k)]) {
            auto out_it = rank.find({k, j});
            int r_out = out_it == rank.end() ? 0 : out_it->second;
            auto in_it = rank.find({k - 1, j});
            int r_in = in_it == rank.end() ? 0 : in_it->second;
            HomologyEntry e;
            e.free_rank = dim - r_out - r_in;
            if (coeff == Coeff::Z) {
                auto t_it = torsion.find({k - 1, j});
                if (t_it != torsion.end()) e.torsion = t_it->second;
            }
            if (e.free_rank != 0 || !e.torsion.empty())
                table.entries[{k + shift.homological, j + shift.quantum}] = std::move(e);
        }
    }
    return table;
}

// Poincare polynomial sum t^i q^j dim over the rational table.
inline Laurent2 poincare(const HomologyTable& table) {
    if (table.coeff != Coeff::Q)
        throw std::invalid_argument("poincare polynomial wants the rational table");
    Laurent2 p;
    for (auto& [ij, e] : table.entries) p.add_term(ij.first, ij.second, e.free_rank);
    return p;
}

// Categorification consistency: the graded Euler characteristic of the
// complex equals the q-bracket, and P(-1, q) equals the Jones polynomial.
inline bool euler_check(const BigradedComplex& cx, const KnotDiagram& d, int cap = kDefaultCap) {
    try {
        if (cx.euler_poly() != bracket_q(d, cap)) return false;
        Laurent2 P = poincare(homology(cx, Coeff::Q));
        return P.at_t(-1) == jones(d, cap);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace khlab
