#pragma once

// Bigraded chain complexes over the enhanced states.
//
// The cube complex: generators at homological degree i are the enhanced
// states with i B-smoothings; the partial differential at an A-site acts
// by m on merges and Delta on splits, relabelling only the loops that the
// resmoothing touches.  Signs come from the Grassmann rule: a partial at
// site t picks up (-1)^(number of B-sites below t).
//
// The de Rham style complex DR: generators are pairs (enhanced state s,
// wedge subset w); the boundary is sum_t d_t(s) dx_t ^ w, with d_t zero on
// B-smoothed sites and dx_t ^ dx_t = 0.  Both complexes share the wedge
// bookkeeping: for the cube the wedge set *is* the B-set.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "khlab/diagram.hpp"
#include "khlab/frobenius.hpp"
#include "khlab/laurent.hpp"
#include "khlab/resolution.hpp"

namespace khlab {

struct ChainGenerator {
    uint32_t mask = 0;    // resolution word
    uint32_t labels = 0;  // bit l = loop l labelled x
    uint32_t wedge = 0;   // wedge subset; equals mask for cube complexes
    int i = 0;            // homological degree of this generator
    int j = 0;            // quantum grading
};

struct Triplet {
    int row = 0, col = 0;
    long long val = 0;
};

struct GradingShift {
    int homological = 0;  // -n_minus
    int quantum = 0;      // n_plus - 2*n_minus
};

inline int grassmann_sign(uint32_t wedge, int site) {
    return (std::popcount(wedge & ((1u << site) - 1u)) & 1) ? -1 : 1;
}

// Loop bookkeeping of one A->B flip, ready to act on label masks.
struct TransitionData {
    uint32_t target_mask = 0;
    bool merge = false;
    int l1 = -1, l2 = -1, m = -1;   // merge: loops l1,l2 -> m
    int l = -1, m1 = -1, m2 = -1;   // split: loop l -> m1,m2
    std::vector<int> loop_map;      // unaffected source loop -> target loop
    int src_loops = 0, dst_loops = 0;
};

inline TransitionData make_transition_data(const KnotDiagram& d, const ResolvedState& src,
                                           int site, const ResolvedState& dst) {
    TransitionData td;
    td.target_mask = src.resolution.mask | (1u << site);
    td.src_loops = src.loop_count;
    td.dst_loops = dst.loop_count;
    td.loop_map = unaffected_loop_map(d, src, dst);
    SiteTransition tr = transition_at(d, src, site, &dst);
    if (tr.kind == SiteTransition::Kind::Merge) {
        td.merge = true;
        td.l1 = tr.from1;
        td.l2 = tr.from2;
        td.m = tr.to1;
    } else {
        td.merge = false;
        td.l = tr.from1;
        td.m1 = tr.to1;
        td.m2 = tr.to2;
    }
    return td;
}

// Unsigned partial differential on a label mask; output terms have
// coefficient +1 in both algebras.
inline std::vector<uint32_t> apply_partial_labels(const FrobeniusAlgebraSpec& spec,
                                                  const TransitionData& td, uint32_t labels) {
    auto carry_unaffected = [&](uint32_t out) {
        for (int s = 0; s < td.src_loops; ++s) {
            if (td.merge ? (s == td.l1 || s == td.l2) : (s == td.l)) continue;
            if ((labels >> s) & 1u) out |= 1u << td.loop_map[size_t(s)];
        }
        return out;
    };
    std::vector<uint32_t> out;
    if (td.merge) {
        uint8_t la = uint8_t((labels >> td.l1) & 1u);
        uint8_t lb = uint8_t((labels >> td.l2) & 1u);
        for (auto& term : spec.mul_table[la][lb]) {
            uint32_t t = carry_unaffected(term.label ? (1u << td.m) : 0u);
            out.push_back(t);
        }
    } else {
        uint8_t l = uint8_t((labels >> td.l) & 1u);
        for (auto& term : spec.comul_table[l]) {
            uint32_t t = 0;
            if (term.left) t |= 1u << td.m1;
            if (term.right) t |= 1u << td.m2;
            out.push_back(carry_unaffected(t));
        }
    }
    return out;
}

class BigradedComplex {
public:
    // Number of chain levels (homological degrees 0 .. levels()-1).
    int levels() const { return int(gens_.size()); }
    const std::vector<ChainGenerator>& gens(int k) const { return gens_[size_t(k)]; }
    // Differential C^k -> C^{k+1}; valid for k in [0, levels()-2].
    const std::vector<Triplet>& diff(int k) const { return diff_[size_t(k)]; }

    AlgebraKind algebra() const { return algebra_; }
    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }
    GradingShift shift() const { return {-n_minus_, n_plus_ - 2 * n_minus_}; }

    // dim C^{ij} per raw bigrading.
    std::map<std::pair<int, int>, int> dims() const {
        std::map<std::pair<int, int>, int> out;
        for (auto& level : gens_)
            for (auto& g : level) out[{g.i, g.j}]++;
        return out;
    }

    // Graded Euler characteristic sum_{i,j} (-1)^i q^j dim C^{ij}.
    LaurentPoly euler_poly() const {
        LaurentPoly p(Var::q);
        for (auto& [ij, n] : dims()) p.add_term(ij.second, (ij.first % 2 == 0) ? n : -n);
        return p;
    }

    bool preserves_j() const {
        for (int k = 0; k + 1 < levels(); ++k)
            for (auto& t : diff_[size_t(k)])
                if (gens_[size_t(k)][size_t(t.col)].j != gens_[size_t(k) + 1][size_t(t.row)].j)
                    return false;
        return true;
    }

    bool differential_squares_to_zero() const {
        for (int k = 0; k + 2 < levels(); ++k) {
            std::map<std::pair<int, int>, long long> acc;
            // index d(k) entries by column of d(k+1)
            std::vector<std::vector<const Triplet*>> by_row(gens_[size_t(k) + 1].size());
            for (auto& t : diff_[size_t(k)]) by_row[size_t(t.row)].push_back(&t);
            for (auto& u : diff_[size_t(k) + 1])
                for (const Triplet* t : by_row[size_t(u.col)])
                    acc[{u.row, t->col}] += u.val * t->val;
            for (auto& [rc, v] : acc)
                if (v != 0) return false;
        }
        return true;
    }

    // Test fixture: copy with one matrix entry's sign flipped.
    BigradedComplex with_corrupted_entry(int level, size_t triplet_index) const {
        BigradedComplex c = *this;
        c.diff_[size_t(level)].at(triplet_index).val *= -1;
        return c;
    }

    static BigradedComplex cube(const KnotDiagram& d, const FrobeniusAlgebraSpec& spec,
                                int cap = kDefaultCap);
    static BigradedComplex de_rham(const KnotDiagram& d, int cap = 10);

private:
    std::vector<std::vector<ChainGenerator>> gens_;
    std::vector<std::vector<Triplet>> diff_;
    AlgebraKind algebra_ = AlgebraKind::Khovanov;
    int n_plus_ = 0, n_minus_ = 0;
};

namespace detail {

// Shared state-table: all resolutions materialized, with per-mask
// generator bases following the (b_count, mask, labels) order.
struct StateTable {
    std::vector<ResolvedState> states;    // indexed by mask
    std::vector<std::vector<uint32_t>> tiers;  // masks per b_count
    std::vector<size_t> gen_base;         // base generator index within tier (cube)
    std::vector<size_t> enh_base;         // base within the full enhanced list (DR)
    size_t total_enhanced = 0;

    StateTable(const KnotDiagram& d, int cap) {
        check_cap(d, cap);
        const int n = d.crossing_count();
        states.resize(size_t(1) << n);
        tiers.assign(size_t(n) + 1, {});
        gen_base.assign(size_t(1) << n, 0);
        enh_base.assign(size_t(1) << n, 0);
        std::vector<size_t> tier_fill(size_t(n) + 1, 0);
        for_each_resolution(d, [&](Resolution r) {
            states[r.mask] = resolve(d, r);
            tiers[size_t(r.b_count())].push_back(r.mask);
            gen_base[r.mask] = tier_fill[size_t(r.b_count())];
            tier_fill[size_t(r.b_count())] += size_t(1) << states[r.mask].loop_count;
            enh_base[r.mask] = total_enhanced;
            total_enhanced += size_t(1) << states[r.mask].loop_count;
        }, cap);
    }
};

}  // namespace detail

inline BigradedComplex BigradedComplex::cube(const KnotDiagram& d,
                                             const FrobeniusAlgebraSpec& spec, int cap) {
    detail::StateTable table(d, cap);
    const int n = d.crossing_count();

    BigradedComplex cx;
    cx.algebra_ = spec.kind;
    cx.n_plus_ = d.n_plus();
    cx.n_minus_ = d.n_minus();
    cx.gens_.resize(size_t(n) + 1);
    cx.diff_.resize(size_t(n));

    for (int i = 0; i <= n; ++i) {
        for (uint32_t mask : table.tiers[size_t(i)]) {
            const ResolvedState& st = table.states[mask];
            const uint32_t lab_end = 1u << st.loop_count;
            for (uint32_t lab = 0; lab < lab_end; ++lab) {
                int lambda = st.loop_count - 2 * std::popcount(lab);
                cx.gens_[size_t(i)].push_back(
                    ChainGenerator{mask, lab, mask, i, i + lambda});
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (uint32_t mask : table.tiers[size_t(i)]) {
            const ResolvedState& src = table.states[mask];
            for (int site = 0; site < n; ++site) {
                if ((mask >> site) & 1u) continue;
                uint32_t tmask = mask | (1u << site);
                TransitionData td = make_transition_data(d, src, site, table.states[tmask]);
                int sign = grassmann_sign(mask, site);
                const uint32_t lab_end = 1u << src.loop_count;
                for (uint32_t lab = 0; lab < lab_end; ++lab) {
                    int col = int(table.gen_base[mask] + lab);
                    for (uint32_t tlab : apply_partial_labels(spec, td, lab)) {
                        int row = int(table.gen_base[tmask] + tlab);
                        cx.diff_[size_t(i)].push_back(Triplet{row, col, sign});
                    }
                }
            }
        }
    }
    return cx;
}

inline BigradedComplex BigradedComplex::de_rham(const KnotDiagram& d, int cap) {
    detail::StateTable table(d, cap);
    const int n = d.crossing_count();

    BigradedComplex cx;
    cx.algebra_ = AlgebraKind::Khovanov;
    cx.n_plus_ = d.n_plus();
    cx.n_minus_ = d.n_minus();
    cx.gens_.resize(size_t(n) + 1);
    cx.diff_.resize(size_t(n));

    // Degree k holds C(n,k) wedge blocks, each of size total_enhanced,
    // ordered by wedge mask; block-local order is (b_count, mask, labels).
    std::vector<std::vector<uint32_t>> wedge_tiers(size_t(n) + 1);
    std::vector<size_t> wedge_rank(size_t(1) << n, 0);
    for (uint32_t m = 0; m < (1u << n); ++m) {
        int k = std::popcount(m);
        wedge_rank[m] = wedge_tiers[size_t(k)].size();
        wedge_tiers[size_t(k)].push_back(m);
    }

    auto gen_index = [&](uint32_t wedge, uint32_t mask, uint32_t lab) {
        return int(wedge_rank[wedge] * table.total_enhanced + table.enh_base[mask] + lab);
    };

    for (int k = 0; k <= n; ++k) {
        for (uint32_t wedge : wedge_tiers[size_t(k)]) {
            for (int i = 0; i <= n; ++i)
                for (uint32_t mask : table.tiers[size_t(i)]) {
                    const ResolvedState& st = table.states[mask];
                    const uint32_t lab_end = 1u << st.loop_count;
                    for (uint32_t lab = 0; lab < lab_end; ++lab) {
                        int lambda = st.loop_count - 2 * std::popcount(lab);
                        cx.gens_[size_t(k)].push_back(
                            ChainGenerator{mask, lab, wedge, k, i + lambda});
                    }
                }
        }
    }

    const FrobeniusAlgebraSpec& spec = FrobeniusAlgebraSpec::khovanov();
    for (int k = 0; k < n; ++k) {
        for (uint32_t wedge : wedge_tiers[size_t(k)]) {
            for (int i = 0; i <= n; ++i)
                for (uint32_t mask : table.tiers[size_t(i)]) {
                    const ResolvedState& src = table.states[mask];
                    for (int site = 0; site < n; ++site) {
                        if ((mask >> site) & 1u) continue;    // d_t = 0 on B-sites
                        if ((wedge >> site) & 1u) continue;   // dx_t ^ dx_t = 0
                        uint32_t tmask = mask | (1u << site);
                        uint32_t twedge = wedge | (1u << site);
                        TransitionData td =
                            make_transition_data(d, src, site, table.states[tmask]);
                        int sign = grassmann_sign(wedge, site);
                        const uint32_t lab_end = 1u << src.loop_count;
                        for (uint32_t lab = 0; lab < lab_end; ++lab) {
                            int col = gen_index(wedge, mask, lab);
                            for (uint32_t tlab : apply_partial_labels(spec, td, lab)) {
                                int row = gen_index(twedge, tmask, tlab);
                                cx.diff_[size_t(k)].push_back(Triplet{row, col, sign});
                            }
                        }
                    }
                }
        }
    }
    return cx;
}

}  // namespace khlab
