#pragma once

// Bracket states of a diagram: a Resolution picks an A or B smoothing at
// every crossing; loops are traced by union-find over the 4n crossing
// spokes.  At spoke order (a,b,c,d), the A smoothing joins (a,d) and (b,c),
// the B smoothing joins (a,b) and (c,d).  For a positive crossing the A
// smoothing is the oriented one.
//
// States stream in tier order: ascending number of B's, then ascending
// bitmask; this fixes the generator order used everywhere downstream.

#include <bit>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "khlab/diagram.hpp"

namespace khlab {

inline constexpr int kDefaultCap = 20;

struct CapExceeded : std::runtime_error {
    CapExceeded(int crossings, int cap)
        : std::runtime_error("diagram has " + std::to_string(crossings) +
                             " crossings, cap is " + std::to_string(cap)) {}
};

inline void check_cap(const KnotDiagram& d, int cap) {
    if (d.crossing_count() > cap) throw CapExceeded(d.crossing_count(), cap);
}

struct Resolution {
    uint32_t mask = 0;  // bit t set = B smoothing at crossing t
    int size = 0;

    bool is_b(int site) const { return (mask >> site) & 1u; }
    int b_count() const { return std::popcount(mask); }
    std::string word() const {
        std::string w(size_t(size), 'A');
        for (int t = 0; t < size; ++t)
            if (is_b(t)) w[size_t(t)] = 'B';
        return w;
    }
    bool operator==(const Resolution& o) const { return mask == o.mask && size == o.size; }
};

struct ResolvedState {
    Resolution resolution;
    std::vector<int16_t> loop_of_spoke;  // spoke 4k+s -> loop id
    int loop_count = 0;                  // includes crossingless circles

    int loop_at(int crossing, int spoke) const {
        return loop_of_spoke[size_t(4 * crossing + spoke)];
    }
};

inline ResolvedState resolve(const KnotDiagram& d, Resolution r) {
    const int n = d.crossing_count();
    const int spokes = 4 * n;
    detail::PlainUF uf(spokes);
    for (int e = 0; e < d.edge_count(); ++e) {
        auto& oc = d.occurrences(e);
        uf.unite(4 * oc[0].crossing + oc[0].spoke, 4 * oc[1].crossing + oc[1].spoke);
    }
    for (int k = 0; k < n; ++k) {
        if (r.is_b(k)) {
            uf.unite(4 * k + 0, 4 * k + 1);
            uf.unite(4 * k + 2, 4 * k + 3);
        } else {
            uf.unite(4 * k + 0, 4 * k + 3);
            uf.unite(4 * k + 1, 4 * k + 2);
        }
    }
    ResolvedState st;
    st.resolution = r;
    st.loop_of_spoke.assign(size_t(spokes), -1);
    int next = 0;
    for (int s = 0; s < spokes; ++s) {
        int root = uf.find(s);
        if (st.loop_of_spoke[size_t(root)] < 0) st.loop_of_spoke[size_t(root)] = int16_t(next++);
        st.loop_of_spoke[size_t(s)] = st.loop_of_spoke[size_t(root)];
    }
    st.loop_count = next + d.circle_count();
    return st;
}

// Stream all 2^c resolutions ordered by (b_count, mask).
inline void for_each_resolution(const KnotDiagram& d, const std::function<void(Resolution)>& fn,
                                int cap = kDefaultCap) {
    check_cap(d, cap);
    const int n = d.crossing_count();
    for (int t = 0; t <= n; ++t) {
        if (t == 0) {
            fn(Resolution{0, n});
            continue;
        }
        uint32_t m = (1u << t) - 1;
        const uint32_t limit = (n == 32) ? ~0u : (1u << n) - 1;
        while (m <= limit) {
            fn(Resolution{m, n});
            // Gosper's hack: next mask with the same popcount.
            uint32_t c = m & uint32_t(-int32_t(m));
            uint32_t rr = m + c;
            uint32_t next = (((rr ^ m) >> 2) / c) | rr;
            if (rr == 0 || next <= m) break;
            m = next;
        }
    }
}

inline void for_each_state(const KnotDiagram& d, const std::function<void(const ResolvedState&)>& fn,
                           int cap = kDefaultCap) {
    for_each_resolution(d, [&](Resolution r) { fn(resolve(d, r)); }, cap);
}

inline std::vector<ResolvedState> enumerate_states(const KnotDiagram& d, int cap = kDefaultCap) {
    std::vector<ResolvedState> out;
    for_each_state(d, [&](const ResolvedState& s) { out.push_back(s); }, cap);
    return out;
}

struct EnhancedState {
    Resolution resolution;
    uint32_t labels = 0;  // bit l set = loop l labelled x, clear = labelled 1
    int loop_count = 0;

    int i() const { return resolution.b_count(); }
    int lambda() const { return loop_count - 2 * std::popcount(labels); }
    int j() const { return i() + lambda(); }
};

inline void for_each_enhanced(const KnotDiagram& d,
                              const std::function<void(const ResolvedState&, const EnhancedState&)>& fn,
                              int cap = kDefaultCap) {
    for_each_state(d, [&](const ResolvedState& st) {
        const uint32_t labels_end = 1u << st.loop_count;
        for (uint32_t lab = 0; lab < labels_end; ++lab)
            fn(st, EnhancedState{st.resolution, lab, st.loop_count});
    }, cap);
}

inline std::vector<EnhancedState> enumerate_enhanced(const KnotDiagram& d, int cap = kDefaultCap) {
    std::vector<EnhancedState> out;
    for_each_enhanced(d, [&](const ResolvedState&, const EnhancedState& s) { out.push_back(s); }, cap);
    return out;
}

// One A->B resmoothing: either two loops merge or one loop splits.
struct SiteTransition {
    enum class Kind : uint8_t { Merge, Split };
    int site = -1;
    Resolution target;
    Kind kind = Kind::Merge;
    // Merge: sources {from1, from2} -> target loop to1.
    // Split: source from1 -> target loops {to1, to2}.
    int from1 = -1, from2 = -1;
    int to1 = -1, to2 = -1;
};

// Transitions out of r, one per A-site, with loop bookkeeping matched
// through the shared spokes.  `target_state`, when supplied, must be
// resolve(d, r with the site flipped).
inline SiteTransition transition_at(const KnotDiagram& d, const ResolvedState& src, int site,
                                    const ResolvedState* target_state = nullptr) {
    if (src.resolution.is_b(site)) throw ValidationError("site is already B-smoothed");
    SiteTransition tr;
    tr.site = site;
    tr.target = Resolution{src.resolution.mask | (1u << site), src.resolution.size};
    ResolvedState local;
    if (!target_state) {
        local = resolve(d, tr.target);
        target_state = &local;
    }
    int l_ad = src.loop_at(site, 0);
    int l_bc = src.loop_at(site, 1);
    if (l_ad != l_bc) {
        tr.kind = SiteTransition::Kind::Merge;
        tr.from1 = std::min(l_ad, l_bc);
        tr.from2 = std::max(l_ad, l_bc);
        tr.to1 = target_state->loop_at(site, 0);
        if (target_state->loop_count != src.loop_count - 1)
            throw ValidationError("resmoothing did not merge cleanly");
    } else {
        tr.kind = SiteTransition::Kind::Split;
        tr.from1 = l_ad;
        int m1 = target_state->loop_at(site, 0);
        int m2 = target_state->loop_at(site, 2);
        if (m1 == m2 || target_state->loop_count != src.loop_count + 1)
            throw ValidationError("resmoothing did not split cleanly");
        tr.to1 = std::min(m1, m2);
        tr.to2 = std::max(m1, m2);
    }
    return tr;
}

inline std::vector<SiteTransition> transitions(const KnotDiagram& d, Resolution r) {
    ResolvedState src = resolve(d, r);
    std::vector<SiteTransition> out;
    for (int t = 0; t < d.crossing_count(); ++t)
        if (!r.is_b(t)) out.push_back(transition_at(d, src, t));
    return out;
}

// Map each loop of src to its loop in dst after flipping `site`; the
// loop(s) involved in the merge/split are handled by the transition.
inline std::vector<int> unaffected_loop_map(const KnotDiagram& d, const ResolvedState& src,
                                            const ResolvedState& dst) {
    std::vector<int> map(size_t(src.loop_count), -1);
    for (size_t s = 0; s < src.loop_of_spoke.size(); ++s)
        map[size_t(src.loop_of_spoke[s])] = dst.loop_of_spoke[s];
    // circles keep their identity; they occupy the trailing ids of both
    int n_src_spoke_loops = src.loop_count - d.circle_count();
    int n_dst_spoke_loops = dst.loop_count - d.circle_count();
    for (int c = 0; c < d.circle_count(); ++c)
        map[size_t(n_src_spoke_loops + c)] = n_dst_spoke_loops + c;
    return map;
}

// Debug dump, one line per state: `word=ABB loops=2`.
inline void dump_states(const KnotDiagram& d, std::ostream& os, int cap = kDefaultCap) {
    for_each_state(d, [&](const ResolvedState& st) {
        os << "word=" << st.resolution.word() << " loops=" << st.loop_count << "\n";
    }, cap);
}

}  // namespace khlab
