#pragma once

// Reidemeister move generators over PD codes.  Sites are edge-id based
// (canonical 0-based ids; a crossingless circle is addressed as
// edge_count() + circle_index).  These are best-effort generators used to
// produce equivalent-diagram pairs for invariance testing; they do not
// normalize or simplify diagrams.
//
//   R1+ : insert a positive kink on an edge          (crossings +1)
//   R1- : insert a negative kink on an edge          (crossings +1)
//   R2  : push one strand over another               (crossings +2)
//   R3  : slide a strand across a crossing; the site is the edge whose two
//         endpoints lie on the moving strand's passes (both over or both
//         under) at two distinct crossings forming a triangle with a third.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "khlab/diagram.hpp"

namespace khlab {

enum class MoveKind : uint8_t { R1Plus, R1Minus, R2, R3 };

inline const char* move_name(MoveKind m) {
    switch (m) {
        case MoveKind::R1Plus: return "R1+";
        case MoveKind::R1Minus: return "R1-";
        case MoveKind::R2: return "R2";
        default: return "R3";
    }
}

struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Working copy of a diagram during surgery: 1-based scratch edge ids.
struct Surgery {
    std::vector<Crossing> crossings;
    int circle_count;
    int next_id;
    const KnotDiagram& d;

    explicit Surgery(const KnotDiagram& src) : circle_count(src.circle_count()), d(src) {
        for (auto cr : src.crossings()) {
            for (int s = 0; s < 4; ++s) cr.e[size_t(s)] += 1;
            crossings.push_back(cr);
        }
        next_id = src.edge_count() + 1;
    }

    bool is_circle(int edge0) const {
        return edge0 >= d.edge_count() && edge0 < d.edge_count() + d.circle_count();
    }
    void check_edge(int edge0) const {
        if (edge0 < 0 || edge0 >= d.edge_count() + d.circle_count())
            throw MoveError("site edge " + std::to_string(edge0) + " out of range");
    }
    int fresh() { return next_id++; }

    // Replace the head occurrence of edge e (0-based) with a new id and
    // return the id that now feeds the old head spoke.
    void replace_head(int edge0, int new_id) {
        Spoke h = d.head(edge0);
        crossings[size_t(h.crossing)].e[size_t(h.spoke)] = new_id;
    }

    KnotDiagram finish() { return KnotDiagram(std::move(crossings), circle_count); }
};

}  // namespace detail

// Insert a kink on `edge`; positive kink for R1+, negative for R1-.
inline KnotDiagram apply_r1(const KnotDiagram& d, int edge, bool positive) {
    detail::Surgery s(d);
    s.check_edge(edge);
    int m = s.fresh();
    if (s.is_circle(edge)) {
        int a = s.fresh();
        s.crossings.push_back(positive ? Crossing{{a, m, m, a}} : Crossing{{a, a, m, m}});
        s.circle_count -= 1;
    } else {
        int e = edge + 1;
        int f = s.fresh();
        s.replace_head(edge, f);
        s.crossings.push_back(positive ? Crossing{{e, m, m, f}} : Crossing{{e, f, m, m}});
    }
    return s.finish();
}

// Push the strand of `over_edge` across the strand of `under_edge`,
// creating one positive and one negative crossing.  The poke happens
// inside a face shared by the two edges; both chiralities are tried and
// one that keeps the diagram planar (genus-preserving, in general) is
// returned.  Sites whose edges bound no common face are rejected.
inline KnotDiagram apply_r2(const KnotDiagram& d, int over_edge, int under_edge) {
    if (over_edge == under_edge) throw MoveError("R2 needs two distinct edges");
    int base_genus = total_genus(d);
    for (int chirality = 0; chirality < 2; ++chirality) {
        detail::Surgery s(d);
        s.check_edge(over_edge);
        s.check_edge(under_edge);
        int x2 = s.fresh(), y2 = s.fresh();
        int x, x3, y, y3;
        if (s.is_circle(over_edge)) {
            x = s.fresh();
            x3 = x;
            s.circle_count -= 1;
        } else {
            x = over_edge + 1;
            x3 = s.fresh();
            s.replace_head(over_edge, x3);
        }
        if (s.is_circle(under_edge)) {
            y = s.fresh();
            y3 = y;
            s.circle_count -= 1;
        } else {
            y = under_edge + 1;
            y3 = s.fresh();
            s.replace_head(under_edge, y3);
        }
        if (chirality == 0) {
            s.crossings.push_back(Crossing{{y, x, y2, x2}});    // positive pass
            s.crossings.push_back(Crossing{{y2, x3, y3, x2}});  // negative pass
        } else {
            s.crossings.push_back(Crossing{{y, x2, y2, x}});    // negative pass
            s.crossings.push_back(Crossing{{y2, x2, y3, x3}});  // positive pass
        }
        KnotDiagram result = s.finish();
        if (total_genus(result) == base_genus) return result;
    }
    throw MoveError("R2 site edges do not bound a common face");
}

namespace detail {

// Directed (in, out) edges of one strand-line through a crossing.
struct Line {
    int in, out;
};

inline Line under_line(const KnotDiagram& d, int k) {
    return {d.crossings()[size_t(k)].e[0], d.crossings()[size_t(k)].e[2]};
}
inline Line over_line(const KnotDiagram& d, int k) {
    const auto& e = d.crossings()[size_t(k)].e;
    return d.sign(k) > 0 ? Line{e[1], e[3]} : Line{e[3], e[1]};
}
inline Crossing rebuild(Line under, Line over, int sign) {
    return sign > 0 ? Crossing{{under.in, over.in, under.out, over.out}}
                    : Crossing{{under.in, over.out, under.out, over.in}};
}

// The crossing other than `at` where `edge` ends, if any.
inline std::optional<int> other_crossing(const KnotDiagram& d, int edge, int at) {
    auto& oc = d.occurrences(edge);
    if (oc[0].crossing != at) return oc[0].crossing;
    if (oc[1].crossing != at) return oc[1].crossing;
    return std::nullopt;
}

// True if edges e1,e2,e3 bound a triangular face of the 4-valent map.
inline bool triangle_face_exists(const KnotDiagram& d, int e1, int e2, int e3) {
    const int n = d.crossing_count();
    const int darts = 4 * n;
    auto alpha = std::vector<int>(size_t(darts));
    for (int e = 0; e < d.edge_count(); ++e) {
        auto& oc = d.occurrences(e);
        int s0 = 4 * oc[0].crossing + oc[0].spoke;
        int s1 = 4 * oc[1].crossing + oc[1].spoke;
        alpha[size_t(s0)] = s1;
        alpha[size_t(s1)] = s0;
    }
    auto edge_at = [&](int dart) {
        return d.crossings()[size_t(dart / 4)].e[size_t(dart % 4)];
    };
    std::vector<bool> seen(size_t(darts), false);
    for (int start = 0; start < darts; ++start) {
        if (seen[size_t(start)]) continue;
        std::set<int> edges;
        int len = 0, s = start;
        do {
            seen[size_t(s)] = true;
            edges.insert(edge_at(s));
            ++len;
            int a = alpha[size_t(s)];
            s = (a & ~3) | ((a + 1) & 3);
        } while (s != start);
        if (len == 3 && edges == std::set<int>{e1, e2, e3}) return true;
    }
    return false;
}

// Swap the externals of a two-crossing strand passage: the strand runs
// ext_first -> F -> mid -> S -> ext_last; afterwards it runs through S
// first.  Returns the new lines at F and S.
struct SwappedLines {
    Line at_first, at_second;  // new lines at F and S respectively
};
inline SwappedLines swap_passage(Line at_f, Line at_s, int mid) {
    if (at_f.out != mid || at_s.in != mid) throw MoveError("triangle bookkeeping out of order");
    return {Line{mid, at_s.out}, Line{at_f.in, mid}};
}

}  // namespace detail

// Slide the strand carrying `edge` (over both of its end crossings, or
// under both) across the crossing that its two neighbours form.
inline KnotDiagram apply_r3(const KnotDiagram& d, int edge) {
    using detail::Line;
    if (edge < 0 || edge >= d.edge_count()) throw MoveError("R3 site must be a crossing edge");
    auto& occ = d.occurrences(edge);
    int A = occ[0].crossing, B = occ[1].crossing;
    if (A == B) throw MoveError("R3 site edge loops at a single crossing");
    auto kind_of = [](int spoke) { return spoke == 0 || spoke == 2; };  // true = under
    bool under_a = kind_of(occ[0].spoke), under_b = kind_of(occ[1].spoke);
    if (under_a != under_b)
        throw MoveError("R3 site edge must be over at both ends or under at both ends");
    const bool moving_under = under_a;

    // Lines at A and B: the moving strand X and the crossed strands Y, Z.
    Line x_at_a = moving_under ? detail::under_line(d, A) : detail::over_line(d, A);
    Line x_at_b = moving_under ? detail::under_line(d, B) : detail::over_line(d, B);
    Line y_at_a = moving_under ? detail::over_line(d, A) : detail::under_line(d, A);
    Line z_at_b = moving_under ? detail::over_line(d, B) : detail::under_line(d, B);

    // Locate the third crossing C adjacent to both non-moving lines.
    int C = -1, y2 = -1, z2 = -1;
    for (int ye : {y_at_a.in, y_at_a.out}) {
        for (int ze : {z_at_b.in, z_at_b.out}) {
            if (ye == ze) continue;
            auto cy = detail::other_crossing(d, ye, A);
            auto cz = detail::other_crossing(d, ze, B);
            if (!cy || !cz || *cy != *cz) continue;
            if (*cy == A || *cy == B) continue;
            // at C the two edges must sit on opposite lines
            Line cu = detail::under_line(d, *cy), co = detail::over_line(d, *cy);
            auto on = [&](Line l, int e) { return l.in == e || l.out == e; };
            bool y_under = on(cu, ye), y_over = on(co, ye);
            bool z_under = on(cu, ze), z_over = on(co, ze);
            if (((y_under && z_over) || (y_over && z_under)) &&
                detail::triangle_face_exists(d, edge, ye, ze)) {
                C = *cy;
                y2 = ye;
                z2 = ze;
                break;
            }
        }
        if (C >= 0) break;
    }
    if (C < 0) throw MoveError("no triangle at this site (R3 inapplicable)");

    Line y_at_c = detail::under_line(d, C);
    bool y_is_under_at_c =
        (y_at_c.in == y2 || y_at_c.out == y2);
    Line z_at_c = y_is_under_at_c ? detail::over_line(d, C) : detail::under_line(d, C);
    if (!y_is_under_at_c) y_at_c = detail::over_line(d, C);

    // Swap externals along each of the three strands.
    detail::SwappedLines xs = x_at_a.out == edge
                                  ? detail::swap_passage(x_at_a, x_at_b, edge)
                                  : [&] {
                                        auto r = detail::swap_passage(x_at_b, x_at_a, edge);
                                        return detail::SwappedLines{r.at_second, r.at_first};
                                    }();
    detail::SwappedLines ys = y_at_a.out == y2
                                  ? detail::swap_passage(y_at_a, y_at_c, y2)
                                  : [&] {
                                        auto r = detail::swap_passage(y_at_c, y_at_a, y2);
                                        return detail::SwappedLines{r.at_second, r.at_first};
                                    }();
    detail::SwappedLines zs = z_at_b.out == z2
                                  ? detail::swap_passage(z_at_b, z_at_c, z2)
                                  : [&] {
                                        auto r = detail::swap_passage(z_at_c, z_at_b, z2);
                                        return detail::SwappedLines{r.at_second, r.at_first};
                                    }();
    // xs/ys/zs carry: at_first = new line at the first-named crossing.
    Line x_new_a = x_at_a.out == edge ? xs.at_first : xs.at_second;
    Line x_new_b = x_at_a.out == edge ? xs.at_second : xs.at_first;
    Line y_new_a = y_at_a.out == y2 ? ys.at_first : ys.at_second;
    Line y_new_c = y_at_a.out == y2 ? ys.at_second : ys.at_first;
    Line z_new_b = z_at_b.out == z2 ? zs.at_first : zs.at_second;
    Line z_new_c = z_at_b.out == z2 ? zs.at_second : zs.at_first;

    std::vector<Crossing> out = d.crossings();
    auto rebuild_at = [&](int k, Line under, Line over) {
        out[size_t(k)] = detail::rebuild(under, over, d.sign(k));
    };
    if (moving_under) {
        rebuild_at(A, x_new_a, y_new_a);
        rebuild_at(B, x_new_b, z_new_b);
    } else {
        rebuild_at(A, y_new_a, x_new_a);
        rebuild_at(B, z_new_b, x_new_b);
    }
    if (y_is_under_at_c)
        rebuild_at(C, y_new_c, z_new_c);
    else
        rebuild_at(C, z_new_c, y_new_c);
    for (auto& cr : out)
        for (int s = 0; s < 4; ++s) cr.e[size_t(s)] += 1;
    return KnotDiagram(std::move(out), d.circle_count());
}

// Edges that admit the R3 slide.
inline std::vector<int> r3_sites(const KnotDiagram& d) {
    std::vector<int> sites;
    for (int e = 0; e < d.edge_count(); ++e) {
        try {
            apply_r3(d, e);
            sites.push_back(e);
        } catch (const MoveError&) {
        }
    }
    return sites;
}

inline KnotDiagram apply_reidemeister(const KnotDiagram& d, MoveKind move,
                                      const std::vector<int>& site) {
    switch (move) {
        case MoveKind::R1Plus:
            if (site.size() != 1) throw MoveError("R1+ site: one edge id");
            return apply_r1(d, site[0], true);
        case MoveKind::R1Minus:
            if (site.size() != 1) throw MoveError("R1- site: one edge id");
            return apply_r1(d, site[0], false);
        case MoveKind::R2:
            if (site.size() != 2) throw MoveError("R2 site: over edge id, under edge id");
            return apply_r2(d, site[0], site[1]);
        default:
            if (site.size() != 1) throw MoveError("R3 site: one edge id");
            return apply_r3(d, site[0]);
    }
}

}  // namespace khlab
