#pragma once

// Planar diagrams of knots and links in PD notation, plus braid-word input.
//
// A crossing X(a,b,c,d) lists the four incident edge labels counterclockwise
// starting from the incoming under-strand edge a; c is the outgoing
// under-strand edge and b, d carry the over-strand.  Orientations are
// recovered from the requirement that every edge has exactly one head and
// one tail.  Sign rule: the crossing is positive when the over-strand runs
// b -> d (enters at b), negative when it runs d -> b.  Under this rule
// PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)] is the all-positive trefoil.
//
// Crossingless circle components are written O(k) and kept first-class.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace khlab {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Crossing {
    // Spokes 0..3 = a,b,c,d.
    std::array<int, 4> e;
    int operator[](int i) const { return e[size_t(i)]; }
    bool operator==(const Crossing& o) const { return e == o.e; }
};

// Location of an edge occurrence: (crossing index, spoke 0..3).
struct Spoke {
    int crossing = -1;
    int spoke = -1;
    bool operator==(const Spoke& o) const { return crossing == o.crossing && spoke == o.spoke; }
};

class KnotDiagram {
public:
    KnotDiagram() = default;

    // Raw construction from crossing tuples and circle ids; validates,
    // renumbers edges canonically and computes orientations and signs.
    KnotDiagram(std::vector<Crossing> crossings, int circle_count)
        : crossings_(std::move(crossings)), circle_count_(circle_count) {
        canonicalize();
        validate_and_orient();
    }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return int(crossings_.size()); }
    int circle_count() const { return circle_count_; }
    int edge_count() const { return edge_count_; }
    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }
    int writhe() const { return n_plus_ - n_minus_; }
    int component_count() const { return component_count_; }
    int sign(int crossing) const { return signs_[size_t(crossing)]; }

    // The two occurrences of an edge among crossing spokes.
    const std::array<Spoke, 2>& occurrences(int edge) const { return occ_[size_t(edge)]; }
    // True if occurrence k of the edge is its head (edge flows into that spoke).
    bool head_is(int edge, int k) const { return head_occ_[size_t(edge)] == k; }
    Spoke head(int edge) const { return occ_[size_t(edge)][size_t(head_occ_[size_t(edge)])]; }
    Spoke tail(int edge) const { return occ_[size_t(edge)][size_t(1 - head_occ_[size_t(edge)])]; }

    bool operator==(const KnotDiagram& o) const {
        return crossings_ == o.crossings_ && circle_count_ == o.circle_count_;
    }

private:
    void canonicalize() {
        // Renumber edges 0..E-1 by first appearance in crossing order.
        std::map<int, int> remap;
        for (auto& cr : crossings_)
            for (int s = 0; s < 4; ++s) {
                auto [it, fresh] = remap.emplace(cr.e[size_t(s)], int(remap.size()));
                cr.e[size_t(s)] = it->second;
            }
        edge_count_ = int(remap.size());
    }

    void validate_and_orient();

    std::vector<Crossing> crossings_;
    int circle_count_ = 0;
    int edge_count_ = 0;
    int n_plus_ = 0;
    int n_minus_ = 0;
    int component_count_ = 0;
    std::vector<int8_t> signs_;
    std::vector<std::array<Spoke, 2>> occ_;
    std::vector<int8_t> head_occ_;  // which occurrence is the head, per edge
};

namespace detail {

// Union-find with parity relative to the root; used to solve the
// head/tail assignment as a GF(2) constraint system.
class ParityUF {
public:
    explicit ParityUF(int n) : parent_(size_t(n)), parity_(size_t(n), 0) {
        for (int i = 0; i < n; ++i) parent_[size_t(i)] = i;
    }
    // Returns (root, parity of x relative to root).
    std::pair<int, int> find(int x) {
        if (parent_[size_t(x)] == x) return {x, 0};
        auto [r, p] = find(parent_[size_t(x)]);
        parent_[size_t(x)] = r;
        parity_[size_t(x)] ^= p;
        return {r, parity_[size_t(x)]};
    }
    // Enforce value(x) xor value(y) == rel; false on contradiction.
    bool relate(int x, int y, int rel) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == rel;
        parent_[size_t(rx)] = ry;
        parity_[size_t(rx)] = int8_t(px ^ py ^ rel);
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int8_t> parity_;
};

class PlainUF {
public:
    explicit PlainUF(int n) : parent_(size_t(n)) {
        for (int i = 0; i < n; ++i) parent_[size_t(i)] = i;
    }
    int find(int x) {
        while (parent_[size_t(x)] != x) {
            parent_[size_t(x)] = parent_[size_t(parent_[size_t(x)])];
            x = parent_[size_t(x)];
        }
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent_[size_t(x)] = y;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

inline void KnotDiagram::validate_and_orient() {
    const int n = crossing_count();
    if (n == 0 && circle_count_ == 0)
        throw ValidationError("empty diagram: no crossings and no circles");

    // Every edge id must occur exactly twice among crossing spokes.
    occ_.assign(size_t(edge_count_), {});
    std::vector<int> count(size_t(edge_count_), 0);
    for (int k = 0; k < n; ++k)
        for (int s = 0; s < 4; ++s) {
            int e = crossings_[size_t(k)].e[size_t(s)];
            if (count[size_t(e)] < 2) occ_[size_t(e)][size_t(count[size_t(e)])] = Spoke{k, s};
            ++count[size_t(e)];
        }
    for (int e = 0; e < edge_count_; ++e)
        if (count[size_t(e)] != 2)
            throw ValidationError("edge " + std::to_string(e + 1) + " occurs " +
                                  std::to_string(count[size_t(e)]) + " times, expected 2");

    // Head/tail assignment.  Variable per edge: x_e = 1 iff occurrence 0 is
    // the head.  Spoke a forces head, spoke c forces tail; the over pair
    // (b,d) carries exactly one head.  Pins are encoded against a virtual
    // "true" node at index edge_count_.
    detail::ParityUF uf(edge_count_ + 1);
    const int TRUE_NODE = edge_count_;
    auto head_at = [&](Spoke sp) -> std::pair<int, int> {
        // head_here = x_e xor (occurrence index), as occurrence 1 being the
        // head means x_e = 0.
        int e = crossings_[size_t(sp.crossing)].e[size_t(sp.spoke)];
        int k = (occ_[size_t(e)][0] == sp) ? 0 : 1;
        return {e, k};
    };
    for (int k = 0; k < n; ++k) {
        auto [ea, ka] = head_at(Spoke{k, 0});
        if (!uf.relate(ea, TRUE_NODE, ka))  // head at a: x_e = 1 xor k
            throw ValidationError("inconsistent orientation at crossing " + std::to_string(k));
        auto [ec, kc] = head_at(Spoke{k, 2});
        if (!uf.relate(ec, TRUE_NODE, kc ^ 1))  // tail at c: x_e = k
            throw ValidationError("inconsistent orientation at crossing " + std::to_string(k));
        auto [eb, kb] = head_at(Spoke{k, 1});
        auto [ed, kd] = head_at(Spoke{k, 3});
        // exactly one of b,d is a head: head_b xor head_d = 1
        if (eb == ed) {
            // Over-strand enters and leaves through the same edge; the two
            // occurrences split head/tail automatically.
            continue;
        }
        if (!uf.relate(eb, ed, kb ^ kd ^ 1))
            throw ValidationError("inconsistent orientation at crossing " + std::to_string(k));
    }

    // Read the solution; orbits not tied to TRUE_NODE are free (components
    // that never pass under): orient them so the lowest-labelled edge keeps
    // its first occurrence as head.
    head_occ_.assign(size_t(edge_count_), 0);
    std::map<int, int> free_anchor_parity;  // root -> parity of lowest edge
    auto [true_root, true_par] = uf.find(TRUE_NODE);
    for (int e = 0; e < edge_count_; ++e) {
        auto [re, pe] = uf.find(e);
        if (re != true_root) free_anchor_parity.emplace(re, pe);
    }
    for (int e = 0; e < edge_count_; ++e) {
        auto [re, pe] = uf.find(e);
        int xe = (re == true_root) ? (pe ^ true_par ^ 1)
                                   : (pe ^ free_anchor_parity[re] ^ 1);
        head_occ_[size_t(e)] = int8_t(xe ? 0 : 1);
    }

    // Crossing signs: positive iff the over-strand enters at spoke b.
    signs_.assign(size_t(n), 0);
    n_plus_ = n_minus_ = 0;
    for (int k = 0; k < n; ++k) {
        int eb = crossings_[size_t(k)].e[1];
        bool b_is_head;
        int ed = crossings_[size_t(k)].e[3];
        if (eb == ed) {
            b_is_head = true;  // self-paired over-strand: fix b as entry
        } else {
            int kb = (occ_[size_t(eb)][0] == Spoke{k, 1}) ? 0 : 1;
            b_is_head = (head_occ_[size_t(eb)] == kb);
        }
        signs_[size_t(k)] = int8_t(b_is_head ? 1 : -1);
        (b_is_head ? n_plus_ : n_minus_)++;
    }

    // Components: edges joined through crossings along each strand.
    detail::PlainUF comp(edge_count_);
    for (auto& cr : crossings_) {
        comp.unite(cr.e[0], cr.e[2]);
        comp.unite(cr.e[1], cr.e[3]);
    }
    std::set<int> roots;
    for (int e = 0; e < edge_count_; ++e) roots.insert(comp.find(e));
    component_count_ = int(roots.size()) + circle_count_;
}

// --- PD text ----------------------------------------------------------

// Grammar:  PD[X(a,b,c,d), ..., O(k), ...]   (whitespace insensitive)
inline KnotDiagram parse_pd(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos; };
    auto expect = [&](const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) != 0)
            throw ParseError("expected '" + tok + "'", pos);
        pos += tok.size();
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected edge label", pos);
        long v = std::stol(text.substr(start, pos - start));
        if (v <= 0) throw ParseError("edge labels are positive", start);
        return int(v);
    };

    expect("PD");
    expect("[");
    std::vector<Crossing> crossings;
    std::set<int> circles;
    skip_ws();
    if (pos < text.size() && text[pos] != ']') {
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw ParseError("unterminated PD form", pos);
            char tag = text[pos];
            if (tag == 'X') {
                ++pos;
                expect("(");
                Crossing cr{};
                for (int s = 0; s < 4; ++s) {
                    cr.e[size_t(s)] = parse_int();
                    if (s < 3) expect(",");
                }
                expect(")");
                crossings.push_back(cr);
            } else if (tag == 'O') {
                ++pos;
                expect("(");
                int id = parse_int();
                if (!circles.insert(id).second)
                    throw ParseError("duplicate circle id " + std::to_string(id), pos);
                expect(")");
            } else {
                throw ParseError("expected X(...) or O(...)", pos);
            }
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            break;
        }
    }
    expect("]");
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input", pos);

    for (int id : circles)
        for (auto& cr : crossings)
            for (int s = 0; s < 4; ++s)
                if (cr.e[size_t(s)] == id)
                    throw ParseError("circle id " + std::to_string(id) + " also used as edge", 0);

    return KnotDiagram(std::move(crossings), int(circles.size()));
}

// Canonical PD text (1-based canonical edge labels).
inline std::string render_pd(const KnotDiagram& d) {
    std::string out = "PD[";
    bool first = true;
    for (auto& cr : d.crossings()) {
        if (!first) out += ",";
        first = false;
        out += "X(" + std::to_string(cr.e[0] + 1) + "," + std::to_string(cr.e[1] + 1) + "," +
               std::to_string(cr.e[2] + 1) + "," + std::to_string(cr.e[3] + 1) + ")";
    }
    for (int i = 0; i < d.circle_count(); ++i) {
        if (!first) out += ",";
        first = false;
        out += "O(" + std::to_string(d.edge_count() + i + 1) + ")";
    }
    return out + "]";
}

// --- Braid words ------------------------------------------------------

struct BraidWord {
    int strand_count = 1;
    std::vector<int> letters;  // +-k means sigma_k^{+-1}, 1 <= k < strand_count

    BraidWord(int strands, std::vector<int> ls) : strand_count(strands), letters(std::move(ls)) {
        if (strand_count < 1) throw ValidationError("braid needs at least one strand");
        for (int l : letters)
            if (l == 0 || std::abs(l) >= strand_count)
                throw ValidationError("braid letter out of range: " + std::to_string(l));
    }
};

// Text form `B[n; 1,1,1]`; letters may be empty: `B[2;]`.
inline BraidWord parse_braid(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos; };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return int(std::stol(text.substr(start, pos - start)));
    };
    expect('B');
    expect('[');
    int strands = parse_int();
    expect(';');
    std::vector<int> letters;
    skip_ws();
    if (pos < text.size() && text[pos] != ']') {
        while (true) {
            letters.push_back(parse_int());
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            break;
        }
    }
    expect(']');
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input", pos);
    return BraidWord(strands, std::move(letters));
}

inline std::string render_braid(const BraidWord& w) {
    std::string out = "B[" + std::to_string(w.strand_count) + ";";
    for (size_t i = 0; i < w.letters.size(); ++i)
        out += (i ? "," : " ") + std::to_string(w.letters[size_t(i)]);
    return out + "]";
}

// Trace closure of a braid word, all strands oriented downward.  A positive
// letter contributes a positive crossing.
inline KnotDiagram close_braid(const BraidWord& w) {
    int next_edge = 1;
    std::vector<int> pos_edge(size_t(w.strand_count));
    std::vector<int> start_edge(size_t(w.strand_count));
    for (int i = 0; i < w.strand_count; ++i) pos_edge[size_t(i)] = start_edge[size_t(i)] = next_edge++;

    std::vector<Crossing> crossings;
    for (int letter : w.letters) {
        int k = std::abs(letter) - 1;  // crossing between positions k, k+1
        if (letter > 0) {
            // strand at k passes over strand at k+1
            int u = pos_edge[size_t(k) + 1], o = pos_edge[size_t(k)];
            int u2 = next_edge++, o2 = next_edge++;
            crossings.push_back(Crossing{{u, o, u2, o2}});
            pos_edge[size_t(k)] = u2;
            pos_edge[size_t(k) + 1] = o2;
        } else {
            // strand at k passes under strand at k+1
            int u = pos_edge[size_t(k)], o = pos_edge[size_t(k) + 1];
            int u2 = next_edge++, o2 = next_edge++;
            crossings.push_back(Crossing{{u, o2, u2, o}});
            pos_edge[size_t(k)] = o2;
            pos_edge[size_t(k) + 1] = u2;
        }
    }

    // Closure: identify the final edge at each position with the initial
    // one there.  Positions never involved in a crossing close into circles.
    int circle_count = 0;
    std::map<int, int> glue;
    for (int i = 0; i < w.strand_count; ++i) {
        if (pos_edge[size_t(i)] == start_edge[size_t(i)]) {
            ++circle_count;
        } else {
            glue[pos_edge[size_t(i)]] = start_edge[size_t(i)];
        }
    }
    for (auto& cr : crossings)
        for (int s = 0; s < 4; ++s) {
            auto it = glue.find(cr.e[size_t(s)]);
            if (it != glue.end()) cr.e[size_t(s)] = it->second;
        }
    return KnotDiagram(std::move(crossings), circle_count);
}

// --- Diagram operations ----------------------------------------------

// Switch every crossing (over <-> under).  Keeps the planar cyclic order:
// the tuple rotates so the new incoming under-strand leads.
inline KnotDiagram mirror(const KnotDiagram& d) {
    std::vector<Crossing> out;
    out.reserve(size_t(d.crossing_count()));
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& e = d.crossings()[size_t(k)].e;
        if (d.sign(k) > 0)
            out.push_back(Crossing{{e[1], e[2], e[3], e[0]}});
        else
            out.push_back(Crossing{{e[3], e[0], e[1], e[2]}});
    }
    return KnotDiagram(std::move(out), d.circle_count());
}

// Faces of the underlying 4-valent map, traced as orbits of darts
// (crossing, spoke) under rotate-after-edge-traversal.
inline int face_count(const KnotDiagram& d) {
    const int n = d.crossing_count();
    const int darts = 4 * n;
    auto alpha = std::vector<int>(size_t(darts));  // other occurrence of the edge
    for (int e = 0; e < d.edge_count(); ++e) {
        auto& oc = d.occurrences(e);
        int s0 = 4 * oc[0].crossing + oc[0].spoke;
        int s1 = 4 * oc[1].crossing + oc[1].spoke;
        alpha[size_t(s0)] = s1;
        alpha[size_t(s1)] = s0;
    }
    std::vector<bool> seen(size_t(darts), false);
    int faces = 0;
    for (int start = 0; start < darts; ++start) {
        if (seen[size_t(start)]) continue;
        ++faces;
        int s = start;
        do {
            seen[size_t(s)] = true;
            int a = alpha[size_t(s)];
            s = (a & ~3) | ((a + 1) & 3);  // rotate one spoke at the far crossing
        } while (s != start);
    }
    return faces;
}

// Total genus of the surface the diagram embeds in; 0 iff the PD code is
// realizable in the plane.  Crossingless circles never contribute.
inline int total_genus(const KnotDiagram& d) {
    const int n = d.crossing_count();
    if (n == 0) return 0;
    detail::PlainUF comp(n);
    for (int e = 0; e < d.edge_count(); ++e) {
        auto& oc = d.occurrences(e);
        comp.unite(oc[0].crossing, oc[1].crossing);
    }
    std::map<int, int> verts, faces;
    for (int k = 0; k < n; ++k) verts[comp.find(k)]++;
    // faces, attributed to components via any dart
    {
        const int darts = 4 * n;
        auto alpha = std::vector<int>(size_t(darts));
        for (int e = 0; e < d.edge_count(); ++e) {
            auto& oc = d.occurrences(e);
            int s0 = 4 * oc[0].crossing + oc[0].spoke;
            int s1 = 4 * oc[1].crossing + oc[1].spoke;
            alpha[size_t(s0)] = s1;
            alpha[size_t(s1)] = s0;
        }
        std::vector<bool> seen(size_t(darts), false);
        for (int start = 0; start < darts; ++start) {
            if (seen[size_t(start)]) continue;
            faces[comp.find(start / 4)]++;
            int s = start;
            do {
                seen[size_t(s)] = true;
                int a = alpha[size_t(s)];
                s = (a & ~3) | ((a + 1) & 3);
            } while (s != start);
        }
    }
    int genus = 0;
    for (auto& [root, v] : verts) {
        int chi = faces[root] - v;  // V - E + F with E = 2V
        genus += (2 - chi) / 2;
    }
    return genus;
}

// Connected sum by edge surgery: cut edge e1 of a and edge e2 of b (ids in
// each diagram's canonical numbering) and cross-join the strands.
inline KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b,
                                 int e1 = 0, int e2 = 0) {
    if (a.crossing_count() == 0 && a.circle_count() == 1) return b;
    if (b.crossing_count() == 0 && b.circle_count() == 1) return a;
    if (e1 >= a.edge_count() || e2 >= b.edge_count())
        throw ValidationError("connected_sum: edge out of range");
    int offset = a.edge_count();
    std::vector<Crossing> out = a.crossings();
    for (auto cr : b.crossings()) {
        for (int s = 0; s < 4; ++s) cr.e[size_t(s)] += offset;
        out.push_back(cr);
    }
    // Swap the heads of e1 and e2+offset.
    Spoke h1 = a.head(e1);
    Spoke h2 = b.head(e2);
    out[size_t(h1.crossing)].e[size_t(h1.spoke)] = e2 + offset;
    out[size_t(h2.crossing) + size_t(a.crossing_count())].e[size_t(h2.spoke)] = e1;
    // 1-based ids for the constructor's canonical renumbering
    for (auto& cr : out)
        for (int s = 0; s < 4; ++s) cr.e[size_t(s)] += 1;
    return KnotDiagram(std::move(out), a.circle_count() + b.circle_count());
}

}  // namespace khlab
