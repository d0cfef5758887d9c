#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "khlab/bracket.hpp"
#include "khlab/complex.hpp"

using namespace khlab;

namespace {
KnotDiagram trefoil() { return close_braid(BraidWord(2, {1, 1, 1})); }
KnotDiagram fig8() { return close_braid(BraidWord(3, {1, -2, 1, -2})); }
const FrobeniusAlgebraSpec& kh = FrobeniusAlgebraSpec::khovanov();
const FrobeniusAlgebraSpec& lee_spec = FrobeniusAlgebraSpec::lee();
}  // namespace

TEST_CASE("unknot complex has two generators and no differential") {
    BigradedComplex cx = BigradedComplex::cube(parse_pd("PD[O(1)]"), kh);
    REQUIRE(cx.levels() == 1);
    REQUIRE(cx.gens(0).size() == 2);
    auto dims = cx.dims();
    REQUIRE(dims.size() == 2);
    REQUIRE(dims.at({0, 1}) == 1);
    REQUIRE(dims.at({0, -1}) == 1);
    REQUIRE(cx.differential_squares_to_zero());
}

TEST_CASE("trefoil cube complex: generator tiers, d^2 = 0, j preserved") {
    BigradedComplex cx = BigradedComplex::cube(trefoil(), kh);
    REQUIRE(cx.levels() == 4);
    REQUIRE(cx.gens(0).size() == 4);
    REQUIRE(cx.gens(1).size() == 6);
    REQUIRE(cx.gens(2).size() == 12);
    REQUIRE(cx.gens(3).size() == 8);
    REQUIRE(cx.differential_squares_to_zero());
    REQUIRE(cx.preserves_j());

    int total = 0;
    for (auto& [ij, n] : cx.dims()) total += n;
    REQUIRE(total == 30);

    for (int k = 0; k + 1 < cx.levels(); ++k)
        for (auto& t : cx.diff(k)) REQUIRE((t.val == 1 || t.val == -1));
}

TEST_CASE("graded Euler characteristic equals the q bracket") {
    for (const auto& d : {trefoil(), fig8(), parse_pd("PD[X(1,2,2,1)]"),
                          close_braid(BraidWord(2, {1, 1}))}) {
        BigradedComplex cx = BigradedComplex::cube(d, kh);
        REQUIRE(cx.euler_poly() == bracket_q(d));
    }
}

TEST_CASE("merging two x-labelled loops kills the generator") {
    KnotDiagram d = trefoil();
    ResolvedState aaa = resolve(d, Resolution{0, 3});
    REQUIRE(aaa.loop_count == 2);
    ResolvedState target = resolve(d, Resolution{1, 3});
    TransitionData td = make_transition_data(d, aaa, 0, target);
    REQUIRE(td.merge);
    uint32_t both_x = 0b11;
    REQUIRE(apply_partial_labels(kh, td, both_x).empty());
    // the same merge under the Lee algebra produces the unit label
    auto lee_out = apply_partial_labels(lee_spec, td, both_x);
    REQUIRE(lee_out.size() == 1);
    REQUIRE(lee_out[0] == 0u);
}

TEST_CASE("lambda drops by one across every Khovanov partial") {
    for (const auto& d : {trefoil(), fig8()}) {
        for_each_resolution(d, [&](Resolution r) {
            ResolvedState src = resolve(d, r);
            for (int site = 0; site < d.crossing_count(); ++site) {
                if (r.is_b(site)) continue;
                ResolvedState dst = resolve(d, Resolution{r.mask | (1u << site), r.size});
                TransitionData td = make_transition_data(d, src, site, dst);
                const uint32_t lab_end = 1u << src.loop_count;
                for (uint32_t lab = 0; lab < lab_end; ++lab) {
                    int lam = src.loop_count - 2 * std::popcount(lab);
                    for (uint32_t tlab : apply_partial_labels(kh, td, lab)) {
                        int tlam = dst.loop_count - 2 * std::popcount(tlab);
                        REQUIRE(tlam == lam - 1);
                    }
                }
            }
        });
    }
}

TEST_CASE("unsigned partials commute; Grassmann signs anticommute") {
    KnotDiagram d = fig8();
    for_each_resolution(d, [&](Resolution r) {
        ResolvedState src = resolve(d, r);
        for (int i = 0; i < d.crossing_count(); ++i) {
            if (r.is_b(i)) continue;
            for (int j = i + 1; j < d.crossing_count(); ++j) {
                if (r.is_b(j)) continue;
                ResolvedState via_i = resolve(d, Resolution{r.mask | (1u << i), r.size});
                ResolvedState via_j = resolve(d, Resolution{r.mask | (1u << j), r.size});
                ResolvedState both =
                    resolve(d, Resolution{r.mask | (1u << i) | (1u << j), r.size});
                TransitionData t_i = make_transition_data(d, src, i, via_i);
                TransitionData t_ij = make_transition_data(d, via_i, j, both);
                TransitionData t_j = make_transition_data(d, src, j, via_j);
                TransitionData t_ji = make_transition_data(d, via_j, i, both);
                const uint32_t lab_end = 1u << src.loop_count;
                for (uint32_t lab = 0; lab < lab_end; ++lab) {
                    std::multiset<uint32_t> path_i, path_j;
                    for (uint32_t m : apply_partial_labels(kh, t_i, lab))
                        for (uint32_t f : apply_partial_labels(kh, t_ij, m)) path_i.insert(f);
                    for (uint32_t m : apply_partial_labels(kh, t_j, lab))
                        for (uint32_t f : apply_partial_labels(kh, t_ji, m)) path_j.insert(f);
                    REQUIRE(path_i == path_j);
                }
                // sign rule: the two orders pick up opposite signs
                int s1 = grassmann_sign(r.mask, i) * grassmann_sign(r.mask | (1u << i), j);
                int s2 = grassmann_sign(r.mask, j) * grassmann_sign(r.mask | (1u << j), i);
                REQUIRE(s1 == -s2);
            }
        }
    });
}

TEST_CASE("Lee complex: d^2 = 0 and the filtration never drops j") {
    for (const auto& d : {trefoil(), fig8(), close_braid(BraidWord(2, {1, 1}))}) {
        BigradedComplex cx = BigradedComplex::cube(d, lee_spec);
        REQUIRE(cx.differential_squares_to_zero());
        bool raises_somewhere = false;
        for (int k = 0; k + 1 < cx.levels(); ++k)
            for (auto& t : cx.diff(k)) {
                int js = cx.gens(k)[size_t(t.col)].j;
                int jt = cx.gens(k + 1)[size_t(t.row)].j;
                REQUIRE(jt >= js);
                if (jt > js) raises_somewhere = true;
            }
        REQUIRE(raises_somewhere);  // the deformation really shows up
    }
}

TEST_CASE("de Rham style complex") {
    // no crossings: identical to the cube complex
    BigradedComplex dr0 = BigradedComplex::de_rham(parse_pd("PD[O(1)]"));
    REQUIRE(dr0.levels() == 1);
    REQUIRE(dr0.gens(0).size() == 2);

    BigradedComplex dr1 = BigradedComplex::de_rham(parse_pd("PD[X(1,2,2,1)]"));
    REQUIRE(dr1.differential_squares_to_zero());
    // total enhanced states = 2^1*... loops: A-state 2 loops, B-state 1: 4+2=6; levels 0,1 of size 6
    REQUIRE(dr1.gens(0).size() == 6);
    REQUIRE(dr1.gens(1).size() == 6);

    BigradedComplex dr3 = BigradedComplex::de_rham(trefoil());
    REQUIRE(dr3.gens(0).size() == 30);
    REQUIRE(dr3.gens(1).size() == 90);
    REQUIRE(dr3.gens(2).size() == 90);
    REQUIRE(dr3.gens(3).size() == 30);
    REQUIRE(dr3.differential_squares_to_zero());
    REQUIRE(dr3.preserves_j());

    REQUIRE_THROWS_AS(BigradedComplex::de_rham(close_braid(BraidWord(2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}))),
                      CapExceeded);
}

TEST_CASE("corrupting one entry breaks d^2 = 0") {
    BigradedComplex cx = BigradedComplex::cube(trefoil(), kh);
    BigradedComplex bad = cx.with_corrupted_entry(0, 0);
    REQUIRE_FALSE(bad.differential_squares_to_zero());
}
