#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "khlab/bracket.hpp"
#include "khlab/lee.hpp"
#include "khlab/quantum.hpp"

using namespace khlab;

namespace {
KnotDiagram trefoil() { return close_braid(BraidWord(2, {1, 1, 1})); }
KnotDiagram fig8() { return close_braid(BraidWord(3, {1, -2, 1, -2})); }
Complexd unit_q(double theta) { return {std::cos(theta), std::sin(theta)}; }
}  // namespace

TEST_CASE("unitary of the unknot") {
    Complexd q = unit_q(0.41);
    DiagonalUnitary u = build_unitary(parse_pd("PD[O(1)]"), q);
    REQUIRE(u.dimension() == 2);
    REQUIRE(std::abs(u.eigenvalues[0] - q) < 1e-12);
    REQUIRE(std::abs(u.eigenvalues[1] - 1.0 / q) < 1e-12);
    REQUIRE(std::abs(trace(u) - (q + 1.0 / q)) < 1e-12);
}

TEST_CASE("trace of the unitary is the Jones polynomial at q") {
    for (const auto& d : {trefoil(), mirror(trefoil()), fig8(), close_braid(BraidWord(2, {1, 1}))}) {
        LaurentPoly J = jones(d);
        for (double theta : {0.1, 0.7, 1.3, 2.9, 4.2}) {
            Complexd q = unit_q(theta);
            DiagonalUnitary u = build_unitary(d, q);
            REQUIRE(std::abs(trace(u) - J.eval(q)) < 1e-9);
        }
    }
}

TEST_CASE("eigenvalues are unit modulus; non-unit q is rejected") {
    DiagonalUnitary u = build_unitary(trefoil(), unit_q(2.2));
    for (auto& e : u.eigenvalues) REQUIRE(std::abs(std::abs(e) - 1.0) < 1e-12);
    REQUIRE_THROWS_AS(build_unitary(trefoil(), Complexd{0.9, 0.0}), std::invalid_argument);
}

TEST_CASE("the unitary anticommutes with the Khovanov differential") {
    REQUIRE(check_anticommutation(parse_pd("PD[O(1)]"), unit_q(1.0)) == 0.0);
    REQUIRE(check_anticommutation(trefoil(), Complexd{0.0, 1.0}) < 1e-9);
    REQUIRE(check_anticommutation(fig8(), unit_q(0.77)) < 1e-9);

    // negative control: one corrupted eigenvalue sign shows up as residual 2
    BigradedComplex cx = BigradedComplex::cube(trefoil(), FrobeniusAlgebraSpec::khovanov());
    DiagonalUnitary u = build_unitary(trefoil(), unit_q(0.3));
    u.eigenvalues[5] *= -1.0;
    REQUIRE(anticommutation_residual(cx, u) >= 1.0);
}

TEST_CASE("U descends to homology: kernels map to kernels") {
    KnotDiagram d = trefoil();
    BigradedComplex cx = BigradedComplex::cube(d, FrobeniusAlgebraSpec::khovanov());
    DiagonalUnitary u = build_unitary(d, unit_q(0.9));
    std::vector<size_t> offset(size_t(cx.levels()), 0);
    size_t total = 0;
    for (int k = 0; k < cx.levels(); ++k) {
        offset[size_t(k)] = total;
        total += cx.gens(k).size();
    }
    for (int k = 0; k + 1 < cx.levels(); ++k) {
        IntMat m(int(cx.gens(k + 1).size()), int(cx.gens(k).size()));
        for (auto& t : cx.diff(k)) m.at(t.row, t.col) += t.val;
        for (auto& v : kernel_basis(m)) {
            // w = U v, still a kernel vector
            std::vector<Complexd> w(v.size());
            for (size_t g = 0; g < v.size(); ++g)
                w[g] = u.eigenvalues[offset[size_t(k)] + g] *
                       Complexd(double(numerator(v[g]).convert_to<long long>()) /
                                    double(denominator(v[g]).convert_to<long long>()),
                                0.0);
            for (int r = 0; r < m.rows; ++r) {
                Complexd acc{0.0, 0.0};
                for (size_t g = 0; g < w.size(); ++g)
                    acc += double(m.at(r, int(g)).convert_to<long long>()) * w[g];
                REQUIRE(std::abs(acc) < 1e-9);
            }
        }
    }
}

TEST_CASE("homology-level trace recovers the Poincare polynomial") {
    KnotDiagram d = trefoil();
    HomologyTable table = homology(BigradedComplex::cube(d, FrobeniusAlgebraSpec::khovanov()),
                                   Coeff::Q);
    Laurent2 P = poincare(table);
    for (double a : {0.3, 1.9}) {
        for (double b : {0.6, 5.1}) {
            Complexd t = unit_q(a), q = unit_q(b);
            REQUIRE(std::abs(homology_unitary_trace(table, t, q) - P.eval(t, q)) < 1e-9);
        }
    }
    // t = -1 recovers Jones
    REQUIRE(std::abs(homology_unitary_trace(table, {-1.0, 0.0}, unit_q(0.8)) -
                     jones(d).eval(unit_q(0.8))) < 1e-9);
    // t = q = 1 counts the total rank
    REQUIRE(std::abs(homology_unitary_trace(table, {1.0, 0.0}, {1.0, 0.0}) - 4.0) < 1e-12);
    REQUIRE_THROWS_AS(homology_unitary_trace(table, {0.5, 0.0}, {1.0, 0.0}),
                      std::invalid_argument);
}

TEST_CASE("hadamard test estimates the normalized trace") {
    // all eigenvalues 1 at q = 1 for the unknot: the real-part coin is
    // degenerate, so the real estimate is exactly 1 at any sample count
    DiagonalUnitary u1 = build_unitary(parse_pd("PD[O(1)]"), {1.0, 0.0});
    for (long long n : {1, 10, 1000}) {
        HadamardEstimate e1 = hadamard_estimate(u1, n, 42);
        REQUIRE(e1.estimate.real() == 1.0);
        REQUIRE(std::abs(e1.estimate.imag()) <= 1.0);
    }

    KnotDiagram d = trefoil();
    Complexd q = unit_q(M_PI / 3.0);
    DiagonalUnitary u = build_unitary(d, q);
    HadamardEstimate e = hadamard_estimate(u, 100000, 12345);
    Complexd exact = trace(u);
    double dim = double(u.dimension());
    REQUIRE(std::abs(e.estimate * dim - exact) < 4.0 * e.stderr_value * dim);

    REQUIRE_THROWS_AS(hadamard_estimate(u, 0, 1), std::invalid_argument);

    // deterministic under a fixed seed
    HadamardEstimate again = hadamard_estimate(u, 100000, 12345);
    REQUIRE(again.estimate == e.estimate);
    REQUIRE(again.stderr_value == e.stderr_value);
}

TEST_CASE("hadamard estimator is unbiased across seeds") {
    KnotDiagram d = fig8();
    Complexd q = unit_q(1.1);
    DiagonalUnitary u = build_unitary(d, q);
    Complexd target = trace(u) / double(u.dimension());
    Complexd mean{0.0, 0.0};
    const int runs = 30;
    for (int s = 0; s < runs; ++s) mean += hadamard_estimate(u, 20000, 1000 + uint64_t(s)).estimate;
    mean /= double(runs);
    // pooled standard error ~ 1/sqrt(30 * 20000)
    REQUIRE(std::abs(mean - target) < 5.0 / std::sqrt(30.0 * 20000.0));
}
