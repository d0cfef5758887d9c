#pragma once

// Quantum-flavoured reformulation: the Hilbert space spanned by enhanced
// states, the diagonal unitary with Trace(U) = J at unit-circle q, its
// anticommutation with the Khovanov differential, the homology-level trace
// recovering the Poincare polynomial, and a classically simulated Hadamard
// test of the normalized trace.

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "khlab/complex.hpp"
#include "khlab/homology.hpp"
#include "khlab/laurent.hpp"
#include "khlab/resolution.hpp"

namespace khlab {

using Complexd = std::complex<double>;

inline void require_unit(Complexd z, const char* what) {
    if (std::abs(std::abs(z) - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(what) + " must lie on the unit circle");
}

struct DiagonalUnitary {
    Complexd q{1.0, 0.0};
    std::vector<Complexd> eigenvalues;  // enhanced-state basis order

    int dimension() const { return int(eigenvalues.size()); }
};

// U |s> = (-1)^{i(s)+n_-} q^{j(s)+n_+-2n_-} |s>, diagonal on the enhanced
// state basis in (tier, mask, labels) order.
inline DiagonalUnitary build_unitary(const KnotDiagram& d, Complexd q, int cap = kDefaultCap) {
    require_unit(q, "q");
    DiagonalUnitary u;
    u.q = q;
    const int ishift = d.n_minus();
    const int jshift = d.n_plus() - 2 * d.n_minus();
    for_each_enhanced(d, [&](const ResolvedState&, const EnhancedState& s) {
        double sign = ((s.i() + ishift) % 2 == 0) ? 1.0 : -1.0;
        u.eigenvalues.push_back(sign * cpow(q, s.j() + jshift));
    }, cap);
    return u;
}

inline Complexd trace(const DiagonalUnitary& u) {
    Complexd acc{0.0, 0.0};
    for (auto& e : u.eigenvalues) acc += e;
    return acc;
}

// Max-norm of dU + Ud over the Khovanov complex whose global generator
// order matches the unitary.  (dU + Ud)_{rc} = d_{rc} (u_c + u_r).
inline double anticommutation_residual(const BigradedComplex& cx, const DiagonalUnitary& u) {
    size_t total = 0;
    std::vector<size_t> offset(size_t(cx.levels()), 0);
    for (int k = 0; k < cx.levels(); ++k) {
        offset[size_t(k)] = total;
        total += cx.gens(k).size();
    }
    if (total != u.eigenvalues.size())
        throw std::invalid_argument("unitary dimension does not match the complex");
    double worst = 0.0;
    for (int k = 0; k + 1 < cx.levels(); ++k)
        for (auto& t : cx.diff(k)) {
            Complexd sum = u.eigenvalues[offset[size_t(k)] + size_t(t.col)] +
                           u.eigenvalues[offset[size_t(k) + 1] + size_t(t.row)];
            double mag = std::abs(double(t.val) * sum);
            if (mag > worst) worst = mag;
        }
    return worst;
}

inline double check_anticommutation(const KnotDiagram& d, Complexd q, int cap = kDefaultCap) {
    BigradedComplex cx = BigradedComplex::cube(d, FrobeniusAlgebraSpec::khovanov(), cap);
    return anticommutation_residual(cx, build_unitary(d, q, cap));
}

// Trace of the homology-level unitary: sum over the rational table of
// rank * t^i q^j at unit-circle t, q; equals P(t, q).
inline Complexd homology_unitary_trace(const HomologyTable& table, Complexd t, Complexd q) {
    if (table.coeff != Coeff::Q)
        throw std::invalid_argument("homology unitary wants the rational table");
    require_unit(t, "t");
    require_unit(q, "q");
    Complexd acc{0.0, 0.0};
    for (auto& [ij, e] : table.entries)
        acc += double(e.free_rank) * cpow(t, ij.first) * cpow(q, ij.second);
    return acc;
}

struct HadamardEstimate {
    Complexd estimate{0.0, 0.0};  // estimates Trace(U) / dim
    double stderr_value = 0.0;
    long long samples = 0;
};

// Distribution-level simulation of the Hadamard test: sample a basis state
// uniformly, then a +-1 outcome with success probability (1 + Re<s|U|s>)/2,
// and the phase-shifted variant for the imaginary part.
inline HadamardEstimate hadamard_estimate(const DiagonalUnitary& u, long long samples,
                                          uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (u.eigenvalues.empty()) throw std::invalid_argument("empty unitary");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, u.eigenvalues.size() - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    double sum_re = 0.0, sumsq_re = 0.0;
    double sum_im = 0.0, sumsq_im = 0.0;
    for (long long n = 0; n < samples; ++n) {
        const Complexd& ev = u.eigenvalues[pick(rng)];
        double x = (coin(rng) < (1.0 + ev.real()) / 2.0) ? 1.0 : -1.0;
        double y = (coin(rng) < (1.0 + ev.imag()) / 2.0) ? 1.0 : -1.0;
        sum_re += x;
        sumsq_re += 1.0;  // x^2
        sum_im += y;
        sumsq_im += 1.0;
    }
    const double n = double(samples);
    double mean_re = sum_re / n, mean_im = sum_im / n;
    double var_re = (sumsq_re - n * mean_re * mean_re) / (n > 1 ? n - 1 : 1);
    double var_im = (sumsq_im - n * mean_im * mean_im) / (n > 1 ? n - 1 : 1);
    HadamardEstimate out;
    out.estimate = {mean_re, mean_im};
    out.stderr_value = std::sqrt((var_re + var_im) / n);
    out.samples = samples;
    return out;
}

}  // namespace khlab
