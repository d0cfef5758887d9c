#pragma once

// The two rank-2 Frobenius algebras on basis {1, x} driving the chain
// complexes: k[x]/(x^2) and the deformed k[x]/(x^2 - 1).  Structure
// constants are tables; coefficients are plain integers.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace khlab {

enum class AlgebraKind : uint8_t { Khovanov, Lee };

// Basis labels: 0 = "1", 1 = "x".
struct BasisTerm {
    uint8_t label;
    long long coeff;
};
struct BasisPairTerm {
    uint8_t left, right;
    long long coeff;
};

struct FrobeniusAlgebraSpec {
    AlgebraKind kind;
    const char* name;
    // m(la, lb), always a sum of basis terms (empty = zero).
    std::array<std::array<std::vector<BasisTerm>, 2>, 2> mul_table;
    // Delta(l)
    std::array<std::vector<BasisPairTerm>, 2> comul_table;
    std::array<long long, 2> counit_table;  // eps(1), eps(x)

    // 1*1 = 1, 1*x = x*1 = x, x*x = 0; D(1) = 1x + x1, D(x) = xx.
    static const FrobeniusAlgebraSpec& khovanov() {
        static const FrobeniusAlgebraSpec spec = [] {
            FrobeniusAlgebraSpec s;
            s.kind = AlgebraKind::Khovanov;
            s.name = "khovanov";
            s.mul_table[0][0] = {{0, 1}};
            s.mul_table[0][1] = {{1, 1}};
            s.mul_table[1][0] = {{1, 1}};
            s.mul_table[1][1] = {};
            s.comul_table[0] = {{0, 1, 1}, {1, 0, 1}};
            s.comul_table[1] = {{1, 1, 1}};
            s.counit_table = {0, 1};
            return s;
        }();
        return spec;
    }
    // Deformation x*x = 1; D(x) = xx + 11.
    static const FrobeniusAlgebraSpec& lee() {
        static const FrobeniusAlgebraSpec spec = [] {
            FrobeniusAlgebraSpec s;
            s.kind = AlgebraKind::Lee;
            s.name = "lee";
            s.mul_table[0][0] = {{0, 1}};
            s.mul_table[0][1] = {{1, 1}};
            s.mul_table[1][0] = {{1, 1}};
            s.mul_table[1][1] = {{0, 1}};
            s.comul_table[0] = {{0, 1, 1}, {1, 0, 1}};
            s.comul_table[1] = {{1, 1, 1}, {0, 0, 1}};
            s.counit_table = {0, 1};
            return s;
        }();
        return spec;
    }
};

// Element c1*1 + cx*x.
struct AlgebraElement {
    long long c1 = 0, cx = 0;

    static AlgebraElement one() { return {1, 0}; }
    static AlgebraElement x() { return {0, 1}; }
    long long coeff(uint8_t label) const { return label == 0 ? c1 : cx; }
    void add(uint8_t label, long long c) { (label == 0 ? c1 : cx) += c; }
    bool operator==(const AlgebraElement& o) const { return c1 == o.c1 && cx == o.cx; }
    AlgebraElement operator+(const AlgebraElement& o) const { return {c1 + o.c1, cx + o.cx}; }
    AlgebraElement operator-(const AlgebraElement& o) const { return {c1 - o.c1, cx - o.cx}; }
};

// Element of V^{tensor k}; basis indexed by k-bit words, leftmost factor
// most significant, so the order is lexicographic in (1, x).
struct TensorElement {
    int factors = 0;
    std::vector<long long> coeff;  // size 2^factors

    explicit TensorElement(int k) : factors(k), coeff(size_t(1) << k, 0) {}

    static TensorElement basis(int k, uint32_t word) {
        TensorElement t(k);
        t.coeff[word] = 1;
        return t;
    }
    static int bitpos(int factors, int f) { return factors - 1 - f; }
    static uint8_t label_of(int factors, uint32_t word, int f) {
        return uint8_t((word >> bitpos(factors, f)) & 1u);
    }

    bool operator==(const TensorElement& o) const {
        return factors == o.factors && coeff == o.coeff;
    }
    TensorElement operator+(const TensorElement& o) const {
        if (factors != o.factors) throw std::invalid_argument("tensor rank mismatch");
        TensorElement r(factors);
        for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] + o.coeff[i];
        return r;
    }
    bool is_zero() const {
        for (long long c : coeff)
            if (c != 0) return false;
        return true;
    }
};

inline AlgebraElement unit(const FrobeniusAlgebraSpec&, long long n) { return {n, 0}; }

inline long long counit(const FrobeniusAlgebraSpec& spec, const AlgebraElement& a) {
    return spec.counit_table[0] * a.c1 + spec.counit_table[1] * a.cx;
}

inline AlgebraElement mul(const FrobeniusAlgebraSpec& spec, const AlgebraElement& a,
                          const AlgebraElement& b) {
    AlgebraElement out;
    for (uint8_t la = 0; la < 2; ++la)
        for (uint8_t lb = 0; lb < 2; ++lb) {
            long long c = a.coeff(la) * b.coeff(lb);
            if (c == 0) continue;
            for (auto& t : spec.mul_table[la][lb]) out.add(t.label, c * t.coeff);
        }
    return out;
}

inline TensorElement comul(const FrobeniusAlgebraSpec& spec, const AlgebraElement& a) {
    TensorElement out(2);
    for (uint8_t l = 0; l < 2; ++l) {
        long long c = a.coeff(l);
        if (c == 0) continue;
        for (auto& t : spec.comul_table[l])
            out.coeff[uint32_t(t.left) << 1 | t.right] += c * t.coeff;
    }
    return out;
}

// Merge tensor factors fa < fb with m; the product lands at fa.
inline TensorElement tensor_mul(const FrobeniusAlgebraSpec& spec, const TensorElement& t,
                                int fa, int fb) {
    TensorElement out(t.factors - 1);
    for (uint32_t w = 0; w < t.coeff.size(); ++w) {
        long long c = t.coeff[w];
        if (c == 0) continue;
        uint8_t la = TensorElement::label_of(t.factors, w, fa);
        uint8_t lb = TensorElement::label_of(t.factors, w, fb);
        for (auto& term : spec.mul_table[la][lb]) {
            uint32_t nw = 0;
            int nf = 0;
            for (int f = 0; f < t.factors; ++f) {
                if (f == fb) continue;
                uint8_t l = (f == fa) ? term.label : TensorElement::label_of(t.factors, w, f);
                nw |= uint32_t(l) << TensorElement::bitpos(out.factors, nf);
                ++nf;
            }
            out.coeff[nw] += c * term.coeff;
        }
    }
    return out;
}

// Split tensor factor f with Delta; the two outputs land at f, f+1.
inline TensorElement tensor_comul(const FrobeniusAlgebraSpec& spec, const TensorElement& t, int f) {
    TensorElement out(t.factors + 1);
    for (uint32_t w = 0; w < t.coeff.size(); ++w) {
        long long c = t.coeff[w];
        if (c == 0) continue;
        uint8_t l = TensorElement::label_of(t.factors, w, f);
        for (auto& term : spec.comul_table[l]) {
            uint32_t nw = 0;
            int nf = 0;
            for (int g = 0; g < t.factors; ++g) {
                if (g == f) {
                    nw |= uint32_t(term.left) << TensorElement::bitpos(out.factors, nf++);
                    nw |= uint32_t(term.right) << TensorElement::bitpos(out.factors, nf++);
                } else {
                    nw |= uint32_t(TensorElement::label_of(t.factors, w, g))
                          << TensorElement::bitpos(out.factors, nf++);
                }
            }
            out.coeff[nw] += c * term.coeff;
        }
    }
    return out;
}

// Apply eps to factor f, dropping it.
inline TensorElement tensor_counit(const FrobeniusAlgebraSpec& spec, const TensorElement& t, int f) {
    TensorElement out(t.factors - 1);
    for (uint32_t w = 0; w < t.coeff.size(); ++w) {
        long long c = t.coeff[w];
        if (c == 0) continue;
        uint8_t l = TensorElement::label_of(t.factors, w, f);
        long long e = spec.counit_table[l];
        if (e == 0) continue;
        uint32_t nw = 0;
        int nf = 0;
        for (int g = 0; g < t.factors; ++g) {
            if (g == f) continue;
            nw |= uint32_t(TensorElement::label_of(t.factors, w, g))
                  << TensorElement::bitpos(out.factors, nf++);
        }
        out.coeff[nw] += c * e;
    }
    return out;
}

// A tube joining sheets fa and fb: merge then split, Delta o m on those
// factors, identity elsewhere.
inline TensorElement tensor_tube(const FrobeniusAlgebraSpec& spec, const TensorElement& t,
                                 int fa, int fb) {
    TensorElement out(t.factors);
    for (uint32_t w = 0; w < t.coeff.size(); ++w) {
        long long c = t.coeff[w];
        if (c == 0) continue;
        uint8_t la = TensorElement::label_of(t.factors, w, fa);
        uint8_t lb = TensorElement::label_of(t.factors, w, fb);
        for (auto& pterm : spec.mul_table[la][lb])
            for (auto& dterm : spec.comul_table[pterm.label]) {
                uint32_t nw = w;
                uint32_t mask_a = 1u << TensorElement::bitpos(t.factors, fa);
                uint32_t mask_b = 1u << TensorElement::bitpos(t.factors, fb);
                nw = (nw & ~mask_a) | (dterm.left ? mask_a : 0u);
                nw = (nw & ~mask_b) | (dterm.right ? mask_b : 0u);
                out.coeff[nw] += c * pterm.coeff * dterm.coeff;
            }
    }
    return out;
}

// The same tube expanded through the tube-cutting relation:
// insert an x-dot on one side plus an x-dot on the other.
inline TensorElement tensor_tube_cut(const FrobeniusAlgebraSpec& spec, const TensorElement& t,
                                     int fa, int fb) {
    auto dot = [&](const TensorElement& in, int f) {
        TensorElement out(in.factors);
        for (uint32_t w = 0; w < in.coeff.size(); ++w) {
            long long c = in.coeff[w];
            if (c == 0) continue;
            uint8_t l = TensorElement::label_of(in.factors, w, f);
            for (auto& term : spec.mul_table[l][1]) {  // multiply by x
                uint32_t mask = 1u << TensorElement::bitpos(in.factors, f);
                uint32_t nw = (w & ~mask) | (term.label ? mask : 0u);
                out.coeff[nw] += c * term.coeff;
            }
        }
        return out;
    };
    return dot(t, fa) + dot(t, fb);
}

// Closed surface of the given genus: eps o (m o Delta)^genus o eta.
inline long long closed_surface_value(const FrobeniusAlgebraSpec& spec, int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    AlgebraElement v = AlgebraElement::one();
    for (int g = 0; g < genus; ++g) {
        TensorElement split = comul(spec, v);
        TensorElement merged = tensor_mul(spec, split, 0, 1);
        v = AlgebraElement{merged.coeff[0], merged.coeff[1]};
    }
    return counit(spec, v);
}

}  // namespace khlab
