#include <catch2/catch_amalgamated.hpp>

#include "khlab/frobenius.hpp"

using namespace khlab;

namespace {
const FrobeniusAlgebraSpec& kh = FrobeniusAlgebraSpec::khovanov();
const FrobeniusAlgebraSpec& lee = FrobeniusAlgebraSpec::lee();
const AlgebraElement one = AlgebraElement::one();
const AlgebraElement x = AlgebraElement::x();

TensorElement basis2(uint8_t a, uint8_t b) { return TensorElement::basis(2, uint32_t(a) << 1 | b); }
}  // namespace

TEST_CASE("multiplication tables") {
    REQUIRE(mul(kh, x, x) == AlgebraElement{0, 0});
    REQUIRE(mul(lee, x, x) == one);
    for (const auto* spec : {&kh, &lee}) {
        REQUIRE(mul(*spec, one, x) == x);
        REQUIRE(mul(*spec, x, one) == x);
        REQUIRE(mul(*spec, one, one) == one);
        AlgebraElement a{3, -2};
        REQUIRE(mul(*spec, one, a) == a);
        REQUIRE(mul(*spec, a, one) == a);
    }
}

TEST_CASE("comultiplication tables") {
    TensorElement d1 = comul(kh, one);
    REQUIRE(d1 == basis2(0, 1) + basis2(1, 0));
    REQUIRE(comul(kh, x) == basis2(1, 1));
    REQUIRE(comul(lee, one) == basis2(0, 1) + basis2(1, 0));
    REQUIRE(comul(lee, x) == basis2(1, 1) + basis2(0, 0));
    REQUIRE(comul(kh, AlgebraElement{0, 0}).is_zero());
}

TEST_CASE("counit and unit") {
    REQUIRE(counit(kh, one) == 0);
    REQUIRE(counit(kh, x) == 1);
    REQUIRE(counit(lee, one) == 0);
    REQUIRE(counit(lee, x) == 1);
    REQUIRE(unit(kh, 1) == one);
    REQUIRE(unit(kh, 5) == AlgebraElement{5, 0});
}

TEST_CASE("associativity and coassociativity on all basis words") {
    for (const auto* spec : {&kh, &lee}) {
        for (uint32_t w = 0; w < 8; ++w) {
            TensorElement t = TensorElement::basis(3, w);
            // (ab)c vs a(bc)
            TensorElement left = tensor_mul(*spec, tensor_mul(*spec, t, 0, 1), 0, 1);
            TensorElement right = tensor_mul(*spec, tensor_mul(*spec, t, 1, 2), 0, 1);
            REQUIRE(left == right);
        }
        for (uint32_t w = 0; w < 2; ++w) {
            TensorElement t = TensorElement::basis(1, w);
            TensorElement left = tensor_comul(*spec, tensor_comul(*spec, t, 0), 0);
            TensorElement right = tensor_comul(*spec, tensor_comul(*spec, t, 0), 1);
            REQUIRE(left == right);
        }
    }
}

TEST_CASE("counit laws cancel a split against a cap") {
    for (const auto* spec : {&kh, &lee}) {
        for (uint32_t w = 0; w < 2; ++w) {
            TensorElement t = TensorElement::basis(1, w);
            TensorElement split = tensor_comul(*spec, t, 0);
            REQUIRE(tensor_counit(*spec, split, 0) == t);  // sum eps(a1) a2 = a
            REQUIRE(tensor_counit(*spec, split, 1) == t);  // sum a1 eps(a2) = a
        }
    }
}

TEST_CASE("mixed-partials identity (1 x m)(Delta x 1) = Delta m") {
    for (const auto* spec : {&kh, &lee}) {
        for (uint32_t w = 0; w < 4; ++w) {
            TensorElement t = TensorElement::basis(2, w);
            TensorElement lhs = tensor_mul(*spec, tensor_comul(*spec, t, 0), 1, 2);
            TensorElement rhs = tensor_comul(*spec, tensor_mul(*spec, t, 0, 1), 0);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("tube-cutting relation eps(ab) = eps(ax)eps(b) + eps(a)eps(bx)") {
    const AlgebraElement basis[2] = {one, x};
    for (auto a : basis)
        for (auto b : basis) {
            long long lhs = counit(kh, mul(kh, a, b));
            long long rhs = counit(kh, mul(kh, a, x)) * counit(kh, b) +
                            counit(kh, a) * counit(kh, mul(kh, b, x));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("pairing <a|b> = eps(ab) is nondegenerate and associative") {
    for (const auto* spec : {&kh, &lee}) {
        const AlgebraElement basis[2] = {one, x};
        long long g[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                g[i][j] = counit(*spec, mul(*spec, basis[i], basis[j]));
        long long det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        REQUIRE((det == 1 || det == -1));  // invertible over the integers
        for (auto a : basis)
            for (auto b : basis)
                for (auto c : basis) {
                    long long l = counit(*spec, mul(*spec, mul(*spec, a, b), c));
                    long long r = counit(*spec, mul(*spec, a, mul(*spec, b, c)));
                    REQUIRE(l == r);
                }
    }
}

TEST_CASE("a tube equals its cut expansion") {
    for (const auto* spec : {&kh, &lee}) {
        for (uint32_t w = 0; w < 4; ++w) {
            TensorElement t = TensorElement::basis(2, w);
            REQUIRE(tensor_tube(*spec, t, 0, 1) == tensor_tube_cut(*spec, t, 0, 1));
        }
    }
}

TEST_CASE("4Tu: C12 + C34 = C13 + C24 on all basis inputs") {
    for (const auto* spec : {&kh, &lee}) {
        for (uint32_t w = 0; w < 16; ++w) {
            TensorElement t = TensorElement::basis(4, w);
            TensorElement lhs = tensor_tube(*spec, t, 0, 1) + tensor_tube(*spec, t, 2, 3);
            TensorElement rhs = tensor_tube(*spec, t, 0, 2) + tensor_tube(*spec, t, 1, 3);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("closed surfaces: sphere 0, torus 2, genus two 0") {
    REQUIRE(closed_surface_value(kh, 0) == 0);
    REQUIRE(closed_surface_value(kh, 1) == 2);
    REQUIRE(closed_surface_value(kh, 2) == 0);
    REQUIRE(closed_surface_value(lee, 0) == 0);
    REQUIRE(closed_surface_value(lee, 1) == 2);
    REQUIRE_THROWS_AS(closed_surface_value(kh, -1), std::invalid_argument);
}
