#include "catch_amalgamated.hpp"

#include "twistlab/cochain.hpp"

using namespace twistlab;

namespace {

// Independent orientation test: phi(a,b,c) should be -1 exactly when the
// labels a, b, c are linearly independent over GF(2), i.e. when the 3x3 bit
// matrix has odd determinant a . (b x c).
int det_mod2(unsigned a, unsigned b, unsigned c) {
    auto a1 = bit(a, 3, 1), a2 = bit(a, 3, 2), a3 = bit(a, 3, 3);
    auto b1 = bit(b, 3, 1), b2 = bit(b, 3, 2), b3 = bit(b, 3, 3);
    auto c1 = bit(c, 3, 1), c2 = bit(c, 3, 2), c3 = bit(c, 3, 3);
    int d = a1 * (b2 * c3 + b3 * c2) + a2 * (b1 * c3 + b3 * c1) + a3 * (b1 * c2 + b2 * c1);
    return d & 1;
}

// Hand-checked 4x4 sign grid for n = 2, rows a = 0..3, columns b = 0..3.
constexpr int kQuaternionGrid[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};

}  // namespace

TEST_CASE("cochain counitality") {
    for (int n = 1; n <= 3; ++n) CHECK(is_counital(sign_cochain(n)));
}

TEST_CASE("cochain values are signs and invert pointwise") {
    for (int n = 1; n <= 3; ++n) {
        auto F = sign_cochain(n);
        for (unsigned a = 0; a < F.order(); ++a)
            for (unsigned b = 0; b < F.order(); ++b) {
                int v = F.at(a, b);
                CHECK((v == 1 || v == -1));
                CHECK(v * F.inv_at(a, b) == 1);
            }
    }
}

TEST_CASE("cochain frozen values") {
    auto F3 = sign_cochain(3);
    CHECK(F3.at(0b001, 0b010) == +1);
    CHECK(F3.at(0b010, 0b001) == -1);
    CHECK(F3.at(0b001, 0b001) == -1);
    for (int n = 1; n <= 3; ++n) {
        auto F = sign_cochain(n);
        for (unsigned a = 1; a < F.order(); ++a) CHECK(F.at(a, a) == -1);
    }
}

TEST_CASE("quaternion cochain grid") {
    auto F2 = sign_cochain(2);
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) CHECK(F2.at(a, b) == kQuaternionGrid[a][b]);
}

TEST_CASE("cocycle property by rank") {
    CHECK(is_cocycle(sign_cochain(1)));
    CHECK(is_cocycle(sign_cochain(2)));
    CHECK(!is_cocycle(sign_cochain(3)));
}

TEST_CASE("coboundary equals its convolution inverse pointwise") {
    for (int n = 1; n <= 3; ++n) {
        auto F = sign_cochain(n);
        unsigned m = 1u << n;
        for (unsigned a = 0; a < m; ++a)
            for (unsigned b = 0; b < m; ++b)
                for (unsigned c = 0; c < m; ++c) {
                    CHECK(coboundary(F, a, b, c) == coboundary_inv(F, a, b, c));
                    CHECK(coboundary(F, a, b, c) * coboundary_inv(F, a, b, c) == 1);
                }
    }
}

TEST_CASE("octonion coboundary detects independence") {
    auto F3 = sign_cochain(3);
    int minus = 0;
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b)
            for (unsigned c = 0; c < 8; ++c) {
                int phi = coboundary(F3, a, b, c);
                int expect = det_mod2(a, b, c) ? -1 : +1;
                CHECK(phi == expect);
                if (phi == -1) ++minus;
            }
    CHECK(minus == 168);
    CHECK(coboundary(F3, 0b001, 0b010, 0b100) == -1);
}

TEST_CASE("braiding sign detects independent pairs") {
    for (int n = 1; n <= 3; ++n) {
        auto F = sign_cochain(n);
        unsigned m = 1u << n;
        for (unsigned a = 0; a < m; ++a)
            for (unsigned b = 0; b < m; ++b) {
                int expect = (a != 0 && b != 0 && a != b) ? -1 : +1;
                CHECK(braiding(F, a, b) == expect);
            }
    }
}

TEST_CASE("cochain reality") {
    // The star operation fixes every group label, so reality reduces to the
    // values being real signs, invariant under conjugating both arguments.
    auto star = [](unsigned a) { return a; };
    for (int n = 1; n <= 3; ++n) {
        auto F = sign_cochain(n);
        for (unsigned a = 0; a < F.order(); ++a)
            for (unsigned b = 0; b < F.order(); ++b)
                CHECK(F.at(a, b) == F.at(star(a), star(b)));
    }
}

TEST_CASE("twist context accessors") {
    TwistContext ctx(3);
    CHECK(ctx.order() == 8);
    CHECK(ctx.coframe_count() == 7);
    CHECK(ctx.f(1, 2) == +1);
    CHECK(ctx.finv(1, 2) == +1);
    CHECK(ctx.braid(1, 2) == -1);
    CHECK(ctx.phi(1, 2, 4) == -1);
    CHECK(ctx.phi_inv(1, 2, 4) == -1);
}
