#include "catch_amalgamated.hpp"

#include "twistlab/group_algebra.hpp"

using namespace twistlab;

namespace {

GroupAlgElem sample_elem(const TwistContext& ctx, int seed) {
    // Deterministic element with full support and varied rational entries.
    GroupAlgElem u;
    for (unsigned a = 0; a < ctx.order(); ++a) {
        long num = ((seed + 3) * (a + 2) * 7 + seed * 5) % 11 - 5;
        long den = (a + seed) % 4 + 1;
        u.add(a, Scalar::from_rational(Rational(num, den)));
    }
    return u;
}

}  // namespace

TEST_CASE("basis squares and anticommutation") {
    for (int n = 1; n <= 3; ++n) {
        TwistContext ctx(n);
        for (unsigned a = 1; a < ctx.order(); ++a) {
            CHECK(mul(ctx, basis_elem(a), basis_elem(a)) == basis_elem(0, Scalar(-1)));
            for (unsigned b = 1; b < ctx.order(); ++b) {
                if (a == b) continue;
                auto ab = mul(ctx, basis_elem(a), basis_elem(b));
                auto ba = mul(ctx, basis_elem(b), basis_elem(a));
                CHECK(ab == (GroupAlgElem{} - ba));
            }
        }
    }
}

TEST_CASE("quaternion table is the classical one") {
    TwistContext ctx(2);
    auto i = basis_elem(1), j = basis_elem(2), k = basis_elem(3);
    auto minus = [](const GroupAlgElem& e) { return GroupAlgElem{} - e; };
    CHECK(mul(ctx, i, j) == k);
    CHECK(mul(ctx, j, i) == minus(k));
    CHECK(mul(ctx, j, k) == i);
    CHECK(mul(ctx, k, j) == minus(i));
    CHECK(mul(ctx, k, i) == j);
    CHECK(mul(ctx, i, k) == minus(j));
}

TEST_CASE("alternativity on all basis pairs") {
    TwistContext ctx(3);
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            auto ea = basis_elem(a), eb = basis_elem(b);
            CHECK(mul(ctx, mul(ctx, ea, ea), eb) == mul(ctx, ea, mul(ctx, ea, eb)));
            CHECK(mul(ctx, mul(ctx, ea, eb), eb) == mul(ctx, ea, mul(ctx, eb, eb)));
        }
}

TEST_CASE("associator sign matches the coboundary") {
    TwistContext ctx(3);
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b)
            for (unsigned c = 0; c < 8; ++c) {
                auto lhs = mul(ctx, mul(ctx, basis_elem(a), basis_elem(b)), basis_elem(c));
                auto rhs = mul(ctx, basis_elem(a), mul(ctx, basis_elem(b), basis_elem(c)));
                int phi = ctx.phi_inv(a, b, c);
                GroupAlgElem scaled;
                for (auto& [l, s] : rhs.comp) scaled.add(l, Scalar(phi) * s);
                CHECK(lhs == scaled);
            }
    // One concrete nonassociative triple.
    auto l = mul(ctx, mul(ctx, basis_elem(1), basis_elem(2)), basis_elem(4));
    auto r = mul(ctx, basis_elem(1), mul(ctx, basis_elem(2), basis_elem(4)));
    CHECK(l == (GroupAlgElem{} - r));
}

TEST_CASE("norm composition") {
    for (int n = 2; n <= 3; ++n) {
        TwistContext ctx(n);
        for (int seed = 1; seed <= 4; ++seed) {
            auto u = sample_elem(ctx, seed);
            auto v = sample_elem(ctx, seed + 10);
            CHECK(norm_sq(mul(ctx, u, v)) == norm_sq(u) * norm_sq(v));
        }
    }
}

TEST_CASE("multiplication table text grid") {
    TwistContext ctx(2);
    auto table = mult_table_text(ctx);
    CHECK(table.find("+e3") != std::string::npos);
    CHECK(table.find("-e3") != std::string::npos);
    CHECK(mult_table_text(ctx) == table);
}
