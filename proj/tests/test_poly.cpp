#include "catch_amalgamated.hpp"

#include "twistlab/oracle.hpp"
#include "twistlab/poly.hpp"

#include <vector>

using namespace twistlab;

TEST_CASE("normal form removes x0 squares") {
    SphereAlgebra A(2);
    Poly x0sq = Poly::monomial(mono_gen(0, 2));
    Poly expect(1);
    for (std::size_t g = 1; g < 4; ++g) expect.add_term(mono_gen(g, 2), Scalar(-1));
    CHECK(A.normal_form(x0sq) == expect);

    Poly x0cubed = Poly::monomial(mono_gen(0, 3));
    CHECK(A.normal_form(x0cubed) == A.mul(Poly::gen(0), x0sq));
    for (auto& [m, s] : A.normal_form(x0cubed).terms) CHECK(m[0] <= 1);

    CHECK(A.normal_form(A.relation()).is_zero());
}

TEST_CASE("group degree of monomials") {
    SphereAlgebra A(3);
    CHECK(A.degree(mono_gen(1)) == 1);
    CHECK(A.degree(mono_mul(mono_gen(1), mono_gen(2))) == 3);
    CHECK(A.degree(mono_gen(5, 2)) == 0);

    // Dual route: each degree bit counts the exponents of the generators
    // whose label carries that bit.
    for (auto& m : monomials_up_to(8, 3)) {
        unsigned b1 = (m[4] + m[5] + m[6] + m[7]) & 1;
        unsigned b2 = (m[2] + m[3] + m[6] + m[7]) & 1;
        unsigned b3 = (m[1] + m[3] + m[5] + m[7]) & 1;
        CHECK(A.degree(m) == (b1 << 2 | b2 << 1 | b3));
    }
}

TEST_CASE("homogeneous components") {
    SphereAlgebra A(3);
    Poly p = Poly::gen(1) + Poly::gen(2) + Poly::monomial(mono_mul(mono_gen(1), mono_gen(2)));
    auto comps = A.components(p);
    REQUIRE(comps.size() == 3);
    CHECK(comps.count(1) == 1);
    CHECK(comps.count(2) == 1);
    CHECK(comps.count(3) == 1);
    unsigned d = 99;
    CHECK(!A.is_homogeneous(p));
    CHECK(A.is_homogeneous(comps[3], &d));
    CHECK(d == 3);
}

TEST_CASE("deformed product on generators") {
    SphereAlgebra A(3);
    TwistContext ctx(3);
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            Poly lhs = bullet(A, ctx, Poly::gen(a), Poly::gen(b));
            Poly rhs = scale(ctx.f(a, b), A.mul(Poly::gen(a), Poly::gen(b)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("deformed product associates up to the coboundary") {
    SphereAlgebra A(3);
    TwistContext ctx(3);
    std::vector<Poly> samples;
    for (unsigned g : {1u, 2u, 4u, 7u}) samples.push_back(Poly::gen(g));
    samples.push_back(A.mul(Poly::gen(3), Poly::gen(5)));
    for (auto& p : samples)
        for (auto& q : samples)
            for (auto& r : samples) {
                unsigned dp, dq, dr;
                REQUIRE(A.is_homogeneous(p, &dp));
                REQUIRE(A.is_homogeneous(q, &dq));
                REQUIRE(A.is_homogeneous(r, &dr));
                Poly lhs = bullet(A, ctx, bullet(A, ctx, p, q), r);
                Poly rhs = scale(ctx.phi_inv(dp, dq, dr), bullet(A, ctx, p, bullet(A, ctx, q, r)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("deformed product agrees with the stepwise oracle") {
    for (int n = 1; n <= 3; ++n) {
        SphereAlgebra A(n);
        TwistContext ctx(n);
        auto monos = monomials_up_to(A.ngen, 3);
        for (auto& mN : monos)
            for (auto& mM : monos) {
                if (mono_degree(mN) + mono_degree(mM) > 3) continue;
                int expect = stepwise_product_sign(ctx, A, mN, mM);
                Poly engine = bullet(A, ctx, Poly::monomial(mN), Poly::monomial(mM));
                Poly oracle = scale(expect, A.normal_form(Poly::monomial(mono_mul(mN, mM))));
                CHECK(engine == oracle);
                CHECK(ctx.f(A.degree(mN), A.degree(mM)) == expect);
            }
    }
}

TEST_CASE("sphere relation in deformed coordinates") {
    for (int n = 1; n <= 3; ++n) {
        SphereAlgebra A(n);
        TwistContext ctx(n);
        Poly sum = bullet(A, ctx, Poly::gen(0), Poly::gen(0));
        for (std::size_t g = 1; g < A.ngen; ++g)
            sum -= bullet(A, ctx, Poly::gen(g), Poly::gen(g));
        CHECK(sum == Poly(1));
    }
}

TEST_CASE("polynomial strings are canonical") {
    SphereAlgebra A(3);
    Poly p = Poly::monomial(mono_mul(mono_gen(1, 2), mono_gen(2))) - Poly(2);
    CHECK(poly_string(A, p) == "-2+x1^2*x2");
    CHECK(poly_string(A, Poly()) == "0");
}
