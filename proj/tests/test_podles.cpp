#include "catch_amalgamated.hpp"

#include "twistlab/podles.hpp"

using namespace twistlab;

namespace {

Poly xp() { return Poly::gen(0); }
Poly xm() { return Poly::gen(1); }
Poly x3() { return Poly::gen(2); }

Scalar gauss_i(long re, long im) {
    return Scalar::from_gauss(Gauss(Rational(re), Rational(im)));
}

// All normal-form monomials of total degree <= bound.
std::vector<Mono> normal_monomials(const PodlesAlgebra& A, int bound) {
    std::vector<Mono> out;
    for (int d = 0; d <= bound; ++d)
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b) {
                Mono m = mono_one();
                m[0] = static_cast<uint8_t>(a);
                m[1] = static_cast<uint8_t>(b);
                m[2] = static_cast<uint8_t>(d - a - b);
                if (A.is_normal(m)) out.push_back(m);
            }
    return out;
}

Poly commutator(const PodlesAlgebra& A, Sl2Gen a, Sl2Gen b, const Poly& p) {
    return A.act_gen(a, A.act_gen(b, p)) - A.act_gen(b, A.act_gen(a, p));
}

}  // namespace

TEST_CASE("generator actions match the derivation tables") {
    PodlesAlgebra A;
    CHECK(A.act_gen(Sl2Gen::X, xp()).is_zero());
    CHECK(A.act_gen(Sl2Gen::X, xm()) == Poly::monomial(mono_gen(2), gauss_i(0, -2)));
    CHECK(A.act_gen(Sl2Gen::X, x3()) == Poly::monomial(mono_gen(0), gauss_i(0, 1)));
    CHECK(A.act_gen(Sl2Gen::Y, xp()) == Poly::monomial(mono_gen(2), gauss_i(0, 2)));
    CHECK(A.act_gen(Sl2Gen::Y, xm()).is_zero());
    CHECK(A.act_gen(Sl2Gen::Y, x3()) == Poly::monomial(mono_gen(1), gauss_i(0, -1)));
    CHECK(A.act_gen(Sl2Gen::H, xp()) == scale(-2, xp()));
    CHECK(A.act_gen(Sl2Gen::H, xm()) == scale(2, xm()));
    CHECK(A.act_gen(Sl2Gen::H, x3()).is_zero());
    CHECK(A.act("xx", x3()).is_zero());
    CHECK(A.act("x", x3()) == Poly::monomial(mono_gen(0), gauss_i(0, 1)));
}

TEST_CASE("actions annihilate the sphere relation") {
    PodlesAlgebra A;
    Poly rel = A.relation();
    for (auto g : {Sl2Gen::X, Sl2Gen::Y, Sl2Gen::H}) {
        Poly out;
        for (std::size_t v = 0; v < A.ngen; ++v)
            out = out + mul_raw(partial_raw(rel, v), A.gen_image(g, v));
        CHECK(out.is_zero());
    }
    CHECK(A.normal_form(rel).is_zero());
}

TEST_CASE("normal form rewrites every mixed monomial") {
    PodlesAlgebra A;
    Poly p = A.mul(xm(), xp());
    Poly expect;
    expect.add_term(mono_one(), Scalar::param(0));
    expect.add_term(mono_gen(2, 2), Scalar(-1));
    CHECK(p == expect);
    Poly q = A.mul(A.mul(xp(), xp()), A.mul(xm(), x3()));
    for (auto& [m, s] : q.terms) CHECK(A.is_normal(m));
    CHECK(A.mul(xp(), xm()) == A.mul(xm(), xp()));
}

TEST_CASE("sl2 commutation relations hold on monomials up to degree five") {
    PodlesAlgebra A;
    for (const auto& m : normal_monomials(A, 5)) {
        Poly p = Poly::monomial(m);
        CHECK(commutator(A, Sl2Gen::X, Sl2Gen::Y, p) == A.act_gen(Sl2Gen::H, p));
        CHECK(commutator(A, Sl2Gen::H, Sl2Gen::X, p) == scale(-2, A.act_gen(Sl2Gen::X, p)));
        CHECK(commutator(A, Sl2Gen::H, Sl2Gen::Y, p) == scale(2, A.act_gen(Sl2Gen::Y, p)));
    }
}

TEST_CASE("iterated actions vanish past twice the degree") {
    PodlesAlgebra A;
    for (const auto& m : normal_monomials(A, 4)) {
        int d = static_cast<int>(mono_degree(m));
        Poly px = Poly::monomial(m), py = px;
        for (int n = 1; n <= 2 * d + 1; ++n) {
            px = A.act_gen(Sl2Gen::X, px);
            py = A.act_gen(Sl2Gen::Y, py);
        }
        CHECK(px.is_zero());
        CHECK(py.is_zero());
    }
}

TEST_CASE("deformed product is counital") {
    PodlesAlgebra A;
    SeriesCochain Fc;
    for (const auto& m : normal_monomials(A, 3)) {
        Poly p = Poly::monomial(m);
        CHECK(bullet_podles(A, Fc, p, Poly(1)) == p);
        CHECK(bullet_podles(A, Fc, Poly(1), p) == p);
    }
}

TEST_CASE("deformed products of generators") {
    PodlesAlgebra A;
    SeriesCochain Fc;
    Scalar c1 = Scalar::param(1), c2 = Scalar::param(2);

    Poly x3x3 = mul_raw(x3(), x3());
    CHECK(bullet_podles(A, Fc, x3(), x3()) ==
          A.normal_form(x3x3 + scale(c1, mul_raw(xp(), xm()))));

    CHECK(bullet_podles(A, Fc, xp(), xp()) == A.mul(xp(), xp()));
    CHECK(bullet_podles(A, Fc, xp(), xm()) == A.mul(xp(), xm()));

    Poly expect_mp = mul_raw(xm(), xp());
    expect_mp = expect_mp + scale(Scalar(4) * c1, mul_raw(x3(), x3()));
    expect_mp = expect_mp + scale(Scalar(4) * c2, mul_raw(xp(), xm()));
    CHECK(bullet_podles(A, Fc, xm(), xp()) == A.normal_form(expect_mp));

    Scalar q2 = Scalar(1) - Scalar(2) * c1;
    Poly xpx3 = A.mul(xp(), x3());
    CHECK(bullet_podles(A, Fc, x3(), xp()) == scale(q2, xpx3));
    CHECK(bullet_podles(A, Fc, xp(), x3()) == xpx3);
    Poly x3xm = A.mul(x3(), xm());
    CHECK(bullet_podles(A, Fc, xm(), x3()) == scale(q2, x3xm));
    CHECK(bullet_podles(A, Fc, x3(), xm()) == x3xm);
}

TEST_CASE("quadratic identities hold, the last one only at c2 equal c1 squared") {
    PodlesAlgebra A;
    SeriesCochain Fc;
    CHECK(podles_identity_residual(A, Fc, 0).is_zero());
    CHECK(podles_identity_residual(A, Fc, 1).is_zero());
    CHECK(podles_identity_residual(A, Fc, 2).is_zero());
    Poly r3 = podles_identity_residual(A, Fc, 3);
    CHECK(!r3.is_zero());
    CHECK(substitute_param(r3, 2, Scalar::param(1, 2)).is_zero());
}

TEST_CASE("residuals of real identities are real") {
    PodlesAlgebra A;
    SeriesCochain Fc;
    for (int which = 0; which < 4; ++which) {
        Poly res = podles_identity_residual(A, Fc, which);
        for (auto& [m, s] : res.terms) CHECK(s == s.conj());
    }
}

TEST_CASE("associator scan finds no witness for the trivial cochain") {
    PodlesAlgebra A;
    SeriesCochain trivial{true};
    CHECK(!associator_scan(A, trivial, 3).has_value());
    CHECK(!associator_scan(A, trivial, 4).has_value());
}

TEST_CASE("associator scan finds a degree three witness") {
    PodlesAlgebra A;
    SeriesCochain Fc;
    auto w = associator_scan(A, Fc, 3);
    REQUIRE(w.has_value());
    CHECK(w->triple[0] == mono_gen(2));
    CHECK(w->triple[1] == mono_gen(2));
    CHECK(w->triple[2] == mono_gen(0));

    Scalar c1 = Scalar::param(1);
    Scalar c1_2 = Scalar::param(1, 2), c1_3 = Scalar::param(1, 3);
    Poly expect;
    expect.add_term(mono_gen(0), Scalar::param(0) * (Scalar(4) * c1_3 - Scalar(2) * c1_2));
    Mono m = mono_gen(0);
    m[2] = 2;
    expect.add_term(m, Scalar(2) * c1_2 - Scalar(4) * c1_3);
    CHECK(w->residual == expect);
    CHECK(w->parameters == std::vector<std::string>{"r2", "c1"});

    Poly direct = podles_associator(A, Fc, x3(), x3(), xp());
    CHECK(substitute_param(direct, 2, c1 * c1) == w->residual);
}

TEST_CASE("a second independent witness at degree three") {
    PodlesAlgebra A;
    SeriesCochain Fc;
    Scalar c1 = Scalar::param(1);
    Scalar c1_3 = Scalar::param(1, 3), c1_4 = Scalar::param(1, 4);
    Poly expect;
    expect.add_term(mono_gen(0), Scalar::param(0) * (Scalar(-16) * c1_3 + Scalar(16) * c1_4));
    Mono m = mono_gen(0);
    m[2] = 2;
    expect.add_term(m, Scalar(32) * c1_3 - Scalar(16) * c1_4);
    Poly direct = podles_associator(A, Fc, xm(), xp(), xp());
    CHECK(substitute_param(direct, 2, c1 * c1) == expect);
}

TEST_CASE("some triples associate even with generic parameters") {
    PodlesAlgebra A;
    SeriesCochain Fc;
    CHECK(podles_associator(A, Fc, xm(), xp(), xm()).is_zero());
    CHECK(podles_associator(A, Fc, xp(), xp(), xp()).is_zero());
    CHECK(podles_associator(A, Fc, x3(), x3(), x3()).is_zero());
}
