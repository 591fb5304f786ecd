#pragma once

// Named verification suites behind the command-line runner and the
// acceptance harness. Each suite bundles checks over one target of the
// engine; a failing check carries a short residual rendering.

#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/group_algebra.hpp"
#include "twistlab/oracle.hpp"
#include "twistlab/podles.hpp"
#include "twistlab/report.hpp"
#include "twistlab/riemann.hpp"
#include "twistlab/twisted.hpp"

namespace twistlab {

inline CheckOutcome check_ok() { return {}; }
inline CheckOutcome check_fail(std::string residual) { return {false, std::move(residual)}; }

inline std::string tensor_residual(const FormTensor& t) {
    return std::to_string(t.terms.size()) + " nonzero tensor terms";
}

inline bool labels_independent(unsigned a, unsigned b, unsigned c) {
    if (a == 0 || b == 0 || c == 0) return false;
    if (a == b || c == a || c == b) return false;
    return c != (a ^ b);
}

inline std::vector<Check> cochain_suite_checks() {
    std::vector<Check> cs;
    cs.push_back(run_check("cochains are counital", [] {
        for (int n = 1; n <= 3; ++n)
            if (!is_counital(sign_cochain(n))) return check_fail("n=" + std::to_string(n));
        return check_ok();
    }));
    cs.push_back(run_check("values are self-inverse signs", [] {
        for (int n = 1; n <= 3; ++n) {
            auto F = sign_cochain(n);
            for (unsigned a = 0; a < F.order(); ++a)
                for (unsigned b = 0; b < F.order(); ++b) {
                    int v = F.at(a, b);
                    if ((v != 1 && v != -1) || F.inv_at(a, b) != v)
                        return check_fail("n=" + std::to_string(n));
                }
        }
        return check_ok();
    }));
    cs.push_back(run_check("reality under the label-fixing star", [] {
        auto star = [](unsigned a) { return a; };
        for (int n = 1; n <= 3; ++n) {
            auto F = sign_cochain(n);
            for (unsigned a = 0; a < F.order(); ++a)
                for (unsigned b = 0; b < F.order(); ++b)
                    if (F.at(star(a), star(b)) * F.at(a, b) != 1)
                        return check_fail("n=" + std::to_string(n));
        }
        return check_ok();
    }));
    cs.push_back(run_check("quaternion grid matches the frozen table", [] {
        const int grid[4][4] = {
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        auto F = sign_cochain(2);
        for (unsigned a = 0; a < 4; ++a)
            for (unsigned b = 0; b < 4; ++b)
                if (F.at(a, b) != grid[a][b])
                    return check_fail("entry " + std::to_string(a) + "," + std::to_string(b));
        return check_ok();
    }));
    cs.push_back(run_check("complex and quaternion cochains are cocycles", [] {
        if (!is_cocycle(sign_cochain(1))) return check_fail("n=1");
        if (!is_cocycle(sign_cochain(2))) return check_fail("n=2");
        return check_ok();
    }));
    cs.push_back(run_check("octonion coboundary tracks label independence", [] {
        auto F = sign_cochain(3);
        if (is_cocycle(F)) return check_fail("coboundary is trivial");
        int minus = 0;
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = 0; b < 8; ++b)
                for (unsigned c = 0; c < 8; ++c) {
                    int v = coboundary(F, a, b, c);
                    bool indep = labels_independent(a, b, c);
                    if (v != (indep ? -1 : 1))
                        return check_fail("triple " + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c));
                    if (v == -1) ++minus;
                }
        if (minus != 168) return check_fail("support size " + std::to_string(minus));
        return check_ok();
    }));
    cs.push_back(run_check("braiding is minus one exactly on independent pairs", [] {
        for (int n = 1; n <= 3; ++n) {
            auto F = sign_cochain(n);
            for (unsigned a = 0; a < F.order(); ++a)
                for (unsigned b = 0; b < F.order(); ++b) {
                    bool indep = a != 0 && b != 0 && a != b;
                    if (braiding(F, a, b) != (indep ? -1 : 1))
                        return check_fail("n=" + std::to_string(n) + " pair " +
                                          std::to_string(a) + "," + std::to_string(b));
                }
        }
        return check_ok();
    }));
    cs.push_back(run_check("octonion cochain shifts by a sign along either label", [] {
        auto F = sign_cochain(3);
        for (unsigned i = 1; i < 8; ++i)
            for (unsigned a = 0; a < 8; ++a) {
                if (F.at(a ^ i, i) != -F.at(a, i))
                    return check_fail("left shift at " + std::to_string(a) + "," +
                                      std::to_string(i));
                if (F.at(i, i ^ a) != -F.at(i, a))
                    return check_fail("right shift at " + std::to_string(i) + "," +
                                      std::to_string(a));
            }
        return check_ok();
    }));
    return cs;
}

inline std::vector<Check> octonion_suite_checks() {
    std::vector<Check> cs;
    TwistContext ctx(3);
    cs.push_back(run_check("unit row and column act as the identity", [&] {
        for (unsigned b = 0; b < 8; ++b) {
            if (!(mul(ctx, basis_elem(0), basis_elem(b)) == basis_elem(b)))
                return check_fail(basis_name(b));
            if (!(mul(ctx, basis_elem(b), basis_elem(0)) == basis_elem(b)))
                return check_fail(basis_name(b));
        }
        return check_ok();
    }));
    cs.push_back(run_check("products carry the cochain sign onto the xor label", [&] {
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = 0; b < 8; ++b) {
                auto p = mul(ctx, basis_elem(a), basis_elem(b));
                if (!(p == basis_elem(a ^ b, Scalar(ctx.f(a, b)))))
                    return check_fail(basis_name(a) + "*" + basis_name(b));
            }
        return check_ok();
    }));
    cs.push_back(run_check("non-unit squares are minus the unit", [&] {
        for (unsigned a = 1; a < 8; ++a)
            if (!(mul(ctx, basis_elem(a), basis_elem(a)) == basis_elem(0, Scalar(-1))))
                return check_fail(basis_name(a));
        return check_ok();
    }));
    cs.push_back(run_check("quaternion subtable embeds at the low labels", [&] {
        if (!(mul(ctx, basis_elem(1), basis_elem(2)) == basis_elem(3))) return check_fail("e1*e2");
        if (!(mul(ctx, basis_elem(2), basis_elem(3)) == basis_elem(1))) return check_fail("e2*e3");
        if (!(mul(ctx, basis_elem(3), basis_elem(1)) == basis_elem(2))) return check_fail("e3*e1");
        return check_ok();
    }));
    cs.push_back(run_check("alternative laws hold on all basis pairs", [&] {
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = 0; b < 8; ++b) {
                auto x = basis_elem(a), y = basis_elem(b);
                if (!(mul(ctx, mul(ctx, x, y), x) == mul(ctx, x, mul(ctx, y, x))))
                    return check_fail("flex " + basis_name(a) + "," + basis_name(b));
                if (!(mul(ctx, mul(ctx, x, x), y) == mul(ctx, x, mul(ctx, x, y))))
                    return check_fail("left " + basis_name(a) + "," + basis_name(b));
                if (!(mul(ctx, mul(ctx, y, x), x) == mul(ctx, y, mul(ctx, x, x))))
                    return check_fail("right " + basis_name(a) + "," + basis_name(b));
            }
        return check_ok();
    }));
    cs.push_back(run_check("associativity defect tracks label independence", [&] {
        int defects = 0;
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = 0; b < 8; ++b)
                for (unsigned c = 0; c < 8; ++c) {
                    auto lhs = mul(ctx, mul(ctx, basis_elem(a), basis_elem(b)), basis_elem(c));
                    auto rhs = mul(ctx, basis_elem(a), mul(ctx, basis_elem(b), basis_elem(c)));
                    bool assoc = lhs == rhs;
                    if (assoc == labels_independent(a, b, c))
                        return check_fail("triple " + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c));
                    if (!assoc) ++defects;
                }
        if (defects != 168) return check_fail("defect count " + std::to_string(defects));
        return check_ok();
    }));
    cs.push_back(run_check("norm composes over deformed products", [&] {
        GroupAlgElem u, v;
        for (unsigned a = 0; a < 8; ++a) {
            u.add(a, Scalar::from_rational(Rational(static_cast<int>(a) + 1, 3)));
            v.add(a, Scalar::from_rational(Rational(7 - static_cast<int>(a), 5)));
        }
        if (!(norm_sq(mul(ctx, u, v)) == norm_sq(u) * norm_sq(v)))
            return check_fail("dense sample");
        GroupAlgElem w = basis_elem(5) + basis_elem(2, Scalar::from_rational(Rational(1, 2)));
        if (!(norm_sq(mul(ctx, w, u)) == norm_sq(w) * norm_sq(u)))
            return check_fail("sparse sample");
        return check_ok();
    }));
    return cs;
}

inline std::vector<Check> s7_classical_suite_checks() {
    std::vector<Check> cs;
    Geometry G(3);
    const unsigned nc = G.nc();
    cs.push_back(run_check("differential squares to zero on the coordinates", [&] {
        for (unsigned b = 0; b < 8; ++b) {
            auto v = G.C.d0(Poly::gen(b));
            if (!d_one_form(G.C, G.T, v).is_zero()) return check_fail("x" + std::to_string(b));
        }
        return check_ok();
    }));
    cs.push_back(run_check("structure equation matches the coordinate route", [&] {
        for (unsigned i = 1; i <= nc; ++i)
            if (!(d_coframe(G.C, G.T, i) == d_coframe_from_dx(G.C, i)))
                return check_fail("coframe " + std::to_string(i));
        return check_ok();
    }));
    cs.push_back(run_check("structure constants are totally antisymmetric", [&] {
        if (G.T.entries.size() != 343)
            return check_fail("entry count " + std::to_string(G.T.entries.size()));
        for (unsigned i = 1; i <= nc; ++i)
            for (unsigned j = 1; j <= nc; ++j)
                for (unsigned k = 1; k <= nc; ++k) {
                    if (!(G.T.at(i, j, k) == scale(-1, G.T.at(j, i, k))))
                        return check_fail("swap of the first pair");
                    if (!(G.T.at(i, j, k) == scale(-1, G.T.at(i, k, j))))
                        return check_fail("swap of the last pair");
                }
        return check_ok();
    }));
    cs.push_back(run_check("killing contraction is minus six delta", [&] {
        for (unsigned i = 1; i <= nc; ++i)
            for (unsigned j = 1; j <= nc; ++j) {
                Poly acc;
                for (unsigned m = 1; m <= nc; ++m)
                    for (unsigned p = 1; p <= nc; ++p)
                        acc = acc + G.C.A.mul(G.T.at(m, i, p), G.T.at(p, j, m));
                Poly expect = i == j ? Poly(-6) : Poly();
                if (!(acc == expect))
                    return check_fail("pair " + std::to_string(i) + "," + std::to_string(j));
            }
        return check_ok();
    }));
    cs.push_back(run_check("structure constants are divergence free", [&] {
        for (unsigned a = 1; a <= nc; ++a)
            for (unsigned b = 1; b <= nc; ++b) {
                Poly acc;
                for (unsigned i = 1; i <= nc; ++i) acc = acc + G.C.partial(i, G.T.at(i, a, b));
                if (!acc.is_zero())
                    return check_fail("pair " + std::to_string(a) + "," + std::to_string(b));
            }
        return check_ok();
    }));
    cs.push_back(run_check("torsion vanishes", [&] {
        for (unsigned i = 1; i <= nc; ++i)
            if (!torsion_coframe(G, i).is_zero())
                return check_fail("coframe " + std::to_string(i));
        CoForm v{};
        v[2] = Poly::gen(3);
        v[6] = G.C.A.mul(Poly::gen(1), Poly::gen(5));
        auto defect = d_one_form(G.C, G.T, v) - wedge_first_two(G, nabla_one_form(G, v));
        if (!defect.is_zero()) return check_fail(tensor_residual(defect));
        return check_ok();
    }));
    cs.push_back(run_check("connection is metric compatible", [&] {
        auto t = nabla_metric(G);
        return t.is_zero() ? check_ok() : check_fail(tensor_residual(t));
    }));
    cs.push_back(run_check("cotorsion vanishes", [&] {
        auto t = cotorsion(G);
        return t.is_zero() ? check_ok() : check_fail(tensor_residual(t));
    }));
    cs.push_back(run_check("curvature matches the closed form", [&] {
        for (unsigned i = 1; i <= nc; ++i)
            if (!(curvature_coframe(G, i) == curvature_closed_form(G, i)))
                return check_fail("coframe " + std::to_string(i));
        return check_ok();
    }));
    cs.push_back(run_check("ricci is minus three times the metric", [&] {
        auto defect = ricci(G) - scale(-3, metric(G));
        return defect.is_zero() ? check_ok() : check_fail(tensor_residual(defect));
    }));
    cs.push_back(run_check("scalar curvature is minus twenty-one", [&] {
        auto s = scalar_curvature(G);
        return s == Poly(-21) ? check_ok() : check_fail(poly_string(G.C.A, s));
    }));
    return cs;
}

inline std::vector<Check> s7_twisted_suite_checks() {
    std::vector<Check> cs;
    Geometry G(3);
    const unsigned nc = G.nc();
    const SphereAlgebra& A = G.C.A;
    const TwistContext& ctx = G.C.ctx;
    cs.push_back(run_check("deformed product altercommutes to degree three", [&] {
        auto monos = monomials_up_to(A.ngen, 2);
        for (const auto& mp : monos)
            for (const auto& mq : monos) {
                if (mono_degree(mp) + mono_degree(mq) > 3) continue;
                Poly p = Poly::monomial(mp), q = Poly::monomial(mq);
                int r = ctx.braid(A.degree(mp), A.degree(mq));
                if (!(bullet(A, ctx, p, q) == scale(r, bullet(A, ctx, q, p))))
                    return check_fail(mono_string(A, mp) + " , " + mono_string(A, mq));
            }
        return check_ok();
    }));
    cs.push_back(run_check("deformed product associates up to the coboundary", [&] {
        auto monos = monomials_up_to(A.ngen, 3);
        for (const auto& mp : monos)
            for (const auto& mq : monos) {
                if (mono_degree(mp) + mono_degree(mq) > 3) continue;
                for (const auto& mr : monos) {
                    if (mono_degree(mp) + mono_degree(mq) + mono_degree(mr) > 3) continue;
                    Poly p = Poly::monomial(mp), q = Poly::monomial(mq), r = Poly::monomial(mr);
                    int sign = ctx.phi(A.degree(mp), A.degree(mq), A.degree(mr));
                    auto lhs = bullet(A, ctx, bullet(A, ctx, p, q), r);
                    auto rhs = scale(sign, bullet(A, ctx, p, bullet(A, ctx, q, r)));
                    if (!(lhs == rhs))
                        return check_fail(mono_string(A, mp) + " , " + mono_string(A, mq) +
                                          " , " + mono_string(A, mr));
                }
            }
        return check_ok();
    }));
    cs.push_back(run_check("deformed sphere relation holds", [&] {
        Poly lhs = bullet(A, ctx, Poly::gen(0), Poly::gen(0));
        for (unsigned g = 1; g < A.ngen; ++g)
            lhs = lhs - bullet(A, ctx, Poly::gen(g), Poly::gen(g));
        return lhs == Poly(1) ? check_ok() : check_fail(poly_string(A, lhs - Poly(1)));
    }));
    cs.push_back(run_check("deformed torsion equals the classical torsion", [&] {
        for (unsigned i = 1; i <= nc; ++i) {
            auto d = d_coframe(G.C, G.T, i);
            if (!(wedge_f_first_two(G, nabla_f_coframe(G, i)) == d))
                return check_fail("deformed side at coframe " + std::to_string(i));
            if (!(wedge_first_two(G, nabla_coframe(G, i)) == d))
                return check_fail("classical side at coframe " + std::to_string(i));
        }
        return check_ok();
    }));
    cs.push_back(run_check("deformed connection is metric compatible", [&] {
        auto t = nabla_f_metric(G);
        return t.is_zero() ? check_ok() : check_fail(tensor_residual(t));
    }));
    cs.push_back(run_check("deformed cotorsion vanishes", [&] {
        auto t = cotorsion_f(G);
        return t.is_zero() ? check_ok() : check_fail(tensor_residual(t));
    }));
    cs.push_back(run_check("deformed ricci is minus three times the deformed metric", [&] {
        auto defect = ricci_f(G) - scale(-3, metric_f(G));
        return defect.is_zero() ? check_ok() : check_fail(tensor_residual(defect));
    }));
    cs.push_back(run_check("deformed scalar curvature matches the classical value", [&] {
        auto s = scalar_curvature_f(G);
        return s == Poly(-21) ? check_ok() : check_fail(poly_string(A, s));
    }));
    cs.push_back(run_check("connection naturality", [&] {
        for (unsigned i = 1; i <= nc; ++i)
            if (!(nabla_f_coframe(G, i) == twist_tensor(G, nabla_coframe(G, i))))
                return check_fail("coframe " + std::to_string(i));
        CoForm v{};
        v[1] = Poly::gen(4);
        v[3] = A.mul(Poly::gen(2), Poly::gen(6)) + Poly(1);
        if (!(nabla_f_one_form(G, v) == twist_tensor(G, nabla_one_form(G, v))))
            return check_fail("mixed one-form sample");
        return check_ok();
    }));
    cs.push_back(run_check("curvature naturality", [&] {
        for (unsigned i = 1; i <= nc; ++i)
            if (!(curvature_f_coframe(G, i) == twist_tensor(G, curvature_coframe(G, i))))
                return check_fail("coframe " + std::to_string(i));
        return check_ok();
    }));
    cs.push_back(run_check("lift naturality", [&] {
        for (unsigned i = 1; i <= nc; ++i) {
            auto R = curvature_coframe(G, i);
            if (!(lift_f(G, twist_tensor(G, R)) == twist_tensor(G, lift(G, R))))
                return check_fail("coframe " + std::to_string(i));
        }
        return check_ok();
    }));
    cs.push_back(run_check("ricci naturality", [&] {
        auto defect = ricci_f(G) - twist_tensor(G, ricci(G));
        return defect.is_zero() ? check_ok() : check_fail(tensor_residual(defect));
    }));
    return cs;
}

inline std::vector<Check> s3_suite_checks() {
    std::vector<Check> cs;
    Geometry G(2);
    const SphereAlgebra& A = G.C.A;
    const TwistContext& ctx = G.C.ctx;
    cs.push_back(run_check("generator pairs anticommute", [&] {
        const unsigned pairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
        for (auto& pr : pairs) {
            Poly xi = Poly::gen(pr[0]), xj = Poly::gen(pr[1]);
            if (!(bullet(A, ctx, xi, xj) + bullet(A, ctx, xj, xi)).is_zero())
                return check_fail("pair " + std::to_string(pr[0]) + "," +
                                  std::to_string(pr[1]));
        }
        return check_ok();
    }));
    cs.push_back(run_check("deformed sphere relation holds", [&] {
        Poly lhs = bullet(A, ctx, Poly::gen(0), Poly::gen(0));
        for (unsigned g = 1; g < A.ngen; ++g)
            lhs = lhs - bullet(A, ctx, Poly::gen(g), Poly::gen(g));
        return lhs == Poly(1) ? check_ok() : check_fail(poly_string(A, lhs - Poly(1)));
    }));
    cs.push_back(run_check("deformed product is associative on low degrees", [&] {
        std::vector<Poly> pool;
        for (const auto& m : monomials_up_to(A.ngen, 4))
            if (m[0] <= 1) pool.push_back(A.normal_form(Poly::monomial(m)));
        for (const auto& p : pool)
            for (const auto& q : pool)
                for (const auto& r : pool) {
                    auto lhs = bullet(A, ctx, bullet(A, ctx, p, q), r);
                    auto rhs = bullet(A, ctx, p, bullet(A, ctx, q, r));
                    if (!(lhs == rhs)) return check_fail(poly_string(A, lhs - rhs));
                }
        return check_ok();
    }));
    cs.push_back(run_check("ricci is minus the metric", [&] {
        auto defect = ricci(G) - scale(-1, metric(G));
        return defect.is_zero() ? check_ok() : check_fail(tensor_residual(defect));
    }));
    cs.push_back(run_check("scalar curvature is minus three", [&] {
        auto s = scalar_curvature(G);
        return s == Poly(-3) ? check_ok() : check_fail(poly_string(A, s));
    }));
    return cs;
}

inline std::vector<Check> s1_suite_checks() {
    std::vector<Check> cs;
    Geometry G(1);
    const SphereAlgebra& A = G.C.A;
    const TwistContext& ctx = G.C.ctx;
    cs.push_back(run_check("deformed product is commutative", [&] {
        auto monos = monomials_up_to(A.ngen, 3);
        for (const auto& mp : monos)
            for (const auto& mq : monos) {
                Poly p = Poly::monomial(mp), q = Poly::monomial(mq);
                if (!(bullet(A, ctx, p, q) == bullet(A, ctx, q, p)))
                    return check_fail(mono_string(A, mp) + " , " + mono_string(A, mq));
            }
        return check_ok();
    }));
    cs.push_back(run_check("deformed product is associative", [&] {
        auto monos = monomials_up_to(A.ngen, 2);
        for (const auto& mp : monos)
            for (const auto& mq : monos)
                for (const auto& mr : monos) {
                    Poly p = Poly::monomial(mp), q = Poly::monomial(mq), r = Poly::monomial(mr);
                    auto lhs = bullet(A, ctx, bullet(A, ctx, p, q), r);
                    auto rhs = bullet(A, ctx, p, bullet(A, ctx, q, r));
                    if (!(lhs == rhs)) return check_fail(poly_string(A, lhs - rhs));
                }
        return check_ok();
    }));
    cs.push_back(run_check("relation deforms to a hyperbola", [&] {
        Poly x0 = Poly::gen(0), x1 = Poly::gen(1);
        if (!(bullet(A, ctx, x1, x1) == scale(-1, A.mul(x1, x1))))
            return check_fail("square of the odd coordinate");
        Poly lhs = bullet(A, ctx, x0, x0) - bullet(A, ctx, x1, x1);
        return lhs == Poly(1) ? check_ok() : check_fail(poly_string(A, lhs - Poly(1)));
    }));
    cs.push_back(run_check("the circle is flat", [&] {
        if (!curvature_coframe(G, 1).is_zero()) return check_fail("curvature");
        if (!ricci(G).is_zero()) return check_fail("ricci");
        if (!scalar_curvature(G).is_zero()) return check_fail("scalar");
        return check_ok();
    }));
    return cs;
}

inline std::vector<Check> podles_suite_checks() {
    std::vector<Check> cs;
    PodlesAlgebra A;
    SeriesCochain Fc;
    auto xp = Poly::gen(0), xm = Poly::gen(1), x3 = Poly::gen(2);
    auto normal_monomials = [&A](int bound) {
        std::vector<Mono> out;
        for (const auto& m : monomials_up_to(PodlesAlgebra::ngen, bound))
            if (A.is_normal(m)) out.push_back(m);
        return out;
    };
    cs.push_back(run_check("derivation tables act as stated", [&] {
        Scalar unit_i = Scalar::from_gauss(Gauss::unit_im());
        if (!(A.act("x", x3) == Poly::monomial(mono_gen(0), unit_i)))
            return check_fail("x on x3");
        if (!A.act("x", xp).is_zero()) return check_fail("x on xp");
        if (!A.act("xx", x3).is_zero()) return check_fail("x twice on x3");
        if (!(A.act("h", xp) == scale(-2, xp))) return check_fail("h on xp");
        if (!(A.act("h", xm) == scale(2, xm))) return check_fail("h on xm");
        return check_ok();
    }));
    cs.push_back(run_check("action descends to the quotient", [&] {
        Poly rel = A.relation();
        for (auto g : {Sl2Gen::X, Sl2Gen::Y, Sl2Gen::H}) {
            Poly out;
            for (std::size_t v = 0; v < A.ngen; ++v)
                out = out + mul_raw(partial_raw(rel, v), A.gen_image(g, v));
            if (!out.is_zero()) return check_fail("one generator fails");
        }
        return check_ok();
    }));
    cs.push_back(run_check("operator relations hold to degree five", [&] {
        for (const auto& m : normal_monomials(5)) {
            Poly p = Poly::monomial(m);
            auto comm = [&](Sl2Gen a, Sl2Gen b) {
                return A.act_gen(a, A.act_gen(b, p)) - A.act_gen(b, A.act_gen(a, p));
            };
            if (!(comm(Sl2Gen::X, Sl2Gen::Y) == A.act_gen(Sl2Gen::H, p)))
                return check_fail(mono_string(A, m));
            if (!(comm(Sl2Gen::H, Sl2Gen::X) == scale(-2, A.act_gen(Sl2Gen::X, p))))
                return check_fail(mono_string(A, m));
            if (!(comm(Sl2Gen::H, Sl2Gen::Y) == scale(2, A.act_gen(Sl2Gen::Y, p))))
                return check_fail(mono_string(A, m));
        }
        return check_ok();
    }));
    cs.push_back(run_check("iterated actions vanish past twice the degree", [&] {
        for (const auto& m : normal_monomials(4)) {
            int d = static_cast<int>(mono_degree(m));
            Poly px = Poly::monomial(m), py = px;
            for (int k = 0; k <= 2 * d; ++k) {
                px = A.act_gen(Sl2Gen::X, px);
                py = A.act_gen(Sl2Gen::Y, py);
            }
            if (!px.is_zero() || !py.is_zero()) return check_fail(mono_string(A, m));
        }
        return check_ok();
    }));
    cs.push_back(run_check("deformed product is counital", [&] {
        for (const auto& m : normal_monomials(3)) {
            Poly p = Poly::monomial(m);
            if (!(bullet_podles(A, Fc, p, Poly(1)) == p)) return check_fail(mono_string(A, m));
            if (!(bullet_podles(A, Fc, Poly(1), p) == p)) return check_fail(mono_string(A, m));
        }
        return check_ok();
    }));
    cs.push_back(run_check("proof-level generator products match", [&] {
        Scalar c1 = Scalar::param(1), c2 = Scalar::param(2);
        if (!(bullet_podles(A, Fc, x3, x3) ==
              A.normal_form(mul_raw(x3, x3) + scale(c1, mul_raw(xp, xm)))))
            return check_fail("x3 with x3");
        if (!(bullet_podles(A, Fc, xp, xm) == A.mul(xp, xm))) return check_fail("xp with xm");
        Poly expect = mul_raw(xm, xp);
        expect = expect + scale(Scalar(4) * c1, mul_raw(x3, x3));
        expect = expect + scale(Scalar(4) * c2, mul_raw(xp, xm));
        if (!(bullet_podles(A, Fc, xm, xp) == A.normal_form(expect)))
            return check_fail("xm with xp");
        return check_ok();
    }));
    cs.push_back(run_check("quadratic identities hold at the special parameter", [&] {
        for (int which : {0, 1, 2})
            if (!podles_identity_residual(A, Fc, which).is_zero())
                return check_fail("identity " + std::to_string(which));
        Poly r3 = substitute_param(podles_identity_residual(A, Fc, 3), 2, Scalar::param(1, 2));
        if (!r3.is_zero()) return check_fail(poly_string(A, r3));
        return check_ok();
    }));
    cs.push_back(run_check("the mixed identity fails for generic parameters", [&] {
        Poly r3 = podles_identity_residual(A, Fc, 3);
        return r3.is_zero() ? check_fail("residual vanished identically") : check_ok();
    }));
    cs.push_back(run_check("associator scan finds a witness at bound three", [&] {
        auto w = associator_scan(A, Fc, 3);
        if (!w.has_value()) return check_fail("no witness up to total degree 3");
        if (w->residual.is_zero()) return check_fail("empty residual");
        return check_ok();
    }));
    cs.push_back(run_check("trivial cochain stays associative", [&] {
        SeriesCochain trivial{true};
        if (associator_scan(A, trivial, 4).has_value())
            return check_fail("unexpected witness");
        return check_ok();
    }));
    return cs;
}

inline std::vector<Check> oracle_checks() {
    std::vector<Check> cs;
    for (int n = 1; n <= 3; ++n)
        cs.push_back(run_check("stepwise rebracketing oracle n=" + std::to_string(n), [n] {
            SphereAlgebra A(static_cast<unsigned>(n));
            TwistContext ctx(n);
            auto monos = monomials_up_to(A.ngen, 3);
            for (const auto& mp : monos)
                for (const auto& mq : monos) {
                    if (mono_degree(mp) + mono_degree(mq) > 3) continue;
                    Poly p = Poly::monomial(mp), q = Poly::monomial(mq);
                    int sign = stepwise_product_sign(ctx, A, mp, mq);
                    if (!(bullet(A, ctx, p, q) == scale(sign, A.mul(p, q))))
                        return check_fail(mono_string(A, mp) + " , " + mono_string(A, mq));
                }
            return check_ok();
        }));
    return cs;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "cochains", "octonions", "s7-classical", "s7-twisted", "s3", "s1", "podles"};
    return names;
}

inline SuiteReport run_suite(const std::string& name) {
    if (name == "cochains") return make_report(name, cochain_suite_checks());
    if (name == "octonions") return make_report(name, octonion_suite_checks());
    if (name == "s7-classical") return make_report(name, s7_classical_suite_checks());
    if (name == "s7-twisted") return make_report(name, s7_twisted_suite_checks());
    if (name == "s3") return make_report(name, s3_suite_checks());
    if (name == "s1") return make_report(name, s1_suite_checks());
    if (name == "podles") return make_report(name, podles_suite_checks());
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace twistlab
