#pragma once

// Derivation-twisted deformation of the coordinate ring of a 2-sphere of
// radius-square r2. Three sl2 generators act by derivations on
// k[xp, xm, x3] / (xp*xm + x3^2 - r2), and a formal power series in the pair
// of nilpotent actions deforms the product. The series coefficients c1, c2,
// ... stay symbolic; truncation is exact because the x- and y-actions kill
// any fixed polynomial after finitely many steps.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/poly.hpp"

namespace twistlab {

enum class Sl2Gen : uint8_t { X, Y, H };

// Generators: 0 is xp, 1 is xm, 2 is x3. Monomials with both xp and xm are
// reduced by xp*xm -> r2 - x3^2, so normal forms are spanned by xp^a*x3^c
// and xm^b*x3^c.
struct PodlesAlgebra {
    static constexpr std::size_t ngen = 3;

    std::string gen_name(std::size_t g) const {
        static const char* names[3] = {"xp", "xm", "x3"};
        if (g >= ngen) throw std::out_of_range("podles generator index");
        return names[g];
    }

    bool is_normal(const Mono& m) const { return m[0] == 0 || m[1] == 0; }

    Poly relation() const {
        Poly r = mul_raw(Poly::gen(0), Poly::gen(1));
        r.add_term(mono_gen(2, 2), Scalar(1));
        r.add_term(mono_one(), Scalar::param(0) * Scalar(-1));
        return r;
    }

    // Image of xp*xm under the rewrite.
    Poly pair_image() const {
        Poly r;
        r.add_term(mono_one(), Scalar::param(0));
        r.add_term(mono_gen(2, 2), Scalar(-1));
        return r;
    }

    Poly normal_form(Poly p) const {
        for (;;) {
            Mono bad{};
            Scalar coef;
            bool found = false;
            for (auto& [m, s] : p.terms)
                if (!is_normal(m)) {
                    bad = m;
                    coef = s;
                    found = true;
                    break;
                }
            if (!found) return p;
            p.add_term(bad, Scalar(-1) * coef);
            Mono rest = bad;
            rest[0] -= 1;
            rest[1] -= 1;
            p = p + scale(coef, mul_raw(Poly::monomial(rest), pair_image()));
        }
    }

    Poly mul(const Poly& a, const Poly& b) const { return normal_form(mul_raw(a, b)); }

    // Value of the derivation on a single coordinate.
    Poly gen_image(Sl2Gen g, std::size_t v) const {
        Scalar two_i = Scalar::from_gauss(Gauss(Rational(0), Rational(2)));
        Scalar unit_i = Scalar::from_gauss(Gauss::unit_im());
        switch (g) {
            case Sl2Gen::X:
                if (v == 1) return Poly::monomial(mono_gen(2), Scalar(-1) * two_i);
                if (v == 2) return Poly::monomial(mono_gen(0), unit_i);
                return Poly();
            case Sl2Gen::Y:
                if (v == 0) return Poly::monomial(mono_gen(2), two_i);
                if (v == 2) return Poly::monomial(mono_gen(1), Scalar(-1) * unit_i);
                return Poly();
            case Sl2Gen::H:
                if (v == 0) return scale(-2, Poly::gen(0));
                if (v == 1) return scale(2, Poly::gen(1));
                return Poly();
        }
        return Poly();
    }

    Poly act_gen(Sl2Gen g, const Poly& p) const {
        Poly out;
        for (std::size_t v = 0; v < ngen; ++v) {
            Poly image = gen_image(g, v);
            if (image.is_zero()) continue;
            out = out + mul_raw(partial_raw(p, v), image);
        }
        return normal_form(out);
    }

    // Letters act in reading order: act("xy", p) is y acting on (x acting
    // on p).
    Poly act(std::string_view word, Poly p) const {
        for (char c : word) {
            switch (c) {
                case 'x': p = act_gen(Sl2Gen::X, p); break;
                case 'y': p = act_gen(Sl2Gen::Y, p); break;
                case 'h': p = act_gen(Sl2Gen::H, p); break;
                default: throw std::invalid_argument("unknown sl2 letter");
            }
        }
        return p;
    }
};

// Formal series cochain 1 + sum_n c_n x^n (x) y^n with c0 = 1. The trivial
// cochain sets every higher coefficient to zero and recovers the plain
// commutative product.
struct SeriesCochain {
    bool trivial = false;

    Scalar coefficient(unsigned n) const {
        if (n == 0) return Scalar(1);
        if (trivial) return Scalar::zero();
        return Scalar::param(n);
    }
};

// Deformed product: sum_n c_n (x^n acting on p) * (y^n acting on q). The sum
// stops as soon as either iterated action vanishes.
inline Poly bullet_podles(const PodlesAlgebra& A, const SeriesCochain& Fc, const Poly& p,
                          const Poly& q) {
    Poly result = A.mul(p, q);
    Poly xp = p, yq = q;
    for (unsigned n = 1;; ++n) {
        xp = A.act_gen(Sl2Gen::X, xp);
        yq = A.act_gen(Sl2Gen::Y, yq);
        if (xp.is_zero() || yq.is_zero()) break;
        Scalar cn = Fc.coefficient(n);
        if (!cn.is_zero()) result = result + scale(cn, A.mul(xp, yq));
    }
    return result;
}

inline Poly substitute_param(const Poly& p, std::size_t id, const Scalar& value) {
    Poly out;
    for (auto& [m, s] : p.terms) out = out + Poly::monomial(m, s.substitute(id, value));
    return out;
}

// Residuals of the quadratic-generator identities, zero iff the identity
// holds. q2 stands for 1 - 2*c1; denominators 1 - c1 are cleared.
//   0:  x3.xp - q2*(xp.x3)
//   1:  xm.x3 - q2*(x3.xm)
//   2:  (1-c1)*(xp.xm) - (r2 - x3.x3)
//   3:  (1-c1)*(xm.xp) - (r2 - q2^2*(x3.x3))   [needs c2 = c1^2]
inline Poly podles_identity_residual(const PodlesAlgebra& A, const SeriesCochain& Fc,
                                     int which) {
    auto xp = Poly::gen(0), xm = Poly::gen(1), x3 = Poly::gen(2);
    Scalar c1 = Scalar::param(1);
    Scalar q2 = Scalar(1) - Scalar(2) * c1;
    Scalar one_minus_c1 = Scalar(1) - c1;
    Poly r2_poly = Poly::monomial(mono_one(), Scalar::param(0));
    switch (which) {
        case 0:
            return bullet_podles(A, Fc, x3, xp) - scale(q2, bullet_podles(A, Fc, xp, x3));
        case 1:
            return bullet_podles(A, Fc, xm, x3) - scale(q2, bullet_podles(A, Fc, x3, xm));
        case 2:
            return scale(one_minus_c1, bullet_podles(A, Fc, xp, xm)) -
                   (r2_poly - bullet_podles(A, Fc, x3, x3));
        case 3:
            return scale(one_minus_c1, bullet_podles(A, Fc, xm, xp)) -
                   (r2_poly - scale(q2 * q2, bullet_podles(A, Fc, x3, x3)));
        default:
            throw std::out_of_range("identity index");
    }
}

struct AssocWitness {
    std::array<Mono, 3> triple{};
    Poly residual;
    std::vector<std::string> parameters;
};

inline Poly podles_associator(const PodlesAlgebra& A, const SeriesCochain& Fc, const Poly& p,
                              const Poly& q, const Poly& r) {
    return bullet_podles(A, Fc, bullet_podles(A, Fc, p, q), r) -
           bullet_podles(A, Fc, p, bullet_podles(A, Fc, q, r));
}

// Scans ordered triples of normal-form monomials, each of degree at least
// one, with total degree up to the bound, in (degree, exponent) order. The
// associator residual is reduced by c2 -> c1^2 before testing; the first
// nonzero residual is returned with the parameter names it involves.
inline std::optional<AssocWitness> associator_scan(const PodlesAlgebra& A,
                                                   const SeriesCochain& Fc,
                                                   int max_total_degree) {
    std::vector<Mono> pool;
    for (int d = 1; d <= max_total_degree - 2; ++d)
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b) {
                Mono m = mono_one();
                m[0] = static_cast<uint8_t>(a);
                m[1] = static_cast<uint8_t>(b);
                m[2] = static_cast<uint8_t>(d - a - b);
                if (A.is_normal(m)) pool.push_back(m);
            }
    std::sort(pool.begin(), pool.end(), [](const Mono& a, const Mono& b) {
        if (mono_degree(a) != mono_degree(b)) return mono_degree(a) < mono_degree(b);
        return a < b;
    });
    Scalar c1_sq = Scalar::param(1, 2);
    for (const auto& mp : pool)
        for (const auto& mq : pool) {
            if (mono_degree(mp) + mono_degree(mq) + 1 > max_total_degree) continue;
            for (const auto& mr : pool) {
                if (mono_degree(mp) + mono_degree(mq) + mono_degree(mr) > max_total_degree)
                    continue;
                Poly res = podles_associator(A, Fc, Poly::monomial(mp), Poly::monomial(mq),
                                             Poly::monomial(mr));
                res = substitute_param(res, 2, c1_sq);
                if (res.is_zero()) continue;
                AssocWitness w;
                w.triple = {mp, mq, mr};
                w.residual = res;
                std::set<std::size_t> ids;
                for (auto& [m, s] : res.terms)
                    for (std::size_t id : s.parameters()) ids.insert(id);
                for (std::size_t id : ids) w.parameters.push_back(param_name(id));
                return w;
            }
        }
    return std::nullopt;
}

}  // namespace twistlab
