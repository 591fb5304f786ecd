#pragma once

// The deformed layer of the sphere geometries. All tensors are stored as
// classical flat tensors with polynomial coefficients pulled to the far
// left; the deformation lives entirely in the sign factors the operations
// pick up. Factors are evaluated per coefficient monomial, reading degrees
// with the coefficient attached to the leftmost leg of the subexpression in
// which it arises.

#include "twistlab/riemann.hpp"

namespace twistlab {

// Applies fn(monomial_poly, group_degree) to every term of p.
template <typename Fn>
inline void for_each_graded_term(const SphereAlgebra& A, const Poly& p, Fn&& fn) {
    for (auto& [m, s] : p.terms) fn(Poly::monomial(m, s), A.degree(m));
}

// The twisting map from classical tensors to deformed ones: each term picks
// up one inverse cochain factor per internal tensor boundary, bracketed from
// the left, with the coefficient degree attached to the leftmost slot. A
// wedge pair counts as a single slot of its total degree.
inline FormTensor twist_tensor(const Geometry& G, const FormTensor& t) {
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        unsigned wdeg = 0;
        if (key.wedge) {
            auto [m, n] = wedge_labels(key.wedge);
            wdeg = m ^ n;
        }
        for_each_graded_term(G.C.A, p, [&](const Poly& mono, unsigned d) {
            int sign = 1;
            unsigned acc = d ^ wdeg;
            bool have_slot = key.wedge != 0;
            for (uint8_t leg : key.word) {
                if (have_slot) sign *= G.C.ctx.finv(acc, leg);
                have_slot = true;
                acc ^= leg;
            }
            r.add(key, scale(sign, mono));
        });
    }
    return r;
}

// Deformed metric: the twist image of the classical one.
inline FormTensor metric_f(const Geometry& G) {
    FormTensor g;
    for (uint8_t i = 1; i <= G.nc(); ++i) g.add_word({i, i}, Poly(-1));
    return g;
}

// Deformed wedge of the first two word legs:
// mu (x) (a, b, rest) -> F(d+a, b) mu (a ^ b) (x) rest.
inline FormTensor wedge_f_first_two(const Geometry& G, const FormTensor& t) {
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        uint8_t a = key.word[0], b = key.word[1];
        std::vector<uint8_t> rest(key.word.begin() + 2, key.word.end());
        for_each_graded_term(G.C.A, p, [&](const Poly& mono, unsigned d) {
            r.add_wedge(a, b, rest, scale(G.C.ctx.f(d ^ a, b), mono));
        });
    }
    return normal_form(G.C.A, r);
}

// Deformed braiding on a pair of one-forms with far-left coefficients.
inline FormTensor sigma_f(const Geometry& G, const FormTensor& t) {
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        uint8_t a = key.word[0], b = key.word[1];
        for_each_graded_term(G.C.A, p, [&](const Poly& mono, unsigned d) {
            int sign = G.C.ctx.f(d ^ a, b) * G.C.ctx.finv(b, d ^ a);
            r.add_word({b, a}, scale(sign, mono));
        });
    }
    return r;
}

// Deformed coframe pairing applied to the first two word legs:
// <omega^a, mu omega^b>_F = F(a, d + b) mu delta_ab.
inline FormTensor contract_f_first_two(const Geometry& G, const FormTensor& t) {
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        uint8_t a = key.word[0], b = key.word[1];
        if (a != b) continue;
        std::vector<uint8_t> rest(key.word.begin() + 2, key.word.end());
        for_each_graded_term(G.C.A, p, [&](const Poly& mono, unsigned d) {
            r.add(TensorKey{key.wedge, rest}, scale(G.C.ctx.f(a, d ^ b), mono));
        });
    }
    return normal_form(G.C.A, r);
}

// Deformed connection on the coframe: nabla_F omega^i = sum F(i,k) c^i_{jk}
// omega^j (x) omega^k.
inline FormTensor nabla_f_coframe(const Geometry& G, unsigned i) {
    FormTensor r;
    for (uint8_t j = 1; j <= G.nc(); ++j)
        for (uint8_t k = 1; k <= G.nc(); ++k)
            r.add_word({j, k}, scale(G.C.ctx.f(i, k), G.T.at(i, j, k)));
    return r;
}

// Deformed connection on one-forms through the deformed Leibniz rule: write
// f omega^i in terms of the deformed action, differentiate, and reassociate
// the module action through the pair with the coboundary factor.
inline FormTensor nabla_f_one_form(const Geometry& G, const CoForm& v) {
    FormTensor r;
    for (uint8_t i = 1; i <= G.nc(); ++i) {
        if (v[i].is_zero()) continue;
        for_each_graded_term(G.C.A, v[i], [&](const Poly& f, unsigned a) {
            int outer = G.C.ctx.finv(a, i);
            auto df = G.C.d0(f);
            for (uint8_t m = 1; m <= G.nc(); ++m)
                r.add_word({m, i}, scale(outer, df[m]));
            for (uint8_t j = 1; j <= G.nc(); ++j)
                for (uint8_t k = 1; k <= G.nc(); ++k) {
                    Poly w = scale(G.C.ctx.f(i, k), G.T.at(i, j, k));
                    for_each_graded_term(G.C.A, w, [&](const Poly& mu, unsigned dmu) {
                        int sign = outer * G.C.ctx.phi(a, dmu ^ j, k) * G.C.ctx.f(a, dmu ^ j);
                        r.add_word({j, k}, scale(sign, mul_raw(f, mu)));
                    });
                }
        });
    }
    return normal_form(G.C.A, r);
}

// Deformed curvature of the coframe from first principles: the exterior
// derivative of the connection output minus the deformed wedge of the
// reassociated double application.
inline FormTensor curvature_f_coframe(const Geometry& G, unsigned i) {
    FormTensor r;
    const auto& ctx = G.C.ctx;
    for (uint8_t j = 1; j <= G.nc(); ++j)
        for (uint8_t k = 1; k <= G.nc(); ++k) {
            Poly w1 = scale(ctx.f(i, k), G.T.at(i, j, k));
            if (w1.is_zero()) continue;
            for_each_graded_term(G.C.A, w1, [&](const Poly& mu1, unsigned d1) {
                auto dmu = G.C.d0(mu1);
                for (uint8_t m = 1; m <= G.nc(); ++m) r.add_wedge(m, j, {k}, dmu[m]);
                for (uint8_t m = 1; m <= G.nc(); ++m)
                    for (uint8_t n = 1; n <= G.nc(); ++n) {
                        r.add_wedge(m, n, {k}, mul_raw(mu1, -G.T.at(j, m, n)));
                        Poly w2 = scale(ctx.f(k, n), G.T.at(k, m, n));
                        for_each_graded_term(G.C.A, w2, [&](const Poly& mu2, unsigned d2) {
                            int sign = -ctx.phi(d1 ^ j, d2 ^ m, n) * ctx.f(d1 ^ j, d2 ^ m);
                            r.add_wedge(j, m, {n}, scale(sign, mul_raw(mu1, mu2)));
                        });
                    }
            });
        }
    return normal_form(G.C.A, r);
}

// Deformed half-lift of a wedge factor into antisymmetric word legs.
inline FormTensor lift_f(const Geometry& G, const FormTensor& t) {
    Scalar half = Scalar::from_rational(Rational(1, 2));
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        auto [m, n] = wedge_labels(key.wedge);
        std::vector<uint8_t> w1 = {static_cast<uint8_t>(m), static_cast<uint8_t>(n)};
        std::vector<uint8_t> w2 = {static_cast<uint8_t>(n), static_cast<uint8_t>(m)};
        w1.insert(w1.end(), key.word.begin(), key.word.end());
        w2.insert(w2.end(), key.word.begin(), key.word.end());
        for_each_graded_term(G.C.A, p, [&](const Poly& mono, unsigned d) {
            r.add_word(w1, scale(half * Scalar(G.C.ctx.finv(d ^ m, n)), mono));
            r.add_word(w2, scale(-half * Scalar(G.C.ctx.finv(d ^ n, m)), mono));
        });
    }
    return r;
}

// nabla_F applied to the deformed metric, as a tensor-product connection:
// the connection output on the first factor is reassociated in, and on the
// second factor it is braided to the far left.
inline FormTensor nabla_f_metric(const Geometry& G) {
    FormTensor r;
    const auto& ctx = G.C.ctx;
    for (uint8_t p = 1; p <= G.nc(); ++p)
        for (uint8_t j = 1; j <= G.nc(); ++j)
            for (uint8_t k = 1; k <= G.nc(); ++k) {
                Poly w = scale(ctx.f(p, k), G.T.at(p, j, k));
                for_each_graded_term(G.C.A, w, [&](const Poly& mu, unsigned d) {
                    int a_sign = -ctx.phi(d ^ j, k, p);
                    r.add_word({j, k, p}, scale(a_sign, mu));
                    int b_sign = -ctx.phi(p, d ^ j, k) * ctx.f(p, d ^ j) * ctx.finv(d ^ j, p);
                    r.add_word({j, p, k}, scale(b_sign, mu));
                });
            }
    return normal_form(G.C.A, r);
}

// Deformed cotorsion of the deformed metric.
inline FormTensor cotorsion_f(const Geometry& G) {
    FormTensor r;
    const auto& ctx = G.C.ctx;
    for (uint8_t p = 1; p <= G.nc(); ++p)
        for (uint8_t j = 1; j <= G.nc(); ++j)
            for (uint8_t k = 1; k <= G.nc(); ++k) {
                Poly w = scale(ctx.f(p, k), G.T.at(p, j, k));
                for_each_graded_term(G.C.A, w, [&](const Poly& mu, unsigned d) {
                    r.add_wedge(j, k, {p}, scale(-ctx.f(d ^ j, k), mu));
                    r.add_wedge(p, j, {k}, scale(ctx.phi(p, d ^ j, k) * ctx.f(p, d ^ j), mu));
                });
            }
    return normal_form(G.C.A, r);
}

// Deformed Ricci contraction: pair the metric legs into the twisted
// curvature, reassociate, half-lift the wedge factor, reassociate again and
// contract with the deformed pairing.
inline FormTensor ricci_f(const Geometry& G) {
    Scalar half = Scalar::from_rational(Rational(1, 2));
    FormTensor r;
    const auto& ctx = G.C.ctx;
    for (unsigned p = 1; p <= G.nc(); ++p) {
        auto R = curvature_coframe(G, p);
        for (auto& [key, rho] : R.terms) {
            auto [m, n] = wedge_labels(key.wedge);
            uint8_t k = key.word[0];
            for_each_graded_term(G.C.A, rho, [&](const Poly& mu, unsigned d) {
                int common = -ctx.finv(d ^ m ^ n, k) * ctx.phi(p, d ^ m ^ n, k);
                if (m == p) {
                    int s1 = common * ctx.finv(d ^ m, n) * ctx.phi(p, d ^ m, n) * ctx.f(p, d ^ m);
                    r.add_word({static_cast<uint8_t>(n), k}, scale(half * Scalar(s1), mu));
                }
                if (n == p) {
                    int s2 = common * ctx.finv(d ^ n, m) * ctx.phi(p, d ^ n, m) * ctx.f(p, d ^ n);
                    r.add_word({static_cast<uint8_t>(m), k}, scale(-half * Scalar(s2), mu));
                }
            });
        }
    }
    return normal_form(G.C.A, r);
}

// Deformed scalar curvature: the deformed metric trace of ricci_f.
inline Poly scalar_curvature_f(const Geometry& G) {
    Poly s;
    for (auto& [key, p] : contract_f_first_two(G, ricci_f(G)).terms) {
        if (key.wedge == 0 && key.word.empty()) s += p;
    }
    return G.C.A.normal_form(s);
}

}  // namespace twistlab
