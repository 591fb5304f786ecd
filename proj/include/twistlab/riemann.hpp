#pragma once

// Riemannian data for the sphere calculi: the coframe metric, the canonical
// connection nabla omega^i = -c^i_{jk} omega^j (x) omega^k, its torsion,
// cotorsion, curvature, Ricci contraction and scalar curvature. All tensors
// are stored with polynomial coefficients pulled to the far left.

#include "twistlab/calculus.hpp"

#include <utility>
#include <vector>

namespace twistlab {

struct Geometry {
    Calculus C;
    StructureTable T;

    explicit Geometry(int n) : C(n), T(structure_table(C)) {}

    unsigned nc() const { return C.nc(); }
};

// g = sum_i omega^i (x) omega^i
inline FormTensor metric(const Geometry& G) {
    FormTensor g;
    for (uint8_t i = 1; i <= G.nc(); ++i) g.add_word({i, i}, Poly(1));
    return g;
}

// nabla omega^i = -sum_{j,k} c^i_{jk} omega^j (x) omega^k
inline FormTensor nabla_coframe(const Geometry& G, unsigned i) {
    FormTensor r;
    for (uint8_t j = 1; j <= G.nc(); ++j)
        for (uint8_t k = 1; k <= G.nc(); ++k) r.add_word({j, k}, -G.T.at(i, j, k));
    return r;
}

// nabla(sum_i f_i omega^i) = sum_i (d f_i) (x) omega^i + f_i nabla omega^i
inline FormTensor nabla_one_form(const Geometry& G, const CoForm& v) {
    FormTensor r;
    for (uint8_t i = 1; i <= G.nc(); ++i) {
        if (v[i].is_zero()) continue;
        auto df = G.C.d0(v[i]);
        for (uint8_t m = 1; m <= G.nc(); ++m) r.add_word({m, i}, df[m]);
        for (uint8_t j = 1; j <= G.nc(); ++j)
            for (uint8_t k = 1; k <= G.nc(); ++k)
                r.add_word({j, k}, mul_raw(v[i], -G.T.at(i, j, k)));
    }
    return normal_form(G.C.A, r);
}

// Wedges the first two word legs: f (x) (a, b, rest) -> f (a ^ b) (x) rest.
inline FormTensor wedge_first_two(const Geometry& G, const FormTensor& t) {
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        std::vector<uint8_t> rest(key.word.begin() + 2, key.word.end());
        r.add_wedge(key.word[0], key.word[1], rest, p);
    }
    return normal_form(G.C.A, r);
}

// Torsion on the coframe: d omega^i - wedge(nabla omega^i).
inline FormTensor torsion_coframe(const Geometry& G, unsigned i) {
    return d_coframe(G.C, G.T, i) - wedge_first_two(G, nabla_coframe(G, i));
}

// nabla g, with the connection output of the second factor moved to the
// far left through the flip of the first two legs.
inline FormTensor nabla_metric(const Geometry& G) {
    FormTensor r;
    for (uint8_t i = 1; i <= G.nc(); ++i)
        for (uint8_t j = 1; j <= G.nc(); ++j)
            for (uint8_t k = 1; k <= G.nc(); ++k) {
                const Poly& c = G.T.at(i, j, k);
                r.add_word({j, k, i}, -c);
                r.add_word({j, i, k}, -c);
            }
    return normal_form(G.C.A, r);
}

// Cotorsion: (wedge nabla (x) id) g - (wedge (x) id)(id (x) nabla) g.
inline FormTensor cotorsion(const Geometry& G) {
    FormTensor r;
    for (uint8_t i = 1; i <= G.nc(); ++i)
        for (uint8_t j = 1; j <= G.nc(); ++j)
            for (uint8_t k = 1; k <= G.nc(); ++k) {
                const Poly& c = G.T.at(i, j, k);
                r.add_wedge(j, k, {i}, -c);
                r.add_wedge(i, j, {k}, c);
            }
    return normal_form(G.C.A, r);
}

// Curvature of the coframe from first principles:
// R(omega^i) = (d (x) id) nabla omega^i - (id wedge nabla) nabla omega^i.
inline FormTensor curvature_coframe(const Geometry& G, unsigned i) {
    FormTensor r;
    for (uint8_t j = 1; j <= G.nc(); ++j)
        for (uint8_t k = 1; k <= G.nc(); ++k) {
            Poly f = -G.T.at(i, j, k);
            if (f.is_zero()) continue;
            auto df = G.C.d0(f);
            for (uint8_t m = 1; m <= G.nc(); ++m) r.add_wedge(m, j, {k}, df[m]);
            for (uint8_t m = 1; m <= G.nc(); ++m)
                for (uint8_t n = 1; n <= G.nc(); ++n) {
                    r.add_wedge(m, n, {k}, mul_raw(f, -G.T.at(j, m, n)));
                    r.add_wedge(j, m, {n}, mul_raw(f, G.T.at(k, m, n)));
                }
        }
    return normal_form(G.C.A, r);
}

// The same curvature written directly in structure-function terms.
inline FormTensor curvature_closed_form(const Geometry& G, unsigned i) {
    FormTensor r;
    for (uint8_t m = 1; m <= G.nc(); ++m)
        for (uint8_t n = 1; n <= G.nc(); ++n)
            for (uint8_t k = 1; k <= G.nc(); ++k) {
                Poly q = G.C.partial(m, G.T.at(i, n, k));
                for (uint8_t j = 1; j <= G.nc(); ++j) {
                    q += mul_raw(G.T.at(i, m, j), G.T.at(j, n, k));
                    q -= mul_raw(G.T.at(i, j, k), G.T.at(j, m, n));
                }
                r.add_wedge(m, n, {k}, -q);
            }
    return normal_form(G.C.A, r);
}

// Splits a wedge bitmask into its two labels, low then high.
inline std::pair<unsigned, unsigned> wedge_labels(uint8_t mask) {
    unsigned lo = 0, hi = 0;
    for (unsigned b = 1; b < 8; ++b)
        if (mask & (1u << b)) {
            if (!lo) lo = b;
            else hi = b;
        }
    return {lo, hi};
}

// Half-splits the wedge factor into antisymmetric word legs:
// f (m ^ n) (x) rest -> f/2 [(m, n, rest) - (n, m, rest)].
inline FormTensor lift(const Geometry& G, const FormTensor& t) {
    Scalar half = Scalar::from_rational(Rational(1, 2));
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        auto [m, n] = wedge_labels(key.wedge);
        std::vector<uint8_t> w1 = {static_cast<uint8_t>(m), static_cast<uint8_t>(n)};
        std::vector<uint8_t> w2 = {static_cast<uint8_t>(n), static_cast<uint8_t>(m)};
        w1.insert(w1.end(), key.word.begin(), key.word.end());
        w2.insert(w2.end(), key.word.begin(), key.word.end());
        r.add_word(w1, scale(half, p));
        r.add_word(w2, scale(-half, p));
    }
    return r;
}

// Pairs the first two word legs with the coframe inner product
// <omega^a, omega^b> = delta_ab.
inline FormTensor contract_first_two(const Geometry& G, const FormTensor& t) {
    FormTensor r;
    for (auto& [key, p] : t.terms) {
        if (key.word[0] != key.word[1]) continue;
        std::vector<uint8_t> rest(key.word.begin() + 2, key.word.end());
        r.add(TensorKey{key.wedge, rest}, p);
    }
    return normal_form(G.C.A, r);
}

// Ricci contraction: apply id (x) R to g, lift the middle wedge factor and
// pair the outer leg with the first lifted leg.
inline FormTensor ricci(const Geometry& G) {
    Scalar half = Scalar::from_rational(Rational(1, 2));
    FormTensor r;
    for (unsigned p = 1; p <= G.nc(); ++p) {
        auto R = curvature_coframe(G, p);
        for (auto& [key, rho] : R.terms) {
            auto [m, n] = wedge_labels(key.wedge);
            uint8_t k = key.word[0];
            if (m == p) r.add_word({static_cast<uint8_t>(n), k}, scale(half, rho));
            if (n == p) r.add_word({static_cast<uint8_t>(m), k}, scale(-half, rho));
        }
    }
    return normal_form(G.C.A, r);
}

// Scalar curvature: the metric trace of the Ricci tensor.
inline Poly scalar_curvature(const Geometry& G) {
    Poly s;
    for (auto& [key, p] : contract_first_two(G, ricci(G)).terms) {
        if (key.wedge == 0 && key.word.empty()) s += p;
    }
    return G.C.A.normal_form(s);
}

}  // namespace twistlab
