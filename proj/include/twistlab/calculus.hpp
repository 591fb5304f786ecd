#pragma once

// First-order differential calculus on the sphere coordinate algebras.
// The parallelizing coframe is omega^i = sum_a F(a,i) x_a dx_{a+i} for
// nonzero labels i; omega^0 vanishes identically. One-forms are stored
// either as dx-coefficient arrays or as coframe-coefficient arrays; higher
// tensors use a wedge bitmask (at most two labels) followed by a word of
// unwedged coframe labels.

#include "twistlab/cochain.hpp"
#include "twistlab/poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace twistlab {

// Coefficients of a 1-form in the dx basis, indexed by generator label.
using DxForm = std::array<Poly, kMaxGens>;

// Coefficients of a 1-form in the coframe basis, indexed by coframe label;
// index 0 is unused.
using CoForm = std::array<Poly, kMaxGens>;

struct TensorKey {
    uint8_t wedge = 0;           // bitmask of wedged labels, zero or two bits
    std::vector<uint8_t> word;   // unwedged coframe labels, leftmost first

    bool operator<(const TensorKey& o) const {
        if (wedge != o.wedge) return wedge < o.wedge;
        return word < o.word;
    }
    bool operator==(const TensorKey& o) const = default;
};

struct FormTensor {
    std::map<TensorKey, Poly> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const FormTensor& o) const { return terms == o.terms; }

    void add(const TensorKey& k, const Poly& p) {
        if (p.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    // Adds p * (omega^j ^ omega^k) (x) word, normalizing the wedge order.
    void add_wedge(unsigned j, unsigned k, const std::vector<uint8_t>& word, const Poly& p) {
        if (j == k) return;
        Poly q = p;
        unsigned lo = j, hi = k;
        if (lo > hi) {
            std::swap(lo, hi);
            q = -q;
        }
        add(TensorKey{static_cast<uint8_t>((1u << lo) | (1u << hi)), word}, q);
    }

    void add_word(const std::vector<uint8_t>& word, const Poly& p) { add(TensorKey{0, word}, p); }

    FormTensor operator+(const FormTensor& o) const {
        FormTensor r = *this;
        for (auto& [k, p] : o.terms) r.add(k, p);
        return r;
    }
    FormTensor operator-(const FormTensor& o) const {
        FormTensor r = *this;
        for (auto& [k, p] : o.terms) r.add(k, -p);
        return r;
    }
};

inline FormTensor scale(const Scalar& s, const FormTensor& t) {
    FormTensor r;
    for (auto& [k, p] : t.terms) r.add(k, scale(s, p));
    return r;
}

inline FormTensor scale(long v, const FormTensor& t) { return scale(Scalar(v), t); }

// Applies the algebra's normal form to every coefficient.
inline FormTensor normal_form(const SphereAlgebra& A, const FormTensor& t) {
    FormTensor r;
    for (auto& [k, p] : t.terms) r.add(k, A.normal_form(p));
    return r;
}

// The calculus context: algebra, twist data and the coframe in dx
// coordinates.
struct Calculus {
    SphereAlgebra A;
    TwistContext ctx;

    explicit Calculus(int n) : A(n), ctx(n) {}

    unsigned nc() const { return ctx.coframe_count(); }

    // omega^i = sum_a F(a,i) x_a dx_{a+i}
    DxForm coframe_dx(unsigned i) const {
        DxForm w{};
        for (unsigned a = 0; a < A.ngen; ++a)
            w[a ^ i] += scale(ctx.f(a, i), Poly::gen(a));
        return w;
    }

    // dx_b = -sum_i F(b,i) x_{b+i} omega^i
    CoForm dx_coframe(unsigned b) const {
        CoForm r{};
        for (unsigned i = 1; i <= nc(); ++i)
            r[i] = scale(-ctx.f(b, i), Poly::gen(b ^ i));
        return r;
    }

    // partial_i = -sum_a F(a,i) x_{a+i} d/dx_a, followed by normal form
    Poly partial(unsigned i, const Poly& f) const {
        Poly r;
        for (unsigned a = 0; a < A.ngen; ++a)
            r -= scale(ctx.f(a, i), mul_raw(Poly::gen(a ^ i), partial_raw(f, a)));
        return A.normal_form(r);
    }

    // df in the coframe basis
    CoForm d0(const Poly& f) const {
        CoForm r{};
        for (unsigned i = 1; i <= nc(); ++i) r[i] = partial(i, f);
        return r;
    }

    CoForm dx_form_to_coframe(const DxForm& v) const {
        CoForm r{};
        for (unsigned b = 0; b < A.ngen; ++b) {
            if (v[b].is_zero()) continue;
            auto base = dx_coframe(b);
            for (unsigned i = 1; i <= nc(); ++i)
                r[i] += mul_raw(v[b], base[i]);
        }
        for (unsigned i = 1; i <= nc(); ++i) r[i] = A.normal_form(r[i]);
        return r;
    }

    DxForm coframe_form_to_dx(const CoForm& v) const {
        DxForm r{};
        for (unsigned i = 1; i <= nc(); ++i) {
            if (v[i].is_zero()) continue;
            auto base = coframe_dx(i);
            for (unsigned b = 0; b < A.ngen; ++b)
                r[b] += mul_raw(v[i], base[b]);
        }
        for (unsigned b = 0; b < A.ngen; ++b) r[b] = A.normal_form(r[b]);
        return r;
    }
};

// Coframe structure functions: d omega^i = - sum_{j,k} c^i_{jk} omega^j omega^k.
struct StructureTable {
    int n = 0;
    unsigned nc = 0;
    std::vector<Poly> entries;  // index ((i-1)*nc + (j-1))*nc + (k-1)

    const Poly& at(unsigned i, unsigned j, unsigned k) const {
        return entries[((i - 1) * nc + (j - 1)) * nc + (k - 1)];
    }
    Poly& at(unsigned i, unsigned j, unsigned k) {
        return entries[((i - 1) * nc + (j - 1)) * nc + (k - 1)];
    }
};

// c^i_{jk} = -F(i,j) F(i+j,k) sum_a phi(a,i,j) phi(a,i+j,k) F(a,i+j+k)
//            x_a x_{a+i+j+k}
inline StructureTable structure_table(const Calculus& C) {
    StructureTable T;
    T.n = C.A.n;
    T.nc = C.nc();
    T.entries.assign(T.nc * T.nc * T.nc, Poly());
    for (unsigned i = 1; i <= T.nc; ++i)
        for (unsigned j = 1; j <= T.nc; ++j)
            for (unsigned k = 1; k <= T.nc; ++k) {
                unsigned s = i ^ j ^ k;
                Poly sum;
                for (unsigned a = 0; a < C.A.ngen; ++a) {
                    int sign = C.ctx.phi(a, i, j) * C.ctx.phi(a, i ^ j, k) * C.ctx.f(a, s);
                    sum += scale(sign, mul_raw(Poly::gen(a), Poly::gen(a ^ s)));
                }
                int pre = -C.ctx.f(i, j) * C.ctx.f(i ^ j, k);
                T.at(i, j, k) = C.A.normal_form(scale(pre, sum));
            }
    return T;
}

// d omega^i as a wedge tensor, from the structure table.
inline FormTensor d_coframe(const Calculus& C, const StructureTable& T, unsigned i) {
    FormTensor r;
    for (unsigned j = 1; j <= T.nc; ++j)
        for (unsigned k = 1; k <= T.nc; ++k)
            r.add_wedge(j, k, {}, -T.at(i, j, k));
    return normal_form(C.A, r);
}

// d omega^i computed from the dx picture: sum_a F(a,i) dx_a dx_{a+i},
// with both differentials converted to the coframe basis.
inline FormTensor d_coframe_from_dx(const Calculus& C, unsigned i) {
    FormTensor r;
    for (unsigned a = 0; a < C.A.ngen; ++a) {
        auto left = C.dx_coframe(a);
        auto right = C.dx_coframe(a ^ i);
        for (unsigned j = 1; j <= C.nc(); ++j)
            for (unsigned k = 1; k <= C.nc(); ++k) {
                if (left[j].is_zero() || right[k].is_zero()) continue;
                r.add_wedge(j, k, {}, scale(C.ctx.f(a, i), mul_raw(left[j], right[k])));
            }
    }
    return normal_form(C.A, r);
}

// Exterior derivative of a coframe-coefficient 1-form, as a wedge tensor.
inline FormTensor d_one_form(const Calculus& C, const StructureTable& T, const CoForm& v) {
    FormTensor r;
    for (unsigned i = 1; i <= C.nc(); ++i) {
        if (v[i].is_zero()) continue;
        auto df = C.d0(v[i]);
        for (unsigned m = 1; m <= C.nc(); ++m) r.add_wedge(m, i, {}, df[m]);
        for (unsigned j = 1; j <= C.nc(); ++j)
            for (unsigned k = 1; k <= C.nc(); ++k)
                r.add_wedge(j, k, {}, -mul_raw(v[i], T.at(i, j, k)));
    }
    return normal_form(C.A, r);
}

}  // namespace twistlab
