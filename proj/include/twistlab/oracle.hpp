#pragma once

// Second opinion on the deformed product of the sphere algebras. A monomial
// is expanded as a left-nested product of generator words and the right word
// is moved across one letter at a time, paying the exact rebracketing sign
// each step. The resulting sign must match the one-shot cochain sign used by
// the deformed product.

#include <algorithm>
#include <vector>

#include "twistlab/poly.hpp"

namespace twistlab {

// All exponent arrays over the first `ngen` generators with total degree <= d.
inline std::vector<Mono> monomials_up_to(std::size_t ngen, unsigned d) {
    std::vector<Mono> out{mono_one()};
    for (unsigned step = 0; step < d; ++step) {
        std::vector<Mono> next;
        for (auto& m : out)
            for (std::size_t g = 0; g < ngen; ++g) {
                Mono mm = m;
                mm[g] += 1;
                next.push_back(mm);
            }
        out.insert(out.end(), next.begin(), next.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<unsigned> mono_word(const SphereAlgebra& A, const Mono& m) {
    std::vector<unsigned> w;
    for (unsigned g = 0; g < A.ngen; ++g)
        for (int k = 0; k < m[g]; ++k) w.push_back(g);
    return w;
}

// Sign of the left-nested deformed product of a generator word.
inline int left_nested_sign(const TwistContext& ctx, const std::vector<unsigned>& word) {
    int s = 1;
    unsigned d = 0;
    bool first = true;
    for (unsigned g : word) {
        if (first) {
            d = g;
            first = false;
        } else {
            s *= ctx.f(d, g);
            d ^= g;
        }
    }
    return s;
}

inline int stepwise_product_sign(const TwistContext& ctx, const SphereAlgebra& A,
                                 const Mono& mN, const Mono& mM) {
    auto wN = mono_word(A, mN);
    auto wM = mono_word(A, mM);
    int s = left_nested_sign(ctx, wN) * left_nested_sign(ctx, wM);
    unsigned dN = A.degree(mN);
    for (std::size_t t = wM.size(); t >= 2; --t) {
        unsigned dPrefix = 0;
        for (std::size_t k = 0; k + 1 < t; ++k) dPrefix ^= wM[k];
        s *= ctx.phi(dN, dPrefix, wM[t - 1]);
    }
    auto cat = wN;
    cat.insert(cat.end(), wM.begin(), wM.end());
    s *= left_nested_sign(ctx, cat);
    return s;
}

}  // namespace twistlab
