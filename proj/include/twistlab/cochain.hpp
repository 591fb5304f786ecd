#pragma once

// Sign-valued 2-cochains on the elementary abelian groups Z2^n (n = 1, 2, 3).
// A group element is a bit label in 0..2^n-1; writing a = (a1,...,an), a1 is
// the most significant bit and an the least significant. Addition is XOR.
// All cochain values are +1 or -1, so a cochain equals its own convolution
// inverse pointwise.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twistlab {

inline int bit(unsigned a, int n, int i) {
    // Component a_i for i in 1..n.
    return (a >> (n - i)) & 1u;
}

// 2-cochain with values in {+1,-1}, stored densely.
struct Cochain2 {
    int n = 0;
    std::vector<int8_t> v;  // size 2^n * 2^n, row-major in (a, b)

    unsigned order() const { return 1u << n; }
    int at(unsigned a, unsigned b) const { return v[a * order() + b]; }
    int inv_at(unsigned a, unsigned b) const { return at(a, b); }
};

// Exponent of (-1) defining the deformation cochain on Z2^n.
// The bilinear part is sum_{i<=j} a_i b_j; for n = 3 a cubic part
// a1 a2 b3 + a1 b2 a3 + b1 a2 a3 is added.
inline int sign_cochain_exponent(int n, unsigned a, unsigned b) {
    int e = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) e += bit(a, n, i) * bit(b, n, j);
    if (n == 3) {
        e += bit(a, 3, 1) * bit(a, 3, 2) * bit(b, 3, 3);
        e += bit(a, 3, 1) * bit(b, 3, 2) * bit(a, 3, 3);
        e += bit(b, 3, 1) * bit(a, 3, 2) * bit(a, 3, 3);
    }
    return e & 1;
}

inline Cochain2 sign_cochain(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("sign_cochain: n must be 1, 2 or 3");
    Cochain2 F;
    F.n = n;
    unsigned m = 1u << n;
    F.v.resize(m * m);
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < m; ++b)
            F.v[a * m + b] = sign_cochain_exponent(n, a, b) ? -1 : 1;
    return F;
}

inline bool is_counital(const Cochain2& F) {
    for (unsigned a = 0; a < F.order(); ++a)
        if (F.at(a, 0) != 1 || F.at(0, a) != 1) return false;
    return true;
}

// Coboundary of F evaluated on (a,b,c): dF = F(b,c) F(a,b+c) / (F(a+b,c) F(a,b)).
inline int coboundary(const Cochain2& F, unsigned a, unsigned b, unsigned c) {
    return F.at(b, c) * F.at(a, b ^ c) * F.inv_at(a ^ b, c) * F.inv_at(a, b);
}

// Inverse coboundary: dFinv = F(a,b) F(a+b,c) / (F(a,b+c) F(b,c)).
inline int coboundary_inv(const Cochain2& F, unsigned a, unsigned b, unsigned c) {
    return F.at(a, b) * F.at(a ^ b, c) * F.inv_at(a, b ^ c) * F.inv_at(b, c);
}

inline bool is_cocycle(const Cochain2& F) {
    unsigned m = F.order();
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < m; ++b)
            for (unsigned c = 0; c < m; ++c)
                if (coboundary(F, a, b, c) != 1) return false;
    return true;
}

// Braiding sign: R(a,b) = F(b,a) / F(a,b).
inline int braiding(const Cochain2& F, unsigned a, unsigned b) {
    return F.at(b, a) * F.inv_at(a, b);
}

// The twist data for one group: the cochain plus derived evaluations.
struct TwistContext {
    int n;
    Cochain2 F;

    explicit TwistContext(int n_) : n(n_), F(sign_cochain(n_)) {}

    unsigned order() const { return 1u << n; }
    // Coframe labels are the nonzero group elements 1..2^n-1.
    unsigned coframe_count() const { return order() - 1; }

    int f(unsigned a, unsigned b) const { return F.at(a, b); }
    int finv(unsigned a, unsigned b) const { return F.inv_at(a, b); }
    int phi(unsigned a, unsigned b, unsigned c) const { return coboundary(F, a, b, c); }
    int phi_inv(unsigned a, unsigned b, unsigned c) const { return coboundary_inv(F, a, b, c); }
    int braid(unsigned a, unsigned b) const { return braiding(F, a, b); }
};

}  // namespace twistlab
