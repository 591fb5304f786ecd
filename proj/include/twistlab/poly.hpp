#pragma once

// Polynomials in up to eight commuting coordinates with Scalar coefficients.
// Monomial exponents live in a fixed-width array; an algebra type supplies
// the generator count, generator names and the normal-form rewrite.

#include "twistlab/cochain.hpp"
#include "twistlab/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace twistlab {

constexpr std::size_t kMaxGens = 8;

using Mono = std::array<uint8_t, kMaxGens>;

inline Mono mono_one() { return Mono{}; }

inline Mono mono_gen(std::size_t g, uint8_t e = 1) {
    Mono m{};
    m[g] = e;
    return m;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r{};
    for (std::size_t i = 0; i < kMaxGens; ++i) r[i] = static_cast<uint8_t>(a[i] + b[i]);
    return r;
}

inline unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

struct Poly {
    std::map<Mono, Scalar> terms;

    Poly() = default;
    explicit Poly(long c) {
        if (c != 0) terms[mono_one()] = Scalar(c);
    }

    static Poly monomial(const Mono& m, Scalar s = Scalar(1)) {
        Poly p;
        if (!s.is_zero()) p.terms[m] = std::move(s);
        return p;
    }
    static Poly gen(std::size_t g) { return monomial(mono_gen(g)); }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Mono& m, const Scalar& s) {
        if (s.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Poly operator-() const {
        Poly r;
        for (auto& [m, s] : terms) r.terms[m] = -s;
        return r;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, s] : o.terms) r.add_term(m, s);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, s] : o.terms) r.add_term(m, -s);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [m, s] : o.terms) add_term(m, s);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, s] : o.terms) add_term(m, -s);
        return *this;
    }
    bool operator==(const Poly& o) const { return terms == o.terms; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [m, s] : terms) d = std::max(d, mono_degree(m));
        return d;
    }
};

inline Poly mul_raw(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [m1, s1] : a.terms)
        for (auto& [m2, s2] : b.terms) r.add_term(mono_mul(m1, m2), s1 * s2);
    return r;
}

inline Poly scale(const Scalar& s, const Poly& p) {
    Poly r;
    for (auto& [m, c] : p.terms) r.add_term(m, s * c);
    return r;
}

inline Poly scale(long v, const Poly& p) { return scale(Scalar(v), p); }

// Formal partial derivative with respect to generator g, before any rewrite.
inline Poly partial_raw(const Poly& p, std::size_t g) {
    Poly r;
    for (auto& [m, s] : p.terms) {
        if (m[g] == 0) continue;
        Mono mm = m;
        mm[g] -= 1;
        r.add_term(mm, Scalar(m[g]) * s);
    }
    return r;
}

// Coordinate algebra of the unit sphere inside the group algebra of Z2^n:
// generators x_a for every label a in 0..2^n-1, one relation sum_a x_a^2 = 1.
// Normal form keeps the exponent of x_0 at most 1 by rewriting
// x_0^2 -> 1 - sum_{a != 0} x_a^2.
struct SphereAlgebra {
    int n;
    std::size_t ngen;

    explicit SphereAlgebra(int n_) : n(n_), ngen(1u << n_) {}

    std::string gen_name(std::size_t g) const { return "x" + std::to_string(g); }

    // Group degree of a monomial: XOR of the labels with odd exponent.
    unsigned degree(const Mono& m) const {
        unsigned d = 0;
        for (std::size_t g = 0; g < ngen; ++g)
            if (m[g] & 1) d ^= static_cast<unsigned>(g);
        return d;
    }

    bool is_normal(const Mono& m) const { return m[0] <= 1; }

    // 1 - sum_{a != 0} x_a^2
    Poly x0sq_image() const {
        Poly r(1);
        for (std::size_t g = 1; g < ngen; ++g) r.add_term(mono_gen(g, 2), Scalar(-1));
        return r;
    }

    Poly normal_form(Poly p) const {
        Poly image = x0sq_image();
        for (;;) {
            bool found = false;
            Mono bad{};
            Scalar coef;
            for (auto& [m, s] : p.terms)
                if (!is_normal(m)) {
                    bad = m;
                    coef = s;
                    found = true;
                    break;
                }
            if (!found) return p;
            Mono rest = bad;
            rest[0] -= 2;
            p.add_term(bad, -coef);
            p += scale(coef, mul_raw(Poly::monomial(rest), image));
        }
    }

    Poly mul(const Poly& a, const Poly& b) const { return normal_form(mul_raw(a, b)); }

    Poly relation() const {
        Poly r(-1);
        for (std::size_t g = 0; g < ngen; ++g) r.add_term(mono_gen(g, 2), Scalar(1));
        return r;
    }

    bool is_homogeneous(const Poly& p, unsigned* deg_out = nullptr) const {
        bool first = true;
        unsigned d = 0;
        for (auto& [m, s] : p.terms) {
            unsigned dm = degree(m);
            if (first) {
                d = dm;
                first = false;
            } else if (dm != d) {
                return false;
            }
        }
        if (deg_out) *deg_out = d;
        return true;
    }

    // Splits into group-homogeneous components, indexed by degree label.
    std::map<unsigned, Poly> components(const Poly& p) const {
        std::map<unsigned, Poly> r;
        for (auto& [m, s] : p.terms) r[degree(m)].add_term(m, s);
        return r;
    }
};

// Deformed product on the sphere algebra: on homogeneous elements
// p . q = F(|p|, |q|) p q, extended bilinearly.
inline Poly bullet(const SphereAlgebra& A, const TwistContext& ctx, const Poly& p, const Poly& q) {
    Poly r;
    for (auto& [m1, s1] : p.terms)
        for (auto& [m2, s2] : q.terms) {
            int sign = ctx.f(A.degree(m1), A.degree(m2));
            r.add_term(mono_mul(m1, m2), Scalar(sign) * s1 * s2);
        }
    return A.normal_form(r);
}

template <typename Algebra>
std::string mono_string(const Algebra& A, const Mono& m) {
    if (mono_degree(m) == 0) return "1";
    std::string out;
    for (std::size_t g = 0; g < A.ngen; ++g) {
        if (m[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += A.gen_name(g);
        if (m[g] > 1) out += "^" + std::to_string(m[g]);
    }
    return out;
}

template <typename Algebra>
std::string poly_string(const Algebra& A, const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, s] : p.terms) {
        std::string coef = to_string(s);
        bool needs_paren = coef.size() > 1 && (coef.find('+') != std::string::npos ||
                                               coef.find('-', 1) != std::string::npos);
        std::string term = needs_paren ? "(" + coef + ")" : coef;
        std::string ms = mono_string(A, m);
        if (ms != "1") {
            if (term == "1") term = ms;
            else if (term == "-1") term = "-" + ms;
            else term += "*" + ms;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

}  // namespace twistlab
