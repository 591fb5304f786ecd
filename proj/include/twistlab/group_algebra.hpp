#pragma once

// The twisted group algebra kF[Z2^n]: basis e_a for labels a in 0..2^n-1,
// product e_a e_b = F(a,b) e_{a XOR b}. For n = 1, 2, 3 this realizes the
// complex numbers, quaternions and octonions over the rationals.

#include "twistlab/cochain.hpp"
#include "twistlab/scalar.hpp"

#include <map>
#include <string>

namespace twistlab {

struct GroupAlgElem {
    std::map<unsigned, Scalar> comp;

    void add(unsigned label, const Scalar& s) {
        if (s.is_zero()) return;
        auto it = comp.find(label);
        if (it == comp.end()) {
            comp.emplace(label, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) comp.erase(it);
        }
    }
    bool is_zero() const { return comp.empty(); }
    bool operator==(const GroupAlgElem& o) const { return comp == o.comp; }
};

inline GroupAlgElem basis_elem(unsigned label, const Scalar& s = Scalar(1)) {
    GroupAlgElem e;
    e.add(label, s);
    return e;
}

inline GroupAlgElem operator+(const GroupAlgElem& u, const GroupAlgElem& v) {
    GroupAlgElem r = u;
    for (auto& [l, s] : v.comp) r.add(l, s);
    return r;
}

inline GroupAlgElem operator-(const GroupAlgElem& u, const GroupAlgElem& v) {
    GroupAlgElem r = u;
    for (auto& [l, s] : v.comp) r.add(l, -s);
    return r;
}

inline GroupAlgElem mul(const TwistContext& ctx, const GroupAlgElem& u, const GroupAlgElem& v) {
    GroupAlgElem r;
    for (auto& [a, s] : u.comp)
        for (auto& [b, t] : v.comp) r.add(a ^ b, Scalar(ctx.f(a, b)) * s * t);
    return r;
}

// Squared Euclidean norm in the e_a basis. The product above is a
// composition for it: norm(uv) = norm(u) norm(v).
inline Scalar norm_sq(const GroupAlgElem& u) {
    Scalar r;
    for (auto& [l, s] : u.comp) r += s * s;
    return r;
}

inline std::string basis_name(unsigned label) { return "e" + std::to_string(label); }

// Signed multiplication table as a text grid.
inline std::string mult_table_text(const TwistContext& ctx) {
    unsigned m = ctx.order();
    std::size_t w = basis_name(m - 1).size() + 1;
    auto pad = [&](std::string s) {
        while (s.size() < w + 1) s = " " + s;
        return s;
    };
    std::string out = pad("");
    for (unsigned b = 0; b < m; ++b) out += pad(basis_name(b));
    out += "\n";
    for (unsigned a = 0; a < m; ++a) {
        out += pad(basis_name(a));
        for (unsigned b = 0; b < m; ++b) {
            std::string cell = (ctx.f(a, b) < 0 ? "-" : "+") + basis_name(a ^ b);
            out += pad(cell);
        }
        out += "\n";
    }
    return out;
}

}  // namespace twistlab
