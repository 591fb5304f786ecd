#pragma once

// Exact coefficient arithmetic: Gaussian rationals with formal commuting
// parameters. Parameter id 0 is the radius-square parameter "r2"; id k >= 1
// is the series coefficient "c<k>". A Scalar is a finite sum of parameter
// monomials with Gaussian-rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace twistlab {

using Rational = boost::multiprecision::cpp_rational;

struct Gauss {
    Rational re;
    Rational im;

    Gauss() = default;
    Gauss(Rational r) : re(std::move(r)) {}
    Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gauss(long v) : re(v) {}

    static Gauss unit_im() { return Gauss(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss operator+(const Gauss& o) const { return Gauss(re + o.re, im + o.im); }
    Gauss operator-(const Gauss& o) const { return Gauss(re - o.re, im - o.im); }
    Gauss operator*(const Gauss& o) const {
        return Gauss(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Gauss conj() const { return Gauss(re, -im); }
    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
};

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Renders "0", "3/2", "i", "-2i", "1+i", "1-2/3i".
inline std::string to_string(const Gauss& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.re != 0) out += to_string(g.re);
    if (g.im != 0) {
        if (g.im == 1) out += out.empty() ? "i" : "+i";
        else if (g.im == -1) out += "-i";
        else {
            std::string im = to_string(g.im);
            if (!out.empty() && im[0] != '-') out += "+";
            out += im + "i";
        }
    }
    return out;
}

// Exponent vector indexed by parameter id, trailing zeros stripped.
using ParamExps = std::vector<uint8_t>;

inline std::string param_name(std::size_t id) {
    return id == 0 ? std::string("r2") : "c" + std::to_string(id);
}

struct Scalar {
    std::map<ParamExps, Gauss> terms;

    Scalar() = default;
    Scalar(long v) {
        if (v != 0) terms[{}] = Gauss(v);
    }
    explicit Scalar(const Gauss& g) {
        if (!g.is_zero()) terms[ParamExps{}] = g;
    }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar from_gauss(const Gauss& g) {
        Scalar s;
        if (!g.is_zero()) s.terms[{}] = g;
        return s;
    }
    static Scalar from_rational(const Rational& r) { return from_gauss(Gauss(r)); }
    // The parameter with the given id, as a Scalar.
    static Scalar param(std::size_t id, unsigned exp = 1) {
        Scalar s;
        if (exp == 0) return one();
        ParamExps e(id + 1, 0);
        e[id] = static_cast<uint8_t>(exp);
        s.terms[std::move(e)] = Gauss(1);
        return s;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(ParamExps e, const Gauss& g) {
        if (g.is_zero()) return;
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), g);
        } else {
            it->second = it->second + g;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Scalar operator-() const {
        Scalar r;
        for (auto& [e, g] : terms) r.terms[e] = -g;
        return r;
    }
    Scalar operator+(const Scalar& o) const {
        Scalar r = *this;
        for (auto& [e, g] : o.terms) r.add_term(e, g);
        return r;
    }
    Scalar operator-(const Scalar& o) const {
        Scalar r = *this;
        for (auto& [e, g] : o.terms) r.add_term(e, -g);
        return r;
    }
    Scalar operator*(const Scalar& o) const {
        Scalar r;
        for (auto& [e1, g1] : terms) {
            for (auto& [e2, g2] : o.terms) {
                ParamExps e(std::max(e1.size(), e2.size()), 0);
                for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
                for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
                r.add_term(std::move(e), g1 * g2);
            }
        }
        return r;
    }
    Scalar& operator+=(const Scalar& o) {
        for (auto& [e, g] : o.terms) add_term(e, g);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (auto& [e, g] : o.terms) add_term(e, -g);
        return *this;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return terms == o.terms; }

    Scalar conj() const {
        Scalar r;
        for (auto& [e, g] : terms) r.terms[e] = g.conj();
        return r;
    }

    // Replaces parameter `id` by `value` everywhere.
    Scalar substitute(std::size_t id, const Scalar& value) const {
        Scalar r;
        for (auto& [e, g] : terms) {
            unsigned exp = id < e.size() ? e[id] : 0;
            ParamExps rest = e;
            if (id < rest.size()) rest[id] = 0;
            Scalar term;
            term.add_term(std::move(rest), g);
            for (unsigned k = 0; k < exp; ++k) term = term * value;
            r += term;
        }
        return r;
    }

    // Parameter ids with nonzero exponent in some term, in increasing order.
    std::vector<std::size_t> parameters() const {
        std::set<std::size_t> ids;
        for (auto& [e, g] : terms)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) ids.insert(i);
        return {ids.begin(), ids.end()};
    }
};

inline Scalar operator*(long v, const Scalar& s) { return Scalar(v) * s; }

inline std::string to_string(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (auto& [e, g] : s.terms) {
        std::string coef = to_string(g);
        bool wrap = coef.find('+') != std::string::npos ||
                    coef.find('-', 1) != std::string::npos;
        std::string term = wrap ? "(" + coef + ")" : coef;
        std::string params;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!params.empty()) params += "*";
            params += param_name(i);
            if (e[i] > 1) params += "^" + std::to_string(e[i]);
        }
        if (!params.empty()) {
            if (term == "1") term = params;
            else if (term == "-1") term = "-" + params;
            else term += "*" + params;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

}  // namespace twistlab
