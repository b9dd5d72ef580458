#include "folium/algext.hpp"

#include <stdexcept>

namespace folium {

MPoly mod_reduce(const MPoly& a, const MPoly& q) {
    return divide(a, q).second;
}

MPoly mod_mul(const MPoly& a, const MPoly& b, const MPoly& q) {
    return mod_reduce(a * b, q);
}

MPoly mod_inv(const MPoly& a, const MPoly& q) {
    // extended euclid in Q[t]
    MPoly r0 = q, r1 = mod_reduce(a, q);
    if (r1.is_zero()) throw SplitModulus{q};
    MPoly s0 = MPoly::constant(1, Rational(0)), s1 = MPoly::constant(1, Rational(1));
    while (!r1.is_constant() || r1.is_zero()) {
        if (r1.is_zero()) break;
        auto [quo, rem] = divide(r0, r1);
        MPoly s2 = s0 - quo * s1;
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r1.is_zero()) {
        // gcd is r0, a proper factor of q
        throw SplitModulus{r0.monic()};
    }
    // r1 is a nonzero constant: s1 / r1 is the inverse
    MPoly inv = s1;
    inv /= r1.constant_term();
    return mod_reduce(inv, q);
}

ExtPoly ext_from_bivariate(const MPoly& f, const MPoly& q) {
    auto cs = coeffs_in(f, 1);  // coefficients in y, arity 2, involve only x
    ExtPoly out;
    out.reserve(cs.size());
    for (const auto& c : cs) {
        MPoly one_var(1);
        for (const auto& [e, co] : c.terms()) one_var += MPoly::monomial(Exps{e[0]}, co);
        out.push_back(mod_reduce(one_var, q));
    }
    return ext_trim(std::move(out));
}

bool ext_is_zero(const ExtPoly& a) { return a.empty(); }

int ext_degree(const ExtPoly& a) { return static_cast<int>(a.size()) - 1; }

ExtPoly ext_trim(ExtPoly a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

ExtPoly ext_monic(const ExtPoly& a, const MPoly& q) {
    if (a.empty()) return a;
    MPoly inv = mod_inv(a.back(), q);
    ExtPoly out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(mod_mul(c, inv, q));
    return out;
}

ExtPoly ext_gcd(ExtPoly a, ExtPoly b, const MPoly& q) {
    a = ext_trim(std::move(a));
    b = ext_trim(std::move(b));
    while (!b.empty()) {
        // a mod b with b made monic
        ExtPoly bm = ext_monic(b, q);
        ExtPoly r = a;
        while (static_cast<int>(r.size()) >= static_cast<int>(bm.size()) && !r.empty()) {
            MPoly lead = r.back();
            int shift = static_cast<int>(r.size()) - static_cast<int>(bm.size());
            for (std::size_t i = 0; i < bm.size(); ++i) {
                r[shift + i] = mod_reduce(r[shift + i] - lead * bm[i], q);
            }
            r = ext_trim(std::move(r));
        }
        a = std::move(bm);
        b = std::move(r);
    }
    return a.empty() ? a : ext_monic(a, q);
}

MPoly eval_mod_cluster(const MPoly& f, const MPoly& x_param, const MPoly& y_param,
                       const MPoly& q) {
    std::vector<MPoly> images{x_param, y_param};
    return mod_reduce(f.compose(images), q);
}

}  // namespace folium
