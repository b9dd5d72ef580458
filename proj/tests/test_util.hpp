#ifndef FOLIUM_TEST_UTIL_HPP
#define FOLIUM_TEST_UTIL_HPP

#include <random>

#include "folium/mpoly.hpp"

namespace folium::testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline Rational random_rational(long max_abs = 9, bool allow_fraction = true) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, allow_fraction ? 4 : 1);
    return Rational(num(rng()), den(rng()));
}

inline MPoly random_poly(int nvars, int max_degree, int terms, long coeff_range = 9) {
    MPoly p(nvars);
    std::uniform_int_distribution<int> d(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        Exps e(nvars, 0);
        int budget = d(rng());
        for (int i = 0; i < nvars && budget > 0; ++i) {
            std::uniform_int_distribution<int> pick(0, budget);
            e[i] = pick(rng());
            budget -= e[i];
        }
        p += MPoly::monomial(e, random_rational(coeff_range));
    }
    return p;
}

inline MPoly random_nonzero_poly(int nvars, int max_degree, int terms) {
    for (;;) {
        MPoly p = random_poly(nvars, max_degree, terms);
        if (!p.is_zero()) return p;
    }
}

}  // namespace folium::testutil

#endif
