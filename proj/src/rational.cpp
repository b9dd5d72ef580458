#include "folium/rational.hpp"

#include <stdexcept>

namespace folium {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const std::string& s) {
    v_ = mpq_class(s);
    if (v_.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::invalid_argument("rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::optional<std::vector<std::pair<Integer, int>>> factor_integer(Integer n, long trial_bound) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, int>> out;
    if (n <= 1) return out;
    auto strip = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Integer p = 5; p <= trial_bound && p * p <= n; p += 6) {
        strip(p);
        Integer q = p + 2;
        strip(q);
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            out.emplace_back(n, 1);
        } else if (mpz_perfect_square_p(n.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            if (mpz_probab_prime_p(r.get_mpz_t(), 30) > 0) {
                out.emplace_back(r, 2);
            } else {
                return std::nullopt;
            }
        } else {
            return std::nullopt;
        }
    }
    return out;
}

std::optional<std::vector<Integer>> divisors(const Integer& n, std::size_t max_count) {
    auto fac = factor_integer(n);
    if (!fac) return std::nullopt;
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : fac.value()) {
        std::size_t base = divs.size();
        if (base * (e + 1) > max_count) return std::nullopt;
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::optional<std::pair<Integer, Integer>> squarefree_decompose(const Integer& n) {
    if (n < 0) throw std::invalid_argument("squarefree_decompose: negative input");
    if (n == 0) return std::make_pair(Integer(0), Integer(0));
    auto fac = factor_integer(n);
    if (!fac) return std::nullopt;
    Integer s = 1, f = 1;
    for (const auto& [p, e] : fac.value()) {
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) f *= p;
    }
    return std::make_pair(s, f);
}

}  // namespace folium
