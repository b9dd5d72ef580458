#ifndef FOLIUM_RATIONAL_HPP
#define FOLIUM_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace folium {

using Integer = mpz_class;

/// Arbitrary-precision rational, always reduced, denominator > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d);
    explicit Rational(const std::string& s);

    const Integer num() const { return v_.get_num(); }
    const Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
    Rational inv() const;

    /// "n" when integral, otherwise "n/d".
    std::string str() const;

private:
    mpq_class v_;  // canonical form maintained by gmp
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer binomial(long n, long k);

/// Prime factorization by trial division plus a probable-prime check on the cofactor.
/// Empty result when the cofactor is a large composite that the budget cannot split.
std::optional<std::vector<std::pair<Integer, int>>> factor_integer(Integer n,
                                                                   long trial_bound = 1000000);

/// All positive divisors, or nullopt when factor_integer gives up or there are too many.
std::optional<std::vector<Integer>> divisors(const Integer& n, std::size_t max_count = 100000);

/// Largest square divisor split off: n = s^2 * f with f squarefree.
/// Fails only for huge composite cofactors beyond the trial bound.
std::optional<std::pair<Integer, Integer>> squarefree_decompose(const Integer& n);

}  // namespace folium

#endif
