#ifndef FOLIUM_FORMS_HPP
#define FOLIUM_FORMS_HPP

#include "folium/mpoly.hpp"

namespace folium {

/// Rational function in the affine chart, stored in lowest terms with monic denominator.
class RatFun {
public:
    RatFun() : num_(2), den_(MPoly::constant(2, Rational(1))) {}
    RatFun(MPoly num, MPoly den);
    explicit RatFun(const MPoly& p) : RatFun(p, MPoly::constant(p.nvars(), Rational(1))) {}

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun derivative(int var) const;  // quotient rule, reduced

private:
    MPoly num_, den_;
};

/// One-form a dx + b dy with rational-function components.
struct OneForm {
    RatFun a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend OneForm operator+(const OneForm& u, const OneForm& w) { return {u.a + w.a, u.b + w.b}; }
    friend OneForm operator-(const OneForm& u, const OneForm& w) { return {u.a - w.a, u.b - w.b}; }
    friend OneForm operator*(const RatFun& g, const OneForm& w) { return {g * w.a, g * w.b}; }
    friend bool operator==(const OneForm& u, const OneForm& w) { return u.a == w.a && u.b == w.b; }
};

/// Two-form c dx^dy.
struct TwoForm {
    RatFun c;
    bool is_zero() const { return c.is_zero(); }
    friend TwoForm operator+(const TwoForm& u, const TwoForm& w) { return {u.c + w.c}; }
    friend bool operator==(const TwoForm& u, const TwoForm& w) { return u.c == w.c; }
};

TwoForm exterior_derivative(const OneForm& w);
OneForm differential(const RatFun& g);  // dg
TwoForm wedge(const OneForm& u, const OneForm& w);

/// df/f in lowest terms; additive on products.
OneForm log_differential(const MPoly& f);

struct PencilForm {
    OneForm form;                 // f dg - g df, polynomial components
    int pole_order_at_infinity;   // exact order along the line at infinity
    int bound;                    // certified bound 2e
    bool within_bound() const { return pole_order_at_infinity <= bound; }
};

/// f dg - g df for degree-e sections, with the exact pole order of the pullback
/// in the chart at infinity.
PencilForm pencil_form(const MPoly& f, const MPoly& g, int e);

}  // namespace folium

#endif
