#include "folium/forms.hpp"

#include <stdexcept>

namespace folium {

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check_same_arity(num_, den_);
    if (den_.is_zero()) throw std::invalid_argument("ratfun: zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.nvars(), Rational(1));
        return;
    }
    MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_div(num_, g).value();
        den_ = exact_div(den_, g).value();
    }
    Rational lc = den_.lead_coeff();
    num_ /= lc;
    den_ /= lc;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::invalid_argument("ratfun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFun RatFun::derivative(int var) const {
    MPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFun(n, den_ * den_);
}

TwoForm exterior_derivative(const OneForm& w) {
    return {w.b.derivative(0) - w.a.derivative(1)};
}

OneForm differential(const RatFun& g) { return {g.derivative(0), g.derivative(1)}; }

TwoForm wedge(const OneForm& u, const OneForm& w) {
    return {u.a * w.b - u.b * w.a};
}

OneForm log_differential(const MPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("log_differential: zero polynomial");
    RatFun ff(f);
    return {RatFun(f.derivative(0), f) , RatFun(f.derivative(1), f)};
}

namespace {

// pullback coefficient of a polynomial under x = 1/u, y = v/u as (poly, pole exponent):
// p(1/u, v/u) = num(u, v) / u^k
std::pair<MPoly, int> chart_at_infinity(const MPoly& p) {
    int d = std::max(p.degree(), 0);
    // u^d * p(1/u, v/u) is polynomial
    MPoly num(2);
    for (const auto& [e, c] : p.terms()) {
        Exps m(2);
        m[0] = d - e[0] - e[1];  // power of u
        m[1] = e[1];             // power of v
        num += MPoly::monomial(m, c);
    }
    int val = num.is_zero() ? d : num.valuation_in(0);
    return {num.shift_out(0, val), d - val};
}

}  // namespace

PencilForm pencil_form(const MPoly& f, const MPoly& g, int e) {
    check_same_arity(f, g);
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("pencil_form: both sections zero");
    if (f.degree() > e || g.degree() > e)
        throw std::invalid_argument("pencil_form: degree exceeds the section degree");

    MPoly a = f * g.derivative(0) - g * f.derivative(0);
    MPoly b = f * g.derivative(1) - g * f.derivative(1);
    PencilForm out{OneForm{RatFun(a), RatFun(b)}, 0, 2 * e};
    if (a.is_zero() && b.is_zero()) return out;

    // pull back through x = 1/u, y = v/u:
    //   dx = -du/u^2,  dy = dv/u - v du/u^2
    // so  a dx + b dy = -( a + v b ) du / u^2 + b dv / u
    auto [an, ak] = chart_at_infinity(a);
    auto [bn, bk] = chart_at_infinity(b);
    MPoly v = MPoly::variable(2, 1);
    // du component: -(a~ u^{bk} + v b~ u^{ak}) / u^{ak+bk+2}, with a~,b~ u-coprime
    MPoly du_num(2);
    if (!a.is_zero()) du_num -= an * MPoly::monomial(Exps{bk, 0}, Rational(1));
    if (!b.is_zero()) du_num -= v * bn * MPoly::monomial(Exps{ak, 0}, Rational(1));
    int du_pole = 0;
    if (!du_num.is_zero()) du_pole = ak + bk + 2 - du_num.valuation_in(0);
    int dv_pole = b.is_zero() ? 0 : bk + 1;
    out.pole_order_at_infinity = std::max(du_pole, dv_pole);
    return out;
}

}  // namespace folium
