#include <doctest.h>

#include "folium/forms.hpp"
#include "folium/parse.hpp"
#include "test_util.hpp"

using namespace folium;
using testutil::random_nonzero_poly;

namespace {
const std::vector<std::string> XY{"x", "y"};
MPoly P(const std::string& s) { return parse_poly(s, XY); }
RatFun F(const std::string& s) { return RatFun(P(s)); }
}  // namespace

TEST_CASE("rational functions reduce to lowest terms") {
    RatFun r(P("x^2 - y^2"), P("x - y"));
    CHECK(r == F("x + y"));
    RatFun q(P("2*x"), P("4*y"));
    CHECK(q.num() == P("1/2*x"));
    CHECK(q.den() == P("y"));
    CHECK_THROWS_AS(RatFun(P("x"), MPoly(2)), std::invalid_argument);
}

TEST_CASE("exterior derivative basics") {
    OneForm x_dy{F("0"), F("x")};
    CHECK(exterior_derivative(x_dy) == TwoForm{F("1")});

    for (int i = 0; i < 20; ++i) {
        MPoly f = random_nonzero_poly(2, 4, 4);
        OneForm df = differential(RatFun(f));
        CHECK(exterior_derivative(df).is_zero());
    }
}

TEST_CASE("log differentials are closed") {
    for (int i = 0; i < 20; ++i) {
        MPoly f = random_nonzero_poly(2, 4, 4);
        CHECK(exterior_derivative(log_differential(f)).is_zero());
    }
}

TEST_CASE("wedge product") {
    OneForm dx{F("1"), F("0")}, dy{F("0"), F("1")};
    CHECK(wedge(dx, dy) == TwoForm{F("1")});
    OneForm w{F("x^2 - y"), F("3*x*y")};
    CHECK(wedge(w, w).is_zero());
    OneForm f_dx{F("x^2 + 1"), F("0")}, g_dy{F("0"), F("y - 7")};
    CHECK(wedge(f_dx, g_dy) == TwoForm{F("(x^2 + 1) * (y - 7)")});
}

TEST_CASE("log differential examples and additivity") {
    OneForm w = log_differential(P("x"));
    CHECK(w.a == RatFun(P("1"), P("x")));
    CHECK(w.b.is_zero());

    OneForm wxy = log_differential(P("x*y"));
    CHECK(wxy.a == RatFun(P("1"), P("x")));
    CHECK(wxy.b == RatFun(P("1"), P("y")));

    OneForm wx2 = log_differential(P("x^2"));
    CHECK(wx2.a == RatFun(P("2"), P("x")));

    for (int i = 0; i < 100; ++i) {
        MPoly f = random_nonzero_poly(2, 3, 3), g = random_nonzero_poly(2, 3, 3);
        OneForm sum = log_differential(f) + log_differential(g);
        CHECK(log_differential(f * g) == sum);
    }
    CHECK_THROWS_AS(log_differential(MPoly(2)), std::invalid_argument);
}

TEST_CASE("leibniz rule for rational scalars") {
    for (int i = 0; i < 25; ++i) {
        RatFun g(random_nonzero_poly(2, 3, 3), random_nonzero_poly(2, 2, 2));
        OneForm w{RatFun(random_nonzero_poly(2, 3, 3)), RatFun(random_nonzero_poly(2, 3, 3))};
        TwoForm lhs = exterior_derivative(g * w);
        TwoForm rhs = wedge(differential(g), w) + TwoForm{g * exterior_derivative(w).c};
        CHECK(lhs == rhs);
    }
}

TEST_CASE("closed-form identity for proportional closed forms") {
    // w2 = g*w1 with w1 closed: 0 = d(w2) = g d(w1) + dg ^ w1
    for (int i = 0; i < 25; ++i) {
        MPoly f = random_nonzero_poly(2, 3, 3);
        OneForm w1 = log_differential(f);  // closed
        RatFun g(random_nonzero_poly(2, 3, 3), random_nonzero_poly(2, 2, 2));
        TwoForm lhs = TwoForm{g * exterior_derivative(w1).c} + wedge(differential(g), w1);
        CHECK(lhs == exterior_derivative(g * w1));
        CHECK(lhs.is_zero());
    }
}

TEST_CASE("pencil form examples") {
    auto pf = pencil_form(P("x"), P("y"), 1);
    CHECK(pf.form.a == F("-y"));
    CHECK(pf.form.b == F("x"));
    CHECK(pf.pole_order_at_infinity == 2);
    CHECK(pf.bound == 2);

    MPoly f = P("x^2 - y + 1");
    auto zero = pencil_form(f, f, 2);
    CHECK(zero.form.is_zero());
    CHECK(zero.pole_order_at_infinity == 0);

    CHECK_THROWS_AS(pencil_form(MPoly(2), MPoly(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(pencil_form(P("x^3"), P("y"), 2), std::invalid_argument);
}

TEST_CASE("pencil form pole bound on random sections") {
    for (int i = 0; i < 60; ++i) {
        int e = 1 + (i % 3);
        MPoly f = random_nonzero_poly(2, e, 4), g = random_nonzero_poly(2, e, 4);
        auto pf = pencil_form(f, g, e);
        CHECK(pf.pole_order_at_infinity <= 2 * e);
    }
}
