#include <doctest.h>

#include <array>
#include <set>

#include "folium/field.hpp"
#include "folium/parse.hpp"
#include "test_util.hpp"

using namespace folium;
using testutil::random_poly;
using testutil::random_rational;
using testutil::rng;

namespace {
const std::vector<std::string> XY{"x", "y"};
MPoly P(const std::string& s) { return parse_poly(s, XY); }
VectorField VF(const std::string& p, const std::string& q) { return {P(p), P(q)}; }
}  // namespace

TEST_CASE("derivation examples") {
    CHECK(VF("x", "-y").apply(P("x*y")).is_zero());
    CHECK(VF("x", "y").apply(P("x")) == P("x"));
    CHECK(VF("-y", "x").apply(P("x^2 + y^2")).is_zero());
}

TEST_CASE("derivation is linear and leibniz") {
    VectorField vf = VF("x^2 - y", "x + y^2");
    for (int i = 0; i < 100; ++i) {
        MPoly f = random_poly(2, 3, 3), g = random_poly(2, 3, 3);
        Rational c = random_rational();
        CHECK(vf.apply(f * g) == f * vf.apply(g) + g * vf.apply(f));
        CHECK(vf.apply(f + g) == vf.apply(f) + vf.apply(g));
        CHECK(vf.apply(c * f) == c * vf.apply(f));
    }
}

TEST_CASE("degree conventions") {
    CHECK(VF("x", "-y").affine_degree() == 1);
    CHECK(VF("x", "-y").foliation_degree() == 1);
    CHECK(VF("x", "-y").pole_degree() == 0);
    // radial top parts drop the foliation degree
    CHECK(VF("x", "y").foliation_degree() == 0);
    CHECK(VF("x", "y").pole_degree() == -1);
    CHECK(VF("1", "0").pole_degree() == -1);
    CHECK_THROWS_AS(VectorField(MPoly(2), MPoly(2)), std::invalid_argument);
}

TEST_CASE("singular scheme degree formula") {
    CHECK(singular_scheme_degree(0) == 3);
    CHECK(singular_scheme_degree(1) == 7);
    CHECK(singular_scheme_degree(2) == 13);
    CHECK(singular_scheme_degree(-1) == 1);
}

TEST_CASE("dimension report") {
    auto r1 = dimension_report(1, 0);
    CHECK(r1.twisted_one_form_sections == 3);
    CHECK(r1.grassmannian_dim == 2);
    CHECK(r1.target_dim == 5);
    CHECK(dimension_report(2, 0).twisted_one_form_sections == 15);
}

TEST_CASE("saddle singular scheme") {
    auto s = singular_points(VF("x", "-y"));
    CHECK(s.d == 0);
    CHECK(s.total_degree == 3);
    REQUIRE(s.rational_points.size() == 3);
    CHECK(s.clusters.empty());
    for (const auto& p : s.rational_points) CHECK(p.multiplicity == 1);
}

TEST_CASE("rotation singular scheme has a conjugate cluster") {
    auto s = singular_points(VF("-y", "x"));
    CHECK(s.d == 0);
    CHECK(s.total_degree == 3);
    REQUIRE(s.rational_points.size() == 1);
    CHECK(s.rational_points[0].coords ==
          std::array<Rational, 3>{Rational(0), Rational(0), Rational(1)});
    REQUIRE(s.clusters.size() == 1);
    CHECK(s.clusters[0].point_count() == 2);
    CHECK(s.clusters[0].multiplicity == 1);
    CHECK(s.clusters[0].chart == 1);  // on the line at infinity
}

TEST_CASE("radial pencil of lines") {
    auto s = singular_points(VF("x", "y"));
    CHECK(s.d == -1);
    CHECK(s.total_degree == 1);
}

TEST_CASE("common factor means a curve of singular points") {
    CHECK_THROWS_AS(singular_points(VF("x", "x*y")), NonIsolatedSingularities);
}

TEST_CASE("random fields have d^2+3d+3 singular points with multiplicity") {
    int done = 0;
    while (done < 8) {
        int m = 1 + (done % 3);
        MPoly p = random_poly(2, m, m + 2, 4), q = random_poly(2, m, m + 2, 4);
        if (p.is_zero() && q.is_zero()) continue;
        try {
            VectorField vf(p, q);
            auto s = singular_points(vf);
            CHECK(s.total_degree == singular_scheme_degree(s.d));
            ++done;
        } catch (const NonIsolatedSingularities&) {
            continue;
        }
    }
}

namespace {

// pullback of the foliation form under X -> M X
ProjectiveFoliation transform(const ProjectiveFoliation& pf,
                              const std::array<std::array<Rational, 3>, 3>& m) {
    std::vector<MPoly> images;
    for (int i = 0; i < 3; ++i) {
        MPoly img(3);
        for (int j = 0; j < 3; ++j)
            img += MPoly::constant(3, m[i][j]) * MPoly::variable(3, j);
        images.push_back(img);
    }
    std::array<MPoly, 3> comp{pf.a.compose(images), pf.b.compose(images),
                              pf.c.compose(images)};
    ProjectiveFoliation out{MPoly(3), MPoly(3), MPoly(3), pf.fd};
    std::array<MPoly*, 3> slots{&out.a, &out.b, &out.c};
    for (int j = 0; j < 3; ++j) {
        MPoly acc(3);
        for (int i = 0; i < 3; ++i) acc += MPoly::constant(3, m[i][j]) * comp[i];
        *slots[j] = acc;
    }
    return out;
}

std::multiset<long> multiplicity_histogram(const SingularScheme& s) {
    std::multiset<long> h;
    for (const auto& p : s.rational_points) h.insert(p.multiplicity);
    for (const auto& c : s.clusters)
        for (long i = 0; i < c.point_count(); ++i) h.insert(c.multiplicity);
    return h;
}

}  // namespace

TEST_CASE("multiplicities are invariant under projective changes of coordinates") {
    VectorField vf = VF("x^2 - y", "x*y - 1");
    auto base = singular_points(vf);
    ProjectiveFoliation pf = projective_foliation(vf);
    for (int trial = 0; trial < 2; ++trial) {
        std::array<std::array<Rational, 3>, 3> m;
        // random unimodular-ish integer matrix: start from identity, do shears
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = Rational(i == j ? 1 : 0);
        std::uniform_int_distribution<int> pick(0, 2), val(-3, 3);
        for (int k = 0; k < 4; ++k) {
            int i = pick(rng()), j = pick(rng());
            if (i == j) continue;
            Rational c(val(rng()));
            for (int t = 0; t < 3; ++t) m[i][t] += c * m[j][t];
        }
        auto s = singular_points(transform(pf, m));
        CHECK(s.total_degree == base.total_degree);
        CHECK(multiplicity_histogram(s) == multiplicity_histogram(base));
    }
}
