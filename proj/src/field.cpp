#include "folium/field.hpp"

#include <algorithm>

#include "folium/algext.hpp"
#include "folium/planar_solve.hpp"

namespace folium {

namespace {

MPoly homogeneous_component(const MPoly& f, int deg) {
    MPoly r(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (total_degree(e) == deg) r += MPoly::monomial(e, c);
    return r;
}

}  // namespace

VectorField::VectorField(MPoly p, MPoly q) : p_(std::move(p)), q_(std::move(q)) {
    check_same_arity(p_, q_);
    if (p_.nvars() != 2) throw std::invalid_argument("vector field: components must be bivariate");
    if (p_.is_zero() && q_.is_zero())
        throw std::invalid_argument("vector field: both components zero");
    m_ = std::max(p_.degree(), q_.degree());
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly radial_test = x * homogeneous_component(q_, m_) - y * homogeneous_component(p_, m_);
    foliation_degree_ = radial_test.is_zero() ? m_ - 1 : m_;
    d_ = foliation_degree_ - 1;
}

MPoly VectorField::apply(const MPoly& f) const {
    if (f.nvars() != 2) throw std::invalid_argument("vector field: apply needs bivariate input");
    return p_ * f.derivative(0) + q_ * f.derivative(1);
}

int singular_scheme_degree(int d) {
    if (d < -1) throw std::invalid_argument("singular_scheme_degree: d < -1");
    return d * d + 3 * d + 3;
}

DimensionReport dimension_report(int e, int d) {
    if (e < 1) throw std::invalid_argument("dimension_report: e < 1");
    DimensionReport r;
    r.twisted_one_form_sections = Integer(4) * e * e - 1;
    r.grassmannian_dim = Integer(e) * e + 3 * e - 2;
    r.target_dim = binomial(2 * e + d + 2, 2) - 1;
    return r;
}

ProjectiveFoliation projective_foliation(const VectorField& vf) {
    int m = vf.affine_degree();
    MPoly ph = vf.p().homogenize(m);  // arity 3: X, Y, Z with Z appended
    MPoly qh = vf.q().homogenize(m);
    MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
    MPoly a0 = z * qh;
    MPoly b0 = -(z * ph);
    MPoly c0 = y * ph - x * qh;
    MPoly g = gcd(gcd(a0, b0), c0);
    // only a Z power may divide out; anything else is a curve of singular points
    for (const auto& [e, c] : g.terms()) {
        if (e[0] != 0 || e[1] != 0)
            throw NonIsolatedSingularities("foliation has a curve of singular points");
    }
    ProjectiveFoliation out{exact_div(a0, g).value(), exact_div(b0, g).value(),
                            exact_div(c0, g).value(), 0};
    out.fd = out.a.degree() - 1;
    return out;
}

namespace {

struct ChartSystem {
    MPoly f, g;  // affine equations of the singular scheme in this chart
};

// chart 2 (Z=1): (A,B); chart 1 (Y=1): (A,C); chart 0 (X=1): (B,C)
ChartSystem chart_system(const ProjectiveFoliation& pf, int chart) {
    auto dehom = [&](const MPoly& h) { return h.dehomogenize(chart); };
    switch (chart) {
        case 2: return {dehom(pf.a), dehom(pf.b)};
        case 1: return {dehom(pf.a), dehom(pf.c)};
        default: return {dehom(pf.b), dehom(pf.c)};
    }
}

}  // namespace

SingularScheme singular_points(const VectorField& vf) {
    return singular_points(projective_foliation(vf));
}

SingularScheme singular_points(const ProjectiveFoliation& pf) {
    SingularScheme out;
    out.d = pf.fd - 1;

    // affine chart Z = 1: all points with Z != 0; coordinates (x, y)
    {
        ChartSystem cs = chart_system(pf, 2);
        PlanarSolution sol = planar_solve(cs.f, cs.g);
        for (const auto& p : sol.points) {
            out.rational_points.push_back({{p.x, p.y, Rational(1)}, p.multiplicity});
            out.total_degree += p.multiplicity;
        }
        for (const auto& c : sol.clusters) {
            out.clusters.push_back(
                {2, c.min_poly, c.x_param, c.y_param, c.multiplicity, c.certified_irreducible});
            out.total_degree += c.multiplicity * c.point_count();
        }
    }

    // chart Y = 1 restricted to the line at infinity; coordinates (x, z)
    {
        ChartSystem cs = chart_system(pf, 1);
        PlanarSolution sol = planar_solve(cs.f, cs.g);
        for (const auto& p : sol.points) {
            if (!p.y.is_zero()) continue;  // z != 0 already seen in chart Z
            out.rational_points.push_back({{p.x, Rational(1), Rational(0)}, p.multiplicity});
            out.total_degree += p.multiplicity;
        }
        for (const auto& c : sol.clusters) {
            // keep the part of the cluster on z = 0; a mixed cluster splits
            MPoly zpart = gcd(c.y_param, c.min_poly);
            if (c.y_param.is_zero()) zpart = c.min_poly;
            if (zpart.is_constant()) continue;
            MPoly q = zpart.monic();
            out.clusters.push_back({1, q, mod_reduce(c.x_param, q), MPoly(1), c.multiplicity,
                                    c.certified_irreducible && q == c.min_poly});
            out.total_degree += c.multiplicity * q.degree();
        }
    }

    // the single remaining point [1:0:0]
    {
        ChartSystem cs = chart_system(pf, 0);
        std::vector<Rational> origin{Rational(0), Rational(0)};
        if (cs.f.eval(origin).is_zero() && cs.g.eval(origin).is_zero()) {
            long mult = local_intersection_multiplicity(cs.f, cs.g, Rational(0), Rational(0));
            out.rational_points.push_back({{Rational(1), Rational(0), Rational(0)}, mult});
            out.total_degree += mult;
        }
    }

    long expected = singular_scheme_degree(out.d);
    if (out.total_degree != expected)
        throw std::logic_error("singular_points: multiplicities sum to " +
                               std::to_string(out.total_degree) + ", expected " +
                               std::to_string(expected));
    return out;
}

}  // namespace folium
