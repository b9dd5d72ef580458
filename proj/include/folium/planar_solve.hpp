#ifndef FOLIUM_PLANAR_SOLVE_HPP
#define FOLIUM_PLANAR_SOLVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "folium/mpoly.hpp"

namespace folium {

struct AffinePoint {
    Rational x, y;
    long multiplicity;
    friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
        return a.x == b.x && a.y == b.y && a.multiplicity == b.multiplicity;
    }
};

/// Conjugate solutions (x(t), y(t)) for t running over the roots of min_poly.
struct AffineCluster {
    MPoly min_poly;  // monic, arity 1
    MPoly x_param, y_param;
    long multiplicity;  // per conjugate point
    bool certified_irreducible;
    long point_count() const { return min_poly.degree(); }
};

struct PlanarSolution {
    std::vector<AffinePoint> points;
    std::vector<AffineCluster> clusters;
    long total_multiplicity = 0;
    long rational_total() const;
};

/// Common zeros of two coprime bivariate polynomials with exact intersection
/// multiplicities: sheared resultants, squarefree structure and fiber gcds,
/// cross-validated by an independent second shear with majority on a third.
/// Throws on a positive-dimensional locus (nonconstant gcd).
PlanarSolution planar_solve(const MPoly& f, const MPoly& g);

/// Intersection multiplicity of f and g at one rational point, exact: minimum of
/// eliminant orders over enough shears that at least one is uncontaminated.
long local_intersection_multiplicity(const MPoly& f, const MPoly& g,
                                     const Rational& px, const Rational& py);

}  // namespace folium

#endif
