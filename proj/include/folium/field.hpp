#ifndef FOLIUM_FIELD_HPP
#define FOLIUM_FIELD_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "folium/mpoly.hpp"
#include "folium/rational.hpp"

namespace folium {

/// Planar polynomial vector field P d/dx + Q d/dy with its degree conventions:
/// m is the affine degree, d the pole-divisor degree (foliation degree minus one).
class VectorField {
public:
    VectorField(MPoly p, MPoly q);

    const MPoly& p() const { return p_; }
    const MPoly& q() const { return q_; }
    int affine_degree() const { return m_; }
    int foliation_degree() const { return foliation_degree_; }
    int pole_degree() const { return d_; }

    /// The derivation: P df/dx + Q df/dy.
    MPoly apply(const MPoly& f) const;

private:
    MPoly p_, q_;
    int m_, foliation_degree_, d_;
};

int singular_scheme_degree(int d);  // d^2 + 3d + 3, defined for d >= -1

struct DimensionReport {
    Integer twisted_one_form_sections;  // 4e^2 - 1
    Integer grassmannian_dim;           // e^2 + 3e - 2
    Integer target_dim;                 // binom(2e+d+2, 2) - 1
};
DimensionReport dimension_report(int e, int d);

struct ProjectivePoint {
    std::array<Rational, 3> coords;  // [X:Y:Z], canonical representative
    long multiplicity;
};

/// Conjugate singular points sharing a minimal polynomial: the points are
/// [x(t):1:z(t)] (or the analogue in another chart) for roots t of min_poly.
struct ProjectiveCluster {
    int chart;  // index of the coordinate set to 1
    MPoly min_poly;
    MPoly first_param, second_param;  // the two non-chart coordinates, in chart order
    long multiplicity;
    bool certified_irreducible;
    long point_count() const { return min_poly.degree(); }
};

struct SingularScheme {
    std::vector<ProjectivePoint> rational_points;
    std::vector<ProjectiveCluster> clusters;
    long total_degree = 0;
    int d = 0;
};

class NonIsolatedSingularities : public std::runtime_error {
public:
    explicit NonIsolatedSingularities(const std::string& what) : std::runtime_error(what) {}
};

/// Reduced homogeneous one-form A dX + B dY + C dZ defining the foliation.
struct ProjectiveFoliation {
    MPoly a, b, c;  // arity 3, homogeneous of degree fd + 1
    int fd;
};
ProjectiveFoliation projective_foliation(const VectorField& vf);

/// All singular points of the induced foliation with exact multiplicities; their
/// total is d^2+3d+3. Throws NonIsolatedSingularities on a curve of singularities.
SingularScheme singular_points(const VectorField& vf);
SingularScheme singular_points(const ProjectiveFoliation& pf);

}  // namespace folium

#endif
