#ifndef FOLIUM_BLOWUP_HPP
#define FOLIUM_BLOWUP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folium/divisor.hpp"
#include "folium/field.hpp"
#include "folium/mpoly.hpp"

namespace folium {

/// Plane curve germ: a polynomial branch representative vanishing at an affine
/// rational base point.
struct Germ {
    Rational base_x, base_y;
    MPoly equation;
};

class PoleAcquired : public std::runtime_error {
public:
    explicit PoleAcquired(const std::string& w) : std::runtime_error(w) {}
};

class UnsupportedCenter : public std::runtime_error {
public:
    explicit UnsupportedCenter(const std::string& w) : std::runtime_error(w) {}
};

/// Infinitely near point that has been blown up, carrying its exceptional divisor.
struct InfNearPoint {
    int id = 0;
    int parent = -1;  // -1: center in the germ base chart
    Rational center_u, center_v;  // coordinates in the parent chart (chart A)
    bool from_far_point = false;  // center was the single point missed by chart A
    int depth = 0;
    std::vector<int> proximate_to;  // earlier divisors passing through the center

    long nu_total = 0;     // germ total-transform valuation along this divisor
    long mult_proper = 0;  // multiplicity of the proper transform at the center
    std::optional<long> nu_delta;  // order of the transformed field, once attached
    bool dicritical = false;
};

/// Iterated quadratic transforms above one germ, with exact chart bookkeeping.
class ResolutionTree {
public:
    explicit ResolutionTree(Germ germ);
    ResolutionTree(const ResolutionTree&);
    ResolutionTree(ResolutionTree&&) noexcept;
    ResolutionTree& operator=(const ResolutionTree&);
    ResolutionTree& operator=(ResolutionTree&&) noexcept;
    ~ResolutionTree();

    const Germ& germ() const { return germ_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const InfNearPoint& node(int i) const { return nodes_.at(i); }

    /// Blow up the rational point (u, v) in the chart of `parent_node`
    /// (-1 for the germ base chart, where (0,0) is the base point).
    int blowup(int parent_node, const Rational& u, const Rational& v);
    /// Blow up the one point of E_parent that chart A misses.
    int blowup_far_point(int parent_node);

    /// Valuations of an arbitrary affine polynomial along each divisor
    /// (total transform), and proper-transform multiplicities at each center.
    std::vector<long> total_valuations(const MPoly& f) const;
    std::vector<long> proper_multiplicities(const MPoly& f) const;

    /// Pull the field through every chart, recording per-divisor orders; throws
    /// PoleAcquired when some center was not invariant.
    void attach_field(const VectorField& vf);
    bool has_field() const { return field_.has_value(); }
    const VectorField& field() const { return field_.value(); }

    /// Intersection number of two exceptional divisors on the final surface.
    long intersection_count(int node_a, int node_b) const;
    /// Intersection number of an exceptional divisor with the proper transform
    /// of an affine curve.
    long intersection_count_with_curve(int node, const MPoly& curve) const;

    /// Chart substitution of the divisor's chart A: (x, y) as polynomials in
    /// (u, v) with E = {u = 0}; for theorem-style valuation conditions.
    std::pair<MPoly, MPoly> chart_substitution(int node) const;
    std::pair<MPoly, MPoly> base_chart_substitution() const;

    DivisorClass class_of_strict(const std::vector<Integer>& strict_coeffs) const;
    DivisorClass class_of_h(const Integer& h) const;
    DivisorClass canonical_class() const;  // -3H + sum E*

    bool resolved = false;          // set by resolve()
    bool step_cap_reached = false;  // flagged partial tree
    std::string halt_reason;

    std::string to_dot(const std::vector<std::string>& extra_labels = {}) const;

private:
    friend struct ResolveDriver;
    struct Frame;
    int blowup_in_frame(int frame_index, const Rational& u, const Rational& v);
    void make_child_frames(int node_id, int parent_frame, const Rational& cu,
                           const Rational& cv);
    std::vector<Frame> frames_;
    std::vector<InfNearPoint> nodes_;
    Germ germ_;
    std::optional<VectorField> field_;
};

struct ResolveOptions {
    int step_cap = 64;  // blow-ups per germ
};

struct Resolution {
    std::vector<ResolutionTree> trees;  // one per germ, in input order
    bool completed = true;              // no step cap hit, no halts
};

/// Blow up non-SNC points of the total transform (and the base point of an
/// invariant germ) until the total transform has simple normal crossings.
Resolution resolve(const VectorField& vf, const std::vector<Germ>& germs,
                   const ResolveOptions& opt = {});

struct DiscrepancyReport {
    std::vector<std::optional<long>> n;  // per germ; empty tree yields no term
    Integer big_s;                       // sum of (n-1)(n-2) over terms with n >= 1
};
DiscrepancyReport germ_discrepancies(const Resolution& res);

struct ChernReport {
    DivisorClass log_cotangent_c1;  // -3H + E + (eH - I) + E
    DivisorClass difference;        // (e-d-3)H + (2E + Z - I)
    std::vector<Integer> difference_strict;  // per-divisor coefficients of 2E + Z - I
};
ChernReport chern_report(const ResolutionTree& tree, int e, int d);

/// 2g-2 for one curve component by the valuation formula: d*e minus
/// sum nu_P(delta) nu_P(C) plus the symmetrized sum over incident exceptional
/// pairs. Valid for components that end as smooth leaves.
Integer genus_by_valuations(const ResolutionTree& tree, int d, int e_component,
                            const MPoly& component);
/// Adjunction oracle: 2g-2 = C.(C + K_S) in the divisor lattice.
Integer genus_by_adjunction(const ResolutionTree& tree, int e_component,
                            const MPoly& component);

}  // namespace folium

#endif
