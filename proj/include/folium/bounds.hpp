#ifndef FOLIUM_BOUNDS_HPP
#define FOLIUM_BOUNDS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "folium/blowup.hpp"
#include "folium/mpoly.hpp"
#include "folium/rational.hpp"

namespace folium {

/// Exact value a + b*sqrt(r) with r squarefree (r = 0 for rationals).
/// Comparisons are decided by integer arithmetic on squared differences.
class QuadraticSurd {
public:
    QuadraticSurd() : a_(0), b_(0), r_(0) {}
    QuadraticSurd(Rational a) : a_(std::move(a)), b_(0), r_(0) {}
    QuadraticSurd(Rational a, Rational b, Integer radicand);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coefficient() const { return b_; }
    const Integer& radicand() const { return r_; }
    bool is_rational() const { return r_ == 0; }

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);
    friend bool operator!=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x == y); }
    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y);
    friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return y < x; }
    friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(y < x); }
    friend bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x < y); }

    /// Least integer strictly greater than the value.
    Integer strict_ceiling() const;

    std::string str() const;

private:
    Rational a_, b_;
    Integer r_;
};

/// S = sum (n_i - 1)(n_i - 2) with terms n_i <= 0 removed.
Integer discrepancy_sum(const std::vector<long>& n_list);

struct BoundReport {
    int d = 0;
    Integer big_s;
    QuadraticSurd cor6_value;   // (1/2) sqrt(9 + 4S) + d + 3/2
    Integer cor6_threshold;     // least integer strictly above cor6_value
    Integer carnicer;           // d + 3
    QuadraticSurd limit_cycle_value;  // (d/2) sqrt(9 + 4S) + d^2/2 + S/2 + 2
    Integer harnack_of_threshold;
};

BoundReport cor6_bound(int d, const std::vector<long>& n_list);
Integer carnicer_bound(int d);      // d + 3
Integer harnack(int e);             // (e-1)(e-2)/2 + 1
QuadraticSurd limit_cycle_bound(int d, const Integer& big_s);
/// harnack evaluated at the degree bound equals the limit-cycle bound, exactly.
bool harnack_limit_cycle_identity(int d, const Integer& big_s);

struct PencilRequirement {
    int node;  // -1 for the germ base point itself
    long required;
};

/// Pencil of degree-q curves whose total transform has at least the required
/// valuation at each listed infinitely near point. Negative requirements clamp
/// to zero. Returns two independent members when the solution space has
/// dimension >= 2.
std::optional<std::pair<MPoly, MPoly>> theorem5_pencil(
    const ResolutionTree& tree, int q, const std::vector<PencilRequirement>& reqs);

/// Dimension of the degree-q solution space of the same linear system.
long pencil_solution_dimension(const ResolutionTree& tree, int q,
                               const std::vector<PencilRequirement>& reqs);

struct DimensionCount {
    Integer expected_dimension;  // binom(e-d-1, 2) - 1 - sum binom(n_i - 1, 2)
    Integer least_e_with_pencil;  // least e making the expected dimension >= 1
};
DimensionCount dimension_count(int e, int d, const std::vector<long>& n_list);

}  // namespace folium

#endif
