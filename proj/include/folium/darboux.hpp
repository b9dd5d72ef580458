#ifndef FOLIUM_DARBOUX_HPP
#define FOLIUM_DARBOUX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folium/field.hpp"
#include "folium/groebner.hpp"
#include "folium/mpoly.hpp"

namespace folium {

/// Algebraic curve f = 0 invariant under the field, with its exact cofactor:
/// apply(field, f) = cofactor * f.
struct InvariantCurve {
    MPoly f;
    MPoly cofactor;
    int degree = 0;
    /// deg cofactor <= affine degree - 1 holds generically; the looser bound
    /// deg <= affine degree is allowed and any overshoot of the generic bound recorded.
    bool cofactor_within_generic_bound = true;
};

std::optional<InvariantCurve> verify_invariant(const VectorField& vf, const MPoly& f);

/// f delta(g) - g delta(f) == 0; with f, g independent this certifies the rational
/// first integral g/f.
bool pencil_check(const VectorField& vf, const MPoly& f, const MPoly& g);

struct CurveSearch {
    std::vector<InvariantCurve> curves;
    bool complete = true;
    std::string note;
};

/// All invariant curves of degree <= max_degree with rational coefficients,
/// by leading-monomial case split and exact elimination. Branches that are
/// positive-dimensional or blow the budget flag the result incomplete.
CurveSearch invariant_curve_search(const VectorField& vf, int max_degree,
                                   long step_budget = 50000);

/// Determinant of the extactic matrix for degree e: rows are the monomial basis
/// of degree <= e and its iterated images under the derivation.
Budgeted<MPoly> extactic_determinant(const VectorField& vf, int e, long term_budget = 2000000);

struct ExtacticVerdict {
    bool integral_exists = false;  // determinant vanishes identically
    bool indeterminate = false;
};
ExtacticVerdict extactic_test(const VectorField& vf, int e, long term_budget = 2000000);

struct PencilSearch {
    bool exists = false;
    bool indeterminate = false;
    std::optional<std::pair<MPoly, MPoly>> witness;  // rational witness when extractable
};

/// Brute-force bilinear solve for a degree <= e pencil f delta(g) = g delta(f):
/// echelon-normalized leading-monomial branches decided by Groebner consistency.
/// Existence is over the algebraic closure, matching the extactic criterion.
PencilSearch pencil_exists(const VectorField& vf, int e, long step_budget = 50000);

struct FirstIntegral {
    enum class Kind { RationalPencil, DarbouxProduct };
    Kind kind = Kind::DarbouxProduct;
    std::vector<std::pair<MPoly, long>> components;  // product of f_i^{lambda_i}
};

/// Solve sum lambda_i K_i = 0 over the cofactors; on success returns the
/// multiplicative first integral with integer exponents and exact certificate.
std::optional<FirstIntegral> darboux_combination(const VectorField& vf,
                                                 const std::vector<InvariantCurve>& curves);

/// The certificate holds exactly: sum lambda_i K_i = 0 and the log-derivative
/// sum lambda_i apply(f_i)/f_i vanishes as a rational function.
bool certify_first_integral(const VectorField& vf, const FirstIntegral& fi);

Integer threshold_count(int d);  // binom(d+2, 2) + 1

}  // namespace folium

#endif
