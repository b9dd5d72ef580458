#ifndef FOLIUM_ALGEXT_HPP
#define FOLIUM_ALGEXT_HPP

#include <vector>

#include "folium/mpoly.hpp"

namespace folium {

/// Thrown when arithmetic modulo q meets a zero divisor; carries a proper factor
/// of q so the caller can split the modulus and retry.
struct SplitModulus {
    MPoly factor;
};

/// Remainder of a modulo q, both univariate in variable 0 with arity 1.
MPoly mod_reduce(const MPoly& a, const MPoly& q);
MPoly mod_mul(const MPoly& a, const MPoly& b, const MPoly& q);
/// Inverse modulo q; throws SplitModulus when gcd(a, q) is proper.
MPoly mod_inv(const MPoly& a, const MPoly& q);

/// Dense polynomial in an auxiliary variable y with coefficients in Q[t]/(q).
using ExtPoly = std::vector<MPoly>;

/// View an arity-2 polynomial f(x, y) as an ExtPoly in y with x := t reduced mod q(t).
ExtPoly ext_from_bivariate(const MPoly& f, const MPoly& q);

bool ext_is_zero(const ExtPoly& a);
int ext_degree(const ExtPoly& a);
ExtPoly ext_trim(ExtPoly a);
ExtPoly ext_monic(const ExtPoly& a, const MPoly& q);  // may throw SplitModulus

/// Monic gcd in (Q[t]/(q))[y]; may throw SplitModulus for composite q.
ExtPoly ext_gcd(ExtPoly a, ExtPoly b, const MPoly& q);

/// Evaluate an arity-2 polynomial at the parametrized point (x(t), y(t)) modulo q.
MPoly eval_mod_cluster(const MPoly& f, const MPoly& x_param, const MPoly& y_param,
                       const MPoly& q);

}  // namespace folium

#endif
