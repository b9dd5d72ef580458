#ifndef FOLIUM_MPOLY_HPP
#define FOLIUM_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folium/rational.hpp"

namespace folium {

using Exps = std::vector<int>;  // one exponent per variable

int total_degree(const Exps& e);

/// Graded reverse lexicographic term order, the default everywhere.
struct GrevlexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

enum class MonOrder { Grevlex, Grlex, Lex };

bool mon_less(const Exps& a, const Exps& b, MonOrder order);
bool mon_divides(const Exps& a, const Exps& b);  // a | b componentwise
Exps mon_mul(const Exps& a, const Exps& b);
Exps mon_div(const Exps& a, const Exps& b);  // assumes divisibility
Exps mon_lcm(const Exps& a, const Exps& b);

/// Sparse multivariate polynomial over Q. Terms are kept grevlex-sorted with no
/// zero coefficients; the zero polynomial has degree -1.
class MPoly {
public:
    using TermMap = std::map<Exps, Rational, GrevlexLess>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);
    static MPoly monomial(const Exps& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const;             // total degree, -1 for zero
    int degree_in(int var) const;   // -1 for zero
    Rational coeff(const Exps& e) const;
    void set_coeff(const Exps& e, const Rational& c);

    /// Largest term under the given order (grevlex is O(1), others scan).
    const Exps& lead_exps(MonOrder order = MonOrder::Grevlex) const;
    Rational lead_coeff(MonOrder order = MonOrder::Grevlex) const;
    Rational constant_term() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rational& c);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    MPoly& operator/=(const Rational& c);
    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int e) const;
    MPoly derivative(int var) const;

    /// Replace variable i by images[i]; all images share one arity, which becomes
    /// the arity of the result.
    MPoly compose(const std::vector<MPoly>& images) const;
    MPoly translate(const std::vector<Rational>& shift) const;  // x_i -> x_i + shift_i
    Rational eval(const std::vector<Rational>& point) const;

    /// Lowest power of var dividing every term (0 for the zero polynomial).
    int valuation_in(int var) const;
    MPoly shift_out(int var, int k) const;  // divide by var^k, assumes valuation >= k

    MPoly homogenize(int total) const;               // appends one variable
    MPoly dehomogenize(int chart) const;             // sets chart variable to 1, drops it
    MPoly extend_vars(int new_nvars) const;          // pad exponent tuples with zeros
    MPoly drop_var(int var) const;                   // assumes var is absent

    /// Positive rational c with (*this)/c integer-primitive and positive lead (grevlex).
    Rational content() const;
    MPoly primitive_part() const;
    MPoly monic(MonOrder order = MonOrder::Grevlex) const;

    /// Multiplicity at a rational point: least total degree after translating it to 0.
    int multiplicity_at(const std::vector<Rational>& point) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void trim();
    int nvars_;
    TermMap terms_;
};

void check_same_arity(const MPoly& a, const MPoly& b);

/// Quotient and remainder of division by a single divisor under the given order.
std::pair<MPoly, MPoly> divide(const MPoly& f, const MPoly& g,
                               MonOrder order = MonOrder::Grevlex);
std::optional<MPoly> exact_div(const MPoly& f, const MPoly& g);

MPoly gcd(const MPoly& f, const MPoly& g);
MPoly resultant(const MPoly& f, const MPoly& g, int var);

/// Dense coefficient list of f viewed as a polynomial in var (constant term first).
std::vector<MPoly> coeffs_in(const MPoly& f, int var);
MPoly from_coeffs_in(const std::vector<MPoly>& cs, int var, int nvars);

MPoly squarefree_part(const MPoly& f);

/// Yun decomposition of a univariate-in-var polynomial: list of (factor, multiplicity)
/// with factors squarefree and pairwise coprime.
std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& f, int var);

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
    bool complete = true;                         // false when divisor enumeration gave up
};
/// Rational roots of a univariate-in-var polynomial, exact.
RationalRoots rational_roots(const MPoly& f, int var);

struct UnivariateFactor {
    MPoly factor;
    int multiplicity;
    bool certified_irreducible;
};
/// Factorization over Q of a univariate-in-var polynomial into monic factors.
/// Degree-budgeted Kronecker interpolation; factors it cannot split are returned
/// squarefree with certified_irreducible = false.
std::vector<UnivariateFactor> factor_univariate(const MPoly& f, int var, long budget = 200000);

}  // namespace folium

#endif
