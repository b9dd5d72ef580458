#ifndef FOLIUM_GROEBNER_HPP
#define FOLIUM_GROEBNER_HPP

#include <string>
#include <vector>

#include "folium/mpoly.hpp"

namespace folium {

/// Budgeted outcome; exhausting a budget is a value, not a failure.
template <class T>
struct Budgeted {
    T value{};
    bool indeterminate = false;
    std::string note;

    static Budgeted ok(T v) { return {std::move(v), false, {}}; }
    static Budgeted out_of_budget(std::string why, T partial = T{}) {
        return {std::move(partial), true, std::move(why)};
    }
};

struct GroebnerOptions {
    MonOrder order = MonOrder::Grevlex;
    long step_budget = 50000;  // S-polynomial reductions
};

/// Reduced Groebner basis (monic, auto-reduced, sorted), deterministic given the
/// input order. Buchberger with the coprime-lead and chain criteria.
Budgeted<std::vector<MPoly>> groebner(std::vector<MPoly> gens, const GroebnerOptions& opt = {});

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, MonOrder order);

/// Basis generates the whole ring (variety empty over the algebraic closure).
bool basis_is_unit(const std::vector<MPoly>& basis);

/// Every variable has a pure-power leading term in the basis.
bool is_zero_dimensional(const std::vector<MPoly>& basis, MonOrder order);

struct PointSolutions {
    std::vector<std::vector<Rational>> points;  // rational solutions
    bool complete = true;   // false: positive-dimensional, budget, or root extraction gave up
    std::string note;
};

/// All rational solutions of a polynomial system, by lex Groebner plus recursive
/// univariate rational-root extraction. Complete (over Q) when flags say so.
PointSolutions solve_system(const std::vector<MPoly>& gens, long step_budget = 50000);

}  // namespace folium

#endif
