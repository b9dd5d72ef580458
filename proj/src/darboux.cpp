#include "folium/darboux.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

#include "folium/forms.hpp"
#include "folium/matrix.hpp"

namespace folium {

std::optional<InvariantCurve> verify_invariant(const VectorField& vf, const MPoly& f) {
    if (f.is_constant()) throw std::invalid_argument("verify_invariant: constant polynomial");
    MPoly df = vf.apply(f);
    if (df.is_zero())
        return InvariantCurve{f.primitive_part(), MPoly(2), f.degree(), true};
    auto k = exact_div(df, f);
    if (!k) return std::nullopt;
    InvariantCurve c;
    c.f = f.primitive_part();
    c.cofactor = exact_div(vf.apply(c.f), c.f).value();
    c.degree = f.degree();
    c.cofactor_within_generic_bound = c.cofactor.degree() <= vf.affine_degree() - 1;
    if (c.cofactor.degree() > vf.affine_degree())
        throw std::logic_error("verify_invariant: cofactor degree exceeds the affine degree");
    return c;
}

bool pencil_check(const VectorField& vf, const MPoly& f, const MPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("pencil_check: both polynomials zero");
    return (f * vf.apply(g) - g * vf.apply(f)).is_zero();
}

namespace {

// monomials of total degree <= n, grevlex-descending
std::vector<Exps> monomials_upto(int n) {
    std::vector<Exps> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out.push_back(Exps{i, j});
    std::sort(out.begin(), out.end(),
              [](const Exps& a, const Exps& b) { return GrevlexLess{}(b, a); });
    return out;
}

// coefficient map of an (x,y)-polynomial whose coefficients live in Q[a_0..a_{r-1}]
using SymCoeffs = std::map<Exps, MPoly, GrevlexLess>;

void sym_add(SymCoeffs& m, const Exps& e, const MPoly& v) {
    auto it = m.find(e);
    if (it == m.end()) {
        if (!v.is_zero()) m.emplace(e, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

struct BranchOutcome {
    std::vector<MPoly> curves;  // solved f's
    bool complete = true;
    std::string note;
};

// one leading-monomial branch of the invariant-curve system
BranchOutcome search_branch(const VectorField& vf, int max_degree, const Exps& mu,
                            long step_budget) {
    BranchOutcome out;
    const int m = vf.affine_degree();
    std::vector<Exps> all = monomials_upto(max_degree);

    // unknown tail coefficients: monomials strictly below mu
    std::vector<Exps> tail;
    for (const auto& e : all)
        if (GrevlexLess{}(e, mu)) tail.push_back(e);
    const int r = static_cast<int>(tail.size());
    std::map<Exps, int, GrevlexLess> tail_index;
    for (int i = 0; i < r; ++i) tail_index[tail[i]] = i;

    auto f_coeff = [&](const Exps& e) -> MPoly {
        // symbolic coefficient of f at monomial e
        for (int v : e)
            if (v < 0) return MPoly(r);
        if (total_degree(e) > max_degree) return MPoly(r);
        if (e == mu) return MPoly::constant(r, Rational(1));
        auto it = tail_index.find(e);
        if (it == tail_index.end()) return MPoly(r);  // above mu
        return MPoly::variable(r, it->second);
    };

    // delta(f) coefficients, linear in the tail unknowns
    SymCoeffs dfc;
    {
        auto add_image = [&](const Exps& lam, const MPoly& coeff_sym) {
            MPoly img = vf.apply(MPoly::monomial(lam, Rational(1)));
            for (const auto& [e, c] : img.terms())
                sym_add(dfc, e, coeff_sym * MPoly::constant(r, c));
        };
        add_image(mu, MPoly::constant(r, Rational(1)));
        for (int i = 0; i < r; ++i) add_image(tail[i], MPoly::variable(r, i));
    }

    // cofactor coefficients are triangular in the unknowns: process K-monomials
    // in decreasing grevlex
    std::vector<Exps> kmons = monomials_upto(m);
    std::map<Exps, MPoly, GrevlexLess> kc;
    for (const auto& beta : kmons) {  // already grevlex-descending
        Exps gamma = mon_mul(beta, mu);
        MPoly val = dfc.count(gamma) ? dfc.at(gamma) : MPoly(r);
        for (const auto& [beta2, b2] : kc) {
            // beta2 processed earlier, so beta2 > beta
            Exps diff = mon_div(gamma, beta2);
            val -= b2 * f_coeff(diff);
        }
        kc[beta] = val;
    }

    // remaining equations: coefficients not of the form beta + mu must vanish
    SymCoeffs kf;  // K*f
    for (const auto& [beta, b] : kc) {
        if (b.is_zero()) continue;
        for (const auto& lam : all) {
            if (GrevlexLess{}(mu, lam)) continue;
            MPoly fc = f_coeff(lam);
            if (fc.is_zero()) continue;
            sym_add(kf, mon_mul(beta, lam), b * fc);
        }
    }
    std::set<Exps, GrevlexLess> gammas;
    for (const auto& [e, c] : dfc) gammas.insert(e);
    for (const auto& [e, c] : kf) gammas.insert(e);
    std::vector<MPoly> eqs;
    for (const auto& g : gammas) {
        // skip defining equations
        Exps diff = mon_div(g, mu);
        bool defining = true;
        for (int v : diff)
            if (v < 0) defining = false;
        if (defining && total_degree(diff) <= m) continue;
        MPoly lhs = (dfc.count(g) ? dfc.at(g) : MPoly(r)) - (kf.count(g) ? kf.at(g) : MPoly(r));
        if (!lhs.is_zero()) eqs.push_back(lhs);
    }

    auto emit = [&](const std::vector<Rational>& point) {
        MPoly f = MPoly::monomial(mu, Rational(1));
        for (int i = 0; i < r; ++i)
            f += MPoly::monomial(tail[i], point[i]);
        out.curves.push_back(f);
    };

    if (r == 0) {
        bool consistent = true;
        for (const auto& e : eqs)
            if (!e.is_zero()) consistent = false;
        if (consistent) emit({});
        return out;
    }
    if (eqs.empty()) {
        out.complete = false;
        out.note = "positive-dimensional family of invariant curves";
        return out;
    }
    PointSolutions sols = solve_system(eqs, step_budget);
    if (!sols.complete) {
        out.complete = false;
        out.note = sols.note;
    }
    for (const auto& pt : sols.points) emit(pt);
    return out;
}

}  // namespace

CurveSearch invariant_curve_search(const VectorField& vf, int max_degree, long step_budget) {
    if (max_degree < 1) throw std::invalid_argument("invariant_curve_search: max degree < 1");
    CurveSearch out;
    std::vector<Exps> leads;
    for (const auto& e : monomials_upto(max_degree))
        if (total_degree(e) >= 1) leads.push_back(e);

    std::vector<std::future<BranchOutcome>> jobs;
    for (const auto& mu : leads)
        jobs.push_back(std::async(std::launch::async, search_branch, std::cref(vf), max_degree,
                                  mu, step_budget));
    for (auto& j : jobs) {
        BranchOutcome b = j.get();
        if (!b.complete) {
            out.complete = false;
            if (out.note.empty()) out.note = b.note;
        }
        for (const auto& f : b.curves) {
            auto c = verify_invariant(vf, f);
            if (!c) throw std::logic_error("invariant_curve_search: solution fails verification");
            out.curves.push_back(std::move(*c));
        }
    }
    std::sort(out.curves.begin(), out.curves.end(),
              [](const InvariantCurve& a, const InvariantCurve& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  return GrevlexLess{}(a.f.lead_exps(), b.f.lead_exps());
              });
    return out;
}

namespace {

// fraction-free determinant with a term-count budget
Budgeted<MPoly> budgeted_det(std::vector<std::vector<MPoly>> m, int nvars, long term_budget) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Budgeted<MPoly>::ok(MPoly::constant(nvars, Rational(1)));
    int sign = 1;
    MPoly prev = MPoly::constant(nvars, Rational(1));
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Budgeted<MPoly>::ok(MPoly(nvars));
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                if (static_cast<long>(num.term_count()) > term_budget)
                    return Budgeted<MPoly>::out_of_budget("extactic size budget exhausted");
                m[i][j] = exact_div(num, prev).value();
            }
            m[i][k] = MPoly(nvars);
        }
        prev = m[k][k];
    }
    MPoly d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return Budgeted<MPoly>::ok(d);
}

}  // namespace

Budgeted<MPoly> extactic_determinant(const VectorField& vf, int e, long term_budget) {
    if (e < 1) throw std::invalid_argument("extactic: e < 1");
    std::vector<Exps> mons = monomials_upto(e);
    std::sort(mons.begin(), mons.end(), GrevlexLess{});  // ascending basis order
    const int n = static_cast<int>(mons.size());
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
    for (int j = 0; j < n; ++j) m[0][j] = MPoly::monomial(mons[j], Rational(1));
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = vf.apply(m[i - 1][j]);
    return budgeted_det(std::move(m), 2, term_budget);
}

ExtacticVerdict extactic_test(const VectorField& vf, int e, long term_budget) {
    auto det = extactic_determinant(vf, e, term_budget);
    if (det.indeterminate) return {false, true};
    return {det.value.is_zero(), false};
}

namespace {

struct PencilBranch {
    bool consistent = false;
    bool indeterminate = false;
    std::optional<std::pair<MPoly, MPoly>> witness;
};

PencilBranch pencil_branch(const VectorField& vf, int e, const Exps& mu_f, const Exps& mu_g,
                           long step_budget) {
    PencilBranch out;
    std::vector<Exps> all = monomials_upto(e);
    std::vector<Exps> ftail, gtail;
    for (const auto& lam : all) {
        if (GrevlexLess{}(lam, mu_f) && !(lam == mu_g)) ftail.push_back(lam);
        if (GrevlexLess{}(lam, mu_g)) gtail.push_back(lam);
    }
    const int r = static_cast<int>(ftail.size() + gtail.size());

    auto sym = [&](int i) { return MPoly::variable(r, i); };

    // delta applied to each monomial, reused below
    std::map<Exps, MPoly, GrevlexLess> dmon;
    for (const auto& lam : all) dmon[lam] = vf.apply(MPoly::monomial(lam, Rational(1)));

    // coefficients of f, g and of delta f, delta g as symbolic maps
    SymCoeffs fc, gc, dfc, dgc;
    auto add_poly = [&](SymCoeffs& coeffs, SymCoeffs& dcoeffs, const Exps& lam, const MPoly& s) {
        sym_add(coeffs, lam, s);
        for (const auto& [e2, c2] : dmon[lam].terms())
            sym_add(dcoeffs, e2, s * MPoly::constant(r, c2));
    };
    add_poly(fc, dfc, mu_f, MPoly::constant(r, Rational(1)));
    add_poly(gc, dgc, mu_g, MPoly::constant(r, Rational(1)));
    for (std::size_t i = 0; i < ftail.size(); ++i)
        add_poly(fc, dfc, ftail[i], sym(static_cast<int>(i)));
    for (std::size_t i = 0; i < gtail.size(); ++i)
        add_poly(gc, dgc, gtail[i], sym(static_cast<int>(ftail.size() + i)));

    // coefficients of f*delta(g) - g*delta(f)
    SymCoeffs bil;
    for (const auto& [ef, cf] : fc)
        for (const auto& [ed, cd] : dgc) sym_add(bil, mon_mul(ef, ed), cf * cd);
    for (const auto& [eg, cg] : gc)
        for (const auto& [ed, cd] : dfc) sym_add(bil, mon_mul(eg, ed), -(cg * cd));

    std::vector<MPoly> eqs;
    for (const auto& [e2, c2] : bil)
        if (!c2.is_zero()) eqs.push_back(c2);

    if (eqs.empty()) {
        out.consistent = true;  // identically a pencil for any tail values
        MPoly f = MPoly::monomial(mu_f, Rational(1));
        MPoly g = MPoly::monomial(mu_g, Rational(1));
        out.witness = std::make_pair(f, g);
        return out;
    }
    if (r == 0) {
        bool ok = true;
        for (const auto& q : eqs)
            if (!q.is_zero()) ok = false;
        out.consistent = ok;
        if (ok)
            out.witness = std::make_pair(MPoly::monomial(mu_f, Rational(1)),
                                         MPoly::monomial(mu_g, Rational(1)));
        return out;
    }

    auto gb = groebner(eqs, {MonOrder::Grevlex, step_budget});
    if (gb.indeterminate) {
        out.indeterminate = true;
        return out;
    }
    if (basis_is_unit(gb.value)) return out;  // inconsistent
    out.consistent = true;

    // try to exhibit a rational witness
    PointSolutions sols = solve_system(eqs, step_budget);
    if (!sols.points.empty()) {
        const auto& pt = sols.points.front();
        MPoly f = MPoly::monomial(mu_f, Rational(1));
        for (std::size_t i = 0; i < ftail.size(); ++i)
            f += MPoly::monomial(ftail[i], pt[i]);
        MPoly g = MPoly::monomial(mu_g, Rational(1));
        for (std::size_t i = 0; i < gtail.size(); ++i)
            g += MPoly::monomial(gtail[i], pt[ftail.size() + i]);
        out.witness = std::make_pair(f, g);
    }
    return out;
}

}  // namespace

PencilSearch pencil_exists(const VectorField& vf, int e, long step_budget) {
    if (e < 1) throw std::invalid_argument("pencil_exists: e < 1");
    PencilSearch out;
    std::vector<Exps> all = monomials_upto(e);  // grevlex-descending
    bool any_indeterminate = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            PencilBranch b = pencil_branch(vf, e, all[i], all[j], step_budget);
            if (b.indeterminate) any_indeterminate = true;
            if (b.consistent) {
                out.exists = true;
                out.witness = b.witness;
                if (out.witness &&
                    !pencil_check(vf, out.witness->second, out.witness->first))
                    throw std::logic_error("pencil_exists: witness fails pencil_check");
                return out;
            }
        }
    }
    out.indeterminate = any_indeterminate;
    return out;
}

std::optional<FirstIntegral> darboux_combination(const VectorField& vf,
                                                 const std::vector<InvariantCurve>& curves) {
    if (curves.empty()) return std::nullopt;
    std::set<Exps, GrevlexLess> mons;
    for (const auto& c : curves)
        for (const auto& [e, co] : c.cofactor.terms()) mons.insert(e);
    RatMatrix m(static_cast<int>(mons.size()), static_cast<int>(curves.size()));
    {
        int i = 0;
        for (const auto& e : mons) {
            for (std::size_t j = 0; j < curves.size(); ++j)
                m(i, static_cast<int>(j)) = curves[j].cofactor.coeff(e);
            ++i;
        }
    }
    auto sol = solve_linear(m);
    if (sol.nullspace.empty()) return std::nullopt;
    const auto& lambda = sol.nullspace.front();  // primitive integer vector
    FirstIntegral fi;
    fi.kind = FirstIntegral::Kind::DarbouxProduct;
    MPoly cert(2);
    for (std::size_t j = 0; j < curves.size(); ++j) {
        if (lambda[j].is_zero()) continue;
        if (!mpz_fits_slong_p(lambda[j].num().get_mpz_t()))
            throw std::logic_error("darboux_combination: exponent does not fit a machine word");
        long lj = lambda[j].num().get_si();
        fi.components.emplace_back(curves[j].f, lj);
        cert += MPoly::constant(2, lambda[j]) * curves[j].cofactor;
    }
    if (!cert.is_zero())
        throw std::logic_error("darboux_combination: certificate sum is nonzero");
    return fi;
}

bool certify_first_integral(const VectorField& vf, const FirstIntegral& fi) {
    MPoly ksum(2);
    RatFun logd{MPoly(2)};
    for (const auto& [f, lam] : fi.components) {
        auto c = verify_invariant(vf, f);
        if (!c) return false;
        ksum += MPoly::constant(2, Rational(lam)) * c->cofactor;
        logd = logd + RatFun(MPoly::constant(2, Rational(lam)) * vf.apply(f), f);
    }
    return ksum.is_zero() && logd.is_zero();
}

Integer threshold_count(int d) {
    if (d < 0) throw std::invalid_argument("threshold_count: d < 0");
    return binomial(d + 2, 2) + 1;
}

}  // namespace folium
