#include "folium/groebner.hpp"

#include <algorithm>
#include <set>

namespace folium {

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, MonOrder order) {
    MPoly r(f.nvars());
    MPoly work = f;
    while (!work.is_zero()) {
        const Exps& lead = work.lead_exps(order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Exps& gl = g.lead_exps(order);
            if (mon_divides(gl, lead)) {
                Rational c = work.coeff(lead) / g.lead_coeff(order);
                work -= MPoly::monomial(mon_div(lead, gl), c) * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            MPoly t = MPoly::monomial(lead, work.coeff(lead));
            r += t;
            work -= t;
        }
    }
    return r;
}

namespace {

struct Pair {
    int i, j;
    Exps lcm;
    int deg;
};

bool coprime_leads(const Exps& a, const Exps& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) return false;
    return true;
}

std::vector<MPoly> interreduce(std::vector<MPoly> basis, MonOrder order) {
    // drop redundant generators, then tail-reduce
    std::vector<MPoly> kept;
    std::sort(basis.begin(), basis.end(), [&](const MPoly& a, const MPoly& b) {
        return mon_less(a.lead_exps(order), b.lead_exps(order), order);
    });
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!mon_divides(basis[j].lead_exps(order), basis[i].lead_exps(order))) continue;
            if (basis[j].lead_exps(order) == basis[i].lead_exps(order) && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) kept.push_back(basis[i]);
    }
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        MPoly r = normal_form(kept[i], others, order);
        if (!r.is_zero()) out.push_back(r.monic(order));
    }
    std::sort(out.begin(), out.end(), [&](const MPoly& a, const MPoly& b) {
        return mon_less(a.lead_exps(order), b.lead_exps(order), order);
    });
    return out;
}

}  // namespace

Budgeted<std::vector<MPoly>> groebner(std::vector<MPoly> gens, const GroebnerOptions& opt) {
    std::vector<MPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(opt.order));
    if (basis.empty()) return Budgeted<std::vector<MPoly>>::ok({});

    auto make_pair = [&](int i, int j) {
        Pair p;
        p.i = i;
        p.j = j;
        p.lcm = mon_lcm(basis[i].lead_exps(opt.order), basis[j].lead_exps(opt.order));
        p.deg = total_degree(p.lcm);
        return p;
    };

    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    std::vector<Pair> pending;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.push_back(make_pair(i, j));

    std::set<std::pair<int, int>> done;
    long steps = 0;
    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        done.insert({p.i, p.j});

        const Exps& li = basis[p.i].lead_exps(opt.order);
        const Exps& lj = basis[p.j].lead_exps(opt.order);
        if (coprime_leads(li, lj)) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            int ki = static_cast<int>(k);
            if (ki == p.i || ki == p.j) continue;
            if (!mon_divides(basis[k].lead_exps(opt.order), p.lcm)) continue;
            auto key1 = std::minmax(p.i, ki);
            auto key2 = std::minmax(p.j, ki);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        if (++steps > opt.step_budget)
            return Budgeted<std::vector<MPoly>>::out_of_budget("groebner step budget exhausted",
                                                               interreduce(basis, opt.order));

        MPoly spoly = MPoly::monomial(mon_div(p.lcm, li), Rational(1)) * basis[p.i] -
                      MPoly::monomial(mon_div(p.lcm, lj), Rational(1)) * basis[p.j];
        MPoly r = normal_form(spoly, basis, opt.order);
        if (r.is_zero()) continue;
        basis.push_back(r.monic(opt.order));
        int n = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < n; ++i) pending.push_back(make_pair(i, n));
    }
    return Budgeted<std::vector<MPoly>>::ok(interreduce(basis, opt.order));
}

bool basis_is_unit(const std::vector<MPoly>& basis) {
    for (const auto& g : basis)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

bool is_zero_dimensional(const std::vector<MPoly>& basis, MonOrder order) {
    if (basis.empty()) return false;
    int nvars = basis.front().nvars();
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : basis) {
            const Exps& l = g.lead_exps(order);
            bool pure = l[v] > 0;
            for (int w = 0; w < nvars && pure; ++w)
                if (w != v && l[w] > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

// substitute point values for the trailing (nvars - k) variables, keep first k
MPoly specialize_tail(const MPoly& f, int keep, const std::vector<Rational>& tail) {
    int n = f.nvars();
    std::vector<MPoly> images;
    images.reserve(n);
    for (int i = 0; i < keep; ++i) images.push_back(MPoly::variable(keep, i));
    for (int i = keep; i < n; ++i)
        images.push_back(MPoly::constant(keep, tail[i - keep]));
    return f.compose(images);
}

void solve_rec(const std::vector<MPoly>& gens, int nvars_left, std::vector<Rational>& tail,
               PointSolutions& out, long step_budget) {
    if (nvars_left == 0) {
        bool all_zero = true;
        for (const auto& g : gens)
            if (!g.is_zero()) all_zero = false;
        if (all_zero) {
            std::vector<Rational> pt(tail.rbegin(), tail.rend());
            out.points.push_back(pt);
        }
        return;
    }
    std::vector<MPoly> sys;
    for (const auto& g : gens) {
        MPoly s = specialize_tail(g, nvars_left, tail);
        if (!s.is_zero()) sys.push_back(s);
    }
    if (sys.empty()) {
        out.complete = false;
        out.note = "positive-dimensional solution set";
        return;
    }
    auto gb = groebner(sys, {MonOrder::Lex, step_budget});
    if (gb.indeterminate) {
        out.complete = false;
        out.note = gb.note;
        return;
    }
    if (basis_is_unit(gb.value)) return;  // no solutions on this branch
    if (gb.value.empty()) {
        out.complete = false;
        out.note = "positive-dimensional solution set";
        return;
    }
    // find an element univariate in the last remaining variable
    int last = nvars_left - 1;
    const MPoly* uni = nullptr;
    for (const auto& g : gb.value) {
        bool ok = g.degree_in(last) > 0;
        for (int v = 0; v < last && ok; ++v)
            if (g.degree_in(v) > 0) ok = false;
        if (ok) {
            uni = &g;
            break;
        }
    }
    if (!uni) {
        out.complete = false;
        out.note = "positive-dimensional solution set";
        return;
    }
    auto roots = rational_roots(*uni, last);
    if (!roots.complete) {
        out.complete = false;
        out.note = "rational root extraction exceeded its budget";
    }
    for (const auto& [root, mult] : roots.roots) {
        tail.push_back(root);
        std::vector<MPoly> next;
        for (const auto& g : gb.value) {
            std::vector<MPoly> images;
            for (int i = 0; i < last; ++i) images.push_back(MPoly::variable(last, i));
            images.push_back(MPoly::constant(last, root));
            MPoly s = g.compose(images);
            if (!s.is_zero()) next.push_back(s);
        }
        if (last == 0) {
            std::vector<Rational> pt(tail.rbegin(), tail.rend());
            out.points.push_back(pt);
        } else if (next.empty()) {
            out.complete = false;
            out.note = "positive-dimensional solution set";
        } else {
            solve_rec(next, last, tail, out, step_budget);
        }
        tail.pop_back();
    }
}

}  // namespace

PointSolutions solve_system(const std::vector<MPoly>& gens, long step_budget) {
    PointSolutions out;
    if (gens.empty()) {
        out.complete = false;
        out.note = "empty system";
        return out;
    }
    std::vector<Rational> tail;
    solve_rec(gens, gens.front().nvars(), tail, out, step_budget);
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

}  // namespace folium
