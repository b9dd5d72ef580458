#include "folium/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace folium {

int total_degree(const Exps& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GrevlexLess::operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

static bool lex_less(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool mon_less(const Exps& a, const Exps& b, MonOrder order) {
    switch (order) {
        case MonOrder::Grevlex: return GrevlexLess{}(a, b);
        case MonOrder::Lex: return lex_less(a, b);
        case MonOrder::Grlex: {
            int da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db;
            return lex_less(a, b);
        }
    }
    return false;
}

bool mon_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps mon_mul(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps mon_div(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exps mon_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

void check_same_arity(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("mpoly: variable arity mismatch");
}

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_[Exps(nvars, 0)] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("mpoly: unknown variable");
    MPoly p(nvars);
    Exps e(nvars, 0);
    e[index] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

MPoly MPoly::monomial(const Exps& e, const Rational& c) {
    MPoly p(static_cast<int>(e.size()));
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);  // grevlex max has max degree
}

int MPoly::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("mpoly: unknown variable");
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Rational MPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::set_coeff(const Exps& e, const Rational& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

const Exps& MPoly::lead_exps(MonOrder order) const {
    if (terms_.empty()) throw std::invalid_argument("mpoly: lead term of zero");
    if (order == MonOrder::Grevlex) return terms_.rbegin()->first;
    const Exps* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (mon_less(*best, e, order)) best = &e;
    return *best;
}

Rational MPoly::lead_coeff(MonOrder order) const { return terms_.at(lead_exps(order)); }

Rational MPoly::constant_term() const { return coeff(Exps(nvars_, 0)); }

void MPoly::trim() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_arity(*this, o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_arity(*this, o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    check_same_arity(a, b);
    MPoly r(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exps e = mon_mul(ea, eb);
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly& MPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw std::invalid_argument("mpoly: division by zero scalar");
    for (auto& [e, v] : terms_) v /= c;
    return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("mpoly: negative power");
    MPoly r = constant(nvars_, Rational(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("mpoly: unknown variable");
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.terms_[d] = c * Rational(e[var]);
    }
    return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("mpoly: compose arity mismatch");
    int out_arity = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != out_arity) throw std::invalid_argument("mpoly: compose arity mismatch");

    // cache powers of each image
    std::vector<std::vector<MPoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(MPoly::constant(out_arity, Rational(1)));

    auto power = [&](int i, int e) -> const MPoly& {
        while (static_cast<int>(pows[i].size()) <= e)
            pows[i].push_back(pows[i].back() * images[i]);
        return pows[i][e];
    };

    MPoly r(out_arity);
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(out_arity, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        r += t;
    }
    return r;
}

MPoly MPoly::translate(const std::vector<Rational>& shift) const {
    std::vector<MPoly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i)
        images.push_back(MPoly::variable(nvars_, i) + MPoly::constant(nvars_, shift[i]));
    return compose(images);
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("mpoly: eval arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

int MPoly::valuation_in(int var) const {
    if (terms_.empty()) return 0;
    int v = -1;
    for (const auto& [e, c] : terms_) v = (v < 0) ? e[var] : std::min(v, e[var]);
    return v;
}

MPoly MPoly::shift_out(int var, int k) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < k) throw std::invalid_argument("mpoly: shift_out below valuation");
        Exps d = e;
        d[var] -= k;
        r.terms_[d] = c;
    }
    return r;
}

MPoly MPoly::homogenize(int total) const {
    if (total < degree()) throw std::invalid_argument("mpoly: homogenize below degree");
    MPoly r(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        Exps d = e;
        d.push_back(total - total_degree(e));
        r.terms_[d] = c;
    }
    return r;
}

MPoly MPoly::dehomogenize(int chart) const {
    if (chart < 0 || chart >= nvars_) throw std::invalid_argument("mpoly: unknown chart");
    MPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        Exps d;
        d.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != chart) d.push_back(e[i]);
        auto [it, inserted] = r.terms_.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

MPoly MPoly::extend_vars(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("mpoly: extend_vars shrinks");
    MPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exps d = e;
        d.resize(new_nvars, 0);
        r.terms_[d] = c;
    }
    return r;
}

MPoly MPoly::drop_var(int var) const {
    MPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0) throw std::invalid_argument("mpoly: drop_var on present variable");
        Exps d;
        d.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i)
            if (i != var) d.push_back(e[i]);
        r.terms_[d] = c;
    }
    return r;
}

Rational MPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = folium::gcd(num_gcd, c.num());
        den_lcm = folium::lcm(den_lcm, c.den());
    }
    Rational content(num_gcd, den_lcm);
    if (lead_coeff().sign() < 0) content = -content;
    return content;
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    MPoly r = *this;
    r /= content();
    return r;
}

MPoly MPoly::monic(MonOrder order) const {
    if (terms_.empty()) return *this;
    MPoly r = *this;
    r /= lead_coeff(order);
    return r;
}

int MPoly::multiplicity_at(const std::vector<Rational>& point) const {
    if (terms_.empty()) return -1;
    MPoly t = translate(point);
    int m = -1;
    for (const auto& [e, c] : t.terms()) {
        int d = total_degree(e);
        m = (m < 0) ? d : std::min(m, d);
    }
    return m;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print grevlex-descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_var = total_degree(e) > 0;
        if (!has_var || !a.is_one()) {
            os << a.str();
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::pair<MPoly, MPoly> divide(const MPoly& f, const MPoly& g, MonOrder order) {
    check_same_arity(f, g);
    if (g.is_zero()) throw std::invalid_argument("mpoly: division by zero polynomial");
    MPoly q(f.nvars()), r(f.nvars());
    MPoly work = f;
    const Exps& glead = g.lead_exps(order);
    Rational gc = g.lead_coeff(order);
    while (!work.is_zero()) {
        const Exps& wlead = work.lead_exps(order);
        if (mon_divides(glead, wlead)) {
            Exps m = mon_div(wlead, glead);
            Rational c = work.coeff(wlead) / gc;
            MPoly t = MPoly::monomial(m, c);
            q += t;
            work -= t * g;
        } else {
            MPoly t = MPoly::monomial(wlead, work.coeff(wlead));
            r += t;
            work -= t;
        }
    }
    return {q, r};
}

std::optional<MPoly> exact_div(const MPoly& f, const MPoly& g) {
    auto [q, r] = divide(f, g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::vector<MPoly> coeffs_in(const MPoly& f, int var) {
    int d = std::max(f.degree_in(var), 0);
    std::vector<MPoly> cs(d + 1, MPoly(f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        Exps m = e;
        int k = m[var];
        m[var] = 0;
        MPoly t = MPoly::monomial(m, c);
        cs[k] += t;
    }
    return cs;
}

MPoly from_coeffs_in(const std::vector<MPoly>& cs, int var, int nvars) {
    MPoly r(nvars);
    MPoly v = MPoly::variable(nvars, var);
    for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k) r = r * v + cs[k];
    return r;
}

// pseudo-remainder of f by g in the variable var
static MPoly prem(const MPoly& f, const MPoly& g, int var) {
    int df = f.degree_in(var), dg = g.degree_in(var);
    if (df < dg) return f;
    MPoly lg = coeffs_in(g, var).back();
    MPoly r = f;
    int e = df - dg + 1;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        MPoly lr = coeffs_in(r, var).back();
        Exps shift(f.nvars(), 0);
        shift[var] = dr - dg;
        r = lg * r - MPoly::monomial(shift, Rational(1)) * lr * g;
        --e;
        if (!r.is_zero() && r.degree_in(var) >= dr) throw std::logic_error("mpoly: prem stuck");
    }
    if (e > 0) r = lg.pow(e) * r;
    return r;
}

// content of f with respect to var: gcd of its coefficients
static MPoly content_in(const MPoly& f, int var) {
    auto cs = coeffs_in(f, var);
    MPoly g(f.nvars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MPoly gcd(const MPoly& f, const MPoly& g) {
    if (f.is_zero() && g.is_zero()) return f;
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant())
        return MPoly::constant(f.nvars(), Rational(1));

    // main variable: highest index present in either
    int var = -1;
    for (int i = f.nvars() - 1; i >= 0; --i) {
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) {
            var = i;
            break;
        }
    }
    if (var < 0) return MPoly::constant(f.nvars(), Rational(1));

    if (f.degree_in(var) == 0 || g.degree_in(var) == 0) {
        // one of them does not involve var: gcd(h, cont_var(other))
        const MPoly& flat = (f.degree_in(var) == 0) ? f : g;
        const MPoly& other = (f.degree_in(var) == 0) ? g : f;
        return gcd(flat, content_in(other, var)).monic();
    }

    MPoly cf = content_in(f, var), cg = content_in(g, var);
    MPoly a = exact_div(f, cf).value();
    MPoly b = exact_div(g, cg).value();
    MPoly cont_gcd = gcd(cf, cg);

    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    // subresultant polynomial remainder sequence
    MPoly gg = MPoly::constant(f.nvars(), Rational(1));
    MPoly h = gg;
    while (true) {
        int delta = a.degree_in(var) - b.degree_in(var);
        MPoly r = prem(a, b, var);
        if (r.is_zero()) {
            MPoly pb = exact_div(b, content_in(b, var)).value();
            return (cont_gcd * pb).monic();
        }
        if (r.degree_in(var) == 0) return cont_gcd.monic();
        a = b;
        MPoly denom = gg * h.pow(delta);
        b = exact_div(r, denom).value();
        gg = coeffs_in(a, var).back();
        if (delta >= 1) {
            h = exact_div(gg.pow(delta), h.pow(delta - 1)).value();
        } else {
            h = h.pow(1 - delta) * gg.pow(delta);
        }
    }
}

// fraction-free determinant over the polynomial ring; entries consumed
static MPoly mpoly_det(std::vector<std::vector<MPoly>> m, int nvars) {
    int n = static_cast<int>(m.size());
    if (n == 0) return MPoly::constant(nvars, Rational(1));
    int sign = 1;
    MPoly prev = MPoly::constant(nvars, Rational(1));
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (!m[i][k].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return MPoly(nvars);  // zero column
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_div(num, prev);
                if (!q) throw std::logic_error("mpoly: bareiss division failed");
                m[i][j] = q.value();
            }
            m[i][k] = MPoly(nvars);
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

MPoly resultant(const MPoly& f, const MPoly& g, int var) {
    check_same_arity(f, g);
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("mpoly: resultant of zero polynomial");
    int df = f.degree_in(var), dg = g.degree_in(var);
    if (df == 0 && dg == 0)
        throw std::invalid_argument("mpoly: resultant needs a polynomial in the variable");
    if (df == 0) return f.pow(dg);
    if (dg == 0) return g.pow(df);
    auto fc = coeffs_in(f, var);
    auto gc = coeffs_in(g, var);
    int n = df + dg;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(f.nvars())));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) m[i][i + j] = fc[df - j];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) m[dg + i][i + j] = gc[dg - j];
    return mpoly_det(std::move(m), f.nvars());
}

MPoly squarefree_part(const MPoly& f) {
    if (f.is_zero() || f.is_constant()) return f;
    MPoly g = f;
    for (int i = 0; i < f.nvars(); ++i) {
        if (g.degree_in(i) > 0) {
            MPoly d = gcd(g, g.derivative(i));
            if (!d.is_constant()) g = exact_div(g, d).value();
        }
    }
    return g.primitive_part();
}

std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& f, int var) {
    std::vector<std::pair<MPoly, int>> out;
    if (f.is_zero() || f.degree_in(var) == 0) return out;
    MPoly a = f.primitive_part();
    MPoly da = a.derivative(var);
    MPoly g = gcd(a, da);
    MPoly w = exact_div(a, g).value();
    MPoly y = exact_div(da, g).value();
    MPoly z = y - w.derivative(var);
    int i = 1;
    while (!z.is_zero()) {
        MPoly h = gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h.monic(), i);
        w = exact_div(w, h).value();
        y = exact_div(z, h).value();
        z = y - w.derivative(var);
        ++i;
    }
    if (w.degree() > 0) out.emplace_back(w.monic(), i);
    return out;
}

RationalRoots rational_roots(const MPoly& f, int var) {
    RationalRoots out;
    if (f.is_zero()) throw std::invalid_argument("mpoly: roots of zero polynomial");
    for (int i = 0; i < f.nvars(); ++i)
        if (i != var && f.degree_in(i) > 0)
            throw std::invalid_argument("mpoly: rational_roots needs univariate input");

    // integer-primitive coefficient vector
    auto cs = coeffs_in(f, var);
    int lo = 0;
    while (cs[lo].is_zero()) ++lo;
    if (lo > 0) out.roots.emplace_back(Rational(0), lo);
    std::vector<Rational> c;
    for (std::size_t k = lo; k < cs.size(); ++k) c.push_back(cs[k].constant_term());
    if (c.size() <= 1) return out;
    Integer den_lcm = 1;
    for (const auto& x : c) den_lcm = lcm(den_lcm, x.den());
    std::vector<Integer> ic;
    for (const auto& x : c) ic.push_back(x.num() * (den_lcm / x.den()));

    auto p_divs = divisors(ic.front() < 0 ? Integer(-ic.front()) : ic.front());
    auto q_divs = divisors(ic.back() < 0 ? Integer(-ic.back()) : ic.back());
    if (!p_divs || !q_divs) {
        out.complete = false;
        return out;
    }
    MPoly work = f;
    if (lo > 0) work = work.shift_out(var, lo);
    MPoly v = MPoly::variable(f.nvars(), var);
    for (const Integer& p : *p_divs) {
        for (const Integer& q : *q_divs) {
            for (int s : {1, -1}) {
                Rational r(s * p, q);
                std::vector<Rational> pt(f.nvars(), Rational(0));
                pt[var] = r;
                if (!work.eval(pt).is_zero()) continue;
                int mult = 0;
                MPoly lin = v - MPoly::constant(f.nvars(), r);
                while (true) {
                    auto qq = exact_div(work, lin);
                    if (!qq) break;
                    work = qq.value();
                    ++mult;
                }
                if (mult > 0) out.roots.emplace_back(r, mult);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Kronecker splitting of a squarefree integer-primitive univariate polynomial.
// Returns a proper monic factor or nullopt (irreducible or budget exceeded).
static std::optional<MPoly> kronecker_split(const MPoly& f, int var, long budget,
                                            bool* gave_up) {
    int n = f.degree_in(var);
    if (n <= 1) return std::nullopt;
    MPoly g = f.primitive_part();
    long work = 0;
    for (int k = 1; k <= n / 2; ++k) {
        // evaluation points 0, 1, -1, 2, -2, ...
        std::vector<Rational> xs;
        std::vector<Integer> vals;
        long probe = 0;
        while (static_cast<int>(xs.size()) <= k) {
            long t = (probe % 2 == 0) ? probe / 2 : -(probe / 2 + 1);
            ++probe;
            if (probe > 200) break;
            std::vector<Rational> pt(f.nvars(), Rational(0));
            pt[var] = Rational(t);
            Rational v = g.eval(pt);
            if (v.is_zero()) continue;  // roots already stripped by caller
            xs.emplace_back(t);
            vals.push_back(v.num());
        }
        if (static_cast<int>(xs.size()) <= k) break;
        std::vector<std::vector<Integer>> divs;
        long combos = 1;
        bool too_many = false;
        for (const auto& v : vals) {
            auto d = divisors(v < 0 ? Integer(-v) : v);
            if (!d) {
                *gave_up = true;
                return std::nullopt;
            }
            std::vector<Integer> with_neg;
            for (const auto& x : *d) {
                with_neg.push_back(x);
                with_neg.push_back(-x);
            }
            combos *= static_cast<long>(with_neg.size());
            if (combos > budget) {
                too_many = true;
                break;
            }
            divs.push_back(std::move(with_neg));
        }
        if (too_many) {
            *gave_up = true;
            continue;
        }
        // enumerate divisor tuples, Lagrange-interpolate a candidate of degree <= k
        std::vector<std::size_t> idx(divs.size(), 0);
        while (true) {
            if (++work > budget) {
                *gave_up = true;
                return std::nullopt;
            }
            // interpolate through (xs[i], divs[i][idx[i]])
            MPoly cand(f.nvars());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                MPoly li = MPoly::constant(f.nvars(), Rational(1));
                Rational denom(1);
                for (std::size_t j = 0; j < xs.size(); ++j) {
                    if (i == j) continue;
                    li = li * (MPoly::variable(f.nvars(), var) -
                               MPoly::constant(f.nvars(), xs[j]));
                    denom *= xs[i] - xs[j];
                }
                cand += li * (Rational(divs[i][idx[i]]) / denom);
            }
            if (cand.degree_in(var) >= 1 && cand.degree_in(var) <= n / 2) {
                auto q = exact_div(g, cand);
                if (q) return cand.monic();
            }
            // next tuple
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == divs[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

std::vector<UnivariateFactor> factor_univariate(const MPoly& f, int var, long budget) {
    std::vector<UnivariateFactor> out;
    auto sq = squarefree_decomposition(f, var);
    for (auto& [gpart, mult] : sq) {
        // strip rational roots first
        MPoly g = gpart;
        auto rr = rational_roots(g, var);
        for (const auto& [root, m] : rr.roots) {
            MPoly lin = MPoly::variable(f.nvars(), var) - MPoly::constant(f.nvars(), root);
            out.push_back({lin, mult, true});
            g = exact_div(g, lin).value();
        }
        std::vector<MPoly> queue;
        if (g.degree_in(var) > 0) queue.push_back(g.monic());
        while (!queue.empty()) {
            MPoly h = queue.back();
            queue.pop_back();
            int d = h.degree_in(var);
            if (d <= (rr.complete ? 3 : 1)) {
                // degree 2-3 with no rational root is irreducible over Q
                out.push_back({h, mult, rr.complete});
                continue;
            }
            bool gave_up = false;
            auto split = kronecker_split(h, var, budget, &gave_up);
            if (split) {
                queue.push_back(split.value());
                queue.push_back(exact_div(h, split.value()).value().monic());
            } else {
                out.push_back({h, mult, !gave_up});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UnivariateFactor& a, const UnivariateFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return GrevlexLess{}(a.factor.lead_exps(), b.factor.lead_exps());
    });
    return out;
}

}  // namespace folium
