#include "folium/blowup.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "folium/algext.hpp"
#include "folium/darboux.hpp"
#include "folium/planar_solve.hpp"

namespace folium {

namespace {

MPoly var_u() { return MPoly::variable(2, 0); }
MPoly var_v() { return MPoly::variable(2, 1); }
MPoly cst(const Rational& c) { return MPoly::constant(2, c); }

int exc_var(bool b_chart) { return b_chart ? 1 : 0; }

}  // namespace

struct ResolutionTree::Frame {
    MPoly x_of, y_of;  // global coordinates as polynomials in the frame coordinates
    std::vector<std::pair<int, MPoly>> divisors;
    MPoly germ_proper;
    int owner = -1;  // node whose exceptional divisor this frame carries
    bool b_chart = false;
    std::vector<std::pair<Rational, Rational>> blown;
    // creation data, for replaying the field transform
    int parent_frame = -1;
    Rational cu, cv;
    std::optional<std::pair<MPoly, MPoly>> field;  // delta in frame coordinates
};

ResolutionTree::ResolutionTree(const ResolutionTree&) = default;
ResolutionTree::ResolutionTree(ResolutionTree&&) noexcept = default;
ResolutionTree& ResolutionTree::operator=(const ResolutionTree&) = default;
ResolutionTree& ResolutionTree::operator=(ResolutionTree&&) noexcept = default;
ResolutionTree::~ResolutionTree() = default;

ResolutionTree::ResolutionTree(Germ germ) : germ_(std::move(germ)) {
    if (germ_.equation.is_constant())
        throw std::invalid_argument("germ: constant local equation");
    if (!germ_.equation.eval({germ_.base_x, germ_.base_y}).is_zero())
        throw std::invalid_argument("germ: equation does not vanish at the base point");
    Frame root;
    root.x_of = var_u() + cst(germ_.base_x);
    root.y_of = var_v() + cst(germ_.base_y);
    root.germ_proper = germ_.equation.compose({root.x_of, root.y_of});
    frames_.push_back(std::move(root));
}

std::pair<MPoly, MPoly> ResolutionTree::base_chart_substitution() const {
    return {frames_[0].x_of, frames_[0].y_of};
}

std::pair<MPoly, MPoly> ResolutionTree::chart_substitution(int node) const {
    const auto& nfo = nodes_.at(node);
    (void)nfo;
    // chart A of the node is created right after the node itself
    for (std::size_t fi = 0; fi < frames_.size(); ++fi)
        if (frames_[fi].owner == node && !frames_[fi].b_chart)
            return {frames_[fi].x_of, frames_[fi].y_of};
    throw std::logic_error("resolution tree: missing chart");
}

void ResolutionTree::make_child_frames(int node_id, int parent_frame, const Rational& cu,
                                       const Rational& cv) {
    const Frame& pf = frames_[parent_frame];
    for (int which = 0; which < 2; ++which) {
        bool b_chart = which == 1;
        // chart A: (u_p, v_p) = (cu + u, cv + u v); chart B: (cu + s t, cv + t)
        std::vector<MPoly> img;
        if (!b_chart)
            img = {cst(cu) + var_u(), cst(cv) + var_u() * var_v()};
        else
            img = {cst(cu) + var_u() * var_v(), cst(cv) + var_v()};
        int ev = exc_var(b_chart);

        Frame child;
        child.owner = node_id;
        child.b_chart = b_chart;
        child.parent_frame = parent_frame;
        child.cu = cu;
        child.cv = cv;
        child.x_of = pf.x_of.compose(img);
        child.y_of = pf.y_of.compose(img);
        for (const auto& [id, eq] : pf.divisors) {
            MPoly t = eq.compose(img);
            int val = t.is_zero() ? 0 : t.valuation_in(ev);
            t = t.shift_out(ev, val);
            if (!t.is_constant()) child.divisors.emplace_back(id, t);
        }
        child.divisors.emplace_back(node_id, MPoly::variable(2, ev));
        {
            MPoly t = pf.germ_proper.compose(img);
            int val = t.is_zero() ? 0 : t.valuation_in(ev);
            child.germ_proper = t.shift_out(ev, val);
        }
        if (pf.field) {
            const auto& [fu, fv] = *pf.field;
            MPoly a = fu.compose(img);
            MPoly b = fv.compose(img);
            std::optional<MPoly> second;
            MPoly first(2);
            if (!b_chart) {
                first = a;
                second = exact_div(b - var_v() * a, MPoly::variable(2, 0));
            } else {
                // frame order is (s, t): delta(s), delta(t)
                second = exact_div(a - var_u() * b, MPoly::variable(2, 1));
                first = b;
            }
            if (!second) {
                throw PoleAcquired(
                    "blow-up center is not a singular point of the transformed field");
            }
            if (!b_chart)
                child.field = std::make_pair(first, *second);
            else
                child.field = std::make_pair(*second, first);
        }
        frames_.push_back(std::move(child));
    }
}

int ResolutionTree::blowup_in_frame(int frame_index, const Rational& u, const Rational& v) {
    Frame& pf = frames_[frame_index];
    for (const auto& [bu, bv] : pf.blown)
        if (bu == u && bv == v)
            throw std::invalid_argument("blowup: center already blown up");

    InfNearPoint n;
    n.id = static_cast<int>(nodes_.size());
    n.parent = pf.owner;
    n.center_u = u;
    n.center_v = v;
    n.from_far_point = pf.b_chart;
    n.depth = pf.owner < 0 ? 0 : nodes_[pf.owner].depth + 1;
    for (const auto& [id, eq] : pf.divisors)
        if (eq.eval({u, v}).is_zero()) n.proximate_to.push_back(id);
    n.mult_proper = pf.germ_proper.multiplicity_at({u, v});
    if (n.mult_proper < 0) n.mult_proper = 0;  // proper transform vanished entirely

    pf.blown.emplace_back(u, v);
    make_child_frames(n.id, frame_index, u, v);

    // total-transform valuation by direct substitution, checked against the
    // proximity formula
    const Frame& ca = frames_[frames_.size() - 2];
    MPoly total = germ_.equation.compose({ca.x_of, ca.y_of});
    n.nu_total = total.is_zero() ? 0 : total.valuation_in(0);
    long prox_sum = n.mult_proper;
    for (int id : n.proximate_to) prox_sum += nodes_[id].nu_total;
    if (n.nu_total != prox_sum)
        throw std::logic_error("blowup: proximity bookkeeping disagrees with substitution");

    if (ca.field) {
        const auto& [fu, fv] = *ca.field;
        long nu = -1;
        if (!fu.is_zero()) nu = fu.valuation_in(0);
        if (!fv.is_zero()) {
            long w = fv.valuation_in(0);
            nu = nu < 0 ? w : std::min(nu, w);
        }
        if (nu < 0) throw std::logic_error("blowup: field vanished identically");
        n.nu_delta = nu;
        n.dicritical = !fu.is_zero() && fu.valuation_in(0) == nu;
        // cross-check in the other chart
        const Frame& cb = frames_.back();
        if (cb.field) {
            const auto& [gs, gt] = *cb.field;
            long nu_b = -1;
            if (!gs.is_zero()) nu_b = gs.valuation_in(1);
            if (!gt.is_zero()) {
                long w = gt.valuation_in(1);
                nu_b = nu_b < 0 ? w : std::min(nu_b, w);
            }
            if (nu_b != nu)
                throw std::logic_error("blowup: field order disagrees between charts");
        }
    }

    nodes_.push_back(std::move(n));
    return nodes_.back().id;
}

int ResolutionTree::blowup(int parent_node, const Rational& u, const Rational& v) {
    if (parent_node < 0) return blowup_in_frame(0, u, v);
    for (std::size_t fi = 0; fi < frames_.size(); ++fi)
        if (frames_[fi].owner == parent_node && !frames_[fi].b_chart) {
            if (!u.is_zero())
                throw std::invalid_argument("blowup: center must lie on the exceptional divisor");
            return blowup_in_frame(static_cast<int>(fi), u, v);
        }
    throw std::invalid_argument("blowup: unknown node");
}

int ResolutionTree::blowup_far_point(int parent_node) {
    for (std::size_t fi = 0; fi < frames_.size(); ++fi)
        if (frames_[fi].owner == parent_node && frames_[fi].b_chart)
            return blowup_in_frame(static_cast<int>(fi), Rational(0), Rational(0));
    throw std::invalid_argument("blowup: unknown node");
}

std::vector<long> ResolutionTree::total_valuations(const MPoly& f) const {
    std::vector<long> out;
    out.reserve(nodes_.size());
    for (int i = 0; i < size(); ++i) {
        auto [x_of, y_of] = chart_substitution(i);
        MPoly t = f.compose({x_of, y_of});
        out.push_back(t.is_zero() ? 0 : t.valuation_in(0));
    }
    return out;
}

std::vector<long> ResolutionTree::proper_multiplicities(const MPoly& f) const {
    std::vector<long> out;
    for (const auto& n : nodes_) {
        // proper transform of f in the parent frame, then multiplicity at the center
        int pframe = -1;
        for (std::size_t fi = 0; fi < frames_.size(); ++fi) {
            if (frames_[fi].owner == n.id && !frames_[fi].b_chart) {
                pframe = frames_[fi].parent_frame;
                break;
            }
        }
        const Frame& pf = frames_[pframe];
        MPoly t = f.compose({pf.x_of, pf.y_of});
        for (const auto& [id, eq] : pf.divisors) {
            while (!t.is_zero()) {
                auto q = exact_div(t, eq);
                if (!q) break;
                t = *q;
            }
        }
        long m = t.multiplicity_at({n.center_u, n.center_v});
        out.push_back(m < 0 ? 0 : m);
    }
    return out;
}

void ResolutionTree::attach_field(const VectorField& vf) {
    field_ = vf;
    frames_[0].field =
        std::make_pair(vf.p().compose({frames_[0].x_of, frames_[0].y_of}),
                       vf.q().compose({frames_[0].x_of, frames_[0].y_of}));
    // replay the frame tree in creation order; frames come in (A, B) pairs per node
    for (std::size_t fi = 1; fi < frames_.size(); ++fi) {
        const Frame& f = frames_[fi];
        const Frame& pf = frames_[f.parent_frame];
        std::vector<MPoly> img;
        if (!f.b_chart)
            img = {cst(f.cu) + var_u(), cst(f.cv) + var_u() * var_v()};
        else
            img = {cst(f.cu) + var_u() * var_v(), cst(f.cv) + var_v()};
        const auto& [fu, fv] = *pf.field;
        MPoly a = fu.compose(img);
        MPoly b = fv.compose(img);
        std::optional<MPoly> second;
        if (!f.b_chart)
            second = exact_div(b - var_v() * a, MPoly::variable(2, 0));
        else
            second = exact_div(a - var_u() * b, MPoly::variable(2, 1));
        if (!second)
            throw PoleAcquired("transform_field: a blow-up center was not invariant");
        frames_[fi].field = f.b_chart ? std::make_pair(*second, b) : std::make_pair(a, *second);
    }
    for (auto& n : nodes_) {
        const Frame* ca = nullptr;
        for (const auto& f : frames_)
            if (f.owner == n.id && !f.b_chart) ca = &f;
        const auto& [fu, fv] = *ca->field;
        long nu = -1;
        if (!fu.is_zero()) nu = fu.valuation_in(0);
        if (!fv.is_zero()) {
            long w = fv.valuation_in(0);
            nu = nu < 0 ? w : std::min(nu, w);
        }
        n.nu_delta = nu;
        n.dicritical = !fu.is_zero() && fu.valuation_in(0) == nu;
    }
}

namespace {

// part of a cluster that is born in this frame (on the owner's exceptional divisor)
MPoly born_part(const AffineCluster& c, bool b_chart) {
    if (b_chart) return MPoly(1);  // the far point is rational, clusters never born here
    MPoly g = gcd(c.x_param, c.min_poly);
    if (c.x_param.is_zero()) g = c.min_poly;
    return g.is_constant() ? MPoly(1) : g.monic();
}

}  // namespace

long ResolutionTree::intersection_count(int node_a, int node_b) const {
    long count = 0;
    for (const auto& f : frames_) {
        const MPoly* ea = nullptr;
        const MPoly* eb = nullptr;
        for (const auto& [id, eq] : f.divisors) {
            if (id == node_a) ea = &eq;
            if (id == node_b) eb = &eq;
        }
        if (!ea || !eb) continue;
        PlanarSolution sol = planar_solve(*ea, *eb);
        for (const auto& p : sol.points) {
            bool born = f.owner < 0;
            if (!born && !f.b_chart) born = p.x.is_zero();
            if (!born && f.b_chart) born = p.x.is_zero() && p.y.is_zero();
            if (!born) continue;
            bool blown = false;
            for (const auto& [bu, bv] : f.blown)
                if (bu == p.x && bv == p.y) blown = true;
            if (!blown) count += p.multiplicity;
        }
        for (const auto& c : sol.clusters) {
            if (f.owner < 0) {
                count += c.multiplicity * c.point_count();
                continue;
            }
            MPoly part = born_part(c, f.b_chart);
            if (!part.is_constant()) count += c.multiplicity * part.degree();
        }
    }
    return count;
}

long ResolutionTree::intersection_count_with_curve(int node, const MPoly& curve) const {
    long count = 0;
    for (const auto& f : frames_) {
        const MPoly* ea = nullptr;
        for (const auto& [id, eq] : f.divisors)
            if (id == node) ea = &eq;
        if (!ea) continue;
        MPoly t = curve.compose({f.x_of, f.y_of});
        for (const auto& [id, eq] : f.divisors) {
            while (!t.is_zero()) {
                auto q = exact_div(t, eq);
                if (!q) break;
                t = *q;
            }
        }
        if (t.is_zero() || t.is_constant()) continue;
        PlanarSolution sol = planar_solve(*ea, t);
        for (const auto& p : sol.points) {
            bool born = f.owner < 0;
            if (!born && !f.b_chart) born = p.x.is_zero();
            if (!born && f.b_chart) born = p.x.is_zero() && p.y.is_zero();
            if (!born) continue;
            bool blown = false;
            for (const auto& [bu, bv] : f.blown)
                if (bu == p.x && bv == p.y) blown = true;
            if (!blown) count += p.multiplicity;
        }
        for (const auto& c : sol.clusters) {
            if (f.owner < 0) {
                count += c.multiplicity * c.point_count();
                continue;
            }
            MPoly part = born_part(c, f.b_chart);
            if (!part.is_constant()) count += c.multiplicity * part.degree();
        }
    }
    return count;
}

DivisorClass ResolutionTree::class_of_strict(const std::vector<Integer>& strict_coeffs) const {
    DivisorClass out(size());
    for (int p = 0; p < size(); ++p) {
        out.e[p] += strict_coeffs[p];
        // E_p(strict) = E_p* - sum of E_q* over q proximate to p
    }
    for (const auto& q : nodes_)
        for (int p : q.proximate_to) out.e[q.id] -= strict_coeffs[p];
    return out;
}

DivisorClass ResolutionTree::class_of_h(const Integer& h) const {
    DivisorClass out(size());
    out.h = h;
    return out;
}

DivisorClass ResolutionTree::canonical_class() const {
    DivisorClass out(size());
    out.h = -3;
    for (auto& x : out.e) x = 1;
    return out;
}

std::string ResolutionTree::to_dot(const std::vector<std::string>& extra_labels) const {
    std::ostringstream os;
    os << "graph resolution {\n";
    os << "  C [shape=box,label=\"C\"];\n";
    for (const auto& n : nodes_) {
        os << "  E" << n.id << " [label=\"E" << n.id << "\\nnu_C=" << n.nu_total
           << " m=" << n.mult_proper;
        if (n.nu_delta) os << " nu_delta=" << *n.nu_delta;
        if (static_cast<std::size_t>(n.id) < extra_labels.size() &&
            !extra_labels[n.id].empty())
            os << "\\n" << extra_labels[n.id];
        os << "\"];\n";
    }
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (intersection_count(i, j) > 0) os << "  E" << i << " -- E" << j << ";\n";
    for (int i = 0; i < size(); ++i)
        if (intersection_count_with_curve(i, germ_.equation) > 0)
            os << "  E" << i << " -- C;\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// resolve driver

struct ResolveDriver {
    const VectorField& vf;
    const ResolveOptions& opt;

    struct Candidate {
        int frame;
        Rational u, v;
    };

    bool snc_at(const ResolutionTree::Frame& f, const Rational& pu, const Rational& pv) const {
        // reduced total transform through this point
        MPoly d = squarefree_part(f.germ_proper);
        if (d.is_constant()) d = MPoly::constant(2, Rational(1));
        for (const auto& [id, eq] : f.divisors) d = d * eq;
        long mult = d.multiplicity_at({pu, pv});
        if (mult <= 1) return true;
        if (mult > 2) return false;
        MPoly t = d.translate({pu, pv});
        Rational a(0), b(0), c(0);
        for (const auto& [e, co] : t.terms()) {
            if (total_degree(e) != 2) continue;
            if (e[0] == 2) a = co;
            if (e[0] == 1 && e[1] == 1) b = co;
            if (e[1] == 2) c = co;
        }
        return !(b * b - Rational(4) * a * c).is_zero();
    }

    // non-SNC test over a whole conjugate cluster; true when every point is a
    // simple crossing
    bool snc_on_cluster(const ResolutionTree::Frame& f, const AffineCluster& cl) const {
        MPoly d = squarefree_part(f.germ_proper);
        if (d.is_constant()) d = MPoly::constant(2, Rational(1));
        for (const auto& [id, eq] : f.divisors) d = d * eq;
        MPoly du = d.derivative(0), dv = d.derivative(1);
        MPoly duu = du.derivative(0), duv = du.derivative(1), dvv = dv.derivative(1);
        auto ev = [&](const MPoly& p) {
            return eval_mod_cluster(p, cl.x_param, cl.y_param, cl.min_poly);
        };
        // multiplicity three or more somewhere on the cluster
        MPoly g = gcd(gcd(ev(duu), ev(duv)), gcd(ev(dvv), cl.min_poly));
        g = gcd(g, cl.min_poly);
        if (!g.is_constant()) return false;
        MPoly disc = mod_reduce(ev(duv) * ev(duv) - ev(duu) * ev(dvv), cl.min_poly);
        MPoly h = disc.is_zero() ? cl.min_poly : gcd(disc, cl.min_poly);
        return h.is_constant();
    }

    struct SingularCut {
        MPoly a, b, filter;
    };

    std::vector<SingularCut> singular_pair(const MPoly& g) const {
        // coprime pair cutting out the singular points of a squarefree curve,
        // plus the remaining equation as a filter
        MPoly gu = g.derivative(0), gv = g.derivative(1);
        if (!gu.is_zero() && gcd(g, gu).is_constant()) return {{g, gu, gv}};
        if (!gv.is_zero() && gcd(g, gv).is_constant()) return {{g, gv, gu}};
        if (!gu.is_zero() && !gv.is_zero() && gcd(gu, gv).is_constant()) return {{gu, gv, g}};
        if (gu.is_zero() || gv.is_zero()) return {};  // cylinder over squarefree, smooth
        throw std::logic_error("resolve: cannot isolate curve singularities");
    }

    // candidates in one frame: non-SNC points of the reduced total transform,
    // restricted to points born on this frame's exceptional divisor
    std::vector<Candidate> scan_frame(const ResolutionTree& tree, int fi) const {
        const ResolutionTree::Frame& f = tree.frames_[fi];
        std::vector<Candidate> out;
        if (f.owner < 0) return out;  // base point handled separately

        std::vector<MPoly> comps;
        for (const auto& [id, eq] : f.divisors) comps.push_back(eq);
        MPoly rad = squarefree_part(f.germ_proper);
        bool germ_here = !rad.is_constant();
        if (germ_here) comps.push_back(rad);

        std::vector<std::pair<Rational, Rational>> pts;
        std::vector<AffineCluster> clusters;
        auto take = [&](const PlanarSolution& sol, const MPoly& third) {
            for (const auto& p : sol.points) {
                if (!third.is_zero() && !third.eval({p.x, p.y}).is_zero()) continue;
                pts.emplace_back(p.x, p.y);
            }
            for (const auto& c : sol.clusters) {
                AffineCluster cc = c;
                if (!third.is_zero()) {
                    MPoly val = eval_mod_cluster(third, c.x_param, c.y_param, c.min_poly);
                    MPoly part = val.is_zero() ? c.min_poly : gcd(val, c.min_poly);
                    if (part.is_constant()) continue;
                    cc.min_poly = part.monic();
                    cc.x_param = mod_reduce(c.x_param, cc.min_poly);
                    cc.y_param = mod_reduce(c.y_param, cc.min_poly);
                }
                clusters.push_back(std::move(cc));
            }
        };
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j)
                take(planar_solve(comps[i], comps[j]), MPoly(2));
        if (germ_here && rad.degree() > 1) {
            for (auto& cut : singular_pair(rad)) take(planar_solve(cut.a, cut.b), cut.filter);
        }

        for (const auto& [pu, pv] : pts) {
            bool born = !f.b_chart ? pu.is_zero() : (pu.is_zero() && pv.is_zero());
            if (!born) continue;
            bool blown = false;
            for (const auto& [bu, bv] : f.blown)
                if (bu == pu && bv == pv) blown = true;
            if (blown) continue;
            if (!snc_at(f, pu, pv)) out.push_back({fi, pu, pv});
        }
        for (const auto& c : clusters) {
            MPoly part = born_part(c, f.b_chart);
            if (part.is_constant()) continue;
            AffineCluster cc = c;
            cc.min_poly = part;
            cc.x_param = mod_reduce(c.x_param, part);
            cc.y_param = mod_reduce(c.y_param, part);
            if (!snc_on_cluster(f, cc))
                throw UnsupportedCenter(
                    "resolve: non-rational center needed (conjugate cluster is not a "
                    "simple crossing)");
        }
        return out;
    }

    ResolutionTree run(const Germ& germ) const {
        ResolutionTree tree(germ);
        if (!vf.p().eval({germ.base_x, germ.base_y}).is_zero() ||
            !vf.q().eval({germ.base_x, germ.base_y}).is_zero())
            throw std::invalid_argument(
                "resolve: germ base point is not a singular point of the foliation");
        tree.attach_field(vf);
        bool invariant = verify_invariant(vf, germ.equation).has_value();

        // the base point itself
        bool blow_base = !snc_at(tree.frames_[0], Rational(0), Rational(0)) || invariant;
        int steps = 0;
        if (blow_base) {
            tree.blowup_in_frame(0, Rational(0), Rational(0));
            ++steps;
        }
        while (true) {
            std::vector<Candidate> cands;
            for (std::size_t fi = 1; fi < tree.frames_.size(); ++fi) {
                auto c = scan_frame(tree, static_cast<int>(fi));
                cands.insert(cands.end(), c.begin(), c.end());
            }
            if (cands.empty()) {
                tree.resolved = true;
                break;
            }
            std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
                if (a.frame != b.frame) return a.frame < b.frame;
                if (a.u != b.u) return a.u < b.u;
                return a.v < b.v;
            });
            const Candidate& c = cands.front();
            const auto& fr = tree.frames_[c.frame];
            const auto& [fu, fv] = *fr.field;
            if (!fu.eval({c.u, c.v}).is_zero() || !fv.eval({c.u, c.v}).is_zero()) {
                tree.halt_reason =
                    "non-SNC center is not a singular point of the transformed field "
                    "(dicritical-like); stopping to avoid a pole";
                break;
            }
            if (++steps > opt.step_cap) {
                tree.step_cap_reached = true;
                tree.halt_reason = "step cap reached";
                break;
            }
            tree.blowup_in_frame(c.frame, c.u, c.v);
        }
        return tree;
    }
};

Resolution resolve(const VectorField& vf, const std::vector<Germ>& germs,
                   const ResolveOptions& opt) {
    Resolution out;
    ResolveDriver driver{vf, opt};
    std::vector<std::future<ResolutionTree>> jobs;
    for (const auto& g : germs)
        jobs.push_back(std::async(std::launch::async, [&driver, g] { return driver.run(g); }));
    for (auto& j : jobs) {
        out.trees.push_back(j.get());
        if (!out.trees.back().resolved) out.completed = false;
    }
    return out;
}

DiscrepancyReport germ_discrepancies(const Resolution& res) {
    DiscrepancyReport rep;
    rep.big_s = 0;
    for (const auto& tree : res.trees) {
        if (!tree.resolved)
            throw std::invalid_argument("discrepancies: unresolved tree");
        if (tree.size() == 0) {
            rep.n.push_back(std::nullopt);
            continue;
        }
        long n = 0;
        bool first = true;
        for (int i = 0; i < tree.size(); ++i) {
            const auto& nd = tree.node(i);
            if (!nd.nu_delta)
                throw std::invalid_argument("discrepancies: field orders missing");
            long v = nd.nu_total - *nd.nu_delta;
            if (first || v > n) n = v;
            first = false;
        }
        rep.n.push_back(n);
        if (n >= 1) rep.big_s += Integer(n - 1) * Integer(n - 2);
    }
    return rep;
}

ChernReport chern_report(const ResolutionTree& tree, int e, int d) {
    const int k = tree.size();
    std::vector<Integer> ones(k, Integer(1)), nu(k), z(k);
    for (int i = 0; i < k; ++i) {
        nu[i] = tree.node(i).nu_total;
        if (!tree.node(i).nu_delta)
            throw std::invalid_argument("chern_report: field orders missing");
        z[i] = *tree.node(i).nu_delta;
    }
    DivisorClass e_red = tree.class_of_strict(ones);
    DivisorClass big_i = tree.class_of_strict(nu);
    DivisorClass big_z = tree.class_of_strict(z);
    ChernReport rep{DivisorClass(k), DivisorClass(k), {}};
    rep.log_cotangent_c1 = tree.class_of_h(-3) + e_red + (tree.class_of_h(e) - big_i) + e_red;
    rep.difference =
        tree.class_of_h(Integer(e) - d - 3) + (Integer(2) * e_red + big_z - big_i);
    rep.difference_strict.resize(k);
    for (int i = 0; i < k; ++i) rep.difference_strict[i] = Integer(2) + z[i] - nu[i];
    return rep;
}

Integer genus_by_valuations(const ResolutionTree& tree, int d, int e_component,
                            const MPoly& component) {
    std::vector<long> nu_c = tree.total_valuations(component);
    Integer acc = Integer(d) * e_component;
    for (int i = 0; i < tree.size(); ++i) {
        if (!tree.node(i).nu_delta)
            throw std::invalid_argument("genus: field orders missing");
        acc -= Integer(*tree.node(i).nu_delta) * nu_c[i];
    }
    for (int i = 0; i < tree.size(); ++i) {
        for (int j = i + 1; j < tree.size(); ++j) {
            long w = tree.intersection_count(i, j);
            if (w == 0) continue;
            acc += Integer(w) * (Integer(*tree.node(i).nu_delta) * nu_c[j] +
                                 Integer(*tree.node(j).nu_delta) * nu_c[i]);
        }
    }
    return acc;
}

Integer genus_by_adjunction(const ResolutionTree& tree, int e_component,
                            const MPoly& component) {
    std::vector<long> mul = tree.proper_multiplicities(component);
    DivisorClass c = tree.class_of_h(e_component);
    for (int i = 0; i < tree.size(); ++i) c.e[i] = Integer(-mul[i]);  // strict transform
    DivisorClass k = tree.canonical_class();
    return c.dot(c + k);
}

}  // namespace folium
