#include "folium/bounds.hpp"

#include <stdexcept>

#include "folium/matrix.hpp"

namespace folium {

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(radicand)) {
    if (r_ < 0) throw std::invalid_argument("surd: negative radicand");
    if (b_.is_zero()) {
        r_ = 0;
        return;
    }
    auto sq = squarefree_decompose(r_);
    if (!sq) throw std::invalid_argument("surd: radicand too large to normalize");
    auto [s, f] = *sq;
    b_ *= Rational(s);
    r_ = f;
    if (r_ == 0) {
        b_ = Rational(0);
    } else if (r_ == 1) {
        a_ += b_;
        b_ = Rational(0);
        r_ = 0;
    }
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.r_ != 0 && y.r_ != 0 && x.r_ != y.r_)
        throw std::invalid_argument("surd: incompatible radicands");
    Integer r = x.r_ != 0 ? x.r_ : y.r_;
    return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, r);
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.r_ != 0 && y.r_ != 0 && x.r_ != y.r_)
        throw std::invalid_argument("surd: incompatible radicands");
    Integer r = x.r_ != 0 ? x.r_ : y.r_;
    return QuadraticSurd(x.a_ - y.a_, x.b_ - y.b_, r);
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.r_ != 0 && y.r_ != 0 && x.r_ != y.r_)
        throw std::invalid_argument("surd: incompatible radicands");
    Integer r = x.r_ != 0 ? x.r_ : y.r_;
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 r + (a1 b2 + a2 b1) s
    return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(r),
                         x.a_ * y.b_ + x.b_ * y.a_, r);
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.r_ == y.r_;
}

namespace {

// sign of a + b*sqrt(r), exact
int surd_sign(const Rational& a, const Rational& b, const Integer& r) {
    if (b.is_zero()) return a.sign();
    if (a.is_zero()) return b.sign();
    if (a.sign() == b.sign()) return a.sign();
    // compare a^2 with b^2 r; the sign of the larger magnitude wins
    Rational lhs = a * a, rhs = b * b * Rational(r);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? a.sign() : b.sign();
}

}  // namespace

bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.r_ != 0 && y.r_ != 0 && x.r_ != y.r_)
        throw std::invalid_argument("surd: incompatible radicands");
    Integer r = x.r_ != 0 ? x.r_ : y.r_;
    return surd_sign(x.a_ - y.a_, x.b_ - y.b_, r) < 0;
}

Integer QuadraticSurd::strict_ceiling() const {
    if (is_rational()) {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), a_.num().get_mpz_t(), a_.den().get_mpz_t());
        return fl + 1;
    }
    // binary search on integers around the rational part
    Integer lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), a_.num().get_mpz_t(), a_.den().get_mpz_t());
    Integer width = 2;
    Rational babs = b_.abs();
    while (Rational(width) < babs * Rational(r_) + Rational(1)) width *= 2;
    hi = lo + width;
    lo = lo - width;
    // invariant: value < hi, value >= lo
    while (hi - lo > 1) {
        Integer mid = (hi + lo) / 2;
        if (*this < QuadraticSurd(Rational(mid))) hi = mid;
        else lo = mid;
    }
    return *this < QuadraticSurd(Rational(lo)) ? lo : hi;
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt(" + r_.get_str() + ")";
}

Integer discrepancy_sum(const std::vector<long>& n_list) {
    Integer s = 0;
    for (long n : n_list)
        if (n >= 1) s += Integer(n - 1) * Integer(n - 2);
    return s;
}

BoundReport cor6_bound(int d, const std::vector<long>& n_list) {
    if (d < 0) throw std::invalid_argument("cor6_bound: d < 0");
    BoundReport rep;
    rep.d = d;
    rep.big_s = discrepancy_sum(n_list);
    rep.cor6_value =
        QuadraticSurd(Rational(d) + Rational(3, 2), Rational(1, 2), 9 + 4 * rep.big_s);
    rep.cor6_threshold = rep.cor6_value.strict_ceiling();
    rep.carnicer = carnicer_bound(d);
    rep.limit_cycle_value = limit_cycle_bound(d, rep.big_s);
    Integer t = rep.cor6_threshold;
    rep.harnack_of_threshold = (t - 1) * (t - 2) / 2 + 1;
    return rep;
}

Integer carnicer_bound(int d) {
    if (d < 0) throw std::invalid_argument("carnicer_bound: d < 0");
    return Integer(d) + 3;
}

Integer harnack(int e) {
    if (e < 1) throw std::invalid_argument("harnack: e < 1");
    return Integer(e - 1) * Integer(e - 2) / 2 + 1;
}

QuadraticSurd limit_cycle_bound(int d, const Integer& big_s) {
    if (d < 0 || big_s < 0) throw std::invalid_argument("limit_cycle_bound: negative input");
    return QuadraticSurd(Rational(Integer(d) * d, 2) + Rational(big_s, 2) + Rational(2),
                         Rational(Integer(d), 2), 9 + 4 * big_s);
}

bool harnack_limit_cycle_identity(int d, const Integer& big_s) {
    QuadraticSurd e(Rational(d) + Rational(3, 2), Rational(1, 2), 9 + 4 * big_s);
    QuadraticSurd one{Rational(1)}, two{Rational(2)};
    QuadraticSurd harnack_at_bound =
        (e - one) * (e - two) * QuadraticSurd(Rational(1, 2)) + one;
    return harnack_at_bound == limit_cycle_bound(d, big_s);
}

namespace {

// linear conditions on the coefficients of a degree-q curve imposed by a
// required valuation along one node's exceptional divisor (or at the base point)
void append_conditions(std::vector<std::vector<Rational>>& data,
                       const ResolutionTree& tree, int q, int node, long k) {
    if (k <= 0) return;
    std::vector<Exps> mons;
    for (int i = 0; i <= q; ++i)
        for (int j = 0; i + j <= q; ++j) mons.push_back(Exps{i, j});
    auto [x_of, y_of] =
        node < 0 ? tree.base_chart_substitution() : tree.chart_substitution(node);

    // pull back each monomial; conditions: coefficients of u^a v^b with a < k
    // (node >= 0) or total degree < k (base point)
    std::map<Exps, std::vector<Rational>, GrevlexLess> cond;
    for (std::size_t mi = 0; mi < mons.size(); ++mi) {
        MPoly pull = MPoly::monomial(mons[mi], Rational(1)).compose({x_of, y_of});
        for (const auto& [e, c] : pull.terms()) {
            bool counts = node < 0 ? (total_degree(e) < k) : (e[0] < k);
            if (!counts) continue;
            auto& row = cond[e];
            if (row.empty()) row.assign(mons.size(), Rational(0));
            row[mi] += c;
        }
    }
    for (auto& [e, row] : cond) data.push_back(row);
}

std::vector<std::vector<Rational>> nullspace_of_conditions(
    const ResolutionTree& tree, int q, const std::vector<PencilRequirement>& reqs) {
    std::vector<Exps> mons;
    for (int i = 0; i <= q; ++i)
        for (int j = 0; i + j <= q; ++j) mons.push_back(Exps{i, j});
    std::vector<std::vector<Rational>> data;
    for (const auto& r : reqs) {
        if (r.node >= tree.size())
            throw std::invalid_argument("theorem5_pencil: requirement at a point not in the tree");
        append_conditions(data, tree, q, r.node, r.required);
    }
    RatMatrix m(static_cast<int>(std::max<std::size_t>(data.size(), 1)),
                static_cast<int>(mons.size()));
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = data[i][j];
    return solve_linear(m).nullspace;
}

MPoly from_coefficient_vector(int q, const std::vector<Rational>& v) {
    std::vector<Exps> mons;
    for (int i = 0; i <= q; ++i)
        for (int j = 0; i + j <= q; ++j) mons.push_back(Exps{i, j});
    MPoly f(2);
    for (std::size_t i = 0; i < mons.size(); ++i)
        f += MPoly::monomial(mons[i], v[i]);
    return f;
}

}  // namespace

std::optional<std::pair<MPoly, MPoly>> theorem5_pencil(
    const ResolutionTree& tree, int q, const std::vector<PencilRequirement>& reqs) {
    if (q < 0) throw std::invalid_argument("theorem5_pencil: negative degree");
    auto basis = nullspace_of_conditions(tree, q, reqs);
    if (basis.size() < 2) return std::nullopt;
    return std::make_pair(from_coefficient_vector(q, basis[0]),
                          from_coefficient_vector(q, basis[1]));
}

long pencil_solution_dimension(const ResolutionTree& tree, int q,
                               const std::vector<PencilRequirement>& reqs) {
    return static_cast<long>(nullspace_of_conditions(tree, q, reqs).size());
}

DimensionCount dimension_count(int e, int d, const std::vector<long>& n_list) {
    if (e <= d + 3) throw std::invalid_argument("dimension_count: requires e > d + 3");
    DimensionCount out;
    Integer adj = 0;
    for (long n : n_list)
        if (n >= 2) adj += binomial(n - 1, 2);
    out.expected_dimension = binomial(e - d - 1, 2) - 1 - adj;
    Integer ee = Integer(d) + 4;
    while (binomial(static_cast<long>(ee.get_si()) - d - 1, 2) - 1 - adj < 1) ee += 1;
    out.least_e_with_pencil = ee;
    return out;
}

}  // namespace folium
