#include "folium/report.hpp"

#include <sstream>

#include "folium/parse.hpp"

namespace folium {

const std::vector<std::string> kAffineVars{"x", "y"};
static const std::vector<std::string> kParamVar{"t"};

std::string rational_str(const Rational& r) { return r.str(); }

Json to_json(const SingularScheme& s) {
    Json j;
    j["d"] = s.d;
    j["expected_total"] = singular_scheme_degree(s.d);
    j["total"] = s.total_degree;
    Json pts = Json::array();
    for (const auto& p : s.rational_points) {
        Json q;
        q["point"] = "[" + rational_str(p.coords[0]) + ":" + rational_str(p.coords[1]) + ":" +
                     rational_str(p.coords[2]) + "]";
        q["multiplicity"] = p.multiplicity;
        pts.push_back(q);
    }
    j["rational_points"] = pts;
    Json cls = Json::array();
    for (const auto& c : s.clusters) {
        Json q;
        q["chart"] = c.chart == 2 ? "Z=1" : (c.chart == 1 ? "Y=1" : "X=1");
        q["min_poly"] = poly_str(c.min_poly, kParamVar);
        q["first_coordinate"] = poly_str(c.first_param, kParamVar);
        q["second_coordinate"] = poly_str(c.second_param, kParamVar);
        q["multiplicity_per_point"] = c.multiplicity;
        q["conjugate_points"] = c.point_count();
        q["irreducible_certified"] = c.certified_irreducible;
        cls.push_back(q);
    }
    j["clusters"] = cls;
    return j;
}

Json to_json(const InvariantCurve& c) {
    Json j;
    j["f"] = poly_str(c.f, kAffineVars);
    j["cofactor"] = poly_str(c.cofactor, kAffineVars);
    j["degree"] = c.degree;
    j["cofactor_within_generic_bound"] = c.cofactor_within_generic_bound;
    return j;
}

Json to_json(const FirstIntegral& fi) {
    Json j;
    j["kind"] = fi.kind == FirstIntegral::Kind::RationalPencil ? "rational" : "darboux_product";
    Json comps = Json::array();
    for (const auto& [f, e] : fi.components) {
        Json q;
        q["factor"] = poly_str(f, kAffineVars);
        q["exponent"] = e;
        comps.push_back(q);
    }
    j["components"] = comps;
    return j;
}

Json to_json(const ResolutionTree& t) {
    Json j;
    j["base_point"] = "(" + rational_str(t.germ().base_x) + ", " +
                      rational_str(t.germ().base_y) + ")";
    j["equation"] = poly_str(t.germ().equation, kAffineVars);
    j["resolved"] = t.resolved;
    j["step_cap_reached"] = t.step_cap_reached;
    if (!t.halt_reason.empty()) j["halt_reason"] = t.halt_reason;
    Json nodes = Json::array();
    for (int i = 0; i < t.size(); ++i) {
        const auto& n = t.node(i);
        Json q;
        q["id"] = n.id;
        q["parent"] = n.parent;
        q["depth"] = n.depth;
        q["center"] = "(" + rational_str(n.center_u) + ", " + rational_str(n.center_v) + ")";
        q["nu_total"] = n.nu_total;
        q["mult_proper"] = n.mult_proper;
        if (n.nu_delta) {
            q["nu_delta"] = *n.nu_delta;
            q["dicritical"] = n.dicritical;
        }
        nodes.push_back(q);
    }
    j["nodes"] = nodes;
    return j;
}

Json to_json(const BoundReport& b) {
    Json j;
    j["d"] = b.d;
    j["S"] = b.big_s.get_str();
    j["cor6_value"] = b.cor6_value.str();
    j["cor6_threshold"] = b.cor6_threshold.get_str();
    j["carnicer"] = b.carnicer.get_str();
    j["limit_cycle_value"] = b.limit_cycle_value.str();
    j["harnack_of_threshold"] = b.harnack_of_threshold.get_str();
    return j;
}

namespace {

void render(const Json& j, std::ostringstream& os, int indent) {
    std::string pad(indent * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n";
                render(it.value(), os, indent + 1);
            } else {
                os << pad << it.key() << " = " << (it.value().is_string()
                                                       ? it.value().get<std::string>()
                                                       : it.value().dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        int k = 0;
        for (const auto& v : j) {
            os << pad << "- [" << k++ << "]\n";
            render(v, os, indent + 1);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, os, 0);
    return os.str();
}

}  // namespace folium
