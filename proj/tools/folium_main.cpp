// Command-line front end: parse a field specification, run the requested
// analysis, and print an exact machine-readable report.
//
// Exit codes: 0 success, 1 error, 2 a budget was exhausted (Indeterminate).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "folium/parse.hpp"
#include "folium/report.hpp"

namespace {

using namespace folium;

struct FieldSpec {
    std::string p_text, q_text;
    std::vector<std::string> germ_texts;
    int max_degree = 2;
    long groebner_budget = 50000;
    long extactic_budget = 2000000;
    int step_cap = 64;
};

Germ parse_germ(const std::string& text) {
    // "(x0, y0): expression"
    auto open = text.find('(');
    auto comma = text.find(',');
    auto close = text.find(')');
    auto colon = text.find(':');
    if (open == std::string::npos || comma == std::string::npos ||
        close == std::string::npos || colon == std::string::npos || colon < close)
        throw std::invalid_argument("germ syntax: expected \"(x0, y0): polynomial\"");
    Rational x0(text.substr(open + 1, comma - open - 1));
    Rational y0(text.substr(comma + 1, close - comma - 1));
    MPoly eq = parse_poly(text.substr(colon + 1), kAffineVars);
    return Germ{x0, y0, eq};
}

void load_spec_file(const std::string& path, FieldSpec& spec) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "P") spec.p_text = val;
        else if (key == "Q") spec.q_text = val;
        else if (key == "germ") spec.germ_texts.push_back(val);
        else if (key == "max-degree") spec.max_degree = std::stoi(val);
        else if (key == "groebner-budget") spec.groebner_budget = std::stol(val);
        else if (key == "extactic-budget") spec.extactic_budget = std::stol(val);
        else if (key == "step-cap") spec.step_cap = std::stoi(val);
        else throw std::invalid_argument("unknown key '" + key + "' in input file");
    }
}

VectorField make_field(const FieldSpec& spec) {
    if (spec.p_text.empty() && spec.q_text.empty())
        throw std::invalid_argument("no vector field given (need --p/--q or an input file)");
    MPoly p = spec.p_text.empty() ? MPoly(2) : parse_poly(spec.p_text, kAffineVars);
    MPoly q = spec.q_text.empty() ? MPoly(2) : parse_poly(spec.q_text, kAffineVars);
    return VectorField(p, q);
}

Json echo_spec(const FieldSpec& spec) {
    Json j;
    j["P"] = spec.p_text;
    j["Q"] = spec.q_text;
    if (!spec.germ_texts.empty()) j["germs"] = spec.germ_texts;
    return j;
}

int emit(const Json& body, bool as_json, bool indeterminate, double elapsed_ms) {
    Json full;
    full["report"] = body;
    full["timing_ms"] = elapsed_ms;
    if (as_json)
        std::cout << full.dump(2) << "\n";
    else
        std::cout << render_text(body) << "# timing_ms = " << elapsed_ms << "\n";
    return indeterminate ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of planar polynomial vector fields"};
    app.require_subcommand(1);

    FieldSpec spec;
    bool as_json = false;
    std::string input_file;
    app.add_option("--input", input_file, "key-value specification file");
    app.add_flag("--json", as_json, "emit the report as JSON");

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", spec.p_text, "dx/dt component P(x,y)");
        cmd->add_option("--q", spec.q_text, "dy/dt component Q(x,y)");
        cmd->add_option("--germ", spec.germ_texts, "germ \"(x0, y0): poly\" (repeatable)");
        cmd->add_option("--groebner-budget", spec.groebner_budget, "elimination step budget");
        cmd->add_option("--extactic-budget", spec.extactic_budget, "determinant term budget");
        cmd->add_option("--step-cap", spec.step_cap, "blow-ups per germ");
    };

    auto* c_singular = app.add_subcommand("singular", "singular scheme of the foliation");
    add_field_opts(c_singular);

    auto* c_inv = app.add_subcommand("invariants", "search invariant algebraic curves");
    add_field_opts(c_inv);
    c_inv->add_option("--max-degree", spec.max_degree, "curve degree bound");

    auto* c_fi = app.add_subcommand("first-integral", "rational first integral tests");
    add_field_opts(c_fi);
    c_fi->add_option("--max-degree", spec.max_degree, "section degree bound");

    auto* c_res = app.add_subcommand("resolve", "resolve germs by quadratic transforms");
    add_field_opts(c_res);
    std::string dot_file;
    c_res->add_option("--dot", dot_file, "write the resolution graph in DOT format");

    auto* c_bounds = app.add_subcommand("bounds", "evaluate the degree and cycle bounds");
    add_field_opts(c_bounds);
    int bound_d = -1;
    std::string n_list_text;
    c_bounds->add_option("--d", bound_d, "pole-divisor degree");
    c_bounds->add_option("--n-list", n_list_text, "comma-separated discrepancies");

    auto* c_verify = app.add_subcommand("verify", "verify one invariant curve");
    add_field_opts(c_verify);
    std::string verify_poly;
    c_verify->add_option("-f,--curve", verify_poly, "candidate polynomial")->required();

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         started)
            .count();
    };

    try {
        if (!input_file.empty()) load_spec_file(input_file, spec);
        Json body;
        body["input"] = echo_spec(spec);
        bool indeterminate = false;

        if (app.got_subcommand(c_singular)) {
            VectorField vf = make_field(spec);
            body["singular_scheme"] = to_json(singular_points(vf));
        } else if (app.got_subcommand(c_inv)) {
            VectorField vf = make_field(spec);
            CurveSearch cs = invariant_curve_search(vf, spec.max_degree, spec.groebner_budget);
            Json lst = Json::array();
            for (const auto& c : cs.curves) lst.push_back(to_json(c));
            body["invariant_curves"] = lst;
            body["complete"] = cs.complete;
            if (!cs.note.empty()) body["note"] = cs.note;
            indeterminate = !cs.complete;
            auto fi = darboux_combination(vf, cs.curves);
            if (fi) body["darboux_first_integral"] = to_json(*fi);
        } else if (app.got_subcommand(c_fi)) {
            VectorField vf = make_field(spec);
            Json per_degree = Json::array();
            bool found = false;
            for (int e = 1; e <= spec.max_degree; ++e) {
                Json row;
                row["degree"] = e;
                ExtacticVerdict ev = extactic_test(vf, e, spec.extactic_budget);
                row["extactic"] = ev.indeterminate
                                      ? "indeterminate"
                                      : (ev.integral_exists ? "integral" : "no integral");
                PencilSearch ps = pencil_exists(vf, e, spec.groebner_budget);
                row["pencil"] = ps.indeterminate ? "indeterminate"
                                                 : (ps.exists ? "integral" : "no integral");
                if (ev.indeterminate || ps.indeterminate) indeterminate = true;
                else row["agreement"] = ev.integral_exists == ps.exists;
                if (ps.witness) {
                    row["f"] = poly_str(ps.witness->first, kAffineVars);
                    row["g"] = poly_str(ps.witness->second, kAffineVars);
                    found = found || ps.exists;
                }
                per_degree.push_back(row);
            }
            body["per_degree"] = per_degree;
            body["rational_first_integral_found"] = found;
        } else if (app.got_subcommand(c_res)) {
            VectorField vf = make_field(spec);
            std::vector<Germ> germs;
            for (const auto& g : spec.germ_texts) germs.push_back(parse_germ(g));
            if (germs.empty()) throw std::invalid_argument("resolve: no germs given");
            Resolution res = resolve(vf, germs, {spec.step_cap});
            Json trees = Json::array();
            for (const auto& t : res.trees) trees.push_back(to_json(t));
            body["trees"] = trees;
            DiscrepancyReport rep = germ_discrepancies(res);
            Json ns = Json::array();
            for (const auto& n : rep.n) ns.push_back(n ? Json(*n) : Json(nullptr));
            body["n_per_germ"] = ns;
            body["S"] = rep.big_s.get_str();
            indeterminate = !res.completed;
            if (!dot_file.empty()) {
                std::ofstream out(dot_file);
                for (const auto& t : res.trees) out << t.to_dot();
            }
        } else if (app.got_subcommand(c_bounds)) {
            std::vector<long> n_list;
            if (!n_list_text.empty()) {
                std::istringstream is(n_list_text);
                std::string tok;
                while (std::getline(is, tok, ',')) n_list.push_back(std::stol(tok));
            }
            int d = bound_d;
            if (!spec.germ_texts.empty()) {
                VectorField vf = make_field(spec);
                std::vector<Germ> germs;
                for (const auto& g : spec.germ_texts) germs.push_back(parse_germ(g));
                Resolution res = resolve(vf, germs, {spec.step_cap});
                indeterminate = !res.completed;
                DiscrepancyReport rep = germ_discrepancies(res);
                for (const auto& n : rep.n)
                    if (n) n_list.push_back(*n);
                if (d < 0) d = vf.pole_degree();
                Json ns = Json::array();
                for (long n : n_list) ns.push_back(n);
                body["derived_n_list"] = ns;
            }
            if (d < 0) throw std::invalid_argument("bounds: need --d or germ data");
            BoundReport rep = cor6_bound(d, n_list);
            body["bounds"] = to_json(rep);
            body["seven_terms_identity"] = harnack_limit_cycle_identity(d, rep.big_s);
        } else if (app.got_subcommand(c_verify)) {
            VectorField vf = make_field(spec);
            MPoly f = parse_poly(verify_poly, kAffineVars);
            auto c = verify_invariant(vf, f);
            body["invariant"] = c.has_value();
            if (c) body["curve"] = to_json(*c);
        }
        return emit(body, as_json, indeterminate, elapsed());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
