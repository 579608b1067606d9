#include "chroma_cli/cli.hpp"

#include "chroma/doubles.hpp"
#include "chroma/errors.hpp"
#include "chroma/triangular.hpp"
#include "chroma/weyl.hpp"
#include "chroma_cli/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace chroma::cli {

namespace {

// Raised for a format the command cannot produce.
struct UsageError : Error {
    using Error::Error;
};

struct Outcome {
    bool ok = true;
    std::string text;
};

json axioms_to_json(const AxiomReport& r) {
    json out = json::array();
    for (auto& a : r.results) out.push_back(json{{"name", a.name}, {"pass", a.pass}, {"counterexample", a.counterexample}});
    return out;
}

json antipode_to_json(const AntipodeReport& r) {
    json out{{"exists", r.exists},
             {"sides_agree", r.sides_agree},
             {"antimultiplicative", r.antimultiplicative},
             {"anticomultiplicative", r.anticomultiplicative},
             {"bijective", r.bijective},
             {"counterexample", r.counterexample},
             {"ok", r.ok()}};
    if (r.exists) {
        json cols = json::array();
        for (auto& c : r.antipode) cols.push_back(combo_to_json(c));
        out["columns"] = cols;
    }
    return out;
}

json elements_to_json(const std::vector<Element>& v) {
    json out = json::array();
    for (auto& x : v) out.push_back(element_to_json(x));
    return out;
}

std::string finish(json report, const std::string& command) {
    report["schema"] = 1;
    report["command"] = command;
    return report.dump(2) + "\n";
}

void need_format(const JobSpec& job, std::initializer_list<const char*> allowed) {
    for (auto* f : allowed)
        if (job.format == f) return;
    throw UsageError("format " + job.format + " is not available for " + job.command);
}

Outcome cmd_orbit(const JobSpec& job, const json& in) {
    need_format(job, {"json", "text", "dot"});
    Datum e = datum_from_json(in);
    OrbitGraph orbit = weyl_orbit(e, job.max_nodes);
    bool consistent = check_consistent_coloring(orbit);
    std::vector<Diagram> gen, col;
    for (auto& n : orbit.nodes) {
        gen.push_back(generalized_diagram(n.q()));
        col.push_back(colored_diagram(n));
    }
    std::size_t n_gen = e.rank() <= 10 ? distinct_diagrams(gen).size() : 0;
    std::size_t n_col = e.rank() <= 10 ? distinct_diagrams(col).size() : 0;
    Outcome out{consistent, {}};
    if (job.format == "dot") {
        std::ostringstream s;
        s << "digraph orbit {\n";
        for (std::size_t i = 0; i < orbit.nodes.size(); ++i) s << "  n" << i << ";\n";
        for (auto& ed : orbit.edges) s << "  n" << ed.from << " -> n" << ed.to << " [label=\"s" << ed.vertex + 1 << "\"];\n";
        s << "}\n";
        out.text = s.str();
    } else if (job.format == "text") {
        std::ostringstream s;
        s << "nodes: " << orbit.nodes.size() << (orbit.truncated ? " (truncated)" : "") << "\n";
        s << "edges: " << orbit.edges.size() << "\n";
        s << "degenerate reflections: " << orbit.degenerate_reflections << "\n";
        s << "consistent coloring: " << (consistent ? "yes" : "no") << "\n";
        s << "distinct generalized diagrams: " << n_gen << "\n";
        s << "distinct colored diagrams: " << n_col << "\n";
        out.text = s.str();
    } else {
        json nodes = json::array(), edges = json::array();
        for (auto& n : orbit.nodes) nodes.push_back(datum_to_json(n));
        for (auto& ed : orbit.edges) edges.push_back(json{{"from", ed.from}, {"vertex", ed.vertex}, {"to", ed.to}});
        out.text = finish(json{{"nodes", nodes},
                               {"edges", edges},
                               {"truncated", orbit.truncated},
                               {"degenerate_reflections", orbit.degenerate_reflections},
                               {"consistent_coloring", consistent},
                               {"distinct_generalized", n_gen},
                               {"distinct_colored", n_col}},
                          job.command);
    }
    return out;
}

Outcome cmd_diagram(const JobSpec& job, const json& in) {
    need_format(job, {"json", "text", "dot"});
    Datum e = datum_from_json(in);
    Diagram g = generalized_diagram(e.q()), c = colored_diagram(e);
    if (job.format == "dot") return {true, emit_dot(g) + emit_dot(c)};
    if (job.format == "text") return {true, "generalized: " + render_text(g) + "colored: " + render_text(c)};
    return {true, finish(json{{"generalized", diagram_to_json(g)}, {"colored", diagram_to_json(c)}}, job.command)};
}

Outcome cmd_check_datum(const JobSpec& job, const json& in) {
    need_format(job, {"json"});
    Datum e = datum_from_json(in);
    bool round_trip = untwist(twist(e.q(), e.t(), e.beta()), e.t(), e.beta()) == e.q();
    bool symmetric = true;
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < e.rank(); ++j) symmetric = symmetric && e.qt()[i][j] == e.qt()[j][i];
    json xi = json::array(), cartan = json::array();
    for (auto& x : e.xi()) xi.push_back(x.r);
    for (std::size_t p = 0; p < e.rank(); ++p) {
        auto row = cartan_row(e.q(), p);
        cartan.push_back(row ? json(*row) : json(nullptr));
    }
    json r = datum_to_json(e);
    r["qt"] = matrix_to_json(e.qt());
    r["xi"] = xi;
    r["rank"] = e.rank();
    r["twisted_symmetric"] = symmetric;
    r["round_trip"] = round_trip;
    r["cartan"] = cartan;
    r["commutation_factor"] = e.beta().is_commutation_factor();
    return {round_trip, finish(r, job.command)};
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Outcome cmd_check_double(const JobSpec& job, const json& in) {
    need_format(job, {"json", "text"});
    Datum e = datum_from_json(in);
    bool central = in.contains("central_quotient") && in.at("central_quotient").get<bool>();
    DoublePresentation p = presentation(e, central);
    if (job.format == "text") return {true, p.to_text()};
    auto rs = retractions(e);
    long long colored = 0;
    json rj = json::array();
    for (auto& r : rs) {
        if (r.color) ++colored;
        rj.push_back(json{{"images", elements_to_json(r.images)}, {"pi_L", elements_to_json(r.pi_L)}, {"color", r.color}});
    }
    SingleCopyReport sc = single_copy_color_check(e);
    json scj{{"symmetric", sc.symmetric}};
    if (sc.retraction_exists) scj["retraction_exists"] = *sc.retraction_exists;
    if (sc.witness) scj["witness"] = elements_to_json(*sc.witness);
    if (sc.retraction_count) scj["retraction_count"] = *sc.retraction_count;
    if (sc.color) scj["color"] = *sc.color;
    return {true, finish(json{{"presentation_digest", hex64(p.digest())},
                              {"generators", p.generators},
                              {"retraction_count", rs.size()},
                              {"color_retraction_count", colored},
                              {"retractions", rj},
                              {"single_copy", scj}},
                         job.command)};
}

Outcome cmd_check_extension(const JobSpec& job, const json& in) {
    need_format(job, {"json"});
    ExtensionInput x = extension_from_json(in);
    const MatchedPair& mp = x.mp;
    check_shape(mp, x.sigma, x.tau);
    json r;
    bool ok = true;
    bool valid = validate_matched_pair(mp);
    r["matched_pair"] = valid;
    ok = ok && valid;
    if (valid) {
        bool sc = sigma_is_cocycle(mp, x.sigma), tc = tau_is_cocycle(mp, x.tau), nz = cocycles_normalized(mp, x.sigma, x.tau);
        r["sigma_cocycle"] = sc;
        r["tau_cocycle"] = tc;
        r["normalized"] = nz;
        Bicrossed b = build_bicrossed(mp, x.sigma, x.tau);
        r["kac"] = b.kac;
        r["dim"] = mp.dim();
        bool graded = x.grading_beta && x.z;
        bool plain_ok = sc && tc && nz && b.kac;
        if (b.kac) {
            AxiomReport ax = check_axioms(b.algebra, Mode::plain);
            AntipodeReport an = solve_antipode(b.algebra, Mode::plain);
            r["axioms"] = axioms_to_json(ax);
            r["antipode"] = an.ok();
            plain_ok = plain_ok && ax.all_pass() && an.ok();
        }
        if (!graded) ok = ok && plain_ok;
        if (graded) {
            if (!mp.ract_trivial()) throw RactNotTrivial();
            bool vz = validate_z(mp, x.grading_beta->group(), *x.z);
            Thm317Report t = thm317_check(mp, x.sigma, x.tau, *x.z, *x.grading_beta, true);
            r["graded"] = json{{"z_valid", vz},
                               {"z_cocycle", t.z_cocycle},
                               {"compatibility", t.compatibility},
                               {"tau_cocycle", t.tau_cocycle},
                               {"holds", t.holds},
                               {"checked_hopf", t.checked_hopf},
                               {"color_hopf", t.color_hopf},
                               {"agrees", t.agrees}};
            ok = ok && sc && nz && t.holds && t.agrees;
        }
        if (x.action) {
            ColorPairReport c = check_color_matched_pair_def(mp, *x.action);
            r["action"] = json{{"cond_i", c.cond_i},
                               {"cond_ii", c.cond_ii},
                               {"cond_iii", c.cond_iii},
                               {"color_pair", c.color_pair},
                               {"direct_color", c.direct_color},
                               {"agrees", c.agrees},
                               {"support", elements_to_json(c.support)}};
            r["is_color"] = c.is_color;
            ok = ok && c.is_color && c.agrees;
        }
    }
    return {ok, finish(r, job.command)};
}

Outcome cmd_aut_ext(const JobSpec& job, const json& in) {
    need_format(job, {"json"});
    ExtensionInput x = extension_from_json(in);
    const MatchedPair& mp = x.mp;
    if (!validate_matched_pair(mp)) throw ValidationError("not a matched pair");
    long long n = job.root_bound > 0 ? job.root_bound : default_root_bound(mp);
    json r{{"root_bound", n}};
    bool ok = true;
    if (x.g && x.h) {
        AutExtResult res = aut_ext_solve(mp, *x.g, *x.h, n);
        json sols = json::array();
        for (auto& f : res.solutions) sols.push_back(ext_automorphism_to_json(f));
        r["solutions"] = sols;
        r["solution_count"] = res.solution_count;
        r["compatible"] = res.compatible;
        r["truncated"] = res.truncated;
        r["bound_too_small"] = res.bound_too_small;
        r["all_certified"] = res.all_certified;
        ok = res.all_certified;
    } else if (!job.enumerate_aut) {
        throw ValidationError("aut-ext needs \"g\" and \"h\" in the input, or --enumerate-aut");
    }
    if (job.enumerate_aut) {
        json pairs = json::array();
        for (auto& p : aut_ext_enumerate(mp, n))
            pairs.push_back(json{{"g", p.g}, {"h", p.h}, {"solution_count", p.solution_count}});
        r["pairs"] = pairs;
    }
    return {ok, finish(r, job.command)};
}

Outcome cmd_verify(const JobSpec& job, const json& in) {
    need_format(job, {"json"});
    StructBialgebra h = bialgebra_from_json(in);
    std::string m = in.contains("mode") ? in.at("mode").get<std::string>() : (h.grading ? "color" : "plain");
    if (m != "plain" && m != "color") throw ValidationError("mode must be plain or color");
    Mode mode = m == "color" ? Mode::color : Mode::plain;
    if (mode == Mode::color && !h.grading) throw ValidationError("color mode needs a grading");
    AxiomReport ax = check_axioms(h, mode);
    AntipodeReport an = solve_antipode(h, mode);
    json r{{"mode", m}, {"dim", h.dim}, {"axioms", axioms_to_json(ax)}, {"antipode", antipode_to_json(an)}};
    bool ok = ax.all_pass() && an.ok();
    if (h.antipode) {
        bool given = is_antipode(h, *h.antipode);
        r["given_antipode"] = given;
        ok = ok && given;
    }
    if (h.grading) {
        std::vector<std::size_t> ce;
        bool flip = check_flip(h, &ce);
        r["flip"] = json{{"pass", flip}, {"counterexample", ce}};
    }
    return {ok, finish(r, job.command)};
}

Outcome cmd_triangular(const JobSpec& job, const json& in) {
    need_format(job, {"json"});
    FinAbGroup g = group_from_json(in.at("group"));
    Bicharacter beta = bicharacter_from_json(g, in.at("beta"));
    TriangularData t = reduce(beta);
    json u = json::array(), k = json::array(), rad = json::array();
    for (auto& v : t.u) u.push_back(v.to_string());
    for (auto& c : t.K.elements()) k.push_back(c.r);
    for (auto& c : t.radical.elements()) rad.push_back(c.r);
    bool ok = satisfies_trick(t.beta_prime, t.gamma_prime) && is_two_cocycle(t.g_prime.group, t.gamma_prime) &&
              is_normalized(t.g_prime.group, t.gamma_prime);
    return {ok, finish(json{{"u", u},
                            {"kappa", bicharacter_to_json(t.kappa)},
                            {"radical", rad},
                            {"G_prime", json{{"orders", t.g_prime.group.orders()}, {"beta", bicharacter_to_json(t.beta_prime)}}},
                            {"K", k},
                            {"gamma_prime", rational_table(t.gamma_prime)},
                            {"gamma_prime_valid", ok}},
                       job.command)};
}

using Handler = std::function<Outcome(const JobSpec&, const json&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"orbit", cmd_orbit},           {"diagram", cmd_diagram},         {"check-datum", cmd_check_datum},
        {"check-double", cmd_check_double}, {"check-extension", cmd_check_extension}, {"aut-ext", cmd_aut_ext},
        {"verify", cmd_verify},         {"triangular", cmd_triangular}};
    return table;
}

}  // namespace

RunResult run_text(const JobSpec& job, const std::string& input_text) {
    RunResult res;
    auto it = handlers().find(job.command);
    if (it == handlers().end()) {
        res.exit_code = 2;
        res.error = "unknown command " + job.command;
        return res;
    }
    try {
        json in = json::parse(input_text);
        Outcome o = it->second(job, in);
        res.report = o.text;
        res.exit_code = o.ok ? 0 : 1;
    } catch (const json::exception& e) {
        res.exit_code = 2;
        res.error = std::string("invalid JSON input: ") + e.what();
    } catch (const Error& e) {
        res.exit_code = 2;
        res.error = e.what();
    } catch (const std::invalid_argument& e) {
        res.exit_code = 2;
        res.error = e.what();
    } catch (const std::out_of_range& e) {
        res.exit_code = 2;
        res.error = e.what();
    }
    return res;
}

RunResult run(const JobSpec& job) {
    std::string text;
    if (job.input.empty() || job.input == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        text = s.str();
    } else {
        std::ifstream f(job.input, std::ios::binary);
        if (!f) return RunResult{2, "", "cannot read " + job.input};
        std::ostringstream s;
        s << f.rdbuf();
        text = s.str();
    }
    RunResult res = run_text(job, text);
    if (res.exit_code != 2 && !job.output.empty()) {
        std::ofstream f(job.output, std::ios::binary);
        if (!f) return RunResult{2, res.report, "cannot write " + job.output};
        f << res.report;
    }
    return res;
}

}  // namespace chroma::cli
