#include "purebetti/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "purebetti/constructions.hpp"
#include "purebetti/errors.hpp"
#include "purebetti/io.hpp"
#include "purebetti/isomorphism.hpp"
#include "purebetti/phi.hpp"

namespace purebetti {

namespace {

struct Config {
    std::string in, in2, facets, facets2, out;
    std::string field = "q";
    int jobs = 1;
    bool text = false;
    bool collapse = false;
    bool verify = false;
    std::string face;
    int r = 0;
    int i = 1;
    std::string recipe;
    std::string degree_type;
    int vertex_cap = 64;
    int n = 5;
    std::string filter = "ideal";
    std::string resume;
    std::string csv;
    bool rays = false;
};

int default_jobs() {
    if (const char* env = std::getenv("PUREBETTI_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("invalid JSON in " + path + ": " + e.what());
    }
}

SimplicialComplex load(const std::string& path, const std::string& shorthand, const char* what) {
    if (!path.empty() && !shorthand.empty()) throw DomainError(std::string("give either a file or facets for ") + what);
    if (!shorthand.empty()) return complex_from_shorthand(shorthand);
    if (path.empty()) throw DomainError(std::string("missing input complex (") + what + ")");
    return complex_from_json(read_json_file(path));
}

Face parse_face(const SimplicialComplex& delta, const std::string& text) {
    std::vector<std::string> labels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) labels.push_back(item);
    return delta.face_from_labels(labels);
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DomainError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

void emit(const Config& c, const std::string& body, std::ostream& out) {
    if (c.out.empty()) {
        out << body;
        return;
    }
    std::ofstream f(c.out, std::ios::trunc);
    if (!f) throw DomainError("cannot write " + c.out);
    f << body;
}

void emit_json(const Config& c, const Json& j, std::ostream& out) { emit(c, j.dump(2) + "\n", out); }

void add_input(CLI::App* sub, Config& c) {
    sub->add_option("--in", c.in, "complex JSON file");
    sub->add_option("--facets", c.facets, "inline facets, e.g. 1,3,5;2,3,4;1,2,6");
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--out", c.out, "write the result here instead of stdout");
    sub->add_option("--field", c.field, "coefficient field: q or gf:P")->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads (default from PUREBETTI_JOBS)");
}

int dispatch(const std::string& name, const Config& c, std::ostream& out) {
    FieldSpec field = FieldSpec::parse(c.field);
    if (c.jobs < 1) throw DomainError("--jobs must be at least 1");

    if (name == "betti" || name == "betti-direct") {
        auto delta = load(c.in, c.facets, "--in");
        BettiDiagram b = name == "betti" ? betti_dual(delta, field, c.jobs) : betti_direct(delta, field);
        if (c.verify) {
            BettiDiagram other = name == "betti" ? betti_direct(alexander_dual(delta), field)
                                                 : betti_dual(alexander_dual(delta), field, c.jobs);
            if (!(other == b)) throw ConsistencyError("link-sum and induced-subcomplex diagrams differ");
        }
        if (c.text)
            emit(c, b.render(), out);
        else
            emit_json(c, diagram_to_json(b), out);
    } else if (name == "pr") {
        auto delta = load(c.in, c.facets, "--in");
        PrSummary s = is_pr(delta, field, c.jobs);
        if (c.verify && !delta.is_void() && delta.facets().front() != delta.universe()) {
            BettiDiagram b = betti_dual(delta, field, c.jobs);
            if (diagram_is_pure(b) != s.is_pr || (s.is_pr && *diagram_degree_type(b) != s.degree_type))
                throw ConsistencyError("PR summary disagrees with the purity of the Betti diagram");
        }
        emit_json(c, pr_summary_to_json(delta, s), out);
    } else if (name == "cm") {
        auto delta = load(c.in, c.facets, "--in");
        emit_json(c, Json{{"cohen_macaulay", is_cohen_macaulay(delta, field, c.jobs)}}, out);
    } else if (name == "homology") {
        auto delta = load(c.in, c.facets, "--in");
        auto h = c.collapse ? homology_with_collapse(delta, field) : reduced_homology(delta, field);
        if (c.verify && h != (c.collapse ? reduced_homology(delta, field) : homology_with_collapse(delta, field)))
            throw ConsistencyError("homology changed under free-pair collapse");
        emit_json(c, Json{{"field", field.to_string()}, {"homology", homology_to_json(h)}}, out);
    } else if (name == "link") {
        auto delta = load(c.in, c.facets, "--in");
        emit_json(c, complex_to_json(link(delta, parse_face(delta, c.face))), out);
    } else if (name == "dual") {
        emit_json(c, complex_to_json(alexander_dual(load(c.in, c.facets, "--in"))), out);
    } else if (name == "bary") {
        emit_json(c, complex_to_json(barycentric(load(c.in, c.facets, "--in")).complex), out);
    } else if (name == "skel") {
        emit_json(c, complex_to_json(skeleton(load(c.in, c.facets, "--in"), c.r)), out);
    } else if (name == "join") {
        auto a = load(c.in, c.facets, "--in");
        auto b = load(c.in2, c.facets2, "--in2");
        emit_json(c, complex_to_json(join(a, b)), out);
    } else if (name == "construct") {
        emit_json(c, complex_to_json(from_recipe(c.recipe)), out);
    } else if (name == "phi") {
        auto result = phi(load(c.in, c.facets, "--in"), c.i);
        Json j = complex_to_json(result.complex);
        if (!result.renamed_from.empty()) j["renamed_from"] = result.renamed_from;
        emit_json(c, j, out);
    } else if (name == "build") {
        std::vector<int> d = parse_ints(c.degree_type);
        auto delta = build_pr_complex(d, c.vertex_cap);
        Json j = complex_to_json(delta);
        if (c.verify) {
            PrSummary s = is_pr(delta, field, c.jobs);
            bool ok = s.is_pr && s.degree_type == d;
            std::string listed;
            for (int x : s.degree_type) listed += (listed.empty() ? "" : ",") + std::to_string(x);
            j["verification"] = {{"is_pr", s.is_pr},
                                 {"degree_type", s.degree_type},
                                 {"matches", ok},
                                 {"report", s.is_pr ? "degree_type=[" + listed + "]" : "not PR"}};
            if (!ok) {
                emit_json(c, j, out);
                throw ConsistencyError("built complex does not have the requested degree type");
            }
        }
        emit_json(c, j, out);
    } else if (name == "census") {
        CensusOptions opt;
        opt.jobs = c.jobs;
        if (!c.resume.empty()) opt.checkpoint_path = c.resume;
        CensusReport report = census(CensusFilter::parse(c.filter, c.n), field, opt);
        Json j = census_to_json(report);
        if (c.rays) {
            std::vector<BettiDiagram> ds;
            for (const auto& [d, count] : report.diagrams) ds.push_back(d);
            j["rays"] = rays_to_json(extremal_rays(ds));
        }
        if (!c.csv.empty()) {
            std::ofstream f(c.csv, std::ios::trunc);
            if (!f) throw DomainError("cannot write " + c.csv);
            f << census_to_csv(report);
        }
        emit_json(c, j, out);
    } else if (name == "rays") {
        if (c.in.empty()) throw DomainError("rays needs --in with a census report or a diagram list");
        Json j = read_json_file(c.in);
        std::vector<BettiDiagram> ds;
        if (j.is_object() && j.contains("diagrams")) {
            int n = j.at("n").get<int>();
            for (const auto& e : j["diagrams"]) ds.push_back(BettiDiagram::parse(e.at("diagram").get<std::string>(), n));
        } else if (j.is_array()) {
            for (const auto& e : j) ds.push_back(diagram_from_json(e));
        } else {
            throw DomainError("rays input must be a census report or an array of diagrams");
        }
        emit_json(c, rays_to_json(extremal_rays(ds)), out);
    } else if (name == "iso") {
        auto a = load(c.in, c.facets, "--in");
        if (c.in2.empty() && c.facets2.empty()) {
            emit_json(c, complex_to_json(canonical_form(a)), out);
        } else {
            emit_json(c, Json{{"isomorphic", are_isomorphic(a, load(c.in2, c.facets2, "--in2"))}}, out);
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Betti diagrams of Stanley-Reisner ideals, pure resolutions, and constructions", "purebetti"};
    app.require_subcommand(1, 1);
    Config c;
    c.jobs = default_jobs();

    auto simple = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        add_input(s, c);
        add_common(s, c);
        return s;
    };
    auto* betti = simple("betti", "Betti diagram of the ideal of the Alexander dual (link sums)");
    betti->add_flag("--text", c.text, "print the table instead of JSON");
    auto* direct = simple("betti-direct", "Betti diagram of the Stanley-Reisner ideal (induced subcomplexes)");
    direct->add_flag("--text", c.text, "print the table instead of JSON");
    simple("pr", "decide the pure-resolution property and report degree type");
    simple("cm", "Cohen-Macaulay test by link homology");
    simple("homology", "reduced homology")->add_flag("--collapse", c.collapse, "collapse free pairs first");
    simple("link", "link of a face")->add_option("--face", c.face, "comma-separated labels")->required();
    simple("dual", "Alexander dual");
    simple("bary", "barycentric subdivision");
    simple("skel", "r-skeleton")->add_option("--r", c.r, "dimension bound")->required();
    auto* join_cmd = simple("join", "join of two complexes on disjoint labels");
    join_cmd->add_option("--in2", c.in2, "second complex JSON file");
    join_cmd->add_option("--facets2", c.facets2, "second complex as inline facets");
    auto* construct = app.add_subcommand("construct", "build a named family member");
    construct->add_option("--recipe", c.recipe, "e.g. intersection:1,1,0 or partition:a=3,p=2,m=1")->required();
    add_common(construct, c);
    simple("phi", "apply phi_i")->add_option("--i", c.i, "index i >= 1")->required();
    auto* build = app.add_subcommand("build", "PR complex with a prescribed degree type");
    build->add_option("--degree-type", c.degree_type, "d_p,...,d_1")->required();
    build->add_option("--vertex-cap", c.vertex_cap, "largest intermediate universe")->capture_default_str();
    build->add_flag("--verify", c.verify, "check the degree type of the result");
    add_common(build, c);
    auto* census_cmd = app.add_subcommand("census", "Betti diagrams over all small complexes up to isomorphism");
    census_cmd->add_option("--n", c.n, "vertex count (at most 6)")->capture_default_str();
    census_cmd->add_option("--filter", c.filter, "ideal, css, none, or flags joined by '+'")->capture_default_str();
    census_cmd->add_option("--resume", c.resume, "checkpoint file to resume from and update");
    census_cmd->add_option("--csv", c.csv, "also write the diagram table as CSV");
    census_cmd->add_flag("--rays", c.rays, "include the extremal rays of the diagram cone");
    add_common(census_cmd, c);
    auto* rays = app.add_subcommand("rays", "extremal rays of the cone spanned by diagrams");
    rays->add_option("--in", c.in, "census report JSON or array of diagram JSON");
    add_common(rays, c);
    auto* iso = simple("iso", "canonical form, or isomorphism test with a second complex");
    iso->add_option("--in2", c.in2, "second complex JSON file");
    iso->add_option("--facets2", c.facets2, "second complex as inline facets");
    for (auto* s : {betti, direct, app.get_subcommand("pr"), app.get_subcommand("homology")})
        s->add_flag("--verify", c.verify, "cross-check against an independent computation");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    std::string name = app.get_subcommands().front()->get_name();
    try {
        return dispatch(name, c, out);
    } catch (const DomainError& e) {
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        err << Json{{"error", std::string("consistency check failed: ") + e.what()}}.dump() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << Json{{"error", std::string("bad JSON input: ") + e.what()}}.dump() << "\n";
        return 1;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace purebetti
