#include "purebetti/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "purebetti/errors.hpp"

namespace purebetti {

Json complex_to_json(const SimplicialComplex& delta) {
    Json facets = Json::array();
    for (const Face& f : delta.facets()) facets.push_back(delta.face_labels(f));
    return Json{{"labels", delta.labeling().labels()}, {"facets", facets}};
}

namespace {

bool is_integer(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    return s.size() > start && s.size() < 18 &&
           std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string> natural_order(const std::set<std::string>& labels) {
    std::vector<std::string> out(labels.begin(), labels.end());
    if (std::all_of(out.begin(), out.end(), is_integer))
        std::sort(out.begin(), out.end(),
                  [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
    return out;
}

std::string label_of(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw DomainError("vertex labels must be strings or integers");
}

SimplicialComplex build(std::optional<std::vector<std::string>> labels,
                        const std::vector<std::vector<std::string>>& generators) {
    if (!labels) {
        std::set<std::string> seen;
        for (const auto& g : generators) seen.insert(g.begin(), g.end());
        labels = natural_order(seen);
    }
    return SimplicialComplex::from_facets(std::move(*labels), generators);
}

}  // namespace

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw DomainError("complex JSON needs a \"facets\" array");
    std::vector<std::vector<std::string>> generators;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw DomainError("each facet must be an array of labels");
        std::vector<std::string> g;
        for (const auto& v : f) g.push_back(label_of(v));
        generators.push_back(std::move(g));
    }
    std::optional<std::vector<std::string>> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw DomainError("\"labels\" must be an array");
        labels.emplace();
        for (const auto& v : j["labels"]) labels->push_back(label_of(v));
    }
    return build(std::move(labels), generators);
}

SimplicialComplex complex_from_shorthand(const std::string& text) {
    std::vector<std::vector<std::string>> generators;
    std::stringstream all(text);
    std::string facet;
    while (std::getline(all, facet, ';')) {
        std::vector<std::string> g;
        std::stringstream items(facet);
        std::string item;
        while (std::getline(items, item, ',')) {
            auto b = item.find_first_not_of(" \t");
            auto e = item.find_last_not_of(" \t");
            if (b == std::string::npos) continue;
            g.push_back(item.substr(b, e - b + 1));
        }
        generators.push_back(std::move(g));
    }
    if (generators.empty()) throw DomainError("empty facet list");
    return build(std::nullopt, generators);
}

Json homology_to_json(const HomologyVector& h) {
    Json out = Json::object();
    for (const auto& [k, d] : h) out[std::to_string(k)] = d;
    return out;
}

Json index_set_to_json(const IndexSet& s) { return Json(std::vector<int>(s.begin(), s.end())); }

Json diagram_to_json(const BettiDiagram& b) {
    Json entries = Json::array();
    for (const auto& [key, beta] : b.entries()) entries.push_back({key.first, key.second, beta});
    return Json{{"n", b.universe_size()}, {"entries", entries}, {"rows", b.rows()}};
}

BettiDiagram diagram_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw DomainError("diagram JSON needs \"n\" and \"entries\"");
    BettiDiagram b(j["n"].get<int>());
    for (const auto& e : j["entries"]) {
        if (!e.is_array() || e.size() != 3) throw DomainError("diagram entries are [i, d, beta] triples");
        b.add(e[0].get<int>(), e[1].get<int>(), e[2].get<std::uint64_t>());
    }
    return b;
}

Json pr_summary_to_json(const SimplicialComplex& delta, const PrSummary& s) {
    Json out{{"is_pr", s.is_pr}};
    if (s.is_pr) {
        out["degree_type"] = s.degree_type;
        out["offset"] = s.offset;
        out["shift_type"] = s.shift_type;
        out["sizes"] = s.sizes;
    } else if (s.witness) {
        out["witness"] = {delta.face_labels(s.witness->first), delta.face_labels(s.witness->second)};
        out["shared_degree"] = s.shared_degree;
    }
    return out;
}

Json census_to_json(const CensusReport& report) {
    Json diagrams = Json::array();
    for (const auto& [d, count] : report.diagrams)
        diagrams.push_back({{"diagram", d.render_inline()}, {"classes", count}, {"pure", diagram_is_pure(d)}});
    Json pure = Json::array();
    for (const auto& d : pure_diagram_list(report)) pure.push_back(d.render_inline());
    return Json{{"n", report.filter.n},
                {"field", report.field.to_string()},
                {"filter", report.filter.to_string()},
                {"class_count", report.class_count()},
                {"distinct_diagram_count", report.distinct_diagram_count()},
                {"pure_diagram_count", report.pure_diagram_count()},
                {"diagrams", diagrams},
                {"pure", pure}};
}

std::string census_to_csv(const CensusReport& report) {
    std::string out = "diagram,classes,pure\n";
    for (const auto& [d, count] : report.diagrams)
        out += "\"" + d.render_inline() + "\"," + std::to_string(count) + "," + (diagram_is_pure(d) ? "1" : "0") + "\n";
    return out;
}

Json rays_to_json(const RaySet& rays) {
    Json list = Json::array();
    for (std::size_t k = 0; k < rays.rays.size(); ++k) {
        BettiDiagram d = rays.ray_diagram(k);
        list.push_back({{"diagram", d.render_inline()}, {"pure", diagram_is_pure(d)}, {"vector", rays.rays[k]}});
    }
    return Json{{"rank", rays.rank},
                {"grid", {{"row_min", rays.row_min}, {"row_max", rays.row_max}, {"columns", rays.columns}}},
                {"ray_count", rays.rays.size()},
                {"rays", list}};
}

}  // namespace purebetti
