#include "purebetti/phi.hpp"

#include <algorithm>
#include <unordered_map>

#include "purebetti/errors.hpp"

namespace purebetti {

int AugmentedComplex::vertex_of(const Face& tau) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), tau, size_lex_less);
    if (it == keys.end() || *it != tau) throw DomainError("no vertex u_tau for the given face");
    return base + static_cast<int>(it - keys.begin());
}

namespace {

bool needs_renaming(const VertexLabeling& labels) {
    for (const auto& l : labels.labels())
        if (l.find_first_of("{},") != std::string::npos) return true;
    return false;
}

// Label table for the input vertices (optionally renamed) followed by u-vertices.
void assign_labels(const SimplicialComplex& delta, AugmentedComplex& out, bool keep_input_vertices,
                   std::vector<std::string>& labels) {
    const VertexLabeling& in = delta.labeling();
    std::vector<std::string> names = in.labels();
    if (needs_renaming(in)) {
        out.renamed_from = names;
        for (int v = 0; v < in.size(); ++v) names[v] = std::to_string(v + 1);
    }
    if (keep_input_vertices) labels = names;
    for (const Face& tau : out.keys) {
        std::string l = "u{";
        bool first = true;
        tau.for_each([&](int v) {
            if (!first) l += ",";
            l += names[v];
            first = false;
        });
        labels.push_back(l + "}");
    }
}

class ChainBuilder {
public:
    ChainBuilder(const SimplicialComplex& delta, const std::unordered_map<Face, int, FaceHash>& u_index)
        : facets_(delta.facets()), u_index_(u_index) {}

    // Emits base ∪ {u_τ : τ on a saturated chain from start to a facet}.
    void run(const Face& start, const Face& base, std::vector<Face>& out) {
        Face acc = base;
        walk(start, acc, out);
    }

private:
    void walk(const Face& tau, Face& acc, std::vector<Face>& out) {
        acc.set(u_index_.at(tau));
        Face up;
        for (const Face& F : facets_)
            if (tau.is_subset_of(F)) up |= F;
        up = up - tau;
        if (up.empty()) {
            out.push_back(acc);
        } else {
            up.for_each([&](int v) {
                Face next = tau;
                next.set(v);
                walk(next, acc, out);
            });
        }
        acc.reset(u_index_.at(tau));
    }

    const std::vector<Face>& facets_;
    const std::unordered_map<Face, int, FaceHash>& u_index_;
};

}  // namespace

std::vector<Face> s_set(const SimplicialComplex& delta, int i) {
    if (delta.is_void()) throw DomainError("s_set: void complex");
    if (i < 1) throw DomainError("s_set: i must be at least 1");
    int threshold = *delta.dim() + 2 - i;
    std::vector<Face> out;
    for (const Face& f : delta.all_faces())
        if (f.count() >= threshold) out.push_back(f);
    return out;
}

AugmentedComplex phi(const SimplicialComplex& delta, int i, int max_universe) {
    AugmentedComplex out;
    out.keys = s_set(delta, i);
    out.base = delta.universe_size();
    int total = out.base + static_cast<int>(out.keys.size());
    if (total > std::min(max_universe, kMaxVertices))
        throw DomainError("vertex cap of " + std::to_string(std::min(max_universe, kMaxVertices)) +
                          " exceeded: phi_" + std::to_string(i) + " would produce " + std::to_string(total) +
                          " vertices");
    std::unordered_map<Face, int, FaceHash> u_index;
    for (std::size_t k = 0; k < out.keys.size(); ++k) u_index.emplace(out.keys[k], out.base + static_cast<int>(k));

    std::vector<Face> generators;
    ChainBuilder chains(delta, u_index);
    for (const Face& tau : out.keys) chains.run(tau, tau, generators);
    for (const Face& F : delta.facets())
        if (!u_index.count(F)) generators.push_back(F);

    std::vector<std::string> labels;
    assign_labels(delta, out, true, labels);
    out.complex = SimplicialComplex::from_faces(make_labeling(std::move(labels)), std::move(generators));
    return out;
}

AugmentedComplex barycentric(const SimplicialComplex& delta) {
    if (delta.is_void()) throw DomainError("barycentric: void complex");
    if (delta.is_irrelevant()) throw DomainError("barycentric: no nonempty faces");
    AugmentedComplex out;
    for (const Face& f : delta.all_faces())
        if (!f.empty()) out.keys.push_back(f);
    if (out.keys.size() > static_cast<std::size_t>(kMaxVertices))
        throw DomainError("barycentric: subdivision exceeds " + std::to_string(kMaxVertices) + " vertices");
    std::unordered_map<Face, int, FaceHash> u_index;
    for (std::size_t k = 0; k < out.keys.size(); ++k) u_index.emplace(out.keys[k], static_cast<int>(k));

    // Maximal chains are the saturated chains from a vertex up to a facet.
    std::vector<Face> generators;
    ChainBuilder chains(delta, u_index);
    for (const Face& v : out.keys) {
        if (v.count() != 1) break;
        chains.run(v, Face{}, generators);
    }
    std::vector<std::string> labels;
    assign_labels(delta, out, false, labels);
    out.complex = SimplicialComplex::from_faces(make_labeling(std::move(labels)), std::move(generators));
    return out;
}

SimplicialComplex build_pr_complex(const std::vector<int>& d, int vertex_cap) {
    if (d.empty()) throw DomainError("build_pr_complex: empty degree type");
    for (int x : d)
        if (x < 1) throw DomainError("build_pr_complex: degree type entries must be positive");
    int p = static_cast<int>(d.size());
    if (p + 1 > vertex_cap) throw DomainError("vertex cap of " + std::to_string(vertex_cap) + " exceeded");
    SimplicialComplex cur = SimplicialComplex::simplex_boundary(numbered_labeling(p + 1));
    for (int k = 0; k < p; ++k) {
        int i = p - k;
        for (int rep = 1; rep < d[k]; ++rep) cur = phi(cur, i, vertex_cap).complex;
    }
    return cur;
}

namespace {

std::string vertex_key(const AugmentedComplex& a, int v, const Face& shift) {
    if (v < a.base) return "v" + std::to_string(v);
    std::string s = "u";
    (a.keys[v - a.base] - shift).for_each([&](int w) { s += "," + std::to_string(w); });
    return s;
}

std::vector<std::vector<std::string>> keyed_facets(const AugmentedComplex& a, const SimplicialComplex& c,
                                                   const Face& shift) {
    std::vector<std::vector<std::string>> out;
    for (const Face& F : c.facets()) {
        std::vector<std::string> keys;
        F.for_each([&](int v) { keys.push_back(vertex_key(a, v, shift)); });
        std::sort(keys.begin(), keys.end());
        out.push_back(std::move(keys));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool link_commute_check(const SimplicialComplex& delta, int i, const Face& sigma) {
    if (delta.is_void() || !delta.is_pure()) throw DomainError("link_commute_check: complex must be pure");
    if (!delta.contains(sigma)) throw DomainError("link_commute_check: " + delta.face_to_string(sigma) + " is not a face");
    AugmentedComplex whole = phi(delta, i);
    AugmentedComplex of_link = phi(link(delta, sigma), i);
    return keyed_facets(whole, link(whole.complex, sigma), sigma) == keyed_facets(of_link, of_link.complex, Face{});
}

IndexSet bary_link_hset(const SimplicialComplex& delta, const std::vector<Face>& chain, FieldSpec field) {
    if (chain.empty()) throw DomainError("bary_link_hset: empty chain");
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (chain[k].empty() || !delta.contains(chain[k]))
            throw DomainError("bary_link_hset: chain entries must be nonempty faces");
        if (k && (chain[k] == chain[k - 1] || !chain[k - 1].is_subset_of(chain[k])))
            throw DomainError("bary_link_hset: chain must be strictly increasing");
    }
    const Face& top = chain.back();
    IndexSet predicted = boxplus(h_set(delta, top, field), {top.count() - static_cast<int>(chain.size())});
    AugmentedComplex b = barycentric(delta);
    Face sigma;
    for (const Face& tau : chain) sigma.set(b.vertex_of(tau));
    if (h_set(b.complex, sigma, field) != predicted)
        throw ConsistencyError("barycentric link homology differs from the chain formula");
    return predicted;
}

BaryCheck bdelta_pr_check(const SimplicialComplex& delta, FieldSpec field) {
    AugmentedComplex b = barycentric(delta);
    BaryCheck c;
    PrSummary s = is_pr(b.complex, field);
    c.bary_pr = s.is_pr;
    c.bary_cm = is_cohen_macaulay(b.complex, field);
    c.base_cm = is_cohen_macaulay(delta, field);
    if (c.bary_pr != c.bary_cm || c.bary_cm != c.base_cm)
        throw ConsistencyError("barycentric PR / Cohen-Macaulay equivalence fails");
    return c;
}

}  // namespace purebetti
