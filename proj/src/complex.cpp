#include "purebetti/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "purebetti/errors.hpp"

namespace purebetti {

VertexLabeling::VertexLabeling(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > static_cast<std::size_t>(kMaxVertices))
        throw DomainError("universe exceeds " + std::to_string(kMaxVertices) + " vertices");
    for (int i = 0; i < size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw DomainError("duplicate label '" + labels_[i] + "'");
    }
}

std::optional<int> VertexLabeling::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int VertexLabeling::index(std::string_view label) const {
    auto i = find(label);
    if (!i) throw DomainError("unknown label '" + std::string(label) + "'");
    return *i;
}

LabelingPtr make_labeling(std::vector<std::string> labels) {
    return std::make_shared<const VertexLabeling>(std::move(labels));
}

LabelingPtr numbered_labeling(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return make_labeling(std::move(labels));
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return lex_less(a, b);
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    kept.reserve(faces.size());
    // kept is ordered by descending size; only strictly larger faces can cover f.
    std::size_t larger = 0;
    int larger_size = -1;
    for (const Face& f : faces) {
        int c = f.count();
        if (c != larger_size) {
            larger = kept.size();
            larger_size = c;
        }
        bool covered = false;
        for (std::size_t k = 0; k < larger; ++k) {
            if (f.is_subset_of(kept[k])) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), size_lex_less);
    return kept;
}

SimplicialComplex::SimplicialComplex() : labels_(make_labeling({})) {}

SimplicialComplex::SimplicialComplex(LabelingPtr labels, std::vector<Face> facets)
    : labels_(std::move(labels)), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_faces(LabelingPtr labels, std::vector<Face> generators) {
    Face universe = Face::prefix(labels->size());
    for (const Face& g : generators)
        if (!g.is_subset_of(universe)) throw DomainError("face outside the vertex universe");
    return SimplicialComplex(std::move(labels), maximal_faces(std::move(generators)));
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> labels, const std::vector<std::vector<std::string>>& generators) {
    auto lab = make_labeling(std::move(labels));
    std::vector<Face> faces;
    for (const auto& gen : generators) {
        Face f;
        for (const auto& l : gen) f.set(lab->index(l));
        faces.push_back(f);
    }
    return from_faces(lab, std::move(faces));
}

SimplicialComplex SimplicialComplex::void_complex(LabelingPtr labels) {
    return SimplicialComplex(std::move(labels), {});
}

SimplicialComplex SimplicialComplex::irrelevant(LabelingPtr labels) {
    return SimplicialComplex(std::move(labels), {Face{}});
}

SimplicialComplex SimplicialComplex::simplex(LabelingPtr labels) {
    Face all = Face::prefix(labels->size());
    return SimplicialComplex(std::move(labels), {all});
}

SimplicialComplex SimplicialComplex::simplex_boundary(LabelingPtr labels) {
    int n = labels->size();
    if (n == 0) return void_complex(std::move(labels));
    std::vector<Face> facets;
    Face all = Face::prefix(n);
    for (int v = 0; v < n; ++v) {
        Face f = all;
        f.reset(v);
        facets.push_back(f);
    }
    return from_faces(std::move(labels), std::move(facets));
}

std::optional<int> SimplicialComplex::dim() const {
    if (facets_.empty()) return std::nullopt;
    return facets_.back().count() - 1;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    return facets_.front().count() == facets_.back().count();
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const Face& F : facets_)
        if (f.is_subset_of(F)) return true;
    return false;
}

Face SimplicialComplex::vertex_set() const {
    Face v;
    for (const Face& F : facets_) v |= F;
    return v;
}

namespace {

// Calls fn on every k-subset of the given index list.
template <class Fn>
void for_each_combination(const std::vector<int>& idx, int k, Fn&& fn) {
    int n = static_cast<int>(idx.size());
    if (k < 0 || k > n) return;
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
        Face f;
        for (int p : pos) f.set(idx[p]);
        fn(f);
        int i = k - 1;
        while (i >= 0 && pos[i] == n - k + i) --i;
        if (i < 0) return;
        ++pos[i];
        for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
}

}  // namespace

std::vector<Face> SimplicialComplex::faces_of_size(int k) const {
    std::unordered_set<Face, FaceHash> seen;
    for (const Face& F : facets_) {
        if (F.count() < k) continue;
        for_each_combination(F.indices(), k, [&](const Face& f) { seen.insert(f); });
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::vector<Face> out;
    if (facets_.empty()) return out;
    int top = facets_.back().count();
    for (int k = 0; k <= top; ++k) {
        auto layer = faces_of_size(k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    if (facets_.empty()) return out;
    int top = facets_.back().count();
    for (int k = 0; k <= top; ++k) out.push_back(faces_of_size(k).size());
    return out;
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
    Face f;
    for (const auto& l : labels) f.set(labels_->index(l));
    return f;
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& f) const {
    std::vector<std::string> out;
    f.for_each([&](int i) { out.push_back(labels_->label(i)); });
    return out;
}

std::string SimplicialComplex::face_to_string(const Face& f) const {
    std::string s = "{";
    bool first = true;
    f.for_each([&](int i) {
        if (!first) s += ",";
        s += labels_->label(i);
        first = false;
    });
    return s + "}";
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
    return *labels_ == *o.labels_ && facets_ == o.facets_;
}

SimplicialComplex link(const SimplicialComplex& delta, const Face& f) {
    std::vector<Face> out;
    for (const Face& F : delta.facets())
        if (f.is_subset_of(F)) out.push_back(F - f);
    if (out.empty()) throw DomainError("link: " + delta.face_to_string(f) + " is not a face");
    // Removing f from facets containing it keeps the antichain property.
    return SimplicialComplex::from_faces(delta.labeling_ptr(), std::move(out));
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
    // Facets of the dual are complements of minimal nonfaces, and minimal
    // nonfaces are the minimal transversals of the facet complements.
    Face universe = delta.universe();
    std::vector<Face> edges;
    for (const Face& F : delta.facets()) edges.push_back(universe - F);
    std::sort(edges.begin(), edges.end(), size_lex_less);

    std::vector<Face> transversals{Face{}};
    for (const Face& e : edges) {
        std::vector<Face> next;
        std::vector<int> evs = e.indices();
        for (const Face& t : transversals) {
            if (t.intersects(e)) {
                next.push_back(t);
            } else {
                for (int v : evs) {
                    Face u = t;
                    u.set(v);
                    next.push_back(u);
                }
            }
        }
        // Keep inclusion-minimal sets only.
        std::sort(next.begin(), next.end(), size_lex_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Face> minimal;
        for (const Face& t : next) {
            bool dominated = false;
            for (const Face& m : minimal)
                if (m.is_subset_of(t)) {
                    dominated = true;
                    break;
                }
            if (!dominated) minimal.push_back(t);
        }
        transversals = std::move(minimal);
    }
    std::vector<Face> facets;
    for (const Face& t : transversals) facets.push_back(universe - t);
    return SimplicialComplex::from_faces(delta.labeling_ptr(), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& delta, int r) {
    if (r < -1) throw DomainError("skeleton: dimension must be at least -1");
    std::vector<Face> out;
    for (const Face& F : delta.facets()) {
        if (F.count() <= r + 1)
            out.push_back(F);
        else
            for_each_combination(F.indices(), r + 1, [&](const Face& f) { out.push_back(f); });
    }
    return SimplicialComplex::from_faces(delta.labeling_ptr(), std::move(out));
}

SimplicialComplex skeleton_of_set(const std::vector<std::string>& labels, int r) {
    auto full = SimplicialComplex::simplex(make_labeling(labels));
    return skeleton(full, r);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::string> labels = a.labeling().labels();
    for (const auto& l : b.labeling().labels()) {
        if (a.labeling().find(l)) throw DomainError("join: label '" + l + "' occurs in both complexes");
        labels.push_back(l);
    }
    int shift = a.universe_size();
    auto lab = make_labeling(std::move(labels));
    std::vector<Face> out;
    for (const Face& F : a.facets()) {
        for (const Face& G : b.facets()) {
            Face u = F;
            G.for_each([&](int i) { u.set(i + shift); });
            out.push_back(u);
        }
    }
    return SimplicialComplex::from_faces(lab, std::move(out));
}

SimplicialComplex induced(const SimplicialComplex& delta, const std::vector<std::string>& labels) {
    Face keep = delta.face_from_labels(labels);
    std::vector<int> new_index(delta.universe_size(), -1);
    std::vector<std::string> kept;
    keep.for_each([&](int i) {
        new_index[i] = static_cast<int>(kept.size());
        kept.push_back(delta.labeling().label(i));
    });
    std::vector<Face> out;
    for (const Face& F : delta.facets()) {
        Face g;
        (F & keep).for_each([&](int i) { g.set(new_index[i]); });
        out.push_back(g);
    }
    return SimplicialComplex::from_faces(make_labeling(std::move(kept)), std::move(out));
}

SimplicialComplex delete_face(const SimplicialComplex& delta, const Face& f) {
    if (f.empty()) throw DomainError("delete_face: face must be nonempty");
    std::vector<Face> out;
    for (const Face& F : delta.facets()) {
        if (!f.is_subset_of(F)) {
            out.push_back(F);
            continue;
        }
        f.for_each([&](int v) {
            Face g = F;
            g.reset(v);
            out.push_back(g);
        });
    }
    return SimplicialComplex::from_faces(delta.labeling_ptr(), std::move(out));
}

std::optional<int> is_cone(const SimplicialComplex& delta) {
    if (delta.is_void()) return std::nullopt;
    Face common = delta.facets().front();
    for (const Face& F : delta.facets()) common &= F;
    int v = common.first();
    if (v < 0) return std::nullopt;
    return v;
}

std::optional<FreePair> find_free_pair(const SimplicialComplex& delta) {
    if (delta.is_void()) return std::nullopt;
    int top = delta.facets().back().count();
    for (int k = 1; k < top; ++k) {
        for (const Face& g : delta.faces_of_size(k)) {
            Face common;
            bool any = false;
            for (const Face& F : delta.facets()) {
                if (!g.is_subset_of(F)) continue;
                common = any ? (common & F) : F;
                any = true;
            }
            Face extra = common - g;
            if (!extra.empty()) {
                Face f = g;
                f.set(extra.first());
                return FreePair{g, f};
            }
        }
    }
    return std::nullopt;
}

SimplicialComplex collapse(const SimplicialComplex& delta) {
    SimplicialComplex cur = delta;
    while (auto pair = find_free_pair(cur)) cur = delete_face(cur, pair->g);
    return cur;
}

std::vector<Face> facet_intersections(const SimplicialComplex& delta) {
    std::unordered_set<Face, FaceHash> seen(delta.facets().begin(), delta.facets().end());
    std::vector<Face> frontier(delta.facets().begin(), delta.facets().end());
    while (!frontier.empty()) {
        std::vector<Face> next;
        for (const Face& a : frontier) {
            for (const Face& F : delta.facets()) {
                Face m = a & F;
                if (seen.insert(m).second) next.push_back(m);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

SimplicialComplex relabel(const SimplicialComplex& delta, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != delta.universe_size())
        throw DomainError("relabel: permutation size mismatch");
    std::vector<Face> out;
    for (const Face& F : delta.facets()) {
        Face g;
        F.for_each([&](int i) { g.set(perm[i]); });
        out.push_back(g);
    }
    return SimplicialComplex::from_faces(delta.labeling_ptr(), std::move(out));
}

}  // namespace purebetti
