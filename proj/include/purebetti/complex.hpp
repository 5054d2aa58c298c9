#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "purebetti/face.hpp"

namespace purebetti {

// Bijection between vertex labels and indices 0..n-1.
class VertexLabeling {
public:
    VertexLabeling() = default;
    explicit VertexLabeling(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find(std::string_view label) const;
    // Throws DomainError for unknown labels.
    int index(std::string_view label) const;

    bool operator==(const VertexLabeling& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

using LabelingPtr = std::shared_ptr<const VertexLabeling>;

LabelingPtr make_labeling(std::vector<std::string> labels);
// Labels "1".."n".
LabelingPtr numbered_labeling(int n);

// A simplicial complex on a labeled vertex universe, stored by its facets.
// The facet list is an antichain sorted by (size, lexicographic).
class SimplicialComplex {
public:
    // The void complex on an empty universe.
    SimplicialComplex();

    // Normalizes an arbitrary generator list to its maximal elements.
    static SimplicialComplex from_faces(LabelingPtr labels, std::vector<Face> generators);
    static SimplicialComplex from_facets(std::vector<std::string> labels,
                                         const std::vector<std::vector<std::string>>& generators);

    static SimplicialComplex void_complex(LabelingPtr labels);
    // The complex {∅}.
    static SimplicialComplex irrelevant(LabelingPtr labels);
    static SimplicialComplex simplex(LabelingPtr labels);
    static SimplicialComplex simplex_boundary(LabelingPtr labels);

    const VertexLabeling& labeling() const { return *labels_; }
    const LabelingPtr& labeling_ptr() const { return labels_; }
    int universe_size() const { return labels_->size(); }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }
    // nullopt for the void complex.
    std::optional<int> dim() const;
    bool is_pure() const;
    bool contains(const Face& f) const;
    // Vertices lying in some facet.
    Face vertex_set() const;
    Face universe() const { return Face::prefix(universe_size()); }

    // All faces including ∅, ordered by (size, lexicographic).
    std::vector<Face> all_faces() const;
    std::vector<Face> faces_of_size(int k) const;
    std::vector<std::size_t> f_vector() const;

    Face face_from_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> face_labels(const Face& f) const;
    std::string face_to_string(const Face& f) const;

    bool operator==(const SimplicialComplex& o) const;

private:
    SimplicialComplex(LabelingPtr labels, std::vector<Face> facets);

    LabelingPtr labels_;
    std::vector<Face> facets_;
};

// Inclusion-maximal elements, deduplicated and sorted by (size, lex).
std::vector<Face> maximal_faces(std::vector<Face> faces);

SimplicialComplex link(const SimplicialComplex& delta, const Face& f);
SimplicialComplex alexander_dual(const SimplicialComplex& delta);
SimplicialComplex skeleton(const SimplicialComplex& delta, int r);
SimplicialComplex skeleton_of_set(const std::vector<std::string>& labels, int r);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex induced(const SimplicialComplex& delta, const std::vector<std::string>& labels);
SimplicialComplex delete_face(const SimplicialComplex& delta, const Face& f);
std::optional<int> is_cone(const SimplicialComplex& delta);

struct FreePair {
    Face g;
    Face f;
};
std::optional<FreePair> find_free_pair(const SimplicialComplex& delta);
SimplicialComplex collapse(const SimplicialComplex& delta);

// Faces that are intersections of some nonempty set of facets.
std::vector<Face> facet_intersections(const SimplicialComplex& delta);

// Moves vertex v to index perm[v] on the same label table.
SimplicialComplex relabel(const SimplicialComplex& delta, const std::vector<int>& perm);

}  // namespace purebetti
