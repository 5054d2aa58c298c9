#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "purebetti/complex.hpp"
#include "purebetti/homology.hpp"

namespace purebetti {

using IndexSet = std::set<int>;

// Sumset {a + b : a in A, b in B}.
IndexSet boxplus(const IndexSet& a, const IndexSet& b);

// Degrees where the link of sigma has nonzero reduced homology.
IndexSet h_set(const SimplicialComplex& delta, const Face& sigma, FieldSpec field);
// Union of h_set over all faces of size m.
IndexSet hh_set(const SimplicialComplex& delta, int m, FieldSpec field);

// Graded Betti numbers beta_{i,d} of an ideal in n variables.
class BettiDiagram {
public:
    using Key = std::pair<int, int>;

    explicit BettiDiagram(int n = 0) : n_(n) {}

    int universe_size() const { return n_; }
    void add(int i, int d, std::uint64_t beta);
    std::uint64_t get(int i, int d) const;
    const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    // Largest homological index, or -1 when empty.
    int projective_dimension() const;

    // Table with rows r and entries beta_{j, r+j}; "." marks zeros.
    std::vector<std::string> rows() const;
    std::string render() const;
    // Rows joined by " ; ".
    std::string render_inline() const;
    // Inverse of render_inline.
    static BettiDiagram parse(const std::string& text, int n);

    bool operator==(const BettiDiagram& o) const { return n_ == o.n_ && entries_ == o.entries_; }
    bool operator<(const BettiDiagram& o) const {
        return n_ != o.n_ ? n_ < o.n_ : entries_ < o.entries_;
    }

private:
    int n_;
    std::map<Key, std::uint64_t> entries_;
};

bool diagram_is_pure(const BettiDiagram& b);
// (c_p, ..., c_0) for pure diagrams.
std::optional<std::vector<int>> diagram_shift_type(const BettiDiagram& b);
// (d_p, ..., d_1) for pure diagrams.
std::optional<std::vector<int>> diagram_degree_type(const BettiDiagram& b);

struct CarryingFace {
    Face face;
    HomologyVector homology;
};

// Faces whose links have nonzero homology, in (size, lex) order. Only
// intersections of facets are examined: any other face has a cone as link.
std::vector<CarryingFace> homology_carrying_faces(const SimplicialComplex& delta, FieldSpec field, int jobs = 1);

// Betti diagram of the Stanley-Reisner ideal of the Alexander dual, by the
// link-sum form of Hochster's formula.
BettiDiagram betti_dual(const SimplicialComplex& delta, FieldSpec field, int jobs = 1);
// Betti diagram of the Stanley-Reisner ideal of delta, by the induced
// subcomplex form of Hochster's formula (degree d - i - 2).
BettiDiagram betti_direct(const SimplicialComplex& delta, FieldSpec field);

struct PrSummary {
    bool is_pr = false;
    // (d_p, ..., d_1)
    std::vector<int> degree_type;
    int offset = 0;
    // (s_p, ..., s_0)
    std::vector<int> sizes;
    // (c_p, ..., c_0) with c_i = n - s_i
    std::vector<int> shift_type;
    // Two faces of different sizes sharing a homology degree.
    std::optional<std::pair<Face, Face>> witness;
    int shared_degree = 0;
};

PrSummary is_pr(const SimplicialComplex& delta, FieldSpec field, int jobs = 1);
PrSummary pr_summary_from(const SimplicialComplex& delta, const std::vector<CarryingFace>& carrying);
bool is_cohen_macaulay(const SimplicialComplex& delta, FieldSpec field, int jobs = 1);

// sigma = tau_j, tau_{j-1}, ..., tau_{-1}: strictly increasing faces with
// nonzero link homology in the matching degree.
std::vector<Face> chain_descend(const SimplicialComplex& delta, const Face& sigma, int j, FieldSpec field);

}  // namespace purebetti
