#pragma once

#include <cstddef>
#include <vector>

#include "purebetti/complex.hpp"

namespace purebetti {

struct CanonicalResult {
    // Facets after relabeling, labels "1".."n".
    SimplicialComplex complex;
    // perm[v] is the new index of vertex v.
    std::vector<int> perm;
};

// Canonical relabeling by individualization-refinement on the
// vertex/facet incidence structure. Throws DomainError when the search
// exceeds its leaf budget.
CanonicalResult canonical_labeling(const SimplicialComplex& delta, std::size_t leaf_budget = 1'000'000);
SimplicialComplex canonical_form(const SimplicialComplex& delta);
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace purebetti
