#pragma once

#include <string>
#include <vector>

#include "purebetti/betti.hpp"
#include "purebetti/complex.hpp"
#include "purebetti/homology.hpp"

namespace purebetti {

// A complex built from an input complex by adding one vertex u_τ per face τ
// in a chosen family.
struct AugmentedComplex {
    SimplicialComplex complex;
    // Vertices [0, base) are the input vertices in their input order.
    int base = 0;
    // Vertex base + k is u_{keys[k]}; keys are input faces in (size, lex) order.
    std::vector<Face> keys;
    // Nonempty when the input labels were replaced by "1".."n" before
    // building u-labels; renamed_from[v] is the old label of vertex v.
    std::vector<std::string> renamed_from;

    int vertex_of(const Face& tau) const;
};

// Faces σ with |σ| >= dim Δ + 2 - i.
std::vector<Face> s_set(const SimplicialComplex& delta, int i);

// φ_i(Δ). Throws DomainError when the result would exceed max_universe vertices.
AugmentedComplex phi(const SimplicialComplex& delta, int i, int max_universe = kMaxVertices);

// Order complex of the nonempty faces.
AugmentedComplex barycentric(const SimplicialComplex& delta);

// φ_1^{d_1-1} ... φ_p^{d_p-1} applied to the boundary of the p-simplex;
// d is given as (d_p, ..., d_1).
SimplicialComplex build_pr_complex(const std::vector<int>& d, int vertex_cap = 64);

// Compares link_{φ_i(Δ)} σ with φ_i(link_Δ σ) under u_τ -> u_{τ-σ}.
bool link_commute_check(const SimplicialComplex& delta, int i, const Face& sigma);

// h(BΔ, {u_τ1, ..., u_τr}) predicted as h(Δ, τ_r) ⊞ {|τ_r| - r}; throws
// ConsistencyError when the direct computation disagrees.
IndexSet bary_link_hset(const SimplicialComplex& delta, const std::vector<Face>& chain,
                        FieldSpec field = FieldSpec::rationals());

struct BaryCheck {
    bool bary_pr = false;
    bool bary_cm = false;
    bool base_cm = false;
};
// Throws ConsistencyError unless all three flags agree.
BaryCheck bdelta_pr_check(const SimplicialComplex& delta, FieldSpec field = FieldSpec::rationals());

}  // namespace purebetti
