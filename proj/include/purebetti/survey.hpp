#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "purebetti/betti.hpp"
#include "purebetti/enumerate.hpp"
#include "purebetti/homology.hpp"

namespace purebetti {

struct CensusFilter {
    int n = 5;
    bool require_all_vertices = false;
    bool forbid_cone_vertex = false;
    bool forbid_twin_vertices = false;
    bool exclude_full_simplex = false;

    // Every vertex used and the ideal nonzero: I_Δ has no linear generators.
    static CensusFilter ideal(int n);
    // All four separation flags.
    static CensusFilter css(int n);
    static CensusFilter none(int n);
    // "ideal", "css", "none", or a '+'-joined flag list such as
    // "all-vertices+no-cone".
    static CensusFilter parse(const std::string& text, int n);
    std::string to_string() const;

    bool accepts(const SimplicialComplex& delta) const;
};

// Canonical representatives (labels "1".."n") of the isomorphism classes
// passing the filter, in ascending face-mask order.
std::vector<SimplicialComplex> enumerate_complexes(const CensusFilter& filter);

struct CensusEntry {
    SubsetMask key = 0;  // orbit-minimal face mask of the class
    BettiDiagram diagram;
};

struct CensusReport {
    CensusFilter filter;
    FieldSpec field = FieldSpec::rationals();
    std::vector<CensusEntry> entries;  // ascending key
    // Distinct diagrams with the number of classes realizing each.
    std::map<BettiDiagram, std::uint64_t> diagrams;

    std::uint64_t class_count() const { return entries.size(); }
    std::uint64_t distinct_diagram_count() const { return diagrams.size(); }
    std::uint64_t pure_diagram_count() const;
};

struct CensusOptions {
    int jobs = 1;
    // When set, finished classes are stored here and reused on the next run.
    std::optional<std::string> checkpoint_path;
    std::size_t checkpoint_every = 2000;
};

// Betti diagrams of I_Δ over every class passing the filter.
CensusReport census(const CensusFilter& filter, FieldSpec field, const CensusOptions& options = {});

// Pure diagrams of the report, sorted by (projective dimension, shift type).
std::vector<BettiDiagram> pure_diagram_list(const CensusReport& report);

// Exact test for v in the cone generated by gens (λ >= 0, Σ λ_k g_k = v).
// A floating-point phase one proposes a basis whose verdict is certified in
// exact arithmetic (a nonnegative basic solution or a Farkas vector); if
// certification fails, an exact rational simplex with Bland's rule decides.
bool is_in_cone(const std::vector<std::int64_t>& v, const std::vector<std::vector<std::int64_t>>& gens);

struct RaySet {
    int n = 0;
    int row_min = 0;
    int row_max = -1;
    int columns = 0;
    // Primitive vectors, coordinate (r, j) at index (r - row_min) * columns + j.
    std::vector<std::vector<std::int64_t>> rays;
    std::size_t rank = 0;

    BettiDiagram ray_diagram(std::size_t k) const;
};

RaySet extremal_rays(const std::vector<BettiDiagram>& diagrams);

}  // namespace purebetti
