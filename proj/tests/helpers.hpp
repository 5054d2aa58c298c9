#pragma once

#include <string>
#include <vector>

#include "purebetti/complex.hpp"
#include "purebetti/constructions.hpp"
#include "purebetti/homology.hpp"

namespace fixtures {

inline purebetti::SimplicialComplex complex_of(int n, const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return purebetti::SimplicialComplex::from_facets(labels, facets);
}

// Three triangles on six vertices pairwise meeting in single vertices.
inline purebetti::SimplicialComplex three_triangles() {
    return complex_of(6, {{"1", "3", "5"}, {"2", "3", "4"}, {"1", "2", "6"}});
}

// Six-vertex triangulation of the real projective plane.
inline purebetti::SimplicialComplex rp2() {
    return complex_of(6, {{"1", "2", "4"}, {"1", "2", "6"}, {"1", "3", "5"}, {"1", "3", "6"}, {"1", "4", "5"},
                          {"2", "3", "4"}, {"2", "3", "5"}, {"2", "5", "6"}, {"3", "4", "6"}, {"4", "5", "6"}});
}

inline purebetti::HomologyVector hv(std::initializer_list<std::pair<const int, std::uint64_t>> items) {
    return purebetti::HomologyVector(items);
}

// Small complexes with at most ten vertices, pure ones first.
inline std::vector<purebetti::SimplicialComplex> small_corpus() {
    using namespace purebetti;
    return {boundary_simplex(2),
            boundary_simplex(3),
            three_triangles(),
            rp2(),
            partition_complex({2, 2, 1, false}),
            partition_complex({2, 2, 2, false}),
            partition_complex({3, 1, 1, false}),
            intersection_complex({{2, 1, 0}}),
            intersection_complex({{0, 1, 0, 0}}),
            complex_of(4, {{"1", "2"}, {"3", "4"}}),
            SimplicialComplex::simplex(numbered_labeling(3)),
            complex_of(5, {{"1", "2", "3"}, {"3", "4"}, {"4", "5"}}),
            complex_of(4, {{"1", "2"}, {"3"}, {"4"}})};
}

inline const purebetti::FieldSpec Q = purebetti::FieldSpec::rationals();
inline const purebetti::FieldSpec GF2 = purebetti::FieldSpec::prime(2);

}  // namespace fixtures
