#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "purebetti/betti.hpp"
#include "purebetti/complex.hpp"

namespace purebetti {

// Boundary of the p-simplex on vertices "1".."p+1".
SimplicialComplex boundary_simplex(int p);

// ---- Intersection complexes ------------------------------------------------

// m = (m_1, ..., m_n): m_k vertices are shared by each k-element set of facets.
struct IntersectionSpec {
    std::vector<int> m;
};

SimplicialComplex intersection_complex(const IntersectionSpec& spec);
// Size of F_1 ∩ ... ∩ F_i by the closed formula.
std::int64_t intersection_meet_size(const IntersectionSpec& spec, int i);
// (d_p, ..., d_1)
std::vector<int> intersection_predicted_degree_type(const IntersectionSpec& spec);
// beta_0, ..., beta_p of the dual ideal.
std::vector<std::uint64_t> intersection_predicted_betti(const IntersectionSpec& spec);
// The unit vector e^n_p (all zeros when p = 0).
IntersectionSpec unit_spec(int n, int p);
// Returns the single (degree, dimension) of the homology of I(e^n_p).
std::pair<int, std::uint64_t> enp_homology_check(int n, int p);

// r-th difference sequence of s = (s_k, ..., s_1), in the same order.
std::vector<std::int64_t> difference_sequence(const std::vector<std::int64_t>& s, int r);
// (a_1, ..., a_k) with s_i = sum_j C(k-i, j) a_{i+j}, if nonnegative.
std::optional<std::vector<std::int64_t>> intersection_degree_witness(const std::vector<std::int64_t>& s);

std::uint64_t binomial(int n, int k);

// ---- Partition complexes ---------------------------------------------------

struct PartitionSpec {
    int a = 2;
    int p = 0;
    int m = 0;
    bool closed = false;
};

// Partitions of a+i-2 into i positive parts, lexicographically descending.
std::vector<std::vector<int>> partitions(int a, int i);

// Vertices x_0..x_p followed by y_i^j (0 <= i <= p, 1 <= j <= a-1).
LabelingPtr partition_labeling(int a, int p);
int x_vertex(int a, int p, int i);
int y_vertex(int a, int p, int i, int j);

// A subset of the partition vertex grid.
struct GridFace {
    int a = 2;
    int p = 0;
    Face bits;

    bool has_x(int i) const { return bits.test(x_vertex(a, p, i)); }
    bool has_y(int i, int j) const { return bits.test(y_vertex(a, p, i, j)); }
    int size() const { return bits.count(); }
    // Columns i holding some partition vertex y_i^j.
    std::vector<int> y_support() const;
    int x_count() const;
    int y_count() const;
    // y_i^j present implies y_i^1..y_i^{j-1} present.
    bool partition_complete() const;
    // Each column holds at most one of x_i and a partition vertex.
    bool separated() const;
    // Each column holds exactly one of x_i and a partition vertex.
    bool totally_separated() const;
};

// G^lambda_{p,i}; a is recovered from |lambda| = a + i - 2.
GridFace generating_set(int p, int i, const std::vector<int>& lambda);

SimplicialComplex partition_complex(const PartitionSpec& spec);
bool partition_facet_check(const GridFace& f, const PartitionSpec& spec);
// (d_p, ..., d_1) with d_m = a and every other entry 1.
std::vector<int> partition_predicted_degree_type(const PartitionSpec& spec);
// Predicted homology index set of the whole complex; throws
// ConsistencyError when the computed homology disagrees.
IndexSet partition_homology_check(const PartitionSpec& spec);
// Predicted h(delta, sigma) for a face of an open partition complex.
IndexSet partition_predicted_link_hset(const PartitionSpec& spec, const GridFace& sigma);

// Parses "intersection:1,1,0", "partition:a=3,p=2,m=1",
// "partition-closed:a=2,p=2,m=3" or "boundary-simplex:p=3".
SimplicialComplex from_recipe(const std::string& recipe);

}  // namespace purebetti
