#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "purebetti/complex.hpp"

namespace purebetti {

inline constexpr int kMaxEnumerationVertices = 6;

// A complex on [n] as the set of its faces: bit s is set iff the subset with
// characteristic vector s is a face.
using SubsetMask = std::uint64_t;

// Calls fn once per nonvoid simplicial complex on the vertex set [n], n <= 6.
void for_each_labeled_complex(int n, const std::function<void(SubsetMask)>& fn);

// Byte lookup tables applying each of the n! vertex permutations to a face mask.
class OrbitTables {
public:
    explicit OrbitTables(int n);
    int n() const { return n_; }
    int permutation_count() const { return perms_; }
    SubsetMask image(SubsetMask faces, int k) const;
    // True iff faces is the numerically smallest mask in its orbit.
    bool is_orbit_min(SubsetMask faces) const;
    SubsetMask orbit_min(SubsetMask faces) const;

private:
    int n_;
    int perms_ = 0;
    int bytes_ = 0;
    std::vector<SubsetMask> table_;
};

// Orbit-minimal masks of all nonvoid complexes on [n], ascending.
std::vector<SubsetMask> complex_class_representatives(int n);

// Facets of a face mask as subset masks.
std::vector<std::uint32_t> mask_facets(int n, SubsetMask faces);
SimplicialComplex complex_from_mask(int n, SubsetMask faces);
SubsetMask mask_from_complex(const SimplicialComplex& delta);

}  // namespace purebetti
