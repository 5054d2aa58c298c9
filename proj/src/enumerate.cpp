#include "purebetti/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "purebetti/errors.hpp"

namespace purebetti {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxEnumerationVertices)
        throw DomainError("enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationVertices));
}

struct DownsetWalker {
    int n;
    int subsets;
    const std::function<void(SubsetMask)>& fn;

    // Subsets are decided in increasing numeric order, so every proper
    // subset of s has been decided before s.
    void walk(int s, SubsetMask faces) {
        if (s == subsets) {
            fn(faces);
            return;
        }
        bool allowed = true;
        for (int v = 0; v < n && allowed; ++v)
            if ((s >> v) & 1) allowed = (faces >> (s & ~(1 << v))) & 1;
        if (allowed) walk(s + 1, faces | (SubsetMask{1} << s));
        walk(s + 1, faces);
    }
};

}  // namespace

void for_each_labeled_complex(int n, const std::function<void(SubsetMask)>& fn) {
    check_n(n);
    DownsetWalker w{n, 1 << n, fn};
    // The empty face is always present: this skips only the void complex.
    w.walk(1, SubsetMask{1});
}

OrbitTables::OrbitTables(int n) : n_(n) {
    check_n(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int subsets = 1 << n;
    bytes_ = (subsets + 7) / 8;
    do {
        std::vector<int> image(subsets);
        for (int s = 0; s < subsets; ++s) {
            int t = 0;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1) t |= 1 << perm[v];
            image[s] = t;
        }
        for (int b = 0; b < bytes_; ++b)
            for (int byte = 0; byte < 256; ++byte) {
                SubsetMask out = 0;
                for (int bit = 0; bit < 8; ++bit) {
                    int s = b * 8 + bit;
                    if (s < subsets && ((byte >> bit) & 1)) out |= SubsetMask{1} << image[s];
                }
                table_.push_back(out);
            }
        ++perms_;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

SubsetMask OrbitTables::image(SubsetMask faces, int k) const {
    const SubsetMask* t = table_.data() + static_cast<std::size_t>(k) * bytes_ * 256;
    SubsetMask out = 0;
    for (int b = 0; b < bytes_; ++b) out |= t[b * 256 + ((faces >> (8 * b)) & 0xff)];
    return out;
}

bool OrbitTables::is_orbit_min(SubsetMask faces) const {
    for (int k = 1; k < perms_; ++k)
        if (image(faces, k) < faces) return false;
    return true;
}

SubsetMask OrbitTables::orbit_min(SubsetMask faces) const {
    SubsetMask best = faces;
    for (int k = 1; k < perms_; ++k) best = std::min(best, image(faces, k));
    return best;
}

std::vector<SubsetMask> complex_class_representatives(int n) {
    OrbitTables tables(n);
    std::vector<SubsetMask> out;
    for_each_labeled_complex(n, [&](SubsetMask faces) {
        if (tables.is_orbit_min(faces)) out.push_back(faces);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> mask_facets(int n, SubsetMask faces) {
    std::vector<std::uint32_t> out;
    for (int s = 0; s < (1 << n); ++s) {
        if (!((faces >> s) & 1)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((s >> v) & 1)) maximal = !((faces >> (s | (1 << v))) & 1);
        if (maximal) out.push_back(static_cast<std::uint32_t>(s));
    }
    return out;
}

SimplicialComplex complex_from_mask(int n, SubsetMask faces) {
    check_n(n);
    std::vector<Face> facets;
    for (auto s : mask_facets(n, faces)) {
        Face f;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) f.set(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_faces(numbered_labeling(n), std::move(facets));
}

SubsetMask mask_from_complex(const SimplicialComplex& delta) {
    int n = delta.universe_size();
    check_n(n);
    SubsetMask out = 0;
    for (const Face& F : delta.facets()) {
        auto top = static_cast<std::uint32_t>(F.word(0));
        for (std::uint32_t s = top;; s = (s - 1) & top) {
            out |= SubsetMask{1} << s;
            if (s == 0) break;
        }
    }
    return out;
}

}  // namespace purebetti
