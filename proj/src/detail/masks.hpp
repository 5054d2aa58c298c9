#pragma once

// Uniform helpers over the two face representations used by the engines:
// a 64-bit word for small vertex sets and Face for everything else.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "purebetti/complex.hpp"
#include "purebetti/face.hpp"

namespace purebetti::detail {

inline int popc(std::uint64_t m) { return std::popcount(m); }
inline int popc(const Face& m) { return m.count(); }

inline bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }
inline bool subset(const Face& a, const Face& b) { return a.is_subset_of(b); }

inline bool has(std::uint64_t m, int i) { return (m >> i) & 1u; }
inline bool has(const Face& m, int i) { return m.test(i); }

inline void add(std::uint64_t& m, int i) { m |= std::uint64_t{1} << i; }
inline void add(Face& m, int i) { m.set(i); }
inline void drop(std::uint64_t& m, int i) { m &= ~(std::uint64_t{1} << i); }
inline void drop(Face& m, int i) { m.reset(i); }

inline std::uint64_t minus(std::uint64_t a, std::uint64_t b) { return a & ~b; }
inline Face minus(const Face& a, const Face& b) { return a - b; }

inline bool is_empty(std::uint64_t m) { return m == 0; }
inline bool is_empty(const Face& m) { return m.empty(); }

inline int lowest(std::uint64_t m) { return m ? std::countr_zero(m) : -1; }
inline int lowest(const Face& m) { return m.first(); }

template <class Fn>
inline void bits(std::uint64_t m, Fn&& fn) {
    while (m) {
        fn(std::countr_zero(m));
        m &= m - 1;
    }
}
template <class Fn>
inline void bits(const Face& m, Fn&& fn) {
    m.for_each(fn);
}

inline bool lex_before(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    return d && (a & d & (~d + 1));
}
inline bool lex_before(const Face& a, const Face& b) { return lex_less(a, b); }

template <class M>
bool size_lex_before(const M& a, const M& b) {
    int ca = popc(a), cb = popc(b);
    if (ca != cb) return ca < cb;
    return lex_before(a, b);
}

template <class M>
struct MaskHash {
    std::size_t operator()(const M& m) const { return std::hash<M>{}(m); }
};

// Inclusion-maximal elements of a mask list, in (size, lex) order.
template <class M>
std::vector<M> maximal(std::vector<M> faces) {
    std::sort(faces.begin(), faces.end(), [](const M& a, const M& b) { return size_lex_before(b, a); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<M> kept;
    for (const M& f : faces) {
        bool covered = false;
        for (const M& k : kept)
            if (subset(f, k)) {
                covered = true;
                break;
            }
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), size_lex_before<M>);
    return kept;
}

// A facet list re-indexed onto the vertices it actually uses.
template <class M>
struct Compact {
    std::vector<M> facets;
    std::vector<int> to_global;
};

inline bool fits_word(const SimplicialComplex& delta) { return delta.vertex_set().count() <= 64; }

template <class M>
Compact<M> compact(const std::vector<Face>& facets) {
    Face used;
    for (const Face& F : facets) used |= F;
    Compact<M> out;
    std::vector<int> local(used.span(), -1);
    used.for_each([&](int v) {
        local[v] = static_cast<int>(out.to_global.size());
        out.to_global.push_back(v);
    });
    for (const Face& F : facets) {
        M m{};
        F.for_each([&](int v) { add(m, local[v]); });
        out.facets.push_back(m);
    }
    return out;
}

template <class M>
Face expand(const M& m, const std::vector<int>& to_global) {
    Face f;
    bits(m, [&](int i) { f.set(to_global[i]); });
    return f;
}

template <class M>
M restrict_to(const Face& f, const std::vector<int>& to_global) {
    M m{};
    for (int i = 0; i < static_cast<int>(to_global.size()); ++i)
        if (f.test(to_global[i])) add(m, i);
    return m;
}

// All faces of the complex spanned by the given facets, grouped by size.
template <class M>
std::vector<std::vector<M>> faces_by_size(const std::vector<M>& facets) {
    std::vector<std::vector<M>> layers;
    if (facets.empty()) return layers;
    int top = 0;
    for (const M& F : facets) top = std::max(top, popc(F));
    layers.resize(top + 1);
    std::unordered_set<M, MaskHash<M>> seen;
    for (const M& F : facets) {
        if constexpr (std::is_same_v<M, std::uint64_t>) {
            std::uint64_t s = F;
            while (true) {
                if (seen.insert(s).second) layers[popc(s)].push_back(s);
                if (s == 0) break;
                s = (s - 1) & F;
            }
        } else {
            std::vector<int> idx;
            bits(F, [&](int i) { idx.push_back(i); });
            int k = static_cast<int>(idx.size());
            std::uint64_t limit = std::uint64_t{1} << k;
            for (std::uint64_t s = 0; s < limit; ++s) {
                M m{};
                for (int b = 0; b < k; ++b)
                    if ((s >> b) & 1u) add(m, idx[b]);
                if (seen.insert(m).second) layers[popc(m)].push_back(m);
            }
        }
    }
    for (auto& layer : layers) std::sort(layer.begin(), layer.end(), [](const M& a, const M& b) { return lex_before(a, b); });
    return layers;
}

}  // namespace purebetti::detail
