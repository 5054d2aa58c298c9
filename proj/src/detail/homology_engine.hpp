#pragma once

#include <unordered_map>
#include <vector>

#include "detail/masks.hpp"
#include "detail/rank.hpp"
#include "purebetti/homology.hpp"

namespace purebetti::detail {

// Reduced homology of the complex generated by the given facets.
template <class M>
HomologyVector homology_of(const std::vector<M>& facets, FieldSpec field) {
    HomologyVector out;
    if (facets.empty()) return out;
    auto layers = faces_by_size(facets);
    int top = static_cast<int>(layers.size()) - 1;
    std::vector<std::size_t> rank_from(top + 2, 0);
    std::vector<char> cleared;
    for (int s = top; s >= 1; --s) {
        const auto& rows = layers[s - 1];
        std::unordered_map<M, std::uint32_t, MaskHash<M>> row_index;
        row_index.reserve(rows.size() * 2);
        for (std::uint32_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
        std::vector<IntColumn> cols;
        cols.reserve(layers[s].size());
        for (std::size_t c = 0; c < layers[s].size(); ++c) {
            if (!cleared.empty() && cleared[c]) continue;
            const M& sigma = layers[s][c];
            IntColumn col;
            int t = 0;
            bits(sigma, [&](int v) {
                M face = sigma;
                drop(face, v);
                col.emplace_back(row_index.at(face), (t % 2 == 0) ? 1 : -1);
                ++t;
            });
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        RankResult r = rank_with_pivots(std::move(cols), rows.size(), field.is_rational(), field.characteristic());
        rank_from[s] = r.rank;
        cleared.assign(rows.size(), 0);
        for (auto row : r.pivot_rows) cleared[row] = 1;
    }
    for (int k = 0; k <= top; ++k) {
        std::size_t h = layers[k].size() - rank_from[k] - rank_from[k + 1];
        if (h) out[k - 1] = h;
    }
    return out;
}

// Repeatedly deletes vertices a for which every facet containing a also
// contains some fixed b != a. Each deletion is a free-pair collapse of
// ({a}, {a, b}), so homology is preserved.
template <class M>
std::vector<M> strong_core(std::vector<M> facets) {
    bool changed = true;
    while (changed) {
        changed = false;
        M used{};
        for (const M& F : facets)
            bits(F, [&](int v) { add(used, v); });
        std::vector<int> verts;
        bits(used, [&](int v) { verts.push_back(v); });
        for (int a : verts) {
            M common{};
            bool any = false;
            for (const M& F : facets) {
                if (!has(F, a)) continue;
                if (!any) {
                    common = F;
                    any = true;
                } else {
                    if constexpr (std::is_same_v<M, std::uint64_t>)
                        common &= F;
                    else
                        common = common & F;
                }
                if (popc(common) == 1) break;
            }
            if (!any || popc(common) <= 1) continue;
            for (M& F : facets)
                if (has(F, a)) drop(F, a);
            facets = maximal(std::move(facets));
            changed = true;
        }
    }
    return facets;
}

template <class M>
HomologyVector reduced_homology_fast(std::vector<M> facets, FieldSpec field) {
    if (facets.empty()) return {};
    if (facets.size() == 1) {
        if (is_empty(facets[0])) return {{-1, 1}};
        return {};
    }
    facets = strong_core(std::move(facets));
    if (facets.size() == 1) return is_empty(facets[0]) ? HomologyVector{{-1, 1}} : HomologyVector{};
    return homology_of(facets, field);
}

// Link facets of f inside a facet list.
template <class M>
std::vector<M> link_facets(const std::vector<M>& facets, const M& f) {
    std::vector<M> out;
    for (const M& F : facets)
        if (subset(f, F)) out.push_back(minus(F, f));
    return out;
}

// Link homology for a complex given in compact form; re-compacts the link so
// that large universes fall back to word-sized masks whenever possible.
template <class M>
HomologyVector link_homology_compact(const std::vector<M>& facets, const M& f, FieldSpec field) {
    std::vector<M> lk = link_facets(facets, f);
    if constexpr (std::is_same_v<M, std::uint64_t>) {
        return reduced_homology_fast(std::move(lk), field);
    } else {
        Face used;
        for (const Face& F : lk) used |= F;
        if (used.count() <= 64) {
            auto c = compact<std::uint64_t>(lk);
            return reduced_homology_fast(std::move(c.facets), field);
        }
        return reduced_homology_fast(std::move(lk), field);
    }
}

}  // namespace purebetti::detail
