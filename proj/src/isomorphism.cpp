#include "purebetti/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "purebetti/errors.hpp"

namespace purebetti {

namespace {

using Coloring = std::vector<int>;

class CanonSearch {
public:
    CanonSearch(const SimplicialComplex& delta, std::size_t budget)
        : n_(delta.universe_size()), budget_(budget) {
        for (const Face& F : delta.facets()) facets_.push_back(F.indices());
        incident_.resize(n_);
        for (int f = 0; f < static_cast<int>(facets_.size()); ++f)
            for (int v : facets_[f]) incident_[v].push_back(f);
    }

    CanonicalResult run() {
        Coloring start(n_, 0);
        search(start, {});
        std::vector<int> perm(best_perm_);
        auto labels = numbered_labeling(n_);
        return {SimplicialComplex::from_faces(labels, best_key_), perm};
    }

private:
    // Refines until the number of cells stops growing; colors are ranks of
    // isomorphism-invariant signatures, so the result is label independent.
    Coloring refine(Coloring colors) const {
        int cells = count_cells(colors);
        while (true) {
            std::vector<std::vector<int>> fsig(facets_.size());
            for (std::size_t f = 0; f < facets_.size(); ++f) {
                for (int v : facets_[f]) fsig[f].push_back(colors[v]);
                std::sort(fsig[f].begin(), fsig[f].end());
            }
            std::vector<int> fcolor = rank(fsig);
            std::vector<std::vector<int>> vsig(n_);
            for (int v = 0; v < n_; ++v) {
                vsig[v].push_back(colors[v]);
                std::vector<int> around;
                for (int f : incident_[v]) around.push_back(fcolor[f]);
                std::sort(around.begin(), around.end());
                vsig[v].insert(vsig[v].end(), around.begin(), around.end());
            }
            Coloring next = rank(vsig);
            int next_cells = count_cells(next);
            colors = std::move(next);
            if (next_cells == cells) return colors;
            cells = next_cells;
        }
    }

    static std::vector<int> rank(const std::vector<std::vector<int>>& sigs) {
        std::vector<std::vector<int>> sorted(sigs);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> out(sigs.size());
        for (std::size_t i = 0; i < sigs.size(); ++i)
            out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
        return out;
    }

    static int count_cells(const Coloring& c) {
        std::vector<int> s(c);
        std::sort(s.begin(), s.end());
        return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
    }

    Coloring individualize(const Coloring& colors, int v) const {
        Coloring out(n_);
        for (int w = 0; w < n_; ++w) out[w] = 2 * colors[w] + ((colors[w] == colors[v] && w != v) ? 1 : 0);
        return rank_flat(out);
    }

    static Coloring rank_flat(const Coloring& c) {
        std::vector<int> s(c);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        Coloring out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            out[i] = static_cast<int>(std::lower_bound(s.begin(), s.end(), c[i]) - s.begin());
        return out;
    }

    std::vector<Face> key_for(const std::vector<int>& perm) const {
        std::vector<Face> key;
        for (const auto& f : facets_) {
            Face g;
            for (int v : f) g.set(perm[v]);
            key.push_back(g);
        }
        std::sort(key.begin(), key.end(), size_lex_less);
        return key;
    }

    static int compare_keys(const std::vector<Face>& a, const std::vector<Face>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (size_lex_less(a[i], b[i])) return -1;
            if (size_lex_less(b[i], a[i])) return 1;
        }
        return 0;
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        // gamma maps v to the vertex that 'from' places where 'to' places v.
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v) inv[from[v]] = v;
        std::vector<int> gamma(n_);
        for (int v = 0; v < n_; ++v) gamma[v] = inv[to[v]];
        automorphisms_.push_back(std::move(gamma));
    }

    void visit_leaf(const Coloring& colors) {
        if (++leaves_ > budget_) throw DomainError("canonical form search exceeded its leaf budget");
        std::vector<int> perm(colors.begin(), colors.end());
        auto key = key_for(perm);
        if (best_perm_.empty()) {
            best_perm_ = perm;
            best_key_ = std::move(key);
            first_perm_ = perm;
            return;
        }
        int cmp = compare_keys(key, best_key_);
        if (cmp == 0) {
            record_automorphism(best_perm_, perm);
        } else if (cmp < 0) {
            best_perm_ = perm;
            best_key_ = std::move(key);
        } else if (key_for(first_perm_) == key) {
            record_automorphism(first_perm_, perm);
        }
    }

    // Orbit representative of w under automorphisms fixing every vertex of path.
    std::vector<int> orbits_fixing(const std::vector<int>& path) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& g : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return g[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) parent[find(v)] = find(g[v]);
        }
        std::vector<int> rep(n_);
        for (int v = 0; v < n_; ++v) rep[v] = find(v);
        return rep;
    }

    void search(const Coloring& input, std::vector<int> path) {
        Coloring colors = refine(input);
        // Smallest color class with more than one vertex.
        std::vector<int> size(n_, 0);
        for (int c : colors) ++size[c];
        int target = -1;
        for (int c = 0; c < n_; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            visit_leaf(colors);
            return;
        }
        std::vector<int> explored;
        for (int v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            if (!explored.empty()) {
                auto rep = orbits_fixing(path);
                bool seen = std::any_of(explored.begin(), explored.end(), [&](int e) { return rep[e] == rep[v]; });
                if (seen) continue;
            }
            explored.push_back(v);
            path.push_back(v);
            search(individualize(colors, v), path);
            path.pop_back();
        }
    }

    int n_;
    std::size_t budget_;
    std::size_t leaves_ = 0;
    std::vector<std::vector<int>> facets_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> best_perm_;
    std::vector<int> first_perm_;
    std::vector<Face> best_key_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalResult canonical_labeling(const SimplicialComplex& delta, std::size_t leaf_budget) {
    return CanonSearch(delta, leaf_budget).run();
}

SimplicialComplex canonical_form(const SimplicialComplex& delta) {
    return canonical_labeling(delta).complex;
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.universe_size() != b.universe_size()) return false;
    if (a.facets().size() != b.facets().size()) return false;
    for (std::size_t i = 0; i < a.facets().size(); ++i)
        if (a.facets()[i].count() != b.facets()[i].count()) return false;
    return canonical_form(a).facets() == canonical_form(b).facets();
}

}  // namespace purebetti
