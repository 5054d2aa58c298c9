#include "oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

void add_subsets(const VSet& f, std::set<VSet>& out) {
    std::size_t k = f.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        VSet sub;
        for (std::size_t b = 0; b < k; ++b)
            if (s >> b & 1) sub.push_back(f[b]);
        out.insert(sub);
    }
}

bool subset(const VSet& a, const VSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

VSet set_union(const VSet& a, const VSet& b) {
    VSet u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

VSet set_minus(const VSet& a, const VSet& b) {
    VSet u;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

bool disjoint(const VSet& a, const VSet& b) { return set_minus(a, b).size() == a.size(); }

// Dense rank by Gaussian elimination.
std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

std::size_t rank_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t r = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t q = r;
        while (q < rows && m[q][c] == 0) ++q;
        if (q == rows) continue;
        std::swap(m[q], m[r]);
        std::uint64_t inv = pow_mod(m[r][c], p - 2, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            std::uint64_t f = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

// Rank of the boundary map from faces of size k to faces of size k - 1.
std::size_t boundary_rank(const std::vector<VSet>& upper, const std::vector<VSet>& lower, std::uint32_t p) {
    if (upper.empty() || lower.empty()) return 0;
    std::map<VSet, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    if (p == 0) {
        std::vector<std::vector<mpq_class>> m(lower.size(), std::vector<mpq_class>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c)
            for (std::size_t k = 0; k < upper[c].size(); ++k) {
                VSet f = upper[c];
                f.erase(f.begin() + static_cast<long>(k));
                m[index.at(f)][c] = (k % 2) ? -1 : 1;
            }
        return rank_q(std::move(m));
    }
    std::vector<std::vector<std::uint64_t>> m(lower.size(), std::vector<std::uint64_t>(upper.size(), 0));
    for (std::size_t c = 0; c < upper.size(); ++c)
        for (std::size_t k = 0; k < upper[c].size(); ++k) {
            VSet f = upper[c];
            f.erase(f.begin() + static_cast<long>(k));
            m[index.at(f)][c] = (k % 2) ? p - 1 : 1;
        }
    return rank_p(std::move(m), p);
}

}  // namespace

Cx from_facets(int n, const std::vector<VSet>& generators) {
    Cx c;
    c.n = n;
    for (VSet g : generators) {
        std::sort(g.begin(), g.end());
        add_subsets(g, c.faces);
    }
    return c;
}

Cx from_complex(const purebetti::SimplicialComplex& delta) {
    std::vector<VSet> gens;
    for (const auto& f : delta.facets()) gens.push_back(f.indices());
    return from_facets(delta.universe_size(), gens);
}

std::set<VSet> facet_set(const Cx& c) {
    std::set<VSet> out;
    for (const auto& f : c.faces) {
        bool maximal = true;
        for (const auto& g : c.faces)
            if (g.size() > f.size() && subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) out.insert(f);
    }
    return out;
}

std::set<VSet> facet_set(const purebetti::SimplicialComplex& delta) {
    std::set<VSet> out;
    for (const auto& f : delta.facets()) out.insert(f.indices());
    return out;
}

bool same_faces(const Cx& c, const purebetti::SimplicialComplex& delta) {
    return c.n == delta.universe_size() && from_complex(delta).faces == c.faces;
}

Cx link(const Cx& c, const VSet& f) {
    Cx out;
    out.n = c.n;
    for (const auto& s : c.faces)
        if (disjoint(s, f) && c.faces.count(set_union(s, f))) out.faces.insert(s);
    return out;
}

Cx dual(const Cx& c) {
    Cx out;
    out.n = c.n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n); ++s) {
        VSet f, comp;
        for (int v = 0; v < c.n; ++v) (s >> v & 1 ? f : comp).push_back(v);
        if (!c.faces.count(comp)) out.faces.insert(f);
    }
    return out;
}

Cx induced(const Cx& c, const VSet& w) {
    Cx out;
    out.n = c.n;
    for (const auto& f : c.faces)
        if (subset(f, w)) out.faces.insert(f);
    return out;
}

Cx join(const Cx& a, const Cx& b) {
    Cx out;
    out.n = a.n + b.n;
    for (const auto& f : a.faces)
        for (const auto& g : b.faces) {
            VSet u = f;
            for (int v : g) u.push_back(v + a.n);
            out.faces.insert(u);
        }
    return out;
}

bool is_cone(const Cx& c) {
    if (c.faces.empty()) return false;
    for (int v = 0; v < c.n; ++v) {
        bool all = true;
        for (const auto& f : facet_set(c))
            if (!std::binary_search(f.begin(), f.end(), v)) all = false;
        if (all) return true;
    }
    return false;
}

std::map<int, std::uint64_t> homology(const Cx& c, std::uint32_t p) {
    std::map<int, std::uint64_t> out;
    if (c.faces.empty()) return out;
    std::size_t top = 0;
    for (const auto& f : c.faces) top = std::max(top, f.size());
    std::vector<std::vector<VSet>> by_size(top + 2);
    for (const auto& f : c.faces) by_size[f.size()].push_back(f);
    std::vector<std::size_t> rk(top + 2, 0);  // rk[k]: boundary from size k to size k-1
    for (std::size_t k = 1; k <= top; ++k) rk[k] = boundary_rank(by_size[k], by_size[k - 1], p);
    for (std::size_t k = 0; k <= top; ++k) {
        std::int64_t dim = static_cast<std::int64_t>(by_size[k].size()) - static_cast<std::int64_t>(rk[k]) -
                           static_cast<std::int64_t>(rk[k + 1]);
        if (dim > 0) out[static_cast<int>(k) - 1] = static_cast<std::uint64_t>(dim);
    }
    return out;
}

Diagram betti_direct(const Cx& c, std::uint32_t p) {
    Diagram out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n); ++s) {
        VSet w;
        for (int v = 0; v < c.n; ++v)
            if (s >> v & 1) w.push_back(v);
        int d = static_cast<int>(w.size());
        for (const auto& [k, dim] : homology(induced(c, w), p)) {
            int i = d - k - 2;
            if (i >= 0) out[{i, d}] += dim;
        }
    }
    return out;
}

Diagram betti_dual(const Cx& c, std::uint32_t p) {
    Diagram out;
    for (const auto& f : c.faces) {
        int d = c.n - static_cast<int>(f.size());
        for (const auto& [k, dim] : homology(link(c, f), p)) out[{k + 1, d}] += dim;
    }
    return out;
}

Diagram to_map(const purebetti::BettiDiagram& b) {
    Diagram out;
    for (const auto& [key, beta] : b.entries()) out[key] = beta;
    return out;
}

bool isomorphic(const Cx& a, const Cx& b) {
    if (a.n != b.n || a.faces.size() != b.faces.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& f : a.faces) {
            VSet g;
            for (int v : f) g.push_back(perm[static_cast<std::size_t>(v)]);
            std::sort(g.begin(), g.end());
            if (!b.faces.count(g)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::set<PhiFace> phi_faces(const Cx& c, int i) {
    int dim = -1;
    for (const auto& f : c.faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    std::vector<VSet> big;
    for (const auto& f : c.faces)
        if (static_cast<int>(f.size()) >= dim + 2 - i) big.push_back(f);
    std::set<PhiFace> out;
    // Extend each (σ, chain) by any strictly larger member of `big`.
    std::vector<PhiFace> stack;
    for (const auto& s : c.faces) stack.push_back({s, {}});
    while (!stack.empty()) {
        PhiFace cur = stack.back();
        stack.pop_back();
        if (!out.insert(cur).second) continue;
        const VSet& last = cur.chain.empty() ? cur.base : cur.chain.back();
        for (const auto& t : big) {
            bool ok = cur.chain.empty() ? subset(last, t) : (subset(last, t) && t.size() > last.size());
            if (!ok) continue;
            PhiFace next = cur;
            next.chain.push_back(t);
            stack.push_back(std::move(next));
        }
    }
    return out;
}

std::uint64_t count_downsets(int n) {
    // Downsets of [k] as sets of subset masks, built level by level.
    std::vector<std::set<std::uint32_t>> level{{}, {0}};  // [0]: void and {∅}
    for (int k = 0; k < n; ++k) {
        std::vector<std::set<std::uint32_t>> next;
        for (const auto& lower : level)
            for (const auto& upper : level) {
                if (!std::includes(upper.begin(), upper.end(), lower.begin(), lower.end())) continue;
                std::set<std::uint32_t> d = upper;
                for (auto s : lower) d.insert(s | (1u << k));
                next.push_back(std::move(d));
            }
        level = std::move(next);
    }
    return level.size();
}

Cx random_complex(std::mt19937_64& rng, int n, int max_facets) {
    std::uniform_int_distribution<int> count(1, max_facets), size(0, n);
    std::vector<VSet> gens;
    int k = count(rng);
    for (int t = 0; t < k; ++t) {
        VSet all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(size(rng)));
        gens.push_back(all);
    }
    return from_facets(n, gens);
}

purebetti::SimplicialComplex to_complex(const Cx& c) {
    std::vector<purebetti::Face> gens;
    for (const auto& f : facet_set(c)) gens.push_back(purebetti::Face::from_indices(f));
    auto labels = purebetti::numbered_labeling(c.n);
    if (c.faces.empty()) return purebetti::SimplicialComplex::void_complex(labels);
    return purebetti::SimplicialComplex::from_faces(labels, gens);
}

}  // namespace oracle
