#include "purebetti/betti.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "detail/homology_engine.hpp"
#include "purebetti/errors.hpp"
#include "purebetti/parallel.hpp"

namespace purebetti {

IndexSet boxplus(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    for (int x : a)
        for (int y : b) out.insert(x + y);
    return out;
}

IndexSet h_set(const SimplicialComplex& delta, const Face& sigma, FieldSpec field) {
    IndexSet out;
    for (const auto& [k, dim] : link_homology(delta, sigma, field)) out.insert(k);
    return out;
}

void BettiDiagram::add(int i, int d, std::uint64_t beta) {
    if (beta == 0) return;
    entries_[{i, d}] += beta;
}

std::uint64_t BettiDiagram::get(int i, int d) const {
    auto it = entries_.find({i, d});
    return it == entries_.end() ? 0 : it->second;
}

int BettiDiagram::projective_dimension() const {
    int p = -1;
    for (const auto& [key, beta] : entries_) p = std::max(p, key.first);
    return p;
}

std::vector<std::string> BettiDiagram::rows() const {
    std::vector<std::string> out;
    if (entries_.empty()) return out;
    int rmin = INT32_MAX, rmax = INT32_MIN;
    for (const auto& [key, beta] : entries_) {
        rmin = std::min(rmin, key.second - key.first);
        rmax = std::max(rmax, key.second - key.first);
    }
    int p = projective_dimension();
    for (int r = rmin; r <= rmax; ++r) {
        std::string line = std::to_string(r) + " |";
        for (int j = 0; j <= p; ++j) {
            std::uint64_t b = get(j, r + j);
            line += " " + (b ? std::to_string(b) : std::string("."));
        }
        out.push_back(line);
    }
    return out;
}

std::string BettiDiagram::render() const {
    std::string s;
    for (const auto& row : rows()) s += row + "\n";
    return s;
}

std::string BettiDiagram::render_inline() const {
    std::string s;
    for (const auto& row : rows()) {
        if (!s.empty()) s += " ; ";
        s += row;
    }
    return s;
}

BettiDiagram BettiDiagram::parse(const std::string& text, int n) {
    BettiDiagram b(n);
    std::stringstream all(text);
    std::string row;
    while (std::getline(all, row, ';')) {
        auto bar = row.find('|');
        if (bar == std::string::npos) throw DomainError("diagram row without '|': " + row);
        int r = std::stoi(row.substr(0, bar));
        std::stringstream cells(row.substr(bar + 1));
        std::string cell;
        int j = 0;
        while (cells >> cell) {
            if (cell != ".") b.add(j, r + j, std::stoull(cell));
            ++j;
        }
    }
    return b;
}

bool diagram_is_pure(const BettiDiagram& b) { return diagram_shift_type(b).has_value(); }

std::optional<std::vector<int>> diagram_shift_type(const BettiDiagram& b) {
    if (b.empty()) return std::nullopt;
    int p = b.projective_dimension();
    std::vector<int> shift(p + 1, -1);
    for (const auto& [key, beta] : b.entries()) {
        if (shift[key.first] >= 0) return std::nullopt;
        shift[key.first] = key.second;
    }
    for (int s : shift)
        if (s < 0) return std::nullopt;
    std::reverse(shift.begin(), shift.end());
    return shift;
}

std::optional<std::vector<int>> diagram_degree_type(const BettiDiagram& b) {
    auto shift = diagram_shift_type(b);
    if (!shift) return std::nullopt;
    std::vector<int> d;
    for (std::size_t k = 0; k + 1 < shift->size(); ++k) d.push_back((*shift)[k] - (*shift)[k + 1]);
    return d;
}

namespace {

template <class M>
std::vector<M> intersection_closure(const std::vector<M>& facets) {
    std::unordered_set<M, detail::MaskHash<M>> seen(facets.begin(), facets.end());
    std::vector<M> frontier(facets.begin(), facets.end());
    while (!frontier.empty()) {
        std::vector<M> next;
        for (const M& a : frontier)
            for (const M& F : facets) {
                M m = a & F;
                if (seen.insert(m).second) next.push_back(m);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

template <class M>
std::vector<CarryingFace> carrying_faces(const std::vector<Face>& facets, FieldSpec field, int jobs) {
    auto c = detail::compact<M>(facets);
    std::vector<M> candidates = intersection_closure(c.facets);
    std::vector<HomologyVector> homology(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t k) {
        homology[k] = detail::link_homology_compact(c.facets, candidates[k], field);
    });
    std::vector<CarryingFace> out;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (!homology[k].empty()) out.push_back({detail::expand(candidates[k], c.to_global), std::move(homology[k])});
    std::sort(out.begin(), out.end(),
              [](const CarryingFace& a, const CarryingFace& b) { return size_lex_less(a.face, b.face); });
    return out;
}

}  // namespace

std::vector<CarryingFace> homology_carrying_faces(const SimplicialComplex& delta, FieldSpec field, int jobs) {
    if (delta.is_void()) return {};
    if (detail::fits_word(delta)) return carrying_faces<std::uint64_t>(delta.facets(), field, jobs);
    return carrying_faces<Face>(delta.facets(), field, jobs);
}

IndexSet hh_set(const SimplicialComplex& delta, int m, FieldSpec field) {
    if (m < 0) throw DomainError("hh_set: size must be non-negative");
    IndexSet out;
    for (const auto& cf : homology_carrying_faces(delta, field))
        if (cf.face.count() == m)
            for (const auto& [k, dim] : cf.homology) out.insert(k);
    return out;
}

BettiDiagram betti_dual(const SimplicialComplex& delta, FieldSpec field, int jobs) {
    if (delta.is_void() || delta.facets().front() == delta.universe())
        throw DomainError("dual ideal is zero");
    int n = delta.universe_size();
    BettiDiagram b(n);
    for (const auto& cf : homology_carrying_faces(delta, field, jobs))
        for (const auto& [k, dim] : cf.homology) b.add(k + 1, n - cf.face.count(), dim);
    return b;
}

BettiDiagram betti_direct(const SimplicialComplex& delta, FieldSpec field) {
    if (delta.is_void()) throw DomainError("Stanley-Reisner ideal of the void complex is the unit ideal");
    if (delta.facets().front() == delta.universe()) throw DomainError("Stanley-Reisner ideal is zero");
    int n = delta.universe_size();
    if (n > 24) throw DomainError("betti_direct: universe too large for subset enumeration");
    std::vector<std::uint64_t> facets;
    for (const Face& F : delta.facets()) facets.push_back(F.word(0));
    BettiDiagram b(n);
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t w = 1; w < limit; ++w) {
        std::vector<std::uint64_t> restricted;
        restricted.reserve(facets.size());
        for (auto F : facets) restricted.push_back(F & w);
        restricted = detail::maximal(std::move(restricted));
        int d = std::popcount(w);
        for (const auto& [k, dim] : detail::reduced_homology_fast(std::move(restricted), field)) {
            int i = d - k - 2;
            if (i >= 0) b.add(i, d, dim);
        }
    }
    return b;
}

PrSummary pr_summary_from(const SimplicialComplex& delta, const std::vector<CarryingFace>& carrying) {
    PrSummary s;
    std::map<int, std::pair<int, Face>> first_by_degree;
    for (const auto& cf : carrying) {
        int size = cf.face.count();
        for (const auto& [k, dim] : cf.homology) {
            auto it = first_by_degree.find(k);
            if (it == first_by_degree.end()) {
                first_by_degree.emplace(k, std::make_pair(size, cf.face));
            } else if (it->second.first != size && !s.witness) {
                s.witness = std::make_pair(it->second.second, cf.face);
                s.shared_degree = k;
            }
        }
    }
    if (s.witness) return s;
    s.is_pr = true;
    int p = first_by_degree.rbegin()->first + 1;
    if (first_by_degree.begin()->first != -1 || static_cast<int>(first_by_degree.size()) != p + 1)
        throw ConsistencyError("gap in the homology degrees of links");
    // sizes[i] = s_i, the size of faces whose links carry degree i - 1.
    std::vector<int> size_of(p + 1);
    for (int i = 0; i <= p; ++i) size_of[i] = first_by_degree.at(i - 1).first;
    for (int i = p; i >= 0; --i) s.sizes.push_back(size_of[i]);
    for (int i = p; i >= 1; --i) {
        int d = size_of[i - 1] - size_of[i];
        if (d <= 0) throw ConsistencyError("face sizes of homology degrees are not decreasing");
        s.degree_type.push_back(d);
    }
    s.offset = size_of[p];
    for (int i = p; i >= 0; --i) s.shift_type.push_back(delta.universe_size() - size_of[i]);

    // The same data read from the complete homology index sets.
    std::map<int, IndexSet> hh;
    for (const auto& cf : carrying)
        for (const auto& [k, dim] : cf.homology) hh[cf.face.count()].insert(k);
    std::map<int, IndexSet> expected;
    int m = s.offset;
    for (int r = p + 1; r >= 1; --r) {
        expected[m] = {r - 2};
        if (r >= 2) m += s.degree_type[p + 1 - r];
    }
    if (hh != expected) throw ConsistencyError("degree type disagrees with the homology index table");
    return s;
}

PrSummary is_pr(const SimplicialComplex& delta, FieldSpec field, int jobs) {
    if (delta.is_void()) throw DomainError("is_pr: void complex");
    return pr_summary_from(delta, homology_carrying_faces(delta, field, jobs));
}

bool is_cohen_macaulay(const SimplicialComplex& delta, FieldSpec field, int jobs) {
    if (delta.is_void()) throw DomainError("is_cohen_macaulay: void complex");
    int dim = *delta.dim();
    for (const auto& cf : homology_carrying_faces(delta, field, jobs)) {
        for (const auto& [k, d] : cf.homology)
            if (k != dim - cf.face.count()) return false;
    }
    return true;
}

std::vector<Face> chain_descend(const SimplicialComplex& delta, const Face& sigma, int j, FieldSpec field) {
    if (j < 0) throw DomainError("chain_descend: degree must be non-negative");
    if (!h_set(delta, sigma, field).count(j))
        throw DomainError("chain_descend: link of the starting face has no homology in degree " + std::to_string(j));
    std::vector<Face> chain{sigma};
    Face cur = sigma;
    for (int i = j - 1; i >= -1; --i) {
        bool found = false;
        for (const Face& rho : link(delta, cur).all_faces()) {
            if (rho.empty()) continue;
            Face next = cur | rho;
            if (h_set(delta, next, field).count(i)) {
                chain.push_back(next);
                cur = next;
                found = true;
                break;
            }
        }
        if (!found) throw ConsistencyError("chain_descend: no superface carries degree " + std::to_string(i));
    }
    return chain;
}

}  // namespace purebetti
