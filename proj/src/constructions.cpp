#include "purebetti/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "purebetti/errors.hpp"

namespace purebetti {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

SimplicialComplex boundary_simplex(int p) {
    if (p < 0) throw DomainError("boundary_simplex: p must be non-negative");
    return SimplicialComplex::simplex_boundary(numbered_labeling(p + 1));
}

// ---- Intersection complexes ------------------------------------------------

namespace {

void validate(const IntersectionSpec& spec) {
    if (spec.m.empty()) throw DomainError("intersection spec must have n >= 1");
    for (int v : spec.m)
        if (v < 0) throw DomainError("intersection spec entries must be non-negative");
}

// p = largest k with m_k != 0; rejects specs outside the theorem range.
int theorem_range_p(const IntersectionSpec& spec) {
    validate(spec);
    if (spec.m.back() != 0) throw DomainError("intersection spec must have m_n = 0");
    int p = 0;
    for (int k = 1; k <= static_cast<int>(spec.m.size()); ++k)
        if (spec.m[k - 1] != 0) p = k;
    if (p == 0) throw DomainError("intersection spec must be nonzero");
    return p;
}

std::string set_label(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

}  // namespace

SimplicialComplex intersection_complex(const IntersectionSpec& spec) {
    validate(spec);
    int n = static_cast<int>(spec.m.size());
    if (n > 20) throw DomainError("intersection spec too long");
    // Subsets ordered by size, then lexicographically.
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < (1u << n); ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t x, std::uint32_t y) {
        int cx = std::popcount(x), cy = std::popcount(y);
        if (cx != cy) return cx < cy;
        std::uint32_t d = x ^ y;
        return (x & d & (~d + 1)) != 0;
    });
    std::vector<std::string> labels;
    std::vector<Face> facets(n);
    for (std::uint32_t s : subsets) {
        int size = std::popcount(s);
        std::vector<int> members;
        for (int j = 0; j < n; ++j)
            if ((s >> j) & 1u) members.push_back(j + 1);
        for (int r = 1; r <= spec.m[size - 1]; ++r) {
            int v = static_cast<int>(labels.size());
            labels.push_back("v" + set_label(members) + "^" + std::to_string(r));
            for (int j : members) facets[j - 1].set(v);
        }
    }
    return SimplicialComplex::from_faces(make_labeling(std::move(labels)), std::move(facets));
}

std::int64_t intersection_meet_size(const IntersectionSpec& spec, int i) {
    validate(spec);
    int n = static_cast<int>(spec.m.size());
    if (i < 1 || i > n) throw DomainError("intersection_meet_size: need 1 <= i <= n");
    std::int64_t total = 0;
    for (int j = 0; j <= n - i; ++j) total += static_cast<std::int64_t>(binomial(n - i, j)) * spec.m[i + j - 1];
    return total;
}

std::vector<int> intersection_predicted_degree_type(const IntersectionSpec& spec) {
    int p = theorem_range_p(spec);
    int n = static_cast<int>(spec.m.size());
    std::vector<int> out;
    for (int i = p; i >= 1; --i) {
        std::int64_t d = 0;
        for (int j = 0; j <= n - i - 1; ++j) d += static_cast<std::int64_t>(binomial(n - i - 1, j)) * spec.m[i + j - 1];
        out.push_back(static_cast<int>(d));
    }
    return out;
}

std::vector<std::uint64_t> intersection_predicted_betti(const IntersectionSpec& spec) {
    int p = theorem_range_p(spec);
    int n = static_cast<int>(spec.m.size());
    std::vector<std::uint64_t> out;
    for (int i = 0; i < p; ++i) out.push_back(binomial(n, i + 1));
    out.push_back(binomial(n - 1, p));
    return out;
}

IntersectionSpec unit_spec(int n, int p) {
    if (n < 1 || p < 0 || p > n - 1) throw DomainError("unit spec needs 0 <= p <= n-1");
    IntersectionSpec spec{std::vector<int>(n, 0)};
    if (p > 0) spec.m[p - 1] = 1;
    return spec;
}

std::pair<int, std::uint64_t> enp_homology_check(int n, int p) {
    auto h = reduced_homology(intersection_complex(unit_spec(n, p)), FieldSpec::rationals());
    if (h.size() != 1) throw ConsistencyError("homology of I(e^n_p) is not concentrated in one degree");
    auto [deg, dim] = *h.begin();
    if (deg != p - 1 || dim != binomial(n - 1, p))
        throw ConsistencyError("homology of I(e^n_p) differs from (p-1, C(n-1,p))");
    return {deg, dim};
}

std::vector<std::int64_t> difference_sequence(const std::vector<std::int64_t>& s, int r) {
    if (r < 0 || r >= static_cast<int>(s.size())) throw DomainError("difference_sequence: need 0 <= r < k");
    // Work with s_1..s_k in ascending index order.
    std::vector<std::int64_t> cur(s.rbegin(), s.rend());
    for (int step = 0; step < r; ++step) {
        std::vector<std::int64_t> next;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i] - cur[i + 1]);
        cur = std::move(next);
    }
    return {cur.rbegin(), cur.rend()};
}

std::optional<std::vector<std::int64_t>> intersection_degree_witness(const std::vector<std::int64_t>& s) {
    if (s.empty()) throw DomainError("intersection_degree_witness: empty sequence");
    for (auto v : s)
        if (v <= 0) throw DomainError("intersection_degree_witness: entries must be positive");
    int k = static_cast<int>(s.size());
    std::vector<std::int64_t> a(k);
    for (int r = 0; r < k; ++r) {
        std::int64_t lead = difference_sequence(s, r).front();
        if (lead < 0) return std::nullopt;
        a[k - r - 1] = lead;
    }
    return a;
}

// ---- Partition complexes ---------------------------------------------------

std::vector<std::vector<int>> partitions(int a, int i) {
    if (a < 2 || i < 1) throw DomainError("partitions: need a >= 2 and i >= 1");
    int total = a + i - 2;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Parts chosen largest first, so the output is lexicographically descending.
    auto rec = [&](auto&& self, int remaining, int parts_left, int max_part) -> void {
        if (parts_left == 0) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int part = std::min(max_part, remaining - (parts_left - 1)); part >= 1; --part) {
            if (part * parts_left < remaining) break;
            cur.push_back(part);
            self(self, remaining - part, parts_left - 1, part);
            cur.pop_back();
        }
    };
    rec(rec, total, i, total);
    return out;
}

int x_vertex(int, int, int i) { return i; }
int y_vertex(int a, int p, int i, int j) { return (p + 1) + i * (a - 1) + (j - 1); }

LabelingPtr partition_labeling(int a, int p) {
    std::vector<std::string> labels;
    for (int i = 0; i <= p; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 0; i <= p; ++i)
        for (int j = 1; j <= a - 1; ++j) labels.push_back("y" + std::to_string(i) + "^" + std::to_string(j));
    return make_labeling(std::move(labels));
}

std::vector<int> GridFace::y_support() const {
    std::vector<int> out;
    for (int i = 0; i <= p; ++i)
        for (int j = 1; j <= a - 1; ++j)
            if (has_y(i, j)) {
                out.push_back(i);
                break;
            }
    return out;
}

int GridFace::x_count() const {
    int c = 0;
    for (int i = 0; i <= p; ++i) c += has_x(i);
    return c;
}

int GridFace::y_count() const { return size() - x_count(); }

bool GridFace::partition_complete() const {
    for (int i = 0; i <= p; ++i)
        for (int j = 2; j <= a - 1; ++j)
            if (has_y(i, j) && !has_y(i, j - 1)) return false;
    return true;
}

bool GridFace::separated() const {
    for (int i = 0; i <= p; ++i) {
        bool y = false;
        for (int j = 1; j <= a - 1; ++j) y = y || has_y(i, j);
        if (y && has_x(i)) return false;
    }
    return true;
}

bool GridFace::totally_separated() const {
    for (int i = 0; i <= p; ++i) {
        bool y = false;
        for (int j = 1; j <= a - 1; ++j) y = y || has_y(i, j);
        if (y == has_x(i)) return false;
    }
    return true;
}

GridFace generating_set(int p, int i, const std::vector<int>& lambda) {
    if (static_cast<int>(lambda.size()) != i || i < 1) throw DomainError("generating_set: lambda must have i parts");
    if (i > p + 1) throw DomainError("generating_set: need i <= p+1");
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] < 1) throw DomainError("generating_set: parts must be positive");
        if (k && lambda[k] > lambda[k - 1]) throw DomainError("generating_set: parts must be weakly decreasing");
    }
    int a = std::accumulate(lambda.begin(), lambda.end(), 0) - i + 2;
    if (a < 2) throw DomainError("generating_set: lambda too small");
    GridFace g{a, p, {}};
    for (int k = i; k <= p; ++k) g.bits.set(x_vertex(a, p, k));
    for (int r = 0; r <= i - 1; ++r)
        for (int j = 1; j <= lambda[r]; ++j) g.bits.set(y_vertex(a, p, r, j));
    return g;
}

namespace {

void validate(const PartitionSpec& s) {
    if (s.a < 2) throw DomainError("partition spec needs a >= 2");
    if (s.p < -1) throw DomainError("partition spec needs p >= -1");
    if (s.m < 0 || s.m > s.p + 1) throw DomainError("partition spec needs 0 <= m <= p+1");
    if (s.p > 7) throw DomainError("partition spec needs p <= 7 for orbit enumeration");
}

Face x_block(int a, int p) {
    Face f;
    for (int i = 0; i <= p; ++i) f.set(x_vertex(a, p, i));
    return f;
}

}  // namespace

SimplicialComplex partition_complex(const PartitionSpec& spec) {
    validate(spec);
    const int a = spec.a, p = spec.p;
    auto labels = partition_labeling(a, p);
    std::vector<Face> facets;
    if (spec.m == 0) facets.push_back(Face{});
    std::vector<int> perm(p + 1);
    for (int i = 1; i <= spec.m; ++i) {
        for (const auto& lambda : partitions(a, i)) {
            GridFace g = generating_set(p, i, lambda);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                Face f;
                for (int k = 0; k <= p; ++k) {
                    if (g.has_x(k)) f.set(x_vertex(a, p, perm[k]));
                    for (int j = 1; j <= a - 1; ++j)
                        if (g.has_y(k, j)) f.set(y_vertex(a, p, perm[k], j));
                }
                facets.push_back(f);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    if (spec.closed) facets.push_back(x_block(a, p));
    return SimplicialComplex::from_faces(labels, std::move(facets));
}

bool partition_facet_check(const GridFace& f, const PartitionSpec& spec) {
    validate(spec);
    if (f.a != spec.a || f.p != spec.p) throw DomainError("partition_facet_check: grid mismatch");
    if (spec.closed && f.bits == x_block(spec.a, spec.p)) return true;
    if (spec.m == 0) return !spec.closed && f.bits.empty();
    int support = static_cast<int>(f.y_support().size());
    return f.partition_complete() && f.totally_separated() && f.size() == spec.a + spec.p - 1 && support >= 1 &&
           support <= spec.m;
}

std::vector<int> partition_predicted_degree_type(const PartitionSpec& spec) {
    validate(spec);
    if (spec.p < 1 || spec.m < 1 || spec.m > spec.p)
        throw DomainError("predicted degree type needs 1 <= m <= p");
    std::vector<int> d(spec.p, 1);
    d[spec.p - spec.m] = spec.a;
    return d;
}

IndexSet partition_homology_check(const PartitionSpec& spec) {
    validate(spec);
    const int p = spec.p, m = spec.m;
    IndexSet predicted;
    if (!spec.closed) {
        if (m == 0)
            predicted = {-1};
        else if (m <= p)
            predicted = {p - 1};
    } else if (m == p + 1) {
        predicted = {p};
    }
    auto h = reduced_homology(partition_complex(spec), FieldSpec::rationals());
    IndexSet computed;
    for (const auto& [k, dim] : h) {
        computed.insert(k);
        if (dim != 1) throw ConsistencyError("partition complex homology has dimension other than 1");
    }
    if (computed != predicted) throw ConsistencyError("partition complex homology differs from the prediction");
    return predicted;
}

IndexSet partition_predicted_link_hset(const PartitionSpec& spec, const GridFace& sigma) {
    validate(spec);
    if (spec.closed || spec.m < 1) throw DomainError("link prediction needs an open complex with m >= 1");
    if (!sigma.partition_complete()) return {};
    int sx = sigma.x_count(), sy = sigma.y_count(), size = sigma.size();
    if (sy == 0 && sx <= spec.p - spec.m) return {spec.p - size - 1};
    if (sy > 0 && sx >= spec.p - spec.m + 1 && sy >= spec.a - 1) return {spec.a + spec.p - size - 2};
    return {};
}

namespace {

std::map<std::string, int> parse_keys(const std::string& body) {
    std::map<std::string, int> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("recipe parameter without '=': " + item);
        out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    }
    return out;
}

int need(const std::map<std::string, int>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw DomainError("recipe is missing '" + key + "'");
    return it->second;
}

}  // namespace

SimplicialComplex from_recipe(const std::string& recipe) {
    auto colon = recipe.find(':');
    if (colon == std::string::npos) throw DomainError("recipe needs the form kind:params");
    std::string kind = recipe.substr(0, colon), body = recipe.substr(colon + 1);
    try {
        if (kind == "intersection") {
            IntersectionSpec spec;
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) spec.m.push_back(std::stoi(item));
            return intersection_complex(spec);
        }
        if (kind == "partition" || kind == "partition-closed") {
            auto kv = parse_keys(body);
            return partition_complex({need(kv, "a"), need(kv, "p"), need(kv, "m"), kind == "partition-closed"});
        }
        if (kind == "boundary-simplex") return boundary_simplex(need(parse_keys(body), "p"));
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed recipe '" + recipe + "'");
    } catch (const std::out_of_range&) {
        throw DomainError("malformed recipe '" + recipe + "'");
    }
    throw DomainError("unknown recipe kind '" + kind + "'");
}

}  // namespace purebetti
