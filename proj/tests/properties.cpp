#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "purebetti/betti.hpp"
#include "purebetti/isomorphism.hpp"

namespace props {

using namespace purebetti;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime(2);

SimplicialComplex random_complex(std::mt19937_64& rng, int max_n = 7) {
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
    return oracle::to_complex(oracle::random_complex(rng, n, 1 + static_cast<int>(rng() % 6)));
}

bool zero_ideal(const SimplicialComplex& d) { return d.is_void() || d.facets().front() == d.universe(); }

// Σ over faces (∅ included) of (-1)^dim.
std::int64_t euler_from_faces(const SimplicialComplex& d) {
    std::int64_t chi = 0;
    for (const Face& f : d.all_faces()) chi += (f.count() % 2 == 1) ? 1 : -1;
    return chi;
}

std::int64_t euler_from_homology(const HomologyVector& h) {
    std::int64_t chi = 0;
    for (const auto& [k, dim] : h) chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(dim);
    return chi;
}

SimplicialComplex with_prefix(const SimplicialComplex& d, const std::string& prefix) {
    std::vector<std::string> labels;
    for (int i = 0; i < d.universe_size(); ++i) labels.push_back(prefix + std::to_string(i + 1));
    if (d.is_void()) return SimplicialComplex::void_complex(make_labeling(labels));
    return SimplicialComplex::from_faces(make_labeling(labels), d.facets());
}

template <class Body>
Outcome run(const std::string& name, int cases, std::uint64_t seed, Body body) {
    std::mt19937_64 rng(seed);
    Outcome out{name, cases, 0};
    for (int t = 0; t < cases; ++t)
        if (!body(rng)) ++out.failures;
    return out;
}

}  // namespace

// Universal coefficients: dim over GF(p) dominates dim over Q degreewise,
// with equal Euler characteristic.
Outcome field_sensitivity(int cases, std::uint64_t seed) {
    return run("field sensitivity", cases, seed, [](std::mt19937_64& rng) {
        auto d = random_complex(rng);
        auto hq = reduced_homology(d, Q);
        for (std::uint32_t p : {2u, 3u}) {
            auto hp = reduced_homology(d, FieldSpec::prime(p));
            for (const auto& [k, dim] : hq)
                if (hp[k] < dim) return false;
            if (euler_from_homology(hp) != euler_from_homology(hq)) return false;
        }
        return true;
    });
}

Outcome kunneth(int cases, std::uint64_t seed) {
    return run("kunneth", cases, seed, [](std::mt19937_64& rng) {
        auto a = with_prefix(random_complex(rng, 4), "a");
        auto b = with_prefix(random_complex(rng, 4), "b");
        if (a.is_void() || b.is_void()) return true;
        for (FieldSpec f : {Q, GF2}) {
            HomologyVector expected;
            for (const auto& [i, x] : reduced_homology(a, f))
                for (const auto& [j, y] : reduced_homology(b, f)) expected[i + j + 1] += x * y;
            if (reduced_homology(join(a, b), f) != expected) return false;
        }
        return true;
    });
}

Outcome collapse_invariance(int cases, std::uint64_t seed) {
    return run("collapse invariance", cases, seed, [](std::mt19937_64& rng) {
        auto d = random_complex(rng);
        return reduced_homology(collapse(d), Q) == reduced_homology(d, Q) &&
               homology_with_collapse(d, GF2) == reduced_homology(d, GF2);
    });
}

Outcome euler_characteristic(int cases, std::uint64_t seed) {
    return run("euler characteristic", cases, seed, [](std::mt19937_64& rng) {
        auto d = random_complex(rng);
        if (d.is_void()) return true;
        auto chi = euler_from_faces(d);
        return euler_from_homology(reduced_homology(d, Q)) == chi &&
               euler_from_homology(reduced_homology(d, GF2)) == chi;
    });
}

Outcome iso_invariance(int cases, std::uint64_t seed) {
    return run("iso invariance", cases, seed, [](std::mt19937_64& rng) {
        auto d = random_complex(rng, 6);
        std::vector<int> perm(static_cast<std::size_t>(d.universe_size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto e = relabel(d, perm);
        if (reduced_homology(e, Q) != reduced_homology(d, Q)) return false;
        if (!are_isomorphic(d, e) || !(canonical_form(d) == canonical_form(e))) return false;
        return zero_ideal(d) || betti_dual(e, Q) == betti_dual(d, Q);
    });
}

Outcome alexander_duality(int cases, std::uint64_t seed) {
    return run("alexander duality", cases, seed, [](std::mt19937_64& rng) {
        auto d = random_complex(rng);
        if (zero_ideal(d)) return true;
        int n = d.universe_size();
        HomologyVector expected;
        for (const auto& [k, dim] : reduced_homology(d, Q)) expected[n - k - 3] = dim;
        return reduced_homology(alexander_dual(d), Q) == expected;
    });
}

std::vector<Outcome> all(int cases, std::uint64_t seed) {
    return {field_sensitivity(cases, seed + 1), kunneth(cases, seed + 2), collapse_invariance(cases, seed + 3),
            euler_characteristic(cases, seed + 4), iso_invariance(cases, seed + 5), alexander_duality(cases, seed + 6)};
}

}  // namespace props
