#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "purebetti/errors.hpp"
#include "purebetti/isomorphism.hpp"
#include "purebetti/phi.hpp"

using namespace purebetti;
using fixtures::complex_of;
using fixtures::GF2;
using fixtures::Q;

namespace {

std::set<oracle::PhiFace> library_phi_faces(const AugmentedComplex& a) {
    std::set<oracle::PhiFace> out;
    for (const Face& f : a.complex.all_faces()) {
        oracle::PhiFace pf;
        std::vector<Face> chain;
        f.for_each([&](int v) {
            if (v < a.base) pf.base.push_back(v);
            else chain.push_back(a.keys[static_cast<std::size_t>(v - a.base)]);
        });
        std::sort(chain.begin(), chain.end(), size_lex_less);
        for (const auto& t : chain) pf.chain.push_back(t.indices());
        out.insert(pf);
    }
    return out;
}

// Faces of the form {u_τ1, ..., u_τr} with r >= 1.
std::vector<Face> u_only_faces(const AugmentedComplex& a) {
    std::vector<Face> out;
    for (const Face& f : a.complex.all_faces())
        if (!f.empty() && f.first() >= a.base) out.push_back(f);
    return out;
}

}  // namespace

TEST_SUITE("phi_ops") {

TEST_CASE("S sets") {
    auto b = boundary_simplex(2);
    CHECK(s_set(b, 1).size() == 3);
    CHECK(s_set(b, 2).size() == 6);
    auto all = s_set(b, 3);
    CHECK(all.size() == 7);
    CHECK(all.front().empty());
    CHECK_THROWS_AS(s_set(SimplicialComplex::void_complex(numbered_labeling(1)), 1), DomainError);
    CHECK_THROWS_AS(s_set(b, 0), DomainError);
}

TEST_CASE("phi on the boundary of a triangle") {
    auto b = boundary_simplex(2);
    auto p1 = phi(b, 1);
    CHECK(p1.complex.facets().size() == 3);
    CHECK(is_pr(p1.complex, Q).degree_type == std::vector<int>{1, 2});
    CHECK(p1.complex.labeling().label(3) == "u{1,2}");

    auto p2 = phi(b, 2);
    CHECK(p2.complex.facets().size() == 9);
    CHECK(is_pr(p2.complex, Q).degree_type == std::vector<int>{2, 1});

    auto p3 = phi(b, 3);
    CHECK(p3.complex.labeling().label(3) == "u{}");
    CHECK(reduced_homology(p3.complex, Q).empty());
    CHECK(phi(b, 7).complex == p3.complex);
}

TEST_CASE("phi agrees with the chain definition") {
    std::mt19937_64 rng(29);
    int compared = 0;
    for (int t = 0; t < 400 && compared < 120; ++t) {
        auto c = oracle::random_complex(rng, 2 + static_cast<int>(rng() % 4), 4);
        auto d = oracle::to_complex(c);
        if (d.is_void() || d.is_irrelevant()) continue;
        int top = *d.dim() + 2;
        for (int i = 1; i <= top + 1; ++i) {
            if (d.universe_size() + static_cast<int>(s_set(d, i).size()) > 14) continue;
            auto a = phi(d, i);
            CHECK(library_phi_faces(a) == oracle::phi_faces(c, i));
            ++compared;
        }
    }
    CHECK(compared >= 100);
}

TEST_CASE("phi renames labels that would clash with u-labels") {
    auto d = SimplicialComplex::from_facets({"a,b", "c"}, {{"a,b", "c"}});
    auto p = phi(d, 1);
    CHECK(p.renamed_from == std::vector<std::string>{"a,b", "c"});
    CHECK(p.complex.labeling().label(2) == "u{1,2}");
    auto again = phi(phi(boundary_simplex(2), 1).complex, 1);
    CHECK(again.renamed_from.size() == 6);
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_WITH_AS(phi(boundary_simplex(3), 3, 10), doctest::Contains("vertex cap of 10"), DomainError);
    CHECK_THROWS_AS(build_pr_complex({5, 1}, 16), DomainError);
}

TEST_CASE("barycentric subdivision") {
    auto hex = barycentric(boundary_simplex(2)).complex;
    CHECK(hex.universe_size() == 6);
    CHECK(hex.facets().size() == 6);
    CHECK(hex.dim() == 1);
    CHECK(reduced_homology(hex, Q) == fixtures::hv({{1, 1}}));
    CHECK_THROWS_WITH_AS(barycentric(SimplicialComplex::irrelevant(numbered_labeling(2))),
                         doctest::Contains("no nonempty faces"), DomainError);
    CHECK_THROWS_AS(barycentric(SimplicialComplex::void_complex(numbered_labeling(2))), DomainError);
    for (const auto& d : fixtures::small_corpus()) {
        auto b = barycentric(d).complex;
        CHECK(reduced_homology(b, Q) == reduced_homology(d, Q));
        CHECK(reduced_homology(b, GF2) == reduced_homology(d, GF2));
    }
}

TEST_CASE("pipeline") {
    CHECK(build_pr_complex({1, 1, 1}) == boundary_simplex(3));
    CHECK(build_pr_complex({2, 1}) == phi(boundary_simplex(2), 2).complex);
    auto three = build_pr_complex({3});
    CHECK(are_isomorphic(three, partition_complex({3, 1, 1, false})));
    CHECK(is_pr(three, Q).degree_type == std::vector<int>{3});
    CHECK_THROWS_AS(build_pr_complex({}), DomainError);
    CHECK_THROWS_AS(build_pr_complex({0, 1}), DomainError);
}

TEST_CASE("links commute with phi") {
    CHECK(link_commute_check(boundary_simplex(2), 2, Face{0}));
    CHECK(link_commute_check(boundary_simplex(3), 1, Face{}));
    auto p = partition_complex({2, 2, 1, false});
    for (int v = 0; v < p.universe_size(); ++v) CHECK(link_commute_check(p, 2, Face{v}));
    for (const auto& d : fixtures::small_corpus()) {
        if (!d.is_pure()) continue;
        for (int i = 1; i <= *d.dim() + 2; ++i)
            for (const auto& f : d.all_faces()) CHECK(link_commute_check(d, i, f));
    }
    CHECK_THROWS_AS(link_commute_check(complex_of(3, {{"1", "2"}, {"3"}}), 1, Face{}), DomainError);
}

TEST_CASE("homology of phi") {
    for (const auto& d : fixtures::small_corpus()) {
        int dim = *d.dim();
        for (int i = 1; i <= dim + 3; ++i) {
            auto a = phi(d, i);
            auto h = reduced_homology(a.complex, Q);
            if (i > dim + 1) {
                CHECK(h.empty());
            } else {
                CHECK(h == reduced_homology(d, Q));
            }
            if (i <= dim + 1)
                for (const auto& f : u_only_faces(a)) CHECK(reduced_homology(link(a.complex, f), Q).empty());
        }
    }
}

TEST_CASE("links through the empty-face vertex shift homology") {
    for (const auto& d : fixtures::small_corpus()) {
        auto a = phi(d, *d.dim() + 2);
        int ue = a.vertex_of(Face{});
        for (const auto& f : u_only_faces(a)) {
            if (f.test(ue)) continue;
            Face g = f;
            g.set(ue);
            if (!a.complex.contains(g)) continue;
            auto top = reduced_homology(link(a.complex, f), Q);
            auto low = reduced_homology(link(a.complex, g), Q);
            HomologyVector shifted;
            for (const auto& [k, dim] : low) shifted[k + 1] = dim;
            CHECK(top == shifted);
        }
    }
}

TEST_CASE("barycentric link index sets") {
    auto b = boundary_simplex(2);
    CHECK(bary_link_hset(b, {Face{0, 1}}) == IndexSet{0});
    CHECK(bary_link_hset(b, {Face{0}, Face{0, 1}}) == IndexSet{-1});
    auto t = fixtures::three_triangles();
    CHECK(bary_link_hset(t, {t.face_from_labels({"3"})}) == IndexSet{0});
    for (const auto& d : fixtures::small_corpus()) {
        for (const auto& top : d.all_faces()) {
            if (top.empty()) continue;
            std::vector<Face> chain;
            Face cur;
            top.for_each([&](int v) {
                cur.set(v);
                chain.push_back(cur);
            });
            CHECK_NOTHROW(bary_link_hset(d, {top}));
            CHECK_NOTHROW(bary_link_hset(d, chain));
        }
    }
    CHECK_THROWS_AS(bary_link_hset(b, {Face{0, 1}, Face{0}}), DomainError);
}

TEST_CASE("subdivision PR and Cohen-Macaulay equivalence") {
    auto s = bdelta_pr_check(boundary_simplex(2));
    CHECK((s.bary_pr && s.bary_cm && s.base_cm));
    auto t = bdelta_pr_check(fixtures::three_triangles());
    CHECK_FALSE((t.bary_pr || t.bary_cm || t.base_cm));
    auto f = bdelta_pr_check(SimplicialComplex::simplex(numbered_labeling(3)));
    CHECK((f.bary_pr && f.bary_cm && f.base_cm));
    for (const auto& d : fixtures::small_corpus()) CHECK_NOTHROW(bdelta_pr_check(d));
}

TEST_CASE("phi raises one entry of the degree type") {
    std::vector<SimplicialComplex> corpus;
    for (int a = 2; a <= 3; ++a)
        for (int p = 1; p <= 2; ++p)
            for (int m = 1; m <= p; ++m) corpus.push_back(partition_complex({a, p, m, false}));
    for (auto spec : std::vector<std::vector<int>>{{1, 1, 0}, {2, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 1, 0}})
        corpus.push_back(intersection_complex({spec}));
    for (const auto& d : corpus) {
        REQUIRE(d.universe_size() <= 12);
        auto s = is_pr(d, Q);
        REQUIRE(s.is_pr);
        int p = static_cast<int>(s.degree_type.size());
        // degree_type = (d_p, ..., d_1); i is admissible when d_{i-1}..d_1 are 1.
        for (int i = 1; i <= p; ++i) {
            bool ones_below = true;
            for (int j = 1; j < i; ++j) ones_below = ones_below && s.degree_type[static_cast<std::size_t>(p - j)] == 1;
            if (!ones_below) break;
            auto a = phi(d, i);
            auto t = is_pr(a.complex, Q);
            auto expected = s.degree_type;
            expected[static_cast<std::size_t>(p - i)] += 1;
            CHECK(t.is_pr);
            CHECK(t.degree_type == expected);
            int threshold = s.offset;
            for (int j = i; j <= p; ++j) threshold += s.degree_type[static_cast<std::size_t>(p - j)];
            for (int m = 0; m <= *a.complex.dim() + 1; ++m) {
                IndexSet expect = m < threshold ? hh_set(d, m, Q) : (m == threshold ? IndexSet{} : hh_set(d, m - 1, Q));
                CHECK(hh_set(a.complex, m, Q) == expect);
            }
        }
    }
}

}
