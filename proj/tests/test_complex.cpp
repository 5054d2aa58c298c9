#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "purebetti/constructions.hpp"
#include "purebetti/errors.hpp"
#include "purebetti/isomorphism.hpp"

using namespace purebetti;
using fixtures::complex_of;

TEST_SUITE("complex_core") {

TEST_CASE("from_facets keeps maximal generators in (size, lex) order") {
    auto d = complex_of(2, {{"1"}, {"1", "2"}});
    REQUIRE(d.facets().size() == 1);
    CHECK(d.facets()[0] == Face{0, 1});

    auto t = fixtures::three_triangles();
    CHECK(t.facets().size() == 3);
    CHECK(t.facets()[0] == Face{0, 1, 5});
    CHECK(t.facets()[1] == Face{0, 2, 4});
    CHECK(t.facets()[2] == Face{1, 2, 3});

    auto irr = complex_of(3, {{}});
    CHECK(irr.is_irrelevant());
    CHECK(irr.universe_size() == 3);
}

TEST_CASE("from_facets rejects unknown and duplicate labels") {
    CHECK_THROWS_AS(complex_of(2, {{"1", "7"}}), DomainError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "a"}, {{"a"}}), DomainError);
}

TEST_CASE("void and irrelevant complexes are distinct") {
    auto labels = numbered_labeling(3);
    auto v = SimplicialComplex::void_complex(labels);
    auto irr = SimplicialComplex::irrelevant(labels);
    CHECK(v.is_void());
    CHECK_FALSE(v == irr);
    CHECK(v.all_faces().empty());
    CHECK(irr.all_faces().size() == 1);
    CHECK_FALSE(v.dim().has_value());
    CHECK(irr.dim() == -1);
    CHECK(irr.is_pure());
}

TEST_CASE("all_faces and faces_of_size match subset enumeration") {
    auto e = complex_of(2, {{"1", "2"}});
    CHECK(e.all_faces() == std::vector<Face>{Face{}, Face{0}, Face{1}, Face{0, 1}});
    auto t = fixtures::three_triangles();
    CHECK(t.faces_of_size(3) == t.facets());
    CHECK(t.all_faces().size() == oracle::from_complex(t).faces.size());
}

TEST_CASE("dim and purity") {
    auto t = fixtures::three_triangles();
    CHECK(t.dim() == 2);
    CHECK(t.is_pure());
    auto mixed = complex_of(3, {{"1", "2"}, {"3"}});
    CHECK(mixed.dim() == 1);
    CHECK_FALSE(mixed.is_pure());
}

TEST_CASE("link") {
    auto t = fixtures::three_triangles();
    auto l = link(t, t.face_from_labels({"3"}));
    CHECK(oracle::facet_set(l) == std::set<oracle::VSet>{{0, 4}, {1, 3}});
    CHECK(link(t, t.facets()[0]).is_irrelevant());
    CHECK(link(t, Face{}) == t);
    auto b = boundary_simplex(2);
    CHECK(oracle::facet_set(link(b, Face{0})) == std::set<oracle::VSet>{{1}, {2}});
    CHECK_THROWS_AS(link(t, Face{0, 3}), DomainError);
}

TEST_CASE("alexander dual") {
    auto b = boundary_simplex(2);
    CHECK(alexander_dual(b).is_irrelevant());
    auto full = SimplicialComplex::simplex(numbered_labeling(3));
    CHECK(alexander_dual(full).is_void());
    auto t = fixtures::three_triangles();
    CHECK(alexander_dual(alexander_dual(t)) == t);
    CHECK(oracle::same_faces(oracle::dual(oracle::from_complex(t)), alexander_dual(t)));
}

TEST_CASE("skeleta") {
    CHECK(skeleton_of_set({"1", "2", "3"}, 1) == boundary_simplex(2));
    CHECK(skeleton_of_set({"1", "2", "3"}, -1).is_irrelevant());
    auto t = fixtures::three_triangles();
    CHECK(skeleton(t, 2) == t);
    CHECK(skeleton(t, 0).facets().size() == 6);
}

TEST_CASE("join") {
    auto a = SimplicialComplex::from_facets({"a", "b"}, {{"a"}, {"b"}});
    auto b = SimplicialComplex::from_facets({"c", "d"}, {{"c"}, {"d"}});
    auto square = join(a, b);
    CHECK(square.facets().size() == 4);
    CHECK(square.dim() == 1);
    auto irr = SimplicialComplex::from_facets({"z"}, {{}});
    auto t = fixtures::three_triangles();
    auto same = join(irr, t);
    CHECK(same.facets().size() == 3);
    CHECK(same.universe_size() == 7);
    auto apex = SimplicialComplex::from_facets({"z"}, {{"z"}});
    CHECK(is_cone(join(apex, t)).has_value());
    CHECK_THROWS_AS(join(t, t), DomainError);
}

TEST_CASE("induced subcomplex and face deletion") {
    auto d = complex_of(6, {{"1", "2", "4"}, {"2", "3", "5"}, {"4", "5", "6"}});
    auto del = delete_face(d, d.face_from_labels({"2", "4"}));
    CHECK(oracle::facet_set(del) == std::set<oracle::VSet>{{0, 1}, {0, 3}, {1, 2, 4}, {3, 4, 5}});
    auto ind = induced(d, {"1", "3", "5", "6"});
    CHECK(ind.universe_size() == 4);
    std::set<std::vector<std::string>> got;
    for (const auto& f : ind.facets()) got.insert(ind.face_labels(f));
    CHECK(got == std::set<std::vector<std::string>>{{"1"}, {"3", "5"}, {"5", "6"}});
    auto point = complex_of(1, {{"1"}});
    CHECK(delete_face(point, Face{0}).is_irrelevant());
}

TEST_CASE("cone vertices") {
    CHECK(is_cone(SimplicialComplex::simplex(numbered_labeling(3))) == 0);
    CHECK_FALSE(is_cone(boundary_simplex(2)).has_value());
    auto multi = intersection_complex({{1, 1, 1}});
    auto v = is_cone(multi);
    REQUIRE(v.has_value());
    CHECK(multi.labeling().label(*v) == "v{1,2,3}^1");
}

TEST_CASE("free pairs and collapse") {
    auto edges = SimplicialComplex::from_facets({"x0", "x1", "y0", "y1"}, {{"y0", "x1"}, {"y1", "x0"}});
    auto pair = find_free_pair(edges);
    REQUIRE(pair.has_value());
    CHECK(pair->g.count() == 1);
    for (const auto& F : edges.facets())
        if (pair->g.is_subset_of(F)) CHECK(pair->f.is_subset_of(F));
    auto before = oracle::homology(oracle::from_complex(edges));
    auto after = collapse(edges);
    CHECK(oracle::homology(oracle::from_complex(after)) == before);
    CHECK(before == fixtures::hv({{0, 1}}));

    CHECK_FALSE(find_free_pair(boundary_simplex(2)).has_value());
    auto edge = complex_of(2, {{"1", "2"}});
    auto pt = collapse(edge);
    CHECK(pt.facets().size() == 1);
    CHECK(pt.facets()[0].count() == 1);
}

TEST_CASE("collapse preserves homology on random complexes") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto c = oracle::random_complex(rng, 6);
        auto d = oracle::to_complex(c);
        auto h = oracle::homology(c);
        CHECK(oracle::homology(oracle::from_complex(collapse(d))) == h);
        CHECK(oracle::homology(oracle::from_complex(collapse(d)), 2) == oracle::homology(c, 2));
    }
}

TEST_CASE("canonical form and isomorphism") {
    CHECK(are_isomorphic(complex_of(3, {{"1", "2"}, {"3"}}), complex_of(3, {{"2", "3"}, {"1"}})));
    CHECK_FALSE(are_isomorphic(boundary_simplex(2), SimplicialComplex::simplex(numbered_labeling(3))));
    CHECK(are_isomorphic(partition_complex({2, 2, 1, false}), intersection_complex({{1, 1, 0}})));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto a = oracle::random_complex(rng, n, 5);
        auto b = oracle::random_complex(rng, n, 5);
        auto ca = oracle::to_complex(a), cb = oracle::to_complex(b);
        CHECK(canonical_form(canonical_form(ca)) == canonical_form(ca));
        CHECK(are_isomorphic(ca, cb) == oracle::isomorphic(a, b));
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(are_isomorphic(ca, relabel(ca, perm)));
    }
}

TEST_CASE("universes beyond 64 vertices") {
    std::vector<std::string> labels;
    for (int i = 0; i < 300; ++i) labels.push_back("v" + std::to_string(i));
    auto d = SimplicialComplex::from_facets(labels, {{"v0", "v100", "v299"}, {"v100", "v200"}, {"v299", "v200"}});
    CHECK(d.facets().size() == 3);
    CHECK(link(d, d.face_from_labels({"v200"})).facets().size() == 2);
    CHECK(alexander_dual(alexander_dual(d)) == d);
}

}
