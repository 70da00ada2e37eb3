#include <doctest.h>

#include <algorithm>

#include "flagcalc/dynkin.hpp"
#include "flagcalc/error.hpp"
#include "flagcalc/homogeneous.hpp"
#include "oracles.hpp"

using namespace flagcalc;

namespace {

std::vector<Component> all_components(int max_rank)
{
    return connected_components_up_to(max_rank);
}

} // namespace

TEST_CASE("parse and render diagrams")
{
    CHECK(render(parse_diagram("A5")) == "A5");
    CHECK(render(parse_diagram("A2+A1")) == "A2+A1");
    CHECK(render(parse_diagram("A2 ⊔ B3")) == "A2+B3");
    CHECK(render(parse_diagram("E8")) == "E8");
    CHECK(parse_diagram("A2+A1").component_count() == 2);
    CHECK(parse_diagram("A2+A1").rank() == 3);

    CHECK_THROWS_AS(parse_diagram(""), ParseError);
    CHECK_THROWS_AS(parse_diagram("X3"), ParseError);
    CHECK_THROWS_AS(parse_diagram("A"), ParseError);
    CHECK_THROWS_AS(parse_diagram("A0"), DomainError);
    CHECK_THROWS_AS(parse_diagram("E9"), DomainError);
    CHECK_THROWS_AS(parse_diagram("F3"), DomainError);
    CHECK_THROWS_AS(parse_diagram("G3"), DomainError);
    CHECK_THROWS_AS(parse_diagram("A2+"), ParseError);
}

TEST_CASE("low rank coincidences are normalized")
{
    CHECK(render(parse_diagram("B1")) == "A1");
    CHECK(render(parse_diagram("C1")) == "A1");
    CHECK(render(parse_diagram("D2")) == "A1+A1");
    CHECK(render(parse_diagram("D3")) == "A3");
    CHECK(render(parse_diagram("B2")) == "B2");
    CHECK(render(parse_diagram("C2")) == "C2");

    // the middle node of A3 is the branch node 1 of D3
    auto n = parse_diagram_with_map("D3");
    CHECK(n.node_map == std::vector<int>{2, 1, 3});

    CHECK_THROWS_AS(DynkinDiagram({{Family::D, 3}}), DomainError);
}

TEST_CASE("render is a left inverse of parse on normal forms")
{
    for (const auto& c : all_components(9)) {
        DynkinDiagram d({c});
        CHECK(parse_diagram(render(d)) == d);
        DynkinDiagram pair({c, {Family::A, 2}});
        CHECK(parse_diagram(render(pair)) == pair);
    }
}

TEST_CASE("cartan matrices")
{
    CHECK(cartan_matrix(parse_diagram("G2")) == IntMatrix{{2, -1}, {-3, 2}});
    CHECK(cartan_matrix(parse_diagram("B2")) == IntMatrix{{2, -1}, {-2, 2}});
    CHECK(cartan_matrix(parse_diagram("C2")) == IntMatrix{{2, -2}, {-1, 2}});
    CHECK(cartan_matrix(parse_diagram("A2+A1")) == IntMatrix{{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
    // F4 has its double edge from long node 2 to short node 3
    auto f4 = cartan_matrix(parse_diagram("F4"));
    CHECK(f4[2][1] == -2);
    CHECK(f4[1][2] == -1);
    // E6: node 2 hangs off node 4
    auto e6 = cartan_matrix(parse_diagram("E6"));
    CHECK(e6[1][3] == -1);
    CHECK(e6[0][2] == -1);
    CHECK(e6[0][1] == 0);
}

TEST_CASE("positive roots of rank two diagrams")
{
    auto g2 = positive_roots(parse_diagram("G2"));
    CHECK(g2.positive_roots.size() == 6);
    CHECK(g2.positive_roots.back() == Root{2, 3});
    auto b2 = positive_roots(parse_diagram("B2"));
    CHECK(b2.positive_roots == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
    auto c2 = positive_roots(parse_diagram("C2"));
    CHECK(c2.positive_roots == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}, {2, 1}});
    auto a1a1 = positive_roots(parse_diagram("A1+A1"));
    CHECK(a1a1.positive_roots.size() == 2);
}

TEST_CASE("root counts match closed forms and the reflection closure")
{
    for (const auto& c : all_components(9)) {
        CAPTURE(render(c));
        DynkinDiagram d({c});
        auto rs = positive_roots(d);
        CHECK(rs.positive_roots.size() == oracle::positive_root_count(c));
        CHECK(positive_root_count(c) == oracle::positive_root_count(c));
        auto closure = oracle::reflection_closure(rs.cartan);
        CHECK(std::set<Root>(rs.positive_roots.begin(), rs.positive_roots.end()) == closure);
    }
    CHECK(positive_roots(parse_diagram("E8")).positive_roots.size() == 120);
}

TEST_CASE("roots are sorted by height and closed under simple reflections")
{
    auto rs = positive_roots(parse_diagram("F4"));
    CHECK(std::is_sorted(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
        return std::pair(height(a), a) < std::pair(height(b), b);
    }));
    CHECK(rs.positive_roots.back() == Root{2, 3, 4, 2});
    std::set<Root> all(rs.positive_roots.begin(), rs.positive_roots.end());
    for (const auto& beta : rs.positive_roots)
        for (std::size_t i = 0; i < beta.size(); ++i) {
            Root r = beta;
            r[i] -= pairing(rs.cartan, beta, i);
            bool simple = height(beta) == 1 && beta[i] == 1;
            CHECK((simple || all.count(r) == 1));
        }
}

TEST_CASE("highest roots")
{
    CHECK(positive_roots(parse_diagram("E8")).positive_roots.back() == Root{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(positive_roots(parse_diagram("E6")).positive_roots.back() == Root{1, 2, 2, 3, 2, 1});
    CHECK(positive_roots(parse_diagram("B4")).positive_roots.back() == Root{1, 2, 2, 2});
    CHECK(positive_roots(parse_diagram("C4")).positive_roots.back() == Root{2, 2, 2, 1});
    CHECK(positive_roots(parse_diagram("D5")).positive_roots.back() == Root{1, 2, 2, 1, 1});
}

TEST_CASE("weyl group orders")
{
    CHECK(weyl_order(parse_diagram("G2")) == 12);
    CHECK(weyl_order(parse_diagram("A1+A1")) == 4);
    CHECK(weyl_order(parse_diagram("E8")) == 696729600);
    CHECK(weyl_order(parse_diagram("A2+B2")) == 48);
    for (const auto& c : all_components(12))
        CHECK(weyl_order(c) == oracle::weyl_order(c));
    for (const auto& c : all_components(4)) {
        CAPTURE(render(c));
        CHECK(weyl_order(c) == oracle::weyl_order_bfs(raw_cartan_matrix(c)));
    }
}

TEST_CASE("induced subdiagrams")
{
    auto e8 = parse_diagram("E8");
    auto s = induced_subdiagram(e8, {1, 2, 3, 4, 5, 6, 7});
    CHECK(render(s.diagram) == "E7");
    s = induced_subdiagram(e8, {2, 3, 4, 5, 6, 7, 8});
    CHECK(render(s.diagram) == "D7");
    s = induced_subdiagram(parse_diagram("F4"), {2, 3, 4});
    CHECK(render(s.diagram) == "C3");
    s = induced_subdiagram(parse_diagram("F4"), {1, 2, 3});
    CHECK(render(s.diagram) == "B3");
    s = induced_subdiagram(parse_diagram("B4"), {1, 2, 4});
    CHECK(render(s.diagram) == "A2+A1");
    CHECK(s.origin == std::vector<int>{1, 2, 4});
    // B3 minus node 1 is B2 marked the same way (node 2 short)
    s = induced_subdiagram(parse_diagram("B3"), {2, 3});
    CHECK(render(s.diagram) == "B2");
    CHECK(s.origin == std::vector<int>{2, 3});
    // C3 minus node 1: the long node 3 becomes node 1 of B2
    s = induced_subdiagram(parse_diagram("C3"), {2, 3});
    CHECK(render(s.diagram) == "B2");
    CHECK(s.origin == std::vector<int>{3, 2});
    s = induced_subdiagram(parse_diagram("D5"), {3, 4, 5});
    CHECK(render(s.diagram) == "A3");
    CHECK(s.origin[1] == 3);
    CHECK(induced_subdiagram(e8, {}).diagram.empty());
    CHECK_THROWS_AS(induced_subdiagram(e8, {9}), DomainError);
}

TEST_CASE("identify_connected rejects affine diagrams")
{
    // affine A2: a triangle
    IntMatrix tri{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    CHECK_THROWS_AS(identify_connected(tri, {1, 2, 3}), DomainError);
    // affine C2: C = [[2,-1,0],[-2,2,-2],[0,-1,2]]
    IntMatrix aff{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}};
    CHECK_THROWS_AS(identify_connected(aff, {1, 2, 3}), DomainError);
}

TEST_CASE("identify_connected recognises every normal form")
{
    for (const auto& c : all_components(9)) {
        auto m = raw_cartan_matrix(c);
        std::vector<int> labels(c.rank);
        for (int k = 0; k < c.rank; ++k)
            labels[k] = k + 1;
        auto s = identify_connected(m, labels);
        REQUIRE(s.diagram.connected());
        // a rank-two double edge always comes back as B2
        Component want = c == Component{Family::C, 2} ? Component{Family::B, 2} : c;
        CHECK(s.diagram.components().front() == want);
    }
}

TEST_CASE("automorphisms")
{
    CHECK(automorphisms({Family::A, 1}).size() == 1);
    CHECK(automorphisms({Family::A, 4}).size() == 2);
    CHECK(automorphisms({Family::B, 4}).size() == 1);
    CHECK(automorphisms({Family::D, 4}).size() == 6);
    CHECK(automorphisms({Family::D, 5}).size() == 2);
    CHECK(automorphisms({Family::E, 6}).size() == 2);
    CHECK(automorphisms({Family::E, 7}).size() == 1);
    // every automorphism preserves the Cartan matrix
    for (const auto& c : all_components(8)) {
        auto m = raw_cartan_matrix(c);
        auto autos = automorphisms(c);
        CHECK(autos.front() == [&] {
            std::vector<int> id(c.rank);
            for (int k = 0; k < c.rank; ++k)
                id[k] = k + 1;
            return id;
        }());
        for (const auto& p : autos)
            for (int a = 0; a < c.rank; ++a)
                for (int b = 0; b < c.rank; ++b)
                    CHECK(m[p[a] - 1][p[b] - 1] == m[a][b]);
    }
}

TEST_CASE("B2 and C2 coincide")
{
    auto iso = coincidence({Family::B, 2});
    REQUIRE(iso);
    CHECK(iso->target == Component{Family::C, 2});
    CHECK(iso->node_map == std::vector<int>{2, 1});
    auto b = raw_cartan_matrix({Family::B, 2});
    auto c = raw_cartan_matrix({Family::C, 2});
    for (int a = 0; a < 2; ++a)
        for (int k = 0; k < 2; ++k)
            CHECK(c[iso->node_map[a] - 1][iso->node_map[k] - 1] == b[a][k]);
    CHECK_FALSE(coincidence({Family::B, 3}));
}
