#include <catch2/catch_amalgamated.hpp>

#include "ilg/canonical.hpp"
#include "ilg/connectivity.hpp"
#include "ilg/enumeration.hpp"
#include "ilg/families.hpp"

using namespace ilg;

TEST_CASE("generators produce the expected shapes") {
  Graph a = generate(ClawSubdivision{2, 1, 1});
  CHECK(a.n() == 5);
  CHECK(a.m() == 4);
  CHECK(claw_type(ClawSubdivision{2, 1, 1}) == 'A');
  CHECK(claw_type(ClawSubdivision{2, 2, 1}) == 'B');
  CHECK(claw_type(ClawSubdivision{2, 2, 2}) == 'C');
  CHECK(claw_type(ClawSubdivision{1, 1, 1}) == 'K');

  Graph cp = generate(CyclePendantPath{3, 2});
  CHECK(cp.n() == 5);
  CHECK(cp.m() == 5);

  Graph s22 = generate(DoubleStarSubdivision{1});
  CHECK(s22.n() == 6);
  CHECK(s22.m() == 5);
  CHECK(s22.degree_multiset() == std::vector<int>{1, 1, 1, 1, 3, 3});

  Graph tc = generate(TwoCyclesPath{3, 3, 2});
  CHECK(tc.n() == 7);
  CHECK(tc.m() == 8);
  CHECK(is_connected(tc));

  CHECK_THROWS_AS(generate(CyclePendantPath{3, 0}), graph_error);
  CHECK_THROWS_AS(generate(CyclePendantPath{2, 1}), graph_error);
  CHECK_THROWS_AS(generate(ClawSubdivision{1, 2, 1}), graph_error);
  CHECK_THROWS_AS(generate(ChartrandHarary{3, 2, 4}), graph_error);
  CHECK_THROWS_AS(generate(CycleWithChords{6, {{0, 1}}}), graph_error);  // adjacent
  CHECK_THROWS_AS(generate(CycleWithChords{6, {{0, 2}, {2, 4}}}), graph_error);  // shared
}

TEST_CASE("prolific predicate") {
  CHECK_FALSE(is_prolific(generate(Star{3})));
  CHECK_FALSE(is_prolific(generate(CycleFamily{7})));
  CHECK_FALSE(is_prolific(generate(PathFamily{9})));
  CHECK_FALSE(is_prolific(Graph::build(1, {})));
  CHECK_FALSE(is_prolific(Graph::build(4, {{0, 1}, {2, 3}})));  // disconnected
  CHECK(is_prolific(generate(Complete{4})));
  CHECK(is_prolific(generate(Star{4})));
  CHECK(is_prolific(generate(ClawSubdivision{2, 1, 1})));
  CHECK(is_prolific(generate(CyclePendantPath{3, 1})));
}

TEST_CASE("classification round trips") {
  for (const auto& c : claw_subdivisions_up_to(14)) {
    auto sc = classify_special(generate(c));
    REQUIRE(sc.tag == SpecialClassification::Tag::claw_subdivision);
    CHECK(sc.m1 == c.m1);
    CHECK(sc.m2 == c.m2);
    CHECK(sc.m3 == c.m3);
    CHECK(sc.claw == claw_type(c));
    CHECK(sc.tree);
  }
  for (int middle = 1; middle <= 9; ++middle) {
    auto sc = classify_special(generate(DoubleStarSubdivision{middle}));
    CHECK(sc.tag == SpecialClassification::Tag::double_star_subdivision);
    CHECK(sc.middle == middle);
    CHECK(sc.double_star_loose);
  }
  for (int k = 3; k <= 7; ++k)
    for (int tail = 1; tail <= 6; ++tail) {
      auto sc = classify_special(generate(CyclePendantPath{k, tail}));
      REQUIRE(sc.tag == SpecialClassification::Tag::cycle_pendant_path);
      CHECK(sc.cycle_len == k);
      CHECK(sc.tail == tail);
      CHECK(sc.unicyclic);
    }
}

TEST_CASE("loose versus strict double-star subdivisions") {
  // Subdividing a pendant edge keeps the loose reading but not the strict one.
  Graph loose = Graph::build(7, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {1, 5}, {0, 6}});
  // vertex 0 and 1 are the branch vertices; leg 0-2-3 has length 2.
  auto sc = classify_special(loose);
  CHECK(sc.double_star_loose);
  CHECK(sc.tag != SpecialClassification::Tag::double_star_subdivision);
  CHECK(sc.middle == 1);
}

TEST_CASE("classification rejects near misses") {
  CHECK(classify_special(generate(Complete{4})).tag == SpecialClassification::Tag::none);
  CHECK(classify_special(generate(CycleFamily{6})).tag == SpecialClassification::Tag::none);
  // A degree-4 branch vertex disqualifies the double-star reading.
  Graph g = Graph::build(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {6, 7}});
  CHECK_FALSE(classify_special(g).double_star_loose);
}

TEST_CASE("claw subdivision K_{1,3} itself is recognized but not prolific") {
  auto sc = classify_special(generate(Star{3}));
  CHECK(sc.tag == SpecialClassification::Tag::claw_subdivision);
  CHECK(sc.claw == 'K');
  CHECK_FALSE(sc.prolific);
}

TEST_CASE("Chartrand-Harary constructions hit the prescribed triple") {
  for (int d = 1; d <= 5; ++d)
    for (int l = 1; l <= d; ++l)
      for (int k = 1; k <= l; ++k) {
        Graph g = generate(ChartrandHarary{k, l, d});
        INFO("triple " << k << "," << l << "," << d);
        CHECK(vertex_connectivity(g) == k);
        CHECK(edge_connectivity(g) == l);
        CHECK(g.min_degree() == d);
      }
}

TEST_CASE("descriptor strings parse and print") {
  auto fd = parse_family("claw:3,2,1");
  REQUIRE(fd.has_value());
  CHECK(family_to_string(*fd) == "claw:3,2,1");
  CHECK(parse_family("cp:3,2").has_value());
  CHECK(parse_family("ch:2,2,3").has_value());
  CHECK(parse_family("cyclechords:6,0-2").has_value());
  CHECK(parse_family("twocycles:3,4,2").has_value());
  CHECK_FALSE(parse_family("claw:1,2").has_value());
  CHECK_FALSE(parse_family("nonsense:1").has_value());
  CHECK_FALSE(parse_family("claw").has_value());
  for (const char* s :
       {"claw:4,2,1", "s22:3", "cp:5,2", "star:6", "complete:5", "path:7", "cycle:8",
        "twocycles:3,3,1", "cyclechords:8,0-2,4-6", "ch:2,3,4"}) {
    auto parsed = parse_family(s);
    REQUIRE(parsed.has_value());
    CHECK(family_to_string(*parsed) == s);
    CHECK(generate(*parsed).n() > 0);
  }
}

TEST_CASE("prolific counts per order") {
  // 6 connected graphs on 4 vertices; P4, C4 and K_{1,3} are not prolific.
  auto four = enumerate_connected(4);
  long long prolific4 = std::count_if(four.begin(), four.end(),
                                      [](const Graph& g) { return is_prolific(g); });
  CHECK(prolific4 == 3);
  // From n = 5 on, exactly the path and the cycle drop out.
  for (int n = 5; n <= 7; ++n) {
    auto all = enumerate_connected(n);
    long long prolific = std::count_if(all.begin(), all.end(),
                                       [](const Graph& g) { return is_prolific(g); });
    CHECK(static_cast<long long>(all.size()) - prolific == 2);
  }
}
