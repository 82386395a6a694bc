#include <catch2/catch_amalgamated.hpp>

#include "ilg/enumeration.hpp"
#include "ilg/index_engine.hpp"

using namespace ilg;

TEST_CASE("fixed index values") {
  // Odd-order type A claw subdivision: the matching index is 4.
  auto mu = parameter_index(generate(ClawSubdivision{2, 1, 1}), ParamKind::matching);
  REQUIRE(mu.found());
  CHECK(mu.index == 4);

  // Triangle with a 4-edge tail: the chromatic index first moves at level 3.
  auto chi = parameter_index(generate(CyclePendantPath{3, 4}), ParamKind::chromatic);
  REQUIRE(chi.found());
  CHECK(chi.index == 3);

  auto delta = parameter_index(generate(Star{4}), ParamKind::max_degree);
  REQUIRE(delta.found());
  CHECK(delta.index == 3);

  // Average degree grows immediately for every prolific graph.
  for (const Graph& g : {generate(Complete{4}), generate(Star{4}),
                         generate(CyclePendantPath{4, 2}), generate(ClawSubdivision{3, 2, 1})}) {
    auto d = parameter_index(g, ParamKind::avg_degree);
    REQUIRE(d.found());
    CHECK(d.index == 1);
  }
}

TEST_CASE("index requires a prolific graph") {
  CHECK_THROWS_MATCHES(parameter_index(generate(CycleFamily{5}), ParamKind::edges),
                       graph_error,
                       Catch::Matchers::Predicate<graph_error>([](const graph_error& e) {
                         return e.code() == errc::not_prolific;
                       }));
}

TEST_CASE("strict-increase-first semantics") {
  // Found(r) requires P_r > P_0 and P_j <= P_0 for all j < r.
  for (const Graph& g : enumerate_connected(6)) {
    if (!is_prolific(g)) continue;
    for (ParamKind p : {ParamKind::edges, ParamKind::matching, ParamKind::max_degree}) {
      auto r = parameter_index(g, p);
      REQUIRE(r.found());
      for (int j = 1; j < r.index; ++j) {
        const auto& lv = r.levels[j];
        if (lv.exact) CHECK_FALSE(*lv.exact > r.base);
      }
      const auto& last = r.levels[r.index];
      if (last.exact) CHECK(*last.exact > r.base);
    }
  }
}

TEST_CASE("shortcuts agree with forced exact recomputation") {
  // force_exact recomputes every shortcut level with the exact solver and
  // aborts on any disagreement.
  Budget b;
  b.max_iterations = 4;
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_prolific(g)) continue;
      for (ParamKind p : {ParamKind::matching, ParamKind::independence, ParamKind::clique,
                          ParamKind::domination, ParamKind::chromatic}) {
        auto fast = parameter_index(g, p, b);
        auto slow = parameter_index(g, p, b, /*force_exact=*/true);
        CHECK(fast.found() == slow.found());
        if (fast.found()) CHECK(fast.index == slow.index);
      }
    }
}

TEST_CASE("budget exhaustion is reported in-band") {
  Budget tight;
  tight.max_vertices = 8;
  auto r = parameter_index(generate(Complete{5}), ParamKind::domination, tight);
  CHECK_FALSE(r.found());
  CHECK(r.truncation_reason == "max_vertices");

  Budget shallow;
  shallow.max_iterations = 2;
  auto r2 = parameter_index(generate(ClawSubdivision{2, 1, 1}), ParamKind::matching, shallow);
  CHECK_FALSE(r2.found());
  CHECK(r2.truncation_reason == "max_iterations");
  CHECK(r2.levels.size() == 3);  // levels 0..2 reported
}

TEST_CASE("family scan over the small prolific corpus") {
  std::vector<Graph> corpus;
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n))
      if (is_prolific(g)) corpus.push_back(g);

  auto scan = family_index_scan(corpus, ParamKind::edges, {}, 1, "prolific n<=6");
  CHECK(scan.max_index == 2);
  // Every claw subdivision (any type) attains the maximum: e1 = e, e2 > e.
  std::vector<std::string> claws;
  for (const Graph& g : corpus)
    if (classify_special(g).is_claw_subdivision()) claws.push_back(write_graph6(g));
  std::sort(claws.begin(), claws.end());
  CHECK(scan.witnesses == claws);

  auto scan_n = family_index_scan(corpus, ParamKind::vertices, {}, 1, "prolific n<=6");
  CHECK(scan_n.max_index == 4);
  // Only type A claw subdivisions attain the vertex-count maximum.
  std::vector<std::string> type_a;
  for (const Graph& g : corpus)
    if (classify_special(g).is_type('A')) type_a.push_back(write_graph6(g));
  std::sort(type_a.begin(), type_a.end());
  CHECK(scan_n.witnesses == type_a);
}

TEST_CASE("scan results do not depend on the worker count") {
  std::vector<Graph> corpus;
  for (const Graph& g : enumerate_connected(6))
    if (is_prolific(g)) corpus.push_back(g);
  auto one = family_index_scan(corpus, ParamKind::matching, {}, 1, "u");
  auto many = family_index_scan(corpus, ParamKind::matching, {}, 8, "u");
  CHECK(one.max_index == many.max_index);
  CHECK(one.witnesses == many.witnesses);
  CHECK(one.histogram == many.histogram);
}

TEST_CASE("shortcut log records bound-decided levels") {
  auto r = parameter_index(generate(Complete{6}), ParamKind::domination);
  REQUIRE(r.found());
  bool has_bound = false;
  for (const auto& lv : r.levels)
    if (lv.bound) has_bound = true;
  bool logged = !r.shortcut_log.empty();
  CHECK(has_bound == logged);
}
