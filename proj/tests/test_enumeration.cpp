#include <catch2/catch_amalgamated.hpp>

#include "ilg/enumeration.hpp"
#include "ilg/families.hpp"
#include "oracles.hpp"

using namespace ilg;

TEST_CASE("connected counts match brute-force labeled enumeration, n <= 6") {
  // Independent oracle: all labeled graphs, connectivity filter, pairwise
  // brute-force isomorphism bucketing.
  std::vector<long long> expected;
  for (int n = 1; n <= 6; ++n) expected.push_back(oracle::count_connected_classes_bruteforce(n));
  CHECK(expected == std::vector<long long>{1, 1, 2, 6, 21, 112});
  for (int n = 1; n <= 6; ++n)
    CHECK(static_cast<long long>(enumerate_connected(n).size()) == expected[n - 1]);
}

TEST_CASE("connected counts match the labeled recurrence via orbit sizes, n <= 8") {
  // sum over classes of n!/|Aut| must equal the labeled connected count from
  // the exponential-formula recurrence.
  auto labeled = oracle::connected_labeled_counts(8);
  std::vector<long long> fact{1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  std::vector<long long> class_counts;
  for (int n = 1; n <= 8; ++n) {
    long long total = 0;
    auto graphs = enumerate_connected(n);
    for (const Graph& g : graphs) total += fact[n] / oracle::automorphism_count(g);
    CHECK(total == labeled[n]);
    class_counts.push_back(static_cast<long long>(graphs.size()));
  }
  CHECK(class_counts == std::vector<long long>{1, 1, 2, 6, 21, 112, 853, 11117});
}

TEST_CASE("emission is deterministic and duplicate-free") {
  auto a = enumerate_connected(6);
  auto b = enumerate_connected(6);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      CHECK_FALSE(is_isomorphic(a[i], a[j]));
}

TEST_CASE("edge cap yields exactly the trees, validated by the labeled-tree count") {
  std::vector<long long> fact{1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  for (int n = 2; n <= 8; ++n) {
    EnumOptions opt;
    opt.max_edges = n - 1;
    auto trees = enumerate_connected(n, opt);
    long long labeled = 0;
    long long expect = 1;
    for (int i = 0; i < n - 2; ++i) expect *= n;  // n^(n-2) labeled trees
    for (const Graph& t : trees) {
      CHECK(t.m() == n - 1);
      labeled += fact[n] / oracle::automorphism_count(t);
    }
    CHECK(labeled == expect);
  }
}

TEST_CASE("hard cap") {
  CHECK_THROWS_MATCHES(enumerate_connected(11), graph_error,
                       Catch::Matchers::Predicate<graph_error>([](const graph_error& e) {
                         return e.code() == errc::cap_exceeded;
                       }));
  CHECK_THROWS_AS(enumerate_connected(0), graph_error);
}

TEST_CASE("prolific filter sizes") {
  auto four = enumerate_connected_filtered(4, [](const Graph& g) { return is_prolific(g); });
  CHECK(four.size() == 3);
  auto five = enumerate_connected_filtered(5, [](const Graph& g) { return is_prolific(g); });
  CHECK(five.size() == 19);  // 21 minus P5 and C5
}
