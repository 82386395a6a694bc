#include <catch2/catch_amalgamated.hpp>

#include "ilg/enumeration.hpp"
#include "ilg/families.hpp"
#include "ilg/graph6.hpp"
#include "ilg/line_ops.hpp"
#include "ilg/params.hpp"

using namespace ilg;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(4, 2) == Rational(2));
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(8, 5) < Rational(2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(7, 1).str() == "7");
}

TEST_CASE("parameter names round trip") {
  for (ParamKind p : all_params) {
    auto back = param_from_string(param_name(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK_FALSE(param_from_string("bogus").has_value());
  CHECK(param_from_string("chip") == ParamKind::chromatic_index);
}

TEST_CASE("identity spot checks on the small corpus") {
  // These are the identities the acceptance suite runs at n <= 8; here a
  // fast n <= 6 pass guards against regressions.
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (g.m() == 0) continue;
      Graph lg = line_graph(g).first;
      INFO("g6=" << write_graph6(g));
      CHECK(chromatic_index(g) == chromatic_number(lg));
      CHECK(independence_number(lg) == matching_number(g));
      CHECK(independent_domination_number(lg) == min_maximal_matching(g));
      if (is_prolific(g)) CHECK(clique_number(lg) == g.max_degree());
      int mu = matching_number(g);
      int mustar = min_maximal_matching(g);
      CHECK(mustar <= mu);
      CHECK(mu <= 2 * mustar);
      CHECK(vertex_connectivity(g) <= edge_connectivity(g));
      CHECK(edge_connectivity(g) <= g.min_degree());
      CHECK(chromatic_number(g) <= stacho_phi(g) + 1);
      int chip = chromatic_index(g);
      CHECK(g.max_degree() <= chip);
      CHECK(chip <= g.max_degree() + 1);
    }
}

TEST_CASE("compute_param dispatch") {
  Graph k4 = generate(Complete{4});
  CHECK(compute_param(k4, ParamKind::vertices) == Rational(4));
  CHECK(compute_param(k4, ParamKind::edges) == Rational(6));
  CHECK(compute_param(k4, ParamKind::avg_degree) == Rational(3));
  CHECK(compute_param(k4, ParamKind::chromatic) == Rational(4));
  CHECK(compute_param(k4, ParamKind::circumference) == Rational(4));
  CHECK(compute_param(k4, ParamKind::domination) == Rational(1));
  Graph star = generate(Star{4});
  CHECK(compute_param(star, ParamKind::avg_degree) == Rational(8, 5));
}
