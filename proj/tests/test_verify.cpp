#include <catch2/catch_amalgamated.hpp>

#include "ilg/verify.hpp"

using namespace ilg;

namespace {

VerifyConfig small_cfg() {
  VerifyConfig cfg;
  cfg.max_n = 6;
  cfg.claw_max_n = 9;
  cfg.tree_max_n = 8;
  cfg.t3_max_n = 6;
  cfg.t6_max_n = 7;
  cfg.cp_tail_max = 6;
  return cfg;
}

}  // namespace

TEST_CASE("registry is complete and unique") {
  const auto& reg = check_registry();
  CHECK(reg.size() == 40);
  for (size_t i = 0; i < reg.size(); ++i)
    for (size_t j = i + 1; j < reg.size(); ++j) CHECK(reg[i].id != reg[j].id);
  CHECK_THROWS_MATCHES(run_check("ZZ", small_cfg()), graph_error,
                       Catch::Matchers::Predicate<graph_error>([](const graph_error& e) {
                         return e.code() == errc::unknown_check;
                       }));
}

TEST_CASE("every check passes on a reduced universe") {
  auto cfg = small_cfg();
  for (const auto& info : check_registry()) {
    if (info.id == "X1" || info.id == "X2") continue;  // disabled by default
    auto rep = run_check(info.id, cfg);
    INFO(rep.to_text());
    CHECK(rep.pass());
    CHECK(rep.budget_failures.empty());
  }
}

TEST_CASE("reports are byte-identical across worker counts") {
  auto cfg = small_cfg();
  for (const std::string id : {"A1", "G2", "K2", "T6"}) {
    auto cfg1 = cfg;
    cfg1.workers = 1;
    auto cfg8 = cfg;
    cfg8.workers = 8;
    CHECK(run_check(id, cfg1).to_text() == run_check(id, cfg8).to_text());
  }
}

TEST_CASE("report text carries the clause structure") {
  auto rep = run_check("A1", small_cfg());
  auto text = rep.to_text();
  CHECK(text.find("ilg-report v1") == 0);
  CHECK(text.find("check: A1") != std::string::npos);
  CHECK(text.find("clause: e1>=e | pass") != std::string::npos);
  CHECK(text.find("result: pass") != std::string::npos);
  CHECK(text.find("wall-ms") == std::string::npos);  // timings off by default
  CHECK(rep.to_text(true).find("wall-ms") != std::string::npos);
}

TEST_CASE("expensive checks are skipped unless enabled") {
  auto rep = run_check("X1", small_cfg());
  CHECK(rep.graphs_tested == 0);
  CHECK(rep.pass());

  auto cfg = small_cfg();
  cfg.max_n = 5;
  cfg.enable_expensive = true;
  auto run = run_check("X1", cfg);
  CHECK(run.graphs_tested > 0);
  CHECK(run.pass());
  auto run2 = run_check("X2", cfg);
  CHECK(run2.graphs_tested > 0);
  CHECK(run2.pass());
}

TEST_CASE("counterexamples surface in reports") {
  // A deliberately broken clause: run A1 against a universe that includes a
  // non-prolific graph is not expressible through the public API, so instead
  // check that D2 reports its observed sequence note.
  auto rep = run_check("D2", small_cfg());
  CHECK(rep.pass());
  bool has_note = false;
  for (const auto& n : rep.notes)
    if (n.find("observed ind(delta) sequence") != std::string::npos) has_note = true;
  CHECK(has_note);
}
