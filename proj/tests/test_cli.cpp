#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "sweedler/cli.hpp"
#include "sweedler/corpus.hpp"
#include "sweedler/document.hpp"
#include "sweedler/hopfcore.hpp"

using namespace sweedler;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures = FIXTURE_DIR;

struct Outcome {
  int status;
  json report;
  std::string text;
};

Outcome invoke(const std::string& command, std::vector<std::string> inputs,
               std::optional<std::size_t> dim = std::nullopt) {
  CommandRequest req;
  req.command = *parse_command(command);
  for (const auto& i : inputs) req.inputs.push_back(kFixtures / i);
  req.dim = dim;
  const auto r = run(req);
  return {r.status, json::parse(r.text), r.text};
}

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "sweedler_test_cli";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / name, std::ios::binary) << text;
  return dir / name;
}

}  // namespace

TEST_CASE("command names round-trip") {
  for (const auto& name : command_names()) {
    const auto c = parse_command(name);
    REQUIRE(c);
    CHECK(command_names().at(static_cast<std::size_t>(*c)) == name);
  }
  CHECK_FALSE(parse_command("frobnicate"));
}

TEST_CASE("antipode on the idempotent monoid is absent with status 0") {
  const auto o = invoke("antipode", {"idempotent.bialgebra.txt"});
  CHECK(o.status == exit_code::ok);
  CHECK(o.report["antipode"] == "absent");
  CHECK_FALSE(o.report.contains("document"));
  CHECK(invoke("opantipode", {"idempotent.bialgebra.txt"}).report["opantipode"] == "absent");

  const auto h4 = invoke("antipode", {"h4_f3.hopf.txt"});
  CHECK(h4.status == exit_code::ok);
  CHECK(load_document(scratch("h4_back.txt", h4.report["document"])) ==
        Document{corpus::sweedler_h4(), std::nullopt});
}

TEST_CASE("enumerate-measurings reports total 4 and 2 orbits") {
  const auto o = invoke("enumerate-measurings", {"f2_involution.algebra.txt", "f2.algebra.txt"}, 2);
  CHECK(o.status == exit_code::ok);
  CHECK(o.report["total"] == 4);
  CHECK(o.report["orbit_count"] == 2);
  std::uint64_t sizes = 0;
  for (const auto& orbit : o.report["orbits"]) sizes += orbit["size"].get<std::uint64_t>();
  CHECK(sizes == 4);
  CHECK(invoke("enumerate-measurings", {"f2_involution.algebra.txt", "f2.algebra.txt"}).status == exit_code::usage);
}

TEST_CASE("validate reports a coassociativity witness") {
  const auto o = invoke("validate", {"broken_coassoc.coalgebra.txt"});
  CHECK(o.status == exit_code::validation);
  CHECK(o.report["valid"] == false);
  const auto& f = o.report["failures"].at(0);
  CHECK(f["axiom"] == "coassociativity");
  CHECK(f["component"] == json::array({1, 2, 2}));
  CHECK(f["witness"] == json::array({1}));
  CHECK(invoke("validate", {"q_c2.hopf.txt"}).report["valid"] == true);
}

TEST_CASE("exit codes") {
  CHECK(invoke("validate", {}).status == exit_code::usage);
  CHECK(invoke("validate", {"does_not_exist.txt"}).status == exit_code::io);
  CommandRequest req;
  req.command = Command::validate;
  req.inputs = {scratch("bad.txt", "kind algebra\nfield Q\ndim 1\nbasis 1\nunit 2/4\n")};
  const auto parse = run(req);
  CHECK(parse.status == exit_code::parse);
  const auto pj = json::parse(parse.text);
  CHECK(pj["error"]["line"] == 5);
  CHECK(pj["error"]["column"] == 6);

  // loading a broken document for a computation is a validation failure
  const auto dual = invoke("dual", {"broken_coassoc.coalgebra.txt"});
  CHECK(dual.status == exit_code::validation);
  CHECK(dual.report["error"]["failures"].at(0)["axiom"] == "coassociativity");

  req = {};
  req.command = Command::morphisms;
  req.inputs = {kFixtures / "m2_f2.algebra.txt", kFixtures / "m2_f2.algebra.txt"};
  req.budget = 100;
  CHECK(run(req).status == exit_code::budget);

  CHECK(invoke("antipode", {"f2_involution.algebra.txt"}).status == exit_code::usage);
  CHECK(invoke("grouplikes", {"q_c2.hopf.txt"}).status == exit_code::usage);
}

TEST_CASE("reports are deterministic") {
  for (const auto& [cmd, inputs] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"reconstruct", {"regular_m2_f2.measuring.txt"}},
           {"fusion", {"h4_f3.hopf.txt"}},
           {"tambara-check", {"f2_involution.algebra.txt", "f2_dual_numbers.algebra.txt"}},
           {"morphisms", {"f2_exterior_deg1.algebra.txt", "f2_dual_numbers_deg1.algebra.txt"}}}) {
    INFO(cmd);
    const auto a = invoke(cmd, inputs, 2), b = invoke(cmd, inputs, 2);
    CHECK(a.status == exit_code::ok);
    CHECK(a.text == b.text);
  }
  CommandRequest req;
  req.command = Command::validate;
  req.inputs = {kFixtures / "q_c2.hopf.txt"};
  req.seed = 7;
  CHECK(json::parse(run(req).text)["seed"] == 7);
}

TEST_CASE("document output") {
  CommandRequest req;
  req.command = Command::dual;
  req.inputs = {kFixtures / "f2_involution.algebra.txt"};
  req.format = OutputFormat::document;
  const auto r = run(req);
  CHECK(r.status == exit_code::ok);
  CHECK(std::get<CoalgebraData>(parse_document(r.text).value) == dual_coalgebra(corpus::f2_involution()));

  req.command = Command::fusion;
  req.inputs = {kFixtures / "q_c2.hopf.txt"};
  CHECK(run(req).status == exit_code::usage);

  // an absent antipode has no document; the report is returned instead
  req.command = Command::antipode;
  req.inputs = {kFixtures / "idempotent.bialgebra.txt"};
  CHECK(json::parse(run(req).text)["antipode"] == "absent");
}

// One invocation per acceptance computation, on committed fixtures.
TEST_CASE("finite duals of regular modules") {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"regular_f2_involution.measuring.txt", 2}, {"regular_m2_f2.measuring.txt", 4}, {"regular_q_c2.measuring.txt", 2}};
  for (const auto& [file, dim] : cases) {
    INFO(file);
    const auto o = invoke("reconstruct", {file});
    CHECK(o.status == exit_code::ok);
    CHECK(o.report["dim"] == dim);
    CHECK(o.report["pairing_to_dual"]["isomorphism"] == true);
    CHECK(o.report["universal_factorization"] == json::array({true}));
  }
}

TEST_CASE("fusion operators decide antipodes on fixtures") {
  for (const auto& file : {"q_c2.hopf.txt", "f3_c2.hopf.txt", "f2_c3.hopf.txt", "h4_f3.hopf.txt",
                           "idempotent.bialgebra.txt", "trivial_q.hopf.txt"}) {
    INFO(file);
    const auto f = invoke("fusion", {file});
    CHECK((invoke("antipode", {file}).report["antipode"] != "absent") == f.report["hopf"].get<bool>());
    CHECK((invoke("opantipode", {file}).report["opantipode"] != "absent") == f.report["op_hopf"].get<bool>());
  }
}

TEST_CASE("duals of hopf fixtures") {
  for (const auto& file : {"q_c2.hopf.txt", "f3_c2.hopf.txt", "f2_c3.hopf.txt", "h4_f3.hopf.txt", "trivial_q.hopf.txt"}) {
    INFO(file);
    const auto o = invoke("dual", {file});
    CHECK(o.status == exit_code::ok);
    CHECK(o.report["valid"] == true);
  }
  for (const auto& file : {"f2_involution.algebra.txt", "f2_dual_numbers.algebra.txt", "m2_f2.algebra.txt"}) {
    INFO(file);
    const auto o = invoke("dual", {file});
    CHECK(o.report["coopposite_matches_dual_of_opposite"] == true);
    if (o.report["commutative"] == true) CHECK(o.report["cocommutative"] == true);
  }
}

TEST_CASE("the ground field reconstructs to k") {
  const auto o = invoke("reconstruct", {"unit_f2_dual_numbers.measuring.txt"});
  CHECK(o.report["dim"] == 1);
  const auto d = scratch("unit_d.txt", o.report["document"]);
  CommandRequest req;
  req.command = Command::grouplikes;
  req.inputs = {d};
  CHECK(json::parse(run(req).text)["count"] == 1);
}

TEST_CASE("graded morphisms and connectedness") {
  const auto one = invoke("morphisms", {"f2_exterior_deg1.algebra.txt", "f2_dual_numbers_deg1.algebra.txt"});
  CHECK(one.report["graded"] == true);
  CHECK(one.report["count"] == 2);
  CHECK(one.report["source_connected"] == true);
  CHECK(one.report["target_connected"] == true);
  CHECK(invoke("morphisms", {"f2_exterior_deg1.algebra.txt", "f2_dual_numbers_deg2.algebra.txt"}).report["count"] == 1);

  // graded maps into B[0] against maps out of the degree 0 part
  const auto into = invoke("morphisms", {"f2_exterior_deg1.algebra.txt", "f2_dual_numbers.algebra.txt"});
  CHECK(into.report["graded"] == true);
  const auto a0 = scratch("a0.txt", invoke("degree0", {"f2_exterior_deg1.algebra.txt"}).report["document"]);
  CommandRequest req;
  req.command = Command::morphisms;
  req.inputs = {a0, kFixtures / "f2_dual_numbers.algebra.txt"};
  CHECK(json::parse(run(req).text)["count"] == into.report["count"]);

  const auto g = invoke("graded-check", {"f2_exterior_deg1.hopf.txt"});
  CHECK(g.status == exit_code::ok);
  CHECK(g.report["connected"] == true);
}

TEST_CASE("tambara correspondence") {
  for (std::size_t n : {1u, 2u}) {
    const auto o = invoke("tambara-check", {"f2_involution.algebra.txt", "f2_dual_numbers.algebra.txt"}, n);
    CHECK(o.report["ok"] == true);
    CHECK(o.report["module_count"] == o.report["morphism_count"]);
  }
  const auto p = invoke("tambara-presentation", {"f2_involution.algebra.txt", "f2_dual_numbers.algebra.txt"});
  CHECK(p.report["generator_count"] == 2);
  CHECK(p.report["relation_count"] == 2);
}

TEST_CASE("tensor and compose") {
  const auto t = invoke("tensor", {"regular_q_c2.measuring.txt", "regular_q_c2.measuring.txt", "q_c2.hopf.txt"});
  CHECK(t.report["mode"] == "bialgebra");
  CHECK(t.report["valid"] == true);
  CHECK(t.report["xdim"] == 4);
  const auto c = invoke("compose", {"regular_f2_involution.measuring.txt", "unit_f2_dual_numbers.measuring.txt"});
  CHECK(c.report["valid"] == true);
  CHECK(c.report["xdim"] == 2);
  // Q[C2] -> Q followed by Q[C2] -> Q does not compose
  CHECK(invoke("compose", {"regular_q_c2.measuring.txt", "regular_q_c2.measuring.txt"}).status == exit_code::library);
}
