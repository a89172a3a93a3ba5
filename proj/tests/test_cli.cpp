#include "doctest.h"
#include "fixtures.hpp"
#include "run.hpp"

namespace {

std::string data(const std::string& name) { return "\"" + (fixtures::data_dir() / name).string() + "\""; }

std::string scratch(const std::string& name) { return "\"" + (run::scratch_dir() / name).string() + "\""; }

}  // namespace

TEST_CASE("validate") {
  const auto r = run::tri("validate " + data("k4.tri"));
  CHECK(r.status == 0);
  CHECK(r.out == "vertices 4\nedges 6\nfaces 4\nholes 0\ngenus 0\nclosed\nirreducible no\n");

  const auto t = run::tri("validate " + data("connector.tri"));
  CHECK(t.status == 0);
  CHECK(t.out.find("holes 2\ngenus 1\npunctured\n") != std::string::npos);
}

TEST_CASE("solve with labels and constraints") {
  CHECK(run::tri("solve " + data("k4.tri")).out.rfind("satisfying_count 6\npair_count 3\n", 0) == 0);
  const auto pinned = run::tri("solve " + data("connector.tri") + " --pin u:+ --pin v:- --pin w~:+");
  CHECK(pinned.status == 0);
  CHECK(pinned.out.rfind("satisfying_count 0\n", 0) == 0);
  const auto listed = run::tri("solve " + data("k4.tri") + " --list --oracle");
  CHECK(listed.out.find("state +-+-\n") != std::string::npos);
  CHECK(listed.out.find("oracle_count 6\n") != std::string::npos);
}

TEST_CASE("delta and mono constraint") {
  REQUIRE(run::tri("delta 3 -o " + scratch("d3.tri")).status == 0);
  const auto r = run::tri("solve " + scratch("d3.tri") + " --mono x,y3");
  CHECK(r.out.rfind("satisfying_count 2\n", 0) == 0);
}

TEST_CASE("groundstate and build-torus") {
  const auto g = run::tri("groundstate " + data("k4.tri") + " --oracle");
  CHECK(g.status == 0);
  CHECK(g.out == "method exhaustive\nmin_energy -2\ndegeneracy 6\noracle_min_energy -2\noracle_degeneracy 6\n");

  REQUIRE(run::tri("build-torus --min-vertices 20 -o " + scratch("t20.tri")).status == 0);
  CHECK(run::tri("groundstate " + scratch("t20.tri")).out == "method exhaustive\nmin_energy -20\ndegeneracy 2\n");
  CHECK(run::tri("groundstate " + scratch("t20.tri") + " --method bnb").out ==
        "method bnb\nmin_energy -20\ndegeneracy 2\n");
}

TEST_CASE("puncture and glue restore the torus") {
  REQUIRE(run::tri("puncture " + data("supporting_torus.tri") + " --faces 5,11 --certify -o " +
                   scratch("p.tri")).status == 0);
  REQUIRE(run::tri("delta 1 --disk -o " + scratch("d1.tri")).status == 0);
  REQUIRE(run::tri("glue " + scratch("p.tri") + " " + scratch("d1.tri") +
                   " --cycle-a u,v,w --cycle-b x,y1,z --edge-a u,v --edge-b x,y1 -o " + scratch("g.tri"))
              .status == 0);
  const auto r = run::tri("solve " + scratch("g.tri"));
  CHECK(r.out.rfind("satisfying_count 2\n", 0) == 0);
}

TEST_CASE("serious edges and dot output") {
  const auto s = run::tri("serious-edges " + data("supporting_torus.tri"));
  CHECK(s.status == 0);
  CHECK(s.out.find("u-v\n") != std::string::npos);
  const auto d = run::tri("dual --dot " + data("k4.tri"));
  CHECK(d.out.rfind("graph dual {", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run::tri("").status == 2);
  CHECK(run::tri("solve").status == 2);
  CHECK(run::tri("solve " + data("k4.tri") + " --pin q:+").status == 2);
  CHECK(run::tri("groundstate " + data("k4.tri") + " --method fast").status == 2);
  CHECK(run::tri("serious-edges " + data("catalog/irr07_00.tri")).status == 1);
  CHECK(run::tri("validate " + data("nope.tri")).status == 1);
  CHECK(run::tri("delta 0").status == 1);
}

TEST_CASE("scan-catalog summary") {
  const auto r = run::tri("scan-catalog " + data("catalog"));
  CHECK(r.status == 0);
  CHECK(r.out.find("supporting 4 of 21\n") != std::string::npos);
  CHECK(r.out.find("irr08_00\t2\t") != std::string::npos);
}
