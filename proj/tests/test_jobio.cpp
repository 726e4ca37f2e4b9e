#include <doctest.h>

#include "horo/errors.hpp"
#include "horo/jobio.hpp"
#include "testutil.hpp"

using namespace horo;
using namespace horotest;

namespace {

Json sl4_job() {
  return Json::parse(R"({
    "group": {"factors": [{"family": "A", "rank": 3}]},
    "sigma": {"factor_perm": [0], "forms": {"0": "SU(4)"}},
    "datum": {"I": [1], "M_basis": [[1, 0, -1]]},
    "fan": {"cones": [{"rays": [[1]], "colors": []}, {"rays": [[-1]], "colors": []}]}
  })");
}

}  // namespace

TEST_CASE("job round trip") {
  JobSpec job = job_from_json(sl4_job());
  Json emitted = job_to_json(job);
  JobSpec again = job_from_json(emitted);
  CHECK(job_to_json(again) == emitted);
  CHECK(again.group == job.group);
  CHECK(again.sigma.forms == job.sigma.forms);
  CHECK(again.datum->I == job.datum->I);
  CHECK(sublattices_equal(again.datum->M, job.datum->M));

  // the report echoes the job as a re-parsable fragment
  Json rep = report_check(job);
  JobSpec echoed = job_from_json(rep["job"]);
  CHECK(job_to_json(echoed) == rep["job"]);
}

TEST_CASE("check report content") {
  Json rep = report_check(job_from_json(sl4_job()));
  CHECK(rep["schema_version"] == 1);
  CHECK(rep["report"]["exists"] == true);
  CHECK(rep["report"]["num_classes"] == 2);
  CHECK(rep["report"]["datum_stable"] == true);
  CHECK(rep["report"]["torus_invariants"] == Json::array({0, 1, 0}));
  CHECK(rep["node_offsets"][0]["first_node"] == 0);
  CHECK(!render_check(rep).empty());
}

TEST_CASE("fan report content") {
  Json rep = report_fan(job_from_json(sl4_job()));
  CHECK(rep["report"]["fan_stable"] == true);
  CHECK(rep["report"]["extendable"] == true);
  CHECK(rep["report"]["real_form_is_variety"] == true);

  Json bad = sl4_job();
  bad["fan"]["cones"].erase(1);
  Json rep2 = report_fan(job_from_json(bad));
  CHECK(rep2["report"]["fan_stable"] == false);
  CHECK(rep2["report"]["extendable"] == false);
  CHECK(!render_fan(rep2).empty());
}

TEST_CASE("classify report") {
  GroupSpec g = semisimple_group({make_type('A', 1), make_type('A', 1)});
  Json rep = report_classify_group(g);
  CHECK(rep["count"] == 4);
  CHECK(!render_classify_group(rep).empty());

  GroupSpec sl3 = semisimple_group({make_type('A', 2)});
  Json rep3 = report_classify_group(sl3);
  CHECK(rep3["count"] == 3);
  for (const auto& s : rep3["structures"]) CHECK(s["tits_trivial"] == true);

  GroupSpec spin8 = semisimple_group({make_type('D', 4)});
  Json rep8 = report_classify_group(spin8);
  CHECK(rep8["count"] == 5);
  CHECK(rep8["quasi_split_count"] == 2);

  Json rept = report_classify_group(torus_group(2));
  CHECK(rept["count"] == 4);  // (2,0,0),(1,1,0),(0,2,0),(0,0,1)
}

TEST_CASE("torus job") {
  Json doc = Json::parse(R"({
    "group": {"torus_rank": 2},
    "sigma": {"torus_matrix": [[0, 1], [1, 0]]},
    "datum": {"I": [], "M_basis": [[1, 0], [0, 1]]}
  })");
  JobSpec job = job_from_json(doc);
  Json rep = report_check(job);
  CHECK(rep["report"]["exists"] == true);
  CHECK(rep["report"]["num_classes"] == 1);  // sigma_2: n1 = 0
  JobSpec echoed = job_from_json(rep["job"]);
  CHECK(job_to_json(echoed) == rep["job"]);
}

TEST_CASE("picard1 and tables reports") {
  Json p = report_picard1(3);
  CHECK(p["rows"].size() == 6);
  bool found_g2 = false;
  for (const auto& row : p["rows"])
    if (row["triple"]["family"] == "G") {
      found_g2 = true;
      CHECK(row["admitted"].size() == 2);
    }
  CHECK(found_g2);
  CHECK(!render_picard1(p).empty());

  Json t = report_tables(4);
  CHECK(t["validation"] == "ok");
  CHECK(!render_tables(t).empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"sigma": {}})")), ParseError);
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"group": {"factors": []}})")), Error);
  CHECK_THROWS_AS(
      job_from_json(Json::parse(
          R"({"group": {"factors": [{"family": "A", "rank": 3}]},
              "sigma": {"forms": {"0": "NOPE"}}})")),
      UnknownLabel);
  CHECK_THROWS_AS(
      job_from_json(Json::parse(
          R"({"group": {"factors": [{"family": "A", "rank": 3}]},
              "sigma": {"forms": {"0": "SU(4)"}},
              "datum": {"I": [0], "M_basis": [[1, 0, 0]]}})")),
      OrthogonalityViolated);
  // fan without datum
  CHECK_THROWS_AS(
      job_from_json(Json::parse(
          R"({"group": {"factors": [{"family": "A", "rank": 1}]},
              "sigma": {"forms": {"0": "SU(2)"}},
              "fan": {"cones": []}})")),
      ParseError);
}
