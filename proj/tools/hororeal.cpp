#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "horo/errors.hpp"
#include "horo/jobio.hpp"

namespace {

using horo::Json;

Json load_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw horo::ParseError("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw horo::ParseError(std::string("input is not valid JSON: ") + e.what());
  }
}

std::vector<Json> input_jobs(const Json& doc, bool batch) {
  if (!batch) return {doc};
  if (!doc.is_object() || !doc.contains("jobs") || !doc["jobs"].is_array())
    throw horo::ParseError("--batch input must be {\"jobs\": [...]}");
  std::vector<Json> out;
  for (const auto& j : doc["jobs"]) out.push_back(j);
  return out;
}

void emit(const Json& report, bool as_json, const std::function<std::string(const Json&)>& render) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant real structures on horospherical homogeneous spaces and varieties"};
  app.require_subcommand(1);

  std::string input_path;
  bool as_json = false;
  bool batch = false;
  int max_rank = 8;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_flag("--json", as_json, "emit the structured JSON report");
    if (needs_input) {
      cmd->add_option("--input", input_path, "input JSON document ('-' for stdin)")->required();
      cmd->add_flag("--batch", batch, "input holds {jobs: [...]}; process each");
    }
  };

  auto* c_classify = app.add_subcommand("classify-group",
                                        "list the real group structures up to equivalence");
  add_common(c_classify, true);
  auto* c_check = app.add_subcommand("check", "existence / class count on the open orbit");
  add_common(c_check, true);
  auto* c_fan = app.add_subcommand("fan", "extendability of the structure to the colored fan");
  add_common(c_fan, true);
  auto* c_picard1 = app.add_subcommand("picard1",
                                       "classify the rank-1 Picard horospherical varieties");
  add_common(c_picard1, false);
  c_picard1->add_option("--max-rank", max_rank, "largest group rank to list")->check(CLI::Range(2, 64));
  auto* c_tables = app.add_subcommand("tables", "dump the embedded real-form tables");
  add_common(c_tables, false);
  c_tables->add_option("--max-rank", max_rank, "largest rank to dump")->check(CLI::Range(1, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_picard1->parsed()) {
      emit(horo::report_picard1(max_rank), as_json, horo::render_picard1);
      return 0;
    }
    if (c_tables->parsed()) {
      Json rep = horo::report_tables(max_rank);
      emit(rep, as_json, horo::render_tables);
      return rep["validation"] == "ok" ? 0 : 1;
    }

    Json doc = load_input(input_path);
    std::vector<Json> jobs = input_jobs(doc, batch);
    int worst = 0;
    Json results = Json::array();
    for (const auto& jdoc : jobs) {
      if (c_classify->parsed()) {
        horo::GroupSpec g;
        if (jdoc.contains("group")) {
          horo::JobSpec partial;
          // classify-group needs only the group; sigma may be absent
          Json jj = jdoc;
          if (!jj.contains("sigma")) {
            g = horo::job_from_json(Json{{"group", jj["group"]},
                                         {"sigma", Json{{"factor_perm", Json::array()},
                                                        {"forms", Json::object()}}}})
                    .group;
          } else {
            g = horo::job_from_json(jj).group;
          }
        } else {
          throw horo::ParseError("classify-group: input needs a group");
        }
        results.push_back(horo::report_classify_group(g));
      } else if (c_check->parsed()) {
        horo::JobSpec job = horo::job_from_json(jdoc);
        Json rep = horo::report_check(job);
        if (!rep["report"]["exists"].get<bool>()) worst = std::max(worst, 1);
        results.push_back(std::move(rep));
      } else {
        horo::JobSpec job = horo::job_from_json(jdoc);
        Json rep = horo::report_fan(job);
        if (!rep["report"]["extendable"].get<bool>()) worst = std::max(worst, 1);
        results.push_back(std::move(rep));
      }
    }
    auto render = c_classify->parsed() ? horo::render_classify_group
                  : c_check->parsed()  ? horo::render_check
                                       : horo::render_fan;
    if (batch) {
      Json out = Json{{"schema_version", horo::kSchemaVersion}, {"results", results}};
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : results) std::cout << render(r) << "\n";
      }
    } else {
      emit(results.front(), as_json, render);
    }
    return c_classify->parsed() ? 0 : worst;
  } catch (const horo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
