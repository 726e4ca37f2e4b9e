#include "horo/jobio.hpp"

#include <algorithm>
#include <sstream>

#include "horo/cohomology.hpp"
#include "horo/errors.hpp"

namespace horo {

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer (number or string)");
}

Json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}

IntMatrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of rows");
  std::vector<std::vector<Int>> rows;
  std::size_t cols = 0;
  for (const auto& rj : j) {
    if (!rj.is_array()) throw ParseError(std::string(what) + ": row is not an array");
    std::vector<Int> row;
    for (const auto& e : rj) row.push_back(int_from_json(e));
    if (rows.empty())
      cols = row.size();
    else if (row.size() != cols)
      throw ParseError(std::string(what) + ": ragged rows");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupSpec group_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("group: expected an object");
  if (j.contains("torus_rank")) {
    if (j.contains("factors") && !j["factors"].empty())
      throw ParseError("group: torus_rank excludes factors");
    return torus_group(j["torus_rank"].get<int>());
  }
  if (!j.contains("factors")) throw ParseError("group: missing factors or torus_rank");
  std::vector<DynkinType> fs;
  for (const auto& fj : j["factors"]) {
    std::string fam = fj.at("family").get<std::string>();
    if (fam.size() != 1) throw ParseError("group: family must be a single letter A..G");
    fs.push_back(make_type(fam[0], fj.at("rank").get<int>()));
  }
  return semisimple_group(fs);
}

Json group_to_json(const GroupSpec& g) {
  Json j = Json::object();
  if (g.is_torus()) {
    j["torus_rank"] = g.torus_rank;
    return j;
  }
  Json fs = Json::array();
  for (const auto& f : g.factors)
    fs.push_back(Json{{"family", std::string(1, f.family)}, {"rank", f.rank}});
  j["factors"] = std::move(fs);
  return j;
}

RealStructureSpec sigma_from_json(const GroupSpec& g, const Json& j) {
  if (!j.is_object()) throw ParseError("sigma: expected an object");
  if (g.is_torus() || j.contains("torus_matrix")) {
    if (!g.is_torus()) throw ParseError("sigma: torus_matrix given for a semisimple group");
    if (!j.contains("torus_matrix")) throw ParseError("sigma: torus needs torus_matrix");
    return torus_structure(g, matrix_from_json(j["torus_matrix"], "torus_matrix"));
  }
  std::vector<std::size_t> perm;
  if (j.contains("factor_perm"))
    for (const auto& e : j["factor_perm"]) perm.push_back(e.get<std::size_t>());
  std::map<std::size_t, std::string> forms;
  if (j.contains("forms")) {
    if (!j["forms"].is_object()) throw ParseError("sigma: forms must map factor index to label");
    for (const auto& [key, val] : j["forms"].items())
      forms[static_cast<std::size_t>(std::stoul(key))] = val.get<std::string>();
  }
  return make_structure(g, std::move(perm), std::move(forms));
}

Json sigma_to_json(const RealStructureSpec& s) {
  Json j = Json::object();
  if (s.is_torus()) {
    j["torus_matrix"] = matrix_to_json(s.torus_matrix);
    return j;
  }
  Json perm = Json::array();
  for (std::size_t v : s.factor_perm) perm.push_back(v);
  j["factor_perm"] = std::move(perm);
  Json forms = Json::object();
  for (const auto& [i, label] : s.forms) forms[std::to_string(i)] = label;
  j["forms"] = std::move(forms);
  return j;
}

HorosphericalDatum datum_from_json(const GroupSpec& g, const Json& j) {
  if (!j.is_object()) throw ParseError("datum: expected an object");
  HorosphericalDatum d;
  d.group = g;
  if (j.contains("I"))
    for (const auto& e : j["I"]) d.I.insert(e.get<std::size_t>());
  IntMatrix basis(0, g.total_rank());
  if (j.contains("M_basis") && !j["M_basis"].empty()) {
    basis = matrix_from_json(j["M_basis"], "M_basis");
    if (basis.cols != g.total_rank())
      throw ParseError("M_basis: rows must have length equal to the total rank");
  }
  d.M = Sublattice(g.total_rank(), basis);
  validate_datum(d);
  return d;
}

Json datum_to_json(const HorosphericalDatum& d) {
  Json j = Json::object();
  Json inodes = Json::array();
  for (std::size_t n : d.I) inodes.push_back(n);
  j["I"] = std::move(inodes);
  j["M_basis"] = matrix_to_json(d.M.basis);
  return j;
}

ColoredFan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cones")) throw ParseError("fan: expected {cones: [...]}");
  ColoredFan f;
  for (const auto& cj : j["cones"]) {
    ColoredCone c;
    if (cj.contains("rays"))
      for (const auto& rj : cj["rays"]) {
        std::vector<Int> ray;
        for (const auto& e : rj) ray.push_back(int_from_json(e));
        c.rays.push_back(std::move(ray));
      }
    if (cj.contains("colors"))
      for (const auto& e : cj["colors"]) c.colors.insert(e.get<std::size_t>());
    f.cones.push_back(std::move(c));
  }
  return f;
}

Json fan_to_json(const ColoredFan& f) {
  Json cones = Json::array();
  for (const auto& c : f.cones) {
    Json cj = Json::object();
    Json rays = Json::array();
    for (const auto& r : c.rays) {
      Json ray = Json::array();
      for (const auto& e : r) ray.push_back(int_to_json(e));
      rays.push_back(std::move(ray));
    }
    cj["rays"] = std::move(rays);
    Json cols = Json::array();
    for (std::size_t n : c.colors) cols.push_back(n);
    cj["colors"] = std::move(cols);
    cones.push_back(std::move(cj));
  }
  return Json{{"cones", std::move(cones)}};
}

Json node_offsets(const GroupSpec& g) {
  Json out = Json::array();
  if (g.is_torus()) return out;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    std::size_t off = g.node_offset(i);
    out.push_back(Json{{"factor", i},
                       {"family", std::string(1, g.factors[i].family)},
                       {"rank", g.factors[i].rank},
                       {"first_node", off},
                       {"last_node", off + static_cast<std::size_t>(g.factors[i].rank) - 1},
                       {"bourbaki", "alpha_1..alpha_" + std::to_string(g.factors[i].rank)}});
  }
  return out;
}

Json existence_to_json(const ExistenceReport& rep) {
  Json j = Json::object();
  j["datum_stable"] = rep.datum_stable;
  j["exists_quasi_split"] = rep.exists_quasi_split;
  if (rep.delta) {
    j["delta_trivial"] = rep.delta->is_trivial;
    j["delta_witness"] = rep.delta->is_trivial ? Json(nullptr) : Json(rep.delta->witness);
  } else {
    j["delta_trivial"] = nullptr;
    j["delta_witness"] = nullptr;
  }
  j["exists"] = rep.exists;
  j["num_classes"] = rep.num_classes ? Json(*rep.num_classes) : Json(nullptr);
  if (rep.torus_invariants) {
    const auto& t = *rep.torus_invariants;
    j["torus_invariants"] = Json::array({t[0], t[1], t[2]});
  } else {
    j["torus_invariants"] = nullptr;
  }
  std::string reason;
  if (!rep.datum_stable)
    reason = "datum not stable: ^g(I,M) != (I,M)";
  else if (!rep.exists)
    reason = "Delta_H(sigma) nontrivial: " + rep.delta->witness;
  else
    reason = "exists; " + std::to_string(*rep.num_classes) + " equivalence class(es)";
  j["reason"] = reason;
  return j;
}

}  // namespace

JobSpec job_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("job: expected an object");
  JobSpec job;
  if (!j.contains("group")) throw ParseError("job: missing group");
  job.group = group_from_json(j["group"]);
  if (!j.contains("sigma")) throw ParseError("job: missing sigma");
  job.sigma = sigma_from_json(job.group, j["sigma"]);
  if (j.contains("datum") && !j["datum"].is_null())
    job.datum = datum_from_json(job.group, j["datum"]);
  if (j.contains("fan") && !j["fan"].is_null()) {
    job.fan = fan_from_json(j["fan"]);
    if (!job.datum) throw ParseError("job: fan requires a datum");
  }
  return job;
}

Json job_to_json(const JobSpec& job) {
  Json j = Json::object();
  j["group"] = group_to_json(job.group);
  j["sigma"] = sigma_to_json(job.sigma);
  if (job.datum) j["datum"] = datum_to_json(*job.datum);
  if (job.fan) j["fan"] = fan_to_json(*job.fan);
  return j;
}

Json report_classify_group(const GroupSpec& g) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = "classify-group";
  j["group"] = group_to_json(g);
  j["node_offsets"] = node_offsets(g);
  if (g.is_torus()) {
    // normal forms (n0, n1, n2) with n0 + n1 + 2 n2 = rank
    Json list = Json::array();
    int n = g.torus_rank;
    for (int n2 = 0; 2 * n2 <= n; ++n2)
      for (int n1 = 0; n1 + 2 * n2 <= n; ++n1) {
        int n0 = n - n1 - 2 * n2;
        list.push_back(Json{{"n0", n0},
                            {"n1", n1},
                            {"n2", n2},
                            {"num_equivariant_classes_on_torus", std::uint64_t(1) << n1}});
      }
    j["torus_normal_forms"] = list;
    j["count"] = list.size();
    return j;
  }
  auto structures = enumerate_real_structures(g);
  Json list = Json::array();
  std::size_t qs_count = 0;
  for (const auto& s : structures) {
    bool qs = structure_is_quasi_split(s);
    qs_count += qs ? 1 : 0;
    bool tits_trivial =
        center_class_trivial(g, gamma_action_matrix(s), tits_representative(s));
    list.push_back(Json{{"sigma", sigma_to_json(s)},
                        {"name", s.name()},
                        {"is_quasi_split", qs},
                        {"is_split", structure_is_split(s)},
                        {"tits_trivial", tits_trivial}});
  }
  j["structures"] = std::move(list);
  j["count"] = structures.size();
  j["quasi_split_count"] = qs_count;
  return j;
}

Json report_check(const JobSpec& job) {
  if (!job.datum) throw ParseError("check: job has no datum");
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = "check";
  j["node_offsets"] = node_offsets(job.group);
  j["job"] = job_to_json(job);
  j["report"] = existence_to_json(existence_report(job.sigma, *job.datum));
  return j;
}

Json report_fan(const JobSpec& job) {
  if (!job.datum || !job.fan) throw ParseError("fan: job needs datum and fan");
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = "fan";
  j["node_offsets"] = node_offsets(job.group);
  j["job"] = job_to_json(job);
  ExtendabilityReport rep = extendability_report(job.sigma, *job.datum, *job.fan);
  Json rj = existence_to_json(rep.orbit);
  rj["fan_stable"] = rep.fan_stable;
  rj["extendable"] = rep.extendable;
  rj["real_form_is_variety"] = rep.extendable;
  if (rep.extendable)
    rj["reason"] = "structure exists on the open orbit and the colored fan is Gamma-invariant";
  else if (rep.orbit.exists)
    rj["reason"] = "structure exists on the open orbit but the colored fan is not Gamma-invariant";
  j["report"] = std::move(rj);
  return j;
}

Json report_picard1(int max_rank) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = "picard1";
  j["max_rank"] = max_rank;
  Json rows = Json::array();
  for (const auto& t : triples(max_rank)) {
    HorosphericalDatum d = datum_of_triple(t);
    Json admitted = Json::array();
    for (const auto& res : classify_triple(t))
      admitted.push_back(Json{{"form", res.label}, {"num_classes", res.num_classes}});
    rows.push_back(Json{{"triple", Json{{"family", std::string(1, t.dynkin.family)},
                                        {"rank", t.dynkin.rank},
                                        {"y_node", t.y_node},
                                        {"z_node", t.z_node},
                                        {"display", t.name()}}},
                        {"datum", datum_to_json(d)},
                        {"admitted", admitted}});
  }
  j["rows"] = std::move(rows);
  return j;
}

Json report_tables(int max_rank) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = "tables";
  j["tables_version"] = tables_version();
  j["max_rank"] = max_rank;
  Json types = Json::array();
  bool all_ok = true;
  auto emit = [&](const DynkinType& t) {
    Json recs = Json::array();
    for (const auto& rec : catalog(t)) {
      GroupSpec g = semisimple_group({t});
      CenterElement z;
      z.q = rec.tits_q;
      bool roots_ok = satisfies_root_relations(g, z);
      RealStructureSpec s = make_structure(g, {0}, {{0, rec.label}});
      IntMatrix a = gamma_action_matrix(s);
      bool fixed_ok = true;
      {
        QVec img(z.q.size());
        for (std::size_t k = 0; k < z.q.size(); ++k) {
          Rat acc = 0;
          for (std::size_t c = 0; c < z.q.size(); ++c)
            if (a.at(k, c) != 0) acc += Rat(a.at(k, c)) * z.q[c];
          img[k] = mod1(-acc);
        }
        fixed_ok = (img == z.q);
      }
      all_ok = all_ok && roots_ok && fixed_ok;
      Json inner = Json::array();
      for (std::size_t v : rec.inner_class) inner.push_back(v);
      Json tq = Json::array();
      for (const auto& r : rec.tits_q) tq.push_back(rat_str(r));
      Json signs = Json::array();
      for (auto [node, sign] : rec.minuscule_signs)
        signs.push_back(Json{{"node", node}, {"sign", sign}});
      recs.push_back(Json{{"label", rec.label},
                          {"inner_class", inner},
                          {"tits_q", tq},
                          {"minuscule_signs", signs},
                          {"is_quasi_split", rec.is_quasi_split},
                          {"is_split", rec.is_split},
                          {"is_compact", rec.is_compact},
                          {"root_relations_ok", roots_ok},
                          {"gamma_fixed_ok", fixed_ok}});
    }
    types.push_back(Json{{"family", std::string(1, t.family)},
                         {"rank", t.rank},
                         {"records", recs},
                         {"count", catalog(t).size()}});
  };
  for (int n = 1; n <= max_rank; ++n) emit(make_type('A', n));
  for (int n = 2; n <= max_rank; ++n) emit(make_type('B', n));
  for (int n = 2; n <= max_rank; ++n) emit(make_type('C', n));
  for (int n = 4; n <= max_rank; ++n) emit(make_type('D', n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n) emit(make_type('E', n));
  if (max_rank >= 4) emit(make_type('F', 4));
  emit(make_type('G', 2));
  j["types"] = std::move(types);
  j["validation"] = all_ok ? "ok" : "FAILED";
  return j;
}

// ---------------------------------------------------------------------------
// Text renderings

namespace {

std::string yesno(const Json& v) {
  if (v.is_null()) return "-";
  return v.get<bool>() ? "yes" : "no";
}

std::string render_offsets(const Json& report) {
  std::ostringstream os;
  if (!report.contains("node_offsets") || report["node_offsets"].empty()) return "";
  os << "nodes:";
  for (const auto& f : report["node_offsets"])
    os << "  factor " << f["factor"].get<std::size_t>() << " (" << f["family"].get<std::string>()
       << f["rank"].get<int>() << "): " << f["first_node"].get<std::size_t>() << ".."
       << f["last_node"].get<std::size_t>();
  os << "\n";
  return os.str();
}

}  // namespace

std::string render_classify_group(const Json& report) {
  std::ostringstream os;
  os << render_offsets(report);
  if (report.contains("torus_normal_forms")) {
    os << "torus real group structures (one per normal form):\n";
    for (const auto& r : report["torus_normal_forms"])
      os << "  (n0,n1,n2) = (" << r["n0"].get<int>() << "," << r["n1"].get<int>() << ","
         << r["n2"].get<int>() << ")  classes on the torus: "
         << r["num_equivariant_classes_on_torus"].get<std::uint64_t>() << "\n";
    os << "total: " << report["count"].get<std::size_t>() << "\n";
    return os.str();
  }
  os << "real group structures up to equivalence: " << report["count"].get<std::size_t>()
     << " (" << report["quasi_split_count"].get<std::size_t>() << " quasi-split)\n";
  for (const auto& s : report["structures"])
    os << "  " << s["name"].get<std::string>()
       << (s["is_split"].get<bool>() ? "  [split]" : s["is_quasi_split"].get<bool>() ? "  [quasi-split]" : "")
       << "  tits_trivial=" << (s["tits_trivial"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_check(const Json& report) {
  std::ostringstream os;
  os << render_offsets(report);
  const Json& r = report["report"];
  os << "datum_stable: " << yesno(r["datum_stable"]) << "\n";
  os << "exists_quasi_split: " << yesno(r["exists_quasi_split"]) << "\n";
  os << "delta_trivial: " << yesno(r["delta_trivial"]) << "\n";
  os << "exists: " << yesno(r["exists"]) << "\n";
  if (!r["num_classes"].is_null())
    os << "num_classes: " << r["num_classes"].get<std::uint64_t>() << "\n";
  if (!r["torus_invariants"].is_null())
    os << "torus_invariants: (" << r["torus_invariants"][0].get<std::size_t>() << ","
       << r["torus_invariants"][1].get<std::size_t>() << ","
       << r["torus_invariants"][2].get<std::size_t>() << ")\n";
  os << "reason: " << r["reason"].get<std::string>() << "\n";
  return os.str();
}

std::string render_fan(const Json& report) {
  std::ostringstream os;
  os << render_check(report);
  const Json& r = report["report"];
  os << "fan_stable: " << yesno(r["fan_stable"]) << "\n";
  os << "extendable: " << yesno(r["extendable"]) << "\n";
  if (r["extendable"].get<bool>()) os << "real form is a variety\n";
  return os.str();
}

std::string render_picard1(const Json& report) {
  std::ostringstream os;
  for (const auto& row : report["rows"]) {
    os << row["triple"]["display"].get<std::string>() << ": ";
    if (row["admitted"].empty()) {
      os << "no equivariant real structure\n";
      continue;
    }
    bool first = true;
    for (const auto& a : row["admitted"]) {
      if (!first) os << ", ";
      first = false;
      os << a["form"].get<std::string>() << " (classes: " << a["num_classes"].get<std::uint64_t>()
         << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string render_tables(const Json& report) {
  std::ostringstream os;
  os << report["tables_version"].get<std::string>() << "\n";
  for (const auto& t : report["types"]) {
    os << t["family"].get<std::string>() << t["rank"].get<int>() << " ("
       << t["count"].get<std::size_t>() << " forms):\n";
    for (const auto& r : t["records"]) {
      os << "  " << r["label"].get<std::string>() << "  q=(";
      bool first = true;
      for (const auto& q : r["tits_q"]) {
        if (!first) os << ",";
        first = false;
        os << q.get<std::string>();
      }
      os << ")";
      if (r["is_split"].get<bool>())
        os << "  [split]";
      else if (r["is_quasi_split"].get<bool>())
        os << "  [quasi-split]";
      if (r["is_compact"].get<bool>()) os << "  [compact]";
      os << (r["root_relations_ok"].get<bool>() && r["gamma_fixed_ok"].get<bool>() ? "  ok"
                                                                                   : "  INVALID");
      os << "\n";
    }
  }
  os << "validation: " << report["validation"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace horo
