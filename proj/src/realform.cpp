#include "horo/realform.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "horo/errors.hpp"

namespace horo {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct TableRow {
  char family;
  std::string rankpat, labels, inner, flags, signs;
};

std::vector<TableRow> parse_tables() {
  std::istringstream in(tables_text());
  std::string line;
  std::vector<TableRow> rows;
  bool first = true;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (first) {
      first = false;
      if (line.rfind("titsclasses", 0) != 0)
        throw ParseError("tits tables: missing version line");
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string piece;
    while (std::getline(ls, piece, '|')) f.push_back(trim(piece));
    if (f.size() != 6) throw ParseError("tits tables: bad row: " + line);
    rows.push_back({f[0][0], f[1], f[2], f[3], f[4], f[5]});
  }
  return rows;
}

bool rank_matches(const std::string& pat, int n) {
  if (pat.rfind("n=", 0) == 0) return n == std::stoi(pat.substr(2));
  if (pat.rfind("n>=", 0) == 0) return n >= std::stoi(pat.substr(3));
  if (pat.rfind("even>=", 0) == 0) return n % 2 == 0 && n >= std::stoi(pat.substr(6));
  if (pat.rfind("odd>=", 0) == 0) return n % 2 == 1 && n >= std::stoi(pat.substr(5));
  if (pat == "even") return n % 2 == 0;
  if (pat == "odd") return n % 2 == 1;
  throw ParseError("tits tables: bad rank pattern " + pat);
}

std::vector<std::size_t> minuscule_nodes(const DynkinType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': {
      std::vector<std::size_t> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = i;
      return v;
    }
    case 'B':
      return {n - 1};
    case 'C':
      return {0};
    case 'D':
      return {0, n - 2, n - 1};
    case 'E':
      if (t.rank == 6) return {0, 5};
      if (t.rank == 7) return {6};
      return {};
    default:
      return {};
  }
}

std::vector<std::size_t> local_inner_perm(const DynkinType& t, const std::string& inner) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  if (inner == "id") return p;
  if (inner != "flip") throw ParseError("tits tables: bad inner class " + inner);
  if (t.family == 'A') {
    std::reverse(p.begin(), p.end());
  } else if (t.family == 'D') {
    std::swap(p[n - 2], p[n - 1]);
  } else if (t.family == 'E' && t.rank == 6) {
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
  } else {
    throw ParseError("tits tables: type has no flip");
  }
  return p;
}

int pow_sign(long long s) { return ((s % 2) + 2) % 2 == 0 ? +1 : -1; }

// s with (p,q) = (n+2s, n+1-2s) up to swapping the arguments (type B)
int b_spin_sign(int p, int q, int n) {
  long long s;
  if ((q - (n + 1)) % 2 == 0)
    s = (n + 1 - q) / 2;
  else
    s = (n + 1 - p) / 2;
  return pow_sign(s);
}

struct LabelInstance {
  std::string label;
  int p = 0, q = 0;  // signature when meaningful
  bool split = false, qs = false, compact = false;
};

std::string sig_label(const std::string& head, int p, int q, bool drop_zero) {
  if (q == 0 && drop_zero) return head + "(" + std::to_string(p) + ")";
  return head + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<LabelInstance> expand_labels(const DynkinType& t, const std::string& pat) {
  const int n = t.rank;
  std::vector<LabelInstance> out;
  if (pat == "SL(2,R)") {
    out.push_back({"SL(2,R)", 0, 0, true, true, false});
  } else if (pat == "SU(2)") {
    out.push_back({"SU(2)", 2, 0, false, false, true});
  } else if (pat == "SL(n+1,R)") {
    out.push_back({"SL(" + std::to_string(n + 1) + ",R)", 0, 0, true, true, false});
  } else if (pat == "SL(m,H)") {
    out.push_back({"SL(" + std::to_string((n + 1) / 2) + ",H)", 0, 0, false, false, false});
  } else if (pat == "SU(p,q)") {
    for (int q = (n + 1) / 2; q >= 0; --q) {
      int p = n + 1 - q;
      bool qs = (n % 2 == 0) ? (p - q == 1) : (p == q);
      out.push_back({sig_label("SU", p, q, true), p, q, false, qs, q == 0});
    }
  } else if (pat == "Spin(p,q)") {
    for (int q = n; q >= 0; --q) {
      int p = 2 * n + 1 - q;
      out.push_back({sig_label("Spin", p, q, true), p, q, q == n, q == n, q == 0});
    }
  } else if (pat == "Sp(2n,R)") {
    out.push_back({"Sp(" + std::to_string(2 * n) + ",R)", 0, 0, true, true, false});
  } else if (pat == "Sp(p,q)") {
    for (int q = n - (n % 2); q >= 0; q -= 2) {
      int p = 2 * n - q;
      out.push_back({sig_label("Sp", p, q, false), p, q, false, false, q == 0});
    }
  } else if (pat == "Spin(p,q)0" || pat == "Spin(p,q)2") {
    int res = pat.back() - '0';
    for (int q = n; q >= 0; --q) {
      int p = 2 * n - q;
      if (((p - q) % 4 + 4) % 4 != res) continue;
      bool split = (res == 0 && p == q);
      bool qs = split || (res == 2 && p - q == 2);
      out.push_back({sig_label("Spin", p, q, true), p, q, split, qs, q == 0});
    }
  } else if (pat == "Spin*(2n)") {
    out.push_back({"Spin*(" + std::to_string(2 * n) + ")", 0, 0, false, false, false});
  } else {
    out.push_back({pat, 0, 0, false, false, false});  // literal exceptional label
  }
  return out;
}

std::vector<std::pair<std::size_t, int>> sign_constraints(const DynkinType& t,
                                                          const std::vector<std::size_t>& inner,
                                                          const std::string& rule,
                                                          const LabelInstance& li) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<std::size_t> fixed;
  for (std::size_t k : minuscule_nodes(t))
    if (inner[k] == k) fixed.push_back(k);
  std::vector<std::pair<std::size_t, int>> out;
  if (rule == "none") return out;
  if (rule == "all:+") {
    for (std::size_t k : fixed) out.push_back({k, +1});
  } else if (rule == "alt") {
    for (std::size_t k : fixed) out.push_back({k, pow_sign(static_cast<long long>(k) + 1)});
  } else if (rule == "mid") {
    out.push_back({(n - 1) / 2, pow_sign((li.p - li.q) / 2)});
  } else if (rule == "spin") {
    out.push_back({n - 1, b_spin_sign(li.p, li.q, t.rank)});
  } else if (rule == "vec:+") {
    out.push_back({0, +1});
  } else if (rule == "vec:-") {
    out.push_back({0, -1});
  } else if (rule == "dvec") {
    int d = pow_sign((li.p - li.q) / 4);
    out.push_back({0, +1});
    out.push_back({n - 2, d});
    out.push_back({n - 1, d});
  } else if (rule == "dstar") {
    out.push_back({0, -1});
    out.push_back({n - 2, +1});
    out.push_back({n - 1, -1});
  } else if (rule == "m7:+") {
    out.push_back({6, +1});
  } else if (rule == "m7:-") {
    out.push_back({6, -1});
  } else {
    throw ParseError("tits tables: bad sign rule " + rule);
  }
  return out;
}

CenterElement apply_sigma(const CenterElement& z, const std::vector<std::size_t>& perm) {
  CenterElement out;
  out.q.resize(z.q.size());
  for (std::size_t k = 0; k < z.q.size(); ++k) out.q[k] = mod1(-z.q[perm[k]]);
  return out;
}

// Solve for the unique-mod-norms representative matching the sign data.
QVec solve_tits(const DynkinType& t, const std::vector<std::size_t>& inner,
                const std::vector<std::pair<std::size_t, int>>& signs,
                const std::string& label) {
  GroupSpec sg;
  sg.factors = {t};
  auto z_all = center_elements(sg);
  std::vector<CenterElement> fixed;
  for (const auto& z : z_all)
    if (apply_sigma(z, inner) == z) fixed.push_back(z);
  std::vector<CenterElement> candidates;
  for (const auto& z : fixed) {
    bool ok = true;
    for (auto [node, sign] : signs) {
      Rat want = (sign < 0) ? Rat(1, 2) : Rat(0);
      if (z.q[node] != want) ok = false;
    }
    if (ok) candidates.push_back(z);
  }
  if (candidates.empty())
    throw InternalError("tits tables: no representative matches signs for " + label);
  std::set<CenterElement> norms;
  for (const auto& a : z_all) norms.insert(center_add(a, apply_sigma(a, inner)));
  std::set<CenterElement> coset;
  for (const auto& nrm : norms) coset.insert(center_add(candidates.front(), nrm));
  std::set<CenterElement> cand_set(candidates.begin(), candidates.end());
  if (cand_set != coset)
    throw InternalError("tits tables: representative not unique mod norms for " + label);
  return candidates.front().q;  // sorted enumeration => lexicographically least
}

std::vector<RealFormRecord> build_catalog(const DynkinType& t) {
  std::vector<RealFormRecord> out;
  for (const auto& row : parse_tables()) {
    if (row.family != t.family || !rank_matches(row.rankpat, t.rank)) continue;
    auto inner = local_inner_perm(t, row.inner);
    for (const auto& li : expand_labels(t, row.labels)) {
      RealFormRecord rec;
      rec.type = t;
      rec.label = li.label;
      rec.inner_class = inner;
      rec.minuscule_signs = sign_constraints(t, inner, row.signs, li);
      rec.tits_q = solve_tits(t, inner, rec.minuscule_signs, li.label);
      rec.is_split = li.split || row.flags == "split";
      rec.is_quasi_split = li.qs || rec.is_split || row.flags == "qs";
      rec.is_compact = li.compact || row.flags == "compact";
      out.push_back(std::move(rec));
    }
  }
  if (out.empty()) throw InvalidType("no catalog rows for " + t.name());
  return out;
}

std::string normalize_label(const DynkinType& t, std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s == "SL(1,H)") return "SU(2)";
  if (t.family == 'D' && t.rank == 4 && s == "Spin*(8)") return "Spin(6,2)";  // triality
  auto fix_sig = [&](const std::string& head, bool drop_zero) -> bool {
    if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return false;
    std::string args = s.substr(head.size() + 1, s.size() - head.size() - 2);
    auto comma = args.find(',');
    if (comma == std::string::npos) return false;
    std::string a = args.substr(0, comma), b = args.substr(comma + 1);
    if (a.empty() || b.empty()) return false;
    if (!std::all_of(a.begin(), a.end(), ::isdigit) ||
        !std::all_of(b.begin(), b.end(), ::isdigit))
      return false;
    int p = std::stoi(a), q = std::stoi(b);
    if (p < q) std::swap(p, q);
    s = sig_label(head, p, q, drop_zero);
    return true;
  };
  fix_sig("SU", true) || fix_sig("Spin", true) || fix_sig("Sp", false);
  return s;
}

}  // namespace

const std::vector<RealFormRecord>& catalog(const DynkinType& t) {
  DynkinType ty = make_type(t.family, t.rank);
  static std::map<DynkinType, std::vector<RealFormRecord>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(ty);
  if (it == cache.end()) it = cache.emplace(ty, build_catalog(ty)).first;
  return it->second;
}

const RealFormRecord& catalog_record(const DynkinType& t, const std::string& label) {
  DynkinType ty = make_type(t.family, t.rank);
  std::string canon = normalize_label(ty, label);
  for (const auto& rec : catalog(ty))
    if (rec.label == canon) return rec;
  throw UnknownLabel("no real form '" + label + "' of type " + ty.name());
}

std::string tables_version() {
  std::istringstream in(tables_text());
  std::string line;
  std::getline(in, line);
  return trim(line);
}

// ---------------------------------------------------------------------------
// Real group structures on products

std::string RealStructureSpec::name() const {
  if (is_torus()) {
    auto inv = torus_structure_normal_form(torus_matrix);
    return "torus(n0=" + std::to_string(inv.n0) + ",n1=" + std::to_string(inv.n1) +
           ",n2=" + std::to_string(inv.n2) + ")";
  }
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < group.factors.size(); ++i) {
    if (factor_perm[i] < i) continue;
    if (!first) s += " x ";
    first = false;
    if (factor_perm[i] == i)
      s += forms.at(i);
    else
      s += "swap(" + std::to_string(i) + "," + std::to_string(factor_perm[i]) + ")";
  }
  return s;
}

RealStructureSpec split_structure(const GroupSpec& g) {
  RealStructureSpec s;
  s.group = g;
  if (g.is_torus()) {
    s.torus_matrix = IntMatrix::identity(g.total_rank());
    return s;
  }
  s.factor_perm.resize(g.factors.size());
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    s.factor_perm[i] = i;
    for (const auto& rec : catalog(g.factors[i]))
      if (rec.is_split) s.forms[i] = rec.label;
  }
  return s;
}

RealStructureSpec torus_structure(const GroupSpec& g, IntMatrix cochar_involution) {
  if (!g.is_torus()) throw InvalidType("torus_structure: group is not a torus");
  RealStructureSpec s;
  s.group = g;
  s.torus_matrix = std::move(cochar_involution);
  validate_structure(s);
  return s;
}

RealStructureSpec make_structure(const GroupSpec& g, std::vector<std::size_t> factor_perm,
                                 std::map<std::size_t, std::string> forms) {
  RealStructureSpec s;
  s.group = g;
  if (factor_perm.empty()) {
    factor_perm.resize(g.factors.size());
    for (std::size_t i = 0; i < factor_perm.size(); ++i) factor_perm[i] = i;
  }
  s.factor_perm = std::move(factor_perm);
  for (auto& [i, label] : forms) s.forms[i] = label;
  validate_structure(s);
  // canonicalize labels
  for (auto& [i, label] : s.forms) label = catalog_record(g.factors[i], label).label;
  return s;
}

void validate_structure(const RealStructureSpec& s) {
  if (s.is_torus()) {
    if (!s.torus_matrix.is_square() ||
        s.torus_matrix.rows != s.group.total_rank())
      throw DimensionMismatch("torus involution has wrong size");
    if (!is_involution(s.torus_matrix))
      throw NotInvolution("torus matrix is not an involution");
    if (!s.factor_perm.empty() || !s.forms.empty())
      throw InvalidType("torus structure carries no factor data");
    return;
  }
  const std::size_t nf = s.group.factors.size();
  if (s.factor_perm.size() != nf) throw DimensionMismatch("factor_perm has wrong length");
  for (std::size_t i = 0; i < nf; ++i) {
    std::size_t j = s.factor_perm[i];
    if (j >= nf) throw IndexError("factor_perm out of range");
    if (s.factor_perm[j] != i) throw NotInvolution("factor_perm does not square to identity");
    if (!(s.group.factors[i] == s.group.factors[j]))
      throw InvalidType("factor_perm swaps factors of different type");
    if (i == j) {
      auto it = s.forms.find(i);
      if (it == s.forms.end())
        throw InvalidType("fixed factor " + std::to_string(i) + " carries no form label");
      catalog_record(s.group.factors[i], it->second);
    }
  }
  for (const auto& [i, label] : s.forms) {
    (void)label;
    if (i >= nf || s.factor_perm[i] != i)
      throw InvalidType("form label on a swapped or missing factor");
  }
}

bool structure_is_quasi_split(const RealStructureSpec& s) {
  if (s.is_torus()) return true;
  for (const auto& [i, label] : s.forms)
    if (!catalog_record(s.group.factors[i], label).is_quasi_split) return false;
  return true;
}

bool structure_is_split(const RealStructureSpec& s) {
  if (s.is_torus()) return is_identity(s.torus_matrix);
  for (std::size_t i = 0; i < s.factor_perm.size(); ++i)
    if (s.factor_perm[i] != i) return false;
  for (const auto& [i, label] : s.forms)
    if (!catalog_record(s.group.factors[i], label).is_split) return false;
  return true;
}

namespace {

// Enumerate the canonical shapes per type group: p swapped pairs at the tail
// plus a nondecreasing multiset of catalog labels on the leading fixed
// factors.  This realizes "up to type-preserving relabeling" exactly.
struct GroupShape {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::pair<std::size_t, std::string>> labels;
};

void multisets(std::size_t count, const std::vector<std::string>& labels, std::size_t from,
               std::vector<std::string>& cur, std::vector<std::vector<std::string>>& out) {
  if (cur.size() == count) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < labels.size(); ++i) {
    cur.push_back(labels[i]);
    multisets(count, labels, i, cur, out);
    cur.pop_back();
  }
}

std::vector<RealStructureSpec> enumerate_with_labels(
    const GroupSpec& g, const std::function<std::vector<std::string>(const DynkinType&)>& labels_of) {
  std::map<std::string, std::vector<std::size_t>> by_type;
  std::map<std::string, DynkinType> type_of;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    by_type[g.factors[i].name()].push_back(i);
    type_of[g.factors[i].name()] = g.factors[i];
  }
  std::vector<std::vector<GroupShape>> per_group;
  for (const auto& [name, idxs] : by_type) {
    const auto labels = labels_of(type_of[name]);
    std::vector<GroupShape> shapes;
    for (std::size_t p = 0; 2 * p <= idxs.size(); ++p) {
      std::size_t nfixed = idxs.size() - 2 * p;
      std::vector<std::vector<std::string>> ms;
      std::vector<std::string> cur;
      multisets(nfixed, labels, 0, cur, ms);
      for (const auto& assignment : ms) {
        GroupShape shape;
        for (std::size_t k = 0; k < nfixed; ++k) shape.labels.push_back({idxs[k], assignment[k]});
        for (std::size_t k = 0; k < p; ++k)
          shape.pairs.push_back({idxs[nfixed + 2 * k], idxs[nfixed + 2 * k + 1]});
        shapes.push_back(std::move(shape));
      }
    }
    per_group.push_back(std::move(shapes));
  }
  // cartesian product across type groups
  std::vector<RealStructureSpec> out;
  std::vector<std::size_t> pick(per_group.size(), 0);
  for (;;) {
    RealStructureSpec s;
    s.group = g;
    s.factor_perm.resize(g.factors.size());
    for (std::size_t i = 0; i < s.factor_perm.size(); ++i) s.factor_perm[i] = i;
    for (std::size_t gi = 0; gi < per_group.size(); ++gi) {
      const GroupShape& shape = per_group[gi][pick[gi]];
      for (const auto& [i, label] : shape.labels) s.forms[i] = label;
      for (const auto& [i, j] : shape.pairs) {
        s.factor_perm[i] = j;
        s.factor_perm[j] = i;
      }
    }
    out.push_back(std::move(s));
    std::size_t k = 0;
    while (k < per_group.size()) {
      pick[k] += 1;
      if (pick[k] < per_group[k].size()) break;
      pick[k] = 0;
      ++k;
    }
    if (k == per_group.size()) break;
  }
  return out;
}

}  // namespace

std::vector<RealStructureSpec> quasi_split_classes(const GroupSpec& g) {
  if (g.is_torus()) throw NotSemisimple("quasi_split_classes: spec is a torus");
  return enumerate_with_labels(g, [](const DynkinType& t) {
    std::vector<std::string> out;
    for (const auto& rec : catalog(t))
      if (rec.is_quasi_split) out.push_back(rec.label);
    return out;
  });
}

std::vector<RealStructureSpec> enumerate_real_structures(const GroupSpec& g) {
  if (g.is_torus()) throw NotSemisimple("enumerate_real_structures: spec is a torus");
  return enumerate_with_labels(g, [](const DynkinType& t) {
    std::vector<std::string> out;
    for (const auto& rec : catalog(t)) out.push_back(rec.label);
    return out;
  });
}

std::vector<std::size_t> gamma_node_perm(const RealStructureSpec& s) {
  validate_structure(s);
  if (s.is_torus()) throw NotSemisimple("gamma_node_perm: torus structure");
  const GroupSpec& g = s.group;
  std::vector<std::size_t> perm(g.total_rank());
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    std::size_t off = g.node_offset(i);
    std::size_t rank = static_cast<std::size_t>(g.factors[i].rank);
    if (s.factor_perm[i] == i) {
      const auto& rec = catalog_record(g.factors[i], s.forms.at(i));
      for (std::size_t k = 0; k < rank; ++k) perm[off + k] = off + rec.inner_class[k];
    } else {
      std::size_t joff = g.node_offset(s.factor_perm[i]);
      for (std::size_t k = 0; k < rank; ++k) perm[off + k] = joff + k;
    }
  }
  return perm;
}

IntMatrix gamma_action_matrix(const RealStructureSpec& s) {
  if (s.is_torus()) {
    validate_structure(s);
    return mat_transpose(s.torus_matrix);
  }
  auto perm = gamma_node_perm(s);
  IntMatrix a(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) a.at(i, perm[i]) = 1;
  return a;
}

CenterElement tits_representative(const RealStructureSpec& s) {
  validate_structure(s);
  if (s.is_torus()) throw NotSemisimple("tits_representative: torus structure");
  const GroupSpec& g = s.group;
  CenterElement z = zero_center(g);
  for (const auto& [i, label] : s.forms) {
    const auto& rec = catalog_record(g.factors[i], label);
    std::size_t off = g.node_offset(i);
    for (std::size_t k = 0; k < rec.tits_q.size(); ++k) z.q[off + k] = rec.tits_q[k];
  }
  return z;
}

int tits_value_on_weight(const RealStructureSpec& s, const WeightVector& chi) {
  IntMatrix a = gamma_action_matrix(s);
  if (chi.coords.size() != a.rows) throw DimensionMismatch("weight has wrong length");
  if (vec_mat(chi.coords, a) != chi.coords)
    throw NotFixed("weight is not fixed by the Gamma-action");
  if (s.is_torus()) return +1;
  CenterElement z = tits_representative(s);
  Rat v = 0;
  for (std::size_t i = 0; i < chi.coords.size(); ++i) v += Rat(chi.coords[i]) * z.q[i];
  if (is_zero_mod1(v)) return +1;
  if (is_half_mod1(v)) return -1;
  throw InternalError("tits_value_on_weight: value neither 0 nor 1/2 mod 1");
}

GammaLatticeInvariants torus_structure_normal_form(const IntMatrix& a) {
  return involution_invariants(a);
}

}  // namespace horo
