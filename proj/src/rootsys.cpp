#include "horo/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "horo/errors.hpp"

namespace horo {

DynkinType make_type(char family, int rank) {
  DynkinType t{family, rank};
  switch (family) {
    case 'A':
      if (rank < 1) throw InvalidType("A requires rank >= 1");
      break;
    case 'B':
      if (rank < 2) throw InvalidType("B requires rank >= 2");
      break;
    case 'C':
      if (rank < 2) throw InvalidType("C requires rank >= 2");
      break;
    case 'D':
      if (rank == 3) return DynkinType{'A', 3};  // same diagram, Bourbaki chain numbering
      if (rank < 4)
        throw InvalidType("D requires rank >= 3 (use A1 factors for D2)");
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw InvalidType("E requires rank 6..8");
      break;
    case 'F':
      if (rank != 4) throw InvalidType("F requires rank 4");
      break;
    case 'G':
      if (rank != 2) throw InvalidType("G requires rank 2");
      break;
    default:
      throw InvalidType(std::string("unknown family '") + family + "'");
  }
  return t;
}

std::size_t GroupSpec::total_rank() const {
  if (is_torus()) return static_cast<std::size_t>(torus_rank);
  std::size_t n = 0;
  for (const auto& f : factors) n += static_cast<std::size_t>(f.rank);
  return n;
}

std::size_t GroupSpec::node_offset(std::size_t factor) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < factor; ++i) n += static_cast<std::size_t>(factors[i].rank);
  return n;
}

std::size_t GroupSpec::factor_of_node(std::size_t node) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    n += static_cast<std::size_t>(factors[i].rank);
    if (node < n) return i;
  }
  throw IndexError("node index out of range");
}

std::string GroupSpec::name() const {
  if (is_torus()) return "T" + std::to_string(torus_rank);
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].name();
  }
  return s;
}

GroupSpec semisimple_group(std::vector<DynkinType> factors) {
  if (factors.empty()) throw InvalidType("semisimple group needs at least one factor");
  GroupSpec g;
  for (auto& f : factors) g.factors.push_back(make_type(f.family, f.rank));
  return g;
}

GroupSpec torus_group(int rank) {
  if (rank < 1) throw InvalidType("torus rank must be >= 1");
  GroupSpec g;
  g.torus_rank = rank;
  return g;
}

// ---------------------------------------------------------------------------
// Cartan matrices

namespace {

// Edges with multiplicities: entry {i, j, cij} sets C[i][j] = cij (0-based).
void set_pair(IntMatrix& c, int i, int j, int cij, int cji) {
  c.at(i, j) = cij;
  c.at(j, i) = cji;
}

}  // namespace

IntMatrix cartan_matrix(const DynkinType& t) {
  DynkinType ty = make_type(t.family, t.rank);
  const int n = ty.rank;
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) set_pair(c, i, i + 1, -1, -1);
  };
  switch (ty.family) {
    case 'A':
      chain(n);
      break;
    case 'B':  // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      chain(n);
      set_pair(c, n - 1, n - 2, -2, -1);
      break;
    case 'C':  // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      chain(n);
      set_pair(c, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      chain(n - 1);
      set_pair(c, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to node 4
      set_pair(c, 0, 2, -1, -1);
      set_pair(c, 2, 3, -1, -1);
      set_pair(c, 3, 4, -1, -1);
      set_pair(c, 4, 5, -1, -1);
      set_pair(c, 1, 3, -1, -1);
      if (n >= 7) set_pair(c, 5, 6, -1, -1);
      if (n == 8) set_pair(c, 6, 7, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      chain(n);
      set_pair(c, 2, 1, -2, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      set_pair(c, 0, 1, -3, -1);
      break;
  }
  return c;
}

IntMatrix cartan_matrix(const GroupSpec& g) {
  if (g.is_torus()) throw NotSemisimple("cartan_matrix: torus has no Cartan matrix");
  std::size_t n = g.total_rank();
  IntMatrix c(n, n);
  std::size_t off = 0;
  for (const auto& f : g.factors) {
    IntMatrix cf = cartan_matrix(f);
    for (std::size_t i = 0; i < cf.rows; ++i)
      for (std::size_t j = 0; j < cf.cols; ++j) c.at(off + i, off + j) = cf.at(i, j);
    off += cf.rows;
  }
  return c;
}

Int weight_pairing(const WeightVector& chi, std::size_t coroot_node) {
  if (coroot_node >= chi.coords.size()) throw IndexError("weight_pairing: node out of range");
  return chi.coords[coroot_node];
}

bool satisfies_root_relations(const GroupSpec& g, const CenterElement& z) {
  if (z.q.size() != g.total_rank()) throw DimensionMismatch("center element has wrong length");
  IntMatrix c = cartan_matrix(g);
  for (std::size_t j = 0; j < c.cols; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < c.rows; ++i) s += Rat(c.at(i, j)) * z.q[i];
    if (!is_zero_mod1(s)) return false;
  }
  return true;
}

CenterElement zero_center(const GroupSpec& g) {
  return CenterElement{QVec(g.total_rank(), Rat(0))};
}

CenterElement center_add(const CenterElement& x, const CenterElement& y) {
  if (x.q.size() != y.q.size()) throw DimensionMismatch("center_add: lengths differ");
  CenterElement z = x;
  for (std::size_t i = 0; i < z.q.size(); ++i) z.q[i] = mod1(z.q[i] + y.q[i]);
  return z;
}

CenterElement center_neg(const CenterElement& x) {
  CenterElement z = x;
  for (auto& v : z.q) v = mod1(-v);
  return z;
}

std::vector<CenterElement> center_elements(const DynkinType& t) {
  IntMatrix c = cartan_matrix(t);
  SmithResult s = smith_normal_form(c);
  std::size_t n = c.rows;
  // q*C == 0 (mod 1)  <=>  q = p*U with p_i in (1/d_i)Z / Z
  std::vector<Int> divs;
  for (std::size_t i = 0; i < n; ++i) divs.push_back(s.d.at(i, i));
  std::vector<CenterElement> out;
  std::vector<Int> idx(n, 0);
  for (;;) {
    QVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rat(idx[i], divs[i]);
    QVec q(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q[j] += p[i] * Rat(s.u.at(i, j));
    out.push_back(CenterElement{mod1(q)});
    std::size_t k = 0;
    while (k < n) {
      idx[k] += 1;
      if (idx[k] < divs[k]) break;
      idx[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CenterElement> center_elements(const GroupSpec& g) {
  if (g.is_torus()) throw NotSemisimple("center_elements: spec is a torus");
  std::vector<CenterElement> acc = {CenterElement{}};
  for (const auto& f : g.factors) {
    auto part = center_elements(f);
    std::vector<CenterElement> next;
    next.reserve(acc.size() * part.size());
    for (const auto& a : acc)
      for (const auto& p : part) {
        CenterElement z = a;
        z.q.insert(z.q.end(), p.q.begin(), p.q.end());
        next.push_back(std::move(z));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

// ---------------------------------------------------------------------------
// Diagram automorphisms

bool NodeInvolution::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

NodeInvolution identity_involution(const GroupSpec& g) {
  NodeInvolution p;
  p.perm.resize(g.total_rank());
  for (std::size_t i = 0; i < p.perm.size(); ++i) p.perm[i] = i;
  return p;
}

std::vector<std::vector<std::size_t>> diagram_automorphisms(const DynkinType& t) {
  DynkinType ty = make_type(t.family, t.rank);
  const std::size_t n = static_cast<std::size_t>(ty.rank);
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<std::size_t>> out = {id};
  if (ty.family == 'A' && ty.rank >= 2) {
    auto flip = id;
    std::reverse(flip.begin(), flip.end());
    out.push_back(flip);
  } else if (ty.family == 'D' && ty.rank == 4) {
    // S3 permuting the three outer nodes 0, 2, 3 around the center node 1
    const std::size_t outer[3] = {0, 2, 3};
    std::size_t order[3] = {0, 1, 2};
    std::vector<std::vector<std::size_t>> perms;
    std::sort(order, order + 3);
    do {
      auto p = id;
      for (int k = 0; k < 3; ++k) p[outer[k]] = outer[order[k]];
      perms.push_back(p);
    } while (std::next_permutation(order, order + 3));
    out.clear();
    // keep identity first, then the rest in lexicographic order
    std::sort(perms.begin(), perms.end());
    for (auto& p : perms)
      if (p == id) out.insert(out.begin(), p);
    for (auto& p : perms)
      if (!(p == id)) out.push_back(p);
  } else if (ty.family == 'D' && ty.rank >= 5) {
    auto swap = id;
    std::swap(swap[n - 2], swap[n - 1]);
    out.push_back(swap);
  } else if (ty.family == 'E' && ty.rank == 6) {
    auto flip = id;
    std::swap(flip[0], flip[5]);
    std::swap(flip[2], flip[4]);
    out.push_back(flip);
  }
  return out;
}

void validate_node_involution(const GroupSpec& g, const NodeInvolution& p) {
  const std::size_t n = g.total_rank();
  if (p.perm.size() != n) throw DimensionMismatch("node involution has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.perm[i] >= n) throw IndexError("node involution maps outside range");
    if (seen[p.perm[i]]) throw InvalidType("node involution is not a permutation");
    seen[p.perm[i]] = true;
    if (p.perm[p.perm[i]] != i) throw NotInvolution("node permutation does not square to identity");
  }
  if (g.is_torus()) return;
  // factor blocks must map to factor blocks of the same type, and the Cartan
  // matrix must be preserved
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    std::size_t off = g.node_offset(i);
    std::size_t j = g.factor_of_node(p.perm[off]);
    if (!(g.factors[i] == g.factors[j]))
      throw InvalidType("node involution maps a factor to a different type");
    std::size_t joff = g.node_offset(j);
    for (int k = 0; k < g.factors[i].rank; ++k) {
      std::size_t image = p.perm[off + static_cast<std::size_t>(k)];
      if (image < joff || image >= joff + static_cast<std::size_t>(g.factors[i].rank))
        throw InvalidType("node involution splits a factor");
    }
  }
  IntMatrix c = cartan_matrix(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.at(p.perm[i], p.perm[j]) != c.at(i, j))
        throw InvalidType("node involution does not preserve the Cartan matrix");
}

namespace {

// Conjugacy class key of an involution in Aut(Dyn(G)): per factor-type group,
// the number of swapped pairs plus the multiset of per-fixed-factor local
// automorphism conjugacy classes.
std::string involution_class_key(const GroupSpec& g, const NodeInvolution& p) {
  std::map<std::string, std::pair<int, std::multiset<int>>> groups;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    auto& slot = groups[g.factors[i].name()];
    std::size_t off = g.node_offset(i);
    std::size_t j = g.factor_of_node(p.perm[off]);
    if (j != i) {
      if (j > i) slot.first += 1;
      continue;
    }
    // local automorphism; classify up to conjugacy inside Aut(Dyn(factor))
    std::vector<std::size_t> local(static_cast<std::size_t>(g.factors[i].rank));
    for (std::size_t k = 0; k < local.size(); ++k) local[k] = p.perm[off + k] - off;
    auto autos = diagram_automorphisms(g.factors[i]);
    int cls = -1;
    std::vector<std::size_t> best;
    for (const auto& a : autos) {
      // conjugate: a o local o a^{-1}
      std::vector<std::size_t> ainv(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) ainv[a[k]] = k;
      std::vector<std::size_t> conj(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) conj[k] = a[local[ainv[k]]];
      if (best.empty() || conj < best) best = conj;
    }
    // canonical class representative index inside the sorted automorphism list
    auto sorted = autos;
    std::sort(sorted.begin(), sorted.end());
    cls = static_cast<int>(std::find(sorted.begin(), sorted.end(), best) - sorted.begin());
    slot.second.insert(cls);
  }
  std::string key;
  for (const auto& [name, val] : groups) {
    key += name + ":" + std::to_string(val.first) + "[";
    for (int c : val.second) key += std::to_string(c) + ",";
    key += "];";
  }
  return key;
}

}  // namespace

std::vector<std::vector<NodeInvolution>> diagram_involutions(const GroupSpec& g) {
  if (g.is_torus()) throw NotSemisimple("diagram_involutions: spec is a torus");
  const std::size_t nf = g.factors.size();

  // group factor indices by type
  std::map<std::string, std::vector<std::size_t>> by_type;
  for (std::size_t i = 0; i < nf; ++i) by_type[g.factors[i].name()].push_back(i);

  // enumerate involutive factor permutations within each type group
  std::vector<std::vector<std::size_t>> factor_perms = {std::vector<std::size_t>(nf)};
  for (auto& fp : factor_perms)
    for (std::size_t i = 0; i < nf; ++i) fp[i] = i;
  for (const auto& [name, idxs] : by_type) {
    (void)name;
    // involutive matchings on idxs: recursively pair or fix
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> matchings;
    std::vector<std::pair<std::size_t, std::size_t>> cur;
    std::vector<std::size_t> rem = idxs;
    std::function<void()> rec = [&]() {
      if (rem.empty()) {
        matchings.push_back(cur);
        return;
      }
      std::size_t a = rem.front();
      rem.erase(rem.begin());
      // a fixed
      rec();
      // a paired with each later element
      for (std::size_t t = 0; t < rem.size(); ++t) {
        std::size_t b = rem[t];
        rem.erase(rem.begin() + t);
        cur.push_back({a, b});
        rec();
        cur.pop_back();
        rem.insert(rem.begin() + t, b);
      }
      rem.insert(rem.begin(), a);
    };
    rec();
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : factor_perms)
      for (const auto& m : matchings) {
        auto fp = base;
        for (auto [x, y] : m) {
          fp[x] = y;
          fp[y] = x;
        }
        next.push_back(fp);
      }
    factor_perms = std::move(next);
  }

  // for each factor permutation, enumerate local automorphism choices:
  // involutions on fixed factors, arbitrary automorphisms on swapped pairs
  std::vector<NodeInvolution> all;
  for (const auto& fp : factor_perms) {
    struct Slot {
      std::size_t factor;
      std::vector<std::vector<std::size_t>> choices;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < nf; ++i) {
      if (fp[i] == i) {
        auto autos = diagram_automorphisms(g.factors[i]);
        std::vector<std::vector<std::size_t>> invs;
        for (const auto& a : autos) {
          bool invol = true;
          for (std::size_t k = 0; k < a.size(); ++k)
            if (a[a[k]] != k) invol = false;
          if (invol) invs.push_back(a);
        }
        slots.push_back({i, invs});
      } else if (fp[i] > i) {
        slots.push_back({i, diagram_automorphisms(g.factors[i])});  // map factor i -> fp[i]
      }
    }
    std::vector<std::size_t> pick(slots.size(), 0);
    bool more = true;
    while (more) {
      NodeInvolution p = identity_involution(g);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        std::size_t i = slots[s].factor;
        const auto& a = slots[s].choices[pick[s]];
        std::size_t off = g.node_offset(i);
        if (fp[i] == i) {
          for (std::size_t k = 0; k < a.size(); ++k) p.perm[off + k] = off + a[k];
        } else {
          std::size_t joff = g.node_offset(fp[i]);
          std::vector<std::size_t> ainv(a.size());
          for (std::size_t k = 0; k < a.size(); ++k) ainv[a[k]] = k;
          for (std::size_t k = 0; k < a.size(); ++k) {
            p.perm[off + k] = joff + a[k];
            p.perm[joff + k] = off + ainv[k];
          }
        }
      }
      validate_node_involution(g, p);
      all.push_back(p);
      std::size_t s = 0;
      while (s < slots.size()) {
        pick[s] += 1;
        if (pick[s] < slots[s].choices.size()) break;
        pick[s] = 0;
        ++s;
      }
      more = s < slots.size();
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  // partition into conjugacy classes
  std::map<std::string, std::vector<NodeInvolution>> classes;
  for (const auto& p : all) classes[involution_class_key(g, p)].push_back(p);
  std::vector<std::vector<NodeInvolution>> out;
  for (auto& [key, cls] : classes) {
    (void)key;
    std::sort(cls.begin(), cls.end());
    out.push_back(cls);
  }
  // identity class first, then by smallest representative
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace horo
