#include "horo/fans.hpp"

#include <algorithm>

#include "horo/errors.hpp"

namespace horo {

namespace {

Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x < 0 ? Int(-x) : x);
  return g;
}

std::vector<Int> primitive(std::vector<Int> v) {
  Int g = vec_gcd(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

bool is_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// canonical form: primitive rays, sorted, deduplicated
std::vector<std::vector<Int>> canonical_rays(const std::vector<std::vector<Int>>& rays) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : rays) out.push_back(primitive(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Int> color_point(const HorosphericalDatum& d, std::size_t node) {
  if (node >= d.group.total_rank()) throw IndexError("color_point: node out of range");
  if (d.I.count(node)) throw NotAColor("node " + std::to_string(node) + " lies in I");
  std::vector<Int> v(d.M.basis.rows);
  for (std::size_t k = 0; k < d.M.basis.rows; ++k) v[k] = d.M.basis.at(k, node);
  return v;
}

std::map<std::size_t, std::vector<Int>> color_points(const HorosphericalDatum& d) {
  std::map<std::size_t, std::vector<Int>> out;
  for (std::size_t node = 0; node < d.group.total_rank(); ++node)
    if (!d.I.count(node)) out[node] = color_point(d, node);
  return out;
}

IntMatrix gamma_on_N(const RealStructureSpec& sigma, const HorosphericalDatum& d) {
  if (!datum_is_stable(sigma, d)) throw NotStable("gamma_on_N: datum is not Gamma-stable");
  IntMatrix r = restrict_involution(gamma_action_matrix(sigma), d.M);
  return mat_transpose(r);
}

bool in_cone(const std::vector<Int>& v, const std::vector<std::vector<Int>>& rays) {
  if (is_zero(v)) return true;
  if (rays.empty()) return false;
  const std::size_t dim = v.size();
  const std::size_t k = rays.size();
  // Caratheodory: v lies in the cone iff it is a nonnegative combination of
  // some linearly independent subset.
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t(1) << i)) subset.push_back(i);
    if (subset.size() > dim) continue;
    // solve sum lambda_i rays[subset[i]] = v exactly over Q
    std::size_t m = subset.size();
    std::vector<std::vector<Rat>> w(dim, std::vector<Rat>(m + 1));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < m; ++c) w[r][c] = Rat(rays[subset[c]][r]);
      w[r][m] = Rat(v[r]);
    }
    // gaussian elimination
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < dim; ++col) {
      std::size_t p = row;
      while (p < dim && w[p][col] == 0) ++p;
      if (p == dim) continue;
      std::swap(w[row], w[p]);
      Rat piv = w[row][col];
      for (auto& x : w[row]) x /= piv;
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == row || w[r][col] == 0) continue;
        Rat f = w[r][col];
        for (std::size_t c2 = 0; c2 <= m; ++c2) w[r][c2] -= f * w[row][c2];
      }
      pivot_col.push_back(col);
      ++row;
    }
    if (pivot_col.size() < m) continue;  // dependent subset: a smaller one will do
    bool ok = true;
    for (std::size_t r = row; r < dim && ok; ++r)
      if (w[r][m] != 0) ok = false;  // inconsistent
    if (!ok) continue;
    std::vector<Rat> lambda(m);
    for (std::size_t i = 0; i < m; ++i) lambda[pivot_col[i]] = w[i][m];
    for (const auto& l : lambda)
      if (l < 0) ok = false;
    if (ok) return true;
  }
  return false;
}

void validate_fan(const HorosphericalDatum& d, const ColoredFan& f) {
  validate_datum(d);
  auto cpts = color_points(d);
  std::vector<std::vector<std::vector<Int>>> seen;
  for (const auto& cone : f.cones) {
    for (const auto& r : cone.rays) {
      if (r.size() != d.M.basis.rows) throw InvalidFan("ray has wrong dimension");
      if (is_zero(r)) throw InvalidFan("zero ray");
      if (!(primitive(r) == r)) throw InvalidFan("ray is not primitive");
    }
    // strict convexity: no nonzero ray with its negative inside the cone
    for (const auto& r : cone.rays) {
      std::vector<Int> neg(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
      if (in_cone(neg, cone.rays)) throw InvalidFan("cone is not strictly convex");
    }
    for (std::size_t node : cone.colors) {
      auto it = cpts.find(node);
      if (it == cpts.end()) throw InvalidFan("color lies in I");
      if (is_zero(it->second)) throw InvalidFan("color point is zero");
      if (!in_cone(it->second, cone.rays)) throw InvalidFan("color point outside its cone");
    }
    auto key = canonical_rays(cone.rays);
    for (const auto& s : seen)
      if (s == key) throw InvalidFan("duplicate cone");
    seen.push_back(key);
  }
}

bool fan_is_stable(const RealStructureSpec& sigma, const HorosphericalDatum& d,
                   const ColoredFan& f) {
  validate_fan(d, f);
  IntMatrix n_act = gamma_on_N(sigma, d);  // NotStable when the datum moves
  std::vector<std::size_t> node_perm;
  if (!d.group.is_torus()) node_perm = gamma_node_perm(sigma);
  struct Key {
    std::vector<std::vector<Int>> rays;
    std::set<std::size_t> colors;
    bool operator==(const Key& o) const { return rays == o.rays && colors == o.colors; }
  };
  std::vector<Key> cones;
  for (const auto& c : f.cones) cones.push_back({canonical_rays(c.rays), c.colors});
  for (const auto& c : f.cones) {
    Key image;
    std::vector<std::vector<Int>> rays;
    for (const auto& r : c.rays) rays.push_back(vec_mat(r, n_act));
    image.rays = canonical_rays(rays);
    for (std::size_t node : c.colors)
      image.colors.insert(d.group.is_torus() ? node : node_perm[node]);
    if (std::find(cones.begin(), cones.end(), image) == cones.end()) return false;
  }
  return true;
}

ExtendabilityReport extendability_report(const RealStructureSpec& sigma,
                                         const HorosphericalDatum& d, const ColoredFan& f) {
  ExtendabilityReport rep;
  rep.orbit = existence_report(sigma, d);
  if (rep.orbit.datum_stable) rep.fan_stable = fan_is_stable(sigma, d, f);
  rep.extendable = rep.orbit.exists && rep.fan_stable;
  return rep;
}

}  // namespace horo
