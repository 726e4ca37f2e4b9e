#include "horo/cohomology.hpp"

#include "horo/errors.hpp"

namespace horo {

namespace {

std::uint64_t pow2(std::size_t e) {
  if (e >= 63) throw InternalError("cohomology order overflows");
  return std::uint64_t(1) << e;
}

CenterElement apply_gamma_center(const CenterElement& z, const IntMatrix& theta) {
  // q -> -theta q in additive coordinates; theta is the permutation matrix of
  // the Gamma-action on X, so (theta q)_k reads the coordinate at the image
  // node of k.
  if (z.q.size() != theta.rows) throw DimensionMismatch("center element / action size mismatch");
  CenterElement out;
  out.q.resize(z.q.size());
  for (std::size_t k = 0; k < z.q.size(); ++k) {
    Rat acc = 0;
    for (std::size_t j = 0; j < z.q.size(); ++j)
      if (theta.at(k, j) != 0) acc += Rat(theta.at(k, j)) * z.q[j];
    out.q[k] = mod1(-acc);
  }
  return out;
}

}  // namespace

std::uint64_t torus_h1_order(const GammaTorus& t) {
  if (t.action.rows != t.character_lattice_rank)
    throw DimensionMismatch("GammaTorus: action size mismatch");
  return pow2(involution_invariants(t.action).n1);
}

std::uint64_t torus_h2_order(const GammaTorus& t) {
  if (t.action.rows != t.character_lattice_rank)
    throw DimensionMismatch("GammaTorus: action size mismatch");
  return pow2(involution_invariants(t.action).n0);
}

bool center_class_trivial(const GroupSpec& g, const IntMatrix& theta, const CenterElement& z) {
  if (!satisfies_root_relations(g, z)) throw NotCentral("element violates the root relations");
  if (!(apply_gamma_center(z, theta) == z)) throw NotFixed("element is not Gamma-fixed");
  for (const auto& a : center_elements(g))
    if (center_add(a, apply_gamma_center(a, theta)) == z) return true;
  return false;
}

CenterClassReport delta_trivial(const GroupSpec& g, const RealStructureSpec& sigma,
                                const Sublattice& m) {
  return delta_trivial_with(g, sigma, m, tits_representative(sigma));
}

CenterClassReport delta_trivial_with(const GroupSpec& g, const RealStructureSpec& sigma,
                                     const Sublattice& m, const CenterElement& z) {
  if (m.ambient_rank != g.total_rank())
    throw DimensionMismatch("delta_trivial: sublattice ambient rank mismatch");
  IntMatrix a = gamma_action_matrix(sigma);
  if (!satisfies_root_relations(g, z)) throw NotCentral("representative violates root relations");
  if (!(apply_gamma_center(z, a) == z)) throw NotFixed("representative is not Gamma-fixed");
  IntMatrix r = restrict_involution(a, m);  // NotStable when m is not stable
  GammaLatticeInvariants inv = involution_invariants(r);
  CenterClassReport rep;
  for (std::size_t i = 0; i < inv.n0; ++i) {
    // trivial-summand character, written back in weight coordinates
    auto w = vec_mat(inv.adapted_basis.row(i), m.basis);
    Rat v = 0;
    for (std::size_t k = 0; k < w.size(); ++k) v += Rat(w[k]) * z.q[k];
    if (is_zero_mod1(v)) continue;
    if (!is_half_mod1(v)) throw InternalError("delta_trivial: evaluation not 2-torsion");
    rep.is_trivial = false;
    std::string chi = "[";
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) chi += ",";
      chi += w[k].str();
    }
    chi += "]";
    rep.witness = "character " + chi + " evaluates to 1/2 on the Tits representative";
    return rep;
  }
  return rep;
}

}  // namespace horo
