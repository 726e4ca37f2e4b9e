#include "horo/horospherical.hpp"

#include "horo/errors.hpp"

namespace horo {

void validate_datum(const HorosphericalDatum& d) {
  const std::size_t n = d.group.total_rank();
  if (d.M.ambient_rank != n)
    throw DimensionMismatch("datum: sublattice ambient rank != total rank");
  for (std::size_t node : d.I)
    if (node >= n) throw IndexError("datum: node index out of range");
  if (d.group.is_torus() && !d.I.empty())
    throw InvalidType("datum: torus has no simple roots");
  for (std::size_t r = 0; r < d.M.basis.rows; ++r)
    for (std::size_t node : d.I)
      if (d.M.basis.at(r, node) != 0)
        throw OrthogonalityViolated("basis row " + std::to_string(r) +
                                    " pairs nontrivially with coroot of node " +
                                    std::to_string(node));
  hermite_basis(d.M);  // throws DegenerateBasis on dependent rows
}

HorosphericalDatum datum_of_flag(const GroupSpec& g, std::set<std::size_t> I) {
  HorosphericalDatum d{g, std::move(I), Sublattice::zero(g.total_rank())};
  validate_datum(d);
  return d;
}

HorosphericalDatum datum_of_maximal_unipotent(const GroupSpec& g) {
  return HorosphericalDatum{g, {}, Sublattice::full(g.total_rank())};
}

HorosphericalDatum apply_gamma_to_datum(const RealStructureSpec& sigma,
                                        const HorosphericalDatum& d) {
  if (!(sigma.group == d.group)) throw GroupMismatch("structure and datum live on different groups");
  validate_datum(d);
  IntMatrix a = gamma_action_matrix(sigma);
  HorosphericalDatum out;
  out.group = d.group;
  if (!d.group.is_torus()) {
    auto perm = gamma_node_perm(sigma);
    for (std::size_t node : d.I) out.I.insert(perm[node]);
  }
  out.M = Sublattice(d.M.ambient_rank, mat_mul(d.M.basis, a));
  return out;
}

bool datum_is_stable(const RealStructureSpec& sigma, const HorosphericalDatum& d) {
  HorosphericalDatum im = apply_gamma_to_datum(sigma, d);
  return im.I == d.I && sublattices_equal(im.M, d.M);
}

ExistenceReport existence_report(const RealStructureSpec& sigma, const HorosphericalDatum& d) {
  validate_datum(d);
  ExistenceReport rep;
  rep.datum_stable = datum_is_stable(sigma, d);
  rep.exists_quasi_split = rep.datum_stable;
  if (!rep.datum_stable) return rep;
  if (sigma.is_torus()) {
    // every real torus structure is quasi-split and Delta is trivial
    rep.delta = CenterClassReport{};
    rep.exists = true;
  } else {
    rep.delta = delta_trivial(d.group, sigma, d.M);
    rep.exists = rep.delta->is_trivial;
  }
  if (!rep.exists) return rep;
  IntMatrix r = restrict_involution(gamma_action_matrix(sigma), d.M);
  auto inv = involution_invariants(r);
  rep.torus_invariants = {inv.n0, inv.n1, inv.n2};
  if (inv.n1 >= 63) throw InternalError("class count overflows");
  rep.num_classes = std::uint64_t(1) << inv.n1;
  return rep;
}

std::uint64_t count_classes_torus(const IntMatrix& a) {
  auto inv = involution_invariants(a);
  if (inv.n1 >= 63) throw InternalError("class count overflows");
  return std::uint64_t(1) << inv.n1;
}

}  // namespace horo
