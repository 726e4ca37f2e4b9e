#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>

#include "horo/cohomology.hpp"
#include "horo/realform.hpp"

namespace horo {

// Pasquier datum (I, M): a subset of simple-root nodes and a sublattice of
// the weight lattice vanishing on the coroots of I.
struct HorosphericalDatum {
  GroupSpec group;
  std::set<std::size_t> I;
  Sublattice M;
};

void validate_datum(const HorosphericalDatum& d);

HorosphericalDatum datum_of_flag(const GroupSpec& g, std::set<std::size_t> I);
HorosphericalDatum datum_of_maximal_unipotent(const GroupSpec& g);

HorosphericalDatum apply_gamma_to_datum(const RealStructureSpec& sigma,
                                        const HorosphericalDatum& d);
bool datum_is_stable(const RealStructureSpec& sigma, const HorosphericalDatum& d);

struct ExistenceReport {
  bool datum_stable = false;
  bool exists_quasi_split = false;
  std::optional<CenterClassReport> delta;
  bool exists = false;
  std::optional<std::uint64_t> num_classes;
  std::optional<std::array<std::size_t, 3>> torus_invariants;  // (n0, n1, n2) on M
};

// The existence criterion on the open orbit: Gamma-stability of (I, M) plus
// triviality of Delta_H; when both hold there are 2^{n1} classes.
ExistenceReport existence_report(const RealStructureSpec& sigma, const HorosphericalDatum& d);

// Number of equivalence classes of equivariant real structures on a torus,
// from the involution on its character lattice.
std::uint64_t count_classes_torus(const IntMatrix& a);

}  // namespace horo
