#pragma once

#include <cstdint>
#include <string>

#include "horo/realform.hpp"
#include "horo/rootsys.hpp"

namespace horo {

// A torus with Gamma acting on its character lattice through an involution.
struct GammaTorus {
  std::size_t character_lattice_rank = 0;
  IntMatrix action;
};

// |H^1(Gamma, T)| = 2^{n1} and |H^2(Gamma, T)| = 2^{n0} for the involution on
// the character lattice (sign summands are sigma_1 factors, trivial summands
// sigma_0, regular summands sigma_2).
std::uint64_t torus_h1_order(const GammaTorus& t);
std::uint64_t torus_h2_order(const GammaTorus& t);

// Is z a norm a + sigma_qs(a) in Z(G), for the Gamma-action q -> -theta*q
// given by the node permutation matrix theta?  Decided by enumerating the
// center.  NotFixed if z is not Gamma-fixed, NotCentral if it violates the
// root relations.
bool center_class_trivial(const GroupSpec& g, const IntMatrix& theta, const CenterElement& z);

struct CenterClassReport {
  bool is_trivial = true;
  std::string witness;  // detecting character, empty iff trivial
};

// Triviality of Delta_H(sigma) on the datum sublattice m: the Tits
// representative is evaluated on the trivial-summand characters of the
// restricted Gamma-action; sign and regular summands contribute nothing.
CenterClassReport delta_trivial(const GroupSpec& g, const RealStructureSpec& sigma,
                                const Sublattice& m);

// Same computation with an explicit representative of the Tits class (any
// norm-shift of the canonical one gives the same answer).
CenterClassReport delta_trivial_with(const GroupSpec& g, const RealStructureSpec& sigma,
                                     const Sublattice& m, const CenterElement& z);

}  // namespace horo
