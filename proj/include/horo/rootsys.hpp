#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "horo/lattice.hpp"
#include "horo/numeric.hpp"

namespace horo {

// Simple Dynkin type with Bourbaki node numbering (nodes are 0-based indices
// here; node i corresponds to Bourbaki's alpha_{i+1}).
struct DynkinType {
  char family = 'A';  // one of A B C D E F G
  int rank = 0;

  bool operator==(const DynkinType& o) const { return family == o.family && rank == o.rank; }
  bool operator<(const DynkinType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

// Validates rank bounds and canonicalizes the low-rank alias D3 -> A3.
// Accepted: A>=1, B>=2, C>=2, D>=4 (D3 relabeled), E 6..8, F4, G2.
DynkinType make_type(char family, int rank);

// A simply-connected semisimple group as an ordered product of simple
// factors, or a standalone torus (empty factor list, torus_rank > 0).
struct GroupSpec {
  std::vector<DynkinType> factors;
  int torus_rank = 0;

  bool is_torus() const { return factors.empty(); }
  std::size_t total_rank() const;
  std::size_t node_offset(std::size_t factor) const;  // first global node of the factor
  std::size_t factor_of_node(std::size_t node) const;
  bool operator==(const GroupSpec& o) const {
    return factors == o.factors && torus_rank == o.torus_rank;
  }
  std::string name() const;
};

GroupSpec semisimple_group(std::vector<DynkinType> factors);
GroupSpec torus_group(int rank);

// Integer vector in the fundamental-weight basis (factors concatenated).
struct WeightVector {
  std::vector<Int> coords;
};

// Element of Z(G) written additively: entry k is the value of the k-th
// fundamental weight on the element, an exact rational mod 1.
struct CenterElement {
  QVec q;

  bool operator==(const CenterElement& o) const { return q == o.q; }
  bool operator<(const CenterElement& o) const { return q < o.q; }
};

// n x n Cartan matrix in Bourbaki numbering; column j holds the coordinates
// of the simple root alpha_{j+1} in the fundamental-weight basis.
IntMatrix cartan_matrix(const DynkinType& t);
IntMatrix cartan_matrix(const GroupSpec& g);  // block diagonal over the factors

Int weight_pairing(const WeightVector& chi, std::size_t coroot_node);

// Root relations: sum_i C_ij q_i == 0 (mod 1) for every simple root.
bool satisfies_root_relations(const GroupSpec& g, const CenterElement& z);

CenterElement zero_center(const GroupSpec& g);
CenterElement center_add(const CenterElement& x, const CenterElement& y);
CenterElement center_neg(const CenterElement& x);

// Full enumeration of Z(G) for a semisimple group (NotSemisimple on tori).
std::vector<CenterElement> center_elements(const GroupSpec& g);
std::vector<CenterElement> center_elements(const DynkinType& t);

// Involutive permutation of the global node indices mapping each factor onto
// a factor of the same type, diagram automorphism on preserved factors.
struct NodeInvolution {
  std::vector<std::size_t> perm;

  bool operator==(const NodeInvolution& o) const { return perm == o.perm; }
  bool operator<(const NodeInvolution& o) const { return perm < o.perm; }
  bool is_identity() const;
};

NodeInvolution identity_involution(const GroupSpec& g);
void validate_node_involution(const GroupSpec& g, const NodeInvolution& p);

// All diagram automorphisms of a single simple type, as local node
// permutations (identity first).
std::vector<std::vector<std::size_t>> diagram_automorphisms(const DynkinType& t);

// All involutive diagram automorphisms of Dyn(G) (identity included, factor
// swaps between equal types included), partitioned into conjugacy classes
// under the full automorphism group of the diagram.
std::vector<std::vector<NodeInvolution>> diagram_involutions(const GroupSpec& g);

}  // namespace horo
