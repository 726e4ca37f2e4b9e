#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horo/rootsys.hpp"

namespace horo {

// One real form of a simply-connected simple group: canonical label, inner
// class (the *-action as a local diagram involution), Tits-class
// representative in Z(G), and the signs of the Tits class on the fixed
// minuscule fundamental weights it was solved from.
struct RealFormRecord {
  DynkinType type;
  std::string label;
  std::vector<std::size_t> inner_class;          // local node permutation
  QVec tits_q;                                   // length = rank, entries mod 1
  std::vector<std::pair<std::size_t, int>> minuscule_signs;  // (local node, +-1)
  bool is_quasi_split = false;
  bool is_split = false;
  bool is_compact = false;
};

// Complete list of inequivalent real forms of the given simple type, derived
// from the embedded tables; cached per type.
const std::vector<RealFormRecord>& catalog(const DynkinType& t);

// Find a record by label; accepts aliases such as reversed signatures or
// SL(1,H).  UnknownLabel when the label does not name a form of this type.
const RealFormRecord& catalog_record(const DynkinType& t, const std::string& label);

// Version line of the embedded table data and the raw text (for dumps).
std::string tables_version();
const std::string& tables_text();

// A real group structure up to equivalence: an involutive type-preserving
// permutation of the simple factors plus a catalog label on each fixed
// factor; swapped pairs carry no label.  A standalone torus instead carries
// an involution of its cocharacter lattice.
struct RealStructureSpec {
  GroupSpec group;
  std::vector<std::size_t> factor_perm;  // involution on factor indices
  std::map<std::size_t, std::string> forms;
  IntMatrix torus_matrix;  // torus case only

  bool is_torus() const { return group.is_torus(); }
  std::string name() const;
};

RealStructureSpec split_structure(const GroupSpec& g);
RealStructureSpec torus_structure(const GroupSpec& g, IntMatrix cochar_involution);
RealStructureSpec make_structure(const GroupSpec& g, std::vector<std::size_t> factor_perm,
                                 std::map<std::size_t, std::string> forms);

void validate_structure(const RealStructureSpec& s);
bool structure_is_quasi_split(const RealStructureSpec& s);
bool structure_is_split(const RealStructureSpec& s);

// One representative per equivalence class of quasi-split real group
// structures (bijective with diagram-involution conjugacy classes).
std::vector<RealStructureSpec> quasi_split_classes(const GroupSpec& g);

// All equivalence classes of real group structures on the product.
std::vector<RealStructureSpec> enumerate_real_structures(const GroupSpec& g);

// Node permutation of the Gamma-action on X defined by the structure's
// quasi-split inner class (fixed factors: inner class; swapped pairs: the
// identity map between the two blocks).
std::vector<std::size_t> gamma_node_perm(const RealStructureSpec& s);

// The same action as a matrix on fundamental-weight coordinates (row-vector
// convention: chi -> chi * A).  For a torus spec: the action on characters,
// i.e. the transpose of the cocharacter involution.
IntMatrix gamma_action_matrix(const RealStructureSpec& s);

// Concatenated Tits-class representative; zero on swapped pairs.
CenterElement tits_representative(const RealStructureSpec& s);

// Sign of sum_i chi_i q_i for a Gamma-fixed weight: +1 for 0 mod 1, -1 for
// 1/2 mod 1.  NotFixed if chi is not fixed by the Gamma-action.
int tits_value_on_weight(const RealStructureSpec& s, const WeightVector& chi);

// Normal form (n0, n1, n2) of a real torus structure given the involution on
// the cocharacter lattice.
GammaLatticeInvariants torus_structure_normal_form(const IntMatrix& a);

}  // namespace horo
