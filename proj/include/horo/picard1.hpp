#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "horo/horospherical.hpp"

namespace horo {

// One of the five families of non-homogeneous smooth projective horospherical
// varieties of Picard rank 1, given by a type and the two fundamental weights
// (0-based node indices) attached to its closed orbits.
struct Picard1Triple {
  DynkinType dynkin;
  std::size_t y_node = 0;
  std::size_t z_node = 0;

  std::string name() const;  // e.g. "(B3, w1, w3)" with Bourbaki 1-based weights
};

// All triples of rank <= max_rank, in family order:
//   (1) (B_n, w_{n-1}, w_n), n >= 3
//   (2) (B_3, w_1, w_3)
//   (3) (C_n, w_m, w_{m-1}), n >= 2, 2 <= m <= n
//   (4) (F_4, w_2, w_3)
//   (5) (G_2, w_1, w_2)
std::vector<Picard1Triple> triples(int max_rank);

// Datum of the open orbit: I = S \ {y, z}, M = Z<w_Y - w_Z>.
HorosphericalDatum datum_of_triple(const Picard1Triple& t);

struct Picard1Result {
  std::string label;
  std::uint64_t num_classes = 0;
};

// Real-form labels of the triple's group admitting an equivariant real
// structure on the variety, with the class count of each.
std::vector<Picard1Result> classify_triple(const Picard1Triple& t);

}  // namespace horo
