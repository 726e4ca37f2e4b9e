#include "horo/picard1.hpp"

#include "horo/errors.hpp"

namespace horo {

std::string Picard1Triple::name() const {
  return "(" + dynkin.name() + ", w" + std::to_string(y_node + 1) + ", w" +
         std::to_string(z_node + 1) + ")";
}

std::vector<Picard1Triple> triples(int max_rank) {
  if (max_rank < 2) throw InvalidType("triples: max_rank must be >= 2");
  std::vector<Picard1Triple> out;
  for (int n = 3; n <= max_rank; ++n)
    out.push_back({make_type('B', n), static_cast<std::size_t>(n - 2),
                   static_cast<std::size_t>(n - 1)});
  if (max_rank >= 3) out.push_back({make_type('B', 3), 0, 2});
  for (int n = 2; n <= max_rank; ++n)
    for (int m = 2; m <= n; ++m)
      out.push_back({make_type('C', n), static_cast<std::size_t>(m - 1),
                     static_cast<std::size_t>(m - 2)});
  if (max_rank >= 4) out.push_back({make_type('F', 4), 1, 2});
  out.push_back({make_type('G', 2), 0, 1});
  return out;
}

HorosphericalDatum datum_of_triple(const Picard1Triple& t) {
  GroupSpec g = semisimple_group({t.dynkin});
  const std::size_t n = g.total_rank();
  if (t.y_node >= n || t.z_node >= n || t.y_node == t.z_node)
    throw IndexError("datum_of_triple: bad weight nodes");
  HorosphericalDatum d;
  d.group = g;
  for (std::size_t k = 0; k < n; ++k)
    if (k != t.y_node && k != t.z_node) d.I.insert(k);
  IntMatrix basis(1, n);
  basis.at(0, t.y_node) = 1;
  basis.at(0, t.z_node) = -1;
  d.M = Sublattice(n, basis);
  validate_datum(d);
  return d;
}

std::vector<Picard1Result> classify_triple(const Picard1Triple& t) {
  HorosphericalDatum d = datum_of_triple(t);
  std::vector<Picard1Result> out;
  for (const auto& rec : catalog(t.dynkin)) {
    RealStructureSpec s = make_structure(d.group, {0}, {{0, rec.label}});
    ExistenceReport rep = existence_report(s, d);
    if (rep.exists) out.push_back({rec.label, *rep.num_classes});
  }
  return out;
}

}  // namespace horo
