#pragma once

#include <map>
#include <set>
#include <vector>

#include "horo/horospherical.hpp"

namespace horo {

// Colored cone in N = Hom(M, Z): primitive ray generators (coordinates dual
// to the chosen basis of M) plus a subset of colors in S \ I.
struct ColoredCone {
  std::vector<std::vector<Int>> rays;
  std::set<std::size_t> colors;
};

struct ColoredFan {
  std::vector<ColoredCone> cones;
};

// Image of a color: node alpha in S \ I maps to (<b_k, alpha^vee>)_k over the
// basis rows b_k of M.  NotAColor for nodes of I.
std::vector<Int> color_point(const HorosphericalDatum& d, std::size_t node);
std::map<std::size_t, std::vector<Int>> color_points(const HorosphericalDatum& d);

// The Gamma-action on N in the chosen basis: transpose of the restricted
// involution on M.  NotStable when the datum is not stable.
IntMatrix gamma_on_N(const RealStructureSpec& sigma, const HorosphericalDatum& d);

// v in cone(rays)?  Exact, via Caratheodory over the ray subsets.
bool in_cone(const std::vector<Int>& v, const std::vector<std::vector<Int>>& rays);

void validate_fan(const HorosphericalDatum& d, const ColoredFan& f);

bool fan_is_stable(const RealStructureSpec& sigma, const HorosphericalDatum& d,
                   const ColoredFan& f);

struct ExtendabilityReport {
  ExistenceReport orbit;
  bool fan_stable = false;
  bool extendable = false;
  // when extendable, the real form of the whole variety is a real variety
};

ExtendabilityReport extendability_report(const RealStructureSpec& sigma,
                                         const HorosphericalDatum& d, const ColoredFan& f);

}  // namespace horo
