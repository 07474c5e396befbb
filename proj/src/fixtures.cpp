#include "surfcalc/fixtures.hpp"

#include <cstdlib>

#ifndef SURFCALC_FIXTURE_DIR
#define SURFCALC_FIXTURE_DIR "fixtures"
#endif

namespace surfcalc {

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog{
      {"p2.json", "projective plane; lines and a quartic with a triple point (Seshadri and Reider checks)"},
      {"p1xp1.json", "quadric P1xP1; the fibre F2 obstructs freeness of K+(1,3)"},
      {"bl_p2.json", "plane blown up at one point; Zariski decomposition of H+E"},
      {"quadric_cone.json", "Hirzebruch F2 resolving the quadric cone; Mumford pullback of rulings"},
      {"abelian_1_5.json", "abelian surface with a (1,5) polarization, L^2 = 10"},
      {"abelian_elliptic.json", "abelian surface with an elliptic curve E, E.L = 2, L^2 = 10"},
      {"k3_elliptic.json", "rank-2 K3 lattice with an elliptic class e, e.L = 1"},
      {"k3_genus4.json", "rank-1 K3 lattice of degree 6"},
      {"miranda_4_3_2.json", "pencil of plane quartics blown up, fibre with a triple point, L = 2D + S"},
  };
  return catalog;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("SURFCALC_FIXTURE_DIR"); env && *env) return env;
  return SURFCALC_FIXTURE_DIR;
}

}  // namespace surfcalc
