#pragma once

#include "surfcalc/lattice.hpp"
#include "surfcalc/surface_io.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace surfcalc::testing {

inline std::string fixture_path(const std::string& name) { return std::string(SURFCALC_TEST_FIXTURES) + "/" + name; }
inline std::string data_path(const std::string& name) { return std::string(SURFCALC_TEST_DATA) + "/" + name; }
inline SurfaceModel fixture(const std::string& name) { return read_surface(fixture_path(name)); }

inline DivisorClass cls(std::initializer_list<long long> v) {
  std::vector<long long> values(v);
  return DivisorClass::from_integers(values);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"p2.json",          "p1xp1.json",           "bl_p2.json",
                                              "quadric_cone.json", "abelian_1_5.json",     "abelian_elliptic.json",
                                              "k3_elliptic.json",  "k3_genus4.json",       "miranda_4_3_2.json"};
  return names;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline DivisorClass random_class(std::mt19937_64& rng, std::size_t rank, std::int64_t lo, std::int64_t hi) {
  DivisorClass d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = uniform(rng, lo, hi);
  return d;
}

// Plane blown up at n <= 3 points: basis H, E1..En.
inline SurfaceModel blown_up_plane(std::size_t n) {
  const std::size_t rank = n + 1;
  std::vector<std::vector<std::int64_t>> gram(rank, std::vector<std::int64_t>(rank, 0));
  gram[0][0] = 1;
  for (std::size_t i = 1; i < rank; ++i) gram[i][i] = -1;
  SurfaceModel s;
  s.name = "bl" + std::to_string(n);
  s.lattice = IntersectionLattice(gram);
  s.canonical = DivisorClass(rank);
  s.canonical[0] = -3;
  for (std::size_t i = 1; i < rank; ++i) s.canonical[i] = 1;
  s.chi_O = 1;
  return s;
}

// Candidate curve classes on the plane blown up at n points.
inline std::vector<DivisorClass> plane_curve_candidates(std::size_t n) {
  const std::size_t rank = n + 1;
  std::vector<DivisorClass> out;
  auto make = [&](long long h, std::vector<std::size_t> minus) {
    DivisorClass d(rank);
    d[0] = h;
    for (auto i : minus) d[i] = -1;
    out.push_back(d);
  };
  make(1, {});
  for (std::size_t i = 1; i <= n; ++i) {
    make(0, {});
    out.back()[i] = 1;
    make(1, {i});
    for (std::size_t j = i + 1; j <= n; ++j) make(1, {i, j});
  }
  if (n == 3) {
    make(1, {1, 2, 3});
    make(2, {1, 2, 3});
  }
  return out;
}

}  // namespace surfcalc::testing
