#pragma once

#include "surfcalc/lattice.hpp"
#include "surfcalc/linalg.hpp"
#include "surfcalc/surface_io.hpp"

#include <map>
#include <vector>

namespace surfcalc::testing {

struct Oracle {
  DivisorClass p;
  std::map<std::size_t, Rational> n;
};

// Every subset S with negative-definite Gram, N ≥ 0, P nef on the pool, P·C = 0 on S.
inline std::vector<Oracle> zariski_subset_oracle(const SurfaceModel& s, const DivisorClass& d) {
  std::vector<Oracle> out;
  const std::size_t n = s.curves.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    Oracle o{d, {}};
    if (!idx.empty()) {
      linalg::Matrix g(idx.size(), std::vector<Rational>(idx.size()));
      std::vector<Rational> rhs(idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) g[a][b] = s.lattice.pair(s.curves[idx[a]].cls, s.curves[idx[b]].cls);
        rhs[a] = s.lattice.pair(d, s.curves[idx[a]].cls);
      }
      if (!linalg::is_negative_definite(g)) continue;
      const auto x = linalg::solve(g, rhs);
      if (!x) continue;
      bool ok = true;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        if ((*x)[a] < 0) ok = false;
        o.p -= (*x)[a] * s.curves[idx[a]].cls;
        if ((*x)[a] != 0) o.n[idx[a]] = (*x)[a];
      }
      if (!ok) continue;
    }
    if (!is_nef_on_table(s, o.p).nef) continue;
    out.push_back(o);
  }
  return out;
}

}  // namespace surfcalc::testing
