#pragma once

#include "surfcalc/divisor_class.hpp"
#include "surfcalc/rational.hpp"

#include <optional>
#include <vector>

namespace surfcalc::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Symmetric congruence diagonalization over Q.
///
/// Finds an invertible P such that Pᵀ G P is diagonal. The columns of P are
/// returned as `basis`; they are pairwise G-orthogonal and basis[i]ᵀ G basis[i]
/// equals diagonal[i]. By Sylvester's law the sign counts of `diagonal` are
/// the inertia of G.
struct Diagonalization {
  std::vector<Rational> diagonal;
  std::vector<DivisorClass> basis;

  int positives() const;
  int negatives() const;
  int zeros() const;
};

Diagonalization diagonalize_symmetric(const Matrix& gram);

bool is_negative_definite(const Matrix& gram);

// vᵀ G w
Rational bilinear(const Matrix& gram, const DivisorClass& v, const DivisorClass& w);

// Unique solution of A x = b, or nullopt when A is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

}  // namespace surfcalc::linalg
