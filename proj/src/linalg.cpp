#include "surfcalc/linalg.hpp"

#include "surfcalc/errors.hpp"

#include <utility>

namespace surfcalc::linalg {

int Diagonalization::positives() const {
  int n = 0;
  for (const auto& d : diagonal) n += d > 0;
  return n;
}

int Diagonalization::negatives() const {
  int n = 0;
  for (const auto& d : diagonal) n += d < 0;
  return n;
}

int Diagonalization::zeros() const {
  int n = 0;
  for (const auto& d : diagonal) n += d == 0;
  return n;
}

namespace {

void swap_index(Matrix& a, std::vector<DivisorClass>& cols, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
  std::swap(cols[i], cols[j]);
}

// Replace basis vector i by (e_i + scale·e_j), updating the form congruently.
void add_index(Matrix& a, std::vector<DivisorClass>& cols, std::size_t i, std::size_t j,
               const Rational& scale) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) a[i][c] += scale * a[j][c];
  for (std::size_t r = 0; r < n; ++r) a[r][i] += scale * a[r][j];
  cols[i] += scale * cols[j];
}

}  // namespace

Diagonalization diagonalize_symmetric(const Matrix& gram) {
  const std::size_t n = gram.size();
  Matrix a = gram;
  std::vector<DivisorClass> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(DivisorClass::basis(n, i));

  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = n;
      for (std::size_t j = k + 1; j < n && pivot == n; ++j)
        if (a[j][j] != 0) pivot = j;
      if (pivot != n) {
        swap_index(a, cols, k, pivot);
      } else {
        // Zero diagonal on the trailing block: use (e_i + e_j)² = 2 a_ij.
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (a[i][j] != 0) {
              add_index(a, cols, i, j, Rational(1));
              swap_index(a, cols, k, i);
              found = true;
            }
        if (!found) break;  // trailing block vanishes identically
      }
    }
    const Rational pivot = a[k][k];
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a[j][k] == 0) continue;
      add_index(a, cols, j, k, -a[j][k] / pivot);
    }
  }

  Diagonalization out;
  out.basis = std::move(cols);
  out.diagonal.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(a[i][i]);
  return out;
}

bool is_negative_definite(const Matrix& gram) {
  if (gram.empty()) return true;
  const auto d = diagonalize_symmetric(gram);
  return d.negatives() == static_cast<int>(gram.size());
}

Rational bilinear(const Matrix& gram, const DivisorClass& v, const DivisorClass& w) {
  if (v.rank() != gram.size() || w.rank() != gram.size())
    throw InputError("class dimension does not match the form");
  Rational total = 0;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < gram.size(); ++j) row += gram[i][j] * w[j];
    total += v[i] * row;
  }
  return total;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InputError("solve: right-hand side has wrong length");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[k], a[pivot]);
    std::swap(b[k], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a[r][k] == 0) continue;
      const Rational f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      b[r] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace surfcalc::linalg
