#include "arrzeta/linalg.hpp"

#include <algorithm>

namespace arrzeta {

std::vector<int> rref(std::vector<std::vector<Rat>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  size_t r = 0;
  for (int col = 0; col < ncols && r < rows.size(); ++col) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rat inv = Rat(1) / rows[r][col];
    for (int j = col; j < ncols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (int j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank_of(std::vector<std::vector<Rat>> rows) {
  return static_cast<int>(rref(rows).size());
}

bool in_rowspace(const std::vector<std::vector<Rat>>& rref_rows,
                 const std::vector<int>& pivots, std::vector<Rat> v) {
  for (size_t r = 0; r < rref_rows.size(); ++r) {
    Rat f = v[pivots[r]];
    if (f == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rref_rows[r][j];
  }
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::vector<std::vector<Rat>> kernel_basis(
    const std::vector<std::vector<Rat>>& rref_rows,
    const std::vector<int>& pivots, int ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < rref_rows.size(); ++r)
      v[pivots[r]] = -rref_rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

long inv_mod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw InvariantError("non-invertible element mod p");
  return ((t % p) + p) % p;
}

}  // namespace

std::vector<int> rref_mod_p(std::vector<std::vector<long>>& rows, long p) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  size_t r = 0;
  for (int col = 0; col < ncols && r < rows.size(); ++col) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    long inv = inv_mod(((rows[r][col] % p) + p) % p, p);
    for (int j = col; j < ncols; ++j)
      rows[r][j] = (((rows[r][j] % p) + p) % p) * inv % p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      long f = ((rows[i][col] % p) + p) % p;
      if (f == 0) continue;
      for (int j = col; j < ncols; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank_mod_p(std::vector<std::vector<long>> rows, long p) {
  return static_cast<int>(rref_mod_p(rows, p).size());
}

bool in_rowspace_mod_p(const std::vector<std::vector<long>>& rref_rows,
                       const std::vector<int>& pivots, std::vector<long> v,
                       long p) {
  for (long& x : v) x = ((x % p) + p) % p;
  for (size_t r = 0; r < rref_rows.size(); ++r) {
    long f = v[pivots[r]];
    if (f == 0) continue;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = ((v[j] - f * rref_rows[r][j]) % p + p) % p;
  }
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

}  // namespace arrzeta
