#pragma once

#include <vector>

#include "arrzeta/common.hpp"

namespace arrzeta {

// In-place reduced row echelon form over Q; zero rows removed.
// Returns the pivot column of each surviving row.
std::vector<int> rref(std::vector<std::vector<Rat>>& rows);

int rank_of(std::vector<std::vector<Rat>> rows);

// Whether v lies in the row space of an RREF matrix.
bool in_rowspace(const std::vector<std::vector<Rat>>& rref_rows,
                 const std::vector<int>& pivots, std::vector<Rat> v);

// Basis of the solution space of rref_rows * x = 0.
std::vector<std::vector<Rat>> kernel_basis(
    const std::vector<std::vector<Rat>>& rref_rows,
    const std::vector<int>& pivots, int ncols);

// Mod-p variants, entries in [0, p).
std::vector<int> rref_mod_p(std::vector<std::vector<long>>& rows, long p);
int rank_mod_p(std::vector<std::vector<long>> rows, long p);
bool in_rowspace_mod_p(const std::vector<std::vector<long>>& rref_rows,
                       const std::vector<int>& pivots, std::vector<long> v,
                       long p);

}  // namespace arrzeta
