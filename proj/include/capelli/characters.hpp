#pragma once

// Irreducible characters of the symmetric group S_h.
//
// Two conventions coexist. character_std is the usual one, where the row shape
// (h) labels the trivial character. The element constructions of this library
// label representations with rows and columns swapped, so (1^h) is trivial and
// (h) is the sign; character_swapped implements that convention.

#include <cstdint>

#include "capelli/combinatorics.hpp"

namespace capelli {

/// χ^λ on the class of cycle type ct, standard convention, by Murnaghan-Nakayama.
/// Memoized; safe under concurrent callers. Throws std::invalid_argument on weight mismatch.
long long character_std(const Partition& shape, const Partition& cycle_type);

/// Swapped-convention value: character_std(conjugate(λ), cycle_type(σ)).
long long character_swapped(const Partition& shape, const Permutation& sigma);

/// h!/H(λ).
std::uint64_t dim_irrep(const Partition& shape);

}  // namespace capelli
