#pragma once

#include <cstddef>
#include <vector>

#include "crvar/table.hpp"

namespace crvar::tables {

UnaryCayleyTable trivial();
UnaryCayleyTable left_zero(std::size_t n);
UnaryCayleyTable right_zero(std::size_t n);
/// The chain 0 < 1 < ... < n-1 under minimum.
UnaryCayleyTable chain_semilattice(std::size_t n);
UnaryCayleyTable cyclic_group(std::size_t n);
UnaryCayleyTable symmetric_group3();
/// (i, j)(k, l) = (i, l) on m x k elements.
UnaryCayleyTable rectangular_band(std::size_t m, std::size_t k);
/// Completely simple semigroup M[Z2; 2, 2; P] with sandwich matrix
/// P = [[e, e], [e, a]]; its idempotents do not form a subsemigroup.
UnaryCayleyTable rees_matrix_z2();

UnaryCayleyTable adjoin_zero(UnaryCayleyTable const& s);
UnaryCayleyTable adjoin_identity(UnaryCayleyTable const& s);

/// Completely regular tables of orders 2 to 8 used as witnesses: zero
/// semigroups, semilattices, groups, rectangular bands, free bands, their
/// duals, products and adjoined zeros and identities.
std::vector<UnaryCayleyTable> curated_battery();

}  // namespace crvar::tables
