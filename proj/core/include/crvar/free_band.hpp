#pragma once

#include <cstddef>
#include <string>

#include "crvar/table.hpp"

namespace crvar {

/// Canonical representative of the free-band class of a word over 'a'..'z'.
/// Two words are equal in every band iff their canonical forms agree.
std::string band_normal_form(std::string const& word);
bool band_equal(std::string const& u, std::string const& v);

/// Free band on g generators, 1 <= g <= 3, labelled by shortest words over
/// 'a', 'b', 'c'.  The generators are elements 0, ..., g-1.  Throws
/// UnsupportedSize otherwise.
UnaryCayleyTable free_band(std::size_t g);

/// F together with a right-zero copy R of F^1, where for a in F and r_b in
/// R: a r_b = r_b and r_b a = r_{ba}.  Elements of F keep their indices;
/// r_b follows for b in F, then r_1.
UnaryCayleyTable right_zero_extension(UnaryCayleyTable const& f);

}  // namespace crvar
