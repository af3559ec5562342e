#pragma once

// Brute-force reference implementations used to cross-check the library.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crvar/congruence.hpp"
#include "crvar/table.hpp"
#include "crvar/word.hpp"

namespace oracle {

using crvar::Element;
using crvar::EquivalenceRelation;
using crvar::UnaryCayleyTable;

/// Every equivalence relation on {0..n-1} (restricted growth strings).
std::vector<EquivalenceRelation> all_partitions(std::size_t n);

/// Every congruence of `s`, by filtering all partitions.
std::vector<EquivalenceRelation> all_congruences(UnaryCayleyTable const& s);

/// Largest congruence contained in `theta`, as the union of all
/// congruences below it (the union of compatible relations below theta is
/// again one, so the maximum exists).
EquivalenceRelation brute_largest_within(UnaryCayleyTable const& s, EquivalenceRelation const& theta);

/// Inductive membership: a letter, a concatenation of two members, or
/// "(" member ")^-1".  Interval dynamic programming.
bool grammar_member(crvar::FlatWord const& w);

/// All words of exactly `len` symbols over letters {x, y}, "(" and ")^-1".
std::vector<crvar::FlatWord> all_words(std::size_t len);

/// Every associative unary table of order n (n <= 3) satisfying the
/// completely regular axioms.
std::vector<UnaryCayleyTable> all_cr_tables(std::size_t n);

/// Every band (idempotent semigroup) of order n with inverse = identity,
/// as labelled tables (not up to isomorphism).  Practical for n <= 4.
std::vector<UnaryCayleyTable> all_bands(std::size_t n);

/// Random term with at most `max_depth` nesting levels over the given
/// letters.
crvar::Term random_term(std::mt19937_64& rng, std::size_t max_depth, std::vector<std::string> const& letters);

/// Elementwise string of a word over single-character letters evaluated
/// left to right in `s` under `values[letter - 'a']`.
Element eval_letters(UnaryCayleyTable const& s, std::string const& w, std::vector<Element> const& values);

}  // namespace oracle
