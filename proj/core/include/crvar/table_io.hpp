#pragma once

#include <string>

#include "crvar/table.hpp"

namespace crvar {

/// JSON object {"order": n, "op": [[...], ...], "inv": [...], "name": ...,
/// "labels": [...]} with 0-based indices; "name" and "labels" are optional.
std::string table_to_json(UnaryCayleyTable const& s);

enum class TableCheck { none, associative, completely_regular };

/// Parses and validates a table.  Throws FormatError on malformed input,
/// naming the first non-associative triple or the first element breaking
/// the completely regular axioms when those checks are requested.
UnaryCayleyTable table_from_json(std::string const& text, TableCheck check = TableCheck::completely_regular);

UnaryCayleyTable load_table(std::string const& path, TableCheck check = TableCheck::completely_regular);
void save_table(UnaryCayleyTable const& s, std::string const& path);

}  // namespace crvar
