#pragma once

#include <iosfwd>

#include <json.hpp>

#include "tca/growth.hpp"
#include "tca/group.hpp"
#include "tca/invariants.hpp"
#include "tca/schur.hpp"

namespace tca {

using json = nlohmann::ordered_json;

/// Big integers render as JSON numbers when they fit in int64,
/// otherwise as decimal strings.
json json_int(const Int& v);
json json_rat(const Rat& v);

json to_json(const Partition& p);                  // [3,1], [] for empty
json to_json(const SchurExpansion& x);             // {"3,1": c, ...}
json to_json(const SnCharacter& chi);
json to_json(const CharacterTable& table);
json to_json(const InvariantSpace& space);
json to_json(const GrowthTable& table);
json to_json(const SlopeEstimate& est);

SchurExpansion schur_expansion_from_json(const json& j);

/// Group file schema:
/// {"field": {"kind":"rational"} | {"kind":"prime","p":2},
///  "size": m, "generators": [[[row],...], ...]}
/// with entries as integers or exact fraction strings "a/b".
GroupInput group_input_from_json(const json& j);
GroupInput load_group_file(const std::string& path);

void write_growth_csv(std::ostream& out, const GrowthTable& table);
GrowthTable read_growth_table(std::istream& in);  // CSV (N,f) or JSON

}  // namespace tca
