#pragma once

#include <json.hpp>

#include "balcube/construction.hpp"
#include "balcube/family.hpp"
#include "balcube/oracle.hpp"
#include "balcube/report.hpp"

namespace balcube {

// ordered_json keeps insertion order, which pins the output bytes
using Json = nlohmann::ordered_json;

// members as a JSON array: sorted element lists, or hex words
Json family_members_json(const Family& f, bool hex = false);

// {"n": ..., "sets": [[...], ...]} or {"n": ..., "hex": ["0x..", ...]}
Json family_to_json(const Family& f, bool hex = false);

// accepts either of the two family forms
Family family_from_json(const Json& j);

// {"n": ..., "case": ..., "A": [...], "B": [...], "size": ...}
Json pair_to_json(const ExtremalPair& pair, bool hex = false);

Json report_to_json(const VerificationReport& report);

Json search_to_json(const SearchResult& result, bool include_witness = false);

}  // namespace balcube
