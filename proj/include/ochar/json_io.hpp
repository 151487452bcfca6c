#pragma once

#include <json.hpp>
#include <string>

#include "ochar/block_decomp.hpp"
#include "ochar/character.hpp"
#include "ochar/free_flag.hpp"
#include "ochar/region.hpp"

namespace ochar {

using ojson = nlohmann::ordered_json;

ojson weight_json(const Weight& w);
Weight weight_from_json(const RootSystem& rs, const ojson& j);

/// {"ceilings": [...], "region": {"floor": .., "ceilings": [...]},
///  "entries": [[[..weight..], mult], ...]} with entries sorted
/// lexicographically by weight coordinates.
ojson character_dump(const Character& c, const Region& region);

/// {"block": "W·0", "entries": [["st", 1], ...]} with orbit names for
/// weights in the dot orbit of 0 and raw coordinates otherwise.
ojson decomposition_json(const RootSystem& rs, const DecompositionResult& d);

/// {"parabolic": "none"|"alpha"|"beta", "blocks": [[[w],[w']], ...]}
ojson flag_json(const RootSystem& rs, const FreePresentation& fp);

/// "L(st)+L(ts)+2·L(sts)", entries in table order, "0" when empty.
std::string decomposition_display(const RootSystem& rs, const DecompositionResult& d);

/// "Δ(e)+Δ(t)+Δ(ts)" or "Δ^{p_β}(s)"; with nabla=true the flag prints with ∇.
std::string flag_display(const RootSystem& rs, const FreePresentation& fp, bool nabla = false);

}  // namespace ochar
