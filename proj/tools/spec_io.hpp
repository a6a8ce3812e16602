#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "boroczky/corona.hpp"
#include "boroczky/pools.hpp"
#include "boroczky/symmetry.hpp"
#include "boroczky/tiling.hpp"

namespace boroczky::io {

using Json = nlohmann::ordered_json;

/// {"dim": d, "coords": [{"pre": [...], "period": [...]}, ...]} or
/// {"dim": d, "word": [[...], ...]}. ParseError for malformed documents,
/// ValidationError for well-formed ones with bad values.
SequenceSpec parse_spec(const std::string& text);

/// Canonical form: coordinates after canonicalization, fixed key order.
Json spec_json(const SequenceSpec& spec);
std::uint64_t spec_hash(const SequenceSpec& spec);
std::string hex(std::uint64_t value);

Json to_json(const Dyadic& value);
Json to_json(const BigInt& value);
Json to_json(const TileAddress& t);
TileAddress tile_from_json(const Json& j);

Json to_json(const PoolReport& report);
Json to_json(const SymmetryReport& report);
Json to_json(const TileComplex& window);
Json to_json(const CensusWindow& window);
Json to_json(const CensusReport& report);
CensusReport census_from_json(const Json& j);
Json to_json(const LocalTheoremVerdict& verdict);

/// "E^m (+) octant^k", trivial factors omitted ("E^2", "octant^1").
std::string support_signature(const PoolReport& report);

}  // namespace boroczky::io
