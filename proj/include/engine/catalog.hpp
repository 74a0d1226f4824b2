// Named group constructions and bundled character-degree data. Degrees are
// always read from the data directory, never computed.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engine/group.hpp"

namespace engine {

// Recognized names: S<n>, A<n> (n <= 16), C<n>, D<n> (dihedral of order n),
// V4, Q8, M11, GL(n,q), SL(n,q) for prime q. Throws EngineError otherwise.
PermutationGroup group_by_name(const std::string& name);

std::vector<std::string> catalog_names();

// Directory holding bundled data files; ENGINE_DATA_DIR overrides the
// default "data", and set_data_dir overrides both.
std::string data_dir();
void set_data_dir(const std::string& dir);

// Sorted irreducible character degrees from character_degrees.txt.
std::optional<std::vector<long long>> character_degrees(const std::string& name);

// Count of irreducible degrees d with v_p(d) = v_p(order); requires degree
// data for the named group.
std::optional<long long> full_defect_free_count(const std::string& name,
                                                long long p);

// Attempts to match g against a catalog entry with degree data by order,
// element-order profile, class count, and abelianness. Returns the name
// only when exactly one entry matches.
std::optional<std::string> identify_catalog_group(const PermutationGroup& g);

}  // namespace engine
