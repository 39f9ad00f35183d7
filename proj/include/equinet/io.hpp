#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "equinet/invariant.hpp"
#include "equinet/orbit.hpp"

namespace equinet {

using json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string config_hash(const json& config);

// Writes to path.tmp, then renames over path.
void write_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Preset name (with or without "preset:") or a group file.
GroupPreset load_group(const std::string& source);
GroupPreset parse_group(const json& j);
json group_to_json(int degree, const std::vector<GroupElement>& generators);

// Preset name or a graph file; "symmetry" may be a preset, a path relative
// to the graph file, or an inline group object.
NetworkSpec load_network(const std::string& source);
NetworkSpec parse_network(const json& j, const std::string& base_dir = ".");
Nonlinearity parse_nonlinearity(const json& spec);
json nonlinearity_to_json(const Nonlinearity& nl);

json element_to_json(const BurnsideElement& a);
json lattice_to_json(const SubgroupLattice& lattice);
json burnside_table_json(const BurnsideRing& ring);
json basic_degrees_json(const NetworkModel& model);

// Rows: irreducibles present; columns: character_columns of the group.
std::string character_table_csv(const IsotypicalDecomposition& decomp);

std::string spectrum_csv(const NetworkModel& model);
json spectrum_json(const NetworkModel& model);

json report_json(const InvariantReport& rep);
std::string reports_csv(const std::vector<InvariantReport>& reps);

json orbit_json(const FourierState& state, const NewtonResult& result, const SymmetryReport& sym,
                const AprioriReport& apriori);
std::string timeseries_csv(const FourierState& state, int samples = 512);

// Shortest round-trip decimal of a double.
std::string format_number(double x);

}  // namespace equinet
