#ifndef SOFTCLUST_SPACE_FILE_HPP
#define SOFTCLUST_SPACE_FILE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "softclust/cluster.hpp"
#include "softclust/core.hpp"
#include "softclust/ideal.hpp"
#include "softclust/spaces.hpp"
#include "softclust/topology.hpp"

namespace softclust {

enum class TopologyStanza { none, opens, subbase };
enum class IdealStanza { none, generators, top };

/// A parsed space file: carrier, named sets, and the topology/ideal
/// stanzas with their validation verdicts. The raw families are kept so
/// that an invalid open family can still be sliced and reported.
struct SpaceBundle {
  CarrierPtr carrier;
  std::string description;
  std::map<std::string, CellMask> sets;  // user-named sets; Phi and X are built in

  TopologyStanza topology_stanza = TopologyStanza::none;
  std::vector<CellMask> topology_family;  // resolved members as listed
  std::optional<TopologyCheck> topology_check;
  std::optional<SoftTopology> topology;  // present when valid or generated

  IdealStanza ideal_stanza = IdealStanza::none;
  std::vector<CellMask> ideal_family;  // resolved generator list
  std::optional<IdealCheck> ideal_check;
  std::optional<SoftIdeal> ideal;
};

SpaceBundle parse_space_text(const std::string& json_text);
SpaceBundle parse_space_file(const std::string& path);

/// Canonical serialization: fixed key order, every fiber listed in carrier
/// order, topology emitted as an ascending literal `opens` list and the
/// ideal as its top; byte-stable across runs.
std::string serialize_space(const SpaceBundle& bundle);
std::string serialize_sample(const SpaceSample& sample);

/// True when every stanza present in the file validated.
bool bundle_all_valid(const SpaceBundle& bundle);

std::string render_validate_text(const SpaceBundle& bundle);
std::string render_validate_json(const SpaceBundle& bundle);

/// Resolves a set reference (a name, including Phi and X) to a mask.
CellMask resolve_set_name(const SpaceBundle& bundle, const std::string& name);

/// Requires both stanzas valid; throws InputError otherwise.
ClusterContext bundle_context(const SpaceBundle& bundle);

}  // namespace softclust

#endif
