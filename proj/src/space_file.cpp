#include "softclust/space_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace softclust {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> parse_label_list(const Json& node, const std::string& key) {
  if (!node.is_array()) throw InputError("'" + key + "' must be an array of labels");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw InputError("'" + key + "' entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

CellMask parse_literal(const CarrierPtr& carrier, const Json& node) {
  if (!node.is_object()) throw InputError("a soft set literal must be a fiber-map object");
  FiberMap fibers;
  for (const auto& [parameter, elements] : node.items()) {
    if (!elements.is_array())
      throw InputError("fiber of '" + parameter + "' must be an array of element labels");
    std::vector<std::string> labels;
    for (const auto& e : elements) {
      if (!e.is_string()) throw InputError("elements of fiber '" + parameter + "' must be strings");
      labels.push_back(e.get<std::string>());
    }
    fibers.emplace(parameter, std::move(labels));
  }
  return make_soft_set(carrier, fibers).bits();
}

CellMask resolve_reference(const CarrierPtr& carrier,
                           const std::map<std::string, CellMask>& sets, const Json& node) {
  if (node.is_string()) {
    const std::string name = node.get<std::string>();
    if (name == "Phi") return 0;
    if (name == "X") return carrier->full();
    auto it = sets.find(name);
    if (it == sets.end()) throw InputError("unknown set name: " + name);
    return it->second;
  }
  return parse_literal(carrier, node);
}

std::vector<CellMask> resolve_reference_list(const CarrierPtr& carrier,
                                             const std::map<std::string, CellMask>& sets,
                                             const Json& node, const std::string& key) {
  if (!node.is_array()) throw InputError("'" + key + "' must be an array");
  std::vector<CellMask> out;
  out.reserve(node.size());
  for (const auto& item : node) out.push_back(resolve_reference(carrier, sets, item));
  return out;
}

Json fiber_map_json(const CarrierPtr& carrier, CellMask bits) {
  Json out = Json::object();
  for (int p = 0; p < carrier->parameter_count(); ++p) {
    Json elements = Json::array();
    for (int e = 0; e < carrier->element_count(); ++e) {
      if ((bits >> carrier->cell_index(p, e)) & 1u) elements.push_back(carrier->universe()[e]);
    }
    out[carrier->parameters()[p]] = std::move(elements);
  }
  return out;
}

std::string axiom_name(int axiom) {
  switch (axiom) {
    case 1: return "null-and-absolute";
    case 2: return "intersection";
    default: return "union";
  }
}

std::string condition_name(int condition) {
  switch (condition) {
    case 1: return "union-closure";
    case 2: return "down-closure";
    default: return "non-empty";
  }
}

}  // namespace

SpaceBundle parse_space_text(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("space file parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("space file must be a JSON object");

  SpaceBundle bundle;
  if (!doc.contains("universe")) throw InputError("space file missing 'universe'");
  if (!doc.contains("parameters")) throw InputError("space file missing 'parameters'");
  bundle.carrier = Carrier::make(parse_label_list(doc["universe"], "universe"),
                                 parse_label_list(doc["parameters"], "parameters"));
  if (doc.contains("description")) {
    if (!doc["description"].is_string()) throw InputError("'description' must be a string");
    bundle.description = doc["description"].get<std::string>();
  }

  if (doc.contains("sets")) {
    const Json& sets = doc["sets"];
    if (!sets.is_object()) throw InputError("'sets' must be an object of name -> fiber map");
    for (const auto& [name, literal] : sets.items()) {
      if (name == "Phi" || name == "X")
        throw InputError("set name '" + name + "' is reserved");
      bundle.sets.emplace(name, parse_literal(bundle.carrier, literal));
    }
  }

  if (doc.contains("topology")) {
    const Json& topology = doc["topology"];
    if (!topology.is_object()) throw InputError("'topology' must be an object");
    bool has_opens = topology.contains("opens");
    bool has_subbase = topology.contains("subbase");
    if (has_opens == has_subbase)
      throw InputError("'topology' needs exactly one of 'opens' or 'subbase'");
    if (has_opens) {
      bundle.topology_stanza = TopologyStanza::opens;
      bundle.topology_family =
          resolve_reference_list(bundle.carrier, bundle.sets, topology["opens"], "opens");
      bundle.topology_check = check_topology_family(bundle.carrier, bundle.topology_family);
      if (bundle.topology_check->valid) {
        bundle.topology = SoftTopology::from_opens(bundle.carrier, bundle.topology_family);
      }
    } else {
      bundle.topology_stanza = TopologyStanza::subbase;
      bundle.topology_family =
          resolve_reference_list(bundle.carrier, bundle.sets, topology["subbase"], "subbase");
      bundle.topology = SoftTopology::generate_from_subbase(bundle.carrier, bundle.topology_family);
    }
  }

  if (doc.contains("ideal")) {
    const Json& ideal = doc["ideal"];
    if (!ideal.is_object()) throw InputError("'ideal' must be an object");
    bool has_generators = ideal.contains("generators");
    bool has_top = ideal.contains("top");
    if (has_generators == has_top)
      throw InputError("'ideal' needs exactly one of 'generators' or 'top'");
    if (has_generators) {
      bundle.ideal_stanza = IdealStanza::generators;
      bundle.ideal_family =
          resolve_reference_list(bundle.carrier, bundle.sets, ideal["generators"], "generators");
      // An empty generator list is simply the trivial ideal; the family
      // verdict is only meaningful for a listed family.
      if (!bundle.ideal_family.empty()) {
        bundle.ideal_check = check_ideal_family(bundle.carrier, bundle.ideal_family);
      }
      bundle.ideal = SoftIdeal::from_generators(bundle.carrier, bundle.ideal_family);
    } else {
      bundle.ideal_stanza = IdealStanza::top;
      bundle.ideal = SoftIdeal(bundle.carrier,
                               resolve_reference(bundle.carrier, bundle.sets, ideal["top"]));
    }
  }
  return bundle;
}

SpaceBundle parse_space_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open space file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_space_text(buffer.str());
}

std::string serialize_space(const SpaceBundle& bundle) {
  Json doc = Json::object();
  if (!bundle.description.empty()) doc["description"] = bundle.description;
  doc["universe"] = bundle.carrier->universe();
  doc["parameters"] = bundle.carrier->parameters();
  Json sets = Json::object();
  for (const auto& [name, bits] : bundle.sets) {
    sets[name] = fiber_map_json(bundle.carrier, bits);
  }
  doc["sets"] = std::move(sets);
  if (bundle.topology.has_value()) {
    Json opens = Json::array();
    for (CellMask m : bundle.topology->opens()) opens.push_back(fiber_map_json(bundle.carrier, m));
    doc["topology"] = Json{{"opens", std::move(opens)}};
  } else if (bundle.topology_stanza == TopologyStanza::opens) {
    std::vector<CellMask> family = bundle.topology_family;
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    Json opens = Json::array();
    for (CellMask m : family) opens.push_back(fiber_map_json(bundle.carrier, m));
    doc["topology"] = Json{{"opens", std::move(opens)}};
  }
  if (bundle.ideal.has_value()) {
    doc["ideal"] = Json{{"top", fiber_map_json(bundle.carrier, bundle.ideal->top())}};
  }
  return doc.dump(2) + "\n";
}

std::string serialize_sample(const SpaceSample& sample) {
  SpaceBundle bundle;
  bundle.carrier = sample.carrier;
  bundle.topology = sample.topology;
  bundle.topology_stanza = TopologyStanza::opens;
  bundle.ideal = sample.ideal;
  bundle.ideal_stanza = IdealStanza::top;
  Json doc = Json::parse(serialize_space(bundle));
  return doc.dump();  // single line for witness records
}

bool bundle_all_valid(const SpaceBundle& bundle) {
  if (bundle.topology_check.has_value() && !bundle.topology_check->valid) return false;
  if (bundle.ideal_check.has_value() && !bundle.ideal_check->valid) return false;
  return true;
}

CellMask resolve_set_name(const SpaceBundle& bundle, const std::string& name) {
  if (name == "Phi") return 0;
  if (name == "X") return bundle.carrier->full();
  auto it = bundle.sets.find(name);
  if (it == bundle.sets.end()) throw InputError("unknown set name: " + name);
  return it->second;
}

ClusterContext bundle_context(const SpaceBundle& bundle) {
  if (!bundle.topology.has_value())
    throw InputError(bundle.topology_stanza == TopologyStanza::none
                         ? "space file has no topology stanza"
                         : "space file topology is not a soft topology");
  if (!bundle.ideal.has_value()) throw InputError("space file has no ideal stanza");
  return ClusterContext(*bundle.topology, *bundle.ideal);
}

std::string render_validate_text(const SpaceBundle& bundle) {
  std::ostringstream out;
  const CarrierPtr& carrier = bundle.carrier;
  out << "carrier: parameters=" << carrier->parameter_count()
      << " universe=" << carrier->element_count() << " cells=" << carrier->cells() << "\n";

  switch (bundle.topology_stanza) {
    case TopologyStanza::none:
      out << "topology: none\n";
      break;
    case TopologyStanza::subbase:
      out << "topology: VALID (generated from subbase, " << bundle.topology->opens().size()
          << " opens)\n";
      break;
    case TopologyStanza::opens: {
      const TopologyCheck& check = *bundle.topology_check;
      if (check.valid) {
        out << "topology: VALID (" << bundle.topology->opens().size() << " opens)\n";
      } else {
        const TopologyViolation& v = *check.violation;
        out << "topology: INVALID axiom=" << axiom_name(v.axiom);
        if (v.axiom == 1) {
          out << " missing=" << mask_to_text(carrier, v.missing) << "\n";
        } else {
          out << " witness: " << mask_to_text(carrier, v.a) << (v.axiom == 2 ? " n " : " u ")
              << mask_to_text(carrier, v.b) << " = " << mask_to_text(carrier, v.missing)
              << " not in family\n";
        }
      }
      break;
    }
  }

  switch (bundle.ideal_stanza) {
    case IdealStanza::none:
      out << "ideal: none\n";
      break;
    case IdealStanza::top:
      out << "ideal: VALID top = " << mask_to_text(carrier, bundle.ideal->top()) << "\n";
      break;
    case IdealStanza::generators: {
      if (!bundle.ideal_check.has_value()) {
        out << "ideal: VALID (no generators, trivial) top = "
            << mask_to_text(carrier, bundle.ideal->top()) << "\n";
        break;
      }
      const IdealCheck& check = *bundle.ideal_check;
      if (check.valid) {
        out << "ideal: VALID family top = " << mask_to_text(carrier, check.top) << "\n";
      } else {
        const IdealViolation& v = *check.violation;
        out << "ideal: generators are not a complete family, condition="
            << condition_name(v.condition);
        if (v.condition == 1) {
          out << " witness: " << mask_to_text(carrier, v.a) << " u " << mask_to_text(carrier, v.b)
              << " = " << mask_to_text(carrier, v.missing) << " not in family";
        } else if (v.condition == 2) {
          out << " witness: " << mask_to_text(carrier, v.missing) << " below "
              << mask_to_text(carrier, v.a) << " not in family";
        }
        out << "; generated ideal top = " << mask_to_text(carrier, bundle.ideal->top()) << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::string render_validate_json(const SpaceBundle& bundle) {
  Json doc = Json::object();
  const CarrierPtr& carrier = bundle.carrier;
  doc["carrier"] = Json{{"parameters", carrier->parameter_count()},
                        {"universe", carrier->element_count()},
                        {"cells", carrier->cells()}};

  Json topology = Json::object();
  switch (bundle.topology_stanza) {
    case TopologyStanza::none:
      topology["present"] = false;
      break;
    case TopologyStanza::subbase:
      topology["present"] = true;
      topology["kind"] = "subbase";
      topology["valid"] = true;
      topology["opens"] = bundle.topology->opens().size();
      break;
    case TopologyStanza::opens: {
      topology["present"] = true;
      topology["kind"] = "opens";
      const TopologyCheck& check = *bundle.topology_check;
      topology["valid"] = check.valid;
      if (check.valid) {
        topology["opens"] = bundle.topology->opens().size();
      } else {
        const TopologyViolation& v = *check.violation;
        Json witness = Json::object();
        witness["axiom"] = axiom_name(v.axiom);
        if (v.axiom != 1) {
          witness["a"] = mask_to_text(carrier, v.a);
          witness["b"] = mask_to_text(carrier, v.b);
        }
        witness["missing"] = mask_to_text(carrier, v.missing);
        topology["violation"] = std::move(witness);
      }
      break;
    }
  }
  doc["topology"] = std::move(topology);

  Json ideal = Json::object();
  switch (bundle.ideal_stanza) {
    case IdealStanza::none:
      ideal["present"] = false;
      break;
    case IdealStanza::top:
      ideal["present"] = true;
      ideal["kind"] = "top";
      ideal["valid"] = true;
      ideal["top"] = mask_to_text(carrier, bundle.ideal->top());
      break;
    case IdealStanza::generators: {
      ideal["present"] = true;
      ideal["kind"] = "generators";
      ideal["top"] = mask_to_text(carrier, bundle.ideal->top());
      if (!bundle.ideal_check.has_value()) {
        ideal["family_valid"] = true;
        break;
      }
      const IdealCheck& check = *bundle.ideal_check;
      ideal["family_valid"] = check.valid;
      if (!check.valid) {
        const IdealViolation& v = *check.violation;
        Json witness = Json::object();
        witness["condition"] = condition_name(v.condition);
        if (v.condition == 1) {
          witness["a"] = mask_to_text(carrier, v.a);
          witness["b"] = mask_to_text(carrier, v.b);
        } else if (v.condition == 2) {
          witness["member"] = mask_to_text(carrier, v.a);
        }
        witness["missing"] = mask_to_text(carrier, v.missing);
        ideal["violation"] = std::move(witness);
      }
      break;
    }
  }
  doc["ideal"] = std::move(ideal);
  return doc.dump(2) + "\n";
}

}  // namespace softclust
