#include "softclust.h"

#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"
#include "softclust/cluster.hpp"
#include "softclust/expression.hpp"
#include "softclust/laws.hpp"
#include "softclust/space_file.hpp"
#include "softclust/spaces.hpp"

using namespace softclust;

struct sc_space {
  SpaceBundle bundle;
};

namespace {

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void set_out(char** slot, const std::string& text) {
  if (slot) *slot = dup_string(text);
}

/// Runs the body, routing exceptions into status codes + error text.
template <class Fn>
sc_status guarded(char** out_error, Fn body) {
  if (out_error) *out_error = nullptr;
  try {
    return body();
  } catch (const ResourceError& e) {
    set_out(out_error, e.what());
    return SC_ERR_RESOURCE;
  } catch (const InputError& e) {
    set_out(out_error, e.what());
    return SC_ERR_INPUT;
  } catch (const std::exception& e) {
    set_out(out_error, e.what());
    return SC_ERR_INPUT;
  }
}

std::vector<std::string> parse_laws_csv(const char* laws_csv) {
  if (!laws_csv || !*laws_csv) return default_law_selection();
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(laws_csv);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  if (out.empty()) return default_law_selection();
  return out;
}

SpaceSample sample_from_bundle(const SpaceBundle& bundle) {
  ClusterContext ctx = bundle_context(bundle);
  return SpaceSample{bundle.carrier, ctx.topology, ctx.ideal, "space file"};
}

sc_status finish_reports(const std::vector<LawReport>& reports, sc_format format,
                         char** out_report) {
  std::string text = format == SC_FORMAT_JSON ? render_reports_json(reports)
                                              : render_reports_text(reports);
  set_out(out_report, text);
  bool all_hold = true;
  for (const LawReport& report : reports) all_hold &= report.holds();
  return all_hold ? SC_OK : SC_FOUND;
}

sc_status finish_falsify(const FalsifyOutcome& outcome, sc_format format, char** out_report) {
  std::string text = format == SC_FORMAT_JSON ? render_falsify_json(outcome)
                                              : render_falsify_text(outcome);
  set_out(out_report, text);
  return outcome.found ? SC_FOUND : SC_OK;
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "softclust 1.0.0"; }

void sc_string_free(char* s) { delete[] s; }

void sc_space_free(sc_space* space) { delete space; }

sc_status sc_law_names(char** out_csv) {
  return guarded(nullptr, [&]() -> sc_status {
    std::string csv;
    for (const std::string& name : law_names()) {
      if (!csv.empty()) csv += ',';
      csv += name;
    }
    set_out(out_csv, csv);
    return SC_OK;
  });
}

sc_status sc_space_load(const char* path, sc_space** out_space, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!path || !out_space) throw InputError("sc_space_load requires a path and an out slot");
    auto* space = new sc_space{parse_space_file(path)};
    *out_space = space;
    return SC_OK;
  });
}

sc_status sc_space_parse(const char* json_text, sc_space** out_space, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!json_text || !out_space)
      throw InputError("sc_space_parse requires text and an out slot");
    auto* space = new sc_space{parse_space_text(json_text)};
    *out_space = space;
    return SC_OK;
  });
}

sc_status sc_space_serialize(const sc_space* space, char** out_text, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!space) throw InputError("null space handle");
    set_out(out_text, serialize_space(space->bundle));
    return SC_OK;
  });
}

sc_status sc_space_validate(const sc_space* space, sc_format format, char** out_report,
                            char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!space) throw InputError("null space handle");
    std::string text = format == SC_FORMAT_JSON ? render_validate_json(space->bundle)
                                                : render_validate_text(space->bundle);
    set_out(out_report, text);
    return bundle_all_valid(space->bundle) ? SC_OK : SC_FOUND;
  });
}

sc_status sc_space_eval(const sc_space* space, const char* expression, char** out_result,
                        char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!space || !expression) throw InputError("eval requires a space and an expression");
    SoftSet value = eval_expression(space->bundle, expression);
    set_out(out_result, to_text(value) + "\n");
    return SC_OK;
  });
}

sc_status sc_cluster_topology(const sc_space* space, int list_members, sc_format format,
                              char** out_report, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!space) throw InputError("null space handle");
    ClusterContext ctx = bundle_context(space->bundle);
    SoftTopology tc = cluster_topology(ctx);
    if (format == SC_FORMAT_JSON) {
      nlohmann::ordered_json doc;
      doc["opens"] = tc.opens().size();
      if (list_members) {
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (CellMask m : tc.opens()) members.push_back(mask_to_text(ctx.carrier(), m));
        doc["members"] = std::move(members);
      }
      set_out(out_report, doc.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "cluster topology: " << tc.opens().size() << " opens\n";
      if (list_members) {
        for (CellMask m : tc.opens()) out << mask_to_text(ctx.carrier(), m) << "\n";
      }
      set_out(out_report, out.str());
    }
    return SC_OK;
  });
}

sc_status sc_decompose(const sc_space* space, const char* set_name, const char* kind,
                       sc_format format, char** out_report, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!space || !set_name || !kind) throw InputError("decompose requires a space, set, kind");
    ClusterContext ctx = bundle_context(space->bundle);
    SoftSet target(space->bundle.carrier, resolve_set_name(space->bundle, set_name));
    std::string kind_text(kind);
    Decomposition d = [&] {
      if (kind_text == "crowded") return decompose_crowded(ctx, target);
      if (kind_text == "regular") return decompose_regular(ctx, target);
      if (kind_text == "closed") return decompose_closed_plus_ideal(ctx, target);
      throw InputError("unknown decomposition kind: " + kind_text +
                       " (expected crowded, regular, or closed)");
    }();
    const char* part1_name = kind_text == "crowded"   ? "crowded part"
                             : kind_text == "regular" ? "regular part"
                                                      : "closed part";
    if (format == SC_FORMAT_JSON) {
      nlohmann::ordered_json doc;
      doc["set"] = to_text(target);
      doc["kind"] = kind_text;
      doc["part1"] = to_text(d.part1);
      doc["part2"] = to_text(d.part2);
      set_out(out_report, doc.dump(2) + "\n");
    } else {
      std::ostringstream out;
      out << "set: " << to_text(target) << "\n";
      out << part1_name << ": " << to_text(d.part1) << "\n";
      out << "ideal part: " << to_text(d.part2) << "\n";
      set_out(out_report, out.str());
    }
    return SC_OK;
  });
}

sc_status sc_check_space(const sc_space* space, const char* laws_csv, sc_format format,
                         char** out_report, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!space) throw InputError("null space handle");
    SpaceSample sample = sample_from_bundle(space->bundle);
    std::vector<LawReport> reports =
        run_law_suite(LawScope::single_space(sample), parse_laws_csv(laws_csv));
    return finish_reports(reports, format, out_report);
  });
}

sc_status sc_check_exhaustive(int max_cells, const char* laws_csv, sc_format format,
                              char** out_report, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    std::vector<LawReport> reports =
        run_law_suite(LawScope::exhaustive(max_cells), parse_laws_csv(laws_csv));
    return finish_reports(reports, format, out_report);
  });
}

sc_status sc_check_random(int cells, int trials, uint64_t seed, const char* laws_csv,
                          sc_format format, char** out_report, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (cells < 1 || cells > Carrier::kMaxExhaustiveCells)
      throw InputError("random check cells must be between 1 and 16");
    if (trials < 1) throw InputError("random check requires at least one trial");
    std::vector<LawReport> reports =
        run_law_suite(LawScope::random(cells, trials, seed), parse_laws_csv(laws_csv));
    return finish_reports(reports, format, out_report);
  });
}

sc_status sc_falsify_exhaustive(const char* law, int max_cells, sc_format format,
                                char** out_report, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!law) throw InputError("falsify requires a law name");
    FalsifyOutcome outcome = falsify(law, LawScope::exhaustive(max_cells));
    return finish_falsify(outcome, format, out_report);
  });
}

sc_status sc_falsify_random(const char* law, int cells, int trials, uint64_t seed,
                            sc_format format, char** out_report, char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    if (!law) throw InputError("falsify requires a law name");
    if (cells < 1 || cells > Carrier::kMaxExhaustiveCells)
      throw InputError("random falsify cells must be between 1 and 16");
    if (trials < 1) throw InputError("random falsify requires at least one trial");
    FalsifyOutcome outcome = falsify(law, LawScope::random(cells, trials, seed));
    return finish_falsify(outcome, format, out_report);
  });
}

sc_status sc_enumerate(int max_cells, int list_members, sc_format format, char** out_report,
                       char** out_error) {
  return guarded(out_error, [&]() -> sc_status {
    std::vector<std::string> listing;
    EnumerationStats stats = enumerate_spaces(
        max_cells, [&](const SpaceSample& sample, std::size_t) {
          if (list_members) listing.push_back(serialize_sample(sample));
        });
    std::string text = format == SC_FORMAT_JSON
                           ? render_enumeration_json(stats, list_members ? &listing : nullptr)
                           : render_enumeration_text(stats, list_members ? &listing : nullptr);
    set_out(out_report, text);
    return SC_OK;
  });
}

}  // extern "C"
