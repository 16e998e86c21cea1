#ifndef SOFTCLUST_LAWS_HPP
#define SOFTCLUST_LAWS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "softclust/spaces.hpp"

namespace softclust {

/// Where a suite run quantifies its spaces: every enumerated pair up to a
/// cell bound, seeded random spaces on one carrier, or a single space.
struct LawScope {
  enum class Kind { exhaustive, random, single };
  Kind kind = Kind::exhaustive;
  int max_cells = 4;            // exhaustive
  int cells = 6;                // random
  int trials = 0;               // random
  std::uint64_t seed = 0;       // random
  const SpaceSample* single = nullptr;

  static LawScope exhaustive(int max_cells);
  static LawScope random(int cells, int trials, std::uint64_t seed);
  static LawScope single_space(const SpaceSample& sample);
  std::string describe() const;
};

struct LawWitness {
  std::string space_json;  // canonical space serialization, reproducible standalone
  std::vector<std::pair<std::string, std::string>> fields;
};

struct LawReport {
  static constexpr std::size_t kMaxWitnesses = 3;
  std::string law;
  std::string universe;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::vector<LawWitness> witnesses;  // first failures in canonical order
  bool holds() const { return failures == 0; }
};

const std::vector<std::string>& law_names();
bool law_exists(const std::string& name);
std::string law_summary(const std::string& name);
/// Every law except prop4.9-stated, whose failure is the expected outcome.
std::vector<std::string> default_law_selection();

/// One report per selected law, in registry order. Unknown names throw
/// InputError.
std::vector<LawReport> run_law_suite(const LawScope& scope, const std::vector<std::string>& laws);

struct FalsifyOutcome {
  std::string law;
  std::string universe;
  bool found = false;
  LawWitness witness;
  std::uint64_t trials = 0;
  std::size_t spaces = 0;
};

/// Earliest counterexample in canonical scan order, or an exhausted verdict.
FalsifyOutcome falsify(const std::string& law, const LawScope& scope);

std::string render_reports_text(const std::vector<LawReport>& reports);
std::string render_reports_json(const std::vector<LawReport>& reports);
std::string render_falsify_text(const FalsifyOutcome& outcome);
std::string render_falsify_json(const FalsifyOutcome& outcome);
std::string render_enumeration_text(const EnumerationStats& stats,
                                    const std::vector<std::string>* listing);
std::string render_enumeration_json(const EnumerationStats& stats,
                                    const std::vector<std::string>* listing);

}  // namespace softclust

#endif
