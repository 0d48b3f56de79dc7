#pragma once

#include "gtqft/finite_group.hpp"
#include "gtqft/json_io.hpp"
#include "gtqft/tqft.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gtqft::verify {

struct SuiteResult {
  std::string suite;
  bool passed = true;
  Json report;
};

const std::vector<std::string>& suite_names();

/// Runs one named invariant suite. Suites are deterministic given (group,
/// seed); failures carry counterexample payloads in the report.
SuiteResult run_suite(const std::string& name, const FiniteGroup& G, std::uint64_t seed,
                      const EnumOptions& opts);

// Seeded random fixtures. All draws go through rng() directly (not
// std::uniform_int_distribution) so streams are identical across platforms.

/// Random presentation with a generator chain keeping it connected, plus
/// extra generators and loop relations.
PresentationPtr random_connected_presentation(std::mt19937_64& rng, int max_objects,
                                              int max_extra_gens, int max_relations);

/// Random presentation with no connectivity guarantee.
PresentationPtr random_presentation(std::mt19937_64& rng, int max_objects, int max_gens);

/// Random word between two objects of a connected presentation.
Word random_word(std::mt19937_64& rng, const GroupoidPresentation& p, int from, int to,
                 int walk_length);

/// Random map into a connected target.
PresentationMap random_map(std::mt19937_64& rng, PresentationPtr source, PresentationPtr target);

/// Random cospan whose legs are the coproduct inclusions into
/// X || Y plus extra connecting generators and relations.
Cospan random_cospan(std::mt19937_64& rng, PresentationPtr x, PresentationPtr y, int extra_gens,
                     int extra_relations);

} // namespace gtqft::verify
