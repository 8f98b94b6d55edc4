#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msla/g2.hpp"
#include "msla/rng.hpp"
#include "msla/subspace.hpp"

namespace msla {

struct SuiteConfig {
  std::string suite;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  long coeff_bound = 3;
};

struct TrialFailure {
  std::uint64_t trial = 0;
  std::string input;
  std::string expected;
  std::string got;
};

// passed + failed + unknown == trials. Unknown counts trials where a
// semi-decision ran out of witnesses search budget; it never hides a
// failure. failures is nonempty iff failed > 0, sorted by trial index.
struct SuiteReport {
  std::string suite;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t unknown = 0;
  std::vector<TrialFailure> failures;
  double wall_ms = 0.0;
};

// Suites accepted by run_suite, in display order:
//   typeI-complements   first-kind complement calculus and inheritance
//   typeI-lagrangian    codimension bounds and greedy Lagrangian extension
//   typeII-complements  second-kind span calculus, semigroup, codim bound
//   g2-identities       metric, cross product and seven-form identities
//   classification      the full subspace classification, both branch
//                       families per dimension
//   characterizations   the dimension-3/4 biconditional characterizations
const std::vector<std::string>& suite_names();

// `trials` independent seeded property checks. Identical configs give
// identical reports apart from wall_ms; trials may run in parallel. The
// serial runner is the differential-testing reference.
SuiteReport run_suite(const SuiteConfig& config);
SuiteReport run_suite_serial(const SuiteConfig& config);

// Structured subspace families for the classification suites. Kinds:
// cross-closed-3, isotropic-3, generic-3, assoc-containing-4,
// coassociative-4, generic-4, dim5, dim6. Generic kinds redraw until
// they land in the generic classification branch, so suite expectations
// are deterministic; every structured kind re-verifies its defining
// predicate before returning.
Subspace make_special_subspace(const G2Space& s, const std::string& kind,
                               long coeff_bound, Rng& rng);

}  // namespace msla
