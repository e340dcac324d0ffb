#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/bsgs.hpp"
#include "cgt/classes.hpp"
#include "cgt/groupops.hpp"
#include "cgt/random.hpp"

namespace cgt {
namespace machale {

/// The four embedded degree-44 generators, 1-based cycle notation.
extern const char* const kGeneratorCycles[4];
inline constexpr std::size_t kDegree = 44;

/// Expected invariants of the embedded group.
inline constexpr std::uint64_t kExpectedOrder = 16609443840ULL;
inline constexpr std::uint64_t kExpectedWreathOrder = 33218887680ULL;
inline constexpr std::size_t kExpectedClassCount = 1280;

PermGroup machale_group();

/// The unique nonidentity central element; requires the center to have order
/// exactly 2 (throws std::invalid_argument otherwise) and asserts t^2 = 1.
Perm locate_t(const StabilizerChain& chain, const SearchBudget& budget = {});

/// An ordered pair whose commutator witnesses one conjugacy class. The
/// commutator is always recomputed from (a, b), never trusted from a file.
struct WitnessPair {
  Perm a, b;
};
using WitnessList = std::vector<WitnessPair>;

struct WitnessOptions {
  std::uint64_t stall_limit = 0;  // pair draws without progress before a diagnostic; 0 = auto
  std::uint64_t max_draws = 0;    // 0 = unlimited; exceeding raises a coverage error
  std::size_t batch_size = 512;
  bool parallel = true;
  std::ostream* diagnostics = nullptr;
  SearchBudget budget;
  std::size_t oracle_cap = 100000;  // coverage-target enumeration without t
};

/// Draws uniform pairs and keeps the first pair whose commutator lands in
/// each not-yet-covered class. With t given, every class but t's must be
/// covered; the identity class is witnessed by (identity, identity). Without
/// t the target is the set of classes consisting of commutators, computed by
/// the brute-force engine (small groups only).
///
/// Returned pairs are sorted by the index of the class they witness.
WitnessList generate_witnesses(const StabilizerChain& chain, const ClassInventory& inv,
                               const std::optional<Perm>& t, RandomStream& rng,
                               const WitnessOptions& opts = {});

struct CheckResult {
  bool pass = false;
  std::size_t covered = 0;   // distinct classes witnessed
  std::size_t expected = 0;  // classes that had to be witnessed
  std::string detail;        // first violation; empty on pass
};

/// Recomputes every commutator from its pair and verifies that the witnesses
/// land in `expected` pairwise-distinct classes, none of them t's class.
/// Throws std::invalid_argument on malformed witnesses (wrong degree or not
/// in the group).
CheckResult check_commutators(const StabilizerChain& chain, const ClassInventory& inv,
                              const WitnessList& witnesses, const std::optional<Perm>& t,
                              bool parallel = true, std::size_t oracle_cap = 100000);

struct NoncommutatorCheck {
  bool t_is_noncommutator = false;
  std::optional<std::size_t> fixed_class;  // a class with t*C = C when the check fails
};

/// t is a commutator exactly when left multiplication by t fixes some
/// conjugacy class; reports the fixed class when one exists.
NoncommutatorCheck check_central_noncommutator(const StabilizerChain& chain,
                                               const ClassInventory& inv, const Perm& t,
                                               bool parallel = true);

struct CorollaryStep {
  CentralQuotientGroup quotient;
  CentralQuotientGroup::Element designated;  // (t, 1) T
};

/// The doubling step: K = (G x G)/T with designated element (t,1)T and
/// |K| = |G|^2 / 2. Only the construction and its arithmetic; K is never
/// searched.
CorollaryStep corollary_step(const StabilizerChain& g, const Perm& t);

struct StageResult {
  std::string name;
  double seconds = 0;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  BigUint group_order;
  BigUint center_order;
  std::string t_cycles;  // empty when the center does not have order 2
  bool perfect = false;
  std::size_t class_count = 0;
  std::size_t witnessed = 0;
  bool t_noncommutator = false;
  bool theorem_reproduced = false;
  std::string failed_stage;  // empty when all stages succeeded
  std::vector<StageResult> stages;
};

struct PipelineOptions {
  std::optional<PermGroup> group;  // default: the embedded generators
  bool parallel = true;
  std::ostream* diagnostics = nullptr;
  SearchBudget budget;
  std::size_t central_cap = 1000000;  // refuse to seed more central elements than this
};

struct PipelineResult {
  VerificationReport report;
  std::optional<ClassInventory> inventory;
  WitnessList witnesses;
};

/// The whole verification end to end: build, order, center, perfectness, t,
/// classes, witnesses, both checks. Stops at the first failed requirement and
/// records it; deterministic for a given seed.
PipelineResult run_pipeline(std::uint64_t seed, const PipelineOptions& opts = {});

/// Flat key-value serialization. Stable across runs with the same seed: stage
/// wall-clock timings are deliberately not part of this document (they go to
/// diagnostics), so equal-seed reports compare byte-identical.
std::string serialize_report(const VerificationReport& report);

void write_witnesses(std::ostream& os, const WitnessList& witnesses, std::size_t degree,
                     std::uint64_t seed);
WitnessList read_witnesses(std::istream& is, std::size_t& degree_out, std::uint64_t& seed_out);

}  // namespace machale
}  // namespace cgt
