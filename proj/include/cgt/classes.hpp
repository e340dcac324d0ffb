#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/backtrack.hpp"
#include "cgt/bigint.hpp"
#include "cgt/bsgs.hpp"
#include "cgt/random.hpp"

namespace cgt {

/// Conjugation-invariant element fingerprint, computable in O(degree):
/// element order plus the cycle types of p, p^2 and p^3. Classes sharing a
/// fingerprint still need a backtrack certificate to be told apart.
struct ClassFingerprint {
  std::uint64_t order = 1;
  CycleType ct1, ct2, ct3;

  bool operator==(const ClassFingerprint&) const = default;
};

ClassFingerprint fingerprint_of(const Perm& p);

struct FingerprintHash {
  std::size_t operator()(const ClassFingerprint& f) const;
};

struct ConjugacyClass {
  Perm representative;
  BigUint centralizer_order;
  BigUint size;  // group order / centralizer order
  ClassFingerprint fingerprint;
};

/// Growing set of pairwise non-conjugate classes. Complete exactly when the
/// class sizes sum to the group order. Classes are indexed by fingerprint
/// buckets so that conjugacy certificates only run within a bucket, largest
/// class first (uniform draws land in big classes, so the first test usually
/// wins).
///
/// Near-central elements have tiny classes but enormous centralizers, which
/// makes backtrack the wrong tool exactly where fingerprints collide most.
/// Small classes therefore carry their complete conjugation orbit as a sorted
/// packed table (exact lookups both ways); midsize classes carry the sorted
/// hashes of their orbit (a miss is a definitive "not conjugate", a hit is
/// confirmed by a backtrack that only ever runs in the easy, satisfiable
/// direction). Only large-vs-large tests reach the raw backtrack.
class ClassInventory {
public:
  explicit ClassInventory(BigUint group_order);

  const BigUint& group_order() const { return group_order_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const BigUint& covered_mass() const { return covered_; }
  bool complete() const { return covered_ == group_order_; }

  /// Indices of classes sharing the fingerprint, by descending class size;
  /// nullptr when no class has it yet.
  const std::vector<std::size_t>* bucket(const ClassFingerprint& f) const;
  std::size_t bucket_count() const { return buckets_.size(); }

  /// Appends a class whose distinctness the caller has certified.
  /// Enforces size * centralizer_order == group order.
  std::size_t add(ConjugacyClass cls);

  /// True iff p lies in class idx.
  bool class_contains(std::size_t idx, const StabilizerChain& chain, const Perm& p,
                      const SearchBudget& budget = {}) const;

  /// Attach the complete packed, sorted orbit of class idx.
  void attach_orbit(std::size_t idx, std::vector<std::uint8_t> packed_sorted);
  /// Attach the sorted element hashes of the complete orbit of class idx.
  void attach_orbit_hashes(std::size_t idx, std::vector<std::uint64_t> hashes_sorted);
  bool orbit_cached(std::size_t idx) const {
    return !orbit_cache_[idx].empty() || !hash_cache_[idx].empty();
  }
  /// The packed complete orbit of class idx (degree bytes per element), or
  /// nullptr when only hashes or nothing are materialized.
  const std::vector<std::uint8_t>* packed_orbit(std::size_t idx) const {
    return orbit_cache_[idx].empty() ? nullptr : &orbit_cache_[idx];
  }

  /// Materialize orbit data for every class of at most kHashCacheCap elements
  /// (degree up to 255). Call after read_inventory before assignment work.
  void warm_orbit_caches(const StabilizerChain& chain);

  static constexpr std::size_t kOrbitCacheCap = 10000;   // exact packed orbits
  static constexpr std::size_t kHashCacheCap = 262144;   // orbit hash sets

private:
  BigUint group_order_;
  BigUint covered_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::vector<std::uint8_t>> orbit_cache_;   // empty = not materialized
  std::vector<std::vector<std::uint64_t>> hash_cache_;   // empty = not materialized
  std::unordered_map<ClassFingerprint, std::vector<std::size_t>, FingerprintHash> buckets_;
};

struct OrbitData {
  std::size_t size = 0;
  std::vector<std::uint8_t> packed;         // complete sorted orbit when size <= kOrbitCacheCap
  std::vector<std::uint64_t> hashes;        // sorted orbit hashes otherwise
};

/// Complete conjugation orbit of p under the chain's group, or nullopt if it
/// exceeds cap elements (or the degree exceeds 255).
std::optional<OrbitData> conjugation_orbit(const StabilizerChain& chain, const Perm& p,
                                           std::size_t cap);

/// Index of the class containing p, certified by a conjugating element, or
/// nullopt when p matches no existing class. Elements whose fingerprint hits
/// no bucket never reach the backtrack. p must lie in the group.
/// Read-only on the inventory; safe to call concurrently.
std::optional<std::size_t> assign_class(const ClassInventory& inv, const StabilizerChain& chain,
                                        const Perm& p, const SearchBudget& budget = {});

/// Batch class assignment for distinct drawn elements against an inventory
/// snapshot. The serial variant is the reference; the parallel variant fans
/// the same pure lookups out over OpenMP threads and returns identical
/// results.
std::vector<std::optional<std::size_t>> assign_batch_serial(const ClassInventory& inv,
                                                            const StabilizerChain& chain,
                                                            std::span<const Perm> elems,
                                                            const SearchBudget& budget = {});
std::vector<std::optional<std::size_t>> assign_batch_parallel(const ClassInventory& inv,
                                                              const StabilizerChain& chain,
                                                              std::span<const Perm> elems,
                                                              const SearchBudget& budget = {});

struct EnumerateOptions {
  std::uint64_t stall_limit = 0;   // draws without progress before a diagnostic; 0 = 10^6/degree
  std::size_t batch_size = 512;    // random draws per kernel invocation
  bool parallel = true;
  std::ostream* diagnostics = nullptr;  // stall reports land here; null = silent
  SearchBudget budget;                  // per-search budget for certificates
};

/// Complete conjugacy-class enumeration: seeds the identity and the given
/// central elements, then alternates uniform random draws with closure under
/// central multiplication and power maps until the class sizes sum to the
/// group order. Never reports success while incomplete; a stalled search
/// emits diagnostics and escalates the power-map closure instead.
///
/// Deterministic for a given stream state, independent of `parallel`.
ClassInventory enumerate_classes(const StabilizerChain& chain,
                                 const std::vector<Perm>& central_elements, RandomStream& rng,
                                 const EnumerateOptions& opts = {});

/// The involution i -> class(t * rep_i) on class indices induced by left
/// multiplication with a central involution t. Requires a complete inventory.
std::vector<std::size_t> class_multiplication_by_central(const ClassInventory& inv,
                                                         const StabilizerChain& chain,
                                                         const Perm& t,
                                                         bool parallel = true);

/// One class per line: representative cycles, centralizer order, class size,
/// element order, cycle types of p, p^2, p^3; header carries degree, group
/// order and class count.
void write_inventory(std::ostream& os, const ClassInventory& inv, std::size_t degree);
ClassInventory read_inventory(std::istream& is, std::size_t& degree_out);

std::string cycle_type_to_string(const CycleType& ct);
CycleType cycle_type_from_string(const std::string& text);

}  // namespace cgt
