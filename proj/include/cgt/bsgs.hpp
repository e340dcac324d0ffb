#pragma once

#include <cstdint>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/perm.hpp"
#include "cgt/random.hpp"

namespace cgt {

/// A permutation group given by generators. Generators may include the
/// identity; all must share the degree.
struct PermGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;

  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> gens);

  static PermGroup trivial(std::size_t degree);
};

/// Base and strong generating set with explicit per-level transversals.
///
/// Construction is randomized Schreier-Sims followed by a deterministic
/// verification pass that sifts every Schreier generator at every level, so a
/// built chain is a certificate: the product of the fundamental orbit lengths
/// is the exact group order.
///
/// Chains are immutable once built; concurrent readers need no
/// synchronization.
class StabilizerChain {
public:
  struct Level {
    Point base_point;
    std::vector<Perm> gens;           // strong generators fixing all earlier base points
    std::vector<Point> orbit;         // orbit[0] == base_point, BFS order
    std::vector<Perm> transversal;    // transversal[i] maps base_point to orbit[i]
    std::vector<Perm> transversal_inv;
    std::vector<std::int32_t> orbit_pos;  // degree-sized; index into orbit, or -1
    std::vector<Point> point_orbit_min;   // degree-sized; min point of each point's orbit
                                          // under this level's generators
  };

  /// Build and verify a chain for g. The represented group is independent of
  /// the seed; the seed only steers the randomized construction phase.
  static StabilizerChain build(const PermGroup& g, std::uint64_t seed = kDefaultSeed);

  /// Build with a prescribed base prefix; every prescribed point becomes a
  /// level even when its fundamental orbit is trivial. Further base points
  /// are appended only if the prefix is not already a base.
  static StabilizerChain build_with_base(const PermGroup& g, const std::vector<Point>& base,
                                         std::uint64_t seed = kDefaultSeed);

  std::size_t degree() const { return degree_; }
  const PermGroup& group() const { return group_; }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_gens_; }

  const BigUint& order() const { return order_; }

  /// Factors p through the chain; the residue is the identity exactly when p
  /// is a member.
  Perm sift(const Perm& p) const;
  bool contains(const Perm& p) const;

  /// Exactly uniform over the group: one independently uniform transversal
  /// representative per level.
  Perm random_element(RandomStream& rng) const;

  /// Orbit partition of all points under the generators of level l, as
  /// min-point labels. Index levels().size() is the trivial partition.
  const std::vector<Point>& point_orbit_min(std::size_t level) const;

  static constexpr std::uint64_t kDefaultSeed = 1;

private:
  friend class ChainBuilder;

  std::size_t degree_ = 0;
  PermGroup group_;                // the input generators
  std::vector<Perm> strong_gens_;  // all strong generators
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::vector<Point> trivial_partition_;  // each point its own orbit
  BigUint order_ = 1;
};

/// True iff every generator of sub sifts to the identity.
bool subgroup_of(const PermGroup& sub, const StabilizerChain& chain);

/// Mutual containment plus equal orders.
bool same_group(const StabilizerChain& a, const StabilizerChain& b);

}  // namespace cgt
