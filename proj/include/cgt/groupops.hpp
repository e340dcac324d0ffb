#pragma once

#include <utility>
#include <vector>

#include "cgt/backtrack.hpp"
#include "cgt/bigint.hpp"
#include "cgt/bsgs.hpp"

namespace cgt {

/// Partition of {0, ..., degree-1} into equal-size blocks permuted setwise by
/// the acting group.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;

  std::size_t degree() const;
  std::size_t block_of(Point p) const;  // index of the block containing p

  /// Blocks {k*i, ..., k*i+k-1}.
  static BlockSystem consecutive(std::size_t degree, std::size_t block_size);
};

struct WreathProduct {
  PermGroup group;
  BlockSystem blocks;
};

/// Imprimitive wreath-type embedding on base_order * n points with blocks of
/// size base_order: one base-group cycle inside block 0 plus lifts of the top
/// generators permuting blocks rigidly. For transitive top the order is
/// base_order^n * |top|.
WreathProduct wreath_imprimitive(unsigned base_order, const PermGroup& top);

/// Induced action on the block indices. Throws std::invalid_argument if a
/// generator splits a block.
PermGroup block_action(const PermGroup& g, const BlockSystem& blocks);

/// Smallest normal subgroup of the chain's group containing the seed
/// elements, with its verified chain.
StabilizerChain normal_closure(const StabilizerChain& g, const std::vector<Perm>& seed);

/// Normal closure of all generator-pair commutators (both orders).
StabilizerChain derived_subgroup(const StabilizerChain& g);

/// Iterated centralizer intersection over the generators.
StabilizerChain center(const StabilizerChain& g, const SearchBudget& budget = {});

bool is_perfect(const StabilizerChain& g);

/// Action on the disjoint union of the two domains; order |a| * |b|.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// (G x G) / T for T generated by (t, t), t a central involution of G.
/// Elements are canonical pair representatives: of (x, y) and (xt, yt), the
/// one with the lexicographically smaller first image table (ties by the
/// second) represents the coset.
class CentralQuotientGroup {
public:
  struct Element {
    Perm first, second;
    bool operator==(const Element&) const = default;
    bool operator<(const Element& rhs) const {
      return first < rhs.first || (first == rhs.first && second < rhs.second);
    }
  };

  CentralQuotientGroup(StabilizerChain base, Perm t);

  const StabilizerChain& base_chain() const { return base_; }
  const Perm& t() const { return t_; }
  const BigUint& order() const { return order_; }  // |G|^2 / 2

  /// The G x G permutation group on the doubled domain, with chain.
  const StabilizerChain& product_chain() const { return product_; }

  Element canonical(const Perm& x, const Perm& y) const;
  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;

private:
  StabilizerChain base_;
  StabilizerChain product_;
  Perm t_;
  BigUint order_;
};

/// Validates that t is a nonidentity central involution of the chain's group
/// and builds the quotient. Throws std::invalid_argument otherwise.
CentralQuotientGroup central_quotient(const StabilizerChain& g, const Perm& t);

}  // namespace cgt
