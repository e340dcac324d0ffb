#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "cgt/bsgs.hpp"
#include "cgt/perm.hpp"

namespace cgt {
namespace oracle {

/// Complete element list of a small group, in breadth-first closure order
/// from the identity. The reference engine: definitions applied literally.
struct ElementTable {
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;

  std::size_t size() const { return elements.size(); }
  bool contains(const Perm& p) const { return index.count(p) != 0; }
};

/// Breadth-first closure of the generators under composition. The group
/// order is checked against `cap` via a stabilizer chain before enumerating;
/// throws CapExceeded beyond it.
ElementTable enumerate_elements(const PermGroup& g, std::size_t cap = 100000);

/// { [a, b] : a, b in the table }, deduplicated, sorted by image table.
std::vector<Perm> brute_commutator_set(const ElementTable& t);

/// Table elements that are not commutators.
std::vector<Perm> brute_noncommutators(const ElementTable& t);

/// Orbits under conjugation, as index lists into the table; each class lists
/// indices in increasing order, classes ordered by smallest member index.
std::vector<std::vector<std::size_t>> brute_classes(const ElementTable& t);

/// Elements commuting with the whole table.
std::vector<Perm> brute_center(const ElementTable& t);

/// Subgroup generated by all commutators.
ElementTable brute_derived(const ElementTable& t);

/// True iff a and b are conjugate by some table element.
bool brute_conjugate(const ElementTable& t, const Perm& a, const Perm& b);

/// Centralizer elements of g.
std::vector<Perm> brute_centralizer(const ElementTable& t, const Perm& g);

}  // namespace oracle
}  // namespace cgt
