#include "cgt/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {
namespace oracle {

ElementTable enumerate_elements(const PermGroup& g, std::size_t cap) {
  StabilizerChain chain = StabilizerChain::build(g);
  if (chain.order() > BigUint(cap))
    throw CapExceeded("group order " + chain.order().to_string() + " exceeds cap " +
                      std::to_string(cap));

  ElementTable t;
  Perm id(g.degree);
  t.elements.push_back(id);
  t.index.emplace(id, 0);
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    for (const Perm& s : g.generators) {
      Perm next = t.elements[i] * s;
      if (t.index.emplace(next, t.elements.size()).second) t.elements.push_back(std::move(next));
    }
  }
  return t;
}

std::vector<Perm> brute_commutator_set(const ElementTable& t) {
  std::unordered_set<Perm, PermHash> out;
  out.reserve(t.size());
  for (const Perm& a : t.elements)
    for (const Perm& b : t.elements) out.insert(commutator(a, b));
  std::vector<Perm> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::vector<Perm> brute_noncommutators(const ElementTable& t) {
  std::vector<Perm> comms = brute_commutator_set(t);
  std::unordered_set<Perm, PermHash> comm_set(comms.begin(), comms.end());
  std::vector<Perm> out;
  for (const Perm& x : t.elements)
    if (!comm_set.count(x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> brute_classes(const ElementTable& t) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> cls;
    for (const Perm& x : t.elements) cls.insert(t.index.at(conjugate(t.elements[i], x)));
    for (std::size_t j : cls) seen[j] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<Perm> brute_center(const ElementTable& t) {
  std::vector<Perm> out;
  for (const Perm& z : t.elements) {
    bool central = true;
    for (const Perm& x : t.elements) {
      if (!(z * x == x * z)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return out;
}

ElementTable brute_derived(const ElementTable& t) {
  std::vector<Perm> comms = brute_commutator_set(t);
  std::size_t degree = t.elements.front().degree();
  ElementTable d;
  Perm id(degree);
  d.elements.push_back(id);
  d.index.emplace(id, 0);
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    for (const Perm& c : comms) {
      Perm next = d.elements[i] * c;
      if (d.index.emplace(next, d.elements.size()).second) d.elements.push_back(std::move(next));
    }
  }
  return d;
}

bool brute_conjugate(const ElementTable& t, const Perm& a, const Perm& b) {
  for (const Perm& x : t.elements)
    if (conjugate(a, x) == b) return true;
  return false;
}

std::vector<Perm> brute_centralizer(const ElementTable& t, const Perm& g) {
  std::vector<Perm> out;
  for (const Perm& x : t.elements)
    if (x * g == g * x) out.push_back(x);
  return out;
}

}  // namespace oracle
}  // namespace cgt
