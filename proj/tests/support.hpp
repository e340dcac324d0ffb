#pragma once

#include <numeric>
#include <vector>

#include "cgt/bsgs.hpp"
#include "cgt/perm.hpp"
#include "cgt/random.hpp"

namespace testsupport {

using cgt::Perm;
using cgt::PermGroup;
using cgt::Point;

inline Perm random_perm(cgt::RandomStream& rng, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = degree; i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(img[i - 1], img[j]);
  }
  return Perm(std::move(img));
}

inline PermGroup symmetric(std::size_t n) {
  if (n < 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  std::vector<Point> swap01(n);
  std::iota(swap01.begin(), swap01.end(), Point{0});
  std::swap(swap01[0], swap01[1]);
  return PermGroup(n, {Perm(std::move(swap01)), Perm(std::move(cycle))});
}

inline PermGroup alternating(std::size_t n) {
  if (n < 3) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

inline PermGroup cyclic(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(std::move(img))});
}

inline PermGroup dihedral(std::size_t n) {
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

inline PermGroup quaternion() {
  return PermGroup(8, {cgt::parse_cycles("(1,2,3,4)(5,8,7,6)", 8),
                       cgt::parse_cycles("(1,5,3,7)(2,6,4,8)", 8)});
}

inline PermGroup klein_four() {
  return PermGroup(4, {cgt::parse_cycles("(1,2)(3,4)", 4), cgt::parse_cycles("(1,3)(2,4)", 4)});
}

/// Random permutation built from a few short cycles on random points; small
/// support keeps the generated groups small.
inline Perm random_sparse_perm(cgt::RandomStream& rng, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::size_t ncycles = 1 + rng.below(2);
  std::vector<bool> used(degree, false);
  for (std::size_t c = 0; c < ncycles; ++c) {
    std::size_t len = 2 + rng.below(3);
    std::vector<Point> cycle;
    for (std::size_t attempts = 0; cycle.size() < len && attempts < 4 * degree; ++attempts) {
      Point p = static_cast<Point>(rng.below(degree));
      if (!used[p]) {
        used[p] = true;
        cycle.push_back(p);
      }
    }
    if (cycle.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) img[cycle[i]] = cycle[i + 1];
    img[cycle.back()] = cycle.front();
  }
  return Perm(std::move(img));
}

/// A random permutation group of degree <= max_degree and order <= max_order.
inline PermGroup random_small_group(cgt::RandomStream& rng, std::size_t max_degree = 10,
                                    std::uint64_t max_order = 5000) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::size_t degree = 3 + rng.below(max_degree - 2);
    std::size_t ngens = 1 + rng.below(3);
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(random_sparse_perm(rng, degree));
    PermGroup g(degree, std::move(gens));
    cgt::StabilizerChain chain = cgt::StabilizerChain::build(g);
    if (chain.order() <= cgt::BigUint(max_order)) return g;
  }
  return cyclic(4 + rng.below(5));
}

}  // namespace testsupport
