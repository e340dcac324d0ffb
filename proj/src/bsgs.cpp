#include "cgt/bsgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgt {

PermGroup::PermGroup(std::size_t degree_, std::vector<Perm> gens)
    : degree(degree_), generators(std::move(gens)) {
  if (generators.empty()) throw std::invalid_argument("a group needs at least one generator");
  for (const Perm& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {Perm(degree)});
}

namespace {

/// Product-replacement state for the randomized construction phase. Quality
/// only affects construction speed; the verification pass certifies the
/// result regardless.
class ElementShaker {
public:
  ElementShaker(const std::vector<Perm>& gens, std::size_t degree, RandomStream& rng)
      : rng_(rng) {
    for (const Perm& g : gens)
      if (!g.is_identity()) slots_.push_back(g);
    if (slots_.empty()) slots_.push_back(Perm(degree));
    const std::size_t seeded = slots_.size();
    while (slots_.size() < 8) slots_.push_back(slots_[slots_.size() % seeded]);
    for (int i = 0; i < 60; ++i) step();
  }

  const Perm& draw() {
    step();
    return slots_[last_];
  }

private:
  void step() {
    std::size_t i = rng_.below(slots_.size());
    std::size_t j = rng_.below(slots_.size() - 1);
    if (j >= i) ++j;
    slots_[i] = rng_.below(2) ? slots_[i] * slots_[j] : slots_[i] * slots_[j].inverse();
    last_ = i;
  }

  RandomStream& rng_;
  std::vector<Perm> slots_;
  std::size_t last_ = 0;
};

}  // namespace

class ChainBuilder {
public:
  ChainBuilder(const PermGroup& g, std::vector<Point> prescribed, std::uint64_t seed)
      : degree_(g.degree), group_(g), rng_(seed) {
    for (Point b : prescribed) append_level(b);
  }

  StabilizerChain finish() {
    for (const Perm& g : group_.generators) insert(g);

    if (!all_trivial()) {
      ElementShaker shaker(group_.generators, degree_, rng_);
      int quiet = 0;
      while (quiet < 16) {
        quiet = insert(shaker.draw()) ? 0 : quiet + 1;
      }
    }
    while (!verify_pass()) {
    }
    return package();
  }

private:
  struct WLevel {
    Point base_point;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<Perm> transversal;
    std::vector<std::int32_t> orbit_pos;
  };

  bool all_trivial() const {
    for (const Perm& g : group_.generators)
      if (!g.is_identity()) return false;
    return true;
  }

  void append_level(Point b) {
    WLevel lv;
    lv.base_point = b;
    lv.orbit = {b};
    lv.transversal = {Perm(degree_)};
    lv.orbit_pos.assign(degree_, -1);
    lv.orbit_pos[b] = 0;
    levels_.push_back(std::move(lv));
  }

  void rebuild_orbit(WLevel& lv) {
    lv.orbit.assign(1, lv.base_point);
    lv.transversal.assign(1, Perm(degree_));
    lv.orbit_pos.assign(degree_, -1);
    lv.orbit_pos[lv.base_point] = 0;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point pt = lv.orbit[i];
      for (const Perm& s : lv.gens) {
        Point q = s[pt];
        if (lv.orbit_pos[q] < 0) {
          lv.orbit_pos[q] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(lv.transversal[i] * s);
        }
      }
    }
  }

  // Residue of p and the level it got stuck at (levels_.size() if it passed
  // through; the residue is then either the identity or fixes every base point).
  std::pair<Perm, std::size_t> sift_from(Perm p, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const WLevel& lv = levels_[l];
      Point beta = p[lv.base_point];
      std::int32_t pos = lv.orbit_pos[beta];
      if (pos < 0) return {std::move(p), l};
      p = p * lv.transversal[pos].inverse();
    }
    return {std::move(p), levels_.size()};
  }

  // Returns true if the element extended the chain.
  bool insert(const Perm& p) {
    auto [residue, stuck] = sift_from(p, 0);
    if (residue.is_identity()) return false;
    add_strong_generator(residue, stuck);
    return true;
  }

  void add_strong_generator(const Perm& r, std::size_t stuck) {
    if (stuck == levels_.size()) {
      Point moved = 0;
      while (r[moved] == moved) ++moved;
      append_level(moved);
    }
    for (std::size_t l = 0; l <= stuck; ++l) {
      levels_[l].gens.push_back(r);
      rebuild_orbit(levels_[l]);
    }
  }

  // Deterministic certification: every Schreier generator at every level must
  // sift to the identity through the rest of the chain. Any failure extends
  // the chain and forces another pass.
  bool verify_pass() {
    for (std::size_t l = levels_.size(); l-- > 0;) {
      WLevel& lv = levels_[l];
      for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
        Point beta = lv.orbit[pos];
        for (const Perm& s : lv.gens) {
          Point delta = s[beta];
          Perm schreier = lv.transversal[pos] * s * lv.transversal[lv.orbit_pos[delta]].inverse();
          if (schreier.is_identity()) continue;
          auto [residue, stuck] = sift_from(std::move(schreier), l + 1);
          if (!residue.is_identity()) {
            add_strong_generator(residue, stuck);
            return false;
          }
        }
      }
    }
    return true;
  }

  StabilizerChain package() {
    StabilizerChain chain;
    chain.degree_ = degree_;
    chain.group_ = group_;
    if (!levels_.empty()) chain.strong_gens_ = levels_[0].gens;
    if (chain.strong_gens_.empty()) chain.strong_gens_.push_back(Perm(degree_));
    for (WLevel& lv : levels_) {
      StabilizerChain::Level out;
      out.base_point = lv.base_point;
      out.gens = std::move(lv.gens);
      out.orbit = std::move(lv.orbit);
      out.transversal = std::move(lv.transversal);
      out.transversal_inv.reserve(out.transversal.size());
      for (const Perm& u : out.transversal) out.transversal_inv.push_back(u.inverse());
      out.orbit_pos = std::move(lv.orbit_pos);
      out.point_orbit_min = orbit_min_partition(out.gens);
      chain.base_.push_back(out.base_point);
      chain.order_ *= static_cast<std::uint64_t>(out.orbit.size());
      chain.levels_.push_back(std::move(out));
    }
    chain.trivial_partition_.resize(degree_);
    for (Point i = 0; i < degree_; ++i) chain.trivial_partition_[i] = i;
    return chain;
  }

  // Partition of all points into orbits under gens, labelled by the smallest
  // point of each orbit.
  std::vector<Point> orbit_min_partition(const std::vector<Perm>& gens) const {
    std::vector<Point> label(degree_);
    std::vector<Point> stack;
    for (Point i = 0; i < degree_; ++i) label[i] = i;
    std::vector<bool> seen(degree_, false);
    for (Point i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      // i is the smallest point of its orbit: everything reachable is >= i or
      // already seen with a smaller label.
      stack.assign(1, i);
      seen[i] = true;
      label[i] = i;
      while (!stack.empty()) {
        Point p = stack.back();
        stack.pop_back();
        for (const Perm& s : gens) {
          Point q = s[p];
          if (!seen[q]) {
            seen[q] = true;
            label[q] = i;
            stack.push_back(q);
          }
        }
      }
    }
    return label;
  }

  std::size_t degree_;
  PermGroup group_;
  RandomStream rng_;
  std::vector<WLevel> levels_;
};

StabilizerChain StabilizerChain::build(const PermGroup& g, std::uint64_t seed) {
  return ChainBuilder(g, {}, seed).finish();
}

StabilizerChain StabilizerChain::build_with_base(const PermGroup& g,
                                                 const std::vector<Point>& base,
                                                 std::uint64_t seed) {
  for (Point b : base)
    if (b >= g.degree) throw std::invalid_argument("base point out of range");
  return ChainBuilder(g, base, seed).finish();
}

Perm StabilizerChain::sift(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in sift");
  Perm residue = p;
  for (const Level& lv : levels_) {
    Point beta = residue[lv.base_point];
    std::int32_t pos = lv.orbit_pos[beta];
    if (pos < 0) return residue;
    residue = residue * lv.transversal_inv[pos];
  }
  return residue;
}

bool StabilizerChain::contains(const Perm& p) const { return sift(p).is_identity(); }

Perm StabilizerChain::random_element(RandomStream& rng) const {
  Perm result(degree_);
  for (const Level& lv : levels_) {
    std::uint64_t idx = rng.below(lv.orbit.size());
    result = lv.transversal[idx] * result;
  }
  return result;
}

const std::vector<Point>& StabilizerChain::point_orbit_min(std::size_t level) const {
  return level < levels_.size() ? levels_[level].point_orbit_min : trivial_partition_;
}

bool subgroup_of(const PermGroup& sub, const StabilizerChain& chain) {
  if (sub.degree != chain.degree()) throw std::invalid_argument("degree mismatch in subgroup_of");
  for (const Perm& g : sub.generators)
    if (!chain.contains(g)) return false;
  return true;
}

bool same_group(const StabilizerChain& a, const StabilizerChain& b) {
  return a.order() == b.order() && subgroup_of(a.group(), b) && subgroup_of(b.group(), a);
}

}  // namespace cgt
