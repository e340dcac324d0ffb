#include "cgt/backtrack.hpp"

#include <chrono>
#include <memory>
#include <stdexcept>

#include "cgt/error.hpp"

namespace cgt {

namespace {

using Clock = std::chrono::steady_clock;

// Backtrack over the chain's group for elements x with x^-1 g x == h,
// searching by images of the base points.
//
// A partial element is a choice of images for a prefix of the base; the
// tail product t of the chosen transversal representatives determines those
// images. Constraint propagation: fixing x(p) = q forces x along the whole
// g-cycle of p (x(p^g) = q^h), and every forced pair (p, q) must satisfy the
// orbit refinement q ∈ (orbit of p at the next level)^t.
//
// In subgroup mode (g == h target, find all) the search maintains the
// subgroup K found so far, keyed to the same base as the searched chain:
//   - the identity-image branch is explored first at every level,
//   - at the first deviation from the base, candidate images must be minimal
//     in their orbit under the K-stabilizer of the earlier base points,
//   - once a subtree rooted at the first deviation yields one element, the
//     rest of that subtree lies in a K-coset of it and is abandoned.
class ConjugacySearch {
public:
  ConjugacySearch(const StabilizerChain& chain, const Perm& g, const Perm& h,
                  const SearchBudget& budget, bool subgroup_mode)
      : chain_(chain),
        g_(g.images()),
        h_(h.images()),
        n_(chain.degree()),
        nlevels_(chain.levels().size()),
        budget_(budget),
        subgroup_mode_(subgroup_mode) {
    fwd_.assign(n_, -1);
    bwd_.assign(n_, -1);
    t_stack_.resize(nlevels_ + 1);
    tinv_stack_.resize(nlevels_ + 1);
    t_stack_[0].resize(n_);
    tinv_stack_[0].resize(n_);
    for (Point i = 0; i < n_; ++i) t_stack_[0][i] = tinv_stack_[0][i] = i;
    if (budget_.max_seconds) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(*budget_.max_seconds));
    if (subgroup_mode_) {
      if (chain_.contains(g)) k_gens_.push_back(g);
      rebuild_k();
    }
  }

  std::optional<Perm> find_one() {
    dfs(0, kNoDeviation);
    return found_;
  }

  StabilizerChain find_group() {
    dfs(0, kNoDeviation);
    return std::move(*k_chain_);
  }

private:
  static constexpr int kNoDeviation = -1;
  static constexpr int kKeepGoing = -1;
  static constexpr int kStop = -2;

  void rebuild_k() {
    PermGroup kg = k_gens_.empty() ? PermGroup::trivial(n_) : PermGroup(n_, k_gens_);
    k_chain_ = std::make_unique<StabilizerChain>(
        StabilizerChain::build_with_base(kg, chain_.base()));
  }

  void charge_node() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes)
      throw BudgetExhausted("backtrack node budget exhausted");
    if (deadline_ && (nodes_ & 0xFFF) == 0 && Clock::now() > *deadline_)
      throw BudgetExhausted("backtrack time budget exhausted");
  }

  // Force x(p) = q and everything that follows along the g-cycle of p.
  // Appends every newly fixed point to undo_; false on contradiction.
  bool try_assign(Point p, Point q) {
    if (fwd_[p] >= 0) return fwd_[p] == static_cast<std::int32_t>(q);
    if (bwd_[q] >= 0) return false;
    const Point start_p = p, start_q = q;
    for (;;) {
      fwd_[p] = static_cast<std::int32_t>(q);
      bwd_[q] = static_cast<std::int32_t>(p);
      undo_.push_back(p);
      p = g_[p];
      q = h_[q];
      if (p == start_p) return q == start_q;
      if (fwd_[p] >= 0) return fwd_[p] == static_cast<std::int32_t>(q);
      if (bwd_[q] >= 0) return false;
    }
  }

  void undo_to(std::size_t mark) {
    while (undo_.size() > mark) {
      Point p = undo_.back();
      undo_.pop_back();
      bwd_[fwd_[p]] = -1;
      fwd_[p] = -1;
    }
  }

  // Every forced pair (p -> q) must respect the orbit partition of the next
  // level: q^(t^-1) and p in the same orbit.
  bool orbits_compatible(std::size_t next_level) const {
    const std::vector<Point>& part = chain_.point_orbit_min(next_level);
    const std::vector<Point>& tinv = tinv_stack_[next_level];
    for (Point p : undo_) {
      if (part[tinv[static_cast<Point>(fwd_[p])]] != part[p]) return false;
    }
    return true;
  }

  bool leaf(int deviation, int& verdict) {
    const std::vector<Point>& x = t_stack_[nlevels_];
    for (Point p = 0; p < n_; ++p) {
      if (x[g_[p]] != h_[x[p]]) return false;
    }
    if (!subgroup_mode_) {
      found_ = Perm(std::vector<Point>(x));
      verdict = kStop;
      return true;
    }
    Perm elem{std::vector<Point>(x)};
    if (!k_chain_->contains(elem)) {
      k_gens_.push_back(std::move(elem));
      rebuild_k();
    }
    // Everything else in the subtree rooted at the first deviation lies in
    // K times this element.
    verdict = deviation >= 0 ? deviation : kKeepGoing;
    return true;
  }

  int dfs(std::size_t level, int deviation) {
    if (level == nlevels_) {
      int verdict = kKeepGoing;
      leaf(deviation, verdict);
      return verdict;
    }
    const StabilizerChain::Level& lv = chain_.levels()[level];
    const Point base_pt = lv.base_point;
    const std::vector<Point>& t = t_stack_[level];
    const std::vector<Point>& tinv = tinv_stack_[level];

    const std::int32_t forced = fwd_[base_pt];
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point delta, gamma;
      if (forced >= 0) {
        if (i > 0) break;
        gamma = static_cast<Point>(forced);
        delta = tinv[gamma];
        if (lv.orbit_pos[delta] < 0) return kKeepGoing;
      } else {
        delta = lv.orbit[i];
        gamma = t[delta];
        if (bwd_[gamma] >= 0) continue;
      }
      charge_node();

      int child_dev = deviation;
      if (deviation == kNoDeviation && gamma != base_pt) {
        // First deviation: a freely chosen image need only be considered when
        // minimal in its orbit under the K-stabilizer of the earlier base
        // points. Forced images carry propagated constraints and are exempt.
        if (subgroup_mode_ && forced < 0 && k_chain_->point_orbit_min(level)[gamma] != gamma)
          continue;
        child_dev = static_cast<int>(level);
      }

      const std::size_t mark = undo_.size();
      std::size_t pos = forced >= 0 ? static_cast<std::size_t>(lv.orbit_pos[delta]) : i;
      if (try_assign(base_pt, gamma)) {
        detail::compose_into(t_stack_[level + 1], lv.transversal[pos].images(), t);
        detail::compose_into(tinv_stack_[level + 1], tinv, lv.transversal_inv[pos].images());
        if (orbits_compatible(level + 1)) {
          int verdict = dfs(level + 1, child_dev);
          if (verdict == kStop) {
            undo_to(mark);
            return kStop;
          }
          if (verdict >= 0 && verdict < static_cast<int>(level)) {
            undo_to(mark);
            return verdict;
          }
          // verdict == level: abandon remaining candidates of that subtree and
          // fall through to the next candidate here.
        }
      }
      undo_to(mark);
    }
    return kKeepGoing;
  }

  const StabilizerChain& chain_;
  const std::vector<Point>& g_;
  const std::vector<Point>& h_;
  const std::size_t n_;
  const std::size_t nlevels_;
  SearchBudget budget_;
  bool subgroup_mode_;

  std::vector<std::int32_t> fwd_, bwd_;
  std::vector<Point> undo_;
  std::vector<std::vector<Point>> t_stack_, tinv_stack_;
  std::optional<Perm> found_;

  std::vector<Perm> k_gens_;
  std::unique_ptr<StabilizerChain> k_chain_;

  std::uint64_t nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
};

bool commutes_with_group(const StabilizerChain& chain, const Perm& g) {
  for (const Perm& s : chain.strong_generators()) {
    if (!(g * s == s * g)) return false;
  }
  return true;
}

}  // namespace

StabilizerChain centralizer(const StabilizerChain& chain, const Perm& g,
                            const SearchBudget& budget) {
  if (g.degree() != chain.degree())
    throw std::invalid_argument("degree mismatch in centralizer");
  if (commutes_with_group(chain, g)) return chain;

  ConjugacySearch search(chain, g, g, budget, /*subgroup_mode=*/true);
  StabilizerChain result = search.find_group();
  for (const Perm& k : result.group().generators) {
    if (!(k * g == g * k)) throw std::logic_error("centralizer generator does not commute");
  }
  return result;
}

std::optional<Perm> conjugating_element(const StabilizerChain& chain, const Perm& g,
                                        const Perm& h, const SearchBudget& budget) {
  if (g.degree() != chain.degree() || h.degree() != chain.degree())
    throw std::invalid_argument("degree mismatch in conjugating_element");
  if (g == h) return Perm(chain.degree());
  if (cycle_type(g) != cycle_type(h)) return std::nullopt;

  ConjugacySearch search(chain, g, h, budget, /*subgroup_mode=*/false);
  std::optional<Perm> x = search.find_one();
  if (x && !(conjugate(g, *x) == h)) throw std::logic_error("conjugating element failed verification");
  return x;
}

}  // namespace cgt
