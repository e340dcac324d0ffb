#include "cgt/groupops.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cgt {

std::size_t BlockSystem::degree() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::size_t BlockSystem::block_of(Point p) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Point q : blocks[i])
      if (q == p) return i;
  throw std::invalid_argument("point not covered by block system");
}

BlockSystem BlockSystem::consecutive(std::size_t degree, std::size_t block_size) {
  if (block_size == 0 || degree % block_size != 0)
    throw std::invalid_argument("block size must divide the degree");
  BlockSystem bs;
  for (std::size_t start = 0; start < degree; start += block_size) {
    std::vector<Point> block;
    for (std::size_t j = 0; j < block_size; ++j) block.push_back(static_cast<Point>(start + j));
    bs.blocks.push_back(std::move(block));
  }
  return bs;
}

WreathProduct wreath_imprimitive(unsigned base_order, const PermGroup& top) {
  if (base_order < 2) throw std::invalid_argument("base order must be at least 2");
  const std::size_t n = top.degree;
  const std::size_t degree = static_cast<std::size_t>(base_order) * n;

  std::vector<Perm> gens;
  // Cycle of the base group inside block 0.
  {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (unsigned j = 0; j < base_order; ++j) img[j] = (j + 1) % base_order;
    gens.emplace_back(std::move(img));
  }
  // Lifts of the top generators, moving blocks rigidly.
  for (const Perm& s : top.generators) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned j = 0; j < base_order; ++j)
        img[i * base_order + j] = static_cast<Point>(s[static_cast<Point>(i)] * base_order + j);
    gens.emplace_back(std::move(img));
  }

  WreathProduct out{PermGroup(degree, std::move(gens)),
                    BlockSystem::consecutive(degree, base_order)};
  return out;
}

PermGroup block_action(const PermGroup& g, const BlockSystem& blocks) {
  if (blocks.degree() != g.degree)
    throw std::invalid_argument("block system does not cover the domain");
  const std::size_t nblocks = blocks.blocks.size();

  std::vector<std::size_t> block_of(g.degree);
  for (std::size_t i = 0; i < nblocks; ++i)
    for (Point p : blocks.blocks[i]) block_of[p] = i;

  std::vector<Perm> images;
  for (const Perm& s : g.generators) {
    std::vector<Point> img(nblocks);
    for (std::size_t i = 0; i < nblocks; ++i) {
      const auto& block = blocks.blocks[i];
      std::size_t target = block_of[s[block[0]]];
      for (Point p : block) {
        if (block_of[s[p]] != target)
          throw std::invalid_argument("generator splits a block: invalid block system");
      }
      img[i] = static_cast<Point>(target);
    }
    images.emplace_back(std::move(img));
  }
  return PermGroup(nblocks, std::move(images));
}

StabilizerChain normal_closure(const StabilizerChain& g, const std::vector<Perm>& seed) {
  for (const Perm& s : seed) {
    if (!g.contains(s)) throw std::invalid_argument("seed element outside the group");
  }
  std::vector<Perm> closure_gens;
  std::deque<Perm> work;
  for (const Perm& s : seed) {
    if (!s.is_identity()) {
      closure_gens.push_back(s);
      work.push_back(s);
    }
  }
  StabilizerChain chain = StabilizerChain::build(
      closure_gens.empty() ? PermGroup::trivial(g.degree()) : PermGroup(g.degree(), closure_gens));

  while (!work.empty()) {
    Perm current = std::move(work.front());
    work.pop_front();
    for (const Perm& s : g.group().generators) {
      Perm conj = conjugate(current, s);
      if (!chain.contains(conj)) {
        closure_gens.push_back(conj);
        work.push_back(std::move(conj));
        chain = StabilizerChain::build(PermGroup(g.degree(), closure_gens));
      }
    }
  }
  return chain;
}

StabilizerChain derived_subgroup(const StabilizerChain& g) {
  const auto& gens = g.group().generators;
  std::vector<Perm> seed;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      seed.push_back(commutator(gens[i], gens[j]));
      seed.push_back(commutator(gens[j], gens[i]));
    }
  }
  return normal_closure(g, seed);
}

StabilizerChain center(const StabilizerChain& g, const SearchBudget& budget) {
  StabilizerChain current = g;
  for (const Perm& s : g.group().generators) {
    current = centralizer(current, s, budget);
  }
  return current;
}

bool is_perfect(const StabilizerChain& g) { return derived_subgroup(g).order() == g.order(); }

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree + b.degree;
  std::vector<Perm> gens;
  for (const Perm& s : a.generators) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < a.degree; ++i) img[i] = s[static_cast<Point>(i)];
    for (std::size_t i = a.degree; i < degree; ++i) img[i] = static_cast<Point>(i);
    gens.emplace_back(std::move(img));
  }
  for (const Perm& s : b.generators) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < a.degree; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b.degree; ++i)
      img[a.degree + i] = static_cast<Point>(a.degree + s[static_cast<Point>(i)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(degree, std::move(gens));
}

namespace {

StabilizerChain build_product_chain(const StabilizerChain& base) {
  return StabilizerChain::build(direct_product(base.group(), base.group()));
}

}  // namespace

CentralQuotientGroup::CentralQuotientGroup(StabilizerChain base, Perm t)
    : base_(std::move(base)), product_(build_product_chain(base_)), t_(std::move(t)) {
  order_ = (base_.order() * base_.order()) / BigUint(2);
}

CentralQuotientGroup::Element CentralQuotientGroup::canonical(const Perm& x, const Perm& y) const {
  Perm xt = x * t_;
  Perm yt = y * t_;
  if (xt < x || (xt == x && yt < y)) return {std::move(xt), std::move(yt)};
  return {x, y};
}

CentralQuotientGroup::Element CentralQuotientGroup::identity() const {
  std::size_t n = base_.degree();
  return canonical(Perm(n), Perm(n));
}

CentralQuotientGroup::Element CentralQuotientGroup::multiply(const Element& a,
                                                             const Element& b) const {
  return canonical(a.first * b.first, a.second * b.second);
}

CentralQuotientGroup::Element CentralQuotientGroup::inverse(const Element& a) const {
  return canonical(a.first.inverse(), a.second.inverse());
}

CentralQuotientGroup central_quotient(const StabilizerChain& g, const Perm& t) {
  if (t.degree() != g.degree()) throw std::invalid_argument("degree mismatch in central_quotient");
  if (t.is_identity()) throw std::invalid_argument("t must not be the identity");
  if (!(power(t, 2).is_identity())) throw std::invalid_argument("t must be an involution");
  if (!g.contains(t)) throw std::invalid_argument("t must lie in the group");
  for (const Perm& s : g.group().generators)
    if (!(t * s == s * t)) throw std::invalid_argument("t must be central");
  return CentralQuotientGroup(g, t);
}

}  // namespace cgt
