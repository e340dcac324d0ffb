#include "cgt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cgt/error.hpp"

namespace cgt {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image table is not a bijection");
    seen[x] = true;
  }
}

bool Perm::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

namespace detail {

void compose_into(std::vector<Point>& dst, const std::vector<Point>& p,
                  const std::vector<Point>& q) {
  dst.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) dst[i] = q[p[i]];
}

void invert_into(std::vector<Point>& dst, const std::vector<Point>& p) {
  dst.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) dst[p[i]] = static_cast<Point>(i);
}

}  // namespace detail

Perm Perm::inverse() const {
  std::vector<Point> inv;
  detail::invert_into(inv, images_);
  Perm out;
  out.images_ = std::move(inv);
  return out;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
  Perm out;
  detail::compose_into(out.images_, images_, rhs.images_);
  return out;
}

Perm commutator(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in commutator");
  const auto& pa = a.images();
  const auto& pb = b.images();
  std::vector<Point> ia, ib;
  detail::invert_into(ia, pa);
  detail::invert_into(ib, pb);
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pb[pa[ib[ia[i]]]];
  return Perm(std::move(out));
}

Perm conjugate(const Perm& g, const Perm& x) {
  if (g.degree() != x.degree()) throw std::invalid_argument("degree mismatch in conjugation");
  const auto& pg = g.images();
  const auto& px = x.images();
  std::vector<Point> out(g.degree());
  // out[x[i]] = x[g[i]], i.e. out = x^-1 g x without materializing x^-1
  for (std::size_t i = 0; i < out.size(); ++i) out[px[i]] = px[pg[i]];
  return Perm(std::move(out));
}

Perm power(const Perm& p, std::uint64_t k) {
  Perm acc(p.degree());
  Perm sq = p;
  while (k) {
    if (k & 1) acc = acc * sq;
    k >>= 1;
    if (k) sq = sq * sq;
  }
  return acc;
}

CycleType cycle_type(const Perm& p) {
  CycleType type;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::uint64_t element_order(const Perm& p) {
  std::uint64_t order = 1;
  for (std::uint32_t len : cycle_type(p)) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

Perm parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!cycle.empty()) {
        if (text[pos] != ',') throw ParseError("expected ',' between cycle points");
        ++pos;
        skip_ws();
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected a point in cycle");
      unsigned long v = std::stoul(text.substr(start, pos - start));
      if (v < 1 || v > degree) throw ParseError("point " + std::to_string(v) + " out of range");
      Point pt = static_cast<Point>(v - 1);
      if (used[pt]) throw ParseError("repeated point " + std::to_string(v));
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    if (cycle.size() == 1) throw ParseError("cycle of length 1 is not allowed");
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) images[cycle[i]] = cycle[i + 1];
    if (cycle.size() >= 2) images[cycle.back()] = cycle.front();
    skip_ws();
  }
  return Perm(std::move(images));
}

std::string print_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image table
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cgt
