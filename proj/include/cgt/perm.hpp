#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as an image table.
///
/// Composition is left-to-right everywhere in this library: (p * q) maps x to
/// q[p[x]], i.e. p acts first. Internal points are 0-based; all cycle-notation
/// text I/O is 1-based.
///
/// Permutations are immutable values; every operation is pure.
class Perm {
public:
  /// Identity on `degree` points.
  explicit Perm(std::size_t degree = 0);

  /// Takes ownership of an image table; throws std::invalid_argument if it is
  /// not a bijection of {0, ..., n-1}.
  explicit Perm(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Left-to-right composition: this first, then rhs.
  Perm operator*(const Perm& rhs) const;

  bool operator==(const Perm& rhs) const = default;
  /// Lexicographic order on image tables (shorter degree first).
  bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

/// x^-1 g x.
Perm conjugate(const Perm& g, const Perm& x);

/// p^k for k >= 0.
Perm power(const Perm& p, std::uint64_t k);

/// Multiset of cycle lengths including fixed points, sorted ascending;
/// entries sum to the degree. Invariant under conjugation.
using CycleType = std::vector<std::uint32_t>;

CycleType cycle_type(const Perm& p);

/// lcm of the cycle lengths.
std::uint64_t element_order(const Perm& p);

/// Parse whitespace-tolerant disjoint-cycle notation with 1-based points.
/// "()" or an empty string is the identity; unlisted points are fixed.
/// Throws ParseError on repeated points, out-of-range points or malformed
/// parentheses.
Perm parse_cycles(const std::string& text, std::size_t degree);

/// Canonical disjoint-cycle text, 1-based: cycles ordered by smallest moved
/// point, each cycle starting at its smallest point; identity prints "()".
/// Round-trips through parse_cycles.
std::string print_cycles(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

namespace detail {
/// dst[i] = q[p[i]]; dst must not alias p or q.
void compose_into(std::vector<Point>& dst, const std::vector<Point>& p,
                  const std::vector<Point>& q);
/// dst[p[i]] = i.
void invert_into(std::vector<Point>& dst, const std::vector<Point>& p);
}  // namespace detail

}  // namespace cgt
