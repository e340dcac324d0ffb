#include "cgt/classes.hpp"

#include <omp.h>

#include <algorithm>
#include <cstring>
#include <deque>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

ClassFingerprint fingerprint_of(const Perm& p) {
  ClassFingerprint f;
  f.order = element_order(p);
  f.ct1 = cycle_type(p);
  Perm p2 = p * p;
  f.ct2 = cycle_type(p2);
  f.ct3 = cycle_type(p2 * p);
  return f;
}

std::size_t FingerprintHash::operator()(const ClassFingerprint& f) const {
  std::size_t h = f.order * 0x9E3779B97F4A7C15ULL;
  auto mix = [&h](const CycleType& ct) {
    for (std::uint32_t len : ct) {
      h ^= len + 0x9E3779B9 + (h << 6) + (h >> 2);
    }
    h ^= 0xFF;
  };
  mix(f.ct1);
  mix(f.ct2);
  mix(f.ct3);
  return h;
}

ClassInventory::ClassInventory(BigUint group_order)
    : group_order_(std::move(group_order)), covered_(0) {}

const std::vector<std::size_t>* ClassInventory::bucket(const ClassFingerprint& f) const {
  auto it = buckets_.find(f);
  return it == buckets_.end() ? nullptr : &it->second;
}

std::size_t ClassInventory::add(ConjugacyClass cls) {
  if (cls.size * cls.centralizer_order != group_order_)
    throw std::logic_error("class size times centralizer order must equal the group order");
  std::size_t idx = classes_.size();
  std::vector<std::size_t>& bucket = buckets_[cls.fingerprint];
  auto pos = bucket.begin();
  while (pos != bucket.end() && classes_[*pos].size >= cls.size) ++pos;
  bucket.insert(pos, idx);
  covered_ += cls.size;
  classes_.push_back(std::move(cls));
  orbit_cache_.emplace_back();
  hash_cache_.emplace_back();
  return idx;
}

namespace {

void pack_perm(std::vector<std::uint8_t>& out, const Perm& p) {
  for (Point x : p.images()) out.push_back(static_cast<std::uint8_t>(x));
}

std::uint64_t packed_hash(const Perm& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= static_cast<std::uint8_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

bool packed_lookup(const std::vector<std::uint8_t>& table, std::size_t record,
                   const std::uint8_t* key) {
  std::size_t lo = 0, hi = table.size() / record;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int cmp = std::memcmp(table.data() + mid * record, key, record);
    if (cmp == 0) return true;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

std::uint64_t primary_hash(const Point* img, std::size_t degree) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < degree; ++i) {
    h ^= static_cast<std::uint8_t>(img[i]);
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t secondary_hash(const Point* img, std::size_t degree) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::size_t i = 0; i < degree; ++i) {
    h ^= img[i] + 0x9E3779B97F4A7C15ULL + (h << 12) + (h >> 19);
    h *= 0xC2B2AE3D27D4EB4FULL;
  }
  return h;
}

// Exact-keys variant, the fallback if the two 64-bit hashes ever collide
// simultaneously during the fast closure.
std::optional<OrbitData> conjugation_orbit_exact(const StabilizerChain& chain, const Perm& p,
                                                 std::size_t cap) {
  const std::size_t degree = chain.degree();
  std::unordered_set<std::string> seen;
  std::deque<Perm> queue;
  auto key_of = [degree](const Perm& q) {
    std::string key(degree, '\0');
    for (std::size_t i = 0; i < degree; ++i) key[i] = static_cast<char>(q[static_cast<Point>(i)]);
    return key;
  };
  seen.insert(key_of(p));
  queue.push_back(p);
  while (!queue.empty()) {
    Perm current = std::move(queue.front());
    queue.pop_front();
    for (const Perm& s : chain.group().generators) {
      Perm next = conjugate(current, s);
      if (seen.insert(key_of(next)).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  OrbitData out;
  out.size = seen.size();
  if (out.size <= ClassInventory::kOrbitCacheCap) {
    std::vector<std::string> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    out.packed.reserve(keys.size() * degree);
    for (const std::string& key : keys) out.packed.insert(out.packed.end(), key.begin(), key.end());
  } else {
    out.hashes.reserve(out.size);
    for (const std::string& key : seen) {
      std::uint64_t h = 1469598103934665603ULL;
      for (char c : key) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ULL;
      }
      out.hashes.push_back(h);
    }
    std::sort(out.hashes.begin(), out.hashes.end());
  }
  return out;
}

}  // namespace

std::optional<OrbitData> conjugation_orbit(const StabilizerChain& chain, const Perm& p,
                                           std::size_t cap) {
  const std::size_t degree = chain.degree();
  if (degree > 255 || degree == 0) return std::nullopt;
  const std::vector<Perm>& gens = chain.group().generators;

  // Breadth-first closure under conjugation by the generators; elements are
  // identified by two independent 64-bit hashes and stored as flat image
  // tables, no per-element allocation.
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  seen.reserve(std::min(cap + 1, static_cast<std::size_t>(1) << 20));
  std::vector<Point> frontier;  // concatenated image tables
  frontier.reserve(std::min(cap + 1, static_cast<std::size_t>(1) << 16) * degree);
  std::vector<Point> scratch(degree);

  seen.emplace(primary_hash(p.images().data(), degree),
               secondary_hash(p.images().data(), degree));
  frontier.insert(frontier.end(), p.images().begin(), p.images().end());

  for (std::size_t head = 0; head * degree < frontier.size(); ++head) {
    for (const Perm& s : gens) {
      const std::vector<Point>& sx = s.images();
      const Point* cur = frontier.data() + head * degree;
      for (std::size_t i = 0; i < degree; ++i) scratch[sx[i]] = sx[cur[i]];
      std::uint64_t h1 = primary_hash(scratch.data(), degree);
      std::uint64_t h2 = secondary_hash(scratch.data(), degree);
      auto [it, inserted] = seen.emplace(h1, h2);
      if (!inserted) {
        if (it->second != h2) return conjugation_orbit_exact(chain, p, cap);
        continue;
      }
      if (seen.size() > cap) return std::nullopt;
      frontier.insert(frontier.end(), scratch.begin(), scratch.end());
    }
  }

  OrbitData out;
  out.size = seen.size();
  if (out.size <= ClassInventory::kOrbitCacheCap) {
    std::vector<std::uint32_t> order(out.size);
    for (std::uint32_t i = 0; i < out.size; ++i) order[i] = i;
    std::vector<std::uint8_t> packed(out.size * degree);
    for (std::size_t i = 0; i < out.size; ++i)
      for (std::size_t j = 0; j < degree; ++j)
        packed[i * degree + j] = static_cast<std::uint8_t>(frontier[i * degree + j]);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::memcmp(packed.data() + a * degree, packed.data() + b * degree, degree) < 0;
    });
    out.packed.reserve(packed.size());
    for (std::uint32_t i : order)
      out.packed.insert(out.packed.end(), packed.begin() + i * degree,
                        packed.begin() + (i + 1) * degree);
  } else {
    out.hashes.reserve(out.size);
    for (const auto& entry : seen) out.hashes.push_back(entry.first);
    std::sort(out.hashes.begin(), out.hashes.end());
  }
  return out;
}

void ClassInventory::attach_orbit(std::size_t idx, std::vector<std::uint8_t> packed_sorted) {
  if (packed_sorted.empty() ||
      BigUint(packed_sorted.size()) !=
          classes_[idx].size * BigUint(classes_[idx].representative.degree()))
    throw std::logic_error("orbit cache does not match the class size");
  orbit_cache_[idx] = std::move(packed_sorted);
}

void ClassInventory::attach_orbit_hashes(std::size_t idx, std::vector<std::uint64_t> hashes_sorted) {
  if (BigUint(hashes_sorted.size()) != classes_[idx].size)
    throw std::logic_error("orbit hash cache does not match the class size");
  hash_cache_[idx] = std::move(hashes_sorted);
}

bool ClassInventory::class_contains(std::size_t idx, const StabilizerChain& chain, const Perm& p,
                                    const SearchBudget& budget) const {
  const std::vector<std::uint8_t>& exact = orbit_cache_[idx];
  if (!exact.empty()) {
    std::vector<std::uint8_t> key;
    key.reserve(p.degree());
    pack_perm(key, p);
    return packed_lookup(exact, p.degree(), key.data());
  }
  const std::vector<std::uint64_t>& hashes = hash_cache_[idx];
  if (!hashes.empty()) {
    if (!std::binary_search(hashes.begin(), hashes.end(), packed_hash(p))) return false;
    // hash hit: confirm in the satisfiable direction
    return conjugating_element(chain, p, classes_[idx].representative, budget).has_value();
  }
  return conjugating_element(chain, p, classes_[idx].representative, budget).has_value();
}

void ClassInventory::warm_orbit_caches(const StabilizerChain& chain) {
  for (std::size_t idx = 0; idx < classes_.size(); ++idx) {
    if (orbit_cached(idx) || classes_[idx].size > BigUint(kHashCacheCap)) continue;
    auto orbit = conjugation_orbit(chain, classes_[idx].representative, kHashCacheCap);
    if (!orbit) continue;
    if (!orbit->packed.empty())
      attach_orbit(idx, std::move(orbit->packed));
    else
      attach_orbit_hashes(idx, std::move(orbit->hashes));
  }
}

std::optional<std::size_t> assign_class(const ClassInventory& inv, const StabilizerChain& chain,
                                        const Perm& p, const SearchBudget& budget) {
  ClassFingerprint f = fingerprint_of(p);
  const std::vector<std::size_t>* bucket = inv.bucket(f);
  if (!bucket) return std::nullopt;
  for (std::size_t idx : *bucket) {
    if (inv.class_contains(idx, chain, p, budget)) return idx;
  }
  return std::nullopt;
}

std::vector<std::optional<std::size_t>> assign_batch_serial(const ClassInventory& inv,
                                                            const StabilizerChain& chain,
                                                            std::span<const Perm> elems,
                                                            const SearchBudget& budget) {
  std::vector<std::optional<std::size_t>> out(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) out[i] = assign_class(inv, chain, elems[i], budget);
  return out;
}

std::vector<std::optional<std::size_t>> assign_batch_parallel(const ClassInventory& inv,
                                                              const StabilizerChain& chain,
                                                              std::span<const Perm> elems,
                                                              const SearchBudget& budget) {
  std::vector<std::optional<std::size_t>> out(elems.size());
  std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(elems.size()); ++i) {
    try {
      out[i] = assign_class(inv, chain, elems[i], budget);
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

namespace {

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k < n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

std::vector<std::uint64_t> all_exponents(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k < n; ++k) out.push_back(k);
  return out;
}

class Enumerator {
public:
  Enumerator(const StabilizerChain& chain, const std::vector<Perm>& central_elements,
             RandomStream& rng, const EnumerateOptions& opts)
      : chain_(chain), rng_(rng), opts_(opts), inv_(chain.order()) {
    stall_limit_ = opts.stall_limit ? opts.stall_limit
                                    : std::max<std::uint64_t>(1000000 / chain.degree(), 1000);
    for (const Perm& z : central_elements) {
      if (z.is_identity()) continue;
      for (const Perm& s : chain.strong_generators())
        if (!(z * s == s * z)) throw std::invalid_argument("claimed central element is not central");
      central_.push_back(z);
    }
  }

  ClassInventory run() {
    seed_central_classes();
    drain_closure();
    std::vector<Perm> batch;
    std::size_t batches = 0;
    while (!inv_.complete()) {
      if (opts_.diagnostics && ++batches % 64 == 0) {
        *opts_.diagnostics << "class search: " << inv_.classes().size() << " classes, covered "
                           << inv_.covered_mass().to_string() << " of "
                           << inv_.group_order().to_string() << ", " << batches * opts_.batch_size
                           << " draws" << std::endl;
      }
      batch.clear();
      for (std::size_t i = 0; i < opts_.batch_size; ++i) batch.push_back(chain_.random_element(rng_));
      const std::size_t snapshot = inv_.classes().size();
      auto results = opts_.parallel ? assign_batch_parallel(inv_, chain_, batch, opts_.budget)
                                    : assign_batch_serial(inv_, chain_, batch, opts_.budget);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (results[i]) {
          ++stall_;
          continue;
        }
        // The snapshot may have grown since the kernel ran; re-certify against
        // the classes added meanwhile before accepting a new one.
        if (matches_recent(batch[i], snapshot)) {
          ++stall_;
          continue;
        }
        insert_new(batch[i], std::nullopt);
        stall_ = 0;
      }
      drain_closure();
      if (stall_ >= stall_limit_ && !inv_.complete()) report_stall();
    }
    return std::move(inv_);
  }

private:
  void seed_central_classes() {
    insert_new(Perm(chain_.degree()), chain_.order());
    for (const Perm& z : central_) {
      if (!assign_class(inv_, chain_, z, opts_.budget)) insert_new(z, chain_.order());
    }
  }

  bool matches_recent(const Perm& p, std::size_t snapshot) {
    ClassFingerprint f = fingerprint_of(p);
    const auto* bucket = inv_.bucket(f);
    if (!bucket) return false;
    for (std::size_t idx : *bucket) {
      if (idx < snapshot) continue;
      if (inv_.class_contains(idx, chain_, p, opts_.budget)) return true;
    }
    return false;
  }

  // known_centralizer short-circuits the backtrack where the order is forced:
  // seeded central classes, and central multiples of an existing class
  // (z central makes C(z*g) = C(g) elementwise). Otherwise a capped orbit
  // enumeration is tried first; small and midsize classes get exact sizes by
  // orbit-stabilizer plus orbit data for later membership tests, only large
  // classes fall back to the centralizer backtrack.
  std::size_t insert_new(const Perm& p, std::optional<BigUint> known_centralizer) {
    ConjugacyClass cls;
    cls.representative = p;
    cls.fingerprint = fingerprint_of(p);
    std::optional<OrbitData> orbit;
    if (known_centralizer) {
      cls.centralizer_order = std::move(*known_centralizer);
      cls.size = inv_.group_order() / cls.centralizer_order;
      if (cls.size <= BigUint(ClassInventory::kHashCacheCap))
        orbit = conjugation_orbit(chain_, p, ClassInventory::kHashCacheCap);
    } else {
      orbit = conjugation_orbit(chain_, p, ClassInventory::kHashCacheCap);
      if (orbit) {
        cls.size = orbit->size;
        cls.centralizer_order = inv_.group_order() / cls.size;
      } else {
        cls.centralizer_order = centralizer(chain_, p, opts_.budget).order();
        cls.size = inv_.group_order() / cls.centralizer_order;
      }
    }
    std::size_t idx = inv_.add(std::move(cls));
    if (orbit) {
      if (!orbit->packed.empty())
        inv_.attach_orbit(idx, std::move(orbit->packed));
      else
        inv_.attach_orbit_hashes(idx, std::move(orbit->hashes));
    }
    if (is_small(idx)) smalls_.push_back(idx);
    closure_.push_back(idx);
    return idx;
  }

  void drain_closure() {
    while (!closure_.empty()) {
      std::size_t idx = closure_.front();
      closure_.pop_front();
      close_over(idx);
      if (inv_.complete()) {
        closure_.clear();
        return;
      }
    }
  }

  void close_over(std::size_t idx) {
    // Central multiples first: they inherit the centralizer order for free.
    for (const Perm& z : central_) {
      Perm q = z * inv_.classes()[idx].representative;
      if (!assign_class(inv_, chain_, q, opts_.budget)) {
        BigUint c = inv_.classes()[idx].centralizer_order;
        insert_new(q, std::move(c));
        stall_ = 0;
      }
      if (inv_.complete()) return;
    }
    // Power maps reach small classes that random draws practically never hit.
    const Perm rep = inv_.classes()[idx].representative;
    std::uint64_t ord = inv_.classes()[idx].fingerprint.order;
    auto exponents = boosted_ ? all_exponents(ord) : proper_divisors(ord);
    for (std::uint64_t k : exponents) {
      Perm q = power(rep, k);
      if (!assign_class(inv_, chain_, q, opts_.budget)) {
        insert_new(q, q.is_identity() ? std::optional<BigUint>(inv_.group_order()) : std::nullopt);
        stall_ = 0;
      }
      if (inv_.complete()) return;
    }
    // Escalation for a stalled tail: small classes multiply into small
    // classes, and pairwise products of their representatives walk the whole
    // near-central stratum that uniform draws hit with vanishing probability.
    if (boosted_ && is_small(idx)) {
      for (std::size_t j = 0; j < smalls_.size() && !inv_.complete(); ++j) {
        std::size_t other = smalls_[j];
        if (other == idx) continue;
        Perm q = rep * inv_.classes()[other].representative;
        if (!assign_class(inv_, chain_, q, opts_.budget)) {
          insert_new(q, q.is_identity() ? std::optional<BigUint>(inv_.group_order()) : std::nullopt);
          stall_ = 0;
        }
      }
    }
  }

  bool is_small(std::size_t idx) const {
    return inv_.classes()[idx].size <= BigUint(ClassInventory::kOrbitCacheCap);
  }

  void report_stall() {
    if (opts_.diagnostics) {
      BigUint residual = inv_.group_order() - inv_.covered_mass();
      *opts_.diagnostics << "class search stall: " << inv_.classes().size() << " classes over "
                         << inv_.bucket_count() << " fingerprints cover "
                         << inv_.covered_mass().to_string() << " of "
                         << inv_.group_order().to_string() << " (residual "
                         << residual.to_string() << ")";
      if (!boosted_) *opts_.diagnostics << "; escalating power-map closure";
      *opts_.diagnostics << std::endl;
    }
    if (!boosted_) {
      boosted_ = true;
      for (std::size_t i = 0; i < inv_.classes().size(); ++i) closure_.push_back(i);
      drain_closure();
    }
    stall_ = 0;
  }

  const StabilizerChain& chain_;
  RandomStream& rng_;
  EnumerateOptions opts_;
  ClassInventory inv_;
  std::vector<Perm> central_;
  std::deque<std::size_t> closure_;
  std::vector<std::size_t> smalls_;  // classes of at most kOrbitCacheCap elements
  std::uint64_t stall_ = 0;
  std::uint64_t stall_limit_;
  bool boosted_ = false;
};

}  // namespace

ClassInventory enumerate_classes(const StabilizerChain& chain,
                                 const std::vector<Perm>& central_elements, RandomStream& rng,
                                 const EnumerateOptions& opts) {
  return Enumerator(chain, central_elements, rng, opts).run();
}

std::vector<std::size_t> class_multiplication_by_central(const ClassInventory& inv,
                                                         const StabilizerChain& chain,
                                                         const Perm& t, bool parallel) {
  if (!inv.complete()) throw std::logic_error("t-pairing requires a complete inventory");
  std::vector<Perm> multiplied;
  multiplied.reserve(inv.classes().size());
  for (const ConjugacyClass& cls : inv.classes()) multiplied.push_back(t * cls.representative);
  auto assigned = parallel ? assign_batch_parallel(inv, chain, multiplied)
                           : assign_batch_serial(inv, chain, multiplied);
  std::vector<std::size_t> pairing(inv.classes().size());
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) throw std::logic_error("t-multiple escaped a complete inventory");
    pairing[i] = *assigned[i];
  }
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    if (pairing[pairing[i]] != i) throw std::logic_error("t-pairing is not an involution");
  }
  return pairing;
}

std::string cycle_type_to_string(const CycleType& ct) {
  std::string out;
  for (std::size_t i = 0; i < ct.size();) {
    std::size_t j = i;
    while (j < ct.size() && ct[j] == ct[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(ct[i]) + '^' + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "-" : out;
}

CycleType cycle_type_from_string(const std::string& text) {
  CycleType ct;
  if (text == "-") return ct;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto caret = part.find('^');
    if (caret == std::string::npos) throw ParseError("bad cycle type entry: " + part);
    std::uint32_t len = static_cast<std::uint32_t>(std::stoul(part.substr(0, caret)));
    std::uint32_t count = static_cast<std::uint32_t>(std::stoul(part.substr(caret + 1)));
    for (std::uint32_t i = 0; i < count; ++i) ct.push_back(len);
  }
  return ct;
}

void write_inventory(std::ostream& os, const ClassInventory& inv, std::size_t degree) {
  os << "inventory degree " << degree << " order " << inv.group_order().to_string() << " classes "
     << inv.classes().size() << "\n";
  for (const ConjugacyClass& cls : inv.classes()) {
    os << print_cycles(cls.representative) << ' ' << cls.centralizer_order.to_string() << ' '
       << cls.size.to_string() << ' ' << cls.fingerprint.order << ' '
       << cycle_type_to_string(cls.fingerprint.ct1) << ' '
       << cycle_type_to_string(cls.fingerprint.ct2) << ' '
       << cycle_type_to_string(cls.fingerprint.ct3) << "\n";
  }
}

ClassInventory read_inventory(std::istream& is, std::size_t& degree_out) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty inventory file", 1);
  std::stringstream header(line);
  std::string word, order_text;
  std::size_t degree = 0, count = 0;
  header >> word;
  if (word != "inventory") throw ParseError("missing inventory header", 1);
  header >> word >> degree >> word >> order_text >> word >> count;
  if (!header) throw ParseError("malformed inventory header", 1);
  degree_out = degree;

  ClassInventory inv(BigUint::from_decimal(order_text));
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string rep_text, cent_text, size_text, ct1_text, ct2_text, ct3_text;
    std::uint64_t order = 0;
    ss >> rep_text >> cent_text >> size_text >> order >> ct1_text >> ct2_text >> ct3_text;
    if (!ss) throw ParseError("malformed inventory line", lineno);
    ConjugacyClass cls;
    try {
      cls.representative = parse_cycles(rep_text, degree);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    cls.centralizer_order = BigUint::from_decimal(cent_text);
    cls.size = BigUint::from_decimal(size_text);
    cls.fingerprint = fingerprint_of(cls.representative);
    if (cls.fingerprint.order != order || cls.fingerprint.ct1 != cycle_type_from_string(ct1_text) ||
        cls.fingerprint.ct2 != cycle_type_from_string(ct2_text) ||
        cls.fingerprint.ct3 != cycle_type_from_string(ct3_text))
      throw ParseError("stored fingerprint does not match the representative", lineno);
    inv.add(std::move(cls));
  }
  if (inv.classes().size() != count)
    throw ParseError("inventory header count does not match the line count");
  return inv;
}

}  // namespace cgt
