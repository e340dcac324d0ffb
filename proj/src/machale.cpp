#include "cgt/machale.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cgt/error.hpp"
#include "cgt/oracle.hpp"

namespace cgt {
namespace machale {

const char* const kGeneratorCycles[4] = {
    "(1,2)(43,44)",
    "(1,2)(21,22)",
    "(1,39,13,43,25)(2,40,14,44,26)(3,37,15,41,27)(4,38,16,42,28)"
    "(5,35,23,17,31)(6,36,24,18,32)(7,33,21,19,29)(8,34,22,20,30)",
    "(1,23,27,11,41)(2,24,28,12,42)(3,22,26,10,44,4,21,25,9,43)"
    "(5,16,20,40,32,6,15,19,39,31)(7,13,17,37,29)(8,14,18,38,30)",
};

PermGroup machale_group() {
  std::vector<Perm> gens;
  for (const char* text : kGeneratorCycles) gens.push_back(parse_cycles(text, kDegree));
  return PermGroup(kDegree, std::move(gens));
}

Perm locate_t(const StabilizerChain& chain, const SearchBudget& budget) {
  StabilizerChain z = center(chain, budget);
  if (!(z.order() == BigUint(2)))
    throw std::invalid_argument("center has order " + z.order().to_string() + ", expected 2");
  for (const Perm& g : z.group().generators) {
    if (g.is_identity()) continue;
    if (!power(g, 2).is_identity()) throw std::logic_error("central element of order 2 group is not an involution");
    return g;
  }
  throw std::logic_error("order-2 center without a nonidentity generator");
}

namespace {

// Classes that have to be witnessed: everything except t's class, or, without
// t, the classes consisting of commutators per the brute-force engine.
std::vector<bool> coverage_targets(const StabilizerChain& chain, const ClassInventory& inv,
                                   const std::optional<Perm>& t, std::size_t oracle_cap) {
  std::vector<bool> target(inv.classes().size(), false);
  if (t) {
    auto t_class = assign_class(inv, chain, *t);
    if (!t_class) throw std::logic_error("t escaped a complete inventory");
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = (i != *t_class);
    return target;
  }
  oracle::ElementTable table = oracle::enumerate_elements(chain.group(), oracle_cap);
  std::vector<Perm> comms = oracle::brute_commutator_set(table);
  std::unordered_set<Perm, PermHash> comm_set(comms.begin(), comms.end());
  for (std::size_t i = 0; i < target.size(); ++i)
    target[i] = comm_set.count(inv.classes()[i].representative) != 0;
  return target;
}

// A pair (a, b) with [a, b] = r exists exactly when some y is conjugate to
// r*y: from conjugate(y, a) = r*y it follows that [a, y^-1] = r. The scan
// walks y over the materialized orbits of small classes with a fingerprint
// prefilter; near-central targets, which uniform commutator draws practically
// never hit, have their valid y's in exactly that stratum.
std::optional<WitnessPair> targeted_witness(const StabilizerChain& chain,
                                            const ClassInventory& inv, const Perm& r,
                                            const SearchBudget& budget) {
  const std::size_t degree = chain.degree();
  for (std::size_t idx = 0; idx < inv.classes().size(); ++idx) {
    const std::vector<std::uint8_t>* orbit = inv.packed_orbit(idx);
    if (!orbit) continue;
    const ClassFingerprint& fp = inv.classes()[idx].fingerprint;
    for (std::size_t off = 0; off + degree <= orbit->size(); off += degree) {
      std::vector<Point> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = (*orbit)[off + i];
      Perm y(std::move(img));
      Perm q = r * y;
      if (fingerprint_of(q) != fp) continue;
      auto q_class = assign_class(inv, chain, q, budget);
      if (!q_class || *q_class != idx) continue;
      auto a = conjugating_element(chain, y, q, budget);
      if (!a) continue;
      WitnessPair pair{*a, y.inverse()};
      if (commutator(pair.a, pair.b) == r) return pair;
    }
  }
  return std::nullopt;
}

// Random-y fallback for the same identity, one draw serving every remaining
// class at once.
std::optional<std::pair<std::size_t, WitnessPair>> witness_from_y(
    const StabilizerChain& chain, const ClassInventory& inv, const Perm& y,
    const std::vector<std::size_t>& open_classes, const SearchBudget& budget) {
  ClassFingerprint fy = fingerprint_of(y);
  for (std::size_t cls : open_classes) {
    Perm q = inv.classes()[cls].representative * y;
    if (fingerprint_of(q) != fy) continue;
    auto yc = assign_class(inv, chain, y, budget);
    auto qc = assign_class(inv, chain, q, budget);
    if (!yc || !qc || *yc != *qc) continue;
    auto a = conjugating_element(chain, y, q, budget);
    if (!a) continue;
    WitnessPair pair{*a, y.inverse()};
    if (commutator(pair.a, pair.b) == inv.classes()[cls].representative)
      return std::make_pair(cls, std::move(pair));
  }
  return std::nullopt;
}

}  // namespace

WitnessList generate_witnesses(const StabilizerChain& chain, const ClassInventory& inv,
                               const std::optional<Perm>& t, RandomStream& rng,
                               const WitnessOptions& opts) {
  if (!inv.complete()) throw std::logic_error("witness generation requires a complete inventory");

  const std::size_t nclasses = inv.classes().size();
  std::vector<bool> target = coverage_targets(chain, inv, t, opts.oracle_cap);
  std::vector<bool> covered(nclasses, false);
  std::vector<std::optional<WitnessPair>> witness(nclasses);

  // Uncovered targets per fingerprint bucket; once a bucket drains, drawn
  // commutators with that fingerprint can be discarded unassigned.
  std::unordered_map<ClassFingerprint, std::size_t, FingerprintHash> open_in_bucket;
  std::size_t open = 0;
  for (std::size_t i = 0; i < nclasses; ++i) {
    if (target[i]) {
      ++open_in_bucket[inv.classes()[i].fingerprint];
      ++open;
    }
  }

  auto cover = [&](std::size_t idx, WitnessPair pair) {
    if (covered[idx] || !target[idx]) return false;
    covered[idx] = true;
    witness[idx] = std::move(pair);
    --open_in_bucket[inv.classes()[idx].fingerprint];
    --open;
    return true;
  };

  // Fixed witness for the identity class.
  {
    Perm id(chain.degree());
    auto id_class = assign_class(inv, chain, id);
    if (id_class && target[*id_class]) cover(*id_class, {id, id});
  }

  const std::uint64_t stall_limit =
      opts.stall_limit ? opts.stall_limit : std::max<std::uint64_t>(2000000 / chain.degree(), 2000);
  std::uint64_t draws = 0, stall = 0;
  bool escalated = false;
  std::vector<WitnessPair> batch(opts.batch_size);
  std::vector<Perm> comms(opts.batch_size);
  std::vector<std::optional<std::size_t>> assigned(opts.batch_size);

  while (open > 0) {
    if (opts.max_draws && draws >= opts.max_draws) {
      for (std::size_t i = 0; i < nclasses; ++i) {
        if (target[i] && !covered[i])
          throw std::runtime_error("class " + std::to_string(i) + " (representative " +
                                   print_cycles(inv.classes()[i].representative) +
                                   ") appears commutator-free under a budget of " +
                                   std::to_string(draws) + " draws");
      }
    }
    for (std::size_t i = 0; i < opts.batch_size; ++i) {
      batch[i].a = chain.random_element(rng);
      batch[i].b = chain.random_element(rng);
    }
    draws += opts.batch_size;

    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic, 4) if (opts.parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(opts.batch_size); ++i) {
      try {
        comms[i] = commutator(batch[i].a, batch[i].b);
        ClassFingerprint f = fingerprint_of(comms[i]);
        auto it = open_in_bucket.find(f);
        if (it == open_in_bucket.end() || it->second == 0) {
          assigned[i] = std::nullopt;  // nothing left to win in this bucket
        } else {
          assigned[i] = assign_class(inv, chain, comms[i], opts.budget);
        }
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);

    bool progress = false;
    for (std::size_t i = 0; i < opts.batch_size && open > 0; ++i) {
      if (assigned[i] && cover(*assigned[i], batch[i])) progress = true;
    }

    // After the first stall, interleave single-element draws: y witnesses r
    // whenever y is conjugate to r*y, which catches near-central classes far
    // more often per draw than a joint pair hit.
    if (escalated && open > 0) {
      std::vector<std::size_t> open_classes;
      for (std::size_t i = 0; i < nclasses; ++i)
        if (target[i] && !covered[i]) open_classes.push_back(i);
      for (std::size_t i = 0; i < opts.batch_size && open > 0; ++i) {
        Perm y = chain.random_element(rng);
        ++draws;
        if (auto hit = witness_from_y(chain, inv, y, open_classes, opts.budget)) {
          if (cover(hit->first, std::move(hit->second))) progress = true;
        }
      }
    }

    stall = progress ? 0 : stall + opts.batch_size;
    if (stall >= stall_limit && open > 0) {
      if (opts.diagnostics) {
        *opts.diagnostics << "witness search stall after " << draws << " draws: " << open
                          << " classes still uncovered";
        for (std::size_t i = 0, listed = 0; i < nclasses && listed < 8; ++i) {
          if (target[i] && !covered[i]) {
            *opts.diagnostics << (listed ? ", " : " (") << i;
            ++listed;
          }
        }
        *opts.diagnostics << (open ? ")" : "") << std::endl;
      }
      if (!escalated) {
        // Deterministic sweep over the materialized small-class orbits first.
        escalated = true;
        for (std::size_t i = 0; i < nclasses && open > 0; ++i) {
          if (!target[i] || covered[i]) continue;
          if (auto pair =
                  targeted_witness(chain, inv, inv.classes()[i].representative, opts.budget)) {
            cover(i, std::move(*pair));
            if (opts.diagnostics)
              *opts.diagnostics << "targeted search witnessed class " << i << std::endl;
          }
        }
      }
      stall = 0;
    }
  }

  WitnessList out;
  for (std::size_t i = 0; i < nclasses; ++i) {
    if (witness[i]) out.push_back(std::move(*witness[i]));
  }
  return out;
}

CheckResult check_commutators(const StabilizerChain& chain, const ClassInventory& inv,
                              const WitnessList& witnesses, const std::optional<Perm>& t,
                              bool parallel, std::size_t oracle_cap) {
  CheckResult result;
  for (const WitnessPair& w : witnesses) {
    if (w.a.degree() != chain.degree() || w.b.degree() != chain.degree())
      throw std::invalid_argument("malformed witness: degree mismatch");
    if (!chain.contains(w.a) || !chain.contains(w.b))
      throw std::invalid_argument("malformed witness: pair element outside the group");
  }

  std::vector<Perm> comms;
  comms.reserve(witnesses.size());
  for (const WitnessPair& w : witnesses) comms.push_back(commutator(w.a, w.b));
  auto assigned = parallel ? assign_batch_parallel(inv, chain, comms)
                           : assign_batch_serial(inv, chain, comms);

  std::vector<bool> target = coverage_targets(chain, inv, t, oracle_cap);
  result.expected = static_cast<std::size_t>(std::count(target.begin(), target.end(), true));

  std::vector<bool> seen(inv.classes().size(), false);
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) {
      result.detail = "witness " + std::to_string(i) + " escaped the inventory";
      return result;
    }
    std::size_t cls = *assigned[i];
    if (!target[cls]) {
      result.detail = "witness " + std::to_string(i) + " lands in excluded class " +
                      std::to_string(cls);
      return result;
    }
    if (seen[cls]) {
      result.detail = "duplicate coverage of class " + std::to_string(cls) + " by witness " +
                      std::to_string(i);
      return result;
    }
    seen[cls] = true;
    ++result.covered;
  }
  if (result.covered != result.expected) {
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (target[i] && !seen[i]) {
        result.detail = "class " + std::to_string(i) + " (representative " +
                        print_cycles(inv.classes()[i].representative) + ") is not witnessed";
        break;
      }
    }
    return result;
  }
  result.pass = true;
  return result;
}

NoncommutatorCheck check_central_noncommutator(const StabilizerChain& chain,
                                               const ClassInventory& inv, const Perm& t,
                                               bool parallel) {
  std::vector<std::size_t> pairing = class_multiplication_by_central(inv, chain, t, parallel);
  NoncommutatorCheck out;
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    if (pairing[i] == i) {
      out.fixed_class = i;
      out.t_is_noncommutator = false;
      return out;
    }
  }
  out.t_is_noncommutator = true;
  return out;
}

CorollaryStep corollary_step(const StabilizerChain& g, const Perm& t) {
  CentralQuotientGroup quotient = central_quotient(g, t);
  CentralQuotientGroup::Element designated = quotient.canonical(t, Perm(g.degree()));
  return {std::move(quotient), std::move(designated)};
}

namespace {

class StageTimer {
public:
  explicit StageTimer(VerificationReport& report) : report_(report) {}

  template <typename F>
  bool stage(const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    StageResult result;
    result.name = name;
    try {
      result.detail = body();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = result.ok;
    report_.stages.push_back(std::move(result));
    if (!ok && report_.failed_stage.empty()) report_.failed_stage = name;
    return ok;
  }

private:
  VerificationReport& report_;
};

}  // namespace

PipelineResult run_pipeline(std::uint64_t seed, const PipelineOptions& opts) {
  PipelineResult result;
  VerificationReport& report = result.report;
  report.seed = seed;
  StageTimer timer(report);

  PermGroup group = opts.group ? *opts.group : machale_group();
  std::optional<StabilizerChain> chain;
  std::optional<StabilizerChain> center_chain;
  std::optional<Perm> t;
  RandomStream rng(seed);

  bool ok = timer.stage("build", [&] {
    chain = StabilizerChain::build(group, seed);
    report.group_order = chain->order();
    return "order " + report.group_order.to_string();
  });
  if (!ok) return result;

  ok = timer.stage("center", [&] {
    center_chain = center(*chain, opts.budget);
    report.center_order = center_chain->order();
    return "order " + report.center_order.to_string();
  });
  if (!ok) return result;

  ok = timer.stage("perfectness", [&]() -> std::string {
    report.perfect = is_perfect(*chain);
    if (!report.perfect) throw std::runtime_error("group is not perfect");
    return "perfect";
  });
  if (!ok) return result;

  ok = timer.stage("t", [&] {
    t = locate_t(*chain, opts.budget);
    report.t_cycles = print_cycles(*t);
    return report.t_cycles;
  });
  if (!ok) return result;

  std::vector<Perm> central_elements;
  ok = timer.stage("classes", [&] {
    if (center_chain->order() > BigUint(opts.central_cap))
      throw std::runtime_error("center too large to seed class enumeration");
    oracle::ElementTable zt = oracle::enumerate_elements(center_chain->group(), opts.central_cap);
    central_elements = zt.elements;
    EnumerateOptions eo;
    eo.parallel = opts.parallel;
    eo.diagnostics = opts.diagnostics;
    eo.budget = opts.budget;
    result.inventory = enumerate_classes(*chain, central_elements, rng, eo);
    report.class_count = result.inventory->classes().size();
    return std::to_string(report.class_count) + " classes";
  });
  if (!ok) return result;

  ok = timer.stage("witnesses", [&] {
    WitnessOptions wo;
    wo.parallel = opts.parallel;
    wo.diagnostics = opts.diagnostics;
    wo.budget = opts.budget;
    result.witnesses = generate_witnesses(*chain, *result.inventory, t, rng, wo);
    report.witnessed = result.witnesses.size();
    return std::to_string(report.witnessed) + " pairs";
  });
  if (!ok) return result;

  ok = timer.stage("check-commutators", [&]() -> std::string {
    CheckResult check =
        check_commutators(*chain, *result.inventory, result.witnesses, t, opts.parallel);
    if (!check.pass) throw std::runtime_error(check.detail);
    return std::to_string(check.covered) + " of " + std::to_string(check.expected) + " classes";
  });
  if (!ok) return result;

  ok = timer.stage("check-noncommutator", [&]() -> std::string {
    NoncommutatorCheck check =
        check_central_noncommutator(*chain, *result.inventory, *t, opts.parallel);
    report.t_noncommutator = check.t_is_noncommutator;
    if (!check.t_is_noncommutator)
      throw std::runtime_error("t stabilizes class " + std::to_string(*check.fixed_class));
    return "no fixed class";
  });
  if (!ok) return result;

  report.theorem_reproduced = report.group_order == BigUint(kExpectedOrder) &&
                              report.center_order == BigUint(2) && report.perfect &&
                              report.class_count == kExpectedClassCount &&
                              report.witnessed == kExpectedClassCount - 1 &&
                              report.t_noncommutator;
  return result;
}

std::string serialize_report(const VerificationReport& report) {
  std::ostringstream os;
  os << "machale-verification-report\n";
  os << "seed " << report.seed << "\n";
  os << "order " << report.group_order.to_string() << "\n";
  os << "centerOrder " << report.center_order.to_string() << "\n";
  os << "t " << (report.t_cycles.empty() ? "-" : report.t_cycles) << "\n";
  os << "perfect " << (report.perfect ? "true" : "false") << "\n";
  os << "classCount " << report.class_count << "\n";
  os << "witnessed " << report.witnessed << "\n";
  os << "tNonCommutator " << (report.t_noncommutator ? "true" : "false") << "\n";
  os << "theoremReproduced " << (report.theorem_reproduced ? "true" : "false") << "\n";
  os << "failedStage " << (report.failed_stage.empty() ? "-" : report.failed_stage) << "\n";
  return os.str();
}

void write_witnesses(std::ostream& os, const WitnessList& witnesses, std::size_t degree,
                     std::uint64_t seed) {
  os << "witnesses " << witnesses.size() << " degree " << degree << " seed " << seed << "\n";
  for (const WitnessPair& w : witnesses)
    os << print_cycles(w.a) << '\t' << print_cycles(w.b) << "\n";
}

WitnessList read_witnesses(std::istream& is, std::size_t& degree_out, std::uint64_t& seed_out) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty witness file", 1);
  std::stringstream header(line);
  std::string word;
  std::size_t count = 0;
  header >> word;
  if (word != "witnesses") throw ParseError("missing witness header", 1);
  header >> count >> word >> degree_out >> word >> seed_out;
  if (!header) throw ParseError("malformed witness header", 1);

  WitnessList out;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected tab-separated pair", lineno);
    try {
      out.push_back(WitnessPair{parse_cycles(line.substr(0, tab), degree_out),
                                parse_cycles(line.substr(tab + 1), degree_out)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (out.size() != count) throw ParseError("witness header count does not match the line count");
  return out;
}

}  // namespace machale
}  // namespace cgt
