#pragma once

// Code-level verification: minimum distance, MRD and perfect tests, exact
// covering density, and packing/covering certificates by enumeration.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symrank/counting.hpp"
#include "symrank/detail/parallel.hpp"
#include "symrank/errors.hpp"
#include "symrank/exact.hpp"
#include "symrank/matspace.hpp"
#include "symrank/sym_code.hpp"

namespace symrank {

inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 20;

struct Budgets {
  std::uint64_t codewords = kDefaultCodewordBudget;
  std::uint64_t ambient = kDefaultAmbientBudget;
  unsigned workers = 0;  // 0: hardware concurrency
};

inline std::uint64_t codeword_count_checked(const SymCode& c, std::uint64_t budget) {
  const std::uint64_t total = saturating_pow(c.q(), c.dimension());
  if (total > budget) throw BudgetExceeded("codewords of a dimension-" + std::to_string(c.dimension()) + " code",
                                           total, budget);
  return total;
}

/// Calls fn(index, upper, worker) for every codeword, index running over the
/// coefficient vectors in lexicographic order (basis[0]'s coefficient most
/// significant). Chunks of the index range run on separate workers.
template <class Fn>
void for_each_codeword(const SymCode& c, std::uint64_t budget, unsigned workers, Fn&& fn) {
  const std::uint64_t total = codeword_count_checked(c, budget);
  const gf::Field& f = *c.field();
  const std::size_t n = upper_size(c.order());
  const std::size_t k = c.basis().size();
  const std::uint64_t q = f.size();
  const bool prime_q = f.degree() == 1;  // packed order is integer order mod p

  detail::parallel_for(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    std::vector<Elem> coef(k, 0);
    std::vector<Elem> acc(n, 0);
    auto recompute = [&](std::uint64_t idx) {
      for (std::size_t j = k; j-- > 0;) {
        coef[j] = static_cast<Elem>(idx % q);
        idx /= q;
      }
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j = 0; j < k; ++j) {
        if (coef[j] == 0) continue;
        const auto b = c.basis()[j].upper();
        for (std::size_t e = 0; e < n; ++e) acc[e] = f.add(acc[e], f.mul(coef[j], b[e]));
      }
    };
    if (begin < end) recompute(begin);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      fn(idx, std::span<const Elem>(acc), worker);
      if (idx + 1 == end) break;
      if (!prime_q) {
        recompute(idx + 1);
        continue;
      }
      // Odometer step: each digit that moves (including a wrap to 0) gains +1.
      for (std::size_t j = k; j-- > 0;) {
        const auto b = c.basis()[j].upper();
        for (std::size_t e = 0; e < n; ++e) acc[e] = f.add(acc[e], b[e]);
        coef[j] = coef[j] + 1 == q ? 0 : coef[j] + 1;
        if (coef[j] != 0) break;
      }
    }
  });
}

inline std::vector<SymMatrix> codewords(const SymCode& c, std::uint64_t budget = kDefaultCodewordBudget) {
  std::vector<SymMatrix> out(static_cast<std::size_t>(codeword_count_checked(c, budget)), SymMatrix(c.field(), c.order()));
  for_each_codeword(c, budget, 1, [&](std::uint64_t idx, std::span<const Elem> upper, unsigned) {
    out[idx] = SymMatrix(c.field(), c.order(), std::vector<Elem>(upper.begin(), upper.end()));
  });
  return out;
}

/// Rank histogram of the codewords; weights[0] = 1 for the zero codeword.
inline std::vector<std::uint64_t> rank_distribution(const SymCode& c, const Budgets& budgets = {}) {
  const unsigned m = c.order();
  const unsigned w = detail::resolve_workers(budgets.workers, saturating_pow(c.q(), c.dimension()));
  std::vector<std::vector<std::uint64_t>> local(w, std::vector<std::uint64_t>(m + 1, 0));
  std::vector<std::vector<Elem>> scratch(w);
  for_each_codeword(c, budgets.codewords, w, [&](std::uint64_t, std::span<const Elem> upper, unsigned worker) {
    ++local[worker][rank_of_upper(*c.field(), m, upper, scratch[worker])];
  });
  std::vector<std::uint64_t> total(m + 1, 0);
  for (const auto& l : local) {
    for (unsigned i = 0; i <= m; ++i) total[i] += l[i];
  }
  return total;
}

/// Least rank of a nonzero codeword (= least pairwise distance, by linearity).
inline unsigned min_distance(const SymCode& c, const Budgets& budgets = {}) {
  if (c.dimension() == 0) throw std::domain_error("the zero code has no minimum distance");
  const auto dist = rank_distribution(c, budgets);
  for (unsigned t = 1; t < dist.size(); ++t) {
    if (dist[t] != 0) return t;
  }
  throw std::logic_error("nonzero code without nonzero codewords");
}

/// Pairwise minimum over all distinct codeword pairs. Quadratic; kept as a
/// cross-check for small codes.
inline unsigned min_distance_pairwise(const SymCode& c, std::uint64_t budget = std::uint64_t{1} << 10) {
  if (c.dimension() == 0) throw std::domain_error("the zero code has no minimum distance");
  const auto words = codewords(c, budget);
  unsigned best = std::numeric_limits<unsigned>::max();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, distance(words[i], words[j]));
  }
  return best;
}

inline bool is_mrd(const SymCode& c, const Budgets& budgets = {}) {
  return c.dimension() == counting::singleton_max_dim(c.order(), min_distance(c, budgets));
}

inline bool is_perfect_given(const SymCode& c, unsigned d) {
  const unsigned t = counting::packing_radius(d);
  return c.cardinality() * counting::ball_size(c.q(), c.order(), t) == counting::ambient_size(c.q(), c.order());
}

/// q^k * B_t == q^{(m^2+m)/2} exactly, t = floor((d(C)-1)/2).
inline bool is_perfect(const SymCode& c, const Budgets& budgets = {}) {
  return is_perfect_given(c, min_distance(c, budgets));
}

inline ExactRatio covering_density_given(const SymCode& c, unsigned d) {
  return counting::density_of(c.q(), c.order(), d, c.dimension());
}

inline ExactRatio covering_density(const SymCode& c, const Budgets& budgets = {}) {
  return covering_density_given(c, min_distance(c, budgets));
}

/// Radius used by the certificates: from the design distance if recorded,
/// otherwise from the measured one.
inline unsigned certificate_radius(const SymCode& c, const Budgets& budgets = {}) {
  if (auto d = c.design_distance()) return counting::packing_radius(*d);
  return counting::packing_radius(min_distance(c, budgets));
}

/// Radius-t balls around distinct codewords are disjoint iff every nonzero
/// codeword has rank >= 2t + 1.
inline bool verify_packing(const SymCode& c, unsigned t, const Budgets& budgets = {}) {
  if (c.dimension() == 0) return true;
  const auto dist = rank_distribution(c, budgets);
  for (unsigned r = 1; r < dist.size() && r < 2 * t + 1; ++r) {
    if (dist[r] != 0) return false;
  }
  return true;
}

inline bool verify_packing(const SymCode& c, const Budgets& budgets = {}) {
  return verify_packing(c, certificate_radius(c, budgets), budgets);
}

struct CoveringCertificate {
  bool covers_all = false;
  bool exactly_once = false;
  std::uint64_t ambient_size = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t max_multiplicity = 0;
};

/// Sweeps every matrix X of Sym_q(m) and counts codewords c with
/// rank(X - c) <= t. Ranks come from a table computed once over the ambient
/// space.
inline CoveringCertificate verify_covering(const SymCode& c, unsigned t, const Budgets& budgets = {}) {
  const SymSpace space(c.field(), c.order(), budgets.ambient);
  const gf::Field& f = *c.field();
  const std::size_t n = space.entries();

  std::vector<Elem> words;
  std::vector<std::uint64_t> word_index;
  const std::uint64_t count = codeword_count_checked(c, budgets.codewords);
  words.reserve(count * n);
  for_each_codeword(c, budgets.codewords, 1, [&](std::uint64_t, std::span<const Elem> upper, unsigned) {
    words.insert(words.end(), upper.begin(), upper.end());
    word_index.push_back(space.index_of(upper));
  });

  const auto ranks = rank_table(space, budgets.workers);
  const bool binary = f.size() == 2;
  const unsigned w = detail::resolve_workers(budgets.workers, space.size());
  struct Tally {
    std::uint64_t uncovered = 0;
    std::uint64_t max_multiplicity = 0;
    bool irregular = false;  // some multiplicity != 1
  };
  std::vector<Tally> local(w);

  detail::parallel_for(space.size(), w, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    std::vector<Elem> x(n);
    auto& out = local[worker];
    for (std::uint64_t xi = begin; xi < end; ++xi) {
      std::uint64_t mult = 0;
      if (binary) {
        for (std::uint64_t ci : word_index) mult += ranks[xi ^ ci] <= t;
      } else {
        space.decode(xi, x);
        for (std::uint64_t wi = 0; wi < count; ++wi) {
          const Elem* cw = words.data() + wi * n;
          std::uint64_t idx = 0;
          for (std::size_t e = 0; e < n; ++e) idx = idx * f.size() + f.sub(x[e], cw[e]);
          mult += ranks[idx] <= t;
        }
      }
      if (mult == 0) ++out.uncovered;
      out.max_multiplicity = std::max(out.max_multiplicity, mult);
      out.irregular = out.irregular || mult != 1;
    }
  });

  CoveringCertificate cert;
  cert.ambient_size = space.size();
  bool irregular = false;
  for (const auto& l : local) {
    cert.uncovered += l.uncovered;
    cert.max_multiplicity = std::max(cert.max_multiplicity, l.max_multiplicity);
    irregular = irregular || l.irregular;
  }
  cert.covers_all = cert.uncovered == 0;
  cert.exactly_once = !irregular;
  return cert;
}

inline CoveringCertificate verify_covering(const SymCode& c, const Budgets& budgets = {}) {
  return verify_covering(c, certificate_radius(c, budgets), budgets);
}

// ---------------------------------------------------------------------------
// Reports

enum class Tri { NotRun, True, False };

inline Tri to_tri(bool b) { return b ? Tri::True : Tri::False; }

inline nlohmann::json to_json(Tri t) {
  if (t == Tri::NotRun) return "not-run";
  return t == Tri::True;
}

struct BoundCheck {
  std::string name;
  bool satisfied = false;
  ExactRatio slack;  // bound minus value (upper bounds) or value minus bound (lower bounds)
};

struct VerificationReport {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t k = 0;
  std::optional<unsigned> design_distance;
  std::optional<unsigned> measured_distance;
  std::optional<bool> is_mrd;
  std::optional<bool> is_perfect;
  std::optional<ExactRatio> density;
  Tri packing_ok = Tri::NotRun;
  Tri covering_ok = Tri::NotRun;
  Tri covering_exact = Tri::NotRun;
  std::optional<unsigned> certificate_radius;
  std::vector<BoundCheck> bounds;
  std::vector<std::pair<std::string, std::string>> not_run;  // (check, reason)
  std::optional<std::uint64_t> seed;

  bool bounds_satisfied() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.satisfied; });
  }

  /// The covering sweep agrees with the perfect verdict: everything covered
  /// exactly once iff perfect. True when either side did not run.
  bool covering_consistent() const {
    if (covering_ok == Tri::NotRun || !is_perfect) return true;
    const bool partition = covering_ok == Tri::True && covering_exact == Tri::True;
    return partition == *is_perfect;
  }

  /// Every bound holds and every certificate that ran passed.
  bool passed() const { return bounds_satisfied() && packing_ok != Tri::False && covering_consistent(); }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& b : bounds) {
      if (!b.satisfied) out.push_back("bound violated: " + b.name);
    }
    if (packing_ok == Tri::False) {
      out.push_back("packing violation: a nonzero codeword has rank < " +
                    std::to_string(2 * certificate_radius.value_or(0) + 1));
    }
    if (!covering_consistent()) out.push_back("covering sweep disagrees with the perfect verdict");
    return out;
  }
};

inline const std::set<std::string>& known_checks() {
  static const std::set<std::string> names{"distance", "mrd", "perfect", "density",
                                           "bounds", "packing", "covering", "all"};
  return names;
}

namespace detail {

inline void add_bound(VerificationReport& r, std::string name, const ExactRatio& value, const ExactRatio& bound,
                      bool upper, bool strict = false) {
  const ExactRatio slack = upper ? bound - value : value - bound;
  const bool ok = strict ? slack > 0 : slack >= 0;
  r.bounds.push_back({std::move(name), ok, slack});
}

inline void evaluate_bounds(VerificationReport& r, const SymCode& c, unsigned d) {
  using namespace counting;
  const std::uint64_t q = c.q();
  const unsigned m = c.order();
  const unsigned t = packing_radius(d);
  const ExactCount bt = ball_size(q, m, t);
  add_bound(r, "singleton", ExactRatio(c.dimension()), ExactRatio(singleton_max_dim(m, d)), true);
  add_bound(r, "sphere_packing", ExactRatio(c.cardinality() * bt), ExactRatio(ambient_size(q, m)), true);
  const auto bb = ball_bounds(q, m, t);
  add_bound(r, "ball_size_lower", ExactRatio(bt), bb.lower, false);
  add_bound(r, "ball_size_upper", ExactRatio(bt), bb.upper, true);
  const ExactRatio density = covering_density_given(c, d);
  add_bound(r, "density_upper", density, density_upper_bound(q, m, d), true);
  if (r.is_mrd.value_or(false)) {
    const auto pair = mrd_density_bounds(q, m, d);
    add_bound(r, "mrd_density_lower", density, pair.lower, false);
    add_bound(r, "mrd_density_upper", density, pair.upper, true);
  }
}

}  // namespace detail

/// Runs the named checks ("all" expands to every check). A check whose
/// enumeration exceeds its budget is recorded as not-run; the others still
/// run. Bounds are evaluated whenever the minimum distance is known.
inline VerificationReport verify_report(const SymCode& c, std::set<std::string> checks,
                                        const Budgets& budgets = {}) {
  for (const auto& name : checks) {
    if (!known_checks().count(name)) throw std::invalid_argument("unknown check: " + name);
  }
  if (checks.empty() || checks.count("all")) checks = {"distance", "mrd", "perfect", "density", "bounds", "packing", "covering"};

  VerificationReport r;
  r.q = c.q();
  r.m = c.order();
  r.k = c.dimension();
  r.design_distance = c.design_distance();

  const bool needs_distance = checks.count("distance") || checks.count("mrd") || checks.count("perfect") ||
                              checks.count("density") || checks.count("bounds");
  if (needs_distance || !c.design_distance()) {
    try {
      r.measured_distance = min_distance(c, budgets);
    } catch (const BudgetExceeded& e) {
      r.not_run.emplace_back("distance", e.what());
    } catch (const std::domain_error& e) {
      r.not_run.emplace_back("distance", e.what());
    }
  }

  if (r.measured_distance) {
    const unsigned d = *r.measured_distance;
    r.is_mrd = c.dimension() == counting::singleton_max_dim(c.order(), d);
    r.is_perfect = is_perfect_given(c, d);
    r.density = covering_density_given(c, d);
    detail::evaluate_bounds(r, c, d);
  } else {
    for (const char* name : {"mrd", "perfect", "density", "bounds"}) {
      if (checks.count(name)) r.not_run.emplace_back(name, "minimum distance unavailable");
    }
  }

  if (checks.count("packing") || checks.count("covering")) {
    if (c.design_distance() || r.measured_distance) {
      r.certificate_radius = counting::packing_radius(c.design_distance().value_or(r.measured_distance.value_or(1)));
    }
  }
  if (checks.count("packing") && r.certificate_radius) {
    try {
      r.packing_ok = to_tri(verify_packing(c, *r.certificate_radius, budgets));
    } catch (const BudgetExceeded& e) {
      r.not_run.emplace_back("packing", e.what());
    }
  }
  if (checks.count("covering") && r.certificate_radius) {
    try {
      const auto cert = verify_covering(c, *r.certificate_radius, budgets);
      r.covering_ok = to_tri(cert.covers_all);
      r.covering_exact = to_tri(cert.exactly_once);
    } catch (const BudgetExceeded& e) {
      r.not_run.emplace_back("covering", e.what());
    }
  }
  return r;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  json j;
  j["q"] = r.q;
  j["m"] = r.m;
  j["k"] = r.k;
  j["d_design"] = r.design_distance ? json(*r.design_distance) : json(nullptr);
  j["d_measured"] = r.measured_distance ? json(*r.measured_distance) : json(nullptr);
  j["is_mrd"] = r.is_mrd ? json(*r.is_mrd) : json("not-run");
  j["is_perfect"] = r.is_perfect ? json(*r.is_perfect) : json("not-run");
  j["density"] = r.density ? to_json(*r.density) : json("not-run");
  j["packing_ok"] = to_json(r.packing_ok);
  j["covering_ok"] = to_json(r.covering_ok);
  j["covering_exact"] = to_json(r.covering_exact);
  j["certificate_radius"] = r.certificate_radius ? json(*r.certificate_radius) : json(nullptr);
  json bounds = json::array();
  for (const auto& b : r.bounds) bounds.push_back({{"name", b.name}, {"satisfied", b.satisfied}, {"slack", to_json(b.slack)}});
  j["bounds"] = bounds;
  json not_run = json::array();
  for (const auto& [check, reason] : r.not_run) not_run.push_back({{"check", check}, {"reason", reason}});
  j["not_run"] = not_run;
  j["seed"] = r.seed ? json(std::to_string(*r.seed)) : json(nullptr);
  j["passed"] = r.passed();
  j["failures"] = r.failures();
  return j;
}

}  // namespace symrank
