// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mustafin/apartment.hpp"
#include "mustafin/errors.hpp"
#include "mustafin/hull.hpp"
#include "mustafin/linked_graph.hpp"
#include "mustafin/multidegree.hpp"
#include "mustafin/oracles.hpp"
#include "mustafin/special_fiber.hpp"

using namespace mustafin;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string tag(const Configuration& c) {
  std::string s = "d=" + std::to_string(c.dim()) + " ";
  for (const auto& p : c.points()) s += p.to_string();
  return s;
}

struct Suite {
  std::vector<Configuration> general;     // 200 in general position
  std::vector<Configuration> degenerate;  // 100 not in general position
};

// d in {3,4}, n in {2,3,4}, coordinates in [-6,6].
Suite build_suite(std::uint64_t seed) {
  Suite s;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_d(3, 4), pick_n(2, 4);
  while (s.general.size() < 200 || s.degenerate.size() < 100) {
    const auto d = static_cast<std::size_t>(pick_d(rng));
    const auto n = static_cast<std::size_t>(pick_n(rng));
    auto c = oracle::random_configuration(rng, d, n, -6, 6);
    if (is_general_position(c)) {
      if (s.general.size() < 200) s.general.push_back(std::move(c));
    } else if (s.degenerate.size() < 100) {
      s.degenerate.push_back(std::move(c));
    }
  }
  return s;
}

// Degenerate configurations drawn from [-6,6] are rare; mix in some from a
// narrow range so the non-general-position half is not biased to one shape.
void add_narrow_degenerates(Suite& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_d(3, 4), pick_n(2, 4);
  std::size_t replaced = 0;
  while (replaced < 50) {
    auto c = oracle::random_configuration(rng, static_cast<std::size_t>(pick_d(rng)),
                                          static_cast<std::size_t>(pick_n(rng)), -1, 1);
    if (is_general_position(c)) continue;
    s.degenerate[replaced++] = std::move(c);
  }
}

using Profile = std::vector<std::size_t>;

Outcome criterion_collinear_chain() {
  Outcome o;
  const auto c = Configuration::from_raw(3, {{0, -1, -2}, {0, -2, -4}, {0, -3, -6}});
  const auto descriptors = classify(c);
  std::set<Profile> profiles;
  std::size_t components = 0;
  for (const auto& desc : descriptors) {
    if (!desc.is_component) continue;
    ++components;
    profiles.insert(desc.factor_dims);
    // multidegree value 1 at the profile tuple, 0 at every other tuple
    for (const auto& m : compositions(3, 2)) {
      const BigInt want = desc.multidegrees.tuples.count(m) ? 1 : 0;
      o.expect(multidegree_coefficient(desc.multidegrees, m) == want,
               "multidegree value at " + desc.vertex.to_string());
    }
    o.expect(desc.multidegrees.tuples == std::set<Tuple>{desc.factor_dims},
             "M(p) differs from factor profile at " + desc.vertex.to_string());
  }
  o.expect(components == 6, "component count " + std::to_string(components));
  const std::set<Profile> want{{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                               {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  o.expect(profiles == want, "factor dimension profiles differ");
  return o;
}

Outcome criterion_degenerate_pair() {
  Outcome o;
  const auto c = Configuration::from_raw(3, {{0, 0, 0}, {0, 1, 1}});
  std::set<std::set<Tuple>> sets;
  for (const auto& desc : classify(c))
    if (desc.is_component) sets.insert(desc.multidegrees.tuples);
  o.expect(sets.size() == 2, "component count " + std::to_string(sets.size()));
  const std::set<std::set<Tuple>> want{{{2, 0}}, {{1, 1}, {0, 2}}};
  o.expect(sets == want, "multidegree sets differ");
  return o;
}

Outcome criterion_count_law(const Suite& s) {
  Outcome o;
  for (const auto& c : s.general) {
    const auto counts = component_counts(c);
    const auto full = max_component_count(c.size(), c.dim());
    o.expect(counts.total == full, "total count for " + tag(c));
    o.expect(counts.secondary == full - c.size(), "secondary count for " + tag(c));
  }
  return o;
}

Outcome criterion_partition(const Suite& s) {
  Outcome o;
  auto run = [&](const Configuration& c) {
    std::map<Tuple, std::size_t> claims;
    for (const auto& desc : classify(c)) {
      if (!desc.is_component) continue;
      for (const auto& m : desc.multidegrees.tuples) ++claims[m];
    }
    const auto all = compositions(c.size(), c.dim() - 1);
    bool exact = claims.size() == all.size();
    for (const auto& m : all) exact = exact && claims.count(m) && claims.at(m) == 1;
    o.expect(exact, "partition for " + tag(c));
  };
  for (const auto& c : s.general) run(c);
  for (const auto& c : s.degenerate) run(c);
  return o;
}

Outcome criterion_oracles(double& elapsed) {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> pick_d(2, 4), pick_n(1, 4);
  // hull membership, coordinates within a window of width 5
  for (int k = 0; k < 200; ++k) {
    const auto c = oracle::random_configuration(rng, static_cast<std::size_t>(pick_d(rng)),
                                                static_cast<std::size_t>(pick_n(rng)), 0, 5);
    const auto brute = oracle::hull_by_combinations(c);
    bool same = lattice_points(c).points == brute;
    for (const auto& x : oracle::box_points(c)) same = same && contains(c, x) == brute.count(x);
    o.expect(same, "membership for " + tag(c));
  }
  // determinant, r = 1..6
  for (int k = 0; k < 200; ++k) {
    const std::size_t r = 1 + static_cast<std::size_t>(k % 6);
    const auto m = oracle::random_matrix(rng, r, -4, 4);
    const auto a = tropical_determinant(m);
    const auto b = oracle::determinant_by_permutations(m);
    o.expect(a.value == b.value && a.optimal_count == b.optimal_count,
             "determinant r=" + std::to_string(r));
  }
  // locate_by_multidegree against the exhaustive scan, every composition
  for (int k = 0; k < 200; ++k) {
    const auto c = oracle::random_configuration(rng, static_cast<std::size_t>(pick_d(rng)),
                                                static_cast<std::size_t>(pick_n(rng)), -3, 3);
    bool same = true;
    for (const auto& m : compositions(c.size(), c.dim() - 1))
      same = same && locate_by_multidegree(c, m) == oracle::signature_scan(c, m);
    o.expect(same, "locate for " + tag(c));
  }
  elapsed = seconds_since(t0);
  o.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

// Number of connected pieces of the tie sets J_i, i in mask, where two
// sets are linked when they share a coordinate.
std::size_t tie_components(const std::vector<std::uint64_t>& ties, std::uint32_t mask) {
  std::vector<std::uint64_t> pieces;
  for (std::size_t i = 0; i < ties.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    std::uint64_t merged = ties[i];
    std::vector<std::uint64_t> rest;
    for (auto p : pieces) {
      if (p & merged) {
        merged |= p;
      } else {
        rest.push_back(p);
      }
    }
    rest.push_back(merged);
    pieces = std::move(rest);
  }
  return pieces.size();
}

struct IdentityTally {
  std::size_t literal_checks = 0, literal_failures = 0;
  std::size_t full_set_checks = 0, full_set_failures = 0;
  std::size_t connected_checks = 0, connected_failures = 0;
};

// The stated identity d_I = d - 1 - sum_{i in I} C(v)_i, checked for every
// nonempty I. Alongside it, tally the full index set alone and the
// connectivity form d_I = d - sum_{i in I} C(v)_i - (pieces of {J_i}).
Outcome criterion_lemma_identities(const std::vector<Configuration>& general,
                                   const std::vector<Configuration>& degenerate,
                                   IdentityTally& tally) {
  Outcome o;
  auto run = [&](const Configuration& c, bool in_general_position) {
    const std::size_t d = c.dim();
    const std::uint32_t full = (1u << c.size()) - 1;
    for (const auto& desc : classify(c)) {
      const auto sig = skeleton_signature(c, desc.vertex);
      for (std::size_t i = 0; i < c.size(); ++i) {
        o.expect(desc.profile.kernels[i].dim() + 1 + sig.codims[i] == d,
                 "kernel dimension at " + desc.vertex.to_string() + " in " + tag(c));
      }
      if (!in_general_position || !desc.is_component) continue;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (mask >> i & 1) sum += sig.codims[i];
        const bool literal = sum + desc.table.at(mask) + 1 == d;
        o.expect(literal, "d_I for I=" + std::to_string(mask) + " at " +
                              desc.vertex.to_string() + " in " + tag(c));
        ++tally.literal_checks;
        tally.literal_failures += !literal;
        if (mask == full) {
          ++tally.full_set_checks;
          tally.full_set_failures += !literal;
        }
        ++tally.connected_checks;
        tally.connected_failures +=
            sum + desc.table.at(mask) + tie_components(desc.profile.argmins, mask) != d;
      }
    }
  };
  for (const auto& c : general) run(c, true);
  for (const auto& c : degenerate) run(c, false);
  return o;
}

Outcome criterion_linked_graph(const Suite& s) {
  Outcome o;
  auto run = [&](const Configuration& c) {
    const auto graph = build_graph(c);
    for (const auto& desc : classify(c)) {
      const auto maps = simple_root_maps(c, desc.vertex);
      for (std::size_t i = 0; i < c.size(); ++i) {
        o.expect(maps[i].support == desc.profile.argmins[i],
                 "root map at " + desc.vertex.to_string() + " in " + tag(c));
      }
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b) continue;
        const auto path = minimal_path(c[a], c[b]);
        o.expect(exactness_check(graph, path).all(),
                 "exactness on " + c[a].to_string() + " -> " + c[b].to_string());
      }
    }
  };
  for (const auto& c : s.general) run(c);
  for (const auto& c : s.degenerate) run(c);
  return o;
}

Outcome criterion_local_model() {
  Outcome o;
  for (std::size_t d = 3; d <= 5; ++d) {
    const auto c = local_model_chain(d);
    const auto counts = component_counts(c);
    o.expect(counts.total == d, "component count for d=" + std::to_string(d));
    o.expect(counts.primary == d && counts.secondary == 0,
             "primary count for d=" + std::to_string(d));
    o.expect(is_convex_configuration(c), "convexity for d=" + std::to_string(d));
  }
  return o;
}

Outcome criterion_hilbert(const Suite& s) {
  Outcome o;
  auto run = [&](const Configuration& c) {
    const std::size_t n = c.size();
    for (const auto& desc : classify(c)) {
      if (!desc.is_component) continue;
      const auto& mset = desc.multidegrees;
      o.expect(hilbert_function(mset, Tuple(n, 0)) == 1,
               "H(0) at " + desc.vertex.to_string() + " in " + tag(c));
      if (mset.tuples.size() != 1) continue;
      const Tuple& t = *mset.tuples.begin();
      Tuple u(n, 0);
      while (true) {
        BigInt want = 1;
        for (std::size_t i = 0; i < n; ++i) want *= binomial(u[i] + t[i], t[i]);
        o.expect(hilbert_function(mset, u) == want,
                 "singleton factorization at " + desc.vertex.to_string());
        std::size_t i = 0;
        while (i < n && u[i] == 4) u[i++] = 0;
        if (i == n) break;
        ++u[i];
      }
    }
  };
  for (const auto& c : s.general) run(c);
  for (const auto& c : s.degenerate) run(c);
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const Outcome& o, const std::string& extra) {
    std::printf("[%s] criterion %d: %s (%zu checks%s%s)%s%s\n", o.ok ? "PASS" : "FAIL", id,
                name, o.cases, extra.empty() ? "" : ", ", extra.c_str(),
                o.ok ? "" : " first failure: ", o.detail.c_str());
    if (!o.ok) ++failed;
  };
  auto timed = [&](const std::function<Outcome()>& f, double& secs) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    secs = seconds_since(t0);
    return o;
  };

  double secs = 0;
  auto o1 = timed(criterion_collinear_chain, secs);
  o1.expect(secs < 1.0, "runtime");
  report(1, "three-point chain reproduction", o1, std::to_string(secs) + " s");

  report(2, "two-point degenerate pair reproduction", timed(criterion_degenerate_pair, secs), "");

  Suite suite = build_suite(12345);
  add_narrow_degenerates(suite, 54321);

  report(3, "count law on 200 general-position configurations",
         timed([&] { return criterion_count_law(suite); }, secs), "");
  report(4, "multidegree partition on 300 configurations",
         timed([&] { return criterion_partition(suite); }, secs), "");
  double oracle_secs = 0;
  auto o5 = timed([&] { return criterion_oracles(oracle_secs); }, secs);
  report(5, "oracle equivalences", o5, std::to_string(oracle_secs) + " s");
  {
    IdentityTally chain, random;
    const auto o6 = timed(
        [&] {
          const auto chain_config =
              Configuration::from_raw(3, {{0, -1, -2}, {0, -2, -4}, {0, -3, -6}});
          criterion_lemma_identities({chain_config}, {}, chain);
          return criterion_lemma_identities(suite.general, suite.degenerate, random);
        },
        secs);
    report(6, "kernel and intersection dimension identities", o6, "");
    std::printf(
        "    note: stated d_I identity fails %zu of %zu subset checks on the suite and %zu of "
        "%zu on the three-point chain;\n"
        "          it holds for the full index set (%zu failures in %zu) and in the form\n"
        "          d_I = d - sum C(v)_i - #pieces{J_i} (%zu failures in %zu)\n",
        random.literal_failures, random.literal_checks, chain.literal_failures,
        chain.literal_checks, random.full_set_failures, random.full_set_checks,
        random.connected_failures, random.connected_checks);
  }
  report(7, "root maps and chain exactness",
         timed([&] { return criterion_linked_graph(suite); }, secs), "");
  report(8, "local model chains d=3,4,5", timed(criterion_local_model, secs), "");
  report(9, "Hilbert normalization and singleton factorization",
         timed([&] { return criterion_hilbert(suite); }, secs), "");

  std::printf("%s: %d of 9 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
