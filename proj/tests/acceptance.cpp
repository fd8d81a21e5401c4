// Copyright 2026 The Seaweed Index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Randomised criteria take --seed.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "laws.hpp"
#include "seaweed/seaweed.hpp"

namespace {

using namespace seaweed;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.size() < 2000) detail += (detail.empty() ? "" : "; ") + why;
  }
  void absorb(const std::string& name, const laws::Report& rep) {
    if (!rep.ok()) fail(name + ": " + rep.summary());
  }
};

constexpr Part kSeaweedOracleN = 11;
constexpr Part kParabolicOracleN = 18;
constexpr Part kSeaweedRoundTripN = 14;
constexpr Part kParabolicRoundTripN = 18;
constexpr Part kMinWindow = 15;

// Criterion 1: published polynomials from deficiency-pruned counts.
Outcome published_polynomials() {
  Outcome o;
  const auto reports = verify_published_polynomials();
  if (reports.size() != 9) o.fail("expected 9 cases, got " + std::to_string(reports.size()));
  std::size_t series = 0;
  for (const auto& r : reports) {
    if (!r.match()) o.fail(r.expected.name + " does not match");
    for (const auto& s : r.series) {
      ++series;
      if (!s.fit) {
        o.fail(r.expected.name + " unstable");
        continue;
      }
      const PolyFit& f = *s.fit;
      if (f.window_hi - f.window_lo + 1 < kMinWindow) o.fail(r.expected.name + " window below 15 values");
      if (f.window_hi - f.stable_from + 1 < kMinWindow) o.fail(r.expected.name + " stable tail below 15 values");
      if (f.degree != r.expected.t / 2 || f.coefficients.back() <= 0) o.fail(r.expected.name + " degree law");
      for (Part n = f.stable_from; n <= f.window_hi; ++n) {
        if (f(Rational(static_cast<long long>(n))) != Rational(s.counts[n - s.window_lo])) {
          o.fail(r.expected.name + " disagrees at n=" + std::to_string(n));
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(reports.size()) + " cases, " + std::to_string(series) + " series" : o.detail;
  return o;
}

struct Tables {
  std::vector<CountTable> brute;
};

// Criteria 2 and 3 share the brute-force tables.
Outcome oracle_equivalence(Tables& tables, std::size_t& bfs_runs) {
  Outcome o;
  const std::pair<TableKind, Part> runs[] = {{TableKind::seaweed, kSeaweedOracleN},
                                             {TableKind::parabolic_even, kParabolicOracleN},
                                             {TableKind::parabolic_odd, kParabolicOracleN}};
  std::uint64_t cells = 0;
  for (const auto& [kind, n_max] : runs) {
    CountTable brute = brute_table(kind, n_max);
    CountTable gen(kind, CountMethod::generated);
    try {
      gen = generated_table(kind, n_max);
      ++bfs_runs;
    } catch (const CollisionError& e) {
      o.fail(std::string("collision: ") + e.what());
    }
    if (!brute.same_counts(gen)) o.fail(to_string(kind) + " tables differ");
    cells += brute.entries().size();
    tables.brute.push_back(std::move(brute));
  }
  if (o.pass) o.detail = std::to_string(cells) + " nonzero (n,p) cells equal";
  return o;
}

Outcome emptiness(const Tables& tables) {
  Outcome o;
  std::uint64_t checked = 0;
  for (const auto& t : tables.brute) {
    for (const auto& [k, v] : t.entries()) {
      ++checked;
      if (v && k.second > max_parts(t.kind(), k.first)) {
        o.fail(to_string(t.kind()) + " nonzero at n=" + std::to_string(k.first) + " p=" + std::to_string(k.second));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " nonzero cells within bounds";
  return o;
}

// Criteria 4 and 5: round trip, complement, and collision-freedom.
Outcome round_trip(std::size_t& bfs_runs, std::uint64_t& duplicates) {
  Outcome o;
  std::uint64_t words = 0;
  try {
    std::unordered_set<BiComposition> seen;
    generate_frobenius(kSeaweedRoundTripN, [&](const GeneratedSeaweed& g) {
      ++words;
      if (!seen.insert(g.value).second) ++duplicates;
      const MaybeBiComposition v = evaluate(g.word, seed_bicomposition());
      if (v.is_null() || v.value() != g.value) o.fail("evaluate mismatch for " + to_string(g.word));
      auto w = factorize(v.value());
      if (!w || *w != g.word) o.fail("factorize mismatch for " + to_string(g.word));
    });
    ++bfs_runs;
    for (int eps : {0, 1}) {
      std::unordered_set<Composition> seen_p;
      generate_frobenius_p(eps, kParabolicRoundTripN, [&](const GeneratedParabolic& g) {
        ++words;
        if (!seen_p.insert(g.value).second) ++duplicates;
        const Composition v = evaluate_p(g.word, parabolic_seed(eps));
        auto f = factorize_p(v);
        if (!f || f->epsilon != eps || f->word != g.word) o.fail("factorize_p mismatch for " + to_string(g.word));
      });
      ++bfs_runs;
    }
  } catch (const CollisionError& e) {
    o.fail(std::string("collision: ") + e.what());
  }

  // factorize fails exactly on the non-Frobenius complement.
  std::uint64_t pairs = 0, negatives = 0;
  for (Part n = 1; n <= kSeaweedOracleN; ++n) {
    const auto cs = compositions_of(n);
    for (const auto& a : cs) {
      for (const auto& b : cs) {
        const BiComposition x(a, b);
        const bool frob = is_frobenius(x);
        const auto w = factorize(x);
        ++pairs;
        negatives += !frob;
        if (w.has_value() != frob) o.fail("factorize disagrees with meander on " + to_string(x));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(words) + " words round-tripped; " + std::to_string(pairs) + " pairs, " +
               std::to_string(negatives) + " non-Frobenius rejected";
  }
  return o;
}

std::string timing(std::chrono::steady_clock::time_point start) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::ostringstream os;
  os << ms.count() << " ms";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  std::uint64_t seed = testgen::test_seed();
  app.add_option("--seed", seed, "Seed for randomised criteria");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << timing(start) << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failed += !o.pass;
  };

  std::cout << "seed " << seed << std::endl;
  Tables tables;
  std::size_t bfs_runs = 0;
  std::uint64_t duplicates = 0;

  report(1, "published polynomials reproduced exactly", published_polynomials);
  report(2, "brute-force census equals monoid generation", [&] { return oracle_equivalence(tables, bfs_runs); });
  report(3, "count tables vanish above the part bounds", [&] { return emptiness(tables); });
  report(4, "factorize inverts evaluate; rejects exactly the complement",
         [&] { return round_trip(bfs_runs, duplicates); });
  report(5, "generation is collision-free", [&] {
    Outcome o;
    if (bfs_runs != 6) o.fail("only " + std::to_string(bfs_runs) + " of 6 generation runs completed");
    if (duplicates) o.fail(std::to_string(duplicates) + " duplicate values");
    if (o.pass) o.detail = "6 runs, 0 duplicates";
    return o;
  });
  report(6, "letter laws and word statistics", [&] {
    Outcome o;
    laws::Report all;
    for (const auto& [name, rep] : {std::pair{"seaweed letters", laws::seaweed_letter_laws(8, 5)},
                                    std::pair{"parabolic letters", laws::parabolic_letter_laws(8, 5)},
                                    std::pair{"word statistics", laws::seaweed_word_laws(seed, 1000)}}) {
      o.absorb(name, rep);
      all.merge(rep);
    }
    if (o.pass) o.detail = std::to_string(all.checked) + " checks";
    return o;
  });
  report(7, "index invariance under letters", [&] {
    Outcome o;
    const auto s = laws::seaweed_index_invariance(seed, 1000);
    const auto p = laws::parabolic_index_invariance(seed, 1000);
    o.absorb("seaweed", s);
    o.absorb("parabolic", p);
    if (o.pass) o.detail = std::to_string(s.checked + p.checked) + " samples";
    return o;
  });
  report(8, "scaling commutes with words", [&] {
    Outcome o;
    const auto r = laws::scaling(seed, 200);
    o.absorb("scaling", r);
    if (o.pass) o.detail = std::to_string(r.checked) + " checks";
    return o;
  });
  report(9, "full algebra has index n-1", [&] {
    Outcome o;
    const auto r = laws::rank_sanity(50);
    o.absorb("rank", r);
    if (o.pass) o.detail = "n = 1..50";
    return o;
  });
  report(10, "increment-sequence step rules", [&] {
    Outcome o;
    laws::Report all;
    for (const auto& [name, rep] :
         {std::pair{"seaweed steps", laws::seaweed_step_rules(12)},
          std::pair{"zeta closed forms", laws::zeta_closed_forms(seed)},
          std::pair{"prefix rule", laws::prefix_determines_sequence(seed)},
          std::pair{"parabolic steps", laws::parabolic_step_rules(12)},
          std::pair{"tilde powers", laws::tilde_sigma_powers()}}) {
      o.absorb(name, rep);
      all.merge(rep);
    }
    if (o.pass) o.detail = std::to_string(all.checked) + " checks, 0 counterexamples";
    return o;
  });

  std::cout << (failed ? std::to_string(failed) + " criteria FAILED" : std::string("all 10 criteria PASS")) << std::endl;
  return failed ? 1 : 0;
}
