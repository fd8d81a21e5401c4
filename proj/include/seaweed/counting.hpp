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

#pragma once

// Count tables of Frobenius seaweeds and parabolics by (sum, number of parts),
// computed either by brute force over compositions with the meander oracle or
// by monoid generation, and exact polynomial fits of their tails.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seaweed/composition.hpp"
#include "seaweed/detail/union_find.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/parabolic_monoid.hpp"
#include "seaweed/seaweed_monoid.hpp"

namespace seaweed {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class TableKind { seaweed, parabolic_even, parabolic_odd };
enum class CountMethod { brute, generated, deficiency };

inline std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::seaweed: return "seaweed";
    case TableKind::parabolic_even: return "parabolic-even";
    case TableKind::parabolic_odd: return "parabolic-odd";
  }
  return "?";
}

inline TableKind parse_table_kind(std::string_view s) {
  if (s == "seaweed") return TableKind::seaweed;
  if (s == "parabolic-even") return TableKind::parabolic_even;
  if (s == "parabolic-odd") return TableKind::parabolic_odd;
  throw ParseError("unknown table kind '" + std::string(s) + "'");
}

inline std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::generated: return "generated";
    case CountMethod::deficiency: return "deficiency";
  }
  return "?";
}

inline int epsilon_of(TableKind k) {
  if (k == TableKind::seaweed) throw std::invalid_argument("seaweed tables have no parity class");
  return k == TableKind::parabolic_even ? 0 : 1;
}

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counts indexed by (n, p): n is the sum, p the total number of parts.
class CountTable {
 public:
  using Key = std::pair<Part, std::size_t>;

  CountTable(TableKind kind, CountMethod method) : kind_(kind), method_(method) {}

  TableKind kind() const noexcept { return kind_; }
  CountMethod method() const noexcept { return method_; }

  void add(Part n, std::size_t p, std::uint64_t count = 1) {
    if (count) entries_[{n, p}] += count;
  }

  std::uint64_t at(Part n, std::size_t p) const {
    auto it = entries_.find({n, p});
    return it == entries_.end() ? 0 : it->second;
  }

  std::uint64_t row_total(Part n) const {
    std::uint64_t t = 0;
    for (auto it = entries_.lower_bound({n, 0}); it != entries_.end() && it->first.first == n; ++it) {
      t += it->second;
    }
    return t;
  }

  /// Nonzero entries, sorted by (n, p).
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }

  /// Summation merge; associative and commutative.
  void merge(const CountTable& other) {
    for (const auto& [k, v] : other.entries_) entries_[k] += v;
  }

  /// Entries restricted to n <= n_max.
  CountTable truncated(Part n_max) const {
    CountTable t(kind_, method_);
    for (const auto& [k, v] : entries_) {
      if (k.first <= n_max) t.entries_.emplace(k, v);
    }
    return t;
  }

  bool same_counts(const CountTable& other) const { return entries_ == other.entries_; }

 private:
  TableKind kind_;
  CountMethod method_;
  std::map<Key, std::uint64_t> entries_;
};

/// Largest p with a possibly nonempty entry at sum n: n + 1 for seaweeds,
/// floor(n/2) + 1 for parabolics.
inline std::size_t max_parts(TableKind kind, Part n) {
  return kind == TableKind::seaweed ? static_cast<std::size_t>(n + 1) : static_cast<std::size_t>(n / 2 + 1);
}

/// Sums belonging to a table kind up to n_max. F_1 belongs to neither parity class.
inline std::vector<Part> table_sums(TableKind kind, Part n_max) {
  std::vector<Part> ns;
  for (Part n = 1; n <= n_max; ++n) {
    if (kind == TableKind::seaweed) {
      ns.push_back(n);
    } else if (n >= 2 && static_cast<int>(n % 2) == epsilon_of(kind)) {
      ns.push_back(n);
    }
  }
  return ns;
}

inline constexpr Part kSeaweedBruteLimit = 14;
inline constexpr Part kParabolicBruteLimit = 24;

namespace detail {

// Meander census specialised for many pairs over one n: the per-composition
// arc partners are built once and the union-find storage is reused.
class PairCensus {
 public:
  explicit PairCensus(Part n) : n_(static_cast<std::size_t>(n)), uf_(n_ + 1) {}

  std::vector<std::size_t> partners(const Composition& a) const {
    std::vector<std::size_t> partner(n_ + 1, 0);
    for (const Arc& arc : block_arcs(a)) {
      partner[arc.left] = arc.right;
      partner[arc.right] = arc.left;
    }
    return partner;
  }

  bool frobenius(const std::vector<std::size_t>& top, const std::vector<std::size_t>& bottom) {
    // A forest with a single component has n - 1 edges; the union-find
    // rejects any arc closing a cycle.
    uf_.reset();
    std::size_t edges = 0;
    for (std::size_t v = 1; v <= n_; ++v) {
      if (top[v] > v) {
        if (!uf_.unite(v, top[v])) return false;
        ++edges;
      }
      if (bottom[v] > v) {
        if (!uf_.unite(v, bottom[v])) return false;
        ++edges;
      }
    }
    return edges + 1 == n_;
  }

 private:
  std::size_t n_;
  UnionFind uf_;
};

}  // namespace detail

/// Brute force over all compositions (pairs of compositions for seaweeds)
/// with the meander oracle.
inline CountTable brute_table(TableKind kind, Part n_max, bool budget_override = false) {
  const Part limit = kind == TableKind::seaweed ? kSeaweedBruteLimit : kParabolicBruteLimit;
  if (n_max > limit && !budget_override) {
    throw BudgetExceeded("brute " + to_string(kind) + " table limited to n <= " + std::to_string(limit) +
                         " without --budget-override");
  }
  CountTable table(kind, CountMethod::brute);
  for (Part n : table_sums(kind, n_max)) {
    detail::PairCensus census(n);
    if (kind == TableKind::seaweed) {
      const std::vector<Composition> comps = compositions_of(n);
      std::vector<std::vector<std::size_t>> partners;
      partners.reserve(comps.size());
      for (const auto& c : comps) partners.push_back(census.partners(c));
      for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = 0; j < comps.size(); ++j) {
          if (census.frobenius(partners[i], partners[j])) table.add(n, comps[i].size() + comps[j].size());
        }
      }
    } else {
      const auto full = census.partners(Composition::single(n));
      for_each_composition(n, [&](const Composition& c) {
        if (census.frobenius(census.partners(c), full)) table.add(n, c.size());
      });
    }
  }
  return table;
}

/// Tallies of the monoid generation streams.
inline CountTable generated_table(TableKind kind, Part n_max) {
  CountTable table(kind, CountMethod::generated);
  if (kind == TableKind::seaweed) {
    generate_frobenius(n_max, [&](const GeneratedSeaweed& g) { table.add(g.n(), g.p()); });
  } else {
    generate_frobenius_p(epsilon_of(kind), n_max,
                         [&](const GeneratedParabolic& g) { table.add(g.sum(), g.p()); });
  }
  return table;
}

/// Counts for n = n_lo..n_hi of F~_{n, n+1-t} (seaweed) or F_{2n+eps, n+1-t}
/// (parabolic), from deficiency-pruned generation.
inline std::vector<std::uint64_t> deficiency_sequence(TableKind kind, std::uint64_t t, Part n_lo, Part n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("deficiency_sequence: empty n range");
  std::vector<std::uint64_t> counts(n_hi - n_lo + 1, 0);
  if (kind == TableKind::seaweed) {
    generate_deficiency(t, n_hi, [&](const GeneratedSeaweed& g) {
      if (g.deficiency == t && g.n() >= n_lo) ++counts[g.n() - n_lo];
    });
  } else {
    const int eps = epsilon_of(kind);
    generate_deficiency_p(eps, t, 2 * n_hi + static_cast<Part>(eps), [&](const GeneratedParabolic& g) {
      if (g.deficiency == t && g.half() >= n_lo) ++counts[g.half() - n_lo];
    });
  }
  return counts;
}

/// Deficiency-pruned counts as a table indexed like the full tables.
inline CountTable deficiency_table(TableKind kind, std::uint64_t t, Part n_max) {
  CountTable table(kind, CountMethod::deficiency);
  if (kind == TableKind::seaweed) {
    generate_deficiency(t, n_max, [&](const GeneratedSeaweed& g) { table.add(g.n(), g.p()); });
  } else {
    generate_deficiency_p(epsilon_of(kind), t, n_max,
                          [&](const GeneratedParabolic& g) { table.add(g.sum(), g.p()); });
  }
  return table;
}

// ---------------------------------------------------------------------------
// Polynomial fitting

struct PolyFit {
  std::uint64_t t = 0;
  std::optional<int> epsilon;
  std::size_t degree = 0;
  std::vector<Rational> coefficients;  // ascending powers of n
  Part stable_from = 0;
  Part window_lo = 0;
  Part window_hi = 0;

  Rational operator()(const Rational& n) const {
    Rational v = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * n + *it;
    return v;
  }
};

namespace detail {

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace detail

/// Detects a polynomial tail in counts[i] = f(first_n + i).
///
/// Differences of order floor(t/2) + 1 must vanish on at least max(5, t + 2)
/// consecutive entries ending at the window's end. The polynomial is
/// rebuilt in Newton form from the start of the vanishing run and expanded
/// into exact monomial coefficients. Returns nullopt when no such tail exists.
inline std::optional<PolyFit> fit_polynomial(std::span<const std::uint64_t> counts, Part first_n, std::uint64_t t) {
  const std::size_t order = static_cast<std::size_t>(t / 2 + 1);
  const std::size_t guard = std::max<std::size_t>(5, static_cast<std::size_t>(t + 2));
  if (counts.size() < order + guard) return std::nullopt;

  // diffs[k][i] = k-th forward difference at index i.
  std::vector<std::vector<BigInt>> diffs(order + 1);
  for (auto c : counts) diffs[0].emplace_back(c);
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t i = 0; i + 1 < diffs[k - 1].size(); ++i) {
      diffs[k].push_back(diffs[k - 1][i + 1] - diffs[k - 1][i]);
    }
  }
  const auto& top = diffs[order];
  std::size_t start = top.size();
  while (start > 0 && top[start - 1] == 0) --start;
  if (top.size() - start < guard) return std::nullopt;

  // P(n) = sum_k diffs[k][start] * binom(n - x0, k).
  const Rational x0(static_cast<long long>(first_n + start));
  std::vector<Rational> coeffs{Rational(0)};
  std::vector<Rational> basis{Rational(1)};  // binom(n - x0, k) as a polynomial in n
  for (std::size_t k = 0; k < order; ++k) {
    if (k > 0) {
      basis = detail::poly_mul(basis, {-(x0 + Rational(static_cast<long long>(k - 1))), Rational(1)});
      for (auto& c : basis) c /= Rational(static_cast<long long>(k));
    }
    if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += Rational(diffs[k][start]) * basis[i];
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();

  PolyFit fit;
  fit.t = t;
  fit.degree = coeffs.size() - 1;
  fit.coefficients = std::move(coeffs);
  fit.stable_from = first_n + start;
  fit.window_lo = first_n;
  fit.window_hi = first_n + counts.size() - 1;
  for (std::size_t i = start; i < counts.size(); ++i) {
    if (fit(Rational(static_cast<long long>(first_n + i))) != Rational(counts[i])) {
      throw std::logic_error("fit_polynomial: Newton reconstruction disagrees with the data");
    }
  }
  return fit;
}

inline std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Human-readable polynomial in T, e.g. "T^2 + 33T - 138".
inline std::string format_polynomial(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (c == 0 && coeffs.size() > 1) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    std::string m = boost::multiprecision::denominator(mag) == 1 ? boost::multiprecision::numerator(mag).str()
                                                                 : format_rational(mag);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += m;
    if (i >= 1) out += "T";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Published polynomial identities

struct PublishedCase {
  std::string name;
  std::vector<TableKind> kinds;  // P_{eps,0} covers both parity classes
  std::uint64_t t;
  std::vector<long long> coefficients;  // ascending powers
};

inline std::vector<PublishedCase> published_cases() {
  using K = TableKind;
  return {
      {"P_0", {K::seaweed}, 0, {2}},
      {"P_1", {K::seaweed}, 1, {8}},
      {"P_2", {K::seaweed}, 2, {20, 2}},
      {"P_3", {K::seaweed}, 3, {4, 12}},
      {"P_4", {K::seaweed}, 4, {-138, 33, 1}},
      {"P_{eps,0}", {K::parabolic_even, K::parabolic_odd}, 0, {2}},
      {"P_{0,1}", {K::parabolic_even}, 1, {12}},
      {"P_{1,1}", {K::parabolic_odd}, 1, {6}},
      {"P_{1,2}", {K::parabolic_odd}, 2, {12, 2}},
  };
}

struct SeriesReport {
  TableKind kind;
  std::vector<std::uint64_t> counts;  // n = window_lo..window_hi
  Part window_lo = 1;
  std::optional<PolyFit> fit;
  bool match = false;
};

struct CaseReport {
  PublishedCase expected;
  std::vector<SeriesReport> series;

  bool match() const {
    return !series.empty() &&
           std::all_of(series.begin(), series.end(), [](const SeriesReport& s) { return s.match; });
  }
};

struct VerifyOptions {
  Part seaweed_n_max = 40;
  Part parabolic_n_max = 30;
};

inline CaseReport verify_case(const PublishedCase& c, const VerifyOptions& opt = {}) {
  CaseReport rep;
  rep.expected = c;
  std::vector<Rational> want;
  for (long long x : c.coefficients) want.emplace_back(x);
  for (TableKind kind : c.kinds) {
    SeriesReport s;
    s.kind = kind;
    const Part hi = kind == TableKind::seaweed ? opt.seaweed_n_max : opt.parabolic_n_max;
    s.counts = deficiency_sequence(kind, c.t, 1, hi);
    s.fit = fit_polynomial(s.counts, 1, c.t);
    if (s.fit) {
      if (kind != TableKind::seaweed) s.fit->epsilon = epsilon_of(kind);
      s.match = s.fit->coefficients == want;
    }
    rep.series.push_back(std::move(s));
  }
  return rep;
}

/// One report row per published polynomial; mismatches are rows, not errors.
inline std::vector<CaseReport> verify_published_polynomials(const VerifyOptions& opt = {}) {
  std::vector<CaseReport> out;
  for (const auto& c : published_cases()) out.push_back(verify_case(c, opt));
  return out;
}

}  // namespace seaweed
