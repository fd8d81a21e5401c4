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

// Law sweeps shared by the unit tests and the acceptance runner. Each sweep
// returns a Report listing counterexamples instead of asserting, so callers
// decide how to surface them.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "random_words.hpp"
#include "seaweed/seaweed.hpp"

namespace laws {

using namespace seaweed;

struct Report {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && failures.size() < 20) failures.push_back(what);
  }

  void merge(const Report& other) {
    checked += other.checked;
    for (const auto& f : other.failures) {
      if (failures.size() < 20) failures.push_back(f);
    }
  }

  std::string summary() const {
    std::ostringstream os;
    os << checked << " checks, " << failures.size() << " failures";
    for (const auto& f : failures) os << "\n  " << f;
    return os.str();
  }
};

template <class... Ts>
std::string str(const Ts&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

using PVec = std::pair<std::int64_t, std::int64_t>;

inline PVec pvec(const BiComposition& a) {
  return {static_cast<std::int64_t>(a.plus().size()), static_cast<std::int64_t>(a.minus().size())};
}

inline const Composition& side(const BiComposition& a, Sign s) { return s == Sign::plus ? a.plus() : a.minus(); }

// ---------------------------------------------------------------------------
// Letter laws

/// Parts-vector and sum effects of every seaweed letter, all a with sum <= max_sum.
inline Report seaweed_letter_laws(Part max_sum = 8, std::uint64_t max_m = 5) {
  Report rep;
  for (const auto& a : testgen::all_bicompositions(max_sum)) {
    const PVec p = pvec(a);
    rep.expect(pvec(swap_rho(a)) == PVec{p.second, p.first} && swap_rho(a).parts_count() == a.parts_count() &&
                   swap_rho(a).sum() == a.sum(),
               str("swap law at ", a));
    for (Sign s : {Sign::plus, Sign::minus}) {
      const Composition& own = side(a, s);
      for (std::uint64_t m = 0; m <= max_m; ++m) {
        const MaybeBiComposition b = apply_letter(sigma(s, m), a);
        const PVec dp = s == Sign::plus ? PVec{0, 1} : PVec{1, 0};
        rep.expect(!b.is_null() && pvec(b.value()) == PVec{p.first + dp.first, p.second + dp.second} &&
                       b.sum() == a.sum() + (m + 1) * own[0] && b.parts_count() == a.parts_count() + 1,
                   str(sigma(s, m), " law at ", a));

        const MaybeBiComposition c = apply_letter(tau(s, m), a);
        if (own.size() == 1) {
          rep.expect(c.is_null() && c.parts_vector() == std::make_pair(std::size_t{0}, std::size_t{0}),
                     str(tau(s, m), " must give o at ", a));
          continue;
        }
        const PVec dt = s == Sign::plus ? PVec{-1, 1} : PVec{1, -1};
        rep.expect(!c.is_null() && pvec(c.value()) == PVec{p.first + dt.first, p.second + dt.second} &&
                       c.sum() == a.sum() + m * own[0] + (m + 1) * own[1] && c.parts_count() == a.parts_count(),
                   str(tau(s, m), " law at ", a));
      }
    }
    rep.expect(apply_letter(sigma(Sign::plus, 0), MaybeBiComposition::null()).is_null(), "o must absorb letters");
  }
  return rep;
}

/// Sum and part-count effects of every parabolic letter, all a with sum <= max_sum.
inline Report parabolic_letter_laws(Part max_sum = 8, std::uint64_t max_m = 5) {
  Report rep;
  for (const auto& a : testgen::all_compositions(max_sum)) {
    for (bool tilde : {false, true}) {
      for (std::uint64_t m = 0; m <= max_m; ++m) {
        const Composition b = apply_letter_p({Family::S, tilde, m}, a);
        rep.expect(b.sum() == a.sum() + 2 * (m + 1) * a[0] && b.size() == a.size() + 1,
                   str("S law (m=", m, ", tilde=", tilde, ") at ", a));
        const Composition c = apply_letter_p({Family::T, tilde, m}, a);
        const Part grow = a.size() > 1 ? 2 * m * a[0] + 2 * (m + 1) * a[1] : 0;
        rep.expect(c.sum() == a.sum() + grow && c.size() == a.size(), str("T law (m=", m, ", tilde=", tilde, ") at ", a));
        if (a.size() == 1) rep.expect(c == a, str("T on a single part must be the identity at ", a));
        const Composition plain = apply_letter_p({Family::S, false, m}, a);
        rep.expect(!tilde || b == reverse_theta(plain), str("tilde must post-compose reversal at ", a));
      }
    }
  }
  return rep;
}

/// Word-level statistics on random (a, w) with w(a) != o: p(w(a)) = p(a) +
/// sigma(w), the parts-vector displacement, and the increment bound.
inline Report seaweed_word_laws(std::uint64_t seed, int samples = 1000) {
  Report rep;
  testgen::Rng rng(seed);
  int done = 0;
  while (done < samples) {
    const BiComposition a = testgen::bicomposition(rng, testgen::uniform(rng, 1, 12));
    const SeaweedWord w = testgen::seaweed_word(rng, 6, 3);
    const MaybeBiComposition b = evaluate(w, a);
    if (b.is_null()) continue;
    ++done;
    const WordStats st = word_stats(w);
    rep.expect(st.ell == st.sigma() + st.tau() && st.ell == w.length(), str("length split for ", w));
    rep.expect(b.parts_count() == a.parts_count() + st.sigma(), str("parts count law for ", w, " at ", a));
    const PVec p = pvec(a);
    const auto sp = static_cast<std::int64_t>(st.sigma_plus), sm = static_cast<std::int64_t>(st.sigma_minus);
    const auto tp = static_cast<std::int64_t>(st.tau_plus), tm = static_cast<std::int64_t>(st.tau_minus);
    rep.expect(pvec(b.value()) == PVec{p.first + sm + tm - tp, p.second + sp + tp - tm},
               str("parts vector law for ", w, " at ", a));
    const WSequence seq = w_sequence(w, a);
    bool positive = true;
    for (auto v : seq.values) positive = positive && v >= 1;
    rep.expect(positive && st.ell + seq.beta <= seq.total() && seq.total() == b.sum() - a.sum(),
               str("increment bound for ", w, " at ", a));
  }
  return rep;
}

/// Increments are even, and zero exactly for the empty word or T-only words
/// on single-part compositions.
inline Report parabolic_parity(std::uint64_t seed, int samples = 1000) {
  Report rep;
  testgen::Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Composition a = testgen::composition(rng, testgen::uniform(rng, 1, 10));
    ParabolicWord w = testgen::parabolic_word(rng, 5, 3);
    if (i % 4 == 0) {
      // Bias toward T-only words so the equality case is exercised.
      std::vector<ParabolicLetter> ls = w.letters();
      for (auto& l : ls) l.family = Family::T;
      w = ParabolicWord(std::move(ls));
    }
    const Composition b = evaluate_p(w, a);
    const Part diff = b.sum() - a.sum();
    rep.expect(diff % 2 == 0, str("odd increment for ", w, " at ", a));
    const bool t_only = word_stats(w).sigma == 0;
    rep.expect((diff == 0) == (w.empty() || (a.size() == 1 && t_only)), str("zero-increment characterisation for ", w, " at ", a));
    rep.expect(b.size() == a.size() + word_stats(w).sigma, str("parabolic parts law for ", w, " at ", a));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Index invariance, scaling, rank

inline Report seaweed_index_invariance(std::uint64_t seed, int samples = 1000) {
  Report rep;
  testgen::Rng rng(seed);
  int done = 0;
  while (done < samples) {
    const BiComposition a = testgen::bicomposition(rng, testgen::uniform(rng, 1, 10));
    const SeaweedWord w = testgen::seaweed_word(rng, 5, 2);
    const MaybeBiComposition b = evaluate(w, a);
    if (b.is_null() || b.sum() > 40) continue;
    ++done;
    rep.expect(index_seaweed(b.value()) == index_seaweed(a), str("index changed by ", w, " at ", a));
  }
  return rep;
}

inline Report parabolic_index_invariance(std::uint64_t seed, int samples = 1000) {
  Report rep;
  testgen::Rng rng(seed);
  int done = 0;
  while (done < samples) {
    const Composition a = testgen::composition(rng, testgen::uniform(rng, 1, 10));
    const ParabolicWord w = testgen::parabolic_word(rng, 4, 2);
    const Composition b = evaluate_p(w, a);
    if (b.sum() > 60) continue;
    ++done;
    rep.expect(index_parabolic(b) == index_parabolic(a), str("parabolic index changed by ", w, " at ", a));
  }
  return rep;
}

/// The parabolic S letters executed through the seaweed letters:
/// (S m(a), (n')) = Theta T-0 Theta S+m (a, (n)), and the T analogue.
inline Report parabolic_bridge(Part max_sum = 8, std::uint64_t max_m = 5) {
  Report rep;
  auto theta = [](const BiComposition& x) { return BiComposition(reverse_theta(x.plus()), reverse_theta(x.minus())); };
  auto through = [&](const SeaweedLetter& first, const BiComposition& x) -> MaybeBiComposition {
    MaybeBiComposition y = apply_letter(first, x);
    if (y.is_null()) return y;
    y = apply_letter(tau(Sign::minus, 0), theta(y.value()));
    if (y.is_null()) return y;
    return MaybeBiComposition(theta(y.value()));
  };
  for (const auto& a : testgen::all_compositions(max_sum)) {
    const BiComposition x(a, Composition::single(a.sum()));
    rep.expect(theta(x) == BiComposition(reverse_theta(a), Composition::single(a.sum())), str("reversal bridge at ", a));
    for (std::uint64_t m = 0; m <= max_m; ++m) {
      const Composition s = apply_letter_p({Family::S, false, m}, a);
      const MaybeBiComposition via_s = through(sigma(Sign::plus, m), x);
      rep.expect(!via_s.is_null() && via_s.value() == BiComposition(s, Composition::single(s.sum())),
                 str("S bridge (m=", m, ") at ", a));
      if (a.size() < 2) continue;
      const Composition t = apply_letter_p({Family::T, false, m}, a);
      const MaybeBiComposition via_t = through(tau(Sign::plus, m), x);
      rep.expect(!via_t.is_null() && via_t.value() == BiComposition(t, Composition::single(t.sum())),
                 str("T bridge (m=", m, ") at ", a));
    }
  }
  return rep;
}

/// w(k i) = k w(i) for random words that stay non-null at the seed.
inline Report scaling(std::uint64_t seed, int samples = 200) {
  Report rep;
  testgen::Rng rng(seed);
  int done = 0;
  while (done < samples) {
    const SeaweedWord w = testgen::seaweed_word(rng, 6, 3);
    const MaybeBiComposition base = evaluate(w, seed_bicomposition());
    if (base.is_null()) continue;
    ++done;
    for (Part k = 1; k <= 5; ++k) {
      const MaybeBiComposition scaled = evaluate(w, scale(k, seed_bicomposition()));
      rep.expect(!scaled.is_null() && scaled.value() == scale(k, base.value()), str("scaling by ", k, " for ", w));
    }
  }
  return rep;
}

inline Report rank_sanity(Part n_max = 50) {
  Report rep;
  for (Part n = 1; n <= n_max; ++n) {
    const Composition full = Composition::single(n);
    rep.expect(index_seaweed(BiComposition(full, full)) == n - 1, str("seaweed rank at ", n));
    rep.expect(index_parabolic(full) == n - 1, str("parabolic rank at ", n));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Increment-sequence step rules, seaweed

/// One applied step: value before, letter, value after, increment.
struct SeaweedStep {
  BiComposition before;
  SeaweedLetter letter;
  BiComposition after;
  Part increment;
};

inline std::vector<SeaweedStep> steps_of(const SeaweedWord& w, const BiComposition& a) {
  std::vector<SeaweedStep> steps(w.length(), SeaweedStep{a, {}, a, 0});
  BiComposition cur = a;
  for (std::size_t i = w.length(); i-- > 0;) {
    const BiComposition next = apply_letter(w[i], cur).value();
    steps[i] = {cur, w[i], next, next.sum() - cur.sum()};
    cur = next;
  }
  return steps;
}

/// Rules for a single step at (a, eta, b):
///  - increment 1 forces one of S+0 (a1+ = 1, b1- = 1), S-0 (a1- = 1,
///    b1+ = 1), T+0 (a2+ = 1, b1- = 1) or T-0 (a2- = 1, b1+ = 1);
///  - min(b1+, b1-) = 1 forces eta in {S+-0, T+-0}, with increment 1 for S.
inline void check_seaweed_step(const SeaweedStep& st, Report& rep) {
  const auto& a = st.before;
  const auto& b = st.after;
  const SeaweedLetter& l = st.letter;
  if (st.increment == 1) {
    const Sign s = l.sign;
    const Composition& own = side(a, s);
    const Composition& other_b = side(b, opposite(s));
    bool ok = l.m == 0 && other_b[0] == 1;
    if (l.family == Family::S) {
      ok = ok && own[0] == 1;
    } else {
      ok = ok && own.size() >= 2 && own[1] == 1;
    }
    rep.expect(ok, str("unit step ", l, " at ", a));
  }
  if (std::min(b.plus()[0], b.minus()[0]) == 1) {
    rep.expect(l.m == 0 && (l.family == Family::T || st.increment == 1), str("part-one step ", l, " at ", a));
  }
}

inline bool is_alternating_sigma0(const SeaweedWord& w) {
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i].family != Family::S || w[i].m != 0) return false;
    if (i + 1 < w.length() && w[i].sign == w[i + 1].sign) return false;
  }
  return true;
}

/// Step rules over every contiguous piece of every generated word with sum
/// <= max_sum: unit-step rules, the (1,1) and (1,1,1) pair rules, the
/// all-ones S-word rule, and the all-ones sequence identity for zeta words.
inline Report seaweed_step_rules(Part max_sum = 12) {
  Report rep;
  generate_frobenius(max_sum, [&](const GeneratedSeaweed& g) {
    const auto steps = steps_of(g.word, seed_bicomposition());
    const std::size_t k = steps.size();
    for (const auto& st : steps) check_seaweed_step(st, rep);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      // Pair S0^e1 S0^e2 at positions i, i+1 (i+1 applied first).
      const auto& first = steps[i + 1];
      const auto& second = steps[i];
      if (first.letter.family == Family::S && first.letter.m == 0 && second.letter.family == Family::S &&
          second.letter.m == 0 && first.increment == 1 && second.increment == 1) {
        rep.expect(first.letter.sign != second.letter.sign && side(first.before, first.letter.sign)[0] == 1,
                   str("(1,1) pair rule in ", g.word));
        // Third step on top of the pair, from a non-seed Frobenius value.
        if (i >= 1 && steps[i - 1].increment == 1 && first.before != seed_bicomposition()) {
          rep.expect(steps[i - 1].letter == sigma(first.letter.sign, 0), str("(1,1,1) rule in ", g.word));
        }
      }
    }
    // All-S pieces with all-ones increments are zeta words whose sign
    // matches the side whose first part is 1.
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = j + 1; i-- > 0;) {
        if (steps[i].letter.family != Family::S || steps[i].increment != 1) break;
        const SeaweedWord piece = g.word.slice(i, j + 1);
        const BiComposition& a = steps[j].before;
        const Sign last = piece[piece.length() - 1].sign;
        rep.expect(is_alternating_sigma0(piece) && piece == zeta(piece.length(), last) && side(a, last)[0] == 1,
                   str("all-ones S piece ", piece, " at ", a));
      }
    }
  });
  return rep;
}

/// Closed forms for zeta_r^+ (and zeta_r^- through swap) on a with the
/// matching first part 1, r <= r_max.
inline Report zeta_closed_forms(std::uint64_t seed, std::size_t r_max = 9, int samples = 200) {
  Report rep;
  testgen::Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    BiComposition a = testgen::bicomposition(rng, testgen::uniform(rng, 1, 10));
    std::vector<Part> top = a.plus().vector();
    std::vector<Part> bottom = a.minus().vector();
    if (top[0] != 1) {
      top.front() -= 1;
      top.insert(top.begin(), 1);
      if (top[1] == 0) top.erase(top.begin() + 1);
    }
    const BiComposition base{Composition(top), Composition(bottom)};
    for (std::size_t r = 1; r <= r_max; ++r) {
      const std::size_t m = r / 2;
      std::vector<Part> want_top, want_bottom;
      if (r % 2 == 0) {
        want_top.push_back(1);
        want_top.insert(want_top.end(), m, 2);
        want_top.insert(want_top.end(), top.begin() + 1, top.end());
        want_bottom.assign(m, 2);
        want_bottom.insert(want_bottom.end(), bottom.begin(), bottom.end());
      } else {
        want_top.assign(m + 1, 2);
        want_top.insert(want_top.end(), top.begin() + 1, top.end());
        want_bottom.push_back(1);
        want_bottom.insert(want_bottom.end(), m, 2);
        want_bottom.insert(want_bottom.end(), bottom.begin(), bottom.end());
      }
      const BiComposition want{Composition(want_top), Composition(want_bottom)};
      const MaybeBiComposition got = evaluate(zeta(r, Sign::plus), base);
      rep.expect(!got.is_null() && got.value() == want, str("zeta_", r, "^+ at ", base));
      const MaybeBiComposition got_minus = evaluate(zeta(r, Sign::minus), swap_rho(base));
      rep.expect(!got_minus.is_null() && got_minus.value() == swap_rho(want), str("zeta_", r, "^- at ", swap_rho(base)));
    }
  }
  return rep;
}

/// Bicompositions sharing their first l(w)+1 parts on both sides have the
/// same w-sequence and the same first parts after w.
inline Report prefix_determines_sequence(std::uint64_t seed, int samples = 500) {
  Report rep;
  testgen::Rng rng(seed);
  int done = 0;
  while (done < samples) {
    const SeaweedWord w = testgen::seaweed_word(rng, 4, 2);
    const std::size_t need = w.length() + 1;
    std::vector<Part> head_top, head_bottom;
    for (std::size_t i = 0; i < need; ++i) {
      head_top.push_back(testgen::uniform(rng, 1, 4));
      head_bottom.push_back(testgen::uniform(rng, 1, 4));
    }
    auto extend = [&](std::vector<Part> top, std::vector<Part> bottom) {
      // Pad the shorter side so both sums agree, with random tails.
      for (int j = static_cast<int>(testgen::uniform(rng, 0, 2)); j > 0; --j) top.push_back(testgen::uniform(rng, 1, 4));
      for (int j = static_cast<int>(testgen::uniform(rng, 0, 2)); j > 0; --j) bottom.push_back(testgen::uniform(rng, 1, 4));
      Part st = 0, sb = 0;
      for (auto x : top) st += x;
      for (auto x : bottom) sb += x;
      if (st < sb) top.push_back(sb - st);
      if (sb < st) bottom.push_back(st - sb);
      return BiComposition(Composition(top), Composition(bottom));
    };
    const BiComposition a = extend(head_top, head_bottom);
    const BiComposition b = extend(head_top, head_bottom);
    const MaybeBiComposition wa = evaluate(w, a);
    const MaybeBiComposition wb = evaluate(w, b);
    ++done;
    rep.expect(!wa.is_null() && !wb.is_null(), str(w, " must be defined on long enough sides"));
    if (wa.is_null() || wb.is_null()) continue;
    rep.expect(w_sequence(w, a) == w_sequence(w, b) && wa.value().plus()[0] == wb.value().plus()[0] &&
                   wa.value().minus()[0] == wb.value().minus()[0],
               str("prefix rule for ", w, " at ", a, " and ", b));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Increment-sequence step rules, parabolic

struct ParabolicStep {
  Composition before;
  ParabolicLetter letter;
  Composition after;
  Part increment;
};

inline std::vector<ParabolicStep> steps_of(const ParabolicWord& w, const Composition& a) {
  std::vector<ParabolicStep> steps(w.length(), ParabolicStep{a, {}, a, 0});
  Composition cur = a;
  for (std::size_t i = w.length(); i-- > 0;) {
    Composition next = apply_letter_p(w[i], cur);
    steps[i] = {cur, w[i], next, next.sum() - cur.sum()};
    cur = std::move(next);
  }
  return steps;
}

/// Rules for one parabolic step: increment 2 forces S0/S~0 with a1 = 1 or
/// T0/T~0 with a2 = 1; a larger increment leaves b1 >= 2; a changed value
/// with b1 = 1 comes from S~0 with a1 = 1 or T~0 with a2 = 1.
inline void check_parabolic_step(const ParabolicStep& st, Report& rep) {
  const auto& a = st.before;
  const auto& b = st.after;
  const auto& l = st.letter;
  if (st.increment == 2) {
    const bool ok = l.m == 0 && (l.family == Family::S ? a[0] == 1 : a.size() >= 2 && a[1] == 1);
    rep.expect(ok, str("step of two ", l, " at ", a));
  }
  if (st.increment > 2) rep.expect(b[0] >= 2, str("large step ", l, " at ", a));
  if (b != a && b[0] == 1) {
    const bool ok = l.m == 0 && l.tilde && (l.family == Family::S ? a[0] == 1 : a.size() >= 2 && a[1] == 1);
    rep.expect(ok, str("first part one after ", l, " at ", a));
  }
}

inline bool is_s0_tilde(const ParabolicLetter& l) { return l.family == Family::S && l.tilde && l.m == 0; }
inline bool is_s0_any(const ParabolicLetter& l) { return l.family == Family::S && l.m == 0; }

/// Step rules plus the (2,2,2) and (2,2,2,2) rules after S~0 S~0, over every
/// generated word of both parity classes with sum <= max_sum; also the
/// closed forms for powers of S~0 on random a with a1 = 1.
inline Report parabolic_step_rules(Part max_sum = 12) {
  Report rep;
  for (int eps : {0, 1}) {
    generate_frobenius_p(eps, max_sum, [&](const GeneratedParabolic& g) {
      const auto steps = steps_of(g.word, parabolic_seed(eps));
      const std::size_t k = steps.size();
      for (const auto& st : steps) {
        check_parabolic_step(st, rep);
        rep.expect(st.increment >= 2, str("generated step below two in ", g.word));
      }
      for (std::size_t i = 0; i + 2 < k; ++i) {
        // eta S~0 S~0 at i, i+1, i+2.
        if (!is_s0_tilde(steps[i + 1].letter) || !is_s0_tilde(steps[i + 2].letter)) continue;
        if (steps[i].increment == 2 && steps[i + 1].increment == 2 && steps[i + 2].increment == 2) {
          rep.expect(is_s0_any(steps[i].letter), str("(2,2,2) rule in ", g.word));
          if (i >= 1 && steps[i - 1].increment == 2) {
            rep.expect(is_s0_tilde(steps[i].letter) && is_s0_any(steps[i - 1].letter),
                       str("(2,2,2,2) rule in ", g.word));
          }
        }
      }
    });
  }
  // Exhaustive single-step rules on all small compositions.
  for (const auto& a : testgen::all_compositions(8)) {
    for (bool tilde : {false, true}) {
      for (Family f : {Family::S, Family::T}) {
        for (std::uint64_t m = 0; m <= 3; ++m) {
          const ParabolicLetter l{f, tilde, m};
          const Composition b = apply_letter_p(l, a);
          check_parabolic_step({a, l, b, b.sum() - a.sum()}, rep);
        }
      }
    }
  }
  return rep;
}

/// Closed forms for S~0^j on a with a1 = 1.
inline Report tilde_sigma_powers(Part max_sum = 8, std::size_t j_max = 8) {
  Report rep;
  for (const auto& a : testgen::all_compositions(max_sum)) {
    if (a[0] != 1) continue;
    const std::vector<Part> parts = a.vector();
    Composition cur = a;
    for (std::size_t j = 1; j <= j_max; ++j) {
      cur = apply_letter_p({Family::S, true, 0}, cur);
      const std::size_t m = j / 2;
      std::vector<Part> want{1};
      want.insert(want.end(), m, 2);
      if (j % 2 == 0) {
        want.insert(want.end(), parts.begin() + 1, parts.end());
        want.insert(want.end(), m, 2);
      } else {
        want.insert(want.end(), parts.rbegin(), parts.rend() - 1);
        want.insert(want.end(), m + 1, 2);
      }
      rep.expect(cur == Composition(want), str("S~0^", j, " at ", a));
    }
  }
  return rep;
}

/// Frobenius compositions with a1 = ar are exactly (1) and (1,1).
inline Report equal_ends(Part max_sum = 18) {
  Report rep;
  for (Part n = 1; n <= max_sum; ++n) {
    for_each_composition(n, [&](const Composition& a) {
      if (a.front() != a.back() || index_parabolic(a) != 0) return;
      rep.expect(a == Composition{1} || a == Composition{1, 1}, str("equal ends on Frobenius ", a));
    });
  }
  return rep;
}

}  // namespace laws
