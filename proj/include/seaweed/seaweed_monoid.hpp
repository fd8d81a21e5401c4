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

// Index-preserving operators on bicompositions.
//
// The alphabet is {S+m, S-m, T+m, T-m : m >= 0}:
//
//   S+m (a) = (((m+2)a1+, a2+, ...), ((m+1)a1+, a1-, a2-, ...))
//   T+m (a) = (((m+1)a1+ + (m+2)a2+, a3+, ...), (m a1+ + (m+1)a2+, a1-, ...))
//
// T+m sends a to the null element o when a+ has a single part, and every
// letter sends o to o. The minus letters are the plus letters conjugated by
// rho, the exchange of the two sides.
//
// A word eta_1 ... eta_k is a composition of maps, so eta_k is applied first.
// Words are stored and printed in written order, eta_1 first.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "seaweed/composition.hpp"

namespace seaweed {

enum class Family : std::uint8_t { S, T };
enum class Sign : std::uint8_t { plus, minus };

inline Sign opposite(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

struct SeaweedLetter {
  Family family = Family::S;
  Sign sign = Sign::plus;
  std::uint64_t m = 0;

  friend bool operator==(const SeaweedLetter&, const SeaweedLetter&) = default;
  friend auto operator<=>(const SeaweedLetter&, const SeaweedLetter&) = default;
};

inline SeaweedLetter sigma(Sign s, std::uint64_t m) { return {Family::S, s, m}; }
inline SeaweedLetter tau(Sign s, std::uint64_t m) { return {Family::T, s, m}; }

class NullEncountered : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FirstPartsEqual : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when breadth-first generation reaches a value twice. This would
/// contradict freeness of the monoid together with injectivity of evaluation.
class CollisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SeaweedWord {
 public:
  SeaweedWord() = default;
  SeaweedWord(std::initializer_list<SeaweedLetter> letters) : letters_(letters) {}
  explicit SeaweedWord(std::vector<SeaweedLetter> letters) : letters_(std::move(letters)) {}

  static SeaweedWord identity() { return {}; }

  const std::vector<SeaweedLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const SeaweedLetter& operator[](std::size_t i) const { return letters_[i]; }

  /// Written-order concatenation: (u * v)(a) = u(v(a)).
  friend SeaweedWord operator*(const SeaweedWord& u, const SeaweedWord& v) {
    std::vector<SeaweedLetter> l = u.letters_;
    l.insert(l.end(), v.letters_.begin(), v.letters_.end());
    return SeaweedWord(std::move(l));
  }

  /// Letters i..j-1 in written order.
  SeaweedWord slice(std::size_t i, std::size_t j) const {
    return SeaweedWord(std::vector<SeaweedLetter>(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                                                  letters_.begin() + static_cast<std::ptrdiff_t>(j)));
  }

  friend bool operator==(const SeaweedWord&, const SeaweedWord&) = default;
  friend auto operator<=>(const SeaweedWord&, const SeaweedWord&) = default;

 private:
  std::vector<SeaweedLetter> letters_;
};

// ---------------------------------------------------------------------------
// Letter application

namespace detail {

// Applies the plus-signed letter to (top, bottom); nullopt stands for o.
inline std::optional<BiComposition> apply_plus(Family family, std::uint64_t m, const Composition& top,
                                               const Composition& bottom) {
  std::vector<Part> b_top;
  std::vector<Part> b_bottom;
  b_bottom.reserve(bottom.size() + 1);
  if (family == Family::S) {
    const Part a1 = top[0];
    b_top.reserve(top.size());
    b_top.push_back(mul(m + 2, a1));
    b_top.insert(b_top.end(), top.parts().begin() + 1, top.parts().end());
    b_bottom.push_back(mul(m + 1, a1));
  } else {
    if (top.size() < 2) return std::nullopt;
    const Part a1 = top[0];
    const Part a2 = top[1];
    b_top.reserve(top.size() - 1);
    b_top.push_back(add(mul(m + 1, a1), mul(m + 2, a2)));
    b_top.insert(b_top.end(), top.parts().begin() + 2, top.parts().end());
    b_bottom.push_back(add(mul(m, a1), mul(m + 1, a2)));
  }
  b_bottom.insert(b_bottom.end(), bottom.parts().begin(), bottom.parts().end());
  return BiComposition(Composition(std::move(b_top)), Composition(std::move(b_bottom)));
}

}  // namespace detail

inline MaybeBiComposition apply_letter(const SeaweedLetter& l, const BiComposition& a) {
  if (l.sign == Sign::plus) {
    auto b = detail::apply_plus(l.family, l.m, a.plus(), a.minus());
    return b ? MaybeBiComposition(std::move(*b)) : MaybeBiComposition::null();
  }
  auto b = detail::apply_plus(l.family, l.m, a.minus(), a.plus());
  return b ? MaybeBiComposition(swap_rho(*b)) : MaybeBiComposition::null();
}

inline MaybeBiComposition apply_letter(const SeaweedLetter& l, const MaybeBiComposition& a) {
  if (a.is_null()) return a;
  return apply_letter(l, a.value());
}

/// Right-to-left fold: the last written letter acts first.
inline MaybeBiComposition evaluate(const SeaweedWord& w, MaybeBiComposition a) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend() && !a.is_null(); ++it) {
    a = apply_letter(*it, a);
  }
  return a;
}

inline MaybeBiComposition evaluate(const SeaweedWord& w, const BiComposition& a) {
  return evaluate(w, MaybeBiComposition(a));
}

// ---------------------------------------------------------------------------
// Word statistics

struct WordStats {
  std::uint64_t ell = 0;
  std::uint64_t sigma_plus = 0;
  std::uint64_t sigma_minus = 0;
  std::uint64_t tau_plus = 0;
  std::uint64_t tau_minus = 0;

  std::uint64_t sigma() const noexcept { return sigma_plus + sigma_minus; }
  std::uint64_t tau() const noexcept { return tau_plus + tau_minus; }

  void add(const SeaweedLetter& l) noexcept {
    ++ell;
    if (l.family == Family::S) {
      ++(l.sign == Sign::plus ? sigma_plus : sigma_minus);
    } else {
      ++(l.sign == Sign::plus ? tau_plus : tau_minus);
    }
  }

  friend bool operator==(const WordStats&, const WordStats&) = default;
};

inline WordStats word_stats(const SeaweedWord& w) {
  WordStats s;
  for (const auto& l : w.letters()) s.add(l);
  return s;
}

/// Increments m_i of the sum along a word, indexed like the letters.
struct WSequence {
  std::vector<std::uint64_t> values;
  /// Number of entries above the unit step (1 for seaweeds, 2 for parabolics).
  std::uint64_t beta = 0;

  std::uint64_t total() const noexcept {
    std::uint64_t t = 0;
    for (auto v : values) t += v;
    return t;
  }

  friend bool operator==(const WSequence&, const WSequence&) = default;
};

inline WSequence w_sequence(const SeaweedWord& w, const BiComposition& a) {
  WSequence seq;
  seq.values.assign(w.length(), 0);
  BiComposition cur = a;
  for (std::size_t i = w.length(); i-- > 0;) {
    MaybeBiComposition next = apply_letter(w[i], cur);
    if (next.is_null()) {
      throw NullEncountered("word evaluates to o at letter " + std::to_string(i + 1));
    }
    seq.values[i] = next.sum() - cur.sum();
    if (seq.values[i] > 1) ++seq.beta;
    cur = next.value();
  }
  return seq;
}

/// zeta_r^sign: r alternating letters sigma_0 whose last written letter has
/// the given sign.
inline SeaweedWord zeta(std::size_t r, Sign sign) {
  std::vector<SeaweedLetter> letters(r);
  Sign s = sign;
  for (std::size_t i = r; i-- > 0;) {
    letters[i] = sigma(s, 0);
    s = opposite(s);
  }
  return SeaweedWord(std::move(letters));
}

/// rho w rho: flips every sign.
inline SeaweedWord bar_conjugate(const SeaweedWord& w) {
  std::vector<SeaweedLetter> letters = w.letters();
  for (auto& l : letters) l.sign = opposite(l.sign);
  return SeaweedWord(std::move(letters));
}

// ---------------------------------------------------------------------------
// Delta decomposition

/// w = w_0 z_1 w_1 ... z_q w_q where each z_i is a maximal run of pairs
/// (S+-0, 1) and no w_i contains such a pair.
struct DeltaDecomposition {
  std::vector<SeaweedWord> w_blocks;  // q + 1 entries
  std::vector<SeaweedWord> z_blocks;  // q entries

  std::size_t q() const noexcept { return z_blocks.size(); }

  SeaweedWord concat() const {
    SeaweedWord out = w_blocks.front();
    for (std::size_t i = 0; i < z_blocks.size(); ++i) out = out * z_blocks[i] * w_blocks[i + 1];
    return out;
  }
};

inline DeltaDecomposition delta_decompose(const SeaweedWord& w, const BiComposition& a) {
  const WSequence seq = w_sequence(w, a);
  auto is_z = [&](std::size_t i) {
    return w[i].family == Family::S && w[i].m == 0 && seq.values[i] == 1;
  };
  DeltaDecomposition d;
  std::size_t i = 0;
  const std::size_t k = w.length();
  std::size_t start = 0;
  while (i < k && !is_z(i)) ++i;
  d.w_blocks.push_back(w.slice(start, i));
  while (i < k) {
    start = i;
    while (i < k && is_z(i)) ++i;
    d.z_blocks.push_back(w.slice(start, i));
    start = i;
    while (i < k && !is_z(i)) ++i;
    d.w_blocks.push_back(w.slice(start, i));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Reduction and factorization

struct SeaweedReduction {
  BiComposition predecessor;
  SeaweedLetter letter;  // letter(predecessor) == the reduced input
};

namespace detail {

// Reduction for top1 < bottom1, yielding a minus letter. Write
// top1 = (bottom1 - top1) m + r with 0 < r <= bottom1 - top1; then
//   c+ = (top2, ...),
//   c- = ((m+1) bottom1 - (m+2) top1, r, bottom2, ...),
// where a zero first entry of c- is dropped and the letter is S-m, else T-m.
inline std::pair<BiComposition, SeaweedLetter> reduce_minus(const Composition& top,
                                                           const Composition& bottom) {
  const Part x = top[0];
  const Part y = bottom[0];
  const Part d = y - x;
  const std::uint64_t m = (x - 1) / d;
  const Part r = x - d * m;
  const Part first = (m + 1) * y - (m + 2) * x;
  std::vector<Part> c_top(top.parts().begin() + 1, top.parts().end());
  std::vector<Part> c_bottom;
  c_bottom.reserve(bottom.size() + 1);
  if (first != 0) c_bottom.push_back(first);
  c_bottom.push_back(r);
  c_bottom.insert(c_bottom.end(), bottom.parts().begin() + 1, bottom.parts().end());
  SeaweedLetter l{first == 0 ? Family::S : Family::T, Sign::minus, m};
  return {BiComposition(Composition(std::move(c_top)), Composition(std::move(c_bottom))), l};
}

}  // namespace detail

/// Strips the unique letter eta with eta(c) = b; the sum strictly decreases.
inline SeaweedReduction reduce_once(const BiComposition& b) {
  const Part p1 = b.plus()[0];
  const Part m1 = b.minus()[0];
  if (p1 == m1) throw FirstPartsEqual("reduce_once: first parts are equal in " + to_string(b));
  if (p1 < m1) {
    auto [c, l] = detail::reduce_minus(b.plus(), b.minus());
    return {std::move(c), l};
  }
  auto [c, l] = detail::reduce_minus(b.minus(), b.plus());
  l.sign = Sign::plus;
  return {swap_rho(c), l};
}

/// The word w with w((1),(1)) = b, or nullopt when b is not Frobenius.
inline std::optional<SeaweedWord> factorize(const BiComposition& b) {
  std::vector<SeaweedLetter> letters;
  BiComposition cur = b;
  while (cur.plus()[0] != cur.minus()[0]) {
    SeaweedReduction r = reduce_once(cur);
    letters.push_back(r.letter);
    cur = std::move(r.predecessor);
  }
  if (cur != seed_bicomposition()) return std::nullopt;
  return SeaweedWord(std::move(letters));
}

// ---------------------------------------------------------------------------
// Generation

struct GeneratedSeaweed {
  SeaweedWord word;
  BiComposition value;
  WordStats stats;
  std::uint64_t tau_beta = 0;    // tau(w) + beta(m)
  std::uint64_t deficiency = 0;  // s(a) + 1 - p(a)

  Part n() const noexcept { return value.sum(); }
  std::size_t p() const noexcept { return value.parts_count(); }
};

namespace detail {

struct SeaweedNode {
  BiComposition value;
  std::int64_t parent;
  SeaweedLetter letter;
  WordStats stats;
  std::uint64_t tau_beta;
  std::uint64_t deficiency;
};

inline SeaweedWord word_of(const std::vector<SeaweedNode>& nodes, std::int64_t i) {
  std::vector<SeaweedLetter> letters;
  for (; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
    letters.push_back(nodes[static_cast<std::size_t>(i)].letter);
  }
  return SeaweedWord(std::move(letters));
}

// Breadth-first closure of ((1),(1)) under all letters keeping the sum within
// n_max. With max_deficiency set, branches whose deficiency s + 1 - p exceeds
// it are cut; deficiency never decreases along a word and dominates
// tau(w) + beta(m), so the cut is exact.
template <class Visitor>
void seaweed_bfs(Part n_max, std::optional<std::uint64_t> max_deficiency, Visitor&& emit) {
  if (n_max < 1) return;
  std::vector<SeaweedNode> nodes;
  std::unordered_set<BiComposition> seen;
  nodes.push_back({seed_bicomposition(), -1, {}, {}, 0, 0});
  seen.insert(nodes.front().value);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    {
      const SeaweedNode& node = nodes[head];
      emit(GeneratedSeaweed{word_of(nodes, static_cast<std::int64_t>(head)), node.value, node.stats,
                            node.tau_beta, node.deficiency});
    }
    const BiComposition a = nodes[head].value;
    const Part s = a.sum();
    const Part budget = n_max - s;

    auto visit = [&](const SeaweedLetter& l, Part increment) {
      const SeaweedNode& node = nodes[head];
      const std::uint64_t is_tau = l.family == Family::T ? 1 : 0;
      const std::uint64_t deficiency = node.deficiency + increment - 1 + is_tau;
      if (max_deficiency && deficiency > *max_deficiency) return false;
      MaybeBiComposition b = apply_letter(l, a);
      if (b.is_null()) throw std::logic_error("generation produced o");
      if (b.sum() != s + increment) throw std::logic_error("sum law violated in generation");
      if (!seen.insert(b.value()).second) {
        throw CollisionError("bicomposition " + to_string(b) + " reached twice");
      }
      WordStats stats = node.stats;
      stats.add(l);
      std::uint64_t tau_beta = node.tau_beta + is_tau + (increment > 1 ? 1 : 0);
      nodes.push_back({b.value(), static_cast<std::int64_t>(head), l, stats, tau_beta, deficiency});
      return true;
    };

    for (Sign sign : {Sign::plus, Sign::minus}) {
      const Composition& side = sign == Sign::plus ? a.plus() : a.minus();
      const Part a1 = side[0];
      // sigma: increment (m+1) a1.
      for (std::uint64_t m = 0; (m + 1) * a1 <= budget; ++m) {
        if (!visit(sigma(sign, m), (m + 1) * a1)) break;
      }
      // tau: increment m a1 + (m+1) a2, only when the side has two parts.
      if (side.size() >= 2) {
        const Part a2 = side[1];
        for (std::uint64_t m = 0; m * a1 + (m + 1) * a2 <= budget; ++m) {
          if (!visit(tau(sign, m), m * a1 + (m + 1) * a2)) break;
        }
      }
    }
  }
}

}  // namespace detail

/// Every Frobenius bicomposition with sum <= n_max, each exactly once, with
/// its word. Throws CollisionError if a value is reached twice.
template <class Visitor>
void generate_frobenius(Part n_max, Visitor&& emit) {
  detail::seaweed_bfs(n_max, std::nullopt, std::forward<Visitor>(emit));
}

/// Frobenius bicompositions with sum <= n_max and p(a) >= s(a) + 1 - t.
template <class Visitor>
void generate_deficiency(std::uint64_t t, Part n_max, Visitor&& emit) {
  detail::seaweed_bfs(n_max, t, std::forward<Visitor>(emit));
}

inline std::vector<GeneratedSeaweed> collect_frobenius(Part n_max) {
  std::vector<GeneratedSeaweed> out;
  generate_frobenius(n_max, [&](const GeneratedSeaweed& g) { out.push_back(g); });
  return out;
}

inline std::vector<GeneratedSeaweed> collect_deficiency(std::uint64_t t, Part n_max) {
  std::vector<GeneratedSeaweed> out;
  generate_deficiency(t, n_max, [&](const GeneratedSeaweed& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Text form: "S+0", "T-3"; words are whitespace separated, eta_1 first, and
// the identity prints as "id".

inline std::string to_string(const SeaweedLetter& l) {
  std::string s(1, l.family == Family::S ? 'S' : 'T');
  s += sign_char(l.sign);
  s += std::to_string(l.m);
  return s;
}

inline std::string to_string(const SeaweedWord& w) {
  if (w.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const SeaweedLetter& l) { return os << to_string(l); }
inline std::ostream& operator<<(std::ostream& os, const SeaweedWord& w) { return os << to_string(w); }

inline SeaweedLetter parse_seaweed_letter(std::string_view tok) {
  auto bad = [&] { return ParseError("invalid seaweed letter '" + std::string(tok) + "'"); };
  if (tok.size() < 3) throw bad();
  SeaweedLetter l;
  if (tok[0] == 'S') {
    l.family = Family::S;
  } else if (tok[0] == 'T') {
    l.family = Family::T;
  } else {
    throw bad();
  }
  if (tok[1] == '+') {
    l.sign = Sign::plus;
  } else if (tok[1] == '-') {
    l.sign = Sign::minus;
  } else {
    throw bad();
  }
  auto digits = tok.substr(2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), l.m);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw bad();
  return l;
}

inline SeaweedWord parse_seaweed_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<SeaweedLetter> letters;
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "id") return {};
  for (const auto& t : toks) letters.push_back(parse_seaweed_letter(t));
  return SeaweedWord(std::move(letters));
}

}  // namespace seaweed
