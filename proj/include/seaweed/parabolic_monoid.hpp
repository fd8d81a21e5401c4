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

// Index-preserving operators on compositions (parabolic case):
//
//   S m (a) = ((m+2)a1, a2, ..., ar, (m+1)a1)
//   T m (a) = ((m+1)a1 + (m+2)a2, a3, ..., ar, m a1 + (m+1)a2),  T m ((a1)) = (a1)
//   S~m = theta S m,   T~m = theta T m
//
// where theta reverses a composition. Sums grow by even amounts, so the
// Frobenius compositions split by parity; (1,1) seeds the even ones and (1)
// the odd ones, where the first applied letter must be an S letter.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/seaweed_monoid.hpp"

namespace seaweed {

struct ParabolicLetter {
  Family family = Family::S;
  bool tilde = false;
  std::uint64_t m = 0;

  friend bool operator==(const ParabolicLetter&, const ParabolicLetter&) = default;
  friend auto operator<=>(const ParabolicLetter&, const ParabolicLetter&) = default;
};

class ParabolicWord {
 public:
  ParabolicWord() = default;
  ParabolicWord(std::initializer_list<ParabolicLetter> letters) : letters_(letters) {}
  explicit ParabolicWord(std::vector<ParabolicLetter> letters) : letters_(std::move(letters)) {}

  const std::vector<ParabolicLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const ParabolicLetter& operator[](std::size_t i) const { return letters_[i]; }

  ParabolicWord slice(std::size_t i, std::size_t j) const {
    return ParabolicWord(std::vector<ParabolicLetter>(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                                                      letters_.begin() + static_cast<std::ptrdiff_t>(j)));
  }

  friend ParabolicWord operator*(const ParabolicWord& u, const ParabolicWord& v) {
    std::vector<ParabolicLetter> l = u.letters_;
    l.insert(l.end(), v.letters_.begin(), v.letters_.end());
    return ParabolicWord(std::move(l));
  }

  /// Membership in M^(1): the first applied (rightmost) letter is an S letter.
  bool ends_with_sigma() const noexcept {
    return !letters_.empty() && letters_.back().family == Family::S;
  }

  friend bool operator==(const ParabolicWord&, const ParabolicWord&) = default;
  friend auto operator<=>(const ParabolicWord&, const ParabolicWord&) = default;

 private:
  std::vector<ParabolicLetter> letters_;
};

inline Composition apply_letter_p(const ParabolicLetter& l, const Composition& a) {
  const std::size_t r = a.size();
  if (l.family == Family::T && r == 1) return a;
  std::vector<Part> b;
  b.reserve(r + 1);
  const Part a1 = a[0];
  if (l.family == Family::S) {
    b.push_back(detail::mul(l.m + 2, a1));
    b.insert(b.end(), a.parts().begin() + 1, a.parts().end());
    b.push_back(detail::mul(l.m + 1, a1));
  } else {
    const Part a2 = a[1];
    b.push_back(detail::add(detail::mul(l.m + 1, a1), detail::mul(l.m + 2, a2)));
    b.insert(b.end(), a.parts().begin() + 2, a.parts().end());
    b.push_back(detail::add(detail::mul(l.m, a1), detail::mul(l.m + 1, a2)));
  }
  if (l.tilde) std::reverse(b.begin(), b.end());
  return Composition(std::move(b));
}

inline Composition evaluate_p(const ParabolicWord& w, Composition a) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) a = apply_letter_p(*it, a);
  return a;
}

struct ParabolicWordStats {
  std::uint64_t ell = 0;
  std::uint64_t sigma = 0;
  std::uint64_t sigma_tilde = 0;  // included in sigma
  std::uint64_t tau = 0;
  std::uint64_t tau_tilde = 0;  // included in tau

  void add(const ParabolicLetter& l) noexcept {
    ++ell;
    if (l.family == Family::S) {
      ++sigma;
      if (l.tilde) ++sigma_tilde;
    } else {
      ++tau;
      if (l.tilde) ++tau_tilde;
    }
  }

  friend bool operator==(const ParabolicWordStats&, const ParabolicWordStats&) = default;
};

inline ParabolicWordStats word_stats(const ParabolicWord& w) {
  ParabolicWordStats s;
  for (const auto& l : w.letters()) s.add(l);
  return s;
}

/// Sum increments along w; all even, beta counts entries above 2.
inline WSequence w_sequence_p(const ParabolicWord& w, const Composition& a) {
  WSequence seq;
  seq.values.assign(w.length(), 0);
  Composition cur = a;
  for (std::size_t i = w.length(); i-- > 0;) {
    Composition next = apply_letter_p(w[i], cur);
    seq.values[i] = next.sum() - cur.sum();
    if (seq.values[i] > 2) ++seq.beta;
    cur = std::move(next);
  }
  return seq;
}

class AmbiguousInverse : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ParabolicReduction {
  Composition predecessor;
  ParabolicLetter letter;  // letter(predecessor) == the reduced input
};

/// Strips the last applied letter, or returns nullopt (terminal) when a1 = ar.
///
/// With c = a (or theta(a) for tilde letters) so that c1 > cr, put
/// d = c1 - cr. S m leaves d = a1 and cr = (m+1) a1; T m leaves
/// d = a1 + a2 and cr = m d + a2 with 0 < a2 < d. So the letter is S m when
/// d divides cr and T m otherwise, by Euclidean division of cr by d. Both
/// candidates are checked by forward application and exactly one must match.
inline std::optional<ParabolicReduction> reduce_once_p(const Composition& a) {
  if (a.front() == a.back()) return std::nullopt;
  const bool tilde = a.front() < a.back();
  const Composition c = tilde ? reverse_theta(a) : a;
  const std::size_t r = c.size();
  const Part d = c.front() - c.back();
  const Part last = c.back();
  std::vector<ParabolicReduction> found;

  if (last % d == 0) {
    std::vector<Part> pred{d};
    pred.insert(pred.end(), c.parts().begin() + 1, c.parts().begin() + static_cast<std::ptrdiff_t>(r - 1));
    ParabolicLetter l{Family::S, tilde, last / d - 1};
    Composition x(std::move(pred));
    if (apply_letter_p(l, x) == a) found.push_back({std::move(x), l});
  }
  if (last % d != 0) {
    const Part a2 = last % d;
    std::vector<Part> pred{d - a2, a2};
    pred.insert(pred.end(), c.parts().begin() + 1, c.parts().begin() + static_cast<std::ptrdiff_t>(r - 1));
    ParabolicLetter l{Family::T, tilde, last / d};
    Composition x(std::move(pred));
    if (apply_letter_p(l, x) == a) found.push_back({std::move(x), l});
  }
  if (found.size() != 1) {
    throw AmbiguousInverse("reduce_once_p: " + std::to_string(found.size()) +
                           " inverse letters match " + to_string(a));
  }
  return std::move(found.front());
}

struct ParabolicFactorization {
  int epsilon;  // 0: seed (1,1); 1: seed (1)
  ParabolicWord word;

  friend bool operator==(const ParabolicFactorization&, const ParabolicFactorization&) = default;
};

inline Composition parabolic_seed(int epsilon) {
  return epsilon == 0 ? Composition({1, 1}) : Composition({1});
}

/// The parity class and word reaching a from its seed, or nullopt when a is
/// not Frobenius. Sum 1 is outside both parity classes and is rejected.
inline std::optional<ParabolicFactorization> factorize_p(const Composition& a) {
  if (a.sum() < 2) throw std::invalid_argument("factorize_p: compositions of 1 are not covered");
  std::vector<ParabolicLetter> letters;
  Composition cur = a;
  while (auto r = reduce_once_p(cur)) {
    letters.push_back(r->letter);
    cur = std::move(r->predecessor);
  }
  ParabolicWord w(std::move(letters));
  if (cur == parabolic_seed(0)) return ParabolicFactorization{0, std::move(w)};
  if (cur == parabolic_seed(1)) {
    if (!w.ends_with_sigma()) throw std::logic_error("factorize_p: odd word outside M^(1)");
    return ParabolicFactorization{1, std::move(w)};
  }
  return std::nullopt;
}

struct GeneratedParabolic {
  int epsilon;
  ParabolicWord word;
  Composition value;
  ParabolicWordStats stats;
  std::uint64_t tau_beta = 0;    // tau(w) + beta(m), beta counting steps above 2
  std::uint64_t deficiency = 0;  // n + 1 - p(a) where s(a) = 2n + epsilon

  Part sum() const noexcept { return value.sum(); }
  /// n in s(a) = 2n + epsilon.
  Part half() const noexcept { return (value.sum() - static_cast<Part>(epsilon)) / 2; }
  std::size_t p() const noexcept { return value.size(); }
};

namespace detail {

struct ParabolicNode {
  Composition value;
  std::int64_t parent;
  ParabolicLetter letter;
  ParabolicWordStats stats;
  std::uint64_t tau_beta;
  std::uint64_t deficiency;
};

template <class Visitor>
void parabolic_bfs(int epsilon, Part n_max, std::optional<std::uint64_t> max_deficiency, Visitor&& emit) {
  if (epsilon != 0 && epsilon != 1) throw std::invalid_argument("epsilon must be 0 or 1");
  std::vector<ParabolicNode> nodes;
  std::unordered_set<Composition> seen;
  nodes.push_back({parabolic_seed(epsilon), -1, {}, {}, 0, 0});
  if (nodes.front().value.sum() > n_max) return;
  seen.insert(nodes.front().value);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    // The odd seed (1) lies in F_1, which is not part of either class.
    if (!(epsilon == 1 && head == 0)) {
      std::vector<ParabolicLetter> letters;
      for (std::int64_t i = static_cast<std::int64_t>(head); nodes[static_cast<std::size_t>(i)].parent >= 0;
           i = nodes[static_cast<std::size_t>(i)].parent) {
        letters.push_back(nodes[static_cast<std::size_t>(i)].letter);
      }
      const ParabolicNode& node = nodes[head];
      emit(GeneratedParabolic{epsilon, ParabolicWord(std::move(letters)), node.value, node.stats,
                              node.tau_beta, node.deficiency});
    }
    const Composition a = nodes[head].value;
    const Part s = a.sum();
    const Part budget = n_max - s;
    const bool sigma_only = epsilon == 1 && head == 0;

    auto visit = [&](const ParabolicLetter& l, Part increment) {
      const ParabolicNode& node = nodes[head];
      const std::uint64_t is_sigma = l.family == Family::S ? 1 : 0;
      const std::uint64_t deficiency = node.deficiency + increment / 2 - is_sigma;
      if (max_deficiency && deficiency > *max_deficiency) return false;
      Composition b = apply_letter_p(l, a);
      if (b.sum() != s + increment) throw std::logic_error("parabolic sum law violated in generation");
      if (!seen.insert(b).second) {
        throw CollisionError("composition " + to_string(b) + " reached twice");
      }
      ParabolicWordStats stats = node.stats;
      stats.add(l);
      std::uint64_t tau_beta = node.tau_beta + (1 - is_sigma) + (increment > 2 ? 1 : 0);
      nodes.push_back({std::move(b), static_cast<std::int64_t>(head), l, stats, tau_beta, deficiency});
      return true;
    };

    const Part a1 = a[0];
    for (bool tilde : {false, true}) {
      for (std::uint64_t m = 0; 2 * (m + 1) * a1 <= budget; ++m) {
        if (!visit({Family::S, tilde, m}, 2 * (m + 1) * a1)) break;
      }
      if (sigma_only || a.size() < 2) continue;
      const Part a2 = a[1];
      for (std::uint64_t m = 0; 2 * m * a1 + 2 * (m + 1) * a2 <= budget; ++m) {
        if (!visit({Family::T, tilde, m}, 2 * m * a1 + 2 * (m + 1) * a2)) break;
      }
    }
  }
}

}  // namespace detail

/// Frobenius compositions of the parity class epsilon with sum <= n_max.
template <class Visitor>
void generate_frobenius_p(int epsilon, Part n_max, Visitor&& emit) {
  detail::parabolic_bfs(epsilon, n_max, std::nullopt, std::forward<Visitor>(emit));
}

/// As generate_frobenius_p, restricted to s(a) = 2n + epsilon with p(a) >= n + 1 - t.
template <class Visitor>
void generate_deficiency_p(int epsilon, std::uint64_t t, Part n_max, Visitor&& emit) {
  detail::parabolic_bfs(epsilon, n_max, t, std::forward<Visitor>(emit));
}

inline std::vector<GeneratedParabolic> collect_frobenius_p(int epsilon, Part n_max) {
  std::vector<GeneratedParabolic> out;
  generate_frobenius_p(epsilon, n_max, [&](const GeneratedParabolic& g) { out.push_back(g); });
  return out;
}

// Text form: "S0", "S~0", "T1", "T~1"; identity prints as "id".

inline std::string to_string(const ParabolicLetter& l) {
  std::string s(1, l.family == Family::S ? 'S' : 'T');
  if (l.tilde) s += '~';
  s += std::to_string(l.m);
  return s;
}

inline std::string to_string(const ParabolicWord& w) {
  if (w.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ParabolicLetter& l) { return os << to_string(l); }
inline std::ostream& operator<<(std::ostream& os, const ParabolicWord& w) { return os << to_string(w); }

inline ParabolicLetter parse_parabolic_letter(std::string_view tok) {
  auto bad = [&] { return ParseError("invalid parabolic letter '" + std::string(tok) + "'"); };
  if (tok.size() < 2) throw bad();
  ParabolicLetter l;
  if (tok[0] == 'S') {
    l.family = Family::S;
  } else if (tok[0] == 'T') {
    l.family = Family::T;
  } else {
    throw bad();
  }
  std::string_view digits = tok.substr(1);
  if (!digits.empty() && digits[0] == '~') {
    l.tilde = true;
    digits.remove_prefix(1);
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), l.m);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) throw bad();
  return l;
}

inline ParabolicWord parse_parabolic_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "id") return {};
  std::vector<ParabolicLetter> letters;
  for (const auto& t : toks) letters.push_back(parse_parabolic_letter(t));
  return ParabolicWord(std::move(letters));
}

}  // namespace seaweed
