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

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seaweed {

using Part = std::uint64_t;

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

// With SEAWEED_CHECKED_ARITHMETIC every part computation is overflow-checked.
inline Part mul(Part a, Part b) {
#ifdef SEAWEED_CHECKED_ARITHMETIC
  Part r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("part overflow");
  return r;
#else
  return a * b;
#endif
}

inline Part add(Part a, Part b) {
#ifdef SEAWEED_CHECKED_ARITHMETIC
  Part r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("part overflow");
  return r;
#else
  return a + b;
#endif
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace detail

/// A composition (a_1, ..., a_r): a nonempty sequence of positive parts.
class Composition {
 public:
  Composition(std::initializer_list<Part> parts)
      : Composition(std::vector<Part>(parts)) {}

  explicit Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw CompositionError("composition must have at least one part");
    for (Part x : parts_) {
      if (x == 0) throw CompositionError("composition parts must be positive");
    }
  }

  /// The one-part composition (n).
  static Composition single(Part n) { return Composition({n}); }

  std::span<const Part> parts() const noexcept { return parts_; }
  const std::vector<Part>& vector() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  Part operator[](std::size_t i) const { return parts_[i]; }
  Part front() const noexcept { return parts_.front(); }
  Part back() const noexcept { return parts_.back(); }

  Part sum() const noexcept {
    Part s = 0;
    for (Part x : parts_) s += x;
    return s;
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<Part> parts_;
};

/// p(a) = r.
inline std::size_t parts_count(const Composition& a) noexcept { return a.size(); }

/// s(a) = a_1 + ... + a_r.
inline Part sum(const Composition& a) noexcept { return a.sum(); }

/// theta: (a_1, ..., a_r) -> (a_r, ..., a_1).
inline Composition reverse_theta(const Composition& a) {
  std::vector<Part> r(a.parts().rbegin(), a.parts().rend());
  return Composition(std::move(r));
}

/// A pair (a+, a-) of compositions of the same integer n.
class BiComposition {
 public:
  BiComposition(Composition plus, Composition minus)
      : plus_(std::move(plus)), minus_(std::move(minus)) {
    if (plus_.sum() != minus_.sum()) {
      throw CompositionError("bicomposition sides must have equal sums");
    }
  }

  const Composition& plus() const noexcept { return plus_; }
  const Composition& minus() const noexcept { return minus_; }

  /// s(a), the common sum of both sides.
  Part sum() const noexcept { return plus_.sum(); }

  /// p(a) = p(a+) + p(a-).
  std::size_t parts_count() const noexcept { return plus_.size() + minus_.size(); }

  /// The vector (p(a+), p(a-)).
  std::pair<std::size_t, std::size_t> parts_vector() const noexcept {
    return {plus_.size(), minus_.size()};
  }

  friend bool operator==(const BiComposition&, const BiComposition&) = default;
  friend auto operator<=>(const BiComposition&, const BiComposition&) = default;

 private:
  Composition plus_;
  Composition minus_;
};

/// The seed ((1),(1)).
inline BiComposition seed_bicomposition() { return BiComposition({1}, {1}); }

/// A bicomposition or the null element o.
class MaybeBiComposition {
 public:
  MaybeBiComposition() = default;  // o
  MaybeBiComposition(BiComposition value) : value_(std::move(value)) {}  // NOLINT

  static MaybeBiComposition null() { return {}; }

  bool is_null() const noexcept { return !value_.has_value(); }
  explicit operator bool() const noexcept { return value_.has_value(); }

  const BiComposition& value() const {
    if (!value_) throw std::logic_error("null bicomposition has no value");
    return *value_;
  }
  const BiComposition& operator*() const { return value(); }
  const BiComposition* operator->() const { return &value(); }

  /// s(o) = 0.
  Part sum() const noexcept { return value_ ? value_->sum() : 0; }
  /// p(o) = 0.
  std::size_t parts_count() const noexcept { return value_ ? value_->parts_count() : 0; }
  /// p-vector, (0,0) for o.
  std::pair<std::size_t, std::size_t> parts_vector() const noexcept {
    return value_ ? value_->parts_vector() : std::pair<std::size_t, std::size_t>{0, 0};
  }

  friend bool operator==(const MaybeBiComposition&, const MaybeBiComposition&) = default;

 private:
  std::optional<BiComposition> value_;
};

/// rho: (a+, a-) -> (a-, a+).
inline BiComposition swap_rho(const BiComposition& a) { return {a.minus(), a.plus()}; }

inline MaybeBiComposition swap_rho(const MaybeBiComposition& a) {
  if (a.is_null()) return a;
  return swap_rho(a.value());
}

inline Composition scale(Part n, const Composition& a) {
  std::vector<Part> r;
  r.reserve(a.size());
  for (Part x : a.parts()) r.push_back(detail::mul(n, x));
  return Composition(std::move(r));
}

/// Multiplies every entry of both sides by n.
inline BiComposition scale(Part n, const BiComposition& a) {
  return {scale(n, a.plus()), scale(n, a.minus())};
}

// Canonical text: "2,3,2" for compositions, "2,3,2|4,3" for bicompositions,
// "o" for the null element.

inline std::string to_string(const Composition& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

inline std::string to_string(const BiComposition& a) {
  return to_string(a.plus()) + '|' + to_string(a.minus());
}

inline std::string to_string(const MaybeBiComposition& a) {
  return a.is_null() ? std::string("o") : to_string(a.value());
}

inline std::ostream& operator<<(std::ostream& os, const Composition& a) { return os << to_string(a); }
inline std::ostream& operator<<(std::ostream& os, const BiComposition& a) { return os << to_string(a); }
inline std::ostream& operator<<(std::ostream& os, const MaybeBiComposition& a) {
  return os << to_string(a);
}

inline Composition parse_composition(std::string_view text) {
  std::vector<Part> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    Part value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("invalid composition '" + std::string(text) + "'");
    }
    if (value == 0) throw ParseError("composition parts must be positive: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

inline BiComposition parse_bicomposition(std::string_view text) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("bicomposition must look like '2,3,2|4,3': '" + std::string(text) + "'");
  }
  Composition plus = parse_composition(text.substr(0, bar));
  Composition minus = parse_composition(text.substr(bar + 1));
  if (plus.sum() != minus.sum()) {
    throw ParseError("bicomposition sides have different sums: '" + std::string(text) + "'");
  }
  return {std::move(plus), std::move(minus)};
}

inline MaybeBiComposition parse_maybe_bicomposition(std::string_view text) {
  if (text == "o") return MaybeBiComposition::null();
  return parse_bicomposition(text);
}

/// Calls f(c) for every composition of n, in lexicographic-by-binary-mask order.
template <class F>
void for_each_composition(Part n, F&& f) {
  if (n == 0) return;
  if (n > 63) throw std::invalid_argument("for_each_composition: n too large");
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<Part> parts;
  parts.reserve(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    parts.clear();
    Part run = 1;
    for (Part i = 0; i + 1 < n; ++i) {
      if ((mask >> i) & 1U) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    f(Composition(parts));
  }
}

inline std::vector<Composition> compositions_of(Part n) {
  std::vector<Composition> out;
  for_each_composition(n, [&](Composition c) { out.push_back(std::move(c)); });
  return out;
}

}  // namespace seaweed

template <>
struct std::hash<seaweed::Composition> {
  std::size_t operator()(const seaweed::Composition& a) const noexcept {
    std::size_t seed = a.size();
    for (seaweed::Part x : a.parts()) seaweed::detail::hash_combine(seed, std::hash<seaweed::Part>{}(x));
    return seed;
  }
};

template <>
struct std::hash<seaweed::BiComposition> {
  std::size_t operator()(const seaweed::BiComposition& a) const noexcept {
    std::size_t seed = std::hash<seaweed::Composition>{}(a.plus());
    seaweed::detail::hash_combine(seed, std::hash<seaweed::Composition>{}(a.minus()));
    return seed;
  }
};
