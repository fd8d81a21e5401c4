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

// Meander graphs of seaweed subalgebras of sl_n and the index they determine.
//
// Vertices are 1..n. Each block of a+ occupying positions l..r contributes the
// top arcs {l+i, r-i}; blocks of a- contribute bottom arcs the same way. Every
// component is a cycle or a path (isolated vertices are paths), and
//
//     ind = 2 * cycles + paths - 1.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/detail/union_find.hpp"

namespace seaweed {

struct Arc {
  std::size_t left;   // 1-based, left < right
  std::size_t right;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class MeanderGraph {
 public:
  MeanderGraph(std::size_t n, std::vector<Arc> top, std::vector<Arc> bottom)
      : n_(n), top_(std::move(top)), bottom_(std::move(bottom)),
        top_partner_(n + 1, 0), bottom_partner_(n + 1, 0) {
    link(top_, top_partner_);
    link(bottom_, bottom_partner_);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Arc>& top_arcs() const noexcept { return top_; }
  const std::vector<Arc>& bottom_arcs() const noexcept { return bottom_; }

  /// Other end of the top arc at v, or 0 when v has none.
  std::size_t top_partner(std::size_t v) const { return top_partner_.at(v); }
  std::size_t bottom_partner(std::size_t v) const { return bottom_partner_.at(v); }

  std::size_t degree(std::size_t v) const {
    return (top_partner(v) != 0 ? 1U : 0U) + (bottom_partner(v) != 0 ? 1U : 0U);
  }

 private:
  void link(const std::vector<Arc>& arcs, std::vector<std::size_t>& partner) {
    for (const Arc& arc : arcs) {
      if (arc.left == arc.right || arc.left == 0 || arc.right > n_) {
        throw std::invalid_argument("meander arc out of range or a loop");
      }
      if (partner[arc.left] != 0 || partner[arc.right] != 0) {
        throw std::invalid_argument("meander vertex has two arcs on one layer");
      }
      partner[arc.left] = arc.right;
      partner[arc.right] = arc.left;
    }
  }

  std::size_t n_;
  std::vector<Arc> top_;
  std::vector<Arc> bottom_;
  std::vector<std::size_t> top_partner_;
  std::vector<std::size_t> bottom_partner_;
};

namespace detail {

inline std::vector<Arc> block_arcs(const Composition& a) {
  std::vector<Arc> arcs;
  std::size_t start = 1;
  for (Part block : a.parts()) {
    std::size_t l = start;
    std::size_t r = start + static_cast<std::size_t>(block) - 1;
    for (std::size_t i = 0; i < block / 2; ++i) arcs.push_back({l + i, r - i});
    start += static_cast<std::size_t>(block);
  }
  return arcs;
}

}  // namespace detail

inline MeanderGraph build_meander(const BiComposition& a) {
  return MeanderGraph(static_cast<std::size_t>(a.sum()), detail::block_arcs(a.plus()),
                      detail::block_arcs(a.minus()));
}

struct ComponentCensus {
  std::size_t cycles = 0;
  std::size_t paths = 0;
  std::size_t cycle_vertices = 0;
  std::size_t path_vertices = 0;

  friend bool operator==(const ComponentCensus&, const ComponentCensus&) = default;
};

/// Components by union-find over arcs; a component is a cycle iff all of its
/// vertices have degree 2.
inline ComponentCensus census(const MeanderGraph& g) {
  const std::size_t n = g.vertex_count();
  detail::UnionFind uf(n + 1);
  for (const Arc& arc : g.top_arcs()) uf.unite(arc.left, arc.right);
  for (const Arc& arc : g.bottom_arcs()) uf.unite(arc.left, arc.right);

  // Per root: vertex count and whether some vertex has degree < 2.
  std::vector<std::size_t> members(n + 1, 0);
  std::vector<char> open(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) {
    std::size_t r = uf.find(v);
    ++members[r];
    if (g.degree(v) < 2) open[r] = 1;
  }
  ComponentCensus c;
  for (std::size_t v = 1; v <= n; ++v) {
    if (members[v] == 0) continue;
    if (open[v]) {
      ++c.paths;
      c.path_vertices += members[v];
    } else {
      ++c.cycles;
      c.cycle_vertices += members[v];
    }
  }
  return c;
}

inline std::size_t index_from_census(const ComponentCensus& c) noexcept {
  return 2 * c.cycles + c.paths - 1;
}

/// Index of the standard seaweed subalgebra p_a of sl_n.
inline std::size_t index_seaweed(const BiComposition& a) {
  return index_from_census(census(build_meander(a)));
}

inline bool is_frobenius(const BiComposition& a) {
  ComponentCensus c = census(build_meander(a));
  return c.cycles == 0 && c.paths == 1;
}

/// Index of the standard parabolic p_a = p_(a,(n)).
inline std::size_t index_parabolic(const Composition& a) {
  return index_seaweed(BiComposition(a, Composition::single(a.sum())));
}

inline bool is_frobenius_parabolic(const Composition& a) { return index_parabolic(a) == 0; }

enum class RenderFormat { dot, ascii };

inline RenderFormat parse_render_format(std::string_view token) {
  if (token == "dot") return RenderFormat::dot;
  if (token == "ascii") return RenderFormat::ascii;
  throw std::invalid_argument("unknown render format '" + std::string(token) + "'");
}

namespace detail {

inline std::string arc_label(std::size_t i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return s;
}

inline std::string ascii_layer(const std::vector<Arc>& arcs, std::size_t n, std::size_t width) {
  std::vector<std::string> cell(n + 1, ".");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    cell[arcs[i].left] = cell[arcs[i].right] = arc_label(i);
  }
  std::string row;
  for (std::size_t v = 1; v <= n; ++v) {
    std::string c = cell[v];
    row += std::string(width - c.size() + 1, ' ') + c;
  }
  return row;
}

}  // namespace detail

inline std::string render(const MeanderGraph& g, RenderFormat format) {
  std::ostringstream os;
  const std::size_t n = g.vertex_count();
  if (format == RenderFormat::dot) {
    os << "graph meander {\n";
    for (std::size_t v = 1; v <= n; ++v) os << "  " << v << ";\n";
    for (const Arc& arc : g.top_arcs()) {
      os << "  " << arc.left << " -- " << arc.right << " [label=\"top\"];\n";
    }
    for (const Arc& arc : g.bottom_arcs()) {
      os << "  " << arc.left << " -- " << arc.right
         << " [label=\"bottom\", style=dashed];\n";
    }
    os << "}\n";
    return os.str();
  }
  // Column v shows the label of the arc at v on each layer; '.' means none.
  std::size_t width = std::to_string(n).size();
  width = std::max({width, detail::arc_label(g.top_arcs().size()).size(),
                    detail::arc_label(g.bottom_arcs().size()).size()});
  std::string numbers;
  for (std::size_t v = 1; v <= n; ++v) {
    std::string s = std::to_string(v);
    numbers += std::string(width - s.size() + 1, ' ') + s;
  }
  os << "top   " << detail::ascii_layer(g.top_arcs(), n, width) << '\n';
  os << "      " << numbers << '\n';
  os << "bottom" << detail::ascii_layer(g.bottom_arcs(), n, width) << '\n';
  return os.str();
}

}  // namespace seaweed
