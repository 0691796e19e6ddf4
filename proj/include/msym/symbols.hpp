#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msym/ttree.hpp"

namespace msym {

/// Ordered pair of distinct cusps {from, to}; identified with the geodesic
/// from `from` to `to`.
struct ModularSymbol {
  Cusp from;
  Cusp to;

  friend bool operator==(const ModularSymbol&, const ModularSymbol&) = default;
  friend auto operator<=>(const ModularSymbol&, const ModularSymbol&) = default;
};

/// `{/a/b,/c/d}`
std::string to_string(const ModularSymbol& s);
ModularSymbol parse_symbol(std::string_view text);

ModularSymbol reverse(const ModularSymbol& s);

/// The finite part of a geodesic between two cusps.
///
/// `core` runs from the last c(p,1)-vertex of the descent out of `from` to the
/// first c(p',1)-vertex of the ascent into `to`. Outside the core the profile
/// increases strictly towards both cusps.
struct SymbolPath {
  std::vector<TVertex> core;
  std::vector<int> profile;
  VertexAddress divergence;  // last common vertex of the two rays from the root

  std::vector<SLabel> labels() const;
  std::vector<std::size_t> local_minima() const;
  std::vector<std::size_t> local_maxima() const;
};

SymbolPath symbol_path(const LabeledTree& tree, const ModularSymbol& s);

/// Oriented reduced class: the label sequence of a reduced symbol.
///
///   E:  c(p,1), e(p), c(p,1)                       from = to = p
///   S:  c((x,y),1), v(x), c((x,y'),1)             from = (x,y), to = (x,y')
///   O:  c(p,1), v(x), o, v(x'), c(p',1)           x != x'
///   NS: c(p,1), v(x), o, v(z), o, v(x'), c(p',1)  z a no-solution fibre
struct ReducedClass {
  SiteType type = SiteType::E;
  Point from;
  Point to;
  XCoord z;  // NS only

  static ReducedClass e(Point p) { return {SiteType::E, p, p, {}}; }
  static ReducedClass s(Point from, Point to) { return {SiteType::S, from, to, {}}; }
  static ReducedClass o(Point from, Point to) { return {SiteType::O, from, to, {}}; }
  static ReducedClass ns(Point from, XCoord z, Point to) { return {SiteType::NS, from, to, z}; }

  friend bool operator==(const ReducedClass& a, const ReducedClass& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const ReducedClass& a, const ReducedClass& b);
};

std::string to_string(const ReducedClass& c);
ReducedClass class_reverse(const ReducedClass& c);

/// Matches a core label sequence against the four reduced templates.
std::optional<ReducedClass> classify_core(const std::vector<TVertex>& core);

/// nullopt means NotReduced. Throws DegenerateSymbol for equal cusps.
std::optional<ReducedClass> classify_reduced(const LabeledTree& tree, const ModularSymbol& s);

/// The minimal vertex at the bottom of a reduced core.
const TVertex& reduced_site(const std::vector<TVertex>& core);

/// Cusp reached from a local maximum by stepping to the smallest-labelled
/// higher neighbour until a c-vertex is reached, then following its ray.
Cusp peak_cusp(const LabeledTree& tree, const TVertex& peak);

/// The first split point of the decomposition, or nullopt if `s` is reduced.
std::optional<Cusp> split_point(const LabeledTree& tree, const ModularSymbol& s);

/// Telescoping reduced pieces s_1 ... s_k of `s`, one per profile minimum.
std::vector<ModularSymbol> decompose(const LabeledTree& tree, const ModularSymbol& s);

}  // namespace msym
