#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msym/stree.hpp"

namespace msym {

/// Vertex of T named by the child indices leading to it from the root o.
/// Text form: `/i1/i2/.../ik`, root = `/`.
class VertexAddress {
 public:
  VertexAddress() = default;
  explicit VertexAddress(std::vector<std::uint32_t> path) : path_(std::move(path)) {}

  static VertexAddress parse(std::string_view text);
  std::string str() const;

  const std::vector<std::uint32_t>& path() const noexcept { return path_; }
  std::size_t depth() const noexcept { return path_.size(); }
  bool is_root() const noexcept { return path_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return path_[i]; }

  VertexAddress parent() const;
  VertexAddress child(std::uint32_t index) const;
  VertexAddress prefix(std::size_t length) const;
  bool is_prefix_of(const VertexAddress& other) const noexcept;

  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;
  friend auto operator<=>(const VertexAddress&, const VertexAddress&) = default;

 private:
  std::vector<std::uint32_t> path_;
};

std::size_t common_prefix_length(const VertexAddress& a, const VertexAddress& b) noexcept;

struct TVertex {
  VertexAddress address;
  SLabel label;
  std::optional<SLabel> parent_label;  // empty at the root
};

/// A rational end of T, named by its canonical anchor: the c(p,1) vertex at
/// which the ray from the root to this end starts its final ascending run
/// c(p,1), c(p,2), ... . Equivalently, a c(p,1) vertex whose parent is a v-
/// or e-vertex.
struct Cusp {
  VertexAddress anchor;

  friend bool operator==(const Cusp&, const Cusp&) = default;
  friend auto operator<=>(const Cusp&, const Cusp&) = default;
};

enum class SiteType : std::uint8_t { E, S, O, NS };

std::string to_string(SiteType t);

/// A cusp attached to a minimal vertex, with the route reaching it.
struct Port {
  Cusp cusp;
  VertexAddress vertex;  // the c(p,1)-vertex where the route meets the cusp's run
  Point point;           // p of that c(p,1) label
  std::size_t branch = 0;
  VertexAddress via;     // v-vertex adjacent to `vertex` on the route (the site for e-sites)
};

/// Minimal vertex together with every attached cusp.
///
/// Branches are the neighbours of the site the routes leave through: each
/// c-neighbour of an e- or s-site, each v-neighbour of an o-site, each
/// o-neighbour of an ns-site.
struct SiteStar {
  TVertex site;
  SiteType type = SiteType::E;
  std::vector<VertexAddress> branches;
  std::vector<Port> ports;

  const Port* find(const Cusp& c) const;
};

/// Which reduced symbol the pair of ports forms and at which minimal vertex.
struct PairShape {
  SiteType type;
  VertexAddress site;
};
PairShape pair_shape(const SiteStar& star, const Port& a, const Port& b);

/// The (q+1)-regular tree T with labels propagated from S, evaluated lazily.
class LabeledTree {
 public:
  explicit LabeledTree(const Curve& curve);

  const QuotientTree& quotient() const noexcept { return quotient_; }
  const Curve& curve() const noexcept { return quotient_.curve(); }
  int q() const noexcept { return quotient_.q(); }

  TVertex root() const;

  /// Child labels of a vertex labelled `label` whose parent is labelled
  /// `parent` (nullopt at the root): NeighborSpec minus one parent slot,
  /// successors first in canonical order, then predecessor copies.
  std::vector<SLabel> child_labels(const SLabel& label,
                                   const std::optional<SLabel>& parent) const;
  std::vector<TVertex> children(const TVertex& v) const;
  TVertex child(const TVertex& v, std::uint32_t index) const;

  /// Throws InvalidAddress when an index is out of range.
  TVertex vertex(const VertexAddress& addr) const;
  /// Labels of every prefix of `addr`, root first.
  std::vector<SLabel> labels_along(const VertexAddress& addr) const;
  SLabel label_of(const VertexAddress& addr) const { return vertex(addr).label; }
  int invariant_at(const VertexAddress& addr) const {
    return invariant_of_label(label_of(addr));
  }

  std::optional<TVertex> parent(const TVertex& v) const;
  /// Parent (if any) followed by the children.
  std::vector<TVertex> neighbors(const TVertex& v) const;
  /// The neighbour carrying `label` when that label occurs once around `v`.
  std::optional<TVertex> neighbor_labelled(const TVertex& v, const SLabel& label) const;

  /// Unique non-backtracking path a -> ... -> b, inclusive.
  std::vector<VertexAddress> geodesic(const VertexAddress& a, const VertexAddress& b) const;

  /// Throws NotAnAnchor unless `addr` is c(p,1) with its c(p,2) neighbour below it.
  Cusp cusp_from_anchor(const VertexAddress& addr) const;
  bool is_anchor(const TVertex& v) const;

  /// The end reached from a c-labelled vertex by always stepping to the higher
  /// neighbour.
  Cusp cusp_through(const TVertex& c_vertex) const;
  /// Invariant at which the ascending run from `c_vertex` joins its cusp's
  /// ray from the root.
  int merge_level(const TVertex& c_vertex) const;
  /// Ascending run from `c_vertex` up to and including invariant `top`.
  std::vector<TVertex> ascent(const TVertex& c_vertex, int top) const;

  /// Ray c(p,1), c(p,2), ... from the anchor, `depth` vertices.
  std::vector<TVertex> tail(const Cusp& cusp, int depth) const;
  /// Ray from the root through the anchor, extended `extra` steps past it.
  std::vector<TVertex> root_ray(const Cusp& cusp, std::size_t extra) const;

  SiteType site_type(const TVertex& v) const;  // throws NotMinimal
  SiteStar site_star(const VertexAddress& site) const;
  std::vector<Cusp> attached_cusps(const VertexAddress& site) const;

  /// Vertices within `radius` of `center`, breadth-first.
  std::vector<TVertex> ball(const VertexAddress& center, int radius) const;
  std::string ball_dot(const VertexAddress& center, int radius) const;

 private:
  QuotientTree quotient_;
};

}  // namespace msym
