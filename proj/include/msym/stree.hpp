#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msym/curve.hpp"

namespace msym {

enum class LabelKind : std::uint8_t { O, V, C, E };

/// Vertex label: o, v(x), c(p, n) or e(p).
///
/// Only the fields relevant to `kind` take part in comparisons. The total order
/// is O < V < C < E; v-labels by x, c-labels by (p, n), e-labels by p.
struct SLabel {
  LabelKind kind = LabelKind::O;
  XCoord x{};                        // V
  FiberType fiber = FiberType::NS;   // V: classification of x
  Point p{};                         // C, E
  int n = 0;                         // C: n >= 1

  static SLabel O() { return SLabel{}; }
  static SLabel V(XCoord x, FiberType fiber) {
    SLabel l;
    l.kind = LabelKind::V;
    l.x = x;
    l.fiber = fiber;
    return l;
  }
  static SLabel C(Point p, int n) {
    SLabel l;
    l.kind = LabelKind::C;
    l.p = p;
    l.n = n;
    return l;
  }
  static SLabel E(Point p) {
    SLabel l;
    l.kind = LabelKind::E;
    l.p = p;
    return l;
  }

  bool is_ns() const { return kind == LabelKind::V && fiber == FiberType::NS; }

  friend bool operator==(const SLabel& a, const SLabel& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const SLabel& a, const SLabel& b);
};

/// The invariant N(E): c(p,n) -> n; os/s-typed v and e -> 0; o -> -1; ns-typed v -> -2.
int invariant_of_label(const SLabel& l);

/// True for the label kinds that can be local minima of a geodesic profile
/// (e, s-typed v, o, ns-typed v).
bool is_minimal_type(const SLabel& l);

/// Text form: o, v(1), c((1,1),2), e(inf).
std::string to_string(const SLabel& l);

/// Vertex type tag used in reports: o, ns, os, s, c or e.
std::string vertex_type(const SLabel& l);

/// Neighbour structure of a label inside the full tree: its successors in S
/// (canonical order) plus `predecessor_copies` copies of its S-predecessor.
struct NeighborSpec {
  std::vector<SLabel> successors;
  std::optional<SLabel> predecessor;
  int predecessor_copies = 0;

  std::size_t size() const {
    return successors.size() + static_cast<std::size_t>(predecessor_copies);
  }
};

/// The quotient tree S = Gamma \ T, stored as its finite core plus one
/// symbolic ray per rational point.
class QuotientTree {
 public:
  explicit QuotientTree(Curve curve);

  const Curve& curve() const noexcept { return curve_; }
  int q() const noexcept { return curve_.q(); }

  /// One ray per rational point; the ends of S.
  const std::vector<Point>& rays() const noexcept { return curve_.points(); }
  /// Points p with an e(p) vertex (points on one-solution fibres).
  std::vector<Point> e_points() const;

  std::vector<SLabel> successors_in_S(const SLabel& l) const;
  std::optional<SLabel> predecessor_in_S(const SLabel& l) const;
  NeighborSpec neighbor_spec(const SLabel& l) const;

  /// e-vertices, s-typed v, o, ns-typed v (in that order).
  std::vector<SLabel> minimal_vertices() const;

  /// Every vertex with its rays cut at c(p, ray_depth), canonical order.
  struct Truncation {
    std::vector<SLabel> vertices;
    std::vector<std::pair<SLabel, SLabel>> edges;  // (predecessor, successor)
  };
  Truncation materialize(int ray_depth) const;

  /// Child-index path of the copy of S inside T rooted at o.
  std::vector<std::uint32_t> embed(const SLabel& l) const;

 private:
  Curve curve_;
};

QuotientTree build_quotient_tree(const Curve& curve);

/// Graphviz rendering of S, rays cut at `ray_depth`.
std::string quotient_tree_dot(const QuotientTree& tree, int ray_depth = 3);

}  // namespace msym
