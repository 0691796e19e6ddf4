#include "msym/stree.hpp"

#include <algorithm>
#include <sstream>

namespace msym {

std::strong_ordering operator<=>(const SLabel& a, const SLabel& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case LabelKind::O: return std::strong_ordering::equal;
    case LabelKind::V: return a.x <=> b.x;
    case LabelKind::C:
      if (auto c = a.p <=> b.p; c != 0) return c;
      return a.n <=> b.n;
    case LabelKind::E: return a.p <=> b.p;
  }
  return std::strong_ordering::equal;
}

int invariant_of_label(const SLabel& l) {
  switch (l.kind) {
    case LabelKind::O: return -1;
    case LabelKind::V: return l.fiber == FiberType::NS ? -2 : 0;
    case LabelKind::C: return l.n;
    case LabelKind::E: return 0;
  }
  return 0;
}

bool is_minimal_type(const SLabel& l) {
  switch (l.kind) {
    case LabelKind::O: return true;
    case LabelKind::V: return l.fiber != FiberType::OS;
    case LabelKind::C: return false;
    case LabelKind::E: return true;
  }
  return false;
}

std::string to_string(const SLabel& l) {
  switch (l.kind) {
    case LabelKind::O: return "o";
    case LabelKind::V: return "v(" + to_string(l.x) + ")";
    case LabelKind::C: return "c(" + to_string(l.p) + "," + std::to_string(l.n) + ")";
    case LabelKind::E: return "e(" + to_string(l.p) + ")";
  }
  return "?";
}

std::string vertex_type(const SLabel& l) {
  switch (l.kind) {
    case LabelKind::O: return "o";
    case LabelKind::V: return to_string(l.fiber);
    case LabelKind::C: return "c";
    case LabelKind::E: return "e";
  }
  return "?";
}

QuotientTree::QuotientTree(Curve curve) : curve_(std::move(curve)) {}

std::vector<Point> QuotientTree::e_points() const {
  std::vector<Point> out;
  for (const Point& p : curve_.points())
    if (curve_.fiber_type(p.xcoord()) == FiberType::OS) out.push_back(p);
  return out;
}

std::vector<SLabel> QuotientTree::successors_in_S(const SLabel& l) const {
  std::vector<SLabel> out;
  switch (l.kind) {
    case LabelKind::O:
      for (const XCoord& x : curve_.xcoords())
        out.push_back(SLabel::V(x, curve_.fiber_type(x)));
      break;
    case LabelKind::V:
      for (const Point& p : curve_.fiber(l.x).solutions) out.push_back(SLabel::C(p, 1));
      break;
    case LabelKind::C:
      out.push_back(SLabel::C(l.p, l.n + 1));
      if (l.n == 1 && curve_.fiber_type(l.p.xcoord()) == FiberType::OS)
        out.push_back(SLabel::E(l.p));
      break;
    case LabelKind::E:
      break;
  }
  return out;
}

std::optional<SLabel> QuotientTree::predecessor_in_S(const SLabel& l) const {
  switch (l.kind) {
    case LabelKind::O: return std::nullopt;
    case LabelKind::V: return SLabel::O();
    case LabelKind::C:
      if (l.n == 1) {
        const XCoord x = l.p.xcoord();
        return SLabel::V(x, curve_.fiber_type(x));
      }
      return SLabel::C(l.p, l.n - 1);
    case LabelKind::E: return SLabel::C(l.p, 1);
  }
  return std::nullopt;
}

NeighborSpec QuotientTree::neighbor_spec(const SLabel& l) const {
  NeighborSpec spec;
  spec.successors = successors_in_S(l);
  spec.predecessor = predecessor_in_S(l);
  if (spec.predecessor)
    spec.predecessor_copies = q() + 1 - static_cast<int>(spec.successors.size());
  return spec;
}

std::vector<SLabel> QuotientTree::minimal_vertices() const {
  std::vector<SLabel> out;
  for (const Point& p : e_points()) out.push_back(SLabel::E(p));
  for (const XCoord& x : curve_.xcoords())
    if (curve_.fiber_type(x) == FiberType::S) out.push_back(SLabel::V(x, FiberType::S));
  out.push_back(SLabel::O());
  for (const XCoord& x : curve_.xcoords())
    if (curve_.fiber_type(x) == FiberType::NS) out.push_back(SLabel::V(x, FiberType::NS));
  return out;
}

QuotientTree::Truncation QuotientTree::materialize(int ray_depth) const {
  Truncation t;
  std::vector<SLabel> frontier{SLabel::O()};
  while (!frontier.empty()) {
    std::vector<SLabel> next;
    for (const SLabel& v : frontier) {
      t.vertices.push_back(v);
      for (const SLabel& w : successors_in_S(v)) {
        if (w.kind == LabelKind::C && w.n > ray_depth) continue;
        t.edges.emplace_back(v, w);
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::sort(t.vertices.begin(), t.vertices.end());
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

std::vector<std::uint32_t> QuotientTree::embed(const SLabel& l) const {
  auto v_index = [&](const XCoord& x) { return static_cast<std::uint32_t>(curve_.x_index(x)); };
  auto c_index = [&](const Point& p) {
    const auto& sols = curve_.fiber(p.xcoord()).solutions;
    return static_cast<std::uint32_t>(std::find(sols.begin(), sols.end(), p) - sols.begin());
  };
  switch (l.kind) {
    case LabelKind::O: return {};
    case LabelKind::V: return {v_index(l.x)};
    case LabelKind::C: {
      std::vector<std::uint32_t> path{v_index(l.p.xcoord()), c_index(l.p)};
      // c(p, n+1) is always the first child of c(p, n) along the embedded ray.
      for (int k = 1; k < l.n; ++k) path.push_back(0);
      return path;
    }
    case LabelKind::E:
      // Children of the embedded c(p,1) are [c(p,2), e(p), v(x)...].
      return {v_index(l.p.xcoord()), c_index(l.p), 1};
  }
  return {};
}

QuotientTree build_quotient_tree(const Curve& curve) { return QuotientTree(curve); }

std::string quotient_tree_dot(const QuotientTree& tree, int ray_depth) {
  const auto t = tree.materialize(ray_depth);
  std::ostringstream os;
  os << "graph S {\n  node [shape=box];\n";
  for (const SLabel& v : t.vertices) {
    os << "  \"" << to_string(v) << "\" [label=\"" << to_string(v) << " [" << vertex_type(v)
       << ", " << invariant_of_label(v) << "]\"];\n";
  }
  for (const auto& [a, b] : t.edges)
    os << "  \"" << to_string(a) << "\" -- \"" << to_string(b) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace msym
