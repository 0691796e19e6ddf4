#include "msym/symbols.hpp"

#include <algorithm>

#include "msym/error.hpp"

namespace msym {

std::string to_string(const ModularSymbol& s) {
  return "{" + s.from.anchor.str() + "," + s.to.anchor.str() + "}";
}

ModularSymbol parse_symbol(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("symbol must look like {<addr>,<addr>}, got '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw ParseError("symbol needs exactly two addresses");
  return ModularSymbol{Cusp{VertexAddress::parse(text.substr(0, comma))},
                       Cusp{VertexAddress::parse(text.substr(comma + 1))}};
}

ModularSymbol reverse(const ModularSymbol& s) { return ModularSymbol{s.to, s.from}; }

std::vector<SLabel> SymbolPath::labels() const {
  std::vector<SLabel> out;
  out.reserve(core.size());
  for (const auto& v : core) out.push_back(v.label);
  return out;
}

// Core endpoints sit at invariant 1 with invariant 2 just outside, so only
// interior positions can be extrema.
std::vector<std::size_t> SymbolPath::local_minima() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < profile.size(); ++i)
    if (profile[i - 1] > profile[i] && profile[i] < profile[i + 1]) out.push_back(i);
  return out;
}

std::vector<std::size_t> SymbolPath::local_maxima() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < profile.size(); ++i)
    if (profile[i - 1] < profile[i] && profile[i] > profile[i + 1]) out.push_back(i);
  return out;
}

SymbolPath symbol_path(const LabeledTree& tree, const ModularSymbol& s) {
  (void)tree.cusp_from_anchor(s.from.anchor);
  (void)tree.cusp_from_anchor(s.to.anchor);
  if (s.from == s.to) throw DegenerateSymbol("both ends are " + s.from.anchor.str());

  // The rays from the root diverge no deeper than the deeper anchor.
  const std::size_t depth = std::max(s.from.anchor.depth(), s.to.anchor.depth()) + 1;
  const auto ray_from = tree.root_ray(s.from, depth - s.from.anchor.depth());
  const auto ray_to = tree.root_ray(s.to, depth - s.to.anchor.depth());
  std::size_t d = 0;
  while (d + 1 <= depth && ray_from[d + 1].address == ray_to[d + 1].address) ++d;

  std::vector<TVertex> walk;
  for (std::size_t k = depth; k > d; --k) walk.push_back(ray_from[k]);
  for (std::size_t k = d; k <= depth; ++k) walk.push_back(ray_to[k]);

  std::size_t lo = 0;
  while (invariant_of_label(walk[lo].label) > 1) ++lo;
  std::size_t hi = walk.size() - 1;
  while (invariant_of_label(walk[hi].label) > 1) --hi;
  if (lo >= hi || walk[lo].label.n != 1 || walk[hi].label.n != 1)
    throw InternalError("malformed geodesic for " + to_string(s));

  SymbolPath path;
  path.divergence = ray_from[d].address;
  path.core.assign(walk.begin() + static_cast<long>(lo), walk.begin() + static_cast<long>(hi) + 1);
  for (const auto& v : path.core) path.profile.push_back(invariant_of_label(v.label));
  return path;
}

std::strong_ordering operator<=>(const ReducedClass& a, const ReducedClass& b) {
  if (auto c = a.type <=> b.type; c != 0) return c;
  if (auto c = a.from <=> b.from; c != 0) return c;
  if (a.type == SiteType::NS)
    if (auto c = a.z <=> b.z; c != 0) return c;
  return a.to <=> b.to;
}

std::string to_string(const ReducedClass& c) {
  switch (c.type) {
    case SiteType::E: return "e(" + to_string(c.from) + ")";
    case SiteType::S:
      return "s(" + to_string(c.from.xcoord()) + ":" + std::to_string(c.from.y) + "->" +
             std::to_string(c.to.y) + ")";
    case SiteType::O: return "o(" + to_string(c.from) + "->" + to_string(c.to) + ")";
    case SiteType::NS:
      return "ns(" + to_string(c.from) + "->" + to_string(c.z) + "->" + to_string(c.to) + ")";
  }
  return "?";
}

ReducedClass class_reverse(const ReducedClass& c) {
  ReducedClass r = c;
  std::swap(r.from, r.to);
  return r;
}

std::optional<ReducedClass> classify_core(const std::vector<TVertex>& core) {
  auto is_c1 = [](const SLabel& l) { return l.kind == LabelKind::C && l.n == 1; };
  auto is_v_over = [](const SLabel& l, const Point& p) {
    return l.kind == LabelKind::V && l.x == p.xcoord() && l.fiber != FiberType::NS;
  };
  const std::size_t n = core.size();
  if (n != 3 && n != 5 && n != 7) return std::nullopt;
  const SLabel& first = core.front().label;
  const SLabel& last = core.back().label;
  if (!is_c1(first) || !is_c1(last)) return std::nullopt;

  if (n == 3) {
    const SLabel& mid = core[1].label;
    if (mid.kind == LabelKind::E && mid.p == first.p && last.p == first.p)
      return ReducedClass::e(first.p);
    if (mid.kind == LabelKind::V && mid.fiber == FiberType::S && is_v_over(mid, first.p) &&
        is_v_over(mid, last.p) && !(first.p == last.p))
      return ReducedClass::s(first.p, last.p);
    return std::nullopt;
  }
  if (!is_v_over(core[1].label, first.p) || core[2].label.kind != LabelKind::O ||
      !is_v_over(core[n - 2].label, last.p) || core[n - 3].label.kind != LabelKind::O)
    return std::nullopt;
  if (n == 5) {
    if (first.p.xcoord() == last.p.xcoord()) return std::nullopt;
    return ReducedClass::o(first.p, last.p);
  }
  const SLabel& mid = core[3].label;
  if (!mid.is_ns()) return std::nullopt;
  return ReducedClass::ns(first.p, mid.x, last.p);
}

std::optional<ReducedClass> classify_reduced(const LabeledTree& tree, const ModularSymbol& s) {
  return classify_core(symbol_path(tree, s).core);
}

const TVertex& reduced_site(const std::vector<TVertex>& core) { return core[core.size() / 2]; }

Cusp peak_cusp(const LabeledTree& tree, const TVertex& peak) {
  TVertex v = peak;
  while (v.label.kind != LabelKind::C) {
    const int target = invariant_of_label(v.label) + 1;
    std::optional<TVertex> best;
    for (TVertex& w : tree.neighbors(v)) {
      if (invariant_of_label(w.label) != target) continue;
      if (!best || w.label < best->label || (w.label == best->label && w.address < best->address))
        best = std::move(w);
    }
    if (!best) throw InternalError("no higher neighbour at " + v.address.str());
    v = std::move(*best);
  }
  return tree.cusp_through(v);
}

namespace {

std::optional<std::size_t> first_peak(const SymbolPath& path) {
  const auto minima = path.local_minima();
  if (minima.size() <= 1) return std::nullopt;
  for (std::size_t j : path.local_maxima())
    if (j > minima.front()) return j;
  throw InternalError("profile with several minima but no interior maximum");
}

}  // namespace

std::optional<Cusp> split_point(const LabeledTree& tree, const ModularSymbol& s) {
  const SymbolPath path = symbol_path(tree, s);
  const auto j = first_peak(path);
  if (!j) return std::nullopt;
  return peak_cusp(tree, path.core[*j]);
}

std::vector<ModularSymbol> decompose(const LabeledTree& tree, const ModularSymbol& s) {
  std::vector<ModularSymbol> pieces;
  ModularSymbol rest = s;
  while (auto gamma = split_point(tree, rest)) {
    pieces.push_back(ModularSymbol{rest.from, *gamma});
    rest = ModularSymbol{*gamma, rest.to};
  }
  pieces.push_back(rest);
  return pieces;
}

}  // namespace msym
