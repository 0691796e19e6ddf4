#include "msym/ttree.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

#include "msym/error.hpp"

namespace msym {

// --- VertexAddress ---------------------------------------------------------

VertexAddress VertexAddress::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty() || text.front() != '/')
    throw ParseError("address must start with '/', got '" + std::string(text) + "'");
  std::vector<std::uint32_t> path;
  text.remove_prefix(1);
  while (!text.empty()) {
    const auto slash = text.find('/');
    const std::string_view part = text.substr(0, slash);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw ParseError("bad address component '" + std::string(part) + "'");
    path.push_back(v);
    if (slash == std::string_view::npos) break;
    text.remove_prefix(slash + 1);
    if (text.empty()) throw ParseError("trailing '/' in address");
  }
  return VertexAddress(std::move(path));
}

std::string VertexAddress::str() const {
  if (path_.empty()) return "/";
  std::string s;
  for (auto i : path_) {
    s += '/';
    s += std::to_string(i);
  }
  return s;
}

VertexAddress VertexAddress::parent() const {
  if (path_.empty()) throw InvalidAddress("the root has no parent");
  return prefix(path_.size() - 1);
}

VertexAddress VertexAddress::child(std::uint32_t index) const {
  auto p = path_;
  p.push_back(index);
  return VertexAddress(std::move(p));
}

VertexAddress VertexAddress::prefix(std::size_t length) const {
  return VertexAddress(std::vector<std::uint32_t>(path_.begin(),
                                                  path_.begin() + static_cast<long>(length)));
}

bool VertexAddress::is_prefix_of(const VertexAddress& other) const noexcept {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::size_t common_prefix_length(const VertexAddress& a, const VertexAddress& b) noexcept {
  const std::size_t n = std::min(a.depth(), b.depth());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::string to_string(SiteType t) {
  switch (t) {
    case SiteType::E: return "e";
    case SiteType::S: return "s";
    case SiteType::O: return "o";
    case SiteType::NS: return "ns";
  }
  return "?";
}

const Port* SiteStar::find(const Cusp& c) const {
  for (const Port& p : ports)
    if (p.cusp == c) return &p;
  return nullptr;
}

PairShape pair_shape(const SiteStar& star, const Port& a, const Port& b) {
  switch (star.type) {
    case SiteType::E:
    case SiteType::S: return {star.type, star.site.address};
    case SiteType::O:
      if (a.via == b.via) return {SiteType::S, a.via};
      return {SiteType::O, star.site.address};
    case SiteType::NS:
      if (a.branch != b.branch) return {SiteType::NS, star.site.address};
      if (a.via == b.via) return {SiteType::S, a.via};
      return {SiteType::O, star.branches[a.branch]};
  }
  return {star.type, star.site.address};
}

// --- LabeledTree -----------------------------------------------------------

LabeledTree::LabeledTree(const Curve& curve) : quotient_(curve) {}

TVertex LabeledTree::root() const { return TVertex{VertexAddress{}, SLabel::O(), std::nullopt}; }

std::vector<SLabel> LabeledTree::child_labels(const SLabel& label,
                                              const std::optional<SLabel>& parent) const {
  const NeighborSpec spec = quotient_.neighbor_spec(label);
  std::vector<SLabel> out;
  out.reserve(spec.size());
  bool parent_used = !parent.has_value();
  for (const SLabel& s : spec.successors) {
    if (!parent_used && s == *parent) {
      parent_used = true;
      continue;
    }
    out.push_back(s);
  }
  int copies = spec.predecessor_copies;
  if (!parent_used) {
    if (!spec.predecessor || !(*spec.predecessor == *parent) || copies == 0)
      throw InternalError("label " + to_string(*parent) + " cannot neighbour " +
                          to_string(label));
    --copies;
  }
  for (int i = 0; i < copies; ++i) out.push_back(*spec.predecessor);
  return out;
}

std::vector<TVertex> LabeledTree::children(const TVertex& v) const {
  const auto labels = child_labels(v.label, v.parent_label);
  std::vector<TVertex> out;
  out.reserve(labels.size());
  for (std::uint32_t i = 0; i < labels.size(); ++i)
    out.push_back(TVertex{v.address.child(i), labels[i], v.label});
  return out;
}

TVertex LabeledTree::child(const TVertex& v, std::uint32_t index) const {
  const auto labels = child_labels(v.label, v.parent_label);
  if (index >= labels.size())
    throw InvalidAddress("child index " + std::to_string(index) + " out of range at " +
                         v.address.str());
  return TVertex{v.address.child(index), labels[index], v.label};
}

TVertex LabeledTree::vertex(const VertexAddress& addr) const {
  TVertex v = root();
  for (std::size_t k = 0; k < addr.depth(); ++k) {
    const auto labels = child_labels(v.label, v.parent_label);
    if (addr[k] >= labels.size())
      throw InvalidAddress("index " + std::to_string(addr[k]) + " out of range at depth " +
                           std::to_string(k) + " of " + addr.str());
    v = TVertex{addr.prefix(k + 1), labels[addr[k]], v.label};
  }
  return v;
}

std::vector<SLabel> LabeledTree::labels_along(const VertexAddress& addr) const {
  std::vector<SLabel> out{SLabel::O()};
  std::optional<SLabel> parent;
  for (std::size_t k = 0; k < addr.depth(); ++k) {
    const auto labels = child_labels(out.back(), parent);
    if (addr[k] >= labels.size())
      throw InvalidAddress("index out of range in " + addr.str());
    parent = out.back();
    out.push_back(labels[addr[k]]);
  }
  return out;
}

std::optional<TVertex> LabeledTree::parent(const TVertex& v) const {
  if (v.address.is_root()) return std::nullopt;
  return vertex(v.address.parent());
}

std::vector<TVertex> LabeledTree::neighbors(const TVertex& v) const {
  std::vector<TVertex> out;
  if (auto p = parent(v)) out.push_back(std::move(*p));
  for (auto& c : children(v)) out.push_back(std::move(c));
  return out;
}

std::optional<TVertex> LabeledTree::neighbor_labelled(const TVertex& v,
                                                      const SLabel& label) const {
  if (v.parent_label && *v.parent_label == label) return parent(v);
  const auto labels = child_labels(v.label, v.parent_label);
  for (std::uint32_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return TVertex{v.address.child(i), labels[i], v.label};
  return std::nullopt;
}

std::vector<VertexAddress> LabeledTree::geodesic(const VertexAddress& a,
                                                 const VertexAddress& b) const {
  (void)vertex(a);
  (void)vertex(b);
  const std::size_t lca = common_prefix_length(a, b);
  std::vector<VertexAddress> out;
  for (std::size_t d = a.depth(); d > lca; --d) out.push_back(a.prefix(d));
  for (std::size_t d = lca; d <= b.depth(); ++d) out.push_back(b.prefix(d));
  return out;
}

bool LabeledTree::is_anchor(const TVertex& v) const {
  return v.label.kind == LabelKind::C && v.label.n == 1 && v.parent_label &&
         (v.parent_label->kind == LabelKind::V || v.parent_label->kind == LabelKind::E);
}

Cusp LabeledTree::cusp_from_anchor(const VertexAddress& addr) const {
  const TVertex v = vertex(addr);
  if (!is_anchor(v))
    throw NotAnAnchor(addr.str() + " is labelled " + to_string(v.label) +
                      (v.parent_label ? " under " + to_string(*v.parent_label) : "") +
                      ", not a c(p,1) vertex entered from a v- or e-vertex");
  return Cusp{addr};
}

namespace {

// Index into `chain` (labels along an address) of the vertex where the
// ascending run from chain.back() turns away from the root.
std::size_t turning_index(const std::vector<SLabel>& chain) {
  std::size_t idx = chain.size() - 1;
  while (idx > 0) {
    const SLabel& here = chain[idx];
    const SLabel up = SLabel::C(here.p, here.n + 1);
    if (!(chain[idx - 1] == up)) break;
    --idx;
  }
  return idx;
}

}  // namespace

Cusp LabeledTree::cusp_through(const TVertex& c_vertex) const {
  if (c_vertex.label.kind != LabelKind::C)
    throw NotAnAnchor(c_vertex.address.str() + " is not a c-vertex");
  const auto chain = labels_along(c_vertex.address);
  std::size_t idx = turning_index(chain);
  while (chain[idx].n > 1) --idx;
  if (idx == 0 || chain[idx].kind != LabelKind::C)
    throw InternalError("ascending run from " + c_vertex.address.str() + " has no anchor");
  return Cusp{c_vertex.address.prefix(idx)};
}

int LabeledTree::merge_level(const TVertex& c_vertex) const {
  const auto chain = labels_along(c_vertex.address);
  return chain[turning_index(chain)].n;
}

std::vector<TVertex> LabeledTree::ascent(const TVertex& c_vertex, int top) const {
  std::vector<TVertex> out{c_vertex};
  while (out.back().label.n < top) {
    const TVertex& v = out.back();
    auto up = neighbor_labelled(v, SLabel::C(v.label.p, v.label.n + 1));
    if (!up) throw InternalError("no ascending neighbour at " + v.address.str());
    out.push_back(std::move(*up));
  }
  return out;
}

std::vector<TVertex> LabeledTree::tail(const Cusp& cusp, int depth) const {
  std::vector<TVertex> out;
  if (depth <= 0) return out;
  TVertex v = vertex(cusp.anchor);
  if (!is_anchor(v)) throw NotAnAnchor(cusp.anchor.str());
  out.push_back(v);
  while (static_cast<int>(out.size()) < depth) {
    const TVertex& cur = out.back();
    const SLabel up = SLabel::C(cur.label.p, cur.label.n + 1);
    const auto labels = child_labels(cur.label, cur.parent_label);
    const auto it = std::find(labels.begin(), labels.end(), up);
    if (it == labels.end()) throw InternalError("tail leaves the subtree at " + cur.address.str());
    const auto i = static_cast<std::uint32_t>(it - labels.begin());
    out.push_back(TVertex{cur.address.child(i), up, cur.label});
  }
  return out;
}

std::vector<TVertex> LabeledTree::root_ray(const Cusp& cusp, std::size_t extra) const {
  std::vector<TVertex> out;
  TVertex v = root();
  out.push_back(v);
  for (std::size_t k = 0; k < cusp.anchor.depth(); ++k) {
    v = child(v, cusp.anchor[k]);
    out.push_back(v);
  }
  if (extra > 0) {
    auto t = tail(cusp, static_cast<int>(extra) + 1);
    out.insert(out.end(), t.begin() + 1, t.end());
  }
  return out;
}

SiteType LabeledTree::site_type(const TVertex& v) const {
  switch (v.label.kind) {
    case LabelKind::E: return SiteType::E;
    case LabelKind::O: return SiteType::O;
    case LabelKind::V:
      if (v.label.fiber == FiberType::S) return SiteType::S;
      if (v.label.fiber == FiberType::NS) return SiteType::NS;
      break;
    case LabelKind::C: break;
  }
  throw NotMinimal(v.address.str() + " is labelled " + to_string(v.label) +
                   ", not a minimal vertex");
}

SiteStar LabeledTree::site_star(const VertexAddress& site) const {
  SiteStar star;
  star.site = vertex(site);
  star.type = site_type(star.site);

  auto add_port = [&](const TVertex& c, std::size_t branch, const VertexAddress& via) {
    star.ports.push_back(Port{cusp_through(c), c.address, c.label.p, branch, via});
  };
  // C-neighbours of a v-vertex u, skipping `from`.
  auto ports_of_v = [&](const TVertex& u, std::size_t branch) {
    if (u.label.is_ns()) return;
    for (const TVertex& w : neighbors(u))
      if (w.label.kind == LabelKind::C) add_port(w, branch, u.address);
  };

  const auto nbrs = neighbors(star.site);
  switch (star.type) {
    case SiteType::E:
    case SiteType::S:
      for (const TVertex& w : nbrs) {
        if (w.label.kind != LabelKind::C) continue;
        star.branches.push_back(w.address);
        add_port(w, star.branches.size() - 1, star.site.address);
      }
      break;
    case SiteType::O:
      for (const TVertex& u : nbrs) {
        star.branches.push_back(u.address);
        ports_of_v(u, star.branches.size() - 1);
      }
      break;
    case SiteType::NS:
      for (const TVertex& o : nbrs) {
        star.branches.push_back(o.address);
        for (const TVertex& u : neighbors(o))
          if (u.address != star.site.address) ports_of_v(u, star.branches.size() - 1);
      }
      break;
  }
  return star;
}

std::vector<Cusp> LabeledTree::attached_cusps(const VertexAddress& site) const {
  const SiteStar star = site_star(site);
  std::vector<Cusp> out;
  out.reserve(star.ports.size());
  for (const Port& p : star.ports) out.push_back(p.cusp);
  return out;
}

std::vector<TVertex> LabeledTree::ball(const VertexAddress& center, int radius) const {
  std::vector<TVertex> out;
  std::map<VertexAddress, int> seen;
  std::deque<TVertex> queue{vertex(center)};
  seen[center] = 0;
  while (!queue.empty()) {
    TVertex v = std::move(queue.front());
    queue.pop_front();
    const int d = seen[v.address];
    if (d < radius) {
      for (TVertex& w : neighbors(v)) {
        if (seen.count(w.address)) continue;
        seen[w.address] = d + 1;
        queue.push_back(std::move(w));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string LabeledTree::ball_dot(const VertexAddress& center, int radius) const {
  const auto vs = ball(center, radius);
  std::map<VertexAddress, const TVertex*> index;
  for (const auto& v : vs) index[v.address] = &v;
  std::ostringstream os;
  os << "graph T {\n  node [shape=box];\n";
  for (const auto& [addr, v] : index)
    os << "  \"" << addr.str() << "\" [label=\"" << addr.str() << "\\n" << to_string(v->label)
       << " [" << vertex_type(v->label) << ", " << invariant_of_label(v->label) << "]\"];\n";
  for (const auto& [addr, v] : index) {
    if (addr.is_root()) continue;
    const auto p = addr.parent();
    if (index.count(p)) os << "  \"" << p.str() << "\" -- \"" << addr.str() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace msym
