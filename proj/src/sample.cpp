#include "msym/sample.hpp"

#include <algorithm>

#include "msym/error.hpp"

namespace msym {

Cusp Sampler::cusp(std::size_t max_depth) {
  if (max_depth < 4) throw InternalError("cusp sampling needs depth >= 4");
  const std::size_t target = 1 + below(max_depth - 3);
  TVertex v = tree_.root();
  while (v.address.depth() < target) {
    auto kids = tree_.children(v);
    v = kids[below(kids.size())];
  }
  // Climb to the nearest c-vertex; at most three steps from any label.
  while (v.label.kind != LabelKind::C) {
    auto around = tree_.neighbors(v);
    const int here = invariant_of_label(v.label);
    std::vector<TVertex> up;
    for (auto& k : around)
      if (invariant_of_label(k.label) > here) up.push_back(std::move(k));
    if (up.empty()) throw InternalError("no higher neighbour at " + v.address.str());
    v = up[below(up.size())];
  }
  return tree_.cusp_through(v);
}

ModularSymbol Sampler::symbol(std::size_t max_depth) {
  const Cusp a = cusp(max_depth);
  for (;;) {
    const Cusp b = cusp(max_depth);
    if (!(a == b)) return {a, b};
  }
}

VertexAddress Sampler::site(std::size_t max_depth) {
  for (;;) {
    const std::size_t target = below(max_depth + 1);
    TVertex v = tree_.root();
    std::optional<VertexAddress> last;
    if (is_minimal_type(v.label)) last = v.address;
    while (v.address.depth() < max_depth) {
      auto kids = tree_.children(v);
      v = kids[below(kids.size())];
      if (is_minimal_type(v.label)) {
        last = v.address;
        if (v.address.depth() >= target) break;
      }
    }
    if (last) return *last;
  }
}

TupleRule Sampler::instance(std::size_t max_depth) {
  for (;;) {
    const SiteStar star = tree_.site_star(site(max_depth));
    const std::size_t n = star.ports.size();
    if (n < 2) continue;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    const std::size_t k = (n >= 3 && below(2) == 1) ? 3 : 2;
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + below(n - i)]);
    const Port& a = star.ports[idx[0]];
    const Port& b = star.ports[idx[1]];
    if (k == 2) return rule_for_pair(star, a, b);
    return rule_for_triple(star, a, b, star.ports[idx[2]]);
  }
}

FormalSum Sampler::balanced_sum(const SumOptions& opts) {
  FormalSum fs;
  auto coeff = [&] {
    long long c = 0;
    while (c == 0) c = between(-opts.max_coeff, opts.max_coeff);
    return c;
  };
  for (std::size_t i = 0; i < opts.instances; ++i) {
    const TupleRule t = instance(opts.depth);
    const long long c = coeff();
    const auto& cs = t.cusps;
    for (std::size_t j = 0; j < cs.size(); ++j) fs.add({cs[j], cs[(j + 1) % cs.size()]}, c);
  }
  for (std::size_t i = 0; i < opts.cycles; ++i) {
    const std::size_t k = 2 + below(3);
    std::vector<Cusp> cs;
    while (cs.size() < k) {
      Cusp c = cusp(opts.depth);
      if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(std::move(c));
    }
    const long long c = coeff();
    for (std::size_t j = 0; j < k; ++j) fs.add({cs[j], cs[(j + 1) % k]}, c);
  }
  return fs;
}

std::vector<std::string> decomposition_violations(const LabeledTree& tree,
                                                  const ModularSymbol& s) {
  std::vector<std::string> bad;
  const auto pieces = decompose(tree, s);
  const SymbolPath path = symbol_path(tree, s);
  if (pieces.size() != path.local_minima().size())
    bad.push_back("piece count " + std::to_string(pieces.size()) + " != minima " +
                  std::to_string(path.local_minima().size()));
  if (pieces.empty() || !(pieces.front().from == s.from) || !(pieces.back().to == s.to))
    bad.push_back("pieces do not start at from / end at to");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    if (!(pieces[i].to == pieces[i + 1].from)) bad.push_back("pieces do not telescope");
  for (const auto& p : pieces)
    if (!classify_reduced(tree, p)) bad.push_back("piece " + to_string(p) + " is not reduced");
  // The pieces' geodesics, with the shared split tails cancelling, carry
  // exactly the traffic of the original.
  FormalSum diff;
  for (const auto& p : pieces) diff.add(p, 1);
  diff.add(s, -1);
  if (!unbalanced_edges(edge_flows(tree, diff)).empty())
    bad.push_back("piece paths do not partition the geodesic");
  return bad;
}

}  // namespace msym
