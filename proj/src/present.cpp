#include "msym/present.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "msym/error.hpp"

namespace msym {

std::vector<ReducedClass> enumerate_classes(const Curve& curve) {
  std::vector<ReducedClass> out;
  const auto& pts = curve.points();
  for (const Point& p : pts)
    if (curve.fiber_type(p.xcoord()) == FiberType::OS) out.push_back(ReducedClass::e(p));
  for (const XCoord& x : curve.xcoords()) {
    const FiberClass& f = curve.fiber(x);
    if (f.type != FiberType::S) continue;
    out.push_back(ReducedClass::s(f.solutions[0], f.solutions[1]));
    out.push_back(ReducedClass::s(f.solutions[1], f.solutions[0]));
  }
  for (const Point& a : pts)
    for (const Point& b : pts)
      if (a.xcoord() != b.xcoord()) out.push_back(ReducedClass::o(a, b));
  for (const XCoord& z : curve.xcoords()) {
    if (curve.fiber_type(z) != FiberType::NS) continue;
    for (const Point& a : pts)
      for (const Point& b : pts) out.push_back(ReducedClass::ns(a, z, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassCensus census(const std::vector<ReducedClass>& classes) {
  ClassCensus c;
  for (const auto& k : classes) switch (k.type) {
      case SiteType::E: ++c.e; break;
      case SiteType::S: ++c.s; break;
      case SiteType::O: ++c.o; break;
      case SiteType::NS: ++c.ns; break;
    }
  return c;
}

std::vector<VertexAddress> s_sites(const LabeledTree& tree) {
  std::vector<VertexAddress> out;
  for (const SLabel& l : tree.quotient().minimal_vertices()) {
    VertexAddress addr(tree.quotient().embed(l));
    if (!(tree.label_of(addr) == l))
      throw InternalError("embedded copy of " + to_string(l) + " not found at " + addr.str());
    out.push_back(std::move(addr));
  }
  return out;
}

namespace {

SparseRow normalized(std::vector<std::uint32_t> cols) {
  std::sort(cols.begin(), cols.end());
  SparseRow row;
  for (std::uint32_t c : cols) {
    if (!row.empty() && row.back().first == c)
      ++row.back().second;
    else
      row.emplace_back(c, 1);
  }
  return row;  // all coefficients positive already
}

struct SiteRows {
  std::vector<RelationRow> rows;
};

SiteRows rows_at(const LabeledTree& tree, const VertexAddress& site,
                 const std::map<ReducedClass, std::uint32_t>& index, TupleScope scope) {
  const SiteStar star = tree.site_star(site);
  std::vector<const Port*> ports;
  for (const Port& p : star.ports) ports.push_back(&p);
  std::sort(ports.begin(), ports.end(),
            [](const Port* a, const Port* b) { return a->cusp < b->cusp; });
  const std::size_t n = ports.size();
  std::vector<std::uint32_t> cls(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const ReducedClass c = pair_class(star, *ports[i], *ports[j]);
      const auto it = index.find(c);
      if (it == index.end())
        throw InternalError("class " + to_string(c) + " at " + site.str() + " not enumerated");
      cls[i * n + j] = it->second;
    }
  auto at = [&](std::size_t i, std::size_t j) { return cls[i * n + j]; };

  SiteRows out;
  std::set<SparseRow> seen;
  auto offer = [&](SparseRow row, auto make_origin) {
    if (row.empty() || !seen.insert(row).second) return;
    out.rows.push_back({std::move(row), make_origin()});
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      offer(normalized({at(i, j), at(j, i)}),
            [&] { return rule_for_pair(star, *ports[i], *ports[j]); });
  if (star.type == SiteType::S) return out;
  const std::size_t imax = scope == TupleScope::All ? n : std::min<std::size_t>(n, 1);
  for (std::size_t i = 0; i < imax; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        offer(normalized({at(i, j), at(j, k), at(k, i)}),
              [&] { return rule_for_triple(star, *ports[i], *ports[j], *ports[k]); });
        offer(normalized({at(i, k), at(k, j), at(j, i)}),
              [&] { return rule_for_triple(star, *ports[i], *ports[k], *ports[j]); });
      }
  return out;
}

}  // namespace

RelationMatrix relation_rows(const LabeledTree& tree, const RowOptions& opts) {
  RelationMatrix m;
  m.generators = enumerate_classes(tree.curve());
  std::map<ReducedClass, std::uint32_t> index;
  for (std::uint32_t i = 0; i < m.generators.size(); ++i) index.emplace(m.generators[i], i);

  const std::vector<VertexAddress> sites = opts.sites.empty() ? s_sites(tree) : opts.sites;
  std::vector<SiteRows> per_site(sites.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(sites.size())));
  if (jobs <= 1) {
    for (std::size_t s = 0; s < sites.size(); ++s)
      per_site[s] = rows_at(tree, sites[s], index, opts.scope);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t s = w; s < sites.size(); s += jobs)
            per_site[s] = rows_at(tree, sites[s], index, opts.scope);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::set<SparseRow> seen;
  for (SiteRows& sr : per_site)
    for (RelationRow& r : sr.rows)
      if (seen.insert(r.row).second) m.rows.push_back(std::move(r));
  return m;
}

Presentation present(const LabeledTree& tree, const RowOptions& opts) {
  Presentation p;
  p.matrix = relation_rows(tree, opts);
  std::vector<SparseRow> rows;
  rows.reserve(p.matrix.rows.size());
  for (const auto& r : p.matrix.rows) rows.push_back(r.row);
  p.cokernel = cokernel(p.matrix.generators.size(), rows);
  p.homology = {p.cokernel.free_rank, p.cokernel.torsion};
  p.expected_free_rank = tree.curve().points().size() - 1;
  return p;
}

Homology homology(const Curve& curve) {
  const LabeledTree tree(curve);
  return present(tree).homology;
}

std::string to_string(const Homology& h) {
  std::ostringstream os;
  bool first = true;
  if (h.free_rank > 0) {
    os << "Z";
    if (h.free_rank > 1) os << "^" << h.free_rank;
    first = false;
  }
  for (const BigInt& t : h.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string matrix_csv(const RelationMatrix& m) {
  std::ostringstream os;
  for (std::size_t j = 0; j < m.generators.size(); ++j)
    os << (j ? "," : "") << '"' << to_string(m.generators[j]) << '"';
  os << "\n";
  std::vector<long long> dense(m.generators.size());
  for (const auto& r : m.rows) {
    std::fill(dense.begin(), dense.end(), 0);
    for (const auto& [c, v] : r.row) dense[c] = v;
    for (std::size_t j = 0; j < dense.size(); ++j) os << (j ? "," : "") << dense[j];
    os << "\n";
  }
  return os.str();
}

}  // namespace msym
