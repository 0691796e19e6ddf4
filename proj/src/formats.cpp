#include "msym/formats.hpp"

#include <cmath>
#include <sstream>

#include "msym/error.hpp"

namespace msym {

json curve_json(const Curve& curve) {
  json fibers = json::array();
  for (const XCoord& x : curve.xcoords()) {
    const FiberClass& f = curve.fiber(x);
    json sols = json::array();
    for (const Point& p : f.solutions) sols.push_back(to_string(p));
    fibers.push_back({{"x", to_string(x)}, {"type", to_string(f.type)}, {"solutions", sols}});
  }
  json pts = json::array();
  for (const Point& p : curve.points()) pts.push_back(to_string(p));
  const int q = curve.q();
  const long long n = static_cast<long long>(curve.points().size());
  return {{"curve", to_string(curve.spec())},
          {"q", q},
          {"discriminant", curve.discriminant()},
          {"fibers", fibers},
          {"points", pts},
          {"count", n},
          {"hasse_ok", std::llabs(n - (q + 1)) * std::llabs(n - (q + 1)) <= 4LL * q}};
}

std::string curve_text(const Curve& curve) {
  std::ostringstream os;
  os << "curve " << to_string(curve.spec()) << "\n";
  os << "discriminant " << curve.discriminant() << "\n";
  os << "x     type  solutions\n";
  for (const XCoord& x : curve.xcoords()) {
    const FiberClass& f = curve.fiber(x);
    std::string xs = to_string(x);
    std::string ts = to_string(f.type);
    os << xs << std::string(6 - std::min<std::size_t>(xs.size(), 5), ' ') << ts
       << std::string(6 - std::min<std::size_t>(ts.size(), 5), ' ');
    for (std::size_t i = 0; i < f.solutions.size(); ++i)
      os << (i ? " " : "") << to_string(f.solutions[i]);
    os << "\n";
  }
  os << "|E| = " << curve.points().size() << "\n";
  return os.str();
}

json quotient_json(const QuotientTree& tree, int ray_depth) {
  const auto t = tree.materialize(ray_depth);
  json vs = json::array();
  for (const SLabel& v : t.vertices)
    vs.push_back({{"label", to_string(v)},
                  {"type", vertex_type(v)},
                  {"invariant", invariant_of_label(v)},
                  {"minimal", is_minimal_type(v)}});
  json es = json::array();
  for (const auto& [a, b] : t.edges) es.push_back({to_string(a), to_string(b)});
  json minimal = json::array();
  for (const SLabel& v : tree.minimal_vertices()) minimal.push_back(to_string(v));
  return {{"curve", to_string(tree.curve().spec())},
          {"ray_depth", ray_depth},
          {"rays", tree.rays().size()},
          {"vertices", vs},
          {"edges", es},
          {"minimal", minimal}};
}

std::string quotient_text(const QuotientTree& tree, int ray_depth) {
  const auto t = tree.materialize(ray_depth);
  std::ostringstream os;
  os << "vertices " << t.vertices.size() << ", edges " << t.edges.size() << ", rays "
     << tree.rays().size() << "\n";
  for (const SLabel& v : t.vertices) {
    os << to_string(v) << " [" << vertex_type(v) << ", " << invariant_of_label(v) << "]";
    if (is_minimal_type(v)) os << " minimal";
    os << " ->";
    for (const SLabel& w : tree.successors_in_S(v))
      if (!(w.kind == LabelKind::C && w.n > ray_depth)) os << " " << to_string(w);
    os << "\n";
  }
  return os.str();
}

json vertex_json(const TVertex& v) {
  return {{"address", v.address.str()},
          {"label", to_string(v.label)},
          {"type", vertex_type(v.label)},
          {"invariant", invariant_of_label(v.label)}};
}

json path_json(const SymbolPath& path) {
  json core = json::array();
  for (const auto& v : path.core) core.push_back(vertex_json(v));
  json minima = json::array();
  for (auto i : path.local_minima()) minima.push_back(i);
  return {{"divergence", path.divergence.str()},
          {"core", core},
          {"profile", path.profile},
          {"minima", minima}};
}

json class_json(const std::optional<ReducedClass>& cls) {
  if (!cls) return {{"reduced", false}};
  return {{"reduced", true}, {"type", to_string(cls->type)}, {"class", to_string(*cls)}};
}

json certificate_json(const Certificate& cert) {
  json splits = json::array();
  for (const Split& s : cert.splits)
    splits.push_back({{"symbol", to_string(s.symbol)}, {"gamma", s.gamma.anchor.str()}});
  json comb = json::array();
  for (const Combination& c : cert.combination) {
    json cusps = json::array();
    for (const Cusp& k : c.cusps) cusps.push_back(k.anchor.str());
    comb.push_back({{"rule", to_string(c.rule)},
                    {"site", c.site.str()},
                    {"cusps", cusps},
                    {"multiplier", c.multiplier}});
  }
  return {{"splits", splits}, {"combination", comb}};
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  try {
    for (const auto& s : j.at("splits"))
      cert.splits.push_back({parse_symbol(s.at("symbol").get<std::string>()),
                             Cusp{VertexAddress::parse(s.at("gamma").get<std::string>())}});
    for (const auto& c : j.at("combination")) {
      Combination cm;
      cm.rule = parse_rule(c.at("rule").get<std::string>());
      cm.site = VertexAddress::parse(c.at("site").get<std::string>());
      for (const auto& k : c.at("cusps"))
        cm.cusps.push_back(Cusp{VertexAddress::parse(k.get<std::string>())});
      cm.multiplier = c.at("multiplier").get<long long>();
      cert.combination.push_back(std::move(cm));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  return cert;
}

json stages_json(const std::vector<StageMetric>& stages) {
  json out = json::array();
  for (const auto& s : stages) out.push_back({{"stage", s.stage}, {"l1", s.l1}, {"terms", s.terms}});
  return out;
}

json interaction_json(const InteractionReport& rep) {
  json sites = json::array();
  for (const auto& s : rep.sites) {
    json used = json::array();
    for (const Cusp& c : s.used) used.push_back(c.anchor.str());
    sites.push_back({{"site", s.site.str()},
                     {"type", to_string(s.type)},
                     {"level", s.level},
                     {"used", used}});
  }
  json edges = json::array();
  for (const auto& e : rep.edges) {
    json shared = json::array();
    for (const Cusp& c : e.shared) shared.push_back(c.anchor.str());
    edges.push_back({{"a", rep.sites[e.a].site.str()},
                     {"b", rep.sites[e.b].site.str()},
                     {"shared", shared},
                     {"interaction", e.nontrivial ? "nontrivial" : "trivial"}});
  }
  return {{"sites", sites}, {"edges", edges}};
}

namespace {

json bigints(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const BigInt& x : v) {
    if (x <= BigInt(std::numeric_limits<long long>::max()))
      out.push_back(x.convert_to<long long>());
    else
      out.push_back(x.str());
  }
  return out;
}

}  // namespace

json presentation_json(const Presentation& p) {
  const ClassCensus c = census(p.matrix.generators);
  json gens = json::array();
  for (const auto& g : p.matrix.generators) gens.push_back(to_string(g));
  std::map<std::string, std::size_t> by_rule;
  for (const auto& r : p.matrix.rows) ++by_rule[to_string(r.origin.rule)];
  return {{"generators", gens},
          {"census", {{"e", c.e}, {"s", c.s}, {"o", c.o}, {"ns", c.ns}, {"total", c.total()}}},
          {"rows", p.matrix.rows.size()},
          {"rows_by_rule", by_rule},
          {"cols", p.matrix.generators.size()},
          {"rank", p.cokernel.rank},
          {"invariant_factors", bigints(p.cokernel.invariant_factors)},
          {"homology",
           {{"free_rank", p.homology.free_rank},
            {"torsion", bigints(p.homology.torsion)},
            {"group", to_string(p.homology)}}},
          {"oracle",
           {{"expected_free_rank", p.expected_free_rank},
            {"agrees", p.homology.free_rank == p.expected_free_rank && p.homology.torsion.empty()},
            {"note", "self-check: a tree with n ends has Borel-Moore H1 free of rank n-1"}}}};
}

std::string presentation_text(const Presentation& p) {
  const ClassCensus c = census(p.matrix.generators);
  std::ostringstream os;
  os << "generators " << c.total() << " (e " << c.e << ", s " << c.s << ", o " << c.o
     << ", ns " << c.ns << ")\n";
  os << "relation rows " << p.matrix.rows.size() << "\n";
  os << "rank " << p.cokernel.rank << "\n";
  os << "homology " << to_string(p.homology) << "\n";
  os << "oracle ends-1 = " << p.expected_free_rank << " ("
     << (p.homology.free_rank == p.expected_free_rank && p.homology.torsion.empty() ? "agrees"
                                                                                    : "DISAGREES")
     << ")\n";
  return os.str();
}

}  // namespace msym
