#include "msym/relations.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "msym/error.hpp"

namespace msym {

// --- FormalSum -------------------------------------------------------------

void FormalSum::add(const ModularSymbol& s, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void FormalSum::add(const FormalSum& other, long long scale) {
  for (const auto& [s, c] : other.terms_) add(s, c * scale);
}

long long FormalSum::coeff(const ModularSymbol& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

long long FormalSum::l1() const {
  long long total = 0;
  for (const auto& [s, c] : terms_) total += c < 0 ? -c : c;
  return total;
}

FormalSum parse_formal_sum(std::string_view text) {
  FormalSum fs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first);
    const auto star = line.find('*');
    if (star == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected '<coeff> * {a,b}'");
    std::string coeff(line.substr(0, star));
    coeff.erase(std::remove_if(coeff.begin(), coeff.end(), [](char ch) { return ch == ' ' || ch == '\t'; }),
                coeff.end());
    long long c = 0;
    try {
      std::size_t used = 0;
      c = std::stoll(coeff, &used);
      if (used != coeff.size()) throw std::invalid_argument(coeff);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad coefficient '" + coeff + "'");
    }
    fs.add(parse_symbol(line.substr(star + 1)), c);
  }
  return fs;
}

std::string to_string(const FormalSum& fs) {
  std::ostringstream os;
  for (const auto& [s, c] : fs.terms()) os << c << " * " << to_string(s) << "\n";
  return os.str();
}

std::map<Cusp, long long> cusp_balance(const FormalSum& fs) {
  std::map<Cusp, long long> net;
  for (const auto& [s, c] : fs.terms()) {
    net[s.from] -= c;
    net[s.to] += c;
  }
  return net;
}

bool is_cusp_balanced(const FormalSum& fs) {
  for (const auto& [cusp, n] : cusp_balance(fs))
    if (n != 0) return false;
  return true;
}

std::map<DirectedEdge, long long> edge_flows(const LabeledTree& tree, const FormalSum& fs) {
  std::vector<std::pair<SymbolPath, long long>> paths;
  std::map<Cusp, int> top;
  for (const auto& [s, c] : fs.terms()) {
    SymbolPath path = symbol_path(tree, s);
    int& mf = top[s.from];
    mf = std::max(mf, tree.merge_level(path.core.front()) + 1);
    int& mt = top[s.to];
    mt = std::max(mt, tree.merge_level(path.core.back()) + 1);
    paths.emplace_back(std::move(path), c);
  }

  std::map<DirectedEdge, long long> flows;
  auto it = fs.terms().begin();
  for (const auto& [path, c] : paths) {
    const ModularSymbol& s = (it++)->first;
    auto down = tree.ascent(path.core.front(), top[s.from]);
    std::reverse(down.begin(), down.end());
    const auto up = tree.ascent(path.core.back(), top[s.to]);
    std::vector<VertexAddress> walk;
    for (const auto& v : down) walk.push_back(v.address);
    for (std::size_t i = 1; i + 1 < path.core.size(); ++i) walk.push_back(path.core[i].address);
    for (const auto& v : up) walk.push_back(v.address);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      flows[{walk[i], walk[i + 1]}] += c;
      flows.try_emplace({walk[i + 1], walk[i]}, 0);
    }
  }
  return flows;
}

std::vector<DirectedEdge> unbalanced_edges(const std::map<DirectedEdge, long long>& flows) {
  std::vector<DirectedEdge> out;
  for (const auto& [e, f] : flows) {
    if (!(e.first < e.second)) continue;
    const auto back = flows.find({e.second, e.first});
    const long long g = back == flows.end() ? 0 : back->second;
    if (f != g) out.push_back(e);
  }
  return out;
}

// --- rules -----------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 9> kRuleNames{"E2", "E3", "S2",  "O2", "O3",
                                                     "OY", "NS2", "NS3", "NSY"};

}  // namespace

std::string to_string(Rule r) { return std::string(kRuleNames[static_cast<std::size_t>(r)]); }

Rule parse_rule(std::string_view text) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == text) return static_cast<Rule>(i);
  throw ParseError("unknown rule '" + std::string(text) + "'");
}

SiteType site_type_of(Rule r) {
  switch (r) {
    case Rule::E2:
    case Rule::E3: return SiteType::E;
    case Rule::S2: return SiteType::S;
    case Rule::O2:
    case Rule::O3:
    case Rule::OY: return SiteType::O;
    default: return SiteType::NS;
  }
}

std::size_t arity(Rule r) {
  switch (r) {
    case Rule::E2:
    case Rule::S2:
    case Rule::O2:
    case Rule::NS2: return 2;
    default: return 3;
  }
}

namespace {

FormalSum expansion_of(const std::vector<Cusp>& c) {
  FormalSum fs;
  if (c.size() == 2) {
    fs.add({c[0], c[1]}, 1);
    fs.add({c[1], c[0]}, 1);
  } else {
    fs.add({c[0], c[1]}, 1);
    fs.add({c[1], c[2]}, 1);
    fs.add({c[2], c[0]}, 1);
  }
  return fs;
}

}  // namespace

RelationInstance instantiate(const LabeledTree& tree, Rule rule, const VertexAddress& site,
                             const std::vector<Cusp>& cusps) {
  const SiteStar star = tree.site_star(site);
  if (star.type != site_type_of(rule))
    throw WrongSiteType(to_string(rule) + " needs a " + to_string(site_type_of(rule)) +
                        "-site, " + site.str() + " is a " + to_string(star.type) + "-site");
  if (cusps.size() != arity(rule))
    throw WrongSiteType(to_string(rule) + " takes " + std::to_string(arity(rule)) +
                        " cusps, got " + std::to_string(cusps.size()));
  std::vector<const Port*> ports;
  for (const Cusp& c : cusps) {
    const Port* p = star.find(c);
    if (!p) throw CuspNotAttached(c.anchor.str() + " is not attached to " + site.str());
    for (const Port* q : ports)
      if (q == p) throw DegenerateSymbol("cusp " + c.anchor.str() + " repeated");
    ports.push_back(p);
  }

  auto shape = [&](std::size_t i, std::size_t j) { return pair_shape(star, *ports[i], *ports[j]); };
  switch (rule) {
    case Rule::O2:
    case Rule::O3:
      for (std::size_t i = 0; i < ports.size(); ++i)
        for (std::size_t j = i + 1; j < ports.size(); ++j)
          if (shape(i, j).type != SiteType::O)
            throw YShapeViolated(to_string(rule) + " needs cusps under distinct v-vertices");
      break;
    case Rule::OY:
      if (shape(1, 2).type != SiteType::S || shape(0, 1).type != SiteType::O)
        throw YShapeViolated("OY needs the last two cusps under one s-vertex and the first elsewhere");
      break;
    case Rule::NS2:
    case Rule::NS3:
      for (std::size_t i = 0; i < ports.size(); ++i)
        for (std::size_t j = i + 1; j < ports.size(); ++j)
          if (ports[i]->branch == ports[j]->branch)
            throw YShapeViolated(to_string(rule) + " needs cusps behind distinct o-vertices");
      break;
    case Rule::NSY:
      if (ports[1]->branch != ports[2]->branch || ports[0]->branch == ports[1]->branch)
        throw YShapeViolated("NSY needs the last two cusps behind one o-vertex and the first elsewhere");
      break;
    default: break;
  }

  RelationInstance inst{rule, site, cusps, expansion_of(cusps)};
  // Each term must be a reduced symbol of the shape its ports predict.
  for (const auto& [s, c] : inst.expansion.terms()) {
    const auto cls = classify_reduced(tree, s);
    const Port* a = star.find(s.from);
    const Port* b = star.find(s.to);
    if (!cls || cls->type != pair_shape(star, *a, *b).type)
      throw InternalError(to_string(rule) + " at " + site.str() + " produced " + to_string(s) +
                          " which is not the expected reduced symbol");
  }
  return inst;
}

TupleRule rule_for_pair(const SiteStar& star, const Port& a, const Port& b) {
  const PairShape shape = pair_shape(star, a, b);
  Rule rule = Rule::E2;
  switch (shape.type) {
    case SiteType::E: rule = Rule::E2; break;
    case SiteType::S: rule = Rule::S2; break;
    case SiteType::O: rule = Rule::O2; break;
    case SiteType::NS: rule = Rule::NS2; break;
  }
  return {rule, shape.site, {a.cusp, b.cusp}};
}

TupleRule rule_for_triple(const SiteStar& star, const Port& a, const Port& b, const Port& c) {
  std::array<const Port*, 3> p{&a, &b, &c};
  // Rotates so that the port differing from the other two comes first.
  auto rotate_odd_first = [&](auto key) {
    for (std::size_t r = 0; r < 3; ++r) {
      if (key(p[(r + 1) % 3]) == key(p[(r + 2) % 3]) && key(p[r]) != key(p[(r + 1) % 3])) {
        std::rotate(p.begin(), p.begin() + static_cast<long>(r), p.end());
        return true;
      }
    }
    return false;
  };
  auto via = [](const Port* x) { return x->via; };
  auto branch = [](const Port* x) { return x->branch; };

  Rule rule = Rule::E3;
  VertexAddress site = star.site.address;
  switch (star.type) {
    case SiteType::E: rule = Rule::E3; break;
    case SiteType::S: throw InternalError("three-term cycle at an s-site");
    case SiteType::O: rule = rotate_odd_first(via) ? Rule::OY : Rule::O3; break;
    case SiteType::NS:
      if (p[0]->branch != p[1]->branch && p[1]->branch != p[2]->branch &&
          p[0]->branch != p[2]->branch) {
        rule = Rule::NS3;
      } else if (rotate_odd_first(branch)) {
        rule = Rule::NSY;
      } else {
        site = star.branches[p[0]->branch];
        rule = rotate_odd_first(via) ? Rule::OY : Rule::O3;
      }
      break;
  }
  return {rule, site, {p[0]->cusp, p[1]->cusp, p[2]->cusp}};
}

ReducedClass pair_class(const SiteStar& star, const Port& a, const Port& b) {
  switch (pair_shape(star, a, b).type) {
    case SiteType::E: return ReducedClass::e(a.point);
    case SiteType::S: return ReducedClass::s(a.point, b.point);
    case SiteType::O: return ReducedClass::o(a.point, b.point);
    case SiteType::NS: return ReducedClass::ns(a.point, star.site.label.x, b.point);
  }
  return {};
}

// --- reduction -------------------------------------------------------------

namespace {

struct SymbolInfo {
  ReducedClass cls;
  VertexAddress site;
};

class Classifier {
 public:
  explicit Classifier(const LabeledTree& tree) : tree_(tree) {}

  const std::optional<SymbolInfo>& info(const ModularSymbol& s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    const SymbolPath path = symbol_path(tree_, s);
    std::optional<SymbolInfo> out;
    if (auto cls = classify_core(path.core)) out = SymbolInfo{*cls, reduced_site(path.core).address};
    return cache_.emplace(s, std::move(out)).first->second;
  }

  const SiteStar& star(const VertexAddress& site) {
    auto it = stars_.find(site);
    if (it == stars_.end()) it = stars_.emplace(site, tree_.site_star(site)).first;
    return it->second;
  }

 private:
  const LabeledTree& tree_;
  std::map<ModularSymbol, std::optional<SymbolInfo>> cache_;
  std::map<VertexAddress, SiteStar> stars_;
};

FormalSum split_impl(const LabeledTree& tree, Classifier& cl, const FormalSum& fs,
                     std::vector<Split>* log) {
  FormalSum r = fs;
  std::set<ModularSymbol> pending;
  for (const auto& [s, c] : r.terms())
    if (!cl.info(s)) pending.insert(s);
  while (!pending.empty()) {
    const ModularSymbol s = *pending.begin();
    pending.erase(pending.begin());
    const long long c = r.coeff(s);
    if (c == 0) continue;
    const auto gamma = split_point(tree, s);
    if (!gamma) throw InternalError("symbol " + to_string(s) + " neither reduced nor splittable");
    if (log) log->push_back(Split{s, *gamma});
    r.erase(s);
    for (const ModularSymbol& piece : {ModularSymbol{s.from, *gamma}, ModularSymbol{*gamma, s.to}}) {
      r.add(piece, c);
      if (r.coeff(piece) != 0 && !cl.info(piece)) pending.insert(piece);
    }
  }
  return r;
}

std::string dump(const FormalSum& fs) {
  std::string out = to_string(fs);
  if (out.size() > 4000) out = out.substr(0, 4000) + "...\n";
  return out;
}

struct Emitted {
  Rule rule;
  VertexAddress site;
  std::vector<Cusp> cusps;
  long long mult;
};

// Eliminates a port-balanced sum of symbols between ports of one site star.
class StarEngine {
 public:
  explicit StarEngine(const SiteStar& star) : star_(star) {
    for (const Port& p : star.ports) ports_.push_back(&p);
    std::sort(ports_.begin(), ports_.end(),
              [](const Port* a, const Port* b) { return a->cusp < b->cusp; });
    for (std::size_t i = 0; i < ports_.size(); ++i) index_[ports_[i]->cusp] = i;
  }

  void add(const ModularSymbol& s, long long c) {
    const auto a = index_.find(s.from);
    const auto b = index_.find(s.to);
    if (a == index_.end() || b == index_.end())
      throw InternalError(to_string(s) + " does not run between ports of " +
                          star_.site.address.str());
    auto& slot = w_[{a->second, b->second}];
    slot += c;
    if (slot == 0) w_.erase({a->second, b->second});
  }

  std::size_t index(const Cusp& c) const { return index_.at(c); }
  const Port& port(std::size_t i) const { return *ports_[i]; }
  std::size_t size() const { return ports_.size(); }

  std::vector<long long> net_in() const {
    std::vector<long long> net(ports_.size(), 0);
    for (const auto& [e, c] : w_) {
      net[e.first] -= c;
      net[e.second] += c;
    }
    return net;
  }

  std::vector<Emitted> run() {
    for (long long n : net_in())
      if (n != 0) throw InternalError("unbalanced star at " + star_.site.address.str() + "\n" + state());
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [e, c] : w_) pairs.insert(std::minmax(e.first, e.second));
    for (const auto& [i, j] : pairs) normalize(i, j);

    while (!w_.empty()) {
      const long long before = l1();
      const auto [a, b] = w_.begin()->first;
      auto out = w_.lower_bound({b, 0});
      if (out == w_.end() || out->first.first != b)
        throw InternalError("no edge leaves port " + std::to_string(b) + "\n" + state());
      const std::size_t c = out->first.second;
      const long long m = std::min(w_.begin()->second, out->second);
      add_index(a, b, -m);
      add_index(b, c, -m);
      add_index(c, a, -m);
      emit_triple(a, b, c, m);
      normalize(std::min(a, c), std::max(a, c));
      if (l1() >= before)
        throw InternalError("elimination at " + star_.site.address.str() +
                            " made no progress\n" + state());
    }
    return std::move(out_);
  }

 private:
  void add_index(std::size_t i, std::size_t j, long long c) {
    auto& slot = w_[{i, j}];
    slot += c;
    if (slot == 0) w_.erase({i, j});
  }

  long long get(std::size_t i, std::size_t j) const {
    const auto it = w_.find({i, j});
    return it == w_.end() ? 0 : it->second;
  }

  long long l1() const {
    long long t = 0;
    for (const auto& [e, c] : w_) t += c < 0 ? -c : c;
    return t;
  }

  // Leaves a single positive orientation on the pair {i, j}.
  void normalize(std::size_t i, std::size_t j) {
    const long long a = get(i, j);
    const long long b = get(j, i);
    const long long k = a - b >= 0 ? b : a;
    if (k == 0) return;
    add_index(i, j, -k);
    add_index(j, i, -k);
    emit_pair(i, j, k);
  }

  void emit_pair(std::size_t i, std::size_t j, long long k) {
    TupleRule t = rule_for_pair(star_, *ports_[i], *ports_[j]);
    out_.push_back({t.rule, std::move(t.site), std::move(t.cusps), k});
  }

  void emit_triple(std::size_t i, std::size_t j, std::size_t k, long long m) {
    TupleRule t = rule_for_triple(star_, *ports_[i], *ports_[j], *ports_[k]);
    out_.push_back({t.rule, std::move(t.site), std::move(t.cusps), m});
  }

  std::string state() const {
    std::ostringstream os;
    os << "site " << star_.site.address.str() << " (" << to_string(star_.type) << "):\n";
    for (const auto& [e, c] : w_)
      os << "  " << c << " * {" << ports_[e.first]->cusp.anchor.str() << ","
         << ports_[e.second]->cusp.anchor.str() << "}\n";
    return os.str();
  }

  const SiteStar& star_;
  std::vector<const Port*> ports_;
  std::map<Cusp, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, long long> w_;
  std::vector<Emitted> out_;
};

class Reducer {
 public:
  Reducer(const LabeledTree& tree, const FormalSum& fs) : tree_(tree), cl_(tree), input_(fs) {}

  Reduction run() {
    for (const auto& [cusp, n] : cusp_balance(input_))
      if (n != 0)
        throw UnbalancedInput("cusp " + cusp.anchor.str() + " has net flow " + std::to_string(n));
    record("input", input_);
    r_ = split_impl(tree_, cl_, input_, &result_.certificate.splits);
    record("reduced", r_);
    stage(SiteType::E, false, "e");
    stage(SiteType::NS, true, "ns");
    stage(SiteType::O, true, "o");
    stage(SiteType::S, false, "s");
    if (!r_.empty()) throw InternalError("residual after all stages:\n" + dump(r_));
    for (std::size_t i = 1; i + 1 < result_.stages.size(); ++i)
      if (result_.stages[i + 1].l1 > result_.stages[i].l1)
        throw InternalError("metric increased in stage " + result_.stages[i + 1].stage);
    finish();
    return std::move(result_);
  }

 private:
  void record(const std::string& name, const FormalSum& fs) {
    result_.stages.push_back({name, fs.l1(), fs.size()});
  }

  // Every symbol of `type`, grouped by site; deepest sites first when `by_depth`.
  std::vector<std::pair<VertexAddress, FormalSum>> groups(SiteType type, bool by_depth) {
    std::map<VertexAddress, FormalSum> by_site;
    for (const auto& [s, c] : r_.terms()) {
      const auto& info = cl_.info(s);
      if (!info) throw InternalError("non-reduced symbol " + to_string(s) + " after splitting");
      if (info->cls.type == type) by_site[info->site].add(s, c);
    }
    std::vector<std::pair<VertexAddress, FormalSum>> out(by_site.begin(), by_site.end());
    if (by_depth)
      std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.depth() > b.first.depth();
      });
    return out;
  }

  void stage(SiteType type, bool transport, const std::string& name) {
    for (const auto& [site, part] : groups(type, transport)) {
      StarEngine engine(cl_.star(site));
      for (const auto& [s, c] : part.terms()) engine.add(s, c);
      if (transport) add_transport(engine, site);
      for (const Emitted& e : engine.run()) {
        r_.add(expansion_of(e.cusps), -e.mult);
        emit(e);
      }
    }
    for (const auto& [s, c] : r_.terms())
      if (cl_.info(s)->cls.type == type)
        throw InternalError(name + "-symbol " + to_string(s) + " survived its stage");
    record(name, r_);
  }

  // Within each branch, routes the surplus at each port to ports with a
  // deficit using symbols that stay inside the branch, so that the site's
  // symbols plus the correction are balanced at every port.
  void add_transport(StarEngine& engine, const VertexAddress& site) {
    const SiteStar& star = cl_.star(site);
    const auto net = engine.net_in();
    for (std::size_t b = 0; b < star.branches.size(); ++b) {
      std::vector<std::pair<std::size_t, long long>> surplus, deficit;
      long long total = 0;
      for (std::size_t i = 0; i < engine.size(); ++i) {
        if (engine.port(i).branch != b || net[i] == 0) continue;
        total += net[i];
        (net[i] > 0 ? surplus : deficit).emplace_back(i, net[i] > 0 ? net[i] : -net[i]);
      }
      if (total != 0)
        throw InternalError("branch " + star.branches[b].str() + " of " + site.str() +
                            " carries net flow " + std::to_string(total));
      std::size_t si = 0, di = 0;
      while (si < surplus.size() && di < deficit.size()) {
        const long long m = std::min(surplus[si].second, deficit[di].second);
        engine.add({engine.port(surplus[si].first).cusp, engine.port(deficit[di].first).cusp}, m);
        if ((surplus[si].second -= m) == 0) ++si;
        if ((deficit[di].second -= m) == 0) ++di;
      }
    }
  }

  void emit(const Emitted& e) {
    const auto key = std::make_tuple(e.rule, e.site, e.cusps);
    auto [it, inserted] = slots_.try_emplace(key, result_.certificate.combination.size());
    if (inserted)
      result_.certificate.combination.push_back({e.rule, e.site, e.cusps, e.mult});
    else
      result_.certificate.combination[it->second].multiplier += e.mult;
  }

  void finish() {
    auto& comb = result_.certificate.combination;
    comb.erase(std::remove_if(comb.begin(), comb.end(),
                              [](const Combination& c) { return c.multiplier == 0; }),
               comb.end());
  }

  const LabeledTree& tree_;
  Classifier cl_;
  const FormalSum& input_;
  FormalSum r_;
  Reduction result_;
  std::map<std::tuple<Rule, VertexAddress, std::vector<Cusp>>, std::size_t> slots_;
};

}  // namespace

FormalSum split_to_reduced(const LabeledTree& tree, const FormalSum& fs, std::vector<Split>* log) {
  Classifier cl(tree);
  return split_impl(tree, cl, fs, log);
}

Reduction reduce_with_report(const LabeledTree& tree, const FormalSum& fs) {
  return Reducer(tree, fs).run();
}

Certificate reduce_to_generators(const LabeledTree& tree, const FormalSum& fs) {
  return reduce_with_report(tree, fs).certificate;
}

Verification check_certificate(const LabeledTree& tree, const FormalSum& fs,
                               const Certificate& cert) {
  FormalSum r = fs;
  for (std::size_t i = 0; i < cert.splits.size(); ++i) {
    const Split& sp = cert.splits[i];
    const std::string where = "split " + std::to_string(i) + " " + to_string(sp.symbol) + ": ";
    const long long c = r.coeff(sp.symbol);
    if (c == 0) return {false, where + "symbol not present"};
    if (sp.gamma == sp.symbol.from || sp.gamma == sp.symbol.to)
      return {false, where + "split point equals an endpoint"};
    try {
      (void)tree.cusp_from_anchor(sp.gamma.anchor);
    } catch (const DomainError& e) {
      return {false, where + e.what()};
    }
    r.erase(sp.symbol);
    r.add({sp.symbol.from, sp.gamma}, c);
    r.add({sp.gamma, sp.symbol.to}, c);
  }
  for (std::size_t i = 0; i < cert.combination.size(); ++i) {
    const Combination& cm = cert.combination[i];
    try {
      const RelationInstance inst = instantiate(tree, cm.rule, cm.site, cm.cusps);
      r.add(inst.expansion, -cm.multiplier);
    } catch (const DomainError& e) {
      return {false, "instance " + std::to_string(i) + " (" + to_string(cm.rule) + " at " +
                         cm.site.str() + "): " + e.what()};
    } catch (const InternalError& e) {
      return {false, "instance " + std::to_string(i) + ": " + e.what()};
    }
  }
  if (!r.empty())
    return {false, "residual of " + std::to_string(r.size()) + " terms, l1 " +
                       std::to_string(r.l1()) + ", first " + to_string(r.terms().begin()->first)};
  return {true, ""};
}

bool verify_certificate(const LabeledTree& tree, const FormalSum& fs, const Certificate& cert) {
  return check_certificate(tree, fs, cert).ok;
}

InteractionReport interaction_analysis(const LabeledTree& tree, const FormalSum& fs) {
  Classifier cl(tree);
  const FormalSum r = split_impl(tree, cl, fs, nullptr);
  std::map<VertexAddress, std::set<Cusp>> used;
  std::map<VertexAddress, SiteType> types;
  for (const auto& [s, c] : r.terms()) {
    const auto& info = cl.info(s);
    used[info->site].insert(s.from);
    used[info->site].insert(s.to);
    types[info->site] = info->cls.type;
  }
  InteractionReport rep;
  for (const auto& [site, cusps] : used)
    rep.sites.push_back({site, types[site], tree.invariant_at(site), {cusps.begin(), cusps.end()}});
  std::stable_sort(rep.sites.begin(), rep.sites.end(),
                   [](const auto& a, const auto& b) { return a.level < b.level; });
  for (std::size_t i = 0; i < rep.sites.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.sites.size(); ++j) {
      if (rep.sites[i].level != rep.sites[j].level) continue;
      Interaction edge{i, j, {}, false};
      std::set_intersection(rep.sites[i].used.begin(), rep.sites[i].used.end(),
                            rep.sites[j].used.begin(), rep.sites[j].used.end(),
                            std::back_inserter(edge.shared));
      if (edge.shared.empty()) continue;
      edge.nontrivial = edge.shared.size() >= 2;
      rep.edges.push_back(std::move(edge));
    }
  }
  return rep;
}

}  // namespace msym
