// Acceptance suite: one PASS/FAIL line per criterion.
//
//   msym_acceptance [--exhaustive]
//
// --exhaustive runs the homology cross-check on every valid curve for q = 5
// and q = 7 instead of one curve per fibre map.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "../oracles.hpp"
#include "msym/cli.hpp"
#include "msym/present.hpp"
#include "msym/sample.hpp"

using namespace msym;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(why);
  }
};

const std::vector<CurveSpec> kTestCurves = {
    {2, {0, 0, 1, 1, 1}},  // one point, two ns fibres
    {3, {0, 0, 0, 1, 2}},  // ns, s, os fibres
    {5, {0, 0, 0, 0, 1}},  // two of each
    {5, {0, 0, 0, 4, 2}},  // four ns fibres, one s
};

std::string name(const CurveSpec& c) { return to_string(c); }

// ---- 1 -----------------------------------------------------------------------

Outcome curve_classification() {
  Outcome o;
  const auto t0 = Clock::now();
  const CurveSpec spec{3, {0, 0, 0, 1, 2}};
  const Curve c = validate_curve(spec);
  const std::map<std::string, std::pair<FiberType, std::vector<Point>>> want = {
      {"0", {FiberType::NS, {}}},
      {"1", {FiberType::S, {Point::affine(1, 1), Point::affine(1, 2)}}},
      {"2", {FiberType::OS, {Point::affine(2, 0)}}},
      {"inf", {FiberType::OS, {Point::infinity()}}}};
  for (const XCoord& x : c.xcoords()) {
    const auto& f = c.fiber(x);
    const auto& [type, pts] = want.at(to_string(x));
    if (f.type != type || f.solutions != pts) o.fail("fibre " + to_string(x));
    if (!x.infinite) {
      const auto ys = oracle::fiber(3, spec.a, x.value);
      if (ys.size() != f.solutions.size()) o.fail("oracle disagrees at " + to_string(x));
    }
  }
  if (c.points().size() != 4 || oracle::point_count(3, spec.a) != 4) o.fail("|E| != 4");
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.fail("too slow");
  std::ostringstream d;
  d << "q=3 fibres {0: ns, 1: s, 2: os, inf: os}, |E| = " << c.points().size() << " ("
    << std::fixed << std::setprecision(3) << dt << " s)";
  o.detail = d.str();
  return o;
}

// ---- 2 -----------------------------------------------------------------------

Outcome tree_structure() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const CurveSpec& spec : kTestCurves) {
    const Curve c = validate_curve(spec);
    const LabeledTree t(c);
    const int q = spec.q;
    // Centre at the root and at a vertex eight steps down a seeded walk.
    std::mt19937_64 rng(spec.q * 131 + spec.a[3]);
    TVertex deep = t.root();
    for (int i = 0; i < 8; ++i) {
      const auto kids = t.children(deep);
      deep = kids[rng() % kids.size()];
    }
    for (const VertexAddress& centre : {VertexAddress{}, deep.address}) {
      for (const TVertex& v : t.ball(centre, 6)) {
        ++checked;
        const auto around = t.neighbors(v);
        if (around.size() != static_cast<std::size_t>(q + 1)) o.fail(name(spec) + " degree at " + v.address.str());
        for (const auto& w : around)
          if (std::abs(oracle::invariant(w.label) - oracle::invariant(v.label)) != 1)
            o.fail(name(spec) + " invariant step at " + v.address.str());
        auto want = oracle::neighbour_multiset(v.label, q, c);
        if (v.parent_label) {
          auto it = std::find(want.begin(), want.end(), *v.parent_label);
          if (it == want.end()) {
            o.fail(name(spec) + " parent label not in M(L) at " + v.address.str());
            continue;
          }
          want.erase(it);
        }
        auto kids = t.child_labels(v.label, v.parent_label);
        std::sort(kids.begin(), kids.end());
        if (kids != want) o.fail(name(spec) + " child multiset at " + v.address.str());
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) o.fail("too slow");
  std::ostringstream d;
  d << checked << " vertices in radius-6 balls, q in {2,3,5} (" << std::fixed << std::setprecision(2)
    << dt << " s)";
  o.detail = d.str();
  return o;
}

// ---- 3 -----------------------------------------------------------------------

constexpr int kTipHeight = 24;

std::vector<oracle::Edge> tip_path(const LabeledTree& t, const Cusp& a, const Cusp& b) {
  return oracle::path_edges(oracle::tree_path(oracle::tip(t, a, kTipHeight), oracle::tip(t, b, kTipHeight)));
}

std::vector<int> tip_profile(const LabeledTree& t, const Cusp& a, const Cusp& b) {
  std::vector<int> h;
  for (const auto& v : oracle::tree_path(oracle::tip(t, a, kTipHeight), oracle::tip(t, b, kTipHeight)))
    h.push_back(oracle::invariant(t.label_of(v)));
  return h;
}

Outcome decomposition() {
  Outcome o;
  double worst = 0;
  std::size_t pieces_total = 0;
  for (const CurveSpec& spec : kTestCurves) {
    const auto t0 = Clock::now();
    const LabeledTree t(validate_curve(spec));
    Sampler rng(t, 3000 + spec.q);
    for (int i = 0; i < 500; ++i) {
      const ModularSymbol s = rng.symbol(12);
      const std::string tag = name(spec) + " " + to_string(s);
      const auto pieces = decompose(t, s);
      pieces_total += pieces.size();
      if (pieces.empty() || !(pieces.front().from == s.from) || !(pieces.back().to == s.to))
        o.fail(tag + ": ends");
      for (std::size_t k = 0; k + 1 < pieces.size(); ++k)
        if (!(pieces[k].to == pieces[k + 1].from)) o.fail(tag + ": telescoping");
      if (oracle::local_minima(tip_profile(t, s.from, s.to)) != pieces.size()) o.fail(tag + ": piece count");
      std::map<oracle::Edge, long long> used;
      for (const auto& p : pieces) {
        if (!classify_reduced(t, p)) o.fail(tag + ": piece not reduced");
        const auto h = tip_profile(t, p.from, p.to);
        const int lo = *std::min_element(h.begin(), h.end());
        if (oracle::local_minima(h) != 1 || lo < -2 || lo > 0) o.fail(tag + ": piece profile");
        for (const auto& e : tip_path(t, p.from, p.to)) ++used[e];
      }
      // Every edge of the original is covered once, in its direction; all
      // other traffic is a shared tail walked out and back.
      for (const auto& e : tip_path(t, s.from, s.to))
        if (--used[e] < 0) o.fail(tag + ": edge missing from pieces");
      for (const auto& [e, n] : used) {
        auto back = used.find({e.second, e.first});
        if (n != (back == used.end() ? 0 : back->second)) {
          o.fail(tag + ": pieces do not partition the path");
          break;
        }
      }
    }
    worst = std::max(worst, seconds_since(t0));
  }
  if (worst >= 30.0) o.fail("too slow");
  std::ostringstream d;
  d << "500 symbols x " << kTestCurves.size() << " curves, anchors at depth <= 12, " << pieces_total
    << " pieces (worst curve " << std::fixed << std::setprecision(2) << worst << " s)";
  o.detail = d.str();
  return o;
}

// ---- 4, 5 --------------------------------------------------------------------

struct Inputs {
  std::vector<std::pair<const LabeledTree*, FormalSum>> sums;
  std::vector<std::unique_ptr<LabeledTree>> trees;
};

Inputs balanced_inputs() {
  Inputs in;
  for (const CurveSpec& spec : kTestCurves) {
    in.trees.push_back(std::make_unique<LabeledTree>(validate_curve(spec)));
    Sampler rng(*in.trees.back(), 5000 + spec.q * 7 + spec.a[3]);
    for (int i = 0; i < 200; ++i) in.sums.push_back({in.trees.back().get(), rng.balanced_sum()});
  }
  return in;
}

Outcome edge_balance(const Inputs& in) {
  Outcome o;
  std::map<const LabeledTree*, double> time;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < in.sums.size(); ++i) {
    const auto t0 = Clock::now();
    const auto& [t, fs] = in.sums[i];
    const std::string tag = "sum " + std::to_string(i);
    std::map<VertexAddress, long long> net;
    for (const auto& [s, c] : fs.terms()) {
      net[s.from.anchor] -= c;
      net[s.to.anchor] += c;
    }
    for (const auto& [k, n] : net)
      if (n != 0) o.fail(tag + ": generator oracle produced an unbalanced sum");
    std::map<oracle::Edge, long long> flow;
    for (const auto& [s, c] : fs.terms())
      for (const auto& [u, v] : tip_path(*t, s.from, s.to)) {
        flow[{u, v}] += c;
        flow[{v, u}] -= c;
      }
    for (const auto& [e, n] : flow)
      if (n != 0) {
        o.fail(tag + ": net traffic on " + e.first.str() + " -> " + e.second.str());
        break;
      }
    const auto lib = edge_flows(*t, fs);
    edges += lib.size();
    if (!unbalanced_edges(lib).empty()) o.fail(tag + ": edge_flows reports unbalanced edges");
    time[t] += seconds_since(t0);
  }
  double worst = 0;
  for (const auto& [t, s] : time) worst = std::max(worst, s);
  if (worst >= 30.0) o.fail("too slow");
  std::ostringstream d;
  d << "200 balanced sums x " << kTestCurves.size() << " curves, " << edges << " directed edges checked (worst curve "
    << std::fixed << std::setprecision(2) << worst << " s)";
  o.detail = d.str();
  return o;
}

Outcome reduction(const Inputs& in) {
  Outcome o;
  std::map<const LabeledTree*, double> time;
  std::size_t instances = 0;
  for (std::size_t i = 0; i < in.sums.size(); ++i) {
    const auto t0 = Clock::now();
    const auto& [t, fs] = in.sums[i];
    const std::string tag = "sum " + std::to_string(i);
    try {
      const Reduction red = reduce_with_report(*t, fs);
      instances += red.certificate.combination.size();
      if (!verify_certificate(*t, fs, red.certificate)) o.fail(tag + ": certificate does not verify");
      // Stages after the split phase: reduced, e, ns, o, s.
      for (std::size_t k = 2; k < red.stages.size(); ++k)
        if (red.stages[k].l1 > red.stages[k - 1].l1)
          o.fail(tag + ": metric rises at stage " + red.stages[k].stage);
      if (red.stages.back().l1 != 0) o.fail(tag + ": residue left");
    } catch (const std::exception& e) {
      o.fail(tag + ": " + e.what());
    }
    time[t] += seconds_since(t0);
  }
  double worst = 0;
  for (const auto& [t, s] : time) worst = std::max(worst, s);
  if (worst >= 60.0) o.fail("too slow");
  std::ostringstream d;
  d << in.sums.size() << " certificates verified, " << instances << " instances (worst curve " << std::fixed
    << std::setprecision(2) << worst << " s)";
  o.detail = d.str();
  return o;
}

// ---- 6 -----------------------------------------------------------------------

Outcome presentation_counts() {
  Outcome o;
  const auto t0 = Clock::now();
  const CurveSpec spec{3, {0, 0, 0, 1, 2}};
  const LabeledTree t(validate_curve(spec));
  const Presentation p = present(t);
  const ClassCensus c = census(p.matrix.generators);
  const oracle::Census w = oracle::census(3, spec.a);
  if (c.e != 2 || c.s != 2 || c.o != 10 || c.ns != 16) o.fail("census differs from e:2 s:2 o:10 ns:16");
  if (c.e != w.e || c.s != w.s || c.o != w.o || c.ns != w.ns) o.fail("census differs from oracle");
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.fail("too slow");
  std::ostringstream d;
  d << "q=3 census e:" << c.e << " s:" << c.s << " o:" << c.o << " ns:" << c.ns << " total " << c.total()
    << " (" << std::fixed << std::setprecision(3) << dt << " s)";
  o.detail = d.str();
  return o;
}

// ---- 7 -----------------------------------------------------------------------

Outcome homology_cross_check(bool exhaustive) {
  Outcome o;
  std::size_t curves = 0;
  double worst = 0, total = 0;
  for (int q : {2, 3, 5, 7}) {
    std::set<std::vector<int>> seen;
    for (const auto& a : oracle::all_curves(q)) {
      if (q >= 5 && !exhaustive && !seen.insert(oracle::fiber_map(q, a)).second) continue;
      const auto t0 = Clock::now();
      const LabeledTree t(validate_curve(CurveSpec{q, a}));
      const Presentation p = present(t);
      const std::size_t ends = oracle::point_count(q, a);
      const std::size_t rel = oracle::relative_h1_rank(q, a);
      if (p.homology.free_rank != ends - 1 || p.homology.free_rank != rel || !p.homology.torsion.empty())
        o.fail(oracle::curve_string(q, a) + ": got " + to_string(p.homology) + ", expected Z^" +
               std::to_string(ends - 1));
      const double dt = seconds_since(t0);
      worst = std::max(worst, dt);
      total += dt;
      ++curves;
    }
  }
  if (worst >= 60.0) o.fail("too slow");
  std::ostringstream d;
  d << curves << " curves (" << (exhaustive ? "all" : "all for q<=3, one per fibre map for q=5,7")
    << "), cokernel = Z^(|E|-1) = relative H1 rank, no torsion (worst " << std::fixed << std::setprecision(2)
    << worst << " s, total " << total << " s)";
  o.detail = d.str();
  return o;
}

// ---- 8 -----------------------------------------------------------------------

Outcome class_number_one() {
  Outcome o;
  const auto t0 = Clock::now();
  const LabeledTree t(validate_curve(CurveSpec{2, {0, 0, 1, 1, 1}}));
  const Presentation p = present(t);
  const ClassCensus c = census(p.matrix.generators);
  if (c.e != 1 || c.ns != 2 || c.s != 0 || c.o != 0) o.fail("census is not e:1 ns:2");
  if (p.homology.free_rank != 0 || !p.homology.torsion.empty()) o.fail("homology " + to_string(p.homology));
  const double dt = seconds_since(t0);
  if (dt >= 5.0) o.fail("too slow");
  std::ostringstream d;
  d << "q=2 classes e:" << c.e << " ns:" << c.ns << ", homology " << to_string(p.homology) << " (" << std::fixed
    << std::setprecision(3) << dt << " s)";
  o.detail = d.str();
  return o;
}

// ---- 9 -----------------------------------------------------------------------

Outcome snf_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(9);
  std::size_t small = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 20;
    IntMatrix a(rows, std::vector<BigInt>(cols));
    for (auto& r : a)
      for (auto& x : r) x = static_cast<long long>(rng() % 19) - 9;
    const SNFResult r = smith_normal_form(a);
    const std::string tag = "matrix " + std::to_string(trial);
    if (multiply(multiply(r.U, a), r.V) != r.D) o.fail(tag + ": UAV != D");
    for (const IntMatrix* m : {&r.U, &r.V}) {
      const BigInt det = oracle::bareiss_det(*m);
      if (det != 1 && det != -1) o.fail(tag + ": not unimodular");
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && r.D[i][j] != 0) o.fail(tag + ": D not diagonal");
    for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i)
      if (r.invariant_factors[i + 1] % r.invariant_factors[i] != 0) o.fail(tag + ": divisibility");
    if (r.rank != oracle::bareiss_rank(a)) o.fail(tag + ": rank");
    if (std::min(rows, cols) <= 3 && std::max(rows, cols) <= 8) {
      ++small;
      if (r.invariant_factors != oracle::determinantal_factors(a)) o.fail(tag + ": determinantal divisors");
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) o.fail("too slow");
  std::ostringstream d;
  d << "100 matrices up to 20x20, entries in [-9,9]; " << small << " also against determinantal divisors ("
    << std::fixed << std::setprecision(2) << dt << " s)";
  o.detail = d.str();
  return o;
}

// ---- 10 ----------------------------------------------------------------------

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str() + "\x1f" + err.str();
}

Outcome determinism() {
  Outcome o;
  const std::string q3 = "q=3;a=[0,0,0,1,2]", q5 = "q=5;a=[0,0,0,0,1]";
  const std::vector<std::vector<std::string>> runs = {
      {"presentation", q3},
      {"presentation", q3, "--format", "json"},
      {"presentation", q5, "--format", "json"},
      {"fuzz", q3, "--n", "15", "--seed", "42"},
      {"sample", q5, "--seed", "7"},
  };
  std::size_t compared = 0;
  for (const auto& args : runs) {
    if (cli(args) != cli(args)) o.fail("differs: " + args[0] + " " + args[1]);
    ++compared;
  }
  auto jobs = runs[2];
  jobs.insert(jobs.end(), {"--jobs", "4"});
  if (cli(jobs) != cli(runs[2])) o.fail("presentation differs with --jobs 4");
  ++compared;

  const std::string path = (std::filesystem::temp_directory_path() / "msym_acceptance_sum.txt").string();
  for (const std::string& curve : {q3, q5}) {
    std::ostringstream out, err;
    cli::run({"sample", curve, "--seed", "11"}, out, err);
    std::ofstream(path) << out.str();
    int code = -1;
    const std::string a = cli({"reduce", curve, path, "--format", "json"}, &code);
    const std::string b = cli({"reduce", curve, path, "--format", "json"});
    if (code != 0) o.fail("reduce exit " + std::to_string(code));
    if (a != b) o.fail("reduce differs on " + curve);
    ++compared;
  }
  std::remove(path.c_str());
  o.detail = std::to_string(compared) + " repeated CLI runs byte-identical (presentation, reduce, fuzz, sample)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool exhaustive = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--exhaustive") == 0) exhaustive = true;

  std::vector<std::pair<int, std::function<Outcome()>>> criteria;
  criteria.push_back({1, curve_classification});
  criteria.push_back({2, tree_structure});
  criteria.push_back({3, decomposition});
  Inputs inputs;
  criteria.push_back({4, [&] {
                        inputs = balanced_inputs();
                        return edge_balance(inputs);
                      }});
  criteria.push_back({5, [&] { return reduction(inputs); }});
  criteria.push_back({6, presentation_counts});
  criteria.push_back({7, [&] { return homology_cross_check(exhaustive); }});
  criteria.push_back({8, class_number_one});
  criteria.push_back({9, snf_suite});
  criteria.push_back({10, determinism});

  int failed = 0;
  for (auto& [n, fn] : criteria) {
    Outcome r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << std::setw(2) << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail
              << "\n";
    for (const auto& p : r.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
    failed += !r.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << "\n";
  return failed ? 1 : 0;
}
