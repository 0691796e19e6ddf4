#include "msym/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "msym/error.hpp"
#include "msym/formats.hpp"
#include "msym/sample.hpp"

namespace msym::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw IoError("cannot write " + path);
  o << text;
}

Curve load_curve(const std::string& text) { return validate_curve(parse_curve_spec(text)); }

struct Options {
  std::string curve;
  std::string format = "text";
  std::string symbol;
  std::string address;
  std::string file;
  std::string cert;
  std::string out_path;
  std::string csv_path;
  std::string scope = "all";
  int radius = 1;
  int depth = 3;
  unsigned jobs = 1;
  std::size_t n = 20;
  std::uint64_t seed = 1;
};

void add_format(CLI::App* sub, Options& o, std::vector<std::string> allowed) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(std::move(allowed)))
      ->capture_default_str();
}

int cmd_curve_info(const Options& o, std::ostream& out) {
  const Curve c = load_curve(o.curve);
  if (o.format == "json")
    out << curve_json(c).dump(2) << "\n";
  else
    out << curve_text(c);
  return kOk;
}

int cmd_quotient_tree(const Options& o, std::ostream& out) {
  const QuotientTree t(load_curve(o.curve));
  if (o.format == "dot")
    out << quotient_tree_dot(t, o.depth);
  else if (o.format == "json")
    out << quotient_json(t, o.depth).dump(2) << "\n";
  else
    out << quotient_text(t, o.depth);
  return kOk;
}

int cmd_tree_ball(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  const VertexAddress center = VertexAddress::parse(o.address);
  if (o.radius < 0) throw ParseError("radius must be non-negative");
  if (o.format == "dot") {
    out << tree.ball_dot(center, o.radius);
    return kOk;
  }
  auto vs = tree.ball(center, o.radius);
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return a.address < b.address; });
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(vertex_json(v));
    out << json{{"center", center.str()}, {"radius", o.radius}, {"vertices", arr}}.dump(2) << "\n";
  } else {
    for (const auto& v : vs)
      out << v.address.str() << " " << to_string(v.label) << " [" << vertex_type(v.label) << ", "
          << invariant_of_label(v.label) << "]\n";
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  const ModularSymbol s = parse_symbol(o.symbol);
  const SymbolPath path = symbol_path(tree, s);
  const auto cls = classify_core(path.core);
  if (o.format == "json") {
    json j = class_json(cls);
    j["symbol"] = to_string(s);
    j["path"] = path_json(path);
    if (cls) j["site"] = reduced_site(path.core).address.str();
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << to_string(s) << "\n";
  out << "profile";
  for (int n : path.profile) out << " " << n;
  out << "\nlabels ";
  for (std::size_t i = 0; i < path.core.size(); ++i)
    out << (i ? ", " : "") << to_string(path.core[i].label);
  out << "\n";
  if (cls)
    out << "class " << to_string(*cls) << " at " << reduced_site(path.core).address.str() << "\n";
  else
    out << "not reduced (" << path.local_minima().size() << " minima)\n";
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  const ModularSymbol s = parse_symbol(o.symbol);
  const auto pieces = decompose(tree, s);
  json arr = json::array();
  for (const auto& p : pieces) {
    const SymbolPath path = symbol_path(tree, p);
    const auto cls = classify_core(path.core);
    if (o.format == "json") {
      json j = class_json(cls);
      j["symbol"] = to_string(p);
      j["site"] = reduced_site(path.core).address.str();
      arr.push_back(j);
    } else {
      out << to_string(p) << "  " << (cls ? to_string(*cls) : "not reduced") << " at "
          << reduced_site(path.core).address.str() << "\n";
    }
  }
  if (o.format == "json") out << json{{"symbol", to_string(s)}, {"pieces", arr}}.dump(2) << "\n";
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  const FormalSum fs = parse_formal_sum(read_file(o.file));
  const Reduction red = reduce_with_report(tree, fs);
  const Verification v = check_certificate(tree, fs, red.certificate);
  if (!o.out_path.empty()) write_file(o.out_path, certificate_json(red.certificate).dump(2) + "\n");
  if (o.format == "json") {
    out << json{{"certificate", certificate_json(red.certificate)},
                {"stages", stages_json(red.stages)},
                {"verified", v.ok}}
               .dump(2)
        << "\n";
  } else {
    out << "splits " << red.certificate.splits.size() << "\n";
    out << "instances " << red.certificate.combination.size() << "\n";
    for (const auto& c : red.certificate.combination) {
      out << "  " << c.multiplier << " * " << to_string(c.rule) << " at " << c.site.str() << " [";
      for (std::size_t i = 0; i < c.cusps.size(); ++i)
        out << (i ? "," : "") << c.cusps[i].anchor.str();
      out << "]\n";
    }
    out << "stages";
    for (const auto& s : red.stages) out << " " << s.stage << "=" << s.l1;
    out << "\n" << (v.ok ? "verified" : "NOT VERIFIED: " + v.reason) << "\n";
  }
  return v.ok ? kOk : kVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  const FormalSum fs = parse_formal_sum(read_file(o.file));
  json j;
  try {
    j = json::parse(read_file(o.cert));
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate is not JSON: ") + e.what());
  }
  // `reduce --format json` output nests the certificate; accept both.
  const Certificate cert = certificate_from_json(j.contains("certificate") ? j["certificate"] : j);
  const Verification v = check_certificate(tree, fs, cert);
  if (o.format == "json")
    out << json{{"verified", v.ok}, {"reason", v.reason}}.dump(2) << "\n";
  else
    out << (v.ok ? "verified" : "NOT VERIFIED: " + v.reason) << "\n";
  return v.ok ? kOk : kVerificationFailed;
}

int cmd_presentation(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  RowOptions ro;
  ro.jobs = o.jobs;
  ro.scope = o.scope == "anchored" ? TupleScope::Anchored : TupleScope::All;
  const Presentation p = present(tree, ro);
  if (!o.csv_path.empty()) write_file(o.csv_path, matrix_csv(p.matrix));
  if (o.format == "json")
    out << presentation_json(p).dump(2) << "\n";
  else
    out << presentation_text(p);
  return kOk;
}

int cmd_interactions(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  const FormalSum fs = parse_formal_sum(read_file(o.file));
  out << interaction_json(interaction_analysis(tree, fs)).dump(2) << "\n";
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  Sampler sampler(tree, o.seed);
  Sampler::SumOptions so;
  so.instances = o.n;
  so.depth = static_cast<std::size_t>(std::max(o.depth, 4));
  out << "# seed " << o.seed << "\n" << to_string(sampler.balanced_sum(so));
  return kOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  const LabeledTree tree(load_curve(o.curve));
  Sampler sampler(tree, o.seed);
  const std::size_t depth = static_cast<std::size_t>(std::max(o.depth, 4));
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // property -> (pass, fail)
  std::vector<std::string> failures;
  auto record = [&](const std::string& prop, bool ok, const std::string& detail) {
    auto& t = tally[prop];
    (ok ? t.first : t.second)++;
    if (!ok && failures.size() < 10) failures.push_back(prop + ": " + detail);
  };
  for (std::size_t i = 0; i < o.n; ++i) {
    const ModularSymbol s = sampler.symbol(depth);
    const auto bad = decomposition_violations(tree, s);
    record("decomposition", bad.empty(), to_string(s) + (bad.empty() ? "" : " " + bad.front()));

    Sampler::SumOptions so;
    so.depth = depth;
    const FormalSum fs = sampler.balanced_sum(so);
    record("cusp_balance", is_cusp_balanced(fs), "sample " + std::to_string(i));
    record("edge_balance", unbalanced_edges(edge_flows(tree, fs)).empty(),
           "sample " + std::to_string(i));
    try {
      const Reduction red = reduce_with_report(tree, fs);
      bool monotone = true;
      for (std::size_t k = 2; k < red.stages.size(); ++k)
        monotone = monotone && red.stages[k].l1 <= red.stages[k - 1].l1;
      record("metric_monotone", monotone, "sample " + std::to_string(i));
      const Verification v = check_certificate(tree, fs, red.certificate);
      record("certificate", v.ok, v.reason);
    } catch (const InternalError& e) {
      record("certificate", false, e.what());
    }
  }
  bool ok = true;
  json props = json::object();
  for (const auto& [prop, t] : tally) {
    props[prop] = {{"pass", t.first}, {"fail", t.second}};
    ok = ok && t.second == 0;
  }
  if (o.format == "json") {
    out << json{{"seed", o.seed}, {"n", o.n}, {"properties", props}, {"failures", failures}, {"ok", ok}}
               .dump(2)
        << "\n";
  } else {
    out << "seed " << o.seed << ", n " << o.n << "\n";
    for (const auto& [prop, t] : tally)
      out << prop << ": " << t.first << " passed, " << t.second << " failed\n";
    for (const auto& f : failures) out << "  " << f << "\n";
    out << (ok ? "all properties hold" : "PROPERTY FAILURES") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular symbols on the Bruhat-Tits tree of an elliptic function field"};
  app.name("msym");
  app.require_subcommand(1);
  Options o;

  auto curve_arg = [&](CLI::App* sub) {
    sub->add_option("curve", o.curve, "curve, e.g. 'q=3;a=[0,0,0,1,2]'")->required();
  };

  auto* info = app.add_subcommand("curve-info", "classify every fibre and count points");
  curve_arg(info);
  add_format(info, o, {"text", "json"});

  auto* qt = app.add_subcommand("quotient-tree", "the quotient tree S");
  curve_arg(qt);
  add_format(qt, o, {"text", "json", "dot"});
  qt->add_option("--depth", o.depth, "rays cut at c(p, depth)")->capture_default_str();

  auto* ball = app.add_subcommand("tree-ball", "labelled ball in T");
  curve_arg(ball);
  ball->add_option("address", o.address, "centre, e.g. /1/0")->required();
  ball->add_option("radius", o.radius, "radius")->required();
  add_format(ball, o, {"text", "json", "dot"});

  auto* cls = app.add_subcommand("classify", "classify a symbol as reduced or not");
  curve_arg(cls);
  cls->add_option("symbol", o.symbol, "symbol, e.g. '{/1/0,/1/1}'")->required();
  add_format(cls, o, {"text", "json"});

  auto* dec = app.add_subcommand("decompose", "split a symbol into reduced symbols");
  curve_arg(dec);
  dec->add_option("symbol", o.symbol, "symbol")->required();
  add_format(dec, o, {"text", "json"});

  auto* red = app.add_subcommand("reduce", "certify a balanced sum as a combination of relations");
  curve_arg(red);
  red->add_option("file", o.file, "formal sum file")->required();
  red->add_option("--out", o.out_path, "also write the certificate here");
  add_format(red, o, {"text", "json"});

  auto* ver = app.add_subcommand("verify", "check a certificate against a formal sum");
  curve_arg(ver);
  ver->add_option("file", o.file, "formal sum file")->required();
  ver->add_option("cert", o.cert, "certificate JSON")->required();
  add_format(ver, o, {"text", "json"});

  auto* pres = app.add_subcommand("presentation", "relation matrix, Smith form and homology");
  curve_arg(pres);
  add_format(pres, o, {"text", "json"});
  pres->add_option("--csv", o.csv_path, "write the relation matrix as CSV");
  pres->add_option("--jobs", o.jobs, "threads for row enumeration")->capture_default_str();
  pres->add_option("--scope", o.scope, "three-term tuples: all or anchored")
      ->check(CLI::IsMember({"all", "anchored"}))
      ->capture_default_str();

  auto* inter = app.add_subcommand("interactions", "how the sites of a balanced sum interact");
  curve_arg(inter);
  inter->add_option("file", o.file, "formal sum file")->required();

  auto* smp = app.add_subcommand("sample", "seeded random balanced formal sum");
  curve_arg(smp);
  smp->add_option("--n", o.n, "generator instances")->capture_default_str();
  smp->add_option("--seed", o.seed, "seed")->capture_default_str();
  smp->add_option("--depth", o.depth, "maximum anchor depth")->default_val(8);

  auto* fuzz = app.add_subcommand("fuzz", "seeded property checks on random inputs");
  curve_arg(fuzz);
  fuzz->add_option("--n", o.n, "number of samples")->capture_default_str();
  fuzz->add_option("--seed", o.seed, "seed")->capture_default_str();
  fuzz->add_option("--depth", o.depth, "maximum anchor depth")->default_val(8);
  add_format(fuzz, o, {"text", "json"});

  std::vector<std::string> argv_store{"msym"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return kUsage;
  }

  try {
    if (*info) return cmd_curve_info(o, out);
    if (*qt) return cmd_quotient_tree(o, out);
    if (*ball) return cmd_tree_ball(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*red) return cmd_reduce(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*pres) return cmd_presentation(o, out);
    if (*inter) return cmd_interactions(o, out);
    if (*smp) return cmd_sample(o, out);
    if (*fuzz) return cmd_fuzz(o, out);
  } catch (const DomainError& e) {
    print_error(err, e.kind(), e.what());
    return kDomainError;
  } catch (const InternalError& e) {
    print_error(err, "InternalError", e.what());
    return kInternal;
  }
  return kUsage;
}

}  // namespace msym::cli
