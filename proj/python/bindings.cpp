#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "msym/cli.hpp"
#include "msym/error.hpp"
#include "msym/formats.hpp"
#include "msym/sample.hpp"

namespace py = pybind11;
using namespace msym;

namespace {

// Structured results cross the boundary as JSON text; the package wrapper
// decodes them.
class Tree {
 public:
  explicit Tree(const std::string& curve) : tree_(validate_curve(parse_curve_spec(curve))) {}

  std::string curve() const { return to_string(tree_.curve().spec()); }
  int q() const { return tree_.q(); }
  std::vector<std::string> points() const {
    std::vector<std::string> out;
    for (const auto& p : tree_.curve().points()) out.push_back(to_string(p));
    return out;
  }
  std::string curve_info() const { return curve_json(tree_.curve()).dump(); }

  std::string label(const std::string& addr) const {
    return to_string(tree_.label_of(VertexAddress::parse(addr)));
  }
  int invariant(const std::string& addr) const { return tree_.invariant_at(VertexAddress::parse(addr)); }
  std::vector<std::string> children(const std::string& addr) const {
    std::vector<std::string> out;
    for (const auto& v : tree_.children(tree_.vertex(VertexAddress::parse(addr))))
      out.push_back(to_string(v.label));
    return out;
  }
  std::vector<std::string> attached_cusps(const std::string& addr) const {
    std::vector<std::string> out;
    for (const auto& c : tree_.attached_cusps(VertexAddress::parse(addr))) out.push_back(c.anchor.str());
    return out;
  }

  std::optional<std::string> classify(const std::string& symbol) const {
    const auto cls = classify_reduced(tree_, parse_symbol(symbol));
    if (!cls) return std::nullopt;
    return to_string(*cls);
  }
  std::vector<int> profile(const std::string& symbol) const {
    return symbol_path(tree_, parse_symbol(symbol)).profile;
  }
  std::vector<std::string> decompose(const std::string& symbol) const {
    std::vector<std::string> out;
    for (const auto& s : msym::decompose(tree_, parse_symbol(symbol))) out.push_back(to_string(s));
    return out;
  }

  std::string reduce(const std::string& sum) const {
    const FormalSum fs = parse_formal_sum(sum);
    const Reduction red = reduce_with_report(tree_, fs);
    return json{{"certificate", certificate_json(red.certificate)},
                {"stages", stages_json(red.stages)},
                {"verified", verify_certificate(tree_, fs, red.certificate)}}
        .dump();
  }
  bool verify(const std::string& sum, const std::string& cert) const {
    json j;
    try {
      j = json::parse(cert);
    } catch (const json::exception& e) {
      throw ParseError(std::string("certificate: ") + e.what());
    }
    if (j.contains("certificate")) j = j["certificate"];
    return verify_certificate(tree_, parse_formal_sum(sum), certificate_from_json(j));
  }
  std::string interactions(const std::string& sum) const {
    return interaction_json(interaction_analysis(tree_, parse_formal_sum(sum))).dump();
  }

  std::string presentation(const std::string& scope, unsigned jobs) const {
    RowOptions opts;
    opts.scope = scope == "anchored" ? TupleScope::Anchored : TupleScope::All;
    opts.jobs = jobs;
    return presentation_json(present(tree_, opts)).dump();
  }

  std::string sample(std::uint64_t seed, std::size_t instances) const {
    Sampler s(tree_, seed);
    Sampler::SumOptions o;
    o.instances = instances;
    return to_string(s.balanced_sum(o));
  }

 private:
  LabeledTree tree_;
};

py::dict snf(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const SNFResult r = smith_normal_form(a, cols);
  auto conv = [](const IntMatrix& m) {
    py::list out;
    for (const auto& row : m) {
      py::list l;
      for (const auto& x : row) l.append(py::int_(py::str(x.str())));
      out.append(l);
    }
    return out;
  };
  py::list inv;
  for (const auto& x : r.invariant_factors) inv.append(py::int_(py::str(x.str())));
  py::dict d;
  d["D"] = conv(r.D);
  d["U"] = conv(r.U);
  d["V"] = conv(r.V);
  d["invariant_factors"] = inv;
  d["rank"] = r.rank;
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "modular symbols on the Bruhat-Tits tree of an elliptic function field";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Tree>(m, "Tree")
      .def(py::init<const std::string&>(), py::arg("curve"))
      .def_property_readonly("curve", &Tree::curve)
      .def_property_readonly("q", &Tree::q)
      .def("points", &Tree::points)
      .def("_curve_info", &Tree::curve_info)
      .def("label", &Tree::label, py::arg("address"))
      .def("invariant", &Tree::invariant, py::arg("address"))
      .def("children", &Tree::children, py::arg("address"))
      .def("attached_cusps", &Tree::attached_cusps, py::arg("site"))
      .def("classify", &Tree::classify, py::arg("symbol"))
      .def("profile", &Tree::profile, py::arg("symbol"))
      .def("decompose", &Tree::decompose, py::arg("symbol"))
      .def("_reduce", &Tree::reduce, py::arg("formal_sum"))
      .def("_verify", &Tree::verify, py::arg("formal_sum"), py::arg("certificate"))
      .def("_interactions", &Tree::interactions, py::arg("formal_sum"))
      .def("_presentation", &Tree::presentation, py::arg("scope") = "all", py::arg("jobs") = 1)
      .def("sample", &Tree::sample, py::arg("seed"), py::arg("instances") = 20,
           py::call_guard<py::gil_scoped_release>());

  m.def("snf", &snf, py::arg("rows"), py::arg("cols") = 0);
  m.def("run_cli", &run_cli, py::arg("args"));
}
