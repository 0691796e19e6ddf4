#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msym/symbols.hpp"

namespace msym {

/// Integer combination of modular symbols. Zero coefficients are never stored,
/// so two equal sums compare equal.
class FormalSum {
 public:
  using Map = std::map<ModularSymbol, long long>;

  FormalSum() = default;

  void add(const ModularSymbol& s, long long c);
  void add(const FormalSum& other, long long scale = 1);
  long long coeff(const ModularSymbol& s) const;
  void erase(const ModularSymbol& s) { terms_.erase(s); }

  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Sum of |coefficients|.
  long long l1() const;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Map terms_;
};

/// One `<coeff> * {<addr>,<addr>}` per line; `#` starts a comment.
FormalSum parse_formal_sum(std::string_view text);
std::string to_string(const FormalSum& fs);

/// Net coefficient flowing into each cusp (entering minus leaving). Cusps with
/// zero net are kept so that the participating set is visible.
std::map<Cusp, long long> cusp_balance(const FormalSum& fs);
bool is_cusp_balanced(const FormalSum& fs);

/// Directed edge (u, v) of T.
using DirectedEdge = std::pair<VertexAddress, VertexAddress>;

/// Traffic on every directed edge of the union of the truncated geodesics.
/// Each cusp's tail is cut one step above the highest point where the
/// participating geodesics join its ray.
std::map<DirectedEdge, long long> edge_flows(const LabeledTree& tree, const FormalSum& fs);
/// Edges whose forward and backward traffic differ.
std::vector<DirectedEdge> unbalanced_edges(const std::map<DirectedEdge, long long>& flows);

enum class Rule : std::uint8_t { E2, E3, S2, O2, O3, OY, NS2, NS3, NSY };

std::string to_string(Rule r);
Rule parse_rule(std::string_view text);
SiteType site_type_of(Rule r);
std::size_t arity(Rule r);

struct RelationInstance {
  Rule rule = Rule::E2;
  VertexAddress site;
  std::vector<Cusp> cusps;
  FormalSum expansion;
};

/// Validates and expands a generator relation.
///
/// *2: {c1,c2} + {c2,c1}; *3 and *Y: {c1,c2} + {c2,c3} + {c3,c1}. For OY the
/// pair (c2, c3) must sit under one s-vertex; for NSY it must leave the site
/// through one o-vertex. Throws WrongSiteType, CuspNotAttached,
/// YShapeViolated, DegenerateSymbol.
RelationInstance instantiate(const LabeledTree& tree, Rule rule, const VertexAddress& site,
                             const std::vector<Cusp>& cusps);

/// Generator relation formed by ports of one site star: the rule, the site it
/// lives at (a pair under one s-vertex of an o-site is an S2 at that s-vertex)
/// and the cusp order the rule expects.
struct TupleRule {
  Rule rule = Rule::E2;
  VertexAddress site;
  std::vector<Cusp> cusps;
};
TupleRule rule_for_pair(const SiteStar& star, const Port& a, const Port& b);
/// The cycle a -> b -> c -> a, rotated for the Y-shaped rules.
TupleRule rule_for_triple(const SiteStar& star, const Port& a, const Port& b, const Port& c);

/// Class of the reduced symbol running from port `a` to port `b`.
ReducedClass pair_class(const SiteStar& star, const Port& a, const Port& b);

/// The identity {a, b} = {a, gamma} + {gamma, b}.
struct Split {
  ModularSymbol symbol;
  Cusp gamma;
};

struct Combination {
  Rule rule = Rule::E2;
  VertexAddress site;
  std::vector<Cusp> cusps;
  long long multiplier = 0;
};

struct Certificate {
  std::vector<Split> splits;
  std::vector<Combination> combination;
};

/// Sum of |coefficients| after each phase of a reduction run.
struct StageMetric {
  std::string stage;  // input, reduced, e, ns, o, s
  long long l1 = 0;
  std::size_t terms = 0;
};

struct Reduction {
  Certificate certificate;
  std::vector<StageMetric> stages;
};

/// Rewrites a balanced sum as splits plus generator relations.
/// Throws UnbalancedInput; InternalError if an elimination step fails to make
/// progress.
Reduction reduce_with_report(const LabeledTree& tree, const FormalSum& fs);
Certificate reduce_to_generators(const LabeledTree& tree, const FormalSum& fs);

struct Verification {
  bool ok = false;
  std::string reason;
};

/// Replays the splits on `fs` and subtracts every instance. Malformed instances
/// make the check fail with a reason instead of throwing.
Verification check_certificate(const LabeledTree& tree, const FormalSum& fs,
                               const Certificate& cert);
bool verify_certificate(const LabeledTree& tree, const FormalSum& fs, const Certificate& cert);

/// Splits every non-reduced symbol until only reduced symbols remain.
FormalSum split_to_reduced(const LabeledTree& tree, const FormalSum& fs,
                           std::vector<Split>* log = nullptr);

struct InteractionSite {
  VertexAddress site;
  SiteType type = SiteType::E;
  int level = 0;  // invariant of the site
  std::vector<Cusp> used;
};

struct Interaction {
  std::size_t a = 0;  // indices into InteractionReport::sites
  std::size_t b = 0;
  std::vector<Cusp> shared;
  bool nontrivial = false;  // two or more shared cusps
};

struct InteractionReport {
  std::vector<InteractionSite> sites;
  std::vector<Interaction> edges;
};

/// Minimal sites used by the reduced form of `fs`, linked when symbols at two
/// sites of the same level use a common cusp.
InteractionReport interaction_analysis(const LabeledTree& tree, const FormalSum& fs);

}  // namespace msym
