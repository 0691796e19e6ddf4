#pragma once

#include <map>
#include <string>
#include <vector>

#include "msym/relations.hpp"
#include "msym/snf.hpp"

namespace msym {

/// Every oriented reduced class of the curve, canonically ordered.
std::vector<ReducedClass> enumerate_classes(const Curve& curve);

struct ClassCensus {
  std::size_t e = 0, s = 0, o = 0, ns = 0;
  std::size_t total() const { return e + s + o + ns; }
};
ClassCensus census(const std::vector<ReducedClass>& classes);

/// Which three-term tuples to include when enumerating rows.
enum class TupleScope {
  All,       // every 3-subset of ports, both orientations
  Anchored,  // only 3-subsets containing the first port of the site
};

/// One deduplicated relation row with the first instance that produced it.
struct RelationRow {
  SparseRow row;
  TupleRule origin;
};

struct RelationMatrix {
  std::vector<ReducedClass> generators;
  std::vector<RelationRow> rows;
};

struct RowOptions {
  TupleScope scope = TupleScope::All;
  /// Minimal vertices to use; empty = the copy of every minimal vertex of S.
  std::vector<VertexAddress> sites;
  unsigned jobs = 1;
};

/// Rows of all generator relations at the chosen sites, projected to class
/// coordinates; sign-normalised (first entry positive) and deduplicated.
RelationMatrix relation_rows(const LabeledTree& tree, const RowOptions& opts = {});

/// Addresses of the copies of the minimal vertices of S inside T.
std::vector<VertexAddress> s_sites(const LabeledTree& tree);

struct Homology {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
};

struct Presentation {
  RelationMatrix matrix;
  Cokernel cokernel;
  Homology homology;
  std::size_t expected_free_rank = 0;  // ends of S minus one
};

Presentation present(const LabeledTree& tree, const RowOptions& opts = {});
Homology homology(const Curve& curve);

std::string to_string(const Homology& h);

/// Dense CSV: header of class names, one line per row.
std::string matrix_csv(const RelationMatrix& m);

}  // namespace msym
