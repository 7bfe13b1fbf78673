#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linfty/constructions.hpp"
#include "linfty/zoo.hpp"

namespace linfty {

// Flat-file grammar shared by every artifact the CLI reads or writes. A
// document is a header (optional name/provenance, then ring and type) plus
// sections closed by `end`:
//
//   type linfty|ainfty  ->  basis + brackets   (entries "l2 (a b) -> { c: 2 }")
//   type star           ->  basis + products   (entries "(a b) -> { c: 1 }")
//   type dmap           ->  entries            ("alpha -> { v: 1 }")
//   type fmap           ->  entries            ("(v1 v2 v3) -> { alpha: 3 }")
//   type actionmap      ->  entries            ("(v alpha) -> { beta: 1 }")
//   type weights        ->  entries            ("old -> new : (1/2*i)*mu^2")
//
// '#' starts a comment. Scalar literals are parsed in the declared ring.
enum class DocKind { algebra, star, dmap, fmap, actionmap, weights };

using VectorLiteral = std::vector<std::pair<std::string, Scalar>>;

struct BracketEntry {
  int arity = 0;
  std::vector<std::string> tuple;
  VectorLiteral value;
  bool operator==(const BracketEntry&) const = default;
};

struct PairEntry {
  std::vector<std::string> tuple;
  VectorLiteral value;
  bool operator==(const PairEntry&) const = default;
};

struct MapEntry {
  std::string label;
  VectorLiteral value;
  bool operator==(const MapEntry&) const = default;
};

struct WeightEntry {
  std::string old_label;
  std::string new_label;
  Gaussian prefactor;
  int mu_exponent = 0;
  bool operator==(const WeightEntry&) const = default;
};

struct Document {
  DocKind kind = DocKind::algebra;
  Ring ring = Ring::Q;
  AlgebraKind algebra_kind = AlgebraKind::linfty;  // meaningful for kind == algebra
  std::string name;
  std::string provenance;
  std::vector<std::pair<std::string, int>> basis;  // algebra, star
  std::vector<BracketEntry> brackets;              // algebra
  std::vector<PairEntry> products;                 // star
  std::vector<MapEntry> map_entries;               // dmap
  std::vector<PairEntry> table_entries;            // fmap, actionmap
  std::vector<WeightEntry> weight_entries;         // weights

  bool operator==(const Document&) const = default;
};

Document parse_document(std::string_view text);
std::string serialize(const Document& doc);

// Conversions between documents and domain objects. Serialization is
// canonical: basis in declared order, entries sorted by (arity, tuple),
// vector literals sorted by basis index, normalized scalar literals.
Document doc_from_algebra(const HomotopyAlgebra& algebra);
HomotopyAlgebra algebra_from_doc(const Document& doc);

Document doc_from_star(const StarProduct& p);
StarProduct star_from_doc(const Document& doc);

Document doc_from_weights(const ScalingWeights& w);
ScalingWeights weights_from_doc(const Document& doc);

// Resolution of the extension inputs against a loaded bracket algebra.
LinearMap linear_map_from_doc(const Document& doc, const GradedBasis& target);
FOverrides f_overrides_from_doc(const Document& doc, const GradedBasis& V, const GradedBasis& U);
ActionOverrides action_overrides_from_doc(const Document& doc, const GradedBasis& V,
                                          const GradedBasis& U);

// Built-in fixtures addressable by name from the CLI.
const std::vector<std::string>& builtin_names();
std::optional<Document> builtin_document(const std::string& name);

}  // namespace linfty
