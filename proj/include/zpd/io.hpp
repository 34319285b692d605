#pragma once

// JSON file formats.
//
// AlgebraFile:
//   { "name": "sl(2)", "field": "Q" | {"Fp": 5}, "dim": 3,
//     "structure_constants": [[i, j, k, "value"], ...],      // sparse, (i,j,k) sorted
//     "layout": {"component_dims": [3, 3]} }                  // optional
//
// Certificate:
//   { "algebra_hash": "<16 hex>", "field": ..., "pairs": [[[a...], [b...]], ...] }
//
// Values are strings holding exact integers or "num/den"; over F_p they are
// residues in [0, p). Omitted structure constants are zero.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zpd/algebra.hpp"
#include "zpd/decision.hpp"

namespace zpd {

using json = nlohmann::json;

json field_to_json(FieldSpec field);
FieldSpec field_from_json(const json& j);

json algebra_to_json(const AnyAlgebra& alg);
/// Throws ParseError on any schema violation.
AnyAlgebra algebra_from_json(const json& j);

/// FNV-1a 64-bit hash of the compact canonical AlgebraFile, as 16 hex digits.
std::string algebra_hash(const AnyAlgebra& alg);

struct LoadedAlgebra {
  AnyAlgebra algebra;
  std::vector<std::string> notes;
};

/// Reads an AlgebraFile, or builds "catalog:<expression>@<field>" (field
/// defaults to Q), e.g. "catalog:sl(2)@F5".
LoadedAlgebra load_algebra(std::string_view source);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

template <class F>
json certificate_to_json(const Algebra<F>& alg, const Certificate<F>& cert);

/// Parses pairs into the algebra's field. Throws ParseError on malformed
/// input and FieldMismatch when the certificate's field differs.
template <class F>
Certificate<F> certificate_from_json(const json& j, const Algebra<F>& alg);

}  // namespace zpd
