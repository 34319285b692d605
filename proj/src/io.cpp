#include "zpd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zpd/constructions.hpp"

namespace zpd {

json field_to_json(FieldSpec field) {
  if (field.is_prime_field()) return json{{"Fp", field.p}};
  return "Q";
}

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw ParseError("field must be \"Q\" or {\"Fp\": p}, got \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    try {
      return FieldSpec::prime(j["Fp"].get<std::uint64_t>());
    } catch (const InvalidParameter& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

json algebra_to_json(const AnyAlgebra& any) {
  return std::visit(
      [](const auto& alg) {
        json constants = json::array();
        for (const auto& e : alg.entries()) {
          constants.push_back(json::array({e.i, e.j, e.k, e.value.get_str()}));
        }
        json out = {{"name", alg.name()},
                    {"field", field_to_json(alg.field().spec())},
                    {"dim", alg.dim()},
                    {"structure_constants", std::move(constants)}};
        if (alg.layout()) out["layout"] = {{"component_dims", alg.layout()->component_dims()}};
        return out;
      },
      any);
}

namespace {

std::size_t index_value(const json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

template <class F>
Algebra<F> build_typed(const F& field, const std::string& name, std::size_t dim, const std::vector<StructureEntry>& entries,
                       std::optional<DirectSumLayout> layout) {
  try {
    return Algebra<F>::from_entries(name, field, dim, entries, std::move(layout));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid algebra file: ") + e.what());
  }
}

}  // namespace

AnyAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  for (const char* key : {"field", "dim", "structure_constants"}) {
    if (!j.contains(key)) throw ParseError(std::string("algebra file is missing \"") + key + "\"");
  }
  const FieldSpec field = field_from_json(j["field"]);
  const std::size_t dim = index_value(j["dim"], "dim");
  if (dim == 0) throw ParseError("dim must be at least 1");
  std::string name = "unnamed";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string");
    name = j["name"].get<std::string>();
  }

  if (!j["structure_constants"].is_array()) throw ParseError("structure_constants must be an array");
  std::vector<StructureEntry> entries;
  for (const auto& row : j["structure_constants"]) {
    if (!row.is_array() || row.size() != 4 || !row[3].is_string()) {
      throw ParseError("each structure constant must be [i, j, k, \"value\"]");
    }
    StructureEntry e{index_value(row[0], "i"), index_value(row[1], "j"), index_value(row[2], "k"),
                     parse_rational(row[3].get<std::string>())};
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw ParseError("structure constant index out of range: " + row.dump());
    }
    entries.push_back(std::move(e));
  }

  std::optional<DirectSumLayout> layout;
  if (j.contains("layout")) {
    const auto& l = j["layout"];
    if (!l.is_object() || !l.contains("component_dims") || !l["component_dims"].is_array()) {
      throw ParseError("layout must be {\"component_dims\": [...]}");
    }
    std::vector<std::size_t> dims;
    for (const auto& d : l["component_dims"]) dims.push_back(index_value(d, "component dimension"));
    try {
      layout.emplace(std::move(dims));
    } catch (const Error& e) {
      throw ParseError(std::string("invalid layout: ") + e.what());
    }
  }

  if (field.is_prime_field()) return build_typed(PrimeField(field.p), name, dim, entries, std::move(layout));
  return build_typed(Rationals{}, name, dim, entries, std::move(layout));
}

std::string algebra_hash(const AnyAlgebra& alg) {
  const std::string canonical = algebra_to_json(alg).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

LoadedAlgebra load_algebra(std::string_view source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.substr(0, prefix.size()) == prefix) {
    auto body = source.substr(prefix.size());
    FieldSpec field = FieldSpec::rationals();
    if (auto at = body.rfind('@'); at != std::string_view::npos) {
      field = FieldSpec::parse(body.substr(at + 1));
      body = body.substr(0, at);
    }
    auto built = catalog(body, field);
    return {std::move(built.algebra), std::move(built.notes)};
  }
  return {algebra_from_json(read_json_file(std::string(source))), {}};
}

template <class F>
json certificate_to_json(const Algebra<F>& alg, const Certificate<F>& cert) {
  const auto& field = alg.field();
  auto coords = [&](const Vec<F>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(field.to_string(x));
    return arr;
  };
  json pairs = json::array();
  for (const auto& [a, b] : cert.pairs) pairs.push_back(json::array({coords(a), coords(b)}));
  return {{"algebra_hash", algebra_hash(AnyAlgebra{alg})}, {"field", field_to_json(field.spec())}, {"pairs", std::move(pairs)}};
}

template <class F>
Certificate<F> certificate_from_json(const json& j, const Algebra<F>& alg) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array()) {
    throw ParseError("certificate must be an object with a \"pairs\" array");
  }
  if (j.contains("field") && !(field_from_json(j["field"]) == alg.field().spec())) {
    throw FieldMismatch("certificate field " + field_from_json(j["field"]).label() + " does not match algebra field " +
                        alg.field().spec().label());
  }
  const auto& field = alg.field();
  auto vec = [&](const json& arr) {
    if (!arr.is_array()) throw ParseError("certificate vectors must be arrays of value strings");
    Vec<F> v;
    for (const auto& x : arr) {
      if (!x.is_string()) throw ParseError("certificate coordinates must be strings");
      try {
        v.push_back(field.from_rational(parse_rational(x.get<std::string>())));
      } catch (const InvalidParameter& e) {
        throw ParseError(e.what());
      }
    }
    return v;
  };
  Certificate<F> cert;
  for (const auto& pair : j["pairs"]) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("each certificate pair must be [[a...], [b...]]");
    cert.pairs.emplace_back(vec(pair[0]), vec(pair[1]));
  }
  return cert;
}

template json certificate_to_json<Rationals>(const RationalAlgebra&, const Certificate<Rationals>&);
template json certificate_to_json<PrimeField>(const ModularAlgebra&, const Certificate<PrimeField>&);
template Certificate<Rationals> certificate_from_json<Rationals>(const json&, const RationalAlgebra&);
template Certificate<PrimeField> certificate_from_json<PrimeField>(const json&, const ModularAlgebra&);

}  // namespace zpd
