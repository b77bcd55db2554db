#include "tecol/config.hpp"

#include <json.hpp>

#include "tecol/error.hpp"

namespace tecol {

namespace {

using nlohmann::json;

FiniteGroup group_from_table_json(const json& doc) {
  const auto order = doc.at("order").get<std::size_t>();
  const auto table = doc.at("table").get<std::vector<std::vector<GroupElement>>>();
  if (table.size() != order) throw Error(Errc::MalformedTable, "'order' does not match the table size");
  return make_group(table);
}

FiniteGroup group_from_json(const json& doc) {
  if (doc.is_string()) return named_group(doc.get<std::string>());
  if (doc.is_object()) return group_from_table_json(doc);
  throw Error(Errc::ParseError, "'delta' must be a group key or a table object");
}

RunConfig run_from_json(const json& doc, std::size_t position) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "run entry must be an object");
  FiniteGroup delta = doc.contains("delta") ? group_from_json(doc.at("delta")) : cyclic_group(1);

  const std::string quotient = doc.value("quotient", std::string("Z"));
  QuotientKind kind;
  if (quotient == "Z")
    kind = QuotientKind::Z;
  else if (quotient == "Dinf" || quotient == "D_inf")
    kind = QuotientKind::Dinf;
  else
    throw Error(Errc::ParseError, "'quotient' must be \"Z\" or \"Dinf\"");

  Automorphism alpha = Automorphism::identity(delta.order());
  if (doc.contains("alpha")) alpha = validate_automorphism(delta, doc.at("alpha").get<std::vector<GroupElement>>());
  std::optional<Automorphism> rho;
  if (doc.contains("rho")) rho = validate_automorphism(delta, doc.at("rho").get<std::vector<GroupElement>>());
  else if (kind == QuotientKind::Dinf) rho = Automorphism::identity(delta.order());

  std::vector<GammaElement> gens;
  for (const auto& row : doc.at("generators")) {
    if (!row.is_array() || row.size() < 2 || row.size() > 3)
      throw Error(Errc::ParseError, "generators are [delta, n] or [delta, n, eps]");
    gens.push_back({row[0].get<GroupElement>(), {row[1].get<std::int64_t>(), row.size() == 3 ? row[2].get<int>() : 0}});
  }

  RunConfig run{doc.value("name", "run" + std::to_string(position)),
                MarkedGroupSpec(std::move(delta), kind, std::move(alpha), std::move(rho), std::move(gens),
                                doc.value("multiset", false)),
                std::nullopt};
  if (doc.contains("N")) run.N = doc.at("N").get<std::size_t>();
  return run;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

std::vector<RunConfig> parse_config(std::string_view text) {
  const json doc = parse_json(text);
  try {
    std::vector<RunConfig> runs;
    const json* list = nullptr;
    if (doc.is_array())
      list = &doc;
    else if (doc.is_object() && doc.contains("runs"))
      list = &doc.at("runs");
    if (list) {
      for (std::size_t i = 0; i < list->size(); ++i) runs.push_back(run_from_json((*list)[i], i));
    } else {
      runs.push_back(run_from_json(doc, 0));
    }
    return runs;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

FiniteGroup parse_group_table(std::string_view text) {
  const json doc = parse_json(text);
  try {
    return group_from_table_json(doc);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace tecol
