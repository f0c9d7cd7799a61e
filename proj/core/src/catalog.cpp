#include "nz/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "nz/errors.hpp"
#include "nz/expression.hpp"

namespace nz {

namespace embedded {
const std::map<std::string, std::string>& catalog_documents();
}

namespace {

using nlohmann::json;

Rational parse_rational(const json& j, const std::string& entry) {
  if (!j.is_string())
    throw SchemaError(entry + ": rational fields must be strings");
  try {
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw SchemaError(entry + ": bad rational '" + j.get<std::string>() +
                      "'");
  }
}

std::vector<std::pair<int, Monomial>> parse_terms(
    const json& list, const std::vector<std::string>& vars,
    const std::string& entry) {
  std::vector<std::pair<int, Monomial>> out;
  for (const auto& t : list) {
    int eps = t.at("eps").get<int>();
    if (eps != 1 && eps != -1)
      throw SchemaError(entry + ": eps must be +1 or -1");
    Monomial mon;
    mon.exps.assign(vars.size() + 1, 0);
    for (const auto& [key, val] : t.at("exps").items()) {
      if (key == "m") {
        mon.exps.back() = val.get<int>();
        continue;
      }
      auto it = std::find(vars.begin(), vars.end(), key);
      if (it == vars.end())
        throw SchemaError(entry + ": unknown variable '" + key + "'");
      mon.exps[static_cast<std::size_t>(it - vars.begin())] = val.get<int>();
    }
    out.emplace_back(eps, mon);
  }
  return out;
}

PotentialExpression parse_potential(const json& p, const std::string& entry) {
  PotentialExpression V;
  V.vars = p.at("vars").get<std::vector<std::string>>();
  if (V.vars.empty()) throw SchemaError(entry + ": potential has no variables");
  V.const_pi2 = parse_rational(p.at("const_pi2"), entry);
  V.dilog_terms = parse_terms(p.at("dilog"), V.vars, entry);
  V.tetra_moduli = parse_terms(p.at("moduli"), V.vars, entry);
  std::size_t n = V.vars.size();
  const json& b = p.at("bilinear");
  if (b.size() != n + 1)
    throw SchemaError(entry + ": bilinear must be (n+1) x (n+1)");
  for (const auto& row : b) {
    if (row.size() != n + 1)
      throw SchemaError(entry + ": bilinear must be (n+1) x (n+1)");
    std::vector<Rational> r;
    for (const auto& cell : row) r.push_back(parse_rational(cell, entry));
    V.bilinear.push_back(std::move(r));
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (V.bilinear[i][j] != V.bilinear[j][i])
        throw SchemaError(entry + ": bilinear form not symmetric");
  for (const auto& cell : p.at("linear_ipi"))
    V.linear_ipi.push_back(parse_rational(cell, entry));
  if (V.linear_ipi.size() != n + 1)
    throw SchemaError(entry + ": linear_ipi must have n+1 entries");
  return V;
}

Triangulation parse_triangulation(const json& t, const std::string& entry) {
  Triangulation tri;
  tri.name = t.at("name").get<std::string>();
  tri.notes = t.value("notes", "");
  for (const auto& term : t.at("terms")) {
    TetraTerm tt;
    tt.epsilon = term.at("eps").get<int>();
    auto in = term.at("in").get<std::vector<int>>();
    auto out = term.at("out").get<std::vector<int>>();
    if (in.size() != 2 || out.size() != 2)
      throw SchemaError(entry + ": tetrahedron needs two in and two out labels");
    tt.in_labels = {in[0], in[1]};
    tt.out_labels = {out[0], out[1]};
    tri.terms.push_back(tt);
  }
  const json& mer = t.at("meridian");
  for (const auto& [key, val] : mer.at("coeffs").items())
    tri.meridian.coeffs[std::stoi(key)] = parse_rational(val, entry);
  tri.meridian.u_coeff = parse_rational(mer.at("u_coeff"), entry);
  return tri;
}

MultiPoly parse_apoly_rows(const json& rows) {
  MultiPoly p;
  for (const auto& row : rows) {
    int le = row.at(0).get<int>();
    int me = row.at(1).get<int>();
    BigInt coeff;
    if (row.at(2).is_string())
      coeff = BigInt(row.at(2).get<std::string>());
    else
      coeff = BigInt(row.at(2).get<long>());
    p = p + MultiPoly::monomial({"l", "m"}, {le, me}, coeff);
  }
  return p;
}

CatalogEntry parse_entry(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(name + ": " + e.what());
  }
  try {
    CatalogEntry entry;
    entry.name = doc.at("name").get<std::string>();
    entry.aliases = doc.value("aliases", std::vector<std::string>{});
    entry.expected_volume = doc.at("expected_volume").get<double>();
    if (!(entry.expected_volume > 0))
      throw SchemaError(entry.name + ": expected_volume must be positive");
    entry.potential = parse_potential(doc.at("potential"), entry.name);
    if (doc.contains("triangulation") && !doc["triangulation"].is_null())
      entry.triangulation =
          parse_triangulation(doc["triangulation"], entry.name);
    if (doc.contains("printed_gluing"))
      entry.printed_gluing =
          doc["printed_gluing"].get<std::vector<std::string>>();
    entry.printed_longitude = doc.value("printed_longitude", "");
    if (doc.contains("printed_solution"))
      for (const auto& [var, val] : doc["printed_solution"].items()) {
        if (!val.is_array() || val.size() != 2)
          throw SchemaError(entry.name + ": solution values are [re, im]");
        entry.printed_solution[var] =
            cplx(val[0].get<double>(), val[1].get<double>());
      }
    if (doc.contains("newton_matrix")) {
      NewtonMatrix mat;
      for (const auto& row : doc["newton_matrix"]) {
        std::vector<BigInt> r;
        for (const auto& cell : row)
          if (cell.is_string())
            r.emplace_back(cell.get<std::string>());
          else
            r.emplace_back(static_cast<long>(cell.get<long long>()));
        mat.rows.push_back(std::move(r));
      }
      entry.newton_matrix = std::move(mat);
    }
    if (doc.contains("explicit_apoly"))
      entry.explicit_apoly = parse_apoly_rows(doc["explicit_apoly"]);
    if (doc.contains("explicit_apoly_corrected"))
      entry.explicit_apoly_corrected =
          parse_apoly_rows(doc["explicit_apoly_corrected"]);
    entry.suspect_typo = doc.value("suspect_typo", false);
    entry.ptb_word = doc.value("ptb_word", "");
    entry.notes = doc.value("notes", "");
    // All printed equations must parse.
    for (const auto& g : entry.printed_gluing) parse_poly(g);
    if (!entry.printed_longitude.empty()) parse_poly(entry.printed_longitude);
    return entry;
  } catch (const json::exception& e) {
    throw SchemaError(name + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CatalogEntry> load_all() {
  const char* override_dir = std::getenv("NZFORGE_DATA");
  auto fetch = [&](const std::string& base) -> std::string {
    if (override_dir != nullptr)
      return read_file(std::string(override_dir) + "/" + base + ".json");
    const auto& docs = embedded::catalog_documents();
    auto it = docs.find(base);
    if (it == docs.end()) throw SchemaError("missing document " + base);
    return it->second;
  };

  json index;
  try {
    index = json::parse(fetch("index"));
  } catch (const json::exception& e) {
    throw SchemaError(std::string("index: ") + e.what());
  }
  std::vector<CatalogEntry> entries;
  for (const auto& item : index.at("entries")) {
    std::string file = item.at("file").get<std::string>();
    std::string base = file.substr(0, file.rfind('.'));
    CatalogEntry entry = parse_entry(fetch(base), base);
    if (entry.name != item.at("name").get<std::string>())
      throw SchemaError(base + ": name disagrees with index");
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

std::vector<cplx> CatalogEntry::solution_vector() const {
  std::vector<cplx> out;
  for (const auto& var : potential.vars) {
    auto it = printed_solution.find(var);
    if (it == printed_solution.end())
      throw NotFound(name + ": no printed value for " + var);
    out.push_back(it->second);
  }
  return out;
}

const std::vector<CatalogEntry>& load() {
  static const std::vector<CatalogEntry> entries = load_all();
  return entries;
}

const CatalogEntry& get(const std::string& name_or_alias) {
  for (const auto& entry : load()) {
    if (entry.name == name_or_alias) return entry;
    for (const auto& alias : entry.aliases)
      if (alias == name_or_alias) return entry;
  }
  auto lower = [](std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(
                          static_cast<unsigned char>(c)));
    return s;
  };
  std::string near;
  std::string want = lower(name_or_alias);
  for (const auto& entry : load())
    if (lower(entry.name).find(want) != std::string::npos ||
        want.find(lower(entry.name)) != std::string::npos)
      near += (near.empty() ? "" : ", ") + entry.name;
  throw NotFound("no catalog entry '" + name_or_alias + "'" +
                 (near.empty() ? "" : "; close matches: " + near));
}

}  // namespace nz
