#include "symflag/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symflag/errors.hpp"

namespace symflag {

namespace detail {
extern const std::string_view kBuiltinCatalog;
}

namespace {

using nlohmann::json;

constexpr const char* kSchemaId = "symflag-catalog/1";

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& base, const std::string& key) {
  if (!obj.contains(key)) throw SchemaError(ptr(base, key), "missing field");
  return obj.at(key);
}

std::string get_string(const json& obj, const std::string& base, const std::string& key) {
  const json& v = field(obj, base, key);
  if (!v.is_string()) throw SchemaError(ptr(base, key), "expected a string");
  return v.get<std::string>();
}

int get_int(const json& obj, const std::string& base, const std::string& key) {
  const json& v = field(obj, base, key);
  if (!v.is_number_integer()) throw SchemaError(ptr(base, key), "expected an integer");
  return v.get<int>();
}

Rational get_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw SchemaError(where, "expected a rational string such as \"-1/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(where, e.what());
  }
}

Vector get_vector(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_array()) throw SchemaError(where, "expected an array");
  if (v.size() != n) throw SchemaError(where, "expected " + std::to_string(n) + " components");
  Vector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_rational(v[i], ptr(where, i)));
  return out;
}

CatalogEntry parse_entry(const json& e, const std::string& base) {
  if (!e.is_object()) throw SchemaError(base, "expected an object");
  CatalogEntry out;
  out.name = get_string(e, base, "name");
  out.kind = get_string(e, base, "kind");
  if (out.kind != "group" && out.kind != "symmetric") throw SchemaError(ptr(base, "kind"), "expected group or symmetric");
  out.space = e.contains("space") ? get_string(e, base, "space") : "";
  out.cartan_type = get_string(e, base, "cartan_type");
  out.notes = e.contains("notes") ? get_string(e, base, "notes") : "";

  const std::string gbase = ptr(base, "gram");
  const json& g = field(e, base, "gram");
  if (!g.is_array() || g.empty()) throw SchemaError(gbase, "expected a non-empty array of rows");
  const std::size_t n = g.size();
  out.gram = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector row = get_vector(g[i], ptr(gbase, i), n);
    for (std::size_t j = 0; j < n; ++j) out.gram(i, j) = row[j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out.gram(i, j) != out.gram(j, i))
        throw SchemaError(ptr(ptr(gbase, i), j), "gram matrix is not symmetric");

  const std::string mbase = ptr(base, "multiplicities");
  const json& ms = field(e, base, "multiplicities");
  if (!ms.is_array() || ms.empty()) throw SchemaError(mbase, "expected a non-empty array");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string ib = ptr(mbase, i);
    if (!ms[i].is_object()) throw SchemaError(ib, "expected an object");
    MultiplicityRule rule;
    rule.norm2 = get_rational(field(ms[i], ib, "norm2"), ptr(ib, "norm2"));
    rule.m = get_int(ms[i], ib, "m");
    if (rule.m < 1) throw SchemaError(ptr(ib, "m"), "multiplicity must be positive");
    out.multiplicities.push_back(rule);
  }

  const std::string lbase = ptr(base, "lattice_basis");
  const json& lb = field(e, base, "lattice_basis");
  if (!lb.is_array() || lb.size() != n) throw SchemaError(lbase, "expected " + std::to_string(n) + " basis vectors");
  for (std::size_t i = 0; i < n; ++i) out.lattice_basis.push_back(get_vector(lb[i], ptr(lbase, i), n));

  out.base_point = get_vector(field(e, base, "base_point"), ptr(base, "base_point"), n);
  out.expected_dim = get_int(e, base, "expected_dim");
  out.space_dim = get_int(e, base, "space_dim");
  return out;
}

RootSystem build_roots(const CatalogEntry& e) {
  CartanData data;
  try {
    data = cartan_data(e.cartan_type);
  } catch (const std::invalid_argument& ex) {
    throw InvariantViolation(e.name + ": " + ex.what());
  }
  if (!gram_matches_type(e.gram, data))
    throw InvariantViolation(e.name + ": gram matrix is not a multiple of the standard " + e.cartan_type + " form");
  std::vector<Vector> roots = generate_roots(e.gram, data.non_reduced);
  std::vector<int> mult;
  for (const Vector& r : roots) {
    const Rational n2 = dot(r, e.gram * r);
    auto it = std::find_if(e.multiplicities.begin(), e.multiplicities.end(),
                           [&](const MultiplicityRule& m) { return m.norm2 == n2; });
    if (it == e.multiplicities.end())
      throw InvariantViolation(e.name + ": no multiplicity given for roots of squared length " + to_string(n2));
    mult.push_back(it->m);
  }
  try {
    return RootSystem(e.gram, std::move(roots), std::move(mult), e.base_point);
  } catch (const Error& ex) {
    throw InvariantViolation(e.name + ": " + ex.what());
  }
}

Lattice build_lattice(const CatalogEntry& e, const WeylGroup& weyl) {
  try {
    return Lattice(weyl, e.lattice_basis);
  } catch (const Error& ex) {
    throw InvariantViolation(e.name + ": " + ex.what());
  }
}

}  // namespace

EntryModel::EntryModel(CatalogEntry entry)
    : entry_(std::move(entry)), weyl_(WeylGroup::generate(build_roots(entry_))), lattice_(build_lattice(entry_, weyl_)) {
  const RootSystem& rs = weyl_.roots();
  for (WeylIndex w = 0; w < weyl_.size(); ++w)
    for (RootIndex r = 0; r < rs.size(); ++r)
      if (rs.multiplicity(weyl_.act_on_root(w, r)) != rs.multiplicity(r))
        throw InvariantViolation(entry_.name + ": multiplicities are not Weyl-invariant");
  const int d = rs.positive_multiplicity_sum();
  if (d != entry_.expected_dim)
    throw InvariantViolation(entry_.name + ": sum of positive multiplicities is " + std::to_string(d) +
                             ", expected_dim says " + std::to_string(entry_.expected_dim));
  if (static_cast<int>(rs.rank()) + d != entry_.space_dim)
    throw InvariantViolation(entry_.name + ": rank + " + std::to_string(d) + " != space_dim " +
                             std::to_string(entry_.space_dim));
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw SchemaError("line " + std::to_string(line), "malformed JSON");
  }
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  if (!doc.contains("schema") || doc["schema"] != kSchemaId)
    throw SchemaError("/schema", std::string("expected \"") + kSchemaId + "\"");
  const json& entries = field(doc, "", "entries");
  if (!entries.is_array()) throw SchemaError("/entries", "expected an array");

  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out.push_back(parse_entry(entries[i], ptr("/entries", i)));
    if (!names.insert(out.back().name).second)
      throw SchemaError(ptr(ptr("/entries", i), "name"), "duplicate entry name " + out.back().name);
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open catalog file");
  std::stringstream buf;
  buf << in.rdbuf();
  auto entries = parse_catalog(buf.str());
  for (const CatalogEntry& e : entries) EntryModel{e};
  return entries;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto parsed = parse_catalog(detail::kBuiltinCatalog);
    for (const CatalogEntry& e : parsed) EntryModel{e};
    return parsed;
  }();
  return entries;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return e;
  std::string known;
  for (const CatalogEntry& e : entries) known += (known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown pair '" + name + "' (available: " + known + ")");
}

}  // namespace symflag
