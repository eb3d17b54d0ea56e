#include "hopfkit/document.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hopfkit {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.contains(key)) fail(key, "missing member");
  return doc.at(key);
}

std::size_t read_index(const Json& v, const std::string& where, std::size_t bound) {
  if (!v.is_number_integer()) fail(where, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<unsigned long long>(i) >= bound) {
    fail(where, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(i);
}

mpz_class read_integer(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return mpz_class(v.dump());
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    mpz_class z;
    const std::size_t digits_from = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos ||
        z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
      fail(where, "'" + s + "' is not a decimal integer");
    }
    return z;
  }
  fail(where, "expected an integer or a decimal string");
}

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

struct ScalarReader {
  Field field;
  bool strict_prime;

  Scalar operator()(const Json& num, const Json& den, const std::string& where) const {
    const mpz_class n = read_integer(num, where + " numerator");
    const mpz_class d = read_integer(den, where + " denominator");
    if (d == 0) fail(where, "zero denominator");
    if (strict_prime) {
      if (d != 1) fail(where, "prime-field entries must have denominator 1");
      const mpz_class p(std::to_string(field.characteristic()));
      if (n < 0 || n >= p) fail(where, "prime-field entries must lie in [0, p)");
    }
    try {
      return Scalar(field, n, d);
    } catch (const DivisionByZero&) {
      fail(where, "denominator vanishes in " + field.name());
    }
  }
};

std::vector<std::string> read_labels(const Json& doc, std::size_t n) {
  std::vector<std::string> labels;
  if (!doc.contains("labels")) return labels;
  const Json& l = doc.at("labels");
  if (!l.is_array() || l.size() != n) fail("labels", "expected an array of " + std::to_string(n) + " strings");
  for (std::size_t i = 0; i < n; ++i) {
    if (!l[i].is_string()) fail("labels[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(l[i].get<std::string>());
  }
  return labels;
}

void read_sparse(const Json& doc, const char* key, std::size_t arity, std::size_t d, const ScalarReader& read,
                 const std::function<Scalar&(const std::vector<std::size_t>&)>& slot) {
  const Json& entries = member(doc, key);
  if (!entries.is_array()) fail(key, "expected an array");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = std::string(key) + "[" + std::to_string(e) + "]";
    const Json& row = entries[e];
    if (!row.is_array() || row.size() != arity + 2) {
      fail(where, "expected " + std::to_string(arity) + " indices followed by numerator and denominator");
    }
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < arity; ++a) idx.push_back(read_index(row[a], where, d));
    if (!seen.insert(idx).second) fail(where, "duplicate entry");
    slot(idx) = read(row[arity], row[arity + 1], where);
  }
}

Bialgebra bialgebra_from_json(const Json& doc, std::optional<Field> override_field) {
  const Json& f = member(doc, "field");
  if (!f.is_string()) fail("field", "expected a string such as \"Q\" or \"F3\"");
  Field declared;
  try {
    declared = Field::parse(f.get<std::string>());
  } catch (const UnsupportedField& e) {
    fail("field", e.what());
  }
  const Field field = override_field.value_or(declared);
  const ScalarReader read{field, !override_field && !declared.is_rational()};

  const Json& dim = member(doc, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) fail("dim", "expected a positive integer");
  const auto d = static_cast<std::size_t>(dim.get<long long>());
  if (d > 4096) fail("dim", "dimension too large");

  std::vector<Scalar> mult(d * d * d, Scalar::zero(field));
  std::vector<Scalar> comult(d * d * d, Scalar::zero(field));
  Vector unit = zero_vector(field, d);
  Vector counit = zero_vector(field, d);
  read_sparse(doc, "mult", 3, d, read, [&](const auto& i) -> Scalar& { return mult[(i[0] * d + i[1]) * d + i[2]]; });
  read_sparse(doc, "comult", 3, d, read,
              [&](const auto& i) -> Scalar& { return comult[(i[0] * d + i[1]) * d + i[2]]; });
  read_sparse(doc, "unit", 1, d, read, [&](const auto& i) -> Scalar& { return unit[i[0]]; });
  read_sparse(doc, "counit", 1, d, read, [&](const auto& i) -> Scalar& { return counit[i[0]]; });
  return Bialgebra(field, d, std::move(mult), std::move(comult), std::move(unit), std::move(counit),
                   read_labels(doc, d));
}

FiniteMonoid monoid_from_json(const Json& doc) {
  const Json& size = member(doc, "size");
  if (!size.is_number_integer() || size.get<long long>() < 1) fail("size", "expected a positive integer");
  FiniteMonoid m;
  m.size = static_cast<std::size_t>(size.get<long long>());
  if (m.size > 4096) fail("size", "monoid too large");
  m.identity = read_index(member(doc, "identity"), "identity", m.size);
  const Json& table = member(doc, "table");
  if (!table.is_array() || table.size() != m.size) fail("table", "expected " + std::to_string(m.size) + " rows");
  for (std::size_t g = 0; g < m.size; ++g) {
    const std::string where = "table[" + std::to_string(g) + "]";
    if (!table[g].is_array() || table[g].size() != m.size) fail(where, "expected " + std::to_string(m.size) + " entries");
    std::vector<std::size_t> row;
    for (std::size_t h = 0; h < m.size; ++h) {
      row.push_back(read_index(table[g][h], where + "[" + std::to_string(h) + "]", m.size));
    }
    m.table.push_back(std::move(row));
  }
  m.labels = read_labels(doc, m.size);
  return m;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

void check_header(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  const Json& schema = member(doc, "schema");
  if (!schema.is_number_integer() || schema.get<long long>() != kSchema) {
    fail("schema", "unsupported schema version (expected " + std::to_string(kSchema) + ")");
  }
  if (!member(doc, "kind").is_string()) fail("kind", "expected \"bialgebra\" or \"monoid\"");
}

Json sparse_entry(std::initializer_list<std::size_t> idx, const Scalar& s) {
  Json row = Json::array();
  for (auto i : idx) row.push_back(i);
  row.push_back(integer_json(s.numerator()));
  row.push_back(integer_json(s.denominator()));
  return row;
}

// One top-level member per line; nested rows (sparse entries, table rows)
// one per line, so documents diff cleanly.
std::string layout(const Json& doc) {
  std::string out = "{\n";
  std::size_t n = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + Json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && value[0].is_array()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++n < doc.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace

Document parse_document(const std::string& text, std::optional<Field> field) {
  const Json doc = parse_json(text);
  check_header(doc);
  const auto kind = doc.at("kind").get<std::string>();
  Document out;
  if (kind == "bialgebra") {
    out.kind = Document::Kind::bialgebra;
    out.bialgebra = bialgebra_from_json(doc, field);
  } else if (kind == "monoid") {
    out.kind = Document::Kind::monoid;
    out.monoid = monoid_from_json(doc);
  } else {
    fail("kind", "unknown kind '" + kind + "'");
  }
  return out;
}

Document load_document(const std::string& path, std::optional<Field> field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str(), field);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Bialgebra parse_bialgebra(const std::string& text, std::optional<Field> field) {
  Document doc = parse_document(text, field);
  if (doc.kind != Document::Kind::bialgebra) throw ParseError("kind: expected a bialgebra document");
  return std::move(*doc.bialgebra);
}

FiniteMonoid parse_monoid(const std::string& text) {
  Document doc = parse_document(text);
  if (doc.kind != Document::Kind::monoid) throw ParseError("kind: expected a monoid document");
  return std::move(*doc.monoid);
}

std::string to_json(const Bialgebra& b) {
  const std::size_t d = b.dim();
  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "bialgebra";
  doc["field"] = b.field().name();
  doc["dim"] = d;
  doc["labels"] = b.labels();
  Json mult = Json::array();
  Json comult = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (!b.mult(i, j, k).is_zero()) mult.push_back(sparse_entry({i, j, k}, b.mult(i, j, k)));
        if (!b.comult(i, j, k).is_zero()) comult.push_back(sparse_entry({i, j, k}, b.comult(i, j, k)));
      }
  Json unit = Json::array();
  Json counit = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    if (!b.unit()[i].is_zero()) unit.push_back(sparse_entry({i}, b.unit()[i]));
    if (!b.counit()[i].is_zero()) counit.push_back(sparse_entry({i}, b.counit()[i]));
  }
  doc["mult"] = std::move(mult);
  doc["comult"] = std::move(comult);
  doc["unit"] = std::move(unit);
  doc["counit"] = std::move(counit);
  return layout(doc);
}

std::string to_json(const FiniteMonoid& m) {
  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "monoid";
  doc["size"] = m.size;
  doc["identity"] = m.identity;
  doc["table"] = m.table;
  if (!m.labels.empty()) doc["labels"] = m.labels;
  return layout(doc);
}

}  // namespace hopfkit
