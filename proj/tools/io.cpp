#include "io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace conelab::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

bool is_decimal(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_decimal(std::string_view s) {
  const bool neg = s[0] == '-';
  if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
  const Int v{std::string(s)};
  return neg ? Int(-v) : v;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

}  // namespace

Json parse_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (is_decimal(s)) return parse_decimal(s);
  }
  fail(where, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (auto slash = s.find('/'); slash != std::string::npos) {
      const std::string_view num(s.data(), slash);
      const std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
      if (!is_decimal(num) || !is_decimal(den)) fail(where, "expected a rational \"p/q\"");
      const Int d = parse_decimal(den);
      if (d == 0) fail(where, "zero denominator");
      return Rational(parse_decimal(num), d);
    }
  }
  return Rational(int_from_json(j, where));
}

IntVector int_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(int_from_json(j[i], at(where, i)));
  return v;
}

RatVector rational_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], at(where, i)));
  return v;
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(int_vector_from_json(j[i], at(where, i)));
    if (rows.back().size() != rows.front().size()) fail(at(where, i), "row length differs from row 0");
  }
  if (rows.front().empty()) fail(where, "rows are empty");
  return IntMatrix::from_rows(rows);
}

RatMatrix rational_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(rational_vector_from_json(j[i], at(where, i)));
    if (rows.back().size() != rows.front().size()) fail(at(where, i), "row length differs from row 0");
  }
  if (rows.front().empty()) fail(where, "rows are empty");
  return RatMatrix::from_rows(rows);
}

IntegralLattice lattice_from_json(const Json& j) {
  const Int rank = int_from_json(field(j, "rank", "lattice"), "rank");
  IntMatrix gram = int_matrix_from_json(field(j, "gram", "lattice"), "gram");
  if (rank < 1 || gram.rows() != gram.cols() || Int(gram.rows()) != rank) {
    fail("gram", "expected a " + to_string(rank) + "x" + to_string(rank) + " matrix");
  }
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) fail("labels", "expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail(at("labels", i), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
  }
  return IntegralLattice(std::move(gram), std::move(labels));
}

IntMatrix matrix_from_json(const Json& j) { return int_matrix_from_json(field(j, "matrix", "input"), "matrix"); }

std::vector<RatMatrix> maps_from_json(const Json& j) {
  const Json& maps = field(j, "maps", "group");
  if (!maps.is_array()) fail("maps", "expected an array of matrices");
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < maps.size(); ++i) out.push_back(rational_matrix_from_json(maps[i], at("maps", i)));
  return out;
}

std::vector<IntMatrix> integer_maps_from_json(const Json& j) {
  const Json& maps = field(j, "maps", "group");
  if (!maps.is_array()) fail("maps", "expected an array of matrices");
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < maps.size(); ++i) out.push_back(int_matrix_from_json(maps[i], at("maps", i)));
  return out;
}

HermitianForm form_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "form", "input") : j;
  const IntVector c = int_vector_from_json(arr, "form");
  if (c.size() != 4) fail("form", "expected four integers a, d, h0, h1");
  return HermitianForm::from_coords(c);
}

RationalCone cone_from_json(const Json& j) {
  const Int dim = int_from_json(field(j, "ambient_dim", "cone"), "ambient_dim");
  if (dim < 1 || dim > 64) fail("ambient_dim", "expected a small positive integer");
  const Json& gens = field(j, "generators", "cone");
  if (!gens.is_array()) fail("generators", "expected an array of vectors");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.push_back(rational_vector_from_json(gens[i], at("generators", i)));
    if (Int(out.back().size()) != dim) fail(at("generators", i), "length differs from ambient_dim");
  }
  return RationalCone(static_cast<std::size_t>(dim), out);
}

std::vector<RatVector> samples_from_json(const Json& j) {
  const Json& s = field(j, "samples", "samples");
  if (!s.is_array()) fail("samples", "expected an array of vectors");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(rational_vector_from_json(s[i], at("samples", i)));
  return out;
}

IntVector parse_int_list(const std::string& text, const std::string& where) {
  IntVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!is_decimal(item)) fail(where, "expected comma-separated integers, got \"" + text + "\"");
    out.push_back(parse_decimal(item));
    start = comma + 1;
  }
  return out;
}

Json to_json(const Int& x) {
  if (x >= Int(std::numeric_limits<std::int64_t>::min()) && x <= Int(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(x);
  }
  return to_string(x);
}

Json to_json(const Rational& q) {
  if (denominator(q) == 1) return to_json(numerator(q));
  return to_string(q);
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(IntVector(m.row(i).begin(), m.row(i).end())));
  return out;
}

Json to_json(const HermitianForm& f) { return to_json(f.coords()); }

Json to_json(const UnimodularTransform& g) {
  auto e = [](const Eisenstein& z) { return to_json(IntVector{z.x, z.y}); };
  return Json::array({Json::array({e(g.p()), e(g.q())}), Json::array({e(g.r()), e(g.s())})});
}

}  // namespace conelab::io
