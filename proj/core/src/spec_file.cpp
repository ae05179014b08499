#include "lcak/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lcak {

namespace {

using json = nlohmann::json;
using Q = Rational;

// Line of the n-th occurrence of "key" (as a JSON key), or 0.
int line_of(std::string_view text, const std::string& key, int occurrence = 0, std::size_t from = 0) {
  const std::string needle = "\"" + key + "\"";
  std::size_t pos = from;
  for (int k = 0; k <= occurrence; ++k) {
    pos = text.find(needle, k == 0 ? pos : pos + 1);
    if (pos == std::string_view::npos) return 0;
  }
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void error(const std::string& reason, const std::string& field, const std::string& msg,
                          int line = -1) const {
    if (line < 0) line = line_of(text_, top_key(field));
    throw Error(ErrorCode::ParseError, reason, field + ": " + msg, field, line);
  }

  Q scalar(const json& v, const std::string& field) const {
    std::string s;
    if (v.is_string()) {
      s = v.get<std::string>();
    } else if (v.is_number()) {
      s = v.dump();
    } else {
      error("BAD_TYPE", field, "expected a number or a numeric string");
    }
    try {
      return ScalarTraits<Q>::parse(s);
    } catch (const Error& e) {
      error(e.reason(), field, e.what());
    }
  }

  int integer(const json& v, const std::string& field) const {
    if (!v.is_number_integer()) error("BAD_TYPE", field, "expected an integer");
    return v.get<int>();
  }

  int index(const json& v, const std::string& field, int dim) const {
    int i = 0;
    if (v.is_string()) {
      try {
        std::size_t used = 0;
        i = std::stoi(v.get<std::string>(), &used);
        if (used != v.get<std::string>().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        error("BAD_TYPE", field, "expected an index");
      }
    } else {
      i = integer(v, field);
    }
    if (i < 1 || i > dim) error("INDEX_OUT_OF_RANGE", field, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    return i - 1;
  }

  Vector<Q> vector(const json& v, const std::string& field, int size) const {
    if (!v.is_array()) error("BAD_TYPE", field, "expected a list");
    if (static_cast<int>(v.size()) != size)
      error("BAD_SHAPE", field, "expected " + std::to_string(size) + " entries, got " + std::to_string(v.size()));
    Vector<Q> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
  }

  Matrix<Q> matrix(const json& v, const std::string& field, int size) const {
    if (!v.is_array()) error("BAD_TYPE", field, "expected a list of rows");
    if (static_cast<int>(v.size()) != size)
      error("BAD_SHAPE", field, "expected " + std::to_string(size) + " rows, got " + std::to_string(v.size()));
    Matrix<Q> out(size, size);
    for (int i = 0; i < size; ++i) {
      const Vector<Q> row = vector(v[i], field + "[" + std::to_string(i) + "]", size);
      for (int j = 0; j < size; ++j) out(i, j) = row[j];
    }
    return out;
  }

  std::string_view text() const { return text_; }

 private:
  static std::string top_key(const std::string& field) {
    const auto cut = field.find_first_of(".[");
    return cut == std::string::npos ? field : field.substr(0, cut);
  }

  std::string_view text_;
};

Matrix<Q> standard_J(int dim) {
  Matrix<Q> j(dim, dim);
  for (int k = 0; k + 1 < dim; k += 2) {
    j(k + 1, k) = Q(1);
    j(k, k + 1) = Q(-1);
  }
  return j;
}

AlmostAbelianParams<Q> read_almost_abelian(const Reader& r, const json& v) {
  if (!v.is_object()) r.error("BAD_TYPE", "almost_abelian", "expected an object");
  for (const char* key : {"a", "b", "v", "A"})
    if (!v.contains(key)) r.error("MISSING_FIELD", std::string("almost_abelian.") + key, "missing");
  if (!v["b"].is_array()) r.error("BAD_TYPE", "almost_abelian.b", "expected a list");
  const int m = static_cast<int>(v["b"].size());
  if (m < 2 || m % 2 != 0) r.error("BAD_SHAPE", "almost_abelian.b", "expected an even number (>= 2) of entries");
  AlmostAbelianParams<Q> p = AlmostAbelianParams<Q>::zero(m / 2 + 1);
  p.a = r.scalar(v["a"], "almost_abelian.a");
  p.b = r.vector(v["b"], "almost_abelian.b", m);
  p.v = r.vector(v["v"], "almost_abelian.v", m);
  p.A = r.matrix(v["A"], "almost_abelian.A", m);
  return p;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  SpecFile spec;
  spec.source = std::string(text);
  const Reader r(spec.source);
  json doc;
  try {
    doc = json::parse(spec.source);
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, spec.source.size());
    const int line = 1 + static_cast<int>(std::count(spec.source.begin(), spec.source.begin() + byte, '\n'));
    throw Error(ErrorCode::ParseError, "BAD_JSON", e.what(), "", line);
  }
  if (!doc.is_object()) r.error("BAD_TYPE", "", "top level must be an object", 1);

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) r.error("BAD_TYPE", "name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  }
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) r.error("BAD_TYPE", "options", "expected an object");
    if (o.contains("tolerance")) {
      if (!o["tolerance"].is_number()) r.error("BAD_TYPE", "options.tolerance", "expected a number");
      spec.tolerance = o["tolerance"].get<double>();
      if (!(spec.tolerance >= 0)) r.error("BAD_NUMBER", "options.tolerance", "must be non-negative");
    }
    if (o.contains("arithmetic_mode")) {
      const json& m = o["arithmetic_mode"];
      if (m == "exact") {
        spec.mode = ArithmeticMode::Exact;
      } else if (m == "float") {
        spec.mode = ArithmeticMode::Float;
      } else {
        r.error("UNKNOWN_PRESET", "options.arithmetic_mode", "expected \"exact\" or \"float\"");
      }
    }
  }

  if (doc.contains("almost_abelian")) {
    spec.almost_abelian = read_almost_abelian(r, doc["almost_abelian"]);
    const auto& p = *spec.almost_abelian;
    spec.dim = 2 * p.n;
    if (doc.contains("dim") && r.integer(doc["dim"], "dim") != spec.dim)
      r.error("BAD_SHAPE", "dim", "does not match the almost_abelian data");
    for (const auto& c : almost_abelian_algebra(p).sparse()) spec.constants.push_back(c);
    spec.J = almost_abelian_J<Q>(p.n);
    spec.g = Matrix<Q>::identity(spec.dim);
    return spec;
  }

  if (!doc.contains("dim")) r.error("MISSING_FIELD", "dim", "missing", 1);
  spec.dim = r.integer(doc["dim"], "dim");
  if (spec.dim < 2 || spec.dim > kMaxFormDimension)
    r.error("BAD_SHAPE", "dim", "must lie in 2.." + std::to_string(kMaxFormDimension));

  if (doc.contains("brackets")) {
    const json& bs = doc["brackets"];
    if (!bs.is_array()) r.error("BAD_TYPE", "brackets", "expected a list");
    const std::size_t base = r.text().find("\"brackets\"");
    for (std::size_t k = 0; k < bs.size(); ++k) {
      const std::string field = "brackets[" + std::to_string(k) + "]";
      const int line = line_of(r.text(), "i", static_cast<int>(k), base);
      const json& b = bs[k];
      if (!b.is_object()) r.error("BAD_TYPE", field, "expected an object", line);
      for (const char* key : {"i", "j", "coefficients"})
        if (!b.contains(key)) r.error("MISSING_FIELD", field + "." + key, "missing", line);
      try {
        const int i = r.index(b["i"], field + ".i", spec.dim);
        const int j = r.index(b["j"], field + ".j", spec.dim);
        if (!b["coefficients"].is_object()) r.error("BAD_TYPE", field + ".coefficients", "expected an object");
        for (const auto& [key, value] : b["coefficients"].items()) {
          const std::string cf = field + ".coefficients." + key;
          const int kk = r.index(json(key), cf, spec.dim);
          spec.constants.push_back({i, j, kk, r.scalar(value, cf)});
        }
      } catch (const Error& e) {
        throw Error(e.code(), e.reason(), e.what(), e.field(), line);
      }
    }
  }

  if (!doc.contains("J")) r.error("MISSING_FIELD", "J", "missing", 1);
  const json& jv = doc["J"];
  if (jv.is_string()) {
    const std::string preset = jv.get<std::string>();
    if (spec.dim % 2 != 0) r.error("BAD_SHAPE", "dim", "an almost complex structure needs even dimension");
    if (preset == "standard") {
      spec.J = standard_J(spec.dim);
    } else if (preset == "almost_abelian") {
      spec.J = almost_abelian_J<Q>(spec.dim / 2);
    } else {
      r.error("UNKNOWN_PRESET", "J", "unknown preset '" + preset + "'");
    }
  } else {
    spec.J = r.matrix(jv, "J", spec.dim);
  }

  if (!doc.contains("g") || doc["g"] == "identity") {
    spec.g = Matrix<Q>::identity(spec.dim);
  } else if (doc["g"].is_string()) {
    r.error("UNKNOWN_PRESET", "g", "unknown preset '" + doc["g"].get<std::string>() + "'");
  } else {
    spec.g = r.matrix(doc["g"], "g", spec.dim);
  }
  return spec;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "FILE_NOT_FOUND", "cannot open '" + path + "'", path, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_spec(os.str());
}

template <class T>
AlmostHermitianStructure<T> build_structure(const SpecFile& spec) {
  auto where = [&](const std::string& field) { return line_of(spec.source, field); };
  const std::string alg_field = spec.almost_abelian ? "almost_abelian" : "brackets";
  LieAlgebra<Q> alg;
  try {
    alg = LieAlgebra<Q>::from_constants(spec.dim, spec.constants);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, e.reason(), e.what(), alg_field, where(alg_field));
  }
  const auto lv = validate_lie_algebra(alg);
  if (!lv.ok)
    throw Error(ErrorCode::ValidationError, "JACOBI_FAILED",
                "brackets violate the Jacobi identity (residual " + to_string(lv.jacobi_residual) + ")", alg_field,
                where(alg_field));
  const LieAlgebra<T> a = alg.template cast<T>();
  const Matrix<T> j = matrix_cast<T>(spec.J);
  const Matrix<T> g = matrix_cast<T>(spec.g);
  const auto v = validate_structure(a, j, g, spec.tolerance);
  if (!v.ok) {
    const std::string field = v.failure == "J_NOT_ACS" ? "J" : v.failure == "DIMENSION_MISMATCH" ? "dim" : "g";
    throw Error(ErrorCode::ValidationError, v.failure, "invalid structure: " + v.failure, field, where(field));
  }
  try {
    return AlmostHermitianStructure<T>(a, j, g, spec.tolerance);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, e.reason(), e.what(), "J", where("J"));
  }
}

template AlmostHermitianStructure<Rational> build_structure(const SpecFile&);
template AlmostHermitianStructure<double> build_structure(const SpecFile&);

}  // namespace lcak
