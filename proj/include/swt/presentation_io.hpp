#ifndef SWT_PRESENTATION_IO_HPP
#define SWT_PRESENTATION_IO_HPP

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "swt/matrix.hpp"
#include "swt/presentation.hpp"

namespace swt {

/// Malformed presentation file; the message names the line or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline long long json_int(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_unsigned()) {
    if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ParseError("field " + field + ": integer outside the 64-bit range");
    return static_cast<long long>(v.get<std::uint64_t>());
  }
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) throw ParseError("field " + field + ": expected an integer, got " + v.dump());
  throw ParseError("field " + field + ": expected an integer, got " + std::string(v.type_name()));
}

}  // namespace detail

/// Parses {"name"?, "genus", "handles", "monodromy": [[...], ...]}. Checks
/// shape only; symplecticity is left to validate_presentation.
inline Presentation parse_presentation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "genus" && key != "handles" && key != "monodromy")
      throw ParseError("field " + key + ": unknown field");
  for (const char* key : {"genus", "handles", "monodromy"})
    if (!doc.contains(key)) throw ParseError(std::string("field ") + key + ": missing");

  Presentation p;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("field name: expected a string");
    p.name = doc["name"].get<std::string>();
  }
  const long long g = detail::json_int(doc["genus"], "genus");
  const long long n = detail::json_int(doc["handles"], "handles");
  if (g < 0 || g > 1000) throw ParseError("field genus: must be in 0..1000");
  if (n < 0 || n > 1000) throw ParseError("field handles: must be in 0..1000");
  p.g = static_cast<int>(g);
  p.N = static_cast<int>(n);

  const auto& mat = doc["monodromy"];
  if (!mat.is_array()) throw ParseError("field monodromy: expected an array of rows");
  const std::size_t rows = mat.size();
  const std::size_t cols = rows == 0 ? 0 : (mat[0].is_array() ? mat[0].size() : 0);
  p.monodromy = IntMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rf = "monodromy[" + std::to_string(r) + "]";
    if (!mat[r].is_array()) throw ParseError("field " + rf + ": expected an array");
    if (mat[r].size() != cols) throw ParseError("field " + rf + ": row has " + std::to_string(mat[r].size()) +
                                                " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      p.monodromy(r, c) = detail::json_int(mat[r][c], rf + "[" + std::to_string(c) + "]");
  }
  return p;
}

inline Presentation read_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

/// Stable layout: fixed key order, one matrix row per line.
inline std::string write_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "{\n";
  if (!p.name.empty()) os << "  \"name\": " << nlohmann::json(p.name).dump() << ",\n";
  os << "  \"genus\": " << p.g << ",\n";
  os << "  \"handles\": " << p.N << ",\n";
  os << "  \"monodromy\": [";
  for (std::size_t r = 0; r < p.monodromy.rows(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (std::size_t c = 0; c < p.monodromy.cols(); ++c) os << (c ? ", " : "") << p.monodromy(r, c);
    os << ']';
  }
  os << (p.monodromy.rows() ? "\n  ]\n" : "]\n");
  os << "}\n";
  return os.str();
}

/// Presentation whose monodromy is a random transvection word of length `words`.
inline Presentation generate_fixture(int g, int N, int words, std::uint64_t seed, std::string name = {}) {
  if (g < 0 || N < 0 || words < 0) throw std::invalid_argument("generate_fixture: parameters must be nonnegative");
  const MappingClass a = random_symplectic(SurfaceModel::split(N, g), words, seed);
  return make_presentation(g, N, a, std::move(name));
}

}  // namespace swt

#endif  // SWT_PRESENTATION_IO_HPP
