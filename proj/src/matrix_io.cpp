#include "inertia/matrix_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:/([0-9]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("not a rational number: \"" + text + "\"");
  if (m[2].matched && m[2].str().find_first_not_of('0') == std::string::npos) {
    throw InputError("zero denominator in \"" + text + "\"");
  }
  Rational num(m[1].str());
  if (!m[2].matched) return num;
  return num / Rational(m[2].str());
}

nlohmann::json matrix_to_json(const RationalMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) entries.push_back(a(i, j).str());
  return {{"n", a.rows()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw InputError("matrix order must be non-negative");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n) {
      throw InputError("matrix needs exactly n*n entries");
    }
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const auto& e = entries[static_cast<std::size_t>(i) * n + k];
        if (e.is_string()) {
          a(i, k) = parse_rational(e.get<std::string>());
        } else if (e.is_number_integer()) {
          a(i, k) = Rational(e.get<long long>());
        } else {
          throw InputError("matrix entries must be \"p/q\" strings or integers");
        }
      }
    }
    if (!is_symmetric_matrix(a)) throw InputError("matrix is not symmetric");
    return a;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed matrix JSON: ") + ex.what());
  }
}

RationalMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read matrix file " + path.string());
  try {
    return matrix_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& ex) {
    throw InputError("matrix file " + path.string() + " is not valid JSON: " + ex.what());
  }
}

void write_matrix(const std::filesystem::path& path, const RationalMatrix& a) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write matrix file " + path.string());
  out << matrix_to_json(a).dump(1) << '\n';
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read graph file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

}  // namespace inertia
