#pragma once

// {"n": 3, "entries": ["1", "-1/2", ...]} with entries in row-major order.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "inertia/sym_matrix.hpp"

namespace inertia {

Rational parse_rational(const std::string& text);

nlohmann::json matrix_to_json(const RationalMatrix& a);
// Throws InputError on malformed input or an asymmetric matrix.
RationalMatrix matrix_from_json(const nlohmann::json& j);

RationalMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const RationalMatrix& a);

// Reads an edge-list file.
Graph read_graph(const std::filesystem::path& path);

}  // namespace inertia
