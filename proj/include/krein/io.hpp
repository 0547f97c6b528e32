#pragma once

#include <string>

#include <json.hpp>

#include "krein/report.hpp"

namespace krein::io {

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}. Plain numbers are
/// accepted as real entries. Throws ParseError.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Json real_vector_to_json(const RealVector& v);

Json read_json_file(const std::string& path);
/// Bare matrix file.
Matrix read_matrix_file(const std::string& path);
/// {"gram": <matrix>}
SpacePtr read_space_file(const std::string& path, const Tolerances& tol = {});
/// {"basis": <matrix>}
Matrix read_basis_file(const std::string& path);

Json subspace_to_json(const Subspace& s);
Json certificate_to_json(const oracle::Certificate& c);
Json report_to_json(const SolveReport& r);

/// Serialises with two-space indentation, keys in sorted order and
/// floating-point numbers printed with 17 significant digits.
std::string dump(const Json& j);

}  // namespace krein::io
