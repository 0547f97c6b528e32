#include "krein/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "krein/error.hpp"

namespace krein::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

Scalar entry(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  parse_error("matrix entries must be numbers or [re, im] pairs");
}

Json number_json(double v) {
  if (v == 0.0) return 0.0;  // drops the sign of negative zero
  return v;
}

void write(std::ostringstream& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write(out, value, depth + 1);
      }
      out << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          write(out, j[i], depth + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write(out, j[i], depth + 1);
      }
      out << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
      out << buf;
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) parse_error("matrix must be an object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    parse_error("matrix needs rows, cols and data");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) parse_error("rows and cols must be integers");
  const auto rows = j["rows"].get<long long>();
  const auto cols = j["cols"].get<long long>();
  if (rows < 0 || cols < 0) parse_error("negative matrix size");
  const Json& data = j["data"];
  if (!data.is_array() || static_cast<long long>(data.size()) != rows) parse_error("data must have `rows` rows");
  Matrix m(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    const Json& row = data[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long long>(row.size()) != cols) parse_error("each row must have `cols` entries");
    for (long long c = 0; c < cols; ++c) m(r, c) = entry(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({number_json(m(r, c).real()), number_json(m(r, c).imag())}));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json real_vector_to_json(const RealVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(number_json(v(i)));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

Matrix read_matrix_file(const std::string& path) { return matrix_from_json(read_json_file(path)); }

SpacePtr read_space_file(const std::string& path, const Tolerances& tol) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("gram")) parse_error(path + ": space file needs a \"gram\" matrix");
  return KreinSpace::make(matrix_from_json(j["gram"]), tol);
}

Matrix read_basis_file(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("basis")) parse_error(path + ": subspace file needs a \"basis\" matrix");
  return matrix_from_json(j["basis"]);
}

Json subspace_to_json(const Subspace& s) {
  const SubspaceClass& cls = s.classification();
  return {{"dim", s.dim()},
          {"basis", matrix_to_json(s.basis())},
          {"class", std::string(to_string(cls.kind))},
          {"regular", cls.regular},
          {"pseudo_regular", cls.pseudo_regular}};
}

Json certificate_to_json(const oracle::Certificate& c) {
  Json out = {{"verdict", c.verdict},
              {"trials", c.trials},
              {"min_eigen_seen", number_json(c.min_eigen_seen)},
              {"max_residual", number_json(c.max_residual)}};
  if (c.witness) out["witness"] = matrix_to_json(*c.witness);
  if (c.competitor) out["competitor"] = matrix_to_json(*c.competitor);
  return out;
}

Json report_to_json(const SolveReport& r) {
  Json out;
  out["feasible"] = r.feasible;
  out["reason"] = std::string(to_string(r.reason));
  Json conditions = Json::object();
  for (const auto& c : r.conditions) conditions[c.name] = c.holds;
  out["conditions"] = std::move(conditions);
  Json residuals = Json::object();
  for (const auto& [name, v] : r.residuals) residuals[name] = number_json(v);
  out["residuals"] = std::move(residuals);
  out["residual_normal_eq"] = number_json(r.residual_normal_eq);
  if (r.manifold) {
    out["solution"] = matrix_to_json(r.manifold->particular.matrix());
    out["perturbation_basis"] = matrix_to_json(r.manifold->perturbation_space.basis());
  }
  if (r.value) {
    out["value"] = matrix_to_json(r.value->matrix());
    out["value_eigenvalues"] = real_vector_to_json(r.value_eigenvalues);
  }
  Json certs = Json::object();
  for (const auto& [name, c] : r.certificates) certs[name] = certificate_to_json(c);
  out["certificates"] = std::move(certs);
  out["seed"] = r.seed;
  return out;
}

std::string dump(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

}  // namespace krein::io
