#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "krein/error.hpp"
#include "krein/io.hpp"
#include "krein/minmax.hpp"
#include "krein/pinv.hpp"

namespace krein::cli {

namespace {

using io::Json;

struct Loaded {
  SpacePtr space;
  const JobSpec& job;

  Operator op(const std::optional<std::string>& path, const char* flag) const {
    if (!path) throw Error(ErrorCode::ParseError, std::string("missing ") + flag);
    return {space, io::read_matrix_file(*path)};
  }
  Subspace subspace() const {
    if (!job.subspace_path) throw Error(ErrorCode::ParseError, "missing --subspace");
    return Subspace::span(space, io::read_basis_file(*job.subspace_path));
  }
};

struct Outcome {
  Json body;
  bool feasible = true;
};

Json config_echo(const JobSpec& job, const Tolerances& tol) {
  Json inputs = Json::object();
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) inputs[key] = *v;
  };
  put("space", job.space_path);
  put("b", job.b_path);
  put("c", job.c_path);
  put("x", job.x_path);
  put("subspace", job.subspace_path);
  return {{"command", job.command},
          {"seed", job.seed},
          {"trials", job.trials},
          {"kind", job.kind},
          {"inputs", std::move(inputs)},
          {"tolerances", {{"sym", tol.sym}, {"num", tol.num}, {"rank", tol.rank}, {"neutral", tol.neutral}}}};
}

Outcome from_report(const SolveReport& r) { return {io::report_to_json(r), r.feasible}; }

Json projection_json(const Projection& q) {
  const ProjectionResiduals res = check_projection(q);
  return {{"kind", std::string(to_string(q.kind))},
          {"matrix", io::matrix_to_json(q.op.matrix())},
          {"residuals",
           {{"idempotency", res.idempotency},
            {"normality", res.normality},
            {"selfadjointness", res.selfadjointness},
            {"range_gap", res.range_gap}}}};
}

Outcome cmd_adjoint(const Loaded& in) {
  const Operator t = in.op(in.job.b_path, "--b");
  const Operator adj = t.adjoint();
  const auto& space = *in.space;
  const Index n = space.dim();
  double worst = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Vector ei = Vector::Unit(n, i);
      const Vector ej = Vector::Unit(n, j);
      worst = std::max(worst, std::abs(space.krein(t.matrix() * ej, ei) - space.krein(ej, adj.matrix() * ei)));
    }
  }
  const double scale = std::max(1.0, t.norm());
  return {{{"adjoint", io::matrix_to_json(adj.matrix())}, {"identity_residual", worst / scale}}};
}

Outcome cmd_classify(const Loaded& in) {
  const Subspace s = in.subspace();
  const SubspaceClass& cls = s.classification();
  return {{{"class", std::string(to_string(cls.kind))},
           {"regular", cls.regular},
           {"pseudo_regular", cls.pseudo_regular},
           {"dim", s.dim()},
           {"isotropic_dim", cls.isotropic_dim},
           {"positive_dim", cls.positive_dim},
           {"negative_dim", cls.negative_dim},
           {"gram_eigenvalues", io::real_vector_to_json(s.gram_eigenvalues())}}};
}

Outcome cmd_companion(const Loaded& in) {
  const Subspace s = in.subspace();
  return {{{"subspace", io::subspace_to_json(s)}, {"companion", io::subspace_to_json(orthogonal_companion(s))}}};
}

Outcome cmd_decompose(const Loaded& in) {
  const Subspace s = in.subspace();
  const SubspaceSplit parts = decompose_subspace(s);
  const Matrix& g = in.space->gram();
  const Matrix& m = in.space->metric();
  const Matrix& p = parts.plus.basis();
  const Matrix& q = parts.minus.basis();
  const double krein_cross = p.cols() && q.cols() ? (p.adjoint() * g * q).norm() : 0.0;
  const double inner_cross = p.cols() && q.cols() ? (p.adjoint() * m * q).norm() : 0.0;
  return {{{"plus", io::subspace_to_json(parts.plus)},
           {"minus", io::subspace_to_json(parts.minus)},
           {"residuals", {{"krein_cross", krein_cross}, {"inner_cross", inner_cross}}}}};
}

Outcome cmd_project(const Loaded& in) {
  const Subspace s = in.subspace();
  const std::string& kind = in.job.kind;
  if (kind == "normal") return {{{"feasible", true}, {"projection", projection_json(normal_projection(s))}}};
  if (kind != "selfadjoint" && kind != "ando") {
    throw Error(ErrorCode::ParseError, "--kind must be selfadjoint, normal or ando");
  }
  if (!s.classification().regular) {
    return {{{"feasible", false}, {"reason", std::string(to_string(Reason::RangeNotRegular))}}, false};
  }
  const Projection q = selfadjoint_projection(s);
  if (kind == "selfadjoint") return {{{"feasible", true}, {"projection", projection_json(q)}}};
  const AndoSplit split = ando_split(q);
  return {{{"feasible", true},
           {"projection", projection_json(q)},
           {"plus", projection_json(split.plus)},
           {"minus", projection_json(split.minus)}}};
}

SolveOptions options(const JobSpec& job) { return {job.seed, job.trials}; }

Outcome cmd_solve_ils(const Loaded& in) {
  const Operator b = in.op(in.job.b_path, "--b");
  if (!in.job.c_path) return from_report(indefinite_inverse(b));
  return from_report(solve_ims(b, in.op(in.job.c_path, "--c"), options(in.job)));
}

Outcome cmd_solve_imax(const Loaded& in) {
  return from_report(solve_imax(in.op(in.job.b_path, "--b"), in.op(in.job.c_path, "--c"), options(in.job)));
}

Outcome cmd_solve_minmax(const Loaded& in) {
  return from_report(solve_immso(in.op(in.job.b_path, "--b"), in.op(in.job.c_path, "--c"), options(in.job)));
}

Outcome cmd_pinv(const Loaded& in) { return from_report(krein_moore_penrose(in.op(in.job.b_path, "--b"))); }

Outcome cmd_geninv(const Loaded& in) {
  const Operator b = in.op(in.job.b_path, "--b");
  const GeneralizedInverse g = generalized_inverse(b);
  const EqPseudoResiduals r = check_eq_pseudo(b, g.d);
  return {{{"feasible", true},
           {"kind", std::string(to_string(g.kind))},
           {"solution", io::matrix_to_json(g.d.matrix())},
           {"q", projection_json(g.q)},
           {"p", projection_json(g.p)},
           {"residuals",
            {{"inner", r.inner}, {"outer", r.outer}, {"bd_normality", r.bd_normality}, {"db_normality", r.db_normality}}}}};
}

Outcome cmd_min_norm(const Loaded& in) {
  return from_report(solve_min_ims_norm(in.op(in.job.b_path, "--b"), in.op(in.job.c_path, "--c"), options(in.job)));
}

Outcome cmd_verify(const Loaded& in) {
  const Operator x = in.op(in.job.x_path, "--x");
  const Operator b = in.op(in.job.b_path, "--b");
  const Operator c = in.op(in.job.c_path, "--c");
  const double residual = normal_equation_residual(b, c, x);
  const int trials = std::max(1, in.job.trials);
  const oracle::Certificate cert = oracle::certify_min(b, c, x, {trials, in.job.seed, 1e-9});
  const bool verified = residual <= in.space->tolerances().num && cert.verdict;
  return {{{"verified", verified},
           {"normal_eq_residual", residual},
           {"certificate", io::certificate_to_json(cert)}},
          verified};
}

Outcome cmd_oracle(const Loaded& in) {
  const Operator b = in.op(in.job.b_path, "--b");
  if (!in.job.c_path && !in.job.x_path) {
    const oracle::Certificate cert = oracle::is_krein_positive(b);
    return {{{"check", "krein_positive"}, {"certificate", io::certificate_to_json(cert)}}, cert.verdict};
  }
  const Operator c = in.op(in.job.c_path, "--c");
  const Operator x = in.op(in.job.x_path, "--x");
  const oracle::Certificate cert = oracle::certify_min(b, c, x, {std::max(1, in.job.trials), in.job.seed, 1e-9});
  return {{{"check", "certify_min"}, {"certificate", io::certificate_to_json(cert)}}, cert.verdict};
}

const std::map<std::string, std::function<Outcome(const Loaded&)>>& commands() {
  static const std::map<std::string, std::function<Outcome(const Loaded&)>> table = {
      {"adjoint", cmd_adjoint},       {"classify", cmd_classify},         {"companion", cmd_companion},
      {"decompose", cmd_decompose},   {"project", cmd_project},           {"solve-ils", cmd_solve_ils},
      {"solve-imax", cmd_solve_imax}, {"solve-minmax", cmd_solve_minmax}, {"pinv", cmd_pinv},
      {"geninv", cmd_geninv},         {"min-norm", cmd_min_norm},         {"verify", cmd_verify},
      {"oracle", cmd_oracle},
  };
  return table;
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  try {
    const auto it = commands().find(job.command);
    if (it == commands().end()) throw Error(ErrorCode::UnknownCommand, "unknown command '" + job.command + "'");
    if (!job.space_path) throw Error(ErrorCode::ParseError, "missing --space");
    Tolerances tol;
    if (job.tol_rank) tol.rank = *job.tol_rank;
    if (job.tol_num) tol.num = *job.tol_num;
    const Loaded in{io::read_space_file(*job.space_path, tol), job};
    Outcome outcome = it->second(in);
    outcome.body["config_echo"] = config_echo(job, in.space->tolerances());
    result.report = io::dump(outcome.body);
    result.exit_code = outcome.feasible ? 0 : 2;
  } catch (const Error& e) {
    result.exit_code = 1;
    result.diagnostic = e.what();
  }
  return result;
}

}  // namespace krein::cli
