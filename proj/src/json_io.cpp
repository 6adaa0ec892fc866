#include "pathtrans/json_io.hpp"

#include "pathtrans/errors.hpp"

namespace pathtrans {

namespace {

using nlohmann::json;

std::complex<double> scalar_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError("matrix entries must be numbers or [re, im] pairs");
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ConfigError(std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

std::string require_kind(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("descriptor needs a string field 'kind'");
  }
  return j.at("kind").get<std::string>();
}

}  // namespace

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ConfigError("matrix must be an array of rows");
  }
  const auto rows = j.size();
  const auto cols = j[0].size();
  Eigen::MatrixXcd m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ConfigError("matrix rows must have equal lengths");
    }
    for (size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          scalar_from_json(j[r][c]);
    }
  }
  return m;
}

Eigen::VectorXd vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a numeric array");
  Eigen::VectorXd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ConfigError("expected a numeric array");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("interval must be [a, b]");
  }
  try {
    return Interval(j[0].get<double>(), j[1].get<double>());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

Path path_from_json(const json& j) {
  const std::string kind = require_kind(j);
  try {
    if (kind == "line") {
      return line_path(vector_from_json(j.at("from")),
                       vector_from_json(j.at("to")),
                       j.contains("domain") ? interval_from_json(j.at("domain"))
                                            : Interval{0.0, 1.0});
    }
    if (kind == "circle") {
      const Eigen::VectorXd c = vector_from_json(j.at("center"));
      if (c.size() != 2) throw ConfigError("circle center must be planar");
      return circle_path(Eigen::Vector2d(c[0], c[1]),
                         require_number(j, "radius"),
                         j.contains("domain") ? interval_from_json(j.at("domain"))
                                              : Interval{0.0, 2.0 * EIGEN_PI});
    }
    if (kind == "latitude") {
      return latitude_path(require_number(j, "theta0"),
                           j.contains("domain")
                               ? interval_from_json(j.at("domain"))
                               : Interval{0.0, 2.0 * EIGEN_PI});
    }
    if (kind == "longitude") {
      return longitude_path(require_number(j, "phi0"),
                            interval_from_json(j.at("domain")));
    }
    if (kind == "polyline") {
      if (!j.contains("vertices") || !j.at("vertices").is_array()) {
        throw ConfigError("polyline needs a 'vertices' array");
      }
      std::vector<Eigen::VectorXd> verts;
      for (const auto& v : j.at("vertices")) verts.push_back(vector_from_json(v));
      return polyline_path(verts, j.contains("domain")
                                      ? interval_from_json(j.at("domain"))
                                      : Interval{0.0, 1.0});
    }
    if (kind == "point") {
      return point_path(vector_from_json(j.at("x")),
                        j.contains("a") ? require_number(j, "a") : 0.0);
    }
    if (kind == "samples") {
      if (j.contains("interp") && j.at("interp") != "cubic") {
        throw ConfigError("only cubic interpolation is supported");
      }
      if (!j.contains("points") || !j.at("points").is_array()) {
        throw ConfigError("samples need a 'points' array of [s, x...] rows");
      }
      std::vector<double> params;
      std::vector<Eigen::VectorXd> points;
      for (const auto& row : j.at("points")) {
        const Eigen::VectorXd r = vector_from_json(row);
        if (r.size() < 2) throw ConfigError("sample rows are [s, x...]");
        params.push_back(r[0]);
        points.push_back(r.tail(r.size() - 1));
      }
      return sampled_path(params, points);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed path descriptor: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown path kind '" + kind + "'");
}

Reparam reparam_from_json(const json& j) {
  const std::string kind = require_kind(j);
  try {
    if (kind == "identity") return identity_reparam(interval_from_json(j.at("interval")));
    if (kind == "reverse") return canonical_reverse(interval_from_json(j.at("interval")));
    if (kind == "affine") {
      const auto orientation =
          j.value("orientation", std::string("preserving")) == "reversing"
              ? Orientation::Reversing
              : Orientation::Preserving;
      return affine_reparam(interval_from_json(j.at("source")),
                            interval_from_json(j.at("target")), orientation);
    }
    if (kind == "cubic") {
      return cubic_reparam(interval_from_json(j.at("source")),
                           interval_from_json(j.at("target")),
                           j.value("kappa", 0.25));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed reparameterization: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown reparameterization kind '" + kind + "'");
}

ConnectionField connection_from_json(const json& j) {
  const std::string kind = require_kind(j);
  try {
    if (kind == "constant") {
      // coefficients given directly along the path parameter
      return constant_field(matrix_from_json(j.at("matrix")));
    }
    if (kind == "u1_uniform") return u1_uniform(require_number(j, "B")).connection;
    if (kind == "sphere_levi_civita") {
      return sphere_levi_civita(require_number(j, "theta0")).connection;
    }
    if (kind == "su2_constant") {
      const Eigen::VectorXd a = vector_from_json(j.at("a"));
      if (a.size() != 3) throw ConfigError("su2_constant needs 3 coefficients");
      return su2_constant(Eigen::Vector3d(a[0], a[1], a[2])).connection;
    }
    if (kind == "flat") return flat().connection;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed connection descriptor: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown connection kind '" + kind + "'");
}

GaugePotential potential_from_json(const json& j) {
  const std::string kind = require_kind(j);
  try {
    if (kind == "u1_uniform") return *u1_uniform(require_number(j, "B")).potential;
    if (kind == "su2_constant") {
      const Eigen::VectorXd a = vector_from_json(j.at("a"));
      if (a.size() != 3) throw ConfigError("su2_constant needs 3 coefficients");
      return *su2_constant(Eigen::Vector3d(a[0], a[1], a[2])).potential;
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed potential descriptor: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown potential kind '" + kind + "'");
}

IntegratorConfig integrator_from_json(const json& j) {
  IntegratorConfig cfg;
  if (j.contains("steps")) {
    if (!j.at("steps").is_number_integer() || j.at("steps").get<int>() < 1) {
      throw ConfigError("steps must be a positive integer");
    }
    cfg.steps = j.at("steps").get<int>();
  }
  if (j.contains("scheme")) {
    const std::string s = j.at("scheme").get<std::string>();
    if (s == "midpoint") {
      cfg.scheme = Scheme::MidpointMagnus2;
    } else if (s == "left-endpoint") {
      cfg.scheme = Scheme::ProductOfExponentials;
    } else {
      throw ConfigError("scheme must be 'midpoint' or 'left-endpoint'");
    }
  }
  cfg.reunitarize = j.value("reunitarize", false);
  return cfg;
}

CatalogEntry catalog_entry_from_json(const std::string& name,
                                     const json& params) {
  try {
    if (name == "flat") return flat();
    if (name == "constant_gamma") {
      if (params.contains("matrix")) {
        return constant_gamma(matrix_from_json(params.at("matrix")));
      }
      Eigen::MatrixXcd g0(2, 2);
      g0 << 0.3, 1.0, 0.0, -0.2;
      return constant_gamma(g0);
    }
    if (name == "sphere_levi_civita") {
      return sphere_levi_civita(params.value("theta0", EIGEN_PI / 3.0));
    }
    if (name == "u1_uniform") return u1_uniform(params.value("B", EIGEN_PI));
    if (name == "su2_constant") {
      Eigen::Vector3d a(1.2, 0.9, 0.5);
      if (params.contains("a")) {
        const Eigen::VectorXd v = vector_from_json(params.at("a"));
        if (v.size() != 3) throw ConfigError("su2_constant needs 3 coefficients");
        a = Eigen::Vector3d(v[0], v[1], v[2]);
      }
      return su2_constant(a);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed catalog params: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown catalog entry '" + name + "'");
}

}  // namespace pathtrans
