#include "pathtrans/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace pathtrans {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

std::string witness_json(const std::vector<double>& w) {
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += format_double(w[i]);
  }
  return out + "]";
}

}  // namespace

std::string to_json(const LawCheck& check) {
  std::ostringstream os;
  os << "{\"law\":\"" << json_escape(check.law) << "\""
     << ",\"path\":\"" << json_escape(check.path) << "\""
     << ",\"witness\":" << witness_json(check.witness)
     << ",\"residual\":" << format_double(check.residual)
     << ",\"pass\":" << (check.pass ? "true" : "false");
  if (check.informational) os << ",\"informational\":true";
  os << "}";
  return os.str();
}

std::string to_json(const LawReport& report) {
  std::ostringstream os;
  os << "{\"suite\":\"" << json_escape(report.suite) << "\""
     << ",\"tol\":" << format_double(report.tol)
     << ",\"pass\":" << (report.passed() ? "true" : "false")
     << ",\"max_residual\":" << format_double(report.max_residual())
     << ",\"checks\":[";
  for (size_t i = 0; i < report.checks.size(); ++i) {
    if (i) os << ",";
    os << "\n  " << to_json(report.checks[i]);
  }
  os << "\n]}";
  return os.str();
}

std::string to_json(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed();
  os << "{\"schema_version\":1,\"kind\":\"law-reports\",\"pass\":"
     << (all_pass ? "true" : "false") << ",\"reports\":[";
  for (size_t i = 0; i < reports.size(); ++i) {
    if (i) os << ",";
    os << "\n" << to_json(reports[i]);
  }
  os << "\n]}\n";
  return os.str();
}

std::string to_json(const ConvergenceResult& result) {
  std::ostringstream os;
  os << "{\"entry\":\"" << json_escape(result.entry) << "\""
     << ",\"path\":\"" << json_escape(result.path) << "\""
     << ",\"order\":" << format_double(result.slope)
     << ",\"exact\":" << (result.exact ? "true" : "false")
     << ",\"pass\":" << (result.pass ? "true" : "false") << ",\"rows\":[";
  for (size_t i = 0; i < result.rows.size(); ++i) {
    if (i) os << ",";
    os << "{\"steps\":" << result.rows[i].steps
       << ",\"residual\":" << format_double(result.rows[i].residual) << "}";
  }
  os << "]}";
  return os.str();
}

std::string to_json(const std::vector<ConvergenceResult>& results) {
  std::ostringstream os;
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;
  os << "{\"schema_version\":1,\"kind\":\"convergence\",\"pass\":"
     << (all_pass ? "true" : "false") << ",\"entries\":[";
  for (size_t i = 0; i < results.size(); ++i) {
    if (i) os << ",";
    os << "\n" << to_json(results[i]);
  }
  os << "\n]}\n";
  return os.str();
}

std::string to_csv(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  os << "law,path,s,t,residual,pass\n";
  for (const auto& report : reports) {
    for (const auto& c : report.checks) {
      os << c.law << "," << c.path << "," << format_double(c.witness_s()) << ","
         << format_double(c.witness_t()) << "," << format_double(c.residual)
         << "," << (c.pass ? "true" : "false") << "\n";
    }
  }
  return os.str();
}

std::string to_csv(const std::vector<ConvergenceResult>& results) {
  std::ostringstream os;
  os << "law,path,s,t,residual,pass\n";
  for (const auto& r : results) {
    for (const auto& row : r.rows) {
      os << "convergence," << r.entry << "/" << r.path << "," << row.steps
         << ",0," << format_double(row.residual) << ","
         << (r.pass ? "true" : "false") << "\n";
    }
    os << "convergence-order," << r.entry << "/" << r.path << ",0,0,"
       << format_double(r.slope) << "," << (r.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string matrix_to_json(const Eigen::MatrixXcd& m, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "\n" << pad << " [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << "[" << format_double(m(i, j).real()) << ","
         << format_double(m(i, j).imag()) << "]";
    }
    os << "]";
  }
  os << "\n" << pad << "]";
  return os.str();
}

}  // namespace pathtrans
