#pragma once

#include <string>
#include <vector>

#include "pathtrans/convergence.hpp"
#include "pathtrans/laws.hpp"

namespace pathtrans {

/// Deterministic serialization: fixed field order, floats at 17 significant
/// digits, so identical inputs produce byte-identical reports.
std::string format_double(double v);
std::string json_escape(const std::string& s);

std::string to_json(const LawCheck& check);
std::string to_json(const LawReport& report);
std::string to_json(const std::vector<LawReport>& reports);
std::string to_json(const ConvergenceResult& result);
std::string to_json(const std::vector<ConvergenceResult>& results);

/// CSV with header law,path,s,t,residual,pass; one row per check.
std::string to_csv(const std::vector<LawReport>& reports);
std::string to_csv(const std::vector<ConvergenceResult>& results);

/// A transport matrix as a JSON document (entries as [re, im] pairs).
std::string matrix_to_json(const Eigen::MatrixXcd& m, int indent = 0);

}  // namespace pathtrans
