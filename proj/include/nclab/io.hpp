#ifndef NCLAB_IO_HPP
#define NCLAB_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "nclab/fock.hpp"
#include "nclab/gaussian.hpp"
#include "nclab/optimize.hpp"
#include "nclab/verdict.hpp"

namespace nclab {

// Covariance matrices serialize as row-major 4x4 arrays with explicit basis
// and vacuum tags; Fock states as interleaved (re, im) amplitude arrays.

nlohmann::json covariance_to_json(const TwoModeCovariance& v);
TwoModeCovariance covariance_from_json(const nlohmann::json& j);

nlohmann::json fock_state_to_json(const TwoModeFockState& s);
TwoModeFockState fock_state_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const CriterionVerdict& v);
nlohmann::json optimization_result_to_json(const OptimizationResult& r);

// Criterion sweep rows: criterion,parameters,lhs,rhs,margin,violated with
// parameters rendered as a semicolon-separated k=v list.
std::string verdicts_to_csv(const std::vector<CriterionVerdict>& verdicts);

// Parsed state file for `check`: exactly one of the two members is set.
struct StateFile {
    bool is_gaussian = false;
    TwoModeCovariance covariance{Eigen::Matrix4d::Identity() * 0.5};
    TwoModeFockState fock;
};
StateFile read_state_file(const std::string& path);

// Numeric table with one header row; CSV cells carry 17 significant digits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string table_to_csv(const Table& t);
nlohmann::json table_to_json(const Table& t);
void write_text_file(const std::string& path, const std::string& content);

} // namespace nclab

#endif
