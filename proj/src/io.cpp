#include "nclab/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace nclab {

using nlohmann::json;

json covariance_to_json(const TwoModeCovariance& v) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(v.matrix()(i, j));
        rows.push_back(row);
    }
    return json{{"type", "gaussian_covariance"},
                {"basis", "x1 p1 x2 p2"},
                {"vacuum", 0.5},
                {"matrix", rows}};
}

TwoModeCovariance covariance_from_json(const json& j) {
    if (j.value("basis", "x1 p1 x2 p2") != "x1 p1 x2 p2")
        throw std::invalid_argument("covariance_from_json: unsupported basis tag");
    if (j.contains("vacuum") && std::abs(j["vacuum"].get<double>() - 0.5) > 1e-12)
        throw std::invalid_argument("covariance_from_json: unsupported vacuum normalization");
    const auto& rows = j.at("matrix");
    if (rows.size() != 4) throw std::invalid_argument("covariance_from_json: need 4 rows");
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i) {
        if (rows[i].size() != 4) throw std::invalid_argument("covariance_from_json: need 4 cols");
        for (int k = 0; k < 4; ++k) m(i, k) = rows[i][k].get<double>();
    }
    return TwoModeCovariance(m);
}

json fock_state_to_json(const TwoModeFockState& s) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < s.amp.size(); ++i) {
        amps.push_back(s.amp(i).real());
        amps.push_back(s.amp(i).imag());
    }
    return json{{"type", "fock_two_mode"}, {"dim", s.dim}, {"modes", 2}, {"amplitudes", amps}};
}

TwoModeFockState fock_state_from_json(const json& j) {
    const int d = j.at("dim").get<int>();
    const auto& amps = j.at("amplitudes");
    if (static_cast<Eigen::Index>(amps.size()) != 2LL * d * d)
        throw std::invalid_argument("fock_state_from_json: amplitude count != 2*dim^2");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d) * d);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) = std::complex<double>(amps[2 * i].get<double>(), amps[2 * i + 1].get<double>());
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > 1e-8)
        throw std::invalid_argument("fock_state_from_json: state not normalized");
    return {v / norm, d};
}

json verdict_to_json(const CriterionVerdict& v) {
    return json{{"criterion", v.label}, {"lhs", v.lhs},           {"rhs", v.rhs},
                {"margin", v.margin},   {"violated", v.violated}, {"parameters", v.parameters}};
}

nlohmann::json optimization_result_to_json(const OptimizationResult& r) {
    return json{{"min_value", r.min_value},
                {"argmin", {r.argmin[0], r.argmin[1], r.argmin[2]}},
                {"evaluations", r.evaluations},
                {"converged", r.converged}};
}

std::string verdicts_to_csv(const std::vector<CriterionVerdict>& verdicts) {
    std::string out = "criterion,parameters,lhs,rhs,margin,violated\n";
    char buf[160];
    for (const auto& v : verdicts) {
        out += v.label;
        out += ',';
        bool first = true;
        for (const auto& [key, value] : v.parameters) {
            if (!first) out += ';';
            first = false;
            std::snprintf(buf, sizeof(buf), "%s=%.17g", key.c_str(), value);
            out += buf;
        }
        std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.17g,%d\n", v.lhs, v.rhs, v.margin,
                      v.violated ? 1 : 0);
        out += buf;
    }
    return out;
}

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("state file is not valid JSON: " + std::string(e.what()));
    }
    const std::string type = j.value("type", "");
    StateFile out;
    if (type == "gaussian_covariance") {
        out.is_gaussian = true;
        out.covariance = covariance_from_json(j);
        out.covariance.assert_physical(1e-8);
    } else if (type == "fock_two_mode") {
        out.is_gaussian = false;
        out.fock = fock_state_from_json(j);
    } else {
        throw std::invalid_argument("state file: unknown type '" + type + "'");
    }
    return out;
}

std::string table_to_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        out += t.columns[c];
        out += (c + 1 < t.columns.size()) ? ',' : '\n';
    }
    char buf[64];
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
            out += buf;
            out += (c + 1 < row.size()) ? ',' : '\n';
        }
    }
    return out;
}

json table_to_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj;
        for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c)
            obj[t.columns[c]] = row[c];
        rows.push_back(obj);
    }
    return rows;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace nclab
