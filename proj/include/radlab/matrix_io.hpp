#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "radlab/complex_matrix.hpp"
#include "radlab/errors.hpp"

namespace radlab {

// Matrix file format: {"dim": n, "entries": [[[re,im], ... n], ... n]}
// entries row-major, re/im decimal doubles.

inline nlohmann::json matrix_to_json(const ComplexMatrix& a) {
    nlohmann::json entries = nlohmann::json::array();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back({a(i, j).real(), a(i, j).imag()});
        entries.push_back(std::move(row));
    }
    return {{"dim", n}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix JSON must be an object with \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw ParseError("\"dim\" must be a positive integer");
    const std::size_t n = j["dim"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n)
        throw ParseError("\"entries\" must be an array of dim rows");
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("each row must hold dim entries");
        for (std::size_t j2 = 0; j2 < n; ++j2) {
            const auto& e = row[j2];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError("each entry must be a [re, im] pair of numbers");
            a(i, j2) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    if (!a.all_finite()) throw ParseError("matrix entries must be finite");
    return a;
}

inline ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

inline void save_matrix(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write matrix file: " + path);
    out << matrix_to_json(a).dump(2) << "\n";
}

} // namespace radlab
