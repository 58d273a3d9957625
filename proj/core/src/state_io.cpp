#include "xgd/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace xgd {

namespace {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw ParseError("state document: top level must be an object");
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw ParseError("state document: missing integer field 'dim'");
    }
    const int dim = doc["dim"].get<int>();
    if (dim != 2 && dim != 4 && dim != 8) {
        throw ParseError("state document: 'dim' must be 2, 4 or 8, got " + std::to_string(dim));
    }
    if (!doc.contains("matrix") || !doc["matrix"].is_array() ||
        doc["matrix"].size() != static_cast<size_t>(dim)) {
        throw ParseError("state document: 'matrix' must be an array of " + std::to_string(dim) +
                         " rows");
    }
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = doc["matrix"][i];
        if (!row.is_array() || row.size() != static_cast<size_t>(dim)) {
            throw ParseError("state document: row " + std::to_string(i) + " must hold " +
                             std::to_string(dim) + " entries");
        }
        for (int j = 0; j < dim; ++j) {
            const json& cell = row[j];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
                throw ParseError("state document: entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") must be a [re, im] pair");
            }
            m(i, j) = complexd(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

}  // namespace

DensityMatrix parse_state(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("state document: ") + e.what());
    }
    return DensityMatrix::validated(matrix_from_json(doc));
}

DensityMatrix load_state(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("load_state: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

std::string format_state(const ComplexMatrix& m, const std::string& label) {
    json doc;
    doc["dim"] = m.dim();
    if (!label.empty()) doc["label"] = label;
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void save_state(const std::string& path, const ComplexMatrix& m, const std::string& label) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("save_state: cannot open '" + path + "' for writing");
    }
    out << format_state(m, label);
    if (!out) {
        throw ParseError("save_state: failed writing '" + path + "'");
    }
}

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

}  // namespace xgd
