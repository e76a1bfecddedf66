#pragma once

#include <qtcat/alternant.hpp>
#include <qtcat/basis.hpp>
#include <qtcat/dyck.hpp>
#include <qtcat/operators.hpp>
#include <qtcat/partition.hpp>
#include <qtcat/tableau.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qtcat {

// Machine format. Key order is fixed (ordered_json) and fractions are
// always "numerator/denominator" strings so identical invocations
// serialize byte-identically.
using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const DyckSequence& g) { return Json(g.values()); }

inline Json to_json(const BivariatePolynomial& c) {
    Json arr = Json::array();
    for (const auto& [key, coeff] : c.coefficients()) {
        Json entry;
        entry["q"] = key.first;
        entry["t"] = key.second;
        entry["coeff"] = coeff.str();
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline Json to_json(const LatticeDiagram& L) {
    Json arr = Json::array();
    for (const Cell& c : L.cells) arr.push_back(Json::array({c.x, c.y}));
    return arr;
}

inline Json to_json(const Alternant& f) {
    Json arr = Json::array();
    // leading term first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        Json entry;
        entry["diagram"] = to_json(it->first);
        entry["coeff"] = fraction_string(it->second);
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline Json to_json(const ColumnSpec& t) { return Json(t.decreasing()); }

inline Json to_json(const Tableau& t) {
    Json obj;
    Json rows = Json::array();
    for (const auto& row : t.rows()) rows.push_back(Json(row));
    obj["rows"] = std::move(rows);  // bottom row first
    return obj;
}

inline Tableau tableau_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("tableau JSON must be {\"rows\": [[...], ...]}");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["rows"]) rows.push_back(row.get<std::vector<int>>());
    return Tableau(std::move(rows));
}

inline Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline Json basis_report(int n, int k, int l, const std::vector<BasisElement>& elements,
                         const Int& dim) {
    Json report;
    report["n"] = n;
    report["k"] = k;
    report["l"] = l;
    report["dim"] = dim.str();
    Json arr = Json::array();
    for (const BasisElement& e : elements) {
        Json entry;
        entry["lambda"] = to_json(e.lambda);
        entry["tableau"] = to_json(e.tableau);
        entry["leading_diagram"] = to_json(e.leading);
        entry["term_count"] = e.alternant.term_count();
        arr.push_back(std::move(entry));
    }
    report["elements"] = std::move(arr);
    return report;
}

}  // namespace qtcat
