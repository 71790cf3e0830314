#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "qfl/counts.hpp"
#include "qfl/gkm.hpp"
#include "qfl/mpoly.hpp"
#include "qfl/polytope.hpp"
#include "qfl/qmatrix.hpp"
#include "qfl/series.hpp"
#include "qfl/suites.hpp"

namespace qfl {

constexpr int kReportSchemaVersion = 1;

// "p/q" with q >= 1
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

nlohmann::json to_json(const MPoly& f);
nlohmann::json to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GkmGraph& g);
nlohmann::json to_json(const NumericInequality& q);
nlohmann::json to_json(const CountTable& t);
nlohmann::json to_json(const SeriesExpansion& s);
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

}  // namespace qfl
