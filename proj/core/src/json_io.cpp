#include "qfl/json_io.hpp"

#include <stdexcept>

namespace qfl {

std::string rational_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

nlohmann::json to_json(const MPoly& f) { return f.str(); }

nlohmann::json to_json(const QMatrix& m) {
    auto rows = nlohmann::json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(rational_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<mpq_class> row;
        for (const auto& e : r) row.push_back(parse_rational(e.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return QMatrix::from_rows(rows);
}

nlohmann::json to_json(const GkmGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    auto vs = nlohmann::json::array();
    for (const auto& v : g.vertices) vs.push_back(v.one_line());
    j["vertices"] = std::move(vs);
    auto es = nlohmann::json::array();
    for (const auto& e : g.edges)
        es.push_back({{"u", g.vertices[e.u].one_line()}, {"v", g.vertices[e.v].one_line()}, {"label", e.label.str()}});
    j["edges"] = std::move(es);
    return j;
}

nlohmann::json to_json(const NumericInequality& q) {
    auto cs = nlohmann::json::array();
    for (const auto& c : q.coeffs) cs.push_back(rational_string(c));
    return {{"coeffs", cs}, {"rhs", rational_string(q.rhs)}, {"sense", q.sense == Sense::Ge ? ">=" : "<="}};
}

nlohmann::json to_json(const CountTable& t) {
    auto by = nlohmann::json::array();
    for (const auto& c : t.by_k) by.push_back(c.get_str());
    return {{"n", t.n}, {"by_k", by}};
}

nlohmann::json to_json(const SeriesExpansion& s) {
    auto cs = nlohmann::json::array();
    for (const auto& row : s.coeffs) {
        auto r = nlohmann::json::array();
        for (const auto& c : row) r.push_back(c.get_str());
        cs.push_back(std::move(r));
    }
    return {{"order", s.order}, {"coeffs", cs}};
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = r.suite;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["cases"] = r.cases;
    j["failure_count"] = r.failure_count;
    j["passed"] = r.passed();
    auto fs = nlohmann::json::array();
    for (const auto& f : r.failures) fs.push_back({{"case", f.case_id}, {"detail", f.detail}});
    j["failures"] = std::move(fs);
    j["stats"] = r.stats;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    if (j.value("schema_version", 0) != kReportSchemaVersion) throw std::invalid_argument("unsupported report schema");
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.n = j.at("n").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.cases = j.at("cases").get<long>();
    r.failure_count = j.at("failure_count").get<long>();
    for (const auto& f : j.at("failures")) r.failures.push_back({f.at("case"), f.at("detail")});
    r.stats = j.at("stats").get<std::map<std::string, long>>();
    return r;
}

}  // namespace qfl
