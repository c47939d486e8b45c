#include "dynrel/report.hpp"

#include <charconv>

#include "json.hpp"

namespace dynrel {

namespace {

std::string number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

const char* kind_name(ModelKind k) { return k == ModelKind::Dft ? "dft" : "drbd"; }

}  // namespace

ReportRow row_from(const AnalysisResult& r) {
    ReportRow row;
    row.model = r.model;
    row.kind = kind_name(r.kind);
    row.method = r.method;
    row.time = r.time;
    row.value = r.value;
    row.error_bound = r.error_bound;
    row.term_count = r.term_count;
    return row;
}

ReportRow row_from(const Model& m, double t, const Estimate& e, const std::string& method) {
    ReportRow row;
    row.model = m.name();
    row.kind = kind_name(m.kind());
    row.method = method;
    row.time = t;
    row.value = e.p_hat;
    row.std_err = e.std_err;
    row.seed = e.seed;
    row.n = e.n;
    return row;
}

std::string emit_report(std::span<const ReportRow> rows, ReportFormat format) {
    if (rows.empty()) throw DomainError("emit_report: no results to report");

    if (format == ReportFormat::Json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const ReportRow& row : rows) {
            nlohmann::ordered_json obj;
            obj["model"] = row.model;
            obj["kind"] = row.kind;
            obj["method"] = row.method;
            obj["time"] = row.time;
            obj["value"] = row.value;
            if (row.error_bound) obj["errorBound"] = *row.error_bound;
            if (row.std_err) obj["stdErr"] = *row.std_err;
            if (row.term_count) obj["termCount"] = *row.term_count;
            if (row.seed) obj["seed"] = *row.seed;
            if (row.n) obj["n"] = *row.n;
            out.push_back(std::move(obj));
        }
        return out.dump(2) + "\n";
    }

    std::string out = "model,kind,method,time,value,errorBound,stdErr,termCount,seed,n\n";
    for (const ReportRow& row : rows) {
        out += row.model + "," + row.kind + "," + row.method + "," + number(row.time) + "," +
               number(row.value) + ",";
        out += (row.error_bound ? number(*row.error_bound) : "") + std::string(",");
        out += (row.std_err ? number(*row.std_err) : "") + std::string(",");
        out += (row.term_count ? std::to_string(*row.term_count) : "") + std::string(",");
        out += (row.seed ? std::to_string(*row.seed) : "") + std::string(",");
        out += (row.n ? std::to_string(*row.n) : "") + std::string("\n");
    }
    return out;
}

}  // namespace dynrel
