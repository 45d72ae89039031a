#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "gbound/report.hpp"

namespace gbound {

namespace {

std::string published_text(const ClaimRow& r)
{
    return r.published_digits == 0 ? fmt::format("{:.0f}", r.paper_value) : fmt::format("{:.{}f}", r.paper_value, r.published_digits);
}

nlohmann::json enclosure(const std::optional<Box>& b, bool x)
{
    if (!b) {
        return nullptr;
    }
    const Interval& u = x ? b->x : b->y;
    return nlohmann::json::array({u.lo(), u.hi()});
}

std::string csv_mid(const std::optional<Box>& b, bool x)
{
    if (!b) {
        return "";
    }
    return fmt::format("{:.17g}", (x ? b->x : b->y).mid());
}

void emit_table(const std::vector<ClaimRow>& rows, std::ostream& out)
{
    out << fmt::format("{:<19} {:>9}  {:<37} {:<27} {:<11} {:<12} {:>10}\n", "claim", "published", "computed",
                       "argmax", "kind", "status", "ms");
    for (const ClaimRow& r : rows) {
        const std::string computed = fmt::format("[{:.9f}, {:.9f}]", r.computed.lo(), r.computed.hi());
        const std::string argmax =
            r.argmax ? fmt::format("({:.6f}, {:.6f})", r.argmax->x.mid(), r.argmax->y.mid()) : std::string("-");
        out << fmt::format("{:<19} {:>9}  {:<37} {:<27} {:<11} {:<12} {:>10.1f}\n", r.claim_id, published_text(r),
                           computed, argmax, r.kind.empty() ? "-" : r.kind, to_string(r.status), r.runtime_ms);
        for (const std::string& n : r.notes) {
            out << "    " << n << '\n';
        }
    }
}

void emit_json(const std::vector<ClaimRow>& rows, std::ostream& out)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const ClaimRow& r : rows) {
        nlohmann::json j;
        j["claim_id"] = r.claim_id;
        j["paper_value"] = r.paper_value;
        j["lo"] = r.computed.lo();
        j["hi"] = r.computed.hi();
        j["argmax_x"] = enclosure(r.argmax, true);
        j["argmax_y"] = enclosure(r.argmax, false);
        j["kind"] = r.kind;
        j["status"] = std::string(to_string(r.status));
        j["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void emit_csv(const std::vector<ClaimRow>& rows, std::ostream& out)
{
    out << kCsvHeader << '\n';
    for (const ClaimRow& r : rows) {
        out << fmt::format("{},{},{:.17g},{:.17g},{},{},{},{},{:.3f}\n", r.claim_id, published_text(r), r.computed.lo(),
                           r.computed.hi(), csv_mid(r.argmax, true), csv_mid(r.argmax, false), r.kind,
                           to_string(r.status), r.runtime_ms);
    }
}

} // namespace

Format parse_format(std::string_view text)
{
    if (text == "table") {
        return Format::Table;
    }
    if (text == "json") {
        return Format::Json;
    }
    if (text == "csv") {
        return Format::Csv;
    }
    throw std::invalid_argument("unknown format: " + std::string(text));
}

void emit(const std::vector<ClaimRow>& rows, Format format, std::ostream& out)
{
    switch (format) {
    case Format::Table:
        emit_table(rows, out);
        break;
    case Format::Json:
        emit_json(rows, out);
        break;
    case Format::Csv:
        emit_csv(rows, out);
        break;
    }
    if (!out) {
        throw std::runtime_error("report output failed");
    }
}

void emit(const std::vector<ClaimRow>& rows, Format format, const std::string& path)
{
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    emit(rows, format, f);
    f.flush();
    if (!f) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

} // namespace gbound
