#include "report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include "json.hpp"
#include <ostream>
#include <sstream>

#include "twosq/errors.hpp"

namespace twosq::cli {

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "md") return Format::md;
    if (s == "json") return Format::json;
    throw ArgumentError("unknown format '" + s + "' (csv, md, json)");
}

std::string fixed(double v, int digits) {
    if (!std::isfinite(v)) return general(v);
    double scale = std::pow(10.0, digits);
    double r = std::round(v * scale) / scale;  // std::round is half away from zero
    if (r == 0) r = 0;                         // no "-0.000"
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << r;
    return os.str();
}

std::string integer(double v) { return fixed(v, 0); }

std::string general(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json cell(const std::string& s) {
    double v;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (!s.empty() && res.ec == std::errc() && res.ptr == s.data() + s.size()) return v;
    return s;
}

}  // namespace

void render(const Table& t, Format f, std::ostream& out) {
    switch (f) {
    case Format::csv:
        if (!t.title.empty()) out << "# " << t.title << "\r\n";
        for (auto& [k, v] : t.meta) out << "# " << k << ": " << v << "\r\n";
        for (auto& n : t.notes) out << "# note: " << n << "\r\n";
        for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_escape(t.columns[i]);
        out << "\r\n";
        for (auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
            out << "\r\n";
        }
        break;
    case Format::md:
        if (!t.title.empty()) out << "### " << t.title << "\n\n";
        for (auto& [k, v] : t.meta) out << "- " << k << ": `" << v << "`\n";
        if (!t.meta.empty()) out << "\n";
        out << "|";
        for (auto& c : t.columns) out << " " << c << " |";
        out << "\n|";
        for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
        out << "\n";
        for (auto& row : t.rows) {
            out << "|";
            for (auto& c : row) out << " " << c << " |";
            out << "\n";
        }
        for (auto& n : t.notes) out << "\n> " << n << "\n";
        break;
    case Format::json: {
        nlohmann::ordered_json j;
        j["title"] = t.title;
        j["metadata"] = nlohmann::ordered_json::object();
        for (auto& [k, v] : t.meta) j["metadata"][k] = v;
        j["columns"] = t.columns;
        j["rows"] = nlohmann::ordered_json::array();
        for (auto& row : t.rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) r[t.columns[i]] = cell(row[i]);
            j["rows"].push_back(r);
        }
        j["notes"] = t.notes;
        out << j.dump(2) << "\n";
        break;
    }
    }
}

}  // namespace twosq::cli
