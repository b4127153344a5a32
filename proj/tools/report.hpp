#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace twosq::cli {

enum class Format { csv, md, json };
Format parse_format(const std::string& s);

struct Table {
    std::string title;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;

    void add_meta(std::string k, std::string v) { meta.emplace_back(std::move(k), std::move(v)); }
};

void render(const Table& t, Format f, std::ostream& out);

// display helpers; rounding is half away from zero
std::string fixed(double v, int digits);
std::string integer(double v);
std::string general(double v);  // shortest round-trip form

}  // namespace twosq::cli
