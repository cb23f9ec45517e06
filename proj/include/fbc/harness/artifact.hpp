#pragma once

// Tabular output: a header row plus string cells, serialised as CSV.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

namespace fbc {

/// Malformed experiment or command-line configuration; names the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// File-system failure, with the path in the message.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TableArtifact {
    std::string id;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) {
        if (row.size() != headers.size()) {
            throw std::logic_error(id + ": row has " + std::to_string(row.size()) + " cells, expected " +
                                   std::to_string(headers.size()));
        }
        rows.push_back(std::move(row));
    }

    [[nodiscard]] std::size_t column(std::string_view name) const {
        for (std::size_t i = 0; i < headers.size(); ++i)
            if (headers[i] == name) return i;
        throw std::out_of_range(id + ": no column '" + std::string(name) + "'");
    }

    friend bool operator==(const TableArtifact&, const TableArtifact&) = default;
};

namespace numfmt {

/// Shortest decimal string that parses back to the same double.
[[nodiscard]] inline std::string shortest(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

[[nodiscard]] inline std::string fixed(double v, int decimals) {
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
    return buf.data();
}

/// Two significant figures with an unpadded exponent, e.g. 2.8e+2.
[[nodiscard]] inline std::string sci2(double v) {
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.1e", v);
    std::string s = buf.data();
    const auto e = s.find('e');
    if (e == std::string::npos) return s;
    std::string mant = s.substr(0, e);
    const char sign = s[e + 1];
    std::string digits = s.substr(e + 2);
    while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
    return mant + "e" + sign + digits;
}

[[nodiscard]] inline double parse_double(std::string_view s) {
    if (s == "nan" || s == "NaN") return std::nan("");
    if (s == "inf" || s == "Inf") return HUGE_VAL;
    if (s == "-inf" || s == "-Inf") return -HUGE_VAL;
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace numfmt

namespace csv {

[[nodiscard]] inline std::string quote(const std::string& cell) {
    if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

[[nodiscard]] inline std::string to_string(const TableArtifact& a) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += quote(cells[i]);
        }
        out += '\n';
    };
    line(a.headers);
    for (const auto& r : a.rows) line(r);
    return out;
}

/// Inverse of to_string.
[[nodiscard]] inline TableArtifact parse(std::string_view text, std::string id = {}) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string cell;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            record.push_back(std::move(cell));
            cell.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            record.push_back(std::move(cell));
            cell.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            cell += c;
            any = true;
        }
    }
    if (quoted) throw std::invalid_argument("csv: unterminated quoted field");
    if (any) {
        record.push_back(std::move(cell));
        records.push_back(std::move(record));
    }
    if (records.empty()) throw std::invalid_argument("csv: missing header row");

    TableArtifact a;
    a.id = std::move(id);
    a.headers = std::move(records.front());
    for (std::size_t i = 1; i < records.size(); ++i) a.add_row(std::move(records[i]));
    return a;
}

}  // namespace csv

inline void write_csv(const TableArtifact& artifact, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << csv::to_string(artifact);
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

[[nodiscard]] inline TableArtifact read_csv(const std::string& path, std::string id = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return csv::parse(ss.str(), std::move(id));
}

}  // namespace fbc
