#include "invbid/data/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "invbid/common.hpp"

namespace invbid::data {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

double parse_double(const std::string& s, const char* what, std::size_t line_no) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last) {
        std::ostringstream os;
        os << "malformed " << what << " '" << s << "' on line " << line_no;
        throw DataError(os.str());
    }
    return v;
}

// days since 1970-01-01 for a civil date (proleptic Gregorian)
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

} // namespace

std::int64_t parse_timestamp(const std::string& text) {
    // ISO 8601 "YYYY-MM-DD[T ]HH:MM[:SS]" or raw epoch seconds
    if (text.size() >= 16 && text[4] == '-' && text[7] == '-') {
        int y = 0;
        unsigned mo = 0, da = 0, h = 0, mi = 0, se = 0;
        char sep = text[10];
        if (sep != 'T' && sep != ' ') throw DataError("malformed timestamp: " + text);
        auto num = [&](std::size_t pos, std::size_t len) {
            unsigned v = 0;
            for (std::size_t i = pos; i < pos + len; ++i) {
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    throw DataError("malformed timestamp: " + text);
                v = v * 10 + static_cast<unsigned>(text[i] - '0');
            }
            return v;
        };
        y = static_cast<int>(num(0, 4));
        mo = num(5, 2);
        da = num(8, 2);
        h = num(11, 2);
        mi = num(14, 2);
        if (text.size() >= 19 && text[16] == ':') se = num(17, 2);
        if (mo < 1 || mo > 12 || da < 1 || da > 31 || h > 23 || mi > 59 || se > 60)
            throw DataError("malformed timestamp: " + text);
        return days_from_civil(y, mo, da) * 86400 + h * 3600 + mi * 60 + se;
    }
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw DataError("malformed timestamp: " + text);
    return v;
}

std::string format_timestamp(std::int64_t t) {
    std::int64_t days = t / 86400;
    std::int64_t sod = t % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    int y;
    unsigned mo, da;
    civil_from_days(days, y, mo, da);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lld", y, mo, da,
                  static_cast<long long>(sod / 3600), static_cast<long long>((sod / 60) % 60),
                  static_cast<long long>(sod % 60));
    return buf;
}

DataFrame load_dataset(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty dataset: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_line(line);

    auto find_col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : static_cast<int>(it - header.begin());
    };
    const int c_ts = find_col(schema.timestamp);
    const int c_price = find_col(schema.price);
    const int c_load = find_col(schema.load);
    const int c_gap = find_col(schema.gap); // optional
    if (c_ts < 0) throw DataError("missing column: " + schema.timestamp);
    if (c_price < 0) throw DataError("missing column: " + schema.price);
    if (c_load < 0) throw DataError("missing column: " + schema.load);

    DataFrame frame;
    std::vector<int> feat_cols;
    if (schema.features.empty()) {
        for (int i = 0; i < static_cast<int>(header.size()); ++i) {
            if (i == c_ts || i == c_price || i == c_load || i == c_gap) continue;
            feat_cols.push_back(i);
            frame.feature_names.push_back(header[i]);
        }
    } else {
        for (const std::string& name : schema.features) {
            const int c = find_col(name);
            if (c < 0) throw DataError("missing column: " + name);
            feat_cols.push_back(c);
            frame.feature_names.push_back(name);
        }
    }
    frame.features.resize(feat_cols.size());

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            std::ostringstream os;
            os << "line " << line_no << " has " << cells.size() << " cells, expected "
               << header.size();
            throw DataError(os.str());
        }
        frame.timestamps.push_back(parse_timestamp(cells[c_ts]));
        frame.price.push_back(parse_double(cells[c_price], "price", line_no));
        const std::string& load_cell = cells[c_load];
        bool missing = load_cell.empty();
        frame.load.push_back(missing ? std::numeric_limits<double>::quiet_NaN()
                                     : parse_double(load_cell, "load", line_no));
        std::uint8_t g = 1;
        if (c_gap >= 0 && !cells[c_gap].empty())
            g = parse_double(cells[c_gap], "gap", line_no) != 0.0 ? 1 : 0;
        if (missing) g = 0;
        frame.gap.push_back(g);
        for (std::size_t i = 0; i < feat_cols.size(); ++i)
            frame.features[i].push_back(
                parse_double(cells[feat_cols[i]], "feature", line_no));
    }
    if (frame.timestamps.empty()) throw DataError("empty dataset: " + path);
    frame.validate();
    return frame;
}

void save_dataset(const DataFrame& frame, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << "timestamp,price,load,gap";
    for (const std::string& name : frame.feature_names) out << "," << name;
    out << "\n";
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf;
    };
    for (int t = 0; t < frame.size(); ++t) {
        out << format_timestamp(frame.timestamps[t]) << ",";
        put(frame.price[t]);
        out << ",";
        if (std::isfinite(frame.load[t])) put(frame.load[t]);
        out << "," << static_cast<int>(frame.gap[t]);
        for (const auto& col : frame.features) {
            out << ",";
            put(col[t]);
        }
        out << "\n";
    }
    if (!out) throw DataError("write failed: " + path);
}

} // namespace invbid::data
