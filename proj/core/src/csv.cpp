#include "voltail/csv.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace voltail {

namespace {

std::string trim(std::string s) {
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

char detect_delimiter(const std::string& line) {
    for (char c : {',', ';', '\t'})
        if (line.find(c) != std::string::npos) return c;
    return '\0';   // single column
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    if (delim == '\0') {
        out.push_back(trim(line));
        return out;
    }
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, delim)) out.push_back(trim(field));
    if (!line.empty() && line.back() == delim) out.emplace_back();
    return out;
}

}  // namespace

CsvResult parse_price_csv(const std::string& text, const CsvOptions& options,
                          const std::string& name) {
    CsvResult result;
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    bool first_data_line = true;
    char delim = '\0';

    auto fail = [&](const std::string& reason) {
        throw std::runtime_error(name + ": line " + std::to_string(line_no) + ": " + reason);
    };

    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        if (first_data_line) delim = detect_delimiter(stripped);
        const auto fields = split(stripped, delim);

        std::string label;
        std::string price_field;
        if (fields.size() == 1) {
            price_field = fields[0];
        } else if (fields.size() == 2) {
            label = fields[0];
            price_field = fields[1];
        } else {
            if (options.lenient) {
                result.skipped.push_back("line " + std::to_string(line_no) +
                                         ": expected 1 or 2 columns, got " +
                                         std::to_string(fields.size()));
                continue;
            }
            fail("expected 1 or 2 columns, got " + std::to_string(fields.size()));
        }

        double price = 0.0;
        if (!parse_number(price_field, price)) {
            // a non-numeric first row is taken as a header
            if (first_data_line) {
                first_data_line = false;
                continue;
            }
            if (options.lenient) {
                result.skipped.push_back("line " + std::to_string(line_no) +
                                         ": non-numeric price '" + price_field + "'");
                continue;
            }
            fail("non-numeric price '" + price_field + "'");
        }
        first_data_line = false;

        if (!(price > 0.0)) {
            if (options.lenient) {
                result.skipped.push_back("line " + std::to_string(line_no) +
                                         ": non-positive price " + price_field);
                continue;
            }
            fail("non-positive price " + price_field);
        }

        result.series.values.push_back(price);
        if (!label.empty()) result.series.labels.push_back(label);
    }

    if (result.series.values.empty())
        throw std::runtime_error(name + ": no price data found");
    if (!result.series.labels.empty() &&
        result.series.labels.size() != result.series.values.size())
        result.series.labels.clear();   // mixed labelled/unlabelled rows
    return result;
}

CsvResult read_price_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_price_csv(buf.str(), options, path);
}

}  // namespace voltail
