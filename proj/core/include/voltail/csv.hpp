#pragma once

#include <string>
#include <vector>

#include "voltail/detrend.hpp"

namespace voltail {

struct CsvOptions {
    // With lenient=false any malformed or non-positive price row is an error;
    // with lenient=true such rows are skipped and reported in `skipped`.
    bool lenient = false;
};

struct CsvResult {
    PriceSeries series;
    std::vector<std::string> skipped;   // "line N: reason" per skipped row
};

// Reads a price series from a CSV file. Accepts either a single close column
// or (label, close) columns; the delimiter (comma, semicolon or tab) and an
// optional header row are auto-detected. Throws std::runtime_error with the
// offending line number on malformed input unless options.lenient is set.
CsvResult read_price_csv(const std::string& path, const CsvOptions& options = {});

// Same, from an already-loaded text buffer (used by tests).
CsvResult parse_price_csv(const std::string& text, const CsvOptions& options = {},
                          const std::string& name = "<memory>");

}  // namespace voltail
