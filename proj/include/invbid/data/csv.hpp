#pragma once

#include <string>
#include <vector>

#include "invbid/data/frame.hpp"

namespace invbid::data {

// Canonical data file: delimited text, header row, columns
//   timestamp, price, load, gap, <feature names...>
// A missing load is an empty cell and forces gap to 0. The gap column is
// optional on input (defaults to 1 where load is present); every remaining
// column is a feature unless the schema names them explicitly.
struct CsvSchema {
    std::string timestamp = "timestamp";
    std::string price = "price";
    std::string load = "load";
    std::string gap = "gap";
    std::vector<std::string> features; // empty: all remaining columns
};

DataFrame load_dataset(const std::string& path, const CsvSchema& schema = {});
void save_dataset(const DataFrame& frame, const std::string& path);

// timestamp helpers (UTC, no zone arithmetic)
std::int64_t parse_timestamp(const std::string& text);
std::string format_timestamp(std::int64_t epoch_seconds);

} // namespace invbid::data
