#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace harmonia {

/// 17-significant-digit rendering: doubles round-trip exactly, so emitted
/// reports double as regression fixtures.
std::string format_double(double v);

/// An insertion-ordered record of scalars, sub-records, and arrays of
/// records — just enough structure for the reports the CLI emits. The same
/// record renders as a JSON object (stable field order), flat
/// `key = value` lines for terminals, or a CSV header/row pair (nested
/// keys dotted, arrays indexed).
class Report {
  public:
    Report& put(std::string key, double v);
    Report& put(std::string key, long v);
    Report& put(std::string key, int v) { return put(std::move(key), static_cast<long>(v)); }
    Report& put(std::string key, bool v);
    Report& put(std::string key, std::string v);
    Report& put(std::string key, const char* v) { return put(std::move(key), std::string(v)); }
    Report& put(std::string key, Report child);
    Report& put(std::string key, std::vector<Report> rows);

    bool empty() const { return fields_.empty(); }

    std::string to_json() const;
    std::string to_human() const;

    /// Flattened scalar lookup ("witness.x", "cells[2].fn"); empty when the
    /// path is absent or not a scalar. Strings come back unquoted.
    std::optional<std::string> flat_value(const std::string& dotted_key) const;

    /// All flattened scalar fields in insertion order.
    std::vector<std::pair<std::string, std::string>> flattened() const;

    std::string csv_header() const;
    std::string csv_row() const;

  private:
    struct Value {
        enum class Kind { number, integer, boolean, text, record, list };
        Kind kind = Kind::number;
        double num = 0.0;
        long integer = 0;
        bool boolean = false;
        std::string text;
        std::shared_ptr<Report> record;
        std::vector<Report> list;

        std::string scalar() const; // unquoted rendering; records/lists empty
    };

    std::vector<std::pair<std::string, Value>> fields_;

    void flatten(const std::string& prefix,
                 std::vector<std::pair<std::string, std::string>>& out) const;
    void write_json(std::string& out) const;

    friend std::string csv_escape(const std::string&);
};

/// Quote a field for CSV output when it contains commas, quotes or newlines.
std::string csv_escape(const std::string& field);

} // namespace harmonia
