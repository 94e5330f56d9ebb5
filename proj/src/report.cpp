#include "harmonia/report.hpp"

#include <cstdio>

namespace harmonia {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        case '\r':
            out += "\\r";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

} // namespace

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string Report::Value::scalar() const {
    switch (kind) {
    case Kind::number:
        return format_double(num);
    case Kind::integer:
        return std::to_string(integer);
    case Kind::boolean:
        return boolean ? "true" : "false";
    case Kind::text:
        return text;
    default:
        return {};
    }
}

Report& Report::put(std::string key, double v) {
    Value val;
    val.kind = Value::Kind::number;
    val.num = v;
    fields_.emplace_back(std::move(key), std::move(val));
    return *this;
}

Report& Report::put(std::string key, long v) {
    Value val;
    val.kind = Value::Kind::integer;
    val.integer = v;
    fields_.emplace_back(std::move(key), std::move(val));
    return *this;
}

Report& Report::put(std::string key, bool v) {
    Value val;
    val.kind = Value::Kind::boolean;
    val.boolean = v;
    fields_.emplace_back(std::move(key), std::move(val));
    return *this;
}

Report& Report::put(std::string key, std::string v) {
    Value val;
    val.kind = Value::Kind::text;
    val.text = std::move(v);
    fields_.emplace_back(std::move(key), std::move(val));
    return *this;
}

Report& Report::put(std::string key, Report child) {
    Value val;
    val.kind = Value::Kind::record;
    val.record = std::make_shared<Report>(std::move(child));
    fields_.emplace_back(std::move(key), std::move(val));
    return *this;
}

Report& Report::put(std::string key, std::vector<Report> rows) {
    Value val;
    val.kind = Value::Kind::list;
    val.list = std::move(rows);
    fields_.emplace_back(std::move(key), std::move(val));
    return *this;
}

void Report::write_json(std::string& out) const {
    out += '{';
    bool first = true;
    for (const auto& [key, val] : fields_) {
        if (!first)
            out += ',';
        first = false;
        out += '"';
        out += json_escape(key);
        out += "\":";
        switch (val.kind) {
        case Value::Kind::text:
            out += '"';
            out += json_escape(val.text);
            out += '"';
            break;
        case Value::Kind::record:
            val.record->write_json(out);
            break;
        case Value::Kind::list: {
            out += '[';
            bool first_row = true;
            for (const Report& row : val.list) {
                if (!first_row)
                    out += ',';
                first_row = false;
                row.write_json(out);
            }
            out += ']';
            break;
        }
        default:
            out += val.scalar();
        }
    }
    out += '}';
}

std::string Report::to_json() const {
    std::string out;
    write_json(out);
    return out;
}

void Report::flatten(
    const std::string& prefix,
    std::vector<std::pair<std::string, std::string>>& out) const {
    for (const auto& [key, val] : fields_) {
        std::string path = prefix.empty() ? key : prefix + "." + key;
        switch (val.kind) {
        case Value::Kind::record:
            val.record->flatten(path, out);
            break;
        case Value::Kind::list:
            for (std::size_t i = 0; i < val.list.size(); ++i)
                val.list[i].flatten(path + "[" + std::to_string(i) + "]", out);
            break;
        default:
            out.emplace_back(path, val.scalar());
        }
    }
}

std::vector<std::pair<std::string, std::string>> Report::flattened() const {
    std::vector<std::pair<std::string, std::string>> out;
    flatten({}, out);
    return out;
}

std::optional<std::string> Report::flat_value(const std::string& key) const {
    for (auto& [k, v] : flattened())
        if (k == key)
            return v;
    return std::nullopt;
}

std::string Report::to_human() const {
    std::string out;
    for (auto& [k, v] : flattened()) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::string Report::csv_header() const {
    std::string out;
    bool first = true;
    for (auto& [k, v] : flattened()) {
        (void)v;
        if (!first)
            out += ',';
        first = false;
        out += csv_escape(k);
    }
    return out;
}

std::string Report::csv_row() const {
    std::string out;
    bool first = true;
    for (auto& [k, v] : flattened()) {
        (void)k;
        if (!first)
            out += ',';
        first = false;
        out += csv_escape(v);
    }
    return out;
}

} // namespace harmonia
