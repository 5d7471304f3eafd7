#include "bstir/records.hpp"

#include "json.hpp"

#include <stdexcept>

namespace bstir {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pairs_to_object(const std::vector<std::pair<std::string, std::string>>& pairs) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, value] : pairs) obj[key] = value;
    return obj;
}

// "k=v" pairs joined by ';', quoted per RFC 4180 when needed.
std::string csv_field(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::string joined;
    for (const auto& [key, value] : pairs) {
        if (!joined.empty()) joined += ';';
        joined += key;
        joined += '=';
        joined += value;
    }
    return joined;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format: " + text);
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& records) {
    ordered_json doc;
    doc["records"] = ordered_json::array();
    for (const OutputRecord& r : records) {
        ordered_json row;
        row["kind"] = r.kind;
        row["inputs"] = pairs_to_object(r.inputs);
        row["values"] = pairs_to_object(r.values);
        row["provenance"] = r.provenance;
        doc["records"].push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
    out << "kind,inputs,values,provenance\n";
    for (const OutputRecord& r : records) {
        out << csv_quote(r.kind) << ',' << csv_quote(csv_field(r.inputs)) << ','
            << csv_quote(csv_field(r.values)) << ',' << csv_quote(r.provenance) << '\n';
    }
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format) {
    if (format == OutputFormat::json)
        write_json(out, records);
    else
        write_csv(out, records);
}

}  // namespace bstir
