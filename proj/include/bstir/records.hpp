#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bstir {

// One row of program output: what was computed (kind + inputs), the exact
// values produced, and the formula label the value came from.
struct OutputRecord {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> values;
    std::string provenance;
};

enum class OutputFormat { json, csv };

OutputFormat parse_format(const std::string& text);

void write_json(std::ostream& out, const std::vector<OutputRecord>& records);
void write_csv(std::ostream& out, const std::vector<OutputRecord>& records);
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format);

}  // namespace bstir
