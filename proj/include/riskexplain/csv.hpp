#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace riskexplain::data {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style parser: comma delimiter, optional double-quoted fields with
// "" escapes, quoted fields may span lines, CRLF and LF both accepted, a
// UTF-8 BOM on the first line is skipped. Throws InputError on an
// unterminated quote or an empty input.
CsvTable parse_csv(std::string_view content);

CsvTable read_csv_file(const std::string& path);

// Quotes a field only when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

}  // namespace riskexplain::data
