// Copyright 2026 The gridxai Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRIDXAI_COMMON_CSV_H_
#define GRIDXAI_COMMON_CSV_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridxai {

// Shortest decimal string that round-trips to the same double. NaN is written
// as an empty field.
std::string FormatDouble(double v);

// Parses a decimal with '.' as separator. Empty or "nan" gives NaN. Throws
// ParseError on anything else.
double ParseDouble(std::string_view text);

// German locale numerals: "1.234,5" -> 1234.5. Returns nullopt when the text
// is not a number.
std::optional<double> ParseGermanDecimal(std::string_view text);

// Splits one record on `delimiter`, honouring double quotes ("" escapes a
// quote inside a quoted field).
std::vector<std::string> SplitCsvLine(std::string_view line, char delimiter);

std::string JoinCsv(const std::vector<std::string>& fields, char delimiter);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based source line of each row, for error messages.
  std::vector<std::size_t> line_numbers;

  std::optional<std::size_t> FindColumn(std::string_view name) const;
};

// Reads the whole text. Blank lines are skipped; a leading UTF-8 BOM is
// dropped.
CsvTable ParseCsv(std::string_view text, char delimiter);

std::string ReadFile(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data);

std::string Trim(std::string_view s);
std::string ToLower(std::string_view s);

}  // namespace gridxai

#endif  // GRIDXAI_COMMON_CSV_H_
