// Copyright 2026 The qelm authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qelm {

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(const std::string& name);

/// Column-typed table of preformatted cells. Floats are rendered once, with
/// 17 significant digits, so the CSV and JSON sinks and the C API all expose
/// byte-identical values.
class Table {
public:
    enum class CellType { String, Integer, Float };

    struct Column {
        std::string name;
        CellType type;
    };

    explicit Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

    static std::string format_double(double v);

    void add_row(std::vector<std::string> cells);

    const std::vector<Column>& columns() const { return columns_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::string& cell(std::size_t row, std::size_t col) const;

    std::string to_csv() const;
    std::string to_json() const;

    /// Writes in the requested format; empty path means stdout.
    void write(const std::string& path, OutputFormat format) const;

private:
    std::vector<Column> columns_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace qelm
