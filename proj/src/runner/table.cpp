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

#include "runner/table.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "common/errors.hpp"

namespace qelm {

namespace {

bool needs_csv_quotes(const std::string& cell) {
    return cell.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_escape(const std::string& cell) {
    if (!needs_csv_quotes(cell)) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

bool is_numeric_literal(const std::string& cell) {
    if (cell.empty()) return false;
    // "inf"/"nan" are not valid JSON numbers; quote them instead.
    return cell.find_first_not_of("0123456789+-.eE") == std::string::npos;
}

} // namespace

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw UsageError("unknown output format '" + name + "' (expected csv or json)");
}

std::string Table::format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) {
        throw ContractError("table row has " + std::to_string(cells.size()) +
                            " cells, expected " + std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(cells));
}

const std::string& Table::cell(std::size_t row, std::size_t col) const {
    if (row >= rows_.size() || col >= columns_.size()) {
        throw ContractError("table cell index out of range");
    }
    return rows_[row][col];
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(columns_[c].name);
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += csv_escape(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string Table::to_json() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out += r ? ",\n  {" : "\n  {";
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c) out += ", ";
            out += '"';
            out += json_escape(columns_[c].name);
            out += "\": ";
            const std::string& cell = rows_[r][c];
            const bool raw = columns_[c].type != CellType::String && is_numeric_literal(cell);
            if (raw) {
                out += cell;
            } else {
                out += '"';
                out += json_escape(cell);
                out += '"';
            }
        }
        out += '}';
    }
    out += rows_.empty() ? "]" : "\n]";
    out += '\n';
    return out;
}

void Table::write(const std::string& path, OutputFormat format) const {
    const std::string payload = format == OutputFormat::Csv ? to_csv() : to_json();
    if (path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << payload;
    file.flush();
    if (!file) throw IoError("failed while writing '" + path + "'");
}

} // namespace qelm
