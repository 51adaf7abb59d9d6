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

#include <stdexcept>
#include <string>

namespace qelm {

/// Base class for all qelm errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation contract (dimension mismatch, bad argument).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error(what) {}
};

/// A requested object exceeds the configured dimension cap or an integer range.
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& what) : Error(what) {}
};

/// Numerical failure (eigensolver non-convergence, degenerate targets, ...).
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

/// Malformed configuration or unknown preset.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

/// Failed to read or write a file.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace qelm
