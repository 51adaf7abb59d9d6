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

#include "architectures/kind.hpp"

#include <algorithm>
#include <cctype>

#include "common/errors.hpp"

namespace qelm {

std::string to_string(ArchKind kind) {
    switch (kind) {
        case ArchKind::S3L: return "S3L";
        case ArchKind::SM: return "SM";
        case ArchKind::MI: return "MI";
        case ArchKind::D: return "D";
    }
    return "?";
}

ArchKind arch_kind_from_string(const std::string& name) {
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "S3L") return ArchKind::S3L;
    if (upper == "SM") return ArchKind::SM;
    if (upper == "MI") return ArchKind::MI;
    if (upper == "D") return ArchKind::D;
    throw UsageError("unknown architecture kind '" + name + "' (expected S3L, SM, MI or D)");
}

} // namespace qelm
