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

#include <string>

namespace qelm {

/// The four designs: single three-layer, spatially multiplexed (parallel
/// independent units), multiple injections (sequential re-injection into one
/// reservoir), and distributed (parallel units entangled by a global map).
enum class ArchKind { S3L, SM, MI, D };

std::string to_string(ArchKind kind);

/// Parses "S3L" / "SM" / "MI" / "D" (case-insensitive); throws UsageError.
ArchKind arch_kind_from_string(const std::string& name);

} // namespace qelm
