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
#include <random>

#include "qcore/types.hpp"

namespace qelm {

/// Seeded random stream. The same (seed, stream) pair reproduces the same
/// sample sequence bit-exactly within one build. Streams are never shared
/// between threads; parallel work derives one stream per task instead.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Independent child stream; derivation is a pure function of
    /// (seed, stream, index), so it does not consume from this stream.
    RandomSource derive(std::uint64_t index) const;

    double uniform(double lo, double hi);
    double normal();
    Complex complex_normal(); // standard complex Gaussian, E|z|^2 = 1

    /// dim x dim matrix of i.i.d. standard complex Gaussians (Ginibre).
    ComplexMatrix ginibre(int rows, int cols);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace qelm
