// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>

namespace subris {

/// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for stream `index` under `master`. Each Monte Carlo sample owns the
/// stream derived from (master seed, sample index), so results do not depend
/// on how samples are distributed over worker threads.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Independent random stream: mt19937_64 seeded from a derived seed, with
/// ziggurat normals for complex Gaussian draws.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed_tag() const noexcept { return seed_; }

    /// Circularly-symmetric CN(0, 1): real and imaginary parts each N(0, 1/2).
    std::complex<double> complex_normal();
    void fill_complex_normal(std::span<std::complex<double>> out);

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace subris
