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

#include "subris/rng.hpp"

#include <cmath>

#include <boost/random/normal_distribution.hpp>

namespace subris {

namespace {

// Standard deviation of each quadrature component of CN(0, 1).
const double kComponentSigma = std::sqrt(0.5);

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t state = master;
    const std::uint64_t base = splitmix64(state);
    state = base ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL);
    return splitmix64(state);
}

std::complex<double> SampleStream::complex_normal() {
    boost::random::normal_distribution<double> normal(0.0, kComponentSigma);
    const double re = normal(engine_);
    const double im = normal(engine_);
    return {re, im};
}

void SampleStream::fill_complex_normal(std::span<std::complex<double>> out) {
    boost::random::normal_distribution<double> normal(0.0, kComponentSigma);
    for (auto& value : out) {
        const double re = normal(engine_);
        const double im = normal(engine_);
        value = {re, im};
    }
}

double SampleStream::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(engine_);
}

}  // namespace subris
