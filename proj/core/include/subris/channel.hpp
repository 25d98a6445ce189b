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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "subris/array_response.hpp"
#include "subris/config.hpp"
#include "subris/rng.hpp"

namespace subris {

/// Row-major dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return entries_.size(); }

    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<cplx> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const cplx> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    std::span<cplx> entries() noexcept { return entries_; }
    std::span<const cplx> entries() const noexcept { return entries_; }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

/// One random draw of the BS-RIS channel H1 (N x M), the RIS-user channel
/// h2 (1 x N) and the direct Rayleigh channel g (1 x M).
struct ChannelRealization {
    ComplexMatrix H1;
    ComplexMatrix h2;
    ComplexMatrix g;
    std::uint64_t seed_tag = 0;
};

/// Amplitude weights sqrt(K/(K+1)) and sqrt(1/(K+1)); K = inf gives (1, 0).
struct FadingWeights {
    double los;
    double nlos;
};
FadingWeights fading_weights(double K);

/// LoS BS-RIS channel: row block q equals b_q * conj(a_L(AoA)) * a_M(theta_d1)^T.
ComplexMatrix los_bs_ris(const ValidatedConfig& cfg);

/// LoS RIS-user channel: segment q equals c_q * a_L(AoD).
ComplexMatrix los_ris_user(const ValidatedConfig& cfg);

/// Rician channel generator with cached LoS components.
///
/// NLoS entries are drawn from the stream in a fixed order: h2 (N entries),
/// then g (M entries), then H1 row by row. The output is a pure function of
/// the stream state.
class ChannelSampler {
public:
    explicit ChannelSampler(const ValidatedConfig& cfg);

    ChannelRealization sample(SampleStream& stream) const;

    const ComplexMatrix& los_H1() const noexcept { return los_H1_; }
    const ComplexMatrix& los_h2() const noexcept { return los_h2_; }

private:
    ComplexMatrix los_H1_;
    ComplexMatrix los_h2_;
    FadingWeights w1_;
    FadingWeights w2_;
};

/// Convenience wrapper that rebuilds the LoS components on every call.
ChannelRealization sample_channels(const ValidatedConfig& cfg, SampleStream& stream);

/// Debug dump. Header `matrix,rows,cols,row,col,re,im`, then one line per
/// entry of H1, h2 and g in row-major order (zero-based indices).
void write_realization_csv(std::ostream& out, const ChannelRealization& realization);

}  // namespace subris
