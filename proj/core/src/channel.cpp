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

#include "subris/channel.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

namespace subris {

namespace {

std::string format_real(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

void write_matrix(std::ostream& out, std::string_view name, const ComplexMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const cplx v = m(r, c);
            out << name << ',' << m.rows() << ',' << m.cols() << ',' << r << ',' << c << ','
                << format_real(v.real()) << ',' << format_real(v.imag()) << '\n';
        }
    }
}

}  // namespace

FadingWeights fading_weights(double K) {
    if (std::isinf(K)) {
        return {1.0, 0.0};
    }
    return {std::sqrt(K / (K + 1.0)), std::sqrt(1.0 / (K + 1.0))};
}

ComplexMatrix los_bs_ris(const ValidatedConfig& cfg) {
    const auto& a = cfg.angles();
    const double d2 = cfg.params().d2_over_lambda;
    const SteeringVector a_m = ula_steering(cfg.M(), cfg.params().d1_over_lambda, a.theta_d1);
    const SteeringVector a_l = upa_steering(cfg.Lx(), cfg.Ly(), d2, a.theta_a1, a.phi_a1);

    ComplexMatrix H(cfg.N(), cfg.M());
    for (std::size_t q = 0; q < cfg.Q(); ++q) {
        const cplx b = subarray_phase_b(cfg, q);
        for (std::size_t l = 0; l < cfg.L(); ++l) {
            const cplx scale = b * std::conj(a_l[l]);
            auto row = H.row(q * cfg.L() + l);
            for (std::size_t m = 0; m < cfg.M(); ++m) {
                row[m] = scale * a_m[m];
            }
        }
    }
    return H;
}

ComplexMatrix los_ris_user(const ValidatedConfig& cfg) {
    const auto& a = cfg.angles();
    const SteeringVector a_l = upa_steering(cfg.Lx(), cfg.Ly(), cfg.params().d2_over_lambda, a.theta_d2, a.phi_d2);

    ComplexMatrix h(1, cfg.N());
    for (std::size_t q = 0; q < cfg.Q(); ++q) {
        const cplx c = subarray_phase_c(cfg, q);
        for (std::size_t l = 0; l < cfg.L(); ++l) {
            h(0, q * cfg.L() + l) = c * a_l[l];
        }
    }
    return h;
}

ChannelSampler::ChannelSampler(const ValidatedConfig& cfg)
    : los_H1_(los_bs_ris(cfg)),
      los_h2_(los_ris_user(cfg)),
      w1_(fading_weights(cfg.params().K1)),
      w2_(fading_weights(cfg.params().K2)) {}

ChannelRealization ChannelSampler::sample(SampleStream& stream) const {
    const std::size_t N = los_H1_.rows();
    const std::size_t M = los_H1_.cols();

    ChannelRealization out{ComplexMatrix(N, M), ComplexMatrix(1, N), ComplexMatrix(1, M), stream.seed_tag()};
    stream.fill_complex_normal(out.h2.entries());
    stream.fill_complex_normal(out.g.entries());
    stream.fill_complex_normal(out.H1.entries());

    auto h2 = out.h2.entries();
    const auto h2_los = los_h2_.entries();
    for (std::size_t n = 0; n < N; ++n) {
        h2[n] = w2_.los * h2_los[n] + w2_.nlos * h2[n];
    }
    auto H1 = out.H1.entries();
    const auto H1_los = los_H1_.entries();
    for (std::size_t i = 0; i < H1.size(); ++i) {
        H1[i] = w1_.los * H1_los[i] + w1_.nlos * H1[i];
    }
    return out;
}

ChannelRealization sample_channels(const ValidatedConfig& cfg, SampleStream& stream) {
    return ChannelSampler(cfg).sample(stream);
}

void write_realization_csv(std::ostream& out, const ChannelRealization& realization) {
    out << "matrix,rows,cols,row,col,re,im\n";
    write_matrix(out, "H1", realization.H1);
    write_matrix(out, "h2", realization.h2);
    write_matrix(out, "g", realization.g);
}

}  // namespace subris
