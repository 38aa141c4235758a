// SPDX-License-Identifier: Apache-2.0
//
// rissim: 1-bit reconfigurable reflecting surface simulator
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
// ------------------------------------------------------------------------

#include "rissim/synthesis.hpp"

#include <cmath>

#include "rissim/error.hpp"

namespace rissim
{
    double cosine_exponent_for_gain(double gain_dbi)
    {
        const double directivity = std::pow(10.0, gain_dbi / 10.0);
        return (directivity / 2.0 - 1.0) / 2.0;
    }

    void validate(const Scenario &sc)
    {
        if (!(sc.tx_pos.z() > 0.0))
            throw ValidationError("tx_pos", "transmitter must lie in front of the surface (z > 0)");
        if (!(sc.rx_pos.z() > 0.0))
            throw ValidationError("rx_pos", "receiver must lie in front of the surface (z > 0)");
        if (std::abs(sc.reflect_dir.norm() - 1.0) > 1e-9)
            throw ValidationError("reflect_dir", "must be a unit vector");
        if (!std::isfinite(sc.band.lo_ghz) || !std::isfinite(sc.band.hi_ghz) || !(sc.band.lo_ghz < sc.band.hi_ghz))
            throw ValidationError("band", "lower edge must be below upper edge");
        if (!(sc.design_freq_ghz > sc.band.lo_ghz && sc.design_freq_ghz < sc.band.hi_ghz))
            throw ValidationError("design_freq", "must lie strictly inside the band");
        if (!(sc.q_feed >= 0.0) || !std::isfinite(sc.q_feed))
            throw ValidationError("q_feed", "must be a finite value >= 0");
        if (!(sc.q_elem >= 0.0) || !std::isfinite(sc.q_elem))
            throw ValidationError("q_elem", "must be a finite value >= 0");
    }

    ColumnConfig ColumnConfig::from_string(std::string_view bits)
    {
        std::vector<CellState> out;
        out.reserve(bits.size());
        for (char c : bits)
        {
            if (c == '1')
                out.push_back(CellState::On);
            else if (c == '0')
                out.push_back(CellState::Off);
            else
                throw ValidationError("config", "expected only '0' and '1'");
        }
        return ColumnConfig(std::move(out));
    }

    std::string ColumnConfig::to_string() const
    {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_)
            s.push_back(b == CellState::On ? '1' : '0');
        return s;
    }

    double required_phase(const Scenario &sc, const Vec3 &column_center)
    {
        const double lambda = wavelength_m(sc.design_freq_ghz);
        const double excess = path_length(sc.tx_pos, column_center) - sc.reflect_dir.dot(column_center);
        return wrap_deg(360.0 * excess / lambda);
    }

    CellState quantize_column(double required_deg, const UnitCellResponse &resp, double design_freq_ghz)
    {
        const double d_off = std::abs(wrap_deg(required_deg - state_phase(resp, design_freq_ghz, CellState::Off)));
        const double d_on = std::abs(wrap_deg(required_deg - state_phase(resp, design_freq_ghz, CellState::On)));
        return d_on < d_off ? CellState::On : CellState::Off;
    }

    ColumnConfig synthesize(const Scenario &sc, const ArrayGeometry &geom, const UnitCellResponse &resp)
    {
        validate(sc);
        std::vector<CellState> bits(geom.cols());
        for (std::size_t j = 0; j < geom.cols(); ++j)
            bits[j] = quantize_column(required_phase(sc, geom.column_center(j)), resp, sc.design_freq_ghz);
        return ColumnConfig(std::move(bits));
    }

    ColumnConfig uniform_config(const ArrayGeometry &geom, CellState state)
    {
        return ColumnConfig(std::vector<CellState>(geom.cols(), state));
    }
}
