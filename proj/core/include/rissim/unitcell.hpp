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

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace rissim
{
    enum class CellState
    {
        Off,
        On
    };

    const char *to_string(CellState s) noexcept;

    // One sample of a tabulated reflection coefficient. Phase is in degrees and
    // is stored unwrapped, so neighbouring knots interpolate along the path the
    // table author intended.
    struct ResponseKnot
    {
        double freq_ghz;
        double magnitude;
        double phase_deg;

        bool operator==(const ResponseKnot &) const = default;
    };

    struct Band
    {
        double lo_ghz;
        double hi_ghz;

        bool contains(double f_ghz) const noexcept { return f_ghz >= lo_ghz && f_ghz <= hi_ghz; }
        bool operator==(const Band &) const = default;
    };

    // Two-state complex reflection coefficient of one unit cell versus frequency.
    //
    // Magnitude and unwrapped phase are interpolated piecewise-linearly between
    // knots and held constant between the outermost knot and the band edge.
    // Queries outside the band throw BandError. Immutable after construction.
    class UnitCellResponse
    {
    public:
        UnitCellResponse(std::vector<ResponseKnot> off, std::vector<ResponseKnot> on, Band band,
                         std::string metadata = {});

        // Band-edge model of the VO2-switched H resonator: two knots per state at
        // 23.5 and 29.5 GHz. Off is the phase reference (0 deg); On lags by the
        // Off-On contrast (215 deg at 23.5 GHz, 160 deg at 29.5 GHz).
        static UnitCellResponse default_model();

        // Lossless, frequency-flat cell with the given state phases.
        static UnitCellResponse ideal(double phase_on_deg, double phase_off_deg,
                                      Band band = default_band());

        static constexpr Band default_band() { return {23.5, 29.5}; }

        const Band &band() const noexcept { return band_; }
        std::span<const ResponseKnot> table(CellState s) const noexcept;
        const std::string &metadata() const noexcept { return metadata_; }

        double magnitude(double f_ghz, CellState s) const;
        double unwrapped_phase_deg(double f_ghz, CellState s) const;
        std::complex<double> reflection(double f_ghz, CellState s) const;

        // Copy with every magnitude multiplied by `factor`; the result must still
        // satisfy |Gamma| <= 1.
        UnitCellResponse scaled(double factor) const;

        bool operator==(const UnitCellResponse &) const = default;

    private:
        void check_band(double f_ghz) const;

        std::vector<ResponseKnot> off_, on_;
        Band band_;
        std::string metadata_;
    };

    // Phase of reflection(f, s) in degrees, wrapped to (-180, 180].
    double state_phase(const UnitCellResponse &resp, double f_ghz, CellState s);

    // Off minus On phase, wrapped to [0, 360).
    double phase_contrast(const UnitCellResponse &resp, double f_ghz);
}
