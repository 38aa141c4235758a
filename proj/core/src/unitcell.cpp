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

#include "rissim/unitcell.hpp"

#include <algorithm>
#include <cmath>

#include "rissim/error.hpp"
#include "rissim/geometry.hpp"

namespace rissim
{
    namespace
    {
        void check_table(const std::vector<ResponseKnot> &t, const Band &band, const std::string &field)
        {
            if (t.empty())
                throw ValidationError(field, "table is empty");
            for (std::size_t k = 0; k < t.size(); ++k)
            {
                const auto &p = t[k];
                if (!std::isfinite(p.freq_ghz) || !std::isfinite(p.magnitude) || !std::isfinite(p.phase_deg))
                    throw ValidationError(field, "non-finite table entry");
                if (!(p.magnitude > 0.0 && p.magnitude <= 1.0))
                    throw ValidationError(field, "magnitude must lie in (0, 1]");
                if (k > 0 && !(p.freq_ghz > t[k - 1].freq_ghz))
                    throw ValidationError(field, "frequencies must be strictly increasing");
                if (!band.contains(p.freq_ghz))
                    throw ValidationError(field, "table entry outside band");
            }
        }

        // Piecewise-linear lookup; std::lerp reproduces the knot values exactly.
        template <typename Get>
        double interpolate(const std::vector<ResponseKnot> &t, double f, Get get)
        {
            if (f <= t.front().freq_ghz)
                return get(t.front());
            if (f >= t.back().freq_ghz)
                return get(t.back());
            auto hi = std::upper_bound(t.begin(), t.end(), f,
                                       [](double v, const ResponseKnot &k)
                                       { return v < k.freq_ghz; });
            auto lo = hi - 1;
            const double s = (f - lo->freq_ghz) / (hi->freq_ghz - lo->freq_ghz);
            return std::lerp(get(*lo), get(*hi), s);
        }
    }

    const char *to_string(CellState s) noexcept
    {
        return s == CellState::On ? "on" : "off";
    }

    UnitCellResponse::UnitCellResponse(std::vector<ResponseKnot> off, std::vector<ResponseKnot> on,
                                       Band band, std::string metadata)
        : off_(std::move(off)), on_(std::move(on)), band_(band), metadata_(std::move(metadata))
    {
        if (!std::isfinite(band_.lo_ghz) || !std::isfinite(band_.hi_ghz) || !(band_.lo_ghz < band_.hi_ghz))
            throw ValidationError("band", "lower edge must be below upper edge");
        check_table(off_, band_, "unitcell.off");
        check_table(on_, band_, "unitcell.on");
    }

    UnitCellResponse UnitCellResponse::default_model()
    {
        // Only the band-edge values of the simulated cell are known numerically.
        return UnitCellResponse(
            {{23.5, 0.94, 0.0}, {29.5, 0.88, 0.0}},
            {{23.5, 0.57, -215.0}, {29.5, 0.74, -160.0}},
            default_band(),
            "H resonator, 2.3 mm period; screen-printed VO2 switch (on 4 ohm, off 1000 ohm); "
            "50 um PEN on 0.8 mm AF32 glass (eps_r 5.1, tan_d 0.0086 at 28.5 GHz); "
            "Ag paste conductor 7e6 S/m; Off state is the phase reference");
    }

    UnitCellResponse UnitCellResponse::ideal(double phase_on_deg, double phase_off_deg, Band band)
    {
        const double f = 0.5 * (band.lo_ghz + band.hi_ghz);
        return UnitCellResponse({{f, 1.0, phase_off_deg}}, {{f, 1.0, phase_on_deg}}, band,
                                "ideal lossless cell");
    }

    std::span<const ResponseKnot> UnitCellResponse::table(CellState s) const noexcept
    {
        return s == CellState::On ? std::span<const ResponseKnot>(on_) : std::span<const ResponseKnot>(off_);
    }

    void UnitCellResponse::check_band(double f_ghz) const
    {
        if (!band_.contains(f_ghz))
            throw BandError(f_ghz, band_.lo_ghz, band_.hi_ghz);
    }

    double UnitCellResponse::magnitude(double f_ghz, CellState s) const
    {
        check_band(f_ghz);
        return interpolate(s == CellState::On ? on_ : off_, f_ghz,
                           [](const ResponseKnot &k)
                           { return k.magnitude; });
    }

    double UnitCellResponse::unwrapped_phase_deg(double f_ghz, CellState s) const
    {
        check_band(f_ghz);
        return interpolate(s == CellState::On ? on_ : off_, f_ghz,
                           [](const ResponseKnot &k)
                           { return k.phase_deg; });
    }

    std::complex<double> UnitCellResponse::reflection(double f_ghz, CellState s) const
    {
        return std::polar(magnitude(f_ghz, s), deg2rad(unwrapped_phase_deg(f_ghz, s)));
    }

    UnitCellResponse UnitCellResponse::scaled(double factor) const
    {
        if (!(factor > 0.0) || !std::isfinite(factor))
            throw ValidationError("factor", "must be positive");
        auto off = off_, on = on_;
        for (auto *t : {&off, &on})
            for (auto &k : *t)
                k.magnitude *= factor;
        return UnitCellResponse(std::move(off), std::move(on), band_, metadata_);
    }

    double state_phase(const UnitCellResponse &resp, double f_ghz, CellState s)
    {
        return wrap_deg(resp.unwrapped_phase_deg(f_ghz, s));
    }

    double phase_contrast(const UnitCellResponse &resp, double f_ghz)
    {
        const double d = state_phase(resp, f_ghz, CellState::Off) - state_phase(resp, f_ghz, CellState::On);
        double r = std::fmod(d, 360.0);
        if (r < 0.0)
            r += 360.0;
        return r;
    }
}
