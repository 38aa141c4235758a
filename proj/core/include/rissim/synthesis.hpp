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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rissim/geometry.hpp"
#include "rissim/unitcell.hpp"

namespace rissim
{
    // Amplitude exponent q of a cos^q(theta) feed whose directivity equals
    // `gain_dbi`. The power pattern cos^(2q) over the front hemisphere has
    // directivity 2 (2q + 1), so q = (D / 2 - 1) / 2. 20 dBi gives q = 24.5.
    double cosine_exponent_for_gain(double gain_dbi);

    // Link geometry and evaluation band. Positions are in the array frame
    // (panel in z = 0, +z is the surface normal).
    struct Scenario
    {
        Vec3 tx_pos;
        Vec3 rx_pos;
        Vec3 reflect_dir{0.0, 0.0, 1.0}; // unit vector of the wanted reflected beam
        double design_freq_ghz = 27.5;
        Band band = UnitCellResponse::default_band();
        double q_feed = cosine_exponent_for_gain(20.0);
        double q_elem = 1.0;

        bool operator==(const Scenario &) const = default;
    };

    // Throws ValidationError naming the first violated field.
    void validate(const Scenario &sc);

    // One bias state per column.
    class ColumnConfig
    {
    public:
        ColumnConfig() = default;
        explicit ColumnConfig(std::vector<CellState> bits) : bits_(std::move(bits)) {}

        // Parses '1' (On) / '0' (Off) characters.
        static ColumnConfig from_string(std::string_view bits);

        std::size_t size() const noexcept { return bits_.size(); }
        CellState operator[](std::size_t j) const { return bits_.at(j); }
        const std::vector<CellState> &bits() const noexcept { return bits_; }

        // '1' for On, '0' for Off, column 0 first.
        std::string to_string() const;

        bool operator==(const ColumnConfig &) const = default;

    private:
        std::vector<CellState> bits_;
    };

    // Reflection phase a column must apply so that the feed's spherical wave
    // leaves the surface as a plane wave along reflect_dir:
    //
    //   k * ( |tx - column| - reflect_dir . column ),  wrapped to (-180, 180]
    //
    // evaluated at the design frequency.
    double required_phase(const Scenario &sc, const Vec3 &column_center);

    // Nearest state by circular phase distance at the design frequency; Off on ties.
    CellState quantize_column(double required_deg, const UnitCellResponse &resp,
                              double design_freq_ghz);

    ColumnConfig synthesize(const Scenario &sc, const ArrayGeometry &geom,
                            const UnitCellResponse &resp);

    ColumnConfig uniform_config(const ArrayGeometry &geom, CellState state);
}
