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

#include <filesystem>
#include <iosfwd>

#include "rissim/geometry.hpp"
#include "rissim/synthesis.hpp"

namespace rissim
{
    // H resonator outline in millimeters. The main (dipole) branch runs along x
    // and is split in the middle by the switch gap; the two narrow legs run
    // along y and continue as bias line segments to the cell edge, joining the
    // cells of one column.
    //
    // The defaults are drawing placeholders, not fabrication values.
    struct CellDims
    {
        double main_length_mm = 1.8;
        double main_width_mm = 0.4;
        double leg_width_mm = 0.15;
        double leg_length_mm = 2.0;
        double switch_gap_mm = 0.2;
        double bias_width_mm = 0.1;

        bool operator==(const CellDims &) const = default;
    };

    // Throws ValidationError naming the offending dimension.
    void validate(const CellDims &dims, double period_mm);

    // SVG in millimeter user units. One <g class="column on|off"> per column;
    // each cell draws one H path, its switch region (filled for On, an open
    // slot for Off) and its bias segments.
    void write_layout_svg(std::ostream &out, const ArrayGeometry &geom,
                          const ColumnConfig &config, const CellDims &dims = {});

    void export_layout(const ArrayGeometry &geom, const ColumnConfig &config,
                       const CellDims &dims, const std::filesystem::path &path);
}
