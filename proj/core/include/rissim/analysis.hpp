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
#include <span>
#include <vector>

#include "rissim/geometry.hpp"
#include "rissim/solver.hpp"
#include "rissim/synthesis.hpp"
#include "rissim/unitcell.hpp"

namespace rissim
{
    // Received power at rx_pos of a configuration relative to the all-Off surface.
    struct EnhancementReport
    {
        std::vector<double> freqs_ghz;
        std::vector<double> configured_db;
        std::vector<double> all_off_db;
        std::vector<double> enhancement_db; // configured_db - all_off_db
        double min_enhancement_db = 0.0;
    };

    EnhancementReport enhancement_db(const Scenario &sc, const ArrayGeometry &geom,
                                     const UnitCellResponse &resp, const ColumnConfig &config,
                                     std::span<const double> freqs_ghz);

    // Angle of the strongest sample. Equal maxima resolve to the smallest
    // |angle|, then to the earlier sample.
    double beam_direction(const PatternScan &scan);

    // Per-cell phase error of a column configuration against the true
    // Tx -> cell -> Rx path.
    //
    // ideal:    reflection phase that would put every cell's contribution in
    //           phase at rx_pos, k (|tx - cell| + |rx - cell|) + reference
    // achieved: state phase of the cell's column
    // error:    achieved - ideal, wrapped to (-180, 180]
    //
    // The reference zeroes the circular mean error of the cells nearest the
    // array center (one to four cells). Cells away from row y = 0 see a longer
    // path than the column center that set their state, so their error grows
    // toward the column ends.
    struct PhaseErrorReport
    {
        std::size_t rows = 0;
        std::size_t cols = 0;
        double freq_ghz = 0.0;
        std::vector<double> ideal_deg; // row-major
        std::vector<double> achieved_deg;
        std::vector<double> error_deg;
        double rms_deg = 0.0;
        double max_abs_deg = 0.0;
        std::vector<double> row_rms_deg;

        double error(std::size_t i, std::size_t j) const { return error_deg.at(i * cols + j); }
    };

    PhaseErrorReport phase_error_report(const Scenario &sc, const ArrayGeometry &geom,
                                        const UnitCellResponse &resp, const ColumnConfig &config,
                                        double f_ghz);
}
