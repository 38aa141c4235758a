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

#include "rissim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <set>

#include "rissim/error.hpp"

namespace rissim
{
    EnhancementReport enhancement_db(const Scenario &sc, const ArrayGeometry &geom, const UnitCellResponse &resp,
                                     const ColumnConfig &config, std::span<const double> freqs_ghz)
    {
        const auto configured = frequency_sweep(sc, geom, config, resp, freqs_ghz, sc.rx_pos);
        const auto baseline =
            frequency_sweep(sc, geom, uniform_config(geom, CellState::Off), resp, freqs_ghz, sc.rx_pos);

        EnhancementReport rep;
        rep.freqs_ghz.assign(freqs_ghz.begin(), freqs_ghz.end());
        rep.min_enhancement_db = freqs_ghz.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                   : std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n < freqs_ghz.size(); ++n)
        {
            rep.configured_db.push_back(configured[n].power_db);
            rep.all_off_db.push_back(baseline[n].power_db);
            rep.enhancement_db.push_back(configured[n].power_db - baseline[n].power_db);
            rep.min_enhancement_db = std::min(rep.min_enhancement_db, rep.enhancement_db.back());
        }
        return rep;
    }

    double beam_direction(const PatternScan &scan)
    {
        if (scan.samples.empty() || scan.samples.size() != scan.angles_deg.size())
            throw ValidationError("scan", "needs one sample per angle and at least one sample");

        std::size_t best = 0;
        for (std::size_t n = 1; n < scan.samples.size(); ++n)
        {
            const double p = scan.samples[n].power_db, pb = scan.samples[best].power_db;
            if (p > pb || (p == pb && std::abs(scan.angles_deg[n]) < std::abs(scan.angles_deg[best])))
                best = n;
        }
        return scan.angles_deg[best];
    }

    PhaseErrorReport phase_error_report(const Scenario &sc, const ArrayGeometry &geom, const UnitCellResponse &resp,
                                        const ColumnConfig &config, double f_ghz)
    {
        validate(sc);
        if (config.size() != geom.cols())
            throw ValidationError("config", "column count does not match geometry");

        const double off = state_phase(resp, f_ghz, CellState::Off);
        const double on = state_phase(resp, f_ghz, CellState::On);
        const double k_deg = 360.0 / wavelength_m(f_ghz);

        const std::size_t rows = geom.rows(), cols = geom.cols(), n = geom.size();

        // Path phase as seen at the receiver: achieved reflection phase minus the
        // Tx -> cell -> Rx propagation phase.
        std::vector<double> path_deg(n), achieved(n), arrival(n);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
            {
                const Vec3 c = geom.cell_center(i, j);
                const std::size_t idx = i * cols + j;
                path_deg[idx] = k_deg * (path_length(sc.tx_pos, c) + path_length(sc.rx_pos, c));
                achieved[idx] = config[j] == CellState::On ? on : off;
                arrival[idx] = achieved[idx] - path_deg[idx];
            }

        const std::set<std::size_t> center_rows{(rows - 1) / 2, rows / 2};
        const std::set<std::size_t> center_cols{(cols - 1) / 2, cols / 2};
        double reference;
        if (center_rows.size() == 1 && center_cols.size() == 1)
            reference = arrival[*center_rows.begin() * cols + *center_cols.begin()];
        else
        {
            std::complex<double> mean = 0.0;
            for (auto i : center_rows)
                for (auto j : center_cols)
                    mean += std::polar(1.0, deg2rad(arrival[i * cols + j]));
            reference = rad2deg(std::arg(mean));
        }

        PhaseErrorReport rep;
        rep.rows = rows;
        rep.cols = cols;
        rep.freq_ghz = f_ghz;
        rep.ideal_deg.resize(n);
        rep.achieved_deg = achieved;
        rep.error_deg.resize(n);
        rep.row_rms_deg.assign(rows, 0.0);

        double sum_sq = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
        {
            double row_sq = 0.0;
            for (std::size_t j = 0; j < cols; ++j)
            {
                const std::size_t idx = i * cols + j;
                rep.ideal_deg[idx] = wrap_deg(path_deg[idx] + reference);
                const double e = wrap_deg(arrival[idx] - reference);
                rep.error_deg[idx] = e;
                row_sq += e * e;
                rep.max_abs_deg = std::max(rep.max_abs_deg, std::abs(e));
            }
            sum_sq += row_sq;
            rep.row_rms_deg[i] = std::sqrt(row_sq / static_cast<double>(cols));
        }
        rep.rms_deg = std::sqrt(sum_sq / static_cast<double>(n));
        return rep;
    }
}
