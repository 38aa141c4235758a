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

// Scenario files are INI-style text:
//
//   [geometry]   rows, cols, period_mm                              (required)
//   [unitcell]   model = default | table | ideal                    (optional)
//                table: off, on = "GHz magnitude degrees; ..."
//                ideal: phase_on_deg, phase_off_deg
//   [scenario]   tx_theta_deg, tx_distance_m, rx_theta_deg, rx_distance_m,
//                reflect_theta_deg, design_freq_ghz, band_ghz = "lo hi",
//                q_feed, q_elem                                     (required)
//   [sweep]      f_start, f_stop, n_points         (optional, band_ghz, 61 points)
//   [scan]       radius_m, angle_start, angle_stop, step            (optional)
//
// Lines starting with '#' or ';' are comments. Unknown sections or keys,
// duplicates, and missing required keys are rejected. Angles are polar angles
// from the surface normal in the xz-plane; positive values lie toward +x.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rissim/geometry.hpp"
#include "rissim/synthesis.hpp"
#include "rissim/unitcell.hpp"

namespace rissim
{
    struct UnitCellSpec
    {
        enum class Model
        {
            Default,
            Table,
            Ideal
        };

        Model model = Model::Default;
        std::vector<ResponseKnot> off; // Model::Table
        std::vector<ResponseKnot> on;
        double phase_on_deg = 0.0; // Model::Ideal
        double phase_off_deg = 0.0;

        bool operator==(const UnitCellSpec &) const = default;
    };

    struct SweepParams
    {
        double f_start_ghz = 23.5;
        double f_stop_ghz = 29.5;
        std::size_t n_points = 61;

        std::vector<double> freqs() const;
        bool operator==(const SweepParams &) const = default;
    };

    struct ScanParams
    {
        double radius_m = 0.2;
        double angle_start_deg = -60.0;
        double angle_stop_deg = 60.0;
        double step_deg = 0.5;

        std::vector<double> angles() const;
        bool operator==(const ScanParams &) const = default;
    };

    // File-level values, exactly as written. Defaults describe the 20 x 20,
    // 2.3 mm surface illuminated at 45 deg from 20 cm and observed on the
    // normal at 20 cm.
    struct ScenarioFile
    {
        std::size_t rows = 20;
        std::size_t cols = 20;
        double period_mm = 2.3;

        UnitCellSpec unitcell;

        double tx_theta_deg = 45.0;
        double tx_distance_m = 0.2;
        double rx_theta_deg = 0.0;
        double rx_distance_m = 0.2;
        double reflect_theta_deg = 0.0;
        double design_freq_ghz = 27.5;
        Band band_ghz = UnitCellResponse::default_band();
        double q_feed = cosine_exponent_for_gain(20.0);
        double q_elem = 1.0;

        SweepParams sweep;
        ScanParams scan;

        bool operator==(const ScenarioFile &) const = default;
    };

    struct LoadedScenario
    {
        ScenarioFile file;
        Scenario scenario;
        ArrayGeometry geometry;
        UnitCellResponse response;
    };

    // Syntax and schema checks only. Throws ParseError / ValidationError.
    ScenarioFile parse_scenario(std::istream &in, const std::string &source = "<input>");
    ScenarioFile parse_scenario(std::string_view text, const std::string &source = "<input>");

    // Semantic validation and conversion to model objects.
    LoadedScenario build_scenario(const ScenarioFile &file);

    LoadedScenario load_scenario(const std::filesystem::path &path);

    // Canonical text form; parse_scenario(format_scenario(f)) == f.
    std::string format_scenario(const ScenarioFile &file);
}
