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

// Discrete array summation of the field scattered by the surface.
//
// Every cell is illuminated by a spherical wave from the feed and re-radiates a
// spherical wave weighted by its reflection coefficient:
//
//   E(obs) = sum_cells  A_feed(cell) * Gamma(cell) * cos(theta_obs)^q_elem * exp(-j k r_obs) / r_obs
//   A_feed(cell) = cos(theta_tx)^q_feed * exp(-j k r_tx) / r_tx
//
// theta_tx is measured from the feed boresight (feed aimed at the array
// center), theta_obs from the surface normal. Time convention exp(+j w t).
// Field units are arbitrary; only ratios (dB differences) carry meaning.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rissim/geometry.hpp"
#include "rissim/synthesis.hpp"
#include "rissim/unitcell.hpp"

namespace rissim
{
    struct FieldSample
    {
        double freq_ghz = 0.0;
        Vec3 observation;
        std::complex<double> field;
        double power_db = 0.0; // 10 log10 |field|^2, relative
    };

    FieldSample make_sample(double f_ghz, const Vec3 &obs, std::complex<double> field);

    // Observation points on a circle of constant radius in the xz-plane.
    struct PatternScan
    {
        double freq_ghz = 0.0;
        double radius_m = 0.0;
        std::vector<double> angles_deg; // from +z, positive toward +x
        std::vector<FieldSample> samples;
    };

    // Real feed amplitude cos^q / r at `cell` and the feed-to-cell distance r.
    struct FeedTerm
    {
        double amplitude = 0.0;
        double distance_m = 0.0;
    };

    FeedTerm feed_amplitude(const Scenario &sc, const Vec3 &cell, const Vec3 &feed_aim = Vec3{});

    // Complex amplitude of the feed wave arriving at `cell`. The feed boresight
    // points from tx_pos toward `feed_aim`.
    std::complex<double> incident_field(const Scenario &sc, const Vec3 &cell, double f_ghz,
                                        const Vec3 &feed_aim = Vec3{});

    // Core summation over an explicit list of cells with one reflection
    // coefficient each, accumulated in list order.
    std::complex<double> sum_scattered(const Scenario &sc, std::span<const Vec3> cells,
                                       std::span<const std::complex<double>> gamma,
                                       const Vec3 &feed_aim, const Vec3 &obs, double f_ghz);

    FieldSample scattered_field(const Scenario &sc, const ArrayGeometry &geom,
                                const ColumnConfig &config, const UnitCellResponse &resp,
                                const Vec3 &obs, double f_ghz);

    PatternScan pattern_scan(const Scenario &sc, const ArrayGeometry &geom,
                             const ColumnConfig &config, const UnitCellResponse &resp,
                             double f_ghz, double radius_m, std::span<const double> angles_deg);

    std::vector<FieldSample> frequency_sweep(const Scenario &sc, const ArrayGeometry &geom,
                                             const ColumnConfig &config,
                                             const UnitCellResponse &resp,
                                             std::span<const double> freqs_ghz, const Vec3 &obs);

    // n evenly spaced values; the end points are reproduced exactly.
    std::vector<double> linspace(double start, double stop, std::size_t n);

    // start, start + step, ... up to and including stop (within step * 1e-9).
    std::vector<double> angle_grid(double start_deg, double stop_deg, double step_deg);
}
