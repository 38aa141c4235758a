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

#include "rissim/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rissim/error.hpp"

namespace rissim
{
    namespace
    {
        double clamped_cos(double c)
        {
            return std::clamp(c, 0.0, 1.0);
        }

        long double distance_ld(const Vec3 &a, const Vec3 &b)
        {
            const long double dx = static_cast<long double>(a.x()) - b.x();
            const long double dy = static_cast<long double>(a.y()) - b.y();
            const long double dz = static_cast<long double>(a.z()) - b.z();
            return std::sqrt(dx * dx + dy * dy + dz * dz);
        }

        // Reflection coefficient of every cell, row-major.
        std::vector<std::complex<double>> cell_gammas(const ArrayGeometry &geom, const ColumnConfig &config,
                                                      const UnitCellResponse &resp, double f_ghz)
        {
            if (config.size() != geom.cols())
                throw ValidationError("config", "has " + std::to_string(config.size()) + " columns, geometry has " +
                                                    std::to_string(geom.cols()));
            const auto g_off = resp.reflection(f_ghz, CellState::Off);
            const auto g_on = resp.reflection(f_ghz, CellState::On);

            std::vector<std::complex<double>> out;
            out.reserve(geom.size());
            for (std::size_t i = 0; i < geom.rows(); ++i)
                for (std::size_t j = 0; j < geom.cols(); ++j)
                    out.push_back(config[j] == CellState::On ? g_on : g_off);
            return out;
        }

        void check_observation(const Vec3 &obs)
        {
            if (!(obs.z() > 0.0))
                throw ValidationError("observation", "must lie in front of the surface (z > 0)");
        }
    }

    FeedTerm feed_amplitude(const Scenario &sc, const Vec3 &cell, const Vec3 &feed_aim)
    {
        const Vec3 to_cell = cell - sc.tx_pos;
        const double r = to_cell.norm();
        if (r == 0.0)
            throw GeometryError("cell coincides with the transmitter");

        const Vec3 boresight = feed_aim - sc.tx_pos;
        const double rb = boresight.norm();
        if (rb == 0.0)
            throw GeometryError("feed aim point coincides with the transmitter");

        const double c = clamped_cos(to_cell.dot(boresight) / (r * rb));
        return {std::pow(c, sc.q_feed) / r, r};
    }

    FieldSample make_sample(double f_ghz, const Vec3 &obs, std::complex<double> field)
    {
        return {f_ghz, obs, field, 10.0 * std::log10(std::norm(field))};
    }

    std::complex<double> incident_field(const Scenario &sc, const Vec3 &cell, double f_ghz, const Vec3 &feed_aim)
    {
        const auto [amplitude, r] = feed_amplitude(sc, cell, feed_aim);
        return std::polar(amplitude, -wavenumber(f_ghz) * r);
    }

    std::complex<double> sum_scattered(const Scenario &sc, std::span<const Vec3> cells,
                                       std::span<const std::complex<double>> gamma, const Vec3 &feed_aim,
                                       const Vec3 &obs, double f_ghz)
    {
        if (cells.size() != gamma.size())
            throw ValidationError("gamma", "one reflection coefficient per cell required");

        // Path lengths, phases and the running sum in extended precision.
        const long double k = 2.0L * std::numbers::pi_v<long double> * f_ghz * 1e9L / speed_of_light;
        std::complex<long double> total = 0.0L;
        for (std::size_t n = 0; n < cells.size(); ++n)
        {
            const Vec3 out = obs - cells[n];
            const double r_obs = out.norm();
            if (r_obs == 0.0)
                throw GeometryError("observation point coincides with a cell center");

            const double element = std::pow(clamped_cos(out.z() / r_obs), sc.q_elem);
            const double amplitude = feed_amplitude(sc, cells[n], feed_aim).amplitude * element / r_obs;
            const long double path = distance_ld(sc.tx_pos, cells[n]) + distance_ld(obs, cells[n]);
            const auto g = std::complex<long double>(gamma[n].real(), gamma[n].imag());
            total += std::polar(static_cast<long double>(amplitude), -k * path) * g;
        }
        return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
    }

    FieldSample scattered_field(const Scenario &sc, const ArrayGeometry &geom, const ColumnConfig &config,
                                const UnitCellResponse &resp, const Vec3 &obs, double f_ghz)
    {
        validate(sc);
        check_observation(obs);
        const auto gamma = cell_gammas(geom, config, resp, f_ghz);
        const auto cells = cell_centers(geom);
        return make_sample(f_ghz, obs, sum_scattered(sc, cells, gamma, Vec3{}, obs, f_ghz));
    }

    PatternScan pattern_scan(const Scenario &sc, const ArrayGeometry &geom, const ColumnConfig &config,
                             const UnitCellResponse &resp, double f_ghz, double radius_m,
                             std::span<const double> angles_deg)
    {
        validate(sc);
        if (!(radius_m > 0.0) || !std::isfinite(radius_m))
            throw ValidationError("radius", "must be positive");
        for (std::size_t n = 1; n < angles_deg.size(); ++n)
            if (!(angles_deg[n] > angles_deg[n - 1]))
                throw ValidationError("angle_grid", "angles must be strictly increasing");

        PatternScan scan;
        scan.freq_ghz = f_ghz;
        scan.radius_m = radius_m;
        scan.angles_deg.assign(angles_deg.begin(), angles_deg.end());
        if (angles_deg.empty())
            return scan;

        const auto gamma = cell_gammas(geom, config, resp, f_ghz);
        const auto cells = cell_centers(geom);
        scan.samples.reserve(angles_deg.size());
        for (double a : angles_deg)
        {
            const Vec3 obs = radius_m * unit_direction(a, 0.0);
            check_observation(obs);
            scan.samples.push_back(make_sample(f_ghz, obs, sum_scattered(sc, cells, gamma, Vec3{}, obs, f_ghz)));
        }
        return scan;
    }

    std::vector<FieldSample> frequency_sweep(const Scenario &sc, const ArrayGeometry &geom,
                                             const ColumnConfig &config, const UnitCellResponse &resp,
                                             std::span<const double> freqs_ghz, const Vec3 &obs)
    {
        validate(sc);
        check_observation(obs);
        const auto cells = cell_centers(geom);
        std::vector<FieldSample> out;
        out.reserve(freqs_ghz.size());
        for (double f : freqs_ghz)
        {
            const auto gamma = cell_gammas(geom, config, resp, f);
            out.push_back(make_sample(f, obs, sum_scattered(sc, cells, gamma, Vec3{}, obs, f)));
        }
        return out;
    }

    std::vector<double> linspace(double start, double stop, std::size_t n)
    {
        std::vector<double> out(n);
        if (n == 1)
            out[0] = start;
        for (std::size_t i = 0; n > 1 && i < n; ++i)
            out[i] = std::lerp(start, stop, static_cast<double>(i) / static_cast<double>(n - 1));
        return out;
    }

    std::vector<double> angle_grid(double start_deg, double stop_deg, double step_deg)
    {
        if (!(step_deg > 0.0) || !std::isfinite(step_deg))
            throw ValidationError("step", "must be positive");
        if (!(stop_deg >= start_deg))
            throw ValidationError("angle_stop", "must not be below angle_start");
        const auto n = static_cast<std::size_t>(std::floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1;
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = start_deg + static_cast<double>(i) * step_deg;
        return out;
    }
}
