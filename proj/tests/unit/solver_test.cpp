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


#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "rissim/error.hpp"
#include "rissim/solver.hpp"

using namespace rissim;

namespace
{
    Scenario boresight(double d)
    {
        Scenario sc;
        sc.tx_pos = {0, 0, d};
        sc.rx_pos = {0, 0, d};
        return sc;
    }

    oracle::P3 p3(const Vec3 &v) { return {v.x(), v.y(), v.z()}; }
}

TEST(Solver, SingleCellTwoWayPath)
{
    // |E| = 1 / (0.2 * 0.2); phase = -k * 0.4 wrapped, 40-digit reference.
    const Scenario sc = boresight(0.2);
    const ArrayGeometry g(1, 1, 2.3e-3);
    const auto s = scattered_field(sc, g, ColumnConfig::from_string("0"), UnitCellResponse::ideal(0, 0),
                                   sc.rx_pos, 27.5);
    EXPECT_NEAR(std::abs(s.field), 25.0, 1e-12);
    EXPECT_NEAR(rad2deg(std::arg(s.field)), 110.86183015317884, 1e-8);
    EXPECT_NEAR(s.power_db, 20.0 * std::log10(25.0), 1e-12);
}

TEST(Solver, TwoByTwoMatchesBruteForce)
{
    Scenario sc;
    sc.tx_pos = 0.2 * unit_direction(45.0);
    sc.rx_pos = 0.2 * unit_direction(0.0);
    const ArrayGeometry g(2, 2, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = ColumnConfig::from_string("10");
    const Vec3 obs = 0.3 * unit_direction(-12.0);
    const double f = 26.1;

    oracle::NaiveInput in;
    in.tx = p3(sc.tx_pos);
    in.obs = p3(obs);
    in.f_ghz = f;
    in.qf = sc.q_feed;
    in.qe = sc.q_elem;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
        {
            in.cells.push_back(oracle::cell(i, j, 2, 2, 2.3e-3));
            const auto gm = r.reflection(f, cfg[j]);
            in.gamma.push_back({gm.real(), gm.imag()});
        }
    const auto want = oracle::naive_field(in);
    const auto got = scattered_field(sc, g, cfg, r, obs, f).field;
    const double scale = std::hypot(want.re, want.im);
    EXPECT_NEAR(got.real(), want.re, 1e-12 * scale);
    EXPECT_NEAR(got.imag(), want.im, 1e-12 * scale);
}

TEST(Solver, IncidentFieldOneWavelengthAway)
{
    const double lambda = wavelength_m(27.5);
    const auto e = incident_field(boresight(lambda), {0, 0, 0}, 27.5);
    EXPECT_NEAR(std::abs(e), 1.0 / lambda, 1e-9);
    EXPECT_NEAR(std::sin(std::arg(e)), 0.0, 1e-9);
    EXPECT_GT(e.real(), 0.0);
}

TEST(Solver, IncidentAmplitudeMirrorSymmetry)
{
    const Scenario sc = boresight(0.2);
    const double a = std::abs(incident_field(sc, {0.01, 0.004, 0}, 27.5));
    EXPECT_NEAR(std::abs(incident_field(sc, {-0.01, 0.004, 0}, 27.5)), a, 1e-12 * a);
    EXPECT_NEAR(std::abs(incident_field(sc, {0.01, -0.004, 0}, 27.5)), a, 1e-12 * a);
    EXPECT_NEAR(std::abs(incident_field(sc, {0.004, 0.01, 0}, 27.5)), a, 1e-12 * a);
}

TEST(Solver, IncidentTaperRatios)
{
    // center / cell amplitude for a q = 24.5 feed at 0.2 m, 45 deg, 40-digit references
    Scenario sc;
    sc.tx_pos = 0.2 * unit_direction(45.0);
    const double c = std::abs(incident_field(sc, {0, 0, 0}, 27.5));
    const std::vector<std::pair<Vec3, double>> cases{
        {{-21.85e-3, -21.85e-3, 0}, 1.309458310801058},
        {{21.85e-3, -21.85e-3, 0}, 1.2031102261748592},
        {{-21.85e-3, 0, 0}, 1.1500579608859775},
        {{21.85e-3, 0, 0}, 1.0086900658412691},
    };
    for (const auto &[cell, ratio] : cases)
        EXPECT_NEAR(c / std::abs(incident_field(sc, cell, 27.5)), ratio, 1e-9);
}

TEST(Solver, UniformSurfaceReflectsSpecularly)
{
    const Scenario sc = boresight(2.0);
    const ArrayGeometry g(20, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = uniform_config(g, CellState::Off);
    const double on_axis = scattered_field(sc, g, cfg, r, {0, 0, 2.0}, 27.5).power_db;
    for (double t : {10.0, 20.0, 40.0})
        EXPECT_GT(on_axis, scattered_field(sc, g, cfg, r, 2.0 * unit_direction(t), 27.5).power_db + 3.0) << t;
}

TEST(Solver, ScalingGammaScalesPower)
{
    Scenario sc;
    sc.tx_pos = 0.2 * unit_direction(45.0);
    sc.rx_pos = 0.2 * unit_direction(0.0);
    const ArrayGeometry g(20, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = synthesize(sc, g, r);
    const double full = scattered_field(sc, g, cfg, r, sc.rx_pos, 25.0).power_db;
    const double half = scattered_field(sc, g, cfg, r.scaled(0.5), sc.rx_pos, 25.0).power_db;
    EXPECT_NEAR(half - full, 20.0 * std::log10(0.5), 1e-9);
}

TEST(Solver, SweepPointEqualsSingleEvaluation)
{
    Scenario sc;
    sc.tx_pos = 0.2 * unit_direction(45.0);
    sc.rx_pos = 0.2 * unit_direction(0.0);
    const ArrayGeometry g(4, 6, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = ColumnConfig::from_string("011001");
    const std::vector<double> f{24.0, 27.5, 29.5};
    const auto sweep = frequency_sweep(sc, g, cfg, r, f, sc.rx_pos);
    ASSERT_EQ(sweep.size(), 3u);
    for (std::size_t n = 0; n < f.size(); ++n)
    {
        EXPECT_EQ(sweep[n].freq_ghz, f[n]);
        EXPECT_EQ(sweep[n].field, scattered_field(sc, g, cfg, r, sc.rx_pos, f[n]).field);
    }
}

TEST(Solver, PatternScanPlacesObserversOnArc)
{
    const Scenario sc = boresight(0.5);
    const ArrayGeometry g(2, 2, 2.3e-3);
    const std::vector<double> a{-30.0, 0.0, 30.0};
    const auto scan = pattern_scan(sc, g, ColumnConfig::from_string("00"), UnitCellResponse::default_model(),
                                   27.5, 0.4, a);
    ASSERT_EQ(scan.samples.size(), 3u);
    EXPECT_NEAR(scan.samples[2].observation.x(), 0.2, 1e-15);
    EXPECT_NEAR(scan.samples[0].observation.x(), -0.2, 1e-15);
    EXPECT_EQ(scan.samples[1].observation.z(), 0.4);
    EXPECT_NEAR(scan.samples[0].power_db, scan.samples[2].power_db, 1e-9);

    EXPECT_TRUE(pattern_scan(sc, g, ColumnConfig::from_string("00"), UnitCellResponse::default_model(), 27.5,
                             0.4, std::vector<double>{})
                    .samples.empty());
}

TEST(Solver, RejectsDegenerateInput)
{
    const Scenario sc = boresight(0.2);
    const ArrayGeometry g(1, 1, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = ColumnConfig::from_string("0");
    EXPECT_THROW(incident_field(sc, {0, 0, 0.2}, 27.5), GeometryError);
    EXPECT_THROW(scattered_field(sc, g, cfg, r, {0.1, 0, 0}, 27.5), ValidationError);
    EXPECT_THROW(scattered_field(sc, g, ColumnConfig::from_string("01"), r, sc.rx_pos, 27.5), ValidationError);
    EXPECT_THROW(scattered_field(sc, g, cfg, r, sc.rx_pos, 31.0), BandError);
    EXPECT_THROW(pattern_scan(sc, g, cfg, r, 27.5, 0.0, std::vector<double>{0.0}), ValidationError);
    EXPECT_THROW(pattern_scan(sc, g, cfg, r, 27.5, 0.2, std::vector<double>{1.0, 1.0}), ValidationError);
    EXPECT_THROW(pattern_scan(sc, g, cfg, r, 27.5, 0.2, std::vector<double>{95.0}), ValidationError);
}

TEST(Solver, Linspace)
{
    const auto v = linspace(23.5, 29.5, 61);
    ASSERT_EQ(v.size(), 61u);
    EXPECT_EQ(v.front(), 23.5);
    EXPECT_EQ(v.back(), 29.5);
    EXPECT_NEAR(v[40], 27.5, 1e-12);
    EXPECT_EQ(linspace(3.0, 4.0, 1), std::vector<double>{3.0});
    EXPECT_TRUE(linspace(3.0, 4.0, 0).empty());
}

TEST(Solver, AngleGrid)
{
    const auto a = angle_grid(-60, 60, 0.5);
    ASSERT_EQ(a.size(), 241u);
    EXPECT_EQ(a.front(), -60.0);
    EXPECT_EQ(a.back(), 60.0);
    EXPECT_EQ(a[120], 0.0);
    EXPECT_EQ(angle_grid(5, 5, 1).size(), 1u);
    EXPECT_EQ(angle_grid(0, 1, 0.3).size(), 4u);
    EXPECT_THROW(angle_grid(0, 1, 0), ValidationError);
    EXPECT_THROW(angle_grid(1, 0, 0.5), ValidationError);
}
