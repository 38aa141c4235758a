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
#include <vector>

#include "rissim/analysis.hpp"
#include "rissim/error.hpp"

using namespace rissim;

namespace
{
    Scenario setup45()
    {
        Scenario sc;
        sc.tx_pos = 0.2 * unit_direction(45.0);
        sc.rx_pos = 0.2 * unit_direction(0.0);
        return sc;
    }

    PatternScan fake_scan(std::vector<double> angles, std::vector<double> power_db)
    {
        PatternScan s;
        s.freq_ghz = 27.5;
        s.radius_m = 1.0;
        s.angles_deg = angles;
        for (std::size_t n = 0; n < angles.size(); ++n)
        {
            const double amp = std::pow(10.0, power_db[n] / 20.0);
            s.samples.push_back(make_sample(27.5, unit_direction(angles[n]), {amp, 0.0}));
        }
        return s;
    }
}

TEST(Analysis, AllOffHasZeroEnhancement)
{
    const ArrayGeometry g(20, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const std::vector<double> f{23.5, 26.0, 29.5};
    const auto rep = enhancement_db(setup45(), g, r, uniform_config(g, CellState::Off), f);
    ASSERT_EQ(rep.enhancement_db.size(), 3u);
    for (double e : rep.enhancement_db)
        EXPECT_EQ(e, 0.0);
    EXPECT_EQ(rep.min_enhancement_db, 0.0);
}

TEST(Analysis, EnhancementIsDifferenceOfPowers)
{
    const ArrayGeometry g(20, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = synthesize(setup45(), g, r);
    const auto f = linspace(23.5, 29.5, 13);
    const auto rep = enhancement_db(setup45(), g, r, cfg, f);
    double lo = 1e9;
    for (std::size_t n = 0; n < f.size(); ++n)
    {
        EXPECT_EQ(rep.enhancement_db[n], rep.configured_db[n] - rep.all_off_db[n]);
        lo = std::min(lo, rep.enhancement_db[n]);
    }
    EXPECT_EQ(rep.min_enhancement_db, lo);
    EXPECT_GT(rep.enhancement_db[8], 10.0); // 27.5 GHz
}

TEST(Analysis, EnhancementInvariantToGammaScale)
{
    const ArrayGeometry g(20, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = synthesize(setup45(), g, r);
    const std::vector<double> f{24.0, 28.0};
    const auto a = enhancement_db(setup45(), g, r, cfg, f);
    const auto b = enhancement_db(setup45(), g, r.scaled(0.3), cfg, f);
    for (std::size_t n = 0; n < f.size(); ++n)
        EXPECT_NEAR(a.enhancement_db[n], b.enhancement_db[n], 1e-9);
}

TEST(Analysis, EmptyFrequencyListGivesNaNMinimum)
{
    const ArrayGeometry g(2, 2, 2.3e-3);
    const auto rep = enhancement_db(setup45(), g, UnitCellResponse::default_model(),
                                    ColumnConfig::from_string("01"), std::vector<double>{});
    EXPECT_TRUE(rep.enhancement_db.empty());
    EXPECT_TRUE(std::isnan(rep.min_enhancement_db));
}

TEST(Analysis, BeamDirectionPicksMaximum)
{
    EXPECT_EQ(beam_direction(fake_scan({-10, 0, 10, 20}, {-3, -1, 2, 1})), 10.0);
    EXPECT_EQ(beam_direction(fake_scan({7}, {-40})), 7.0);
}

TEST(Analysis, BeamDirectionTiesResolveTowardNormal)
{
    EXPECT_EQ(beam_direction(fake_scan({-20, -5, 5, 20}, {0, 3, 3, 0})), -5.0);
    EXPECT_EQ(beam_direction(fake_scan({-20, -5, 0, 5}, {0, 3, 3, 3})), 0.0);
}

TEST(Analysis, BeamDirectionInvariantToOffset)
{
    const std::vector<double> a{-30, -15, 0, 15, 30};
    const std::vector<double> p{-8, -2, -4, -9, -20};
    std::vector<double> shifted;
    for (double v : p)
        shifted.push_back(v + 37.0);
    EXPECT_EQ(beam_direction(fake_scan(a, p)), beam_direction(fake_scan(a, shifted)));
}

TEST(Analysis, BeamDirectionRejectsEmptyScan)
{
    try
    {
        beam_direction(PatternScan{});
        FAIL();
    }
    catch (const ValidationError &e)
    {
        EXPECT_EQ(e.field(), "scan");
    }
}

TEST(Analysis, SynthesizedBeamPointsAtReceiver)
{
    const ArrayGeometry g(20, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto cfg = synthesize(setup45(), g, r);
    const auto angles = angle_grid(-60, 60, 0.5);
    const auto scan = pattern_scan(setup45(), g, cfg, r, 27.5, 0.2, angles);
    EXPECT_LE(std::abs(beam_direction(scan)), 2.0);
}

TEST(Analysis, SingleRowPhaseError)
{
    const ArrayGeometry g(1, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto rep = phase_error_report(setup45(), g, r, synthesize(setup45(), g, r), 27.5);
    EXPECT_EQ(rep.rows, 1u);
    EXPECT_EQ(rep.error_deg.size(), 20u);
    EXPECT_EQ(rep.row_rms_deg.size(), 1u);
    EXPECT_NEAR(rep.row_rms_deg[0], rep.rms_deg, 1e-12);
    EXPECT_LE(rep.max_abs_deg, 180.0);
}

TEST(Analysis, SingleCellHasNoError)
{
    const ArrayGeometry g(1, 1, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto rep = phase_error_report(setup45(), g, r, ColumnConfig::from_string("1"), 27.5);
    ASSERT_EQ(rep.error_deg.size(), 1u);
    EXPECT_EQ(rep.error_deg[0], 0.0);
    EXPECT_EQ(rep.rms_deg, 0.0);
    EXPECT_EQ(rep.achieved_deg[0], state_phase(r, 27.5, CellState::On));
}

TEST(Analysis, ErrorIsAchievedMinusIdeal)
{
    const ArrayGeometry g(6, 5, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto rep = phase_error_report(setup45(), g, r, ColumnConfig::from_string("01101"), 26.0);
    for (std::size_t n = 0; n < g.size(); ++n)
        EXPECT_NEAR(std::remainder(rep.error_deg[n] - (rep.achieved_deg[n] - rep.ideal_deg[n]), 360.0), 0.0, 1e-9);
}

TEST(Analysis, EdgeRowsCarryMoreErrorAndMirror)
{
    const ArrayGeometry g(20, 20, 2.3e-3);
    const auto r = UnitCellResponse::default_model();
    const auto rep = phase_error_report(setup45(), g, r, synthesize(setup45(), g, r), 27.5);
    const double center = 0.5 * (rep.row_rms_deg[9] + rep.row_rms_deg[10]);
    const double edge = 0.5 * (rep.row_rms_deg[0] + rep.row_rms_deg[19]);
    EXPECT_GT(edge, center);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 20; ++j)
            EXPECT_EQ(rep.error(i, j), rep.error(19 - i, j)) << i << "," << j;
}

TEST(Analysis, PhaseErrorRejectsMismatchedConfig)
{
    const ArrayGeometry g(2, 3, 2.3e-3);
    EXPECT_THROW(phase_error_report(setup45(), g, UnitCellResponse::default_model(), ColumnConfig::from_string("01"),
                                    27.5),
                 ValidationError);
}
