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

#include "rissim/error.hpp"
#include "rissim/unitcell.hpp"

using namespace rissim;

namespace
{
    const UnitCellResponse def = UnitCellResponse::default_model();
}

TEST(UnitCell, DefaultMagnitudesAtBandEdges)
{
    EXPECT_EQ(def.magnitude(23.5, CellState::Off), 0.94);
    EXPECT_EQ(def.magnitude(29.5, CellState::Off), 0.88);
    EXPECT_EQ(def.magnitude(23.5, CellState::On), 0.57);
    EXPECT_EQ(def.magnitude(29.5, CellState::On), 0.74);
    EXPECT_NEAR(std::abs(def.reflection(29.5, CellState::On)), 0.74, 1e-15);
}

TEST(UnitCell, MidbandMagnitudeIsLinear)
{
    EXPECT_NEAR(def.magnitude(26.5, CellState::Off), 0.91, 1e-15);
    EXPECT_NEAR(def.magnitude(26.5, CellState::On), 0.655, 1e-15);
}

TEST(UnitCell, PhaseContrastAtBandEdges)
{
    EXPECT_EQ(phase_contrast(def, 23.5), 215.0);
    EXPECT_EQ(phase_contrast(def, 29.5), 160.0);
    EXPECT_NEAR(phase_contrast(def, 26.5), 187.5, 1e-12);
}

TEST(UnitCell, ContrastDecreasesAcrossBand)
{
    double prev = 1e9;
    for (int n = 0; n <= 60; ++n)
    {
        const double f = 23.5 + 0.1 * n > 29.5 ? 29.5 : 23.5 + 0.1 * n;
        const double c = phase_contrast(def, f);
        EXPECT_LT(c, prev) << f;
        prev = c;
    }
}

TEST(UnitCell, StatePhaseIsWrapped)
{
    // On lags Off by 215 deg at the lower edge, i.e. +145 deg wrapped.
    EXPECT_EQ(state_phase(def, 23.5, CellState::On), 145.0);
    EXPECT_EQ(state_phase(def, 23.5, CellState::Off), 0.0);
    EXPECT_EQ(state_phase(def, 29.5, CellState::On), -160.0);
}

TEST(UnitCell, OutOfBandIsAnError)
{
    try
    {
        def.reflection(30.0, CellState::On);
        FAIL() << "expected BandError";
    }
    catch (const BandError &e)
    {
        EXPECT_EQ(e.frequency(), 30.0);
        EXPECT_EQ(e.lower(), 23.5);
        EXPECT_EQ(e.upper(), 29.5);
        EXPECT_NE(std::string(e.what()).find("30"), std::string::npos);
    }
    EXPECT_THROW(def.magnitude(23.4999, CellState::Off), BandError);
}

TEST(UnitCell, IdealCellIsLosslessAndFlat)
{
    const auto r = UnitCellResponse::ideal(-90.0, 90.0);
    for (double f : {23.5, 25.0, 27.5, 29.5})
    {
        EXPECT_EQ(r.magnitude(f, CellState::On), 1.0);
        EXPECT_EQ(r.magnitude(f, CellState::Off), 1.0);
        EXPECT_EQ(state_phase(r, f, CellState::On), -90.0);
        EXPECT_EQ(state_phase(r, f, CellState::Off), 90.0);
        EXPECT_EQ(phase_contrast(r, f), 180.0);
    }
    EXPECT_EQ(phase_contrast(UnitCellResponse::ideal(0.0, 180.0), 24.0), 180.0);
    EXPECT_EQ(phase_contrast(UnitCellResponse::ideal(0.0, 0.0), 24.0), 0.0);
}

TEST(UnitCell, TableKnotsAreReproducedExactly)
{
    const UnitCellResponse r({{24.0, 0.9, 10.0}, {25.1, 0.8, -30.0}, {28.7, 0.7, -200.0}},
                             {{24.0, 0.3, 100.0}, {29.0, 0.95, 50.0}}, {23.5, 29.5});
    for (const auto &k : r.table(CellState::Off))
    {
        EXPECT_EQ(r.magnitude(k.freq_ghz, CellState::Off), k.magnitude);
        EXPECT_EQ(r.unwrapped_phase_deg(k.freq_ghz, CellState::Off), k.phase_deg);
    }
    // held constant between outermost knot and band edge
    EXPECT_EQ(r.magnitude(23.5, CellState::Off), 0.9);
    EXPECT_EQ(r.magnitude(29.5, CellState::On), 0.95);
    // phase interpolated on unwrapped values
    EXPECT_NEAR(r.unwrapped_phase_deg(26.9, CellState::Off), -115.0, 1e-9);
}

TEST(UnitCell, RejectsInvalidTables)
{
    const Band b{23.5, 29.5};
    EXPECT_THROW(UnitCellResponse({{24, 1.01, 0}}, {{24, 0.5, 0}}, b), ValidationError);
    EXPECT_THROW(UnitCellResponse({{24, 0.0, 0}}, {{24, 0.5, 0}}, b), ValidationError);
    EXPECT_THROW(UnitCellResponse({{25, 0.5, 0}, {24, 0.5, 0}}, {{24, 0.5, 0}}, b), ValidationError);
    EXPECT_THROW(UnitCellResponse({{24, 0.5, 0}, {24, 0.5, 0}}, {{24, 0.5, 0}}, b), ValidationError);
    EXPECT_THROW(UnitCellResponse({{30, 0.5, 0}}, {{24, 0.5, 0}}, b), ValidationError);
    EXPECT_THROW(UnitCellResponse({}, {{24, 0.5, 0}}, b), ValidationError);
    EXPECT_THROW(UnitCellResponse({{24, 0.5, 0}}, {{24, 0.5, 0}}, {29.5, 23.5}), ValidationError);

    try
    {
        UnitCellResponse({{24, 0.5, 0}}, {{24, 1.5, 0}}, b);
        FAIL();
    }
    catch (const ValidationError &e)
    {
        EXPECT_EQ(e.field(), "unitcell.on");
    }
}

TEST(UnitCell, ScalingKeepsMagnitudeBound)
{
    const auto half = def.scaled(0.5);
    EXPECT_NEAR(half.magnitude(23.5, CellState::Off), 0.47, 1e-15);
    EXPECT_EQ(half.unwrapped_phase_deg(25.0, CellState::On), def.unwrapped_phase_deg(25.0, CellState::On));
    EXPECT_THROW(def.scaled(1.2), ValidationError);
    EXPECT_THROW(def.scaled(0.0), ValidationError);
}
