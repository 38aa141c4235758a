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

// CSV export of reports. Header row carries units in the column names, LF line
// endings, numbers in shortest round-trip decimal form independent of locale.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rissim/analysis.hpp"
#include "rissim/solver.hpp"

namespace rissim
{
    std::string format_number(double v);

    void write_csv(std::ostream &out, const EnhancementReport &report);
    void write_csv(std::ostream &out, const PatternScan &scan);
    void write_csv(std::ostream &out, const PhaseErrorReport &report);

    void export_csv(const EnhancementReport &report, const std::filesystem::path &path);
    void export_csv(const PatternScan &scan, const std::filesystem::path &path);
    void export_csv(const PhaseErrorReport &report, const std::filesystem::path &path);
}
