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

#include "rissim/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "rissim/error.hpp"

namespace rissim
{
    std::string format_number(double v)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }

    void write_csv(std::ostream &out, const EnhancementReport &report)
    {
        out << "frequency_ghz,configured_db,all_off_db,enhancement_db\n";
        for (std::size_t n = 0; n < report.freqs_ghz.size(); ++n)
            out << format_number(report.freqs_ghz[n]) << ',' << format_number(report.configured_db[n]) << ','
                << format_number(report.all_off_db[n]) << ',' << format_number(report.enhancement_db[n]) << '\n';
    }

    void write_csv(std::ostream &out, const PatternScan &scan)
    {
        out << "angle_deg,frequency_ghz,x_m,y_m,z_m,field_re,field_im,power_db\n";
        for (std::size_t n = 0; n < scan.samples.size(); ++n)
        {
            const auto &s = scan.samples[n];
            out << format_number(scan.angles_deg[n]) << ',' << format_number(s.freq_ghz) << ','
                << format_number(s.observation.x()) << ',' << format_number(s.observation.y()) << ','
                << format_number(s.observation.z()) << ',' << format_number(s.field.real()) << ','
                << format_number(s.field.imag()) << ',' << format_number(s.power_db) << '\n';
        }
    }

    void write_csv(std::ostream &out, const PhaseErrorReport &report)
    {
        out << "row,col,frequency_ghz,ideal_phase_deg,achieved_phase_deg,error_deg\n";
        for (std::size_t i = 0; i < report.rows; ++i)
            for (std::size_t j = 0; j < report.cols; ++j)
            {
                const std::size_t idx = i * report.cols + j;
                out << i << ',' << j << ',' << format_number(report.freq_ghz) << ','
                    << format_number(report.ideal_deg[idx]) << ',' << format_number(report.achieved_deg[idx]) << ','
                    << format_number(report.error_deg[idx]) << '\n';
            }
    }

    namespace
    {
        template <typename Report>
        void export_to(const Report &report, const std::filesystem::path &path)
        {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw IoError(path.string(), "cannot open for writing");
            write_csv(f, report);
            f.flush();
            if (!f)
                throw IoError(path.string(), "write failed");
        }
    }

    void export_csv(const EnhancementReport &report, const std::filesystem::path &path) { export_to(report, path); }
    void export_csv(const PatternScan &scan, const std::filesystem::path &path) { export_to(scan, path); }
    void export_csv(const PhaseErrorReport &report, const std::filesystem::path &path) { export_to(report, path); }
}
