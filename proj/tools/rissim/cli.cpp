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

#include "rissim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rissim/analysis.hpp"
#include "rissim/csv.hpp"
#include "rissim/error.hpp"
#include "rissim/layout.hpp"
#include "rissim/scenario_file.hpp"
#include "rissim/synthesis.hpp"

namespace rissim::cli
{
    namespace
    {
        constexpr const char *usage_line =
            "usage: rissim <synthesize|sweep|scan|phase-error|layout> --scenario <path> [--out <path>]";

        struct Options
        {
            std::string scenario;
            std::string out;
            std::string bits;
            std::optional<double> freq_ghz;
            std::vector<std::string> dims;
        };

        std::string one_line(std::string s)
        {
            std::replace(s.begin(), s.end(), '\n', ' ');
            return s;
        }

        ColumnConfig configuration(const LoadedScenario &ls, const Options &o)
        {
            if (o.bits.empty())
                return synthesize(ls.scenario, ls.geometry, ls.response);
            auto cfg = ColumnConfig::from_string(o.bits);
            if (cfg.size() != ls.geometry.cols())
                throw ValidationError("bits", "expected " + std::to_string(ls.geometry.cols()) + " columns");
            return cfg;
        }

        CellDims parse_dims(const std::vector<std::string> &items)
        {
            CellDims d;
            const std::map<std::string, double CellDims::*> fields = {
                {"main_length_mm", &CellDims::main_length_mm}, {"main_width_mm", &CellDims::main_width_mm},
                {"leg_width_mm", &CellDims::leg_width_mm},     {"leg_length_mm", &CellDims::leg_length_mm},
                {"switch_gap_mm", &CellDims::switch_gap_mm},   {"bias_width_mm", &CellDims::bias_width_mm},
            };
            for (const auto &item : items)
            {
                const auto eq = item.find('=');
                const auto name = item.substr(0, eq);
                const auto it = fields.find(name);
                if (eq == std::string::npos || it == fields.end())
                    throw ValidationError("dim", "expected <name>=<mm>, got '" + item + "'");
                double v = 0.0;
                const auto *b = item.data() + eq + 1, *e = item.data() + item.size();
                const auto res = std::from_chars(b, e, v);
                if (res.ec != std::errc() || res.ptr != e)
                    throw ValidationError(name, "expected a number");
                d.*(it->second) = v;
            }
            return d;
        }

        std::string render(const std::string &command, const Options &o)
        {
            const auto ls = load_scenario(o.scenario);
            const double f = o.freq_ghz.value_or(ls.scenario.design_freq_ghz);
            std::ostringstream os;

            if (command == "synthesize")
                os << configuration(ls, o).to_string() << '\n';
            else if (command == "sweep")
            {
                const auto rep = enhancement_db(ls.scenario, ls.geometry, ls.response, configuration(ls, o),
                                                ls.file.sweep.freqs());
                write_csv(os, rep);
                os << "# min_enhancement_db=" << format_number(rep.min_enhancement_db) << '\n';
            }
            else if (command == "scan")
            {
                const auto angles = ls.file.scan.angles();
                write_csv(os, pattern_scan(ls.scenario, ls.geometry, configuration(ls, o), ls.response, f,
                                           ls.file.scan.radius_m, angles));
            }
            else if (command == "phase-error")
                write_csv(os, phase_error_report(ls.scenario, ls.geometry, ls.response, configuration(ls, o), f));
            else if (command == "layout")
                write_layout_svg(os, ls.geometry, configuration(ls, o), parse_dims(o.dims));
            return os.str();
        }

        void emit(const std::string &text, const Options &o, std::ostream &out)
        {
            if (o.out.empty())
            {
                out << text;
                return;
            }
            std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
            if (!f)
                throw IoError(o.out, "cannot open for writing");
            f << text;
            f.flush();
            if (!f)
                throw IoError(o.out, "write failed");
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Reconfigurable reflecting surface simulator", "rissim"};
        app.require_subcommand(1);

        Options o;
        auto add = [&](const char *name, const char *help)
        {
            auto *sub = app.add_subcommand(name, help);
            sub->add_option("--scenario", o.scenario, "Scenario file")->required();
            sub->add_option("--out", o.out, "Output path (default: stdout)");
            sub->add_option("--bits", o.bits, "Column states as 0/1 string instead of synthesizing");
            return sub;
        };
        add("synthesize", "Print the synthesized column states (1 = on, column 0 first)");
        add("sweep", "Enhancement over the all-off surface across the sweep band (CSV)");
        add("scan", "Angular pattern in the xz-plane (CSV)")
            ->add_option("--freq", o.freq_ghz, "Frequency in GHz (default: design frequency)");
        add("phase-error", "Per-cell phase error against the true Tx-cell-Rx path (CSV)")
            ->add_option("--freq", o.freq_ghz, "Frequency in GHz (default: design frequency)");
        add("layout", "Printed array layout (SVG, millimeters)")
            ->add_option("--dim", o.dims, "Cell dimension override <name>=<mm>, repeatable");

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError &e)
        {
            if (e.get_exit_code() == 0)
            {
                out << app.help();
                return ok;
            }
            err << "rissim: error: " << one_line(e.what()) << '\n' << usage_line << '\n';
            return usage;
        }

        const std::string command = app.get_subcommands().front()->get_name();
        try
        {
            emit(render(command, o), o, out);
            return ok;
        }
        catch (const IoError &e)
        {
            err << "rissim: error: " << one_line(e.what()) << '\n';
            return io;
        }
        catch (const Error &e)
        {
            err << "rissim: error: " << one_line(e.what()) << '\n';
            return validation;
        }
    }
}
