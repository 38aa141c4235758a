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

#include "rissim/scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "rissim/csv.hpp"
#include "rissim/error.hpp"
#include "rissim/solver.hpp"

namespace pt = boost::property_tree;

namespace rissim
{
    namespace
    {
        const std::map<std::string, std::set<std::string>> schema = {
            {"geometry", {"rows", "cols", "period_mm"}},
            {"unitcell", {"model", "off", "on", "phase_on_deg", "phase_off_deg"}},
            {"scenario",
             {"tx_theta_deg", "tx_distance_m", "rx_theta_deg", "rx_distance_m", "reflect_theta_deg",
              "design_freq_ghz", "band_ghz", "q_feed", "q_elem"}},
            {"sweep", {"f_start", "f_stop", "n_points"}},
            {"scan", {"radius_m", "angle_start", "angle_stop", "step"}},
        };
        const std::set<std::string> required_sections = {"geometry", "scenario"};

        std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        // Maps "section.key" (and "section") to its 1-based line number. The
        // property tree drops positions, so diagnostics look them up here.
        std::map<std::string, std::size_t> index_lines(std::string_view text)
        {
            std::map<std::string, std::size_t> lines;
            std::string section;
            std::size_t lineno = 0;
            std::size_t pos = 0;
            while (pos <= text.size())
            {
                const auto nl = text.find('\n', pos);
                const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
                ++lineno;
                const auto line = trim(raw);
                if (!line.empty() && line[0] != '#' && line[0] != ';')
                {
                    if (line.front() == '[' && line.back() == ']')
                    {
                        section = std::string(trim(line.substr(1, line.size() - 2)));
                        lines.emplace(section, lineno);
                    }
                    else if (const auto eq = line.find('='); eq != std::string_view::npos)
                        lines.emplace(section + "." + std::string(trim(line.substr(0, eq))), lineno);
                }
                if (nl == std::string_view::npos)
                    break;
                pos = nl + 1;
            }
            return lines;
        }

        class Reader
        {
        public:
            Reader(const pt::ptree &tree, std::map<std::string, std::size_t> lines, std::string source)
                : tree_(tree), lines_(std::move(lines)), source_(std::move(source)) {}

            bool has_section(const std::string &s) const { return tree_.find(s) != tree_.not_found(); }

            bool has(const std::string &section, const std::string &key) const
            {
                const auto it = tree_.find(section);
                return it != tree_.not_found() && it->second.find(key) != it->second.not_found();
            }

            std::string text(const std::string &section, const std::string &key) const
            {
                return std::string(trim(tree_.get_child(section).get<std::string>(key)));
            }

            double number(const std::string &section, const std::string &key, std::string_view token) const
            {
                double v = 0.0;
                const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
                if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size())
                    fail(section, key, "expected a number, got '" + std::string(token) + "'");
                return v;
            }

            double number(const std::string &section, const std::string &key) const
            {
                return number(section, key, text(section, key));
            }

            long long integer(const std::string &section, const std::string &key) const
            {
                const auto token = text(section, key);
                long long v = 0;
                const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
                if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size())
                    fail(section, key, "expected an integer, got '" + token + "'");
                return v;
            }

            std::vector<double> numbers(const std::string &section, const std::string &key, std::string_view s) const
            {
                std::vector<double> out;
                std::size_t pos = 0;
                while (pos < s.size())
                {
                    const auto b = s.find_first_not_of(" \t", pos);
                    if (b == std::string_view::npos)
                        break;
                    const auto e = std::min(s.find_first_of(" \t", b), s.size());
                    out.push_back(number(section, key, s.substr(b, e - b)));
                    pos = e;
                }
                return out;
            }

            [[noreturn]] void fail(const std::string &section, const std::string &key, const std::string &what) const
            {
                const auto it = lines_.find(section + "." + key);
                throw ParseError(source_, it == lines_.end() ? 0 : it->second, "field '" + key + "': " + what);
            }

        private:
            const pt::ptree &tree_;
            std::map<std::string, std::size_t> lines_;
            std::string source_;
        };

        std::vector<ResponseKnot> parse_table(const Reader &r, const std::string &key)
        {
            const auto s = r.text("unitcell", key);
            std::vector<ResponseKnot> out;
            std::size_t pos = 0;
            while (pos <= s.size())
            {
                const auto semi = std::min(s.find(';', pos), s.size());
                const auto entry = trim(std::string_view(s).substr(pos, semi - pos));
                if (!entry.empty())
                {
                    const auto v = r.numbers("unitcell", key, entry);
                    if (v.size() != 3)
                        r.fail("unitcell", key, "each entry needs 'GHz magnitude degrees'");
                    out.push_back({v[0], v[1], v[2]});
                }
                pos = semi + 1;
            }
            if (out.empty())
                r.fail("unitcell", key, "table is empty");
            return out;
        }

        std::string format_table(const std::vector<ResponseKnot> &t)
        {
            std::string s;
            for (std::size_t k = 0; k < t.size(); ++k)
            {
                if (k > 0)
                    s += "; ";
                s += format_number(t[k].freq_ghz) + " " + format_number(t[k].magnitude) + " " +
                     format_number(t[k].phase_deg);
            }
            return s;
        }

        void require_angle(double deg, const char *field)
        {
            if (!(deg > -90.0 && deg < 90.0))
                throw ValidationError(field, "must lie in (-90, 90) degrees, in front of the surface");
        }

        void require_positive(double v, const char *field)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw ValidationError(field, "must be positive");
        }
    }

    std::vector<double> SweepParams::freqs() const
    {
        return linspace(f_start_ghz, f_stop_ghz, n_points);
    }

    std::vector<double> ScanParams::angles() const
    {
        return angle_grid(angle_start_deg, angle_stop_deg, step_deg);
    }

    ScenarioFile parse_scenario(std::string_view text, const std::string &source)
    {
        const auto lines = index_lines(text);
        if (lines.empty())
            throw ParseError(source, 0, "empty scenario file");

        pt::ptree tree;
        try
        {
            std::istringstream in{std::string(text)};
            pt::ini_parser::read_ini(in, tree);
        }
        catch (const pt::ini_parser_error &e)
        {
            throw ParseError(source, e.line(), e.message());
        }

        for (const auto &[name, section] : tree)
        {
            if (lines.contains("." + name))
                throw ValidationError(name, "key outside any section");
            const auto it = schema.find(name);
            if (it == schema.end())
                throw ValidationError(name, "unknown section");
            for (const auto &[key, value] : section)
                if (!it->second.contains(key))
                    throw ValidationError(name + "." + key, "unknown key");
        }
        for (const auto &s : required_sections)
            if (tree.find(s) == tree.not_found())
                throw ValidationError(s, "missing required section");

        const Reader r(tree, lines, source);
        auto require = [&](const std::string &section, const std::string &key)
        {
            if (!r.has(section, key))
                throw ValidationError(key, "missing required key in [" + section + "]");
        };

        ScenarioFile f;

        for (const auto *k : {"rows", "cols", "period_mm"})
            require("geometry", k);
        const auto rows = r.integer("geometry", "rows"), cols = r.integer("geometry", "cols");
        if (rows <= 0)
            throw ValidationError("rows", "must be positive");
        if (cols <= 0)
            throw ValidationError("cols", "must be positive");
        f.rows = static_cast<std::size_t>(rows);
        f.cols = static_cast<std::size_t>(cols);
        f.period_mm = r.number("geometry", "period_mm");

        if (r.has_section("unitcell"))
        {
            const std::string model = r.has("unitcell", "model") ? r.text("unitcell", "model") : "default";
            auto forbid = [&](std::initializer_list<const char *> keys)
            {
                for (const auto *k : keys)
                    if (r.has("unitcell", k))
                        throw ValidationError(std::string("unitcell.") + k, "not used by model '" + model + "'");
            };
            if (model == "default")
            {
                f.unitcell.model = UnitCellSpec::Model::Default;
                forbid({"off", "on", "phase_on_deg", "phase_off_deg"});
            }
            else if (model == "table")
            {
                f.unitcell.model = UnitCellSpec::Model::Table;
                forbid({"phase_on_deg", "phase_off_deg"});
                require("unitcell", "off");
                require("unitcell", "on");
                f.unitcell.off = parse_table(r, "off");
                f.unitcell.on = parse_table(r, "on");
            }
            else if (model == "ideal")
            {
                f.unitcell.model = UnitCellSpec::Model::Ideal;
                forbid({"off", "on"});
                require("unitcell", "phase_on_deg");
                require("unitcell", "phase_off_deg");
                f.unitcell.phase_on_deg = r.number("unitcell", "phase_on_deg");
                f.unitcell.phase_off_deg = r.number("unitcell", "phase_off_deg");
            }
            else
                throw ValidationError("model", "expected default, table or ideal, got '" + model + "'");
        }

        for (const auto &k : schema.at("scenario"))
            require("scenario", k);
        f.tx_theta_deg = r.number("scenario", "tx_theta_deg");
        f.tx_distance_m = r.number("scenario", "tx_distance_m");
        f.rx_theta_deg = r.number("scenario", "rx_theta_deg");
        f.rx_distance_m = r.number("scenario", "rx_distance_m");
        f.reflect_theta_deg = r.number("scenario", "reflect_theta_deg");
        f.design_freq_ghz = r.number("scenario", "design_freq_ghz");
        const auto band = r.numbers("scenario", "band_ghz", r.text("scenario", "band_ghz"));
        if (band.size() != 2)
            r.fail("scenario", "band_ghz", "expected two numbers 'lo hi'");
        f.band_ghz = {band[0], band[1]};
        f.q_feed = r.number("scenario", "q_feed");
        f.q_elem = r.number("scenario", "q_elem");

        f.sweep.f_start_ghz = f.band_ghz.lo_ghz;
        f.sweep.f_stop_ghz = f.band_ghz.hi_ghz;
        if (r.has("sweep", "f_start"))
            f.sweep.f_start_ghz = r.number("sweep", "f_start");
        if (r.has("sweep", "f_stop"))
            f.sweep.f_stop_ghz = r.number("sweep", "f_stop");
        if (r.has("sweep", "n_points"))
        {
            const auto n = r.integer("sweep", "n_points");
            if (n <= 0)
                throw ValidationError("n_points", "must be positive");
            f.sweep.n_points = static_cast<std::size_t>(n);
        }

        if (r.has("scan", "radius_m"))
            f.scan.radius_m = r.number("scan", "radius_m");
        if (r.has("scan", "angle_start"))
            f.scan.angle_start_deg = r.number("scan", "angle_start");
        if (r.has("scan", "angle_stop"))
            f.scan.angle_stop_deg = r.number("scan", "angle_stop");
        if (r.has("scan", "step"))
            f.scan.step_deg = r.number("scan", "step");

        return f;
    }

    ScenarioFile parse_scenario(std::istream &in, const std::string &source)
    {
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad())
            throw IoError(source, "read failed");
        return parse_scenario(buf.str(), source);
    }

    LoadedScenario build_scenario(const ScenarioFile &f)
    {
        require_positive(f.period_mm, "period_mm");
        if (f.rows == 0)
            throw ValidationError("rows", "must be positive");
        if (f.cols == 0)
            throw ValidationError("cols", "must be positive");

        require_angle(f.tx_theta_deg, "tx_theta_deg");
        require_positive(f.tx_distance_m, "tx_distance_m");
        require_angle(f.rx_theta_deg, "rx_theta_deg");
        require_positive(f.rx_distance_m, "rx_distance_m");
        require_angle(f.reflect_theta_deg, "reflect_theta_deg");

        if (!std::isfinite(f.band_ghz.lo_ghz) || !std::isfinite(f.band_ghz.hi_ghz) ||
            !(f.band_ghz.lo_ghz < f.band_ghz.hi_ghz))
            throw ValidationError("band_ghz", "lower edge must be below upper edge");
        if (!(f.design_freq_ghz > f.band_ghz.lo_ghz && f.design_freq_ghz < f.band_ghz.hi_ghz))
            throw ValidationError("design_freq_ghz", "must lie strictly inside band_ghz");
        if (!(f.q_feed >= 0.0) || !std::isfinite(f.q_feed))
            throw ValidationError("q_feed", "must be a finite value >= 0");
        if (!(f.q_elem >= 0.0) || !std::isfinite(f.q_elem))
            throw ValidationError("q_elem", "must be a finite value >= 0");

        UnitCellResponse resp = [&]
        {
            switch (f.unitcell.model)
            {
            case UnitCellSpec::Model::Table:
            {
                double lo = f.unitcell.off.empty() ? 0.0 : f.unitcell.off.front().freq_ghz;
                double hi = lo;
                for (const auto *t : {&f.unitcell.off, &f.unitcell.on})
                    for (const auto &k : *t)
                        lo = std::min(lo, k.freq_ghz), hi = std::max(hi, k.freq_ghz);
                if (!(lo < hi))
                    throw ValidationError("unitcell", "tables must span a frequency range");
                return UnitCellResponse(f.unitcell.off, f.unitcell.on, {lo, hi}, "user table");
            }
            case UnitCellSpec::Model::Ideal:
                return UnitCellResponse::ideal(f.unitcell.phase_on_deg, f.unitcell.phase_off_deg, f.band_ghz);
            case UnitCellSpec::Model::Default:
                break;
            }
            return UnitCellResponse::default_model();
        }();

        if (f.band_ghz.lo_ghz < resp.band().lo_ghz || f.band_ghz.hi_ghz > resp.band().hi_ghz)
            throw ValidationError("band_ghz", "extends beyond the unit-cell model band [" +
                                                  format_number(resp.band().lo_ghz) + ", " +
                                                  format_number(resp.band().hi_ghz) + "] GHz");

        if (f.sweep.n_points == 0)
            throw ValidationError("n_points", "must be positive");
        if (!f.band_ghz.contains(f.sweep.f_start_ghz))
            throw ValidationError("f_start", "must lie inside band_ghz");
        if (!f.band_ghz.contains(f.sweep.f_stop_ghz))
            throw ValidationError("f_stop", "must lie inside band_ghz");
        if (f.sweep.f_stop_ghz < f.sweep.f_start_ghz)
            throw ValidationError("f_stop", "must not be below f_start");

        require_positive(f.scan.radius_m, "radius_m");
        require_positive(f.scan.step_deg, "step");
        require_angle(f.scan.angle_start_deg, "angle_start");
        require_angle(f.scan.angle_stop_deg, "angle_stop");
        if (f.scan.angle_stop_deg < f.scan.angle_start_deg)
            throw ValidationError("angle_stop", "must not be below angle_start");

        Scenario sc;
        sc.tx_pos = f.tx_distance_m * unit_direction(f.tx_theta_deg, 0.0);
        sc.rx_pos = f.rx_distance_m * unit_direction(f.rx_theta_deg, 0.0);
        sc.reflect_dir = unit_direction(f.reflect_theta_deg, 0.0);
        sc.design_freq_ghz = f.design_freq_ghz;
        sc.band = f.band_ghz;
        sc.q_feed = f.q_feed;
        sc.q_elem = f.q_elem;
        validate(sc);

        return LoadedScenario{f, sc, ArrayGeometry(f.rows, f.cols, f.period_mm * 1e-3), std::move(resp)};
    }

    LoadedScenario load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError(path.string(), "cannot open scenario file");
        return build_scenario(parse_scenario(in, path.string()));
    }

    std::string format_scenario(const ScenarioFile &f)
    {
        std::ostringstream os;
        os << "[geometry]\n"
           << "rows = " << f.rows << "\n"
           << "cols = " << f.cols << "\n"
           << "period_mm = " << format_number(f.period_mm) << "\n\n";

        os << "[unitcell]\n";
        switch (f.unitcell.model)
        {
        case UnitCellSpec::Model::Default:
            os << "model = default\n";
            break;
        case UnitCellSpec::Model::Table:
            os << "model = table\n"
               << "off = " << format_table(f.unitcell.off) << "\n"
               << "on = " << format_table(f.unitcell.on) << "\n";
            break;
        case UnitCellSpec::Model::Ideal:
            os << "model = ideal\n"
               << "phase_on_deg = " << format_number(f.unitcell.phase_on_deg) << "\n"
               << "phase_off_deg = " << format_number(f.unitcell.phase_off_deg) << "\n";
            break;
        }
        os << "\n";

        os << "[scenario]\n"
           << "tx_theta_deg = " << format_number(f.tx_theta_deg) << "\n"
           << "tx_distance_m = " << format_number(f.tx_distance_m) << "\n"
           << "rx_theta_deg = " << format_number(f.rx_theta_deg) << "\n"
           << "rx_distance_m = " << format_number(f.rx_distance_m) << "\n"
           << "reflect_theta_deg = " << format_number(f.reflect_theta_deg) << "\n"
           << "design_freq_ghz = " << format_number(f.design_freq_ghz) << "\n"
           << "band_ghz = " << format_number(f.band_ghz.lo_ghz) << " " << format_number(f.band_ghz.hi_ghz) << "\n"
           << "q_feed = " << format_number(f.q_feed) << "\n"
           << "q_elem = " << format_number(f.q_elem) << "\n\n";

        os << "[sweep]\n"
           << "f_start = " << format_number(f.sweep.f_start_ghz) << "\n"
           << "f_stop = " << format_number(f.sweep.f_stop_ghz) << "\n"
           << "n_points = " << f.sweep.n_points << "\n\n";

        os << "[scan]\n"
           << "radius_m = " << format_number(f.scan.radius_m) << "\n"
           << "angle_start = " << format_number(f.scan.angle_start_deg) << "\n"
           << "angle_stop = " << format_number(f.scan.angle_stop_deg) << "\n"
           << "step = " << format_number(f.scan.step_deg) << "\n";
        return os.str();
    }
}
