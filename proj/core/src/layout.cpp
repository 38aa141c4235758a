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

#include "rissim/layout.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "rissim/error.hpp"

namespace rissim
{
    namespace
    {
        std::string mm(double v)
        {
            if (v == 0.0)
                v = 0.0; // drop the sign of -0
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
            return std::string(buf, res.ptr);
        }

        // Closed rectangle sub-path, corner (x0, y0), size (w, h).
        std::string rect_path(double x0, double y0, double w, double h)
        {
            return "M" + mm(x0) + " " + mm(y0) + "h" + mm(w) + "v" + mm(h) + "h" + mm(-w) + "Z";
        }

        std::string rect(const char *cls, double x0, double y0, double w, double h, const char *style)
        {
            return std::string("<rect class=\"") + cls + "\" x=\"" + mm(x0) + "\" y=\"" + mm(y0) + "\" width=\"" +
                   mm(w) + "\" height=\"" + mm(h) + "\" " + style + "/>";
        }

        void positive(double v, const char *field)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw ValidationError(field, "must be positive");
        }
    }

    void validate(const CellDims &d, double period_mm)
    {
        positive(period_mm, "period_mm");
        positive(d.main_length_mm, "main_length_mm");
        positive(d.main_width_mm, "main_width_mm");
        positive(d.leg_width_mm, "leg_width_mm");
        positive(d.leg_length_mm, "leg_length_mm");
        positive(d.switch_gap_mm, "switch_gap_mm");
        positive(d.bias_width_mm, "bias_width_mm");

        if (d.main_length_mm + d.leg_width_mm > period_mm)
            throw ValidationError("main_length_mm", "main branch plus legs exceed the cell period");
        if (d.leg_length_mm > period_mm)
            throw ValidationError("leg_length_mm", "exceeds the cell period");
        if (d.main_width_mm > d.leg_length_mm)
            throw ValidationError("main_width_mm", "wider than the legs are long");
        if (d.switch_gap_mm >= d.main_length_mm)
            throw ValidationError("switch_gap_mm", "must be shorter than the main branch");
        if (d.bias_width_mm > d.leg_width_mm)
            throw ValidationError("bias_width_mm", "wider than the legs");
    }

    void write_layout_svg(std::ostream &out, const ArrayGeometry &geom, const ColumnConfig &config,
                          const CellDims &d)
    {
        const double p = geom.period() * 1e3;
        validate(d, p);
        if (config.size() != geom.cols())
            throw ValidationError("config", "column count does not match geometry");

        const double width = static_cast<double>(geom.cols()) * p;
        const double height = static_cast<double>(geom.rows()) * p;

        const double half_l = d.main_length_mm / 2, half_g = d.switch_gap_mm / 2;
        const double half_w = d.main_width_mm / 2, half_ll = d.leg_length_mm / 2;
        const double lw = d.leg_width_mm, bw = d.bias_width_mm;

        // One H in cell-local coordinates: split main branch plus two legs.
        const std::string h_path = rect_path(-half_l, -half_w, half_l - half_g, d.main_width_mm) +
                                   rect_path(half_g, -half_w, half_l - half_g, d.main_width_mm) +
                                   rect_path(-half_l - lw / 2, -half_ll, lw, d.leg_length_mm) +
                                   rect_path(half_l - lw / 2, -half_ll, lw, d.leg_length_mm);

        const double stub = p / 2 - half_ll;
        std::string bias;
        if (stub > 0.0)
            for (double x : {-half_l, half_l})
                for (double y0 : {-p / 2, half_ll})
                    bias += rect("bias", x - bw / 2, y0, bw, stub, "fill=\"#808080\"");

        const std::string sw_on = rect("switch on", -half_g, -half_w, d.switch_gap_mm, d.main_width_mm,
                                       "fill=\"#202020\"");
        const std::string sw_off = rect("switch off", -half_g, -half_w, d.switch_gap_mm, d.main_width_mm,
                                        "fill=\"none\" stroke=\"#c00000\" stroke-width=\"0.02\"");

        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << mm(width) << "mm\" height=\"" << mm(height)
            << "mm\" viewBox=\"0 0 " << mm(width) << ' ' << mm(height) << "\">\n"
            << "<desc>columns " << config.to_string() << " (1 = on)</desc>\n";

        for (std::size_t j = 0; j < geom.cols(); ++j)
        {
            const bool on = config[j] == CellState::On;
            out << "<g class=\"column " << (on ? "on" : "off") << "\" id=\"col-" << j << "\" data-col=\"" << j
                << "\">\n";
            const double cx = (static_cast<double>(j) + 0.5) * p;
            for (std::size_t i = 0; i < geom.rows(); ++i)
            {
                // Row 0 at the bottom edge.
                const double cy = height - (static_cast<double>(i) + 0.5) * p;
                out << "<g class=\"cell\" data-row=\"" << i << "\" transform=\"translate(" << mm(cx) << ' '
                    << mm(cy) << ")\">"
                    << "<path class=\"h\" d=\"" << h_path << "\" fill=\"#b0b0b0\"/>" << bias
                    << (on ? sw_on : sw_off) << "</g>\n";
            }
            out << "</g>\n";
        }
        out << "</svg>\n";
    }

    void export_layout(const ArrayGeometry &geom, const ColumnConfig &config, const CellDims &dims,
                       const std::filesystem::path &path)
    {
        validate(dims, geom.period() * 1e3);
        if (config.size() != geom.cols())
            throw ValidationError("config", "column count does not match geometry");
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw IoError(path.string(), "cannot open for writing");
        write_layout_svg(f, geom, config, dims);
        f.flush();
        if (!f)
            throw IoError(path.string(), "write failed");
    }
}
