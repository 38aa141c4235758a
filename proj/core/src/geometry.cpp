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

#include "rissim/geometry.hpp"

#include <string>

#include "rissim/error.hpp"

namespace rissim
{
    double wrap_deg(double deg)
    {
        double r = std::fmod(deg + 180.0, 360.0);
        if (r <= 0.0)
            r += 360.0;
        return r - 180.0;
    }

    Vec3::Vec3(double x, double y, double z) : x_(x), y_(y), z_(z)
    {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
            throw ValidationError("Vec3", "components must be finite");
    }

    double path_length(const Vec3 &a, const Vec3 &b)
    {
        return (a - b).norm();
    }

    Vec3 unit_direction(double theta_deg, double phi_deg)
    {
        const double t = deg2rad(theta_deg), p = deg2rad(phi_deg);
        const double st = std::sin(t);
        return {st * std::cos(p), st * std::sin(p), std::cos(t)};
    }

    ArrayGeometry::ArrayGeometry(std::size_t n_rows, std::size_t n_cols, double period_m)
        : rows_(n_rows), cols_(n_cols), period_(period_m)
    {
        if (n_rows == 0)
            throw ValidationError("rows", "must be positive");
        if (n_cols == 0)
            throw ValidationError("cols", "must be positive");
        if (!(period_m > 0.0) || !std::isfinite(period_m))
            throw ValidationError("period", "must be positive and finite");
    }

    double ArrayGeometry::column_x(std::size_t j) const
    {
        if (j >= cols_)
            throw ValidationError("column", "index " + std::to_string(j) + " out of range");
        return (static_cast<double>(j) - static_cast<double>(cols_ - 1) / 2.0) * period_;
    }

    double ArrayGeometry::row_y(std::size_t i) const
    {
        if (i >= rows_)
            throw ValidationError("row", "index " + std::to_string(i) + " out of range");
        return (static_cast<double>(i) - static_cast<double>(rows_ - 1) / 2.0) * period_;
    }

    Vec3 ArrayGeometry::cell_center(std::size_t i, std::size_t j) const
    {
        return {column_x(j), row_y(i), 0.0};
    }

    Vec3 ArrayGeometry::column_center(std::size_t j) const
    {
        return {column_x(j), 0.0, 0.0};
    }

    std::vector<Vec3> cell_centers(const ArrayGeometry &geom)
    {
        std::vector<Vec3> out;
        out.reserve(geom.size());
        for (std::size_t i = 0; i < geom.rows(); ++i)
            for (std::size_t j = 0; j < geom.cols(); ++j)
                out.push_back(geom.cell_center(i, j));
        return out;
    }
}
