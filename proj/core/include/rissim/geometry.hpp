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

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace rissim
{
    inline constexpr double speed_of_light = 299792458.0; // m/s
    inline constexpr double pi = 3.14159265358979323846;

    // Free-space wavelength in meters for a frequency in GHz.
    inline double wavelength_m(double f_ghz) { return speed_of_light / (f_ghz * 1.0e9); }

    // Free-space wavenumber in rad/m for a frequency in GHz.
    inline double wavenumber(double f_ghz) { return 2.0 * pi / wavelength_m(f_ghz); }

    inline double deg2rad(double deg) { return deg * (pi / 180.0); }
    inline double rad2deg(double rad) { return rad * (180.0 / pi); }

    // Wraps an angle in degrees into (-180, 180].
    double wrap_deg(double deg);

    // Cartesian position or direction, meters. Components are always finite.
    class Vec3
    {
    public:
        constexpr Vec3() = default;
        Vec3(double x, double y, double z);

        double x() const noexcept { return x_; }
        double y() const noexcept { return y_; }
        double z() const noexcept { return z_; }

        double dot(const Vec3 &o) const noexcept { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }
        double norm() const noexcept { return std::sqrt(dot(*this)); }

        Vec3 operator+(const Vec3 &o) const { return {x_ + o.x_, y_ + o.y_, z_ + o.z_}; }
        Vec3 operator-(const Vec3 &o) const { return {x_ - o.x_, y_ - o.y_, z_ - o.z_}; }
        Vec3 operator*(double s) const { return {x_ * s, y_ * s, z_ * s}; }
        Vec3 operator-() const { return {-x_, -y_, -z_}; }

        bool operator==(const Vec3 &) const = default;

    private:
        double x_ = 0.0, y_ = 0.0, z_ = 0.0;
    };

    inline Vec3 operator*(double s, const Vec3 &v) { return v * s; }

    // Euclidean distance between two points.
    double path_length(const Vec3 &a, const Vec3 &b);

    // Unit vector at polar angle `theta_deg` from +z and azimuth `phi_deg` from +x.
    // phi = 0 keeps the vector in the xz-plane.
    Vec3 unit_direction(double theta_deg, double phi_deg = 0.0);

    // Rectangular lattice of unit cells in the z = 0 plane, centered on the origin.
    // Column index j runs along x, row index i along y. All cells of one column
    // share a bias line.
    class ArrayGeometry
    {
    public:
        ArrayGeometry(std::size_t n_rows, std::size_t n_cols, double period_m);

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }
        std::size_t size() const noexcept { return rows_ * cols_; }
        double period() const noexcept { return period_; }

        // Aperture extent: one pitch per column (x) or row (y).
        double width() const noexcept { return static_cast<double>(cols_) * period_; }
        double height() const noexcept { return static_cast<double>(rows_) * period_; }

        double column_x(std::size_t j) const;
        double row_y(std::size_t i) const;

        Vec3 cell_center(std::size_t i, std::size_t j) const;
        Vec3 column_center(std::size_t j) const;

        bool operator==(const ArrayGeometry &) const = default;

    private:
        std::size_t rows_, cols_;
        double period_;
    };

    // All cell centers in row-major order (row 0 first).
    std::vector<Vec3> cell_centers(const ArrayGeometry &geom);
}
