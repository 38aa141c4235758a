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

#include <stdexcept>
#include <string>

namespace rissim
{
    // Base of every error thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // An input violates a documented invariant. `field()` names the offending
    // parameter (scenario key, constructor argument, ...).
    class ValidationError : public Error
    {
    public:
        ValidationError(std::string field, const std::string &what)
            : Error("invalid " + field + ": " + what), field_(std::move(field)) {}

        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    // Frequency outside the band a unit-cell model covers.
    class BandError : public ValidationError
    {
    public:
        BandError(double f_ghz, double f_lo_ghz, double f_hi_ghz);

        double frequency() const noexcept { return f_; }
        double lower() const noexcept { return lo_; }
        double upper() const noexcept { return hi_; }

    private:
        double f_, lo_, hi_;
    };

    // Coincident points where a distance or a direction is undefined.
    class GeometryError : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed scenario text. line() is 0 when the position is unknown.
    class ParseError : public Error
    {
    public:
        ParseError(std::string source, std::size_t line, const std::string &what);

        std::size_t line() const noexcept { return line_; }

    private:
        std::size_t line_;
    };

    class IoError : public Error
    {
    public:
        IoError(const std::string &path, const std::string &what)
            : Error(path + ": " + what) {}
    };
}
