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

#include "rissim/error.hpp"

#include <sstream>

namespace rissim
{
    namespace
    {
        std::string band_message(double f, double lo, double hi)
        {
            std::ostringstream os;
            os << "frequency " << f << " GHz outside band [" << lo << ", " << hi << "] GHz";
            return os.str();
        }
    }

    BandError::BandError(double f_ghz, double f_lo_ghz, double f_hi_ghz)
        : ValidationError("frequency", band_message(f_ghz, f_lo_ghz, f_hi_ghz)),
          f_(f_ghz), lo_(f_lo_ghz), hi_(f_hi_ghz)
    {
    }

    ParseError::ParseError(std::string source, std::size_t line, const std::string &what)
        : Error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
          line_(line)
    {
    }
}
