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

#include <iosfwd>
#include <string>
#include <vector>

namespace rissim::cli
{
    enum ExitCode : int
    {
        ok = 0,
        usage = 2,
        validation = 3,
        io = 4,
    };

    // Runs one command line (without the program name). Results go to `out`
    // unless --out is given; diagnostics go to `err` as a single line.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}
