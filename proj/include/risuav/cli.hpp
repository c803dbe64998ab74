// SPDX-License-Identifier: Apache-2.0
//
// risuav - throughput analysis of RIS-assisted UAV links
// Copyright (C) 2026 The risuav authors
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

namespace risuav::cli
{
enum ExitCode : int
{
    kExitOk = 0,
    kExitConfig = 2,
    kExitDegenerate = 3,
    kExitNumerical = 4,
    kExitCompareFailed = 5
};

/// Runs one command line. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace risuav::cli
