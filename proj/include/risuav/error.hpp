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

#include <stdexcept>
#include <string>

namespace risuav
{
// Base of every error the library throws. The CLI maps the concrete type to
// an exit code.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

// Evaluation at (or through) a pole: Gamma at a non-positive integer, a
// hypergeometric lower parameter at a non-positive integer, or colliding
// Meijer-G parameters.
class PoleError : public DomainError
{
  public:
    using DomainError::DomainError;
};

// A series, quadrature or iteration failed to reach its tolerance.
class ConvergenceError : public Error
{
  public:
    using Error::Error;
};

// Inputs are valid individually but the model degenerates (perfect pointing,
// complex generalized-K roots, beam parallel to the aperture).
class DegenerateError : public Error
{
  public:
    using Error::Error;
};

// Invalid scenario file or command-line configuration.
class ConfigError : public Error
{
  public:
    using Error::Error;
};

} // namespace risuav
