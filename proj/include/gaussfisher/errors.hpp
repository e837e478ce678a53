// Copyright 2026 The GaussFisher Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gaussfisher {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (non-symmetric CM, bad probabilities, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A quantity that must hold analytically failed beyond its tolerance.
class NumericalConsistencyError : public Error {
  public:
    using Error::Error;
};

/// Evaluation point (or a stencil around it) leaves the chart domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Point on the boundary of the manifold where a quantity diverges.
class BoundaryError : public Error {
  public:
    using Error::Error;
};

/// Metric or chart degenerates at the requested point.
class DegeneracyError : public Error {
  public:
    using Error::Error;
};

/// Fock-space truncation too small for the requested accuracy.
class TruncationError : public Error {
  public:
    using Error::Error;
};

} // namespace gaussfisher
