// Copyright 2026 The svpite Authors
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

#ifndef SVPITE_ERROR_H
#define SVPITE_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace svpite {

enum class ErrorKind {
    // operator algebra
    OutOfRangeSite,
    DuplicateSite,
    BadLabel,
    SiteCountMismatch,
    TooLargeForDense,
    BadKey,
    ShapeMismatch,
    ComplexCoefficient,
    MissingBoundaryCondition,
    // models
    TooFewSites,
    // states
    OddSitesForSinglet,
    BadLength,
    NotNormalizable,
    BadStateFile,
    // trotter / pite
    BadOrder,
    GammaOutOfRange,
    InvalidConfig,
    VanishingNorm,
    // shots
    AllShotsDiscarded,
    EmptyGroupAllocation,
    // exact diagonalization
    NotConverged,
    IncompatibleSector,
    // spectral
    NotNormalized,
    // workbench
    SchemaError,
    UnknownModel,
    UnknownAlgorithm,
    IoError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace svpite

#endif
