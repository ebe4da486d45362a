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

#include "svpite/error.h"

namespace svpite {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutOfRangeSite:
            return "OutOfRangeSite";
        case ErrorKind::DuplicateSite:
            return "DuplicateSite";
        case ErrorKind::BadLabel:
            return "BadLabel";
        case ErrorKind::SiteCountMismatch:
            return "SiteCountMismatch";
        case ErrorKind::TooLargeForDense:
            return "TooLargeForDense";
        case ErrorKind::BadKey:
            return "BadKey";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::ComplexCoefficient:
            return "ComplexCoefficient";
        case ErrorKind::MissingBoundaryCondition:
            return "MissingBoundaryCondition";
        case ErrorKind::TooFewSites:
            return "TooFewSites";
        case ErrorKind::OddSitesForSinglet:
            return "OddSitesForSinglet";
        case ErrorKind::BadLength:
            return "BadLength";
        case ErrorKind::NotNormalizable:
            return "NotNormalizable";
        case ErrorKind::BadStateFile:
            return "BadStateFile";
        case ErrorKind::BadOrder:
            return "BadOrder";
        case ErrorKind::GammaOutOfRange:
            return "GammaOutOfRange";
        case ErrorKind::InvalidConfig:
            return "InvalidConfig";
        case ErrorKind::VanishingNorm:
            return "VanishingNorm";
        case ErrorKind::AllShotsDiscarded:
            return "AllShotsDiscarded";
        case ErrorKind::EmptyGroupAllocation:
            return "EmptyGroupAllocation";
        case ErrorKind::NotConverged:
            return "NotConverged";
        case ErrorKind::IncompatibleSector:
            return "IncompatibleSector";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::SchemaError:
            return "SchemaError";
        case ErrorKind::UnknownModel:
            return "UnknownModel";
        case ErrorKind::UnknownAlgorithm:
            return "UnknownAlgorithm";
        case ErrorKind::IoError:
            return "IoError";
    }
    return "Unknown";
}

}  // namespace svpite
