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

#ifndef SVPITE_HAMILTONIAN_H
#define SVPITE_HAMILTONIAN_H

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "svpite/pauli.h"

namespace svpite {

enum class BoundaryCondition { OBC, PBC };

std::string_view boundary_name(BoundaryCondition bc);
/// Parses "OBC" / "PBC".
BoundaryCondition parse_boundary(std::string_view name);

/// Value forms accepted by a terms dictionary entry.
namespace terms {
/// Uniform coefficient; single-site keys only (two-site keys need a boundary).
struct Scalar {
    complex value;
};
/// Uniform coefficient over every site or chain bond.
struct Uniform {
    complex value;
    BoundaryCondition bc;
};
/// One coefficient per site (single-site keys).
struct SiteArray {
    std::vector<complex> values;
};
/// Coupling matrix J[i][j]; every non-zero entry is one two-site term.
struct Couplings {
    std::vector<std::vector<complex>> values;
};
/// Explicit (coefficient, sites) list.
struct TermList {
    std::vector<std::pair<complex, std::vector<uint32_t>>> values;
};
}  // namespace terms

using TermValue = std::variant<terms::Scalar, terms::Uniform, terms::SiteArray, terms::Couplings, terms::TermList>;
using TermsDict = std::vector<std::pair<std::string, TermValue>>;

/// Hermitian spin Hamiltonian built from single-site families X, Y, Z and the
/// homogeneous two-site families XX, YY, ZZ.
class Hamiltonian {
   public:
    explicit Hamiltonian(uint32_t n_sites);
    /// Throws BadKey, ShapeMismatch, ComplexCoefficient,
    /// MissingBoundaryCondition.
    Hamiltonian(uint32_t n_sites, const TermsDict &terms_dict);

    uint32_t n_sites() const {
        return op_.n_sites();
    }
    const PauliSumOperator &op() const {
        return op_;
    }
    std::vector<PauliTerm> terms() const {
        return op_.terms();
    }
    size_t size() const {
        return op_.size();
    }

    /// One term with the given key on `sites`.
    Hamiltonian &add_term(std::string_view key, complex coeff, const std::vector<uint32_t> &sites);
    /// One term per site, or per chain bond for two-site keys (L bonds under
    /// PBC, L-1 under OBC).
    Hamiltonian &add_uniform_terms(std::string_view key, complex coeff, std::optional<BoundaryCondition> bc = {});
    Hamiltonian &add_terms_dict(const TermsDict &terms_dict);

    /// Boundary used by each family added through `add_uniform_terms`.
    const std::map<std::string, BoundaryCondition> &boundaries() const {
        return boundaries_;
    }

    /// Readable form for 1D uniform chains, e.g.
    /// "0.25 * sum_i X_i X_i+1 + 0.2 * sum_i Z_i (Sums using PBC)";
    /// otherwise the raw term list. "0" when empty.
    std::string display() const;

    /// Equality of the underlying operators.
    bool operator==(const Hamiltonian &other) const {
        return op_ == other.op_;
    }

   private:
    PauliSumOperator op_;
    std::map<std::string, BoundaryCondition> boundaries_;
};

/// Keys accepted by `Hamiltonian`.
bool is_hamiltonian_key(std::string_view key);

}  // namespace svpite

#endif
