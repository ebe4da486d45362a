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

#ifndef SVPITE_PAULI_H
#define SVPITE_PAULI_H

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace svpite {

using complex = std::complex<double>;

/// A tensor product of single-site X, Y, Z operators (identity elsewhere).
///
/// Stored canonically: sites strictly increasing, labels permuted in lockstep.
/// Bit j of a basis index is the state of site j, so the string also carries
/// bit masks for the amplitude kernels.
class PauliString {
   public:
    /// Canonicalizing constructor. Throws OutOfRangeSite, DuplicateSite or
    /// BadLabel.
    PauliString(std::string_view labels, std::span<const uint32_t> sites, uint32_t n_sites);
    PauliString(std::string_view labels, std::initializer_list<uint32_t> sites, uint32_t n_sites);

    uint32_t n_sites() const {
        return n_sites_;
    }
    const std::string &labels() const {
        return labels_;
    }
    const std::vector<uint32_t> &sites() const {
        return sites_;
    }
    size_t weight() const {
        return sites_.size();
    }

    /// Sites carrying X or Y (the bits the string flips).
    uint64_t x_mask() const {
        return x_mask_;
    }
    /// Sites carrying Z or Y (the bits contributing a sign).
    uint64_t z_mask() const {
        return z_mask_;
    }
    /// Number of Y factors; P = i^num_y * X^x_mask * Z^z_mask.
    uint32_t num_y() const {
        return num_y_;
    }
    /// Support as a bit mask.
    uint64_t support_mask() const {
        return x_mask_ | z_mask_;
    }

    /// e.g. "X0 Y3".
    std::string str() const;

    bool operator==(const PauliString &other) const {
        return n_sites_ == other.n_sites_ && labels_ == other.labels_ && sites_ == other.sites_;
    }

    /// Canonical term order: labels first, then sites. Keeping each family
    /// of identical labels contiguous makes Trotter sweeps over a uniform
    /// model a product of commuting, lattice-symmetric family factors.
    bool operator<(const PauliString &other) const;

   private:
    uint32_t n_sites_;
    std::string labels_;
    std::vector<uint32_t> sites_;
    uint64_t x_mask_ = 0;
    uint64_t z_mask_ = 0;
    uint32_t num_y_ = 0;
};

struct PauliTerm {
    PauliString string;
    complex coeff;
};

/// Weighted sum of Pauli strings on a fixed number of sites.
///
/// Always simplified: duplicate strings are merged by adding coefficients and
/// terms whose merged magnitude falls below `kDropTolerance` are removed.
class PauliSumOperator {
   public:
    static constexpr double kDropTolerance = 1e-15;
    static constexpr double kEqualityTolerance = 1e-12;

    explicit PauliSumOperator(uint32_t n_sites);

    uint32_t n_sites() const {
        return n_sites_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// Throws SiteCountMismatch when the term lives on a different site count.
    void add_term(const PauliTerm &term);
    void add_term(const PauliString &string, complex coeff) {
        add_term(PauliTerm{string, coeff});
    }

    /// Terms in canonical order.
    std::vector<PauliTerm> terms() const;
    const std::map<PauliString, complex> &term_map() const {
        return terms_;
    }

    /// True when every coefficient has zero imaginary part.
    bool is_real() const;

    /// Canonical term maps equal within `kEqualityTolerance`.
    bool operator==(const PauliSumOperator &other) const;

    std::string str() const;

   private:
    uint32_t n_sites_;
    std::map<PauliString, complex> terms_;
};

/// Site count above which `to_dense_matrix` refuses to allocate.
constexpr uint32_t kDefaultDenseSiteLimit = 12;
constexpr uint32_t kDefaultSparseSiteLimit = 24;

/// Kronecker-product expansion, site j <-> bit j (site 0 is the least
/// significant factor). Throws TooLargeForDense above `max_sites`.
Eigen::MatrixXcd to_dense_matrix(const PauliSumOperator &op, uint32_t max_sites = kDefaultDenseSiteLimit);
Eigen::MatrixXcd to_dense_matrix(const PauliString &string, uint32_t max_sites = kDefaultDenseSiteLimit);

/// Coordinate-triplet sparse export for sizes beyond the dense guard.
Eigen::SparseMatrix<complex> to_sparse_matrix(
    const PauliSumOperator &op, uint32_t max_sites = kDefaultSparseSiteLimit);

}  // namespace svpite

#endif
