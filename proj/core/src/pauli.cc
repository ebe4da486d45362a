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

#include "svpite/pauli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "svpite/error.h"

namespace svpite {

PauliString::PauliString(std::string_view labels, std::span<const uint32_t> sites, uint32_t n_sites)
    : n_sites_(n_sites) {
    if (labels.size() != sites.size() || labels.empty()) {
        throw Error(ErrorKind::BadLabel, "need one label per site and at least one site");
    }
    if (n_sites == 0 || n_sites > 64) {
        throw Error(ErrorKind::OutOfRangeSite, "site count must be in [1, 64]");
    }
    std::vector<size_t> perm(sites.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return sites[a] < sites[b]; });
    labels_.reserve(labels.size());
    sites_.reserve(sites.size());
    for (size_t k : perm) {
        char label = labels[k];
        uint32_t site = sites[k];
        if (label != 'X' && label != 'Y' && label != 'Z') {
            throw Error(ErrorKind::BadLabel, std::string("unknown Pauli label '") + label + "'");
        }
        if (site >= n_sites) {
            throw Error(ErrorKind::OutOfRangeSite,
                        "site " + std::to_string(site) + " outside [0, " + std::to_string(n_sites) + ")");
        }
        if (!sites_.empty() && sites_.back() == site) {
            throw Error(ErrorKind::DuplicateSite, "site " + std::to_string(site) + " appears twice");
        }
        labels_.push_back(label);
        sites_.push_back(site);
        uint64_t bit = uint64_t{1} << site;
        if (label != 'Z') {
            x_mask_ |= bit;
        }
        if (label != 'X') {
            z_mask_ |= bit;
        }
        if (label == 'Y') {
            num_y_++;
        }
    }
}

PauliString::PauliString(std::string_view labels, std::initializer_list<uint32_t> sites, uint32_t n_sites)
    : PauliString(labels, std::span<const uint32_t>(sites.begin(), sites.size()), n_sites) {
}

std::string PauliString::str() const {
    std::string out;
    for (size_t k = 0; k < sites_.size(); k++) {
        if (k) {
            out += ' ';
        }
        out += labels_[k];
        out += std::to_string(sites_[k]);
    }
    return out;
}

bool PauliString::operator<(const PauliString &other) const {
    if (n_sites_ != other.n_sites_) {
        return n_sites_ < other.n_sites_;
    }
    if (labels_ != other.labels_) {
        return labels_ < other.labels_;
    }
    return sites_ < other.sites_;
}

PauliSumOperator::PauliSumOperator(uint32_t n_sites) : n_sites_(n_sites) {
    if (n_sites == 0 || n_sites > 64) {
        throw Error(ErrorKind::OutOfRangeSite, "site count must be in [1, 64]");
    }
}

void PauliSumOperator::add_term(const PauliTerm &term) {
    if (term.string.n_sites() != n_sites_) {
        throw Error(ErrorKind::SiteCountMismatch, "term on " + std::to_string(term.string.n_sites()) +
                                                      " sites added to a " + std::to_string(n_sites_) +
                                                      "-site operator");
    }
    if (!std::isfinite(term.coeff.real()) || !std::isfinite(term.coeff.imag())) {
        throw Error(ErrorKind::InvalidConfig, "non-finite coefficient for " + term.string.str());
    }
    auto [it, inserted] = terms_.try_emplace(term.string, term.coeff);
    if (!inserted) {
        it->second += term.coeff;
    }
    if (std::abs(it->second) < kDropTolerance) {
        terms_.erase(it);
    }
}

std::vector<PauliTerm> PauliSumOperator::terms() const {
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const auto &[string, coeff] : terms_) {
        out.push_back(PauliTerm{string, coeff});
    }
    return out;
}

bool PauliSumOperator::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &kv) { return kv.second.imag() == 0.0; });
}

bool PauliSumOperator::operator==(const PauliSumOperator &other) const {
    if (n_sites_ != other.n_sites_) {
        return false;
    }
    auto close_to = [](const std::map<PauliString, complex> &a, const std::map<PauliString, complex> &b) {
        for (const auto &[string, coeff] : a) {
            auto it = b.find(string);
            complex rhs = it == b.end() ? complex{} : it->second;
            if (std::abs(coeff - rhs) > kEqualityTolerance) {
                return false;
            }
        }
        return true;
    };
    return close_to(terms_, other.terms_) && close_to(other.terms_, terms_);
}

std::string PauliSumOperator::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[string, coeff] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if (coeff.imag() == 0.0) {
            out << coeff.real();
        } else {
            out << "(" << coeff.real() << (coeff.imag() < 0 ? "-" : "+") << std::abs(coeff.imag()) << "i)";
        }
        out << " * " << string.str();
    }
    return out.str();
}

namespace {

Eigen::Matrix2cd single_site_matrix(char label) {
    Eigen::Matrix2cd m;
    const complex i{0, 1};
    switch (label) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -i, i, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m.setIdentity();
            break;
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

void check_dense(uint32_t n_sites, uint32_t max_sites) {
    if (n_sites > max_sites) {
        throw Error(ErrorKind::TooLargeForDense, std::to_string(n_sites) + " sites exceed the dense limit of " +
                                                     std::to_string(max_sites));
    }
}

}  // namespace

Eigen::MatrixXcd to_dense_matrix(const PauliString &string, uint32_t max_sites) {
    check_dense(string.n_sites(), max_sites);
    std::string per_site(string.n_sites(), 'I');
    for (size_t k = 0; k < string.weight(); k++) {
        per_site[string.sites()[k]] = string.labels()[k];
    }
    // Site L-1 is the most significant factor.
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (uint32_t site = string.n_sites(); site-- > 0;) {
        out = kron(out, single_site_matrix(per_site[site]));
    }
    return out;
}

Eigen::MatrixXcd to_dense_matrix(const PauliSumOperator &op, uint32_t max_sites) {
    check_dense(op.n_sites(), max_sites);
    size_t dim = size_t{1} << op.n_sites();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[string, coeff] : op.term_map()) {
        out += coeff * to_dense_matrix(string, max_sites);
    }
    return out;
}

Eigen::SparseMatrix<complex> to_sparse_matrix(const PauliSumOperator &op, uint32_t max_sites) {
    if (op.n_sites() > max_sites) {
        throw Error(ErrorKind::TooLargeForDense, std::to_string(op.n_sites()) +
                                                     " sites exceed the sparse limit of " +
                                                     std::to_string(max_sites));
    }
    size_t dim = size_t{1} << op.n_sites();
    std::vector<Eigen::Triplet<complex>> triplets;
    triplets.reserve(dim * op.size());
    static const complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto &[string, coeff] : op.term_map()) {
        complex base = coeff * i_pow[string.num_y() % 4];
        for (uint64_t col = 0; col < dim; col++) {
            double sign = (std::popcount(col & string.z_mask()) & 1) ? -1.0 : 1.0;
            triplets.emplace_back(static_cast<Eigen::Index>(col ^ string.x_mask()), static_cast<Eigen::Index>(col),
                                  sign * base);
        }
    }
    Eigen::SparseMatrix<complex> out(dim, dim);
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

}  // namespace svpite
