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

#include "svpite/hamiltonian.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "svpite/error.h"

namespace svpite {

namespace {

constexpr std::string_view kKeys[] = {"X", "Y", "Z", "XX", "YY", "ZZ"};

void require_key(std::string_view key) {
    if (!is_hamiltonian_key(key)) {
        throw Error(ErrorKind::BadKey, "unsupported Hamiltonian term '" + std::string(key) +
                                           "' (allowed: X, Y, Z, XX, YY, ZZ)");
    }
}

double require_real(complex c, std::string_view key) {
    if (c.imag() != 0.0) {
        throw Error(ErrorKind::ComplexCoefficient, "coefficient of '" + std::string(key) + "' must be real");
    }
    return c.real();
}

std::vector<std::pair<uint32_t, uint32_t>> bonds_1d(uint32_t n, BoundaryCondition bc) {
    std::vector<std::pair<uint32_t, uint32_t>> bonds;
    for (uint32_t i = 0; i + 1 < n; i++) {
        bonds.emplace_back(i, i + 1);
    }
    if (bc == BoundaryCondition::PBC) {
        bonds.emplace_back(n - 1, 0);
    }
    return bonds;
}

std::string format_sig3(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", value);
    return buf;
}

}  // namespace

std::string_view boundary_name(BoundaryCondition bc) {
    return bc == BoundaryCondition::PBC ? "PBC" : "OBC";
}

BoundaryCondition parse_boundary(std::string_view name) {
    if (name == "PBC") {
        return BoundaryCondition::PBC;
    }
    if (name == "OBC") {
        return BoundaryCondition::OBC;
    }
    throw Error(ErrorKind::MissingBoundaryCondition, "boundary must be 'OBC' or 'PBC', got '" + std::string(name) + "'");
}

bool is_hamiltonian_key(std::string_view key) {
    return std::find(std::begin(kKeys), std::end(kKeys), key) != std::end(kKeys);
}

Hamiltonian::Hamiltonian(uint32_t n_sites) : op_(n_sites) {
}

Hamiltonian::Hamiltonian(uint32_t n_sites, const TermsDict &terms_dict) : op_(n_sites) {
    add_terms_dict(terms_dict);
}

Hamiltonian &Hamiltonian::add_term(std::string_view key, complex coeff, const std::vector<uint32_t> &sites) {
    require_key(key);
    double c = require_real(coeff, key);
    if (sites.size() != key.size()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "'" + std::string(key) + "' needs " + std::to_string(key.size()) + " site(s)");
    }
    op_.add_term(PauliString(key, sites, n_sites()), c);
    return *this;
}

Hamiltonian &Hamiltonian::add_uniform_terms(std::string_view key, complex coeff, std::optional<BoundaryCondition> bc) {
    require_key(key);
    double c = require_real(coeff, key);
    uint32_t n = n_sites();
    if (key.size() == 1) {
        for (uint32_t i = 0; i < n; i++) {
            op_.add_term(PauliString(key, {i}, n), c);
        }
        return *this;
    }
    if (!bc) {
        throw Error(ErrorKind::MissingBoundaryCondition, "two-site term '" + std::string(key) + "' needs OBC or PBC");
    }
    if (n < 2) {
        throw Error(ErrorKind::TooFewSites, "two-site terms need at least 2 sites");
    }
    for (auto [i, j] : bonds_1d(n, *bc)) {
        op_.add_term(PauliString(key, {i, j}, n), c);
    }
    boundaries_[std::string(key)] = *bc;
    return *this;
}

Hamiltonian &Hamiltonian::add_terms_dict(const TermsDict &terms_dict) {
    uint32_t n = n_sites();
    for (const auto &[key, value] : terms_dict) {
        require_key(key);
        bool two_site = key.size() == 2;
        if (const auto *scalar = std::get_if<terms::Scalar>(&value)) {
            if (two_site) {
                throw Error(ErrorKind::MissingBoundaryCondition,
                            "scalar coupling for two-site term '" + key + "' needs a boundary condition");
            }
            add_uniform_terms(key, scalar->value);
        } else if (const auto *uniform = std::get_if<terms::Uniform>(&value)) {
            add_uniform_terms(key, uniform->value, uniform->bc);
        } else if (const auto *array = std::get_if<terms::SiteArray>(&value)) {
            if (two_site || array->values.size() != n) {
                throw Error(ErrorKind::ShapeMismatch, "'" + key + "' expects a length-" + std::to_string(n) +
                                                          " array only for single-site keys");
            }
            for (uint32_t i = 0; i < n; i++) {
                if (array->values[i] != complex{}) {
                    add_term(key, array->values[i], {i});
                }
            }
        } else if (const auto *matrix = std::get_if<terms::Couplings>(&value)) {
            bool square = matrix->values.size() == n &&
                          std::all_of(matrix->values.begin(), matrix->values.end(),
                                      [n](const auto &row) { return row.size() == n; });
            if (!two_site || !square) {
                throw Error(ErrorKind::ShapeMismatch, "'" + key + "' expects an " + std::to_string(n) + "x" +
                                                          std::to_string(n) + " coupling array");
            }
            for (uint32_t i = 0; i < n; i++) {
                for (uint32_t j = 0; j < n; j++) {
                    if (matrix->values[i][j] != complex{}) {
                        add_term(key, matrix->values[i][j], {i, j});
                    }
                }
            }
        } else if (const auto *list = std::get_if<terms::TermList>(&value)) {
            for (const auto &[coeff, sites] : list->values) {
                add_term(key, coeff, sites);
            }
        }
    }
    return *this;
}

std::string Hamiltonian::display() const {
    if (op_.empty()) {
        return "0";
    }
    uint32_t n = n_sites();
    std::map<std::string, std::vector<PauliTerm>> families;
    for (const auto &term : op_.terms()) {
        families[term.string.labels()].push_back(term);
    }

    struct Piece {
        double coeff;
        std::string text;
    };
    std::vector<Piece> pieces;
    std::optional<BoundaryCondition> shared_bc;
    bool readable = true;
    for (const auto &[key, family] : families) {
        double c = family.front().coeff.real();
        bool uniform = std::all_of(family.begin(), family.end(), [c](const PauliTerm &t) { return t.coeff.real() == c; });
        if (!uniform || !is_hamiltonian_key(key)) {
            readable = false;
            break;
        }
        std::set<std::vector<uint32_t>> present;
        for (const auto &t : family) {
            present.insert(t.string.sites());
        }
        if (key.size() == 1) {
            if (present.size() != n) {
                readable = false;
                break;
            }
            pieces.push_back({c, std::string("sum_i ") + key[0] + "_i"});
            continue;
        }
        std::optional<BoundaryCondition> matched;
        for (auto bc : {BoundaryCondition::PBC, BoundaryCondition::OBC}) {
            std::set<std::vector<uint32_t>> expected;
            for (auto [i, j] : bonds_1d(n, bc)) {
                expected.insert({std::min(i, j), std::max(i, j)});
            }
            if (expected == present) {
                matched = bc;
                break;
            }
        }
        if (!matched || (shared_bc && *shared_bc != *matched)) {
            readable = false;
            break;
        }
        shared_bc = matched;
        pieces.push_back({c, std::string("sum_i ") + key[0] + "_i " + key[1] + "_i+1"});
    }
    if (!readable) {
        return op_.str();
    }

    std::string out;
    for (size_t k = 0; k < pieces.size(); k++) {
        double c = pieces[k].coeff;
        if (k == 0) {
            out += format_sig3(c);
        } else {
            out += c < 0 ? " - " : " + ";
            out += format_sig3(std::abs(c));
        }
        out += " * " + pieces[k].text;
    }
    if (shared_bc) {
        out += " (Sums using " + std::string(boundary_name(*shared_bc)) + ")";
    }
    return out;
}

}  // namespace svpite
