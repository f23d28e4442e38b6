/*
   Copyright 2026 The qsync Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qsync/cyclic_code.hpp"

#include <algorithm>

#include "qsync/errors.hpp"

namespace qsync {

std::string_view to_string(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::Enumeration: return "enumeration";
        case DistanceMethod::ColumnDependence: return "column-dependence";
        case DistanceMethod::Composite: return "composite";
    }
    return "?";
}

CyclicCode::CyclicCode(Poly gen, std::uint64_t q) : gen_(std::move(gen)), q_(q) {
    if (!gen_.is_monic()) throw InvalidArgument("generator " + gen_.to_string() + " is not monic");
    if (!divides(gen_, Poly::x_pow_minus_one(gen_.modulus(), 2 * q_))) {
        throw InvalidArgument("generator " + gen_.to_string() + " does not divide x^" + std::to_string(2 * q_) +
                              " - 1");
    }
}

Poly CyclicCode::check_poly() const { return divmod(Poly::x_pow_minus_one(r(), n()), gen_).quotient; }

CyclicCode CyclicCode::with_distance(DistanceResult d) const {
    CyclicCode c = *this;
    c.distance_ = std::move(d);
    return c;
}

CyclicCode code_from_generator(const Poly& gen, std::uint64_t q, std::uint64_t r) {
    if (gen.modulus() != r) throw InvalidArgument("generator is not over F_" + std::to_string(r));
    return CyclicCode(gen, q);
}

CyclicCode dual_code(const CyclicCode& c) { return CyclicCode(c.check_poly().reciprocal(), c.q()); }

namespace {

void require_compatible(const CyclicCode& a, const CyclicCode& b) {
    if (a.n() != b.n() || a.r() != b.r()) {
        throw InvalidArgument("codes differ in length or field: [" + std::to_string(a.n()) + "]_" +
                              std::to_string(a.r()) + " vs [" + std::to_string(b.n()) + "]_" +
                              std::to_string(b.r()));
    }
}

std::vector<std::vector<std::uint64_t>> shifts(const Poly& p, std::size_t rows, std::size_t n) {
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) m[i][i + j] = p.coeffs()[j];
    }
    return m;
}

}  // namespace

bool is_subcode(const CyclicCode& c1, const CyclicCode& c2) {
    require_compatible(c1, c2);
    return divides(c2.gen(), c1.gen());
}

bool is_dual_containing(const CyclicCode& c) { return divides(c.gen(), dual_code(c).gen()); }

std::vector<Residue> factor_reps(const CyclicCode& c, const MinimalPolyTable& table) {
    if (table.r() != c.r() || table.n() != c.n()) throw InvalidArgument("factor table does not match the code");
    std::vector<Residue> reps;
    for (const auto& [rep, m] : table.entries()) {
        if (divides(m, c.gen())) reps.push_back(rep);
    }
    return reps;
}

CyclicCode augment(const CyclicCode& c, const MinimalPolyTable& table, const std::set<Residue>& remove) {
    const std::vector<Residue> reps = factor_reps(c, table);
    Poly gen = c.gen();
    for (Residue t : remove) {
        if (!std::binary_search(reps.begin(), reps.end(), t)) {
            throw InvalidArgument("M_" + std::to_string(t) + " does not divide the generator");
        }
        gen = divmod(gen, table.at(t)).quotient;
    }
    if (!remove.empty() && remove.size() == reps.size()) {
        throw InvalidArgument("augment must remove a proper subset of the generator's factors");
    }
    return CyclicCode(std::move(gen), c.q());
}

std::vector<std::vector<std::uint64_t>> generator_matrix(const CyclicCode& c) { return shifts(c.gen(), c.k(), c.n()); }

std::vector<std::vector<std::uint64_t>> parity_check_matrix(const CyclicCode& c) {
    return shifts(dual_code(c).gen(), c.n() - c.k(), c.n());
}

nlohmann::json code_record(const CyclicCode& c) {
    nlohmann::json j = {{"q", c.q()},
                        {"r", c.r()},
                        {"n", c.n()},
                        {"k", c.k()},
                        {"gen", c.gen().to_string()},
                        {"dual_containing", is_dual_containing(c)}};
    if (const auto& d = c.distance()) {
        j["d"] = d->exact() ? nlohmann::json(d->lower) : nlohmann::json(nullptr);
        j["d_lower"] = d->lower;
        j["d_upper"] = d->upper;
        j["method"] = std::string(to_string(d->method));
    } else {
        j["d"] = nullptr;
        j["d_lower"] = nullptr;
        j["d_upper"] = nullptr;
        j["method"] = nullptr;
    }
    return j;
}

}  // namespace qsync
