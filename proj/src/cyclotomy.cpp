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

#include "qsync/cyclotomy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qsync/errors.hpp"

namespace qsync {

std::string_view to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::Zero: return "ZERO";
        case ClassLabel::D0: return "D0";
        case ClassLabel::D1: return "D1";
        case ClassLabel::E0: return "E0";
        case ClassLabel::E1: return "E1";
        case ClassLabel::Q: return "Q";
    }
    return "?";
}

ClassLabel parse_class_label(std::string_view text) {
    for (auto label : {ClassLabel::Zero, ClassLabel::D0, ClassLabel::D1, ClassLabel::E0, ClassLabel::E1,
                       ClassLabel::Q}) {
        if (to_string(label) == text) return label;
    }
    throw InvalidArgument("unknown class label '" + std::string(text) + "'");
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t element_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw InvalidArgument("element_order: modulus must be at least 2");
    a %= m;
    if (std::gcd(a, m) != 1) {
        throw InvalidArgument("element_order: " + std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    }
    std::uint64_t e = 1;
    for (std::uint64_t x = a; x != 1 % m; x = mul_mod(x, a, m)) ++e;
    return e;
}

std::uint64_t find_common_primitive_root(std::uint64_t q) {
    if (q < 3 || !is_prime(q)) throw InvalidArgument("q=" + std::to_string(q) + " is not an odd prime");
    for (std::uint64_t g = 2; g < 2 * q; ++g) {
        if (std::gcd(g, 2 * q) != 1) continue;
        if (element_order(g, q) == q - 1 && element_order(g, 2 * q) == q - 1) return g;
    }
    // Z_2q^* is cyclic for odd prime q, so the scan cannot fall through.
    throw InvariantViolation("no common primitive root for q=" + std::to_string(q));
}

const std::vector<Residue>& CyclotomicSystem::members(ClassLabel label) const {
    switch (label) {
        case ClassLabel::Zero: return zero_;
        case ClassLabel::D0: return d0_;
        case ClassLabel::D1: return d1_;
        case ClassLabel::E0: return e0_;
        case ClassLabel::E1: return e1_;
        case ClassLabel::Q: return q_cell_;
    }
    throw InvalidArgument("unknown class label");
}

ClassLabel CyclotomicSystem::classify(Residue v) const {
    if (v >= modulus()) {
        throw InvalidArgument("residue " + std::to_string(v) + " outside [0, " + std::to_string(modulus()) + ")");
    }
    return lookup_[v];
}

ClassLabel CyclotomicSystem::multiply_class(Residue v, ClassLabel label) const {
    const ClassLabel own = classify(v);
    if (own != ClassLabel::D0 && own != ClassLabel::D1) {
        throw InvalidArgument("multiplier " + std::to_string(v) + " lies in " + std::string(to_string(own)) +
                              ", not in D0 or D1");
    }
    const auto& source = members(label);
    std::set<Residue> image;
    for (Residue u : source) image.insert(mul_mod(u, v, modulus()));

    const ClassLabel target = classify(*image.begin());
    const auto& cell = members(target);
    if (image != std::set<Residue>(cell.begin(), cell.end())) {
        throw InvariantViolation("image of " + std::string(to_string(label)) + " under " + std::to_string(v) +
                                 " is not a single class");
    }
    return target;
}

CyclotomicSystem cyclotomic_classes(std::uint64_t q) {
    CyclotomicSystem sys;
    sys.q_ = q;
    sys.g_ = find_common_primitive_root(q);
    const std::uint64_t m = 2 * q;
    const std::uint64_t half = (q - 1) / 2;

    std::uint64_t even_power = 1;
    const std::uint64_t g2 = mul_mod(sys.g_, sys.g_, m);
    for (std::uint64_t s = 0; s < half; ++s) {
        const std::uint64_t odd_power = mul_mod(even_power, sys.g_, m);
        sys.d0_.push_back(even_power);
        sys.d1_.push_back(odd_power);
        sys.e0_.push_back(2 * even_power % m);
        sys.e1_.push_back(2 * odd_power % m);
        even_power = mul_mod(even_power, g2, m);
    }
    sys.zero_ = {0};
    sys.q_cell_ = {q};

    constexpr auto unset = static_cast<ClassLabel>(-1);
    sys.lookup_.assign(m, unset);
    for (auto label : {ClassLabel::Zero, ClassLabel::D0, ClassLabel::D1, ClassLabel::E0, ClassLabel::E1,
                       ClassLabel::Q}) {
        for (Residue v : sys.members(label)) {
            if (sys.lookup_[v] != unset) {
                throw InvariantViolation("residue " + std::to_string(v) + " lies in two cyclotomic classes");
            }
            sys.lookup_[v] = label;
        }
    }
    if (std::find(sys.lookup_.begin(), sys.lookup_.end(), unset) != sys.lookup_.end()) {
        throw InvariantViolation("cyclotomic classes do not cover Z_2q");
    }
    return sys;
}

const std::vector<Residue>& CosetTable::coset(Residue rep) const {
    auto it = cosets_.find(rep);
    if (it == cosets_.end()) throw InvalidArgument(std::to_string(rep) + " is not a coset representative");
    return it->second;
}

Residue CosetTable::representative_of(Residue v) const {
    if (v >= modulus()) throw InvalidArgument("residue " + std::to_string(v) + " out of range");
    return rep_of_[v];
}

CosetTable cyclotomy_cosets(std::uint64_t q, std::uint64_t r) {
    if (q < 3 || !is_prime(q)) throw InvalidArgument("q=" + std::to_string(q) + " is not an odd prime");
    const std::uint64_t m = 2 * q;
    if (std::gcd(r, m) != 1) {
        throw InvalidArgument("gcd(r, 2q) != 1 for r=" + std::to_string(r) + ", q=" + std::to_string(q));
    }
    CosetTable table;
    table.q_ = q;
    table.r_ = r;
    table.ell_ = element_order(r, m);
    constexpr Residue unseen = ~Residue{0};
    table.rep_of_.assign(m, unseen);
    // Ascending scan makes the first unseen residue the minimum of its coset.
    for (Residue t = 0; t < m; ++t) {
        if (table.rep_of_[t] != unseen) continue;
        std::vector<Residue> orbit;
        Residue v = t;
        do {
            orbit.push_back(v);
            table.rep_of_[v] = t;
            v = mul_mod(v, r, m);
        } while (v != t);
        table.cosets_.emplace(t, std::move(orbit));
    }
    return table;
}

std::string PairValidation::failure() const {
    if (!q_odd_prime) return "q=" + std::to_string(q) + " is not an odd prime";
    if (!r_odd_prime) return "r=" + std::to_string(r) + " is not an odd prime";
    if (!r_coprime) return "gcd(r, 2q) != 1";
    if (!r_in_d0) return "r mod 2q is not in D0";
    if (!q_3_mod_4) return "q is not congruent to 3 mod 4";
    return {};
}

PairValidation validate_pair(std::uint64_t q, std::uint64_t r) {
    PairValidation v;
    v.q = q;
    v.r = r;
    v.q_odd_prime = q >= 3 && is_prime(q);
    v.q_3_mod_4 = q % 4 == 3;
    v.r_odd_prime = r >= 3 && is_prime(r);
    v.r_coprime = std::gcd(r, 2 * q) == 1;
    if (v.q_odd_prime && v.r_coprime) {
        v.r_in_d0 = cyclotomic_classes(q).classify(r % (2 * q)) == ClassLabel::D0;
    }
    return v;
}

void require_pair(std::uint64_t q, std::uint64_t r, bool need_3_mod_4) {
    const PairValidation v = validate_pair(q, r);
    if (need_3_mod_4 ? !v.ok() : !v.ok_except_mod4()) {
        throw InvalidArgument("invalid (q, r) = (" + std::to_string(q) + ", " + std::to_string(r) +
                              "): " + v.failure());
    }
}

std::vector<std::uint64_t> admissible_field_primes(std::uint64_t q, std::size_t count) {
    const CyclotomicSystem sys = cyclotomic_classes(q);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t r = 3; primes.size() < count; r += 2) {
        if (r == q || !is_prime(r)) continue;
        if (sys.classify(r % (2 * q)) == ClassLabel::D0) primes.push_back(r);
    }
    return primes;
}

}  // namespace qsync
