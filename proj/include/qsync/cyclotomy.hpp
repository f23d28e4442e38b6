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

#ifndef QSYNC_CYCLOTOMY_HPP
#define QSYNC_CYCLOTOMY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qsync {

using Residue = std::uint64_t;

/// The six cells partitioning Z_2q: {0}, D0, D1, E0, E1 and {q}.
enum class ClassLabel { Zero, D0, D1, E0, E1, Q };

std::string_view to_string(ClassLabel label);
ClassLabel parse_class_label(std::string_view text);

/// Deterministic trial division. Intended for the desk-scale range q, r < 10^6.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Least e >= 1 with a^e = 1 (mod m). Throws InvalidArgument when gcd(a, m) != 1.
std::uint64_t element_order(std::uint64_t a, std::uint64_t m);

/// Smallest g >= 2 that is a primitive root modulo both q and 2q.
std::uint64_t find_common_primitive_root(std::uint64_t q);

/**
 * Cyclotomic classes of order two over Z_2q.
 *
 * D0 = {g^(2s)}, D1 = {g^(2s+1)} for s = 0 .. (q-1)/2 - 1, E_i = 2 D_i, all
 * reduced modulo 2q. Members are kept in generation order (s ascending).
 */
class CyclotomicSystem {
   public:
    std::uint64_t q() const { return q_; }
    std::uint64_t modulus() const { return 2 * q_; }
    std::uint64_t generator() const { return g_; }

    /// Members of one cell in generation order. Zero and Q are singletons.
    const std::vector<Residue>& members(ClassLabel label) const;

    /// Throws InvalidArgument unless 0 <= v < 2q.
    ClassLabel classify(Residue v) const;

    /// Label of v * L (mod 2q) for v in D0 u D1. The image is checked to be one whole cell.
    ClassLabel multiply_class(Residue v, ClassLabel label) const;

   private:
    friend CyclotomicSystem cyclotomic_classes(std::uint64_t q);
    CyclotomicSystem() = default;

    std::uint64_t q_ = 0;
    std::uint64_t g_ = 0;
    std::vector<Residue> d0_, d1_, e0_, e1_, zero_, q_cell_;
    std::vector<ClassLabel> lookup_;
};

CyclotomicSystem cyclotomic_classes(std::uint64_t q);

/// r-cyclotomic cosets modulo 2q keyed by their minimal element.
class CosetTable {
   public:
    std::uint64_t q() const { return q_; }
    std::uint64_t r() const { return r_; }
    std::uint64_t modulus() const { return 2 * q_; }
    /// ord_2q(r), the size of every coset other than {0} and {q}.
    std::uint64_t ell() const { return ell_; }

    /// rep -> members in orbit order t, tr, tr^2, ...
    const std::map<Residue, std::vector<Residue>>& cosets() const { return cosets_; }
    const std::vector<Residue>& coset(Residue rep) const;
    Residue representative_of(Residue v) const;

   private:
    friend CosetTable cyclotomy_cosets(std::uint64_t q, std::uint64_t r);
    CosetTable() = default;

    std::uint64_t q_ = 0;
    std::uint64_t r_ = 0;
    std::uint64_t ell_ = 0;
    std::map<Residue, std::vector<Residue>> cosets_;
    std::vector<Residue> rep_of_;
};

CosetTable cyclotomy_cosets(std::uint64_t q, std::uint64_t r);

struct PairValidation {
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    bool q_odd_prime = false;
    bool q_3_mod_4 = false;
    bool r_odd_prime = false;
    bool r_coprime = false;
    bool r_in_d0 = false;

    bool ok() const { return ok_except_mod4() && q_3_mod_4; }
    bool ok_except_mod4() const { return q_odd_prime && r_odd_prime && r_coprime && r_in_d0; }
    /// Empty when ok(); otherwise the first failed check.
    std::string failure() const;
};

PairValidation validate_pair(std::uint64_t q, std::uint64_t r);

/// Throws InvalidArgument naming the failed check.
void require_pair(std::uint64_t q, std::uint64_t r, bool need_3_mod_4);

/// The `count` smallest primes r passing every check of validate_pair except q mod 4.
std::vector<std::uint64_t> admissible_field_primes(std::uint64_t q, std::size_t count);

}  // namespace qsync

#endif
