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

#ifndef QSYNC_EXT_FIELD_HPP
#define QSYNC_EXT_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "qsync/gf_poly.hpp"

namespace qsync {

using BigInt = boost::multiprecision::cpp_int;

/// F_{r^n} realized as F_r[x]/(modulus). Elements are Poly of degree < n.
class ExtField {
   public:
    /// Throws InvalidArgument unless modulus is monic irreducible.
    explicit ExtField(Poly modulus);

    std::uint64_t r() const { return modulus_.modulus(); }
    std::size_t degree() const { return *modulus_.degree(); }
    const Poly& modulus() const { return modulus_; }
    /// r^n as an arbitrary-precision integer.
    BigInt size() const;

    Poly zero() const { return Poly(r()); }
    Poly one() const { return Poly::constant(r(), 1); }
    Poly from_base(std::uint64_t c) const { return Poly::constant(r(), c); }
    /// Element whose base-r digits (c0 least significant) spell `index`.
    Poly element(const BigInt& index) const;

    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % modulus_; }
    Poly pow(const Poly& a, std::uint64_t e) const;
    Poly pow(const Poly& a, const BigInt& e) const;

    /// True when the element lies in the prime subfield.
    static bool is_base(const Poly& a) { return a.degree().value_or(0) == 0; }

   private:
    Poly modulus_;
};

/// A primitive 2q-th root of unity eta in the extension of degree ord_2q(r).
class UnityRoot {
   public:
    UnityRoot(ExtField field, Poly eta, std::uint64_t order);

    const ExtField& field() const { return field_; }
    const Poly& eta() const { return eta_; }
    std::uint64_t order() const { return order_; }
    /// eta^j, exponent taken modulo the order.
    const Poly& power(std::uint64_t j) const { return powers_[j % order_]; }

   private:
    ExtField field_;
    Poly eta_;
    std::uint64_t order_;
    std::vector<Poly> powers_;
};

/// Uses the lexicographically smallest irreducible of degree ord_2q(r) as modulus.
UnityRoot find_unity_root(std::uint64_t r, std::uint64_t q);

/**
 * Scans nonzero elements gamma in index order and returns the first
 * eta = gamma^((r^n - 1) / 2q) of exact order 2q. field.degree() must be ord_2q(r).
 */
UnityRoot find_unity_root(const ExtField& field, std::uint64_t q);

}  // namespace qsync

#endif
