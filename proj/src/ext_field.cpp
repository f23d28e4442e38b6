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

#include "qsync/ext_field.hpp"

#include "qsync/cyclotomy.hpp"
#include "qsync/errors.hpp"

namespace qsync {

ExtField::ExtField(Poly modulus) : modulus_(std::move(modulus)) {
    if (!modulus_.is_monic() || !is_irreducible(modulus_)) {
        throw InvalidArgument("extension modulus " + modulus_.to_string() + " is not monic irreducible");
    }
}

BigInt ExtField::size() const {
    BigInt s = 1;
    for (std::size_t i = 0; i < degree(); ++i) s *= r();
    return s;
}

Poly ExtField::element(const BigInt& index) const {
    std::vector<std::uint64_t> coeffs;
    BigInt rest = index;
    for (std::size_t i = 0; i < degree() && rest != 0; ++i) {
        coeffs.push_back(static_cast<std::uint64_t>(rest % r()));
        rest /= r();
    }
    return Poly(r(), std::move(coeffs));
}

Poly ExtField::pow(const Poly& a, std::uint64_t e) const { return pow_mod(a, e, modulus_); }

Poly ExtField::pow(const Poly& a, const BigInt& e) const {
    Poly result = one() % modulus_;
    Poly base = a % modulus_;
    const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
    for (std::size_t i = 0; i < bits; ++i) {
        if (boost::multiprecision::bit_test(e, i)) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

UnityRoot::UnityRoot(ExtField field, Poly eta, std::uint64_t order)
    : field_(std::move(field)), eta_(std::move(eta)), order_(order) {
    powers_.reserve(order_);
    Poly p = field_.one();
    for (std::uint64_t j = 0; j < order_; ++j) {
        powers_.push_back(p);
        p = field_.mul(p, eta_);
    }
    if (!(p == field_.one())) throw InvariantViolation("eta^order != 1");
    for (std::uint64_t j = 1; j < order_; ++j) {
        if (powers_[j] == field_.one()) throw InvariantViolation("eta has order below " + std::to_string(order_));
    }
}

UnityRoot find_unity_root(std::uint64_t r, std::uint64_t q) {
    const std::size_t n = element_order(r, 2 * q);
    return find_unity_root(ExtField(find_irreducible(r, n)), q);
}

UnityRoot find_unity_root(const ExtField& field, std::uint64_t q) {
    const std::uint64_t order = 2 * q;
    const BigInt group = field.size() - 1;
    if (group % order != 0) {
        throw InvariantViolation("2q=" + std::to_string(order) + " does not divide r^n - 1 for n=" +
                                 std::to_string(field.degree()));
    }
    const BigInt cofactor = group / order;
    const Poly one = field.one();
    const Poly minus_one = field.from_base(field.r() - 1);

    // eta^(2q) = 1 by construction; the order is exactly 2q iff eta^q != 1 and eta^2 != 1.
    for (BigInt index = 1; index <= group; ++index) {
        const Poly eta = field.pow(field.element(index), cofactor);
        const Poly eta_q = field.pow(eta, q);
        if (eta_q == one || field.mul(eta, eta) == one) continue;
        if (!(eta_q == minus_one)) throw InvariantViolation("eta^q != -1 for an element of order 2q");
        return UnityRoot(field, eta, order);
    }
    throw InvariantViolation("no element of order 2q in F_{r^n}");
}

}  // namespace qsync
