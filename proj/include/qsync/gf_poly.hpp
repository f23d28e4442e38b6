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

#ifndef QSYNC_GF_POLY_HPP
#define QSYNC_GF_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsync {

/// Element of the prime field F_r. Value is always reduced into [0, r).
class FieldElem {
   public:
    FieldElem(std::uint64_t value, std::uint64_t modulus);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    friend FieldElem operator+(FieldElem a, FieldElem b);
    friend FieldElem operator-(FieldElem a, FieldElem b);
    friend FieldElem operator*(FieldElem a, FieldElem b);
    friend FieldElem operator/(FieldElem a, FieldElem b);
    friend bool operator==(FieldElem a, FieldElem b) = default;

   private:
    std::uint64_t value_;
    std::uint64_t modulus_;
};

/**
 * Dense univariate polynomial over F_r with ascending coefficients.
 *
 * Canonical form has no trailing zero coefficients; the zero polynomial has an
 * empty coefficient vector and no degree.
 */
class Poly {
   public:
    explicit Poly(std::uint64_t r);
    Poly(std::uint64_t r, std::vector<std::uint64_t> coeffs);

    static Poly constant(std::uint64_t r, std::uint64_t c);
    static Poly monomial(std::uint64_t r, std::size_t degree, std::uint64_t c = 1);
    /// x^n - 1
    static Poly x_pow_minus_one(std::uint64_t r, std::size_t n);

    /// Parses "c0,c1,...". "0" is the zero polynomial.
    static Poly parse(std::uint64_t r, std::string_view text);
    std::string to_string() const;

    std::uint64_t modulus() const { return r_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::optional<std::size_t> degree() const;
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    /// Number of nonzero coefficients.
    std::size_t weight() const;

    Poly monic() const;
    Poly derivative() const;
    /// h(0)^(-1) x^deg(h) h(1/x). Requires h(0) != 0.
    Poly reciprocal() const;
    FieldElem eval(FieldElem x) const;
    std::uint64_t eval(std::uint64_t x) const;
    Poly scaled(std::uint64_t c) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;
    /// Coefficient-wise lexicographic order on (degree, coefficients from the top); used for set comparisons.
    friend bool operator<(const Poly& a, const Poly& b);

   private:
    void trim();

    std::uint64_t r_;
    std::vector<std::uint64_t> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Throws InvalidArgument when b is zero or the moduli differ.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& p);
/// Monic generator of (a, b); zero when both are zero.
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);
bool is_squarefree(const Poly& f);

/// Rabin's test. Constant polynomials are not irreducible.
bool is_irreducible(const Poly& f);

/**
 * Monic irreducible polynomials of degree n in lexicographic order of
 * (c0, c1, ..., c_{n-1}), c0 most significant. index = 0 is the smallest.
 */
Poly find_irreducible(std::uint64_t r, std::size_t n, std::size_t index = 0);

/// Least e >= 1 with f | x^e - 1. f must be squarefree with f(0) != 0.
/// Works from the multiplicative order of x in F_r[x]/(f), i.e. the order of a root.
std::uint64_t poly_order(const Poly& f);

/// Same, given any e0 with f | x^e0 - 1 (e.g. n for divisors of x^n - 1).
std::uint64_t poly_order(const Poly& f, std::uint64_t multiple);

/// Prime factorization of n as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);

}  // namespace qsync

#endif
