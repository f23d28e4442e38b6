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

#include "qsync/gf_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qsync/cyclotomy.hpp"
#include "qsync/errors.hpp"

namespace qsync {

namespace {

void require_same_field(std::uint64_t a, std::uint64_t b) {
    if (a != b) throw InvalidArgument("field mismatch: F_" + std::to_string(a) + " vs F_" + std::to_string(b));
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t r) {
    if (a % r == 0) throw InvalidArgument("division by zero in F_" + std::to_string(r));
    return pow_mod(a, r - 2, r);
}

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s && witness; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

// Pollard rho, Floyd cycle detection, increasing constants c = 1, 2, ...
std::uint64_t rho_divisor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void collect_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = rho_divisor(n);
    collect_factors(d, out);
    collect_factors(n / d, out);
}

// Degrees of the irreducible factors of a squarefree f with f(0) != 0.
std::vector<std::size_t> distinct_degrees(const Poly& f) {
    const std::uint64_t r = f.modulus();
    std::vector<std::size_t> degrees;
    Poly rest = f.monic();
    const Poly x = Poly::monomial(r, 1);
    Poly h = x % rest;
    for (std::size_t i = 1; rest.degree().value_or(0) >= 2 * i; ++i) {
        h = pow_mod(h, r, rest);
        const Poly d = gcd(h - x, rest);
        if (!d.is_one()) {
            degrees.push_back(i);
            rest = divmod(rest, d).quotient;
            h = h % rest;
        }
    }
    if (rest.degree().value_or(0) > 0) degrees.push_back(*rest.degree());
    return degrees;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(result, base, &result)) {
            throw InvalidArgument("poly_order: r^d exceeds 64 bits; use the overload taking a known multiple");
        }
    }
    return result;
}

}  // namespace

FieldElem::FieldElem(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

FieldElem FieldElem::operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }

FieldElem FieldElem::inverse() const { return {inv_mod(value_, modulus_), modulus_}; }

FieldElem FieldElem::pow(std::uint64_t e) const { return {pow_mod(value_, e, modulus_), modulus_}; }

FieldElem operator+(FieldElem a, FieldElem b) {
    require_same_field(a.modulus_, b.modulus_);
    return {(a.value_ + b.value_) % a.modulus_, a.modulus_};
}

FieldElem operator-(FieldElem a, FieldElem b) { return a + (-b); }

FieldElem operator*(FieldElem a, FieldElem b) {
    require_same_field(a.modulus_, b.modulus_);
    return {mul_mod(a.value_, b.value_, a.modulus_), a.modulus_};
}

FieldElem operator/(FieldElem a, FieldElem b) { return a * b.inverse(); }

Poly::Poly(std::uint64_t r) : r_(r) {
    if (r < 2 || r >= (std::uint64_t{1} << 32) || !is_prime(r)) {
        throw InvalidArgument("field size r=" + std::to_string(r) + " is not a prime below 2^32");
    }
}

Poly::Poly(std::uint64_t r, std::vector<std::uint64_t> coeffs) : Poly(r) {
    c_ = std::move(coeffs);
    for (auto& c : c_) c %= r_;
    trim();
}

Poly Poly::constant(std::uint64_t r, std::uint64_t c) { return Poly(r, {c}); }

Poly Poly::monomial(std::uint64_t r, std::size_t degree, std::uint64_t c) {
    std::vector<std::uint64_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(r, std::move(v));
}

Poly Poly::x_pow_minus_one(std::uint64_t r, std::size_t n) {
    std::vector<std::uint64_t> v(n + 1, 0);
    v[0] = r - 1;
    v[n] += 1;
    return Poly(r, std::move(v));
}

Poly Poly::parse(std::uint64_t r, std::string_view text) {
    std::vector<std::uint64_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = text.substr(pos, comma - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw InvalidArgument("malformed polynomial '" + std::string(text) + "'");
        }
        const std::uint64_t c = std::stoull(std::string(tok));
        if (c >= r) throw InvalidArgument("coefficient " + std::string(tok) + " not in [0, r)");
        coeffs.push_back(c);
        pos = comma + 1;
    }
    return Poly(r, std::move(coeffs));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

std::optional<std::size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

std::size_t Poly::weight() const { return std::count_if(c_.begin(), c_.end(), [](auto c) { return c != 0; }); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::scaled(std::uint64_t c) const {
    Poly out = *this;
    for (auto& v : out.c_) v = mul_mod(v, c % r_, r_);
    out.trim();
    return out;
}

Poly Poly::monic() const {
    if (c_.empty()) throw InvalidArgument("zero polynomial has no monic associate");
    return scaled(inv_mod(c_.back(), r_));
}

Poly Poly::derivative() const {
    Poly out(r_);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_.push_back(mul_mod(c_[i], i % r_, r_));
    out.trim();
    return out;
}

Poly Poly::reciprocal() const {
    if (c_.empty() || c_[0] == 0) throw InvalidArgument("reciprocal requires h(0) != 0");
    Poly out = *this;
    std::reverse(out.c_.begin(), out.c_.end());
    return out.scaled(inv_mod(c_[0], r_));
}

FieldElem Poly::eval(FieldElem x) const {
    require_same_field(r_, x.modulus());
    return {eval(x.value()), r_};
}

std::uint64_t Poly::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, x % r_, r_) + *it) % r_;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.r_, b.r_);
    Poly out(a.r_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (a.coeff(i) + b.coeff(i)) % a.r_;
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.r_, b.r_);
    Poly out(a.r_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (a.coeff(i) + a.r_ - b.coeff(i)) % a.r_;
    out.trim();
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.r_, b.r_);
    Poly out(a.r_);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out.c_[i + j] = (out.c_[i + j] + mul_mod(a.c_[i], b.c_[j], a.r_)) % a.r_;
        }
    }
    out.trim();
    return out;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

DivMod divmod(const Poly& a, const Poly& b) {
    require_same_field(a.modulus(), b.modulus());
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    const std::uint64_t r = a.modulus();
    std::vector<std::uint64_t> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    if (rem.size() < d.size()) return {Poly(r), a};

    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    const std::uint64_t lead_inv = inv_mod(d.back(), r);
    for (std::size_t i = rem.size(); i-- > db;) {
        const std::uint64_t c = mul_mod(rem[i], lead_inv, r);
        if (c == 0) continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = (rem[i - db + j] + r - mul_mod(c, d[j], r)) % r;
        }
    }
    rem.resize(db);
    return {Poly(r, std::move(quot)), Poly(r, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool divides(const Poly& d, const Poly& p) { return (p % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x.is_zero() ? x : x.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(m.modulus(), 1) % m;
    Poly b = base % m;
    while (e > 0) {
        if (e & 1) result = (result * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return result;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).is_one() || f.degree() == 0;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || *f.degree() < 1) return false;
    const std::size_t n = *f.degree();
    if (n == 1) return true;
    const Poly g = f.monic();
    const std::uint64_t r = g.modulus();
    const Poly x = Poly::monomial(r, 1);

    // frob[k] = x^(r^k) mod g
    std::vector<Poly> frob{x % g};
    for (std::size_t k = 1; k <= n; ++k) frob.push_back(pow_mod(frob.back(), r, g));
    if (frob[n] != x % g) return false;
    for (const auto& [p, mult] : factor_integer(n)) {
        if (!gcd(frob[n / p] - x, g).is_one()) return false;
    }
    return true;
}

Poly find_irreducible(std::uint64_t r, std::size_t n, std::size_t index) {
    if (n < 1) throw InvalidArgument("find_irreducible: degree must be at least 1");
    std::vector<std::uint64_t> digits(n, 0);  // digits[0] = c0 is most significant
    if (n > 1) digits[0] = 1;                 // c0 = 0 means x divides the candidate
    std::size_t found = 0;
    while (true) {
        std::vector<std::uint64_t> coeffs = digits;
        coeffs.push_back(1);
        Poly candidate(r, std::move(coeffs));
        if (is_irreducible(candidate) && found++ == index) return candidate;

        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < r) break;
            digits[pos] = 0;
            if (pos == 0) throw InvalidArgument("find_irreducible: index beyond the number of irreducibles");
        }
    }
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("factor_integer: zero has no factorization");
    std::vector<std::uint64_t> primes;
    collect_factors(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (auto p : primes) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

namespace {

void check_order_input(const Poly& f) {
    if (f.is_zero()) throw InvalidArgument("poly_order: zero polynomial");
    if (f.coeff(0) == 0) throw InvalidArgument("poly_order: f(0) = 0, order undefined");
    if (!is_squarefree(f)) throw InvalidArgument("poly_order: repeated factors are not supported");
}

std::uint64_t reduce_order(const Poly& f, std::uint64_t multiple) {
    const Poly x = Poly::monomial(f.modulus(), 1);
    const Poly one = Poly::constant(f.modulus(), 1) % f;
    std::uint64_t e = multiple;
    for (const auto& [p, mult] : factor_integer(multiple)) {
        for (unsigned i = 0; i < mult && pow_mod(x, e / p, f) == one; ++i) e /= p;
    }
    return e;
}

}  // namespace

std::uint64_t poly_order(const Poly& f, std::uint64_t multiple) {
    check_order_input(f);
    if (*f.degree() == 0) return 1;
    if (multiple == 0 || pow_mod(Poly::monomial(f.modulus(), 1), multiple, f) != Poly::constant(f.modulus(), 1)) {
        throw InvalidArgument("poly_order: f does not divide x^" + std::to_string(multiple) + " - 1");
    }
    return reduce_order(f, multiple);
}

std::uint64_t poly_order(const Poly& f) {
    check_order_input(f);
    if (*f.degree() == 0) return 1;
    // x has order dividing r^d - 1 in each field component F_r[x]/(p_i) of degree d.
    std::uint64_t exponent = 1;
    for (std::size_t d : distinct_degrees(f)) {
        const std::uint64_t group = checked_pow(f.modulus(), d) - 1;
        const std::uint64_t g = std::gcd(exponent, group);
        if (__builtin_mul_overflow(exponent / g, group, &exponent)) {
            throw InvalidArgument("poly_order: exponent bound exceeds 64 bits; use the overload taking a known multiple");
        }
    }
    return reduce_order(f, exponent);
}

}  // namespace qsync
