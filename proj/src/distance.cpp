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

#include "qsync/distance.hpp"

#include <algorithm>

#include "qsync/cyclotomy.hpp"
#include "qsync/errors.hpp"
#include "qsync/ext_field.hpp"

namespace qsync {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    return __builtin_mul_overflow(a, b, &out) ? ~std::uint64_t{0} : out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
    return out;
}

void require_nonzero_code(const CyclicCode& c) {
    if (c.k() == 0) throw InvalidArgument("minimum distance of the zero code is undefined");
}

// Depth-first walk over column subsets in increasing index order, keeping an
// echelon basis of the columns chosen so far.
class ColumnSearch {
   public:
    enum class Outcome { Dependent, Independent, OutOfBudget };

    ColumnSearch(const CyclicCode& c, std::uint64_t budget) : r_(c.r()), n_(c.n()), budget_(budget) {
        const auto h = parity_check_matrix(c);
        m_ = h.size();
        columns_.assign(n_, std::vector<std::uint64_t>(m_, 0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) columns_[j][i] = h[i][j];
        }
        basis_.assign(n_ + 1, std::vector<std::uint64_t>(m_, 0));
        pivot_.assign(n_ + 1, 0);
    }

    Outcome search(std::size_t w, bool fix_first) {
        width_ = w;
        fix_first_ = fix_first;
        leaves_ = 0;
        return descend(0, 0);
    }

    std::uint64_t leaves() const { return leaves_; }

   private:
    // Reduces column j against basis[0..depth) into basis[depth]; false when it reduces to zero.
    bool reduce_into(std::size_t j, std::size_t depth) {
        auto& v = basis_[depth];
        v = columns_[j];
        for (std::size_t b = 0; b < depth; ++b) {
            const std::uint64_t c = v[pivot_[b]];
            if (c == 0) continue;
            const auto& row = basis_[b];
            const std::uint64_t neg = r_ - c;
            for (std::size_t i = 0; i < m_; ++i) {
                if (row[i] != 0) v[i] = (v[i] + neg * row[i]) % r_;
            }
        }
        ops_ += (depth + 1) * m_;
        auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (it == v.end()) return false;
        pivot_[depth] = static_cast<std::size_t>(it - v.begin());
        const std::uint64_t inv = pow_mod(*it, r_ - 2, r_);
        for (auto& x : v) x = x * inv % r_;
        return true;
    }

    Outcome descend(std::size_t depth, std::size_t start) {
        const std::size_t stop = (depth == 0 && fix_first_) ? 1 : n_ - (width_ - depth) + 1;
        for (std::size_t j = start; j < stop; ++j) {
            if (ops_ > budget_) return Outcome::OutOfBudget;
            const bool independent = reduce_into(j, depth);
            if (depth + 1 == width_) {
                ++leaves_;
                if (!independent) return Outcome::Dependent;
                continue;
            }
            // Every smaller subset was already shown independent, so this cannot fire
            // unless the caller skipped a weight.
            if (!independent) return Outcome::Dependent;
            const Outcome sub = descend(depth + 1, j + 1);
            if (sub != Outcome::Independent) return sub;
        }
        return Outcome::Independent;
    }

    std::uint64_t r_;
    std::size_t n_;
    std::size_t m_ = 0;
    std::uint64_t budget_;
    std::uint64_t ops_ = 0;
    std::size_t width_ = 0;
    bool fix_first_ = false;
    std::uint64_t leaves_ = 0;
    std::vector<std::vector<std::uint64_t>> columns_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::size_t> pivot_;
};

}  // namespace

DistanceResult enumeration_distance(const CyclicCode& c, std::uint64_t budget) {
    require_nonzero_code(c);
    const std::uint64_t r = c.r();
    const std::size_t n = c.n(), k = c.k();
    const auto& g = c.gen().coeffs();
    const std::uint64_t cost = saturating_mul(saturating_pow(r, k), g.size());
    if (cost > budget) {
        throw InvalidArgument("enumeration of r^k = " + std::to_string(r) + "^" + std::to_string(k) +
                              " messages exceeds the budget");
    }

    // Odometer over messages: bumping digit i adds row i, and a wrap r-1 -> 0 adds it once more,
    // which is the same as subtracting (r-1) copies, so one addition per bump keeps the codeword exact.
    std::vector<std::uint64_t> word(n, 0);
    std::vector<std::uint64_t> digits(k, 0);
    std::size_t weight = 0;
    std::size_t best = n;
    while (true) {
        std::size_t i = 0;
        for (; i < k; ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) {
                auto& x = word[i + j];
                const bool was_zero = x == 0;
                x = (x + g[j]) % r;
                weight += static_cast<std::size_t>(was_zero && x != 0);
                weight -= static_cast<std::size_t>(!was_zero && x == 0);
            }
            if (++digits[i] < r) break;
            digits[i] = 0;
        }
        if (i == k) break;
        best = std::min(best, weight);
        if (best == 1) break;
    }
    return {best, best, DistanceMethod::Enumeration, {}};
}

DistanceResult column_dependence_distance(const CyclicCode& c, std::uint64_t budget, bool cyclic_symmetry) {
    require_nonzero_code(c);
    const std::size_t singleton = c.n() - c.k() + 1;
    const std::size_t upper = std::min(c.gen().weight(), singleton);

    ColumnSearch search(c, budget);
    DistanceResult result;
    result.subsets_by_weight.assign(1, 0);
    for (std::size_t w = 1; w <= upper; ++w) {
        const auto outcome = search.search(w, cyclic_symmetry);
        result.subsets_by_weight.push_back(search.leaves());
        if (outcome == ColumnSearch::Outcome::Dependent) {
            result.lower = result.upper = w;
            result.method = DistanceMethod::ColumnDependence;
            return result;
        }
        if (outcome == ColumnSearch::Outcome::OutOfBudget) {
            result.lower = w;
            result.upper = upper;
            result.method = w == upper ? DistanceMethod::ColumnDependence : DistanceMethod::Composite;
            return result;
        }
    }
    // The generator's support is a dependent set of size weight(gen).
    throw InvariantViolation("column search found no dependent set up to weight " + std::to_string(upper));
}

DistanceResult min_distance(const CyclicCode& c, const DistanceOptions& options) {
    require_nonzero_code(c);
    switch (options.engine) {
        case DistanceEngine::Enumeration: return enumeration_distance(c, options.budget);
        case DistanceEngine::ColumnDependence:
            return column_dependence_distance(c, options.budget, options.cyclic_symmetry);
        case DistanceEngine::Auto: break;
    }
    const std::uint64_t cost = saturating_mul(saturating_pow(c.r(), c.k()), c.n());
    if (cost <= kEnumerationThreshold && cost <= options.budget) return enumeration_distance(c, options.budget);
    return column_dependence_distance(c, options.budget, options.cyclic_symmetry);
}

CyclicCode DistanceCache::annotate(const CyclicCode& c, const DistanceOptions& options) {
    Key key{c.r(), c.n(), c.gen().coeffs()};
    {
        std::lock_guard lock(mutex_);
        if (auto it = exact_.find(key); it != exact_.end()) return c.with_distance(it->second);
    }
    DistanceResult d = min_distance(c, options);
    if (d.exact()) {
        std::lock_guard lock(mutex_);
        exact_.emplace(std::move(key), d);
    }
    return c.with_distance(std::move(d));
}

std::size_t DistanceCache::size() const {
    std::lock_guard lock(mutex_);
    return exact_.size();
}

BoundSlack bound_slack(const CyclicCode& c) {
    const auto& d = c.distance();
    if (!d || !d->exact()) throw InvalidArgument("bound_slack needs an exact distance");
    const std::size_t n = c.n(), k = c.k();
    BoundSlack out;
    out.singleton_slack = n - k + 1 - d->lower;
    out.correctable = (d->lower - 1) / 2;

    BigInt redundancy = 1;
    for (std::size_t i = 0; i < n - k; ++i) redundancy *= c.r();
    BigInt volume = 0, binom = 1, scale = 1;
    for (std::size_t t = 0; t <= n; ++t) {
        if (t > 0) {
            binom = binom * (n - t + 1) / t;
            scale *= c.r() - 1;
        }
        volume += binom * scale;
        if (volume > redundancy) break;
        out.hamming_max_t = t;
    }
    return out;
}

}  // namespace qsync
