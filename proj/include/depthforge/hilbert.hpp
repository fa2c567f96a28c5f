#pragma once

// Hilbert series of S/I as numerator / (1 - t)^e in lowest terms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "depthforge/monomial.hpp"

namespace depthforge {

/// Integer polynomial in t; coeffs[k] is the coefficient of t^k, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(std::int64_t c, std::size_t degree) {
        std::vector<std::int64_t> v(degree + 1, 0);
        v[degree] = c;
        return IntPolynomial(std::move(v));
    }

    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

    std::int64_t value_at_one() const {
        std::int64_t s = 0;
        for (auto c : coeffs_) s += c;
        return s;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<std::int64_t> neg(b.coeffs_);
        for (auto& c : neg) c = -c;
        return a + IntPolynomial(std::move(neg));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(v));
    }

    /// Quotient by (1 - t); requires value_at_one() == 0.
    IntPolynomial divided_by_one_minus_t() const {
        if (coeffs_.empty()) return {};
        std::vector<std::int64_t> q(coeffs_.size() - 1, 0);
        std::int64_t run = 0;
        for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
            run += coeffs_[k];
            q[k] = run;
        }
        return IntPolynomial(std::move(q));
    }

    /// Human-readable form such as "1 + t - t^2".
    std::string to_string(const std::string& var = "t") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const auto c = coeffs_[k];
            if (c == 0) continue;
            const auto mag = c < 0 ? -c : c;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            if (k == 0 || mag != 1) out += std::to_string(mag);
            if (k > 0) out += k == 1 ? var : var + "^" + std::to_string(k);
        }
        return out;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<std::int64_t> coeffs_;
};

class HilbertSeries {
public:
    /// numerator / (1 - t)^exponent, reduced to lowest terms.
    HilbertSeries(IntPolynomial numerator, std::size_t exponent)
        : numerator_(std::move(numerator)), exponent_(exponent) {
        while (exponent_ > 0 && !numerator_.is_zero() && numerator_.value_at_one() == 0) {
            numerator_ = numerator_.divided_by_one_minus_t();
            --exponent_;
        }
    }

    const IntPolynomial& numerator() const noexcept { return numerator_; }
    std::size_t denominator_exponent() const noexcept { return exponent_; }

    /// Power-series coefficients of degrees 0..max_degree.
    std::vector<std::int64_t> coefficients(std::size_t max_degree) const {
        std::vector<std::int64_t> c(max_degree + 1, 0);
        for (std::size_t k = 0; k <= max_degree; ++k) c[k] = numerator_.coefficient(k);
        for (std::size_t e = 0; e < exponent_; ++e)
            for (std::size_t k = 1; k <= max_degree; ++k) c[k] += c[k - 1];
        return c;
    }

    friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
        return HilbertSeries(a.numerator_ * b.numerator_, a.exponent_ + b.exponent_);
    }

    std::string to_string() const {
        return "(" + numerator_.to_string() + ")/(1-t)^" + std::to_string(exponent_);
    }

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

private:
    IntPolynomial numerator_;
    std::size_t exponent_ = 0;
};

namespace detail {

// Numerator of the Hilbert series of S/I over (1 - t)^n, by pivoting:
// 0 -> S/(I:p)(-deg p) -> S/I -> S/(I + p) -> 0 gives N(I) = N(I + p) + t^deg(p) N(I : p).
inline IntPolynomial hilbert_numerator(const MonomialIdeal& I) {
    if (I.is_unit()) return {};
    const auto& gens = I.generators();
    const std::size_t n = I.num_vars();

    std::vector<std::size_t> occurrences(n, 0);
    bool disjoint = true;
    std::vector<bool> used(n, false);
    for (const auto& g : gens)
        for (auto v : g.support()) {
            if (used[v]) disjoint = false;
            used[v] = true;
            if (g.support_size() > 1) ++occurrences[v];
        }
    if (disjoint) {
        IntPolynomial acc({1});
        for (const auto& g : gens) acc = acc * (IntPolynomial({1}) - IntPolynomial::monomial(1, g.degree()));
        return acc;
    }

    const auto var = static_cast<std::size_t>(
        std::distance(occurrences.begin(), std::max_element(occurrences.begin(), occurrences.end())));
    std::vector<Exponent> exps;
    for (const auto& g : gens)
        if (g.support_size() > 1 && g[var] > 0) exps.push_back(g[var]);
    std::sort(exps.begin(), exps.end());
    const Exponent e = exps[exps.size() / 2];
    const Monomial pivot = Monomial::variable(n, var, e);

    return hilbert_numerator(sum(I, MonomialIdeal::principal(pivot))) +
           IntPolynomial::monomial(1, e) * hilbert_numerator(colon(I, pivot));
}

}  // namespace detail

inline HilbertSeries hilbert_series(const MonomialIdeal& I) {
    detail::require_proper(I);
    return HilbertSeries(detail::hilbert_numerator(I), I.num_vars());
}

/// Inclusion–exclusion over all subsets of the generators. Exponential; used
/// as an independent check on small ideals.
inline HilbertSeries hilbert_series_inclusion_exclusion(const MonomialIdeal& I, std::size_t max_generators = 20) {
    detail::require_proper(I);
    const auto& gens = I.generators();
    if (gens.size() > max_generators)
        throw ResourceLimit("inclusion-exclusion limited to " + std::to_string(max_generators) + " generators");
    std::map<std::uint64_t, std::int64_t> terms;
    const std::size_t k = gens.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Monomial l(I.num_vars());
        int parity = 1;
        for (std::size_t j = 0; j < k; ++j)
            if ((mask >> j) & 1U) {
                l = lcm(l, gens[j]);
                parity = -parity;
            }
        terms[l.degree()] += parity;
    }
    std::vector<std::int64_t> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, 0);
    for (const auto& [deg, c] : terms) coeffs[deg] = c;
    return HilbertSeries(IntPolynomial(std::move(coeffs)), I.num_vars());
}

}  // namespace depthforge
