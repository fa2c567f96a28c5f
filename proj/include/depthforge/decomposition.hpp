#pragma once

// Irreducible decomposition of monomial ideals, associated and minimal
// primes, and Krull dimension of the quotient.
//
// All invariants are computed for the graded ring S/I. Every minimal prime of
// a monomial ideal sits inside the ideal of all variables, so the values agree
// with those of the localization at that ideal.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "depthforge/monomial.hpp"

namespace depthforge {

/// Prime generated by a subset of the variables. The empty subset is the zero prime.
class MonomialPrime {
public:
    MonomialPrime() = default;
    MonomialPrime(std::size_t num_vars, std::vector<std::size_t> vars) : num_vars_(num_vars), vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        if (!vars_.empty() && vars_.back() >= num_vars_)
            throw DimensionMismatch("prime uses variable " + std::to_string(vars_.back()) + " of a ring with " +
                                    std::to_string(num_vars_) + " variables");
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<std::size_t>& vars() const noexcept { return vars_; }
    std::size_t height() const noexcept { return vars_.size(); }

    bool is_subset_of(const MonomialPrime& other) const {
        return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
    }

    MonomialIdeal ideal() const { return MonomialIdeal::variables(num_vars_, vars_); }

    /// Union with the prime of another ring, shifted past this ring's variables.
    MonomialPrime joined(const MonomialPrime& other) const {
        std::vector<std::size_t> vars(vars_);
        for (auto v : other.vars_) vars.push_back(v + num_vars_);
        return MonomialPrime(num_vars_ + other.num_vars_, std::move(vars));
    }

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
    friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
        if (a.vars_.size() != b.vars_.size()) return a.vars_.size() <=> b.vars_.size();
        return a.vars_ <=> b.vars_;
    }

private:
    std::size_t num_vars_ = 0;
    std::vector<std::size_t> vars_;
};

inline std::size_t height(const MonomialPrime& p) { return p.height(); }

/// Irreducible monomial ideal (x_i^{e_i} : e_i > 0). All-zero exponents denote the zero ideal.
class IrreducibleComponent {
public:
    IrreducibleComponent() = default;
    explicit IrreducibleComponent(Monomial exponents) : exps_(std::move(exponents)) {}

    std::size_t num_vars() const noexcept { return exps_.num_vars(); }
    /// Exponent of x_i, or 0 when x_i does not occur.
    Exponent exponent(std::size_t i) const { return exps_[i]; }
    const Monomial& exponent_vector() const noexcept { return exps_; }
    bool is_zero() const noexcept { return exps_.is_one(); }

    MonomialPrime support() const { return MonomialPrime(exps_.num_vars(), exps_.support()); }

    MonomialIdeal ideal() const {
        std::vector<Monomial> gens;
        for (auto i : exps_.support()) gens.push_back(Monomial::variable(exps_.num_vars(), i, exps_[i]));
        return MonomialIdeal::generated_by(exps_.num_vars(), std::move(gens));
    }

    /// Ideal containment this ⊆ other.
    bool is_contained_in(const IrreducibleComponent& other) const {
        for (std::size_t i = 0; i < exps_.num_vars(); ++i) {
            if (exps_[i] == 0) continue;
            if (other.exps_[i] == 0 || other.exps_[i] > exps_[i]) return false;
        }
        return true;
    }

    friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
    friend auto operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        const auto sa = a.exps_.support_size();
        const auto sb = b.exps_.support_size();
        if (sa != sb) return sa <=> sb;
        // (x) before (x^2, y): compare (variable, exponent) pairs in order.
        for (std::size_t i = 0; i < a.num_vars(); ++i) {
            const bool ia = a.exps_[i] != 0;
            const bool ib = b.exps_[i] != 0;
            if (ia != ib) return ia ? std::strong_ordering::less : std::strong_ordering::greater;
            if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    Monomial exps_;
};

namespace detail {

// `seen` holds subideals already split; their leaves are in `out` already.
inline void split_into_irreducibles(const MonomialIdeal& I, std::vector<IrreducibleComponent>& out,
                                    std::set<std::vector<Monomial>>& seen) {
    const auto& gens = I.generators();
    if (!seen.insert(gens).second) return;
    // Generators are stored in grlex order, so the first hit is the grlex-first one.
    const auto it = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return g.support_size() > 1; });
    if (it == gens.end()) {
        Monomial exps(I.num_vars());
        for (const auto& g : gens) {
            const auto i = g.support().front();
            exps[i] = g[i];
        }
        out.emplace_back(std::move(exps));
        return;
    }
    const Monomial& m = *it;
    const std::size_t var = m.support().front();
    const Monomial pure = Monomial::variable(I.num_vars(), var, m[var]);
    Monomial rest = m;
    rest[var] = 0;

    std::vector<Monomial> others;
    others.reserve(gens.size());
    for (auto g = gens.begin(); g != gens.end(); ++g)
        if (g != it) others.push_back(*g);

    auto left = others;
    left.push_back(pure);
    split_into_irreducibles(minimalize(std::move(left), I.num_vars()), out, seen);
    others.push_back(std::move(rest));
    split_into_irreducibles(minimalize(std::move(others), I.num_vars()), out, seen);
}

}  // namespace detail

/// Drop duplicate and redundant components. An irreducible monomial ideal
/// contains an intersection of monomial ideals only if it contains one of
/// them, so pairwise containment decides redundancy.
inline std::vector<IrreducibleComponent> make_irredundant(std::vector<IrreducibleComponent> comps) {
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    std::vector<IrreducibleComponent> kept;
    kept.reserve(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
        bool redundant = false;
        for (std::size_t i = 0; i < comps.size() && !redundant; ++i)
            redundant = i != j && comps[i].is_contained_in(comps[j]);
        if (!redundant) kept.push_back(comps[j]);
    }
    return kept;
}

/// Unique irredundant irreducible decomposition of a proper monomial ideal,
/// in canonical component order.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    detail::require_proper(I);
    std::vector<IrreducibleComponent> comps;
    std::set<std::vector<Monomial>> seen;
    detail::split_into_irreducibles(I, comps, seen);
    return make_irredundant(std::move(comps));
}

/// Intersection of the ideals of a component list (the unit ideal for an empty list).
inline MonomialIdeal intersect_components(std::span<const IrreducibleComponent> comps, std::size_t num_vars) {
    MonomialIdeal acc = MonomialIdeal::unit(num_vars);
    for (const auto& c : comps) acc = intersect(acc, c.ideal());
    return acc;
}

namespace detail {

inline std::vector<MonomialPrime> supports(std::span<const IrreducibleComponent> comps) {
    std::set<MonomialPrime> primes;
    for (const auto& c : comps) primes.insert(c.support());
    return {primes.begin(), primes.end()};
}

inline std::vector<MonomialPrime> inclusion_minimal(const std::vector<MonomialPrime>& primes) {
    std::vector<MonomialPrime> out;
    for (const auto& p : primes) {
        const bool has_smaller = std::any_of(primes.begin(), primes.end(), [&](const MonomialPrime& q) {
            return q != p && q.is_subset_of(p);
        });
        if (!has_smaller) out.push_back(p);
    }
    return out;
}

}  // namespace detail

inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
    return detail::supports(irreducible_decomposition(I));
}

inline std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
    return detail::inclusion_minimal(associated_primes(I));
}

struct DecompositionResult {
    std::vector<IrreducibleComponent> components;
    std::vector<MonomialPrime> ass_primes;
    std::vector<MonomialPrime> min_primes;
    std::size_t dimension = 0;
    std::size_t height = 0;
};

inline DecompositionResult decompose(const MonomialIdeal& I) {
    DecompositionResult r;
    r.components = irreducible_decomposition(I);
    r.ass_primes = detail::supports(r.components);
    r.min_primes = detail::inclusion_minimal(r.ass_primes);
    std::size_t h = I.num_vars();
    for (const auto& p : r.min_primes) h = std::min(h, p.height());
    r.height = h;
    r.dimension = I.num_vars() - h;
    return r;
}

/// Krull dimension of S/I.
inline std::size_t dimension(const MonomialIdeal& I) { return decompose(I).dimension; }

}  // namespace depthforge
