#pragma once

// Monomials and monomial ideals over a fixed, positionally indexed set of
// variables. Every ideal is kept in canonical form: a divisibility antichain
// of generators sorted in graded lexicographic order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "depthforge/error.hpp"

namespace depthforge {

using Exponent = std::uint32_t;

/// Size guards for operations whose output can grow combinatorially.
struct Limits {
    std::uint64_t max_total_degree = 1'000'000;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    /// The variable x_index in a ring with num_vars variables.
    static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1) {
        Monomial m(num_vars);
        m.exps_.at(index) = power;
        return m;
    }

    std::size_t num_vars() const noexcept { return exps_.size(); }
    std::span<const Exponent> exponents() const noexcept { return exps_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }

    std::uint64_t degree() const noexcept {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0) out.push_back(i);
        return out;
    }

    std::size_t support_size() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }));
    }

    /// True for x_i^a with a > 0; the monomial 1 is not a pure power.
    bool is_pure_power() const noexcept { return support_size() == 1; }

    /// Indicator vector of the support.
    Monomial squarefree_part() const {
        Monomial out(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] != 0 ? 1 : 0;
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

namespace detail {

inline void require_same_length(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw DimensionMismatch("monomials have " + std::to_string(a.num_vars()) + " and " +
                                std::to_string(b.num_vars()) + " variables");
}

// Hot path of every membership test: no length check.
inline bool divides_unchecked(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace detail

inline bool divides(const Monomial& a, const Monomial& b) {
    detail::require_same_length(a, b);
    return detail::divides_unchecked(a.exponents(), b.exponents());
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    detail::require_same_length(a, b);
    Monomial out(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    detail::require_same_length(a, b);
    Monomial out(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    detail::require_same_length(a, b);
    Monomial out(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i) out[i] = a[i] + b[i];
    return out;
}

/// a / gcd(a, b): the part of a not covered by b.
inline Monomial strip(const Monomial& a, const Monomial& b) {
    detail::require_same_length(a, b);
    Monomial out(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i) out[i] = a[i] > b[i] ? a[i] - b[i] : 0;
    return out;
}

/// Graded lexicographic order: lower total degree first, ties broken so that
/// x1 > x2 > ... (x^2 precedes xy precedes y^2).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.degree();
        const auto db = b.degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                            a.exponents().begin(), a.exponents().end());
    }
};

class MonomialIdeal;
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars);

class MonomialIdeal {
public:
    /// The zero ideal of the polynomial ring in zero variables.
    MonomialIdeal() = default;

    static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars, {}); }
    static MonomialIdeal unit(std::size_t num_vars) { return MonomialIdeal(num_vars, {Monomial(num_vars)}); }

    static MonomialIdeal generated_by(std::size_t num_vars, std::vector<Monomial> gens) {
        return minimalize(std::move(gens), num_vars);
    }

    static MonomialIdeal principal(const Monomial& m) { return MonomialIdeal(m.num_vars(), {m}); }

    /// The prime ideal generated by the listed variables.
    static MonomialIdeal variables(std::size_t num_vars, std::span<const std::size_t> indices) {
        std::vector<Monomial> gens;
        gens.reserve(indices.size());
        for (auto i : indices) gens.push_back(Monomial::variable(num_vars, i));
        return minimalize(std::move(gens), num_vars);
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_proper() const noexcept { return !is_unit(); }

    /// Ideal membership: some generator divides m.
    bool member(const Monomial& m) const {
        if (m.num_vars() != num_vars_)
            throw DimensionMismatch("monomial with " + std::to_string(m.num_vars()) +
                                    " variables tested against ideal in " + std::to_string(num_vars_));
        const auto e = m.exponents();
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
            return detail::divides_unchecked(g.exponents(), e);
        });
    }

    /// Componentwise max over all generators (the zero vector for the zero ideal).
    Monomial generator_lcm() const {
        Monomial out(num_vars_);
        for (const auto& g : gens_)
            for (std::size_t i = 0; i < num_vars_; ++i) out[i] = std::max(out[i], g[i]);
        return out;
    }

    std::uint64_t max_generator_degree() const {
        std::uint64_t d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars);

    MonomialIdeal(std::size_t num_vars, std::vector<Monomial> canonical_gens)
        : num_vars_(num_vars), gens_(std::move(canonical_gens)) {}

    std::size_t num_vars_ = 0;
    std::vector<Monomial> gens_;
};

/// Canonical form of the ideal generated by gens.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars) {
    for (const auto& g : gens)
        if (g.num_vars() != num_vars)
            throw DimensionMismatch("generator with " + std::to_string(g.num_vars()) +
                                    " variables in ring with " + std::to_string(num_vars));
    std::sort(gens.begin(), gens.end(), GrlexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // A proper divisor has strictly smaller degree, so it is already kept.
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (auto& g : gens) {
        const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) {
            return detail::divides_unchecked(k.exponents(), g.exponents());
        });
        if (!redundant) kept.push_back(std::move(g));
    }
    return MonomialIdeal(num_vars, std::move(kept));
}

namespace detail {

inline void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars())
        throw DimensionMismatch("ideals live in rings with " + std::to_string(a.num_vars()) + " and " +
                                std::to_string(b.num_vars()) + " variables");
}

inline void require_proper(const MonomialIdeal& I) {
    if (I.is_unit()) throw ImproperIdeal();
}

}  // namespace detail

inline bool member(const MonomialIdeal& I, const Monomial& m) { return I.member(m); }

/// True iff J is a subset of I.
inline bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ambient(I, J);
    return std::all_of(J.generators().begin(), J.generators().end(),
                       [&](const Monomial& g) { return I.member(g); });
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ambient(I, J);
    std::vector<Monomial> gens(I.generators());
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return minimalize(std::move(gens), I.num_vars());
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J, const Limits& limits = {}) {
    detail::require_same_ambient(I, J);
    if (I.max_generator_degree() + J.max_generator_degree() > limits.max_total_degree)
        throw ResourceLimit("product exceeds the total-degree guard of " +
                            std::to_string(limits.max_total_degree));
    std::vector<Monomial> gens;
    gens.reserve(I.size() * J.size());
    for (const auto& g : I.generators())
        for (const auto& h : J.generators()) gens.push_back(g * h);
    return minimalize(std::move(gens), I.num_vars());
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ambient(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.size() * J.size());
    for (const auto& g : I.generators())
        for (const auto& h : J.generators()) gens.push_back(lcm(g, h));
    return minimalize(std::move(gens), I.num_vars());
}

inline MonomialIdeal power(const MonomialIdeal& I, std::uint64_t k, const Limits& limits = {}) {
    if (k == 0) return MonomialIdeal::unit(I.num_vars());
    if (I.max_generator_degree() > 0 && k > limits.max_total_degree / I.max_generator_degree())
        throw ResourceLimit("power " + std::to_string(k) + " exceeds the total-degree guard of " +
                            std::to_string(limits.max_total_degree));
    MonomialIdeal acc = I;
    for (std::uint64_t i = 1; i < k; ++i) acc = product(acc, I, limits);
    return acc;
}

/// I : m
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    if (m.num_vars() != I.num_vars())
        throw DimensionMismatch("colon by monomial in " + std::to_string(m.num_vars()) +
                                " variables of ideal in " + std::to_string(I.num_vars()));
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const auto& g : I.generators()) gens.push_back(strip(g, m));
    return minimalize(std::move(gens), I.num_vars());
}

/// I : J, the intersection of I : m over the generators m of J.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ambient(I, J);
    MonomialIdeal acc = MonomialIdeal::unit(I.num_vars());
    for (const auto& m : J.generators()) acc = intersect(acc, colon(I, m));
    return acc;
}

inline MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const auto& g : I.generators()) gens.push_back(g.squarefree_part());
    return minimalize(std::move(gens), I.num_vars());
}

/// Embed m into a ring with `before` new leading and `after` new trailing variables.
inline Monomial pad(const Monomial& m, std::size_t before, std::size_t after) {
    std::vector<Exponent> e(before, 0);
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    e.resize(e.size() + after, 0);
    return Monomial(std::move(e));
}

/// I in m variables and J in p variables, extended to k[X, Y] and added.
/// The result presents the tensor product k[X]/I (x) k[Y]/J.
inline MonomialIdeal join_ideals(const MonomialIdeal& I, const MonomialIdeal& J) {
    const auto m = I.num_vars();
    const auto p = J.num_vars();
    std::vector<Monomial> gens;
    gens.reserve(I.size() + J.size());
    for (const auto& g : I.generators()) gens.push_back(pad(g, 0, p));
    for (const auto& h : J.generators()) gens.push_back(pad(h, m, 0));
    return minimalize(std::move(gens), m + p);
}

/// Variable names for a positional ring.
class RingContext {
public:
    RingContext() = default;
    explicit RingContext(std::size_t num_vars) {
        names_.reserve(num_vars);
        for (std::size_t i = 1; i <= num_vars; ++i) names_.push_back("x" + std::to_string(i));
    }
    explicit RingContext(std::vector<std::string> names) : names_(std::move(names)) {
        std::unordered_set<std::string> seen;
        for (const auto& n : names_)
            if (!seen.insert(n).second) throw InvariantViolation("duplicate variable name '" + n + "'");
    }

    std::size_t num_vars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    /// Context for k[X, Y] with X from this ring and Y from other.
    RingContext joined(const RingContext& other) const {
        std::vector<std::string> all(names_);
        all.insert(all.end(), other.names_.begin(), other.names_.end());
        return RingContext(std::move(all));
    }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    std::vector<std::string> names_;
};

}  // namespace depthforge
