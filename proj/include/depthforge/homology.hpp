#pragma once

// Multigraded Betti numbers of S/I and the depth they determine.
//
// The main route reads β_{i,a}(S/I) off the reduced homology of the
// upper-Koszul complex K^a(I) for a in the lcm-lattice of I. An independent
// route computes the same numbers as homology of the degree-a strands of the
// Koszul complex of S/I. Depth is n - pd (Auslander–Buchsbaum); for monomial
// quotients the graded depth equals the depth of the localization at the
// ideal of all variables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "depthforge/decomposition.hpp"
#include "depthforge/linear_algebra.hpp"
#include "depthforge/monomial.hpp"
#include "depthforge/parallel.hpp"
#include "depthforge/simplicial.hpp"

namespace depthforge {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
        return h;
    }
};

/// The lcm-lattice of I: lcms of all subsets of the minimal generators,
/// including the empty lcm 0. Sorted in grlex order.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& I) {
    std::unordered_set<Monomial, MonomialHash> seen{Monomial(I.num_vars())};
    std::vector<Monomial> nonzero;
    if (I.is_zero() || I.is_unit()) return {Monomial(I.num_vars())};
    for (const auto& g : I.generators()) {
        std::vector<Monomial> fresh;
        if (seen.insert(g).second) fresh.push_back(g);
        for (const auto& l : nonzero) {
            auto m = lcm(l, g);
            if (seen.count(m) == 0) {
                seen.insert(m);
                fresh.push_back(std::move(m));
            }
        }
        nonzero.insert(nonzero.end(), std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

/// K^a(I): faces σ ⊆ supp(a) with x^{a - 1_σ} in I.
inline SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a) {
    if (a.num_vars() != I.num_vars())
        throw DimensionMismatch("multidegree and ideal have different variable counts");
    const std::size_t n = I.num_vars();
    if (n > kMaxVertices) throw ResourceLimit("too many variables for an upper-Koszul complex");
    Face support = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > 0) support |= Face{1} << i;
    // Faces are closed under subsets; collect those whose proper supersets
    // within supp(a) are not faces.
    std::vector<Face> faces;
    Monomial shifted = a;
    Face s = support;
    while (true) {
        for (std::size_t i = 0; i < n; ++i) shifted[i] = a[i] - ((s >> i) & 1U);
        if (I.member(shifted)) faces.push_back(s);
        if (s == 0) break;
        s = (s - 1) & support;
    }
    return SimplicialComplex(n, std::move(faces));
}

/// Key of a graded Betti number: homological degree and multidegree.
struct BettiKey {
    std::size_t degree = 0;
    Monomial multidegree;

    friend bool operator==(const BettiKey&, const BettiKey&) = default;
    friend bool operator<(const BettiKey& a, const BettiKey& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.multidegree == b.multidegree) return false;
        return GrlexLess{}(a.multidegree, b.multidegree);
    }
};

class BettiTable {
public:
    BettiTable(std::size_t num_vars, FieldSpec field) : num_vars_(num_vars), field_(field) {}

    void set(std::size_t degree, Monomial multidegree, std::uint64_t value) {
        if (value == 0) return;
        entries_[BettiKey{degree, std::move(multidegree)}] = value;
    }

    std::uint64_t get(std::size_t degree, const Monomial& multidegree) const {
        const auto it = entries_.find(BettiKey{degree, multidegree});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<BettiKey, std::uint64_t>& entries() const noexcept { return entries_; }
    std::size_t num_vars() const noexcept { return num_vars_; }
    const FieldSpec& field() const noexcept { return field_; }

    std::size_t projective_dimension() const {
        std::size_t pd = 0;
        for (const auto& [key, value] : entries_) pd = std::max(pd, key.degree);
        return pd;
    }

    /// Auslander–Buchsbaum.
    std::size_t depth() const { return num_vars_ - projective_dimension(); }

    /// Total Betti numbers β_0, β_1, ..., β_pd.
    std::vector<std::uint64_t> totals() const {
        std::vector<std::uint64_t> t(projective_dimension() + 1, 0);
        for (const auto& [key, value] : entries_) t[key.degree] += value;
        return t;
    }

    /// Same entries regardless of field bookkeeping.
    bool same_entries(const BettiTable& other) const {
        return num_vars_ == other.num_vars_ && entries_ == other.entries_;
    }

private:
    std::size_t num_vars_;
    FieldSpec field_;
    std::map<BettiKey, std::uint64_t> entries_;
};

struct BettiOptions {
    /// Also scan every multidegree below the total lcm and fail if a nonzero
    /// Betti number sits outside the lcm-lattice. Only for n <= 3.
    bool rescan_box = false;
    /// Size guards for the Koszul-complex oracle.
    std::size_t oracle_max_vars = 8;
    std::uint64_t oracle_max_box = 4096;
};

namespace detail {

// β_{i,a}(S/I) = dim H̃_{i-2}(K^a(I)) for i >= 1.
inline std::vector<std::pair<std::size_t, std::uint64_t>> betti_at(const MonomialIdeal& I, const Monomial& a,
                                                                   const FieldSpec& field) {
    const auto h = reduced_homology_ranks(upper_koszul_complex(I, a), field);
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t idx = 0; idx < h.ranks.size(); ++idx)
        if (h.ranks[idx] != 0) out.emplace_back(idx + 1, h.ranks[idx]);
    return out;
}

// Visits every monomial componentwise below `bound`.
inline void for_each_in_box(const Monomial& bound, const std::function<void(const Monomial&)>& visit) {
    Monomial m(bound.num_vars());
    while (true) {
        visit(m);
        std::size_t i = 0;
        while (i < m.num_vars() && m[i] == bound[i]) m[i++] = 0;
        if (i == m.num_vars()) return;
        ++m[i];
    }
}

inline std::uint64_t box_size(const Monomial& bound) {
    std::uint64_t size = 1;
    for (auto e : bound.exponents()) {
        if (size > (std::uint64_t{1} << 40)) return size;
        size *= std::uint64_t{e} + 1;
    }
    return size;
}

}  // namespace detail

/// Multigraded Betti numbers of S/I over `field`.
inline BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field = {}, const BettiOptions& options = {}) {
    detail::require_proper(I);
    BettiTable table(I.num_vars(), field);
    table.set(0, Monomial(I.num_vars()), 1);
    if (I.is_zero()) return table;

    auto lattice = lcm_lattice(I);
    lattice.erase(lattice.begin());  // the bottom element 0
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> found(lattice.size());
    parallel_for(lattice.size(), [&](std::size_t k) { found[k] = detail::betti_at(I, lattice[k], field); });
    for (std::size_t k = 0; k < lattice.size(); ++k)
        for (const auto& [degree, value] : found[k]) table.set(degree, lattice[k], value);

    if (options.rescan_box && I.num_vars() <= 3) {
        const std::unordered_set<Monomial, MonomialHash> in_lattice(lattice.begin(), lattice.end());
        detail::for_each_in_box(I.generator_lcm(), [&](const Monomial& a) {
            if (a.is_one() || in_lattice.count(a) != 0) return;
            if (!detail::betti_at(I, a, field).empty())
                throw InvariantViolation("nonzero Betti number outside the lcm-lattice");
        });
    }
    return table;
}

/// Koszul complex strand of S/I in multidegree a: basis in homological
/// degree i is {σ : |σ| = i, a - 1_σ >= 0, x^{a-1_σ} not in I}.
struct KoszulStrand {
    std::vector<std::vector<Face>> basis;  // basis[i]
};

inline KoszulStrand koszul_strand(const MonomialIdeal& I, const Monomial& a) {
    const std::size_t n = I.num_vars();
    KoszulStrand strand;
    strand.basis.resize(n + 1);
    Monomial shifted(n);
    for (Face s = 0; s < (Face{1} << n); ++s) {
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i) {
            const Exponent bit = (s >> i) & 1U;
            if (a[i] < bit) fits = false;
            else shifted[i] = a[i] - bit;
        }
        if (fits && !I.member(shifted)) strand.basis[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    }
    return strand;
}

namespace detail {

// d(e_σ) = Σ_j (-1)^j x_{v_j} e_{σ∖v_j}; a term vanishes when its
// coefficient monomial lies in I, i.e. when σ∖v_j is not a basis element.
inline IntMatrix koszul_differential(const std::vector<Face>& upper, const std::vector<Face>& lower) {
    std::unordered_map<Face, std::size_t> index;
    for (std::size_t j = 0; j < lower.size(); ++j) index.emplace(lower[j], j);
    IntMatrix m(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
        Face rest = upper[r];
        std::int64_t sign = 1;
        while (rest != 0) {
            const Face bit = rest & (~rest + 1);
            rest &= rest - 1;
            if (const auto it = index.find(upper[r] & ~bit); it != index.end()) m[r][it->second] = sign;
            sign = -sign;
        }
    }
    return m;
}

}  // namespace detail

/// Betti numbers of S/I as homology of the Koszul complex K(x_1..x_n) ⊗ S/I,
/// scanning every multidegree below the total lcm of the generators.
inline BettiTable betti_table_koszul_oracle(const MonomialIdeal& I, const FieldSpec& field = {},
                                            const BettiOptions& options = {}) {
    detail::require_proper(I);
    const std::size_t n = I.num_vars();
    if (n > options.oracle_max_vars)
        throw ResourceLimit("Koszul oracle limited to " + std::to_string(options.oracle_max_vars) + " variables");
    const Monomial top = I.generator_lcm();
    if (detail::box_size(top) > options.oracle_max_box)
        throw ResourceLimit("Koszul oracle multidegree box exceeds " + std::to_string(options.oracle_max_box));

    BettiTable table(n, field);
    detail::for_each_in_box(top, [&](const Monomial& a) {
        const auto strand = koszul_strand(I, a);
        std::vector<std::size_t> d_rank(n + 2, 0);  // rank of d_i : C_i -> C_{i-1}
        for (std::size_t i = 1; i <= n; ++i)
            if (!strand.basis[i].empty() && !strand.basis[i - 1].empty())
                d_rank[i] = rank(detail::koszul_differential(strand.basis[i], strand.basis[i - 1]), field);
        for (std::size_t i = 0; i <= n; ++i)
            table.set(i, a, strand.basis[i].size() - d_rank[i] - d_rank[i + 1]);
    });
    return table;
}

inline std::size_t projective_dimension(const MonomialIdeal& I, const FieldSpec& field = {}) {
    return betti_table(I, field).projective_dimension();
}

inline std::size_t depth(const MonomialIdeal& I, const FieldSpec& field = {}) { return betti_table(I, field).depth(); }

/// A monomial w not in I with x_i w in I for every i, i.e. a socle element
/// of S/I, searched in grlex order below the generator lcm. Exists iff depth 0.
inline std::optional<Monomial> depth_zero_witness(const MonomialIdeal& I) {
    detail::require_proper(I);
    const std::size_t n = I.num_vars();
    const Monomial top = I.generator_lcm();
    // A witness has w_i < lcm_i in every variable.
    Monomial bound(n);
    std::uint64_t max_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (top[i] == 0) return std::nullopt;
        bound[i] = top[i] - 1;
        max_degree += bound[i];
    }
    auto is_witness = [&](Monomial& w) {
        if (I.member(w)) return false;
        for (std::size_t i = 0; i < n; ++i) {
            ++w[i];
            const bool in = I.member(w);
            --w[i];
            if (!in) return false;
        }
        return true;
    };
    // Degree by degree; inside a degree, lexicographically largest first.
    Monomial w(n);
    std::function<bool(std::size_t, std::uint64_t)> fill = [&](std::size_t i, std::uint64_t left) -> bool {
        if (i + 1 == n) {
            if (left > bound[i]) return false;
            w[i] = static_cast<Exponent>(left);
            return is_witness(w);
        }
        for (std::uint64_t e = std::min<std::uint64_t>(left, bound[i]) + 1; e-- > 0;) {
            w[i] = static_cast<Exponent>(e);
            if (fill(i + 1, left - e)) return true;
        }
        return false;
    };
    if (n == 0) return is_witness(w) ? std::optional<Monomial>(w) : std::nullopt;
    for (std::uint64_t d = 0; d <= max_degree; ++d)
        if (fill(0, d)) return w;
    return std::nullopt;
}

}  // namespace depthforge
