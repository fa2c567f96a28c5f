#pragma once

// Builders for local rings with prescribed dimension and depth, flat local
// morphisms between them, and the verification reports that recompute every
// claimed invariant from the presentation.
//
// Rings are presented as S/I with S a polynomial ring and I monomial; the
// local ring is the localization at the ideal of all variables. Dimension and
// depth of the localization agree with the graded values computed here.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthforge/decomposition.hpp"
#include "depthforge/hilbert.hpp"
#include "depthforge/homology.hpp"
#include "depthforge/monomial.hpp"

namespace depthforge {

/// Cohen–Macaulay defect dim - depth.
inline std::size_t cm_defect(std::size_t dim, std::size_t depth) {
    if (depth > dim)
        throw InvariantViolation("depth " + std::to_string(depth) + " exceeds dimension " + std::to_string(dim));
    return dim - depth;
}

inline bool is_cohen_macaulay(std::size_t dim, std::size_t depth) { return cm_defect(dim, depth) == 0; }
inline bool is_almost_cohen_macaulay(std::size_t dim, std::size_t depth) { return cm_defect(dim, depth) <= 1; }

struct Inequality {
    std::string name;
    bool holds;
};

namespace detail {

inline void require_all(const std::vector<Inequality>& checks, const std::string& context) {
    std::string violated;
    const std::string* first = nullptr;
    for (const auto& c : checks)
        if (!c.holds) {
            if (!first) first = &c.name;
            violated += violated.empty() ? c.name : ", " + c.name;
        }
    if (first) throw ConstraintViolation(*first, context + "; violated: " + violated);
}

}  // namespace detail

/// Target (dimension, depth) of a single ring.
struct LemmaParams {
    std::int64_t dim = 0;
    std::int64_t depth = 0;

    std::vector<Inequality> inequalities() const {
        return {{"0 <= d", 0 <= depth}, {"d <= n", depth <= dim}};
    }
    void validate() const {
        detail::require_all(inequalities(), "n=" + std::to_string(dim) + ", d=" + std::to_string(depth));
    }
    std::int64_t defect() const { return dim - depth; }
};

/// Targets (n1, d1) for the source and (n2, d2) for the target of the morphism.
struct MorphismParams {
    std::int64_t dim_a = 0;
    std::int64_t depth_a = 0;
    std::int64_t dim_b = 0;
    std::int64_t depth_b = 0;

    /// Every admissibility condition, in the order they are reported.
    std::vector<Inequality> inequalities() const {
        return {
            {"0 <= d1", 0 <= depth_a},
            {"d1 <= n1", depth_a <= dim_a},
            {"0 <= d2", 0 <= depth_b},
            {"d2 <= n2", depth_b <= dim_b},
            {"n1 <= n2", dim_a <= dim_b},
            {"d1 <= d2", depth_a <= depth_b},
            {"n1-d1 <= n2-d2", dim_a - depth_a <= dim_b - depth_b},
        };
    }

    void validate() const {
        detail::require_all(inequalities(), "n1=" + std::to_string(dim_a) + ", d1=" + std::to_string(depth_a) +
                                                ", n2=" + std::to_string(dim_b) + ", d2=" + std::to_string(depth_b));
    }

    /// Depth and dimension of the auxiliary ring C: s = d2 - d1, t = n2 - n1.
    std::int64_t depth_gap() const { return depth_b - depth_a; }
    std::int64_t dim_gap() const { return dim_b - dim_a; }
};

struct RingPresentation {
    std::string label;
    RingContext context;
    MonomialIdeal ideal;
    std::size_t expected_dim = 0;
    std::size_t expected_depth = 0;
    /// Expected associated primes when the construction pins them down.
    std::optional<std::vector<MonomialPrime>> expected_ass;
    std::string recipe;
};

/// Variable naming for a lemma ring: X0..Xr for the core block, T1..Td for the free variables.
struct LemmaNaming {
    std::string core = "X";
    std::string free = "T";
};

/// S = k[X0..Xr, T1..Td] with I = (X0) ∩ (X0..Xr)^{r+1}, r = n - d; for r = 0
/// the zero ideal of k[T1..Tn].
inline RingPresentation build_lemma_ring(const LemmaParams& p, const LemmaNaming& naming = {},
                                         const std::string& label = "A", const Limits& limits = {}) {
    p.validate();
    const auto n = static_cast<std::size_t>(p.dim);
    const auto d = static_cast<std::size_t>(p.depth);
    const std::size_t r = n - d;

    RingPresentation rp;
    rp.label = label;
    rp.expected_dim = n;
    rp.expected_depth = d;
    std::vector<std::string> names;
    if (r == 0) {
        for (std::size_t j = 1; j <= d; ++j) names.push_back(naming.free + std::to_string(j));
        rp.context = RingContext(std::move(names));
        rp.ideal = MonomialIdeal::zero(n);
        rp.expected_ass = std::vector<MonomialPrime>{MonomialPrime(n, {})};
        rp.recipe = "zero ideal in " + std::to_string(n) + " variables (polynomial ring)";
        return rp;
    }
    const std::size_t m = r + 1 + d;
    for (std::size_t i = 0; i <= r; ++i) names.push_back(naming.core + std::to_string(i));
    for (std::size_t j = 1; j <= d; ++j) names.push_back(naming.free + std::to_string(j));
    rp.context = RingContext(std::move(names));

    std::vector<std::size_t> core(r + 1);
    for (std::size_t i = 0; i <= r; ++i) core[i] = i;
    const auto x0 = MonomialIdeal::principal(Monomial::variable(m, 0));
    rp.ideal = intersect(x0, power(MonomialIdeal::variables(m, core), r + 1, limits));
    rp.expected_ass = std::vector<MonomialPrime>{MonomialPrime(m, {0}), MonomialPrime(m, core)};
    rp.recipe = "(" + naming.core + "0) ∩ (" + naming.core + "0.." + naming.core + std::to_string(r) + ")^" +
                std::to_string(r + 1) + " in " + std::to_string(m) + " variables";
    return rp;
}

enum class Verdict { pass, fail, skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "fail";
}

struct Claim {
    std::string name;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::fail;
};

inline Claim make_claim(std::string name, const std::string& expected, const std::string& computed) {
    return Claim{std::move(name), expected, computed, expected == computed ? Verdict::pass : Verdict::fail};
}

inline std::string format_primes(const std::vector<MonomialPrime>& primes, const RingContext& ctx) {
    std::string out = "{";
    for (std::size_t k = 0; k < primes.size(); ++k) {
        if (k) out += ", ";
        out += "(";
        const auto& vars = primes[k].vars();
        if (vars.empty()) out += "0";
        for (std::size_t j = 0; j < vars.size(); ++j) out += (j ? "," : "") + ctx.name(vars[j]);
        out += ")";
    }
    return out + "}";
}

/// Everything computed about one ring S/I.
struct RingInvariants {
    DecompositionResult decomposition;
    BettiTable betti{0, FieldSpec{}};
    std::size_t dim = 0;
    std::size_t depth = 0;
    std::size_t pd = 0;
    std::size_t cmd = 0;
    bool cohen_macaulay = false;
    bool almost_cohen_macaulay = false;
};

inline RingInvariants compute_invariants(const MonomialIdeal& I, const FieldSpec& field) {
    RingInvariants inv;
    inv.decomposition = decompose(I);
    inv.betti = betti_table(I, field);
    inv.dim = inv.decomposition.dimension;
    inv.pd = inv.betti.projective_dimension();
    inv.depth = inv.betti.depth();
    inv.cmd = cm_defect(inv.dim, inv.depth);
    inv.cohen_macaulay = inv.cmd == 0;
    inv.almost_cohen_macaulay = inv.cmd <= 1;
    return inv;
}

inline bool all_pass(const std::vector<Claim>& claims) {
    return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verdict == Verdict::fail; });
}

struct RingReport {
    RingPresentation ring;
    RingInvariants invariants;
    std::vector<Claim> claims;
    bool passed() const { return all_pass(claims); }
};

inline RingReport verify_lemma_ring(const RingPresentation& rp, const FieldSpec& field = {}) {
    RingReport report{rp, compute_invariants(rp.ideal, field), {}};
    const auto& inv = report.invariants;
    const std::string& L = rp.label;
    report.claims.push_back(make_claim("dim(" + L + ")", std::to_string(rp.expected_dim), std::to_string(inv.dim)));
    report.claims.push_back(
        make_claim("depth(" + L + ")", std::to_string(rp.expected_depth), std::to_string(inv.depth)));
    if (rp.expected_ass)
        report.claims.push_back(make_claim("Ass(" + L + ")", format_primes(*rp.expected_ass, rp.context),
                                           format_primes(inv.decomposition.ass_primes, rp.context)));
    return report;
}

struct MorphismTriple {
    MorphismParams params;
    RingPresentation source;     // A
    RingPresentation auxiliary;  // C, also the closed fiber
    RingPresentation target;     // B = A ⊗_k C localized
};

/// A from (n1, d1), C from (t, s), B = A ⊗_k C presented by joining the ideals
/// in disjoint variables. A -> B is flat as a localized base change of k -> C.
inline MorphismTriple build_morphism(const MorphismParams& p, const Limits& limits = {}) {
    p.validate();
    MorphismTriple t{p, {}, {}, {}};
    t.source = build_lemma_ring({p.dim_a, p.depth_a}, {"X", "T"}, "A", limits);
    t.auxiliary = build_lemma_ring({p.dim_gap(), p.depth_gap()}, {"Y", "U"}, "C", limits);
    auto& b = t.target;
    b.label = "B";
    b.context = t.source.context.joined(t.auxiliary.context);
    b.ideal = join_ideals(t.source.ideal, t.auxiliary.ideal);
    b.expected_dim = static_cast<std::size_t>(p.dim_b);
    b.expected_depth = static_cast<std::size_t>(p.depth_b);
    b.recipe = "join of A and C in disjoint variables (A ⊗_k C), localized at all variables";
    return t;
}

struct FiberInvariants {
    std::size_t dim = 0;
    std::size_t depth = 0;
    friend bool operator==(const FiberInvariants&, const FiberInvariants&) = default;
};

/// (dim, depth) of the closed fiber B/mB, which is the ring C: (n2 - n1, d2 - d1).
inline FiberInvariants fiber_invariants(const MorphismParams& p) {
    p.validate();
    return {static_cast<std::size_t>(p.dim_gap()), static_cast<std::size_t>(p.depth_gap())};
}

struct MorphismReport {
    MorphismParams params;
    FieldSpec field;
    RingReport source;
    RingReport auxiliary;
    RingReport target;
    FiberInvariants fiber_expected;
    FiberInvariants fiber_computed;
    HilbertSeries hilbert_source{IntPolynomial({1}), 0};
    HilbertSeries hilbert_auxiliary{IntPolynomial({1}), 0};
    HilbertSeries hilbert_target{IntPolynomial({1}), 0};
    std::vector<Claim> claims;
    std::string flatness_argument;

    bool passed() const {
        return all_pass(claims) && source.passed() && auxiliary.passed() && target.passed();
    }
};

struct VerifyOptions {
    /// Cross-check B's Betti table with the Koszul-complex oracle when within its size guards.
    bool koszul_oracle = false;
};

inline MorphismReport verify_morphism(const MorphismTriple& triple, const FieldSpec& field = {},
                                      const VerifyOptions& options = {}) {
    MorphismReport r;
    r.params = triple.params;
    r.field = field;
    r.source = verify_lemma_ring(triple.source, field);
    r.auxiliary = verify_lemma_ring(triple.auxiliary, field);
    r.target = verify_lemma_ring(triple.target, field);

    const auto& a = r.source.invariants;
    const auto& c = r.auxiliary.invariants;
    const auto& b = r.target.invariants;
    const auto& ctx = triple.target.context;

    std::vector<MonomialPrime> unions;
    for (const auto& P : a.decomposition.min_primes)
        for (const auto& Q : c.decomposition.min_primes) unions.push_back(P.joined(Q));
    std::sort(unions.begin(), unions.end());
    r.claims.push_back(
        make_claim("Min(B) = {P+Q}", format_primes(unions, ctx), format_primes(b.decomposition.min_primes, ctx)));

    r.hilbert_source = hilbert_series(triple.source.ideal);
    r.hilbert_auxiliary = hilbert_series(triple.auxiliary.ideal);
    r.hilbert_target = hilbert_series(triple.target.ideal);
    r.claims.push_back(make_claim("H(B) = H(A)*H(C)", (r.hilbert_source * r.hilbert_auxiliary).to_string(),
                                  r.hilbert_target.to_string()));

    r.fiber_expected = fiber_invariants(triple.params);
    r.fiber_computed = {c.dim, c.depth};
    r.claims.push_back(make_claim("dim(B/mB)", std::to_string(r.fiber_expected.dim), std::to_string(c.dim)));
    r.claims.push_back(make_claim("depth(B/mB)", std::to_string(r.fiber_expected.depth), std::to_string(c.depth)));

    const auto n1 = static_cast<std::size_t>(triple.params.dim_a);
    const auto d1 = static_cast<std::size_t>(triple.params.depth_a);
    const auto n2 = static_cast<std::size_t>(triple.params.dim_b);
    const auto d2 = static_cast<std::size_t>(triple.params.depth_b);
    r.claims.push_back(make_claim("cmd(A)", std::to_string(n1 - d1), std::to_string(a.cmd)));
    r.claims.push_back(make_claim("cmd(B)", std::to_string(n2 - d2), std::to_string(b.cmd)));
    r.claims.push_back(make_claim("cmd(B/mB)", std::to_string((n2 - n1) - (d2 - d1)), std::to_string(c.cmd)));

    if (options.koszul_oracle) {
        Claim oracle{"Betti(B) upper-Koszul = Koszul oracle", "agree", "", Verdict::skipped};
        try {
            const bool same = betti_table_koszul_oracle(triple.target.ideal, field).same_entries(b.betti);
            oracle.computed = same ? "agree" : "differ";
            oracle.verdict = same ? Verdict::pass : Verdict::fail;
        } catch (const ResourceLimit& e) {
            oracle.computed = std::string("skipped: ") + e.what();
        }
        r.claims.push_back(std::move(oracle));
    }

    r.flatness_argument =
        "A -> B is the localization at (X,Y) of the base change A -> A ⊗_k C of the flat map k -> C; "
        "the Hilbert series factorization H(B) = H(A)H(C) is the numerical certificate. "
        "Invariants are computed for graded quotients, which agree with the localizations at all variables.";
    return r;
}

}  // namespace depthforge
