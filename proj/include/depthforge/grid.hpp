#pragma once

// Exhaustive verification sweeps over small construction parameters and a
// seeded random comparison of the two Betti backends.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "depthforge/constructions.hpp"
#include "depthforge/random.hpp"

namespace depthforge {

struct SweepOutcome {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Every (n, d) with 0 <= d <= n <= max_dim.
inline std::vector<LemmaParams> lemma_grid_params(std::int64_t max_dim) {
    std::vector<LemmaParams> out;
    for (std::int64_t n = 0; n <= max_dim; ++n)
        for (std::int64_t d = 0; d <= n; ++d) out.push_back({n, d});
    return out;
}

/// Every admissible (n1, d1, n2, d2) with n2 <= max_dim_b.
inline std::vector<MorphismParams> morphism_grid_params(std::int64_t max_dim_b) {
    std::vector<MorphismParams> out;
    for (std::int64_t n2 = 0; n2 <= max_dim_b; ++n2)
        for (std::int64_t d2 = 0; d2 <= n2; ++d2)
            for (std::int64_t n1 = 0; n1 <= n2; ++n1)
                for (std::int64_t d1 = 0; d1 <= std::min(n1, d2); ++d1) {
                    const MorphismParams p{n1, d1, n2, d2};
                    if (n1 - d1 <= n2 - d2) out.push_back(p);
                }
    return out;
}

inline std::string describe(const MorphismParams& p) {
    return "(n1=" + std::to_string(p.dim_a) + ",d1=" + std::to_string(p.depth_a) + ",n2=" +
           std::to_string(p.dim_b) + ",d2=" + std::to_string(p.depth_b) + ")";
}

inline std::string first_failure(const std::vector<Claim>& claims) {
    for (const auto& c : claims)
        if (c.verdict == Verdict::fail) return c.name + ": expected " + c.expected + ", computed " + c.computed;
    return {};
}

inline SweepOutcome lemma_sweep(std::int64_t max_dim, const std::vector<FieldSpec>& fields) {
    SweepOutcome out;
    for (const auto& p : lemma_grid_params(max_dim)) {
        const auto rp = build_lemma_ring(p);
        for (const auto& f : fields) {
            ++out.checked;
            const auto report = verify_lemma_ring(rp, f);
            if (!report.passed())
                out.failures.push_back("lemma (n=" + std::to_string(p.dim) + ",d=" + std::to_string(p.depth) +
                                       ") char " + std::to_string(f.characteristic()) + ": " +
                                       first_failure(report.claims));
        }
    }
    return out;
}

inline SweepOutcome morphism_sweep(std::int64_t max_dim_b, const std::vector<FieldSpec>& fields) {
    SweepOutcome out;
    for (const auto& p : morphism_grid_params(max_dim_b)) {
        const auto triple = build_morphism(p);
        for (const auto& f : fields) {
            ++out.checked;
            const auto r = verify_morphism(triple, f);
            if (!r.passed()) {
                std::string why = first_failure(r.claims);
                for (const auto* rr : {&r.source, &r.auxiliary, &r.target})
                    if (why.empty()) why = first_failure(rr->claims);
                out.failures.push_back("morphism " + describe(p) + " char " + std::to_string(f.characteristic()) +
                                       ": " + why);
            }
        }
    }
    return out;
}

/// Upper-Koszul Betti tables against the Koszul-complex oracle on random ideals.
inline SweepOutcome random_oracle_sweep(std::size_t count, std::uint64_t seed, const std::vector<FieldSpec>& fields) {
    SweepOutcome out;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        const auto I = random_proper_ideal(rng);
        for (const auto& f : fields) {
            ++out.checked;
            if (!betti_table(I, f).same_entries(betti_table_koszul_oracle(I, f)))
                out.failures.push_back("random ideal #" + std::to_string(k) + " char " +
                                       std::to_string(f.characteristic()) + ": Betti backends differ");
        }
    }
    return out;
}

}  // namespace depthforge
