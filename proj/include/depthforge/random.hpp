#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "depthforge/monomial.hpp"

namespace depthforge {

struct RandomIdealShape {
    std::size_t max_vars = 4;
    std::size_t max_generators = 5;
    Exponent max_exponent = 3;
    std::size_t min_vars = 1;
};

/// Random proper monomial ideal; generators equal to 1 are redrawn.
template <class Rng>
MonomialIdeal random_proper_ideal(Rng& rng, const RandomIdealShape& shape = {}) {
    std::uniform_int_distribution<std::size_t> vars_dist(shape.min_vars, shape.max_vars);
    std::uniform_int_distribution<std::size_t> gens_dist(0, shape.max_generators);
    std::uniform_int_distribution<Exponent> exp_dist(0, shape.max_exponent);
    const std::size_t n = vars_dist(rng);
    const std::size_t k = n == 0 ? 0 : gens_dist(rng);
    std::vector<Monomial> gens;
    while (gens.size() < k) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = exp_dist(rng);
        if (!m.is_one()) gens.push_back(std::move(m));
    }
    return MonomialIdeal::generated_by(n, std::move(gens));
}

}  // namespace depthforge
