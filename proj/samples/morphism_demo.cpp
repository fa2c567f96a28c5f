// Builds the morphism k[X,Y]/(X^2,XY) -> k[X,Y,U,V]/(X^2,XY,U^2,UV) and prints
// the invariants of both rings and of the closed fiber.

#include <iostream>

#include "depthforge/constructions.hpp"
#include "depthforge/parse.hpp"

int main() {
    using namespace depthforge;
    const auto triple = build_morphism({.dim_a = 1, .depth_a = 0, .dim_b = 2, .depth_b = 0});
    const auto report = verify_morphism(triple);
    for (const auto* r : {&report.source, &report.auxiliary, &report.target}) {
        std::cout << r->ring.label << ": " << format_ideal(r->ring.ideal, r->ring.context) << "\n"
                  << "   dim " << r->invariants.dim << ", depth " << r->invariants.depth << ", cmd "
                  << r->invariants.cmd << "\n";
    }
    std::cout << "fiber: dim " << report.fiber_computed.dim << ", depth " << report.fiber_computed.depth << "\n"
              << (report.passed() ? "all claims verified" : "verification FAILED") << "\n";
    return report.passed() ? 0 : 1;
}
