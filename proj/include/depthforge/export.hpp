#pragma once

// Scripts for Macaulay2 and Singular that recompute dim, depth, Ass and
// Betti numbers of a presented ring. This engine's values follow as comment
// lines so the two outputs can be diffed.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "depthforge/constructions.hpp"
#include "depthforge/parse.hpp"
#include "depthforge/report.hpp"

namespace depthforge {

enum class CasTarget { macaulay2, singular };

inline CasTarget parse_cas_target(std::string_view name) {
    if (name == "m2" || name == "macaulay2") return CasTarget::macaulay2;
    if (name == "singular") return CasTarget::singular;
    throw InvariantViolation("unknown export target '" + std::string(name) + "' (expected m2 or singular)");
}

/// Ring to export plus the values this engine computed for it.
struct ExportItem {
    std::string label;
    RingContext context;
    MonomialIdeal ideal;
    RingInvariants invariants;
};

namespace detail {

inline std::string joined_names(const RingContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < ctx.num_vars(); ++i) out += (i ? "," : "") + ctx.name(i);
    return out;
}

inline std::string generator_list(const MonomialIdeal& I, const RingContext& ctx) {
    std::string out;
    for (const auto& g : I.generators()) out += (out.empty() ? "" : ", ") + format_monomial(g, ctx);
    return out;
}

inline void expected_block(std::ostringstream& s, const char* comment, const ExportItem& item) {
    const auto& inv = item.invariants;
    s << comment << " expected (" << kEngineName << " " << kEngineVersion << "):\n";
    s << comment << "   dim " << inv.dim << "\n";
    s << comment << "   depth " << inv.depth << "\n";
    s << comment << "   ass " << format_primes(inv.decomposition.ass_primes, item.context) << "\n";
    s << comment << "   betti";
    for (auto t : inv.betti.totals()) s << " " << t;
    s << "\n";
}

inline void emit_m2(std::ostringstream& s, const ExportItem& item, const FieldSpec& field, std::size_t k) {
    const std::string R = "R" + std::to_string(k);
    const std::string I = "I" + std::to_string(k);
    const std::string M = "M" + std::to_string(k);
    const std::string base = field.characteristic() == 0 ? "QQ" : "ZZ/" + std::to_string(field.characteristic());
    s << "-- ring " << item.label << "\n";
    s << R << " = " << base << "[" << joined_names(item.context) << "];\n";
    if (item.ideal.is_zero()) s << I << " = ideal(0_" << R << ");\n";
    else s << I << " = ideal(" << generator_list(item.ideal, item.context) << ");\n";
    s << M << " = " << R << "^1/" << I << ";\n";
    s << "print(\"" << item.label << " dim: \" | toString(dim " << M << "));\n";
    s << "print(\"" << item.label << " depth: \" | toString(depth " << M << "));\n";
    s << "print(\"" << item.label << " ass: \" | toString(ass " << I << "));\n";
    s << "print(\"" << item.label << " betti: \" | toString(betti res " << M << "));\n";
    expected_block(s, "--", item);
}

inline void emit_singular(std::ostringstream& s, const ExportItem& item, const FieldSpec& field, std::size_t k) {
    const std::string R = "R" + std::to_string(k);
    const std::string I = "I" + std::to_string(k);
    const std::string L = "L" + std::to_string(k);
    s << "// ring " << item.label << "\n";
    if (item.context.num_vars() == 0) {
        // Singular rings need a variable; k = k[z]/(z).
        s << "ring " << R << " = " << field.characteristic() << ",(z),dp;\n";
        s << "ideal " << I << " = z;\n";
    } else {
        s << "ring " << R << " = " << field.characteristic() << ",(" << joined_names(item.context) << "),dp;\n";
        s << "ideal " << I << " = " << (item.ideal.is_zero() ? "0" : generator_list(item.ideal, item.context))
          << ";\n";
    }
    s << "print(\"" << item.label << " dim: \" + string(dim(std(" << I << "))));\n";
    s << "print(\"" << item.label << " depth: \" + string(depth(module(" << I << "))));\n";
    s << "list " << L << " = primdecGTZ(" << I << ");\n";
    s << "print(\"" << item.label << " ass:\");\n";
    s << "int i" << k << "; for (i" << k << " = 1; i" << k << " <= size(" << L << "); i" << k << "++) { print("
      << L << "[i" << k << "][2]); }\n";
    s << "print(\"" << item.label << " betti:\");\n";
    s << "print(betti(mres(" << I << ", 0)), \"betti\");\n";
    expected_block(s, "//", item);
}

}  // namespace detail

inline std::string export_script(const std::vector<ExportItem>& items, CasTarget target, const FieldSpec& field) {
    std::ostringstream s;
    if (target == CasTarget::macaulay2) {
        s << "-- generated by " << kEngineName << " " << kEngineVersion << "\n";
        s << "needsPackage \"Depth\";\n";
    } else {
        s << "// generated by " << kEngineName << " " << kEngineVersion << "\n";
        s << "LIB \"primdec.lib\";\nLIB \"homolog.lib\";\n";
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
        s << "\n";
        if (target == CasTarget::macaulay2) detail::emit_m2(s, items[k], field, k + 1);
        else detail::emit_singular(s, items[k], field, k + 1);
    }
    return s.str();
}

}  // namespace depthforge
