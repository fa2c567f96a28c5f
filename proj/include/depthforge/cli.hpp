#pragma once

// Command dispatch for the depthforge executable. Kept in the library so the
// same entry point can be driven from tests.
//
// Exit codes: 0 all claims verified, 2 input error, 3 a computed value
// differs from its expected value, 1 unexpected internal failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "depthforge/constructions.hpp"
#include "depthforge/export.hpp"
#include "depthforge/grid.hpp"
#include "depthforge/hilbert.hpp"
#include "depthforge/homology.hpp"
#include "depthforge/parse.hpp"
#include "depthforge/report.hpp"

namespace depthforge::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kVerificationFailed = 3 };

namespace detail {

struct CommonOptions {
    std::uint32_t field_char = 0;
    std::string format = "text";
    std::uint64_t max_degree = Limits{}.max_total_degree;
};

inline void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--field-char", o.field_char, "Field characteristic: 0 or a prime")->capture_default_str();
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--max-degree", o.max_degree, "Total-degree guard for ideal powers")->capture_default_str();
}

inline std::string read_expression(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

inline ParsedIdeal parse_proper(const std::string& arg) {
    auto parsed = parse_ideal(read_expression(arg));
    if (parsed.ideal.is_unit()) throw ImproperIdeal();
    return parsed;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct Result {
    Json doc;
    bool passed = true;
};

inline Json invariants_json(const RingContext& ctx, const MonomialIdeal& I, const FieldSpec& field) {
    const auto inv = compute_invariants(I, field);
    Json j = to_json(inv, ctx);
    const auto witness = depth_zero_witness(I);
    j["depth_zero_witness"] = witness ? Json(format_monomial(*witness, ctx)) : Json(nullptr);
    return j;
}

inline Json inputs_json(const std::string& expression) {
    Json j;
    j["expression"] = expression;
    return j;
}

}  // namespace detail

/// Parses args (without the program name), runs the command and writes its output.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monomial-ideal engine: flat local morphisms with prescribed depth and dimension"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kEngineName) + " " + kEngineVersion);

    detail::CommonOptions common;
    std::int64_t dim_a = 0, depth_a = 0, dim_b = 0, depth_b = 0, dim = 0, depth_v = 0;
    bool oracle = false;
    std::string expression;
    std::string target = "m2";
    std::vector<std::int64_t> lemma_spec;
    std::vector<std::int64_t> morphism_spec;
    std::int64_t grid_max = 5;
    std::vector<std::uint32_t> lemma_chars{0, 2, 3};
    std::vector<std::uint32_t> morphism_chars{0, 2};
    std::size_t random_count = 0;
    std::uint64_t seed = 20240601;

    auto* construct = app.add_subcommand("construct", "Build and verify a flat local morphism A -> B");
    construct->add_option("--dim-a", dim_a, "dim(A)")->required();
    construct->add_option("--depth-a", depth_a, "depth(A)")->required();
    construct->add_option("--dim-b", dim_b, "dim(B)")->required();
    construct->add_option("--depth-b", depth_b, "depth(B)")->required();
    construct->add_flag("--oracle", oracle, "Cross-check B's Betti table with the Koszul-complex oracle");
    detail::add_common(construct, common);

    auto* lemma = app.add_subcommand("lemma", "Build and verify a ring with prescribed dimension and depth");
    lemma->add_option("--dim", dim, "dimension n")->required();
    lemma->add_option("--depth", depth_v, "depth d")->required();
    detail::add_common(lemma, common);

    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"invariants", "dim, depth, CM defect, primes and Betti totals of S/I"},
             {"decompose", "Irredundant irreducible decomposition"},
             {"betti", "Multigraded Betti numbers of S/I"},
             {"hilbert", "Hilbert series of S/I"},
             {"minprimes", "Minimal primes"},
             {"assprimes", "Associated primes"}}) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("expression", expression, "e.g. \"vars x,y ; x^2, x*y\" ('-' reads stdin)")->required();
        detail::add_common(cmd, common);
        if (name == "betti") cmd->add_flag("--oracle", oracle, "Use the Koszul-complex oracle instead");
    }

    auto* exporter = app.add_subcommand("export", "Emit a Macaulay2 or Singular script with expected values");
    exporter->add_option("expression", expression, "ideal expression");
    exporter->add_option("--lemma", lemma_spec, "n,d: export the lemma ring")->delimiter(',')->expected(2);
    exporter->add_option("--morphism", morphism_spec, "n1,d1,n2,d2: export A, C and B")
        ->delimiter(',')
        ->expected(4);
    exporter->add_option("--target", target, "m2 | singular")->capture_default_str();
    detail::add_common(exporter, common);

    auto* grid = app.add_subcommand("grid-verify", "Run the construction sweeps and the random oracle comparison");
    grid->add_option("--max-dim", grid_max, "Largest n (lemma) and n2 (morphism)")->capture_default_str();
    grid->add_option("--lemma-chars", lemma_chars, "Characteristics for the lemma sweep")->delimiter(',');
    grid->add_option("--morphism-chars", morphism_chars, "Characteristics for the morphism sweep")->delimiter(',');
    grid->add_option("--random", random_count, "Random ideals for the Betti oracle comparison")->capture_default_str();
    grid->add_option("--seed", seed, "Seed for the random ideals")->capture_default_str();
    detail::add_common(grid, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help and version requests arrive here with exit code 0.
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const FieldSpec field(common.field_char);
        const Limits limits{common.max_degree};
        auto* chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();

        if (name == "export") {
            const int sources = (!expression.empty()) + (!lemma_spec.empty()) + (!morphism_spec.empty());
            if (sources != 1) throw InvariantViolation("export needs exactly one of: expression, --lemma, --morphism");
            const auto cas = parse_cas_target(target);
            std::vector<ExportItem> items;
            auto add = [&](std::string label, const RingContext& ctx, const MonomialIdeal& I) {
                items.push_back({std::move(label), ctx, I, compute_invariants(I, field)});
            };
            if (!expression.empty()) {
                const auto parsed = detail::parse_proper(expression);
                add("S/I", parsed.context, parsed.ideal);
            } else if (!lemma_spec.empty()) {
                const auto rp = build_lemma_ring({lemma_spec[0], lemma_spec[1]}, {}, "A", limits);
                add(rp.label, rp.context, rp.ideal);
            } else {
                const auto t = build_morphism({morphism_spec[0], morphism_spec[1], morphism_spec[2], morphism_spec[3]},
                                              limits);
                for (const auto* rp : {&t.source, &t.auxiliary, &t.target}) add(rp->label, rp->context, rp->ideal);
            }
            out << export_script(items, cas, field);
            return kOk;
        }

        detail::Result result;
        Json& doc = result.doc;
        doc = envelope(name, field);

        if (name == "construct") {
            const MorphismParams p{dim_a, depth_a, dim_b, depth_b};
            const auto report = verify_morphism(build_morphism(p, limits), field, VerifyOptions{oracle});
            doc.update(to_json(report));
            result.passed = report.passed();
        } else if (name == "lemma") {
            const auto report = verify_lemma_ring(build_lemma_ring({dim, depth_v}, {}, "A", limits), field);
            Json inputs;
            inputs["dim"] = json_int(dim);
            inputs["depth"] = json_int(depth_v);
            doc["inputs"] = inputs;
            doc.update(to_json(report));
            result.passed = report.passed();
        } else if (name == "grid-verify") {
            std::vector<FieldSpec> lf, mf, rf{FieldSpec(0), FieldSpec(32003)};
            for (auto c : lemma_chars) lf.emplace_back(c);
            for (auto c : morphism_chars) mf.emplace_back(c);
            Json inputs;
            inputs["max_dim"] = json_int(grid_max);
            inputs["random"] = json_int(std::uint64_t{random_count});
            inputs["seed"] = json_int(seed);
            doc["inputs"] = inputs;
            Json sweeps = Json::array();
            auto record = [&](const std::string& sweep, const SweepOutcome& o) {
                Json s;
                s["sweep"] = sweep;
                s["checked"] = json_int(std::uint64_t{o.checked});
                s["failed"] = json_int(std::uint64_t{o.failures.size()});
                s["failures"] = o.failures;
                s["verdict"] = o.passed() ? "pass" : "fail";
                sweeps.push_back(s);
                result.passed = result.passed && o.passed();
            };
            record("lemma", lemma_sweep(grid_max, lf));
            record("morphism", morphism_sweep(grid_max, mf));
            if (random_count > 0) record("betti-oracle", random_oracle_sweep(random_count, seed, rf));
            doc["sweeps"] = sweeps;
        } else {
            const auto parsed = detail::parse_proper(expression);
            const auto& ctx = parsed.context;
            const auto& I = parsed.ideal;
            doc["inputs"] = detail::inputs_json(format_ideal(I, ctx));
            doc["ring"] = ring_json(ctx, I);
            if (name == "invariants") {
                doc["computed"] = detail::invariants_json(ctx, I, field);
            } else if (name == "decompose") {
                doc["components"] = to_json(irreducible_decomposition(I), ctx);
            } else if (name == "betti") {
                doc["betti"] = to_json(oracle ? betti_table_koszul_oracle(I, field) : betti_table(I, field), ctx);
                doc["backend"] = oracle ? "koszul-complex" : "upper-koszul";
            } else if (name == "hilbert") {
                doc["hilbert"] = to_json(hilbert_series(I));
            } else if (name == "minprimes") {
                doc["min_primes"] = to_json(minimal_primes(I), ctx);
            } else if (name == "assprimes") {
                doc["ass_primes"] = to_json(associated_primes(I), ctx);
            }
        }

        doc["verdict"] = result.passed ? "pass" : "fail";
        doc["timing_ms"] = detail::elapsed_ms(start);
        out << (common.format == "json" ? doc.dump(2) + "\n" : render_text(doc));
        return result.passed ? kOk : kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace depthforge::cli
