// composita: exact calculator for field extensions K ⊂ L and the subring
// T = K + X·L[X] of L[X].
//
//   classify   degree / finite / algebraic / separable / normal / Galois
//   composite  Noetherian verdict and X·L[X] generation certificate
//   magid      structure of M ⊗_K L over a splitting extension M
//   verify     run every built-in statement check over a catalog
//
// Exit codes: 0 success, 1 bad input, 2 a checked statement failed,
// 3 the computation is outside this tool's scope.

#include "composita/cli.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"exact field-extension calculator"};
    app.require_subcommand(1);

    composita::CliOptions o;
    std::vector<CLI::App*> subs;
    auto* classify = app.add_subcommand("classify", "classify a field extension");
    auto* composite = app.add_subcommand("composite", "analyze T = K + X*L[X]");
    auto* magid = app.add_subcommand("magid", "base-changed algebra structure report");
    auto* verify = app.add_subcommand("verify", "run the statement checks over a catalog");
    for (CLI::App* c : {classify, composite, magid}) {
        c->add_option("--base", o.base, "base field: Q, GF(p), or GF(p)(t)")
            ->capture_default_str();
        c->add_option("--ext", o.ext,
                      "tower step modulus in x (repeat for towers, innermost first)");
    }
    composite->add_option("--bound", o.bound, "degree bound for the generation certificate")
        ->capture_default_str();
    for (CLI::App* c : {magid, verify})
        c->add_option("--seed", o.seed, "seed for sampled element sweeps")->capture_default_str();
    verify->add_option("--catalog", o.catalog, "'builtin' or a path to a catalog JSON file")
        ->capture_default_str();
    for (CLI::App* c : {classify, composite, magid, verify})
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    o.command = app.get_subcommands().front()->get_name();
    return composita::run_cli(o, std::cout, std::cerr);
}
