#include <iostream>

#include <CLI11.hpp>

#include "tazeta/cli.hpp"

using namespace tazeta;

namespace {

void add_source(CLI::App* cmd, cli::SourceArgs& src) {
    cmd->add_option("--family", src.family, "drt, conference or fusion")->check(CLI::IsMember({"drt", "conference", "fusion"}));
    cmd->add_option("--u", src.u, "family parameter: n = 4u+3 (drt) or 4u+1 (conference)");
    cmd->add_option("--name", src.name, "fusion ring: fib, c2, ising, reps3, psu5l2, e6, c3");
    cmd->add_option("--file", src.file, "algebra file (JSON)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solomon zeta functions of table-algebra orders"};
    app.require_subcommand(1);

    std::string format = "tsv";
    int threads = 0;
    bool quiet = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json-like"}));
    app.add_option("--threads", threads, "worker threads for ideal counting (0: all cores)")->check(CLI::NonNegativeNumber);
    app.add_flag("--quiet", quiet, "suppress progress messages");

    cli::SourceArgs src;
    auto* validate = app.add_subcommand("validate", "check the table-algebra axioms");
    auto* decompose = app.add_subcommand("decompose", "Wedderburn components, maximal order and bad primes");
    auto* count = app.add_subcommand("count", "count ideals by brute force");
    auto* zeta = app.add_subcommand("zeta", "print the assembled Dirichlet series");
    auto* verify = app.add_subcommand("verify", "compare the oracle with the assembled Euler product");
    auto* genus = app.add_subcommand("genus", "local genus zeta functions for the rank-3 families");
    for (auto* c : {validate, decompose, count, zeta, verify, genus}) {
        add_source(c, src);
        c->fallthrough();
    }

    cli::CountArgs ca;
    long prime = 0;
    count->add_option("--max-index", ca.max_index, "count a_n for n <= N")->check(CLI::PositiveNumber);
    count->add_option("--prime", prime, "prime-power mode");
    count->add_option("--kmax", ca.kmax, "largest exponent in prime-power mode")->check(CLI::NonNegativeNumber);

    int zeta_n = 64, verify_n = 64;
    zeta->add_option("--max-index", zeta_n, "series length")->check(CLI::PositiveNumber);
    verify->add_option("--max-index", verify_n, "series length")->check(CLI::PositiveNumber);

    cli::GenusArgs ga;
    long gprime = 0, gv = 0;
    int gm = -1;
    genus->add_option("--prime", gprime, "odd prime");
    genus->add_option("--m", gm, "model with v_p(n) = 2m+1 (no family)");
    genus->add_option("--v", gv, "unit v with pi^2 = p v (no family)");
    genus->add_flag("--symbolic-p", ga.symbolic, "coefficients as polynomials in p");

    CLI11_PARSE(app, argc, argv);

    cli::Context ctx{std::cout, std::cerr};
    ctx.format = format == "tsv" ? cli::Format::tsv : cli::Format::json;
    ctx.threads = threads;
    ctx.quiet = quiet;

    try {
        if (*genus) {
            if (gprime) ga.prime = BigInt(gprime);
            if (gm >= 0) ga.m = gm;
            if (gv) ga.v = BigInt(gv);
            std::optional<cli::FamilySpec> s;
            if (!src.family.empty() || !src.file.empty()) s = cli::resolve_source(src);
            return cli::cmd_genus(s, ga, ctx);
        }
        cli::FamilySpec s = cli::resolve_source(src);
        if (*validate) return cli::cmd_validate(s, ctx);
        if (*decompose) return cli::cmd_decompose(s, ctx);
        if (*count) {
            if (prime) ca.prime = BigInt(prime);
            return cli::cmd_count(s, ca, ctx);
        }
        if (*zeta) return cli::cmd_zeta(s, zeta_n, ctx);
        if (*verify) return cli::cmd_verify(s, verify_n, ctx);
    } catch (const std::exception& e) {
        return cli::report_error(e, std::cerr);
    }
    return cli::input_error;
}
