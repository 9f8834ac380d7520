#include "commands.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

// Driver: flag parsing and exit-code policy only; the work lives in
// commands.cpp. Exit 0 = computed and nothing found, 1 = obstruction or
// conjecture violation (details on stdout), 2 = usage or hypothesis error.

int main(int argc, char** argv) {
    using namespace charrel::cli;

    CLI::App app{"charrel — exact mod-2 characteristic-relation calculator for "
                 "fold, cusp, Morin and corank-1 maps"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned n = 0, k = 0, target = 0, hyp = 0, n_max = 0, jobs = 1;
    std::uint64_t bb = 0, aa = 0;
    std::string cls, file, kspec = "auto", checkpoint;

    CLI::App* dims = app.add_subcommand("dims", "relation quotient dimensions for (n, k)");
    dims->add_option("--n", n, "source dimension")->required();
    dims->add_option("--k", k, "map codimension")->required();
    dims->add_option("--format", format, "text, json or csv");

    CLI::App* classify = app.add_subcommand(
        "classify", "cobordism class compatible with a codimension-1 fold map");
    classify->add_option("--n", n, "source dimension")->required();
    classify->add_option("--format", format, "text, json or csv");

    CLI::App* rp = app.add_subcommand("rp", "verdicts for maps RP^n -> R^target");
    rp->add_option("--n", n, "projective space dimension")->required();
    rp->add_option("--target", target, "target euclidean dimension")->required();
    rp->add_option("--class", cls, "restrict to one map class "
                                   "(fold, cusp, morin, tame-corank1, corank1)");
    rp->add_option("--format", format, "text, json or csv");

    CLI::App* cp = app.add_subcommand("cp", "corank-1 verdicts for maps CP^n -> R^target");
    cp->add_option("--n", n, "complex projective dimension (real dimension 2n)")->required();
    cp->add_option("--target", target, "target euclidean dimension")->required();
    cp->add_option("--format", format, "text, json or csv");

    CLI::App* numbers = app.add_subcommand(
        "numbers", "audit a characteristic-number functional against a map class");
    numbers->add_option("--file", file, "json document {\"n\": int, \"numbers\": [...]}")
        ->required()
        ->check(CLI::ExistingFile);
    numbers->add_option("--k", k, "map codimension")->required();
    numbers->add_option("--class", cls, "map class")->required();
    numbers->add_option("--hyp", hyp, "classes w_1..w_hyp are hypothesized zero");
    numbers->add_option("--format", format, "text, json or csv");

    CLI::App* basis = app.add_subcommand("dold-basis",
                                         "reduced universal relation rows for (n, k)");
    basis->add_option("--n", n, "source dimension")->required();
    basis->add_option("--k", k, "map codimension")->required();
    basis->add_option("--format", format, "text, json or csv");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "scan the fold quotient pattern over a grid of (n, k)");
    sweep->add_option("--n-max", n_max, "largest source dimension")->required();
    sweep->add_option("--k", kspec, "auto or a comma list of 2^a-1 values");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--checkpoint", checkpoint, "resumable line-json record file");
    sweep->add_option("--format", format, "text, json or csv");

    CLI::App* binom = app.add_subcommand("binom", "binomial parity and 2-adic valuation");
    binom->add_option("--b", bb, "upper index")->required();
    binom->add_option("--a", aa, "lower index")->required();
    binom->add_option("--format", format, "text, json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);   // prints help or the diagnostic
        return code == 0 ? 0 : 2;       // help/version exit 0, usage errors exit 2
    }

    try {
        const Format f = parse_format(format);
        if (*dims) return cmd_dims(n, k, f, std::cout);
        if (*classify) return cmd_classify(n, f, std::cout);
        if (*rp) return cmd_rp(n, target, cls, f, std::cout);
        if (*cp) return cmd_cp(n, target, f, std::cout);
        if (*numbers) return cmd_numbers(file, k, cls, hyp, f, std::cout);
        if (*basis) return cmd_dold_basis(n, k, f, std::cout);
        if (*sweep) return cmd_sweep(n_max, kspec, jobs, checkpoint, f, std::cout, std::cerr);
        if (*binom) return cmd_binom(bb, aa, f, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable with a required subcommand
}
