#include "biharmonic/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    using biharmonic::RunConfig;

    CLI::App app{"certified classification of constant-curvature hypersurface families"};
    app.require_subcommand(1);

    RunConfig config;
    std::string ambient_c;

    auto add_digits = [&](CLI::App* cmd) {
        cmd->add_option("--digits", config.digits, "decimal digits for refined roots")
            ->check(CLI::Range(1, 50));
    };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", config.json, "JSON output"); };
    auto add_round = [&](CLI::App* cmd) {
        cmd->add_flag("--round", config.round_decimals,
                      "round decimals half away from zero instead of truncating");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify one family");
    classify->add_option("--family", config.family, "family id, e.g. cp-d")->required();
    classify->add_option("--n", config.params.n, "ambient dimension parameter");
    classify->add_option("--p", config.params.p, "family parameter p");
    classify->add_option("--q", config.params.q, "family parameter q");
    classify->add_option("--k", config.params.k, "subspace parameter k");
    classify->add_option("--mult", config.params.mult, "multiplicity variant");
    classify->add_option("--m1", config.params.m1, "multiplicity m1");
    classify->add_option("--m2", config.params.m2, "multiplicity m2");
    classify->add_option("--ambient-c", ambient_c,
                         "ambient curvature constant (default 1 for spheres, 4 otherwise)");
    add_digits(classify);
    add_json(classify);
    add_round(classify);

    CLI::App* sweep = app.add_subcommand("sweep", "run a full case analysis");
    sweep->add_option("--theorem", config.theorem, "4.1 | 6.2 | 7.3")->required();
    sweep->add_option("--n-min", config.n_min, "lower end of the n range");
    sweep->add_option("--n-max", config.n_max, "upper end of the n range");
    add_digits(sweep);
    add_json(sweep);
    add_round(sweep);

    CLI::App* dump = app.add_subcommand("catalog-dump", "dump the family catalog as JSON");
    dump->add_option("--family", config.family, "restrict to one family");
    dump->add_option("--n", config.params.n, "ambient dimension parameter");
    dump->add_option("--p", config.params.p, "family parameter p");
    dump->add_option("--q", config.params.q, "family parameter q");
    dump->add_option("--k", config.params.k, "subspace parameter k");
    dump->add_option("--mult", config.params.mult, "multiplicity variant");
    dump->add_option("--m1", config.params.m1, "multiplicity m1");
    dump->add_option("--m2", config.params.m2, "multiplicity m2");

    CLI::App* verify = app.add_subcommand("verify-example81",
                                          "verify the explicit biharmonic map identities");
    verify->add_option("--m", config.m, "number of active coordinates")->required();
    add_json(verify);

    CLI::App* ym = app.add_subcommand("ym-check", "randomized curvature-algebra checks");
    ym->add_option("--m", config.m, "base dimension")->required();
    ym->add_option("--r", config.r, "fiber rank")->required();
    ym->add_option("--trials", config.trials, "number of random trials");
    ym->add_option("--seed", config.seed, "RNG seed");
    add_json(ym);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    if (classify->parsed())
        config.verb = RunConfig::Verb::classify;
    else if (sweep->parsed())
        config.verb = RunConfig::Verb::sweep;
    else if (dump->parsed())
        config.verb = RunConfig::Verb::catalog_dump;
    else if (verify->parsed())
        config.verb = RunConfig::Verb::verify_example;
    else if (ym->parsed())
        config.verb = RunConfig::Verb::ym_check;

    if (!ambient_c.empty()) {
        try {
            config.params.ambient_c = biharmonic::parse_rational(ambient_c);
        } catch (const std::exception& e) {
            std::cerr << "error: bad --ambient-c: " << e.what() << "\n";
            return 2;
        }
    }

    biharmonic::RunOutcome outcome = biharmonic::run(config);
    if (outcome.exit_code == 0 || outcome.exit_code == 4 || outcome.exit_code == 5)
        std::cout << outcome.output;
    else
        std::cerr << outcome.output;
    return outcome.exit_code;
}
