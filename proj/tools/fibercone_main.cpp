#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fcone/pipeline.hpp"
#include "fcone/report.hpp"

namespace {

using namespace fcone;

struct GlobalFlags {
    std::optional<uint32_t> prime;
    std::optional<uint64_t> seed;
    std::optional<int> trunc, nmax, samples, guard;
    bool json = false;
};

void add_globals(CLI::App& cmd, GlobalFlags& g) {
    cmd.add_option("--prime", g.prime, "characteristic of the coefficient field");
    cmd.add_option("--seed", g.seed, "seed for all randomized certificates");
    cmd.add_option("--trunc", g.trunc, "series truncation bound");
    cmd.add_option("--nmax", g.nmax, "certification degree window");
    cmd.add_option("--samples", g.samples, "Monte Carlo sample count");
    cmd.add_option("--guard", g.guard, "trailing-zero guard for reconstruction");
    cmd.add_flag("--json", g.json, "machine-readable output");
}

void apply(const GlobalFlags& g, cli::Bounds& b) {
    if (g.prime) b.prime = *g.prime;
    if (g.seed) b.seed = *g.seed;
    if (g.trunc) b.trunc = *g.trunc;
    if (g.nmax) b.nmax = *g.nmax;
    if (g.samples) b.samples = *g.samples;
    if (g.guard) b.guard = *g.guard;
}

cli::RingSpec load_spec(const std::string& path, const GlobalFlags& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    cli::RingSpec spec = cli::parse_spec(text.str());
    apply(g, spec.bounds);
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fibercone: exact fiber-cone analysis of m-primary ideals"};
    app.require_subcommand(1);
    GlobalFlags g;
    std::string file;
    std::string kind = "polynomial";
    std::string wanted = "almost-minimal";
    int dim = 2;
    int budget = 50;

    CLI::App* analyze = app.add_subcommand("analyze", "full analysis report");
    CLI::App* verify = app.add_subcommand("verify", "analysis + verdict exit code");
    CLI::App* hilbert = app.add_subcommand("hilbert", "fiber-cone Hilbert series");
    CLI::App* mixedmult = app.add_subcommand("mixedmult", "mixed multiplicities e_j(m|I)");
    CLI::App* reductions = app.add_subcommand("reductions", "reduction indices and depth data");
    CLI::App* search = app.add_subcommand("search", "hunt random ideals of a given class");
    for (CLI::App* c : {analyze, verify, hilbert, mixedmult, reductions})
        c->add_option("file", file, "ring/ideal specification file")->required();
    search->add_option("--kind", kind, "polynomial | semigroup")
        ->check(CLI::IsMember({"polynomial", "semigroup"}));
    search->add_option("--dim", dim, "ambient dimension");
    search->add_option("--class", wanted, "minimal | almost-minimal")
        ->check(CLI::IsMember({"minimal", "almost-minimal"}));
    search->add_option("--budget", budget, "number of random trials");
    for (CLI::App* c : {analyze, verify, hilbert, mixedmult, reductions, search})
        add_globals(*c, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (search->parsed()) {
            cli::SearchParams params;
            params.kind = kind == "polynomial" ? cli::RingKind::Polynomial
                                               : cli::RingKind::Semigroup;
            params.dim = params.kind == cli::RingKind::Semigroup ? 1 : dim;
            params.wanted = wanted == "minimal" ? multiplicity::ClassVerdict::Minimal
                                                : multiplicity::ClassVerdict::AlmostMinimal;
            params.budget = budget;
            apply(g, params.bounds);
            std::cout << cli::render_search(cli::search(params), g.json);
            return 0;
        }
        cli::RingSpec spec = load_spec(file, g);
        cli::AnalysisReport rep = cli::analyze(spec);
        if (verify->parsed()) {
            std::cout << (g.json ? cli::render_machine(rep) : cli::render_human(rep));
            return cli::verdict_exit(rep);
        }
        if (hilbert->parsed())
            std::cout << cli::render_hilbert(rep, g.json);
        else if (mixedmult->parsed())
            std::cout << cli::render_mixedmult(rep, g.json);
        else if (reductions->parsed())
            std::cout << cli::render_reductions(rep, g.json);
        else
            std::cout << (g.json ? cli::render_machine(rep) : cli::render_human(rep));
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    }
}
