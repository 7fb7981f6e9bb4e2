#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <new>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bgk/catalog.hpp"
#include "bgk/document.hpp"
#include "bgk/errors.hpp"
#include "bgk/groups.hpp"

namespace {

// 0 ok, 1 oracle mismatch, 2 invalid input, 3 hypothesis failure.
enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kHypothesis = 3 };

struct Options {
    std::string group;
    int prime = 0;
    long long chern = 1;
    int max_degree = 100;
    std::string format = "text";
    std::string space = "omega3g3";
    bool strict = false;
    bool force = false;
    bool verbose = false;
    int inject_fault = -1;
};

bool use_color(const Options& opt) {
    return opt.format == "text" && isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
}

void emit(const bgk::OutputDocument& doc, const Options& opt) {
    if (opt.format == "json")
        std::cout << bgk::render_json(doc);
    else if (opt.format == "csv")
        std::cout << bgk::render_csv(doc);
    else
        std::cout << bgk::render_text(doc, use_color(opt));
}

void add_common(CLI::App* cmd, Options& opt, bool with_chern, bool with_degree) {
    cmd->add_option("-g,--group", opt.group,
                    "group: a name (su(2), sp(3), spin(7), g2, f4, e6, e7, e8) or a literal "
                    "\"type:n1,n2,...\" with optional @dim=D")
        ->required();
    cmd->add_option("-p,--prime", opt.prime, "coefficient field characteristic")->required();
    if (with_chern)
        cmd->add_option("-k,--chern", opt.chern, "second Chern class of the bundle over S^4")
            ->required();
    if (with_degree)
        cmd->add_option("-N,--max-degree", opt.max_degree, "truncation degree (inclusive)")
            ->capture_default_str();
    cmd->add_option("-f,--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("-v,--verbose", opt.verbose, "include extra diagnostics");
}

int run(const CLI::App& app, Options& opt) {
    auto parsed = bgk::parse_group_spec(opt.group);
    if (parsed.dim && !bgk::dimension_check(parsed))
        throw std::invalid_argument("sum of (2 n_i - 1) over " + parsed.display() +
                                    " does not equal the declared dimension " +
                                    std::to_string(*parsed.dim));
    if (opt.max_degree < 0)
        throw std::invalid_argument("--max-degree must be >= 0");

    if (app.got_subcommand("verdict")) {
        bgk::OutputDocument doc =
            bgk::make_verdict_document(opt.group, parsed, opt.prime, opt.chern);
        emit(doc, opt);
        if (opt.strict) {
            bgk::Regime r = doc.applicability.regime;
            if (r != bgk::Regime::FullTheorem && r != bgk::Regime::SU2Mod3)
                return kHypothesis;
        }
        return kOk;
    }
    if (app.got_subcommand("compute")) {
        bgk::OutputDocument doc = bgk::make_compute_document(opt.group, parsed, opt.prime,
                                                             opt.chern, opt.max_degree,
                                                             opt.verbose);
        emit(doc, opt);
        return kOk;
    }
    if (app.got_subcommand("generators")) {
        bgk::OutputDocument doc = bgk::make_generators_document(
            opt.group, parsed, opt.prime, opt.max_degree, opt.space, opt.verbose);
        emit(doc, opt);
        return kOk;
    }
    // oracle: compute, then recount every emitted dimension by exhaustive
    // monomial enumeration.  The recount is exponential-ish in practice, so
    // large truncations need an explicit override.
    if (opt.max_degree > 80 && !opt.force)
        throw std::invalid_argument(
            "oracle recount above N = 80 is slow; pass --force to run anyway");
    bgk::OutputDocument doc = bgk::make_compute_document(opt.group, parsed, opt.prime, opt.chern,
                                                         opt.max_degree, opt.verbose);
    doc.audit = bgk::run_oracle_audit(doc, opt.inject_fault);
    emit(doc, opt);
    return doc.audit->passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology dimensions of gauge group classifying spaces over S^4"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* verdict = app.add_subcommand(
        "verdict", "applicability regime for (G, p, k), no homology computed");
    add_common(verdict, opt, true, false);
    verdict->add_flag("--strict", opt.strict,
                      "exit 3 unless the regime admits a full computation");

    CLI::App* compute = app.add_subcommand(
        "compute", "Poincare series and dimension tables for BGauge_k and its factors");
    add_common(compute, opt, true, true);

    CLI::App* generators = app.add_subcommand(
        "generators", "generator list for one constituent space (no bundle needed)");
    add_common(generators, opt, false, true);
    generators->add_option("-s,--space", opt.space, "which space: omega3g3|bg|g|anick")
        ->capture_default_str();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "compute, then recount every dimension by direct monomial enumeration");
    add_common(oracle, opt, true, true);
    oracle->add_flag("--force", opt.force, "allow slow recounts above N = 80");
    oracle->add_option("--inject-fault", opt.inject_fault, "corrupt one emitted degree (testing)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        return run(app, opt);
    } catch (const bgk::hypothesis_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
