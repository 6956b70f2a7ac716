// cherloc: command-line front end for the content-order / localization toolkit.
//
//   cherloc enumerate --ell 2 --n 3
//   cherloc order --kappa 1 --h 0 --n 3 --out rel.json --dot rel.dot
//   cherloc localize --kappa 1/2 --h 0 --n 2
//   cherloc common-refinement --relation1 a.json --relation2 b.json
//   cherloc run --job job.json

#include "cherloc/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

struct Flags {
    std::optional<int> ell;
    std::optional<int> n;
    std::string kappa;
    std::string h;
    std::string theta;
    std::string params_file;
    std::string relation1;
    std::string relation2;
    bool tiebreak = false;
    std::string index_mode = "literal";
    int oracle_bound = 6;
    int retry_bound = 64;
    unsigned workers = 1;
    std::optional<int> max_n;
    int max_ell = 4;
    std::string out;
    std::string dot;
    std::string job;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--ell", f.ell, "number of components ell");
    sub->add_option("--n", f.n, "size n of the multipartitions");
    sub->add_option("--kappa", f.kappa, "kappa as a rational \"p/q\" or \"formal\"");
    sub->add_option("--h", f.h, "comma-separated h_0,...,h_{ell-1} (e.g. \"1/4,-1/4\" or \"1/2+k,0\")");
    sub->add_option("--theta", f.theta, "comma-separated stability condition");
    sub->add_option("--params-file", f.params_file, "parameters as JSON");
    sub->add_option("--relation1", f.relation1, "first relation JSON (common-refinement)");
    sub->add_option("--relation2", f.relation2, "second relation JSON (common-refinement)");
    sub->add_flag("--tiebreak", f.tiebreak, "order equal-content equivalent boxes by component");
    sub->add_option("--index-mode", f.index_mode, "genericity index range: literal | include-zero");
    sub->add_option("--oracle-bound", f.oracle_bound, "largest n for the relation double-check");
    sub->add_option("--retry-bound", f.retry_bound, "deformation candidates to try");
    sub->add_option("--workers", f.workers, "threads for relation computation");
    sub->add_option("--max-n", f.max_n, "size guard on n (default 8, or CHERLOC_MAX_N)");
    sub->add_option("--max-ell", f.max_ell, "size guard on ell");
    sub->add_option("--out", f.out, "write the JSON artifact here instead of stdout");
    sub->add_option("--dot", f.dot, "write the Hasse diagram (order)");
}

cherloc::JobSpec job_from_flags(const std::string& command, const Flags& f) {
    using namespace cherloc;
    JobSpec job;
    job.command = command;
    job.ell = f.ell;
    job.n = f.n;
    job.relation1_path = f.relation1;
    job.relation2_path = f.relation2;

    if (!f.params_file.empty()) {
        job.params = params_from_json(parse_json_text(read_text_file(f.params_file), f.params_file));
    } else if (!f.kappa.empty()) {
        KappaMode mode = f.kappa == "formal" ? KappaMode::formal() : KappaMode::rational(parse_rational(f.kappa));
        std::vector<ParamScalar> h;
        if (!f.h.empty()) {
            h = parse_scalar_list(f.h, mode);
        } else {
            if (!f.ell) throw std::invalid_argument("--ell or --h is required with --kappa");
            if (*f.ell < 1) throw std::invalid_argument("ell must be positive");
            h.assign(static_cast<std::size_t>(*f.ell), mode.zero());
        }
        job.params = Params(mode, h);
    } else if (!f.h.empty()) {
        throw std::invalid_argument("--h needs --kappa");
    }

    if (!f.theta.empty()) {
        KappaMode mode = job.params ? job.params->mode()
                                    : (mentions_kappa(f.theta) ? KappaMode::formal() : KappaMode::rational(Rational(1)));
        job.theta = Stability{parse_scalar_list(f.theta, mode)};
    }

    job.options.box_mode = f.tiebreak ? BoxOrderMode::Step1Tiebreak : BoxOrderMode::Literal;
    if (f.index_mode == "literal")
        job.options.index_mode = IndexMode::Literal;
    else if (f.index_mode == "include-zero")
        job.options.index_mode = IndexMode::IncludeZero;
    else
        throw std::invalid_argument("--index-mode must be literal or include-zero");
    job.options.oracle_bound = f.oracle_bound;
    job.options.retry_bound = f.retry_bound;
    job.options.workers = f.workers;
    job.options.max_n = f.max_n ? *f.max_n : default_max_n();
    job.options.max_ell = f.max_ell;
    return job;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Content order, sphericality and localization certificates for cyclotomic Cherednik parameters"};
    app.require_subcommand(1);

    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> subs;
    const std::map<std::string, std::string> help = {
        {"enumerate", "list the ell-multipartitions of n"},
        {"order", "compute the content order on ell-multipartitions of n"},
        {"spherical", "list aspherical hyperplanes through p"},
        {"generic", "decide whether a stability condition is generic"},
        {"theta", "print theta_p"},
        {"localize", "deform p and certify a stability condition"},
        {"common-refinement", "smallest partial order containing two relations"},
    };
    for (const auto& cmd : cherloc::job_commands()) {
        subs[cmd] = app.add_subcommand(cmd, help.at(cmd));
        add_common(subs[cmd], flags[cmd]);
    }
    Flags& run_flags = flags["run"];
    subs["run"] = app.add_subcommand("run", "execute a JSON job file");
    subs["run"]->add_option("--job", run_flags.job, "job JSON")->required();
    subs["run"]->add_option("--out", run_flags.out, "write the JSON artifact here instead of stdout");
    subs["run"]->add_option("--dot", run_flags.dot, "write the Hasse diagram (order)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cherloc::kExitInvalid;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;
    const Flags& f = flags[command];

    cherloc::JobResult result;
    try {
        cherloc::JobSpec job;
        if (command == "run")
            job = cherloc::job_from_json(cherloc::parse_json_text(cherloc::read_text_file(f.job), f.job));
        else
            job = job_from_flags(command, f);
        result = cherloc::run_job(job);
    } catch (const std::exception& e) {
        result = {cherloc::kExitInvalid, {}, std::nullopt, e.what()};
    }

    if (result.exit_code == cherloc::kExitInvalid) {
        std::cerr << "cherloc: " << result.error << "\n";
        return result.exit_code;
    }
    try {
        if (f.out.empty())
            std::cout << result.output;
        else
            write_file(f.out, result.output);
        if (!f.dot.empty() && result.dot) write_file(f.dot, *result.dot);
    } catch (const std::exception& e) {
        std::cerr << "cherloc: " << e.what() << "\n";
        return cherloc::kExitInvalid;
    }
    return result.exit_code;
}
