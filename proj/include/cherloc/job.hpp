#pragma once

/**
 * @file job.hpp
 * @brief Command dispatch shared by the command-line tool and the tests.
 *
 * A JobSpec describes one invocation (command, sizes, parameters, options);
 * run_job executes it and returns the artifact text and the exit code:
 * 0 success / positive decision, 1 negative decision, 2 invalid input.
 */

#include "cherloc/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cherloc {

enum ExitCode { kExitOk = 0, kExitNegative = 1, kExitInvalid = 2 };

struct JobOptions {
    BoxOrderMode box_mode = BoxOrderMode::Literal;
    IndexMode index_mode = IndexMode::Literal;
    int oracle_bound = 6;
    int retry_bound = 64;
    unsigned workers = 1;
    int max_n = 8;
    int max_ell = 4;
};

struct JobSpec {
    std::string command;
    std::optional<int> ell;
    std::optional<int> n;
    std::optional<Params> params;
    std::optional<Stability> theta;
    std::string relation1_path;
    std::string relation2_path;
    JobOptions options;
};

struct JobResult {
    int exit_code = kExitOk;
    std::string output;               // JSON artifact (empty on invalid input)
    std::optional<std::string> dot;   // Hasse diagram for `order`
    std::string error;                // message for exit code 2
};

inline const std::vector<std::string>& job_commands() {
    static const std::vector<std::string> cmds = {"enumerate", "order",    "spherical",        "generic",
                                                  "theta",     "localize", "common-refinement"};
    return cmds;
}

/// CHERLOC_MAX_N overrides the default bound on n.
inline int default_max_n() {
    if (const char* env = std::getenv("CHERLOC_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("CHERLOC_MAX_N is not an integer");
        }
    }
    return 8;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonError("malformed JSON in " + what + ": " + e.what());
    }
}

/// JobSpec from a JSON document: {"command", "ell", "n", "params", "theta", "relations", "options"}.
inline JobSpec job_from_json(const json& j) {
    JobSpec job;
    job.command = detail::require(j, "command").get<std::string>();
    if (j.contains("ell")) job.ell = static_cast<int>(detail::small_integer(j, "ell"));
    if (j.contains("n")) job.n = static_cast<int>(detail::small_integer(j, "n"));
    if (j.contains("params")) job.params = params_from_json(j.at("params"));
    if (j.contains("theta")) {
        KappaMode mode = job.params ? job.params->mode() : KappaMode::rational(Rational(1));
        const json& t = j.at("theta");
        bool formal = false;
        if (t.is_array())
            for (const auto& e : t)
                if (e.is_object() && e.contains("b") && detail::rational_field(e.at("b")) != 0) formal = true;
        if (formal && !mode.is_formal()) mode = KappaMode::formal();
        job.theta = stability_from_json(t, mode);
    }
    if (j.contains("relations")) {
        auto paths = j.at("relations").get<std::vector<std::string>>();
        if (paths.size() != 2) throw JsonError("'relations' must list exactly two files");
        job.relation1_path = paths[0];
        job.relation2_path = paths[1];
    }
    job.options.max_n = default_max_n();
    if (j.contains("options")) {
        const json& o = j.at("options");
        if (o.contains("tiebreak") && o.at("tiebreak").get<bool>()) job.options.box_mode = BoxOrderMode::Step1Tiebreak;
        if (o.contains("index_mode")) job.options.index_mode = detail::index_mode_from(o.at("index_mode").get<std::string>());
        if (o.contains("oracle_bound")) job.options.oracle_bound = o.at("oracle_bound").get<int>();
        if (o.contains("retry_bound")) job.options.retry_bound = o.at("retry_bound").get<int>();
        if (o.contains("workers")) job.options.workers = o.at("workers").get<unsigned>();
        if (o.contains("max_n")) job.options.max_n = o.at("max_n").get<int>();
        if (o.contains("max_ell")) job.options.max_ell = o.at("max_ell").get<int>();
    }
    return job;
}

namespace detail {

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline int require_n(const JobSpec& job) {
    if (!job.n) throw std::invalid_argument("--n is required for '" + job.command + "'");
    if (*job.n < 0) throw std::invalid_argument("n must be nonnegative");
    if (*job.n > job.options.max_n)
        throw std::invalid_argument("n = " + std::to_string(*job.n) + " exceeds the size guard " +
                                    std::to_string(job.options.max_n) + " (raise with --max-n or CHERLOC_MAX_N)");
    return *job.n;
}

inline int require_positive_n(const JobSpec& job) {
    int n = require_n(job);
    if (n < 1) throw std::invalid_argument("n must be positive for '" + job.command + "'");
    return n;
}

inline void check_ell(const JobSpec& job, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    if (ell > job.options.max_ell)
        throw std::invalid_argument("ell = " + std::to_string(ell) + " exceeds the size guard " +
                                    std::to_string(job.options.max_ell) + " (raise with --max-ell)");
}

inline const Params& require_params(const JobSpec& job) {
    if (!job.params) throw std::invalid_argument("parameters (--kappa/--h or --params-file) are required for '" +
                                                 job.command + "'");
    check_ell(job, job.params->ell());
    if (job.ell && *job.ell != job.params->ell())
        throw std::invalid_argument("--ell does not match the number of h entries");
    return *job.params;
}

inline MultipartitionRelation load_relation(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("common-refinement needs two relation files");
    return relation_from_json(parse_json_text(read_text_file(path), path));
}

inline JobResult execute(const JobSpec& job) {
    JobResult res;
    const std::string& cmd = job.command;
    if (cmd == "enumerate") {
        if (!job.ell) throw std::invalid_argument("--ell is required for 'enumerate'");
        check_ell(job, *job.ell);
        int n = require_n(job);
        auto labels = enumerate_multipartitions(*job.ell, n);
        json list = json::array();
        for (const auto& m : labels) list.push_back(to_json(m));
        res.output = dump({{"ell", *job.ell}, {"n", n}, {"count", labels.size()}, {"multipartitions", list}});
    } else if (cmd == "order") {
        const Params& p = require_params(job);
        int n = require_n(job);
        auto rel = relation_p(OrderInstance(p, n, job.options.box_mode), job.options.workers);
        res.output = dump(to_json(rel));
        if (is_partial_order(rel)) {
            res.dot = order_to_dot(rel);
        } else {
            res.exit_code = kExitNegative;  // documented finding: <=^p failed an order axiom
        }
    } else if (cmd == "spherical") {
        const Params& p = require_params(job);
        int n = require_positive_n(job);
        auto ws = aspherical_witnesses(p, n);
        res.output = dump({{"n", n}, {"params", to_json(p)}, {"spherical", ws.empty()}, {"witnesses", to_json(ws)}});
        res.exit_code = ws.empty() ? kExitOk : kExitNegative;
    } else if (cmd == "generic") {
        if (!job.theta) throw std::invalid_argument("--theta is required for 'generic'");
        check_ell(job, job.theta->ell());
        int n = require_positive_n(job);
        auto g = is_generic(*job.theta, n, job.options.index_mode);
        json out = {{"generic", g.generic}, {"index_mode", to_string(job.options.index_mode)}, {"n", n},
                    {"theta", to_json(*job.theta)}};
        if (g.witness) out["witness"] = to_json(*g.witness);
        res.output = dump(out);
        res.exit_code = g.generic ? kExitOk : kExitNegative;
    } else if (cmd == "theta") {
        const Params& p = require_params(job);
        res.output = dump({{"params", to_json(p)}, {"theta", to_json(theta_of_p(p))}});
    } else if (cmd == "localize") {
        const Params& p = require_params(job);
        int n = require_positive_n(job);
        if (p.kappa_is_zero()) throw std::invalid_argument("localize requires kappa != 0");
        LocalizeOptions opt{job.options.index_mode, job.options.box_mode, job.options.retry_bound,
                            job.options.oracle_bound, job.options.workers};
        LocalizeResult r = localize(p, n, opt);
        if (r) {
            res.output = dump(to_json(*r.certificate));
        } else {
            res.output = dump({{"status", "failed"}, {"diagnostics", r.diagnostics}});
            res.exit_code = kExitNegative;
        }
    } else if (cmd == "common-refinement") {
        auto r1 = load_relation(job.relation1_path);
        auto r2 = load_relation(job.relation2_path);
        if (r1.labels() != r2.labels()) throw std::invalid_argument("relations are over different label lists");
        auto cr = common_refinement(r1, r2);
        if (cr.order) {
            res.output = dump(to_json(*cr.order));
        } else {
            json cycle = json::array();
            for (auto k : cr.cycle) cycle.push_back(to_json(r1.label(k)));
            res.output = dump({{"cycle", cycle}});
            res.exit_code = kExitNegative;
        }
    } else {
        throw std::invalid_argument("unknown command '" + cmd + "'");
    }
    return res;
}

}  // namespace detail

inline JobResult run_job(const JobSpec& job) {
    try {
        return detail::execute(job);
    } catch (const std::invalid_argument& e) {
        return {kExitInvalid, {}, std::nullopt, e.what()};
    } catch (const std::out_of_range& e) {
        return {kExitInvalid, {}, std::nullopt, e.what()};
    } catch (const JsonError& e) {
        return {kExitInvalid, {}, std::nullopt, e.what()};
    } catch (const json::exception& e) {
        return {kExitInvalid, {}, std::nullopt, e.what()};
    } catch (const std::logic_error& e) {
        return {kExitInvalid, {}, std::nullopt, e.what()};
    }
}

}  // namespace cherloc
