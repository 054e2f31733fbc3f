// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

// selmergen CLI: deterministic curve generation from descent artifacts,
// standalone validation, and transcript verification.
//
// Exit codes: 0 success/valid, 1 validation or verification failure,
// 2 trial budget exhausted, 3 parse or I/O error, 4 usage error.

#include <sys/wait.h>
#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "selmergen/pipeline.hpp"

using namespace selmergen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitIo = 3;
constexpr int kExitUsage = 4;

// Subprocess plug-in protocol: decimal p, A, B, one per stdin line;
// decimal N on stdout.
mpz_class run_counter_command(const std::string& cmd, const mpz_class& p,
                              const mpz_class& a, const mpz_class& b) {
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
        throw Error("counter-cmd: pipe failed");
    pid_t pid = fork();
    if (pid < 0) throw Error("counter-cmd: fork failed");
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        execl("/bin/sh", "sh", "-c", cmd.c_str(), (char*)nullptr);
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);

    std::string input = p.get_str() + "\n" + a.get_str() + "\n" + b.get_str() + "\n";
    size_t off = 0;
    while (off < input.size()) {
        ssize_t w = write(to_child[1], input.data() + off, input.size() - off);
        if (w <= 0) break;
        off += size_t(w);
    }
    close(to_child[1]);

    std::string output;
    char buf[256];
    ssize_t r;
    while ((r = read(from_child[0], buf, sizeof buf)) > 0) output.append(buf, size_t(r));
    close(from_child[0]);

    int status = 0;
    waitpid(pid, &status, 0);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw Error("counter-cmd exited with status " + std::to_string(WEXITSTATUS(status)));

    size_t first = output.find_first_not_of(" \t\r\n");
    size_t last = output.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error("counter-cmd produced no output");
    std::string num = output.substr(first, last - first + 1);
    for (char c : num) {
        if (c < '0' || c > '9') throw Error("counter-cmd output is not a decimal integer");
    }
    return mpz_class(num, 10);
}

struct CommonCountingFlags {
    std::string counter_cmd;
    std::uint64_t count_bound = std::uint64_t(1) << 26;

    CountingOptions options() const {
        CountingOptions opts;
        opts.builtin_bound = count_bound;
        if (!counter_cmd.empty()) {
            std::string cmd = counter_cmd;
            opts.external = [cmd](const mpz_class& p, const mpz_class& a, const mpz_class& b) {
                return run_counter_command(cmd, p, a, b);
            };
        }
        return opts;
    }
};

std::string decimal(const mpz_class& v) { return v.get_str(10); }

void print_summary(std::ostream& os, const Transcript& tr) {
    mpz_class p(tr.p);
    os << "Prime p              " << decimal(p) << "\n"
       << "Domain string DS     " << tr.ds << "\n"
       << "Seed sigma           " << sigma_to_hex(tr.sigma) << "\n"
       << "c4                   " << decimal(tr.reconciliation.c4) << "\n"
       << "c6                   " << decimal(tr.reconciliation.c6) << "\n"
       << "Discriminant Delta   " << decimal(tr.reconciliation.delta) << "\n"
       << "#E(F_p)              " << decimal(tr.order.n) << " = " << decimal(tr.order.h)
       << " * " << decimal(tr.order.r) << "\n"
       << "Cofactor h           " << decimal(tr.order.h) << "\n"
       << "Large prime r        " << decimal(tr.order.r) << "\n"
       << "#E'(F_p)             " << decimal(tr.order.n_twist) << " = "
       << decimal(tr.order.h_twist) << " * " << decimal(tr.order.r_twist) << "\n"
       << "Twist cofactor h'    " << decimal(tr.order.h_twist) << "\n"
       << "Twist prime r'       " << decimal(tr.order.r_twist) << "\n"
       << "Embedding degree k   "
       << (tr.validation.embedding_k_found
               ? std::to_string(*tr.validation.embedding_k_found)
               : "none detected (k <= " + std::to_string(tr.policy.k_max) + ")")
       << "\n"
       << "Accepted trial       " << tr.trial_index << "\n"
       << "Validation           " << (tr.validation.overall ? "pass" : "FAIL") << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Transcript files are canonical bytes; tolerate a single POSIX trailing
// newline from shell redirection.
std::string strip_trailing_newline(std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

Policy policy_for(const std::string& name, unsigned p_bits) {
    if (name == "strict") return Policy::strict_profile(p_bits);
    if (name == "demo") return Policy::demo_profile();
    if (name == "auto" || name.empty()) return Policy::default_for(p_bits);
    throw Error("unknown policy: " + name);
}

int cmd_generate(const std::string& prime_str, const std::string& ds,
                 const std::string& seed_hex, const std::string& policy_name,
                 std::uint64_t max_trials, std::uint64_t stage_budget,
                 const std::vector<unsigned>& ell_set, std::uint64_t search_bound,
                 std::uint64_t cubic_search_bound, const std::string& cubic_mode,
                 const std::string& out_path, bool json_only,
                 const CommonCountingFlags& counting) {
    std::array<std::uint8_t, 32> sigma;
    try {
        sigma = sigma_from_hex(seed_hex);
    } catch (const ParseError& e) {
        throw Error(std::string("--seed: ") + e.what());
    }
    GenerationConfig cfg;
    cfg.seed = make_seed_context(make_modulus(mpz_class(prime_str, 10)), ds, sigma);
    if (!cfg.seed.modulus->is_three_mod_four())
        std::cerr << "warning: p = 3 (mod 4) is the admissible default; this p is not\n";
    cfg.policy = policy_for(policy_name, cfg.seed.modulus->bit_len());
    cfg.policy.max_trials = max_trials;
    cfg.max_trials = max_trials;
    cfg.stage_budget = stage_budget;
    if (!ell_set.empty()) cfg.solubility.ell_set = ell_set;
    cfg.solubility.quartic_search_bound = search_bound;
    cfg.solubility.cubic_search_bound = cubic_search_bound;
    cfg.cubic_mode = cubic_mode_from_string(cubic_mode);
    cfg.counting = counting.options();

    Transcript tr = generate(cfg);
    std::string bytes = serialize(tr);
    if (out_path.empty()) {
        std::cout << bytes;
        if (!json_only) print_summary(std::cerr, tr);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write " + out_path);
        out << bytes;
        if (!json_only) print_summary(std::cout, tr);
    }
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& policy_name,
               const CommonCountingFlags& counting) {
    std::string data;
    Transcript tr;
    try {
        data = strip_trailing_newline(read_file(path));
        tr = parse(data);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    VerifyOptions opts;
    opts.counting = counting.options();
    if (!policy_name.empty() && policy_name != "recorded")
        opts.policy_override = policy_for(policy_name, unsigned(mpz_sizeinbase(tr.p.get_mpz_t(), 2)));
    VerifyReport rep = verify(tr, opts);
    std::cout << rep.summary << "\n";
    for (const auto& f : rep.identity_failures) std::cout << "identity: " << f << "\n";
    if (rep.override_validation_passed.has_value()) {
        std::cout << "policy override validation: "
                  << (*rep.override_validation_passed ? "pass" : "fail") << "\n";
        if (!*rep.override_validation_passed) return kExitInvalid;
    }
    return rep.ok ? kExitOk : kExitInvalid;
}

int cmd_validate(const std::string& prime_str, const std::string& c4_str,
                 const std::string& c6_str, const std::string& policy_name,
                 const CommonCountingFlags& counting) {
    mpz_class p(prime_str, 10);
    ModulusPtr m = make_modulus(p);
    Policy policy = policy_for(policy_name, m->bit_len());
    ExternalValidation ev = validate_external(p, mpz_class(c4_str, 10),
                                              mpz_class(c6_str, 10), policy,
                                              counting.options());
    std::cout << validation_report_json(ev.curve, ev.order, ev.report, policy) << "\n";
    return ev.report.overall() ? kExitOk : kExitInvalid;
}

int cmd_inspect(const std::string& path) {
    try {
        Transcript tr = parse(strip_trailing_newline(read_file(path)));
        print_summary(std::cout, tr);
        std::cout << "Schema               " << tr.schema_version << "\n"
                  << "Cursors              F2=" << tr.stream_cursors.at("F2")
                  << " F3=" << tr.stream_cursors.at("F3")
                  << " U=" << tr.stream_cursors.at("U") << "\n"
                  << "Quartic rejections   zero_or_square=" << tr.quartic.rej_zero_or_square
                  << " singular=" << tr.quartic.rej_singular
                  << " insoluble=" << tr.quartic.rej_insoluble << "\n"
                  << "Cubic rejections     singular=" << tr.cubic.rej_singular
                  << " insoluble=" << tr.cubic.rej_insoluble << "\n"
                  << "Singular restarts    " << tr.reconciliation.singular_restarts << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic elliptic-curve parameter generation from descent artifacts"};
    app.require_subcommand(1);

    CommonCountingFlags counting;

    // generate
    auto* gen = app.add_subcommand("generate", "run the generation pipeline");
    std::string g_prime, g_ds, g_seed, g_policy = "auto", g_out, g_mode = "classical";
    std::uint64_t g_max_trials = 10000, g_stage_budget = 10000;
    std::uint64_t g_search_bound = 256, g_cubic_search_bound = 64;
    std::vector<unsigned> g_ell_set;
    bool g_json = false;
    gen->add_option("--prime", g_prime, "prime modulus p (decimal)")->required();
    gen->add_option("--ds", g_ds, "domain separator string")->required();
    gen->add_option("--seed", g_seed, "32-byte seed as 64 hex characters")->required();
    gen->add_option("--policy", g_policy, "validation policy: strict, demo, or auto");
    gen->add_option("--max-trials", g_max_trials, "trial budget for the Las Vegas loop");
    gen->add_option("--stage-budget", g_stage_budget, "per-stage rejection budget");
    gen->add_option("--ell-set", g_ell_set, "local solubility primes")->delimiter(',');
    gen->add_option("--search-bound", g_search_bound, "quartic F_p solubility search bound");
    gen->add_option("--cubic-search-bound", g_cubic_search_bound,
                    "cubic F_p solubility search bound");
    gen->add_option("--cubic-mode", g_mode,
                    "cubic invariants: classical or hash_placeholder");
    gen->add_option("--out", g_out, "write the transcript to this file");
    gen->add_flag("--json", g_json, "suppress the human summary");

    // verify
    auto* ver = app.add_subcommand("verify", "re-derive and check a transcript");
    std::string v_path, v_policy;
    ver->add_option("transcript", v_path, "transcript file")->required();
    ver->add_option("--policy", v_policy,
                    "additionally validate the curve under this policy");

    // validate
    auto* val = app.add_subcommand("validate", "validate explicit (p, c4, c6)");
    std::string l_prime, l_c4, l_c6, l_policy = "auto";
    val->add_option("--prime", l_prime, "prime modulus p (decimal)")->required();
    val->add_option("--c4", l_c4, "c4 (decimal)")->required();
    val->add_option("--c6", l_c6, "c6 (decimal)")->required();
    val->add_option("--policy", l_policy, "validation policy: strict, demo, or auto");

    // inspect
    auto* ins = app.add_subcommand("inspect", "print a transcript summary");
    std::string i_path;
    ins->add_option("transcript", i_path, "transcript file")->required();

    for (auto* sub : {gen, ver, val}) {
        sub->add_option("--counter-cmd", counting.counter_cmd,
                        "external point counter command (p, A, B decimal on stdin; N on stdout)");
        sub->add_option("--count-bound", counting.count_bound,
                        "largest p for the built-in counter");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(g_prime, g_ds, g_seed, g_policy, g_max_trials, g_stage_budget,
                                g_ell_set, g_search_bound, g_cubic_search_bound, g_mode,
                                g_out, g_json, counting);
        if (ver->parsed()) return cmd_verify(v_path, v_policy, counting);
        if (val->parsed()) return cmd_validate(l_prime, l_c4, l_c6, l_policy, counting);
        if (ins->parsed()) return cmd_inspect(i_path);
    } catch (const MaxTrialsExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const SingularInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
