// jrel: build the relation systems for the builtin (or user-supplied) group
// cases and decide vanishing of t^1 p-locally, with checkable certificates.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jrel/engine.hpp"
#include "jrel/identity.hpp"

namespace {

using namespace jrel;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

// The positional may be a builtin name or a path to a case file.
CaseSpec resolve_case_arg(const std::string& case_arg, const std::string& case_file, int prime,
                          std::vector<std::string>* warnings) {
    if (!case_file.empty()) return load_case_text(read_file(case_file), warnings);
    if (std::filesystem::exists(case_arg))
        return load_case_text(read_file(case_arg), warnings);
    return find_case(case_arg, prime);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_verify(const std::string& case_arg, const std::string& case_file, int prime,
               const std::string& source, std::optional<Exp> window, std::optional<Exp> i_max,
               const std::string& emit_certificate) {
    std::vector<std::string> warnings;
    CaseSpec cs = resolve_case_arg(case_arg, case_file, prime, &warnings);
    print_warnings(warnings);

    CaseRun run = run_case(cs, prime, source_from_string(source), window, i_max);
    std::cout << "case " << run.case_name << ", p=" << run.prime << ", source "
              << to_string(run.source) << ", window " << run.window << ", i_max " << run.i_max
              << "\n";
    std::cout << "rows kept " << run.rows_kept << ", dropped " << run.dropped << "\n";
    std::cout << "minimal multiple of t^1: " << run.verdict.m_str() << "\n";
    std::cout << "zero at p=" << prime << ": " << (run.verdict.zero_at_p ? "yes" : "no") << "\n";
    for (const auto& note : run.notes) std::cout << "note: " << note << "\n";

    if (!emit_certificate.empty()) {
        if (!run.verdict.certificate)
            throw Error("no certificate: verdict is negative (minimal multiple " +
                        run.verdict.m_str() + ", " + std::to_string(run.dropped) +
                        " relations dropped)");
        write_file(emit_certificate,
                   certificate_to_json(*run.verdict.certificate, run.matrix).dump(2) + "\n");
        std::cout << "certificate written to " << emit_certificate << "\n";
    }
    return run.verdict.zero_at_p ? 0 : 1;
}

int cmd_expand(const std::string& case_arg, const std::string& case_file, int prime,
               Exp lambda) {
    std::vector<std::string> warnings;
    CaseSpec cs = resolve_case_arg(case_arg, case_file, prime, &warnings);
    print_warnings(warnings);
    Character c = resolve_character(cs, lambda);
    std::cout << "case " << cs.name << ", lambda " << lambda << "\n";
    std::cout << "dim " << dec(dim(c)) << "\n";
    std::cout << c.str() << "\n";
    return 0;
}

int cmd_check(const std::string& case_arg, const std::string& case_file, int prime,
              const std::string& source, const std::string& identity_text,
              std::optional<Exp> window, std::optional<Exp> i_max,
              const std::string& emit_certificate) {
    std::vector<std::string> warnings;
    CaseSpec cs = resolve_case_arg(case_arg, case_file, prime, &warnings);
    print_warnings(warnings);

    auto lhs = parse_identity(identity_text);
    Exp w = window.value_or(cs.window);
    auto rels = build_case_relations(cs, prime, source_from_string(source),
                                     i_max.value_or(cs.i_max), w);
    RelationMatrix M = build_matrix(rels, w);
    auto res = identity_multiple(M, lhs);
    bool holds = res.finite && res.m % prime != 0;

    std::cout << "identity: " << identity_to_string(lhs) << " = 0\n";
    if (res.finite)
        std::cout << "smallest multiplier in the span: " << dec(res.m) << "\n";
    else
        std::cout << "no multiple of the left side lies in the span\n";
    std::cout << "holds " << prime << "-locally: " << (holds ? "yes" : "no") << "\n";
    if (!M.dropped.empty())
        std::cout << "note: " << M.dropped.size() << " relations dropped at window " << w << "\n";

    if (!emit_certificate.empty()) {
        if (!holds) throw Error("no certificate: the identity does not hold " +
                                std::to_string(prime) + "-locally");
        Certificate cert;
        cert.m = res.m;
        cert.prime = prime;
        cert.combination = res.combination;
        cert.lhs = lhs;
        cert.identity = identity_text;
        write_file(emit_certificate, certificate_to_json(cert, M).dump(2) + "\n");
        std::cout << "certificate written to " << emit_certificate << "\n";
    }
    return holds ? 0 : 1;
}

int cmd_report(const std::string& format, std::string output_dir, const std::string& source) {
    if (output_dir.empty()) output_dir = default_output_dir();
    auto runs = run_all_builtins(source_from_string(source));
    for (auto& run : runs) {
        if (!run.verdict.certificate) continue;
        std::string path = output_dir + "/" + certificate_filename(run);
        write_file(path, certificate_to_json(*run.verdict.certificate, run.matrix).dump(2) + "\n");
        run.certificate_path = path;
    }
    if (format == "json")
        std::cout << report_json(runs).dump(2) << "\n";
    else
        std::cout << report_markdown(runs);
    return 0;
}

int cmd_cases_list() {
    std::cout << "name    primes  lambdas  divisor  displays  window  i_max\n";
    for (const auto& cs : builtin_cases()) {
        std::ostringstream primes, lambdas;
        for (std::size_t i = 0; i < cs.primes.size(); ++i)
            primes << (i ? "," : "") << cs.primes[i];
        for (std::size_t i = 0; i < cs.lambda_powers.size(); ++i)
            lambdas << (i ? "," : "") << cs.lambda_powers[i];
        std::cout << cs.name << std::string(8 - std::min<std::size_t>(7, cs.name.size()), ' ')
                  << primes.str() << "\t" << lambdas.str() << "\t " << cs.exponent_divisor
                  << "\t  " << cs.printed_relations.size() << "\t   " << cs.window << "\t "
                  << cs.i_max << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relation-system verifier for p-local vanishing of t^1"};
    app.require_subcommand(1);

    std::string case_arg, case_file, source = "both", identity_text, emit_certificate;
    std::string format = "markdown", output_dir;
    int prime = 0;
    Exp lambda = 1;
    std::optional<Exp> window, i_max;

    auto add_case_opts = [&](CLI::App* cmd, bool need_prime) {
        cmd->add_option("case", case_arg, "builtin case name or case file path")->required();
        cmd->add_option("--case-file", case_file, "load the case from this file");
        auto* p = cmd->add_option("--prime", prime, "prime to localize at (2 or 3)");
        if (need_prime) p->required()->check(CLI::IsMember({2, 3}));
    };

    auto* verify = app.add_subcommand("verify", "decide whether t^1 vanishes p-locally");
    add_case_opts(verify, true);
    verify->add_option("--source", source, "relation source: computed, printed or both")
        ->check(CLI::IsMember({"computed", "printed", "both"}));
    verify->add_option("--window", window, "generator window bound N (|exponent| <= N)");
    verify->add_option("--i-max", i_max, "largest shift i of the restriction relations");
    verify->add_option("--emit-certificate", emit_certificate,
                       "write the certificate file here");

    auto* expand = app.add_subcommand("expand", "print a resolved character");
    add_case_opts(expand, false);
    expand->add_option("--lambda", lambda, "exterior power to apply");

    auto* check = app.add_subcommand("check", "check an identity p-locally");
    add_case_opts(check, true);
    check->add_option("identity", identity_text, "e.g. \"16t = 0\" or \"t^4 = 2*t^2\"")
        ->required();
    check->add_option("--source", source, "relation source: computed, printed or both")
        ->check(CLI::IsMember({"computed", "printed", "both"}));
    check->add_option("--window", window, "generator window bound N");
    check->add_option("--i-max", i_max, "largest shift i of the restriction relations");
    check->add_option("--emit-certificate", emit_certificate,
                      "write the certificate file here");

    auto* report = app.add_subcommand("report", "run all builtin cases and emit a document");
    report->add_flag("--all", "run every builtin case (the default and only scope)");
    report->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    report->add_option("--output-dir", output_dir,
                       "directory for certificate files (default: JREL_OUTPUT_DIR or .)");
    report->add_option("--source", source, "relation source: computed, printed or both")
        ->check(CLI::IsMember({"computed", "printed", "both"}));

    auto* cases = app.add_subcommand("cases", "catalog inspection");
    auto* cases_list = cases->add_subcommand("list", "list the builtin cases");
    cases->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(case_arg, case_file, prime, source, window, i_max,
                              emit_certificate);
        if (expand->parsed()) return cmd_expand(case_arg, case_file, prime, lambda);
        if (check->parsed())
            return cmd_check(case_arg, case_file, prime, source, identity_text, window, i_max,
                             emit_certificate);
        if (report->parsed()) return cmd_report(format, output_dir, source);
        if (cases_list->parsed()) return cmd_cases_list();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
