// Command-line front end over the hmsdp C API.
//
// Exit codes: 0 success (certificate passes where applicable), 1 certificate
// failure, 2 degenerate/commutative flags under --strict, 64 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "hmsdp.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitStrictFlag = 2;
constexpr int kExitBadInput = 64;

struct SessionDeleter {
    void operator()(hmsdp_session* s) const { hmsdp_session_free(s); }
};
using Session = std::unique_ptr<hmsdp_session, SessionDeleter>;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

// Common options shared by every subcommand.
struct Options {
    std::string input;
    std::string out;
    double tol = 1e-8;
    long max_terms = 100000;
    unsigned long seed = 1;
    bool strict = false;
    std::string side = "both";
};

Session make_session(const Options& opt) {
    Session s(hmsdp_session_new());
    if (!s) throw std::runtime_error("session allocation failed");
    if (hmsdp_set_tolerance(s.get(), opt.tol) != HMSDP_OK ||
        hmsdp_set_max_terms(s.get(), opt.max_terms) != HMSDP_OK ||
        hmsdp_set_seed(s.get(), opt.seed) != HMSDP_OK)
        throw std::runtime_error(hmsdp_last_error(s.get()));
    return s;
}

int report_error(const Session& s, hmsdp_status rc) {
    std::cerr << "error: " << hmsdp_last_error(s.get()) << "\n";
    return rc == HMSDP_ERR_INVALID_ARGUMENT ? kExitBadInput : kExitFailure;
}

int run_verify(const Options& opt) {
    const Session s = make_session(opt);
    char* doc = nullptr;
    const hmsdp_status rc = hmsdp_verify_json(s.get(), read_file(opt.input).c_str(), &doc);
    if (rc != HMSDP_OK) return report_error(s, rc);
    const std::string text(doc);
    hmsdp_free(doc);
    write_output(text, opt.out);

    const auto j = nlohmann::json::parse(text);
    const bool pass = j.at("pass").get<bool>();
    const auto& flags = j.at("flags");
    const bool flagged = flags.at("commutative").get<bool>() ||
                         flags.at("degenerate").get<bool>() || flags.at("marginal").get<bool>();
    if (opt.strict && flagged) return kExitStrictFlag;
    return pass ? 0 : kExitFailure;
}

int run_tables(const Options& opt) {
    const Session s = make_session(opt);
    char* doc = nullptr;
    const hmsdp_status rc =
        hmsdp_tables_json(s.get(), read_file(opt.input).c_str(), opt.side.c_str(), &doc);
    if (rc != HMSDP_OK) return report_error(s, rc);
    write_output(doc, opt.out);
    hmsdp_free(doc);
    return 0;
}

int run_monodromy(const Options& opt) {
    const Session s = make_session(opt);
    char* doc = nullptr;
    const hmsdp_status rc = hmsdp_monodromy_json(s.get(), &doc);
    if (rc != HMSDP_OK) return report_error(s, rc);
    write_output(doc, opt.out);
    hmsdp_free(doc);
    return 0;
}

int run_oracle(const Options& opt, int k) {
    const Session s = make_session(opt);
    char* doc = nullptr;
    const hmsdp_status rc = hmsdp_oracle_json(s.get(), k, &doc);
    if (rc != HMSDP_OK) return report_error(s, rc);
    const std::string text(doc);
    hmsdp_free(doc);
    write_output(text, opt.out);
    return nlohmann::json::parse(text).at("pass").get<bool>() ? 0 : kExitFailure;
}

int run_degeneracy(const Options& opt) {
    const Session s = make_session(opt);
    char* doc = nullptr;
    const hmsdp_status rc = hmsdp_degeneracy_json(s.get(), read_file(opt.input).c_str(), &doc);
    if (rc != HMSDP_OK) return report_error(s, rc);
    const std::string text(doc);
    hmsdp_free(doc);
    write_output(text, opt.out);
    if (opt.strict && nlohmann::json::parse(text).at("any_degenerate").get<bool>())
        return kExitStrictFlag;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mirror-correspondence verification toolkit for Del Pezzo surfaces"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env_cap = std::getenv("HMS_MAX_TERMS")) {
        try {
            opt.max_terms = std::stol(env_cap);
        } catch (...) {
            std::cerr << "error: HMS_MAX_TERMS is not an integer\n";
            return kExitBadInput;
        }
    }

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", opt.input, "Kaehler class JSON file")->required();
        cmd->add_option("--out", opt.out, "output path (default: stdout)");
        cmd->add_option("--tol", opt.tol, "comparison tolerance");
        cmd->add_option("--max-terms", opt.max_terms, "series term cap");
        cmd->add_option("--seed", opt.seed, "seed for the torus model");
        cmd->add_flag("--strict", opt.strict, "exit 2 on degenerate/commutative flags");
    };

    auto* verify = app.add_subcommand("verify", "run the full mirror certificate");
    add_common(verify, true);

    auto* tables = app.add_subcommand("tables", "emit composition tables and quiver data");
    add_common(tables, true);
    tables->add_option("--side", opt.side, "fukaya, quiver, or both")
        ->check(CLI::IsMember({"fukaya", "quiver", "both"}));

    auto* monodromy = app.add_subcommand("monodromy", "twist matrices and the relation");
    add_common(monodromy, false);

    int oracle_k = 3;
    auto* oracle = app.add_subcommand("oracle", "exact flat-torus verification report");
    add_common(oracle, false);

    auto* degeneracy = app.add_subcommand("degeneracy", "lattice test over all class pairs");
    add_common(degeneracy, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(opt);
        if (tables->parsed()) return run_tables(opt);
        if (monodromy->parsed()) return run_monodromy(opt);
        if (oracle->parsed()) return run_oracle(opt, oracle_k);
        if (degeneracy->parsed()) return run_degeneracy(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
