#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "parabraid/expr.hpp"
#include "parabraid/report.hpp"
#include "parabraid/suites.hpp"
#include "parabraid/tables.hpp"

namespace {

using parabraid::RunConfig;
using parabraid::TableDocument;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return kExitPass;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return kExitUsage;
    }
    out << content;
    if (!out.good()) {
        std::cerr << "error: failed writing output path: " << path << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

struct CommonOpts {
    int order = 2;
    int modes = 2;
    int cutoff = 4;
    std::string format = "csv";
    std::string out_path;
};

void add_table_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--order", opts.order, "representation order p")->check(CLI::PositiveNumber);
    cmd->add_option("--modes", opts.modes, "number of modes m")->check(CLI::PositiveNumber);
    cmd->add_option("--cutoff", opts.cutoff, "total-degree cutoff N")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "output file (stdout when omitted)");
}

int emit_table(const TableDocument& doc, const CommonOpts& opts) {
    if (opts.format == "json") return write_output(opts.out_path, parabraid::render_json(doc.json));
    return write_output(opts.out_path, doc.csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and table extraction for paraboson-style algebras"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite and write a report");
    std::string suite = "all";
    RunConfig config;
    int modes = 0, order = 0, factors = 0, cutoff = -1, bound = 0;
    std::string relator_path, verify_out;
    verify->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember(parabraid::suite_names()));
    auto* modes_opt = verify->add_option("--modes", modes, "number of modes m");
    auto* order_opt = verify->add_option("--order", order, "representation order p");
    auto* factors_opt = verify->add_option("--factors", factors, "tensor factor count q");
    auto* cutoff_opt = verify->add_option("--cutoff", cutoff, "total-degree cutoff N");
    auto* bound_opt = verify->add_option("--bound", bound, "ideal filtration bound D");
    verify->add_option("--relators", relator_path, "relator file, one expression per line");
    verify->add_option("--out", verify_out, "report file (stdout when omitted)");

    // tables
    CommonOpts gram_opts, matelem_opts, dims_opts;
    matelem_opts.modes = 1;
    matelem_opts.cutoff = 8;
    auto* gram = app.add_subcommand("gram", "emit the degree-blocked Gram matrix of F(p)");
    add_table_options(gram, gram_opts);
    auto* matelem = app.add_subcommand(
        "matelem", "emit matrix elements (or the one-mode norm/ratio profile)");
    add_table_options(matelem, matelem_opts);
    auto* dims = app.add_subcommand("dims", "emit per-degree dimensions of F(p)");
    add_table_options(dims, dims_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (modes_opt->count()) config.modes = modes;
            if (order_opt->count()) config.order = order;
            if (factors_opt->count()) config.factors = factors;
            if (cutoff_opt->count()) config.cutoff = cutoff;
            if (bound_opt->count()) config.bound = bound;
            if (!relator_path.empty()) {
                std::ifstream in(relator_path, std::ios::binary);
                if (!in) {
                    std::cerr << "error: cannot read relator file: " << relator_path << "\n";
                    return kExitUsage;
                }
                std::ostringstream buffer;
                buffer << in.rdbuf();
                config.relator_text = buffer.str();
            }
            if (suite == "custom-relators" && config.relator_text.empty()) {
                std::cerr << "error: --suite custom-relators requires --relators FILE\n";
                return kExitUsage;
            }
            parabraid::SuiteReport report = parabraid::run_suite(suite, config);
            std::map<std::string, std::string> shown;
            shown["suite"] = suite;
            if (config.modes) shown["modes"] = std::to_string(*config.modes);
            if (config.order) shown["order"] = std::to_string(*config.order);
            if (config.factors) shown["factors"] = std::to_string(*config.factors);
            if (config.cutoff) shown["cutoff"] = std::to_string(*config.cutoff);
            if (config.bound) shown["bound"] = std::to_string(*config.bound);
            const std::string rendered =
                parabraid::render_json(parabraid::to_json(report, "verify", shown));
            const int write_code = write_output(verify_out, rendered);
            if (write_code != kExitPass) return write_code;
            return report.all_pass() ? kExitPass : kExitCheckFailed;
        }
        if (gram->parsed()) {
            return emit_table(
                parabraid::gram_table(gram_opts.order, gram_opts.modes, gram_opts.cutoff),
                gram_opts);
        }
        if (matelem->parsed()) {
            return emit_table(parabraid::matelem_table(matelem_opts.order, matelem_opts.modes,
                                                       matelem_opts.cutoff),
                              matelem_opts);
        }
        if (dims->parsed()) {
            return emit_table(
                parabraid::dims_table(dims_opts.order, dims_opts.modes, dims_opts.cutoff),
                dims_opts);
        }
    } catch (const parabraid::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
