#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/report.hpp"

using namespace orbifold;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitGuard = 4;
constexpr int kExitVerify = 5;

struct RunConfig {
    std::string c_src, d_src;
    std::string builtin_name, file_path;
    std::string a, b;
    std::string out;
    std::string format = "json";
    std::string mode = "full";
    std::uint64_t seed = 1;
    unsigned threads = 0;
    int ell = 0;
    int dim = 0;
};

LinearCode load_code(const std::string& src) {
    if (src.rfind("builtin:", 0) == 0) return builtin(src.substr(8));
    return read_code_file(src);
}

VerifyOptions parse_mode(const RunConfig& cfg) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    if (cfg.mode == "full") return opt;
    const std::string prefix = "sampled:";
    if (cfg.mode.rfind(prefix, 0) != 0) throw ParseError("mode:" + cfg.mode);
    const std::string n = cfg.mode.substr(prefix.size());
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || n.size() > 12) throw ParseError("mode:" + cfg.mode);
    opt.full = false;
    opt.samples = std::stoull(n);
    if (opt.samples == 0) throw ParseError("mode:" + cfg.mode);
    return opt;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw PreconditionError("out:" + cfg.out);
    f << text << '\n';
}

std::string render(const Json& j) { return j.dump(2); }

int fail(const std::string& kind, const std::string& detail, int code) {
    std::string line = detail;
    for (char& ch : line)
        if (ch == '\n') ch = ' ';
    std::cerr << "error: " << kind << ':' << line << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fusion data for Z3-orbifolds of code lattice VOAs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--c", cfg.c_src, "F4 code: builtin:NAME or file path")->required();
        sub->add_option("--d", cfg.d_src, "F3 code: builtin:NAME or file path")->required();
    };
    auto add_out = [&](CLI::App* sub, bool csv) {
        sub->add_option("--out", cfg.out, "Output file (default stdout)");
        auto* f = sub->add_option("--format", cfg.format, "Output format");
        if (csv)
            f->check(CLI::IsMember({"json", "csv"}));
        else
            f->check(CLI::IsMember({"json"}));
    };

    auto* code = app.add_subcommand("code", "Code utilities")->require_subcommand(1);
    auto* code_info = code->add_subcommand("info", "Code parameters and weight enumerator");
    auto* src = code_info->add_option_group("source")->require_option(1);
    src->add_option("--builtin", cfg.builtin_name, "Builtin code name");
    src->add_option("--file", cfg.file_path, "Code file");
    add_out(code_info, false);

    auto* modules = app.add_subcommand("modules", "Module labels")->require_subcommand(1);
    auto* modules_list = modules->add_subcommand("list", "All irreducible labels with invariants");
    add_pair(modules_list);
    add_out(modules_list, true);

    auto* fuse_cmd = app.add_subcommand("fuse", "Fusion product of two labels");
    add_pair(fuse_cmd);
    fuse_cmd->add_option("--a", cfg.a, "First label")->required();
    fuse_cmd->add_option("--b", cfg.b, "Second label")->required();
    fuse_cmd->add_option("--out", cfg.out, "Output file (default stdout)");

    auto* table = app.add_subcommand("table", "Full fusion table");
    add_pair(table);
    add_out(table, true);

    auto* verify = app.add_subcommand("verify", "Fusion ring property suite");
    add_pair(verify);
    verify->add_option("--mode", cfg.mode, "full or sampled:<n>");
    verify->add_option("--seed", cfg.seed, "RNG seed for sampled mode");
    verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    add_out(verify, false);

    auto* quad = app.add_subcommand("quadspace", "Quadratic space on the K12 orbifold modules");
    add_out(quad, false);

    auto* verl = app.add_subcommand("verlinde", "Twisted multiplicities via the S-matrix");
    verl->add_option("--ell", cfg.ell, "Code length")->required();
    verl->add_option("--d", cfg.dim, "Dimension of C")->required();
    add_out(verl, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("parse", e.what(), kExitParse);
    }

    try {
        const VerifyOptions opt = parse_mode(cfg);
        if (code_info->parsed()) {
            const LinearCode c = cfg.builtin_name.empty() ? read_code_file(cfg.file_path) : builtin(cfg.builtin_name);
            emit(cfg, render(code_info_json(c)));
            return 0;
        }
        if (quad->parsed()) {
            const Json j = quadspace_json(QuadSpace());
            emit(cfg, render(j));
            const bool ok = j["phiIsomorphism"].get<bool>() && j["bilinear"].get<bool>() && j["radicalDim"].get<int>() == 0 &&
                            j["type"] == "minus" && j["sEtaChecks"]["ok"].get<bool>();
            bool items_ok = true;
            for (const auto& it : j["formItems"]) items_ok = items_ok && it["mismatches"].get<std::uint64_t>() == 0;
            return ok && items_ok ? 0 : kExitVerify;
        }
        if (verl->parsed()) {
            const VerlindeResult v = verlinde_twisted(cfg.ell, cfg.dim);
            const bool matches = crosscheck_case_v(cfg.ell, cfg.dim);
            emit(cfg, render(verlinde_json(v, matches)));
            return matches ? 0 : kExitVerify;
        }

        // Commands on a code pair: validate everything before computing.
        const CodePair pair(load_code(cfg.c_src), load_code(cfg.d_src));
        if (modules_list->parsed()) {
            emit(cfg, cfg.format == "csv" ? modules_csv(pair) : render(modules_json(pair)));
            return 0;
        }
        if (fuse_cmd->parsed()) {
            const ModuleLabel a = pair.parse(cfg.a);
            const ModuleLabel b = pair.parse(cfg.b);
            emit(cfg, fusion_json(fuse(a, b, pair)).dump());
            return 0;
        }
        if (table->parsed()) {
            const auto t = fusion_table(pair);
            emit(cfg, cfg.format == "csv" ? table_csv(t) : render(table_json(t)));
            return 0;
        }
        if (verify->parsed()) {
            const VerifyReport r = verify_suite(pair, opt);
            emit(cfg, render(verify_json(r)));
            return r.ok() ? 0 : kExitVerify;
        }
    } catch (const ParseError& e) {
        return fail("parse", e.what(), kExitParse);
    } catch (const PreconditionError& e) {
        return fail("precondition", e.what(), kExitPrecondition);
    } catch (const GuardError& e) {
        return fail("guard", e.what(), kExitGuard);
    }
    return fail("internal", "unhandled command", 1);
}
