// Command-line front end for the additive-code library: construct,
// transform, analyze, search, verify and reproduce, all through the text
// formats in io.hpp. Exit codes: 0 success/pass, 1 verification or
// search failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "z2z4/dual.hpp"
#include "z2z4/io.hpp"
#include "z2z4/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

z2z4::MixedMatrix load_matrix(const std::string& path) {
    return z2z4::parse_matrix(slurp(path));
}

z2z4::CodeType parse_type(const std::string& text) {
    z2z4::CodeType t;
    if (std::sscanf(text.c_str(), "(%zu,%zu;%zu,%zu;%zu)", &t.alpha, &t.beta, &t.gamma,
                    &t.delta, &t.kappa) != 5)
        throw std::runtime_error("bad type literal, expected (a,b;g,d;k)");
    return t;
}

struct Defaults {
    std::size_t workers = 1;
    std::size_t guard_log2 = z2z4::kDefaultGuardLog2;
    std::size_t ceiling_log2 = 25;
};

Defaults load_config(const std::string& path) {
    Defaults d;
    if (path.empty()) return d;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    for (const auto& [key, value] : z2z4::parse_config(in)) {
        if (key == "workers")
            d.workers = std::stoul(value);
        else if (key == "guard-log2")
            d.guard_log2 = std::stoul(value);
        else if (key == "ceiling-log2")
            d.ceiling_log2 = std::stoul(value);
        else
            throw std::runtime_error("unknown config key: " + key);
    }
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace z2z4;

    CLI::App app{"additive codes over Z2^alpha x Z4^beta: construction, duality, "
                 "intersection and monomial search"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value file: workers, guard-log2, ceiling-log2");

    // ---- simple one/two matrix commands ----
    std::string file1, file2, perm_text;

    auto* cmd_type = app.add_subcommand("type", "type of the code generated by the rows");
    cmd_type->add_option("matrix", file1)->required();

    auto* cmd_dual = app.add_subcommand("dual", "generator matrix of the dual code");
    cmd_dual->add_option("matrix", file1)->required();

    auto* cmd_gray = app.add_subcommand("gray", "Gray images of the rows");
    cmd_gray->add_option("matrix", file1)->required();

    auto* cmd_span = app.add_subcommand("span", "canonical generators of the span");
    cmd_span->add_option("matrix1", file1)->required();
    cmd_span->add_option("matrix2", file2)->required();

    auto* cmd_inter = app.add_subcommand("intersect", "canonical generators of the intersection");
    cmd_inter->add_option("matrix1", file1)->required();
    cmd_inter->add_option("matrix2", file2)->required();

    auto* cmd_eta = app.add_subcommand("eta", "intersection number of the two generated codes");
    cmd_eta->add_option("matrix1", file1)->required();
    cmd_eta->add_option("matrix2", file2)->required();

    auto* cmd_trans = app.add_subcommand("transform", "apply a monomial to a matrix");
    cmd_trans->add_option("permutation", perm_text)->required();
    cmd_trans->add_option("matrix", file1)->required();

    // ---- construct ----
    std::string family;
    std::vector<std::string> params;
    auto* cmd_con = app.add_subcommand(
        "construct",
        "families: hamming t | extended-hamming t | extended-perfect-z4 t delta | "
        "perfect-z2z4 t r | extended-perfect-z2z4 t r | double-quaternary f | "
        "quadruple-quaternary f | double-additive f | quadruple-additive f | "
        "extend-parity f | puncture-parity f | lex-pair m | paper name | paper-list");
    cmd_con->add_option("family", family)->required();
    cmd_con->add_option("params", params);

    // ---- search ----
    std::string target_type_text;
    std::int64_t target_log2_eta = -1;
    std::uint64_t budget = 100000, seed = 12345;
    bool use_signs = false, as_generators = false, exhaustive = false;
    std::size_t workers_flag = 0, guard_flag = 0, ceiling_flag = 0;

    auto* cmd_search = app.add_subcommand("search", "monomial orbit search on the second code");
    cmd_search->add_option("base1", file1, "parity-check matrix of the fixed code")->required();
    cmd_search->add_option("base2", file2, "parity-check matrix the monomials act on")->required();
    cmd_search->add_flag("--generators", as_generators,
                         "treat inputs as generator matrices instead of parity checks");
    cmd_search->add_flag("--exhaustive", exhaustive, "cover the whole orbit");
    cmd_search->add_option("--target-type", target_type_text,
                           "dual type of the wanted intersection, e.g. (8,4;6,1;6)");
    cmd_search->add_option("--target-log2-eta", target_log2_eta);
    cmd_search->add_option("--budget", budget, "randomized draws");
    cmd_search->add_flag("--use-signs", use_signs);
    cmd_search->add_option("--seed", seed);
    cmd_search->add_option("--workers", workers_flag);
    cmd_search->add_option("--ceiling-log2", ceiling_flag);

    // ---- verify / reproduce ----
    std::string check_id, reproduce_target;
    std::uint64_t verify_seed = 0, verify_budget = 0;
    bool have_seed = false;

    auto* cmd_verify = app.add_subcommand("verify", "run a named theorem/example checker");
    cmd_verify->add_option("id", check_id)->required();
    cmd_verify->add_option("--seed", verify_seed)->each([&](const std::string&) {
        have_seed = true;
    });
    cmd_verify->add_option("--budget", verify_budget);
    cmd_verify->add_option("--workers", workers_flag);
    cmd_verify->add_option("--guard-log2", guard_flag);

    auto* cmd_rep = app.add_subcommand("reproduce", "exbeta4 | gapsquaternary-t5");
    cmd_rep->add_option("target", reproduce_target)->required();
    cmd_rep->add_option("--workers", workers_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Defaults cfg = load_config(config_path);
        const std::size_t workers = workers_flag ? workers_flag : cfg.workers;
        const std::size_t guard = guard_flag ? guard_flag : cfg.guard_log2;
        const std::size_t ceiling = ceiling_flag ? ceiling_flag : cfg.ceiling_log2;

        if (cmd_type->parsed()) {
            std::cout << format_type(compute_type(load_matrix(file1))) << "\n";
        } else if (cmd_dual->parsed()) {
            std::cout << emit_matrix(dual(AdditiveCode(load_matrix(file1))).gens());
        } else if (cmd_gray->parsed()) {
            for (const auto& row : load_matrix(file1).rows()) {
                for (auto b : gray_map(row)) std::cout << char('0' + b);
                std::cout << "\n";
            }
        } else if (cmd_span->parsed()) {
            std::cout << emit_matrix(span(AdditiveCode(load_matrix(file1)),
                                          AdditiveCode(load_matrix(file2)))
                                         .gens());
        } else if (cmd_inter->parsed()) {
            std::cout << emit_matrix(intersect(AdditiveCode(load_matrix(file1)),
                                               AdditiveCode(load_matrix(file2)))
                                         .gens());
        } else if (cmd_eta->parsed()) {
            std::cout << eta(AdditiveCode(load_matrix(file1)),
                             AdditiveCode(load_matrix(file2)))
                      << "\n";
        } else if (cmd_trans->parsed()) {
            const MixedMatrix m = load_matrix(file1);
            std::cout << emit_matrix(
                apply_monomial(m, parse_permutation(perm_text, m.shape())));
        } else if (cmd_con->parsed()) {
            auto num = [&](std::size_t i) {
                if (i >= params.size()) throw std::runtime_error("missing parameter");
                return static_cast<std::size_t>(std::stoul(params[i]));
            };
            auto mat = [&](std::size_t i) {
                if (i >= params.size()) throw std::runtime_error("missing matrix file");
                return load_matrix(params[i]);
            };
            if (family == "hamming")
                std::cout << emit_matrix(hamming_parity(num(0)));
            else if (family == "extended-hamming")
                std::cout << emit_matrix(extended_hamming_parity(num(0)));
            else if (family == "extended-perfect-z4")
                std::cout << emit_matrix(extended_perfect_z4_dual(num(0), num(1)));
            else if (family == "perfect-z2z4")
                std::cout << emit_matrix(perfect_z2z4_dual(num(0), num(1)));
            else if (family == "extended-perfect-z2z4")
                std::cout << emit_matrix(extended_perfect_z2z4_dual(num(0), num(1)));
            else if (family == "double-quaternary")
                std::cout << emit_matrix(double_quaternary(mat(0)));
            else if (family == "quadruple-quaternary")
                std::cout << emit_matrix(quadruple_quaternary(mat(0)));
            else if (family == "double-additive")
                std::cout << emit_matrix(double_additive(mat(0)));
            else if (family == "quadruple-additive")
                std::cout << emit_matrix(quadruple_additive(mat(0)));
            else if (family == "extend-parity")
                std::cout << emit_matrix(extend_parity(mat(0)));
            else if (family == "puncture-parity")
                std::cout << emit_matrix(puncture_parity(mat(0)));
            else if (family == "lex-pair") {
                const LexPair lp = lemma_lex_pair(num(0));
                std::cout << emit_matrix(lp.h1) << emit_matrix(lp.h2);
                for (const auto& s : lp.sigmas) std::cout << emit_permutation(s) << "\n";
            } else if (family == "paper")
                std::cout << emit_matrix(
                    paper_matrix(params.empty() ? "" : params[0]));
            else if (family == "paper-list")
                for (const auto& n : paper_matrix_names()) std::cout << n << "\n";
            else
                throw std::runtime_error("unknown family: " + family);
        } else if (cmd_search->parsed()) {
            const MixedMatrix m1 = load_matrix(file1), m2 = load_matrix(file2);
            SearchLimits limits{workers, ceiling, true};
            const AdditiveCode b1 =
                as_generators ? AdditiveCode(m1) : code_from_parity(m1);
            const AdditiveCode b2 =
                as_generators ? AdditiveCode(m2) : code_from_parity(m2);
            const SearchMode mode =
                exhaustive ? SearchMode::Exhaustive : SearchMode::Randomized;

            if (target_type_text.empty() && target_log2_eta < 0) {
                const TypeAtlas atlas =
                    enumerate_types(b1, b2, mode, budget, use_signs, seed, limits);
                std::cout << report_lines(atlas);
                return 0;
            }
            SearchTask task{b1, b2};
            if (!target_type_text.empty()) task.target_dual = parse_type(target_type_text);
            if (target_log2_eta >= 0)
                task.target_log2_eta = static_cast<std::size_t>(target_log2_eta);
            task.budget = budget;
            task.mode = mode;
            task.use_signs = use_signs;
            task.seed = seed;
            const SearchResult res = search(task, limits);
            switch (res.status) {
                case SearchStatus::Found:
                    std::cout << "found: " << report_line(*res.witness) << "\n";
                    return 0;
                case SearchStatus::RefutedByExhaustion:
                    std::cout << "refuted by exhaustion (" << res.examined
                              << " orbit representatives)\n";
                    return 0;
                case SearchStatus::NotFound:
                    std::cout << "not found within budget (" << res.examined << " draws)\n";
                    return 1;
            }
        } else if (cmd_verify->parsed()) {
            if (!have_seed)
                throw CLI::RequiredError("--seed (verification runs must be reproducible)");
            VerifyOptions opt;
            opt.seed = verify_seed;
            opt.workers = workers;
            opt.guard_log2 = guard_flag ? guard_flag : std::max<std::size_t>(guard, 26);
            opt.budget = verify_budget;
            const CheckResult res = run_check(check_id, opt);
            for (const auto& line : res.details) std::cout << "  " << line << "\n";
            std::cout << res.id << ": " << (res.pass ? "PASS" : "FAIL") << "\n";
            return res.pass ? 0 : 1;
        } else if (cmd_rep->parsed()) {
            VerifyOptions opt;
            opt.workers = workers;
            if (reproduce_target == "exbeta4")
                std::cout << reproduce_exbeta4();
            else if (reproduce_target == "gapsquaternary-t5")
                std::cout << reproduce_gapsquaternary_t5(opt);
            else
                throw std::runtime_error("unknown reproduce target: " + reproduce_target);
        }
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
