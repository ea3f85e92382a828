#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trilie/runner.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string piece =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification runner for ternary bracket problem files"};

    std::string file;
    std::string task_list;
    std::string param_list;
    std::string report = "text";
    trilie::RunOptions opt;

    app.add_option("file", file, "problem file (.tlx)")->required();
    app.add_option("--task", task_list, "comma separated task names (default: the file's task list)");
    app.add_option("--param", param_list,
                   "pin parameters, e.g. --param r1=2,r2=-1/3 (values are rational expressions)");
    app.add_option("--samples", opt.samples, "random parameter draws per run (default 20)");
    app.add_option("--seed", opt.seed, "seed for parameter draws");
    app.add_option("--report", report, "report style: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    // every input problem exits 2, including malformed flags
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opt.machine = report == "machine";
    opt.tasks = split_commas(task_list);

    try {
        for (const auto& piece : split_commas(param_list)) {
            const std::size_t eq = piece.find('=');
            if (eq == std::string::npos || eq == 0)
                throw trilie::ProblemError("bad --param entry '" + piece +
                                           "': expected name=value");
            const std::string name = piece.substr(0, eq);
            const trilie::ExprPtr ast = trilie::parse_expr(piece.substr(eq + 1));
            opt.pinned[name] = trilie::eval_expr(*ast, {});
        }
        const trilie::RunResult res = trilie::run_file(file, opt);
        std::fputs(res.report.c_str(), stdout);
        return res.exit_code;
    } catch (const trilie::ProblemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
