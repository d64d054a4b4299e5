// derivlab command line: runs task specifications, reproduces the shipped
// example families, and classifies structure algebras. Reports are JSON
// (schema "derivlab/1") and byte-identical for identical inputs and seeds.
//
// Exit codes: 0 certified / all claims pass, 1 refuted / claim failure,
// 2 inconclusive at the bound, 3 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "derivlab/derivlab.hpp"

namespace {

using derivlab::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw derivlab::input_error("input", "cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw derivlab::input_error("input", std::string("JSON parse error: ") + e.what());
    }
}

void write_report(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text += "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw derivlab::input_error("out", "cannot open file '" + out_path + "'");
    out << text;
}

// Human-readable summary; goes to stdout when the JSON went to a file,
// otherwise to stderr so the report stays machine-readable.
void print_summary(const Json& report, std::ostream& os) {
    const Json* claims = nullptr;
    if (report.contains("report") && report["report"].contains("claims"))
        claims = &report["report"]["claims"];
    else if (report.contains("claims"))
        claims = &report["claims"];
    if (report.contains("certificate"))
        os << "verdict: " << report["certificate"]["verdict"].get<std::string>() << "\n";
    else if (report.contains("set"))
        os << "verdict: " << report["set"]["certificate"]["verdict"].get<std::string>() << "\n";
    else if (report.contains("lie"))
        os << "verdict: " << report["lie"]["certificate"]["verdict"].get<std::string>() << "\n";
    else if (report.contains("ad"))
        os << "verdict: " << report["ad"]["certificate"]["verdict"].get<std::string>() << "\n";
    else if (report.contains("fg"))
        os << "verdict: " << report["fg"]["verdict"].get<std::string>() << "\n";
    else if (claims) {
        for (const auto& c : *claims)
            os << "[" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>()
               << "\n";
    } else if (report.contains("report") && report["report"].contains("verdicts")) {
        os << "verdicts:";
        for (const auto& [k, v] : report["report"]["verdicts"].items())
            os << " " << k << "=" << v.get<std::string>();
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"derivlab: certificates for locally nilpotent sets of derivations"};
    app.require_subcommand(1);

    std::string input_path, out_path;
    auto* check = app.add_subcommand("check", "run a task specification file");
    check->add_option("--input", input_path, "task specification (JSON)")->required();
    check->add_option("--out", out_path, "report path (default: stdout)");

    std::string example_id;
    std::size_t trunc = 0;
    std::uint64_t characteristic = 0, seed = 1;
    std::size_t depth = derivlab::kDefaultDepthBound;
    auto* repro = app.add_subcommand("reproduce", "rebuild an example and replay its claims");
    repro->add_option("example", example_id, "example id")->required();
    repro->add_option("--n", trunc, "truncation size (default: per example)");
    repro->add_option("--char", characteristic, "coefficient characteristic (0 = Q, else prime)");
    repro->add_option("--seed", seed, "seed for sampled claims");
    repro->add_option("--depth", depth, "depth bound for searches");
    repro->add_option("--out", out_path, "report path (default: stdout)");

    std::string algebra_path;
    std::size_t samples = 20;
    auto* cls = app.add_subcommand("classify", "classify a structure algebra file");
    cls->add_option("--algebra", algebra_path, "structure algebra (JSON)")->required();
    cls->add_option("--samples", samples, "sampled evidence count");
    cls->add_option("--seed", seed, "seed for sampled evidence");
    cls->add_option("--depth", depth, "depth bound for searches");
    cls->add_option("--out", out_path, "report path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    derivlab::SearchLimits lim;
    lim.depth_bound = depth;

    try {
        derivlab::TaskOutcome outcome;
        if (check->parsed()) {
            outcome = derivlab::run_task(load_json(input_path));
        } else if (repro->parsed()) {
            outcome = derivlab::run_reproduce(example_id, trunc, characteristic, seed, lim);
        } else {
            outcome = derivlab::run_classify_document(load_json(algebra_path), samples, lim, seed);
        }
        write_report(outcome.report, out_path);
        print_summary(outcome.report, out_path.empty() ? std::cerr : std::cout);
        return outcome.exit_code;
    } catch (const derivlab::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
