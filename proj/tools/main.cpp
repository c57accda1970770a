#include "lefrees/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_machine(const std::string& out_path, const nlohmann::ordered_json& j) {
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
}

int default_threads() {
    if (const char* env = std::getenv("LEFREES_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::vector<long long> parse_composition(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("--a: empty composition entry");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("--a: empty composition");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lefrees: exact Lefschetz/Rees invariants of squarefree monomial ideals"};
    app.require_subcommand(1);

    std::string file, out_path;
    std::uint64_t budget = 10000000;
    std::vector<std::uint32_t> characteristics = {0, 2, 3, 5, 7};
    std::string maps_mode = "all";
    int m = 2;
    bool poly = false;
    int max_vertices = 7;
    std::string question = "both";
    int threads = default_threads();
    std::string composition_text;
    bool all_compositions = false;
    int face_dim = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "f-vector, purity, flagness, forest test");
    analyze->add_option("file", file)->required();
    analyze->add_option("--out", out_path, "write machine-readable report here");
    analyze->add_option("--budget", budget, "backtracking node budget");

    CLI::App* lefschetz =
        app.add_subcommand("lefschetz", "WLP/SLP verdicts and multiplication-map ranks");
    lefschetz->add_option("file", file)->required();
    lefschetz->add_option("--char", characteristics, "characteristics to check")
        ->delimiter(',');
    lefschetz->add_option("--maps", maps_mode, "all | wlp | slp");
    lefschetz->add_option("--out", out_path);

    CLI::App* sdefect = app.add_subcommand("sdefect", "symbolic defect / defect polynomial");
    sdefect->add_option("file", file)->required();
    sdefect->add_option("--m", m, "power index");
    sdefect->add_flag("--poly", poly, "compute the defect polynomial of a complex");
    sdefect->add_option("--out", out_path);

    CLI::App* survey = app.add_subcommand("survey-forests", "question harness over forests");
    survey->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 11));
    survey->add_option("--question", question, "7.1 | 7.2 | both");
    survey->add_option("--threads", threads, "worker count (env LEFREES_THREADS)");
    survey->add_option("--out", out_path);

    CLI::App* mixed = app.add_subcommand("mixed", "mixed multiplicity positivity certificates");
    mixed->add_option("file", file)->required();
    mixed->add_option("--a", composition_text, "composition a_0,...,a_k with sum n-1");
    mixed->add_flag("--all", all_compositions, "sweep all compositions");
    mixed->add_option("--out", out_path);

    CLI::App* permutohedron =
        app.add_subcommand("permutohedron", "face-indicator polytope edge directions");
    permutohedron->add_option("file", file)->required();
    permutohedron->add_option("--dim", face_dim, "face dimension")->required();
    permutohedron->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        lefrees::cli::CmdResult res;
        if (analyze->parsed()) {
            res = lefrees::cli::cmd_analyze(read_file(file), budget);
        } else if (lefschetz->parsed()) {
            res = lefrees::cli::cmd_lefschetz(read_file(file), characteristics, maps_mode);
        } else if (sdefect->parsed()) {
            res = lefrees::cli::cmd_sdefect(read_file(file), m, poly);
        } else if (survey->parsed()) {
            res = lefrees::cli::cmd_survey_forests(max_vertices, question, threads);
        } else if (mixed->parsed()) {
            std::optional<std::vector<long long>> a;
            if (!composition_text.empty()) a = parse_composition(composition_text);
            res = lefrees::cli::cmd_mixed(read_file(file), a, all_compositions);
        } else if (permutohedron->parsed()) {
            res = lefrees::cli::cmd_permutohedron(read_file(file), face_dim);
        }
        std::cout << res.human;
        write_machine(out_path, res.machine);
        return 0;
    } catch (const std::exception& e) {
        const auto err = lefrees::cli::error_object(command, e.what());
        std::cerr << err.dump(2) << "\n";
        try {
            write_machine(out_path, err);
        } catch (...) {
        }
        return 1;
    }
}
