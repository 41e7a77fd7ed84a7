// whc — command-line front end for the weak Hamilton-connectedness toolkit.
//
// Subcommands: construct, check, oracle, closure, spectrum, verify.
// Exit status: 0 success, 1 usage or input error, 2 soundness violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "whc/whc.hpp"

namespace {

whc::BipartiteGraph load_graph(const std::string& path) {
    if (path == "-") return whc::parse_graph_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return whc::parse_graph_stream(in);
}

whc::ReportFormat parse_format(const std::string& name) {
    auto f = whc::report_format_from_name(name);
    if (!f) throw CLI::ValidationError("--format must be 'text' or 'structured'");
    return *f;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak Hamilton-connectedness toolkit for balanced bipartite graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    std::string format = "text";
    double tol = whc::kDefaultEigenTol;
    double band = 1e-7;
    app.add_option("--format", format, "output format: text or structured (JSON)")
        ->capture_default_str();
    app.add_option("--tol", tol, "eigensolver tolerance")->capture_default_str();
    app.add_option("--band", band, "spectral decision band, relative to max(1, threshold)")
        ->capture_default_str();

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a family graph (K, Q, R or S)");
    std::string family;
    int con_n = 0, con_t = 0, con_m = 0;
    std::string out_path;
    construct->add_option("family", family, "family tag: K, Q, R or S")->required();
    construct->add_option("--n", con_n, "part size n")->required();
    construct->add_option("--t", con_t, "block parameter t (Q, R, S)");
    construct->add_option("--m", con_m, "first part size m (K only; defaults to n)");
    construct->add_option("-o,--output", out_path, "output file (default stdout)");

    // check ----------------------------------------------------------------
    auto* check = app.add_subcommand("check", "run sufficient conditions on a graph file");
    std::string check_file, check_condition = "all";
    bool check_oracle = false;
    check->add_option("file", check_file, "graph file ('-' for stdin)")->required();
    check->add_flag("--oracle", check_oracle, "confirm the verdicts against the oracle");
    check->add_option("--condition", check_condition, "condition id or 'all'")
        ->capture_default_str();

    // oracle ---------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "decide weak Hamilton-connectedness by search");
    std::string oracle_file;
    bool oracle_witness = false;
    oracle->add_option("file", oracle_file, "graph file ('-' for stdin)")->required();
    oracle->add_flag("--witness", oracle_witness, "collect one Hamilton path per cross pair");

    // closure --------------------------------------------------------------
    auto* closure = app.add_subcommand("closure", "compute the degree-sum closure");
    std::string closure_file;
    closure->add_option("file", closure_file, "graph file ('-' for stdin)")->required();

    // spectrum -------------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "spectral radii and bound checks");
    std::string spectrum_file;
    spectrum->add_option("file", spectrum_file, "graph file ('-' for stdin)")->required();

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "sweep graphs and confirm certificates");
    std::string verify_condition;
    int verify_n = 0;
    bool verify_exhaustive = false, verify_force = false;
    std::uint64_t verify_samples = 0, verify_seed = 0;
    int verify_min_degree = 0;
    unsigned verify_threads = 0;
    verify->add_option("--condition", verify_condition,
                       "condition id, 'all', 'sandwich' or 'full_side_containment'")
        ->required();
    verify->add_option("--n", verify_n, "part size")->required();
    verify->add_flag("--exhaustive", verify_exhaustive, "walk every biadjacency code");
    verify->add_flag("--force", verify_force, "allow exhaustive n=5 (2^25 graphs, slow)");
    verify->add_option("--random", verify_samples, "number of random samples");
    verify->add_option("--seed", verify_seed, "random seed")->capture_default_str();
    verify->add_option("--min-degree", verify_min_degree, "discard graphs below this min degree")
        ->capture_default_str();
    verify->add_option("--threads", verify_threads, "worker threads (0 = hardware)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const whc::ReportFormat fmt = parse_format(format);
        whc::SpectralOptions opts;
        opts.eigen_tol = tol;
        opts.band_rel = band;

        if (construct->parsed()) {
            whc::FamilySpec spec;
            if (family == "K")
                spec = whc::FamilySpec::complete(con_m > 0 ? con_m : con_n, con_n);
            else if (family == "Q")
                spec = whc::FamilySpec::q(con_n, con_t);
            else if (family == "R")
                spec = whc::FamilySpec::r(con_n, con_t);
            else if (family == "S")
                spec = whc::FamilySpec::s(con_n, con_t);
            else
                throw std::runtime_error("unknown family '" + family + "' (expected K, Q, R or S)");
            write_output(out_path, whc::write_graph_text(whc::make_family(spec)));
            return 0;
        }

        if (check->parsed()) {
            const auto g = load_graph(check_file);
            std::vector<whc::ConditionId> subset;
            const std::vector<whc::ConditionId>* subset_ptr = nullptr;
            if (check_condition != "all") {
                const auto id = whc::condition_from_name(check_condition);
                if (!id)
                    throw std::runtime_error("unknown condition '" + check_condition + "'");
                subset.push_back(*id);
                subset_ptr = &subset;
            }
            try {
                const auto report = whc::full_report(g, check_oracle, opts, nullptr, subset_ptr);
                std::cout << whc::emit_report(report, fmt);
            } catch (const whc::SoundnessViolation& v) {
                std::cout << whc::emit_report(v.report(), fmt);
                std::cerr << "error: " << v.what() << "\n";
                return 2;
            }
            return 0;
        }

        if (oracle->parsed()) {
            const auto g = load_graph(oracle_file);
            const auto result = whc::is_weakly_hc(g, oracle_witness);
            std::cout << whc::emit_oracle_result(result, g.part_x(), fmt);
            return 0;
        }

        if (closure->parsed()) {
            const auto g = load_graph(closure_file);
            std::cout << whc::emit_closure_trace(whc::b_closure(g), fmt);
            return 0;
        }

        if (spectrum->parsed()) {
            const auto g = load_graph(spectrum_file);
            std::cout << whc::emit_spectral_report(whc::spectral_bounds_report(g, tol), fmt);
            return 0;
        }

        if (verify->parsed()) {
            const auto target = whc::sweep_target_from_name(verify_condition);
            if (!target)
                throw std::runtime_error("unknown sweep target '" + verify_condition + "'");
            if (verify_exhaustive == (verify_samples > 0))
                throw std::runtime_error("choose exactly one of --exhaustive or --random S");
            whc::EnumMode mode;
            if (verify_exhaustive)
                mode = whc::ExhaustiveMode{verify_force};
            else
                mode = whc::RandomMode{verify_samples, verify_seed};
            const auto report = whc::verify_implication(*target, verify_n, mode,
                                                        verify_min_degree, opts, verify_threads);
            std::cout << whc::emit_report(report, fmt);
            if (!report.ok()) {
                std::cerr << "error: sweep found " << report.violations.size() << " violation(s), "
                          << report.discrepancies.size() << " discrepancy(ies)\n";
                return 2;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
