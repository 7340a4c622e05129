// lab: command-line front end for the experiment harness.
//
// Usage: lab <experiment> --config <path> [--out <path>] [--format csv|json]
//            [--threads N] [--budget N]
//
// Exit codes: 0 success, 2 hypothesis-guard refusal, 3 budget exceeded,
// 4 malformed config, 1 anything else.

#include "agl/errors.hpp"
#include "agl/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run(const std::string& experiment, const std::string& config_path, const std::string& out_override,
        const std::string& format_override, unsigned threads_override, std::uint64_t budget_override) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "lab: cannot open config file '" << config_path << "'\n";
        return 4;
    }
    agl::Json doc;
    try {
        in >> doc;
    } catch (const agl::Json::exception& e) {
        std::cerr << "lab: config is not valid JSON: " << e.what() << "\n";
        return 4;
    }

    agl::ExperimentConfig cfg = agl::config_from_json(doc);
    if (!experiment.empty()) cfg.experiment = experiment;
    if (!out_override.empty()) cfg.out_path = out_override;
    if (!format_override.empty()) cfg.format = format_override;
    if (threads_override > 0) cfg.threads = threads_override;
    if (budget_override > 0) cfg.budgets.tuples = budget_override;

    std::string payload;
    if (cfg.experiment == "patterns") {
        payload = agl::run_patterns(cfg).dump(2) + "\n";
    } else if (cfg.experiment == "degeneracy") {
        payload = agl::run_degeneracy(cfg).dump(2) + "\n";
    } else {
        agl::Report report;
        if (cfg.experiment == "bremner")
            report = agl::run_bremner(cfg);
        else if (cfg.experiment == "expansion")
            report = agl::run_expansion(cfg);
        else if (cfg.experiment == "eszabo")
            report = agl::run_eszabo(cfg);
        else if (cfg.experiment == "elekes_ronyai")
            report = agl::run_elekes_ronyai(cfg);
        else
            throw agl::MalformedConfig("unknown experiment '" + cfg.experiment + "'");
        payload = cfg.format == "json" ? agl::report_to_json(report).dump(2) + "\n" : agl::report_to_csv(report);
    }

    if (cfg.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "lab: cannot write to '" << cfg.out_path << "'\n";
            return 1;
        }
        out << payload;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact experiments in 1-dimensional algebraic groups over Q"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    unsigned threads = 0;
    std::uint64_t budget = 0;

    const std::vector<std::string> experiments = {"bremner", "expansion", "eszabo",
                                                  "elekes_ronyai", "patterns", "degeneracy"};
    for (const auto& name : experiments) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config document")->required();
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", threads, "worker threads");
        sub->add_option("--budget", budget, "tuple enumeration budget");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app.get_subcommands().front()->get_name(), config_path, out_path, format, threads, budget);
    } catch (const agl::TranslateCorrespondence& e) {
        std::cerr << "lab: hypothesis guard: " << e.what() << "\n";
        return 2;
    } catch (const agl::DegenerateInput& e) {
        std::cerr << "lab: hypothesis guard: " << e.what() << "\n";
        return 2;
    } catch (const agl::BudgetExceeded& e) {
        std::cerr << "lab: " << e.what() << "\n";
        return 3;
    } catch (const agl::FactorizationBudgetExceeded& e) {
        std::cerr << "lab: " << e.what() << "\n";
        return 3;
    } catch (const agl::MalformedConfig& e) {
        std::cerr << "lab: " << e.what() << "\n";
        return 4;
    } catch (const agl::Json::exception& e) {
        std::cerr << "lab: bad config: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "lab: " << e.what() << "\n";
        return 1;
    }
}
