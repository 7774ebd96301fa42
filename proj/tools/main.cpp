#include "cli.hpp"

#include "ybalg/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace ybalg;
using namespace ybalg::cli;

namespace {

// Flags collected per subcommand; only the ones actually given are copied
// into the task params so that defaults stay in one place (run_task).
struct Flags {
    std::map<std::string, std::string> values;
    std::string config;
    std::vector<std::string> require;
};

void add_param(CLI::App* app, Flags& f, const std::string& name, const std::string& help) {
    const std::string flag = name == "out" ? "--out,--report" : "--" + name;
    app->add_option(flag, f.values[name], help);
}

Json to_params(CLI::App* app, const Flags& f) {
    Json p = Json::object();
    if (!f.config.empty()) {
        std::ifstream is(f.config);
        if (!is) throw InvalidInput("cannot read " + f.config);
        p = Json::parse(is);
    }
    for (const auto& [name, value] : f.values) {
        if (app->count("--" + name) == 0) continue;
        // Integers stay integers, everything else goes through the exact parser as a string.
        if (name == "samples" || name == "restarts" || name == "threads")
            p[name] = std::stoll(value);
        else if (name == "xs") {
            Json xs = Json::array();
            std::stringstream ss(value);
            for (std::string x; std::getline(ss, x, ',');) xs.push_back(x);
            p[name] = xs;
        } else
            p[name] = value;
    }
    if (!f.require.empty()) p["require"] = f.require;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coloured Yang-Baxter operators from associative algebras: verification and search"};
    app.require_subcommand(1);

    Globals g;
    g.out_dir = default_out_dir();
    std::uint64_t seed = g.seed;
    std::string field = "rational";
    double tol = g.tol;
    std::string out_dir = g.out_dir.string();
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--field", field, "rational | float64")->capture_default_str();
    app.add_option("--tol", tol, "float-mode zero tolerance")->capture_default_str();
    app.add_option("--out-dir", out_dir, std::string("output directory (default $") + kOutDirEnv + " or .)");

    const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> commands = {
        {"verify",
         {{"family", "thm1 | thm2 | remark2 | coalgebra_thm1 | prop1 | prop1_coalgebra | prop2 | remark_x | okado | "
                     "twisted_prop1"},
          {"identity", "qybe | inverse | system | braid"},
          {"algebra", "quadratic | cubic"},
          {"algebra_file", "algebra JSON file"},
          {"sigma", "quadratic algebra parameter"},
          {"eps", "cubic algebra parameter"},
          {"rho", "cubic algebra parameter"},
          {"p", "fixed p"},
          {"q", "fixed q"},
          {"s", "fixed s"},
          {"samples", "number of random samples"},
          {"gamma_shift", "perturb gamma by this amount"}}},
        {"matrix",
         {{"family", "family kind"},
          {"algebra", "quadratic | cubic"},
          {"algebra_file", "algebra JSON file"},
          {"sigma", "quadratic algebra parameter"},
          {"eps", "cubic algebra parameter"},
          {"rho", "cubic algebra parameter"},
          {"p", "p"},
          {"q", "q"},
          {"s", "s"},
          {"u", "first colour"},
          {"v", "second colour"},
          {"x", "spectral parameter"},
          {"format", "json | csv | latex"},
          {"out", "output file"}}},
        {"search",
         {{"shape", "linear | exponential"},
          {"system", "colored | onepar"},
          {"phi", "product | second | first"},
          {"restarts", "number of restarts"},
          {"threads", "worker threads"},
          {"out", "output file"}}},
        {"frt",
         {{"list", "claimed | pq_limit"},
          {"u", "u"},
          {"v", "v"},
          {"p", "p"},
          {"q", "q"},
          {"sigma", "algebra parameter"},
          {"samples", "random samples (0 = use u, v, p, q)"},
          {"out", "output file"}}},
        {"ybsystem",
         {{"lambda", "lambda"},
          {"mu", "mu"},
          {"algebra", "quadratic | cubic"},
          {"sigma", "quadratic algebra parameter"},
          {"eps", "cubic algebra parameter"},
          {"rho", "cubic algebra parameter"},
          {"emit", "json | csv | latex"},
          {"out", "output file"}}},
        {"compare",
         {{"q", "q"}, {"x", "x"}, {"y", "y"}, {"sigma", "sigma"}, {"xs", "comma separated x values at q=1"},
          {"out", "output file"}}},
    };

    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, options] : commands) {
        CLI::App* sub = app.add_subcommand(name);
        Flags& f = flags[name];
        for (const auto& [opt, help] : options) add_param(sub, f, opt, help);
        sub->add_option("--params", f.config, "JSON file with task parameters (flags override)");
        if (name == "search") sub->add_option("--require", f.require, "classifications required for exit 0");
        subs[name] = sub;
    }
    std::string campaign_file;
    CLI::App* campaign = app.add_subcommand("campaign", "run a campaign file");
    campaign->add_option("config", campaign_file, "campaign JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        g.field = parse_field(field);
        if (campaign->parsed()) {
            std::ifstream is(campaign_file);
            if (!is) throw InvalidInput("cannot read " + campaign_file);
            const Json config = Json::parse(is);
            // Config values first, then explicit flags on top.
            if (config.contains("seed") && app.count("--seed") == 0) g.seed = config.at("seed").get<std::uint64_t>();
            else g.seed = seed;
            if (config.contains("field") && app.count("--field") == 0)
                g.field = parse_field(config.at("field").get<std::string>());
            if (config.contains("tol") && app.count("--tol") == 0) g.tol = config.at("tol").get<double>();
            else g.tol = tol;
            if (config.contains("output_dir") && app.count("--out-dir") == 0)
                g.out_dir = config.at("output_dir").get<std::string>();
            else g.out_dir = out_dir;
            return run_campaign(config, g, std::cout);
        }
        g.seed = seed;
        g.tol = tol;
        g.out_dir = out_dir;
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed()) continue;
            const TaskOutcome r = run_task(name, to_params(sub, flags[name]), g);
            std::cout << r.report.dump(2) << '\n';
            std::cerr << r.summary << '\n';
            return r.ok ? kOk : kVerificationFailed;
        }
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
