#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twistlab/errors.hpp"
#include "twistlab/report.hpp"

namespace {

constexpr int kStructuralError = 2;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw twistlab::ConfigInvalid("cannot read config file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct VerifyFlags {
    std::optional<int> n;
    std::optional<std::string> suites;
    std::optional<std::string> r;
    std::optional<std::string> alpha;
    std::optional<std::string> witness;
    std::optional<std::string> format;
    std::optional<std::string> dump_dir;
    std::optional<std::string> config;
    std::optional<std::uint64_t> seed;
    std::optional<int> core_cases;
};

twistlab::SuiteConfig build_config(const VerifyFlags& f) {
    using namespace twistlab;
    SuiteConfig cfg = f.config ? parse_config(read_file(*f.config)) : SuiteConfig{};
    if (f.n) cfg.N = *f.n;
    if (f.suites) {
        cfg.suites = split_list(*f.suites);
        if (cfg.suites == std::vector<std::string>{"all"}) cfg.suites.assign(std::begin(kSuiteNames), std::end(kSuiteNames));
    }
    if (cfg.suites.empty()) cfg.suites = {"twist-axioms"};
    if (f.r) {
        cfg.r_values.clear();
        for (const auto& s : split_list(*f.r)) {
            try {
                std::size_t used = 0;
                cfg.r_values.push_back(std::stoi(s, &used));
                if (used != s.size()) throw std::invalid_argument(s);
            } catch (const std::logic_error&) {
                throw ConfigInvalid("bad r value '" + s + "'");
            }
        }
    }
    if (f.alpha) {
        cfg.alpha_values.clear();
        for (const auto& s : split_list(*f.alpha)) {
            try {
                cfg.alpha_values.push_back(Rational::parse(s));
            } catch (const std::logic_error&) {
                throw ConfigInvalid("bad alpha value '" + s + "'");
            }
        }
    }
    if (f.witness) cfg.witness_reps = split_list(*f.witness);
    if (f.format) cfg.output = *f.format == "json" ? OutputFormat::json : OutputFormat::text;
    if (f.dump_dir) cfg.dump_dir = *f.dump_dir;
    if (f.seed) cfg.seed = *f.seed;
    if (f.core_cases) cfg.core_cases = *f.core_cases;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Drinfeld twists of U(gl(N))"};
    app.require_subcommand(1);

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "run verification suites and print a report");
    verify->add_option("--n", vf.n, "matrix size N");
    verify->add_option("--suites", vf.suites, "comma-separated suites, or 'all'");
    verify->add_option("--r", vf.r, "comma-separated row parameters for the Heisenberg block");
    verify->add_option("--alpha", vf.alpha, "comma-separated alpha values such as 0,1/3");
    verify->add_option("--witness", vf.witness, "fundamental,doubled");
    verify->add_option("--format", vf.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--dump-dir", vf.dump_dir, "write materialized twists here");
    verify->add_option("--config", vf.config, "JSON config file; flags override it");
    verify->add_option("--seed", vf.seed, "seed for the randomized core suite");
    verify->add_option("--core-cases", vf.core_cases, "cases per core law");

    int dump_n = 6;
    int dump_r = 3;
    std::string dump_alpha = "1/2";
    std::string dump_twist;
    std::string dump_dir = ".";
    auto* dump = app.add_subcommand("dump", "materialize a named twist and write F and F^-1");
    dump->add_option("twist", dump_twist, "jordanian | extended | chain | chain:<p> | alternative | <state name>")
        ->required();
    dump->add_option("--n", dump_n, "matrix size N");
    dump->add_option("--r", dump_r, "row parameter");
    dump->add_option("--alpha", dump_alpha, "alpha for the extended twist");
    dump->add_option("--dump-dir", dump_dir, "output directory");

    int tables_n = 6;
    int tables_r = 3;
    auto* tables = app.add_subcommand("tables", "print the nine costructure tables as JSON");
    tables->add_option("--n", tables_n, "matrix size N");
    tables->add_option("--r", tables_r, "row parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kStructuralError;
    }

    try {
        if (*verify) {
            const twistlab::SuiteConfig cfg = build_config(vf);
            const twistlab::SuiteReport rep = twistlab::run_suite(cfg);
            std::cout << twistlab::emit_report(rep, cfg.output);
            return rep.all_passed() ? 0 : 1;
        }
        if (*dump) {
            twistlab::Rational alpha;
            try {
                alpha = twistlab::Rational::parse(dump_alpha);
            } catch (const std::logic_error&) {
                throw twistlab::ConfigInvalid("bad alpha value '" + dump_alpha + "'");
            }
            const auto seq = twistlab::named_twist(dump_twist, dump_n, alpha, dump_r);
            const auto m = twistlab::materialize(seq, twistlab::fundamental_morphism(dump_n));
            std::filesystem::create_directories(dump_dir);
            std::string stem = dump_twist + "_N" + std::to_string(dump_n);
            for (char& c : stem)
                if (c == ':' || c == '~' || c == '/') c = '_';
            const auto fwd = std::filesystem::path(dump_dir) / (stem + ".F.txt");
            const auto inv = std::filesystem::path(dump_dir) / (stem + ".Finv.txt");
            twistlab::dump_matrix(m.forward, fwd);
            twistlab::dump_matrix(m.inverse, inv);
            std::cout << seq.name() << "\n" << fwd.string() << "\n" << inv.string() << "\n";
            return 0;
        }
        if (*tables) {
            std::cout << twistlab::tables_json(tables_n, tables_r);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kStructuralError;
    }
    return kStructuralError;
}
