#include "twistlab/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "twistlab/core_properties.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/hopf_check.hpp"
#include "twistlab/nine_states.hpp"

namespace twistlab {

namespace {

using ojson = nlohmann::ordered_json;

std::string show(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

bool known_suite(std::string_view s) {
    return std::find(std::begin(kSuiteNames), std::end(kSuiteNames), s) != std::end(kSuiteNames);
}

bool wants(const SuiteConfig& cfg, std::string_view suite) {
    return std::find(cfg.suites.begin(), cfg.suites.end(), suite) != cfg.suites.end();
}

std::vector<int> block_rows(const SuiteConfig& cfg) {
    if (!cfg.r_values.empty()) return cfg.r_values;
    std::vector<int> out;
    for (int r = 3; r <= cfg.N - 2; ++r) out.push_back(r);
    return out;
}

std::vector<Expr> gl_generators(int N) {
    std::vector<Expr> out;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) out.push_back(Expr::gen(i, j));
    return out;
}

std::string file_safe(std::string s) {
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
    return s;
}

struct NamedTwist {
    std::string label;
    TwistSequence twist;
    int p = 0;  // chain length, chains only
};

// Twists exercised by the twist-axioms suite (and reused by rmatrix).
std::vector<NamedTwist> axiom_twists(const SuiteConfig& cfg) {
    const int N = cfg.N;
    std::vector<NamedTwist> out;
    out.push_back({"jordanian", sequence_of(N, {jordanian_factor(N, 1)})});
    if (N >= 3) {
        for (const auto& a : cfg.alpha_values) out.push_back({"extended a=" + show(a), extended_twist_generic(N, 2, a)});
        out.push_back({"extended-canonical", chain_twist(N, 0)});
    }
    return out;
}

std::vector<NamedTwist> chain_twists(const SuiteConfig& cfg) {
    std::vector<NamedTwist> out;
    if (cfg.N < 4) return out;
    for (int p = 1; p <= maximal_chain_length(cfg.N); ++p)
        out.push_back({"chain p=" + std::to_string(p), chain_twist(cfg.N, p), p});
    return out;
}

class Runner {
public:
    Runner(const SuiteConfig& cfg, std::vector<CheckResult>& out) : cfg_(cfg), out_(out) {}

    void run_witness(const std::string& witness) {
        suffix_ = witness == "fundamental" ? "" : "@" + witness;
        phi_ = witness == "fundamental" ? fundamental_morphism(cfg_.N) : coproduct_morphism(cfg_.N);
        const bool first = witness == cfg_.witness_reps.front();
        const int N = cfg_.N;

        if (wants(cfg_, "core") && first)
            for (auto& r : core_property_checks(cfg_.seed, cfg_.core_cases)) out_.push_back(std::move(r));

        if (wants(cfg_, "twist-axioms")) {
            for (const auto& t : axiom_twists(cfg_)) {
                add("cocycle", t.label, cocycle_check(t.twist, {}, phi_));
                if (first) add("counit", t.label, counit_check(t.twist));
                maybe_dump(t, first);
            }
        }

        if (wants(cfg_, "chain")) {
            for (const auto& t : chain_twists(cfg_)) {
                add("cocycle", t.label, cocycle_check(t.twist, {}, phi_));
                add("cocycle-stepwise", t.label, stepwise_cocycle_check(t.twist, chain_step_sizes(N, t.p), phi_));
                if (first) add("counit", t.label, counit_check(t.twist));
                maybe_dump(t, first);
            }
            if (N >= 6) {
                const auto alt = alternative_chain(N);
                add("cocycle", "alternative-chain", cocycle_check(alt, {}, phi_));
                add("dragging", "", verify_dragging(N, phi_));
                if (first) out_.push_back(verify_extension_commutation(N));
                std::vector<Expr> gens;
                for (const auto& g : heisenberg_generators(N, 3)) gens.push_back(g.generator());
                add("coassociativity", "chain p=1", coassociativity_check(chain_twist(N, 1), gens, phi_));
            }
        }

        if (wants(cfg_, "rmatrix")) {
            for (const auto& t : axiom_twists(cfg_)) add("rmatrix", t.label, r_matrix_checks(t.twist, phi_));
            for (const auto& t : chain_twists(cfg_)) add("rmatrix", t.label, r_matrix_checks(t.twist, phi_));
        }

        if (wants(cfg_, "antipode")) {
            const auto gens = gl_generators(N);
            add("antipode", "jordanian", antipode_checks(sequence_of(N, {jordanian_factor(N, 1)}), gens, phi_));
            if (N >= 3) add("antipode", "extended-canonical", antipode_checks(chain_twist(N, 0), gens, phi_));
        }

        if (wants(cfg_, "nine-states")) {
            for (int r : block_rows(cfg_)) {
                for (StateId s : kAllStates) out_.push_back(tag(verify_state(s, N, r, phi_)));
                out_.push_back(tag(verify_locality(N, r, phi_)));
            }
            out_.push_back(tag(verify_two_jordanian(N, phi_)));
        }

        if (wants(cfg_, "diagram"))
            for (int r : block_rows(cfg_)) out_.push_back(tag(verify_diagram(N, r, phi_)));

        if (wants(cfg_, "matreshka")) out_.push_back(tag(verify_matreshka(N, phi_)));

        if (wants(cfg_, "transitions")) out_.push_back(tag(verify_transition_schemes(N, cfg_.alpha_values, phi_)));
    }

private:
    CheckResult tag(CheckResult r) const {
        r.name += suffix_;
        return r;
    }

    void add(const std::string& kind, const std::string& label, CheckResult r) {
        const std::string n = "N=" + std::to_string(cfg_.N);
        r.name = kind + "[" + (label.empty() ? n : label + "," + n) + "]";
        out_.push_back(tag(std::move(r)));
    }

    void maybe_dump(const NamedTwist& t, bool first) const {
        if (!cfg_.dump_dir || !first) return;
        const MaterializedTwist m = materialize(t.twist, phi_);
        const std::string stem = file_safe(t.label) + "_N" + std::to_string(cfg_.N);
        dump_matrix(m.forward, *cfg_.dump_dir / (stem + ".F.txt"));
        dump_matrix(m.inverse, *cfg_.dump_dir / (stem + ".Finv.txt"));
    }

    const SuiteConfig& cfg_;
    std::vector<CheckResult>& out_;
    Morphism phi_;
    std::string suffix_;
};

ojson config_json(const SuiteConfig& cfg) {
    ojson j;
    j["N"] = cfg.N;
    j["suites"] = cfg.suites;
    j["r_values"] = cfg.r_values;
    ojson alphas = ojson::array();
    for (const auto& a : cfg.alpha_values) alphas.push_back(a.to_string());
    j["alpha_values"] = alphas;
    j["witness_reps"] = cfg.witness_reps;
    j["output"] = cfg.output == OutputFormat::json ? "json" : "text";
    j["dump_dir"] = cfg.dump_dir ? ojson(cfg.dump_dir->string()) : ojson(nullptr);
    j["seed"] = cfg.seed;
    j["core_cases"] = cfg.core_cases;
    return j;
}

}  // namespace

void validate(const SuiteConfig& cfg) {
    if (cfg.N < 2) throw ConfigInvalid("N must be at least 2, got " + std::to_string(cfg.N));
    if (cfg.suites.empty()) throw ConfigInvalid("no suites requested");
    std::set<std::string> seen;
    for (const auto& s : cfg.suites) {
        if (!known_suite(s)) throw ConfigInvalid("unknown suite '" + s + "'");
        if (!seen.insert(s).second) throw ConfigInvalid("suite '" + s + "' requested twice");
    }
    if (cfg.witness_reps.empty()) throw ConfigInvalid("no witness representation");
    for (const auto& w : cfg.witness_reps)
        if (w != "fundamental" && w != "doubled") throw ConfigInvalid("unknown witness representation '" + w + "'");
    if (std::set<std::string>(cfg.witness_reps.begin(), cfg.witness_reps.end()).size() != cfg.witness_reps.size())
        throw ConfigInvalid("witness representation listed twice");
    if (cfg.core_cases < 1) throw ConfigInvalid("core_cases must be positive");
    const bool block = wants(cfg, "nine-states") || wants(cfg, "diagram");
    if (block && cfg.N < 6) throw ConfigInvalid("nine-states and diagram need N >= 6, got " + std::to_string(cfg.N));
    if (block)
        for (int r : cfg.r_values)
            if (r < 3 || r > cfg.N - 2)
                throw ConfigInvalid("r=" + std::to_string(r) + " outside [3, " + std::to_string(cfg.N - 2) + "]");
    if (wants(cfg, "matreshka") && cfg.N < 4) throw ConfigInvalid("matreshka needs N >= 4");
    if (wants(cfg, "transitions") && cfg.N < 3) throw ConfigInvalid("transitions need N >= 3");
}

SuiteConfig parse_config(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigInvalid("config must be a JSON object");
    SuiteConfig cfg;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "N") {
                cfg.N = v.get<int>();
            } else if (key == "suites") {
                cfg.suites = v.get<std::vector<std::string>>();
            } else if (key == "r_values") {
                cfg.r_values = v.get<std::vector<int>>();
            } else if (key == "alpha_values") {
                cfg.alpha_values.clear();
                for (const auto& a : v)
                    cfg.alpha_values.push_back(a.is_string() ? Rational::parse(a.get<std::string>())
                                                             : Rational(a.get<std::int64_t>()));
            } else if (key == "witness_reps") {
                cfg.witness_reps = v.get<std::vector<std::string>>();
            } else if (key == "output") {
                const auto o = v.get<std::string>();
                if (o != "text" && o != "json") throw ConfigInvalid("output must be text or json");
                cfg.output = o == "json" ? OutputFormat::json : OutputFormat::text;
            } else if (key == "dump_dir") {
                if (!v.is_null()) cfg.dump_dir = v.get<std::string>();
            } else if (key == "seed") {
                cfg.seed = v.get<std::uint64_t>();
            } else if (key == "core_cases") {
                cfg.core_cases = v.get<int>();
            } else {
                throw ConfigInvalid("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigInvalid(std::string("bad config field: ") + e.what());
    } catch (const std::logic_error& e) {
        throw ConfigInvalid(std::string("bad rational in config: ") + e.what());
    }
    return cfg;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    Stopwatch sw;
    SuiteReport rep;
    rep.config = cfg;
    if (cfg.dump_dir) std::filesystem::create_directories(*cfg.dump_dir);
    Runner runner(cfg, rep.checks);
    for (const auto& w : cfg.witness_reps) runner.run_witness(w);
    std::stable_sort(rep.checks.begin(), rep.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    for (const auto& c : rep.checks) (c.passed ? rep.passed : rep.failed) += 1;
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

std::string emit_report(const SuiteReport& rep, OutputFormat format) {
    if (format == OutputFormat::json) {
        ojson j;
        j["config"] = config_json(rep.config);
        ojson checks = ojson::array();
        for (const auto& c : rep.checks) {
            ojson e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            e["residual_nnz"] = c.residual_nnz;
            e["dims"] = c.dims;
            e["elapsed_seconds"] = c.elapsed_seconds;
            e["detail"] = c.detail;
            checks.push_back(std::move(e));
        }
        j["checks"] = std::move(checks);
        j["summary"] = {{"total", rep.checks.size()}, {"passed", rep.passed}, {"failed", rep.failed}};
        j["elapsed_seconds"] = rep.elapsed_seconds;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << " residual=" << c.residual_nnz;
        if (!c.passed && !c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << rep.passed << " passed / " << rep.failed << " failed\n";
    return os.str();
}

std::string dump_matrix_string(const SparseMatrix& m) {
    std::ostringstream os;
    os << "dim " << m.dim() << "\n";
    for (const auto& e : m.entries())
        os << e.row << " " << e.col << " " << e.value.numerator_string() << " " << e.value.denominator_string() << "\n";
    return os.str();
}

void dump_matrix(const SparseMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << dump_matrix_string(m);
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

SparseMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word;
    long long dim = 0;
    if (!(in >> word >> dim) || word != "dim" || dim < 1) throw FormatError("matrix dump must start with 'dim <d>'");
    std::vector<Entry> entries;
    std::string line;
    std::getline(in, line);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long row = 0, col = 0;
        std::string num, den, extra;
        if (!(ls >> row >> col >> num >> den) || (ls >> extra))
            throw FormatError("line " + std::to_string(lineno) + ": expected 'row col num den'");
        if (row < 1 || col < 1 || row > dim || col > dim)
            throw FormatError("line " + std::to_string(lineno) + ": index out of range");
        Rational value;
        try {
            value = Rational::parse(num + "/" + den);
        } catch (const std::logic_error&) {
            throw FormatError("line " + std::to_string(lineno) + ": bad rational " + num + "/" + den);
        }
        entries.push_back({static_cast<std::size_t>(row), static_cast<std::size_t>(col), value});
    }
    return SparseMatrix::from_entries(static_cast<std::size_t>(dim), std::move(entries));
}

SparseMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parse_matrix(os.str());
}

TwistSequence named_twist(std::string_view name, int N, const Rational& alpha, int r) {
    if (name == "jordanian") return sequence_of(N, {jordanian_factor(N, 1)});
    if (name == "extended") return extended_twist_generic(N, r, alpha);
    if (name == "alternative") return alternative_chain(N);
    if (name == "chain") return chain_twist(N, maximal_chain_length(N));
    if (name.starts_with("chain:")) {
        const std::string p(name.substr(6));
        try {
            std::size_t used = 0;
            const int v = std::stoi(p, &used);
            if (used == p.size()) return chain_twist(N, v);
        } catch (const std::logic_error&) {
        }
        throw ConfigInvalid("bad chain length '" + p + "'");
    }
    try {
        return costructure_table(name, N, r).twist_recipe;
    } catch (const UnknownState&) {
        throw ConfigInvalid("unknown twist '" + std::string(name) + "'");
    }
}

std::string tables_json(int N, int r) {
    auto entry_json = [](const TableEntry& e) {
        ojson a = ojson::array();
        for (const auto& t : e) a.push_back({{"coeff", t.coeff}, {"combinator", t.c.to_string()}});
        return a;
    };
    ojson j;
    j["N"] = N;
    j["r"] = r;
    ojson states = ojson::array();
    for (StateId s : kAllStates) {
        const auto table = costructure_table(s, N, r);
        ojson st;
        st["state_id"] = state_name(s);
        st["twist"] = table.twist_recipe.name();
        ojson rows = ojson::array();
        for (std::size_t k = 0; k < table.generators.size(); ++k)
            rows.push_back({{"generator", "E" + std::to_string(table.generators[k].i) + "," +
                                              std::to_string(table.generators[k].j)},
                            {"combinators", entry_json(table.entries[k])}});
        st["entries"] = std::move(rows);
        states.push_back(std::move(st));
    }
    j["states"] = std::move(states);
    ojson block = ojson::array();
    for (const auto& b : two_jordanian_block(N))
        block.push_back({{"generator", "E" + std::to_string(b.generator.i) + "," + std::to_string(b.generator.j)},
                         {"combinators", entry_json(b.entry)}});
    j["two_jordanian"] = std::move(block);
    return j.dump(2) + "\n";
}

}  // namespace twistlab
