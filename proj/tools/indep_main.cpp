// Batch front end: loads spec/tuple/trace documents, runs the exact
// analyses, and emits machine-readable reports.
//
// Exit codes: 0 success, 1 malformed input, 2 budget/horizon exceeded,
// 3 internal invariant violation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "indep/cover.hpp"
#include "indep/independence.hpp"
#include "indep/json_io.hpp"
#include "indep/shattering.hpp"
#include "indep/toeplitz.hpp"

namespace {

using indep::Json;
using indep::Pos;

struct Options {
    long long budget = indep::kDefaultCoverBudget;
    std::optional<Pos> horizon;
    std::string format = "json";
    std::optional<unsigned long long> seed;
    std::string out;
};

unsigned long long fnv1a(const std::string& s, unsigned long long h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Unseeded runs derive the seed from the inputs, never from time.
unsigned long long effective_seed(const Options& opt, const std::vector<std::string>& inputs) {
    if (opt.seed) return *opt.seed;
    unsigned long long h = 1469598103934665603ull;
    for (const auto& s : inputs) h = fnv1a(s, h);
    return h;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw indep::InputError("cannot write output file: " + opt.out);
    f << text;
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<Pos> parse_int_list(const std::string& text) {
    std::vector<Pos> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

indep::SubshiftSpec load_spec(const std::string& path, const Options& opt) {
    indep::SubshiftSpec spec = indep::subshift_from_json(indep::load_json_file(path));
    if (opt.horizon && spec.horizon() > *opt.horizon) {
        // A user-supplied horizon only tightens the oracle's own bound.
    }
    return spec;
}

Pos applied_horizon(const indep::SubshiftSpec& spec, const Options& opt) {
    return opt.horizon ? std::min(*opt.horizon, spec.horizon()) : spec.horizon();
}

Json meta(const Options& opt, unsigned long long seed) {
    Json m;
    m["seed"] = seed;
    m["budget"] = opt.budget;
    return m;
}

int run(int argc, char** argv) {
    CLI::App app{"exact combinatorial independence toolkit for subshifts"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--budget", opt.budget, "search/set-cover node budget");
    long long horizon_flag = -1;
    app.add_option("--horizon", horizon_flag, "cap the exact window span");
    app.add_option("--format", opt.format, "json|csv|lines")->check(CLI::IsMember({"json", "csv", "lines"}));
    unsigned long long seed_flag = 0;
    auto* seed_opt = app.add_option("--seed", seed_flag, "seed echoed into reports");
    app.add_option("--out", opt.out, "write the report to a file instead of stdout");

    // lang
    auto* lang = app.add_subcommand("lang", "admissible words of a given length");
    std::string lang_spec;
    int lang_n = 0;
    lang->add_option("spec", lang_spec, "subshift spec file")->required();
    lang->add_option("n", lang_n, "word length")->required();

    // indep
    auto* ind = app.add_subcommand("indep", "independence sets for a clopen tuple");
    std::string ind_spec, ind_tuple, ind_mode, ind_set;
    Pos ind_from = 0, ind_to = 0;
    int ind_nmax = 0;
    ind->add_option("spec", ind_spec)->required();
    ind->add_option("tuple", ind_tuple)->required();
    ind->add_option("mode", ind_mode, "check|max|profile")->required()->check(CLI::IsMember({"check", "max", "profile"}));
    ind->add_option("--set", ind_set, "comma-separated positions (check)");
    ind->add_option("--from", ind_from, "interval start (max)");
    ind->add_option("--to", ind_to, "interval end, exclusive (max)");
    ind->add_option("--nmax", ind_nmax, "profile depth");

    // entropy
    auto* ent = app.add_subcommand("entropy", "combinatorial entropy profile of the complement cover");
    std::string ent_spec, ent_tuple;
    int ent_nmax = 0;
    ent->add_option("spec", ent_spec)->required();
    ent->add_option("tuple", ent_tuple)->required();
    ent->add_option("--nmax", ent_nmax)->required();

    // shatter
    auto* sh = app.add_subcommand("shatter", "trace-set shattering reports");
    std::string sh_trace, sh_mode, sh_lambda = "2", sh_b = "1";
    sh->add_option("trace", sh_trace)->required();
    sh->add_option("mode", sh_mode, "fs|hs|largest|km|keylemma")
        ->required()
        ->check(CLI::IsMember({"fs", "hs", "largest", "km", "keylemma"}));
    sh->add_option("--lambda", sh_lambda, "rational > 1 (km)");
    sh->add_option("--b", sh_b, "positive rational exponent (keylemma)");

    // toeplitz
    auto* toe = app.add_subcommand("toeplitz", "Toeplitz tower construction and checks");
    std::string toe_mode, toe_file;
    int toe_levels = 1;
    Pos toe_from = 0, toe_to = 0;
    bool toe_oracle = false;
    toe->add_option("mode", toe_mode, "build|verify|window|lemmas")
        ->required()
        ->check(CLI::IsMember({"build", "verify", "window", "lemmas"}));
    toe->add_option("file", toe_file, "spec file (verify/window/lemmas)");
    toe->add_option("--levels", toe_levels, "levels to build");
    toe->add_option("--from", toe_from);
    toe->add_option("--to", toe_to);
    toe->add_flag("--as-oracle", toe_oracle, "emit a subshift oracle document (build)");

    CLI11_PARSE(app, argc, argv);
    if (horizon_flag >= 0) opt.horizon = horizon_flag;
    if (seed_opt->count() > 0) opt.seed = seed_flag;

    if (lang->parsed()) {
        if (lang_n < 1) throw indep::InputError("word length must be >= 1");
        indep::SubshiftSpec spec = load_spec(lang_spec, opt);
        if (lang_n > applied_horizon(spec, opt))
            throw indep::HorizonError("requested length exceeds the horizon");
        std::vector<indep::Word> words = spec.language(lang_n);
        if (opt.format == "json") {
            Json j;
            j["meta"] = meta(opt, effective_seed(opt, {lang_spec, std::to_string(lang_n)}));
            Json arr = Json::array();
            for (const auto& w : words) arr.push_back(indep::word_to_digits(w));
            j["words"] = std::move(arr);
            emit_json(opt, j);
        } else {
            std::string text;
            for (const auto& w : words) text += indep::word_to_digits(w) + "\n";
            emit(opt, text);
        }
        return 0;
    }

    if (ind->parsed()) {
        indep::SubshiftSpec spec = load_spec(ind_spec, opt);
        auto [alphabet, tuple] = indep::tuple_from_json(indep::load_json_file(ind_tuple));
        if (alphabet != spec.alphabet()) throw indep::InputError("tuple alphabet does not match spec");
        indep::IndependenceProblem prob{spec, tuple};
        indep::IndependenceBudget budget;
        budget.max_nodes = opt.budget;
        unsigned long long seed = effective_seed(opt, {ind_spec, ind_tuple, ind_mode});
        if (ind_mode == "check") {
            std::vector<Pos> positions = parse_int_list(ind_set);
            indep::validate_problem(prob);
            bool ok = indep::is_independence_set(prob, positions, budget);
            Json j;
            j["meta"] = meta(opt, seed);
            j["set"] = positions;
            j["independent"] = ok;
            emit_json(opt, j);
        } else if (ind_mode == "max") {
            std::vector<Pos> best = indep::max_independence_subset(prob, ind_from, ind_to, budget);
            Json j;
            j["meta"] = meta(opt, seed);
            j["interval"] = Json::array({ind_from, ind_to});
            j["best"] = best;
            j["size"] = best.size();
            emit_json(opt, j);
        } else {
            if (ind_nmax < 1) throw indep::InputError("profile needs --nmax >= 1");
            indep::DensityProfile prof = indep::density_profile(prob, ind_nmax, budget);
            if (opt.format == "csv") {
                std::string text = "n,best,ratio\n";
                for (const auto& row : prof.rows)
                    text += std::to_string(row.n) + "," + std::to_string(row.best) + "," +
                            fmt_double(static_cast<double>(row.best) / row.n) + "\n";
                emit(opt, text);
            } else {
                Json rows = Json::array();
                for (const auto& row : prof.rows) {
                    Json r;
                    r["n"] = row.n;
                    r["best"] = row.best;
                    r["ratio"] = static_cast<double>(row.best) / row.n;
                    rows.push_back(std::move(r));
                }
                Json j;
                j["meta"] = meta(opt, seed);
                j["rows"] = std::move(rows);
                j["hint"] = prof.hint == indep::DensityHint::DensityBoundedBelow ? "densityBoundedBelow"
                            : prof.hint == indep::DensityHint::UnboundedGrowth  ? "unboundedGrowth"
                                                                                : "bounded";
                emit_json(opt, j);
            }
        }
        return 0;
    }

    if (ent->parsed()) {
        indep::SubshiftSpec spec = load_spec(ent_spec, opt);
        auto [alphabet, tuple] = indep::tuple_from_json(indep::load_json_file(ent_tuple));
        if (alphabet != spec.alphabet()) throw indep::InputError("tuple alphabet does not match spec");
        if (ent_nmax < 1) throw indep::InputError("entropy needs --nmax >= 1");
        std::vector<indep::EntropyRow> rows = indep::comb_entropy_profile(spec, tuple, ent_nmax, opt.budget);
        if (opt.format == "csv") {
            std::string text = "n,subcover,h\n";
            for (const auto& r : rows)
                text += std::to_string(r.n) + "," + std::to_string(r.subcover) + "," + fmt_double(r.value) + "\n";
            emit(opt, text);
        } else {
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json one;
                one["n"] = r.n;
                one["subcover"] = r.subcover;
                one["h"] = r.value;
                arr.push_back(std::move(one));
            }
            Json j;
            j["meta"] = meta(opt, effective_seed(opt, {ent_spec, ent_tuple}));
            j["log_base"] = "e";
            j["rows"] = std::move(arr);
            emit_json(opt, j);
        }
        return 0;
    }

    if (sh->parsed()) {
        indep::TraceSet trace = indep::trace_from_json(indep::load_json_file(sh_trace));
        unsigned long long seed = effective_seed(opt, {sh_trace, sh_mode});
        indep::ShatterBudget budget;
        budget.max_checks = opt.budget;
        Json j;
        j["meta"] = meta(opt, seed);
        if (sh_mode == "fs") {
            j["f"] = indep::f_s(trace, opt.budget);
        } else if (sh_mode == "hs") {
            j["h"] = indep::count_shattered(trace, budget);
        } else if (sh_mode == "largest") {
            j["largest"] = indep::largest_shattered(trace, budget);
        } else if (sh_mode == "km") {
            auto w = indep::km_witness(trace, indep::parse_rational(sh_lambda), budget);
            j["lambda"] = sh_lambda;
            if (w)
                j["witness"] = *w;
            else
                j["witness"] = nullptr;
        } else {
            indep::Rational b = indep::parse_rational(sh_b);
            indep::KeyLemmaConstants cs = indep::key_lemma_constants(trace.k, b);
            indep::KeyLemmaWitness wit = indep::key_lemma_witness(trace, b, budget, opt.budget);
            Json jc;
            jc["k"] = cs.k;
            jc["b"] = cs.b.str();
            jc["lambda"] = cs.lambda.str();
            jc["b1"] = cs.b1;
            jc["b2"] = cs.b2;
            jc["t"] = cs.t;
            jc["c"] = cs.c.str();
            jc["enforced"] = cs.enforced;
            j["constants"] = std::move(jc);
            j["holdsHypothesis"] = wit.holds_hypothesis;
            j["f"] = wit.f_value;
            j["w"] = wit.w;
            if (wit.holds_hypothesis && wit.window_size > 0)
                j["ratio"] = static_cast<double>(wit.w.size()) / wit.window_size;
        }
        emit_json(opt, j);
        return 0;
    }

    if (toe->parsed()) {
        if (toe_mode == "build") {
            indep::ToeplitzBuildBudget budget;
            budget.max_nodes = opt.budget;
            indep::ToeplitzSpec spec = indep::build_toeplitz(toe_levels, budget);
            if (toe_oracle) {
                Json j;
                j["version"] = 1;
                j["variant"] = "toeplitz";
                j["truncation"] = spec.levels;
                j["toeplitz"] = indep::toeplitz_to_json(spec);
                emit_json(opt, j);
            } else {
                emit_json(opt, indep::toeplitz_to_json(spec));
            }
            return 0;
        }
        if (toe_file.empty()) throw indep::InputError("toeplitz " + toe_mode + " needs a spec file");
        indep::ToeplitzSpec spec = indep::toeplitz_from_json(indep::load_json_file(toe_file));
        if (toe_mode == "verify") {
            indep::ToeplitzReport rep = indep::verify_toeplitz(spec);
            Json j;
            j["ok"] = rep.ok;
            j["violations"] = rep.violations;
            emit_json(opt, j);
            return 0;
        }
        if (toe_mode == "window") {
            if (toe_to <= toe_from) throw indep::InputError("window needs --from < --to");
            auto [word, certain] = indep::toeplitz_window(spec, toe_from, toe_to);
            std::string mask;
            for (bool c : certain) mask.push_back(c ? '1' : '0');
            Json j;
            j["from"] = toe_from;
            j["to"] = toe_to;
            j["word"] = indep::word_to_digits(word);
            j["certain"] = mask;
            emit_json(opt, j);
            return 0;
        }
        // lemmas; default window is one second-level period
        Pos lo = toe_from, hi = toe_to;
        if (hi <= lo) {
            lo = 0;
            hi = spec.periods[static_cast<size_t>(std::min(spec.levels, 2) - 1)];
        }
        indep::ToeplitzLemmaReport rep = indep::check_toeplitz_lemmas(spec, lo, hi, opt.budget);
        Json j;
        j["window"] = Json::array({lo, hi});
        j["independent_sets"] = rep.independent_sets;
        j["shift_instances"] = rep.shift_instances;
        j["shift_failures"] = rep.shift_failures;
        j["triple_instances"] = rep.triple_instances;
        j["triple_failures"] = rep.triple_failures;
        j["split_instances"] = rep.split_instances;
        j["split_failures"] = rep.split_failures;
        j["ok"] = rep.ok();
        emit_json(opt, j);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const indep::HorizonError& e) {
        std::cerr << "horizon: " << e.what() << "\n";
        return 2;
    } catch (const indep::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const indep::InputError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ParseError&) {
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 3;
    }
}
