#include "indep/json_io.hpp"

#include <fstream>
#include <set>

namespace indep {

namespace {

void expect_keys(const Json& j, const std::string& what, const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw InputError(what + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw InputError(what + ": unknown key '" + key + "'");
    }
    for (const auto& key : required)
        if (!j.contains(key)) throw InputError(what + ": missing key '" + key + "'");
}

void expect_version(const Json& j, const std::string& what) {
    if (j.contains("version") && j.at("version").get<int>() != 1)
        throw InputError(what + ": unsupported version");
}

template <typename T>
std::vector<T> int_array(const Json& j) {
    std::vector<T> out;
    for (const auto& v : j) out.push_back(v.get<T>());
    return out;
}

}  // namespace

Json subshift_to_json(const SubshiftSpec& spec) {
    Json j;
    j["version"] = 1;
    switch (spec.kind()) {
        case SubshiftSpec::Kind::Full:
            j["variant"] = "full";
            j["alphabet"] = spec.alphabet();
            break;
        case SubshiftSpec::Kind::Sft: {
            j["variant"] = "sft";
            j["alphabet"] = spec.alphabet();
            j["memory"] = spec.sft_memory();
            Json words = Json::array();
            for (const Word& w : spec.sft_forbidden()) words.push_back(word_to_digits(w));
            j["forbidden"] = std::move(words);
            break;
        }
        case SubshiftSpec::Kind::Product:
            j["variant"] = "product";
            j["left"] = subshift_to_json(spec.left());
            j["right"] = subshift_to_json(spec.right());
            break;
        case SubshiftSpec::Kind::Toeplitz:
            j["variant"] = "toeplitz";
            j["truncation"] = spec.truncation();
            j["toeplitz"] = toeplitz_to_json(spec.toeplitz_spec());
            break;
        case SubshiftSpec::Kind::Wap:
            j["variant"] = "wap";
            j["truncation"] = spec.truncation();
            j["wap"] = wap_to_json(spec.wap_spec());
            break;
    }
    return j;
}

SubshiftSpec subshift_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("variant")) throw InputError("subshift spec: missing 'variant'");
    std::string variant = j.at("variant").get<std::string>();
    expect_version(j, "subshift spec");
    if (variant == "full") {
        expect_keys(j, "full shift spec", {"variant", "alphabet"}, {"version"});
        return SubshiftSpec::full_shift(j.at("alphabet").get<int>());
    }
    if (variant == "sft") {
        expect_keys(j, "sft spec", {"variant", "alphabet", "forbidden"}, {"version", "memory"});
        std::vector<Word> forbidden;
        for (const auto& w : j.at("forbidden")) forbidden.push_back(digits_to_word(w.get<std::string>()));
        int memory = j.contains("memory") ? j.at("memory").get<int>() : 1;
        return SubshiftSpec::sft(j.at("alphabet").get<int>(), memory, std::move(forbidden));
    }
    if (variant == "product") {
        expect_keys(j, "product spec", {"variant", "left", "right"}, {"version"});
        return SubshiftSpec::product_of(subshift_from_json(j.at("left")), subshift_from_json(j.at("right")));
    }
    if (variant == "toeplitz") {
        expect_keys(j, "toeplitz oracle spec", {"variant", "truncation", "toeplitz"}, {"version"});
        return SubshiftSpec::toeplitz_oracle(toeplitz_from_json(j.at("toeplitz")), j.at("truncation").get<int>());
    }
    if (variant == "wap") {
        expect_keys(j, "wap oracle spec", {"variant", "truncation", "wap"}, {"version"});
        return SubshiftSpec::wap_oracle(wap_from_json(j.at("wap")), j.at("truncation").get<int>());
    }
    throw InputError("subshift spec: unknown variant '" + variant + "'");
}

Json toeplitz_to_json(const ToeplitzSpec& spec) {
    Json j;
    j["version"] = 1;
    j["levels"] = spec.levels;
    j["periods"] = spec.periods;
    j["residues"] = spec.residues;
    j["translations"] = spec.translations;
    j["values"] = spec.values;
    return j;
}

ToeplitzSpec toeplitz_from_json(const Json& j) {
    expect_keys(j, "toeplitz spec", {"levels", "periods", "residues", "translations", "values"}, {"version"});
    expect_version(j, "toeplitz spec");
    ToeplitzSpec spec;
    spec.levels = j.at("levels").get<int>();
    spec.periods = int_array<long long>(j.at("periods"));
    for (const auto& row : j.at("residues")) spec.residues.push_back(int_array<long long>(row));
    for (const auto& row : j.at("translations")) spec.translations.push_back(int_array<long long>(row));
    for (const auto& row : j.at("values")) spec.values.push_back(int_array<int>(row));
    return spec;
}

Json wap_to_json(const WapSpec& spec) {
    Json j;
    j["version"] = 1;
    j["levels"] = spec.levels;
    j["positions"] = spec.positions;
    j["block_sizes"] = spec.block_sizes;
    j["partial_sums"] = spec.partial_sums;
    return j;
}

WapSpec wap_from_json(const Json& j) {
    expect_keys(j, "wap spec", {"levels", "positions", "block_sizes", "partial_sums"}, {"version"});
    expect_version(j, "wap spec");
    WapSpec spec;
    spec.levels = j.at("levels").get<int>();
    spec.positions = int_array<long long>(j.at("positions"));
    spec.block_sizes = int_array<int>(j.at("block_sizes"));
    spec.partial_sums = int_array<int>(j.at("partial_sums"));
    if (spec.block_sizes.size() != static_cast<size_t>(spec.levels) ||
        spec.partial_sums.size() != static_cast<size_t>(spec.levels))
        throw InputError("wap spec: per-level arrays disagree with level count");
    if (!spec.partial_sums.empty() &&
        spec.positions.size() < static_cast<size_t>(spec.partial_sums.back()))
        throw InputError("wap spec: positions array shorter than the deepest partial sum");
    return spec;
}

Json trace_to_json(const TraceSet& s) {
    Json j;
    j["version"] = 1;
    j["window"] = s.window;
    j["k"] = s.k;
    Json pats = Json::array();
    for (const auto& p : s.patterns) {
        std::string digits;
        digits.reserve(p.size());
        for (int v : p) digits.push_back(symbol_to_digit(v));
        pats.push_back(std::move(digits));
    }
    j["patterns"] = std::move(pats);
    return j;
}

TraceSet trace_from_json(const Json& j) {
    expect_keys(j, "trace set", {"window", "k", "patterns"}, {"version"});
    expect_version(j, "trace set");
    std::vector<Pos> window = int_array<Pos>(j.at("window"));
    int k = j.at("k").get<int>();
    std::vector<std::vector<int>> patterns;
    for (const auto& p : j.at("patterns")) {
        std::string digits = p.get<std::string>();
        std::vector<int> row;
        row.reserve(digits.size());
        for (char c : digits) row.push_back(digit_to_symbol(c));
        patterns.push_back(std::move(row));
    }
    return make_trace_set(std::move(window), k, std::move(patterns));
}

Json tuple_to_json(int alphabet, const std::vector<ClopenSet>& tuple) {
    Json j;
    j["version"] = 1;
    j["alphabet"] = alphabet;
    Json sets = Json::array();
    for (const ClopenSet& s : tuple) {
        Json one;
        Json cyls = Json::array();
        for (const Cylinder& c : s.canonical().to_cylinders()) {
            Json jc;
            jc["offset"] = c.offset;
            jc["word"] = word_to_digits(c.word);
            cyls.push_back(std::move(jc));
        }
        one["cylinders"] = std::move(cyls);
        sets.push_back(std::move(one));
    }
    j["sets"] = std::move(sets);
    return j;
}

std::pair<int, std::vector<ClopenSet>> tuple_from_json(const Json& j) {
    expect_keys(j, "clopen tuple", {"alphabet", "sets"}, {"version"});
    expect_version(j, "clopen tuple");
    int alphabet = j.at("alphabet").get<int>();
    std::vector<ClopenSet> tuple;
    for (const auto& one : j.at("sets")) {
        expect_keys(one, "clopen set", {"cylinders"});
        std::vector<Cylinder> cyls;
        for (const auto& jc : one.at("cylinders")) {
            expect_keys(jc, "cylinder", {"offset", "word"});
            cyls.push_back(Cylinder{jc.at("offset").get<Pos>(), digits_to_word(jc.at("word").get<std::string>())});
        }
        tuple.emplace_back(alphabet, cyls);
    }
    return {alphabet, std::move(tuple)};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace indep
