// ftlcalc: command-line front end for the ftl headers.
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftl/ideal.hpp"
#include "ftl/invariants.hpp"

namespace {

using nlohmann::json;
using namespace ftl;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "{0,2}" or "0,2" or "{}".
std::vector<int> parse_set(std::string text, int d) {
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') throw UsageError("unterminated set: " + text);
        text = text.substr(1, text.size() - 2);
    }
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string item = text.substr(pos, next - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad set element '" + item + "'");
        const int k = std::stoi(item);
        if (k >= d) throw UsageError("set element " + item + " is not in Z/" + std::to_string(d) + "Z");
        out.push_back(k);
        pos = next + 1;
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw UsageError("repeated set element");
    return out;
}

struct ParsedSpec {
    TraceParams params;
    json description;
};

// "D={0,1}" or "sup1={0},sup2={1}".
ParsedSpec parse_spec(const std::string& spec, int d) {
    if (spec.rfind("D=", 0) == 0) {
        const auto D = parse_set(spec.substr(2), d);
        if (D.empty()) throw UsageError("D must be non-empty");
        return {esystem_params(d, D), {{"D", D}, {"z", to_string(esystem_params(d, D).z)}}};
    }
    if (spec.rfind("sup1=", 0) == 0) {
        const std::size_t split = spec.find("},sup2=");
        if (split == std::string::npos) throw UsageError("expected sup1={...},sup2={...}");
        const auto s1 = parse_set(spec.substr(5, split + 1 - 5), d);
        const auto s2 = parse_set(spec.substr(split + 7), d);
        const auto p = sup_split_params(d, s1, s2);
        return {to_params(p), {{"sup1", s1}, {"sup2", s2}, {"z", to_string(p.z)}}};
    }
    throw UsageError("unrecognized --spec '" + spec + "'");
}

json params_json(const TraceParams& p) {
    json x = json::array();
    for (int k = 0; k < p.d(); ++k) x.push_back(to_string(p.x[k]));
    return {{"z", to_string(p.z)}, {"x", x}};
}

json report_json(const CheckReport& r) {
    json residuals = json::array();
    for (const auto& res : r.residuals) residuals.push_back({{"monomial", res.monomial}, {"residual", res.residual}});
    json out = {{"quotient", r.quotient}, {"passed", r.passed}, {"residuals", residuals}};
    if (r.quotient == "ctl") out["closed_form_agrees"] = r.closed_form_agrees;
    if (!r.note.empty()) out["classification"] = r.note;
    return out;
}

InvariantKind parse_kind(const std::string& k) {
    if (k == "gamma") return InvariantKind::gamma;
    if (k == "delta") return InvariantKind::delta;
    if (k == "vartheta") return InvariantKind::vartheta;
    if (k == "theta") return InvariantKind::theta;
    if (k == "homflypt") return InvariantKind::homflypt;
    if (k == "jones") return InvariantKind::jones;
    throw UsageError("unknown invariant kind " + k);
}

bool is_classical_kind(InvariantKind k) {
    return k == InvariantKind::delta || k == InvariantKind::theta || k == InvariantKind::homflypt || k == InvariantKind::jones;
}

// Write-to-temp then rename, so concurrent readers never see a partial file.
void write_atomically(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
        if (!out) throw std::runtime_error("cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

json load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return json::object();
    try {
        return json::parse(in);
    } catch (const json::exception&) {
        return json::object();
    }
}

int run_esystem(int d, bool as_json) {
    json list = json::array();
    for (const auto& s : solve_esystem(d)) {
        if (as_json) {
            json x = json::array();
            for (int k = 0; k < d; ++k) x.push_back(to_string(s.x[k]));
            list.push_back({{"D", s.D}, {"x", x}, {"E", s.E.get_str()}, {"verified", esystem_verify(s.x)}});
        } else {
            std::cout << to_string(s) << "\n";
        }
    }
    if (as_json) std::cout << json{{"input", {{"d", d}}}, {"value", list}}.dump(2) << "\n";
    return kExitOk;
}

int run_trace(int d, int n, const std::string& word_text, const std::string& spec, bool as_json) {
    const FramedBraidWord word = parse_braid(word_text);
    if (word.n != n) throw UsageError("--n disagrees with the word header");
    const AlgebraContext ctx(d, n);
    TraceEngine engine(d);
    const TracePolynomial tr = engine(to_algebra(word, ctx));
    json params = json::object();
    std::string value = to_string(tr);
    if (!spec.empty()) {
        const ParsedSpec p = parse_spec(spec, d);
        params = p.description;
        value = to_string(p.params(tr));
    }
    if (as_json) {
        std::cout << json{{"input", {{"d", d}, {"n", n}, {"word", to_string(word)}}},
                          {"params", params},
                          {"value", value},
                          {"grading", word.exponent_sum() % 2 == 0 ? "even" : "odd"}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

int run_invariant(const std::string& kind_text, int d, const std::string& D_text, const std::string& word_text, bool as_json,
                  const std::string& cache_path) {
    const InvariantKind kind = parse_kind(kind_text);
    const FramedBraidWord word = parse_braid(word_text, !is_classical_kind(kind));
    const bool hecke = kind == InvariantKind::homflypt || kind == InvariantKind::jones;
    const std::vector<int> D = hecke ? std::vector<int>{0} : parse_set(D_text, d);
    if (!hecke && D.empty()) throw UsageError("--D must be a non-empty subset");
    const int dd = hecke ? 1 : d;

    json record;
    std::string key;
    json cache;
    if (!cache_path.empty()) {
        key = std::to_string(dd) + "|" + set_text(D) + "|" + to_string(word) + "|" + kind_text;
        cache = load_cache(cache_path);
        if (cache.contains(key)) record = cache[key];
    }
    if (record.is_null()) {
        const InvariantValue v = evaluate_invariant(kind, word, dd, D);
        record = {{"value", v.text()}, {"grading", v.grading()}, {"w", v.general_w ? "general" : "u"}};
        if (!cache_path.empty()) {
            cache[key] = record;
            write_atomically(cache_path, cache);
        }
    }
    if (as_json) {
        std::cout << json{{"input", {{"kind", kind_text}, {"word", to_string(word)}}},
                          {"params", {{"d", dd}, {"D", D}, {"w", record["w"]}}},
                          {"value", record["value"]},
                          {"grading", record["grading"]}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << record["value"].get<std::string>() << "\n";
    }
    return kExitOk;
}

int run_check(const std::string& quotient, int d, const std::string& spec, bool n4, bool as_json) {
    std::vector<ParsedSpec> specs;
    if (!spec.empty()) {
        specs.push_back(parse_spec(spec, d));
    } else {
        for (const auto& s : solve_esystem(d))
            specs.push_back({esystem_params(d, s.D), {{"D", s.D}, {"z", to_string(esystem_params(d, s.D).z)}}});
    }
    bool all = true;
    json results = json::array();
    for (const auto& p : specs) {
        CheckReport r = quotient == "ftl"   ? check_ftl_pass(d, p.params, n4)
                        : quotient == "ctl" ? check_ctl_pass(d, p.params, n4)
                        : quotient == "ytl" ? check_ytl_pass(d, p.params, n4)
                                            : throw UsageError("unknown quotient " + quotient);
        all = all && r.passed;
        if (as_json) {
            results.push_back({{"params", p.description}, {"resolved", params_json(p.params)}, {"report", report_json(r)}});
        } else {
            std::cout << quotient << " " << p.description.dump() << ": " << (r.passed ? "pass" : "fail");
            if (!r.passed) std::cout << " (" << r.residuals.size() << " nonzero residuals)";
            if (!r.note.empty()) std::cout << " [" << r.note << "]";
            std::cout << "\n";
        }
    }
    if (as_json)
        std::cout << json{{"input", {{"quotient", quotient}, {"d", d}}}, {"value", results}, {"passed", all}}.dump(2) << "\n";
    return all ? kExitOk : kExitCheckFailed;
}

int run_dim(const std::string& algebra, int d, int n, const std::string& method, bool as_json) {
    const AlgebraTag tag = algebra == "y"     ? AlgebraTag::y
                           : algebra == "ftl" ? AlgebraTag::ftl
                           : algebra == "ctl" ? AlgebraTag::ctl
                           : algebra == "ytl" ? AlgebraTag::ytl
                                              : throw UsageError("unknown algebra " + algebra);
    if (method != "formula" && method != "rank") throw UsageError("unknown method " + method);
    const DimensionReport r = algebra_dimension(tag, d, n, method == "formula" ? DimensionMethod::formula : DimensionMethod::rank);
    if (as_json) {
        json j = {{"input", {{"algebra", to_string(r.algebra)}, {"d", d}, {"n", n}, {"method", method}}},
                  {"value", r.dimension.get_str()}};
        if (method == "rank" && tag != AlgebraTag::y) j["ideal_rank"] = r.ideal_rank;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.dimension.get_str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Yokonuma-Hecke algebras and their Temperley-Lieb quotients"};
    app.require_subcommand(1);
    bool as_json = false;

    int d = 1, n = 1;
    std::string word, spec, D_text, kind, quotient, algebra, method = "formula", cache;
    bool n4 = false;

    auto* es = app.add_subcommand("esystem", "Solutions of the E-system, one per non-empty D");
    es->add_option("--d", d, "Framing modulus")->required()->check(CLI::Range(1, 16));
    es->add_flag("--json", as_json);

    auto* tr = app.add_subcommand("trace", "Markov trace of a framed braid word");
    tr->add_option("--d", d)->required()->check(CLI::Range(1, 64));
    tr->add_option("--n", n)->required()->check(CLI::Range(1, kMaxStrands));
    tr->add_option("--word", word, "e.g. \"n=3: t1^2 s1 s2^-1\"")->required();
    tr->add_option("--spec", spec, "D={..} or sup1={..},sup2={..}");
    tr->add_flag("--json", as_json);

    auto* inv = app.add_subcommand("invariant", "Link invariant of a braid closure");
    inv->add_option("--kind", kind)->required()->check(CLI::IsMember({"gamma", "delta", "theta", "vartheta", "homflypt", "jones"}));
    inv->add_option("--d", d)->check(CLI::Range(1, 64));
    inv->add_option("--D", D_text, "Subset of Z/dZ, e.g. {0,1}");
    inv->add_option("--word", word)->required();
    inv->add_option("--cache", cache, "JSON result cache file");
    inv->add_flag("--json", as_json);

    auto* chk = app.add_subcommand("check", "Does the trace pass to a quotient?");
    chk->add_option("--quotient", quotient)->required()->check(CLI::IsMember({"ftl", "ctl", "ytl"}));
    chk->add_option("--d", d)->required()->check(CLI::Range(1, 8));
    chk->add_option("--spec", spec, "D={..} or sup1={..},sup2={..}; default sweeps all E-system solutions");
    chk->add_flag("--n4", n4, "Also test every standard word of Y_{d,4}");
    chk->add_flag("--json", as_json);

    auto* dim = app.add_subcommand("dim", "Dimension of Y or a quotient");
    dim->add_option("--algebra", algebra)->required()->check(CLI::IsMember({"y", "ftl", "ctl", "ytl"}));
    dim->add_option("--d", d)->required()->check(CLI::Range(1, 64));
    dim->add_option("--n", n)->required()->check(CLI::Range(1, kMaxStrands));
    dim->add_option("--method", method)->check(CLI::IsMember({"formula", "rank"}));
    dim->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*es) return run_esystem(d, as_json);
        if (*tr) return run_trace(d, n, word, spec, as_json);
        if (*inv) {
            if (D_text.empty() && kind != "homflypt" && kind != "jones") throw UsageError("--D is required for this kind");
            return run_invariant(kind, d, D_text, word, as_json, cache);
        }
        if (*chk) return run_check(quotient, d, spec, n4, as_json);
        if (*dim) return run_dim(algebra, d, n, method, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BraidParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
