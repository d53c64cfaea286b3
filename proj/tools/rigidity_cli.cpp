// rigidity <subcmd> <diagram> [--lambda a,b,...] [--marked i,j] [--p N] [--dmax N]
//          [--rep SPEC] [--format json|text] [--cache-dir PATH]
//
// Exit codes: 0 success, 2 not-rigid verdict, 1 usage or internal error
// (including a paper-tables mismatch and an oracle/Kostant disagreement).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rigidity/rigidity.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

struct Query {
    std::string subcommand;
    std::string diagram;
    std::string lambda_text, marked_text, rep;
    std::int64_t p = -1;
    std::int64_t d_max = 3;
    std::string format = "json";
    std::string cache_dir;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (tok.empty() || used != tok.size()) throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
        out.push_back(v);
    }
    if (text.back() == ',') throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    return out;
}

Json int_list_or_null(const std::vector<std::int64_t>& v) {
    if (v.empty()) return nullptr;
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

// Plain-text rendering of a payload; for people, never parsed.
void render_text(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return std::string("-");
        return v.dump();
    };
    auto flat = [&](const Json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if (x.is_structured()) return false;
        return true;
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& v = it.value();
            if (v.is_structured() && !flat(v)) {
                os << pad << it.key() << ":\n";
                render_text(v, os, indent + 1);
            } else if (flat(v)) {
                os << pad << it.key() << ": (";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
                os << ")\n";
            } else {
                os << pad << it.key() << ": " << scalar(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                render_text(v, os, indent + 1);
            } else {
                os << pad << "- " << (flat(v) ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

int run(const Query& q) {
    const auto lambda = parse_list(q.lambda_text, "--lambda");
    const auto marked = parse_list(q.marked_text, "--marked");
    const char* diagram = q.diagram.c_str();
    if (q.subcommand != "paper-tables" && q.diagram.empty()) throw UsageError(q.subcommand + " needs a diagram");
    if (q.p < -1) throw UsageError("--p must be at least -1");
    if (q.d_max < 1) throw UsageError("--dmax must be at least 1");

    std::string cache_dir = q.cache_dir;
    if (cache_dir.empty()) {
        if (const char* env = std::getenv("RIGIDITY_CACHE_DIR")) cache_dir = env;
    }

    rig_session* s = nullptr;
    if (rig_session_create(&s) != RIG_OK) throw std::runtime_error(rig_last_error());
    std::unique_ptr<rig_session, decltype(&rig_session_destroy)> session(s, rig_session_destroy);
    rig_session_set_cache_dir(s, cache_dir.c_str());

    const std::int64_t* lp = lambda.empty() ? nullptr : lambda.data();
    const std::int64_t* mp = marked.empty() ? nullptr : marked.data();
    rig_result* r = nullptr;
    rig_status st = RIG_OK;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string& sub = q.subcommand;
    if (sub == "root-system")
        st = rig_root_system(s, diagram, &r);
    else if (sub == "grading")
        st = rig_grading(s, diagram, lp, lambda.size(), mp, marked.size(), &r);
    else if (sub == "decompose")
        st = rig_decompose(s, diagram, lp, lambda.size(), &r);
    else if (sub == "h1")
        st = rig_h1(s, diagram, lp, lambda.size(), mp, marked.size(), &r);
    else if (sub == "certify")
        st = rig_certify(s, diagram, lp, lambda.size(), q.p, &r);
    else if (sub == "oracle")
        st = rig_oracle(s, diagram, lp, lambda.size(), q.rep.c_str(), q.d_max, &r);
    else if (sub == "paper-tables")
        st = rig_paper_tables(s, &r);
    else
        throw UsageError("unknown subcommand '" + sub + "'");
    const auto t1 = std::chrono::steady_clock::now();
    if (st != RIG_OK) {
        std::cerr << "rigidity: " << rig_status_name(st) << " error: " << rig_last_error() << "\n";
        return 1;
    }
    std::unique_ptr<rig_result, decltype(&rig_result_destroy)> result(r, rig_result_destroy);

    Json warnings = Json::array();
    for (std::size_t i = 0; i < rig_result_warning_count(r); ++i) {
        warnings.push_back(rig_result_warning(r, i));
        std::cerr << "rigidity: warning: " << rig_result_warning(r, i) << "\n";
    }
    Json env = {
        {"schema_version", kSchemaVersion},
        {"query",
         {{"subcommand", sub},
          {"diagram", q.diagram.empty() ? Json(nullptr) : Json(q.diagram)},
          {"lambda", int_list_or_null(lambda)},
          {"marked", int_list_or_null(marked)},
          {"p", sub == "certify" ? Json(q.p) : Json(nullptr)},
          {"d_max", sub == "oracle" ? Json(q.d_max) : Json(nullptr)},
          {"rep", q.rep.empty() ? Json(nullptr) : Json(q.rep)}}},
        {"payload", Json::parse(rig_result_json(r))},
        {"cache_hit", rig_result_cache_hit(r) != 0},
        {"warnings", warnings},
        {"timing", {{"elapsed_us", std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()}}}};

    if (q.format == "json") {
        std::cout << env.dump(2) << "\n";
    } else {
        std::cout << sub << (q.diagram.empty() ? "" : " " + q.diagram) << "\n";
        if (sub == "certify") {
            const auto& p = env["payload"];
            std::cout << p["system_name"].get<std::string>() << ": "
                      << (p["rigid"].get<bool>() ? "rigid" : "NOT rigid") << "\n";
        }
        render_text(env["payload"], std::cout, 1);
        std::cout << "cache_hit: " << (env["cache_hit"].get<bool>() ? "true" : "false") << "\n";
    }

    if (rig_result_positive(r)) return 0;
    return sub == "certify" ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigidity computations for homogeneous varieties G/P"};
    app.require_subcommand(1);
    Query q;
    const char* subs[][2] = {{"root-system", "Cartan data, positive roots and highest roots"},
                             {"grading", "Z-grading of the Lie algebra and of U"},
                             {"decompose", "U ⊗ U* and the complement of the Lie algebra in sl(U)"},
                             {"h1", "Kostant components of H¹ with degrees"},
                             {"certify", "rigidity verdict for the (I_p^f, Ω) system"},
                             {"oracle", "brute-force H¹ from explicit matrices, compared with Kostant"},
                             {"paper-tables", "regenerate the published tables and compare"}};
    for (auto& [name, desc] : subs) {
        auto* sc = app.add_subcommand(name, desc);
        sc->add_option("diagram", q.diagram, "diagram literal, e.g. A2, B4, A1xA3");
        sc->add_option("--lambda", q.lambda_text, "highest weight, comma-separated ω-coordinates");
        sc->add_option("--marked", q.marked_text, "marked nodes, comma-separated, 1-based");
        sc->add_option("--p", q.p, "system index p >= -1 (certify)");
        sc->add_option("--dmax", q.d_max, "largest degree to compute (oracle)");
        sc->add_option("--rep", q.rep, "rep spec for the oracle, e.g. sym^2(defining)");
        sc->add_option("--format", q.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sc->add_option("--cache-dir", q.cache_dir, "weight-table cache (overrides RIGIDITY_CACHE_DIR)");
        sc->callback([&q, sc] { q.subcommand = sc->get_name(); });
    }
    if (argc > 1 && argv[1][0] != '-') {
        bool known = false;
        for (auto& sub : subs) known = known || std::string(argv[1]) == sub[0];
        if (!known) {
            std::cerr << "rigidity: usage error: unknown subcommand '" << argv[1] << "'\n";
            return 1;
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "rigidity: usage error: " << e.what() << "\n";
        return 1;
    }
    try {
        return run(q);
    } catch (const UsageError& e) {
        std::cerr << "rigidity: usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rigidity: error: " << e.what() << "\n";
        return 1;
    }
}
