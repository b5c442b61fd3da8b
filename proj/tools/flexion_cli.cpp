#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flexion/expr.hpp"
#include "flexion/suites.hpp"

using namespace flexion;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void emit(const json& j, const std::string& path = "") {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw ParseError("sweep range must look like A..B");
    try {
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("sweep range must look like A..B");
    }
}

int cmd_verify(const std::string& suite, const std::string& json_path) {
    const auto res = checks::run_suite(suite);
    json out;
    out["suite"] = suite;
    json rows = json::array();
    for (const auto& c : res.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << std::fixed << std::setprecision(2) << c.seconds
                  << "s]  " << c.detail << "\n";
        rows.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    }
    std::cout << (res.pass() ? "suite " + suite + ": PASS" : "suite " + suite + ": FAIL") << "\n";
    out["checks"] = std::move(rows);
    out["pass"] = res.pass();
    if (!json_path.empty()) emit(out, json_path);
    return res.pass() ? kOk : kCheckFailed;
}

int cmd_eval(const std::string& text, const std::string& as) {
    const Derivation d = parse_derivation(text);
    if (as == "a-image") {
        std::cout << d.val_a().str() << "\n";
    } else if (as == "mould") {
        std::cout << render(psi(d));
    } else {
        emit(io::to_json(d));
    }
    return kOk;
}

int cmd_mould(const std::string& op, const std::vector<std::string>& files, std::optional<int> cap) {
    auto need = [&](std::size_t n) {
        if (files.size() != n) throw ParseError("mould " + op + " takes " + std::to_string(n) + " file(s)");
    };
    if (op == "ari") {
        need(2);
        emit(io::to_json(mould_ari(io::mould_from(read_json(files[0])), io::mould_from(read_json(files[1])), cap)));
        return kOk;
    }
    need(1);
    const Mould m = io::mould_from(read_json(files[0]));
    if (op == "swap") {
        emit(io::to_json(mould_swap(m)));
        return kOk;
    }
    if (op == "push") {
        emit(io::to_json(mould_push(m)));
        return kOk;
    }
    if (op == "alternal") {
        const bool alt = is_alternal(m);
        json out = {{"alternal", alt}};
        if (m.kind() == MouldKind::U) out["bialternal"] = is_bialternal(m);
        emit(out);
        return alt ? kOk : kCheckFailed;
    }
    if (op == "singular") {
        const auto rep = singularity_report(m);
        emit(io::to_json(rep));
        return rep.all_polynomial() ? kOk : kCheckFailed;
    }
    if (op == "render") {
        std::cout << render(m);
        return kOk;
    }
    throw ParseError("unknown mould operation " + op);
}

int relations_cell(int weight, int depth, bool lift, json& out) {
    auto cert = relation_kernel(weight, depth);
    bool ok = verify_certificate(cert);
    if (lift && depth == 3) ok = attach_lifts(cert) && ok && verify_certificate(cert);
    out = io::to_json(cert);
    std::cout << "weight " << weight << " depth " << depth << ": kernel dimension " << cert.kernel.size();
    for (const auto& v : cert.kernel) std::cout << " " << checks::vec_str(v);
    if (lift && depth == 3) {
        std::size_t lifted = 0;
        for (const auto& l : cert.lifts) lifted += l.has_value();
        std::cout << "; lifted " << lifted << "/" << cert.kernel.size();
    }
    std::cout << (ok ? "" : "; VERIFICATION FAILED") << "\n";
    return ok ? kOk : kCheckFailed;
}

int cmd_relations(std::optional<int> weight, int depth, bool lift, const std::string& sweep, bool compare,
                  const std::string& json_path) {
    if (compare) {
        const auto& r = checks::weight16();
        std::cout << "reference coefficients, verbatim: " << (r.verbatim_match ? "solve" : "do not solve") << "\n";
        std::cout << "with [eps(4),[eps(8),eps(4)]] as second term: " << (r.corrected_match ? "solve" : "do not solve")
                  << "\n";
        if (r.cert.kernel.size() == 1 && r.cert.lifts[0]) {
            const auto& sol = *r.cert.lifts[0];
            std::cout << "lift found:";
            for (std::size_t k = 0; k < sol.labels.size(); ++k)
                if (!sol.coeffs[k].is_zero())
                    std::cout << " " << sol.coeffs[k].str() << "*[eps(" << sol.labels[k][0] << "),[eps("
                              << sol.labels[k][1] << "),eps(" << sol.labels[k][2] << ")]]";
            std::cout << "\n";
        }
        return r.corrected_match ? kOk : kCheckFailed;
    }
    if (!sweep.empty()) {
        const auto [lo, hi] = parse_range(sweep);
        json all = json::array();
        int code = kOk;
        for (int n = lo; n <= hi; ++n) {
            if (h_labels(n, depth).empty()) continue;
            json cell;
            code = std::max(code, relations_cell(n, depth, lift, cell));
            all.push_back(std::move(cell));
        }
        if (!json_path.empty()) emit(all, json_path);
        return code;
    }
    if (!weight) throw ParseError("relations needs --weight or --sweep");
    json cell;
    const int code = relations_cell(*weight, depth, lift, cell);
    if (!json_path.empty()) emit(cell, json_path);
    return code;
}

int cmd_bridge(const std::string& verb, const std::string& input) {
    if (verb == "psi") {
        const json j = [&] {
            std::ifstream probe(input);
            return probe ? read_json(input) : json(nullptr);
        }();
        const Derivation d = j.is_null() ? parse_derivation(input) : io::derivation_from(j);
        emit(io::to_json(psi(d)));
        return kOk;
    }
    const NcPoly p = io::ncpoly_from(read_json(input));
    if (verb == "ma") emit(io::to_json(ma(p)));
    if (verb == "da") emit(io::to_json(da(p)));
    if (verb == "Da") emit(io::to_json(Da(p)));
    return kOk;
}

int cmd_span(int weight) {
    const auto row = goncharov_span_check(weight);
    emit(io::to_json(row));
    return row.bialternal_dim == row.family_rank ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact derivation, mould and relation computations in the free Lie algebra on a, b"};
    app.require_subcommand(1);

    std::string suite;
    std::string json_path;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(checks::suite_names()));
    verify->add_option("--json", json_path, "also write results as JSON");

    std::string expr;
    std::string as = "a-image";
    auto* eval = app.add_subcommand("eval", "evaluate a derivation expression");
    eval->add_option("expr", expr, "e.g. \"[eps(4),eps(6)]\"")->required();
    eval->add_option("--as", as, "output form")->check(CLI::IsMember({"a-image", "mould", "json"}));

    std::string op;
    std::vector<std::string> files;
    std::optional<int> cap;
    auto* mould = app.add_subcommand("mould", "mould operations on JSON files");
    mould->add_option("op", op, "operation")
        ->required()
        ->check(CLI::IsMember({"ari", "swap", "push", "alternal", "singular", "render"}));
    mould->add_option("files", files, "mould JSON files")->required();
    mould->add_option("--cap", cap, "depth cap for ari");

    std::optional<int> weight;
    int depth = 2;
    bool lift = false;
    bool compare = false;
    std::string sweep;
    auto* rel = app.add_subcommand("relations", "relation kernels among the h elements");
    rel->add_option("--weight", weight, "weight n");
    rel->add_option("--depth", depth, "depth 2 or 3")->check(CLI::IsMember({2, 3}));
    rel->add_flag("--lift", lift, "lift depth-3 relations into triple eps-brackets");
    rel->add_option("--sweep", sweep, "weight range A..B");
    rel->add_flag("--compare", compare, "compare the weight-16 lift with the reference coefficients");
    rel->add_option("--json", json_path, "write certificates as JSON");

    int span_weight = 0;
    auto* span = app.add_subcommand("span", "depth-3 bialternal dimension versus the rank of ari(U,ari(U,U))");
    span->add_option("--weight", span_weight, "weight n (mould degree n-3)")->required();

    std::string input;
    std::vector<CLI::App*> bridge;
    for (const char* verb : {"ma", "da", "Da", "psi"}) {
        auto* sc = app.add_subcommand(verb, std::string(verb) == "psi" ? "Psi of a derivation (expression or JSON)"
                                                                        : std::string(verb) + " of an NcPoly JSON file");
        sc->add_option("input", input)->required();
        bridge.push_back(sc);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(suite, json_path);
        if (*eval) return cmd_eval(expr, as);
        if (*mould) return cmd_mould(op, files, cap);
        if (*rel) return cmd_relations(weight, depth, lift, sweep, compare, json_path);
        if (*span) return cmd_span(span_weight);
        for (auto* sc : bridge)
            if (*sc) return cmd_bridge(sc->get_name(), input);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
