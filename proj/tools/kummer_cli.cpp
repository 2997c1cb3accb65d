#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kummer/construct.hpp"
#include "kummer/graph.hpp"
#include "kummer/kummer.hpp"
#include "kummer/search.hpp"

using json = nlohmann::ordered_json;
using namespace kummer;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

struct BasisDocument {
    AlgebraShape shape;
    std::vector<ExponentVector> basis;
};

json to_json(const BasisDocument& doc) {
    json j;
    j["d"] = doc.shape.degree;
    j["n"] = doc.shape.factors;
    j["basis"] = json::array();
    for (const auto& v : doc.basis) j["basis"].push_back(v.entries);
    return j;
}

BasisDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    AlgebraShape shape(j.at("d").get<int>(), j.at("n").get<int>());
    std::vector<ExponentVector> basis;
    for (const auto& row : j.at("basis"))
        basis.push_back(ExponentVector(row.get<std::vector<int>>()));
    for (const auto& v : basis) check_vector(shape, v);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t k = i + 1; k < basis.size(); ++k)
            if (basis[i] == basis[k])
                throw std::runtime_error("duplicate basis vector in " + path);
    return BasisDocument{shape, std::move(basis)};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

json violation_json(const KummerViolation& v) {
    json j;
    j["subset"] = json::array();
    for (const auto& e : v.subset) j["subset"].push_back(e.entries);
    j["multiplicities"] = v.multiplicities;
    j["coefficient"] = v.coefficient.coeffs();
    j["exponent"] = v.exponent.entries;
    return j;
}

int env_threads() {
    if (const char* s = std::getenv("KUMMER_THREADS")) {
        const int t = std::atoi(s);
        if (t > 0) return t;
    }
    return 0;
}

int run_construct(int d, int n, const std::string& out_path) {
    AlgebraShape shape(d, n);
    BasisDocument doc{shape, standard_basis(shape)};
    write_file(out_path, to_json(doc).dump(2) + "\n");
    std::cout << "wrote " << doc.basis.size() << " basis vectors to " << out_path
              << "\n";
    return kExitOk;
}

int run_check(const std::string& path, bool as_json) {
    const auto doc = load_document(path);
    const auto violation = is_kummer_set(doc.shape, doc.basis);
    if (!violation) {
        if (as_json)
            std::cout << json{{"kummer", true}}.dump(2) << "\n";
        else
            std::cout << "Kummer: yes (" << doc.basis.size() << " vectors)\n";
        return kExitOk;
    }
    if (as_json) {
        json j{{"kummer", false}};
        j["violation"] = violation_json(*violation);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Kummer: no\n";
        std::cout << "violating multiset:";
        for (size_t i = 0; i < violation->subset.size(); ++i)
            std::cout << " " << to_string(violation->subset[i]) << "^"
                      << violation->multiplicities[i];
        std::cout << "\ncoefficient c = " << violation->coefficient.to_string()
                  << ", exponent " << to_string(violation->exponent) << "\n";
    }
    return kExitViolation;
}

int run_graph(const std::string& path, const std::string& dot_path) {
    const auto doc = load_document(path);
    const auto g = build_graph(doc.shape, doc.basis);
    write_file(dot_path, to_dot(g));
    std::cout << "wrote DOT graph with " << g.size() << " vertices to " << dot_path
              << "\n";
    return kExitOk;
}

int run_coeff(const std::string& path, const std::string& mults) {
    const auto doc = load_document(path);
    MultisetSpec spec;
    spec.elements = doc.basis;
    std::stringstream ss(mults);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.multiplicities.push_back(std::stoi(tok));
    const auto c = symmetric_coefficient(doc.shape, spec);
    std::vector<std::pair<ExponentVector, int>> items;
    for (size_t i = 0; i < spec.elements.size(); ++i)
        items.emplace_back(spec.elements[i], spec.multiplicities[i]);
    const auto exponent = product_exponent(doc.shape, items);
    std::cout << "c = " << c.to_string() << "  (coefficients:";
    for (long long v : c.coeffs()) std::cout << " " << v;
    std::cout << ")\nproduct exponent = " << to_string(exponent)
              << (exponent.is_zero() ? " (scalar)" : "") << "\n";
    return kExitOk;
}

int run_search(int d, int n, bool no_symmetry, bool deterministic,
               std::optional<double> timeout, const std::string& json_path) {
    AlgebraShape shape(d, n);
    SearchConfig config;
    config.use_symmetry = !no_symmetry;
    config.deterministic = deterministic;
    config.time_budget_seconds = timeout;
    config.threads = env_threads();
    const auto result = max_kummer_dimension(shape, config);

    std::cout << "max = " << result.max_size << (result.complete ? "" : " (partial)")
              << "\nwitness:";
    for (const auto& v : result.witness) std::cout << " " << to_string(v);
    std::cout << "\nnodes = " << result.explored_nodes
              << ", elapsed = " << result.elapsed_seconds << " s\n";

    if (!json_path.empty()) {
        json j;
        j["d"] = d;
        j["n"] = n;
        j["max_size"] = result.max_size;
        j["complete"] = result.complete;
        j["witness"] = json::array();
        for (const auto& v : result.witness) j["witness"].push_back(v.entries);
        j["explored_nodes"] = result.explored_nodes;
        j["elapsed_seconds"] = result.elapsed_seconds;
        write_file(json_path, j.dump(2) + "\n");
    }
    return result.complete ? kExitOk : kExitIncomplete;
}

int run_verify_lemmas(int d, int n) {
    if (d != 4) {
        std::cerr << "verify-lemmas: graphs require d=4\n";
        return kExitUsage;
    }
    if (n != 1) {
        std::cerr << "verify-lemmas: exhaustive enumeration supports n=1 only\n";
        return kExitUsage;
    }
    AlgebraShape shape(d, n);
    const auto sets = enumerate_maximal_sets(shape);

    struct Row {
        const char* name;
        std::uint64_t checks = 0, violations = 0;
    };
    Row rows[6] = {{"commuting pairs"},      {"anti-commute matching"},
                   {"directed triangles"},   {"cycle lengths and diagonals"},
                   {"forbidden quads"},      {"universal orientation"}};
    for (const auto& basis : sets) {
        const auto g = build_graph(shape, basis);
        ++rows[0].checks;
        if (check_no_commuting(g)) ++rows[0].violations;
        ++rows[1].checks;
        if (check_anticommute_matching(g)) ++rows[1].violations;
        ++rows[2].checks;
        if (check_no_directed_triangle(g)) ++rows[2].violations;
        ++rows[3].checks;
        if (directed_cycles_ok(g)) ++rows[3].violations;
        ++rows[4].checks;
        if (check_forbidden_quads(g)) ++rows[4].violations;
        ++rows[5].checks;
        if (check_universal_orientation(g)) ++rows[5].violations;
    }
    std::uint64_t total_violations = 0;
    std::cout << "maximal Kummer sets enumerated: " << sets.size() << "\n";
    for (const auto& row : rows) {
        std::cout << row.name << ": " << row.checks << " checks, "
                  << row.violations << " violations\n";
        total_violations += row.violations;
    }
    return total_violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monomial Kummer spaces in tensor products of cyclic algebras"};
    app.require_subcommand(1);

    int d = 4, n = 1;
    std::string file_path, out_path, dot_path, mults, json_path;
    bool as_json = false, no_symmetry = false, deterministic = false,
         exhaustive = false;
    double timeout = 0.0;

    auto* construct = app.add_subcommand("construct", "Write the standard dn+1 basis");
    construct->add_option("--d", d, "degree")->required()->check(CLI::Range(2, 64));
    construct->add_option("--n", n, "factors")->required()->check(CLI::Range(1, 16));
    construct->add_option("--out", out_path, "output JSON path")->required();

    auto* check = app.add_subcommand("check", "Check a basis file for the Kummer property");
    check->add_option("--file", file_path)->required();
    check->add_flag("--json", as_json, "JSON report");

    auto* graph = app.add_subcommand("graph", "Emit the labeled graph as DOT (d=4)");
    graph->add_option("--file", file_path)->required();
    graph->add_option("--dot", dot_path)->required();

    auto* coeff = app.add_subcommand("coeff", "Symmetric-product coefficient of a basis file");
    coeff->add_option("--file", file_path)->required();
    coeff->add_option("--mults", mults, "comma-separated multiplicities")->required();

    auto* search = app.add_subcommand("search", "Maximal monomial Kummer dimension");
    search->add_option("--d", d)->required()->check(CLI::Range(2, 64));
    search->add_option("--n", n)->required()->check(CLI::Range(1, 16));
    search->add_flag("--no-symmetry", no_symmetry);
    search->add_flag("--deterministic", deterministic);
    search->add_option("--timeout", timeout, "seconds")->check(CLI::PositiveNumber);
    search->add_option("--json", json_path, "write result JSON here");

    auto* verify = app.add_subcommand("verify-lemmas",
                                      "Run all graph checkers over every maximal set");
    verify->add_option("--d", d)->required();
    verify->add_option("--n", n)->required();
    verify->add_flag("--exhaustive", exhaustive);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(d, n, out_path);
        if (check->parsed()) return run_check(file_path, as_json);
        if (graph->parsed()) return run_graph(file_path, dot_path);
        if (coeff->parsed()) return run_coeff(file_path, mults);
        if (search->parsed())
            return run_search(d, n, no_symmetry, deterministic,
                              timeout > 0 ? std::optional<double>(timeout)
                                          : std::nullopt,
                              json_path);
        if (verify->parsed()) return run_verify_lemmas(d, n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
