// Command-line surface: every pipeline stage, batch-style, with either
// the visual layouts (default) or JSON (--json). Inputs are echoed into
// the report; timing goes to stderr so identical invocations print
// byte-identical stdout.

#include <qtcat/json_io.hpp>
#include <qtcat/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qtcat;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        std::cerr << "elapsed_ms=" << ms << "\n";
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Tableau load_tableau(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tableau file: " + path);
    Json j = Json::parse(in);
    return tableau_from_json(j);
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

std::string diagram_line(const LatticeDiagram& L) { return to_string(L); }

std::string alternant_lines(const Alternant& f) {
    if (f.is_zero()) return "  0\n";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        std::string c = pretty_fraction(it->second);
        if (!c.empty() && c[0] != '-') c = "+" + c;
        out += "  " + c + " * " + diagram_line(it->first) + "\n";
    }
    return out;
}

EConvention parse_convention(const std::string& s) {
    if (s == "formal") return EConvention::formal;
    if (s == "analytic") return EConvention::analytic;
    throw CLI::ValidationError("--convention", "must be formal or analytic");
}

FStrategy parse_strategy(const std::string& s) {
    if (s == "determinant") return FStrategy::determinant;
    if (s == "injective") return FStrategy::injective;
    throw CLI::ValidationError("--strategy", "must be determinant or injective");
}

int cmd_catalan(int n, bool json) {
    Timer timer;
    BivariatePolynomial c = qt_catalan_tilde(n);
    if (json) {
        Json report;
        report["command"] = "catalan";
        report["inputs"] = Json{{"n", n}};
        report["outputs"] = Json{{"polynomial", to_json(c)},
                                 {"total", c.evaluate_at_one().str()}};
        emit(report);
        return 0;
    }
    std::cout << "coefficients of the (q,t)-Catalan polynomial, n=" << n << "\n";
    for (const auto& [key, coeff] : c.coefficients())
        std::cout << "  q^" << key.first << " t^" << key.second << " : " << coeff
                  << "\n";
    std::cout << "total at q=t=1: " << c.evaluate_at_one() << "\n";
    return 0;
}

int cmd_dyck_stats(const std::vector<int>& g, bool json) {
    Timer timer;
    DyckSequence d(g);
    auto [mu, lambda] = d.to_partitions();
    if (json) {
        Json report;
        report["command"] = "dyck stats";
        report["inputs"] = Json{{"g", g}};
        report["outputs"] = Json{{"area", d.area()},
                                 {"coarea", d.coarea()},
                                 {"bounce", d.bounce()},
                                 {"mu", to_json(mu)},
                                 {"lambda", to_json(lambda)}};
        emit(report);
        return 0;
    }
    std::cout << "area=" << d.area() << " coarea=" << d.coarea()
              << " bounce=" << d.bounce() << "\n";
    std::cout << "mu =";
    for (int p : mu.parts()) std::cout << " " << p;
    std::cout << "\nlambda =";
    for (int p : lambda.parts()) std::cout << " " << p;
    std::cout << "\n";
    return 0;
}

int cmd_fram(const std::vector<int>& mu_in, const std::vector<int>& s, bool json) {
    Timer timer;
    Partition mu(mu_in);
    Tableau t = fram(mu, s);
    if (json) {
        Json report;
        report["command"] = "fram";
        report["inputs"] = Json{{"mu", mu_in}, {"s", s}};
        report["outputs"] = Json{{"tableau", to_json(t)}};
        emit(report);
        return 0;
    }
    std::cout << render(t);
    return 0;
}

int cmd_insert(const std::string& path, int x, bool json) {
    Timer timer;
    Tableau t = load_tableau(path);
    Tableau result = insert(t, x);
    if (json) {
        Json report;
        report["command"] = "insert";
        report["inputs"] = Json{{"tableau", to_json(t)}, {"x", x}};
        report["outputs"] = Json{{"tableau", to_json(result)}};
        emit(report);
        return 0;
    }
    std::cout << render(result);
    return 0;
}

int cmd_remove(const std::string& path, bool json) {
    Timer timer;
    Tableau t = load_tableau(path);
    auto [x, rest] = remove_min(t);
    if (json) {
        Json report;
        report["command"] = "remove";
        report["inputs"] = Json{{"tableau", to_json(t)}};
        report["outputs"] = Json{{"x", x}, {"tableau", to_json(rest)}};
        emit(report);
        return 0;
    }
    std::cout << "removed x=" << x << "\n" << render(rest);
    return 0;
}

int cmd_biject(const std::vector<int>& lambda_in, const std::string& path, bool json) {
    Timer timer;
    if (!lambda_in.empty()) {
        Partition lambda(lambda_in);
        Tableau t = partition_to_tableau(lambda);
        bool roundtrip = tableau_to_partition(t) == lambda;
        if (json) {
            Json report;
            report["command"] = "biject";
            report["inputs"] = Json{{"lambda", lambda_in}};
            report["outputs"] =
                Json{{"tableau", to_json(t)}, {"roundtrip", roundtrip}};
            emit(report);
        } else {
            std::cout << render(t);
            std::cout << "roundtrip " << (roundtrip ? "ok" : "MISMATCH") << "\n";
        }
        return roundtrip ? 0 : 1;
    }
    Tableau t = load_tableau(path);
    Partition lambda = tableau_to_partition(t);
    bool roundtrip = partition_to_tableau(lambda) == t;
    if (json) {
        Json report;
        report["command"] = "biject";
        report["inputs"] = Json{{"tableau", to_json(t)}};
        report["outputs"] =
            Json{{"lambda", to_json(lambda)}, {"roundtrip", roundtrip}};
        emit(report);
    } else {
        std::cout << "lambda =";
        for (int p : lambda.parts()) std::cout << " " << p;
        std::cout << "\nroundtrip " << (roundtrip ? "ok" : "MISMATCH") << "\n";
    }
    return roundtrip ? 0 : 1;
}

int cmd_basis(int n, int k, int l, const std::string& convention, bool json) {
    Timer timer;
    auto elements = basis_for(n, k, l, parse_convention(convention));
    Int dim = dim_A(n, k, l);
    if (json) {
        Json report;
        report["command"] = "basis";
        report["inputs"] =
            Json{{"n", n}, {"k", k}, {"l", l}, {"convention", convention}};
        report["outputs"] = basis_report(n, k, l, elements, dim);
        emit(report);
        return 0;
    }
    std::cout << "component (n,k,l)=(" << n << "," << k << "," << l
              << "), dim=" << dim << ", elements=" << elements.size() << "\n";
    for (const BasisElement& e : elements) {
        std::cout << "lambda =";
        for (int p : e.lambda.parts()) std::cout << " " << p;
        std::cout << "\n" << render(e.tableau);
        std::cout << "leading " << diagram_line(e.leading) << ", "
                  << e.alternant.term_count() << " terms\n\n";
    }
    return 0;
}

int cmd_apply(const std::vector<int>& column, int n, const std::string& strategy,
              const std::string& convention, bool json) {
    Timer timer;
    auto t = ColumnSpec::from_decreasing(column);
    Alternant result = apply_F_column(t, delta_n(n), parse_convention(convention),
                                      parse_strategy(strategy));
    if (json) {
        Json report;
        report["command"] = "apply";
        report["inputs"] = Json{{"column", column},
                                {"n", n},
                                {"strategy", strategy},
                                {"convention", convention}};
        report["outputs"] = Json{{"alternant", to_json(result)},
                                 {"term_count", result.term_count()}};
        emit(report);
        return 0;
    }
    std::cout << "F applied to the n=" << n << " staircase ("
              << result.term_count() << " terms):\n"
              << alternant_lines(result);
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, bool json) {
    Timer timer;
    bool all_pass = true;
    Json results = Json::array();
    for (int id : criteria_for_suite(suite)) {
        CriterionResult r = run_criterion(id, max_n);
        all_pass = all_pass && r.pass;
        if (json) {
            Json entry;
            entry["criterion"] = r.id;
            entry["name"] = r.name;
            entry["pass"] = r.pass;
            entry["detail"] = r.detail;
            results.push_back(std::move(entry));
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": "
                      << r.name << " [" << r.detail << "]\n";
        }
        std::cerr << "criterion " << r.id << " elapsed_ms=" << r.ms << "\n";
    }
    if (json) {
        Json report;
        report["command"] = "verify";
        report["inputs"] = Json{{"suite", suite.empty() ? Json(nullptr) : Json(suite)},
                                {"max_n", max_n}};
        report["outputs"] = Json{{"results", std::move(results)}, {"pass", all_pass}};
        emit(report);
    } else {
        std::cout << (all_pass ? "all criteria passed" : "SOME CRITERIA FAILED")
                  << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for diagonally alternating harmonics:\n"
                 "lattice-diagram operators, framed tableaux, (q,t)-Catalan counts"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --json after the subcommand as well
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    auto* catalan = app.add_subcommand("catalan", "(q,t)-Catalan coefficient table");
    int catalan_n = 0;
    catalan->add_option("n", catalan_n, "path length")->required()->check(CLI::PositiveNumber);

    auto* dyck = app.add_subcommand("dyck", "Dyck path utilities");
    dyck->require_subcommand(1);
    auto* dyck_stats = dyck->add_subcommand("stats", "area/coarea/bounce/partitions");
    std::vector<int> dyck_g;
    dyck_stats->add_option("g", dyck_g, "Dyck sequence entries")->required()->expected(-1);

    auto* fram_cmd = app.add_subcommand("fram", "build the framed tableau of (mu, s)");
    std::vector<int> fram_mu, fram_s;
    fram_cmd->add_option("--mu", fram_mu, "shape parts")->required()->expected(-1);
    fram_cmd->add_option("--s", fram_s, "row sums")->required()->expected(-1);

    auto* insert_cmd = app.add_subcommand("insert", "insert an entry into a framed tableau");
    std::string insert_file;
    int insert_x = 0;
    insert_cmd->add_option("--tableau", insert_file, "tableau JSON file")->required();
    insert_cmd->add_option("--x", insert_x, "entry to insert")->required();

    auto* remove_cmd = app.add_subcommand("remove", "remove the smallest entry");
    std::string remove_file;
    remove_cmd->add_option("--tableau", remove_file, "tableau JSON file")->required();

    auto* biject_cmd =
        app.add_subcommand("biject", "partition <-> framed tableau correspondence");
    std::vector<int> biject_lambda;
    std::string biject_file;
    auto* lam_opt = biject_cmd->add_option("--lambda", biject_lambda, "partition parts")
                        ->expected(-1);
    auto* tab_opt = biject_cmd->add_option("--tableau", biject_file, "tableau JSON file");
    lam_opt->excludes(tab_opt);

    auto* basis_cmd = app.add_subcommand("basis", "explicit basis of one component");
    int basis_n = 0, basis_k = 0, basis_l = 0;
    std::string basis_convention = "formal";
    basis_cmd->add_option("n", basis_n)->required()->check(CLI::PositiveNumber);
    basis_cmd->add_option("k", basis_k)->required()->check(CLI::PositiveNumber);
    basis_cmd->add_option("l", basis_l)->required()->check(CLI::PositiveNumber);
    basis_cmd->add_option("--convention", basis_convention, "formal|analytic");

    auto* apply_cmd = app.add_subcommand("apply", "apply a column operator to a staircase");
    std::vector<int> apply_column;
    int apply_n = 0;
    std::string apply_strategy = "injective", apply_convention = "formal";
    apply_cmd->add_option("--column", apply_column, "column entries, decreasing")
        ->required()
        ->expected(-1);
    apply_cmd->add_option("--n", apply_n, "staircase size")->required()->check(CLI::PositiveNumber);
    apply_cmd->add_option("--strategy", apply_strategy, "determinant|injective");
    apply_cmd->add_option("--convention", apply_convention, "formal|analytic");

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
    std::string verify_suite;
    int verify_max_n = 0;
    verify_cmd->add_option("--suite", verify_suite, "thmFop|leading|bijection|oracle")
        ->check(CLI::IsMember({"thmFop", "leading", "bijection", "oracle"}));
    verify_cmd->add_option("--max-n", verify_max_n, "cap the scan ranges")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
    }

    try {
        if (*catalan) return cmd_catalan(catalan_n, json);
        if (*dyck_stats) return cmd_dyck_stats(dyck_g, json);
        if (*fram_cmd) return cmd_fram(fram_mu, fram_s, json);
        if (*insert_cmd) return cmd_insert(insert_file, insert_x, json);
        if (*remove_cmd) return cmd_remove(remove_file, json);
        if (*biject_cmd) {
            if (biject_lambda.empty() && biject_file.empty()) {
                std::cerr << "biject: provide --lambda or --tableau\n";
                return 2;
            }
            return cmd_biject(biject_lambda, biject_file, json);
        }
        if (*basis_cmd) return cmd_basis(basis_n, basis_k, basis_l, basis_convention, json);
        if (*apply_cmd)
            return cmd_apply(apply_column, apply_n, apply_strategy, apply_convention, json);
        if (*verify_cmd) return cmd_verify(verify_suite, verify_max_n, json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
