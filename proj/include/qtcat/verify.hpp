#pragma once

#include <qtcat/basis.hpp>
#include <qtcat/dyck.hpp>
#include <qtcat/framed.hpp>
#include <qtcat/operators.hpp>
#include <qtcat/oracle.hpp>

#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qtcat {

// The verification suites: each criterion checks one contract of the
// library at full precision and reports pass/fail with a short account
// of what was covered. A criterion with a stated time budget also fails
// when it blows that budget.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

namespace verify_detail {

class Check {
public:
    void require(bool ok, const std::string& what) {
        ++checked_;
        if (!ok && failures_ < 5) {
            if (!detail_.empty()) detail_ += "; ";
            detail_ += "FAILED: " + what;
        }
        if (!ok) ++failures_;
    }

    void note(const std::string& s) {
        if (!detail_.empty()) detail_ += "; ";
        detail_ += s;
    }

    bool ok() const { return failures_ == 0; }
    long long checked() const { return checked_; }
    std::string detail() const { return detail_; }

private:
    long long checked_ = 0;
    long long failures_ = 0;
    std::string detail_;
};

inline int cap(int spec_value, int max_n) {
    return max_n > 0 ? std::min(spec_value, max_n) : spec_value;
}

// strictly decreasing columns with height <= max_height, weight <= max_weight
inline std::vector<std::vector<int>> decreasing_columns(int max_height, int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;  // increasing while building
    auto rec = [&](auto&& self, int min_next, int weight_left) -> void {
        if (!cur.empty()) {
            std::vector<int> dec(cur.rbegin(), cur.rend());
            out.push_back(std::move(dec));
        }
        if (static_cast<int>(cur.size()) == max_height) return;
        for (int v = min_next; v <= weight_left; ++v) {
            cur.push_back(v);
            self(self, v + 1, weight_left - v);
            cur.pop_back();
        }
    };
    rec(rec, 1, max_weight);
    return out;
}

inline Alternant worked_column_expansion() {
    Alternant f;
    f.add_term(LatticeDiagram({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 1}}), 1);
    f.add_term(LatticeDiagram({{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}}), -3);
    f.add_term(LatticeDiagram({{0, 0}, {1, 0}, {4, 0}, {0, 1}, {1, 1}}), -3);
    f.add_term(LatticeDiagram({{0, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}}), 1);
    f.add_term(LatticeDiagram({{0, 0}, {1, 0}, {3, 0}, {0, 1}, {2, 1}}), 2);
    return f;
}

// F_t as a genuine differential operator: the alternating sum over S_k
// of chained single-E differentiations.
inline MultivariatePolynomial diff_F_column(const ColumnSpec& t,
                                            const MultivariatePolynomial& P) {
    const int k = t.height();
    MultivariatePolynomial out(P.n());
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i) w[i] = i + 1;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (w[i] > w[j]) ++inv;
        MultivariatePolynomial cur = P;
        for (int i = 1; i <= k; ++i) {
            int amount = t.increasing()[i - 1] + (k - i + 1) - w[k - i];
            cur = diff_E(amount, cur);
        }
        out += cur * Rat(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline MultivariatePolynomial diff_F_tableau(const Tableau& T,
                                             const MultivariatePolynomial& P) {
    MultivariatePolynomial cur = P;
    const int width = T.shape().part(1);
    for (int j = 1; j <= width; ++j)
        cur = diff_F_column(ColumnSpec::from_increasing(T.column(j)), cur);
    return cur;
}

}  // namespace verify_detail

// 1. Statistics of the worked Dyck path.
inline void criterion_dyck_stats(verify_detail::Check& c) {
    DyckSequence g({0, 0, 1, 2, 0, 1, 1, 2, 3, 0});
    c.require(g.area() == 10, "area = 10");
    c.require(g.coarea() == 35, "coarea = 35");
    c.require(g.bounce() == 19, "bounce = 19");
    auto [mu, lambda] = g.to_partitions();
    c.require(mu == Partition({9, 5, 5, 5, 4, 4, 1, 1, 1}), "mu");
    c.require(lambda == Partition({9, 6, 6, 6, 4, 1, 1, 1, 1}), "lambda");
}

// 2. Path counts match the Catalan numbers, by enumeration and by
//    totalling the (q,t) polynomial.
inline void criterion_catalan_counts(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(10, max_n);
    for (int n = 1; n <= top; ++n) {
        long long count = 0;
        for (const auto& g : DyckRange(n)) {
            (void)g;
            ++count;
        }
        c.require(Int(count) == catalan_number(n),
                  "path count at n=" + std::to_string(n));
        c.require(qt_catalan_tilde(n).evaluate_at_one() == catalan_number(n),
                  "coefficient total at n=" + std::to_string(n));
    }
    if (top >= 10) c.require(catalan_number(10) == 16796, "C_10 = 16796");
}

// 3. Below the diagonal the (q,t) coefficients are partition counts.
inline void criterion_qt_coefficient_law(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(10, max_n);
    for (int n = 1; n <= top; ++n) {
        BivariatePolynomial poly = qt_catalan_tilde(n);
        for (int k = 0; k < n; ++k)
            for (int l = 1; l <= poly.max_t(); ++l)
                c.require(poly.coefficient(k, l) == count_partitions(k, l),
                          "coefficient (" + std::to_string(k) + "," + std::to_string(l) +
                              ") at n=" + std::to_string(n));
    }
}

// 4. The worked five-term column expansion, both strategies.
inline void criterion_worked_column(verify_detail::Check& c) {
    const Alternant want = verify_detail::worked_column_expansion();
    auto t = ColumnSpec::from_decreasing({3, 1});
    c.require(apply_F_column(t, delta_n(5), EConvention::formal,
                             FStrategy::determinant) == want,
              "determinant strategy");
    c.require(apply_F_column(t, delta_n(5), EConvention::formal,
                             FStrategy::injective) == want,
              "injective strategy");
}

// 5. Determinant and injective evaluations agree for every strictly
//    decreasing column of height <= 3 and weight <= 8 on staircases.
inline void criterion_strategy_equivalence(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(6, max_n);
    long long cases = 0;
    for (const auto& dec : verify_detail::decreasing_columns(3, 8)) {
        auto t = ColumnSpec::from_decreasing(dec);
        for (int n = 1; n <= top; ++n) {
            for (auto conv : {EConvention::formal, EConvention::analytic}) {
                Alternant det = apply_F_column(t, delta_n(n), conv, FStrategy::determinant);
                Alternant inj = apply_F_column(t, delta_n(n), conv, FStrategy::injective);
                std::ostringstream what;
                if (det != inj) {
                    what << "column (";
                    for (std::size_t i = 0; i < dec.size(); ++i)
                        what << (i ? "," : "") << dec[i];
                    what << ") at n=" << n;
                }
                c.require(det == inj, what.str());
                ++cases;
            }
        }
    }
    c.require(cases >= 200, "at least 200 cases exercised");
    c.note(std::to_string(cases) + " cases");
}

// 6. Columns with an adjacent pair annihilate.
inline void criterion_vanishing(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(6, max_n);
    for (int i = 1; i <= 4; ++i) {
        auto t = ColumnSpec::from_decreasing({i + 1, i});
        for (int n = 1; n <= top; ++n)
            for (auto strat : {FStrategy::determinant, FStrategy::injective})
                c.require(apply_F_column(t, delta_n(n), EConvention::formal, strat)
                              .is_zero(),
                          "column (" + std::to_string(i + 1) + "," + std::to_string(i) +
                              ") at n=" + std::to_string(n));
    }
}

// 7. The framing worked example and the printed framed / non-framed tableaux.
inline void criterion_framing_examples(verify_detail::Check& c) {
    Tableau big({{1, 1, 2, 2, 2, 4, 5, 5}, {3, 3, 4, 4, 4}, {5, 5, 7, 7}, {7, 7}});
    c.require(fram(Partition({8, 5, 4, 2}), {22, 18, 24, 14}) == big,
              "framing of ((8,5,4,2),(22,18,24,14))");

    const std::vector<Tableau> five = {
        Tableau({{1, 2, 2}, {3, 4}, {6}}), Tableau({{1, 1, 4}, {3, 3}, {6}}),
        Tableau({{1, 1, 2}, {4, 4}, {6}}), Tableau({{1, 1, 2}, {3, 6}, {5}}),
        Tableau({{1, 4, 5}, {3, 7}, {5}})};
    for (std::size_t i = 0; i < five.size(); ++i)
        c.require(is_framed(five[i]), "framed example #" + std::to_string(i + 1));
    c.require(!is_framed(Tableau({{1, 2, 6}, {4, 5}})), "printed non-example");
}

// 8. Insertion and removal worked examples.
inline void criterion_insert_remove_examples(verify_detail::Check& c) {
    c.require(insert(Tableau({{2, 5, 6, 6}, {4}}), 1) == Tableau({{1, 2, 7, 7}, {3, 4}}),
              "insertion example");
    auto [x, rest] = remove_min(Tableau({{1, 1}, {4, 5}, {6}}));
    c.require(x == 1, "removal extracts 1");
    c.require(rest == Tableau({{1, 6}, {3}, {6}}), "removal remainder");
}

// 9. The bijection is exact for every partition of weight <= 12, with
//    the insert/remove roundtrip at every intermediate step.
inline void criterion_bijection_exhaustion(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(12, max_n);
    long long partitions_checked = 0;
    for (int k = 0; k <= top; ++k) {
        std::map<int, long long> by_length;
        for (const Partition& lam : partitions_of(k)) {
            Tableau t;
            for (int part : lam.parts()) {
                Tableau next = insert(t, part);
                auto [back, prev] = remove_min(next);
                c.require(back == part && prev == t, "intermediate roundtrip");
                t = std::move(next);
            }
            c.require(t.weight() == lam.weight(), "weight law");
            c.require(t.cell_count() == lam.length(), "cell-count law");
            c.require(tableau_to_partition(t) == lam, "full roundtrip");
            ++by_length[lam.length()];
            ++partitions_checked;
        }
        for (const auto& [l, cnt] : by_length)
            if (l > 0)
                c.require(Int(cnt) == count_partitions(k, l),
                          "family size at (" + std::to_string(k) + "," +
                              std::to_string(l) + ")");
    }
    c.note(std::to_string(partitions_checked) + " partitions");
}

// 10. Shift-conjugation identities for insertion and removal on every
//     framed tableau of weight <= 10.
inline void criterion_reduction_identity(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(10, max_n);
    long long cases = 0;
    for (int k = 1; k <= top; ++k) {
        for (int l = 1; l <= k; ++l) {
            for (const Tableau& T : enumerate_framed(k, l)) {
                const int min_entry = T.at(1, 1);
                for (int x = 1; x + 1 <= min_entry; ++x) {
                    c.require(insert(T, x + 1) == shift(insert(shift(T, -x), 1), x),
                              "insert identity");
                    ++cases;
                }
                if (min_entry >= 2) {
                    auto [a, rest] = remove_min(T);
                    auto [b, rest_shifted] = remove_min(shift(T, -(min_entry - 1)));
                    c.require(a == b + min_entry - 1 &&
                                  rest == shift(rest_shifted, min_entry - 1),
                              "remove identity");
                    ++cases;
                }
            }
        }
    }
    c.note(std::to_string(cases) + " identities");
}

// 11. Leading diagrams of basis elements equal the prediction with
//     coefficient +1 and are pairwise distinct within each component.
inline void criterion_leading_law(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(8, max_n);
    for (int n = 2; n <= top; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int l = 1; l <= k; ++l) {
                std::set<LatticeDiagram, DiagramPrec> leads;
                for (const BasisElement& e : basis_for(n, k, l)) {
                    auto lead = leading_diagram(e.alternant);
                    auto want = predicted_leading(e.tableau, n);
                    bool good = lead.has_value() && want.has_value() &&
                                lead->first == *want && lead->second == 1;
                    c.require(good, "element at (n,k,l)=(" + std::to_string(n) + "," +
                                        std::to_string(k) + "," + std::to_string(l) + ")");
                    if (lead) leads.insert(lead->first);
                }
                c.require(Int(leads.size()) == count_partitions(k, l),
                          "distinct leadings at (" + std::to_string(n) + "," +
                              std::to_string(k) + "," + std::to_string(l) + ")");
            }
        }
    }
}

// 12. The differential pipeline agrees with the analytic operator
//     algebra for E, E-compositions, columns and tableaux.
inline void criterion_oracle_equivalence(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(5, max_n);
    for (int n = 1; n <= top; ++n) {
        const MultivariatePolynomial start = expand_delta(staircase_diagram(n));

        for (int a = 1; a <= 4; ++a) {
            Alternant algebra = apply_E(a, delta_n(n), EConvention::analytic);
            c.require(to_delta_basis(diff_E(a, start)) == algebra,
                      "single E_" + std::to_string(a) + " at n=" + std::to_string(n));
        }

        // ordered compositions of weight <= 4, at least two parts
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left) -> void {
            if (cur.size() >= 2) comps.push_back(cur);
            for (int v = 1; v <= left; ++v) {
                cur.push_back(v);
                self(self, left - v);
                cur.pop_back();
            }
        };
        rec(rec, 4);
        for (const auto& comp : comps) {
            Composition a(comp);
            Alternant algebra = apply_E_composition(a, delta_n(n), EConvention::analytic);
            MultivariatePolynomial direct = start;
            for (auto it = comp.rbegin(); it != comp.rend(); ++it)
                direct = diff_E(*it, direct);
            c.require(to_delta_basis(direct) == algebra,
                      "composition at n=" + std::to_string(n));
        }

        for (const auto& dec : verify_detail::decreasing_columns(2, 4)) {
            auto t = ColumnSpec::from_decreasing(dec);
            Alternant algebra = apply_F_column(t, delta_n(n), EConvention::analytic);
            MultivariatePolynomial direct = verify_detail::diff_F_column(t, start);
            c.require(to_delta_basis(direct) == algebra,
                      "column at n=" + std::to_string(n));
        }

        for (int k = 1; k <= 4; ++k) {
            for (const Partition& lam : partitions_of(k)) {
                Tableau T = partition_to_tableau(lam);
                Alternant algebra = apply_F_tableau(T, delta_n(n), EConvention::analytic);
                MultivariatePolynomial direct = verify_detail::diff_F_tableau(T, start);
                c.require(to_delta_basis(direct) == algebra,
                          "tableau operator at n=" + std::to_string(n));
            }
        }
    }
}

// 13. Basis polynomials are alternating diagonal harmonics of full rank,
//     and at n=4 the produced dimensions tile the Catalan count on the
//     guaranteed slices. Membership in the harmonic space is a statement
//     about genuine operator images, so the elements are built under the
//     analytic convention here.
inline void criterion_oracle_membership(verify_detail::Check& c, int max_n) {
    const int top = verify_detail::cap(4, max_n);
    for (int n = 2; n <= top; ++n) {
        Int produced_total = 0;
        for (int k = 1; k < n; ++k) {
            for (int l = 1; l <= k; ++l) {
                std::vector<Alternant> rows;
                for (const BasisElement& e : basis_for(n, k, l, EConvention::analytic)) {
                    MultivariatePolynomial P = expand_alternant(e.alternant);
                    c.require(is_alternating(P), "alternating at n=" + std::to_string(n));
                    c.require(is_harmonic(P), "harmonic at n=" + std::to_string(n));
                    rows.push_back(e.alternant);
                }
                c.require(Int(exact_rank(rows)) == count_partitions(k, l),
                          "rank at (" + std::to_string(n) + "," + std::to_string(k) +
                              "," + std::to_string(l) + ")");
                c.require(Int(rows.size()) == dim_A(n, k, l),
                          "dimension slice at (" + std::to_string(n) + "," +
                              std::to_string(k) + "," + std::to_string(l) + ")");
                produced_total += Int(rows.size());
            }
        }
        if (n == 4)
            c.require(produced_total <= catalan_number(4),
                      "produced dimensions bounded by C_4");
    }
}

inline CriterionResult run_criterion(int id, int max_n = 0) {
    static const char* names[] = {
        "",
        "dyck statistics on the worked path",
        "catalan counts by enumeration",
        "qt-coefficient law below the diagonal",
        "worked five-term column expansion",
        "determinant/injective strategy equivalence",
        "vanishing of adjacent-pair columns",
        "framing worked examples",
        "insertion and removal worked examples",
        "partition bijection exhaustion",
        "shift-conjugation reduction identities",
        "leading-diagram law for basis elements",
        "oracle pipeline equivalence",
        "oracle membership and rank",
    };
    // stated budgets in milliseconds; 0 = none
    static const double budgets[] = {0,    1.0,    5000.0,  10000.0, 10.0,
                                     60000.0, 0,      0,       0,       30000.0,
                                     0,    120000.0, 120000.0, 120000.0};

    verify_detail::Check c;
    auto started = std::chrono::steady_clock::now();
    switch (id) {
        case 1: criterion_dyck_stats(c); break;
        case 2: criterion_catalan_counts(c, max_n); break;
        case 3: criterion_qt_coefficient_law(c, max_n); break;
        case 4: criterion_worked_column(c); break;
        case 5: criterion_strategy_equivalence(c, max_n); break;
        case 6: criterion_vanishing(c, max_n); break;
        case 7: criterion_framing_examples(c); break;
        case 8: criterion_insert_remove_examples(c); break;
        case 9: criterion_bijection_exhaustion(c, max_n); break;
        case 10: criterion_reduction_identity(c, max_n); break;
        case 11: criterion_leading_law(c, max_n); break;
        case 12: criterion_oracle_equivalence(c, max_n); break;
        case 13: criterion_oracle_membership(c, max_n); break;
        default: throw std::invalid_argument("unknown criterion id");
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();

    CriterionResult r;
    r.id = id;
    r.name = names[id];
    r.ms = elapsed;
    r.pass = c.ok();
    if (budgets[id] > 0 && elapsed >= budgets[id]) {
        r.pass = false;
        c.note("time budget exceeded");
    }
    std::ostringstream d;
    d << c.checked() << " checks";
    if (!c.detail().empty()) d << "; " << c.detail();
    r.detail = d.str();
    return r;
}

inline std::vector<int> criteria_for_suite(const std::string& suite) {
    if (suite.empty()) return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    if (suite == "thmFop") return {4, 5, 6};
    if (suite == "leading") return {11};
    if (suite == "bijection") return {7, 8, 9, 10};
    if (suite == "oracle") return {12, 13};
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace qtcat
