#include <catch2/catch_amalgamated.hpp>

#include <qtcat/basis.hpp>
#include <qtcat/oracle.hpp>

#include <random>

using namespace qtcat;

namespace {

MultivariatePolynomial monomial(int n, const std::vector<int>& e, const Rat& c = 1) {
    MultivariatePolynomial P(n);
    P.add_term(e, c);
    return P;
}

LatticeDiagram random_sorted_diagram(std::mt19937& rng, int n, int max_coord) {
    std::uniform_int_distribution<int> d(0, max_coord);
    while (true) {
        LatticeDiagram L;
        for (int i = 0; i < n; ++i) L.cells.push_back({d(rng), d(rng)});
        auto [sorted, sign] = sort_diagram(L);
        if (sign != 0) return sorted;
    }
}

}  // namespace

TEST_CASE("determinant expansion") {
    SECTION("one cell at the origin is the constant 1") {
        MultivariatePolynomial P = expand_delta(LatticeDiagram({{0, 0}}));
        CHECK(P == monomial(1, {0, 0}));
    }

    SECTION("two bottom cells give the difference of variables") {
        // x_2 - x_1
        MultivariatePolynomial want(2);
        want.add_term({0, 1, 0, 0}, 1);
        want.add_term({1, 0, 0, 0}, -1);
        CHECK(expand_delta(LatticeDiagram({{0, 0}, {1, 0}})) == want);
    }

    SECTION("degenerate diagrams expand to zero") {
        CHECK(expand_delta(LatticeDiagram({{0, 0}, {0, 0}})).is_zero());
        CHECK(expand_delta(LatticeDiagram({{-1, 0}, {0, 0}})).is_zero());
    }

    SECTION("sorting only flips the sign") {
        std::mt19937 rng(31337);
        for (int trial = 0; trial < 30; ++trial) {
            int n = 2 + trial % 3;
            LatticeDiagram L = random_sorted_diagram(rng, n, 3);
            std::shuffle(L.cells.begin(), L.cells.end(), rng);
            auto [sorted, sign] = sort_diagram(L);
            CHECK(expand_delta(sorted) * Rat(sign) == expand_delta(L));
        }
    }

    SECTION("expansions are alternating") {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + trial % 3;
            CHECK(is_alternating(expand_delta(random_sorted_diagram(rng, n, 3))));
        }
    }
}

TEST_CASE("differential operator") {
    SECTION("single-variable basics") {
        // y d/dx on x = y
        CHECK(diff_E(1, monomial(1, {1, 0})) == monomial(1, {0, 1}));
        // y d^2/dx^2 on x^2 = 2 y
        CHECK(diff_E(2, monomial(1, {2, 0})) == monomial(1, {0, 1}, 2));
        CHECK(diff_E(3, monomial(1, {2, 0})).is_zero());
    }

    SECTION("matches the analytic diagram operator on staircases") {
        for (int n = 1; n <= 5; ++n) {
            for (int a = 1; a <= n; ++a) {
                MultivariatePolynomial direct = diff_E(a, expand_delta(staircase_diagram(n)));
                MultivariatePolynomial algebra =
                    expand_alternant(apply_E(a, delta_n(n), EConvention::analytic));
                CHECK(direct == algebra);
            }
        }
    }
}

TEST_CASE("alternating and harmonic recognition") {
    SECTION("symmetric polynomials are not alternating") {
        MultivariatePolynomial P(2);
        P.add_term({1, 0, 0, 0}, 1);
        P.add_term({0, 1, 0, 0}, 1);  // x_1 + x_2
        CHECK(!is_alternating(P));
        CHECK(is_alternating(MultivariatePolynomial(2)));
    }

    SECTION("low-degree probes") {
        CHECK(!is_harmonic(monomial(1, {2, 0})));  // sum d^2/dx^2 x^2 = 2
        CHECK(!is_harmonic(monomial(1, {1, 0})));  // sum d/dx x = 1
        CHECK(is_harmonic(monomial(1, {0, 0})));
        CHECK(is_harmonic(MultivariatePolynomial(2)));
    }

    SECTION("staircase determinants are harmonic") {
        for (int n = 1; n <= 4; ++n)
            CHECK(is_harmonic(expand_delta(staircase_diagram(n))));
    }

    SECTION("harmonicity separates the conventions") {
        // genuine operator images stay harmonic; the unit-coefficient
        // recombination of E_1 E_1 on the n=3 staircase does not
        Alternant analytic = apply_E(1, apply_E(1, delta_n(3), EConvention::analytic),
                                     EConvention::analytic);
        Alternant formal = apply_E(1, apply_E(1, delta_n(3), EConvention::formal),
                                   EConvention::formal);
        CHECK(is_harmonic(expand_alternant(analytic)));
        CHECK(!is_harmonic(expand_alternant(formal)));
        CHECK(is_alternating(expand_alternant(formal)));
    }
}

TEST_CASE("re-expansion into the diagram basis") {
    SECTION("a single determinant comes back as itself") {
        std::mt19937 rng(777);
        for (int trial = 0; trial < 25; ++trial) {
            int n = 1 + trial % 4;
            LatticeDiagram L = random_sorted_diagram(rng, n, 3);
            CHECK(to_delta_basis(expand_delta(L)) == term(L, 1));
        }
    }

    SECTION("zero gives zero") {
        CHECK(to_delta_basis(MultivariatePolynomial(3)).is_zero());
    }

    SECTION("non-alternating input is rejected") {
        CHECK_THROWS_AS(to_delta_basis(monomial(2, {1, 1, 0, 0})),
                        std::invalid_argument);
    }

    SECTION("round trip through the polynomial world") {
        // reweight the diagrams of a genuine operator image with random
        // rationals; homogeneity is preserved by construction
        std::mt19937 rng(555);
        Alternant base = apply_F_column(ColumnSpec::from_decreasing({3, 1}), delta_n(5),
                                        EConvention::formal);
        for (int trial = 0; trial < 10; ++trial) {
            Alternant f;
            for (const auto& [L, c] : base.terms()) {
                int num = static_cast<int>(rng() % 9) - 4;
                int den = 1 + static_cast<int>(rng() % 4);
                f += term(L, Rat(num, den));
            }
            CHECK(to_delta_basis(expand_alternant(f)) == f);
        }
    }
}

TEST_CASE("full pipeline equality for the worked column") {
    // polynomial route vs operator-algebra route for the (3,1) column
    Alternant algebra = apply_F_column(ColumnSpec::from_decreasing({3, 1}), delta_n(5),
                                       EConvention::analytic);
    MultivariatePolynomial start = expand_delta(staircase_diagram(5));
    MultivariatePolynomial e31 = diff_E(3, diff_E(1, start));
    MultivariatePolynomial e22 = diff_E(2, diff_E(2, start));
    MultivariatePolynomial direct = e31 + e22 * Rat(-1);
    CHECK(to_delta_basis(direct) == algebra);
    CHECK(is_alternating(direct));
    CHECK(is_harmonic(direct));
}

TEST_CASE("exact rank") {
    SECTION("single nonzero row") {
        CHECK(exact_rank({delta_n(4)}) == 1);
    }

    SECTION("scalar multiples collapse") {
        Alternant f = apply_E(1, delta_n(4), EConvention::formal);
        CHECK(exact_rank({f, scale(f, 2)}) == 1);
        CHECK(exact_rank({f, scale(f, Rat(-7, 3))}) == 1);
    }

    SECTION("zero rows do not count") {
        CHECK(exact_rank({Alternant()}) == 0);
        CHECK(exact_rank({}) == 0);
    }

    SECTION("independent combinations count fully") {
        Alternant a = term(LatticeDiagram({{0, 0}, {3, 1}}), 1);
        Alternant b = term(LatticeDiagram({{1, 0}, {2, 1}}), 1);
        Alternant c = add(a, scale(b, Rat(1, 2)));
        CHECK(exact_rank({a, b}) == 2);
        CHECK(exact_rank({a, b, c}) == 2);
        CHECK(exact_rank({a, c}) == 2);
    }

    SECTION("basis elements have full rank") {
        for (int k = 1; k < 5; ++k) {
            for (int l = 1; l <= k; ++l) {
                std::vector<Alternant> rows;
                for (const auto& e : basis_for(5, k, l)) rows.push_back(e.alternant);
                CHECK(Int(exact_rank(rows)) == count_partitions(k, l));
            }
        }
    }
}
