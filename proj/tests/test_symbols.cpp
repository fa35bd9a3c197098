#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "fmdil/sampling.hpp"
#include "fmdil/symbols.hpp"

using namespace fmdil;

namespace {

// Closed-form eigenvalues of the symmetric 2x2 matrix [[a, b], [b, a]]:
// a + b and a - b. Independent route for the frozen examples below.
std::pair<double, double> sym2_eigs(double a, double b) {
    return {a - std::abs(b), a + std::abs(b)};
}

}  // namespace

TEST_CASE("positive definiteness on 2x2 Gram matrices") {
    auto z2 = cyclic_group(2);

    auto ones = make_symbol(z2, {1.0, 1.0});
    auto rep = is_positive_definite(ones);
    CHECK(rep.verdict);
    CHECK(rep.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sym2_eigs(1.0, 1.0).first == 0.0);

    auto bad = make_symbol(z2, {1.0, -2.0});
    rep = is_positive_definite(bad);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sym2_eigs(1.0, -2.0).first == -1.0);
    CHECK(rep.witness.size() == 2);

    auto decay = make_symbol(z2, {1.0, std::exp(-1.0)});
    rep = is_positive_definite(decay);
    CHECK(rep.verdict);
    CHECK(rep.min_eigenvalue ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(rep.min_eigenvalue == doctest::Approx(0.632121).epsilon(1e-6));
}

TEST_CASE("conditional negativity certificate") {
    auto z2 = cyclic_group(2);

    auto psi = make_symbol(z2, {0.0, 1.0});
    auto rep = is_cond_negative_type(psi);
    CHECK(rep.verdict);
    // Extremal sum-zero direction (1,-1), raw form value
    // 2 * 1 * (-1) * psi(1) = -2.
    CHECK(rep.witness(0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.witness(1) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(rep.witness_value == doctest::Approx(-2.0).epsilon(1e-9));

    auto neg = make_symbol(z2, {0.0, -1.0});
    rep = is_cond_negative_type(neg);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.failure == "gram-positivity");
    CHECK(rep.witness_value == doctest::Approx(2.0).epsilon(1e-9));

    auto zero = make_symbol(z2, {0.0, 0.0});
    CHECK(is_cond_negative_type(zero).verdict);

    CHECK_THROWS_AS(
        is_cond_negative_type(make_symbol(z2, {0.0, cplx(0.0, 1.0)})),
        std::invalid_argument);

    // psi(e) != 0 and asymmetry are caught by name.
    auto z3 = cyclic_group(3);
    CHECK(is_cond_negative_type(make_symbol(z3, {0.5, 1.0, 1.0})).failure ==
          "identity-value");
    CHECK(is_cond_negative_type(make_symbol(z3, {0.0, 1.0, 2.0})).failure ==
          "symmetry");
}

TEST_CASE("certificate agrees with random sum-zero sampling") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto s3 = symmetric_group(3);
    auto psi = builtin_psi("coxeter", s3);
    auto rep = is_cond_negative_type(psi);
    CHECK(rep.verdict);
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::VectorXd c(6);
        for (int i = 0; i < 6; ++i) c(i) = normal(rng);
        c.array() -= c.mean();
        double form = 0.0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                form += c(i) * c(j) *
                        psi.values[s3->mul(s3->inv(i), j)].real();
        CHECK(form <= 1e-9);
    }
}

TEST_CASE("schoenberg sampler") {
    auto z2 = cyclic_group(2);
    auto psi = make_symbol(z2, {0.0, 1.0});

    auto rep = schoenberg_check(psi, {0.1, 1.0, 10.0});
    CHECK(rep.pass);
    REQUIRE(rep.points.size() == 3);
    // exp(-t psi) on two points has Gram eigenvalues 1 +- exp(-t).
    CHECK(rep.points[0].min_eigenvalue ==
          doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-12));
    CHECK(rep.points[1].min_eigenvalue ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(rep.points[2].min_eigenvalue ==
          doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-12));

    auto neg = make_symbol(z2, {0.0, -1.0});
    rep = schoenberg_check(neg, {1.0});
    CHECK_FALSE(rep.pass);
    CHECK(rep.points[0].min_eigenvalue ==
          doctest::Approx(1.0 - std::exp(1.0)).epsilon(1e-12));
    CHECK(rep.points[0].min_eigenvalue ==
          doctest::Approx(-1.718282).epsilon(1e-6));

    rep = schoenberg_check(psi, {});
    CHECK(rep.pass);
    CHECK(rep.vacuous);
    CHECK_FALSE(rep.note.empty());
}

TEST_CASE("schoenberg necessity for every certified builtin") {
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i)
        grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / 19.0));

    std::vector<std::pair<GroupPtr, std::string>> cases = {
        {cyclic_group(2), "delta"},   {cyclic_group(3), "circle"},
        {cyclic_group(4), "circle"},  {cyclic_group(8), "circle"},
        {symmetric_group(3), "coxeter"}, {dihedral_group(4), "coxeter"},
        {symmetric_group(3), "delta"},
    };
    for (auto& [g, name] : cases) {
        auto psi = builtin_psi(name, g);
        REQUIRE(is_cond_negative_type(psi).verdict);
        CHECK(schoenberg_check(psi, grid).pass);
    }
}

TEST_CASE("multiplier application") {
    auto z2 = cyclic_group(2);
    auto x = ga_add(GroupAlgebraElement::basis(z2, 0),
                    GroupAlgebraElement::basis(z2, 1));

    auto id = make_symbol(z2, {1.0, 1.0});
    CHECK(max_coeff_deviation(multiplier_apply(id, x), x) == 0.0);

    auto half = make_symbol(z2, {1.0, 0.5});
    auto y = multiplier_apply(half, x);
    CHECK(y.coeffs[0] == cplx(1.0, 0.0));
    CHECK(y.coeffs[1] == cplx(0.5, 0.0));

    auto psi = make_symbol(z2, {0.0, 1.0});
    auto t0 = semigroup_symbol(psi, 0.0);
    CHECK(max_coeff_deviation(multiplier_apply(t0, x), x) == 0.0);

    auto z3 = cyclic_group(3);
    CHECK_THROWS_AS(
        multiplier_apply(make_symbol(z3, {1.0, 1.0, 1.0}), x),
        std::invalid_argument);
}

TEST_CASE("semigroup symbol") {
    auto z2 = cyclic_group(2);
    auto psi = make_symbol(z2, {0.0, 1.0});

    auto t0 = semigroup_symbol(psi, 0.0);
    CHECK(t0.values[0] == cplx(1.0, 0.0));
    CHECK(t0.values[1] == cplx(1.0, 0.0));

    auto t1 = semigroup_symbol(psi, 1.0);
    CHECK(t1.values[1].real() == doctest::Approx(0.367879).epsilon(1e-6));

    auto z3 = cyclic_group(3);
    auto circ = builtin_psi("circle", z3);
    CHECK(circ.values[1].real() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(circ.values[2].real() == doctest::Approx(3.0).epsilon(1e-12));
    auto th = semigroup_symbol(circ, 0.5);
    CHECK(th.values[1].real() ==
          doctest::Approx(std::exp(-1.5)).epsilon(1e-12));

    CHECK_THROWS_AS(semigroup_symbol(psi, -0.1), std::domain_error);
}

TEST_CASE("multiplier composition and selfadjointness") {
    std::mt19937_64 rng(37);
    auto z4 = cyclic_group(4);
    auto psi = builtin_psi("circle", z4);
    for (double t : {0.2, 1.0})
        for (double u : {0.3, 2.0}) {
            auto x = random_group_element(z4, rng);
            auto two = multiplier_apply(semigroup_symbol(psi, t),
                                        multiplier_apply(
                                            semigroup_symbol(psi, u), x));
            auto one =
                multiplier_apply(semigroup_symbol(psi, t + u), x);
            CHECK(max_coeff_deviation(two, one) < 1e-12);

            auto tx = multiplier_apply(semigroup_symbol(psi, t), x);
            auto txs = multiplier_apply(semigroup_symbol(psi, t),
                                        ga_adjoint(x));
            CHECK((to_matrix(txs) - to_matrix(tx).adjoint())
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
        }
}

TEST_CASE("builtin catalog edge cases") {
    CHECK_THROWS_AS(builtin_psi("circle", symmetric_group(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(builtin_psi("coxeter", cyclic_group(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(builtin_psi("nonsense", cyclic_group(2)),
                    std::invalid_argument);

    // Word length on the 4-cycle: distances 0,1,2,1.
    auto z4 = cyclic_group(4);
    auto wl = builtin_psi("wordlength:1", z4);
    CHECK(wl.values[0] == cplx(0, 0));
    CHECK(wl.values[1] == cplx(1, 0));
    CHECK(wl.values[2] == cplx(2, 0));
    CHECK(wl.values[3] == cplx(1, 0));
    CHECK(is_cond_negative_type(wl).verdict);

    // Coxeter lengths on the lex enumeration of the 6 permutations.
    auto s3 = symmetric_group(3);
    auto cox = builtin_psi("coxeter", s3);
    CHECK(cox.values[0] == cplx(0, 0));
    CHECK(cox.values[1] == cplx(1, 0));
    CHECK(cox.values[2] == cplx(1, 0));
    CHECK(cox.values[3] == cplx(2, 0));
    CHECK(cox.values[4] == cplx(2, 0));
    CHECK(cox.values[5] == cplx(3, 0));

    CHECK_THROWS_AS(word_length(*z4, {2}), std::invalid_argument);
}

TEST_CASE("symbol files") {
    auto z3 = cyclic_group(3);
    {
        std::ofstream out("sym_ok.txt");
        out << "0 0\n2 3 0.5\n1 3\n";
    }
    auto s = load_symbol_file("sym_ok.txt", z3);
    CHECK(s.values[0] == cplx(0, 0));
    CHECK(s.values[1] == cplx(3, 0));
    CHECK(s.values[2] == cplx(3, 0.5));

    {
        std::ofstream out("sym_dup.txt");
        out << "0 0\n0 1\n1 1\n2 1\n";
    }
    CHECK_THROWS_AS(load_symbol_file("sym_dup.txt", z3), ParseError);
    {
        std::ofstream out("sym_missing.txt");
        out << "0 0\n1 1\n";
    }
    CHECK_THROWS_AS(load_symbol_file("sym_missing.txt", z3), ParseError);
    {
        std::ofstream out("sym_range.txt");
        out << "0 0\n7 1\n";
    }
    CHECK_THROWS_AS(load_symbol_file("sym_range.txt", z3), ParseError);

    auto inline_sym = load_symbol("list:0,1,1", z3);
    CHECK(inline_sym.values[1] == cplx(1, 0));
}
