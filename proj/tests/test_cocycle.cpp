#include <doctest.h>

#include <cmath>
#include <random>

#include "fmdil/cocycle.hpp"

using namespace fmdil;

TEST_CASE("gram kernel values") {
    auto z2 = cyclic_group(2);
    auto psi = make_symbol(z2, {0.0, 1.0});
    auto k = gram_from_psi(psi);
    CHECK(k(0, 0) == 0.0);
    CHECK(k(0, 1) == 0.0);
    CHECK(k(1, 0) == 0.0);
    // K(1,1) = (1 + 1 - psi(e)) / 2 = 1.
    CHECK(k(1, 1) == doctest::Approx(1.0).epsilon(1e-14));

    auto z3 = cyclic_group(3);
    auto zero = make_symbol(z3, {0.0, 0.0, 0.0});
    CHECK(gram_from_psi(zero).cwiseAbs().maxCoeff() == 0.0);

    auto circ = builtin_psi("circle", z3);
    auto kc = gram_from_psi(circ);
    CHECK(kc(1, 1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(kc(2, 2) == doctest::Approx(3.0).epsilon(1e-12));
    // K(1,2) = (3 + 3 - psi(1^-1 2)) / 2 = (6 - 3) / 2.
    CHECK(kc(1, 2) == doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS_AS(gram_from_psi(make_symbol(z2, {0.0, -1.0})),
                    std::invalid_argument);
}

TEST_CASE("extraction on the two-point group") {
    auto z2 = cyclic_group(2);
    auto psi = make_symbol(z2, {0.0, 1.0});
    auto c = extract_cocycle(psi);
    CHECK(c.dim == 1);
    CHECK(c.b[0](0) == 0.0);
    CHECK(std::abs(c.b[1](0)) == doctest::Approx(1.0).epsilon(1e-12));
    // b(0) - b(1) = -b(1) forces pi_1 = -1 regardless of the sign of b(1).
    CHECK(c.pi[1](0, 0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(c.construction_residual < 1e-12);
}

TEST_CASE("extraction of the zero symbol is trivial") {
    auto z3 = cyclic_group(3);
    auto c = extract_cocycle(make_symbol(z3, {0.0, 0.0, 0.0}));
    CHECK(c.dim == 0);
    CHECK(verify_cocycle_law(c).pass);
    CHECK(verify_norm_identity(c, make_symbol(z3, {0.0, 0.0, 0.0})).pass);
}

TEST_CASE("circle symbol gives a planar cocycle") {
    for (int n : {3, 4, 8}) {
        auto g = cyclic_group(n);
        auto psi = builtin_psi("circle", g);
        auto c = extract_cocycle(psi);
        CHECK(c.dim == 2);
        CHECK(gram_reproduction_residual(c, gram_from_psi(psi)) < 1e-10);
        auto law = verify_cocycle_law(c);
        CHECK(law.pass);
        CHECK(law.cocycle_residual < 1e-10);
        CHECK(law.homomorphism_residual < 1e-10);
        CHECK(law.orthogonality_residual < 1e-10);
        auto norm = verify_norm_identity(c, psi, 1e-10);
        CHECK(norm.pass);
    }
    auto z3 = cyclic_group(3);
    auto c = extract_cocycle(builtin_psi("circle", z3));
    CHECK(c.b[1].squaredNorm() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("corrupted pi fails with a named invariant") {
    auto z2 = cyclic_group(2);
    auto c = extract_cocycle(make_symbol(z2, {0.0, 1.0}));
    auto bad = corrupt_pi_sign(c, 1, 0, 0);
    auto law = verify_cocycle_law(bad);
    CHECK_FALSE(law.pass);
    CHECK(law.cocycle_residual >= 1.0);
    REQUIRE(!law.failed_invariants.empty());
    bool named = false;
    for (const auto& inv : law.failed_invariants)
        named = named || inv == "cocycle-law" || inv == "pi-homomorphism";
    CHECK(named);
}

TEST_CASE("norm identity on the builtin catalog") {
    std::vector<std::pair<GroupPtr, std::string>> cases = {
        {cyclic_group(2), "delta"},
        {cyclic_group(8), "circle"},
        {symmetric_group(3), "coxeter"},
        {dihedral_group(3), "delta"},
    };
    for (auto& [g, name] : cases) {
        auto psi = builtin_psi(name, g);
        auto c = extract_cocycle(psi);
        auto rep = verify_norm_identity(c, psi, 1e-10);
        CHECK(rep.pass);
        CHECK(rep.max_residual < 1e-10);
        CHECK(verify_cocycle_law(c).pass);
    }
}

TEST_CASE("affine action is isometric") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto s3 = symmetric_group(3);
    auto c = extract_cocycle(builtin_psi("coxeter", s3));
    REQUIRE(c.dim >= 1);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd h(c.dim), hp(c.dim);
        for (int i = 0; i < c.dim; ++i) {
            h(i) = normal(rng);
            hp(i) = normal(rng);
        }
        int s = trial % s3->order;
        Eigen::VectorXd moved = (c.pi[s] * h + c.b[s]) -
                                (c.pi[s] * hp + c.b[s]);
        CHECK(moved.norm() == doctest::Approx((h - hp).norm()).epsilon(1e-10));
    }
}

TEST_CASE("basis independence up to a fixed orthogonal matrix") {
    auto z4 = cyclic_group(4);
    auto psi = builtin_psi("circle", z4);
    auto a = extract_cocycle(psi, 1e-10, 1e-10, EigenOrder::Descending);
    auto b = extract_cocycle(psi, 1e-10, 1e-10, EigenOrder::Ascending);
    CHECK(a.dim == b.dim);
    CHECK(procrustes_residual(a, b) < 1e-8);

    // A global rotation of a valid cocycle is a valid cocycle; the
    // Procrustes solve recovers it.
    double ang = 0.73;
    Eigen::MatrixXd q(2, 2);
    q << std::cos(ang), -std::sin(ang), std::sin(ang), std::cos(ang);
    Cocycle rotated = a;
    for (auto& v : rotated.b) v = q * v;
    for (auto& m : rotated.pi) m = q * m * q.transpose();
    CHECK(verify_cocycle_law(rotated).pass);
    CHECK(procrustes_residual(a, rotated) < 1e-8);
}

TEST_CASE("aggressive rank cut is a construction failure") {
    auto z3 = cyclic_group(3);
    auto psi = builtin_psi("circle", z3);
    CHECK_THROWS_AS(extract_cocycle(psi, 0.9), ConstructionError);
}

TEST_CASE("uncertified symbols are refused") {
    auto z2 = cyclic_group(2);
    CHECK_THROWS_AS(extract_cocycle(make_symbol(z2, {0.0, -1.0})),
                    std::invalid_argument);
}
