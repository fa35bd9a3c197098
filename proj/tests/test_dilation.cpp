#include <doctest.h>

#include <cmath>

#include "fmdil/dilation.hpp"
#include "fmdil/json_io.hpp"

using namespace fmdil;

TEST_CASE("markov semigroup hypotheses") {
    auto z2 = cyclic_group(2);

    auto rep = verify_markov_semigroup(make_symbol(z2, {0.0, 1.0}),
                                       {0.5, 1.0});
    CHECK(rep.pass);
    CHECK(rep.max_unital_residual == 0.0);
    CHECK(rep.max_semigroup_residual < 1e-12);
    CHECK(rep.min_psd_eigenvalue >= 0.0);

    auto idrep = verify_markov_semigroup(make_symbol(z2, {0.0, 0.0}),
                                         {0.5, 1.0});
    CHECK(idrep.pass);
    CHECK(idrep.min_psd_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));

    auto bad = verify_markov_semigroup(make_symbol(z2, {0.0, -1.0}), {1.0});
    CHECK_FALSE(bad.pass);
    REQUIRE(!bad.failed_invariants.empty());
    bool positivity_named = false;
    for (const auto& inv : bad.failed_invariants)
        positivity_named = positivity_named || inv == "positivity";
    CHECK(positivity_named);
    // Gram eigenvalue 1 - e at t = 1.
    CHECK(bad.min_psd_eigenvalue ==
          doctest::Approx(1.0 - std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("dilation identity on the two-point group") {
    auto z2 = cyclic_group(2);
    auto psi = make_symbol(z2, {0.0, 1.0}, "delta");
    auto rep = verify_dilation(z2, psi, {0.0, 2.0}, 1e-10, 5);
    CHECK(rep.pass);
    CHECK(rep.cocycle_dim == 1);
    REQUIRE(rep.points.size() == 2);
    // t = 0: both scalings are the identity.
    CHECK(rep.points[0].residual_b_vs_t == 0.0);
    CHECK(rep.points[0].residual_a_vs_t2 == 0.0);
    // t = 2: integrated-out coefficient e^{-2} (B) and e^{-4} (A = the
    // time-squared semigroup).
    CHECK(rep.points[1].residual_b_vs_t < 1e-12);
    CHECK(rep.points[1].residual_a_vs_t2 < 1e-12);
    CHECK(rep.u_group_law_residual < 1e-10);
    CHECK(rep.ej_identity_residual == 0.0);
    CHECK(rep.factorization_residual < 1e-10);

    // Monte Carlo arbitration: the t^2 exponent fits, the linear one is
    // rejected at this sample size.
    CHECK(rep.mc.sigma_dist_sq <= 5.0);
    CHECK(rep.mc.sigma_dist_lin > 3.0);
}

TEST_CASE("full pipeline passes on the builtin catalog") {
    std::vector<std::pair<GroupPtr, std::string>> cases = {
        {cyclic_group(3), "circle"},
        {cyclic_group(4), "circle"},
        {symmetric_group(3), "coxeter"},
    };
    for (auto& [g, name] : cases) {
        auto psi = builtin_psi(name, g);
        auto rep = verify_dilation(g, psi, {0.1, 0.5, 1.0, 2.0}, 1e-10, 7);
        CHECK(rep.pass);
        for (const auto& p : rep.points) {
            CHECK(p.residual_b_vs_t < 1e-10);
            CHECK(p.residual_a_vs_t2 < 1e-10);
        }
        CHECK(rep.takesaki_identity_residual < 1e-10);
        CHECK(rep.action_frequency_residual < 1e-10);
        CHECK(rep.star_hom_residual < 1e-10);
        CHECK(rep.weight_preservation_residual < 1e-10);
    }
}

TEST_CASE("zero symbol dilates trivially") {
    auto z3 = cyclic_group(3);
    auto psi = make_symbol(z3, {0.0, 0.0, 0.0}, "zero");
    auto rep = verify_dilation(z3, psi, {0.5, 1.0}, 1e-10, 3);
    CHECK(rep.pass);
    CHECK(rep.cocycle_dim == 0);
    for (const auto& p : rep.points) {
        CHECK(p.residual_b_vs_t == 0.0);
        CHECK(p.residual_a_vs_t2 == 0.0);
    }
}

TEST_CASE("degenerate and composite groups run the full pipeline") {
    // Trivial group: the only admissible psi is zero.
    auto z1 = cyclic_group(1);
    auto rep1 = verify_dilation(z1, builtin_psi("zero", z1), {1.0}, 1e-10, 2);
    CHECK(rep1.pass);
    CHECK(rep1.cocycle_dim == 0);

    // Direct product with the delta symbol (conditionally negative on any
    // finite group; its cocycle spans the nonidentity coordinates).
    auto z6 = product_group(cyclic_group(2), cyclic_group(3));
    auto rep6 =
        verify_dilation(z6, builtin_psi("delta", z6), {0.5, 2.0}, 1e-10, 2);
    CHECK(rep6.pass);
    CHECK(rep6.cocycle_dim == 5);
    CHECK(verify_weight_compat(z6, builtin_psi("delta", z6), 1e-10, 2).pass);
}

TEST_CASE("weight compatibility suite") {
    auto z3 = cyclic_group(3);
    auto psi = builtin_psi("circle", z3);
    auto rep = verify_weight_compat(z3, psi, 1e-10, 11);
    CHECK(rep.pass);
    CHECK(rep.embedding_weight_residual < 1e-12);
    CHECK(rep.weight_preservation_residual < 1e-10);
    CHECK(rep.traciality_residual < 1e-10);
    CHECK(rep.ej_identity_residual == 0.0);
    CHECK(rep.modular_flow_residual == 0.0);

    auto z2 = cyclic_group(2);
    auto zero = make_symbol(z2, {0.0, 0.0}, "zero");
    CHECK(verify_weight_compat(z2, zero, 1e-10, 11).pass);
}

TEST_CASE("corrupted cocycle fails with a named invariant") {
    auto z3 = cyclic_group(3);
    auto psi = builtin_psi("circle", z3);
    auto good = extract_cocycle(psi);
    auto bad = std::make_shared<const Cocycle>(corrupt_pi_sign(good));
    auto rep = verify_weight_compat_with(z3, psi, bad, 1e-10, 11);
    CHECK_FALSE(rep.pass);
    bool named = false;
    for (const auto& inv : rep.failed_invariants)
        named = named || inv == "cocycle-law" || inv == "pi-homomorphism" ||
                inv == "pi-orthogonality" || inv == "weight-preservation";
    CHECK(named);
}

TEST_CASE("uncertifiable symbols abort with a diagnostic") {
    auto z2 = cyclic_group(2);
    CHECK_THROWS_AS(
        verify_dilation(z2, make_symbol(z2, {0.0, -1.0}), {1.0}, 1e-10, 1),
        std::invalid_argument);
}

TEST_CASE("dilation report serializes with schema and notes") {
    auto z2 = cyclic_group(2);
    auto psi = make_symbol(z2, {0.0, 1.0}, "delta");
    auto rep = verify_dilation(z2, psi, {1.0}, 1e-10, 5, 20000);
    auto j = to_json(rep);
    CHECK(j["schema"] == "fmdil/dilation-report/v1");
    CHECK(j["pass"] == true);
    CHECK(j["cocycle_dim"] == 1);
    CHECK(j["notes"].size() >= 2);
    // Identical call gives identical bytes.
    auto again = verify_dilation(z2, psi, {1.0}, 1e-10, 5, 20000);
    CHECK(to_json(again).dump(2) == j.dump(2));
}
