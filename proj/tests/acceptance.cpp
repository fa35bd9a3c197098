// Acceptance suite: every verdict the artifact promises, one line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fmdil/dilation.hpp"
#include "fmdil/hcalc.hpp"
#include "fmdil/sampling.hpp"

using namespace fmdil;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

std::vector<std::pair<GroupPtr, std::string>> builtin_cases() {
    return {
        {cyclic_group(2), "delta"},  {cyclic_group(3), "circle"},
        {cyclic_group(4), "circle"}, {cyclic_group(8), "circle"},
        {symmetric_group(3), "coxeter"},
    };
}

const std::vector<double> kGrid = {0.1, 0.5, 1.0, 2.0, 5.0};

void criterion_markov() {
    bool pass = true;
    double worst = 0.0, slowest = 0.0;
    for (auto& [g, name] : builtin_cases()) {
        auto t0 = std::chrono::steady_clock::now();
        auto psi = builtin_psi(name, g);
        auto rep = verify_markov_semigroup(psi, kGrid, 1e-10);
        double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        double residual = std::max(
            {rep.max_unital_residual, rep.max_real_residual,
             rep.max_trace_residual, rep.max_semigroup_residual,
             std::max(0.0, -rep.min_psd_eigenvalue)});
        worst = std::max(worst, residual);
        pass = pass && rep.pass && residual < 1e-10 && dt < 1.0;
    }
    report(1, "markov hypothesis suite", pass,
           "max residual " + fmt17(worst) + ", slowest case " +
               fmt17(slowest) + " s");
}

void criterion_cocycle() {
    bool pass = true;
    double worst = 0.0, slowest = 0.0;
    std::string dims;
    for (auto& [g, name] : builtin_cases()) {
        auto t0 = std::chrono::steady_clock::now();
        auto psi = builtin_psi(name, g);
        auto c = extract_cocycle(psi);
        auto law = verify_cocycle_law(c, 1e-10);
        auto norm = verify_norm_identity(c, psi, 1e-10);
        double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        double residual =
            std::max({law.cocycle_residual, law.homomorphism_residual,
                      law.orthogonality_residual, norm.max_residual});
        worst = std::max(worst, residual);
        pass = pass && law.pass && norm.pass && residual < 1e-10 && dt < 1.0;
        if (name == "circle") pass = pass && c.dim == 2;
        if (name == "delta" && g->order == 2) pass = pass && c.dim == 1;
        dims += g->name + ":" + std::to_string(c.dim) + " ";
    }
    report(2, "cocycle suite", pass,
           "max residual " + fmt17(worst) + ", dims " + dims + "slowest " +
               fmt17(slowest) + " s");
}

void criterion_dilation() {
    bool pass = true;
    double worst_b = 0.0, worst_a = 0.0, worst_law = 0.0, slowest = 0.0;
    for (auto& [g, name] : builtin_cases()) {
        auto t0 = std::chrono::steady_clock::now();
        auto psi = builtin_psi(name, g);
        auto rep = verify_dilation(g, psi, kGrid, 1e-10, 20260809);
        double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        for (const auto& p : rep.points) {
            worst_b = std::max(worst_b, p.residual_b_vs_t);
            worst_a = std::max(worst_a, p.residual_a_vs_t2);
        }
        worst_law = std::max(worst_law, rep.u_group_law_residual);
        pass = pass && rep.pass && worst_b < 1e-10 && worst_a < 1e-10 &&
               rep.u_group_law_residual < 1e-10 && dt < 5.0;
    }
    report(3, "dilation identity (B vs exp(-t psi), A vs exp(-t^2 psi), "
              "group law of A)",
           pass,
           "residuals B " + fmt17(worst_b) + ", A " + fmt17(worst_a) +
               ", group law " + fmt17(worst_law) + ", slowest " +
               fmt17(slowest) + " s");
}

void criterion_weight() {
    bool pass = true;
    double worst_embed = 0.0, worst_ut = 0.0, worst_trace = 0.0;
    for (auto& [g, name] : builtin_cases()) {
        auto psi = builtin_psi(name, g);
        auto rep = verify_weight_compat(g, psi, 1e-10, 917);
        worst_embed = std::max(worst_embed, rep.embedding_weight_residual);
        worst_ut = std::max(worst_ut, rep.weight_preservation_residual);
        worst_trace = std::max(worst_trace, rep.traciality_residual);
        pass = pass && rep.pass && rep.embedding_weight_residual < 1e-12 &&
               rep.weight_preservation_residual < 1e-10 &&
               rep.traciality_residual < 1e-10 &&
               rep.ej_identity_residual == 0.0;
    }
    report(4, "weight/trace suite", pass,
           "embedding " + fmt17(worst_embed) + ", U_t preservation " +
               fmt17(worst_ut) + ", traciality " + fmt17(worst_trace) +
               ", E o J exact");
}

void criterion_crossed() {
    bool pass = true;
    double worst_block = 0.0, worst_comm = 0.0;
    for (auto& [g, name] : {builtin_cases()[1], builtin_cases()[4]}) {
        auto psi = builtin_psi(name, g);
        auto c = std::make_shared<const Cocycle>(extract_cocycle(psi));
        std::mt19937_64 rng(515);
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_crossed_element(g, c, rng);
            auto y = random_crossed_element(g, c, rng);
            double dev = block_deviation(
                block_matrix(crossed_mul(x, y)),
                block_mul(block_matrix(x), block_matrix(y)), 1e-10);
            worst_block = std::max(worst_block, dev);
        }
        for (int s = 0; s < g->order; ++s) {
            auto a = random_gauss_exp(c->dim, rng);
            auto js = embed_J(GroupAlgebraElement::basis(g, s), c);
            double dev = crossed_deviation(
                crossed_mul(crossed_mul(js, embed_pi(a, g, c)),
                            crossed_adjoint(js)),
                embed_pi(second_quantization(c->pi[s], a), g, c), 0.0);
            worst_comm = std::max(worst_comm, dev);
        }
    }
    pass = worst_block < 1e-10 && worst_comm == 0.0;
    report(5, "crossed-product consistency (block oracle, commutation "
              "relation)",
           pass,
           "block deviation " + fmt17(worst_block) +
               ", commutation deviation " + fmt17(worst_comm) +
               " (frequency-exact)");
}

void criterion_gaussian() {
    int hits = 0;
    const int trials = 50;
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < trials; ++trial) {
        auto a = random_gauss_exp(3, rng, 5);
        GaussianSampler sampler(3, 100000, 40000 + trial);
        auto est = mc_expectation(a, sampler);
        double err = std::abs(est.estimate - expectation(a));
        if (est.stderr_ == 0.0 ? err == 0.0 : err <= 5.0 * est.stderr_)
            ++hits;
    }

    // Exponent arbitration at t = 1.5, ||b||^2 = 1: the sampled mean of
    // e^{i sqrt(2) t W(b)} must sit on exp(-t^2) and off exp(-t).
    Eigen::VectorXd b(3);
    b << 1.0, 0.0, 0.0;
    auto probe =
        GaussExp::exponential(3, 1.0, std::sqrt(2.0) * 1.5 * b);
    GaussianSampler sampler(3, 100000, 99991);
    auto est = mc_expectation(probe, sampler);
    double d_sq = std::abs(est.estimate - cplx(std::exp(-2.25), 0.0));
    double d_lin = std::abs(est.estimate - cplx(std::exp(-1.5), 0.0));
    bool exponent_ok =
        d_sq <= 3.0 * est.stderr_ && d_lin > 3.0 * est.stderr_;

    bool pass = hits >= 48 && exponent_ok;
    report(6, "gaussian oracle", pass,
           std::to_string(hits) + "/50 trials within 5 sigma; exponent: " +
               fmt17(d_sq / est.stderr_) + " sigma from exp(-t^2 |b|^2), " +
               fmt17(d_lin / est.stderr_) + " sigma from exp(-t |b|^2)");
}

void criterion_hcalc() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    double worst = 0.0;
    for (auto& [g, name] : builtin_cases()) {
        auto gen = make_generator(builtin_psi(name, g));
        for (double a : {0.5, 1.0, 2.0}) {
            auto f = power_decay_function(a);
            for (double nu : {std::numbers::pi / 6, std::numbers::pi / 4}) {
                auto sym = hinfty_apply(f, gen, nu);
                auto direct = hinfty_apply_direct(f, gen);
                for (int s = 0; s < g->order; ++s)
                    worst = std::max(
                        worst, std::abs(sym.values[s] - direct.values[s]));
            }
        }
    }
    pass = pass && worst < 1e-6;

    double norm_gap = 0.0;
    for (auto& [g, name] : builtin_cases()) {
        auto gen = make_generator(builtin_psi(name, g));
        auto f = power_decay_function(1.0);
        auto est =
            calculus_norm_estimate(f, gen, 2.0, std::numbers::pi / 4);
        norm_gap =
            std::max(norm_gap, std::abs(est.lower_bound - est.p2_exact));
    }
    pass = pass && norm_gap <= 1e-8;

    auto f = power_decay_function(1.0);
    ContourConfig cfg;
    cfg.tol = 1e-10;
    cplx direct = f.eval(1.0);
    double e16 = std::abs(
        contour_value_fixed(f, 1.0, std::numbers::pi / 4, 16, cfg) - direct);
    double e32 = std::abs(
        contour_value_fixed(f, 1.0, std::numbers::pi / 4, 32, cfg) - direct);
    double e64 = std::abs(
        contour_value_fixed(f, 1.0, std::numbers::pi / 4, 64, cfg) - direct);
    bool order_ok = e16 >= 4.0 * e32 && e32 >= 4.0 * e64;
    pass = pass && order_ok;

    double dt = seconds_since(t0);
    pass = pass && dt < 10.0;
    report(7, "H-infinity calculus", pass,
           "contour vs direct " + fmt17(worst) + ", p=2 formula gap " +
               fmt17(norm_gap) + ", halving gains " + fmt17(e16 / e32) +
               "x / " + fmt17(e32 / e64) + "x, " + fmt17(dt) + " s");
}

void criterion_faults() {
    bool pi_fault_named = false;
    {
        auto g = cyclic_group(3);
        auto psi = builtin_psi("circle", g);
        auto bad = std::make_shared<const Cocycle>(
            corrupt_pi_sign(extract_cocycle(psi)));
        auto rep = verify_weight_compat_with(g, psi, bad, 1e-10, 33);
        pi_fault_named = !rep.pass && !rep.failed_invariants.empty();
    }

    bool cayley_fault_named = false;
    std::string axiom;
    {
        auto good = symmetric_group(3);
        auto table = good->cayley;
        table[1 * 6 + 2] = table[1 * 6 + 2] == 0 ? 3 : 0;
        try {
            finish_group(6, table, "corrupted");
        } catch (const GroupValidationError& e) {
            axiom = e.axiom();
            cayley_fault_named = !axiom.empty() && !e.witness().empty();
        }
    }

    report(8, "fault injection", pi_fault_named && cayley_fault_named,
           "pi sign flip fails with named invariant; cayley corruption "
           "raises axiom '" +
               axiom + "' with witness");
}

}  // namespace

int main() {
    criterion_markov();
    criterion_cocycle();
    criterion_dilation();
    criterion_weight();
    criterion_crossed();
    criterion_gaussian();
    criterion_hcalc();
    criterion_faults();
    if (g_failures == 0)
        std::printf("acceptance: all 8 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
