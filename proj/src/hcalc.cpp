#include "fmdil/hcalc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fmdil/errors.hpp"

namespace fmdil {

namespace {

constexpr double kPi = std::numbers::pi;

// 4-point Gauss-Legendre nodes/weights on [-1, 1]; lower counts are used by
// the convergence-order probe.
struct GaussRule {
    std::vector<double> nodes, weights;
};

GaussRule gauss_rule(int points) {
    switch (points) {
        case 1:
            return {{0.0}, {2.0}};
        case 2: {
            double x = 1.0 / std::sqrt(3.0);
            return {{-x, x}, {1.0, 1.0}};
        }
        case 3: {
            double x = std::sqrt(3.0 / 5.0);
            return {{-x, 0.0, x}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
        }
        case 4: {
            double a = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
            double b = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
            double wa = (18.0 + std::sqrt(30.0)) / 36.0;
            double wb = (18.0 - std::sqrt(30.0)) / 36.0;
            return {{-b, -a, a, b}, {wb, wa, wa, wb}};
        }
        default:
            throw std::invalid_argument("supported Gauss orders: 1..4");
    }
}

}  // namespace

SectorFunction power_decay_function(double a) {
    if (a <= 0.0) throw std::invalid_argument("decay exponent must be > 0");
    SectorFunction f;
    f.name = "z^" + fmt17(a) + "/(1+z)^" + fmt17(2 * a);
    f.eval = [a](cplx z) {
        return std::exp(a * std::log(z) - 2.0 * a * std::log(1.0 + z));
    };
    f.decay_s = a;
    f.decay_c = std::pow(2.0, a);  // |1+z| >= (1+|z|)/sqrt(2) on Re z >= 0
    f.theta_max = kPi / 2.0;
    return f;
}

bool GeneratorData::is_kernel(int s) const {
    double scale = 1.0;
    for (double v : psi) scale = std::max(scale, v);
    return psi[s] <= 1e-12 * scale;
}

GeneratorData make_generator(const SymbolFunction& sym) {
    if (!symbol_is_real(sym, kDefaultTol))
        throw std::invalid_argument("generator symbol must be real");
    GeneratorData gen;
    gen.group = sym.group;
    gen.name = sym.name;
    gen.psi.reserve(sym.values.size());
    double vmax = 1.0;
    for (const auto& v : sym.values) vmax = std::max(vmax, std::abs(v.real()));
    for (const auto& v : sym.values) {
        if (v.real() < -1e-10 * vmax)
            throw std::invalid_argument(
                "generator symbol must be nonnegative");
        gen.psi.push_back(std::max(0.0, v.real()));
    }
    if (gen.psi[gen.group->identity] > 1e-10 * vmax)
        throw std::invalid_argument("generator symbol must vanish at the "
                                    "identity");
    return gen;
}

SymbolFunction resolvent(const GeneratorData& gen, cplx z) {
    double scale = std::max(1.0, std::abs(z));
    for (double v : gen.psi) scale = std::max(scale, v);
    std::vector<cplx> values;
    values.reserve(gen.psi.size());
    for (size_t s = 0; s < gen.psi.size(); ++s) {
        cplx den = z - gen.psi[s];
        if (std::abs(den) <= 1e-14 * scale)
            throw PoleError("resolvent requested at spectral value psi(" +
                                std::to_string(s) + ") = " +
                                fmt17(gen.psi[s]),
                            static_cast<int>(s));
        values.push_back(1.0 / den);
    }
    return make_symbol(gen.group, std::move(values), "resolvent");
}

SectorialityEstimate sectoriality_constant(const GeneratorData& gen,
                                           double theta,
                                           const std::vector<cplx>& grid) {
    if (theta <= 0.0 || theta >= kPi)
        throw std::invalid_argument("sector half-angle must be in (0, pi)");
    SectorialityEstimate est;
    est.analytic_upper = 1.0 / std::sin(std::min(theta, kPi / 2.0));
    for (cplx z : grid) {
        if (std::abs(std::arg(z)) <= theta)
            throw std::invalid_argument(
                "grid point inside the closed sector");
        double mind = 1e300;
        for (double v : gen.psi) mind = std::min(mind, std::abs(z - v));
        est.lower_bound = std::max(est.lower_bound, std::abs(z) / mind);
    }
    return est;
}

namespace {

struct Truncation {
    double r_min, r_max;
};

// Chooses truncation radii so both discarded tails stay an order below the
// quadrature tolerance, using the certified decay bound
// |f| <= c |z|^s / (1+|z|)^{2s} (so |f| <= c r^s near 0 and c r^{-s} at
// infinity) and dist(contour, w) >= w/2 near the origin.
Truncation derive_truncation(const SectorFunction& f, double w_min,
                             double w_max, const ContourConfig& cfg) {
    Truncation t;
    const double target = cfg.tol / 10.0;
    if (cfg.r_min > 0.0) {
        t.r_min = cfg.r_min;
    } else {
        double s1 = f.decay_s + 1.0;
        t.r_min = std::pow(target * s1 * (w_min / 2.0) * kPi / f.decay_c,
                           1.0 / s1);
        t.r_min = std::min(t.r_min, w_min / 2.0);
    }
    if (cfg.r_max > 0.0) {
        t.r_max = cfg.r_max;
    } else {
        t.r_max = std::pow(2.0 * f.decay_c / (kPi * f.decay_s * target),
                           1.0 / f.decay_s);
        t.r_max = std::max(t.r_max, 4.0 * w_max);
    }
    if (t.r_min <= 0.0 || t.r_max <= t.r_min)
        throw std::invalid_argument("degenerate contour truncation");
    return t;
}

cplx contour_pass(const SectorFunction& f, double w, double nu, int panels,
                  int gauss_points, double r_min, double r_max) {
    const GaussRule rule = gauss_rule(gauss_points);
    const double u0 = std::log(r_min), u1 = std::log(r_max);
    const double h = (u1 - u0) / panels;
    const cplx upper = std::polar(1.0, nu);
    const cplx lower = std::polar(1.0, -nu);
    cplx acc(0.0, 0.0);
    for (int p = 0; p < panels; ++p) {
        const double a = u0 + p * h;
        for (size_t q = 0; q < rule.nodes.size(); ++q) {
            const double u = a + 0.5 * h * (rule.nodes[q] + 1.0);
            const double r = std::exp(u);
            // dz = e^{+-i nu} dr with dr = r du; the lower ray runs outward,
            // the upper ray back in.
            const cplx zl = r * lower;
            const cplx zu = r * upper;
            cplx integrand = f.eval(zl) / (zl - w) * lower -
                             f.eval(zu) / (zu - w) * upper;
            acc += 0.5 * h * rule.weights[q] * integrand * r;
        }
    }
    return acc / cplx(0.0, 2.0 * kPi);
}

}  // namespace

cplx contour_value_fixed(const SectorFunction& f, double w, double nu,
                         int panels, const ContourConfig& cfg) {
    auto tr = derive_truncation(f, w, w, cfg);
    return contour_pass(f, w, nu, panels, cfg.gauss_points, tr.r_min,
                        tr.r_max);
}

cplx contour_value(const SectorFunction& f, double w, double nu,
                   const ContourConfig& cfg) {
    if (nu <= 0.0 || nu >= f.theta_max)
        throw std::invalid_argument(
            "contour angle must lie strictly inside the function's sector");
    if (w <= 0.0)
        throw std::invalid_argument("contour evaluation needs w > 0");
    auto tr = derive_truncation(f, w, w, cfg);
    cplx coarse = contour_pass(f, w, nu, cfg.init_panels, cfg.gauss_points,
                               tr.r_min, tr.r_max);
    cplx refined = coarse;
    for (int panels = 2 * cfg.init_panels; panels <= 2 * cfg.max_panels;
         panels *= 2) {
        refined = contour_pass(f, w, nu, panels, cfg.gauss_points, tr.r_min,
                               tr.r_max);
        if (std::abs(refined - coarse) <= cfg.tol) return refined;
        if (panels <= cfg.max_panels) coarse = refined;
    }
    throw QuadratureError(
        "contour quadrature did not converge: successive estimates " +
            fmt17(std::abs(refined - coarse)) + " apart at tolerance " +
            fmt17(cfg.tol),
        coarse, refined);
}

SymbolFunction hinfty_apply(const SectorFunction& f, const GeneratorData& gen,
                            double nu, const ContourConfig& cfg) {
    std::vector<cplx> values(gen.psi.size(), 0.0);
    // Deduplicate spectral values; each distinct one needs one quadrature.
    for (size_t s = 0; s < gen.psi.size(); ++s) {
        if (gen.is_kernel(s)) {
            values[s] = 0.0;
            continue;
        }
        bool found = false;
        for (size_t r = 0; r < s; ++r)
            if (!gen.is_kernel(r) &&
                std::abs(gen.psi[r] - gen.psi[s]) <= 1e-12) {
                values[s] = values[r];
                found = true;
                break;
            }
        if (!found) values[s] = contour_value(f, gen.psi[s], nu, cfg);
    }
    return make_symbol(gen.group, std::move(values),
                       f.name + "(" + gen.name + ")");
}

SymbolFunction hinfty_apply_direct(const SectorFunction& f,
                                   const GeneratorData& gen) {
    std::vector<cplx> values(gen.psi.size(), 0.0);
    for (size_t s = 0; s < gen.psi.size(); ++s)
        values[s] = gen.is_kernel(s) ? cplx(0.0, 0.0) : f.eval(gen.psi[s]);
    return make_symbol(gen.group, std::move(values),
                       f.name + "(" + gen.name + ") direct");
}

double hinf_sup_norm(const SectorFunction& f, double theta, int grid_size) {
    double sup = 0.0;
    const double lo = std::log(1e-8), hi = std::log(1e8);
    for (int i = 0; i < grid_size; ++i) {
        double r = std::exp(lo + (hi - lo) * i / (grid_size - 1));
        sup = std::max(sup, std::abs(f.eval(std::polar(r, theta))));
        sup = std::max(sup, std::abs(f.eval(std::polar(r, -theta))));
        sup = std::max(sup, std::abs(f.eval(cplx(r, 0.0))));
    }
    return sup;
}

namespace {

double lp_ratio(const SymbolFunction& symbol, const GroupAlgebraElement& x,
                double p) {
    double nx = lp_norm(x, p);
    if (nx == 0.0) return 0.0;
    return lp_norm(multiplier_apply(symbol, x), p) / nx;
}

// L^p norm of a 2x2-matrix-coefficient element rendered as a 2|G| x 2|G|
// matrix, against the normalized trace.
double lp_norm_amp2(const GroupPtr& g,
                    const std::vector<Eigen::Matrix2cd>& coeffs, double p) {
    const int n = g->order;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int s = 0; s < n; ++s) {
        for (int c = 0; c < n; ++c) {
            int r = g->mul(s, c);
            m.block<2, 2>(2 * r, 2 * c) += coeffs[s];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    double smax = sv.size() ? sv.maxCoeff() : 0.0;
    if (smax == 0.0) return 0.0;
    if (std::isinf(p)) return smax;
    double acc = 0.0;
    for (int i = 0; i < sv.size(); ++i) acc += std::pow(sv(i) / smax, p);
    acc /= static_cast<double>(2 * n);
    return smax * std::pow(acc, 1.0 / p);
}

}  // namespace

NormEstimate calculus_norm_estimate(const SectorFunction& f,
                                    const GeneratorData& gen, double p,
                                    double theta, std::uint64_t seed) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("norm estimate requires 1 < p < inf");
    NormEstimate est;
    auto symbol = hinfty_apply_direct(f, gen);
    for (const auto& v : symbol.values)
        est.p2_exact = std::max(est.p2_exact, std::abs(v));

    const auto& g = gen.group;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    // Basis elements attain the diagonal sup; random starts plus a greedy
    // coordinate ascent probe whether p != 2 exceeds it.
    for (int s = 0; s < g->order; ++s)
        est.lower_bound =
            std::max(est.lower_bound,
                     lp_ratio(symbol, GroupAlgebraElement::basis(g, s), p));
    GroupAlgebraElement best = GroupAlgebraElement::basis(g, 0);
    double best_ratio = est.lower_bound;
    for (int trial = 0; trial < 12; ++trial) {
        auto x = GroupAlgebraElement::zero(g);
        for (auto& c : x.coeffs) c = cplx(normal(rng), normal(rng));
        double r = lp_ratio(symbol, x, p);
        if (r > best_ratio) {
            best_ratio = r;
            best = x;
        }
    }
    double step = 0.5;
    for (int iter = 0; iter < 40; ++iter) {
        bool improved = false;
        for (int s = 0; s < g->order; ++s)
            for (cplx dir : {cplx(step, 0), cplx(-step, 0), cplx(0, step),
                             cplx(0, -step)}) {
                auto x = best;
                x.coeffs[s] += dir;
                double r = lp_ratio(symbol, x, p);
                if (r > best_ratio * (1.0 + 1e-12)) {
                    best_ratio = r;
                    best = x;
                    improved = true;
                }
            }
        if (!improved) step *= 0.5;
        if (step < 1e-6) break;
    }
    est.lower_bound = std::max(est.lower_bound, best_ratio);

    // 2x2 amplification.
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Eigen::Matrix2cd> coeffs(g->order);
        for (auto& m : coeffs)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    m(i, j) = cplx(normal(rng), normal(rng));
        double nx = lp_norm_amp2(g, coeffs, p);
        if (nx == 0.0) continue;
        auto mapped = coeffs;
        for (int s = 0; s < g->order; ++s) mapped[s] *= symbol.values[s];
        est.lower_bound_amp2 =
            std::max(est.lower_bound_amp2, lp_norm_amp2(g, mapped, p) / nx);
    }
    est.cb_probe = std::max(est.lower_bound, est.lower_bound_amp2);
    est.hinf_norm = hinf_sup_norm(f, theta);
    est.ratio = est.hinf_norm > 0.0 ? est.cb_probe / est.hinf_norm : 0.0;
    return est;
}

AnalyticityReport verify_analytic(const SectorFunction& f,
                                  const std::vector<cplx>& points, double h,
                                  double tol) {
    AnalyticityReport rep;
    for (cplx z : points) {
        cplx d_re = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
        cplx d_im =
            (f.eval(z + cplx(0, h)) - f.eval(z - cplx(0, h))) / (2.0 * h * cplx(0, 1));
        double scale = std::max(1.0, std::abs(d_re));
        rep.max_residual =
            std::max(rep.max_residual, std::abs(d_re - d_im) / scale);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

}  // namespace fmdil
