#include "fmdil/cocycle.hpp"

#include <algorithm>
#include <cmath>

namespace fmdil {

namespace {

Eigen::MatrixXd gram_unchecked(const SymbolFunction& psi) {
    const auto& g = *psi.group;
    const int n = g.order;
    Eigen::MatrixXd k(n, n);
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r)
            k(s, r) = 0.5 * (psi.values[s].real() + psi.values[r].real() -
                             psi.values[g.mul(g.inv(s), r)].real());
    return 0.5 * (k + k.transpose());
}

}  // namespace

Eigen::MatrixXd gram_from_psi(const SymbolFunction& psi, double cert_tol) {
    auto cert = is_cond_negative_type(psi, cert_tol);
    if (!cert.verdict)
        throw std::invalid_argument(
            "symbol is not conditionally of negative type (failed check: " +
            cert.failure + ")");
    return gram_unchecked(psi);
}

Cocycle extract_cocycle(const SymbolFunction& psi, double rank_tol,
                        double cert_tol, EigenOrder order) {
    auto cert = is_cond_negative_type(psi, cert_tol);
    if (!cert.verdict)
        throw std::invalid_argument(
            "cocycle extraction requires a certified symbol (failed check: " +
            cert.failure + ")");

    const auto& g = *psi.group;
    const int n = g.order;
    Eigen::MatrixXd k = gram_unchecked(psi);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
    const auto& evals = es.eigenvalues();  // ascending
    const double emax = std::max(0.0, evals(n - 1));
    const double cut = rank_tol * std::max(emax, 1e-300);

    std::vector<int> kept;  // column indices of retained eigenpairs
    for (int i = n - 1; i >= 0; --i)
        if (evals(i) > cut) kept.push_back(i);
    if (order == EigenOrder::Ascending)
        std::reverse(kept.begin(), kept.end());
    const int d = static_cast<int>(kept.size());

    Cocycle c;
    c.group = psi.group;
    c.dim = d;
    c.b.assign(n, Eigen::VectorXd::Zero(d));
    if (d > 0) {
        double bmax = 1.0;
        for (int s = 0; s < n; ++s) {
            for (int j = 0; j < d; ++j)
                c.b[s](j) = es.eigenvectors()(s, kept[j]) *
                            std::sqrt(evals(kept[j]));
            bmax = std::max(bmax, c.b[s].cwiseAbs().maxCoeff());
        }
        // Snap eigen-factor noise to exact zeros (the identity row of the
        // kernel vanishes, so b(e) must be 0).
        const double snap = 1e-13 * bmax;
        for (auto& v : c.b)
            for (int j = 0; j < d; ++j)
                if (std::abs(v(j)) < snap) v(j) = 0.0;
    }

    c.pi.assign(n, Eigen::MatrixXd::Identity(d, d));
    if (d > 0) {
        Eigen::MatrixXd basis(d, n);
        for (int r = 0; r < n; ++r) basis.col(r) = c.b[r];
        Eigen::MatrixXd bbt = basis * basis.transpose();
        auto llt = bbt.llt();
        if (llt.info() != Eigen::Success)
            throw ConstructionError(
                "cocycle vectors do not span the extracted space", 0.0);
        for (int s = 0; s < n; ++s) {
            if (s == g.identity) continue;  // pi_e is the identity
            Eigen::MatrixXd target(d, n);
            for (int r = 0; r < n; ++r)
                target.col(r) = c.b[g.mul(s, r)] - c.b[s];
            // Least squares pi * basis = target, then the orthogonal polar
            // factor.
            Eigen::MatrixXd ls =
                llt.solve((target * basis.transpose()).transpose())
                    .transpose();
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(
                ls, Eigen::ComputeFullU | Eigen::ComputeFullV);
            c.pi[s] = svd.matrixU() * svd.matrixV().transpose();
        }
    }

    double res = 0.0;
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r) {
            Eigen::VectorXd dev =
                c.pi[s] * c.b[r] - (c.b[g.mul(s, r)] - c.b[s]);
            if (d > 0) res = std::max(res, dev.cwiseAbs().maxCoeff());
        }
    c.construction_residual = res;
    if (res > 1e-8)
        throw ConstructionError(
            "cocycle construction residual " + fmt17(res) +
                " exceeds 1e-8; the symbol was mis-certified or the rank cut "
                "is too aggressive",
            res);
    return c;
}

CocycleLawReport verify_cocycle_law(const Cocycle& c, double tol) {
    const auto& g = *c.group;
    const int n = g.order;
    CocycleLawReport rep;
    if (c.dim == 0) {
        rep.pass = true;
        return rep;
    }
    Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(c.dim, c.dim);
    for (int s = 0; s < n; ++s) {
        rep.orthogonality_residual = std::max(
            rep.orthogonality_residual,
            (c.pi[s].transpose() * c.pi[s] - eye).cwiseAbs().maxCoeff());
        for (int r = 0; r < n; ++r) {
            rep.cocycle_residual = std::max(
                rep.cocycle_residual,
                (c.b[g.mul(s, r)] - c.b[s] - c.pi[s] * c.b[r])
                    .cwiseAbs()
                    .maxCoeff());
            rep.homomorphism_residual = std::max(
                rep.homomorphism_residual,
                (c.pi[s] * c.pi[r] - c.pi[g.mul(s, r)])
                    .cwiseAbs()
                    .maxCoeff());
        }
    }
    if (rep.cocycle_residual > tol)
        rep.failed_invariants.push_back("cocycle-law");
    if (rep.homomorphism_residual > tol)
        rep.failed_invariants.push_back("pi-homomorphism");
    if (rep.orthogonality_residual > tol)
        rep.failed_invariants.push_back("pi-orthogonality");
    rep.pass = rep.failed_invariants.empty();
    return rep;
}

NormIdentityReport verify_norm_identity(const Cocycle& c,
                                        const SymbolFunction& psi,
                                        double tol) {
    NormIdentityReport rep;
    for (int s = 0; s < c.group->order; ++s)
        rep.max_residual =
            std::max(rep.max_residual,
                     std::abs(c.b[s].squaredNorm() - psi.values[s].real()));
    rep.pass = rep.max_residual <= tol;
    return rep;
}

double gram_reproduction_residual(const Cocycle& c, const Eigen::MatrixXd& k) {
    double res = 0.0;
    const int n = c.group->order;
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r)
            res = std::max(res, std::abs(c.b[s].dot(c.b[r]) - k(s, r)));
    return res;
}

Cocycle corrupt_pi_sign(const Cocycle& c, int s, int row, int col) {
    if (c.dim == 0)
        throw std::invalid_argument(
            "cannot corrupt a zero-dimensional cocycle");
    Cocycle out = c;
    if (s < 0) s = c.group->order > 1 ? 1 : 0;
    double& entry = out.pi[s](row, col);
    entry = entry != 0.0 ? -entry : 1.0;
    return out;
}

double procrustes_residual(const Cocycle& a, const Cocycle& c) {
    if (a.dim != c.dim || a.group->order != c.group->order)
        throw std::invalid_argument("cocycle shapes differ");
    const int n = a.group->order;
    if (a.dim == 0) return 0.0;
    Eigen::MatrixXd ma(a.dim, n), mc(a.dim, n);
    for (int s = 0; s < n; ++s) {
        ma.col(s) = a.b[s];
        mc.col(s) = c.b[s];
    }
    // argmin_Q ||Q ma - mc||_F over orthogonal Q via the SVD of mc ma^T.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        mc * ma.transpose(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXd q = svd.matrixU() * svd.matrixV().transpose();
    return (q * ma - mc).cwiseAbs().maxCoeff();
}

}  // namespace fmdil
