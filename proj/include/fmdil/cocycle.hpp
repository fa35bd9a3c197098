#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "fmdil/symbols.hpp"

namespace fmdil {

// The Hilbert-space data extracted from a conditionally negative type
// symbol: vectors b(s) in R^d with <b(s), b(r)> reproducing the Gram kernel,
// and orthogonal matrices pi_s with b(sr) = b(s) + pi_s b(r) and
// ||b(s)||^2 = psi(s). The basis of R^d is solver-dependent; everything
// downstream is invariant under a global orthogonal change of basis.
struct Cocycle {
    GroupPtr group;
    int dim = 0;
    std::vector<Eigen::VectorXd> b;    // per element, size dim
    std::vector<Eigen::MatrixXd> pi;   // per element, dim x dim
    double construction_residual = 0.0;
};

using CocyclePtr = std::shared_ptr<const Cocycle>;

// The inner-product kernel K(s, r) = (psi(s) + psi(r) - psi(s^-1 r)) / 2.
// Refuses symbols that fail the conditional-negativity certificate; the
// certificate is exactly the statement that K is PSD.
Eigen::MatrixXd gram_from_psi(const SymbolFunction& psi,
                              double cert_tol = kDefaultTol);

enum class EigenOrder { Descending, Ascending };

// Factors the kernel through an eigendecomposition (rank cut at
// rank_tol * max eigenvalue), then solves for each pi_s over the spanning
// set {b(r)} in least squares and re-orthogonalizes by polar decomposition.
// Throws ConstructionError when the defining relations do not hold to 1e-8.
Cocycle extract_cocycle(const SymbolFunction& psi, double rank_tol = 1e-10,
                        double cert_tol = kDefaultTol,
                        EigenOrder order = EigenOrder::Descending);

struct CocycleLawReport {
    double cocycle_residual = 0.0;       // b(sr) - b(s) - pi_s b(r)
    double homomorphism_residual = 0.0;  // pi_s pi_r - pi_sr
    double orthogonality_residual = 0.0; // pi_s^T pi_s - I
    bool pass = false;
    std::vector<std::string> failed_invariants;
};

// Exhaustive check of the defining relations over all element pairs.
CocycleLawReport verify_cocycle_law(const Cocycle& c,
                                    double tol = kDefaultTol);

struct NormIdentityReport {
    double max_residual = 0.0;  // | ||b(s)||^2 - psi(s) |
    bool pass = false;
};

NormIdentityReport verify_norm_identity(const Cocycle& c,
                                        const SymbolFunction& psi,
                                        double tol = kDefaultTol);

// Largest deviation |<b(s), b(r)> - K(s, r)| over all pairs.
double gram_reproduction_residual(const Cocycle& c, const Eigen::MatrixXd& k);

// Solves min_Q ||Q b - b'|| over orthogonal Q (orthogonal Procrustes);
// returns the residual. Used to show two extractions differ only by a fixed
// change of basis.
double procrustes_residual(const Cocycle& a, const Cocycle& c);

// Fault-injection fixture: flips the sign of one entry of pi_s (the first
// non-identity element when s < 0). Verification suites run on the result
// must fail with a named invariant; guards against vacuous passes.
Cocycle corrupt_pi_sign(const Cocycle& c, int s = -1, int row = 0,
                        int col = 0);

}  // namespace fmdil
