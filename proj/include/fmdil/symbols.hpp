#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fmdil/group.hpp"

namespace fmdil {

// A scalar function on the group, given by its values per element index.
// Candidates for the semigroup generator are real-valued.
struct SymbolFunction {
    GroupPtr group;
    std::vector<cplx> values;
    std::string name;
};

SymbolFunction make_symbol(GroupPtr g, std::vector<cplx> values,
                           std::string name = "");

bool symbol_is_real(const SymbolFunction& s, double tol);

struct PositiveDefiniteReport {
    bool verdict = false;
    double min_eigenvalue = 0.0;
    double hermitian_residual = 0.0;
    Eigen::VectorXcd witness;  // eigenvector at the minimum, set on failure
};

// Builds the Gram matrix P(s, r) = phi(s^-1 r) and decides positive
// definiteness: P Hermitian within tol and min eigenvalue >= -tol. The
// tolerance is scaled by the matrix magnitude.
PositiveDefiniteReport is_positive_definite(const SymbolFunction& phi,
                                            double tol = kDefaultTol);

struct CndReport {
    bool verdict = false;
    // Largest eigenvalue of the Gram form restricted to the sum-zero
    // subspace; the certificate requires it <= tol.
    double max_eigenvalue = 0.0;
    double identity_residual = 0.0;   // |psi(e)|
    double symmetry_residual = 0.0;   // max |psi(s^-1) - psi(s)|
    Eigen::VectorXd witness;          // sum-zero direction, max-entry 1
    double witness_value = 0.0;       // quadratic form at the witness
    std::string failure;              // empty on success
};

// Exact certificate that psi is conditionally of negative type: psi(e) = 0,
// psi(s^-1) = psi(s), and the form sum c_i c_j psi(s_i^-1 s_j) <= tol for all
// real c with sum c_i = 0, decided by eigenanalysis on the sum-zero
// subspace. Non-real psi is rejected.
CndReport is_cond_negative_type(const SymbolFunction& psi,
                                double tol = kDefaultTol);

struct SchoenbergPoint {
    double t = 0.0;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

struct SchoenbergReport {
    bool pass = false;
    bool vacuous = false;
    std::vector<SchoenbergPoint> points;
    std::string note;
};

// Samples positive definiteness of exp(-t psi) over the grid. A fixed grid
// is a necessary-condition sampler, not a proof over all t > 0; the exact
// certificate is is_cond_negative_type.
SchoenbergReport schoenberg_check(const SymbolFunction& psi,
                                  const std::vector<double>& t_grid,
                                  double tol = kDefaultTol);

// The Fourier multiplier with symbol phi: coefficientwise product.
GroupAlgebraElement multiplier_apply(const SymbolFunction& phi,
                                     const GroupAlgebraElement& x);

// The semigroup symbol s -> exp(-t psi(s)), t >= 0.
SymbolFunction semigroup_symbol(const SymbolFunction& psi, double t);

// Builtin generator catalog:
//   "zero"            the zero function
//   "delta" / "delta:c"  0 at the identity, c elsewhere (default 1)
//   "circle"          4 sin^2(pi k / n) on a cyclic group
//   "coxeter"         word length for builtin symmetric/dihedral groups
//   "wordlength:i,j"  word length for the listed generator indices
SymbolFunction builtin_psi(const std::string& spec, const GroupPtr& g);

// Symbol file format: lines "element_index value_re [value_im]".
SymbolFunction load_symbol_file(const std::string& path, const GroupPtr& g);

// Parses "list:v1,v2,..." inline values, builtin names, or a file path.
SymbolFunction load_symbol(const std::string& spec, const GroupPtr& g);

// Word length over the given generators (closed under inverses
// automatically); throws if the generators do not generate the group.
std::vector<int> word_length(const FiniteGroup& g,
                             const std::vector<int>& generators);

}  // namespace fmdil
