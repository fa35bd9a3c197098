#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "fmdil/common.hpp"
#include "fmdil/errors.hpp"

namespace fmdil {

// A finite group given by its Cayley table. Elements are the indices
// 0..order-1 and the identity is always index 0 (the loader relabels if an
// explicit table puts it elsewhere). Immutable after construction; the
// counting measure is the implied Haar measure.
struct FiniteGroup {
    int order = 0;
    std::vector<int> cayley;   // row-major order x order, cayley[a*order+b] = a*b
    int identity = 0;
    std::vector<int> inverse;  // inverse[a]*a = a*inverse[a] = identity
    std::string name;

    int mul(int a, int b) const { return cayley[a * order + b]; }
    int inv(int a) const { return inverse[a]; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// True when both handles refer to the same group, either literally or by
// identical table content.
bool same_group(const GroupPtr& a, const GroupPtr& b);

// Builds a group from a textual spec. Accepted forms:
//   "cyclic N"     "dihedral N"      "symmetric N" (N <= 5)
//   "product <spec> <spec>"   (e.g. "product cyclic 2 cyclic 3")
//   "file PATH" or a bare path to a Cayley-table file
// The table is validated exhaustively (identity, inverses, associativity,
// Latin rows/columns); the first violated axiom is reported with a witness.
GroupPtr load_group(const std::string& spec);

// Parses the Cayley-table file format: first line "order N", then N lines of
// N whitespace-separated element indices.
GroupPtr load_group_file(const std::string& path);

// Validates a raw table and returns the finished group (identity relabelled
// to index 0 when necessary). Throws GroupValidationError.
GroupPtr finish_group(int order, std::vector<int> cayley, std::string name);

// Direct constructors for the builtin families.
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);   // order 2n
GroupPtr symmetric_group(int n);  // n <= 5, elements = lex-ordered permutations
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);

// One-line notation of the k-th element of symmetric_group(n), in the same
// lexicographic enumeration the constructor uses.
std::vector<int> symmetric_group_permutation(int n, int index);

// The left regular representation: permutation matrix with entry (r, r') = 1
// iff r = s*r'.
Eigen::MatrixXcd left_regular(const FiniteGroup& g, int s);

// An element sum_s c_s lambda_s of the group von Neumann algebra, stored by
// coefficients.
struct GroupAlgebraElement {
    GroupPtr group;
    std::vector<cplx> coeffs;  // size group->order

    static GroupAlgebraElement zero(GroupPtr g);
    static GroupAlgebraElement basis(GroupPtr g, int s);  // lambda_s
};

GroupAlgebraElement ga_add(const GroupAlgebraElement& x,
                           const GroupAlgebraElement& y);
GroupAlgebraElement ga_scale(cplx c, const GroupAlgebraElement& x);
// Group-algebra product (convolution of coefficient functions).
GroupAlgebraElement ga_mul(const GroupAlgebraElement& x,
                           const GroupAlgebraElement& y);
// x* with coefficients conj(c_{s^-1}).
GroupAlgebraElement ga_adjoint(const GroupAlgebraElement& x);

// Matrix rendering M(x) = sum_s c_s lambda_s in the left regular
// representation.
Eigen::MatrixXcd to_matrix(const GroupAlgebraElement& x);

// Canonical trace: the coefficient at the identity; equals (1/|G|) tr M(x).
cplx plancherel_trace(const GroupAlgebraElement& x);

// Noncommutative L^p norm against the normalized trace:
// ((1/|G|) sum sigma_i^p)^(1/p) over singular values of M(x); the operator
// norm for p = infinity. p < 1 is rejected.
double lp_norm(const GroupAlgebraElement& x, double p);

double max_coeff_deviation(const GroupAlgebraElement& x,
                           const GroupAlgebraElement& y);

// Writes a complex matrix as CSV of "re,im" pairs.
std::string matrix_to_csv(const Eigen::MatrixXcd& m);

}  // namespace fmdil
