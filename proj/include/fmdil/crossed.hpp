#pragma once

#include <vector>

#include "fmdil/cocycle.hpp"
#include "fmdil/gaussalg.hpp"
#include "fmdil/group.hpp"

namespace fmdil {

// An element of the crossed product of the Gaussian function algebra by the
// group, stored in integrand form: the function s -> f_s whose formal sum
// over s of f_s against lambda_s is the element. The group acts by second
// quantization of the cocycle's orthogonal matrices.
struct CrossedElement {
    GroupPtr group;
    CocyclePtr cocycle;
    std::vector<GaussExp> integrand;  // size |G|, each of dim cocycle->dim
};

CrossedElement crossed_zero(const GroupPtr& g, const CocyclePtr& c);
CrossedElement crossed_unit(const GroupPtr& g, const CocyclePtr& c);

// The action alpha_s: second quantization of pi_s.
GaussExp alpha_action(const Cocycle& c, int s, const GaussExp& a);

// Embeds a group-algebra element with constant integrands: lambda_s goes to
// the pair (1, lambda_s). A unital *-homomorphism.
CrossedElement embed_J(const GroupAlgebraElement& x, const CocyclePtr& c);

// Embeds a Gaussian-algebra element at the identity. Multiplicative.
CrossedElement embed_pi(const GaussExp& a, const GroupPtr& g,
                        const CocyclePtr& c);

CrossedElement crossed_add(const CrossedElement& f, const CrossedElement& g);
CrossedElement crossed_scale(cplx c, const CrossedElement& f);

// Twisted convolution (g f)(t) = sum_s g_s alpha_s(f_{s^-1 t}); this is the
// product the commutation relation lambda_s a lambda_s^* = alpha_s(a)
// forces on integrands.
CrossedElement crossed_mul(const CrossedElement& g, const CrossedElement& f);

// (f*)_t = alpha_t(f_{t^-1})^*.
CrossedElement crossed_adjoint(const CrossedElement& f);

// The canonical weight pairing  phi(f* g) = sum_s E(f_s* g_s).
cplx weight_pair(const CrossedElement& f, const CrossedElement& g);

// The weight itself: E(f_e).
cplx crossed_weight(const CrossedElement& f);

// Integrates out the Gaussian variables: coefficient c_s = E(f_s). The
// weight-preserving conditional expectation onto the group algebra.
GroupAlgebraElement cond_expectation(const CrossedElement& f);

// Two time scalings for the dilation unitaries, which multiply the integrand
// at s by a unit Gaussian exponential built on the cocycle vector b(s):
//   A: frequency sqrt(2) * t * b(s) - linear in t, so U_t U_t' = U_{t+t'}
//      exactly at frequency level; integrating out gives exp(-t^2 psi).
//   B: frequency sqrt(2 t) * b(s) - defined for t >= 0; integrating out
//      gives exp(-t psi), the semigroup at each fixed t.
enum class Convention { A, B };

CrossedElement apply_Ut(const CrossedElement& f, double t,
                        Convention conv = Convention::A);

// Modular flow of the canonical weight. Finite groups are unimodular and
// the action preserves the Gaussian expectation, so the flow fixes every
// integrand-form element; the identity map is returned by construction.
CrossedElement modular_flow(const CrossedElement& f, double t);

// Independent rendering of a crossed element as a |G| x |G| array of
// Gaussian-algebra entries, block[r][r'] = alpha_r^-1(f_{r r'^-1}), the
// matrix of the element acting on group-indexed vectors. Block products and
// twisted conjugate-transposes of this oracle must agree with crossed_mul
// and crossed_adjoint.
using BlockMatrix = std::vector<std::vector<GaussExp>>;

BlockMatrix block_matrix(const CrossedElement& f);
BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b);
BlockMatrix block_adjoint(const BlockMatrix& a);

// Largest entrywise term deviation between two block matrices.
double block_deviation(const BlockMatrix& a, const BlockMatrix& b,
                       double freq_tol = 1e-10);

// Largest entrywise term deviation between two crossed elements.
double crossed_deviation(const CrossedElement& f, const CrossedElement& g,
                         double freq_tol = 1e-10);

}  // namespace fmdil
