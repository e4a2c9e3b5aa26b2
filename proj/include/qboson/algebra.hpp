#pragma once

#include "qboson/fock.hpp"
#include "qboson/params.hpp"

namespace qboson {

/// q-integer [m] = 1 + q + ... + q^(m-1), [0] = 0.
double q_int(int m, double q);

/// q-factorial [m]! = [m][m-1]...[1], [0]! = 1.
double q_factorial(int m, double q);

/// beta_l: (beta_l f)(lambda) = f(beta*_l lambda). Grade n -> n-1; grade 0 -> zero of grade -1.
FockVector annihilate(int l, const FockVector& f);

/// beta*_l: (beta*_l f)(lambda) = [m_l(lambda)] (1 - c delta_l q^(m_0(lambda)-1)) f(beta_l lambda)
/// on lambda in Lambda_(n+1) with m_l(lambda) > 0. Grade n -> n+1.
FockVector create(int l, const FockVector& f, const ModelParams& p);

/// q^(N_l + k): multiplies f(lambda) by q^(m_l(lambda) + k).
FockVector count_op(int l, int k, const FockVector& f, const ModelParams& p);

/// H_q = a[N_0] + sum_l (beta_(l+1) beta*_l + beta*_(l+1) beta_l), built by composing
/// the primitive operators. The l-sum stops at max part + 1; all later terms vanish.
FockVector apply_H_composed(const FockVector& f, const ModelParams& p);

/// H_q through its explicit n-particle action (hopping coefficients read off lambda).
FockVector apply_H_direct(const FockVector& f, const ModelParams& p);

/// N^(-1/2) H_q N^(1/2), symmetric on l^2(Lambda_n). Requires the orthogonality domain.
FockVector apply_H_transformed(const FockVector& f, const ModelParams& p);

/// Free hopping of impenetrable bosons (the q, a, c -> 0 limit of the transformed H).
FockVector apply_H0(const FockVector& f);

}  // namespace qboson
