#pragma once

#include "morrey/ext_scalar.hpp"
#include "morrey/spaces.hpp"

namespace morrey {

/// t(r1, r2): the exponent governing nuclearity of diagonal operators
/// l_{r1} -> l_{r2}. Equals 1 when r2 <= r1, else 1/(1 - 1/r1 + 1/r2);
/// always in [1, inf]. Requires 1 <= r1, r2 <= inf.
ExtScalar tong_number(const ExtScalar& r1, const ExtScalar& r2);

/// 1/t(r1, r2) = 1 - (1/r1 - 1/r2)_+, convenient for threshold formulas.
ExtScalar tong_reciprocal(const ExtScalar& r1, const ExtScalar& r2);

/// p*(r1, r2) = 1/((1/r2 - 1/r1)_+); coincides with t(r1,r2) exactly when
/// {r1, r2} = {1, inf}.
ExtScalar p_star(const ExtScalar& r1, const ExtScalar& r2);

/// Compactness threshold function gamma(tau1, tau2, p1, p2) for embeddings
/// between tau-scale spaces, by its three-case form. Requires tau_i >= 0 and
/// 0 < p_i <= inf, with the convention p*tau = 1 when (p, tau) = (inf, 0).
ExtScalar gamma(const ExtScalar& tau1, const ExtScalar& tau2,
                const ExtScalar& p1, const ExtScalar& p2);

/// Nuclearity threshold gamma_bar, by its three-case form; >= gamma on the
/// whole admissible range (p_i >= 1).
ExtScalar gamma_bar(const ExtScalar& tau1, const ExtScalar& tau2,
                    const ExtScalar& p1, const ExtScalar& p2);

/// a/b with the parameter conventions: inf/inf = 1, inf/finite = inf,
/// finite/inf = 0. Used for the p1/p2 factors in the threshold formulas.
ExtScalar ratio_conv(const ExtScalar& a, const ExtScalar& b);

/// Morrey <-> tau scale identities.
///
/// E^s_{u,p,q} maps to F^{s,tau}_{p,q} with tau = 1/p - 1/u for 0 < p <= u <
/// inf; the B-case identity needs q = inf. tau_to_morrey inverts this on
/// 0 <= tau < 1/p and throws std::domain_error at tau >= 1/p (where the space
/// collapses to a Hoelder-type space instead).
SpaceSpec morrey_to_tau(const SpaceSpec& spec);
SpaceSpec tau_to_morrey(const SpaceSpec& spec);

/// Which of the two rho-clan spellings to convert.
enum class RhoForm {
  Subscript,    // maps to the Morrey scale: u = -d*p/rho
  Superscript,  // maps to the tau scale: tau = (1/p)(1 + rho/d)
};

/// Canonical form of a rho-clan space: rho = -d gives the classical space,
/// otherwise the Morrey or tau space per RhoForm.
SpaceSpec rho_to_canonical(const SpaceSpec& spec, RhoForm form);

/// Sequence-space parameters of a Besov-Morrey space under the wavelet
/// isomorphism: sigma = s + d/2, same u, p, q, d.
SeqSpec seq_shift(const SpaceSpec& spec);

}  // namespace morrey
