#pragma once

#include <cstdint>
#include <vector>

#include "morrey/dyadic.hpp"
#include "morrey/ext_scalar.hpp"

namespace morrey {

/// Parameters of the finite Morrey sequence space m^{2^{jd}}_{u,p}.
/// u = inf collapses to l_inf regardless of p and is normalized to (inf, inf).
struct MSpace {
  ExtScalar u;
  ExtScalar p;
};

/// Coefficient vector indexed by the unit cubes inside Q_{-j,0}, in canonical
/// lexicographic order, carrying its (u, p, j, d) context.
struct MorreyVector {
  int j = 0;
  int d = 1;
  ExtScalar u = ExtScalar::inf();
  ExtScalar p = ExtScalar::inf();
  std::vector<double> coeffs;

  long long size() const { return static_cast<long long>(coeffs.size()); }
  void validate() const;  // throws on p > u, p < 1, or a length mismatch
};

MorreyVector make_vector(int j, int d, const ExtScalar& u, const ExtScalar& p);

/// The m^{2^{jd}}_{u,p} norm: sup over all dyadic cubes Q_{-nu,m} inside
/// Q_{-j,0} of |Q|^{1/u - 1/p} (sum_{k in Q} |coeff_k|^p)^{1/p}, with the max
/// modification at p = inf. Exact enumeration over every (nu, m), 0 <= nu <= j.
double norm_m(const MorreyVector& v);

/// Truncated sequence-space norm over levels 0..J: the weighted l_q combination
/// ( sum_j 2^{j q (sigma - d/u)} * L_j^q )^{1/q} of the per-level m^{(j)}_{u,p}
/// norms L_j, with the sup modification at q = inf. levels[j] holds the level-j
/// coefficients (length 2^{jd}) and must carry the same (u, p, d) context.
double norm_truncated(const std::vector<MorreyVector>& levels, const ExtScalar& sigma,
                      const ExtScalar& u, const ExtScalar& p, const ExtScalar& q, int J);

/// Closed-form operator norm of id_j : m^{2^{jd}}_{u1,p1} -> m^{2^{jd}}_{u2,p2}.
///
/// value() = 2^exponent. In the three exact cases (and both l_inf endpoint
/// cases) `exact` is true and the value is the norm; in the remaining
/// (sandwich) case `exact` is false and the value is the upper anchor: the
/// norm lies in [c*value, value] for some j-independent 0 < c <= 1.
struct OpNormFormula {
  ExtScalar exponent;
  bool exact = true;
  bool sandwich = false;
  double value() const;
};
OpNormFormula op_norm_formula(MSpace src, MSpace dst, int j, int d);

struct OracleOptions {
  std::uint64_t seed = 42;
  int samples = 10000;     // random candidates
  int polish_iters = 400;  // local-search steps per start
};

/// Certified lower bound on ||id_j : m_{u1,p1} -> m_{u2,p2}||: the best ratio
/// norm_dst(v)/norm_src(v) over a structured candidate family (spikes,
/// all-ones, one-entry-per-block spreads at every level, block indicators),
/// seeded random vectors, and a deterministic local search. Desk scale only
/// (2^{jd} <= 256).
double op_norm_lower_oracle(MSpace src, MSpace dst, int j, int d,
                            const OracleOptions& opts = {});

/// Certified lower bound on the dual norm of v as a functional on its own
/// space: max |<v, w>| / ||w|| over candidate and sampled w.
double dual_norm_lower(const MorreyVector& v, const OracleOptions& opts = {});

/// exp2 of an exact rational exponent (+inf maps to +inf).
double exp2_rational(const ExtScalar& e);

/// l_p norm of a flat array, p in [1, inf] (max at p = inf). Power-of-two
/// p-th-power sums are finished at the exponent level so dyadic values stay
/// exact.
double lp_norm(const double* x, long long n, const ExtScalar& p);

}  // namespace morrey
