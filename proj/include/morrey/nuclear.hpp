#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "morrey/ext_scalar.hpp"
#include "morrey/morrey_seq.hpp"
#include "morrey/spaces.hpp"

namespace morrey {

/// One term a_k (.) y_k of a nuclear representation, with certified norm data.
/// weight scales the term's contribution to the bound; family summaries use a
/// single term with empty vectors and weight = family size factor.
struct CertTerm {
  std::vector<double> functional;
  std::vector<double> output;
  double weight = 1.0;
  double functional_bound = 0.0;  // certified upper bound on the dual norm
  double output_norm = 0.0;       // target norm (computed exactly or bounded)
};

/// Explicit witness of an upper bound on a nuclear norm:
/// bound = sum_k weight_k * functional_bound_k * output_norm_k.
///
/// Exact certificates reproduce the operator matrix entry by entry
/// (reconstruction_error is the max residual against the identity). Spread
/// families are too large to enumerate; they carry exact_reconstruction =
/// false and a seeded Monte-Carlo check of E[eps(lambda) eps] = 2^{-nu d}
/// lambda (mc_max_abs_z = worst deviation in standard errors).
struct NuclearCertificate {
  std::vector<CertTerm> terms;
  double bound = 0.0;
  double reconstruction_error = 0.0;
  bool exact_reconstruction = true;
  double mc_max_abs_z = 0.0;
  std::string kind;       // spikes | hadamard | sign-family | spread-family | polished
  int spread_level = -1;  // block level of a spread family
};

/// Trace-duality lower bound: nu(id_j) >= |trace(id_j o S)| / ||S|| with
/// S the reverse identity m_{u2,p2} -> m_{u1,p1} and trace = 2^{jd}.
struct DualityBound {
  double witness_norm = 1.0;   // certified upper bound on ||S||
  bool witness_exact = true;   // true when that bound is the exact norm
  double trace_value = 1.0;    // 2^{jd}
  double lower_bound = 1.0;    // trace_value / witness_norm
  ExtScalar witness_exponent;  // log2 of witness_norm, exact
};

// ---------------------------------------------------------------- diagonals

/// Nuclear norm of the diagonal operator D_tau : l^n_{r1} -> l^n_{r2} with
/// n = tau.size(): the l^n_{t(r1,r2)} norm of tau (sup at t = inf).
double tong_diag_nuclear(const std::vector<double>& tau, const ExtScalar& r1,
                         const ExtScalar& r2);

/// Infinite diagonal operators l_{r1} -> l_{r2}. `nuclear` is false when tau
/// fails the summability (or c_0, at t = inf) requirement; `value` is the
/// nuclear norm when nuclear.
struct InfiniteDiag {
  bool nuclear = false;
  double value = 0.0;
};

/// tau_k = first * ratio^k, k = 0, 1, 2, ...; requires 0 <= ratio <= 1.
InfiniteDiag tong_diag_nuclear_geometric(double first, double ratio, const ExtScalar& r1,
                                         const ExtScalar& r2);

/// Finitely supported tau (zero beyond the given entries).
InfiniteDiag tong_diag_nuclear_finsupp(const std::vector<double>& tau, const ExtScalar& r1,
                                       const ExtScalar& r2);

// ------------------------------------------------- canonical representations

/// id : l^n_inf -> l^n_1 as sum_k e_k* (.) e_k; bound n, residual 0.
NuclearCertificate rep_linf_to_l1(int n);

/// id : l^n_1 -> l^n_inf with bound 1: the full sign family
/// 2^{-n} sum_{eps in {-1,1}^n} eps (.) eps for n <= 12, a Sylvester-Hadamard
/// column family (1/n) sum_i h_i (.) h_i when n is a power of two.
NuclearCertificate rep_l1_to_linf(int n);

// ----------------------------------------------------- nuclear norm of id_j

/// Closed-form nuclear norm of id_j : m^{2^{jd}}_{u1,p1} -> m^{2^{jd}}_{u2,p2},
/// as value() = 2^exponent. Exact in the three coinciding cases and the last
/// display case; in the sandwich case `exact` is false and the value is the
/// lower anchor: nu(id_j) lies in [value, c*value] for a j-independent c >= 1.
struct NuclearFormula {
  ExtScalar exponent;
  bool exact = true;
  bool sandwich = false;
  double value() const;
};
NuclearFormula nuclear_formula_id_j(MSpace src, MSpace dst, int j, int d);

/// Smallest nu in {1, 2, ...} with 2^{nu d} >= 2^{j d p2/u2}; the block level
/// at which the spread family is built. p2 < u2 implies nu0 <= j (asserted).
int spread_level_nu0(int j, int d, const ExtScalar& p2, const ExtScalar& u2);

/// Sign vectors with exactly one nonzero (+-1) entry per level-nu block of
/// Q_{-j,0}. Averages to 2^{-nu d} times the identity.
class EpsFamily {
 public:
  EpsFamily(int j, int d, int nu);

  struct Sample {
    std::vector<long long> index;  // lexicographic positions, one per block
    std::vector<double> sign;
  };
  Sample sample(std::mt19937_64& rng) const;
  std::vector<double> sample_dense(std::mt19937_64& rng) const;

  long long block_count() const { return blocks_; }
  long long block_size() const { return bsize_; }
  int level() const { return nu_; }
  long long dim() const { return n_; }

 private:
  int j_, d_, nu_;
  long long blocks_, bsize_, n_;
  DyadicLayout layout_;
};

struct NuclearOptions {
  std::uint64_t seed = 42;
  int mc_samples = 10000;   // Monte-Carlo reconstruction samples
  int mc_vectors = 5;       // test vectors for the reconstruction check
  bool polish = true;       // try the numerical representation search
  int polish_iters = 1500;  // local-search steps
};

/// Upper certificate for nu(id_j). Exact cases factor through the l_inf->l_1
/// or l_1->l_inf representations (spike / Hadamard certificates, residual 0);
/// the sandwich case takes the best spread family over all block levels (the
/// level-0 family being the dense sign construction) and optionally a
/// numerically searched explicit representation when it certifies less.
NuclearCertificate nuclear_upper_id_j(MSpace src, MSpace dst, int j, int d,
                                      const NuclearOptions& opts = {});

/// Trace-duality lower bound with the reverse identity as witness.
DualityBound nuclear_lower_id_j(MSpace src, MSpace dst, int j, int d);

/// Certified upper bound on ||a | (m^{2^{jd}}_{u,p})^*||: the best block-level
/// Hoelder estimate min_nu 2^{nu d (1/p - 1/u)} sum_B ||a|_B||_{p'}.
double dual_norm_upper(const MorreyVector& a);

// ----------------------------------------------------------- level-sum bound

/// Partial sums of the levelwise nuclear bound for Id : n~^{sigma1} -> n~^{sigma2}:
/// sum_{j=0}^{J} 2^{-j d margin}, margin = delta/d - 1/t(u1, max(1,p1/p2) u2),
/// delta = sigma1 - sigma2 - d/u1 + d/u2. summand_ratio = 2^{-d margin} < 1
/// exactly when the nuclearity criterion holds.
struct LevelSum {
  double partial_sum = 0.0;
  double summand_ratio = 1.0;
  ExtScalar margin;
};
LevelSum level_sum_bound(const SeqSpec& src, const SeqSpec& dst, int J);

}  // namespace morrey
