#include "morrey/nuclear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "morrey/kernels.hpp"
#include "morrey/params.hpp"

namespace morrey {

namespace {

long long dim_of(int j, int d) {
  if (j < 0 || d < 1) throw std::invalid_argument("nuclear: need j >= 0, d >= 1");
  const long long bits = static_cast<long long>(j) * d;
  if (bits > 60) throw std::domain_error("nuclear: |j*d| must be <= 60");
  return 1LL << bits;
}

void check_desk(long long n) {
  if (n > 256) throw std::domain_error("nuclear: desk scale is 2^{jd} <= 256");
}

ExtScalar conjugate(const ExtScalar& p) {
  // 1/p + 1/p' = 1 on [1, inf]
  if (p.is_inf()) return ExtScalar(1);
  if (p == 1) return ExtScalar::inf();
  return (ExtScalar(1) - p.reciprocal()).reciprocal();
}

void normalize_inf(MSpace& m) {
  if (m.u.is_inf()) m.p = ExtScalar::inf();
}

std::vector<double> hadamard(int n) {
  // Sylvester construction; n must be a power of two.
  std::vector<double> h(static_cast<size_t>(n) * n, 1.0);
  for (int blk = 1; blk < n; blk *= 2) {
    for (int r = 0; r < blk; ++r) {
      for (int c = 0; c < blk; ++c) {
        const double v = h[static_cast<size_t>(r) * n + c];
        h[static_cast<size_t>(r) * n + c + blk] = v;
        h[static_cast<size_t>(r + blk) * n + c] = v;
        h[static_cast<size_t>(r + blk) * n + c + blk] = -v;
      }
    }
  }
  return h;
}

double identity_residual(const NuclearCertificate& cert, long long n) {
  std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
  for (const auto& t : cert.terms) {
    for (long long r = 0; r < n; ++r) {
      const double yr = t.output[static_cast<size_t>(r)] * t.weight;
      if (yr == 0.0) continue;
      for (long long c = 0; c < n; ++c) {
        m[static_cast<size_t>(r) * n + c] += yr * t.functional[static_cast<size_t>(c)];
      }
    }
  }
  double res = 0.0;
  for (long long r = 0; r < n; ++r) {
    for (long long c = 0; c < n; ++c) {
      const double want = r == c ? 1.0 : 0.0;
      res = std::max(res, std::fabs(m[static_cast<size_t>(r) * n + c] - want));
    }
  }
  return res;
}

MorreyVector with_coeffs(int j, int d, const MSpace& space, std::vector<double> coeffs) {
  MorreyVector v;
  v.j = j;
  v.d = d;
  v.u = space.u;
  v.p = space.p;
  v.coeffs = std::move(coeffs);
  return v;
}

NuclearCertificate spike_certificate(MSpace src, MSpace dst, int j, int d) {
  const long long n = dim_of(j, d);
  NuclearCertificate cert;
  cert.kind = "spikes";
  cert.terms.reserve(static_cast<size_t>(n));
  double bound = 0.0;
  for (long long k = 0; k < n; ++k) {
    CertTerm t;
    t.functional.assign(static_cast<size_t>(n), 0.0);
    t.functional[static_cast<size_t>(k)] = 1.0;
    t.output = t.functional;
    t.functional_bound = dual_norm_upper(with_coeffs(j, d, src, t.functional));
    t.output_norm = norm_m(with_coeffs(j, d, dst, t.output));
    bound += t.weight * t.functional_bound * t.output_norm;
    cert.terms.push_back(std::move(t));
  }
  cert.bound = bound;
  cert.reconstruction_error = identity_residual(cert, n);
  cert.exact_reconstruction = true;
  return cert;
}

NuclearCertificate hadamard_certificate(MSpace src, MSpace dst, int j, int d) {
  const long long n = dim_of(j, d);
  const auto h = hadamard(static_cast<int>(n));
  NuclearCertificate cert;
  cert.kind = "hadamard";
  cert.terms.reserve(static_cast<size_t>(n));
  double bound = 0.0;
  for (long long i = 0; i < n; ++i) {
    CertTerm t;
    t.weight = 1.0 / static_cast<double>(n);
    t.functional.resize(static_cast<size_t>(n));
    for (long long r = 0; r < n; ++r) {
      t.functional[static_cast<size_t>(r)] = h[static_cast<size_t>(r) * n + i];
    }
    t.output = t.functional;
    t.functional_bound = dual_norm_upper(with_coeffs(j, d, src, t.functional));
    t.output_norm = norm_m(with_coeffs(j, d, dst, t.output));
    bound += t.weight * t.functional_bound * t.output_norm;
    cert.terms.push_back(std::move(t));
  }
  cert.bound = bound;
  cert.reconstruction_error = identity_residual(cert, n);
  cert.exact_reconstruction = true;
  return cert;
}

// ------------------------------------------------------------------- polish

std::vector<double> invert(std::vector<double> a, long long n, bool& ok) {
  std::vector<double> inv(static_cast<size_t>(n) * n, 0.0);
  for (long long i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = 1.0;
  for (long long col = 0; col < n; ++col) {
    long long piv = col;
    for (long long r = col + 1; r < n; ++r) {
      if (std::fabs(a[static_cast<size_t>(r) * n + col]) >
          std::fabs(a[static_cast<size_t>(piv) * n + col])) {
        piv = r;
      }
    }
    if (std::fabs(a[static_cast<size_t>(piv) * n + col]) < 1e-12) {
      ok = false;
      return inv;
    }
    if (piv != col) {
      for (long long c = 0; c < n; ++c) {
        std::swap(a[static_cast<size_t>(piv) * n + c], a[static_cast<size_t>(col) * n + c]);
        std::swap(inv[static_cast<size_t>(piv) * n + c], inv[static_cast<size_t>(col) * n + c]);
      }
    }
    const double diag = a[static_cast<size_t>(col) * n + col];
    for (long long c = 0; c < n; ++c) {
      a[static_cast<size_t>(col) * n + c] /= diag;
      inv[static_cast<size_t>(col) * n + c] /= diag;
    }
    for (long long r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[static_cast<size_t>(r) * n + col];
      if (f == 0.0) continue;
      for (long long c = 0; c < n; ++c) {
        a[static_cast<size_t>(r) * n + c] -= f * a[static_cast<size_t>(col) * n + c];
        inv[static_cast<size_t>(r) * n + c] -= f * inv[static_cast<size_t>(col) * n + c];
      }
    }
  }
  ok = true;
  return inv;
}

// Representation id = sum_k row_k(Y^{-1}) (.) col_k(Y); the certified cost is
// sum_k dual_upper(row_k) * ||col_k||_{m2}.
double representation_cost(const std::vector<double>& y, MSpace src, MSpace dst, int j, int d,
                           bool& ok) {
  const long long n = dim_of(j, d);
  const auto a = invert(y, n, ok);
  if (!ok) return 0.0;
  double cost = 0.0;
  std::vector<double> row(static_cast<size_t>(n)), col(static_cast<size_t>(n));
  for (long long k = 0; k < n; ++k) {
    for (long long c = 0; c < n; ++c) row[static_cast<size_t>(c)] = a[static_cast<size_t>(k) * n + c];
    for (long long r = 0; r < n; ++r) col[static_cast<size_t>(r)] = y[static_cast<size_t>(r) * n + k];
    cost += dual_norm_upper(with_coeffs(j, d, src, row)) * norm_m(with_coeffs(j, d, dst, col));
  }
  return cost;
}

bool polish_representation(MSpace src, MSpace dst, int j, int d, const NuclearOptions& opts,
                           NuclearCertificate& out) {
  const long long n = dim_of(j, d);
  if (n > 16) return false;

  std::vector<double> y = hadamard(static_cast<int>(n));
  bool ok = false;
  double cost = representation_cost(y, src, dst, j, d, ok);
  if (!ok) return false;

  std::mt19937_64 rng(opts.seed ^ 0x706f6c69736865llu);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, y.size() - 1);
  double step = 0.4;
  for (int it = 0; it < opts.polish_iters; ++it) {
    const std::size_t i = pick(rng);
    const double old = y[i];
    y[i] += unit(rng) * step * (1.0 + std::fabs(old));
    bool cand_ok = false;
    const double cand = representation_cost(y, src, dst, j, d, cand_ok);
    if (cand_ok && cand < cost) {
      cost = cand;
    } else {
      y[i] = old;
    }
    step *= 0.998;
  }

  const auto a = invert(y, n, ok);
  if (!ok) return false;

  NuclearCertificate cert;
  cert.kind = "polished";
  double bound = 0.0;
  for (long long k = 0; k < n; ++k) {
    CertTerm t;
    t.functional.resize(static_cast<size_t>(n));
    t.output.resize(static_cast<size_t>(n));
    for (long long c = 0; c < n; ++c) t.functional[static_cast<size_t>(c)] = a[static_cast<size_t>(k) * n + c];
    for (long long r = 0; r < n; ++r) t.output[static_cast<size_t>(r)] = y[static_cast<size_t>(r) * n + k];
    t.functional_bound = dual_norm_upper(with_coeffs(j, d, src, t.functional));
    t.output_norm = norm_m(with_coeffs(j, d, dst, t.output));
    bound += t.weight * t.functional_bound * t.output_norm;
    cert.terms.push_back(std::move(t));
  }
  cert.bound = bound;
  cert.reconstruction_error = identity_residual(cert, n);
  cert.exact_reconstruction = true;
  if (cert.reconstruction_error > 1e-10) return false;
  out = std::move(cert);
  return true;
}

}  // namespace

// -------------------------------------------------------------- Tong diagonal

double tong_diag_nuclear(const std::vector<double>& tau, const ExtScalar& r1,
                         const ExtScalar& r2) {
  const ExtScalar t = tong_number(r1, r2);
  return lp_norm(tau.data(), static_cast<long long>(tau.size()), t);
}

InfiniteDiag tong_diag_nuclear_geometric(double first, double ratio, const ExtScalar& r1,
                                         const ExtScalar& r2) {
  if (!(ratio >= 0.0) || !(ratio <= 1.0) || !std::isfinite(first)) {
    throw std::invalid_argument("tong_diag_nuclear_geometric: needs 0 <= ratio <= 1");
  }
  const ExtScalar t = tong_number(r1, r2);
  const double a = std::fabs(first);
  if (a == 0.0) return {true, 0.0};
  if (ratio == 1.0) return {false, 0.0};  // constant sequence: not in c_0, not summable
  if (t.is_inf()) return {true, a};       // c_0 norm is the first (largest) entry
  const double td = t.to_double();
  return {true, a / std::pow(1.0 - std::pow(ratio, td), 1.0 / td)};
}

InfiniteDiag tong_diag_nuclear_finsupp(const std::vector<double>& tau, const ExtScalar& r1,
                                       const ExtScalar& r2) {
  return {true, tong_diag_nuclear(tau, r1, r2)};
}

// ---------------------------------------------------- canonical representations

NuclearCertificate rep_linf_to_l1(int n) {
  if (n < 1) throw std::invalid_argument("rep_linf_to_l1: n >= 1");
  NuclearCertificate cert;
  cert.kind = "spikes";
  double bound = 0.0;
  for (int k = 0; k < n; ++k) {
    CertTerm t;
    t.functional.assign(static_cast<size_t>(n), 0.0);
    t.functional[static_cast<size_t>(k)] = 1.0;
    t.output = t.functional;
    t.functional_bound = 1.0;  // ||e_k||_{(l_inf)'} = ||e_k||_1
    t.output_norm = 1.0;       // ||e_k||_1
    bound += t.weight;
    cert.terms.push_back(std::move(t));
  }
  cert.bound = bound;
  cert.reconstruction_error = identity_residual(cert, n);
  return cert;
}

NuclearCertificate rep_l1_to_linf(int n) {
  if (n < 1) throw std::invalid_argument("rep_l1_to_linf: n >= 1");
  NuclearCertificate cert;
  const bool pow2 = (n & (n - 1)) == 0;
  if (n <= 12) {
    cert.kind = "sign-family";
    const double w = std::ldexp(1.0, -n);
    const long long count = 1LL << n;
    double bound = 0.0;
    for (long long mask = 0; mask < count; ++mask) {
      CertTerm t;
      t.weight = w;
      t.functional.resize(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        t.functional[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1.0 : -1.0;
      }
      t.output = t.functional;
      t.functional_bound = 1.0;  // ||eps||_{(l_1)'} = ||eps||_inf
      t.output_norm = 1.0;
      bound += t.weight;
      cert.terms.push_back(std::move(t));
    }
    cert.bound = bound;
  } else if (pow2) {
    cert.kind = "hadamard";
    const auto h = hadamard(n);
    const double w = 1.0 / n;
    double bound = 0.0;
    for (int i = 0; i < n; ++i) {
      CertTerm t;
      t.weight = w;
      t.functional.resize(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r) t.functional[static_cast<size_t>(r)] = h[static_cast<size_t>(r) * n + i];
      t.output = t.functional;
      t.functional_bound = 1.0;
      t.output_norm = 1.0;
      bound += t.weight;
      cert.terms.push_back(std::move(t));
    }
    cert.bound = bound;
  } else {
    throw std::domain_error("rep_l1_to_linf: n > 12 requires a power of two (desk scale)");
  }
  cert.reconstruction_error = identity_residual(cert, n);
  return cert;
}

// ------------------------------------------------------ nuclear norm of id_j

double NuclearFormula::value() const { return exp2_rational(exponent); }

NuclearFormula nuclear_formula_id_j(MSpace src, MSpace dst, int j, int d) {
  dim_of(j, d);
  normalize_inf(src);
  normalize_inf(dst);
  if (src.p.is_finite() && !(src.p >= 1)) throw std::invalid_argument("nuclear: requires p1 >= 1");
  if (dst.p.is_finite() && !(dst.p >= 1)) throw std::invalid_argument("nuclear: requires p2 >= 1");
  if (src.p > src.u || dst.p > dst.u) throw std::invalid_argument("nuclear: requires p <= u");
  const ExtScalar jd(static_cast<long long>(j) * d);

  if (src.u.is_inf()) return {jd, true, false};  // l_inf source
  if (src.p <= dst.p) {
    if (dst.u <= src.u) return {jd, true, false};
    return {jd * (ExtScalar(1) - src.u.reciprocal() + dst.u.reciprocal()), true, false};
  }
  // p1 > p2, both finite
  if (src.p / src.u <= dst.p / dst.u) return {jd, true, false};
  const ExtScalar expo =
      jd * (ExtScalar(1) + dst.p / (src.p * dst.u) - src.u.reciprocal());
  return {expo, false, true};
}

int spread_level_nu0(int j, int d, const ExtScalar& p2, const ExtScalar& u2) {
  if (j < 1) throw std::invalid_argument("spread_level_nu0: needs j >= 1");
  if (p2.is_inf() || u2.is_inf()) throw std::invalid_argument("spread_level_nu0: needs finite p2, u2");
  const ExtScalar target = ExtScalar(static_cast<long long>(j) * d) * (p2 / u2);
  int nu = 1;
  while (ExtScalar(static_cast<long long>(nu) * d) < target) ++nu;
  if (p2 < u2 && nu > j) {
    throw std::logic_error("spread_level_nu0: p2 < u2 must give nu0 <= j");
  }
  return nu;
}

EpsFamily::EpsFamily(int j, int d, int nu)
    : j_(j), d_(d), nu_(nu), layout_(j, d) {
  if (nu < 0 || nu > j) throw std::invalid_argument("EpsFamily: needs 0 <= nu <= j");
  blocks_ = layout_.block_count(nu);
  bsize_ = layout_.block_size(nu);
  n_ = dim_of(j, d);
}

EpsFamily::Sample EpsFamily::sample(std::mt19937_64& rng) const {
  Sample s;
  s.index.resize(static_cast<size_t>(blocks_));
  s.sign.resize(static_cast<size_t>(blocks_));
  std::uniform_int_distribution<long long> pos(0, bsize_ - 1);
  std::bernoulli_distribution coin(0.5);
  for (long long b = 0; b < blocks_; ++b) {
    s.index[static_cast<size_t>(b)] = layout_.lex_of_morton(b * bsize_ + pos(rng));
    s.sign[static_cast<size_t>(b)] = coin(rng) ? 1.0 : -1.0;
  }
  return s;
}

std::vector<double> EpsFamily::sample_dense(std::mt19937_64& rng) const {
  std::vector<double> v(static_cast<size_t>(n_), 0.0);
  const Sample s = sample(rng);
  for (size_t i = 0; i < s.index.size(); ++i) v[static_cast<size_t>(s.index[i])] = s.sign[i];
  return v;
}

namespace {

struct SpreadBound {
  int nu = 0;
  ExtScalar exponent;        // total log2 of the bound
  ExtScalar dual_exponent;   // per-member dual-norm bound
  ExtScalar target_exponent; // per-member target-norm bound
};

SpreadBound best_spread_bound(MSpace src, MSpace dst, int j, int d) {
  // Family at block level nu: 2^{nu d} * sup ||eps||_{(m1)*} * sup ||eps||_{m2}
  // with ||eps||_{(m1)*} <= 2^{jd(1/p1 - 1/u1)} (#nonzeros)^{1/p1'} and
  // ||eps||_{m2} <= 2^{(jd/u2 - nu d/p2)_+}. nu = 0 is the dense sign family.
  const ExtScalar ip1 = src.p.reciprocal(), iu1 = src.u.reciprocal();
  const ExtScalar ip2 = dst.p.reciprocal(), iu2 = dst.u.reciprocal();
  const ExtScalar jd(static_cast<long long>(j) * d);
  SpreadBound best;
  bool have = false;
  for (int nu = 0; nu <= j; ++nu) {
    const ExtScalar nud(static_cast<long long>(nu) * d);
    const ExtScalar dual = jd * (ip1 - iu1) + (jd - nud) * (ExtScalar(1) - ip1);
    const ExtScalar targ = (jd * iu2 - nud * ip2).positive_part();
    const ExtScalar total = nud + dual + targ;
    if (!have || total < best.exponent) {
      best = {nu, total, dual, targ};
      have = true;
    }
  }
  return best;
}

}  // namespace

NuclearCertificate nuclear_upper_id_j(MSpace src, MSpace dst, int j, int d,
                                      const NuclearOptions& opts) {
  const long long n = dim_of(j, d);
  check_desk(n);
  normalize_inf(src);
  normalize_inf(dst);
  const NuclearFormula formula = nuclear_formula_id_j(src, dst, j, d);

  if (!formula.sandwich) {
    const bool value_full = formula.exponent == ExtScalar(static_cast<long long>(j) * d);
    if (value_full || j == 0) return spike_certificate(src, dst, j, d);
    return hadamard_certificate(src, dst, j, d);  // p1 <= p2, u1 < u2
  }

  // Sandwich case: best spread family over the block levels.
  const SpreadBound sb = best_spread_bound(src, dst, j, d);
  NuclearCertificate cert;
  cert.kind = "spread-family";
  cert.spread_level = sb.nu;
  CertTerm summary;
  summary.weight = exp2_rational(ExtScalar(static_cast<long long>(sb.nu) * d));
  summary.functional_bound = exp2_rational(sb.dual_exponent);
  summary.output_norm = exp2_rational(sb.target_exponent);
  cert.bound = summary.weight * summary.functional_bound * summary.output_norm;
  cert.terms.push_back(std::move(summary));
  cert.exact_reconstruction = false;

  // Monte-Carlo reconstruction check: E[eps(lambda) eps] = 2^{-nu d} lambda.
  {
    EpsFamily fam(j, d, sb.nu);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<std::vector<double>> tests;
    {
      std::vector<double> v(static_cast<size_t>(n), 0.0);
      v[0] = 1.0;
      tests.push_back(v);
      tests.emplace_back(static_cast<size_t>(n), 1.0);
      for (long long i = 0; i < n; ++i) v[static_cast<size_t>(i)] = (i % 2 == 0) ? 1.0 : -1.0;
      tests.push_back(v);
      for (long long i = 0; i < n; ++i) v[static_cast<size_t>(i)] = static_cast<double>(i + 1) / static_cast<double>(n);
      tests.push_back(v);
      while (static_cast<int>(tests.size()) < opts.mc_vectors) {
        for (auto& x : v) x = unit(rng);
        tests.push_back(v);
      }
      tests.resize(static_cast<size_t>(opts.mc_vectors));
    }
    const double factor = std::ldexp(1.0, -sb.nu * d);
    double worst = 0.0;
    double worst_dev = 0.0;
    for (const auto& lam : tests) {
      std::vector<double> sum(static_cast<size_t>(n), 0.0), sumsq(static_cast<size_t>(n), 0.0);
      for (int s = 0; s < opts.mc_samples; ++s) {
        const auto eps = fam.sample(rng);
        double pairing = 0.0;
        for (size_t b = 0; b < eps.index.size(); ++b) {
          pairing += eps.sign[b] * lam[static_cast<size_t>(eps.index[b])];
        }
        for (size_t b = 0; b < eps.index.size(); ++b) {
          const double x = pairing * eps.sign[b];
          sum[static_cast<size_t>(eps.index[b])] += x;
          sumsq[static_cast<size_t>(eps.index[b])] += x * x;
        }
      }
      const double ns = static_cast<double>(opts.mc_samples);
      for (long long k = 0; k < n; ++k) {
        const double mean = sum[static_cast<size_t>(k)] / ns;
        const double expect = factor * lam[static_cast<size_t>(k)];
        const double var =
            std::max(0.0, (sumsq[static_cast<size_t>(k)] - sum[static_cast<size_t>(k)] * mean) / (ns - 1.0));
        const double se = std::sqrt(var / ns);
        const double dev = std::fabs(mean - expect);
        worst_dev = std::max(worst_dev, dev);
        if (se > 0.0) {
          worst = std::max(worst, dev / se);
        } else if (dev > 0.0) {
          worst = std::numeric_limits<double>::infinity();
        }
      }
    }
    cert.mc_max_abs_z = worst;
    cert.reconstruction_error = worst_dev;
  }

  if (opts.polish) {
    NuclearCertificate polished;
    if (polish_representation(src, dst, j, d, opts, polished) && polished.bound < cert.bound) {
      polished.spread_level = -1;
      return polished;
    }
  }
  return cert;
}

DualityBound nuclear_lower_id_j(MSpace src, MSpace dst, int j, int d) {
  const long long bits = static_cast<long long>(j) * d;
  dim_of(j, d);
  const OpNormFormula rev = op_norm_formula(dst, src, j, d);
  DualityBound b;
  b.witness_norm = rev.value();
  b.witness_exact = rev.exact;
  b.witness_exponent = rev.exponent;
  b.trace_value = std::ldexp(1.0, static_cast<int>(bits));
  b.lower_bound = b.trace_value / b.witness_norm;
  return b;
}

double dual_norm_upper(const MorreyVector& a) {
  a.validate();
  const long long n = a.size();
  const ExtScalar pc = conjugate(a.p.is_inf() || a.u.is_inf() ? ExtScalar::inf() : a.p);

  DyadicLayout layout(a.j, a.d);
  std::vector<double> scratch;
  const double* data = a.coeffs.data();
  if (!layout.is_identity()) {
    scratch.resize(static_cast<size_t>(n));
    layout.to_morton(data, scratch.data());
    data = scratch.data();
  }
  const ExtScalar wstep = a.u.is_inf()
                              ? ExtScalar(0)
                              : ExtScalar(a.d) * (a.p.reciprocal() - a.u.reciprocal());
  double best = std::numeric_limits<double>::infinity();
  for (int nu = 0; nu <= a.j; ++nu) {
    const long long bs = layout.block_size(nu);
    const long long bc = layout.block_count(nu);
    double sum = 0.0;
    for (long long b = 0; b < bc; ++b) sum += lp_norm(data + b * bs, bs, pc);
    best = std::min(best, exp2_rational(ExtScalar(nu) * wstep) * sum);
  }
  return best;
}

LevelSum level_sum_bound(const SeqSpec& src, const SeqSpec& dst, int J) {
  src.validate();
  dst.validate();
  if (src.d != dst.d) throw std::invalid_argument("level_sum_bound: mixed dimensions");
  if (src.p < 1 || dst.p < 1 || src.q < 1 || dst.q < 1) {
    throw std::invalid_argument("level_sum_bound: requires p_i, q_i >= 1");
  }
  const ExtScalar d(src.d);
  const ExtScalar delta = src.sigma - dst.sigma - d / src.u + d / dst.u;
  const ExtScalar rate =
      ExtScalar(1) -
      (src.u.reciprocal() - min(ExtScalar(1), ratio_conv(dst.p, src.p)) * dst.u.reciprocal())
          .positive_part();
  LevelSum out;
  out.margin = delta / d - rate;
  out.summand_ratio = exp2_rational(-(d * out.margin));
  double sum = 0.0;
  for (int jj = 0; jj <= J; ++jj) {
    sum += exp2_rational(-(ExtScalar(jj) * d * out.margin));
  }
  out.partial_sum = sum;
  return out;
}

}  // namespace morrey
