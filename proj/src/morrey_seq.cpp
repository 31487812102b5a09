#include "morrey/morrey_seq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "morrey/kernels.hpp"

namespace morrey {

namespace {

void check_mspace(const ExtScalar& u, const ExtScalar& p) {
  if (p.is_inf()) return;  // (inf, inf) or (u=inf, p) both collapse to l_inf
  if (!(p >= 1)) throw std::invalid_argument("morrey_seq: requires p >= 1");
  if (p > u) throw std::invalid_argument("morrey_seq: requires p <= u");
}

long long dim_of(int j, int d) {
  if (j < 0 || d < 1) throw std::invalid_argument("morrey_seq: need j >= 0, d >= 1");
  const long long bits = static_cast<long long>(j) * d;
  if (bits > 60) throw std::domain_error("morrey_seq: |j*d| must be <= 60");
  return 1LL << bits;
}

// Detects an exact power of two so the contribution can be combined with the
// weight at the exponent level (keeps e.g. spread-family norms exactly 1).
bool exact_pow2(double s, long long& k) {
  if (s <= 0.0) return false;
  int e = 0;
  const double m = std::frexp(s, &e);
  if (m != 0.5) return false;
  k = e - 1;
  return true;
}

double block_lp_sum(const double* x, long long n, double p) {
  if (p == 1.0) return kernels::sum_abs(x, static_cast<std::size_t>(n));
  if (p == 2.0) return kernels::sum_sq(x, static_cast<std::size_t>(n));
  return kernels::sum_abs_pow(x, static_cast<std::size_t>(n), p);
}

double norm_m_impl(const double* lex, int j, int d, const ExtScalar& u, const ExtScalar& p) {
  const long long n = dim_of(j, d);
  check_mspace(u, p);
  if (u.is_inf()) return kernels::max_abs(lex, static_cast<std::size_t>(n));

  DyadicLayout layout(j, d);
  std::vector<double> scratch;
  const double* data = lex;
  if (!layout.is_identity()) {
    scratch.resize(static_cast<size_t>(n));
    layout.to_morton(lex, scratch.data());
    data = scratch.data();
  }

  const double pd = p.to_double();
  const ExtScalar wexp_step = ExtScalar(d) * (u.reciprocal() - p.reciprocal());
  double best = 0.0;
  for (int nu = 0; nu <= j; ++nu) {
    const long long bs = layout.block_size(nu);
    const long long bc = layout.block_count(nu);
    const ExtScalar wexp = ExtScalar(nu) * wexp_step;
    const double w = exp2_rational(wexp);
    for (long long b = 0; b < bc; ++b) {
      const double s = block_lp_sum(data + b * bs, bs, pd);
      if (s <= 0.0) continue;
      long long k = 0;
      double contrib;
      if (exact_pow2(s, k)) {
        contrib = exp2_rational(wexp + ExtScalar(k) / p);
      } else {
        contrib = w * std::pow(s, 1.0 / pd);
      }
      best = std::max(best, contrib);
    }
  }
  return best;
}

}  // namespace

double exp2_rational(const ExtScalar& e) {
  if (e.is_inf()) return std::numeric_limits<double>::infinity();
  return std::exp2(e.to_double());
}

double lp_norm(const double* x, long long n, const ExtScalar& p) {
  if (p.is_inf()) return kernels::max_abs(x, static_cast<std::size_t>(n));
  if (!(p >= 1)) throw std::invalid_argument("lp_norm: requires p in [1, inf]");
  const double pd = p.to_double();
  const double s = block_lp_sum(x, n, pd);
  if (s <= 0.0) return 0.0;
  long long k = 0;
  if (exact_pow2(s, k)) return exp2_rational(ExtScalar(k) / p);
  return std::pow(s, 1.0 / pd);
}

void MorreyVector::validate() const {
  check_mspace(u, p);
  if (size() != dim_of(j, d)) {
    throw std::invalid_argument("MorreyVector: coefficient count must be 2^{jd}");
  }
}

MorreyVector make_vector(int j, int d, const ExtScalar& u, const ExtScalar& p) {
  check_mspace(u, p);
  MorreyVector v;
  v.j = j;
  v.d = d;
  v.u = u;
  v.p = p;
  v.coeffs.assign(static_cast<size_t>(dim_of(j, d)), 0.0);
  return v;
}

double norm_m(const MorreyVector& v) {
  v.validate();
  return norm_m_impl(v.coeffs.data(), v.j, v.d, v.u, v.p);
}

double norm_truncated(const std::vector<MorreyVector>& levels, const ExtScalar& sigma,
                      const ExtScalar& u, const ExtScalar& p, const ExtScalar& q, int J) {
  if (J < 0) return 0.0;
  if (static_cast<int>(levels.size()) < J + 1) {
    throw std::invalid_argument("norm_truncated: needs levels 0..J");
  }
  if (!(q > 0)) throw std::invalid_argument("norm_truncated: q must satisfy 0 < q <= inf");

  const int d = levels[0].d;
  const ExtScalar weight_step = sigma - ExtScalar(d) * u.reciprocal();
  const bool q_inf = q.is_inf();
  const double qd = q.to_double();
  double acc = 0.0;
  for (int j = 0; j <= J; ++j) {
    const MorreyVector& lv = levels[static_cast<size_t>(j)];
    if (lv.j != j || lv.d != d || !(lv.u == u) || !(lv.p == p)) {
      throw std::invalid_argument("norm_truncated: level context mismatch");
    }
    const double term = exp2_rational(ExtScalar(j) * weight_step) * norm_m(lv);
    if (q_inf) {
      acc = std::max(acc, term);
    } else if (term > 0.0) {
      acc += std::pow(term, qd);
    }
  }
  return q_inf ? acc : (acc > 0.0 ? std::pow(acc, 1.0 / qd) : 0.0);
}

double OpNormFormula::value() const { return exp2_rational(exponent); }

OpNormFormula op_norm_formula(MSpace src, MSpace dst, int j, int d) {
  dim_of(j, d);
  check_mspace(src.u, src.p);
  check_mspace(dst.u, dst.p);
  if (src.u.is_inf()) src.p = ExtScalar::inf();
  if (dst.u.is_inf()) dst.p = ExtScalar::inf();
  const ExtScalar jd(static_cast<long long>(j) * d);

  if (src.u.is_inf() && dst.u.is_inf()) return {ExtScalar(0), true, false};
  if (src.u.is_inf()) return {jd * dst.u.reciprocal(), true, false};
  if (dst.u.is_inf()) return {ExtScalar(0), true, false};

  if (src.p >= dst.p) {
    if (dst.u >= src.u) return {ExtScalar(0), true, false};
    return {jd * (dst.u.reciprocal() - src.u.reciprocal()), true, false};
  }
  // p1 < p2
  if (dst.p / dst.u <= src.p / src.u) return {ExtScalar(0), true, false};
  return {jd * (dst.u.reciprocal() - src.p / (src.u * dst.p)), false, true};
}

namespace {

struct RatioEval {
  int j, d;
  MSpace src, dst;
  double operator()(const std::vector<double>& v) const {
    const double ns = norm_m_impl(v.data(), j, d, src.u, src.p);
    if (ns <= 0.0) return 0.0;
    return norm_m_impl(v.data(), j, d, dst.u, dst.p) / ns;
  }
};

std::vector<std::vector<double>> structured_candidates(int j, int d) {
  const long long n = dim_of(j, d);
  DyadicLayout layout(j, d);
  std::vector<std::vector<double>> cands;

  std::vector<double> spike(static_cast<size_t>(n), 0.0);
  spike[0] = 1.0;
  cands.push_back(spike);
  cands.emplace_back(static_cast<size_t>(n), 1.0);

  for (int nu = 1; nu <= j; ++nu) {
    const long long bs = layout.block_size(nu);
    const long long bc = layout.block_count(nu);
    // one unit entry per level-nu block (the spread pattern)
    std::vector<double> spread(static_cast<size_t>(n), 0.0);
    for (long long b = 0; b < bc; ++b) {
      spread[static_cast<size_t>(layout.lex_of_morton(b * bs))] = 1.0;
    }
    cands.push_back(std::move(spread));
    // constant block: indicator of a single level-nu cube
    if (nu < j) {
      std::vector<double> block(static_cast<size_t>(n), 0.0);
      for (long long i = 0; i < bs; ++i) {
        block[static_cast<size_t>(layout.lex_of_morton(i))] = 1.0;
      }
      cands.push_back(std::move(block));
    }
  }
  return cands;
}

template <typename Score>
double climb(std::vector<double> v, double value, const Score& score, std::mt19937_64& rng,
             int iters) {
  if (v.empty()) return value;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  double step = 0.5;
  for (int it = 0; it < iters; ++it) {
    const std::size_t i = pick(rng);
    const double scale = kernels::max_abs(v.data(), v.size()) + 1e-3;
    const double old = v[i];
    v[i] += unit(rng) * step * scale;
    const double cand = score(v);
    if (cand > value) {
      value = cand;
    } else {
      v[i] = old;
    }
    step *= 0.995;
  }
  return value;
}

}  // namespace

double op_norm_lower_oracle(MSpace src, MSpace dst, int j, int d, const OracleOptions& opts) {
  const long long n = dim_of(j, d);
  if (n > 256) throw std::domain_error("op_norm_lower_oracle: desk scale is 2^{jd} <= 256");
  check_mspace(src.u, src.p);
  check_mspace(dst.u, dst.p);
  const RatioEval ratio{j, d, src, dst};

  double best = 0.0;
  std::vector<double> best_v;
  auto consider = [&](const std::vector<double>& v) {
    const double r = ratio(v);
    if (r > best) {
      best = r;
      best_v = v;
    }
  };

  for (const auto& v : structured_candidates(j, d)) consider(v);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::bernoulli_distribution keep(0.5);
  std::vector<double> v(static_cast<size_t>(n));
  for (int s = 0; s < opts.samples; ++s) {
    for (auto& x : v) x = unit(rng);
    if (s % 3 == 2) {
      for (auto& x : v) {
        if (!keep(rng)) x = 0.0;
      }
    }
    consider(v);
  }

  if (!best_v.empty()) {
    best = climb(best_v, best, ratio, rng, opts.polish_iters);
  }
  return best;
}

double dual_norm_lower(const MorreyVector& v, const OracleOptions& opts) {
  v.validate();
  const long long n = v.size();
  if (n > 256) throw std::domain_error("dual_norm_lower: desk scale is 2^{jd} <= 256");

  auto pairing = [&](const std::vector<double>& w) {
    const double nw = norm_m_impl(w.data(), v.j, v.d, v.u, v.p);
    if (nw <= 0.0) return 0.0;
    return std::fabs(kernels::dot(v.coeffs.data(), w.data(), w.size())) / nw;
  };

  double best = 0.0;
  std::vector<double> best_w;
  auto consider = [&](const std::vector<double>& w) {
    const double r = pairing(w);
    if (r > best) {
      best = r;
      best_w = w;
    }
  };

  // spikes: best single coordinate
  {
    std::vector<double> w(static_cast<size_t>(n), 0.0);
    std::size_t arg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (std::fabs(v.coeffs[i]) > std::fabs(v.coeffs[arg])) arg = i;
    }
    w[arg] = 1.0;
    consider(w);
  }
  consider(std::vector<double>(static_cast<size_t>(n), 1.0));
  {
    std::vector<double> sign(static_cast<size_t>(n), 0.0);
    for (std::size_t i = 0; i < sign.size(); ++i) {
      sign[i] = v.coeffs[i] > 0 ? 1.0 : (v.coeffs[i] < 0 ? -1.0 : 0.0);
    }
    consider(sign);
    if (v.p.is_finite() && v.p > 1) {
      // the l_p-dual shape sign(v)*|v|^{1/(p-1)}
      const double e = 1.0 / (v.p.to_double() - 1.0);
      std::vector<double> w(static_cast<size_t>(n), 0.0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = sign[i] * std::pow(std::fabs(v.coeffs[i]), e);
      }
      consider(w);
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> w(static_cast<size_t>(n));
  for (int s = 0; s < opts.samples; ++s) {
    for (auto& x : w) x = unit(rng);
    consider(w);
  }

  if (!best_w.empty()) {
    best = climb(best_w, best, pairing, rng, opts.polish_iters);
  }
  return best;
}

}  // namespace morrey
