#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "morrey/classifier.hpp"
#include "morrey/nuclear.hpp"
#include "morrey/params.hpp"

using namespace morrey;

namespace {
const ExtScalar kInf = ExtScalar::inf();
}

TEST_CASE("tong diagonal: identity values") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<double> ones(static_cast<size_t>(n), 1.0);
    CHECK(tong_diag_nuclear(ones, 2, 2) == static_cast<double>(n));       // t = 1
    CHECK(tong_diag_nuclear(ones, kInf, 1) == static_cast<double>(n));    // r2 <= r1
    CHECK(tong_diag_nuclear(ones, 1, kInf) == 1.0);                       // t = inf
    CHECK(tong_diag_nuclear(ones, 2, 4) ==
          doctest::Approx(std::pow(n, 0.75)).epsilon(1e-13));  // t = 4/3
  }
}

TEST_CASE("tong diagonal: weighted entries") {
  CHECK(tong_diag_nuclear({3, 4}, 2, 2) == 7.0);  // l_1 norm at t = 1
  CHECK(tong_diag_nuclear({3, -4}, 1, kInf) == 4.0);
  const double got = tong_diag_nuclear({1, 0.5, 0.25}, 2, 4);
  const double want = std::pow(1 + std::pow(0.5, 4.0 / 3) + std::pow(0.25, 4.0 / 3), 0.75);
  CHECK(got == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("tong diagonal: infinite sequences") {
  // tau_k = 2^{-k} between l_2 and l_4: closed geometric l_{4/3} sum
  const auto geo = tong_diag_nuclear_geometric(1.0, 0.5, 2, 4);
  CHECK(geo.nuclear);
  const double t = 4.0 / 3.0;
  CHECK(geo.value ==
        doctest::Approx(std::pow(1.0 / (1.0 - std::pow(0.5, t)), 1.0 / t)).epsilon(1e-13));

  // constant sequences are not nuclear (not summable, not null)
  CHECK_FALSE(tong_diag_nuclear_geometric(1.0, 1.0, 2, 4).nuclear);
  CHECK_FALSE(tong_diag_nuclear_geometric(1.0, 1.0, 1, kInf).nuclear);
  // c_0 convention at t = inf
  const auto c0 = tong_diag_nuclear_geometric(3.0, 0.5, 1, kInf);
  CHECK(c0.nuclear);
  CHECK(c0.value == 3.0);
  // finitely supported sequences are always nuclear
  const auto fin = tong_diag_nuclear_finsupp({1, 1, 1}, 2, 4);
  CHECK(fin.nuclear);
  CHECK(fin.value == doctest::Approx(std::pow(3.0, 0.75)).epsilon(1e-13));
}

TEST_CASE("canonical representations reconstruct exactly") {
  for (int n : {1, 2, 4, 7, 12}) {
    const auto c = rep_linf_to_l1(n);
    CHECK(c.bound == static_cast<double>(n));
    CHECK(c.reconstruction_error == 0.0);
  }
  for (int n : {1, 2, 3, 4, 12, 16, 64}) {
    const auto c = rep_l1_to_linf(n);
    CHECK(c.bound == 1.0);
    CHECK(c.reconstruction_error == 0.0);
    if (n <= 12) {
      CHECK(c.terms.size() == (1ull << n));
    } else {
      CHECK(c.terms.size() == static_cast<size_t>(n));
    }
  }
  CHECK_THROWS_AS(rep_l1_to_linf(13), std::domain_error);
}

TEST_CASE("nuclear formula cases") {
  // p1 <= p2 and u2 <= u1: 2^{jd}
  auto f = nuclear_formula_id_j({4, 1}, {2, 2}, 2, 1);
  CHECK(f.exact);
  CHECK(f.value() == 4.0);
  // l_inf source
  f = nuclear_formula_id_j({kInf, kInf}, {2, 1}, 3, 1);
  CHECK(f.exact);
  CHECK(f.value() == 8.0);
  // the last exact case: (1,1) -> (2,1), j=1: 2^{1 - 1 + 1/2} = sqrt 2
  f = nuclear_formula_id_j({1, 1}, {2, 1}, 1, 1);
  CHECK(f.exact);
  CHECK(f.value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // p1 > p2 with p1/u1 <= p2/u2: 2^{jd}
  f = nuclear_formula_id_j({4, 2}, {ExtScalar(3, 2), ExtScalar(3, 2)}, 2, 1);
  CHECK(f.exact);
  CHECK(f.value() == 4.0);
  // sandwich: p1 > p2 and p1/u1 > p2/u2
  f = nuclear_formula_id_j({2, 2}, {2, 1}, 2, 1);
  CHECK_FALSE(f.exact);
  CHECK(f.sandwich);
  CHECK(f.exponent == ExtScalar(2) * (ExtScalar(1) + ExtScalar(1, 4) - ExtScalar(1, 2)));
}

TEST_CASE("spread level nu0") {
  CHECK(spread_level_nu0(4, 1, 1, 2) == 2);  // 2^{nu} >= 2^{4 * 1/2}
  CHECK(spread_level_nu0(1, 1, 1, 2) == 1);
  CHECK(spread_level_nu0(3, 1, ExtScalar(3, 2), 2) == 3);  // ceil(9/4)
  CHECK(spread_level_nu0(3, 2, 1, 4) == 1);
  CHECK_THROWS_AS(spread_level_nu0(0, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("spread family samples have one signed entry per block") {
  EpsFamily fam(3, 1, 2);
  CHECK(fam.block_count() == 2);
  CHECK(fam.block_size() == 4);
  std::mt19937_64 rng(9);
  for (int s = 0; s < 50; ++s) {
    const auto dense = fam.sample_dense(rng);
    int first = 0, second = 0;
    for (int i = 0; i < 8; ++i) {
      if (dense[static_cast<size_t>(i)] != 0.0) {
        CHECK(std::fabs(dense[static_cast<size_t>(i)]) == 1.0);
        (i < 4 ? first : second)++;
      }
    }
    CHECK(first == 1);
    CHECK(second == 1);
  }
}

TEST_CASE("the full spread family averages to the identity") {
  // enumerate E for j=2, d=1, nu=1: two blocks of two cells, one signed entry
  // per block; 2^{nu d}/|E| sum eps eps^T must be the 4x4 identity
  const int n = 4, bs = 2, blocks = 2;
  double m[4][4] = {};
  int count = 0;
  for (int pos0 = 0; pos0 < bs; ++pos0) {
    for (int sg0 = -1; sg0 <= 1; sg0 += 2) {
      for (int pos1 = 0; pos1 < bs; ++pos1) {
        for (int sg1 = -1; sg1 <= 1; sg1 += 2) {
          double eps[4] = {};
          eps[pos0] = sg0;
          eps[bs + pos1] = sg1;
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m[r][c] += eps[r] * eps[c];
          ++count;
        }
      }
    }
  }
  CHECK(count == 16);  // (2 * 2^{nu d})^{blocks}
  const double w = std::ldexp(1.0, 1) / count;  // 2^{nu d} / |E|
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      CHECK(w * m[r][c] == (r == c ? 1.0 : 0.0));
    }
  }
  (void)blocks;
}

TEST_CASE("spread family in two dimensions: blockwise structure and unit norm") {
  EpsFamily fam(2, 2, 1);
  CHECK(fam.block_count() == 4);
  CHECK(fam.block_size() == 4);
  std::mt19937_64 rng(13);
  for (int s = 0; s < 30; ++s) {
    MorreyVector v = make_vector(2, 2, 4, 2);
    v.coeffs = fam.sample_dense(rng);
    int nonzero = 0;
    for (double x : v.coeffs) nonzero += x != 0.0;
    CHECK(nonzero == 4);
    CHECK(norm_m(v) == 1.0);
  }
}

TEST_CASE("nuclear upper and lower meet the formula in exact cases") {
  NuclearOptions opts;
  opts.mc_samples = 1000;
  for (const auto& [src, dst] : std::vector<std::pair<MSpace, MSpace>>{
           {{4, 1}, {2, 2}},          // 2^{jd}
           {{2, 1}, {4, 2}},          // p1 <= p2, u1 < u2
           {{1, 1}, {2, 1}},          // last exact case
           {{kInf, kInf}, {4, 2}},    // l_inf source
       }) {
    for (int j : {1, 2, 3}) {
      const auto f = nuclear_formula_id_j(src, dst, j, 1);
      REQUIRE(f.exact);
      const auto up = nuclear_upper_id_j(src, dst, j, 1, opts);
      const auto lo = nuclear_lower_id_j(src, dst, j, 1);
      CHECK(up.bound == doctest::Approx(f.value()).epsilon(1e-9));
      CHECK(lo.lower_bound == doctest::Approx(f.value()).epsilon(1e-9));
      CHECK(up.exact_reconstruction);
      CHECK(up.reconstruction_error <= 1e-10);
    }
  }
  // j = 0: the one-dimensional identity
  const auto up0 = nuclear_upper_id_j({2, 1}, {4, 2}, 0, 1, opts);
  CHECK(up0.bound == 1.0);
  CHECK(nuclear_lower_id_j({2, 1}, {4, 2}, 0, 1).lower_bound == 1.0);
}

TEST_CASE("sandwich case is bracketed with a uniform constant") {
  NuclearOptions opts;
  opts.mc_samples = 2000;
  for (const auto& [src, dst] : std::vector<std::pair<MSpace, MSpace>>{
           {{2, 2}, {2, 1}},
           {{2, ExtScalar(3, 2)}, {4, 1}},
           {{4, 4}, {2, ExtScalar(3, 2)}},
       }) {
    for (int j : {1, 2, 3}) {
      const auto f = nuclear_formula_id_j(src, dst, j, 1);
      REQUIRE(f.sandwich);
      const auto up = nuclear_upper_id_j(src, dst, j, 1, opts);
      const auto lo = nuclear_lower_id_j(src, dst, j, 1);
      CHECK(lo.lower_bound == doctest::Approx(f.value()).epsilon(1e-12));
      CHECK(lo.lower_bound <= up.bound * (1 + 1e-12));
      CHECK(up.bound <= f.value() * std::exp2(1.0 / src.p.to_double()) * (1 + 1e-9));
      if (up.kind == "spread-family") CHECK(up.mc_max_abs_z <= 6.0);
    }
  }
}

TEST_CASE("exact cases hold in two dimensions as well") {
  NuclearOptions opts;
  opts.mc_samples = 500;
  OracleOptions oopts;
  oopts.samples = 3000;
  oopts.polish_iters = 200;
  for (const auto& [src, dst] : std::vector<std::pair<MSpace, MSpace>>{
           {{4, 2}, {2, 1}},  // shrinking u
           {{2, 1}, {4, 2}},  // growing u
           {{4, 1}, {2, 2}},
       }) {
    for (int j : {1, 2}) {
      const auto f = op_norm_formula(src, dst, j, 2);
      if (f.exact) {
        const double lo = op_norm_lower_oracle(src, dst, j, 2, oopts);
        CHECK(lo == doctest::Approx(f.value()).epsilon(1e-9));
        CHECK(lo <= f.value() * (1 + 1e-12));
      }
      const auto nf = nuclear_formula_id_j(src, dst, j, 2);
      if (nf.exact) {
        const auto up = nuclear_upper_id_j(src, dst, j, 2, opts);
        const auto lb = nuclear_lower_id_j(src, dst, j, 2);
        CHECK(up.bound == doctest::Approx(nf.value()).epsilon(1e-9));
        CHECK(lb.lower_bound == doctest::Approx(nf.value()).epsilon(1e-9));
        CHECK(up.reconstruction_error <= 1e-10);
      }
    }
  }
}

TEST_CASE("duality bound uses the reverse identity") {
  // first three cases: reverse norm 1 gives exactly 2^{jd}
  auto b = nuclear_lower_id_j({4, 1}, {2, 2}, 2, 1);
  CHECK(b.witness_norm == 1.0);
  CHECK(b.trace_value == 4.0);
  CHECK(b.lower_bound == 4.0);
  // last exact case: reverse norm 2^{jd(1/u1 - 1/u2)}
  b = nuclear_lower_id_j({2, 1}, {4, 2}, 2, 1);
  CHECK(b.witness_exponent == ExtScalar(2) * (ExtScalar(1, 2) - ExtScalar(1, 4)));
  CHECK(b.lower_bound == doctest::Approx(std::exp2(2 * (1 - 0.5 + 0.25))).epsilon(1e-12));
}

TEST_CASE("spread members: sampled dual lower bounds stay under the analytic estimate") {
  // for eps with one entry per level-nu0 block, the source dual norm is at
  // most 2^{jd(1/p1 - 1/u1)} (#nonzeros)^{1 - 1/p1}
  const int j = 3, d = 1;
  const MSpace src{ExtScalar(2), ExtScalar(3, 2)};
  const MSpace dst{ExtScalar(2), ExtScalar(1)};
  const int nu0 = spread_level_nu0(j, d, dst.p, dst.u);
  EpsFamily fam(j, d, nu0);
  const double analytic =
      exp2_rational(ExtScalar(j * d) * (src.p.reciprocal() - src.u.reciprocal()) +
                    ExtScalar((j - nu0) * d) * (ExtScalar(1) - src.p.reciprocal()));
  std::mt19937_64 rng(23);
  OracleOptions lopts;
  lopts.samples = 800;
  lopts.polish_iters = 100;
  for (int s = 0; s < 10; ++s) {
    MorreyVector eps = make_vector(j, d, src.u, src.p);
    eps.coeffs = fam.sample_dense(rng);
    CHECK(dual_norm_lower(eps, lopts) <= analytic * (1 + 1e-12));
    CHECK(dual_norm_upper(eps) <= analytic * (1 + 1e-12));
  }
}

TEST_CASE("dual_norm_upper dominates dual_norm_lower and is exact for u = p") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> un(-2.0, 2.0);
  OracleOptions lopts;
  lopts.samples = 1500;
  lopts.polish_iters = 150;
  for (int rep = 0; rep < 10; ++rep) {
    for (const auto& [u, p] : std::vector<std::pair<ExtScalar, ExtScalar>>{
             {2, 1}, {2, 2}, {4, 2}, {4, 4}}) {
      auto v = make_vector(2, 1, u, p);
      for (auto& x : v.coeffs) x = un(rng);
      const double upper = dual_norm_upper(v);
      const double lower = dual_norm_lower(v, lopts);
      CHECK(lower <= upper * (1 + 1e-12));
      if (u == p) {
        const ExtScalar pc = p == 1 ? kInf : (ExtScalar(1) - p.reciprocal()).reciprocal();
        CHECK(upper ==
              doctest::Approx(lp_norm(v.coeffs.data(), v.size(), pc)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("diagonal trace duality never exceeds the Tong value") {
  // witness S = diag(sign tau): nu(D_tau) >= sum|tau| / ||S: l_{r2} -> l_{r1}||
  // with ||S|| = n^{(1/r1 - 1/r2)_+}
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> un(-2.0, 2.0);
  const std::vector<ExtScalar> rs{ExtScalar(1), ExtScalar(2), kInf};
  for (int n = 1; n <= 3; ++n) {
    for (const auto& r1 : rs) {
      for (const auto& r2 : rs) {
        for (int rep = 0; rep < 20; ++rep) {
          std::vector<double> tau(static_cast<size_t>(n));
          for (auto& x : tau) x = un(rng);
          double l1 = 0.0;
          for (double x : tau) l1 += std::fabs(x);
          const ExtScalar wexp = (r1.reciprocal() - r2.reciprocal()).positive_part();
          const double wnorm = std::pow(static_cast<double>(n), wexp.to_double());
          const double lower = l1 / wnorm;
          CHECK(lower <= tong_diag_nuclear(tau, r1, r2) * (1 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("level sums converge geometrically under the criterion") {
  // u1=2, p1=1, u2=4, p2=2: threshold d/u1 - d/u2 + d/t = 1
  for (const auto& eta : {ExtScalar(1, 4), ExtScalar(1, 2), ExtScalar(1)}) {
    SeqSpec src{ExtScalar(1) + eta, 2, 1, 1, 1};
    SeqSpec dst{ExtScalar(0), 4, 2, 1, 1};
    const auto ls = level_sum_bound(src, dst, 24);
    CHECK(ls.margin == eta);
    CHECK(ls.summand_ratio == doctest::Approx(std::exp2(-eta.to_double())).epsilon(1e-15));
    const double geo = 1.0 / (1.0 - ls.summand_ratio);
    CHECK(ls.partial_sum <= geo * (1 + 1e-12));
    // partial sums increase monotonically
    CHECK(level_sum_bound(src, dst, 5).partial_sum < level_sum_bound(src, dst, 6).partial_sum);
  }
  // exact boundary: summand identically 1
  SeqSpec src{ExtScalar(1), 2, 1, 1, 1};
  SeqSpec dst{ExtScalar(0), 4, 2, 1, 1};
  const auto ls = level_sum_bound(src, dst, 17);
  CHECK(ls.margin == ExtScalar(0));
  CHECK(ls.summand_ratio == 1.0);
  CHECK(ls.partial_sum == 18.0);
}

TEST_CASE("the level-sum margin sign matches the sequence-space verdict") {
  const std::vector<ExtScalar> vals{ExtScalar(1), ExtScalar(3, 2), ExtScalar(2), ExtScalar(4)};
  const std::vector<ExtScalar> sig{ExtScalar(0), ExtScalar(1, 2), ExtScalar(1),
                                   ExtScalar(11, 10), ExtScalar(2)};
  for (const auto& u1 : vals) {
    for (const auto& p1 : vals) {
      if (p1 > u1) continue;
      for (const auto& u2 : vals) {
        for (const auto& p2 : vals) {
          if (p2 > u2) continue;
          for (const auto& s1 : sig) {
            SeqSpec a{s1, u1, p1, 1, 1};
            SeqSpec b{ExtScalar(0), u2, p2, 1, 1};
            const auto v = classify_seq(a, b);
            const auto ls = level_sum_bound(a, b, 4);
            CHECK((v.nuclear == TriState::Yes) == (ls.margin > 0));
            CHECK(v.on_boundary_nuclear == (ls.margin == ExtScalar(0)));
          }
        }
      }
    }
  }
}

TEST_CASE("level sums reduce to the classical form at u = p") {
  SeqSpec src{ExtScalar(2), 2, 2, 1, 1};
  SeqSpec dst{ExtScalar(0), 4, 4, 1, 1};
  const auto ls = level_sum_bound(src, dst, 10);
  const ExtScalar delta = ExtScalar(2) - ExtScalar(1, 2) + ExtScalar(1, 4);
  const ExtScalar want = delta - tong_reciprocal(2, 4);  // delta - d/t(p1,p2)
  CHECK(ls.margin == want);
  long double direct = 0.0L;
  for (int j = 0; j <= 10; ++j) direct += std::pow(2.0L, -j * want.to_double());
  CHECK(ls.partial_sum == doctest::Approx(static_cast<double>(direct)).epsilon(1e-13));
}
