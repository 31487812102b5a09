#include <doctest.h>

#include "morrey/classifier.hpp"
#include "morrey/params.hpp"

using namespace morrey;

namespace {

const ExtScalar kInf = ExtScalar::inf();

SpaceSpec nsp(ExtScalar s, ExtScalar u, ExtScalar p, ExtScalar q, int d = 1) {
  SpaceSpec sp;
  sp.family = Family::BesovMorrey;
  sp.s = s;
  sp.u = u;
  sp.p = p;
  sp.q = q;
  sp.d = d;
  return sp;
}

SpaceSpec tsp(ExtScalar s, ExtScalar tau, ExtScalar p, ExtScalar q, int d = 1) {
  SpaceSpec sp;
  sp.family = Family::BesovTau;
  sp.s = s;
  sp.tau = tau;
  sp.p = p;
  sp.q = q;
  sp.d = d;
  return sp;
}

}  // namespace

TEST_CASE("morrey scale: the worked nuclear example") {
  // d=1, (s1,u1,p1) = (11/10, 2, 1) -> (s2,u2,p2) = (0, 4, 2)
  const auto v = classify_morrey(nsp(ExtScalar(11, 10), 2, 1, 1), nsp(0, 4, 2, 1));
  CHECK(v.threshold_nuclear == ExtScalar(1));  // 1/2 - 1/4 + 3/4
  CHECK(v.nuclear == TriState::Yes);
  CHECK(v.compact == TriState::Yes);
  CHECK(v.lhs == ExtScalar(11, 10));
}

TEST_CASE("morrey scale: compact but not nuclear") {
  const auto v = classify_morrey(nsp(ExtScalar(1, 2), 2, 1, 1), nsp(0, 4, 2, 1));
  CHECK(v.threshold_compact == ExtScalar(1, 4));  // (1/4 - 1/4)_+ = 0
  CHECK(v.compact == TriState::Yes);
  CHECK(v.nuclear == TriState::No);
}

TEST_CASE("morrey scale: classical case reduces to the Besov criterion") {
  // u_i = p_i: nuclear iff s1-s2 > d - d(1/p2 - 1/p1)_+
  for (const auto& p1 : {ExtScalar(1), ExtScalar(2), ExtScalar(4)}) {
    for (const auto& p2 : {ExtScalar(1), ExtScalar(2), ExtScalar(4)}) {
      const auto v = classify_morrey(nsp(ExtScalar(0), p1, p1, 1), nsp(ExtScalar(-2), p2, p2, 1));
      const ExtScalar want =
          ExtScalar(1) - (p2.reciprocal() - p1.reciprocal()).positive_part();
      CHECK(v.threshold_nuclear == want);
    }
  }
}

TEST_CASE("morrey scale: boundary classifies no") {
  const auto probe = classify_morrey(nsp(0, 2, 1, 1), nsp(0, 4, 2, 1));
  const auto v = classify_morrey(nsp(probe.threshold_nuclear, 2, 1, 1), nsp(0, 4, 2, 1));
  CHECK(v.nuclear == TriState::No);
  CHECK(v.on_boundary_nuclear);
  CHECK_FALSE(v.on_boundary_compact);
}

TEST_CASE("morrey scale: errors and tri-states") {
  CHECK_THROWS_AS(classify_morrey(nsp(1, 2, 1, 1, 1), nsp(0, 2, 1, 1, 2)),
                  std::invalid_argument);  // mixed dimensions
  SpaceSpec e = nsp(1, 2, 1, 1);
  e.family = Family::TLMorrey;
  CHECK_THROWS_AS(classify_morrey(e, nsp(0, 2, 1, 1)), std::invalid_argument);  // mixed letters
  // quasi-Banach p: compactness characterized, nuclearity not
  const auto v = classify_morrey(nsp(2, 2, ExtScalar(1, 2), 1), nsp(0, 4, 2, 1));
  CHECK(v.compact != TriState::NotCharacterized);
  CHECK(v.nuclear == TriState::NotCharacterized);
  const auto vq = classify_morrey(nsp(2, 2, 1, ExtScalar(1, 2)), nsp(0, 4, 2, 1));
  CHECK(vq.nuclear == TriState::NotCharacterized);
}

TEST_CASE("tau scale: worked example") {
  // (tau1,p1) = (1,1), (tau2,p2) = (0,2), d=1: gamma_bar = 1/2, s1-s2 = 1
  const auto v = classify_tau(tsp(1, 1, 1, 1), tsp(0, 0, 2, 1));
  CHECK(v.threshold_nuclear == ExtScalar(1, 2));
  CHECK(v.nuclear == TriState::Yes);
}

TEST_CASE("tau scale at tau=0 matches the classical morrey case") {
  for (const auto& p1 : {ExtScalar(1), ExtScalar(3, 2), ExtScalar(4)}) {
    for (const auto& p2 : {ExtScalar(1), ExtScalar(2)}) {
      const auto vt = classify_tau(tsp(ExtScalar(3, 2), 0, p1, 2), tsp(0, 0, p2, 2));
      const auto vm = classify_morrey(nsp(ExtScalar(3, 2), p1, p1, 2), nsp(0, p2, p2, 2));
      CHECK(vt.compact == vm.compact);
      CHECK(vt.nuclear == vm.nuclear);
      CHECK(vt.threshold_compact == vm.threshold_compact);
      CHECK(vt.threshold_nuclear == vm.threshold_nuclear);
    }
  }
}

TEST_CASE("tau scale: both above the breakpoint") {
  // tau_i > 1/p_i: nuclear iff s1-s2 > d(1 + 1/p1 - tau1 - 1/p2 + tau2)
  const auto v = classify_tau(tsp(2, 2, 2, 1), tsp(0, 1, 4, 1));
  CHECK(v.threshold_nuclear ==
        ExtScalar(1) + ExtScalar(1, 2) - ExtScalar(2) - ExtScalar(1, 4) + ExtScalar(1));
}

TEST_CASE("sequence spaces: only nuclearity is characterized") {
  SeqSpec a{ExtScalar(2), 2, 1, 1, 1};
  SeqSpec b{ExtScalar(0), 4, 2, 1, 1};
  const auto v = classify_seq(a, b);
  CHECK(v.compact == TriState::NotCharacterized);
  CHECK(v.nuclear == TriState::Yes);  // sigma1 - sigma2 = 2 > 1
  CHECK(v.threshold_nuclear == ExtScalar(1));
  CHECK(v.lhs == ExtScalar(2));

  // u_i = p_i: nuclear iff delta > d/t(p1,p2)
  SeqSpec c{ExtScalar(2), 2, 2, 1, 1};
  SeqSpec e{ExtScalar(0), 4, 4, 1, 1};
  const auto w = classify_seq(c, e);
  const ExtScalar delta = ExtScalar(2) - ExtScalar(1, 2) + ExtScalar(1, 4);
  const ExtScalar inv_t = tong_reciprocal(ExtScalar(2), ExtScalar(4));
  CHECK(w.threshold_nuclear == ExtScalar(1, 2) - ExtScalar(1, 4) + inv_t);
  CHECK((w.lhs > w.threshold_nuclear) == (delta > inv_t));

  // identical specs are never nuclear
  CHECK(classify_seq(a, a).nuclear == TriState::No);
}

TEST_CASE("special targets: bmo and Linf") {
  SpaceSpec bmo;
  bmo.family = Family::Bmo;
  bmo.d = 1;

  // s = d exactly: boundary, not nuclear
  const auto v = classify_special_target(nsp(1, 2, 1, 1), bmo);
  CHECK(v.nuclear == TriState::No);
  CHECK(v.on_boundary_nuclear);
  CHECK(v.compact == TriState::Yes);  // s = 1 > 1/u = 1/2

  const auto w = classify_special_target(nsp(ExtScalar(11, 10), 2, 1, 1), bmo);
  CHECK(w.nuclear == TriState::Yes);

  SpaceSpec linf;
  linf.family = Family::Linf;
  linf.d = 1;
  const auto z = classify_special_target(tsp(1, ExtScalar(1, 4), 2, 1), linf);
  CHECK(z.threshold_compact == ExtScalar(1, 4));  // 1/p - tau
  CHECK(z.threshold_nuclear == ExtScalar(1));     // tau < 1/p
}

TEST_CASE("special targets: Lr") {
  SpaceSpec lr;
  lr.family = Family::Lr;
  lr.p = ExtScalar(4);
  lr.d = 1;

  // E^s_{u,p,q} -> L_r with (1/r - 1/u)_+ = 0: nuclear iff s > d
  SpaceSpec e = nsp(ExtScalar(11, 10), 2, 2, 2);
  e.family = Family::TLMorrey;
  const auto v = classify_special_target(e, lr);
  CHECK(v.threshold_nuclear == ExtScalar(1));
  CHECK(v.nuclear == TriState::Yes);
  CHECK(v.compact == TriState::NotCharacterized);

  // r < u contributes the positive part: threshold 1 - (1/r - 1/u)
  SpaceSpec e2 = nsp(ExtScalar(11, 10), 4, 2, 2);
  e2.family = Family::TLMorrey;
  SpaceSpec lr2 = lr;
  lr2.p = ExtScalar(2);
  CHECK(classify_special_target(e2, lr2).threshold_nuclear == ExtScalar(3, 4));

  // tau source with tau <= 1/p: s > d(1 - (1/r - 1/p + tau)_+)
  const auto w = classify_special_target(tsp(1, ExtScalar(1, 4), 2, 1), lr2);
  CHECK(w.threshold_nuclear ==
        ExtScalar(1) - (ExtScalar(1, 2) - ExtScalar(1, 2) + ExtScalar(1, 4)).positive_part());
}

TEST_CASE("rho clan: slope-d rule") {
  SpaceSpec a, b;
  a.family = b.family = Family::RhoB;
  a.d = b.d = 3;
  a.rho = b.rho = ExtScalar(-1);
  a.p = b.p = ExtScalar(2);
  a.q = b.q = ExtScalar(1);
  a.s = ExtScalar(11, 10);
  b.s = ExtScalar(0);
  const auto v = classify_rho(a, b);
  CHECK(v.threshold_nuclear == ExtScalar(1));  // |rho| with p1 = p2
  CHECK(v.nuclear == TriState::Yes);
  CHECK(v.lhs == ExtScalar(11, 10));

  b.s = a.s;  // s1 = s2: both no
  const auto w = classify_rho(a, b);
  CHECK(w.compact == TriState::No);
  CHECK(w.nuclear == TriState::No);

  b.rho = ExtScalar(-2);
  CHECK_THROWS_AS(classify_rho(a, b), std::invalid_argument);  // mismatched rho
}

TEST_CASE("same tau corollary") {
  // p1 >= p2: threshold 1 - 1/p2 + 1/p1
  const auto v = classify_same_tau(tsp(2, ExtScalar(1, 4), 4, 1), tsp(0, ExtScalar(1, 4), 2, 1));
  CHECK(v.threshold_nuclear == ExtScalar(3, 4));
  // tau = 0 coincides with the classical criterion: 1 - (1/p2 - 1/p1)_+
  const auto w = classify_same_tau(tsp(2, 0, 1, 1), tsp(0, 0, 2, 1));
  CHECK(w.threshold_nuclear == ExtScalar(1));
  CHECK_THROWS_AS(classify_same_tau(tsp(1, 0, 1, 1), tsp(0, 1, 1, 1)), std::invalid_argument);
}

TEST_CASE("dispatcher routes mixed scales over the identities") {
  SpaceSpec e = nsp(2, 4, 2, 2);
  e.family = Family::TLMorrey;
  SpaceSpec ft = tsp(2, ExtScalar(1, 4), 2, 2);  // the same space in tau form
  ft.family = Family::TLTau;
  const auto direct = classify_morrey(e, e);
  const auto routed = classify(e, ft);
  CHECK(routed.compact == direct.compact);
  CHECK(routed.nuclear == direct.nuclear);
}

TEST_CASE("q-independence of the characterized verdicts") {
  for (const auto& q1 : {ExtScalar(1), ExtScalar(2), kInf}) {
    for (const auto& q2 : {ExtScalar(1), ExtScalar(2), kInf}) {
      const auto v = classify_morrey(nsp(ExtScalar(11, 10), 2, 1, q1), nsp(0, 4, 2, q2));
      CHECK(v.nuclear == TriState::Yes);
      CHECK(v.threshold_nuclear == ExtScalar(1));
    }
  }
}
