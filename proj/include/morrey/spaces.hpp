#pragma once

#include <string>

#include "morrey/ext_scalar.hpp"

namespace morrey {

/// Space scales handled by the classifier.
///
/// BesovMorrey / TLMorrey carry the Morrey parameter u; BesovTau / TLTau carry
/// tau >= 0; RhoB / RhoF carry rho in [-d, 0); ClassicalB / ClassicalF are the
/// u = p (tau = 0) members; Lr stores its integrability exponent in p; Bmo and
/// Linf carry only the dimension.
enum class Family {
  BesovMorrey,
  TLMorrey,
  BesovTau,
  TLTau,
  ClassicalB,
  ClassicalF,
  RhoB,
  RhoF,
  Lr,
  Bmo,
  Linf,
};

const char* family_tag(Family f);

struct SpaceSpec {
  Family family = Family::ClassicalB;
  int d = 1;
  ExtScalar s;    // smoothness (ignored for Lr/bmo/Linf)
  ExtScalar p;    // integrability; holds r for the Lr family
  ExtScalar q;    // fine index
  ExtScalar u;    // Morrey families only
  ExtScalar tau;  // tau families only
  ExtScalar rho;  // rho families only

  /// Throws std::invalid_argument when the parameters violate the family's
  /// admissible range (e.g. p > u, tau < 0, F-scale with p = inf).
  void validate() const;

  bool is_morrey_scale() const;   // N, E, classical B/F
  bool is_tau_scale() const;      // Btau, Ftau
  bool is_rho_scale() const;      // rhoB, rhoF
  bool is_b_letter() const;       // N, B, Btau, rhoB
  bool is_special_target() const; // Lr, bmo, Linf

  /// Morrey u with classical families normalized to u = p.
  ExtScalar morrey_u() const;
};

/// Sequence-space parameters (the wavelet side): sigma replaces s.
struct SeqSpec {
  ExtScalar sigma;
  ExtScalar u;
  ExtScalar p;
  ExtScalar q;
  int d = 1;

  void validate() const;
};

}  // namespace morrey
