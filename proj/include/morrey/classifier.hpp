#pragma once

#include <string>

#include "morrey/ext_scalar.hpp"
#include "morrey/spaces.hpp"

namespace morrey {

enum class TriState { Yes, No, NotCharacterized };

const char* tristate_str(TriState t);

/// Outcome of a classification query.
///
/// All criteria are strict inequalities "lhs > threshold"; on_boundary_* is
/// set when lhs equals the threshold exactly (the verdict is then "no").
/// A tri-state is NotCharacterized when the corresponding criterion is not
/// available for the queried parameters (e.g. nuclearity with p < 1, or
/// compactness of sequence-space embeddings); thresholds are only meaningful
/// for characterized properties.
struct Verdict {
  TriState compact = TriState::NotCharacterized;
  TriState nuclear = TriState::NotCharacterized;
  ExtScalar lhs;
  ExtScalar threshold_compact;
  ExtScalar threshold_nuclear;
  bool on_boundary_compact = false;
  bool on_boundary_nuclear = false;
  std::string citation;
};

/// Embeddings within one smoothness-Morrey scale (N -> N or E -> E; classical
/// B/F enter as u = p). lhs = (s1-s2)/d. Compactness accepts the quasi-Banach
/// range 0 < p < 1; nuclearity is characterized only for p_i, q_i >= 1 and is
/// reported NotCharacterized below that.
/// Throws std::invalid_argument on mixed dimensions or mixed B/F letters.
Verdict classify_morrey(const SpaceSpec& src, const SpaceSpec& dst);

/// Embeddings within the tau scale. lhs = (s1-s2)/d; thresholds are
/// gamma / gamma_bar.
Verdict classify_tau(const SpaceSpec& src, const SpaceSpec& dst);

/// Morrey sequence spaces. Only nuclearity is characterized; compact is
/// always NotCharacterized. lhs = sigma1 - sigma2.
Verdict classify_seq(const SeqSpec& src, const SeqSpec& dst);

/// Embeddings into the special targets bmo, Linf and Lr. The target spec
/// carries only its family (and r for Lr). lhs = s/d.
/// Compactness into Lr is not characterized here.
Verdict classify_special_target(const SpaceSpec& src, const SpaceSpec& target);

/// Embeddings within a rho-clan with shared rho in [-d, 0); rho = -d is the
/// classical case. lhs = s1 - s2 and the thresholds scale with |rho|
/// (the slope-d rule). Throws on mismatched rho.
Verdict classify_rho(const SpaceSpec& src, const SpaceSpec& dst);

/// tau-scale embeddings with tau1 = tau2 = tau, via the two-case display;
/// agrees with classify_tau on its whole domain.
Verdict classify_same_tau(const SpaceSpec& src, const SpaceSpec& dst);

/// Dispatcher used by the CLI: routes a pair of parsed specs to the matching
/// criterion, applying the exact scale identities (E <-> Ftau, and the
/// B-scale identity at q = inf) where a pair mixes the Morrey and tau scales.
Verdict classify(const SpaceSpec& src, const SpaceSpec& dst);

}  // namespace morrey
