#include "morrey/classifier.hpp"

#include <stdexcept>

#include "morrey/params.hpp"

namespace morrey {

const char* tristate_str(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::NotCharacterized: return "not-characterized";
  }
  return "?";
}

namespace {

void decide(TriState& state, bool& boundary, const ExtScalar& lhs, const ExtScalar& thr) {
  boundary = (lhs == thr);
  state = lhs > thr ? TriState::Yes : TriState::No;
}

void check_same_d(const SpaceSpec& a, const SpaceSpec& b) {
  if (a.d != b.d) throw std::invalid_argument("classify: mixed dimensions");
}

bool banach_fine(const SpaceSpec& sp) { return sp.p >= 1 && sp.q >= 1; }

}  // namespace

Verdict classify_morrey(const SpaceSpec& src, const SpaceSpec& dst) {
  src.validate();
  dst.validate();
  check_same_d(src, dst);
  if (!src.is_morrey_scale() || !dst.is_morrey_scale()) {
    throw std::invalid_argument("classify_morrey: expects Morrey-scale spaces");
  }
  if (src.is_b_letter() != dst.is_b_letter()) {
    throw std::invalid_argument("classify_morrey: mixed B/F letters are not characterized");
  }

  const ExtScalar u1 = src.morrey_u(), u2 = dst.morrey_u();
  const ExtScalar iu1 = u1.reciprocal(), iu2 = u2.reciprocal();
  const ExtScalar d(src.d);

  Verdict v;
  v.citation = "morrey-scale";
  v.lhs = (src.s - dst.s) / d;

  const ExtScalar mc = max(ExtScalar(1), ratio_conv(dst.p, src.p));
  v.threshold_compact = iu1 - iu2 + ((iu2 - (mc * u1).reciprocal()).positive_part());
  decide(v.compact, v.on_boundary_compact, v.lhs, v.threshold_compact);

  if (banach_fine(src) && banach_fine(dst)) {
    const ExtScalar mn = max(ExtScalar(1), ratio_conv(src.p, dst.p));
    v.threshold_nuclear = iu1 - iu2 + tong_reciprocal(u1, mn * u2);
    decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
  }
  return v;
}

Verdict classify_tau(const SpaceSpec& src, const SpaceSpec& dst) {
  src.validate();
  dst.validate();
  check_same_d(src, dst);
  if (!src.is_tau_scale() || !dst.is_tau_scale()) {
    throw std::invalid_argument("classify_tau: expects tau-scale spaces");
  }
  if (src.is_b_letter() != dst.is_b_letter()) {
    throw std::invalid_argument("classify_tau: mixed B/F letters are not characterized");
  }

  Verdict v;
  v.citation = "tau-scale";
  v.lhs = (src.s - dst.s) / ExtScalar(src.d);

  v.threshold_compact = gamma(src.tau, dst.tau, src.p, dst.p);
  decide(v.compact, v.on_boundary_compact, v.lhs, v.threshold_compact);

  if (banach_fine(src) && banach_fine(dst)) {
    v.threshold_nuclear = gamma_bar(src.tau, dst.tau, src.p, dst.p);
    decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
  }
  return v;
}

Verdict classify_seq(const SeqSpec& src, const SeqSpec& dst) {
  src.validate();
  dst.validate();
  if (src.d != dst.d) throw std::invalid_argument("classify: mixed dimensions");

  Verdict v;
  v.citation = "seq-scale";
  v.lhs = src.sigma - dst.sigma;
  // Compactness of these embeddings is not characterized here.
  if (src.p >= 1 && src.q >= 1 && dst.p >= 1 && dst.q >= 1) {
    const ExtScalar d(src.d);
    const ExtScalar m = max(ExtScalar(1), ratio_conv(src.p, dst.p));
    v.threshold_nuclear =
        d / src.u - d / dst.u + d * tong_reciprocal(src.u, m * dst.u);
    decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
  }
  return v;
}

Verdict classify_special_target(const SpaceSpec& src, const SpaceSpec& target) {
  src.validate();
  target.validate();
  check_same_d(src, target);
  if (!target.is_special_target()) {
    throw std::invalid_argument("classify_special_target: target must be bmo, Linf or Lr");
  }
  const bool into_lr = target.family == Family::Lr;

  Verdict v;
  v.lhs = src.s / ExtScalar(src.d);

  if (src.is_morrey_scale()) {
    const ExtScalar iu = src.morrey_u().reciprocal();
    if (into_lr) {
      v.citation = "lr-target";
      if (banach_fine(src)) {
        v.threshold_nuclear = ExtScalar(1) - (target.p.reciprocal() - iu).positive_part();
        decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
      }
    } else {
      v.citation = target.family == Family::Bmo ? "bmo-target" : "linf-target";
      v.threshold_compact = iu;
      decide(v.compact, v.on_boundary_compact, v.lhs, v.threshold_compact);
      if (banach_fine(src)) {
        v.threshold_nuclear = ExtScalar(1);
        decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
      }
    }
    return v;
  }

  if (src.is_tau_scale()) {
    const ExtScalar ip = src.p.reciprocal();
    if (into_lr) {
      v.citation = "lr-target";
      if (banach_fine(src)) {
        const ExtScalar ir = target.p.reciprocal();
        if (src.tau >= ip) {
          v.threshold_nuclear = ExtScalar(1) + ip - src.tau - ir;
        } else {
          v.threshold_nuclear = ExtScalar(1) - (ir - ip + src.tau).positive_part();
        }
        decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
      }
    } else {
      v.citation = target.family == Family::Bmo ? "bmo-target" : "linf-target";
      v.threshold_compact = ip - src.tau;
      decide(v.compact, v.on_boundary_compact, v.lhs, v.threshold_compact);
      if (banach_fine(src)) {
        v.threshold_nuclear = ExtScalar(1) - (src.tau - ip).positive_part();
        decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
      }
    }
    return v;
  }

  throw std::invalid_argument("classify_special_target: source must be a Morrey- or tau-scale space");
}

Verdict classify_rho(const SpaceSpec& src, const SpaceSpec& dst) {
  src.validate();
  dst.validate();
  check_same_d(src, dst);
  if (!src.is_rho_scale() || !dst.is_rho_scale()) {
    throw std::invalid_argument("classify_rho: expects rho-scale spaces");
  }
  if (src.is_b_letter() != dst.is_b_letter()) {
    throw std::invalid_argument("classify_rho: mixed B/F letters are not characterized");
  }
  if (!(src.rho == dst.rho)) {
    throw std::invalid_argument("classify_rho: requires a shared rho");
  }

  const ExtScalar abs_rho = -src.rho;
  const ExtScalar ip1 = src.p.reciprocal(), ip2 = dst.p.reciprocal();

  Verdict v;
  v.citation = "rho-clan";
  v.lhs = src.s - dst.s;

  v.threshold_compact = abs_rho * (ip1 - ip2).positive_part();
  decide(v.compact, v.on_boundary_compact, v.lhs, v.threshold_compact);

  if (banach_fine(src) && banach_fine(dst)) {
    v.threshold_nuclear = abs_rho - abs_rho * (ip2 - ip1).positive_part();
    decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
  }
  return v;
}

Verdict classify_same_tau(const SpaceSpec& src, const SpaceSpec& dst) {
  src.validate();
  dst.validate();
  check_same_d(src, dst);
  if (!src.is_tau_scale() || !dst.is_tau_scale() || src.is_b_letter() != dst.is_b_letter()) {
    throw std::invalid_argument("classify_same_tau: expects same-letter tau-scale spaces");
  }
  if (!(src.tau == dst.tau)) {
    throw std::invalid_argument("classify_same_tau: requires tau1 = tau2");
  }
  const ExtScalar tau = src.tau;
  const ExtScalar ip1 = src.p.reciprocal(), ip2 = dst.p.reciprocal();

  Verdict v;
  v.citation = "same-tau";
  v.lhs = (src.s - dst.s) / ExtScalar(src.d);

  v.threshold_compact = gamma(tau, tau, src.p, dst.p);
  decide(v.compact, v.on_boundary_compact, v.lhs, v.threshold_compact);

  if (banach_fine(src) && banach_fine(dst)) {
    if (src.p >= dst.p) {
      v.threshold_nuclear = ExtScalar(1) - ip2 + ip1;
    } else {
      v.threshold_nuclear = ExtScalar(1) - min(ExtScalar(0), ip2 - min(tau, ip1));
    }
    decide(v.nuclear, v.on_boundary_nuclear, v.lhs, v.threshold_nuclear);
  }
  return v;
}

Verdict classify(const SpaceSpec& src, const SpaceSpec& dst) {
  src.validate();
  dst.validate();
  if (dst.is_special_target()) return classify_special_target(src, dst);
  if (src.is_rho_scale() && dst.is_rho_scale()) return classify_rho(src, dst);
  if (src.is_morrey_scale() && dst.is_morrey_scale()) return classify_morrey(src, dst);
  if (src.is_tau_scale() && dst.is_tau_scale()) return classify_tau(src, dst);
  // One side Morrey, one side tau: move the Morrey side across the exact
  // scale identity and classify on the tau scale.
  if (src.is_morrey_scale() && dst.is_tau_scale()) {
    return classify_tau(morrey_to_tau(src), dst);
  }
  if (src.is_tau_scale() && dst.is_morrey_scale()) {
    return classify_tau(src, morrey_to_tau(dst));
  }
  throw std::invalid_argument("classify: unsupported space pair");
}

}  // namespace morrey
