#include "morrey/params.hpp"

#include <stdexcept>

namespace morrey {

namespace {

void check_r(const ExtScalar& r, const char* name) {
  if (r < 1) throw std::invalid_argument(std::string("tong: ") + name + " must lie in [1, inf]");
}

void check_tau_p(const ExtScalar& tau, const ExtScalar& p, const char* which) {
  if (tau < 0) throw std::invalid_argument(std::string("gamma: tau") + which + " must be >= 0");
  if (!(p > 0)) throw std::invalid_argument(std::string("gamma: p") + which + " must be positive");
}

}  // namespace

ExtScalar tong_reciprocal(const ExtScalar& r1, const ExtScalar& r2) {
  check_r(r1, "r1");
  check_r(r2, "r2");
  return ExtScalar(1) - (r1.reciprocal() - r2.reciprocal()).positive_part();
}

ExtScalar tong_number(const ExtScalar& r1, const ExtScalar& r2) {
  return tong_reciprocal(r1, r2).reciprocal();
}

ExtScalar p_star(const ExtScalar& r1, const ExtScalar& r2) {
  check_r(r1, "r1");
  check_r(r2, "r2");
  return (r2.reciprocal() - r1.reciprocal()).positive_part().reciprocal();
}

ExtScalar gamma(const ExtScalar& tau1, const ExtScalar& tau2,
                const ExtScalar& p1, const ExtScalar& p2) {
  check_tau_p(tau1, p1, "1");
  check_tau_p(tau2, p2, "2");
  const ExtScalar ip1 = p1.reciprocal();
  const ExtScalar ip2 = p2.reciprocal();
  if (tau2 >= ip2) {
    return ip1 - tau1 - ip2 + tau2;
  }
  if (tau1 >= ip1) {
    return ip1 - tau1;
  }
  // tau_i < 1/p_i forces both p_i finite here.
  const ExtScalar inner = max(tau2, (p1 / p2) * tau1);
  return max(ExtScalar(0), ip1 - tau1 - ip2 + inner);
}

ExtScalar gamma_bar(const ExtScalar& tau1, const ExtScalar& tau2,
                    const ExtScalar& p1, const ExtScalar& p2) {
  check_tau_p(tau1, p1, "1");
  check_tau_p(tau2, p2, "2");
  if (p1 < 1 || p2 < 1) throw std::invalid_argument("gamma_bar: requires p_i >= 1");
  const ExtScalar ip1 = p1.reciprocal();
  const ExtScalar ip2 = p2.reciprocal();
  if (tau1 >= ip1) {
    return ExtScalar(1) + ip1 - tau1 - ip2 + tau2;
  }
  if (tau2 >= ip2) {
    return ExtScalar(1) - ip2 + tau2;
  }
  const ExtScalar inner = max(tau1, (p2 / p1) * tau2);
  return ExtScalar(1) - max(ExtScalar(0), ip2 - tau2 - ip1 + inner);
}

ExtScalar ratio_conv(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_inf() && b.is_inf()) return ExtScalar(1);
  if (a.is_inf()) return ExtScalar::inf();
  if (b.is_inf()) return ExtScalar(0);
  return a / b;
}

SpaceSpec morrey_to_tau(const SpaceSpec& spec) {
  spec.validate();
  SpaceSpec out = spec;
  out.u = ExtScalar(0);
  switch (spec.family) {
    case Family::ClassicalB:
      out.family = Family::BesovTau;
      out.tau = ExtScalar(0);
      return out;
    case Family::ClassicalF:
      out.family = Family::TLTau;
      out.tau = ExtScalar(0);
      return out;
    case Family::TLMorrey:
      out.family = Family::TLTau;
      out.tau = spec.p.reciprocal() - spec.u.reciprocal();
      return out;
    case Family::BesovMorrey:
      out.family = Family::BesovTau;
      if (spec.p == spec.u) {
        out.tau = ExtScalar(0);
        return out;
      }
      if (!spec.q.is_inf()) {
        throw std::domain_error("morrey_to_tau: the B-scale identity requires q = inf");
      }
      out.tau = spec.p.reciprocal() - spec.u.reciprocal();
      return out;
    default:
      throw std::invalid_argument("morrey_to_tau: expects a Morrey-scale space");
  }
}

SpaceSpec tau_to_morrey(const SpaceSpec& spec) {
  spec.validate();
  if (!spec.is_tau_scale()) {
    throw std::invalid_argument("tau_to_morrey: expects a tau-scale space");
  }
  SpaceSpec out = spec;
  out.tau = ExtScalar(0);
  if (spec.tau == 0) {
    out.family = spec.family == Family::TLTau ? Family::ClassicalF : Family::ClassicalB;
    return out;
  }
  if (spec.tau >= spec.p.reciprocal()) {
    throw std::domain_error("tau_to_morrey: needs tau < 1/p (the space is of Hoelder type otherwise)");
  }
  out.u = (spec.p.reciprocal() - spec.tau).reciprocal();
  if (spec.family == Family::TLTau) {
    out.family = Family::TLMorrey;
    return out;
  }
  if (!spec.q.is_inf()) {
    throw std::domain_error("tau_to_morrey: the B-scale identity requires q = inf");
  }
  out.family = Family::BesovMorrey;
  return out;
}

SpaceSpec rho_to_canonical(const SpaceSpec& spec, RhoForm form) {
  spec.validate();
  if (!spec.is_rho_scale()) {
    throw std::invalid_argument("rho_to_canonical: expects a rho-scale space");
  }
  const bool b_letter = spec.family == Family::RhoB;
  SpaceSpec out = spec;
  out.rho = ExtScalar(0);
  if (spec.rho == ExtScalar(-spec.d)) {
    out.family = b_letter ? Family::ClassicalB : Family::ClassicalF;
    return out;
  }
  if (form == RhoForm::Subscript) {
    out.family = b_letter ? Family::BesovMorrey : Family::TLMorrey;
    out.u = (ExtScalar(-spec.d) * spec.p) / spec.rho;
  } else {
    out.family = b_letter ? Family::BesovTau : Family::TLTau;
    out.tau = spec.p.reciprocal() * (ExtScalar(1) + spec.rho / ExtScalar(spec.d));
  }
  out.validate();
  return out;
}

SeqSpec seq_shift(const SpaceSpec& spec) {
  spec.validate();
  if (spec.family != Family::BesovMorrey && spec.family != Family::ClassicalB) {
    throw std::invalid_argument("seq_shift: expects a B-letter Morrey-scale space");
  }
  SeqSpec out;
  out.sigma = spec.s + ExtScalar(spec.d, 2);
  out.u = spec.morrey_u();
  out.p = spec.p;
  out.q = spec.q;
  out.d = spec.d;
  out.validate();
  return out;
}

}  // namespace morrey
