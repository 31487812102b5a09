#include "morrey/spaces.hpp"

#include <stdexcept>

namespace morrey {

const char* family_tag(Family f) {
  switch (f) {
    case Family::BesovMorrey: return "N";
    case Family::TLMorrey: return "E";
    case Family::BesovTau: return "Btau";
    case Family::TLTau: return "Ftau";
    case Family::ClassicalB: return "B";
    case Family::ClassicalF: return "F";
    case Family::RhoB: return "rhoB";
    case Family::RhoF: return "rhoF";
    case Family::Lr: return "Lr";
    case Family::Bmo: return "bmo";
    case Family::Linf: return "Linf";
  }
  return "?";
}

namespace {

[[noreturn]] void bad(const SpaceSpec& sp, const std::string& what) {
  throw std::invalid_argument(std::string(family_tag(sp.family)) + ": " + what);
}

void check_q(const SpaceSpec& sp) {
  if (!(sp.q > 0)) bad(sp, "q must satisfy 0 < q <= inf");
}

}  // namespace

void SpaceSpec::validate() const {
  if (d < 1) bad(*this, "dimension d must be >= 1");
  switch (family) {
    case Family::BesovMorrey:
    case Family::TLMorrey: {
      check_q(*this);
      const bool finite_ok = p > 0 && p <= u && u.is_finite();
      const bool inf_ok = p.is_inf() && u.is_inf();
      if (!(finite_ok || inf_ok)) bad(*this, "need 0 < p <= u < inf or p = u = inf");
      if (family == Family::TLMorrey && u.is_inf()) bad(*this, "E-scale requires u < inf");
      break;
    }
    case Family::ClassicalB:
    case Family::ClassicalF:
      check_q(*this);
      if (!(p > 0)) bad(*this, "p must satisfy 0 < p <= inf");
      if (family == Family::ClassicalF && p.is_inf()) bad(*this, "F-scale requires p < inf");
      break;
    case Family::BesovTau:
    case Family::TLTau:
      check_q(*this);
      if (!(p > 0)) bad(*this, "p must satisfy 0 < p <= inf");
      if (tau < 0) bad(*this, "tau must be >= 0");
      if (family == Family::TLTau && p.is_inf()) bad(*this, "F-scale requires p < inf");
      break;
    case Family::RhoB:
    case Family::RhoF:
      check_q(*this);
      if (!(p > 0) || p.is_inf()) bad(*this, "rho-scale requires 0 < p < inf");
      if (!(rho < 0) || rho < ExtScalar(-d)) bad(*this, "rho must lie in [-d, 0)");
      break;
    case Family::Lr:
      if (p < 1 || p.is_inf()) bad(*this, "Lr requires 1 <= r < inf");
      break;
    case Family::Bmo:
    case Family::Linf:
      break;
  }
}

bool SpaceSpec::is_morrey_scale() const {
  return family == Family::BesovMorrey || family == Family::TLMorrey ||
         family == Family::ClassicalB || family == Family::ClassicalF;
}

bool SpaceSpec::is_tau_scale() const {
  return family == Family::BesovTau || family == Family::TLTau;
}

bool SpaceSpec::is_rho_scale() const {
  return family == Family::RhoB || family == Family::RhoF;
}

bool SpaceSpec::is_b_letter() const {
  return family == Family::BesovMorrey || family == Family::ClassicalB ||
         family == Family::BesovTau || family == Family::RhoB;
}

bool SpaceSpec::is_special_target() const {
  return family == Family::Lr || family == Family::Bmo || family == Family::Linf;
}

ExtScalar SpaceSpec::morrey_u() const {
  if (family == Family::ClassicalB || family == Family::ClassicalF) return p;
  return u;
}

void SeqSpec::validate() const {
  if (d < 1) throw std::invalid_argument("nseq: dimension d must be >= 1");
  if (!(q > 0)) throw std::invalid_argument("nseq: q must satisfy 0 < q <= inf");
  const bool finite_ok = p > 0 && p <= u && u.is_finite();
  const bool inf_ok = p.is_inf() && u.is_inf();
  if (!(finite_ok || inf_ok)) throw std::invalid_argument("nseq: need 0 < p <= u < inf or p = u = inf");
}

}  // namespace morrey
