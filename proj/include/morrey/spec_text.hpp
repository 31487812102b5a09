#pragma once

#include <string>

#include "morrey/spaces.hpp"

namespace morrey {

/// Textual space specs: "<family>:key=value,...". Examples:
///   N:s=1,u=2,p=3/2,q=2,d=1        Besov-Morrey
///   E:s=1,u=4,p=2,q=inf,d=1        Triebel-Lizorkin-Morrey
///   Btau:s=1,p=2,tau=1/4,q=inf,d=2 Besov-type
///   rhoB:s=1,p=2,rho=-1,q=1,d=3    rho-clan
///   B:s=1,p=2,q=1,d=1              classical Besov
///   Lr:r=2,d=1   bmo:d=2   Linf:d=1
///   nseq:sigma=2,u=2,p=1,q=1,d=1   Morrey sequence space
/// Rationals are written "a/b"; "inf" is infinity. parse(print(x)) == x on
/// canonical forms. Parse errors carry the offending token and its position.
struct ParsedSpec {
  bool is_seq = false;
  SpaceSpec space;
  SeqSpec seq;
};

ParsedSpec parse_spec(const std::string& text);

std::string print_spec(const SpaceSpec& spec);
std::string print_spec(const SeqSpec& spec);

}  // namespace morrey
