#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "morrey/classifier.hpp"
#include "morrey/spec_text.hpp"
#include "morrey/verify.hpp"

namespace {

using morrey::ExtScalar;
using morrey::ParsedSpec;
using morrey::TriState;
using morrey::Verdict;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitParse = 2;
constexpr int kExitStrictNotCharacterized = 3;

std::string threshold_str(TriState state, const ExtScalar& thr) {
  return state == TriState::NotCharacterized ? "-" : thr.str();
}

Verdict classify_pair(const ParsedSpec& src, const ParsedSpec& dst) {
  if (src.is_seq != dst.is_seq) {
    throw std::invalid_argument("classify: cannot mix sequence and function spaces");
  }
  if (src.is_seq) return morrey::classify_seq(src.seq, dst.seq);
  return morrey::classify(src.space, dst.space);
}

ordered_json verdict_json(const std::string& src, const std::string& dst, const Verdict& v) {
  return ordered_json{
      {"schema", "morrey-classify/1"},
      {"source", src},
      {"target", dst},
      {"lhs", v.lhs.str()},
      {"compact", morrey::tristate_str(v.compact)},
      {"nuclear", morrey::tristate_str(v.nuclear)},
      {"threshold_compact", threshold_str(v.compact, v.threshold_compact)},
      {"threshold_nuclear", threshold_str(v.nuclear, v.threshold_nuclear)},
      {"on_boundary_compact", v.on_boundary_compact},
      {"on_boundary_nuclear", v.on_boundary_nuclear},
      {"citation", v.citation},
  };
}

void print_verdict_text(const std::string& src, const std::string& dst, const Verdict& v) {
  std::cout << "source:   " << src << "\n";
  std::cout << "target:   " << dst << "\n";
  std::cout << "lhs:      " << v.lhs.str() << "\n";
  std::cout << "compact:  " << morrey::tristate_str(v.compact);
  if (v.compact != TriState::NotCharacterized) {
    std::cout << " (threshold " << v.threshold_compact.str()
              << (v.on_boundary_compact ? ", boundary" : "") << ")";
  }
  std::cout << "\n";
  std::cout << "nuclear:  " << morrey::tristate_str(v.nuclear);
  if (v.nuclear != TriState::NotCharacterized) {
    std::cout << " (threshold " << v.threshold_nuclear.str()
              << (v.on_boundary_nuclear ? ", boundary" : "") << ")";
  }
  std::cout << "\n";
  std::cout << "citation: " << v.citation << "\n";
}

// ------------------------------------------------------------------- region

struct SweepToken {
  std::size_t which = 0;  // 0 = source, 1 = target
  std::size_t begin = 0;  // span of the sweep(...) value in the raw string
  std::size_t length = 0;
  std::string key;
  ExtScalar a, b;
  int steps = 1;
};

std::vector<SweepToken> find_sweeps(const std::string& text, std::size_t which) {
  std::vector<SweepToken> out;
  std::size_t pos = text.find(':');
  pos = pos == std::string::npos ? text.size() : pos + 1;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    // a sweep token contains a comma itself; detect it first
    const auto eq = text.find('=', pos);
    if (eq != std::string::npos && text.compare(eq + 1, 6, "sweep(") == 0) {
      const auto close = text.find(')', eq);
      if (close == std::string::npos) {
        throw std::invalid_argument("region: unterminated sweep(...) in '" + text + "'");
      }
      SweepToken t;
      t.which = which;
      t.key = text.substr(pos, eq - pos);
      if (t.key == "d") throw std::invalid_argument("region: cannot sweep the dimension d");
      t.begin = eq + 1;
      t.length = close - eq;
      const std::string body = text.substr(eq + 7, close - eq - 7);
      const auto dots = body.find("..");
      const auto comma = body.find(',', dots == std::string::npos ? 0 : dots + 2);
      if (dots == std::string::npos || comma == std::string::npos) {
        throw std::invalid_argument("region: sweep syntax is sweep(a..b,steps)");
      }
      t.a = ExtScalar::parse(body.substr(0, dots));
      t.b = ExtScalar::parse(body.substr(dots + 2, comma - dots - 2));
      t.steps = std::stoi(body.substr(comma + 1));
      if (t.steps < 1) throw std::invalid_argument("region: steps must be >= 1");
      if (t.a.is_inf() || t.b.is_inf()) {
        throw std::invalid_argument("region: sweep endpoints must be finite");
      }
      out.push_back(t);
      end = text.find(',', close);
    }
    pos = end == std::string::npos ? text.size() : end + 1;
  }
  return out;
}

std::vector<ExtScalar> sweep_values(const SweepToken& t) {
  std::vector<ExtScalar> vals;
  if (t.steps == 1) {
    vals.push_back(t.a);
    return vals;
  }
  const ExtScalar step = (t.b - t.a) / ExtScalar(t.steps - 1);
  for (int k = 0; k < t.steps; ++k) vals.push_back(t.a + ExtScalar(k) * step);
  return vals;
}

std::string substitute(const std::string& text, const SweepToken& t, const ExtScalar& v) {
  std::string out = text;
  out.replace(t.begin, t.length, v.str());
  return out;
}

int cmd_region(const std::string& src_text, const std::string& dst_text, std::ostream& os) {
  auto sweeps = find_sweeps(src_text, 0);
  for (auto& t : find_sweeps(dst_text, 1)) sweeps.push_back(t);
  if (sweeps.size() != 2) {
    throw std::invalid_argument("region: exactly two parameters must be marked sweep(a..b,steps)");
  }
  const SweepToken& sx = sweeps[0];
  const SweepToken& sy = sweeps[1];

  os << "x,y,compact,nuclear,threshold_compact,threshold_nuclear\n";
  for (const auto& xv : sweep_values(sx)) {
    const std::string src1 = sx.which == 0 ? substitute(src_text, sx, xv) : src_text;
    const std::string dst1 = sx.which == 1 ? substitute(dst_text, sx, xv) : dst_text;
    for (const auto& yv : sweep_values(sy)) {
      // when both sweeps sit in the same spec, substitute right-to-left so
      // the first token's offsets stay valid
      std::string src2 = src1, dst2 = dst1;
      if (sy.which == 0) {
        src2 = sx.which == 0 && sy.begin > sx.begin
                   ? substitute(substitute(src_text, sy, yv), sx, xv)
                   : substitute(src1, sy, yv);
      } else {
        dst2 = sx.which == 1 && sy.begin > sx.begin
                   ? substitute(substitute(dst_text, sy, yv), sx, xv)
                   : substitute(dst1, sy, yv);
      }
      const auto a = morrey::parse_spec(src2);
      const auto b = morrey::parse_spec(dst2);
      const Verdict v = classify_pair(a, b);
      os << xv.str() << "," << yv.str() << "," << morrey::tristate_str(v.compact) << ","
         << morrey::tristate_str(v.nuclear) << "," << threshold_str(v.compact, v.threshold_compact)
         << "," << threshold_str(v.nuclear, v.threshold_nuclear) << "\n";
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------------- table

void print_tables() {
  std::cout <<
      "embeddings into bmo(Omega) / Linf(Omega)           [citation: bmo-target, linf-target]\n"
      "  source N/E (s,u,p,q):      compact iff s/d > 1/u      nuclear iff s/d > 1\n"
      "  source Btau/Ftau (s,p,tau): compact iff s/d > 1/p-tau  nuclear iff s/d > 1-(tau-1/p)_+\n"
      "\n"
      "embeddings into Lr(Omega), 1 <= r < inf            [citation: lr-target]\n"
      "  source N/E:    nuclear iff s/d > 1 - (1/r - 1/u)_+\n"
      "  source tau, tau >= 1/p: nuclear iff s/d > 1 + 1/p - tau - 1/r\n"
      "  source tau, tau <= 1/p: nuclear iff s/d > 1 - (1/r - 1/p + tau)_+\n"
      "\n"
      "same-tau pairs (tau1 = tau2 = tau)                 [citation: same-tau]\n"
      "  p1 >= p2: nuclear iff (s1-s2)/d > 1 - 1/p2 + 1/p1\n"
      "  p1 <= p2: nuclear iff (s1-s2)/d > 1 - min{0, 1/p2 - min{tau, 1/p1}}\n"
      "\n"
      "worked rows:\n";
  const std::vector<std::pair<std::string, std::string>> rows{
      {"N:s=1,u=2,p=1,q=1,d=1", "bmo:d=1"},
      {"N:s=2,u=2,p=1,q=1,d=1", "bmo:d=1"},
      {"E:s=2,u=4,p=2,q=2,d=1", "Lr:r=2,d=1"},
      {"Btau:s=3/2,p=2,tau=1/4,q=1,d=1", "Lr:r=2,d=1"},
      {"Btau:s=2,p=1,tau=1/2,q=1,d=1", "Btau:s=0,p=2,tau=1/2,q=1,d=1"},
  };
  for (const auto& [s, t] : rows) {
    const auto a = morrey::parse_spec(s);
    const auto b = morrey::parse_spec(t);
    const Verdict v = classify_pair(a, b);
    std::cout << "  " << s << " -> " << t << " : compact=" << morrey::tristate_str(v.compact)
              << " nuclear=" << morrey::tristate_str(v.nuclear) << " ["
              << v.citation << "]\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact compactness/nuclearity classification for Morrey-type smoothness spaces "
               "and numerical certification of the finite sequence-space norms"};
  app.require_subcommand(1);

  bool json = false;
  bool strict = false;
  std::uint64_t seed = 42;
  long long budget = 256;
  std::string out_path;
  app.add_flag("--json", json, "machine-readable output where applicable");
  app.add_option("--seed", seed, "seed for all sampling (default 42)");
  app.add_option("--budget", budget, "largest admitted dimension 2^{jd} (default 256)");
  app.add_option("--out", out_path, "output file (region CSV, verify report)");

  std::string src_text, dst_text;
  auto* c_classify = app.add_subcommand("classify", "classify one embedding");
  c_classify->add_option("source", src_text, "source space spec")->required();
  c_classify->add_option("target", dst_text, "target space spec")->required();
  c_classify->add_flag("--strict", strict, "exit 3 when a queried property is not characterized");

  auto* c_region = app.add_subcommand("region", "sweep two parameters, emit CSV");
  c_region->add_option("source", src_text, "source spec, may contain sweep(a..b,steps)")
      ->required();
  c_region->add_option("target", dst_text, "target spec, may contain sweep(a..b,steps)")
      ->required();

  std::string plan_name = "all";
  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("plan", plan_name,
                       "opnorms | nuclear | tong | classifier-consistency | all");

  auto* c_table = app.add_subcommand("table", "print the special-target criterion tables");

  for (auto* sub : {c_classify, c_region, c_verify, c_table}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) {
      const auto a = morrey::parse_spec(src_text);
      const auto b = morrey::parse_spec(dst_text);
      const Verdict v = classify_pair(a, b);
      if (json) {
        std::cout << verdict_json(src_text, dst_text, v).dump(2) << "\n";
      } else {
        print_verdict_text(src_text, dst_text, v);
      }
      if (strict && (v.compact == TriState::NotCharacterized ||
                     v.nuclear == TriState::NotCharacterized)) {
        return kExitStrictNotCharacterized;
      }
      return kExitOk;
    }

    if (c_region->parsed()) {
      if (out_path.empty()) return cmd_region(src_text, dst_text, std::cout);
      std::ofstream os(out_path);
      if (!os) throw std::runtime_error("cannot open '" + out_path + "'");
      return cmd_region(src_text, dst_text, os);
    }

    if (c_verify->parsed()) {
      const auto plan = morrey::verify::plan_from_string(plan_name);
      const auto report = morrey::verify::run_suite(plan, seed, budget);
      if (!out_path.empty()) {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open '" + out_path + "'");
        os << report.to_string();
      }
      const auto violated = report.count("violated");
      const auto skipped = report.count("skipped");
      std::cout << report.cases.size() << " cases, " << violated << " violated\n";
      if (skipped == report.cases.size() && !report.cases.empty()) {
        std::cout << "warning: all cases skipped (budget " << budget << ")\n";
      }
      return violated > 0 ? kExitViolated : kExitOk;
    }

    if (c_table->parsed()) {
      print_tables();
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
