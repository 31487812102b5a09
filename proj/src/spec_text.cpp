#include "morrey/spec_text.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace morrey {

namespace {

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& token,
                       const std::string& why) {
  throw std::invalid_argument("spec '" + text + "': " + why + " at position " +
                              std::to_string(pos) + " ('" + token + "')");
}

const std::map<std::string, Family>& tag_map() {
  static const std::map<std::string, Family> tags{
      {"N", Family::BesovMorrey}, {"E", Family::TLMorrey},   {"Btau", Family::BesovTau},
      {"Ftau", Family::TLTau},    {"B", Family::ClassicalB}, {"F", Family::ClassicalF},
      {"rhoB", Family::RhoB},     {"rhoF", Family::RhoF},    {"Lr", Family::Lr},
      {"bmo", Family::Bmo},       {"Linf", Family::Linf},
  };
  return tags;
}

std::vector<std::string> fields_for(Family f) {
  switch (f) {
    case Family::BesovMorrey:
    case Family::TLMorrey:
      return {"s", "u", "p", "q", "d"};
    case Family::ClassicalB:
    case Family::ClassicalF:
      return {"s", "p", "q", "d"};
    case Family::BesovTau:
    case Family::TLTau:
      return {"s", "p", "tau", "q", "d"};
    case Family::RhoB:
    case Family::RhoF:
      return {"s", "p", "rho", "q", "d"};
    case Family::Lr:
      return {"r", "d"};
    case Family::Bmo:
    case Family::Linf:
      return {"d"};
  }
  return {};
}

const std::vector<std::string> kSeqFields{"sigma", "u", "p", "q", "d"};

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string tag = colon == std::string::npos ? text : text.substr(0, colon);

  ParsedSpec out;
  std::vector<std::string> fields;
  if (tag == "nseq") {
    out.is_seq = true;
    fields = kSeqFields;
  } else {
    const auto it = tag_map().find(tag);
    if (it == tag_map().end()) fail(text, 0, tag, "unknown family tag");
    out.space.family = it->second;
    fields = fields_for(it->second);
  }
  if (colon == std::string::npos) {
    if (!fields.empty() && !(fields.size() == 1 && fields[0] == "d")) {
      fail(text, text.size(), "", "expected ':' and key=value fields");
    }
  }

  std::map<std::string, ExtScalar> seen;
  std::map<std::string, int> dims;
  std::size_t pos = colon == std::string::npos ? text.size() : colon + 1;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(pos, end - pos);
    const auto eq = token.find('=');
    if (eq == std::string::npos) fail(text, pos, token, "expected key=value");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (std::find(fields.begin(), fields.end(), key) == fields.end()) {
      fail(text, pos, token, "unknown field for this family");
    }
    if (seen.count(key) || dims.count(key)) fail(text, pos, token, "duplicate field");
    if (key == "d") {
      ExtScalar v;
      try {
        v = ExtScalar::parse(value);
      } catch (const std::exception&) {
        fail(text, pos, token, "malformed dimension");
      }
      if (v.is_inf() || v.den() != 1 || v.num() < 1) fail(text, pos, token, "d must be a positive integer");
      dims["d"] = static_cast<int>(v.num());
    } else {
      try {
        seen.emplace(key, ExtScalar::parse(value));
      } catch (const std::exception&) {
        fail(text, pos, token, "malformed rational");
      }
    }
    pos = end + 1;
  }

  for (const auto& f : fields) {
    const bool have = f == "d" ? dims.count("d") > 0 : seen.count(f) > 0;
    if (!have) fail(text, text.size(), f, "missing field");
  }

  if (out.is_seq) {
    out.seq.sigma = seen.at("sigma");
    out.seq.u = seen.at("u");
    out.seq.p = seen.at("p");
    out.seq.q = seen.at("q");
    out.seq.d = dims.at("d");
    out.seq.validate();
    return out;
  }

  SpaceSpec& sp = out.space;
  sp.d = dims.at("d");
  if (seen.count("s")) sp.s = seen.at("s");
  if (seen.count("p")) sp.p = seen.at("p");
  if (seen.count("r")) sp.p = seen.at("r");  // Lr stores r in p
  if (seen.count("q")) sp.q = seen.at("q");
  if (seen.count("u")) sp.u = seen.at("u");
  if (seen.count("tau")) sp.tau = seen.at("tau");
  if (seen.count("rho")) sp.rho = seen.at("rho");
  sp.validate();
  return out;
}

std::string print_spec(const SpaceSpec& spec) {
  std::string out = family_tag(spec.family);
  const auto fields = fields_for(spec.family);
  if (!fields.empty()) out += ":";
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ",";
    first = false;
    out += f + "=";
    if (f == "s") out += spec.s.str();
    else if (f == "u") out += spec.u.str();
    else if (f == "p" || f == "r") out += spec.p.str();
    else if (f == "q") out += spec.q.str();
    else if (f == "tau") out += spec.tau.str();
    else if (f == "rho") out += spec.rho.str();
    else if (f == "d") out += std::to_string(spec.d);
  }
  return out;
}

std::string print_spec(const SeqSpec& spec) {
  std::string out = "nseq:";
  out += "sigma=" + spec.sigma.str();
  out += ",u=" + spec.u.str();
  out += ",p=" + spec.p.str();
  out += ",q=" + spec.q.str();
  out += ",d=" + std::to_string(spec.d);
  return out;
}

}  // namespace morrey
