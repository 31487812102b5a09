#include <doctest.h>

#include "morrey/spec_text.hpp"

using namespace morrey;

TEST_CASE("parse the documented spec forms") {
  const auto n = parse_spec("N:s=1,u=2,p=3/2,q=2,d=1");
  CHECK_FALSE(n.is_seq);
  CHECK(n.space.family == Family::BesovMorrey);
  CHECK(n.space.s == ExtScalar(1));
  CHECK(n.space.p == ExtScalar(3, 2));

  const auto bt = parse_spec("Btau:s=1,p=2,tau=1/4,q=inf,d=2");
  CHECK(bt.space.family == Family::BesovTau);
  CHECK(bt.space.tau == ExtScalar(1, 4));
  CHECK(bt.space.q.is_inf());
  CHECK(bt.space.d == 2);

  const auto rb = parse_spec("rhoB:s=1,p=2,rho=-1,q=1,d=3");
  CHECK(rb.space.family == Family::RhoB);
  CHECK(rb.space.rho == ExtScalar(-1));

  const auto lr = parse_spec("Lr:r=2,d=1");
  CHECK(lr.space.family == Family::Lr);
  CHECK(lr.space.p == ExtScalar(2));

  const auto bmo = parse_spec("bmo:d=2");
  CHECK(bmo.space.family == Family::Bmo);
  CHECK(bmo.space.d == 2);

  const auto sq = parse_spec("nseq:sigma=2,u=2,p=1,q=1,d=1");
  CHECK(sq.is_seq);
  CHECK(sq.seq.sigma == ExtScalar(2));
}

TEST_CASE("print is canonical and parse(print(x)) == x") {
  for (const char* text : {
           "N:s=1,u=2,p=3/2,q=2,d=1",
           "E:s=-1/2,u=4,p=2,q=inf,d=2",
           "Btau:s=1,p=2,tau=1/4,q=inf,d=2",
           "Ftau:s=0,p=2,tau=0,q=2,d=1",
           "B:s=2,p=inf,q=1,d=1",
           "F:s=11/10,p=2,q=2,d=3",
           "rhoB:s=1,p=2,rho=-1,q=1,d=3",
           "Lr:r=2,d=1",
           "bmo:d=2",
           "Linf:d=1",
       }) {
    const auto parsed = parse_spec(text);
    CHECK(print_spec(parsed.space) == text);
  }
  const char* seq_text = "nseq:sigma=2,u=2,p=1,q=1,d=1";
  CHECK(print_spec(parse_spec(seq_text).seq) == seq_text);
}

TEST_CASE("generated canonical specs survive the round trip") {
  const std::vector<std::string> scalars{"0", "1", "3/2", "-1/2", "11/10", "inf"};
  const std::vector<std::string> qs{"1", "2", "inf"};
  size_t checked = 0;
  for (const auto& s : scalars) {
    for (const auto& q : qs) {
      for (const std::string text : {
               "N:s=" + s + ",u=4,p=2,q=" + q + ",d=1",
               "B:s=" + s + ",p=2,q=" + q + ",d=2",
               "Btau:s=" + s + ",p=2,tau=1/2,q=" + q + ",d=1",
               "rhoF:s=" + s + ",p=2,rho=-1/2,q=" + q + ",d=1",
               "nseq:sigma=" + s + ",u=2,p=2,q=" + q + ",d=1",
           }) {
        const auto parsed = parse_spec(text);
        const std::string printed =
            parsed.is_seq ? print_spec(parsed.seq) : print_spec(parsed.space);
        CHECK(printed == text);
        ++checked;
      }
    }
  }
  CHECK(checked == scalars.size() * qs.size() * 5);
}

TEST_CASE("parse errors carry token and position") {
  CHECK_THROWS_WITH_AS(parse_spec("X:s=1,d=1"), doctest::Contains("unknown family tag"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_spec("N:s=1,zz=2,p=1,u=2,q=1,d=1"),
                       doctest::Contains("unknown field"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_spec("N:s=1,u=2,p=1,q=1"), doctest::Contains("missing field"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_spec("N:s=1,s=2,u=2,p=1,q=1,d=1"),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_spec("N:s=a/b,u=2,p=1,q=1,d=1"),
                       doctest::Contains("malformed rational"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_spec("N:s=1,u=2,p=1,q=1,d=0"),
                       doctest::Contains("positive integer"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("N:s=1,u=2,p=4,q=1,d=1"), std::invalid_argument);  // p > u
  // position is reported
  try {
    parse_spec("N:s=1,zz=2,u=2,p=1,q=1,d=1");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
}

TEST_CASE("family constraints are enforced at parse time") {
  CHECK_THROWS_AS(parse_spec("Ftau:s=1,p=inf,tau=0,q=2,d=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("rhoB:s=1,p=2,rho=-4,q=1,d=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("Lr:r=inf,d=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("nseq:sigma=1,u=2,p=4,q=1,d=1"), std::invalid_argument);
}
