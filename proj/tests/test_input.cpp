#include <filesystem>

#include "doctest.h"
#include "normfilt/error.hpp"
#include "normfilt/input.hpp"
#include "normfilt/theorems.hpp"

using namespace normfilt;

namespace {

ExponentVector ev(std::vector<Exponent> c) { return ExponentVector(std::move(c)); }

template <class E>
int error_code_of(const std::string& text) {
  try {
    parse_input(text);
  } catch (const E& e) {
    return e.exit_code();
  }
  return 0;
}

}  // namespace

TEST_CASE("polynomial input") {
  const InputSpec s = parse_input("ring polynomial dim=3 vars=x,y,z\nideal x^3 y^3 z^3\nreduction auto\nnmax 8");
  CHECK(s.ring.kind == RingKind::polynomial);
  CHECK(s.ring.dimension() == 3);
  CHECK(s.ideal == std::vector<ExponentVector>{ev({3, 0, 0}), ev({0, 3, 0}), ev({0, 0, 3})});
  CHECK_FALSE(s.reduction.has_value());
  CHECK(s.nmax == std::optional<std::size_t>(8));
  CHECK(s.checks.empty());
}

TEST_CASE("semigroup input with an explicit reduction") {
  const InputSpec s = parse_input("ring semigroup gens=4,5,11 adjoin=2\nideal maximal\nreduction t^4,U,V");
  CHECK(s.ring.kind == RingKind::semigroup);
  CHECK(s.ring.dimension() == 3);
  CHECK(s.ring.variables == std::vector<std::string>{"U", "V"});
  CHECK(s.ideal_is_maximal);
  REQUIRE(s.reduction.has_value());
  CHECK(*s.reduction == std::vector<ExponentVector>{ev({4, 0, 0}), ev({0, 1, 0}), ev({0, 0, 1})});
  CHECK(describe_ring(s.ring) == "k[[t^4,t^5,t^11]][[U,V]]");
}

TEST_CASE("monomial syntax variants") {
  const InputSpec s = parse_input("ring polynomial dim=3\nideal (3,0,0), y^3, z*z*z x*y*z  # comment\nchecks e3_nonnegative,ring_type\n");
  CHECK(s.ring.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(s.ideal == std::vector<ExponentVector>{ev({3, 0, 0}), ev({0, 3, 0}), ev({0, 0, 3}), ev({1, 1, 1})});
  CHECK(s.checks == std::vector<std::string>{"e3_nonnegative", "ring_type"});
  CHECK(format_monomial(ev({2, 0, 1}), {"x", "y", "z"}) == "x^2*z");
  CHECK(format_monomial(ev({0, 0, 0}), {"x", "y", "z"}) == "1");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_input("ring polynomial dim=2 vars=x,y\nideal x^2 y^@\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 13);
    CHECK(e.exit_code() == 2);
  }
  CHECK(error_code_of<ParseError>("ring polynomial dim=2\nideal x^2 y^2\ncolour red\n") == 2);
  CHECK(error_code_of<ParseError>("ring polynomial dim=2\nideal x^2 y^2\nideal x y\n") == 2);
  CHECK(error_code_of<ParseError>("ideal x^2 y^2\n") == 2);
  CHECK(error_code_of<ParseError>("ring polynomial dim=2\nideal x^2 w^2\n") == 2);
  CHECK(error_code_of<ParseError>("ring polynomial dim=2\nideal x^2 y^2\nchecks no_such_statement\n") == 2);
  CHECK(error_code_of<ParseError>("ring polynomial dim=2\nideal x^2 y^2\nnmax -3\n") == 2);
  CHECK(error_code_of<ParseError>("ring torus dim=2\nideal x^2 y^2\n") == 2);
  CHECK(error_code_of<ParseError>("ring polynomial dim=2\nideal (1,2,3) y^2\n") == 2);
}

TEST_CASE("semantic errors are precondition errors") {
  CHECK(error_code_of<PreconditionError>("ring semigroup gens=4,6\nideal maximal\n") == 3);
  CHECK(error_code_of<PreconditionError>("ring polynomial dim=3\nideal x^2 y^2\n") == 3);
  CHECK(error_code_of<PreconditionError>("ring polynomial dim=2\nideal 1 x^2 y^2\n") == 3);
  CHECK(error_code_of<PreconditionError>("ring semigroup gens=4,5,11\nideal t^3\n") == 3);
  CHECK(error_code_of<PreconditionError>("ring polynomial dim=5\nideal maximal\n") == 3);
}

TEST_CASE("round trip over the bundled inputs") {
  std::size_t seen = 0;
  for (const char* dir : {NORMFILT_SOURCE_DIR "/corpus", NORMFILT_SOURCE_DIR "/tests/fixtures"}) {
    for (const auto& e : load_corpus(dir)) {
      InputSpec s;
      try {
        s = parse_input(e.text);
      } catch (const Error&) {
        continue;
      }
      CAPTURE(e.source);
      const std::string printed = print_input(s);
      CHECK(parse_input(printed) == s);
      CHECK(print_input(parse_input(printed)) == printed);
      ++seen;
    }
  }
  CHECK(seen >= 9);
}

TEST_CASE("round trip of hand-built specs") {
  InputSpec s;
  s.name = "four variables";
  s.ring.kind = RingKind::polynomial;
  s.ring.dim = 4;
  s.ring.variables = default_variables(RingKind::polynomial, 4);
  s.ideal = {ev({2, 0, 0, 0}), ev({0, 2, 0, 0}), ev({0, 0, 2, 0}), ev({0, 0, 0, 2}), ev({1, 1, 1, 1})};
  s.reduction = std::vector<ExponentVector>{ev({2, 0, 0, 0}), ev({0, 2, 0, 0}), ev({0, 0, 2, 0}), ev({0, 0, 0, 2})};
  s.nmax = 9;
  s.checks = {"series_identity"};
  s.perturbations = {{"sally", 2, -1}};
  CHECK(parse_input(print_input(s)) == s);

  InputSpec t;
  t.ring.kind = RingKind::semigroup;
  t.ring.generators = {3, 7};
  t.ring.adjoin = 1;
  t.ring.variables = {"U"};
  t.ideal = {ev({6, 0}), ev({7, 0}), ev({0, 2}), ev({3, 1})};
  CHECK(parse_input(print_input(t)) == t);
}
