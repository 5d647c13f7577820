#include <doctest.h>

#include "helpers.h"
#include "pgrowth/automorphism.h"
#include "pgrowth/catalog.h"
#include "pgrowth/error.h"
#include "pgrowth/quotient.h"

using namespace pgrowth;

TEST_CASE("root permutations follow the left-acts-first convention") {
  const GroupSpec g = grigorchuk();
  const GroupSpec apol = apollonian();
  CHECK(root_permutation(g, g.parse("a")).to_cycle_string() == "(1 2)");
  CHECK(root_permutation(g, g.parse("")).is_identity());
  CHECK(root_permutation(apol, apol.parse("yx")).to_cycle_string() == "(1 3 2)");
  CHECK(root_permutation(apol, apol.parse("yx")) == Permutation::from_cycles(3, "(1 3 2)"));
}

TEST_CASE("first-level sections") {
  const GroupSpec g = grigorchuk();
  CHECK(testing::formatted(g, sections(g, g.parse("b"))) == std::vector<std::string>{"a", "c"});
  CHECK(testing::formatted(g, sections(g, g.parse("abab"))) == std::vector<std::string>{"ca", "ac"});

  const GroupSpec s = ggs(GgsVector::make(3, {1, 2}));
  const auto b = sections(s, s.parse("b"));
  CHECK(b == std::vector<Word>{s.parse("b"), s.parse("a"), s.parse("a^2")});
}

TEST_CASE("sections at vertices") {
  const GroupSpec g = grigorchuk();
  const Word w = g.parse("bacac");
  CHECK(are_equal(g, section_at(g, w, Vertex::parse(2, "211")), g.parse("c")));
  CHECK(section_at(g, w, Vertex::parse(2, "")) == w);
  CHECK(g.format(section_at(g, g.parse("d"), Vertex::parse(2, "2"))) == "b");
  CHECK_THROWS_AS(Vertex::parse(2, "13"), Error);
  try {
    Vertex::parse(2, "3");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadVertex);
  }
}

TEST_CASE("inverse words") {
  const GroupSpec g = grigorchuk();
  CHECK(g.format(inverse_word(g.parse("ab"))) == "b^-1a^-1");
  CHECK(inverse_word(Word()).empty());
  CHECK(g.format(inverse_word(g.parse("a"))) == "a^-1");
  CHECK(are_equal(g, g.parse("a"), g.parse("a^-1")));
}

TEST_CASE("word problem") {
  const GroupSpec g = grigorchuk();
  CHECK(is_trivial(g, g.parse("dd")));
  CHECK_FALSE(is_trivial(g, g.parse("a")));
  CHECK(is_trivial(g, g.parse("bcd")));
  for (int level = 1; level <= 6; ++level) {
    CHECK(truncated_action(g, g.parse("dd"), level).is_identity());
    CHECK(truncated_action(g, g.parse("bcd"), level).is_identity());
  }
  CHECK(are_equal(g, g.parse("dada"), g.parse("adad")));
  CHECK(are_equal(g, g.parse("abab"), g.parse("abab")));
  CHECK_FALSE(are_equal(g, g.parse("b"), g.parse("c")));
}

TEST_CASE("word problem rejects unknown symbols and respects its budget") {
  const GroupSpec g = grigorchuk();
  try {
    g.parse("aq");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
  }
  WordProblem tiny(g, 2);
  try {
    tiny.is_trivial(g.parse("(abacabad)^4"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StateSpaceBudgetExceeded);
  }
}

TEST_CASE("word syntax") {
  const GroupSpec g = grigorchuk();
  CHECK(g.parse("a b^-1 a") == g.parse("ab^-1a"));
  CHECK(g.parse("(ab)^2") == g.parse("abab"));
  CHECK(g.parse("1").empty());
  CHECK(g.format(Word()) == "1");
  CHECK_THROWS_AS(g.parse("(ab"), Error);
}

TEST_CASE("nucleus sections are nuclear") {
  for (const GroupSpec& spec : {grigorchuk(), apollonian(), ggs(GgsVector::make(3, {1, 2})),
                                ggs(GgsVector::make(5, {1, 2, 0, 0}))}) {
    WordProblem problem(spec);
    for (const Word& nu : spec.nucleus())
      for (const Word& section : sections(spec, nu)) CHECK(problem.nucleus_index(section).has_value());
  }
}

TEST_CASE("root group orders") {
  CHECK(root_group_order(grigorchuk()) == 2);
  CHECK(root_group_order(ggs(GgsVector::make(5, {1, 0, 0, 0}))) == 5);
  CHECK(root_group_order(apollonian()) == 6);
}
