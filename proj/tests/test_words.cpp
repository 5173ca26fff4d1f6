#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidcat/words.hpp"

using namespace braidcat;

namespace {

Label L(const char* s) { return Label::intern(s); }

Word leaf(const char* s) { return Word::leaf(L(s)); }

}  // namespace

TEST_CASE("flatten basics") {
  CHECK(flatten(Word::unit()).empty());

  Word w = Word::tensor(leaf("a"), Word::tensor(leaf("b"), leaf("c")));
  CHECK(flatten(w) == std::vector<Label>{L("a"), L("b"), L("c")});

  Word with_unit = Word::tensor(Word::tensor(leaf("a"), Word::unit()), leaf("b"));
  CHECK(flatten(with_unit) == std::vector<Label>{L("a"), L("b")});
}

TEST_CASE("right_nest basics") {
  CHECK(right_nest({}) == Word::unit());
  CHECK(right_nest({L("a")}) == leaf("a"));
  CHECK(right_nest({L("a"), L("b")}) == Word::tensor(leaf("a"), leaf("b")));
  CHECK(right_nest({L("a"), L("b"), L("c")}) ==
        Word::tensor(leaf("a"), Word::tensor(leaf("b"), leaf("c"))));
}

TEST_CASE("flatten after right_nest is the identity") {
  std::mt19937_64 rng(7);
  std::vector<Label> alphabet = {L("a"), L("b"), L("c"), L("d")};
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int k = 0; k < 200; ++k) {
    std::vector<Label> ls;
    int n = len(rng);
    for (int i = 0; i < n; ++i) ls.push_back(alphabet[pick(rng)]);
    CHECK(flatten(right_nest(ls)) == ls);
  }
}

namespace {

// Random associator/unitor tree moves preserve the leaf sequence.
Word random_tree_move(const Word& w, std::mt19937_64& rng, int depth = 0) {
  std::uniform_int_distribution<int> d(0, 5);
  switch (d(rng)) {
    case 0:  // insert unit on the left
      return Word::tensor(Word::unit(), w);
    case 1:  // insert unit on the right
      return Word::tensor(w, Word::unit());
    case 2:  // remove a unit
      if (w.is_tensor() && w.left().is_unit()) return w.right();
      if (w.is_tensor() && w.right().is_unit()) return w.left();
      break;
    case 3:  // rotate left: (u*v)*z -> u*(v*z)
      if (w.is_tensor() && w.left().is_tensor())
        return Word::tensor(w.left().left(), Word::tensor(w.left().right(), w.right()));
      break;
    case 4:  // rotate right
      if (w.is_tensor() && w.right().is_tensor())
        return Word::tensor(Word::tensor(w.left(), w.right().left()), w.right().right());
      break;
    default:
      break;
  }
  if (w.is_tensor() && depth < 6) {
    std::uniform_int_distribution<int> side(0, 1);
    if (side(rng))
      return Word::tensor(random_tree_move(w.left(), rng, depth + 1), w.right());
    return Word::tensor(w.left(), random_tree_move(w.right(), rng, depth + 1));
  }
  return w;
}

}  // namespace

TEST_CASE("flatten is invariant under associator and unitor moves") {
  std::mt19937_64 rng(11);
  Word w = Word::tensor(Word::tensor(leaf("a"), leaf("b")),
                        Word::tensor(leaf("c"), Word::tensor(leaf("d"), leaf("e"))));
  auto expect = flatten(w);
  for (int k = 0; k < 500; ++k) {
    w = random_tree_move(w, rng);
    CHECK(flatten(w) == expect);
  }
}

TEST_CASE("word grammar round-trips") {
  std::vector<std::string> texts = {"I", "a", "(a * b)", "(a * (b * c))",
                                    "((a * I) * b)", "(x1 * (I * y_2))"};
  for (const auto& t : texts) {
    Word w = parse_word(t);
    CHECK(print_word(w) == t);
    CHECK(parse_word(print_word(w)) == w);
  }
  CHECK_THROWS_AS(parse_word("(a *"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
}

TEST_CASE("structural equality and ordering") {
  Word ab = Word::tensor(leaf("a"), leaf("b"));
  Word ab2 = Word::tensor(leaf("a"), leaf("b"));
  Word ba = Word::tensor(leaf("b"), leaf("a"));
  CHECK(ab == ab2);
  CHECK(ab != ba);
  CHECK(ab.hash() == ab2.hash());
  CHECK((ab < ba || ba < ab));
}
