#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "monact/kruml.hpp"

using namespace monact;

namespace {
  // The class of w under a_i a_j = a_(j+1) a_i (i <= j), applied in both
  // directions. Length is preserved, so the class is finite.
  std::set<std::vector<std::size_t>> equivalence_class(std::vector<std::size_t> const& w) {
    std::set<std::vector<std::size_t>>    seen{w};
    std::vector<std::vector<std::size_t>> todo{w};
    while (!todo.empty()) {
      auto const v = todo.back();
      todo.pop_back();
      for (std::size_t p = 0; p + 1 < v.size(); ++p) {
        auto next = v;
        if (v[p] <= v[p + 1]) {
          next[p]     = v[p + 1] + 1;
          next[p + 1] = v[p];
        } else {
          next[p]     = v[p + 1];
          next[p + 1] = v[p] - 1;
        }
        if (seen.insert(next).second) {
          todo.push_back(next);
        }
      }
    }
    return seen;
  }

  KWord w(std::initializer_list<std::size_t> l) {
    return KWord(l);
  }
}  // namespace

TEST_CASE("knormalize examples", "[kruml]") {
  CHECK(knormalize(w({2, 1})) == w({1, 1}));
  CHECK(knormalize(KWord{}) == KWord{});
  CHECK(knormalize(w({2, 0})) == w({0, 1}));
  CHECK(parse_kword("2 1") == w({2, 1}));
  CHECK(parse_kword("") == KWord{});
  CHECK(to_string(w({1, 1})) == "1 1");
  CHECK(to_algebraic(w({2, 1})) == "a2a1");
  CHECK(to_algebraic(KWord{}) == "1");
  CHECK_THROWS_AS(parse_kword("1 x"), Error);
  CHECK_THROWS_AS(parse_kword("-1"), Error);
}

TEST_CASE("kmul examples", "[kruml]") {
  CHECK(kmul(w({3, 1}), KWord{}) == knormalize(w({3, 1})));
  CHECK(kmul(w({1}), w({0})) == w({0, 0}));
  CHECK(kmul(w({0}), w({1})) == w({0, 1}));
}

TEST_CASE("left_cancel_test examples", "[kruml]") {
  CHECK(left_cancel_test(w({0}), w({1}), w({2})));
  CHECK(left_cancel_test(w({3}), w({1, 2}), w({1, 2})));
  CHECK(kmul(w({2}), w({1})) == w({1, 1}));
  CHECK(kmul(w({2}), w({1, 1})) == knormalize(w({2, 1, 1})));
  CHECK(left_cancel_test(w({2}), w({1}), w({1, 1})));
}

TEST_CASE("normal forms are the unique nondecreasing words of each class", "[kruml]") {
  for (auto const& nf : normal_forms(4, 3)) {
    auto const cls = equivalence_class(nf.letters());
    std::size_t sorted = 0;
    for (auto const& v : cls) {
      sorted += std::is_sorted(v.begin(), v.end());
      CHECK(knormalize(KWord(v)) == nf);
    }
    CHECK(sorted == 1);
  }
}

TEST_CASE("sampled properties", "[kruml][property]") {
  std::mt19937_64 rng(20240917);
  for (int k = 0; k < 1000; ++k) {
    KWord const x  = random_kword(rng, 12, 8);
    KWord const nf = knormalize(x);
    CHECK(nf.is_normal());
    CHECK(knormalize(nf) == nf);
    CHECK(normalize_randomly(x, rng) == nf);
    if (x.size() <= 6) {
      CHECK(equivalence_class(x.letters()).count(nf.letters()) == 1);
    }
  }
  for (int k = 0; k < 1000; ++k) {
    KWord const a = knormalize(random_kword(rng, 5, 6));
    KWord const b = knormalize(random_kword(rng, 5, 6));
    KWord const c = knormalize(random_kword(rng, 5, 6));
    CHECK(kmul(kmul(a, b), c) == kmul(a, kmul(b, c)));
    CHECK(left_cancel_test(a, b, c));
    // b and a word equal to it in the monoid but spelled differently
    auto const cls = equivalence_class(b.letters());
    KWord const b2(*cls.rbegin());
    CHECK(left_cancel_test(a, b, b2));
    CHECK(kmul(a, b) == kmul(a, b2));
  }
}

TEST_CASE("w a_i = w a_j forces i = j", "[kruml][property]") {
  for (auto const& x : normal_forms(6, 8)) {
    for (std::size_t i = 0; i <= 8; ++i) {
      for (std::size_t j = i + 1; j <= 8; ++j) {
        REQUIRE(kmul(x, w({i})) != kmul(x, w({j})));
      }
    }
  }
}

TEST_CASE("not right cancellative", "[kruml]") {
  bool found = false;
  for (std::size_t u = 0; u <= 3; ++u)
    for (std::size_t v = 0; v <= 3; ++v)
      for (std::size_t x = 0; x <= 3; ++x)
        if (u != v && kmul(w({u}), w({x})) == kmul(w({v}), w({x})))
          found = found || (u == 2 && v == 1 && x == 1);
  CHECK(found);
  CHECK(kmul(w({2}), w({1})) == kmul(w({1}), w({1})));
}

TEST_CASE("insertion index and transitions", "[kruml][finx]") {
  FinXSystem const abcd({"a", "b", "c", "d"});
  auto const       bd = abcd.subset({"b", "d"});
  CHECK(abcd.insertion_index({}, 2) == 0);
  CHECK(abcd.insertion_index(bd, abcd.position("c")) == 1);
  CHECK(abcd.insertion_index(bd, abcd.position("a")) == 0);
  try {
    (void) abcd.insertion_index(bd, abcd.position("b"));
    FAIL("accepted a member");
  } catch (Error const& e) {
    CHECK(e.code() == errc::already_member);
  }

  FinXSystem const xy({"x", "y"});
  auto const       x   = xy.subset({"x"});
  auto const       all = xy.subset({"x", "y"});
  CHECK(xy.transition(x, x, w({3, 1})) == w({1, 2}));
  CHECK(xy.transition(x, all, KWord{}) == w({1}));
  CHECK(xy.transition({}, all, KWord{}) == w({0, 0}));
  CHECK(xy.transition_in_order({}, all, {1, 0}, KWord{}) == w({0, 0}));
  try {
    (void) xy.transition(all, x, KWord{});
    FAIL("accepted a non-subset");
  } catch (Error const& e) {
    CHECK(e.code() == errc::not_subset);
  }
}

TEST_CASE("transitions do not depend on insertion order", "[kruml][finx]") {
  std::mt19937_64 rng(7);
  for (std::size_t size = 1; size <= 4; ++size) {
    std::vector<std::string> ground;
    for (std::size_t k = 0; k < size; ++k) {
      ground.push_back(std::string(1, char('p' + k)));
    }
    FinXSystem const X(ground);
    for (std::size_t zmask = 0; zmask < (1u << size); ++zmask) {
      for (std::size_t ymask = 0; ymask < (1u << size); ++ymask) {
        if ((ymask & zmask) != ymask) {
          continue;
        }
        FinSubset Y, Z, order;
        for (std::size_t k = 0; k < size; ++k) {
          if (ymask >> k & 1) Y.push_back(k);
          if (zmask >> k & 1) Z.push_back(k);
          if ((zmask & ~ymask) >> k & 1) order.push_back(k);
        }
        for (int s = 0; s < 20; ++s) {
          KWord const word     = random_kword(rng, 4, 4);
          KWord const expected = X.transition(Y, Z, word);
          auto        perm     = order;
          do {
            CHECK(X.transition_in_order(Y, Z, perm, word) == expected);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    }
  }
}

TEST_CASE("colimit equality", "[kruml][finx]") {
  FinXSystem const xy({"x", "y"});
  auto const       x   = xy.subset({"x"});
  auto const       y   = xy.subset({"y"});
  auto const       all = xy.subset({"x", "y"});
  auto const       e   = xy.element(x, {});
  CHECK(xy.colimit_equal(e, e));
  CHECK(xy.colimit_equal(e, xy.element(all, w({1}))));
  CHECK(xy.colimit_equal(xy.element(y, {}), xy.element(all, w({0}))));
  CHECK_FALSE(xy.colimit_equal(e, xy.element(y, {})));

  // equivalence relation and invariance under pushing, on a dense sample
  FinXSystem const X({"p", "q", "r"});
  std::vector<ColimitElement> elems;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    FinSubset Y;
    for (std::size_t k = 0; k < 3; ++k) {
      if (mask >> k & 1) Y.push_back(k);
    }
    for (auto const& nf : normal_forms(2, 3)) {
      elems.push_back(X.element(Y, nf));
    }
  }
  FinSubset const top{0, 1, 2};
  for (auto const& a : elems) {
    for (auto const& b : elems) {
      bool const ab = X.colimit_equal(a, b);
      CHECK(ab == X.colimit_equal(b, a));
      CHECK(ab == X.colimit_equal(X.push(a, top), b));
      CHECK(ab == (X.push(a, top).w == X.push(b, top).w));
    }
  }
}
