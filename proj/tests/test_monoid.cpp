#include <catch_amalgamated.hpp>

#include "monact/monoid.hpp"
#include "monact/presentation.hpp"
#include "oracles.hpp"

using namespace monact;

namespace {
  template <typename F>
  errc error_code(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return errc::bad_parameter;
  }
}  // namespace

TEST_CASE("build_from_table validates its input", "[monoid]") {
  SECTION("trivial") {
    auto const m = build_from_table({"1"}, {{0}});
    CHECK(m.size() == 1);
    CHECK(m.product(0, 0) == 0);
  }
  SECTION("right zero table") {
    auto const m = build_from_table({"1", "z1", "z2"}, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
    CHECK(m == right_zero_adjoin_one(2));
    CHECK(m.at("z1") == 1);
    CHECK_FALSE(m.find("z3").has_value());
  }
  SECTION("non-associative table, least witness") {
    oracle::table_type const t{{0, 1, 2}, {1, 2, 2}, {2, 1, 2}};
    REQUIRE_FALSE(oracle::is_monoid_table(t));
    std::vector<std::size_t> expected;
    for (std::size_t a = 0; a < 3 && expected.empty(); ++a)
      for (std::size_t b = 0; b < 3 && expected.empty(); ++b)
        for (std::size_t c = 0; c < 3 && expected.empty(); ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]])
            expected = {a, b, c};
    try {
      build_from_table({"1", "a", "b"}, t);
      FAIL("accepted a non-associative table");
    } catch (Error const& e) {
      CHECK(e.code() == errc::not_associative);
      CHECK(e.witness() == expected);
    }
  }
  SECTION("errors") {
    CHECK(error_code([] { build_from_table({"1", "a"}, {{0, 1}, {1, 2}}); }) == errc::bad_index);
    CHECK(error_code([] { build_from_table({"1", "a"}, {{0, 1}}); }) == errc::bad_shape);
    CHECK(error_code([] { build_from_table({"1", "1"}, {{0, 1}, {1, 1}}); })
          == errc::duplicate_label);
    CHECK(error_code([] { build_from_table({"a", "b"}, {{1, 0}, {0, 1}}); })
          == errc::no_identity);
  }
}

TEST_CASE("right_zero_adjoin_one", "[monoid]") {
  CHECK(error_code([] { right_zero_adjoin_one(0); }) == errc::empty_semigroup);
  auto const m1 = right_zero_adjoin_one(1);
  CHECK(m1.size() == 2);
  CHECK(m1.product(1, 1) == 1);
  auto const m2 = right_zero_adjoin_one(2);
  CHECK(m2.product(m2.at("z1"), m2.at("z2")) == m2.at("z2"));
  CHECK(m2.product(m2.at("z2"), m2.at("z1")) == m2.at("z1"));
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const m = right_zero_adjoin_one(n);
    REQUIRE(m.size() == n + 1);
    for (index_type x = 0; x <= n; ++x) {
      for (index_type z = 1; z <= n; ++z) {
        CHECK(m.product(x, z) == z);
      }
    }
  }
  CHECK_FALSE(is_cancellative(right_zero_adjoin_one(3), side::right));
}

TEST_CASE("qiao_wei_truncated", "[monoid]") {
  auto const m = qiao_wei_truncated(2, 3);
  CHECK(m.labels()
        == std::vector<std::string>{"1", "x0^1", "x0^2", "x0^3", "x1^1", "x2^1", "x2^2"});
  CHECK(m.product(m.at("x1^1"), m.at("x2^1")) == m.at("x2^2"));
  CHECK(m.product(m.at("x0^1"), m.at("x1^1")) == m.at("x0^1"));
  CHECK(m.product(m.at("x1^1"), m.at("x0^1")) == m.at("x0^1"));
  CHECK(oracle::is_monoid_table(oracle::table_of(m)));

  CHECK(qiao_wei_truncated(3, 4).size() == 10);
  CHECK(qiao_wei_truncated(1, 2).size() == 4);
  CHECK(qiao_wei_truncated(3).size() == 10);

  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t cap = 1; cap <= 6; ++cap) {
      auto const       q   = qiao_wei_truncated(n, cap);
      index_type const top = q.at("x0^" + std::to_string(cap));
      CHECK(oracle::is_monoid_table(oracle::table_of(q)));
      for (index_type x = 0; x < q.size(); ++x) {
        CHECK(q.product(top, x) == top);
      }
      // x_k^k = x_k^(k+1) and x_i x_j = x_j^2
      for (std::size_t k = 1; k <= n; ++k) {
        index_type const xk = q.at("x" + std::to_string(k) + "^1");
        index_type       p  = 0;
        for (std::size_t e = 0; e < k; ++e) {
          p = q.product(p, xk);
        }
        CHECK(q.product(p, xk) == p);
        for (std::size_t j = 1; j <= n; ++j) {
          if (j == k) {
            continue;
          }
          index_type const xj = q.at("x" + std::to_string(j) + "^1");
          CHECK(q.product(xk, xj) == q.product(xj, xj));
        }
      }
    }
  }
}

TEST_CASE("is_cancellative returns the least valid witness", "[monoid]") {
  auto check_witness = [](Monoid const& m, side sd) {
    auto const r = is_cancellative(m, sd);
    std::optional<std::array<index_type, 3>> expected;
    for (index_type a = 0; a < m.size() && !expected; ++a)
      for (index_type b = 0; b < m.size() && !expected; ++b)
        for (index_type c = 0; c < m.size() && !expected; ++c) {
          if (sd == side::right && a < b && m.product(a, c) == m.product(b, c))
            expected = std::array<index_type, 3>{a, b, c};
          if (sd == side::left && b < c && m.product(a, b) == m.product(a, c))
            expected = std::array<index_type, 3>{a, b, c};
        }
    CHECK(r.cancellative == !expected.has_value());
    CHECK(r.witness == expected);
    return r;
  };

  CHECK(check_witness(cyclic_group(3), side::right));
  CHECK(check_witness(cyclic_group(3), side::left));

  auto const rz = right_zero_adjoin_one(2);
  auto const r  = check_witness(rz, side::right);
  REQUIRE_FALSE(r);
  CHECK(*r.witness == std::array<index_type, 3>{0, 1, 1});
  // (z1, z2, z1) is also a witness: z1 z1 = z1 = z2 z1
  CHECK(rz.product(1, 1) == rz.product(2, 1));

  auto const qw = qiao_wei_truncated(2, 3);
  auto const l  = check_witness(qw, side::left);
  REQUIRE_FALSE(l);
  CHECK(qw.label((*l.witness)[0]) == "x0^1");
  // x0 x1 = x0 = x0 x2
  CHECK(qw.product(qw.at("x0^1"), qw.at("x1^1")) == qw.product(qw.at("x0^1"), qw.at("x2^1")));

  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& m : enumerate_monoids(n)) {
      check_witness(m, side::left);
      check_witness(m, side::right);
    }
  }
}

TEST_CASE("is_group", "[monoid]") {
  CHECK(is_group(cyclic_group(3)));
  CHECK(is_group(trivial_monoid()));
  CHECK_FALSE(is_group(right_zero_adjoin_one(2)));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& m : enumerate_monoids(n)) {
      // inverse search as an independent definition
      bool inverses = true;
      for (index_type a = 0; a < m.size(); ++a) {
        bool found = false;
        for (index_type b = 0; b < m.size(); ++b) {
          found = found || (m.product(a, b) == 0 && m.product(b, a) == 0);
        }
        inverses = inverses && found;
      }
      CHECK(is_group(m) == inverses);
      if (is_group(m)) {
        CHECK(is_cancellative(m, side::left));
        CHECK(is_cancellative(m, side::right));
      }
    }
  }
}

TEST_CASE("enumerate_monoids agrees with an independent enumeration", "[monoid][enumerate]") {
  std::vector<std::size_t> const expected_counts{1, 2, 11, 156};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const monoids = enumerate_monoids(n);
    auto const tables  = oracle::all_monoid_tables(n);
    REQUIRE(monoids.size() == tables.size());
    CHECK(monoids.size() == expected_counts[n - 1]);
    for (std::size_t k = 0; k < monoids.size(); ++k) {
      CHECK(oracle::table_of(monoids[k]) == tables[k]);
    }
    CHECK(enumerate_monoids(n) == monoids);
  }
  auto const two = enumerate_monoids(2);
  // Z_2 (e^2 = 1), then {1, e} with e^2 = e
  CHECK(two[0].product(1, 1) == 0);
  CHECK(two[1].product(1, 1) == 1);
  CHECK(error_code([] { enumerate_monoids(5); }) == errc::order_too_large);
}

TEST_CASE("right cancellative monoids of order <= 4 are groups", "[monoid][lemma]") {
  std::size_t exceptions = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_monoid(n, [&](Monoid const& m) {
      exceptions += is_cancellative(m, side::right) && !is_group(m);
    });
  }
  CHECK(exceptions == 0);
}

TEST_CASE("Monoid::evaluate and labels", "[monoid]") {
  auto const m = cyclic_group(4);
  CHECK(m.label(2) == "g^2");
  CHECK(m.evaluate({1, 1, 3}) == 1);
  CHECK(m.evaluate({}) == Monoid::identity);
  CHECK(error_code([&] { (void) m.at("h"); }) == errc::bad_index);
}
