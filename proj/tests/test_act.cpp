#include <catch_amalgamated.hpp>

#include "monact/act.hpp"
#include "monact/congruence.hpp"
#include "monact/morphisms.hpp"
#include "monact/presentation.hpp"
#include "oracles.hpp"

using namespace monact;

namespace {
  errc code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return errc::parse_error;
  }

  std::vector<std::vector<index_type>> images(std::vector<ActMap> const& maps) {
    std::vector<std::vector<index_type>> out;
    for (auto const& f : maps) {
      out.push_back(f.image());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Small acts over several monoids, used for the oracle comparisons.
  std::vector<Act> sample_acts() {
    std::vector<Act> out;
    for (auto m : {share(trivial_monoid()),
                   share(right_zero_adjoin_one(2)),
                   share(cyclic_group(2)),
                   share(enumerate_monoids(3)[4])}) {
      out.push_back(regular_act(m));
      out.push_back(one_element_act(m));
      for (auto const& sigma : right_congruences(m)) {
        out.push_back(quotient_act(sigma).act);
      }
      for (auto const& a : enumerate_acts(m, 2)) {
        out.push_back(a);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("act laws are validated", "[act]") {
  auto const m = share(right_zero_adjoin_one(2));
  CHECK(code_of([&] { Act(m, {"a"}, {{0, 0}}); }) == errc::bad_shape);
  CHECK(code_of([&] { Act(m, {"a", "b"}, {{1, 0, 0}, {1, 1, 1}}); }) == errc::not_act);
  // (a z2) z1 = b z1 = b but a (z2 z1) = a z1 = a
  CHECK(code_of([&] { Act(m, {"a", "b"}, {{0, 0, 1}, {1, 1, 0}}); }) == errc::not_act);
  CHECK(code_of([&] { Act(m, {"a"}, {{0, 0, 1}}); }) == errc::bad_index);
}

TEST_CASE("regular act and subact closure", "[act]") {
  auto const t = share(trivial_monoid());
  CHECK(regular_act(t).size() == 1);

  auto const m = share(right_zero_adjoin_one(2));
  auto const s = regular_act(m);
  REQUIRE(s.size() == 3);
  CHECK(subact_closure(s, {1}) == std::vector<index_type>{1, 2});
  CHECK(subact_closure(s, {0, 1, 2}) == std::vector<index_type>{0, 1, 2});
  CHECK(code_of([&] { subact_closure(s, {}); }) == errc::empty_seed);
  CHECK(regular_act(share(qiao_wei_truncated(2, 3))).size() == 7);

  auto const sigma = to_congruence(relation_from_subset(m, {0, 1}));
  auto const q     = quotient_act(sigma);
  // c1 = [z2]; c1 z1 = [z1] = c0
  CHECK(subact_closure(q.act, {1}) == std::vector<index_type>{0, 1});
  CHECK(is_cyclic(q.act));
  CHECK(minimal_generating_set(s) == std::vector<index_type>{0});
}

TEST_CASE("S-maps", "[act]") {
  auto const m  = share(right_zero_adjoin_one(2));
  auto const s  = regular_act(m);
  auto const th = one_element_act(m);
  CHECK(code_of([&] { ActMap(th, s, {1}); }) == errc::not_s_map);
  ActMap const to_theta(s, th, {0, 0, 0});
  CHECK(to_theta.is_surjective());
  CHECK_FALSE(to_theta.is_injective());
  CHECK(compose(to_theta, ActMap::identity(s)) == to_theta);

  // left translation by z1 is a right S-map
  ActMap const lambda(s, s, {1, 1, 2});
  CHECK(compose(lambda, lambda) == lambda);
  CHECK(code_of([&] { ActMap(s, regular_act(share(cyclic_group(3))), {0, 1, 2}); })
        == errc::monoid_mismatch);
}

TEST_CASE("disjoint unions and free acts", "[act]") {
  auto const       m = share(right_zero_adjoin_one(2));
  std::vector<Act> parts{regular_act(m), one_element_act(m)};
  auto const       u = disjoint_union(parts);
  CHECK(u.size() == 4);
  CHECK(u.label(3) == "theta@1");
  auto const inj = union_injection(parts, u, 0);
  CHECK(inj.is_injective());
  CHECK(free_act(m, 3).size() == 9);
  CHECK(minimal_generating_set(free_act(m, 2)).size() == 2);
}

TEST_CASE("homs agrees with brute force", "[act][homs]") {
  auto const acts = sample_acts();
  for (auto const& a : acts) {
    for (auto const& b : acts) {
      if (!same_monoid(a.monoid(), b.monoid())) {
        continue;
      }
      CHECK(images(homs(a, b)) == oracle::all_homs(a, b));
    }
  }
}

TEST_CASE("homs examples", "[act][homs]") {
  auto const m  = share(right_zero_adjoin_one(2));
  auto const th = one_element_act(m);
  auto const q1 = quotient_act(to_congruence(relation_from_subset(m, {0, 1}))).act;
  auto const q2 = quotient_act(to_congruence(relation_from_subset(m, {0, 2}))).act;
  CHECK(homs(th, th).size() == 1);
  auto const h21 = homs(q2, q1);
  REQUIRE(h21.size() == 1);
  // generator [1] of S/sigma_z2 goes to c1 = [z2]
  CHECK(h21[0](0) == 1);
  auto const h11 = homs(q1, q1);
  REQUIRE(h11.size() == 1);
  CHECK(h11[0] == ActMap::identity(q1));
  CHECK_THROWS_AS(homs(regular_act(share(qiao_wei_truncated(4, 6))),
                       free_act(share(qiao_wei_truncated(4, 6)), 3),
                       10),
                  Error);
}

TEST_CASE("are_isomorphic agrees with brute force", "[act][iso]") {
  auto const acts = sample_acts();
  for (auto const& a : acts) {
    for (auto const& b : acts) {
      if (!same_monoid(a.monoid(), b.monoid())) {
        continue;
      }
      auto const iso = are_isomorphic(a, b);
      CHECK(iso.has_value() == oracle::isomorphic(a, b));
      if (iso) {
        CHECK(iso->is_bijective());
      }
    }
  }
  auto const m  = share(right_zero_adjoin_one(2));
  auto const q1 = quotient_act(to_congruence(relation_from_subset(m, {0, 1}))).act;
  auto const q2 = quotient_act(to_congruence(relation_from_subset(m, {0, 2}))).act;
  CHECK(are_isomorphic(q1, q1) == ActMap::identity(q1));
  CHECK(are_isomorphic(q1, q2).has_value());
  CHECK_FALSE(are_isomorphic(q1, one_element_act(m)).has_value());
}

TEST_CASE("enumerate_acts lists every act table", "[act][enumerate]") {
  for (auto m : {share(right_zero_adjoin_one(2)), share(cyclic_group(3))}) {
    for (std::size_t size = 1; size <= 3; ++size) {
      std::size_t const n = m->size();
      // brute force over all action tables with x.1 = x
      std::size_t                          count = 0;
      std::vector<std::vector<index_type>> rows(size, std::vector<index_type>(n, 0));
      std::size_t const                    cells = size * (n - 1);
      std::vector<std::size_t>             digits(cells, 0);
      while (true) {
        for (std::size_t x = 0; x < size; ++x) {
          rows[x][0] = x;
          for (std::size_t s = 1; s < n; ++s) {
            rows[x][s] = digits[x * (n - 1) + s - 1];
          }
        }
        bool ok = true;
        for (std::size_t x = 0; x < size && ok; ++x)
          for (std::size_t s = 0; s < n && ok; ++s)
            for (std::size_t t = 0; t < n && ok; ++t)
              ok = rows[rows[x][s]][t] == rows[x][m->product(s, t)];
        count += ok;
        std::size_t k = cells;
        while (k > 0 && ++digits[k - 1] == size) {
          digits[--k] = 0;
        }
        if (k == 0) {
          break;
        }
      }
      CHECK(enumerate_acts(m, size).size() == count);
    }
  }
}
