// Brute-force reference implementations used to cross-check the library.
// They work on raw tables and avoid the library's search code.

#ifndef MONACT_TESTS_ORACLES_HPP_
#define MONACT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "monact/act.hpp"
#include "monact/congruence.hpp"
#include "monact/monoid.hpp"

namespace oracle {

  using table_type = std::vector<std::vector<std::size_t>>;

  inline bool is_monoid_table(table_type const& t) {
    std::size_t const n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (t[0][a] != a || t[a][0] != a) {
        return false;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline table_type table_of(monact::Monoid const& m) {
    table_type t(m.size(), std::vector<std::size_t>(m.size()));
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = 0; b < m.size(); ++b) {
        t[a][b] = m.product(a, b);
      }
    }
    return t;
  }

  // All n x n tables with identity row/column at 0 that are associative,
  // generated by recursion over the free entries.
  inline std::vector<table_type> all_monoid_tables(std::size_t n) {
    std::vector<table_type> out;
    table_type              t(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      t[0][a] = t[a][0] = a;
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t a = 1; a < n; ++a) {
      for (std::size_t b = 1; b < n; ++b) {
        cells.emplace_back(a, b);
      }
    }
    auto fill = [&](auto& self, std::size_t k) -> void {
      if (k == cells.size()) {
        if (is_monoid_table(t)) {
          out.push_back(t);
        }
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        t[cells[k].first][cells[k].second] = v;
        self(self, k + 1);
      }
    };
    fill(fill, 0);
    return out;
  }

  inline bool related_by_subset(monact::Monoid const&           m,
                                std::vector<std::size_t> const& R,
                                std::size_t                     s,
                                std::size_t                     t) {
    for (auto p : R) {
      for (auto q : R) {
        if (m.product(p, s) == m.product(q, t)) {
          return true;
        }
      }
    }
    return false;
  }

  // Equivalence + right compatibility, straight from the definitions.
  inline bool is_right_congruence(monact::Relation const& r) {
    std::size_t const n = r.degree();
    auto const&       m = *r.monoid();
    for (std::size_t a = 0; a < n; ++a) {
      if (!r.contains(a, a)) {
        return false;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (r.contains(a, b) != r.contains(b, a)) {
          return false;
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (r.contains(a, b) && r.contains(b, c) && !r.contains(a, c)) {
            return false;
          }
        }
        if (r.contains(a, b)) {
          for (std::size_t u = 0; u < n; ++u) {
            if (!r.contains(m.product(a, u), m.product(b, u))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  inline bool is_s_map(monact::Act const&              a,
                       monact::Act const&              b,
                       std::vector<std::size_t> const& f) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t s = 0; s < a.monoid()->size(); ++s) {
        if (f[a.act(x, s)] != b.act(f[x], s)) {
          return false;
        }
      }
    }
    return true;
  }

  // Every function A -> B satisfying the S-map law, in lexicographic order.
  inline std::vector<std::vector<std::size_t>> all_homs(monact::Act const& a,
                                                        monact::Act const& b) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              f(a.size(), 0);
    auto rec = [&](auto& self, std::size_t k) -> void {
      if (k == f.size()) {
        if (is_s_map(a, b, f)) {
          out.push_back(f);
        }
        return;
      }
      for (std::size_t v = 0; v < b.size(); ++v) {
        f[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

  // Isomorphism by trying every permutation.
  inline bool isomorphic(monact::Act const& a, monact::Act const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    std::vector<std::size_t> f(a.size());
    std::iota(f.begin(), f.end(), 0);
    do {
      if (is_s_map(a, b, f)) {
        return true;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
  }

  inline bool is_closed(monact::Act const& a, std::vector<char> const& in) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (in[x]) {
        for (std::size_t s = 0; s < a.monoid()->size(); ++s) {
          if (!in[a.act(x, s)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Coessential by enumerating every proper non-empty closed subset.
  inline bool coessential(monact::ActMap const& f) {
    std::size_t const n = f.source().size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
      std::vector<char> in(n);
      for (std::size_t x = 0; x < n; ++x) {
        in[x] = (mask >> x) & 1;
      }
      if (!is_closed(f.source(), in)) {
        continue;
      }
      std::vector<char> hit(f.target().size(), 0);
      for (std::size_t x = 0; x < n; ++x) {
        if (in[x]) {
          hit[f(x)] = 1;
        }
      }
      if (std::all_of(hit.begin(), hit.end(), [](char c) { return c; })) {
        return false;
      }
    }
    return true;
  }

  // Condition (P) and (E) straight from the definitions.
  inline bool condition_p(monact::Act const& a) {
    auto const& m = *a.monoid();
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y)
        for (std::size_t s = 0; s < m.size(); ++s)
          for (std::size_t t = 0; t < m.size(); ++t) {
            if (a.act(x, s) != a.act(y, t)) {
              continue;
            }
            bool found = false;
            for (std::size_t z = 0; z < a.size() && !found; ++z)
              for (std::size_t u = 0; u < m.size() && !found; ++u)
                for (std::size_t v = 0; v < m.size() && !found; ++v)
                  found = a.act(z, u) == x && a.act(z, v) == y
                          && m.product(u, s) == m.product(v, t);
            if (!found) {
              return false;
            }
          }
    return true;
  }

  inline bool condition_e(monact::Act const& a) {
    auto const& m = *a.monoid();
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t s = 0; s < m.size(); ++s)
        for (std::size_t t = 0; t < m.size(); ++t) {
          if (a.act(x, s) != a.act(x, t)) {
            continue;
          }
          bool found = false;
          for (std::size_t z = 0; z < a.size() && !found; ++z)
            for (std::size_t u = 0; u < m.size() && !found; ++u)
              found = a.act(z, u) == x && m.product(u, s) == m.product(u, t);
          if (!found) {
            return false;
          }
        }
    return true;
  }

  // Every set partition of {0..n-1} as a class-of vector (restricted growth).
  inline std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              rgs(n, 0);
    auto rec = [&](auto& self, std::size_t k, std::size_t blocks) -> void {
      if (k == n) {
        out.push_back(rgs);
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        rgs[k] = b;
        self(self, k + 1, std::max(blocks, b + 1));
      }
    };
    if (n > 0) {
      rgs[0] = 0;
      rec(rec, 1, 1);
    }
    return out;
  }

}  // namespace oracle

#endif  // MONACT_TESTS_ORACLES_HPP_
