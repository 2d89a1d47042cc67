// monact - finite monoids, right acts, and their covers
//
// Strong flatness of finite acts via the interpolation conditions
//
//   (P) as = a's'  =>  a = a''u, a' = a''v, us = vs'  for some a'', u, v
//   (E) as = as'   =>  a = a''u, us = us'             for some a'', u
//
// A finite act is strongly flat iff it satisfies both.

#ifndef MONACT_FLATNESS_HPP_
#define MONACT_FLATNESS_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "act.hpp"
#include "monoid.hpp"

namespace monact {

  struct ConditionResult {
    bool                    holds = true;
    //! (a, a', s, s') for (P), (a, s, s') for (E); lexicographically least.
    std::vector<index_type> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  namespace detail {
    // factors[b][a] = {u | bu = a}
    inline std::vector<std::vector<std::vector<index_type>>> factorisations(Act const& a) {
      std::size_t const n = a.size(), m = a.monoid()->size();
      std::vector<std::vector<std::vector<index_type>>> out(
          n, std::vector<std::vector<index_type>>(n));
      for (index_type b = 0; b < n; ++b) {
        for (index_type u = 0; u < m; ++u) {
          out[b][a.act(b, u)].push_back(u);
        }
      }
      return out;
    }
  }  // namespace detail

  inline ConditionResult satisfies_condition_p(Act const& a) {
    auto const&       S  = *a.monoid();
    std::size_t const n  = a.size();
    std::size_t const m  = S.size();
    auto const        fs = detail::factorisations(a);
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        for (index_type s = 0; s < m; ++s) {
          for (index_type t = 0; t < m; ++t) {
            if (a.act(x, s) != a.act(y, t)) {
              continue;
            }
            bool found = false;
            for (index_type b = 0; b < n && !found; ++b) {
              for (auto u : fs[b][x]) {
                index_type const us = S.product(u, s);
                for (auto v : fs[b][y]) {
                  if (us == S.product(v, t)) {
                    found = true;
                    break;
                  }
                }
                if (found) {
                  break;
                }
              }
            }
            if (!found) {
              return {false, {x, y, s, t}};
            }
          }
        }
      }
    }
    return {};
  }

  inline ConditionResult satisfies_condition_e(Act const& a) {
    auto const&       S  = *a.monoid();
    std::size_t const n  = a.size();
    std::size_t const m  = S.size();
    auto const        fs = detail::factorisations(a);
    for (index_type x = 0; x < n; ++x) {
      for (index_type s = 0; s < m; ++s) {
        for (index_type t = 0; t < m; ++t) {
          if (a.act(x, s) != a.act(x, t)) {
            continue;
          }
          bool found = false;
          for (index_type b = 0; b < n && !found; ++b) {
            for (auto u : fs[b][x]) {
              if (S.product(u, s) == S.product(u, t)) {
                found = true;
                break;
              }
            }
          }
          if (!found) {
            return {false, {x, s, t}};
          }
        }
      }
    }
    return {};
  }

  struct FlatnessReport {
    ConditionResult condition_p;
    ConditionResult condition_e;

    bool strongly_flat() const noexcept {
      return condition_p.holds && condition_e.holds;
    }

    explicit operator bool() const noexcept {
      return strongly_flat();
    }
  };

  inline FlatnessReport is_strongly_flat(Act const& a) {
    return {satisfies_condition_p(a), satisfies_condition_e(a)};
  }

}  // namespace monact

#endif  // MONACT_FLATNESS_HPP_
