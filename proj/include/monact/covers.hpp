// monact - finite monoids, right acts, and their covers
//
// This file contains decision procedures for the two notions of cover of an
// act A:
//
//   * f : C -> A is coessential if f is onto and no proper subact of C maps
//     onto A;
//   * g : P -> A is an X-precover if every g' : P' -> A with P' in X factors
//     as g f, and an X-cover if moreover every f : P -> P with g f = g is an
//     isomorphism.
//
// The class X is infinite in general, so precovers and covers are decided
// relative to an explicit finite family of acts.

#ifndef MONACT_COVERS_HPP_
#define MONACT_COVERS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "act.hpp"
#include "congruence.hpp"
#include "error.hpp"
#include "flatness.hpp"
#include "morphisms.hpp"

namespace monact {

  enum class cover_kind { coessential, precover, cover };

  inline char const* to_string(cover_kind k) noexcept {
    switch (k) {
      case cover_kind::coessential: return "coessential";
      case cover_kind::precover: return "precover";
      case cover_kind::cover: return "cover";
    }
    return "unknown";
  }

  //! Verdict with a witness when it is negative: a proper subact mapping onto
  //! the target (coessential), the first family member and map that does not
  //! factor (precover), or an endomorphism f with g f = g that is not
  //! bijective (cover).
  struct CoverReport {
    cover_kind                             kind;
    bool                                   verdict = true;
    std::optional<std::vector<index_type>> subact;
    std::optional<std::size_t>             family_index;
    std::optional<ActMap>                  map;

    explicit operator bool() const noexcept {
      return verdict;
    }
  };

  //! Coessential test by preimage choice functions: any subact mapping onto
  //! the target contains one preimage of each target element, hence the
  //! closure of such a choice, so it suffices to test those closures.
  inline CoverReport is_coessential(ActMap const& f,
                                    std::size_t   budget = default_search_budget) {
    if (!f.is_surjective()) {
      throw Error(errc::not_epimorphism, "coessential test needs an onto map");
    }
    Act const&                           c = f.source();
    std::vector<std::vector<index_type>> fibres(f.target().size());
    for (index_type x = 0; x < c.size(); ++x) {
      fibres[f(x)].push_back(x);
    }
    std::vector<std::size_t> pick(fibres.size(), 0);
    std::size_t              spent = 0;
    while (true) {
      if (++spent > budget) {
        throw Error(errc::budget_exceeded, "too many preimage choices");
      }
      std::vector<index_type> chosen;
      for (std::size_t y = 0; y < fibres.size(); ++y) {
        chosen.push_back(fibres[y][pick[y]]);
      }
      auto closure = subact_closure(c, chosen);
      if (closure.size() < c.size()) {
        return {cover_kind::coessential, false, std::move(closure), {}, {}};
      }
      std::size_t y = fibres.size();
      while (y > 0) {
        --y;
        if (++pick[y] < fibres[y].size()) {
          break;
        }
        pick[y] = 0;
        if (y == 0) {
          return {cover_kind::coessential, true, {}, {}, {}};
        }
      }
    }
  }

  inline CoverReport is_precover_wrt(ActMap const&           g,
                                     std::vector<Act> const& family,
                                     std::size_t budget = default_search_budget) {
    for (std::size_t k = 0; k < family.size(); ++k) {
      auto const through = homs(family[k], g.source(), budget);
      for (auto const& h : homs(family[k], g.target(), budget)) {
        bool factors = false;
        for (auto const& f : through) {
          if (compose(g, f) == h) {
            factors = true;
            break;
          }
        }
        if (!factors) {
          return {cover_kind::precover, false, {}, k, h};
        }
      }
    }
    return {cover_kind::precover, true, {}, {}, {}};
  }

  inline CoverReport is_cover_wrt(ActMap const&           g,
                                  std::vector<Act> const& family,
                                  std::size_t budget = default_search_budget) {
    auto pre = is_precover_wrt(g, family, budget);
    if (!pre) {
      pre.kind = cover_kind::cover;
      return pre;
    }
    for (auto const& f : homs(g.source(), g.source(), budget)) {
      if (compose(g, f) == g && !f.is_bijective()) {
        return {cover_kind::cover, false, {}, {}, f};
      }
    }
    return {cover_kind::cover, true, {}, {}, {}};
  }

  //! Indices of the strongly flat members of family, i.e. the part of the
  //! family inside the class SF.
  inline std::vector<std::size_t> strongly_flat_members(std::vector<Act> const& family) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < family.size(); ++k) {
      if (is_strongly_flat(family[k])) {
        out.push_back(k);
      }
    }
    return out;
  }

  inline std::vector<Act> restrict_family(std::vector<Act> const&         family,
                                          std::vector<std::size_t> const& keep) {
    std::vector<Act> out;
    for (auto k : keep) {
      out.push_back(family.at(k));
    }
    return out;
  }

  struct CoessentialCover {
    RightCongruence congruence;
    ActMap          map;
  };

  //! Every right congruence sigma of m such that S/sigma is strongly flat and
  //! some epimorphism S/sigma -> target is coessential (the first such map,
  //! in homs order, is returned). Congruences are in canonical order.
  inline std::vector<CoessentialCover> search_sf_coessential_covers(
      MonoidPtr const& m,
      Act const&       target,
      std::size_t      bound  = default_congruence_bound,
      std::size_t      budget = default_search_budget) {
    if (!same_monoid(m, target.monoid())) {
      throw Error(errc::monoid_mismatch, "target act is over a different monoid");
    }
    if (!is_cyclic(target)) {
      throw Error(errc::bad_parameter, "target act must be cyclic");
    }
    std::vector<CoessentialCover> out;
    for (auto const& sigma : right_congruences(m, bound)) {
      auto const q = quotient_act(sigma);
      if (!is_strongly_flat(q.act)) {
        continue;
      }
      for (auto const& f : homs(q.act, target, budget)) {
        if (f.is_surjective() && is_coessential(f, budget)) {
          out.push_back({sigma, f});
          break;
        }
      }
    }
    return out;
  }

  //! True iff the cyclic acts S/sigma for sigma in the list are pairwise
  //! isomorphic.
  inline bool unique_up_to_iso(std::vector<RightCongruence> const& congruences) {
    for (std::size_t i = 0; i < congruences.size(); ++i) {
      for (std::size_t j = i + 1; j < congruences.size(); ++j) {
        if (!cyclic_iso_witness(congruences[i], congruences[j])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace monact

#endif  // MONACT_COVERS_HPP_
