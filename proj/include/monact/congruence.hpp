// monact - finite monoids, right acts, and their covers
//
// This file contains binary relations on a monoid, right congruences, the
// relation induced by a subset R ((s, t) related iff ps = qt for some
// p, q in R), pullbacks of congruences along left multiplication, the
// cyclic act isomorphism test, and quotients S/sigma.

#ifndef MONACT_CONGRUENCE_HPP_
#define MONACT_CONGRUENCE_HPP_

#include <algorithm>  // for all_of
#include <array>      // for array
#include <cstddef>    // for size_t
#include <numeric>    // for iota
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "act.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace monact {

  //! A binary relation on the elements of a monoid, as a boolean matrix.
  class Relation {
   public:
    explicit Relation(MonoidPtr monoid)
        : _monoid(std::move(monoid)),
          _pairs(_monoid->size() * _monoid->size(), 0) {}

    static Relation diagonal(MonoidPtr const& m) {
      Relation r(m);
      for (index_type s = 0; s < m->size(); ++s) {
        r.set(s, s);
      }
      return r;
    }

    static Relation universal(MonoidPtr const& m) {
      Relation r(m);
      std::fill(r._pairs.begin(), r._pairs.end(), 1);
      return r;
    }

    MonoidPtr const& monoid() const noexcept {
      return _monoid;
    }

    std::size_t degree() const noexcept {
      return _monoid->size();
    }

    bool contains(index_type s, index_type t) const {
      return _pairs[s * degree() + t];
    }

    void set(index_type s, index_type t, bool value = true) {
      _pairs[s * degree() + t] = value;
    }

    std::size_t count() const {
      return static_cast<std::size_t>(
          std::count(_pairs.begin(), _pairs.end(), 1));
    }

    friend bool operator==(Relation const& a, Relation const& b) {
      return same_monoid(a._monoid, b._monoid) && a._pairs == b._pairs;
    }

   private:
    MonoidPtr         _monoid;
    std::vector<char> _pairs;
  };

  //! A right congruence, stored as the class of each element with classes
  //! numbered in order of their least member. Two RightCongruence values on
  //! the same monoid are equal iff they are the same partition.
  class RightCongruence {
   public:
    //! From a class assignment (any numbering); throws not_congruence if the
    //! partition is not closed under right multiplication.
    static RightCongruence from_partition(MonoidPtr                      m,
                                          std::vector<index_type> const& class_of) {
      if (class_of.size() != m->size()) {
        throw Error(errc::bad_shape, "partition needs one class per element");
      }
      RightCongruence c(std::move(m), canonical(class_of));
      if (auto bad = c.compatibility_failure()) {
        throw Error(errc::not_congruence,
                    "partition is not right compatible",
                    {(*bad)[0], (*bad)[1], (*bad)[2]});
      }
      return c;
    }

    static RightCongruence from_classes(MonoidPtr                                   m,
                                        std::vector<std::vector<index_type>> const& classes) {
      std::vector<index_type> class_of(m->size(), UNDEFINED);
      for (index_type k = 0; k < classes.size(); ++k) {
        for (auto s : classes[k]) {
          if (s >= m->size() || class_of[s] != UNDEFINED) {
            throw Error(errc::bad_shape, "classes must partition the monoid");
          }
          class_of[s] = k;
        }
      }
      if (std::find(class_of.begin(), class_of.end(), UNDEFINED) != class_of.end()) {
        throw Error(errc::bad_shape, "classes must cover the monoid");
      }
      return from_partition(std::move(m), class_of);
    }

    static RightCongruence diagonal(MonoidPtr const& m) {
      std::vector<index_type> id(m->size());
      std::iota(id.begin(), id.end(), 0);
      return RightCongruence(m, std::move(id));
    }

    static RightCongruence universal(MonoidPtr const& m) {
      return RightCongruence(m, std::vector<index_type>(m->size(), 0));
    }

    MonoidPtr const& monoid() const noexcept {
      return _monoid;
    }

    std::vector<index_type> const& class_of() const noexcept {
      return _class_of;
    }

    index_type class_of(index_type s) const {
      return _class_of.at(s);
    }

    std::size_t num_classes() const {
      return _class_of.empty()
                 ? 0
                 : *std::max_element(_class_of.begin(), _class_of.end()) + 1;
    }

    bool contains(index_type s, index_type t) const {
      return _class_of.at(s) == _class_of.at(t);
    }

    //! Classes sorted by least member, members sorted.
    std::vector<std::vector<index_type>> classes() const {
      std::vector<std::vector<index_type>> out(num_classes());
      for (index_type s = 0; s < _class_of.size(); ++s) {
        out[_class_of[s]].push_back(s);
      }
      return out;
    }

    Relation to_relation() const {
      Relation r(_monoid);
      for (index_type s = 0; s < _class_of.size(); ++s) {
        for (index_type t = 0; t < _class_of.size(); ++t) {
          r.set(s, t, contains(s, t));
        }
      }
      return r;
    }

    friend bool operator==(RightCongruence const& a, RightCongruence const& b) {
      return same_monoid(a._monoid, b._monoid) && a._class_of == b._class_of;
    }

    //! Lexicographic on the canonical class vector.
    friend bool operator<(RightCongruence const& a, RightCongruence const& b) {
      return a._class_of < b._class_of;
    }

    //! Canonical numbering: classes numbered in order of least member.
    static std::vector<index_type> canonical(std::vector<index_type> const& class_of) {
      std::vector<index_type> out(class_of.size());
      std::vector<std::pair<index_type, index_type>> seen;
      index_type next = 0;
      for (index_type s = 0; s < class_of.size(); ++s) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& p) {
          return p.first == class_of[s];
        });
        if (it == seen.end()) {
          seen.emplace_back(class_of[s], next);
          out[s] = next++;
        } else {
          out[s] = it->second;
        }
      }
      return out;
    }

   private:
    RightCongruence(MonoidPtr m, std::vector<index_type> class_of)
        : _monoid(std::move(m)), _class_of(std::move(class_of)) {}

    // least (s, t, u) with s ~ t but su !~ tu
    std::optional<std::array<index_type, 3>> compatibility_failure() const {
      std::size_t const n = _monoid->size();
      for (index_type s = 0; s < n; ++s) {
        for (index_type t = s + 1; t < n; ++t) {
          if (!contains(s, t)) {
            continue;
          }
          for (index_type u = 0; u < n; ++u) {
            if (!contains(_monoid->product(s, u), _monoid->product(t, u))) {
              return std::array<index_type, 3>{s, t, u};
            }
          }
        }
      }
      return std::nullopt;
    }

    MonoidPtr               _monoid;
    std::vector<index_type> _class_of;
  };

  //! (s, t) related iff ps = qt for some p, q in subset. The subset must
  //! contain the identity; the result is reflexive and symmetric but need not
  //! be transitive.
  inline Relation relation_from_subset(MonoidPtr const&               m,
                                       std::vector<index_type> const& subset) {
    if (std::find(subset.begin(), subset.end(), Monoid::identity) == subset.end()) {
      throw Error(errc::bad_parameter, "subset must contain the identity");
    }
    for (auto p : subset) {
      if (p >= m->size()) {
        throw Error(errc::bad_index, "subset element out of range");
      }
    }
    Relation r(m);
    for (index_type s = 0; s < m->size(); ++s) {
      for (index_type t = 0; t < m->size(); ++t) {
        for (auto p : subset) {
          for (auto q : subset) {
            if (m->product(p, s) == m->product(q, t)) {
              r.set(s, t);
            }
          }
        }
      }
    }
    return r;
  }

  //! Result of is_right_congruence: the first violated law (in the order
  //! reflexive, symmetric, transitive, compatible) and the least elements
  //! witnessing it.
  struct CongruenceCheck {
    bool                    ok = true;
    std::string             law;
    std::vector<index_type> witness;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  inline CongruenceCheck is_right_congruence(Relation const& r) {
    auto const&       m = *r.monoid();
    std::size_t const n = m.size();
    for (index_type s = 0; s < n; ++s) {
      if (!r.contains(s, s)) {
        return {false, "reflexive", {s}};
      }
    }
    for (index_type s = 0; s < n; ++s) {
      for (index_type t = 0; t < n; ++t) {
        if (r.contains(s, t) && !r.contains(t, s)) {
          return {false, "symmetric", {s, t}};
        }
      }
    }
    for (index_type s = 0; s < n; ++s) {
      for (index_type t = 0; t < n; ++t) {
        if (!r.contains(s, t)) {
          continue;
        }
        for (index_type v = 0; v < n; ++v) {
          if (r.contains(t, v) && !r.contains(s, v)) {
            return {false, "transitive", {s, t, v}};
          }
        }
      }
    }
    for (index_type s = 0; s < n; ++s) {
      for (index_type t = 0; t < n; ++t) {
        if (!r.contains(s, t)) {
          continue;
        }
        for (index_type u = 0; u < n; ++u) {
          if (!r.contains(m.product(s, u), m.product(t, u))) {
            return {false, "compatible", {s, t, u}};
          }
        }
      }
    }
    return {};
  }

  //! The relation as a RightCongruence; throws not_congruence otherwise.
  inline RightCongruence to_congruence(Relation const& r) {
    auto check = is_right_congruence(r);
    if (!check) {
      throw Error(errc::not_congruence, "relation is not " + check.law, check.witness);
    }
    std::vector<index_type> class_of(r.degree(), UNDEFINED);
    for (index_type s = 0; s < r.degree(); ++s) {
      for (index_type t = 0; t <= s; ++t) {
        if (r.contains(s, t)) {
          class_of[s] = class_of[t] == UNDEFINED ? s : class_of[t];
          break;
        }
      }
    }
    return RightCongruence::from_partition(r.monoid(), class_of);
  }

  //! Least right congruence containing the seed pairs: union-find, and each
  //! time s and t are merged the pairs (su, tu) are queued.
  inline RightCongruence congruence_closure(
      MonoidPtr const&                                   m,
      std::vector<std::pair<index_type, index_type>> const& seed) {
    std::size_t const       n = m->size();
    std::vector<index_type> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](index_type x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    std::vector<std::pair<index_type, index_type>> queue;
    for (auto const& [s, t] : seed) {
      if (s >= n || t >= n) {
        throw Error(errc::bad_index, "seed pair out of range");
      }
      queue.emplace_back(s, t);
    }
    while (!queue.empty()) {
      auto [s, t] = queue.back();
      queue.pop_back();
      index_type a = find(s), b = find(t);
      if (a == b) {
        continue;
      }
      if (b < a) {
        std::swap(a, b);
      }
      parent[b] = a;
      for (index_type u = 0; u < n; ++u) {
        queue.emplace_back(m->product(s, u), m->product(t, u));
      }
    }
    std::vector<index_type> class_of(n);
    for (index_type s = 0; s < n; ++s) {
      class_of[s] = find(s);
    }
    return RightCongruence::from_partition(m, class_of);
  }

  //! {(s, t) | (us, ut) in tau}.
  inline Relation pullback_relation(RightCongruence const& tau, index_type u) {
    auto const& m = tau.monoid();
    if (u >= m->size()) {
      throw Error(errc::bad_index, "pullback element out of range");
    }
    Relation r(m);
    for (index_type s = 0; s < m->size(); ++s) {
      for (index_type t = 0; t < m->size(); ++t) {
        r.set(s, t, tau.contains(m->product(u, s), m->product(u, t)));
      }
    }
    return r;
  }

  inline RightCongruence pullback(RightCongruence const& tau, index_type u) {
    return to_congruence(pullback_relation(tau, u));
  }

  //! Least u with pullback(tau, u) = sigma and (uv, 1) in tau for some v, if
  //! any. Then [s]_sigma -> [us]_tau is an isomorphism S/sigma -> S/tau, and
  //! no such u exists iff the two cyclic acts are not isomorphic.
  inline std::optional<index_type> cyclic_iso_witness(RightCongruence const& sigma,
                                                      RightCongruence const& tau) {
    if (!same_monoid(sigma.monoid(), tau.monoid())) {
      throw Error(errc::monoid_mismatch, "congruences on different monoids");
    }
    auto const& m        = *sigma.monoid();
    Relation    expected = sigma.to_relation();
    for (index_type u = 0; u < m.size(); ++u) {
      bool generates = false;
      for (index_type v = 0; v < m.size() && !generates; ++v) {
        generates = tau.contains(m.product(u, v), Monoid::identity);
      }
      if (generates && pullback_relation(tau, u) == expected) {
        return u;
      }
    }
    return std::nullopt;
  }

  //! S/sigma and the projection S -> S/sigma.
  struct Quotient {
    Act    act;
    ActMap projection;
  };

  //! Class k is labelled "[a,b,...]" by its members.
  inline Quotient quotient_act(RightCongruence const& sigma) {
    auto const& m       = sigma.monoid();
    auto const  classes = sigma.classes();
    std::vector<std::string>             labels;
    std::vector<std::vector<index_type>> action;
    for (auto const& cls : classes) {
      std::string l = "[";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        l += (i ? "," : "") + m->label(cls[i]);
      }
      labels.push_back(l + "]");
      std::vector<index_type> row(m->size());
      for (index_type u = 0; u < m->size(); ++u) {
        row[u] = sigma.class_of(m->product(cls.front(), u));
      }
      action.push_back(std::move(row));
    }
    Act quotient(m, std::move(labels), action);
    return {quotient, ActMap(regular_act(m), quotient, sigma.class_of())};
  }

  //! Kernel of s -> b s for an element b of an act: {(s, t) | bs = bt}.
  inline RightCongruence orbit_kernel(Act const& a, index_type b) {
    auto const&             m = a.monoid();
    std::vector<index_type> class_of(m->size());
    for (index_type s = 0; s < m->size(); ++s) {
      class_of[s] = a.act(b, s);
    }
    return RightCongruence::from_partition(m, class_of);
  }

  //! sigma contained in tau.
  inline bool is_contained(RightCongruence const& sigma, RightCongruence const& tau) {
    auto const& cls = sigma.class_of();
    for (index_type s = 0; s < cls.size(); ++s) {
      for (index_type t = s + 1; t < cls.size(); ++t) {
        if (cls[s] == cls[t] && !tau.contains(s, t)) {
          return false;
        }
      }
    }
    return true;
  }

  inline constexpr std::size_t default_congruence_bound = 8;

  //! All right congruences of m, in increasing canonical order, by filtering
  //! every set partition. Throws monoid_too_large if |m| > bound.
  inline std::vector<RightCongruence> right_congruences(
      MonoidPtr const& m,
      std::size_t      bound = default_congruence_bound) {
    std::size_t const n = m->size();
    if (n > bound) {
      throw Error(errc::monoid_too_large,
                  "congruence enumeration supports order <= " + std::to_string(bound));
    }
    std::vector<RightCongruence> out;
    // restricted growth strings in lexicographic order
    std::vector<index_type> rgs(n, 0), maxima(n, 0);
    auto compatible = [&]() {
      for (index_type s = 0; s < n; ++s) {
        for (index_type t = s + 1; t < n; ++t) {
          if (rgs[s] != rgs[t]) {
            continue;
          }
          for (index_type u = 0; u < n; ++u) {
            if (rgs[m->product(s, u)] != rgs[m->product(t, u)]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    while (true) {
      if (compatible()) {
        out.push_back(RightCongruence::from_partition(m, rgs));
      }
      // next restricted growth string; rgs[0] is always 0
      std::size_t k = n;
      while (k > 1) {
        --k;
        if (rgs[k] <= maxima[k - 1]) {
          ++rgs[k];
          std::size_t const top = std::max(maxima[k - 1], rgs[k]);
          maxima[k]             = top;
          for (std::size_t j = k + 1; j < n; ++j) {
            rgs[j]    = 0;
            maxima[j] = top;
          }
          break;
        }
        if (k == 1) {
          return out;
        }
      }
      if (n <= 1) {
        return out;
      }
    }
  }

}  // namespace monact

#endif  // MONACT_CONGRUENCE_HPP_
