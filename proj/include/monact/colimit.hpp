// monact - finite monoids, right acts, and their covers
//
// This file contains directed systems of finite acts over finite directed
// posets, their colimits (the disjoint union modulo eventual equality), and
// a brute-force check of the colimit's universal property.

#ifndef MONACT_COLIMIT_HPP_
#define MONACT_COLIMIT_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <numeric>   // for iota
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair, move
#include <vector>    // for vector

#include "act.hpp"
#include "error.hpp"
#include "morphisms.hpp"

namespace monact {

  //! Acts indexed by a finite poset with maps phi(i, j) for i <= j.
  //!
  //! Arrows are supplied for some pairs i < j; the order is the reflexive
  //! transitive closure of those pairs, and an arrow for a comparable pair
  //! without one is the composite along the first path found. Call
  //! validate_system before relying on the result.
  class DirectedSystem {
   public:
    std::size_t add_node(std::string name, Act act) {
      if (!_acts.empty() && !same_monoid(_acts.front().monoid(), act.monoid())) {
        throw Error(errc::monoid_mismatch, "all objects must share a monoid");
      }
      _names.push_back(std::move(name));
      _acts.push_back(std::move(act));
      return _acts.size() - 1;
    }

    void add_arrow(std::size_t i, std::size_t j, std::vector<index_type> image) {
      if (i >= size() || j >= size()) {
        throw Error(errc::bad_index, "arrow between unknown nodes");
      }
      _arrows.insert_or_assign({i, j}, ActMap(_acts[i], _acts[j], std::move(image)));
    }

    //! Declare i <= j without supplying an arrow (it must then be derivable).
    void add_order(std::size_t i, std::size_t j) {
      if (i >= size() || j >= size()) {
        throw Error(errc::bad_index, "order between unknown nodes");
      }
      _extra_order.emplace_back(i, j);
    }

    std::size_t size() const noexcept {
      return _acts.size();
    }

    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    Act const& object(std::size_t i) const {
      return _acts.at(i);
    }

    std::map<std::pair<std::size_t, std::size_t>, ActMap> const& given_arrows() const {
      return _arrows;
    }

    std::vector<std::pair<std::size_t, std::size_t>> const& extra_order() const {
      return _extra_order;
    }

    //! leq()[i][j] iff i <= j.
    std::vector<std::vector<char>> leq() const {
      std::size_t const              n = size();
      std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        r[i][i] = 1;
      }
      for (auto const& [key, f] : _arrows) {
        r[key.first][key.second] = 1;
      }
      for (auto const& [i, j] : _extra_order) {
        r[i][j] = 1;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (r[i][k]) {
            for (std::size_t j = 0; j < n; ++j) {
              r[i][j] |= r[k][j];
            }
          }
        }
      }
      return r;
    }

    //! phi(i, j); identity for i = j. Throws missing_arrow if i <= j but no
    //! path of given arrows joins them.
    ActMap arrow(std::size_t i, std::size_t j) const {
      if (i == j) {
        auto it = _arrows.find({i, i});
        return it == _arrows.end() ? ActMap::identity(_acts.at(i)) : it->second;
      }
      if (auto it = _arrows.find({i, j}); it != _arrows.end()) {
        return it->second;
      }
      // breadth-first over given arrows
      std::vector<std::size_t> prev(size(), UNDEFINED);
      std::vector<std::size_t> queue{i};
      prev[i] = i;
      for (std::size_t k = 0; k < queue.size() && prev[j] == UNDEFINED; ++k) {
        for (auto const& [key, f] : _arrows) {
          if (key.first == queue[k] && key.first != key.second
              && prev[key.second] == UNDEFINED) {
            prev[key.second] = queue[k];
            queue.push_back(key.second);
          }
        }
      }
      if (prev[j] == UNDEFINED) {
        throw Error(errc::missing_arrow,
                    "no arrow " + _names.at(i) + " -> " + _names.at(j), {i, j});
      }
      std::vector<std::size_t> path{j};
      while (path.back() != i) {
        path.push_back(prev[path.back()]);
      }
      ActMap out = ActMap::identity(_acts[i]);
      for (std::size_t k = path.size() - 1; k > 0; --k) {
        out = compose(_arrows.at({path[k], path[k - 1]}), out);
      }
      return out;
    }

   private:
    std::vector<std::string>                               _names;
    std::vector<Act>                                       _acts;
    std::map<std::pair<std::size_t, std::size_t>, ActMap>  _arrows;
    std::vector<std::pair<std::size_t, std::size_t>>       _extra_order;
  };

  //! Throws not_partial_order, not_directed (witness: two nodes with no
  //! upper bound), missing_arrow, or incoherent_arrows (witness (i, j, k)
  //! with phi(j,k) phi(i,j) != phi(i,k), or (i, i, i) for a non-identity
  //! phi(i, i)).
  inline void validate_system(DirectedSystem const& ds) {
    std::size_t const n = ds.size();
    if (n == 0) {
      throw Error(errc::not_directed, "empty index set");
    }
    auto const le = ds.leq();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (le[i][j] && le[j][i]) {
          throw Error(errc::not_partial_order, "order is not antisymmetric", {i, j});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        bool bounded = false;
        for (std::size_t k = 0; k < n && !bounded; ++k) {
          bounded = le[i][k] && le[j][k];
        }
        if (!bounded) {
          throw Error(errc::not_directed,
                      ds.name(i) + " and " + ds.name(j) + " have no upper bound",
                      {i, j});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(ds.arrow(i, i) == ActMap::identity(ds.object(i)))) {
        throw Error(errc::incoherent_arrows, "phi(i,i) is not the identity", {i, i, i});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!le[i][j]) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (le[j][k] && !(compose(ds.arrow(j, k), ds.arrow(i, j)) == ds.arrow(i, k))) {
            throw Error(errc::incoherent_arrows,
                        "phi(j,k) phi(i,j) != phi(i,k)",
                        {i, j, k});
          }
        }
      }
    }
  }

  //! The colimit act and the maps alpha_i from each object into it.
  struct ColimitResult {
    Act                 act;
    std::vector<ActMap> injections;
  };

  //! Union-find over the tagged disjoint union, merging (i, x) with
  //! (j, phi(i,j)(x)) for every i <= j. Classes are numbered in order of
  //! their least tagged member (node, then element).
  inline ColimitResult compute_colimit(DirectedSystem const& ds) {
    std::size_t const        n = ds.size();
    auto const               le = ds.leq();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      offset[i + 1] = offset[i] + ds.object(i).size();
    }
    std::vector<std::size_t> parent(offset[n]);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !le[i][j]) {
          continue;
        }
        auto const phi = ds.arrow(i, j);
        for (index_type x = 0; x < ds.object(i).size(); ++x) {
          std::size_t a = find(offset[i] + x), b = find(offset[j] + phi(x));
          if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
    }
    std::vector<std::size_t> cls(offset[n], UNDEFINED);
    std::vector<std::size_t> reps;
    for (std::size_t t = 0; t < offset[n]; ++t) {
      std::size_t const r = find(t);
      if (cls[r] == UNDEFINED) {
        cls[r] = reps.size();
        reps.push_back(t);
      }
      cls[t] = cls[r];
    }
    auto const& m = ds.object(0).monoid();
    auto node_of = [&](std::size_t t) {
      std::size_t i = 0;
      while (offset[i + 1] <= t) {
        ++i;
      }
      return i;
    };
    std::vector<std::string>             labels;
    std::vector<std::vector<index_type>> action;
    for (auto t : reps) {
      std::size_t const i = node_of(t);
      index_type const  x = t - offset[i];
      labels.push_back(ds.object(i).label(x) + "@" + ds.name(i));
      std::vector<index_type> row(m->size());
      for (index_type s = 0; s < m->size(); ++s) {
        row[s] = cls[offset[i] + ds.object(i).act(x, s)];
      }
      action.push_back(std::move(row));
    }
    Act                 colim(m, std::move(labels), action);
    std::vector<ActMap> injections;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<index_type> img(ds.object(i).size());
      for (index_type x = 0; x < img.size(); ++x) {
        img[x] = cls[offset[i] + x];
      }
      injections.emplace_back(ds.object(i), colim, std::move(img));
    }
    return {colim, std::move(injections)};
  }

  //! Check that every cocone from ds to probe factors through result by
  //! exactly one S-map.
  inline bool verify_universality(DirectedSystem const& ds,
                                  ColimitResult const&  result,
                                  Act const&            probe,
                                  std::size_t           budget = default_search_budget) {
    std::size_t const                n  = ds.size();
    auto const                       le = ds.leq();
    std::vector<std::vector<ActMap>> options;
    for (std::size_t i = 0; i < n; ++i) {
      options.push_back(homs(ds.object(i), probe, budget));
    }
    auto const mediators = homs(result.act, probe, budget);

    std::vector<std::size_t> choice(n, 0);
    bool                     ok = true;
    std::size_t              spent = 0;
    // depth-first over cocones, checking commutation against earlier nodes
    auto recurse = [&](auto& self, std::size_t i) -> void {
      if (!ok) {
        return;
      }
      if (i == n) {
        std::size_t count = 0;
        for (auto const& m : mediators) {
          bool commutes = true;
          for (std::size_t k = 0; k < n && commutes; ++k) {
            commutes = compose(m, result.injections[k]) == options[k][choice[k]];
          }
          count += commutes;
        }
        ok = count == 1;
        return;
      }
      for (std::size_t c = 0; c < options[i].size() && ok; ++c) {
        if (++spent > budget) {
          throw Error(errc::budget_exceeded, "too many cocone candidates");
        }
        choice[i]     = c;
        bool commutes = true;
        for (std::size_t k = 0; k < i && commutes; ++k) {
          if (le[k][i]) {
            commutes = compose(options[i][c], ds.arrow(k, i)) == options[k][choice[k]];
          } else if (le[i][k]) {
            commutes = compose(options[k][choice[k]], ds.arrow(i, k)) == options[i][c];
          }
        }
        if (commutes) {
          self(self, i + 1);
        }
      }
    };
    recurse(recurse, 0);
    return ok;
  }

}  // namespace monact

#endif  // MONACT_COLIMIT_HPP_
