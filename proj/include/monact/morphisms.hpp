// monact - finite monoids, right acts, and their covers
//
// This file contains backtracking searches over S-maps: all S-maps between
// two acts, an isomorphism search, and the enumeration of every act of a
// given size over a monoid.

#ifndef MONACT_MORPHISMS_HPP_
#define MONACT_MORPHISMS_HPP_

#include <algorithm>  // for count, sort
#include <cstddef>   // for size_t

#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "act.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace monact {

  inline constexpr std::size_t default_search_budget = 1'000'000;

  namespace detail {

    // Backtracking over images of a generating set of `source`. Each choice
    // of image b for generator g forces f(gs) = bs for all s.
    class MapSearch {
     public:
      MapSearch(Act const& source, Act const& target, std::size_t budget)
          : _source(source),
            _target(target),
            _budget(budget),
            _gens(minimal_generating_set(source)),
            _image(source.size(), UNDEFINED) {
        if (!same_monoid(source.monoid(), target.monoid())) {
          throw Error(errc::monoid_mismatch, "acts over different monoids");
        }
      }

      // visit(image) returns false to stop the search
      template <typename Accept, typename Visit>
      void run(Accept&& accept, Visit&& visit) {
        _stop = false;
        recurse(0, accept, visit);
      }

      std::vector<index_type> const& generators() const noexcept {
        return _gens;
      }

     private:
      template <typename Accept, typename Visit>
      void recurse(std::size_t k, Accept& accept, Visit& visit) {
        if (k == _gens.size()) {
          if (!visit(_image)) {
            _stop = true;
          }
          return;
        }
        index_type const  g = _gens[k];
        std::size_t const m = _source.monoid()->size();
        for (index_type b = 0; b < _target.size() && !_stop; ++b) {
          if (++_spent > _budget) {
            throw Error(errc::budget_exceeded,
                        "more than " + std::to_string(_budget)
                            + " candidate extensions");
          }
          if (!accept(g, b)) {
            continue;
          }
          std::vector<index_type> trail;
          bool                    ok = true;
          for (index_type s = 0; s < m && ok; ++s) {
            index_type const x = _source.act(g, s);
            index_type const y = _target.act(b, s);
            if (_image[x] == UNDEFINED) {
              _image[x] = y;
              trail.push_back(x);
            } else if (_image[x] != y) {
              ok = false;
            }
          }
          if (ok) {
            recurse(k + 1, accept, visit);
          }
          for (auto x : trail) {
            _image[x] = UNDEFINED;
          }
        }
      }

      Act const&              _source;
      Act const&              _target;
      std::size_t             _budget;
      std::size_t             _spent = 0;
      bool                    _stop  = false;
      std::vector<index_type> _gens;
      std::vector<index_type> _image;
    };

    // (|xS|, |{s : xs = x}|) is preserved by isomorphisms.
    inline std::vector<std::pair<std::size_t, std::size_t>> signatures(Act const& a) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (index_type x = 0; x < a.size(); ++x) {
        std::size_t fixed = 0;
        for (index_type s = 0; s < a.monoid()->size(); ++s) {
          fixed += a.act(x, s) == x;
        }
        out.emplace_back(subact_closure(a, {x}).size(), fixed);
      }
      return out;
    }

  }  // namespace detail

  //! Every S-map source -> target, ordered lexicographically by the images
  //! of the generators (minimal_generating_set of source, in index order).
  inline std::vector<ActMap> homs(Act const&  source,
                                  Act const&  target,
                                  std::size_t budget = default_search_budget) {
    std::vector<ActMap> out;
    detail::MapSearch   search(source, target, budget);
    search.run([](index_type, index_type) { return true; },
               [&](std::vector<index_type> const& image) {
                 out.emplace_back(source, target, image);
                 return true;
               });
    return out;
  }

  //! A bijective S-map a -> b if there is one.
  inline std::optional<ActMap> are_isomorphic(Act const&  a,
                                              Act const&  b,
                                              std::size_t budget = default_search_budget) {
    if (!same_monoid(a.monoid(), b.monoid())) {
      throw Error(errc::monoid_mismatch, "acts over different monoids");
    }
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    auto const sig_a = detail::signatures(a);
    auto const sig_b = detail::signatures(b);
    {
      auto sa = sig_a, sb = sig_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return std::nullopt;
      }
    }
    std::optional<ActMap> found;
    detail::MapSearch     search(a, b, budget);
    search.run(
        [&](index_type g, index_type y) { return sig_a[g] == sig_b[y]; },
        [&](std::vector<index_type> const& image) {
          std::vector<char> hit(b.size(), 0);
          for (auto y : image) {
            if (hit[y]) {
              return true;
            }
            hit[y] = 1;
          }
          found.emplace(a, b, image);
          return false;
        });
    return found;
  }

  //! Every act on {0, ..., size-1} over m (labelled "0", "1", ...), with
  //! identical action tables listed once. The actions of a generating set of
  //! m are enumerated and extended to all of m along the Cayley graph; the
  //! act axioms are then checked exhaustively.
  inline std::vector<Act> enumerate_acts(MonoidPtr const& m, std::size_t size) {
    if (size == 0) {
      throw Error(errc::bad_parameter, "acts are non-empty");
    }
    std::size_t const n = m->size();
    // generators of m as a monoid: scan and drop elements in the submonoid
    // generated by the others
    auto generated = [&](std::vector<index_type> const& gens) {
      std::vector<char>       in(n, 0);
      std::vector<index_type> stack{Monoid::identity};
      in[Monoid::identity] = 1;
      while (!stack.empty()) {
        index_type x = stack.back();
        stack.pop_back();
        for (auto g : gens) {
          index_type y = m->product(x, g);
          if (!in[y]) {
            in[y] = 1;
            stack.push_back(y);
          }
        }
      }
      return in;
    };
    std::vector<index_type> gens;
    for (index_type s = 1; s < n; ++s) {
      gens.push_back(s);
    }
    for (index_type s = 1; s < n; ++s) {
      std::vector<index_type> rest;
      for (auto g : gens) {
        if (g != s) {
          rest.push_back(g);
        }
      }
      auto in = generated(rest);
      if (in[s] && std::count(in.begin(), in.end(), 1) == static_cast<long>(n)) {
        gens = rest;
      }
    }
    // spanning tree: each non-identity element reached as parent * generator
    std::vector<std::pair<index_type, std::size_t>> via(n, {UNDEFINED, 0});
    std::vector<index_type>                         bfs{Monoid::identity};
    std::vector<char>                               reached(n, 0);
    reached[Monoid::identity] = 1;
    for (std::size_t k = 0; k < bfs.size(); ++k) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        index_type y = m->product(bfs[k], gens[j]);
        if (!reached[y]) {
          reached[y] = 1;
          via[y]     = {bfs[k], j};
          bfs.push_back(y);
        }
      }
    }

    std::vector<std::string> labels;
    for (std::size_t x = 0; x < size; ++x) {
      labels.push_back(std::to_string(x));
    }
    std::vector<Act>                     out;
    std::vector<std::vector<index_type>> gen_maps(gens.size(),
                                                  std::vector<index_type>(size, 0));
    std::vector<std::vector<index_type>> action(size, std::vector<index_type>(n));
    while (true) {
      for (std::size_t x = 0; x < size; ++x) {
        for (auto s : bfs) {
          if (s == Monoid::identity) {
            action[x][s] = x;
          } else {
            auto [p, j]  = via[s];
            action[x][s] = gen_maps[j][action[x][p]];
          }
        }
      }
      bool ok = true;
      for (std::size_t x = 0; x < size && ok; ++x) {
        for (index_type s = 0; s < n && ok; ++s) {
          for (index_type t = 0; t < n && ok; ++t) {
            ok = action[action[x][s]][t] == action[x][m->product(s, t)];
          }
        }
      }
      if (ok) {
        out.emplace_back(m, labels, action);
      }
      // odometer over all generator maps
      bool carry = true;
      for (std::size_t j = gens.size(); j-- > 0 && carry;) {
        for (std::size_t x = size; x-- > 0 && carry;) {
          if (++gen_maps[j][x] < size) {
            carry = false;
          } else {
            gen_maps[j][x] = 0;
          }
        }
      }
      if (carry) {
        return out;
      }
    }
  }

}  // namespace monact

#endif  // MONACT_MORPHISMS_HPP_
