// monact - finite monoids, right acts, and their covers
//
// This file contains monoid presentations and a coset-enumeration style
// procedure that builds the (finite) monoid a presentation defines, plus the
// truncated model of the Qiao-Wei monoid
//
//   < x_0, x_1, ... | x_0 x_k = x_k x_0 = x_0, x_k^k = x_k^(k+1),
//                     x_i x_j = x_j^2 (i, j >= 1) >
//
// restricted to generators x_0, ..., x_n and with x_0^cap = x_0^(cap+1)
// added so that the result is finite.

#ifndef MONACT_PRESENTATION_HPP_
#define MONACT_PRESENTATION_HPP_

#include <cstddef>  // for size_t
#include <deque>    // for deque
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "error.hpp"
#include "monoid.hpp"

namespace monact {

  using word_type = std::vector<std::size_t>;

  //! Generators, defining relations, and a bound on the number of states the
  //! enumeration may hold at once.
  struct Presentation {
    std::vector<std::string>                    generators;
    std::vector<std::pair<word_type, word_type>> relations;
    std::size_t                                 cap = 100'000;

    void validate() const {
      if (cap < 1) {
        throw Error(errc::bad_parameter, "presentation cap must be >= 1");
      }
      for (auto const& [u, v] : relations) {
        for (auto const* w : {&u, &v}) {
          for (auto g : *w) {
            if (g >= generators.size()) {
              throw Error(errc::bad_index,
                          "relation uses undeclared generator "
                              + std::to_string(g));
            }
          }
        }
      }
    }
  };

  //! The monoid defined by a presentation, with the element represented by
  //! each generator. Elements are ordered by their short-lex least word, and
  //! labelled by that word with runs collapsed ("x0^2x1^1"); the empty word
  //! is "1".
  struct EnumeratedMonoid {
    Monoid                  monoid;
    std::vector<index_type> generators;
    std::vector<word_type>  words;
  };

  namespace detail {

    // Word graph for the right regular representation, with union-find for
    // coincidences. Edges are read through find() so that edges into dead
    // states resolve lazily.
    class CosetTable {
     public:
      CosetTable(std::size_t num_gens, std::size_t cap)
          : _num_gens(num_gens), _cap(cap) {
        new_state();
      }

      std::size_t num_states() const noexcept {
        return _parent.size();
      }

      std::size_t find(std::size_t c) {
        while (_parent[c] != c) {
          _parent[c] = _parent[_parent[c]];
          c          = _parent[c];
        }
        return c;
      }

      bool is_active(std::size_t c) {
        return find(c) == c;
      }

      std::size_t edge(std::size_t c, std::size_t g) {
        std::size_t t = _edges[c * _num_gens + g];
        return t == UNDEFINED ? UNDEFINED : find(t);
      }

      std::size_t trace_define(std::size_t c, word_type const& w) {
        for (auto g : w) {
          std::size_t t = edge(c, g);
          if (t == UNDEFINED) {
            t                          = new_state();
            _edges[c * _num_gens + g]  = t;
          }
          c = t;
        }
        return c;
      }

      void define_missing(std::size_t c) {
        for (std::size_t g = 0; g < _num_gens; ++g) {
          if (edge(c, g) == UNDEFINED) {
            std::size_t t             = new_state();
            _edges[c * _num_gens + g] = t;
          }
        }
      }

      void coincidence(std::size_t a, std::size_t b) {
        std::deque<std::pair<std::size_t, std::size_t>> queue{{a, b}};
        while (!queue.empty()) {
          auto [x, y] = queue.front();
          queue.pop_front();
          x = find(x);
          y = find(y);
          if (x == y) {
            continue;
          }
          if (y < x) {
            std::swap(x, y);
          }
          _parent[y] = x;
          --_active;
          for (std::size_t g = 0; g < _num_gens; ++g) {
            std::size_t const ty = _edges[y * _num_gens + g];
            if (ty == UNDEFINED) {
              continue;
            }
            std::size_t const tx = _edges[x * _num_gens + g];
            if (tx == UNDEFINED) {
              _edges[x * _num_gens + g] = ty;
            } else {
              queue.emplace_back(tx, ty);
            }
          }
        }
      }

     private:
      std::size_t new_state() {
        if (_active >= _cap) {
          throw Error(errc::enumeration_limit,
                      "more than " + std::to_string(_cap)
                          + " live states during enumeration");
        }
        std::size_t const c = _parent.size();
        _parent.push_back(c);
        _edges.resize(_edges.size() + _num_gens, UNDEFINED);
        ++_active;
        return c;
      }

      std::size_t              _num_gens;
      std::size_t              _cap;
      std::size_t              _active = 0;
      std::vector<std::size_t> _parent;
      std::vector<std::size_t> _edges;
    };

    inline std::string collapse_word(std::vector<std::string> const& gens,
                                     word_type const&                w) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
          ++j;
        }
        out += gens[w[i]] + "^" + std::to_string(j - i);
        i = j;
      }
      return out;
    }

    // New monoid whose element k is old element order[k], with new labels.
    inline Monoid reorder(Monoid const&                  m,
                          std::vector<index_type> const& order,
                          std::vector<std::string>       labels) {
      std::size_t const       n = m.size();
      std::vector<index_type> pos(n, UNDEFINED);
      for (index_type k = 0; k < n; ++k) {
        pos[order[k]] = k;
      }
      std::vector<std::vector<index_type>> table(n, std::vector<index_type>(n));
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = 0; b < n; ++b) {
          table[a][b] = pos[m.product(order[a], order[b])];
        }
      }
      return Monoid::from_table(std::move(labels), table);
    }

  }  // namespace detail

  //! Enumerate the monoid defined by p. Throws enumeration_limit if more than
  //! p.cap live states are needed at any point (in particular when the
  //! monoid is infinite).
  inline EnumeratedMonoid enumerate_presentation(Presentation const& p) {
    p.validate();
    std::size_t const  ngens = p.generators.size();
    detail::CosetTable tc(ngens, p.cap);

    for (std::size_t c = 0; c < tc.num_states(); ++c) {
      if (!tc.is_active(c)) {
        continue;
      }
      for (auto const& [u, v] : p.relations) {
        std::size_t const x = tc.trace_define(c, u);
        std::size_t const y = tc.trace_define(tc.find(c), v);
        if (tc.find(x) != tc.find(y)) {
          tc.coincidence(x, y);
        }
        if (!tc.is_active(c)) {
          break;
        }
      }
      if (tc.is_active(c)) {
        tc.define_missing(c);
      }
    }

    // breadth-first from the identity state gives short-lex least words
    std::size_t const        root = tc.find(0);
    std::vector<std::size_t> order{root};
    std::vector<std::size_t> pos(tc.num_states(), UNDEFINED);
    std::vector<word_type>   words{{}};
    pos[root] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t g = 0; g < ngens; ++g) {
        std::size_t const t = tc.edge(order[k], g);
        if (pos[t] == UNDEFINED) {
          pos[t] = order.size();
          order.push_back(t);
          word_type w = words[k];
          w.push_back(g);
          words.push_back(std::move(w));
        }
      }
    }

    std::size_t const                    n = order.size();
    std::vector<std::vector<index_type>> table(n, std::vector<index_type>(n));
    std::vector<std::string>             labels;
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(detail::collapse_word(p.generators, words[a]));
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t c = order[a];
        for (auto g : words[b]) {
          c = tc.edge(c, g);
        }
        table[a][b] = pos[c];
      }
    }
    std::vector<index_type> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      gens.push_back(pos[tc.edge(root, g)]);
    }
    return {Monoid::from_table(std::move(labels), table),
            std::move(gens),
            std::move(words)};
  }

  //! Presentation of R^1, R the right zero semigroup on n letters.
  inline Presentation right_zero_presentation(std::size_t n) {
    if (n == 0) {
      throw Error(errc::empty_semigroup, "right zero semigroup needs n >= 1");
    }
    Presentation p;
    for (std::size_t k = 1; k <= n; ++k) {
      p.generators.push_back("z" + std::to_string(k));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p.relations.push_back({{i, j}, {j}});
      }
    }
    return p;
  }

  //! Presentation of the Qiao-Wei monoid on x_0, ..., x_n with the extra
  //! relation x_0^cap = x_0^(cap+1).
  inline Presentation qiao_wei_presentation(std::size_t n, std::size_t cap) {
    if (n < 1 || cap < 1) {
      throw Error(errc::bad_parameter, "qiao_wei needs n >= 1 and cap >= 1");
    }
    Presentation p;
    for (std::size_t k = 0; k <= n; ++k) {
      p.generators.push_back("x" + std::to_string(k));
    }
    for (std::size_t k = 1; k <= n; ++k) {
      p.relations.push_back({{0, k}, {0}});
      p.relations.push_back({{k, 0}, {0}});
      p.relations.push_back({word_type(k, k), word_type(k + 1, k)});
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        p.relations.push_back({{i, j}, {j, j}});
      }
    }
    p.relations.push_back({word_type(cap, 0), word_type(cap + 1, 0)});
    return p;
  }

  //! Finite model of the Qiao-Wei monoid. Elements are listed in the order
  //! 1, x0^1, ..., x0^cap, x1^1, x2^1, x2^2, ..., xn^n (powers that the
  //! relations identify with an earlier one are skipped), and labelled that
  //! way. Note that the relations force x_k^2 = x_k^3 for all k >= 1, so for
  //! n >= 3 there are fewer than 1 + cap + n(n+1)/2 elements.
  inline Monoid qiao_wei_truncated(std::size_t n, std::size_t cap) {
    auto const e = enumerate_presentation(qiao_wei_presentation(n, cap));
    Monoid const& m = e.monoid;

    std::vector<index_type>  order;
    std::vector<std::string> labels;
    std::vector<char>        seen(m.size(), 0);
    auto visit = [&](std::size_t gen, std::size_t power) {
      index_type x = Monoid::identity;
      for (std::size_t k = 0; k < power; ++k) {
        x = m.product(x, e.generators[gen]);
      }
      if (!seen[x]) {
        seen[x] = 1;
        order.push_back(x);
        labels.push_back(power == 0 ? "1"
                                    : "x" + std::to_string(gen) + "^"
                                          + std::to_string(power));
      }
    };
    visit(0, 0);
    for (std::size_t m0 = 1; m0 <= cap; ++m0) {
      visit(0, m0);
    }
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t p = 1; p <= k; ++p) {
        visit(k, p);
      }
    }
    if (order.size() != m.size()) {
      throw Error(errc::bad_shape, "canonical forms do not cover the monoid");
    }
    return detail::reorder(m, order, std::move(labels));
  }

  inline Monoid qiao_wei_truncated(std::size_t n) {
    return qiao_wei_truncated(n, n + 1);
  }

}  // namespace monact

#endif  // MONACT_PRESENTATION_HPP_
