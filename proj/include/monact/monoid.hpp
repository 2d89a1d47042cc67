// monact - finite monoids, right acts, and their covers
//
// This file contains the finite monoid type (a validated multiplication
// table whose identity is element 0), some concrete families, the
// cancellativity and group predicates, and exhaustive enumeration of all
// monoids of small order.

#ifndef MONACT_MONOID_HPP_
#define MONACT_MONOID_HPP_

#include <algorithm>    // for find
#include <array>        // for array
#include <cstddef>      // for size_t
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <set>          // for set
#include <string>       // for string, to_string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "error.hpp"

namespace monact {

  using index_type = std::size_t;

  //! Sentinel for "no value yet" in index tables.
  inline constexpr index_type UNDEFINED = static_cast<index_type>(-1);

  //! A finite monoid given by its multiplication table.
  //!
  //! Element 0 is always the identity. Instances can only be obtained
  //! through Monoid::from_table (or the builders below), which check the
  //! identity and associativity laws exhaustively, so every Monoid value is
  //! valid.
  class Monoid {
   public:
    static constexpr index_type identity = 0;

    //! Validate and build. Throws Error with code bad_shape, bad_index,
    //! duplicate_label, no_identity, or not_associative (witness (a, b, c),
    //! the least triple with (ab)c != a(bc)).
    static Monoid from_table(std::vector<std::string>                  labels,
                             std::vector<std::vector<index_type>> const& table) {
      std::size_t const n = labels.size();
      if (n == 0 || table.size() != n) {
        throw Error(errc::bad_shape, "table must be square and non-empty");
      }
      std::vector<index_type> flat;
      flat.reserve(n * n);
      for (auto const& row : table) {
        if (row.size() != n) {
          throw Error(errc::bad_shape, "table must be square");
        }
        for (auto x : row) {
          if (x >= n) {
            throw Error(errc::bad_index,
                        "table entry " + std::to_string(x) + " out of range");
          }
          flat.push_back(x);
        }
      }
      std::set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != n) {
        throw Error(errc::duplicate_label, "element labels must be distinct");
      }
      Monoid m(std::move(labels), std::move(flat));
      for (index_type a = 0; a < n; ++a) {
        if (m.product(identity, a) != a || m.product(a, identity) != a) {
          throw Error(errc::no_identity,
                      "element 0 is not a two-sided identity",
                      {a});
        }
      }
      for (index_type a = 0; a < n; ++a) {
        for (index_type b = 0; b < n; ++b) {
          index_type const ab = m.product(a, b);
          for (index_type c = 0; c < n; ++c) {
            if (m.product(ab, c) != m.product(a, m.product(b, c))) {
              throw Error(errc::not_associative,
                          "(" + m.label(a) + " " + m.label(b) + ") "
                              + m.label(c) + " differs",
                          {a, b, c});
            }
          }
        }
      }
      return m;
    }

    std::size_t size() const noexcept {
      return _labels.size();
    }

    index_type product(index_type a, index_type b) const noexcept {
      return _table[a * _labels.size() + b];
    }

    std::string const& label(index_type a) const {
      return _labels.at(a);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::optional<index_type> find(std::string_view label) const {
      auto it = std::find(_labels.begin(), _labels.end(), label);
      if (it == _labels.end()) {
        return std::nullopt;
      }
      return static_cast<index_type>(it - _labels.begin());
    }

    //! Like find but throws bad_index for unknown labels.
    index_type at(std::string_view label) const {
      auto x = find(label);
      if (!x) {
        throw Error(errc::bad_index, "no element " + std::string(label));
      }
      return *x;
    }

    std::vector<std::vector<index_type>> table() const {
      std::size_t const                    n = size();
      std::vector<std::vector<index_type>> rows(n);
      for (index_type a = 0; a < n; ++a) {
        rows[a].assign(_table.begin() + a * n, _table.begin() + (a + 1) * n);
      }
      return rows;
    }

    //! Product of a sequence of elements, left to right.
    index_type evaluate(std::vector<index_type> const& word) const {
      index_type x = identity;
      for (auto y : word) {
        x = product(x, y);
      }
      return x;
    }

    friend bool operator==(Monoid const&, Monoid const&) = default;

   private:
    Monoid(std::vector<std::string> labels, std::vector<index_type> table)
        : _labels(std::move(labels)), _table(std::move(table)) {}

    std::vector<std::string> _labels;
    std::vector<index_type>  _table;
  };

  using MonoidPtr = std::shared_ptr<Monoid const>;

  inline MonoidPtr share(Monoid m) {
    return std::make_shared<Monoid const>(std::move(m));
  }

  inline Monoid build_from_table(std::vector<std::string>                  labels,
                                 std::vector<std::vector<index_type>> const& table) {
    return Monoid::from_table(std::move(labels), table);
  }

  inline Monoid trivial_monoid() {
    return Monoid::from_table({"1"}, {{0}});
  }

  //! The cyclic group Z_n with elements "1", "g^1", ..., "g^(n-1)".
  inline Monoid cyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error(errc::bad_parameter, "cyclic group of order 0");
    }
    std::vector<std::string> labels{"1"};
    for (std::size_t k = 1; k < n; ++k) {
      labels.push_back("g^" + std::to_string(k));
    }
    std::vector<std::vector<index_type>> table(n, std::vector<index_type>(n));
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        table[a][b] = (a + b) % n;
      }
    }
    return Monoid::from_table(std::move(labels), table);
  }

  //! R^1 for the right zero semigroup R = {z1, ..., zn}: x z = z for every
  //! z in R.
  inline Monoid right_zero_adjoin_one(std::size_t n) {
    if (n == 0) {
      throw Error(errc::empty_semigroup, "right zero semigroup needs n >= 1");
    }
    std::vector<std::string> labels{"1"};
    for (std::size_t k = 1; k <= n; ++k) {
      labels.push_back("z" + std::to_string(k));
    }
    std::vector<std::vector<index_type>> table(n + 1,
                                               std::vector<index_type>(n + 1));
    for (index_type a = 0; a <= n; ++a) {
      for (index_type b = 0; b <= n; ++b) {
        table[a][b] = b == 0 ? a : b;
      }
    }
    return Monoid::from_table(std::move(labels), table);
  }

  enum class side { left, right };

  //! Outcome of a cancellativity test. For side::right the witness (x, y, s)
  //! has x != y and xs = ys; for side::left, (w, s, t) has s != t and
  //! ws = wt. The witness is the lexicographically least such triple.
  struct CancellativityResult {
    bool                                     cancellative;
    std::optional<std::array<index_type, 3>> witness;

    explicit operator bool() const noexcept {
      return cancellative;
    }
  };

  inline CancellativityResult is_cancellative(Monoid const& m, side sd) {
    std::size_t const n = m.size();
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        for (index_type c = 0; c < n; ++c) {
          if (sd == side::right && a < b
              && m.product(a, c) == m.product(b, c)) {
            return {false, std::array<index_type, 3>{a, b, c}};
          }
          if (sd == side::left && b < c
              && m.product(a, b) == m.product(a, c)) {
            return {false, std::array<index_type, 3>{a, b, c}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  //! True iff every row and every column of the table is a permutation.
  inline bool is_group(Monoid const& m) {
    std::size_t const n = m.size();
    std::vector<char> seen_row(n), seen_col(n);
    for (index_type a = 0; a < n; ++a) {
      std::fill(seen_row.begin(), seen_row.end(), 0);
      std::fill(seen_col.begin(), seen_col.end(), 0);
      for (index_type b = 0; b < n; ++b) {
        index_type const r = m.product(a, b);
        index_type const c = m.product(b, a);
        if (seen_row[r] || seen_col[c]) {
          return false;
        }
        seen_row[r] = seen_col[c] = 1;
      }
    }
    return true;
  }

  inline constexpr std::size_t max_enumeration_order = 4;

  //! Call f(Monoid const&) for every associative table on n elements whose
  //! element 0 is a two-sided identity, in lexicographic order of the
  //! table read row by row. Isomorphic copies are not removed.
  template <typename F>
  void for_each_monoid(std::size_t n, F&& f) {
    if (n == 0) {
      throw Error(errc::bad_parameter, "order must be at least 1");
    }
    if (n > max_enumeration_order) {
      throw Error(errc::order_too_large,
                  "enumeration supports order <= "
                      + std::to_string(max_enumeration_order));
    }
    std::vector<std::string> labels{"1"};
    for (std::size_t k = 1; k < n; ++k) {
      labels.push_back("e" + std::to_string(k));
    }
    std::vector<std::vector<index_type>> table(n, std::vector<index_type>(n));
    for (index_type a = 0; a < n; ++a) {
      table[0][a] = table[a][0] = a;
    }
    std::size_t const free = (n - 1) * (n - 1);
    std::vector<index_type> digits(free, 0);
    auto assoc = [&]() {
      for (index_type a = 1; a < n; ++a) {
        for (index_type b = 1; b < n; ++b) {
          for (index_type c = 1; c < n; ++c) {
            if (table[table[a][b]][c] != table[a][table[b][c]]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    while (true) {
      for (std::size_t k = 0; k < free; ++k) {
        table[1 + k / (n - 1)][1 + k % (n - 1)] = digits[k];
      }
      if (assoc()) {
        f(Monoid::from_table(labels, table));
      }
      // odometer, last free entry varies fastest
      std::size_t k = free;
      while (k > 0) {
        --k;
        if (++digits[k] < n) {
          break;
        }
        digits[k] = 0;
        if (k == 0) {
          return;
        }
      }
      if (free == 0) {
        return;
      }
    }
  }

  inline std::vector<Monoid> enumerate_monoids(std::size_t n) {
    std::vector<Monoid> out;
    for_each_monoid(n, [&out](Monoid const& m) { out.push_back(m); });
    return out;
  }

}  // namespace monact

#endif  // MONACT_MONOID_HPP_
