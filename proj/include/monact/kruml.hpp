// monact - finite monoids, right acts, and their covers
//
// This file contains the Kruml monoid
//
//   T^1,  T = < a_0, a_1, ... | a_i a_j = a_(j+1) a_i  for all i <= j >
//
// as an infinite word-based monoid. Words are rewritten with
// a_m a_i -> a_i a_(m-1) (m > i); the normal forms are exactly the
// nondecreasing index sequences.
//
// It also contains the directed system over the finite subsets of a totally
// ordered set X: every object is a copy of T^1 and the arrow Y -> Y u {z} is
// left multiplication by a_i with i = |{y in Y | y < z}|.

#ifndef MONACT_KRUML_HPP_
#define MONACT_KRUML_HPP_

#include <algorithm>    // for is_sorted, set_difference
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <exception>    // for exception
#include <initializer_list>  // for initializer_list
#include <iterator>     // for back_inserter
#include <random>       // for mt19937_64
#include <sstream>      // for istringstream
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "error.hpp"

namespace monact {

  //! A word a_(i1) ... a_(in) in the generators of the Kruml monoid; the
  //! empty word is the identity.
  class KWord {
   public:
    using letter_type = std::size_t;

    KWord() = default;
    KWord(std::initializer_list<letter_type> letters) : _letters(letters) {}
    explicit KWord(std::vector<letter_type> letters) : _letters(std::move(letters)) {}

    std::vector<letter_type> const& letters() const noexcept {
      return _letters;
    }

    std::vector<letter_type>& letters() noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    letter_type operator[](std::size_t i) const {
      return _letters[i];
    }

    bool is_normal() const {
      return std::is_sorted(_letters.begin(), _letters.end());
    }

    friend bool operator==(KWord const&, KWord const&)  = default;
    friend auto operator<=>(KWord const&, KWord const&) = default;

   private:
    std::vector<letter_type> _letters;
  };

  //! "2 1" <-> a_2 a_1; the empty string is the identity.
  inline KWord parse_kword(std::string_view text) {
    std::vector<KWord::letter_type> out;
    std::istringstream              in{std::string(text)};
    std::string                     tok;
    while (in >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size() || tok.front() == '-') {
        throw Error(errc::parse_error, "bad generator index '" + tok + "'");
      }
      out.push_back(static_cast<KWord::letter_type>(v));
    }
    return KWord(std::move(out));
  }

  inline std::string to_string(KWord const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i ? " " : "") + std::to_string(w[i]);
    }
    return out;
  }

  //! a_2 a_1 style rendering, "1" for the identity.
  inline std::string to_algebraic(KWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto i : w.letters()) {
      out += "a" + std::to_string(i);
    }
    return out;
  }

  //! Positions p with w[p] > w[p+1], i.e. where a rewrite applies.
  inline std::vector<std::size_t> redexes(KWord const& w) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        out.push_back(p);
      }
    }
    return out;
  }

  //! Apply a_m a_i -> a_i a_(m-1) at position p (requires m > i there).
  inline void rewrite_at(KWord& w, std::size_t p) {
    auto& l = w.letters();
    if (p + 1 >= l.size() || l[p] <= l[p + 1]) {
      throw Error(errc::bad_parameter, "no redex at position " + std::to_string(p));
    }
    auto const m = l[p];
    l[p]         = l[p + 1];
    l[p + 1]     = m - 1;
  }

  //! Leftmost-redex rewriting to the nondecreasing normal form. Each step
  //! lowers the index sum by one, so this terminates.
  inline KWord knormalize(KWord w) {
    auto&       l = w.letters();
    std::size_t p = 0;
    while (p + 1 < l.size()) {
      if (l[p] > l[p + 1]) {
        auto const m = l[p];
        l[p]         = l[p + 1];
        l[p + 1]     = m - 1;
        // the letter moved left may now form a redex with its predecessor
        p = p == 0 ? 0 : p - 1;
      } else {
        ++p;
      }
    }
    return w;
  }

  inline KWord kmul(KWord const& u, KWord const& v) {
    std::vector<KWord::letter_type> l = u.letters();
    l.insert(l.end(), v.letters().begin(), v.letters().end());
    return knormalize(KWord(std::move(l)));
  }

  //! The implication wu = wv => u = v (in the monoid).
  inline bool left_cancel_test(KWord const& w, KWord const& u, KWord const& v) {
    return kmul(w, u) != kmul(w, v) || knormalize(u) == knormalize(v);
  }

  //! Uniformly random word with length in [0, max_length] and letters in
  //! [0, max_index].
  template <typename Rng>
  KWord random_kword(Rng& rng, std::size_t max_length, std::size_t max_index) {
    std::vector<KWord::letter_type> l(rng() % (max_length + 1));
    for (auto& x : l) {
      x = rng() % (max_index + 1);
    }
    return KWord(std::move(l));
  }

  //! Rewrite at uniformly chosen redexes until none remain.
  template <typename Rng>
  KWord normalize_randomly(KWord w, Rng& rng) {
    for (auto r = redexes(w); !r.empty(); r = redexes(w)) {
      rewrite_at(w, r[rng() % r.size()]);
    }
    return w;
  }

  //! All nondecreasing words of length <= max_length with letters <=
  //! max_index, shortest first, then lexicographically.
  inline std::vector<KWord> normal_forms(std::size_t max_length, std::size_t max_index) {
    std::vector<KWord> out{KWord{}};
    std::size_t        begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t const end = out.size();
      for (std::size_t k = begin; k < end; ++k) {
        KWord::letter_type const low = out[k].empty() ? 0 : out[k].letters().back();
        for (auto x = low; x <= max_index; ++x) {
          KWord w = out[k];
          w.letters().push_back(x);
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  //! A finite subset of X, as sorted positions in the ground list.
  using FinSubset = std::vector<std::size_t>;

  //! An element of the colimit of the Fin(X) system: the class of w in the
  //! copy of T^1 at Y.
  struct ColimitElement {
    FinSubset Y;
    KWord     w;
  };

  //! The directed system over the finite subsets of a totally ordered set,
  //! ordered as listed.
  class FinXSystem {
   public:
    explicit FinXSystem(std::vector<std::string> ground) : _ground(std::move(ground)) {
      auto sorted = _ground;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(errc::duplicate_label, "ground labels must be distinct");
      }
    }

    std::vector<std::string> const& ground() const noexcept {
      return _ground;
    }

    std::size_t position(std::string_view label) const {
      auto it = std::find(_ground.begin(), _ground.end(), label);
      if (it == _ground.end()) {
        throw Error(errc::bad_index, "no ground element " + std::string(label));
      }
      return static_cast<std::size_t>(it - _ground.begin());
    }

    FinSubset subset(std::vector<std::string> const& labels) const {
      FinSubset out;
      for (auto const& l : labels) {
        out.push_back(position(l));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    //! |{y in Y | y < z}|.
    std::size_t insertion_index(FinSubset const& Y, std::size_t z) const {
      check(Y);
      if (z >= _ground.size()) {
        throw Error(errc::bad_index, "element not in the ground set");
      }
      if (std::binary_search(Y.begin(), Y.end(), z)) {
        throw Error(errc::already_member, _ground[z] + " is already in Y");
      }
      return static_cast<std::size_t>(std::lower_bound(Y.begin(), Y.end(), z) - Y.begin());
    }

    //! The arrow Y -> Z applied to w, inserting the elements of Z \ Y in the
    //! given order (each insertion multiplies by a_i on the left).
    KWord transition_in_order(FinSubset const&                Y,
                              FinSubset const&                Z,
                              std::vector<std::size_t> const& order,
                              KWord const&                    w) const {
      check(Y);
      check(Z);
      if (!std::includes(Z.begin(), Z.end(), Y.begin(), Y.end())) {
        throw Error(errc::not_subset, "Y is not a subset of Z");
      }
      auto missing = difference(Z, Y);
      auto sorted  = order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != missing) {
        throw Error(errc::bad_parameter, "insertion order must list Z \\ Y");
      }
      FinSubset current = Y;
      KWord     out     = knormalize(w);
      for (auto z : order) {
        out = kmul(KWord{insertion_index(current, z)}, out);
        current.insert(std::lower_bound(current.begin(), current.end(), z), z);
      }
      return out;
    }

    //! transition_in_order with Z \ Y inserted in ascending order.
    KWord transition(FinSubset const& Y, FinSubset const& Z, KWord const& w) const {
      check(Y);
      check(Z);
      if (!std::includes(Z.begin(), Z.end(), Y.begin(), Y.end())) {
        throw Error(errc::not_subset, "Y is not a subset of Z");
      }
      return transition_in_order(Y, Z, difference(Z, Y), w);
    }

    ColimitElement element(FinSubset Y, KWord const& w) const {
      check(Y);
      return {std::move(Y), knormalize(w)};
    }

    //! Equality in the colimit. Every arrow is injective (left multiplication
    //! in a left cancellative monoid), so two elements are equal iff their
    //! images agree at Y1 u Y2.
    bool colimit_equal(ColimitElement const& e1, ColimitElement const& e2) const {
      FinSubset top;
      std::set_union(e1.Y.begin(), e1.Y.end(), e2.Y.begin(), e2.Y.end(),
                     std::back_inserter(top));
      return transition(e1.Y, top, e1.w) == transition(e2.Y, top, e2.w);
    }

    //! The element pushed along Y -> Z.
    ColimitElement push(ColimitElement const& e, FinSubset const& Z) const {
      return {Z, transition(e.Y, Z, e.w)};
    }

   private:
    void check(FinSubset const& Y) const {
      for (std::size_t k = 0; k < Y.size(); ++k) {
        if (Y[k] >= _ground.size() || (k > 0 && Y[k - 1] >= Y[k])) {
          throw Error(errc::bad_parameter, "subset must be sorted positions in X");
        }
      }
    }

    static std::vector<std::size_t> difference(FinSubset const& Z, FinSubset const& Y) {
      std::vector<std::size_t> out;
      std::set_difference(Z.begin(), Z.end(), Y.begin(), Y.end(), std::back_inserter(out));
      return out;
    }

    std::vector<std::string> _ground;
  };

}  // namespace monact

#endif  // MONACT_KRUML_HPP_
