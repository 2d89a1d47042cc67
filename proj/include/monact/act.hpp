// monact - finite monoids, right acts, and their covers
//
// This file contains finite right S-acts, S-maps between them, and the basic
// constructions on acts (regular act, one-element act, disjoint unions,
// subact closure, generating sets).

#ifndef MONACT_ACT_HPP_
#define MONACT_ACT_HPP_

#include <cstddef>  // for size_t
#include <memory>   // for shared_ptr, make_shared
#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

#include "error.hpp"
#include "monoid.hpp"

namespace monact {

  //! True if the two pointers refer to the same monoid, or to equal ones.
  inline bool same_monoid(MonoidPtr const& a, MonoidPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  //! A finite right S-act: a non-empty set X with x1 = x and x(st) = (xs)t.
  //!
  //! Act is a cheap-to-copy handle to immutable data.
  class Act {
   public:
    Act(MonoidPtr                                   monoid,
        std::vector<std::string>                    labels,
        std::vector<std::vector<index_type>> const& action) {
      if (!monoid) {
        throw Error(errc::bad_parameter, "act needs a monoid");
      }
      std::size_t const n = labels.size();
      std::size_t const m = monoid->size();
      if (n == 0 || action.size() != n) {
        throw Error(errc::bad_shape, "action must have one row per element");
      }
      std::vector<index_type> flat;
      flat.reserve(n * m);
      for (auto const& row : action) {
        if (row.size() != m) {
          throw Error(errc::bad_shape, "action row must have |S| entries");
        }
        for (auto y : row) {
          if (y >= n) {
            throw Error(errc::bad_index, "action entry out of range");
          }
          flat.push_back(y);
        }
      }
      auto data = std::make_shared<Data>(
          Data{std::move(monoid), std::move(labels), std::move(flat)});
      _data = std::move(data);
      for (index_type x = 0; x < n; ++x) {
        if (act(x, Monoid::identity) != x) {
          throw Error(errc::not_act, "x1 != x", {x});
        }
        for (index_type s = 0; s < m; ++s) {
          for (index_type t = 0; t < m; ++t) {
            if (act(act(x, s), t) != act(x, _data->monoid->product(s, t))) {
              throw Error(errc::not_act, "(xs)t != x(st)", {x, s, t});
            }
          }
        }
      }
    }

    MonoidPtr const& monoid() const noexcept {
      return _data->monoid;
    }

    std::size_t size() const noexcept {
      return _data->labels.size();
    }

    index_type act(index_type x, index_type s) const noexcept {
      return _data->action[x * _data->monoid->size() + s];
    }

    std::string const& label(index_type x) const {
      return _data->labels.at(x);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _data->labels;
    }

    std::vector<std::vector<index_type>> action() const {
      std::size_t const                    m = monoid()->size();
      std::vector<std::vector<index_type>> rows(size());
      for (index_type x = 0; x < size(); ++x) {
        rows[x].assign(_data->action.begin() + x * m,
                       _data->action.begin() + (x + 1) * m);
      }
      return rows;
    }

    //! Same monoid and same action table; labels are ignored.
    bool same_structure(Act const& that) const {
      return same_monoid(monoid(), that.monoid())
             && _data->action == that._data->action;
    }

    friend bool operator==(Act const& a, Act const& b) {
      return a.same_structure(b) && a.labels() == b.labels();
    }

   private:
    struct Data {
      MonoidPtr                monoid;
      std::vector<std::string> labels;
      std::vector<index_type>  action;
    };
    std::shared_ptr<Data const> _data;
  };

  //! An S-map f : source -> target, f(xs) = f(x)s.
  class ActMap {
   public:
    ActMap(Act source, Act target, std::vector<index_type> image)
        : _source(std::move(source)),
          _target(std::move(target)),
          _image(std::move(image)) {
      if (!same_monoid(_source.monoid(), _target.monoid())) {
        throw Error(errc::monoid_mismatch, "S-map between acts over different monoids");
      }
      if (_image.size() != _source.size()) {
        throw Error(errc::bad_shape, "S-map needs one image per source element");
      }
      for (auto y : _image) {
        if (y >= _target.size()) {
          throw Error(errc::bad_index, "S-map image out of range");
        }
      }
      std::size_t const m = _source.monoid()->size();
      for (index_type x = 0; x < _source.size(); ++x) {
        for (index_type s = 0; s < m; ++s) {
          if (_image[_source.act(x, s)] != _target.act(_image[x], s)) {
            throw Error(errc::not_s_map, "f(xs) != f(x)s", {x, s});
          }
        }
      }
    }

    static ActMap identity(Act const& a) {
      std::vector<index_type> img(a.size());
      for (index_type x = 0; x < a.size(); ++x) {
        img[x] = x;
      }
      return ActMap(a, a, std::move(img));
    }

    Act const& source() const noexcept {
      return _source;
    }

    Act const& target() const noexcept {
      return _target;
    }

    std::vector<index_type> const& image() const noexcept {
      return _image;
    }

    index_type operator()(index_type x) const {
      return _image.at(x);
    }

    bool is_injective() const {
      std::vector<char> hit(_target.size(), 0);
      for (auto y : _image) {
        if (hit[y]) {
          return false;
        }
        hit[y] = 1;
      }
      return true;
    }

    bool is_surjective() const {
      std::vector<char> hit(_target.size(), 0);
      std::size_t       count = 0;
      for (auto y : _image) {
        count += hit[y] == 0;
        hit[y] = 1;
      }
      return count == _target.size();
    }

    bool is_bijective() const {
      return _source.size() == _target.size() && is_injective();
    }

    friend bool operator==(ActMap const& f, ActMap const& g) {
      return f._image == g._image && f._source.same_structure(g._source)
             && f._target.same_structure(g._target);
    }

   private:
    Act                     _source;
    Act                     _target;
    std::vector<index_type> _image;
  };

  //! g o f.
  inline ActMap compose(ActMap const& g, ActMap const& f) {
    if (!f.target().same_structure(g.source())) {
      throw Error(errc::bad_parameter, "cannot compose: target != source");
    }
    std::vector<index_type> img(f.source().size());
    for (index_type x = 0; x < img.size(); ++x) {
      img[x] = g(f(x));
    }
    return ActMap(f.source(), g.target(), std::move(img));
  }

  //! S as a right act over itself.
  inline Act regular_act(MonoidPtr const& m) {
    return Act(m, m->labels(), m->table());
  }

  //! The one-element act.
  inline Act one_element_act(MonoidPtr const& m) {
    return Act(m,
               {"theta"},
               std::vector<std::vector<index_type>>{
                   std::vector<index_type>(m->size(), 0)});
  }

  //! Disjoint union; element x of parts[k] becomes (offset of k) + x and is
  //! labelled "label@k".
  inline Act disjoint_union(std::vector<Act> const& parts) {
    if (parts.empty()) {
      throw Error(errc::bad_parameter, "disjoint union of no acts");
    }
    MonoidPtr const&                     m = parts.front().monoid();
    std::vector<std::string>             labels;
    std::vector<std::vector<index_type>> action;
    std::size_t                          offset = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      Act const& a = parts[k];
      if (!same_monoid(a.monoid(), m)) {
        throw Error(errc::monoid_mismatch, "disjoint union over different monoids");
      }
      for (index_type x = 0; x < a.size(); ++x) {
        labels.push_back(a.label(x) + "@" + std::to_string(k));
        std::vector<index_type> row(m->size());
        for (index_type s = 0; s < m->size(); ++s) {
          row[s] = offset + a.act(x, s);
        }
        action.push_back(std::move(row));
      }
      offset += a.size();
    }
    return Act(m, std::move(labels), action);
  }

  //! Inclusion of parts[k] into disjoint_union(parts).
  inline ActMap union_injection(std::vector<Act> const& parts,
                                Act const&              whole,
                                std::size_t             k) {
    std::size_t offset = 0;
    for (std::size_t j = 0; j < k; ++j) {
      offset += parts[j].size();
    }
    std::vector<index_type> img(parts.at(k).size());
    for (index_type x = 0; x < img.size(); ++x) {
      img[x] = offset + x;
    }
    return ActMap(parts[k], whole, std::move(img));
  }

  //! Free act on `copies` generators: the disjoint union of that many
  //! copies of the regular act.
  inline Act free_act(MonoidPtr const& m, std::size_t copies) {
    return disjoint_union(std::vector<Act>(copies, regular_act(m)));
  }

  //! Least subset containing seed and closed under the action, as a sorted
  //! list of elements.
  inline std::vector<index_type> subact_closure(Act const&                     a,
                                                std::vector<index_type> const& seed) {
    if (seed.empty()) {
      throw Error(errc::empty_seed, "subact closure of the empty set");
    }
    std::vector<char>       in(a.size(), 0);
    std::vector<index_type> stack;
    for (auto x : seed) {
      if (x >= a.size()) {
        throw Error(errc::bad_index, "seed element out of range");
      }
      if (!in[x]) {
        in[x] = 1;
        stack.push_back(x);
      }
    }
    std::size_t const m = a.monoid()->size();
    while (!stack.empty()) {
      index_type const x = stack.back();
      stack.pop_back();
      for (index_type s = 0; s < m; ++s) {
        index_type const y = a.act(x, s);
        if (!in[y]) {
          in[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::vector<index_type> out;
    for (index_type x = 0; x < a.size(); ++x) {
      if (in[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! Generating set obtained by scanning elements in index order and dropping
  //! each one that the remaining candidates already generate.
  inline std::vector<index_type> minimal_generating_set(Act const& a) {
    std::vector<char> keep(a.size(), 1);
    std::size_t       kept = a.size();
    for (index_type x = 0; x < a.size() && kept > 1; ++x) {
      std::vector<index_type> rest;
      for (index_type y = 0; y < a.size(); ++y) {
        if (keep[y] && y != x) {
          rest.push_back(y);
        }
      }
      auto const closure = subact_closure(a, rest);
      if (closure.size() == a.size()) {
        keep[x] = 0;
        --kept;
      }
    }
    std::vector<index_type> out;
    for (index_type x = 0; x < a.size(); ++x) {
      if (keep[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline bool is_cyclic(Act const& a) {
    return minimal_generating_set(a).size() == 1;
  }

  //! The subact B of a with the induced action, and its inclusion into a.
  inline ActMap subact_inclusion(Act const& a, std::vector<index_type> const& members) {
    std::vector<index_type> pos(a.size(), UNDEFINED);
    for (index_type k = 0; k < members.size(); ++k) {
      pos[members[k]] = k;
    }
    std::size_t const                    m = a.monoid()->size();
    std::vector<std::string>             labels;
    std::vector<std::vector<index_type>> action;
    for (auto x : members) {
      labels.push_back(a.label(x));
      std::vector<index_type> row(m);
      for (index_type s = 0; s < m; ++s) {
        row[s] = pos[a.act(x, s)];
        if (row[s] == UNDEFINED) {
          throw Error(errc::bad_parameter, "members are not closed under the action");
        }
      }
      action.push_back(std::move(row));
    }
    return ActMap(Act(a.monoid(), std::move(labels), action), a, members);
  }

}  // namespace monact

#endif  // MONACT_ACT_HPP_
