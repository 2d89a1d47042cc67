// monact - finite monoids, right acts, and their covers
//
// JSON documents:
//
//   monoid     {"elements": [...], "identity": 0, "table": [[...], ...]}
//   act        {"monoid": <monoid doc or path>, "elements": [...],
//               "action": [[...], ...]}
//   congruence {"classes": [[...], ...]}
//   system     {"nodes": [...], "order": [[i, j], ...],
//               "acts": {node: <act doc>}, "arrows": {"i,j": [...]}}
//   flatness   {"P": bool, "E": bool, "witness": ...}
//   cover      {"kind": ..., "verdict": ..., "witness": ..., "family": [...]}
//   colimit element {"Y": [labels], "w": [indices]}

#ifndef MONACT_IO_HPP_
#define MONACT_IO_HPP_

#include <filesystem>  // for path
#include <fstream>     // for ifstream
#include <string>      // for string
#include <vector>      // for vector

#include "json.hpp"

#include "act.hpp"
#include "colimit.hpp"
#include "congruence.hpp"
#include "covers.hpp"
#include "error.hpp"
#include "flatness.hpp"
#include "kruml.hpp"
#include "monoid.hpp"

namespace monact {

  using json = nlohmann::ordered_json;

  inline json load_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(errc::parse_error, "cannot open " + path.string());
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw Error(errc::parse_error, path.string() + ": " + e.what());
    }
  }

  namespace detail {
    template <typename T>
    T get_field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw Error(errc::parse_error, std::string("missing field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw Error(errc::parse_error, std::string("field \"") + key + "\": " + e.what());
      }
    }
  }  // namespace detail

  inline json to_json(Monoid const& m) {
    return json{{"elements", m.labels()}, {"identity", Monoid::identity}, {"table", m.table()}};
  }

  inline Monoid monoid_from_json(json const& j) {
    auto labels = detail::get_field<std::vector<std::string>>(j, "elements");
    auto table  = detail::get_field<std::vector<std::vector<index_type>>>(j, "table");
    if (j.contains("identity") && detail::get_field<index_type>(j, "identity") != 0) {
      throw Error(errc::no_identity, "identity must be element 0");
    }
    return Monoid::from_table(std::move(labels), table);
  }

  inline json to_json(Act const& a) {
    return json{{"monoid", to_json(*a.monoid())},
                {"elements", a.labels()},
                {"action", a.action()}};
  }

  //! A string "monoid" field is a path, resolved against base_dir.
  inline Act act_from_json(json const&                  j,
                           std::filesystem::path const& base_dir = {},
                           MonoidPtr                    monoid   = nullptr) {
    if (!j.is_object() || !j.contains("monoid")) {
      throw Error(errc::parse_error, "missing field \"monoid\"");
    }
    json const& mj = j.at("monoid");
    Monoid      m  = mj.is_string()
                         ? monoid_from_json(load_json(base_dir / mj.get<std::string>()))
                         : monoid_from_json(mj);
    if (!monoid || !(*monoid == m)) {
      monoid = share(std::move(m));
    }
    return Act(monoid,
               detail::get_field<std::vector<std::string>>(j, "elements"),
               detail::get_field<std::vector<std::vector<index_type>>>(j, "action"));
  }

  inline json to_json(RightCongruence const& c) {
    return json{{"classes", c.classes()}};
  }

  inline RightCongruence congruence_from_json(json const& j, MonoidPtr const& m) {
    return RightCongruence::from_classes(
        m, detail::get_field<std::vector<std::vector<index_type>>>(j, "classes"));
  }

  inline json to_json(ActMap const& f) {
    return json(f.image());
  }

  inline json to_json(DirectedSystem const& ds) {
    json order  = json::array();
    json arrows = json::object();
    for (auto const& [key, f] : ds.given_arrows()) {
      order.push_back({key.first, key.second});
      arrows[std::to_string(key.first) + "," + std::to_string(key.second)] = f.image();
    }
    for (auto const& [i, j] : ds.extra_order()) {
      order.push_back({i, j});
    }
    json acts = json::object();
    for (std::size_t i = 0; i < ds.size(); ++i) {
      acts[ds.name(i)] = to_json(ds.object(i));
    }
    return json{{"nodes", ds.names()}, {"order", order}, {"acts", acts}, {"arrows", arrows}};
  }

  //! Node references (in "order" and arrow keys) are node names, or indices
  //! when no node has that name.
  inline DirectedSystem system_from_json(json const&                  j,
                                         std::filesystem::path const& base_dir = {}) {
    auto const     nodes = detail::get_field<std::vector<std::string>>(j, "nodes");
    auto const     acts  = detail::get_field<json>(j, "acts");
    DirectedSystem ds;
    MonoidPtr      m;
    for (auto const& name : nodes) {
      if (!acts.contains(name)) {
        throw Error(errc::parse_error, "no act for node " + name);
      }
      Act a = act_from_json(acts.at(name), base_dir, m);
      m     = a.monoid();
      ds.add_node(name, a);
    }
    auto resolve = [&](json const& ref) -> std::size_t {
      std::string const s = ref.is_string() ? ref.get<std::string>() : ref.dump();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == s) {
          return i;
        }
      }
      try {
        std::size_t used = 0;
        auto        k    = std::stoull(s, &used);
        if (used == s.size() && k < nodes.size()) {
          return k;
        }
      } catch (std::exception const&) {
      }
      throw Error(errc::parse_error, "unknown node " + s);
    };
    if (j.contains("arrows")) {
      for (auto const& [key, image] : j.at("arrows").items()) {
        auto const comma = key.find(',');
        if (comma == std::string::npos) {
          throw Error(errc::parse_error, "arrow key must be \"i,j\"");
        }
        ds.add_arrow(resolve(json(key.substr(0, comma))),
                     resolve(json(key.substr(comma + 1))),
                     image.get<std::vector<index_type>>());
      }
    }
    if (j.contains("order")) {
      for (auto const& pair : j.at("order")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw Error(errc::parse_error, "order entries are pairs");
        }
        ds.add_order(resolve(pair[0]), resolve(pair[1]));
      }
    }
    return ds;
  }

  inline json to_json(FlatnessReport const& r) {
    json witness = nullptr;
    if (!r.condition_p) {
      witness = json{{"P", r.condition_p.witness}};
    }
    if (!r.condition_e) {
      if (witness.is_null()) {
        witness = json::object();
      }
      witness["E"] = r.condition_e.witness;
    }
    return json{{"P", r.condition_p.holds}, {"E", r.condition_e.holds}, {"witness", witness}};
  }

  inline json to_json(CoverReport const&              r,
                      std::vector<std::string> const& family_names = {}) {
    json witness = nullptr;
    if (r.subact) {
      witness = json{{"subact", *r.subact}};
    } else if (r.family_index) {
      witness = json{{"family_member", *r.family_index}, {"map", r.map->image()}};
    } else if (r.map) {
      witness = json{{"endomorphism", r.map->image()}};
    }
    return json{{"kind", to_string(r.kind)},
                {"verdict", r.verdict},
                {"witness", witness},
                {"family", family_names}};
  }

  inline json to_json(FinXSystem const& x, ColimitElement const& e) {
    std::vector<std::string> labels;
    for (auto p : e.Y) {
      labels.push_back(x.ground().at(p));
    }
    return json{{"Y", labels}, {"w", e.w.letters()}};
  }

  inline ColimitElement colimit_element_from_json(FinXSystem const& x, json const& j) {
    return x.element(x.subset(detail::get_field<std::vector<std::string>>(j, "Y")),
                     KWord(detail::get_field<std::vector<KWord::letter_type>>(j, "w")));
  }

}  // namespace monact

#endif  // MONACT_IO_HPP_
