// monact - command line scenario runner and document checker

#include <cstdint>     // for uint64_t
#include <filesystem>  // for path
#include <iostream>    // for cout, cerr
#include <string>      // for string
#include <vector>      // for vector

#include "CLI11.hpp"

#include "monact/monact.hpp"

namespace {

  using monact::json;

  struct Output {
    bool json_format = false;
    bool elapsed     = true;
  };

  int emit(monact::ScenarioReport report, Output const& out) {
    if (!out.elapsed) {
      report.elapsed_ms = 0;
    }
    if (out.json_format) {
      json j = monact::to_json(report);
      if (!out.elapsed) {
        j.erase("elapsed_ms");
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << monact::to_text(report);
      if (out.elapsed) {
        std::cout << "elapsed " << report.elapsed_ms << " ms\n";
      }
    }
    return report.passed() ? 0 : 1;
  }

  std::vector<monact::Act> family_from_json(json const&                  j,
                                            std::filesystem::path const& base,
                                            monact::MonoidPtr const&     m,
                                            std::vector<std::string>&    names) {
    std::vector<monact::Act> family;
    for (auto const& [name, doc] : j.items()) {
      names.push_back(name);
      family.push_back(monact::act_from_json(doc, base, m));
    }
    return family;
  }

  // {"source": act, "target": act, "map": [...]} with a shared monoid
  monact::ActMap map_from_json(json const& j, std::filesystem::path const& base) {
    auto source = monact::act_from_json(j.at("source"), base);
    auto target = monact::act_from_json(j.at("target"), base, source.monoid());
    return monact::ActMap(source, target, j.at("map").get<std::vector<monact::index_type>>());
  }

  int run_check(std::string const& file, std::string const& op) {
    std::filesystem::path const path(file);
    json const                  doc  = monact::load_json(path);
    auto const                  base = path.parent_path();
    json                        result;
    bool                        verdict = true;

    if (op == "monoid") {
      auto const m   = monact::monoid_from_json(doc);
      auto const lc  = monact::is_cancellative(m, monact::side::left);
      auto const rc  = monact::is_cancellative(m, monact::side::right);
      result         = {{"size", m.size()},
                        {"left_cancellative", bool(lc)},
                        {"right_cancellative", bool(rc)},
                        {"group", monact::is_group(m)}};
      if (lc.witness) {
        result["left_witness"] = *lc.witness;
      }
      if (rc.witness) {
        result["right_witness"] = *rc.witness;
      }
    } else if (op == "act") {
      auto const a = monact::act_from_json(doc, base);
      result       = {{"size", a.size()},
                      {"cyclic", monact::is_cyclic(a)},
                      {"generators", monact::minimal_generating_set(a)}};
    } else if (op == "flatness") {
      auto const report = monact::is_strongly_flat(monact::act_from_json(doc, base));
      result            = monact::to_json(report);
      verdict           = bool(report);
    } else if (op == "congruence") {
      auto const m     = monact::share(monact::monoid_from_json(doc.at("monoid")));
      auto       rel   = monact::Relation(m);
      auto const cls   = doc.at("classes").get<std::vector<std::vector<monact::index_type>>>();
      for (auto const& c : cls) {
        for (auto s : c) {
          for (auto t : c) {
            rel.set(s, t, true);
          }
        }
      }
      auto const check = monact::is_right_congruence(rel);
      verdict          = bool(check);
      result           = {{"right_congruence", verdict}};
      if (check) {
        result["quotient"] = monact::to_json(monact::quotient_act(monact::to_congruence(rel)).act);
      } else {
        result["law"]     = check.law;
        result["witness"] = check.witness;
      }
    } else if (op == "coessential") {
      auto const report = monact::is_coessential(map_from_json(doc, base));
      result            = monact::to_json(report);
      verdict           = bool(report);
    } else if (op == "precover" || op == "cover") {
      auto const               g = map_from_json(doc, base);
      std::vector<std::string> names;
      auto const family = family_from_json(doc.at("family"), base, g.source().monoid(), names);
      auto const report = op == "cover" ? monact::is_cover_wrt(g, family)
                                        : monact::is_precover_wrt(g, family);
      result            = monact::to_json(report, names);
      verdict           = bool(report);
    } else if (op == "colimit") {
      auto const ds = monact::system_from_json(doc, base);
      monact::validate_system(ds);
      auto const colim = monact::compute_colimit(ds);
      json       inj   = json::object();
      for (std::size_t i = 0; i < ds.size(); ++i) {
        inj[ds.name(i)] = monact::to_json(colim.injections[i]);
      }
      result = {{"colimit", monact::to_json(colim.act)}, {"injections", inj}};
    } else if (op == "colimit-equal") {
      monact::FinXSystem const x(doc.at("X").get<std::vector<std::string>>());
      auto const               e1 = monact::colimit_element_from_json(x, doc.at("e1"));
      auto const               e2 = monact::colimit_element_from_json(x, doc.at("e2"));
      verdict                     = x.colimit_equal(e1, e2);
      result                      = {{"equal", verdict}};
    } else {
      throw monact::Error(monact::errc::bad_parameter, "unknown op " + op);
    }
    std::cout << result.dump(2) << "\n";
    return verdict ? 0 : 1;
  }

  int run_build(std::string const& family, std::size_t n, std::size_t cap) {
    monact::Monoid m = monact::trivial_monoid();
    if (family == "rightzero") {
      m = monact::right_zero_adjoin_one(n);
    } else if (family == "qiao-wei") {
      m = monact::qiao_wei_truncated(n, cap == 0 ? n + 1 : cap);
    } else if (family == "cyclic") {
      m = monact::cyclic_group(n);
    } else if (family != "trivial") {
      throw monact::Error(monact::errc::bad_parameter, "unknown family " + family);
    }
    std::cout << monact::to_json(m).dump(2) << "\n";
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monoids, right acts, flatness and covers"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json_format, "JSON report");
  bool no_elapsed = false;
  app.add_flag("--no-elapsed", no_elapsed, "omit timing, for byte-identical reports");

  std::size_t n = 2, cap = 0, max_order = 4, samples = 1000;
  std::uint64_t seed = 0;
  std::string   word, file, op, family;

  auto* rightzero = app.add_subcommand("rightzero", "right zero semigroup with identity");
  rightzero->add_option("--n", n, "number of right zeros")->check(CLI::Range(1, 5));

  auto* qw = app.add_subcommand("qiao-wei", "truncated Qiao-Wei monoid");
  qw->add_option("--n", n, "generators x1..xn")->check(CLI::Range(1, 4));
  qw->add_option("--cap", cap, "x0^cap = x0^(cap+1); default n+1")->check(CLI::Range(1, 6));

  auto* kruml = app.add_subcommand("kruml", "Kruml monoid property suite");
  kruml->add_option("--seed", seed, "sampling seed")->required();
  kruml->add_option("--samples", samples, "samples per property");

  auto* nf = app.add_subcommand("kruml-nf", "normal form of a Kruml word");
  nf->add_option("word", word, "whitespace separated indices, \"2 1\" is a2a1")->required();

  auto* lemma = app.add_subcommand("lemma", "right cancellative finite monoids are groups");
  lemma->add_option("--max-order", max_order, "largest order enumerated");

  auto* check = app.add_subcommand("check", "check a JSON document");
  check->add_option("file", file, "document")->required()->check(CLI::ExistingFile);
  check->add_option("--op", op, "operation")
      ->required()
      ->check(CLI::IsMember({"monoid",
                             "act",
                             "flatness",
                             "congruence",
                             "coessential",
                             "precover",
                             "cover",
                             "colimit",
                             "colimit-equal"}));

  auto* build = app.add_subcommand("build", "emit a monoid document");
  build->add_option("family", family, "rightzero, qiao-wei, cyclic or trivial")->required();
  build->add_option("--n", n, "size parameter");
  build->add_option("--cap", cap, "qiao-wei truncation");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const status = app.exit(e);
    return status == 0 ? 0 : 2;
  }
  out.elapsed = !no_elapsed;

  try {
    if (*rightzero) {
      return emit(monact::run_rightzero(n), out);
    }
    if (*qw) {
      return emit(monact::run_qiao_wei(n, cap == 0 ? n + 1 : cap), out);
    }
    if (*kruml) {
      return emit(monact::run_kruml(seed, samples), out);
    }
    if (*lemma) {
      return emit(monact::run_lemma(max_order), out);
    }
    if (*nf) {
      auto const w = monact::knormalize(monact::parse_kword(word));
      if (out.json_format) {
        std::cout << json{{"word", w.letters()}, {"algebraic", monact::to_algebraic(w)}}.dump()
                  << "\n";
      } else {
        std::cout << monact::to_string(w) << (w.empty() ? "" : "  ") << monact::to_algebraic(w)
                  << "\n";
      }
      return 0;
    }
    if (*check) {
      return run_check(file, op);
    }
    if (*build) {
      return run_build(family, n, cap);
    }
  } catch (monact::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (json::exception const& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
