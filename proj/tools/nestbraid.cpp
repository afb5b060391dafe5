#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "nestbraid/building.hpp"
#include "nestbraid/codec.hpp"
#include "nestbraid/errors.hpp"
#include "nestbraid/garside.hpp"
#include "nestbraid/io.hpp"
#include "nestbraid/verify.hpp"
#include "nestbraid/wonderful.hpp"

using namespace nestbraid;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct GroupOptions {
  std::string type;
  int rank = 0;
  std::string file;

  void attach(CLI::App* app, bool allow_file) {
    app->add_option("--type", type, "Coxeter type: A, B, D or G2");
    app->add_option("--rank", rank, "rank of the group");
    if (allow_file) app->add_option("--file", file, "arrangement JSON instead of a type");
  }

  bool has_group() const { return !type.empty(); }

  ReflectionGroupData group() const {
    if (type.empty()) throw InvalidInput("--type and --rank are required");
    const CoxeterType t = parse_coxeter_type(type);
    return build_group(t, t == CoxeterType::G2 && rank == 0 ? 2 : rank);
  }

  Arrangement arrangement() const {
    if (!file.empty()) {
      if (!type.empty()) throw InvalidInput("give either --file or --type, not both");
      return load_arrangement_file(file);
    }
    return group().arrangement;
  }
};

void print(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("bad index list '" + text + "'");
    }
  }
  return out;
}

// Codec labels for types A and D; empty otherwise.
MemberLabel codec_labels(const ReflectionGroupData* w, const BuildingSet& f) {
  if (!w) return {};
  if (w->type == CoxeterType::A) {
    const int n = w->rank + 1;
    return [&f, n](std::size_t i) { return to_string(sn_encode(f.element(i), n)); };
  }
  if (w->type == CoxeterType::D) {
    const int n = w->rank;
    return [&f, n](std::size_t i) { return to_string(dn_encode(f.element(i), n)); };
  }
  return {};
}

Json group_info(const ReflectionGroupData& w) {
  Json cox = Json::array();
  for (const auto& row : w.coxeter_matrix) cox.push_back(row);
  return Json{{"label", w.label()},
              {"order", w.group_order},
              {"degrees", w.degrees},
              {"generators", w.generator_names},
              {"coxeter_matrix", cox},
              {"positive_roots", w.positive_count}};
}

Json element_json(const Garside& g, const GroupElement& e) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < e.matrix.rows(); ++i) rows.push_back(to_json(e.matrix.row(i)));
  return Json{{"word", g.format(g.word(g.reduced_word(e)))}, {"matrix", rows}};
}

Json word_json(const Garside& g, const BraidWord& w) {
  return Json{{"word", g.format(w)}, {"length", w.letters.size()}};
}

struct Building {
  std::optional<ReflectionGroupData> w;
  BuildingSet f;
};

Building load_building(const GroupOptions& opt, const Caps& caps, const std::string& route = "root") {
  Building b;
  if (opt.file.empty()) b.w = opt.group();
  const Arrangement a = opt.arrangement();
  b.f = minimal_building_set(a, b.w && route == "root" ? &*b.w : nullptr, caps);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wonderful-model combinatorics and Garside normal forms for finite Coxeter arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config;
  std::vector<std::string> cap_overrides;
  app.add_option("--config", config, "key = value file overriding the caps")->check(CLI::ExistingFile);
  app.add_option("--cap", cap_overrides, "single cap override key=value (repeatable)");

  // arr
  auto* arr = app.add_subcommand("arr", "reflection and user-supplied arrangements");
  arr->require_subcommand(1);
  GroupOptions arr_build_opt, arr_info_opt;
  auto* arr_build = arr->add_subcommand("build", "arrangement of a reflection group as JSON");
  arr_build_opt.attach(arr_build, false);
  std::string arr_load_path;
  auto* arr_load = arr->add_subcommand("load", "validate and normalize an arrangement JSON file");
  arr_load->add_option("file", arr_load_path)->required();
  auto* arr_info = arr->add_subcommand("info", "summary of an arrangement and its group");
  arr_info_opt.attach(arr_info, true);

  // building
  auto* bld = app.add_subcommand("building", "minimal building set");
  bld->require_subcommand(1);
  GroupOptions bld_opt;
  bool bld_codec = false;
  std::string bld_route = "root";
  auto* bld_list = bld->add_subcommand("list", "members of the minimal building set");
  bld_opt.attach(bld_list, true);
  bld_list->add_flag("--codec", bld_codec, "add S_n / D_n labels");
  bld_list->add_option("--route", bld_route, "irreducibility test")->check(CLI::IsMember({"root", "definition"}));

  // nested
  auto* nst = app.add_subcommand("nested", "nested sets of the minimal building set");
  nst->require_subcommand(1);
  GroupOptions nst_opt;
  std::optional<std::size_t> nst_max;
  bool nst_maximal = false;
  auto* nst_count = nst->add_subcommand("count", "number of nested sets by size");
  auto* nst_enum = nst->add_subcommand("enumerate", "list nested sets");
  for (auto* sub : {nst_count, nst_enum}) {
    nst_opt.attach(sub, true);
    sub->add_option("--max-size", nst_max, "largest cardinality");
  }
  nst_enum->add_flag("--maximal", nst_maximal, "only maximal nested sets");

  // strata
  auto* str = app.add_subcommand("strata", "boundary stratification of the minimal model");
  str->require_subcommand(1);
  GroupOptions str_opt;
  std::string str_format = "json";
  auto* str_export = str->add_subcommand("export", "stratum poset as dot or JSON");
  str_opt.attach(str_export, true);
  str_export->add_option("--format", str_format)->check(CLI::IsMember({"dot", "json"}));
  auto* str_blowup = str->add_subcommand("blowups", "blow-up centers in order");
  str_blowup->add_option("--type", str_opt.type);
  str_blowup->add_option("--rank", str_opt.rank);

  // stab
  auto* stab = app.add_subcommand("stab", "point encoding and stabilizer of a boundary point");
  GroupOptions stab_opt;
  std::string stab_point;
  stab_opt.attach(stab, false);
  stab->add_option("--point", stab_point, "point JSON {\"x\": [...], \"lines\": [[...], ...]}")->required();

  // garside
  auto* gar = app.add_subcommand("garside", "braid group computations");
  gar->require_subcommand(1);
  GroupOptions gar_opt;
  std::string word_a, word_b, parabolic;
  auto* gar_nf = gar->add_subcommand("nf", "left-greedy normal form");
  gar_nf->add_option("word", word_a)->required();
  auto* gar_equal = gar->add_subcommand("equal", "decide equality of two words");
  gar_equal->add_option("u", word_a)->required();
  gar_equal->add_option("v", word_b)->required();
  auto* gar_center = gar->add_subcommand("center", "generators of Z(B(W)) and Z(P(W))");
  auto* gar_delta = gar->add_subcommand("delta", "Garside and dual Garside elements");
  auto* gar_inertia = gar->add_subcommand("inertia", "inertia elements of a standard parabolic");
  gar_inertia->add_option("--parabolic", parabolic, "comma-separated generator indices")->required();
  for (auto* sub : {gar_nf, gar_equal, gar_center, gar_delta, gar_inertia}) gar_opt.attach(sub, false);

  // verify
  auto* ver = app.add_subcommand("verify", "replay the identity and count checks");
  std::string ver_scope = "all";
  bool ver_json = false;
  ver->add_option("--scope", ver_scope)->check(CLI::IsMember(verify_scopes()));
  ver->add_flag("--json", ver_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Caps caps;
    if (!config.empty()) caps = load_caps(config, caps);
    for (const auto& kv : cap_overrides) caps = parse_caps(kv, caps);

    if (*arr_build) {
      print(to_json(arr_build_opt.group().arrangement));
    } else if (*arr_load) {
      print(to_json(load_arrangement_file(arr_load_path)));
    } else if (*arr_info) {
      const Arrangement a = arr_info_opt.arrangement();
      Json doc{{"dim", a.dim()}, {"hyperplanes", a.size()}, {"essential", a.essential()}};
      if (arr_info_opt.has_group()) doc["group"] = group_info(arr_info_opt.group());
      print(doc);
    } else if (*bld_list) {
      auto b = load_building(bld_opt, caps, bld_route);
      const MemberLabel label = bld_codec ? codec_labels(b.w ? &*b.w : nullptr, b.f) : MemberLabel{};
      if (bld_codec && !label) throw InvalidInput("codec labels exist only for types A and D");
      Json members = Json::array();
      for (std::size_t i = 0; i < b.f.size(); ++i) {
        Json m = to_json(b.f.element(i));
        m["index"] = i;
        if (label) m["label"] = label(i);
        members.push_back(m);
      }
      print(Json{{"size", b.f.size()}, {"rank", b.f.rank()}, {"members", members}});
    } else if (*nst_count || *nst_enum) {
      auto b = load_building(nst_opt, caps);
      if (*nst_count) {
        const auto sets = enumerate_nested_sets(b.f, nst_max, caps);
        std::vector<std::size_t> by_size;
        for (const auto& s : sets) {
          if (by_size.size() <= s.size()) by_size.resize(s.size() + 1, 0);
          ++by_size[s.size()];
        }
        print(Json{{"total", sets.size()}, {"by_size", by_size}, {"maximal", maximal_nested_sets(b.f, caps).size()}});
      } else {
        const auto sets = nst_maximal ? maximal_nested_sets(b.f, caps) : enumerate_nested_sets(b.f, nst_max, caps);
        const MemberLabel label = codec_labels(b.w ? &*b.w : nullptr, b.f);
        Json list = Json::array();
        for (const auto& s : sets) {
          if (nst_max && s.size() > *nst_max) continue;
          Json entry{{"members", s}};
          if (label) {
            Json labels = Json::array();
            for (auto i : s) labels.push_back(label(i));
            entry["labels"] = labels;
          }
          list.push_back(entry);
        }
        print(Json{{"count", list.size()}, {"nested_sets", list}});
      }
    } else if (*str_export) {
      auto b = load_building(str_opt, caps);
      const auto st = stratification(b.f, caps);
      const MemberLabel label = codec_labels(b.w ? &*b.w : nullptr, b.f);
      if (str_format == "dot")
        std::cout << strata_to_dot(st, b.f, label);
      else
        print(strata_to_json(st, b.f, label));
    } else if (*str_blowup) {
      auto b = load_building(str_opt, caps);
      Json list = Json::array();
      for (const auto& s : blowup_sequence(b.f)) list.push_back(to_json(s));
      print(Json{{"centers", list}});
    } else if (*stab) {
      const auto w = stab_opt.group();
      const auto f = minimal_building_set(w.arrangement, &w, caps);
      const auto [x, lines] = point_from_json(parse_json_file(stab_point));
      const auto p = normalize_point_encoding(x, lines, f);
      const auto report = stabilizer_of_point(p, f, w, caps);
      const Garside g(w);
      Json elements = Json::array();
      for (const auto& e : report.elements) elements.push_back(element_json(g, e));
      Json doc = to_json(p, f);
      doc["stabilizer"] = Json{{"order", report.order}, {"is_cyclic_scalar", report.is_cyclic_scalar}, {"elements", elements}};
      if (p.flats.size() == 1) {
        const auto s = is_springer_generic(f.element(p.flats[0]), p.lines[0], f, w, caps);
        doc["springer"] = Json{{"generic", s.generic},
                               {"stabilizer_order", s.stabilizer.size()},
                               {"center_order", s.center_order},
                               {"stabilizer_is_center", s.stabilizer_is_center},
                               {"smooth", s.smooth}};
      }
      print(doc);
    } else if (*gar_nf || *gar_equal || *gar_center || *gar_delta || *gar_inertia) {
      const Garside g(gar_opt.group());
      if (*gar_nf) {
        const auto nf = g.normal_form(g.parse(word_a));
        Json simples = Json::array();
        for (const auto& s : nf.simples) simples.push_back(g.format(g.word(g.reduced_word(s))));
        print(Json{{"delta_power", nf.delta_power}, {"simples", simples}, {"normal_form", word_json(g, g.to_word(nf))}});
      } else if (*gar_equal) {
        print(Json{{"equal", g.equal(g.parse(word_a), g.parse(word_b))}});
      } else if (*gar_center) {
        const auto r = center_report(g, caps);
        print(Json{{"beta", word_json(g, r.beta)},
                   {"pi", word_json(g, r.pi)},
                   {"z_of_w", r.z_of_w},
                   {"beta_central", r.beta_central},
                   {"pi_central", r.pi_central},
                   {"relation_checked", r.relation_checked}});
      } else if (*gar_delta) {
        print(Json{{"delta", word_json(g, g.delta())},
                   {"dual_delta", word_json(g, g.dual_delta())},
                   {"coxeter_number", g.coxeter_number()},
                   {"delta_central", g.is_central(g.delta())}});
      } else {
        const auto r = inertia_element(g, parse_index_list(parabolic));
        print(Json{{"subset", r.subset},
                   {"components", r.components},
                   {"z", word_json(g, r.z)},
                   {"zeta", word_json(g, r.zeta)},
                   {"center_order", r.center_order},
                   {"z_central", r.z_central},
                   {"zeta_central", r.zeta_central},
                   {"relation_checked", r.relation_checked}});
      }
    } else if (*ver) {
      const auto suite = run_verify(ver_scope, caps);
      if (ver_json)
        print(suite.to_json());
      else
        std::cout << suite.table();
      return suite.all_pass() ? kOk : kVerifyFailed;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
