#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "computads/counterexample.hpp"
#include "computads/io.hpp"
#include "computads/verify.hpp"

using namespace computads;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

/* input files in argument order, computads parsed before morphisms so a
   morphism may reference an object from any file of the same invocation */
struct Inputs {
  std::map<Label, Computad> objects;
  std::vector<Computad> computads;
  std::vector<Morphism> morphisms;
  std::vector<std::pair<std::string, FileKind>> order;
};

Inputs load_files(const std::vector<std::string>& paths) {
  Inputs in;
  std::vector<std::pair<std::string, std::string>> morphism_texts;
  for (const std::string& path : paths) {
    std::string text = read_file(path);
    FileKind kind = sniff_kind(text, path);
    in.order.emplace_back(path, kind);
    if (kind == FileKind::computad) {
      Computad x = parse_computad(text, path);
      if (!in.objects.emplace(x.name(), x).second)
        throw Error("duplicate computad name " + x.name() + " in " + path);
      in.computads.push_back(std::move(x));
    } else {
      morphism_texts.emplace_back(path, std::move(text));
    }
  }
  for (const auto& [path, text] : morphism_texts)
    in.morphisms.push_back(parse_morphism(text, in.objects, path));
  return in;
}

const Computad& nth_computad(const Inputs& in, std::size_t i, const char* verb) {
  if (in.computads.size() <= i)
    throw Error(std::string(verb) + ": expected " + std::to_string(i + 1) +
                " computad files, got " + std::to_string(in.computads.size()));
  return in.computads[i];
}

void need_counts(const Inputs& in, std::size_t n2, std::size_t n3,
                 const char* verb) {
  if (in.computads.size() != n2 || in.morphisms.size() != n3)
    throw Error(std::string(verb) + ": expected " + std::to_string(n2) +
                " computad file(s) and " + std::to_string(n3) +
                " morphism file(s), got " + std::to_string(in.computads.size()) +
                " and " + std::to_string(in.morphisms.size()));
}

std::string pairing_text(const Pairing& p) {
  std::string out;
  for (const LabelPair& pr : p.expand()) {
    if (!out.empty()) out += " * ";
    out += pair_label(pr.first, pr.second);
  }
  return out.empty() ? "1" : out;
}

std::string product_provenance(const ProductResult& prod) {
  std::string out = "# provenance\n";
  for (const auto& [cell, origin] : prod.cell_index)
    out += "# " + cell + " <- (" + origin.left + "," + origin.right +
           "), src " + pairing_text(origin.src_pairing) + ", tgt " +
           pairing_text(origin.tgt_pairing) + "\n";
  return out;
}

std::string coeq_provenance(const CoequalizerResult& ce) {
  std::string out = "# provenance\n";
  for (const auto& [label, members] : ce.classes2) {
    out += "# 2-cell " + label + " <-";
    for (const Label& m : members) out += " " + m;
    out += "\n";
  }
  for (const auto& [label, members] : ce.classes3) {
    out += "# 3-cell " + label + " <-";
    for (const Label& m : members) out += " " + m;
    out += "\n";
  }
  return out;
}

ordered_json json_of(const Computad& x) {
  ordered_json j;
  j["name"] = x.name();
  j["2cells"] = x.cells2();
  j["3cells"] = ordered_json::array();
  for (const ThreeCell& e : x.cells3())
    j["3cells"].push_back({{"name", e.name},
                           {"src", e.src.expand()},
                           {"tgt", e.tgt.expand()}});
  return j;
}

ordered_json json_of(const Morphism& f) {
  ordered_json j;
  j["name"] = f.name();
  j["dom"] = f.dom().name();
  j["cod"] = f.cod().name();
  j["map2"] = f.map2();
  j["map3"] = f.map3();
  return j;
}

ordered_json json_of(const UPReport& r) {
  ordered_json j;
  j["subject"] = r.subject;
  j["bounds"] = {{"max_2cells", r.bounds.max_2cells},
                 {"max_3cells", r.bounds.max_3cells},
                 {"max_boundary_size", r.bounds.max_boundary_size}};
  j["budget"] = r.budget;
  j["family_size"] = r.family_size;
  j["cones_checked"] = r.cones_checked;
  j["failures_total"] = r.failures_total;
  j["failures"] = ordered_json::array();
  for (const UPFailure& f : r.failures)
    j["failures"].push_back({{"test_object", f.test_object},
                             {"cone", f.cone},
                             {"reason", f.reason}});
  j["passed"] = r.passed();
  return j;
}

ordered_json json_of(const PipelineReport& r) {
  ordered_json j;
  j["steps"] = ordered_json::array();
  for (const StepRecord& s : r.steps)
    j["steps"].push_back({{"step", s.step},
                          {"title", s.title},
                          {"produced", s.produced},
                          {"checks", s.checks}});
  j["preserved"] = r.preserved;
  j["witness"] = r.witness;
  j["notes"] = r.notes;
  j["objects"] = ordered_json::object();
  for (const auto& [name, x] : r.objects) j["objects"][name] = json_of(x);
  j["morphisms"] = ordered_json::object();
  for (const auto& [name, f] : r.morphisms) j["morphisms"][name] = json_of(f);
  return j;
}

void dump_pipeline(const PipelineReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, x] : r.objects)
    write_file(dir + "/" + name + ".cpd", print_computad(x));
  for (const auto& [name, f] : r.morphisms)
    write_file(dir + "/" + name + ".mor", print_morphism(f));
}

int run_pipeline_verb(bool variant, bool as_json, const std::string& out_dir) {
  PipelineReport r =
      variant ? run_counterexample_empty_target_variant() : run_counterexample();
  if (!out_dir.empty()) dump_pipeline(r, out_dir);
  if (as_json)
    std::printf("%s\n", json_of(r).dump(2).c_str());
  else
    std::fputs(format_report(r).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-degenerate 3-computads: products, coequalisers, hom "
               "search, universal-property checks"};
  app.require_subcommand(1);

  long long budget = kDefaultSearchBudget;
  app.add_option("--budget", budget,
                 "cap on a-priori candidate maps per search (default 1e7)")
      ->envname("COMPUTAD_SEARCH_BUDGET");
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "add # provenance comments to outputs");

  std::vector<std::string> files;
  std::string out_path, name_opt;
  bool as_json = false, count_only = false;
  GeneratorBounds pbounds{3, 1, 2};
  GeneratorBounds cbounds{3, 2, 2};
  std::string left_text, right_text;

  CLI::App* product_cmd =
      app.add_subcommand("product", "binary product of two computads");
  product_cmd->add_option("files", files, "two computad files")->required();
  product_cmd->add_option("-o,--out", out_path, "also write the product object to this file");
  product_cmd->add_option("--name", name_opt, "name for the product object");

  CLI::App* coeq_cmd = app.add_subcommand(
      "coeq", "coequalizer of a parallel pair of morphisms");
  coeq_cmd->add_option("files", files,
                       "computad files plus two morphism files (the pair)")
      ->required();
  coeq_cmd->add_option("-o,--out", out_path, "also write the quotient object to this file");
  coeq_cmd->add_option("--name", name_opt, "name for the quotient object");

  CLI::App* iso_cmd =
      app.add_subcommand("iso", "find an isomorphism between two computads");
  iso_cmd->add_option("files", files, "two computad files")->required();

  CLI::App* homs_cmd =
      app.add_subcommand("homs", "list all morphisms X -> Y");
  homs_cmd->add_option("files", files, "two computad files (domain, codomain)")
      ->required();
  homs_cmd->add_flag("--count", count_only, "print only the number of morphisms");

  CLI::App* checkp_cmd = app.add_subcommand(
      "check-product", "build product(A, B) and sweep its universal property");
  checkp_cmd->add_option("files", files, "two computad files")->required();
  checkp_cmd->add_option("--max2", pbounds.max_2cells,
                         "family bound: 2-cells (default 3)");
  checkp_cmd->add_option("--max3", pbounds.max_3cells,
                         "family bound: 3-cells (default 1)");
  checkp_cmd->add_option("--maxb", pbounds.max_boundary_size,
                         "family bound: boundary size (default 2)");
  checkp_cmd->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* checkc_cmd = app.add_subcommand(
      "check-coeq", "build the coequalizer of a pair and sweep its universal property");
  checkc_cmd->add_option("files", files,
                         "computad files plus two morphism files (the pair)")
      ->required();
  checkc_cmd->add_option("--max2", cbounds.max_2cells,
                         "family bound: 2-cells (default 3)");
  checkc_cmd->add_option("--max3", cbounds.max_3cells,
                         "family bound: 3-cells (default 2)");
  checkc_cmd->add_option("--maxb", cbounds.max_boundary_size,
                         "family bound: boundary size (default 2)");
  checkc_cmd->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* pairings_cmd = app.add_subcommand(
      "pairings", "enumerate pairings of two multisets given in '*' syntax");
  pairings_cmd->add_option("left", left_text, "left multiset, e.g. \"a1*a2\"")
      ->required();
  pairings_cmd->add_option("right", right_text, "right multiset, e.g. \"b1*b2\"")
      ->required();
  pairings_cmd->add_flag("--count", count_only, "print only the number of pairings");

  CLI::App* paper_cmd = app.add_subcommand(
      "paper", "run the nine-step non-preservation pipeline and print its report");
  paper_cmd->add_option("-o,--out", out_path,
                        "dump every constructed object and morphism into this directory");
  paper_cmd->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* paper_empty_cmd = app.add_subcommand(
      "paper-empty-target", "the same pipeline on the smaller empty-target variant");
  paper_empty_cmd->add_option("-o,--out", out_path,
                              "dump every constructed object and morphism into this directory");
  paper_empty_cmd->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "parse files and print well-formedness violations");
  validate_cmd->add_option("files", files, "computad and/or morphism files")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*product_cmd) {
      Inputs in = load_files(files);
      need_counts(in, 2, 0, "product");
      ProductResult prod =
          product(nth_computad(in, 0, "product"), nth_computad(in, 1, "product"),
                  name_opt);
      std::string out = print_computad(prod.object);
      if (verbose) out += product_provenance(prod);
      out += "\n" + print_morphism(prod.proj_left);
      out += "\n" + print_morphism(prod.proj_right);
      std::fputs(out.c_str(), stdout);
      if (!out_path.empty()) write_file(out_path, print_computad(prod.object));
      return 0;
    }
    if (*coeq_cmd) {
      Inputs in = load_files(files);
      if (in.morphisms.size() != 2)
        throw Error("coeq: expected exactly two morphism files, got " +
                    std::to_string(in.morphisms.size()));
      CoequalizerResult ce =
          coequalizer(in.morphisms[0], in.morphisms[1], name_opt);
      std::string out = print_computad(ce.object);
      if (verbose) out += coeq_provenance(ce);
      out += "\n" + print_morphism(ce.q);
      std::fputs(out.c_str(), stdout);
      if (!out_path.empty()) write_file(out_path, print_computad(ce.object));
      return 0;
    }
    if (*iso_cmd) {
      Inputs in = load_files(files);
      need_counts(in, 2, 0, "iso");
      std::optional<Morphism> witness = find_isomorphism(
          nth_computad(in, 0, "iso"), nth_computad(in, 1, "iso"), budget);
      if (!witness) {
        std::puts("NOT-ISOMORPHIC");
        return 1;
      }
      std::fputs(print_morphism(*witness).c_str(), stdout);
      return 0;
    }
    if (*homs_cmd) {
      Inputs in = load_files(files);
      need_counts(in, 2, 0, "homs");
      std::vector<Morphism> homs = enumerate_homs(
          nth_computad(in, 0, "homs"), nth_computad(in, 1, "homs"), budget);
      if (count_only) {
        std::printf("%zu\n", homs.size());
        return 0;
      }
      for (std::size_t i = 0; i < homs.size(); ++i) {
        if (i > 0) std::puts("");
        std::fputs(print_morphism(homs[i]).c_str(), stdout);
      }
      return 0;
    }
    if (*checkp_cmd) {
      Inputs in = load_files(files);
      need_counts(in, 2, 0, "check-product");
      const Computad& a = nth_computad(in, 0, "check-product");
      const Computad& b = nth_computad(in, 1, "check-product");
      UPReport report = check_product_up(a, b, product(a, b), pbounds, budget);
      if (as_json)
        std::printf("%s\n", json_of(report).dump(2).c_str());
      else
        std::fputs(format_report(report).c_str(), stdout);
      return report.passed() ? 0 : 1;
    }
    if (*checkc_cmd) {
      Inputs in = load_files(files);
      if (in.morphisms.size() != 2)
        throw Error("check-coeq: expected exactly two morphism files, got " +
                    std::to_string(in.morphisms.size()));
      CoequalizerResult ce = coequalizer(in.morphisms[0], in.morphisms[1]);
      UPReport report = check_coequalizer_up(in.morphisms[0], in.morphisms[1],
                                             ce, cbounds, budget);
      if (as_json)
        std::printf("%s\n", json_of(report).dump(2).c_str());
      else
        std::fputs(format_report(report).c_str(), stdout);
      return report.passed() ? 0 : 1;
    }
    if (*pairings_cmd) {
      LabelMultiset left = parse_multiset(left_text);
      LabelMultiset right = parse_multiset(right_text);
      std::vector<Pairing> all = enumerate_pairings(left, right);
      if (count_only) {
        std::printf("%zu\n", all.size());
        return 0;
      }
      for (const Pairing& p : all) std::printf("%s\n", pairing_text(p).c_str());
      return 0;
    }
    if (*paper_cmd) return run_pipeline_verb(false, as_json, out_path);
    if (*paper_empty_cmd) return run_pipeline_verb(true, as_json, out_path);
    if (*validate_cmd) {
      Inputs in = load_files(files);
      std::size_t next_computad = 0, next_morphism = 0;
      bool any = false;
      for (const auto& [path, kind] : in.order) {
        std::vector<std::string> violations =
            kind == FileKind::computad
                ? validate_computad(in.computads[next_computad++])
                : validate_morphism(in.morphisms[next_morphism++]);
        if (violations.empty()) {
          std::printf("%s: ok\n", path.c_str());
        } else {
          any = true;
          std::printf("%s:\n", path.c_str());
          for (const std::string& v : violations)
            std::printf("  %s\n", v.c_str());
        }
      }
      return any ? 1 : 0;
    }
  } catch (const SearchBudgetExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const OracleBudgetExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
