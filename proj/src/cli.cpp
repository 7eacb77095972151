#include "clusterfold/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace clusterfold {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list: '" + s + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace

TypeContext make_context(const std::string& type_str,
                         const std::optional<std::vector<int>>& word, bool order_check) {
  TypeLabel type = TypeLabel::parse(type_str);
  FoldingData unfolding = find_unfolding(type);
  CartanMatrix folded = fold_doubleprime(unfolding);
  std::vector<int> w = word ? *word : RootSystem(folded).longest_word();
  {
    RootSystem rs(folded);
    if (!rs.is_reduced(w)) throw WeylError("word is not reduced");
    if (w.size() != rs.positive_count())
      throw WeylError("word is not a reduced word of the longest element");
  }
  SeedFolding sf(unfolding, w, order_check);
  Seed unfolded_seed = sf.initial_unfolded_seed();
  Seed folded_seed = sf.fold_seed(unfolded_seed);
  return TypeContext{type,
                     std::move(unfolding),
                     std::move(folded),
                     std::move(w),
                     std::move(sf),
                     std::move(unfolded_seed),
                     std::move(folded_seed)};
}

std::string fold_report(const TypeContext& ctx) {
  Json j;
  j["type"] = ctx.type.str();
  j["unfolding"] = ctx.unfolding.to_json();
  j["C_prime"] = fold_prime(ctx.unfolding).to_json();
  j["C_doubleprime"] = ctx.folded_cartan.to_json();
  return j.dump(2) + "\n";
}

std::string seed_report(const TypeContext& ctx) {
  Json j;
  j["type"] = ctx.type.str();
  j["word"] = ctx.folded_word;
  if (ctx.trivial()) {
    j["seed"] = ctx.unfolded_seed.to_json();
  } else {
    Json blocks = Json::array();
    for (const auto& b : ctx.seed_folding.blocks()) {
      Json jb;
      jb["id"] = b.id;
      jb["folded_letter"] = b.folded_letter;
      jb["positions"] = b.positions;
      jb["letters"] = b.letters;
      blocks.push_back(std::move(jb));
    }
    std::vector<int> letters;
    for (const auto& b : ctx.seed_folding.blocks())
      letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    j["lifted_word"] = letters;
    j["blocks"] = std::move(blocks);
    j["unfolded_seed"] = ctx.unfolded_seed.to_json();
    j["seed"] = ctx.folded_seed.to_json();
  }
  return j.dump(2) + "\n";
}

std::string explore_report(const TypeContext& ctx, bool unfolded, std::size_t cap,
                           unsigned threads, std::string* dot_out) {
  const Seed& start = (ctx.trivial() || unfolded) ? ctx.unfolded_seed : ctx.folded_seed;
  ExchangeGraph g = enumerate_ordinary(start, cap, threads);
  if (dot_out) *dot_out = to_dot(g);
  Json j;
  j["type"] = ctx.type.str();
  j["mode"] = (ctx.trivial() || unfolded) ? "unfolded" : "folded";
  j["nodes"] = g.nodes.size();
  j["edges"] = g.undirected_edge_count();
  j["complete"] = g.complete;
  Json fps = Json::array();
  for (const auto& k : g.keys) fps.push_back(fingerprint64(k));
  j["fingerprints"] = std::move(fps);
  return j.dump(2) + "\n";
}

std::string check_report(const TypeContext& ctx, int degree, bool* independent) {
  const Seed& start = ctx.trivial() ? ctx.unfolded_seed : ctx.folded_seed;
  ExchangeGraph g = enumerate_ordinary(start);
  IndependenceReport rep = check_independence(g, degree);
  if (independent) *independent = rep.independent;
  Json j;
  j["type"] = ctx.type.str();
  j["clusters"] = g.nodes.size();
  j["report"] = rep.to_json();
  return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for finite-type cluster structures and their foldings"};
  app.name("clusterfold");
  app.require_subcommand(1);

  std::string type_str, word_str, sequence_str, graph_file;
  std::size_t cap = kDefaultNodeCap;
  int degree = 3;
  bool unfolded = false;

  CLI::App* cfold = app.add_subcommand(
      "fold", "print the unfolding of a type with both folded Cartan matrices");
  cfold->add_option("--type", type_str, "Dynkin type, e.g. A3, C2, G2")->required();

  CLI::App* cseed = app.add_subcommand("seed", "print the initial seed attached to a word");
  cseed->add_option("--type", type_str, "Dynkin type")->required();
  cseed->add_option("--word", word_str,
                    "comma-separated reduced word for the longest element; orbit indices "
                    "for non-simply-laced types (default: greedy longest word)");

  CLI::App* cmutate = app.add_subcommand("mutate", "apply a mutation sequence to the seed");
  cmutate->add_option("--type", type_str, "Dynkin type")->required();
  cmutate->add_option("--word", word_str, "initial word (see seed)");
  cmutate->add_option("--sequence", sequence_str,
                      "comma-separated vertex ids (block ids for non-simply-laced types)")
      ->required();

  CLI::App* cexplore = app.add_subcommand("explore", "enumerate the exchange graph");
  cexplore->add_option("--type", type_str, "Dynkin type")->required();
  cexplore->add_option("--word", word_str, "initial word (see seed)");
  cexplore->add_flag("--unfolded", unfolded, "enumerate the simply-laced cover instead");
  cexplore->add_option("--max-seeds", cap, "node cap (default 1000000)");
  cexplore->add_option("--emit-graph", graph_file, "write the graph as DOT to this file");

  CLI::App* ccheck = app.add_subcommand("check", "verify cluster-monomial independence");
  ccheck->add_option("--type", type_str, "Dynkin type")->required();
  ccheck->add_option("--word", word_str, "initial word (see seed)");
  ccheck->add_option("--degree", degree, "monomial degree bound (default 3)");

  std::vector<const char*> argv;
  argv.push_back("clusterfold");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<std::vector<int>> word;
    if (!word_str.empty()) word = parse_int_list(word_str);

    if (cfold->parsed()) {
      out << fold_report(make_context(type_str, word));
      return 0;
    }
    if (cseed->parsed()) {
      out << seed_report(make_context(type_str, word));
      return 0;
    }
    if (cmutate->parsed()) {
      TypeContext ctx = make_context(type_str, word);
      Seed s = ctx.trivial() ? ctx.unfolded_seed : ctx.folded_seed;
      for (int id : parse_int_list(sequence_str)) s = s.mutate(id);
      out << s.to_json().dump(2) << "\n";
      return 0;
    }
    if (cexplore->parsed()) {
      TypeContext ctx = make_context(type_str, word);
      std::string dot;
      std::string report = explore_report(ctx, unfolded, cap, 0, &dot);
      if (!graph_file.empty()) {
        std::ofstream f(graph_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + graph_file);
        f << dot;
      }
      out << report;
      return 0;
    }
    if (ccheck->parsed()) {
      TypeContext ctx = make_context(type_str, word);
      bool independent = false;
      out << check_report(ctx, degree, &independent);
      return independent ? 0 : 1;
    }
  } catch (const CartanError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const WeylError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FrozenVertexError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SeedError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FoldError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace clusterfold
