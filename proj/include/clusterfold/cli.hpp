#ifndef CLUSTERFOLD_CLI_HPP
#define CLUSTERFOLD_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clusterfold/explorer.hpp"

namespace clusterfold {

/// Everything the CLI derives from a type string: the unfolding, the folded
/// Cartan matrix, the (default or user) folded word, the lifted seed and the
/// folded seed. Words over non-simply-laced types use orbit indices.
struct TypeContext {
  TypeLabel type{'A', 1};
  FoldingData unfolding;
  CartanMatrix folded_cartan;
  std::vector<int> folded_word;
  SeedFolding seed_folding;
  Seed unfolded_seed;
  Seed folded_seed;

  bool trivial() const { return type.simply_laced(); }
};

TypeContext make_context(const std::string& type_str,
                         const std::optional<std::vector<int>>& word = std::nullopt,
                         bool order_check = false);

/// Deterministic report bodies shared by the CLI and the test suites.
std::string fold_report(const TypeContext& ctx);
std::string seed_report(const TypeContext& ctx);
std::string explore_report(const TypeContext& ctx, bool unfolded, std::size_t cap,
                           unsigned threads, std::string* dot_out = nullptr);
std::string check_report(const TypeContext& ctx, int degree, bool* independent = nullptr);

/// Entry point behind the clusterfold binary. Exit codes: 0 success,
/// 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterfold

#endif
