#ifndef CLUSTERFOLD_WEYL_HPP
#define CLUSTERFOLD_WEYL_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "clusterfold/cartan.hpp"

namespace clusterfold {

struct WeylError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A root in simple-root coordinates. Nonzero, all coordinates of one sign.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool positive() const;
  bool operator==(const Root& o) const { return coords == o.coords; }
  bool operator<(const Root& o) const;  // height then lex
};

/// Finite root system with Weyl-group elements represented by their
/// permutation action on the full root list. Root indices 0..N-1 are the
/// positive roots (height-then-lex order), N..2N-1 their negatives.
class RootSystem {
 public:
  explicit RootSystem(const CartanMatrix& C);

  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positives() const { return positives_; }
  std::size_t positive_count() const { return positives_.size(); }

  /// Permutation table of the simple reflection at the given vertex label.
  const std::vector<int>& reflection(int label) const;
  /// Action of the word s_{w1} s_{w2} ... s_{wk} on root indices.
  std::vector<int> word_action(const std::vector<int>& word) const;
  /// Number of positive roots sent negative.
  std::size_t inversions(const std::vector<int>& action) const;

  bool is_reduced(const std::vector<int>& word) const;
  /// Deterministic reduced word for the longest element: greedy ascent,
  /// always taking the smallest vertex label that lengthens the element.
  std::vector<int> longest_word() const;

  int simple_root_index(int label) const;

 private:
  CartanMatrix cartan_;
  std::vector<Root> positives_;
  std::map<std::vector<int>, int> index_;           // coords -> root index
  std::map<int, std::vector<int>> reflections_;     // label -> permutation
  Root reflect(const Root& r, int label_pos) const;
};

std::vector<Root> positive_roots(const CartanMatrix& C);
bool is_reduced(const CartanMatrix& C, const std::vector<int>& word);
std::vector<int> longest_word(const CartanMatrix& C);

/// A word over a simply-laced source diagram obtained by expanding each
/// folded letter into the full orbit, one block per folded letter.
struct LiftedWord {
  struct Block {
    int folded_letter = 0;            // orbit index in the folding
    std::vector<int> positions;       // 1-based, consecutive
    std::vector<int> letters;         // orbit members, canonical order
  };
  std::vector<int> letters;           // concatenation of block letters
  std::vector<Block> blocks;
};

/// Expands a reduced word over fold_doubleprime(f) into the source diagram.
/// The result is checked to be reduced of length sum(#orbit) there.
LiftedWord lift_word(const std::vector<int>& word, const FoldingData& f);

}  // namespace clusterfold

#endif
