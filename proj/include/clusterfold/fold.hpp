#ifndef CLUSTERFOLD_FOLD_HPP
#define CLUSTERFOLD_FOLD_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "clusterfold/seed.hpp"

namespace clusterfold {

struct FoldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonInvariantSeed : FoldError {
  using FoldError::FoldError;
};
struct FrozenBlockError : FoldError {
  using FoldError::FoldError;
};

/// Block structure tying an unfolded word seed to a diagram automorphism:
/// positions are grouped into orbit blocks and sigma permutes positions
/// within each block the way the automorphism permutes the orbit.
///
/// Orbit mutation and folding are only defined on sigma-invariant seeds;
/// non-invariant input raises NonInvariantSeed rather than being repaired.
class SeedFolding {
 public:
  struct Block {
    int id = 0;                   // 1-based block index = folded vertex id
    int folded_letter = 0;
    std::vector<int> positions;   // 1-based, ascending
    std::vector<int> letters;     // orbit members aligned with positions
  };

  /// Main constructor: expand a reduced folded word through the folding.
  SeedFolding(FoldingData folding, std::vector<int> folded_word, bool order_check = false);
  /// Direct block structure, for seeds not attached to a word.
  static SeedFolding from_blocks(std::vector<Block> blocks, std::vector<int> sigma,
                                 bool order_check = false);

  const std::optional<FoldingData>& folding() const { return folding_; }
  const std::vector<int>& folded_word() const { return folded_word_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<int>& sigma() const { return sigma_; }
  int block_of(int position) const;
  int position_count() const { return static_cast<int>(sigma_.size()); }

  bool order_check() const { return order_check_; }
  void set_order_check(bool v) { order_check_ = v; }

  /// d_[b] = lcm(block sizes)/#[b]; skew-symmetrizes every folded matrix.
  std::vector<long long> folded_symmetrizer() const;

  /// Initial unfolded seed of the lifted word (word constructor only).
  Seed initial_unfolded_seed() const;

  /// Product of ordinary mutations over one block, canonical position order.
  /// Requires an invariant seed and a fully mutable block; the result is
  /// invariant again and independent of the order within the block (checked
  /// against one transposed order when order_check is on).
  Seed orbit_mutate(const Seed& s, int block_id) const;

  /// One folded vertex per block: variables specialized along the orbits,
  /// matrix rows summed over blocks against a fixed representative column.
  Seed fold_seed(const Seed& s) const;

  /// Specialization x_p -> y_{block(p)} into the folded variables.
  LaurentPoly project_variable(const LaurentPoly& p) const;

  /// Folding commutes with mutation: fold(orbit-mutations) == mutations(fold).
  bool check_consistency(const Seed& s, const std::vector<int>& block_sequence) const;

 private:
  SeedFolding() = default;
  std::optional<FoldingData> folding_;
  std::vector<int> folded_word_;
  std::vector<Block> blocks_;
  std::vector<int> sigma_;     // sigma_[p-1] = image position of p
  std::vector<int> block_of_;  // block_of_[p-1]
  bool order_check_ = false;

  void index_blocks();
  const Block& block(int block_id) const;
  void require_invariant(const Seed& s) const;
  std::vector<std::string> folded_vars() const;
};

}  // namespace clusterfold

#endif
