#include "clusterfold/fold.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace clusterfold {

SeedFolding::SeedFolding(FoldingData folding, std::vector<int> folded_word, bool order_check)
    : folding_(std::move(folding)), folded_word_(std::move(folded_word)),
      order_check_(order_check) {
  LiftedWord lifted = lift_word(folded_word_, *folding_);
  for (std::size_t t = 0; t < lifted.blocks.size(); ++t) {
    Block b;
    b.id = static_cast<int>(t) + 1;
    b.folded_letter = lifted.blocks[t].folded_letter;
    b.positions = lifted.blocks[t].positions;
    b.letters = lifted.blocks[t].letters;
    blocks_.push_back(std::move(b));
  }
  index_blocks();
  // sigma: within a block, position of orbit member m goes to the position
  // of perm(m).
  sigma_.assign(static_cast<std::size_t>(position_count()), 0);
  for (const auto& b : blocks_) {
    for (std::size_t k = 0; k < b.positions.size(); ++k) {
      int image_letter = folding_->perm_image(b.letters[k]);
      auto it = std::find(b.letters.begin(), b.letters.end(), image_letter);
      if (it == b.letters.end()) throw FoldError("internal: orbit member missing from block");
      sigma_[static_cast<std::size_t>(b.positions[k] - 1)] =
          b.positions[static_cast<std::size_t>(it - b.letters.begin())];
    }
  }
}

SeedFolding SeedFolding::from_blocks(std::vector<Block> blocks, std::vector<int> sigma,
                                     bool order_check) {
  SeedFolding sf;
  sf.blocks_ = std::move(blocks);
  sf.sigma_ = std::move(sigma);
  sf.order_check_ = order_check;
  for (auto& b : sf.blocks_) sf.folded_word_.push_back(b.folded_letter);
  sf.index_blocks();
  for (const auto& b : sf.blocks_)
    for (int p : b.positions)
      if (sf.block_of(sf.sigma_[static_cast<std::size_t>(p - 1)]) != b.id)
        throw FoldError("sigma does not preserve the blocks");
  return sf;
}

void SeedFolding::index_blocks() {
  int total = 0;
  for (const auto& b : blocks_) total += static_cast<int>(b.positions.size());
  block_of_.assign(static_cast<std::size_t>(total), 0);
  if (sigma_.empty()) sigma_.assign(static_cast<std::size_t>(total), 0);
  for (const auto& b : blocks_) {
    for (int p : b.positions) {
      if (p < 1 || p > total) throw FoldError("block position out of range");
      if (block_of_[static_cast<std::size_t>(p - 1)] != 0)
        throw FoldError("blocks do not partition the positions");
      block_of_[static_cast<std::size_t>(p - 1)] = b.id;
    }
  }
  for (int t : block_of_)
    if (t == 0) throw FoldError("blocks do not partition the positions");
}

int SeedFolding::block_of(int position) const {
  if (position < 1 || position > position_count())
    throw FoldError("position out of range: " + std::to_string(position));
  return block_of_[static_cast<std::size_t>(position - 1)];
}

const SeedFolding::Block& SeedFolding::block(int block_id) const {
  if (block_id < 1 || block_id > static_cast<int>(blocks_.size()))
    throw FoldError("unknown block id: " + std::to_string(block_id));
  return blocks_[static_cast<std::size_t>(block_id - 1)];
}

std::vector<long long> SeedFolding::folded_symmetrizer() const {
  long long l = 1;
  for (const auto& b : blocks_) l = std::lcm(l, static_cast<long long>(b.positions.size()));
  std::vector<long long> d;
  d.reserve(blocks_.size());
  for (const auto& b : blocks_) d.push_back(l / static_cast<long long>(b.positions.size()));
  return d;
}

Seed SeedFolding::initial_unfolded_seed() const {
  if (!folding_) throw FoldError("folding data not available");
  std::vector<int> letters;
  for (const auto& b : blocks_) letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return initial_seed(folding_->source, letters);
}

void SeedFolding::require_invariant(const Seed& s) const {
  if (static_cast<int>(s.size()) != position_count())
    throw FoldError("seed size does not match the block structure");
  if (!s.is_invariant(sigma_)) throw NonInvariantSeed("seed is not automorphism-invariant");
}

Seed SeedFolding::orbit_mutate(const Seed& s, int block_id) const {
  require_invariant(s);
  const Block& b = block(block_id);
  for (int p : b.positions)
    if (!s.is_mutable(p))
      throw FrozenBlockError("block " + std::to_string(block_id) + " is frozen");
  // Admissibility shadow: the exchange matrix vanishes inside a block.
  for (int p : b.positions)
    for (int q : b.positions)
      if (p != q && s.B()[static_cast<std::size_t>(s.index_of(p))]
                         [static_cast<std::size_t>(s.index_of(q))] != 0)
        throw FoldError("internal: block positions are coupled in B");

  Seed result = s;
  for (int p : b.positions) result = result.mutate(p);
  if (order_check_ && b.positions.size() >= 2) {
    std::vector<int> other = b.positions;
    std::swap(other[0], other[1]);
    Seed alt = s;
    for (int p : other) alt = alt.mutate(p);
    if (!alt.equivalent(result))
      throw FoldError("internal: orbit mutation depends on the order");
  }
  if (!result.is_invariant(sigma_))
    throw FoldError("internal: orbit mutation broke invariance");
  return result;
}

std::vector<std::string> SeedFolding::folded_vars() const {
  std::vector<std::string> vars(blocks_.size());
  for (std::size_t t = 0; t < blocks_.size(); ++t) vars[t] = "y" + std::to_string(t + 1);
  return vars;
}

LaurentPoly SeedFolding::project_variable(const LaurentPoly& p) const {
  if (static_cast<int>(p.vars().size()) != position_count())
    throw FoldError("polynomial is not over the unfolded position variables");
  std::vector<std::string> yvars = folded_vars();
  std::map<std::string, LaurentPoly> images;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    int blk = block_of(static_cast<int>(i) + 1);
    images.emplace(p.vars()[i],
                   LaurentPoly::variable(yvars, yvars[static_cast<std::size_t>(blk - 1)]));
  }
  return p.substitute(images, yvars);
}

Seed SeedFolding::fold_seed(const Seed& s) const {
  require_invariant(s);
  std::size_t m = blocks_.size();
  std::vector<std::string> yvars = folded_vars();
  std::vector<SeedVertex> verts(m);
  for (std::size_t t = 0; t < m; ++t) {
    const Block& b = blocks_[t];
    int rep = *std::min_element(b.positions.begin(), b.positions.end());
    bool frozen = s.vertex(rep).frozen;
    for (int p : b.positions)
      if (s.vertex(p).frozen != frozen)
        throw FoldError("internal: block mixes frozen and mutable positions");
    verts[t].id = b.id;
    verts[t].frozen = frozen;
    verts[t].variable = project_variable(s.vertex(rep).variable);
  }
  IntMatrix fb(m, std::vector<long long>(m, 0));
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t u = 0; u < m; ++u) {
      if (t == u) continue;
      const Block& bt = blocks_[t];
      const Block& bu = blocks_[u];
      long long sum = 0;
      bool first = true;
      for (int c : bu.positions) {
        long long s_c = 0;
        for (int p : bt.positions)
          s_c += s.B()[static_cast<std::size_t>(s.index_of(p))]
                      [static_cast<std::size_t>(s.index_of(c))];
        if (first) {
          sum = s_c;
          first = false;
        } else if (s_c != sum) {
          throw FoldError("internal: folded entry depends on the representative");
        }
      }
      fb[t][u] = sum;
    }
  }
  return Seed(std::move(verts), std::move(fb), folded_symmetrizer());
}

bool SeedFolding::check_consistency(const Seed& s, const std::vector<int>& block_sequence) const {
  Seed up = s;
  for (int blk : block_sequence) up = orbit_mutate(up, blk);
  Seed lhs = fold_seed(up);

  Seed rhs = fold_seed(s);
  for (int blk : block_sequence) rhs = rhs.mutate(blk);

  return lhs.equivalent(rhs);
}

}  // namespace clusterfold
