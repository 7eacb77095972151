#ifndef CLUSTERFOLD_SEED_HPP
#define CLUSTERFOLD_SEED_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterfold/cartan.hpp"
#include "clusterfold/laurent.hpp"
#include "clusterfold/weyl.hpp"

namespace clusterfold {

struct SeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FrozenVertexError : SeedError {
  using SeedError::SeedError;
};
struct InternalLaurentViolation : SeedError {
  using SeedError::SeedError;
};
struct CanonicalCollision : SeedError {
  using SeedError::SeedError;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// A positive integer diagonal d with d_i B_ij = -d_j B_ji, minimal entries.
/// Throws SeedError if B is not skew-symmetrizable.
std::vector<long long> skew_symmetrizer(const IntMatrix& B);

struct SeedVertex {
  int id = 0;
  bool frozen = false;
  LaurentPoly variable;
};

/// An exchange matrix with a frozen/mutable vertex partition and one Laurent
/// polynomial per vertex. Immutable; mutation returns a new value.
class Seed {
 public:
  Seed(std::vector<SeedVertex> vertices, IntMatrix B,
       std::optional<std::vector<long long>> symmetrizer = std::nullopt);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<SeedVertex>& vertices() const { return vertices_; }
  const IntMatrix& B() const { return B_; }
  const std::optional<std::vector<long long>>& symmetrizer() const { return symmetrizer_; }

  int index_of(int id) const;
  const SeedVertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(index_of(id))]; }
  bool is_mutable(int id) const { return !vertex(id).frozen; }
  std::vector<int> mutable_ids() const;

  /// Fomin-Zelevinsky mutation at a mutable vertex. The exchange binomial is
  /// read off column k of B; an inexact division is an internal failure.
  Seed mutate(int id) const;

  /// Relabels vertices through sigma (sigma[pos] = image id of vertices()[pos])
  /// and pushes the induced generator relabeling through every variable.
  Seed apply_automorphism(const std::vector<int>& sigma) const;
  bool is_invariant(const std::vector<int>& sigma) const;

  /// Deterministic key of the canonical form: vertices sorted by
  /// (frozen, variable), B permuted along. Ids do not participate.
  /// Throws CanonicalCollision if two vertices carry equal variables.
  std::string canonical_key() const;
  bool equivalent(const Seed& o) const { return canonical_key() == o.canonical_key(); }

  Json to_json() const;
  static Seed from_json(const Json& j);

 private:
  std::vector<SeedVertex> vertices_;
  IntMatrix B_;
  std::optional<std::vector<long long>> symmetrizer_;
};

/// Position bookkeeping for the seed attached to a word: the successor of a
/// position is the next occurrence of the same letter; positions without one
/// are frozen.
struct WordSeedLayout {
  std::vector<int> letters;
  std::vector<int> successor;  // successor[p-1], 0 when none
  std::vector<bool> frozen;

  static WordSeedLayout from_letters(const std::vector<int>& letters);
};

/// Initial seed attached to a reduced word for the longest element of a
/// simply-laced diagram: one vertex per position, generators x1..xk, frozen
/// at last occurrences, exchange matrix from the successor/diagram rule.
Seed initial_seed(const CartanMatrix& C, const std::vector<int>& word);

}  // namespace clusterfold

#endif
