#ifndef CLUSTERFOLD_CARTAN_HPP
#define CLUSTERFOLD_CARTAN_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterfold/rational.hpp"

namespace clusterfold {

using Json = nlohmann::ordered_json;

struct CartanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite Dynkin type: family letter A..G plus rank.
struct TypeLabel {
  char family = 'A';
  int rank = 1;

  TypeLabel() = default;
  TypeLabel(char f, int r);

  /// Parses strings like "A3", "c2", "G2". Case-insensitive family letter.
  static TypeLabel parse(const std::string& s);
  std::string str() const;
  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
  bool operator==(const TypeLabel& o) const { return family == o.family && rank == o.rank; }
};

/// Integer Cartan matrix of finite type, indexed by an ordered label list.
/// Construction checks symmetrizability and positivity of all leading
/// principal minors of the symmetrized matrix.
class CartanMatrix {
 public:
  CartanMatrix(std::vector<int> labels, std::vector<std::vector<int>> entries);
  static CartanMatrix from_type(const TypeLabel& t);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  int position_of(int label) const;
  int entry(int label_i, int label_j) const;
  bool simply_laced() const;
  /// Minimal positive integer diagonal D with D*C symmetric.
  const std::vector<long long>& symmetrizer() const { return symmetrizer_; }

  bool operator==(const CartanMatrix& o) const {
    return labels_ == o.labels_ && entries_ == o.entries_;
  }

  Json to_json() const;
  static CartanMatrix from_json(const Json& j);

 private:
  std::vector<int> labels_;
  std::vector<std::vector<int>> entries_;
  std::vector<long long> symmetrizer_;
};

/// An admissible diagram automorphism of a simply-laced Cartan matrix,
/// together with its orbit partition. Orbits are ordered by minimal member,
/// members ascending; that ordering fixes all downstream index conventions.
struct FoldingData {
  CartanMatrix source;
  std::vector<int> perm;                  // image label of labels()[i]
  std::vector<std::vector<int>> orbits;   // canonical order
  int order = 1;                          // lcm of cycle lengths

  FoldingData(CartanMatrix src, std::vector<int> perm_images);
  static FoldingData identity(CartanMatrix src);

  int orbit_count() const { return static_cast<int>(orbits.size()); }
  /// 1-based index of the orbit containing the given source label.
  int orbit_of(int label) const;
  int perm_image(int label) const;

  Json to_json() const;
};

/// True iff perm is a diagram automorphism of C whose orbits contain no
/// adjacent pair. C must be simply-laced; perm must be a bijection of its
/// label set (otherwise CartanError).
bool check_admissible(const CartanMatrix& C, const std::vector<int>& perm_images);

/// Folded matrix C'_{ij} = (1/#i) * sum of C over the orbit pair.
CartanMatrix fold_prime(const FoldingData& f);
/// Folded matrix C''_{ij} = (1/#j) * sum of C over the orbit pair.
CartanMatrix fold_doubleprime(const FoldingData& f);

/// All label permutations preserving the matrix, sorted lexicographically
/// by image tuple (identity first).
std::vector<std::vector<int>> diagram_automorphisms(const CartanMatrix& C);

/// True iff some relabeling carries a onto b exactly.
bool diagram_isomorphic(const CartanMatrix& a, const CartanMatrix& b);

/// Smallest simply-laced cover: a folding f with fold_doubleprime(f)
/// isomorphic to cartan(t). Deterministic: minimal source rank, then family
/// letter, then lexicographically smallest automorphism image tuple.
/// For simply-laced t returns the identity folding.
FoldingData find_unfolding(const TypeLabel& t);

}  // namespace clusterfold

#endif
