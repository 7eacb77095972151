#include "clusterfold/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace clusterfold {

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::positive() const {
  for (int c : coords)
    if (c > 0) return true;
  return false;
}

bool Root::operator<(const Root& o) const {
  int ha = height(), hb = o.height();
  if (ha != hb) return ha < hb;
  return coords < o.coords;
}

Root RootSystem::reflect(const Root& r, int label_pos) const {
  // s_i: only coordinate i moves, by the pairing against the coroot.
  const auto& e = cartan_.entries();
  long pairing = 0;
  for (std::size_t j = 0; j < r.coords.size(); ++j)
    pairing += static_cast<long>(e[static_cast<std::size_t>(label_pos)][j]) * r.coords[j];
  Root out = r;
  out.coords[static_cast<std::size_t>(label_pos)] -= static_cast<int>(pairing);
  return out;
}

RootSystem::RootSystem(const CartanMatrix& C) : cartan_(C) {
  std::size_t n = C.labels().size();
  std::set<std::vector<int>> all;
  std::vector<Root> work;
  for (std::size_t i = 0; i < n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    all.insert(r.coords);
    work.push_back(r);
  }
  while (!work.empty()) {
    Root r = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Root s = reflect(r, static_cast<int>(i));
      if (all.insert(s.coords).second) work.push_back(s);
    }
  }
  for (const auto& c : all) {
    Root r{c};
    if (r.positive()) positives_.push_back(r);
  }
  std::sort(positives_.begin(), positives_.end());
  std::size_t N = positives_.size();
  for (std::size_t i = 0; i < N; ++i) {
    index_[positives_[i].coords] = static_cast<int>(i);
    std::vector<int> neg(positives_[i].coords.size());
    for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -positives_[i].coords[k];
    index_[neg] = static_cast<int>(N + i);
  }
  auto root_at = [&](std::size_t idx) {
    if (idx < N) return positives_[idx];
    Root r = positives_[idx - N];
    for (auto& c : r.coords) c = -c;
    return r;
  };
  for (std::size_t li = 0; li < n; ++li) {
    std::vector<int> perm(2 * N);
    for (std::size_t idx = 0; idx < 2 * N; ++idx)
      perm[idx] = index_.at(reflect(root_at(idx), static_cast<int>(li)).coords);
    reflections_[C.labels()[li]] = std::move(perm);
  }
}

const std::vector<int>& RootSystem::reflection(int label) const {
  auto it = reflections_.find(label);
  if (it == reflections_.end())
    throw WeylError("unknown vertex identifier: " + std::to_string(label));
  return it->second;
}

std::vector<int> RootSystem::word_action(const std::vector<int>& word) const {
  // w = s_{w1} s_{w2} ... s_{wk} acts by w(a) = s_{w1}(s_{w2}(...s_{wk}(a))).
  std::size_t sz = 2 * positives_.size();
  std::vector<int> out(sz);
  std::iota(out.begin(), out.end(), 0);
  for (std::size_t t = word.size(); t-- > 0;) {
    const std::vector<int>& r = reflection(word[t]);
    for (auto& v : out) v = r[static_cast<std::size_t>(v)];
  }
  return out;
}

std::size_t RootSystem::inversions(const std::vector<int>& action) const {
  std::size_t N = positives_.size(), count = 0;
  for (std::size_t i = 0; i < N; ++i)
    if (action[i] >= static_cast<int>(N)) ++count;
  return count;
}

bool RootSystem::is_reduced(const std::vector<int>& word) const {
  return inversions(word_action(word)) == word.size();
}

int RootSystem::simple_root_index(int label) const {
  std::size_t pos = static_cast<std::size_t>(cartan_.position_of(label));
  std::vector<int> coords(cartan_.labels().size(), 0);
  coords[pos] = 1;
  return index_.at(coords);
}

std::vector<int> RootSystem::longest_word() const {
  std::size_t N = positives_.size();
  std::vector<int> act(2 * N);
  std::iota(act.begin(), act.end(), 0);
  std::vector<int> word;
  while (true) {
    bool advanced = false;
    for (int label : cartan_.labels()) {
      if (act[static_cast<std::size_t>(simple_root_index(label))] < static_cast<int>(N)) {
        // w(alpha_label) > 0, so w s_label is longer; append on the right.
        const std::vector<int>& r = reflection(label);
        std::vector<int> next(2 * N);
        for (std::size_t idx = 0; idx < 2 * N; ++idx)
          next[idx] = act[static_cast<std::size_t>(r[idx])];
        act = std::move(next);
        word.push_back(label);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  if (inversions(act) != N) throw WeylError("longest-element search failed");
  return word;
}

std::vector<Root> positive_roots(const CartanMatrix& C) { return RootSystem(C).positives(); }

bool is_reduced(const CartanMatrix& C, const std::vector<int>& word) {
  return RootSystem(C).is_reduced(word);
}

std::vector<int> longest_word(const CartanMatrix& C) { return RootSystem(C).longest_word(); }

LiftedWord lift_word(const std::vector<int>& word, const FoldingData& f) {
  CartanMatrix folded = fold_doubleprime(f);
  for (int letter : word)
    if (letter < 1 || letter > f.orbit_count())
      throw WeylError("letter is not an orbit of the folding: " + std::to_string(letter));
  if (!RootSystem(folded).is_reduced(word)) throw WeylError("word is not reduced");

  LiftedWord out;
  int pos = 1;
  for (int letter : word) {
    LiftedWord::Block b;
    b.folded_letter = letter;
    b.letters = f.orbits[static_cast<std::size_t>(letter - 1)];
    for (std::size_t k = 0; k < b.letters.size(); ++k) b.positions.push_back(pos++);
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    out.blocks.push_back(std::move(b));
  }
  if (!RootSystem(f.source).is_reduced(out.letters))
    throw WeylError("internal: lifted word is not reduced in the source group");
  return out;
}

}  // namespace clusterfold
