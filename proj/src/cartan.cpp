#include "clusterfold/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace clusterfold {

namespace {

bool valid_type(char f, int r) {
  switch (f) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

// Exact determinant of an integer matrix (fraction-free elimination).
Integer int_det(std::vector<std::vector<Integer>> m) {
  std::size_t n = m.size();
  Integer prev(1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Integer(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = m[c][c] * m[i][j] - m[i][c] * m[c][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

std::vector<long long> compute_symmetrizer(const std::vector<std::vector<int>>& a) {
  std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    d[start] = 1;
    seen[start] = true;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rational want = d[i] * a[i][j] / a[j][i];
        if (!seen[j]) {
          d[j] = want;
          seen[j] = true;
          stack.push_back(j);
        } else if (d[j] != want) {
          throw CartanError("matrix is not symmetrizable");
        }
      }
    }
  }
  Integer lcm_den(1);
  for (const auto& q : d)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Integer> nums(n);
  Integer g(0);
  for (std::size_t i = 0; i < n; ++i) {
    nums[i] = d[i].get_num() * (lcm_den / d[i].get_den());
    if (nums[i] <= 0) throw CartanError("matrix is not symmetrizable");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  std::vector<long long> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer v = nums[i] / g;
    if (!v.fits_slong_p()) throw CartanError("symmetrizer overflow");
    out[i] = v.get_si();
  }
  return out;
}

// Backtracking search for a relabeling carrying a onto b; enumerates all
// of them when collect_all is set (used for automorphisms with a == b).
void iso_search(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                std::vector<int>& image, std::vector<bool>& used, std::size_t pos,
                std::vector<std::vector<int>>* all, bool* found) {
  std::size_t n = a.size();
  if (pos == n) {
    if (all)
      all->push_back(image);
    else
      *found = true;
    return;
  }
  for (std::size_t cand = 0; cand < n && !(found && *found); ++cand) {
    if (used[cand]) continue;
    if (b[cand][cand] != a[pos][pos]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < pos && ok; ++prev) {
      std::size_t ip = static_cast<std::size_t>(image[prev]);
      ok = b[cand][ip] == a[pos][prev] && b[ip][cand] == a[prev][pos];
    }
    if (!ok) continue;
    image[pos] = static_cast<int>(cand);
    used[cand] = true;
    iso_search(a, b, image, used, pos + 1, all, found);
    used[cand] = false;
  }
}

}  // namespace

TypeLabel::TypeLabel(char f, int r) : family(static_cast<char>(std::toupper(f))), rank(r) {
  if (!valid_type(family, rank))
    throw CartanError("invalid Dynkin type: " + std::string(1, family) + std::to_string(rank));
}

TypeLabel TypeLabel::parse(const std::string& s) {
  if (s.size() < 2) throw CartanError("invalid type label: '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw CartanError("invalid type label: '" + s + "'");
  return TypeLabel(f, std::stoi(s.substr(1)));
}

std::string TypeLabel::str() const { return std::string(1, family) + std::to_string(rank); }

CartanMatrix::CartanMatrix(std::vector<int> labels, std::vector<std::vector<int>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  std::size_t n = labels_.size();
  if (n == 0) throw CartanError("empty Cartan matrix");
  if (std::set<int>(labels_.begin(), labels_.end()).size() != n)
    throw CartanError("duplicate labels");
  if (entries_.size() != n) throw CartanError("entry matrix is not square");
  for (const auto& row : entries_)
    if (row.size() != n) throw CartanError("entry matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 2) throw CartanError("diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0) throw CartanError("positive off-diagonal entry");
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
        throw CartanError("zero pattern is not symmetric");
    }
  }
  symmetrizer_ = compute_symmetrizer(entries_);
  // Finite type: the symmetrized matrix must be positive definite, checked
  // through its leading principal minors.
  std::vector<std::vector<Integer>> s(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s[i][j] = Integer(static_cast<long>(symmetrizer_[i])) * entries_[i][j];
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Integer>> lead(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = s[i][j];
    if (int_det(std::move(lead)) <= 0) throw CartanError("matrix is not of finite type");
  }
}

CartanMatrix CartanMatrix::from_type(const TypeLabel& t) {
  int n = t.rank;
  std::vector<std::vector<int>> e(static_cast<std::size_t>(n), std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 2;
  auto bond = [&](int i, int j) { e[i - 1][j - 1] = -1, e[j - 1][i - 1] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      e[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      e[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 1; i < n - 2; ++i) bond(i, i + 1);
      bond(n - 2, n - 1);
      bond(n - 2, n);
      break;
    case 'E':
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      e[2][1] = -2;
      break;
    case 'G':
      bond(1, 2);
      e[1][0] = -3;
      break;
    default:
      throw CartanError("invalid family");
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return CartanMatrix(std::move(labels), std::move(e));
}

int CartanMatrix::position_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw CartanError("unknown vertex identifier: " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

int CartanMatrix::entry(int label_i, int label_j) const {
  return entries_[static_cast<std::size_t>(position_of(label_i))]
                 [static_cast<std::size_t>(position_of(label_j))];
}

bool CartanMatrix::simply_laced() const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = 0; j < labels_.size(); ++j)
      if (i != j && entries_[i][j] != 0 && entries_[i][j] != -1) return false;
  return true;
}

Json CartanMatrix::to_json() const {
  Json j;
  j["labels"] = labels_;
  j["entries"] = entries_;
  return j;
}

CartanMatrix CartanMatrix::from_json(const Json& j) {
  return CartanMatrix(j.at("labels").get<std::vector<int>>(),
                      j.at("entries").get<std::vector<std::vector<int>>>());
}

bool check_admissible(const CartanMatrix& C, const std::vector<int>& perm_images) {
  if (!C.simply_laced()) throw CartanError("folding requires a simply-laced source");
  std::size_t n = C.labels().size();
  if (perm_images.size() != n) throw CartanError("permutation size mismatch");
  std::set<int> img(perm_images.begin(), perm_images.end()),
      lab(C.labels().begin(), C.labels().end());
  if (img != lab) throw CartanError("permutation is not a bijection of the label set");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (C.entry(perm_images[i], perm_images[j]) != C.entries()[i][j]) return false;

  // No two distinct members of an orbit may be adjacent.
  for (std::size_t i = 0; i < n; ++i) {
    int a = C.labels()[i];
    int b = perm_images[i];
    while (b != a) {
      if (C.entry(a, b) != 0) return false;
      b = perm_images[static_cast<std::size_t>(C.position_of(b))];
    }
  }
  return true;
}

FoldingData::FoldingData(CartanMatrix src, std::vector<int> perm_images)
    : source(std::move(src)), perm(std::move(perm_images)) {
  if (!check_admissible(source, perm))
    throw CartanError("automorphism is not admissible");
  std::size_t n = source.labels().size();
  std::vector<bool> seen(n, false);
  order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    int l = source.labels()[i];
    while (true) {
      std::size_t p = static_cast<std::size_t>(source.position_of(l));
      if (seen[p]) break;
      seen[p] = true;
      orbit.push_back(l);
      l = perm[p];
    }
    order = static_cast<int>(std::lcm<long long>(order, static_cast<long long>(orbit.size())));
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

FoldingData FoldingData::identity(CartanMatrix src) {
  std::vector<int> id = src.labels();
  return FoldingData(std::move(src), std::move(id));
}

int FoldingData::orbit_of(int label) const {
  for (std::size_t t = 0; t < orbits.size(); ++t)
    if (std::find(orbits[t].begin(), orbits[t].end(), label) != orbits[t].end())
      return static_cast<int>(t) + 1;
  throw CartanError("label not in any orbit: " + std::to_string(label));
}

int FoldingData::perm_image(int label) const {
  return perm[static_cast<std::size_t>(source.position_of(label))];
}

Json FoldingData::to_json() const {
  Json j;
  j["source"] = source.to_json();
  j["perm"] = perm;
  j["orbits"] = orbits;
  j["order"] = order;
  return j;
}

namespace {

CartanMatrix fold_impl(const FoldingData& f, bool prime) {
  int m = f.orbit_count();
  std::vector<std::vector<int>> e(static_cast<std::size_t>(m), std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      long long sum = 0;
      for (int i : f.orbits[static_cast<std::size_t>(a)])
        for (int j : f.orbits[static_cast<std::size_t>(b)]) sum += f.source.entry(i, j);
      long long div = prime ? static_cast<long long>(f.orbits[static_cast<std::size_t>(a)].size())
                            : static_cast<long long>(f.orbits[static_cast<std::size_t>(b)].size());
      if (sum % div != 0) throw CartanError("non-integral folded entry");
      e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(sum / div);
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 1);
  return CartanMatrix(std::move(labels), std::move(e));
}

}  // namespace

CartanMatrix fold_prime(const FoldingData& f) { return fold_impl(f, true); }
CartanMatrix fold_doubleprime(const FoldingData& f) { return fold_impl(f, false); }

std::vector<std::vector<int>> diagram_automorphisms(const CartanMatrix& C) {
  std::size_t n = C.labels().size();
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<std::vector<int>> all;
  iso_search(C.entries(), C.entries(), image, used, 0, &all, nullptr);
  // Convert position images to label images; backtracking order is already
  // lexicographic on positions, hence on label tuples for sorted labels.
  std::vector<std::vector<int>> out;
  out.reserve(all.size());
  for (const auto& im : all) {
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i)
      labels[i] = C.labels()[static_cast<std::size_t>(im[i])];
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool diagram_isomorphic(const CartanMatrix& a, const CartanMatrix& b) {
  if (a.rank() != b.rank()) return false;
  std::size_t n = a.labels().size();
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  bool found = false;
  iso_search(a.entries(), b.entries(), image, used, 0, nullptr, &found);
  return found;
}

FoldingData find_unfolding(const TypeLabel& t) {
  if (t.simply_laced()) return FoldingData::identity(CartanMatrix::from_type(t));
  CartanMatrix target = CartanMatrix::from_type(t);
  for (int r = t.rank; r <= 4 * t.rank; ++r) {
    for (char fam : {'A', 'D', 'E'}) {
      if (!valid_type(fam, r)) continue;
      CartanMatrix src = CartanMatrix::from_type(TypeLabel(fam, r));
      for (const auto& perm : diagram_automorphisms(src)) {
        if (!check_admissible(src, perm)) continue;
        FoldingData f(src, perm);
        if (f.orbit_count() != t.rank) continue;
        if (diagram_isomorphic(fold_doubleprime(f), target)) return f;
      }
    }
  }
  throw CartanError("no unfolding found for " + t.str());
}

}  // namespace clusterfold
