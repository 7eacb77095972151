#include "clusterfold/seed.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace clusterfold {

std::vector<long long> skew_symmetrizer(const IntMatrix& B) {
  std::size_t n = B.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (B[i].size() != n) throw SeedError("exchange matrix is not square");
    if (B[i][i] != 0) throw SeedError("nonzero diagonal in exchange matrix");
    for (std::size_t j = 0; j < n; ++j) {
      bool zi = B[i][j] == 0, zj = B[j][i] == 0;
      if (zi != zj || (!zi && (B[i][j] > 0) == (B[j][i] > 0)))
        throw SeedError("exchange matrix is not skew-symmetrizable");
    }
  }
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
        if (B[i][j] == 0) continue;
        Rational want = -d[i] * Rational(static_cast<long>(B[i][j]), 1) /
                        Rational(static_cast<long>(B[j][i]), 1);
        if (!seen[j]) {
          d[j] = want;
          seen[j] = true;
          stack.push_back(j);
        } else if (d[j] != want) {
          throw SeedError("exchange matrix is not skew-symmetrizable");
        }
      }
    }
  }
  Integer lcm_den(1);
  for (const auto& q : d)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  Integer g(0);
  std::vector<Integer> nums(n);
  for (std::size_t i = 0; i < n; ++i) {
    nums[i] = d[i].get_num() * (lcm_den / d[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  std::vector<long long> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer v = nums[i] / g;
    out[i] = v.get_si();
  }
  return out;
}

Seed::Seed(std::vector<SeedVertex> vertices, IntMatrix B,
           std::optional<std::vector<long long>> symmetrizer)
    : vertices_(std::move(vertices)), B_(std::move(B)), symmetrizer_(std::move(symmetrizer)) {
  std::size_t n = vertices_.size();
  if (B_.size() != n) throw SeedError("exchange matrix size mismatch");
  std::set<int> ids;
  for (const auto& v : vertices_)
    if (!ids.insert(v.id).second) throw SeedError("duplicate vertex id");
  skew_symmetrizer(B_);  // existence check
  if (symmetrizer_) {
    if (symmetrizer_->size() != n) throw SeedError("symmetrizer size mismatch");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((*symmetrizer_)[i] * B_[i][j] != -(*symmetrizer_)[j] * B_[j][i])
          throw SeedError("symmetrizer does not skew-symmetrize B");
  }
}

int Seed::index_of(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return static_cast<int>(i);
  throw SeedError("unknown vertex id: " + std::to_string(id));
}

std::vector<int> Seed::mutable_ids() const {
  std::vector<int> out;
  for (const auto& v : vertices_)
    if (!v.frozen) out.push_back(v.id);
  std::sort(out.begin(), out.end());
  return out;
}

Seed Seed::mutate(int id) const {
  std::size_t k = static_cast<std::size_t>(index_of(id));
  if (vertices_[k].frozen)
    throw FrozenVertexError("cannot mutate frozen vertex " + std::to_string(id));
  std::size_t n = vertices_.size();
  const std::vector<std::string>& vars = vertices_[0].variable.vars();

  LaurentPoly plus = LaurentPoly::constant(vars, Rational(1));
  LaurentPoly minus = plus;
  for (std::size_t i = 0; i < n; ++i) {
    long long b = B_[i][k];
    if (b > 0) plus = plus * vertices_[i].variable.pow(b);
    if (b < 0) minus = minus * vertices_[i].variable.pow(-b);
  }
  LaurentPoly fresh;
  try {
    fresh = LaurentPoly::div_exact(plus + minus, vertices_[k].variable);
  } catch (const NotDivisible&) {
    throw InternalLaurentViolation("exchange relation produced a non-Laurent variable");
  }

  IntMatrix nb = B_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        nb[i][j] = -B_[i][j];
      } else {
        long long corr = B_[i][k] * B_[k][j];
        if (corr > 0) nb[i][j] = B_[i][j] + (B_[i][k] > 0 ? corr : -corr);
      }
    }
  }
  std::vector<SeedVertex> nv = vertices_;
  nv[k].variable = std::move(fresh);
  return Seed(std::move(nv), std::move(nb), symmetrizer_);
}

Seed Seed::apply_automorphism(const std::vector<int>& sigma) const {
  std::size_t n = vertices_.size();
  if (sigma.size() != n) throw SeedError("automorphism size mismatch");
  std::set<int> img(sigma.begin(), sigma.end());
  for (const auto& v : vertices_)
    if (!img.count(v.id)) throw SeedError("automorphism is not a bijection of vertex ids");

  const std::vector<std::string>& vars = vertices_[0].variable.vars();
  if (vars.size() != n) throw SeedError("variables are not positionally aligned with vertices");
  std::map<std::string, LaurentPoly> relabel;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ti = static_cast<std::size_t>(index_of(sigma[i]));
    relabel.emplace(vars[i], LaurentPoly::variable(vars, vars[ti]));
  }

  std::vector<SeedVertex> nv(n);
  IntMatrix nb(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ti = static_cast<std::size_t>(index_of(sigma[i]));
    if (vertices_[ti].frozen != vertices_[i].frozen)
      throw SeedError("automorphism mixes frozen and mutable vertices");
    nv[ti].id = vertices_[ti].id;
    nv[ti].frozen = vertices_[i].frozen;
    nv[ti].variable = vertices_[i].variable.substitute(relabel, vars);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t tj = static_cast<std::size_t>(index_of(sigma[j]));
      nb[ti][tj] = B_[i][j];
    }
  }
  return Seed(std::move(nv), std::move(nb), symmetrizer_);
}

bool Seed::is_invariant(const std::vector<int>& sigma) const {
  return apply_automorphism(sigma).canonical_key() == canonical_key();
}

std::string Seed::canonical_key() const {
  std::size_t n = vertices_.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (vertices_[a].frozen != vertices_[b].frozen) return !vertices_[a].frozen;
    return vertices_[a].variable < vertices_[b].variable;
  });
  for (std::size_t i = 1; i < n; ++i)
    if (vertices_[order[i - 1]].frozen == vertices_[order[i]].frozen &&
        vertices_[order[i - 1]].variable == vertices_[order[i]].variable)
      throw CanonicalCollision("two vertices carry the same variable");
  std::string key = "V:";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = vertices_[order[i]];
    key += (v.frozen ? "F|" : "M|") + v.variable.str() + ";";
  }
  key += "B:";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      key += std::to_string(B_[order[i]][order[j]]);
      key += j + 1 < n ? ',' : ';';
    }
  }
  return key;
}

Json Seed::to_json() const {
  Json j;
  Json verts = Json::array();
  for (const auto& v : vertices_) {
    Json jv;
    jv["id"] = v.id;
    jv["frozen"] = v.frozen;
    jv["variable"] = v.variable.to_json();
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  j["B"] = B_;
  if (symmetrizer_) j["symmetrizer"] = *symmetrizer_;
  return j;
}

Seed Seed::from_json(const Json& j) {
  std::vector<SeedVertex> verts;
  for (const auto& jv : j.at("vertices")) {
    SeedVertex v;
    v.id = jv.at("id").get<int>();
    v.frozen = jv.at("frozen").get<bool>();
    v.variable = LaurentPoly::from_json(jv.at("variable"));
    verts.push_back(std::move(v));
  }
  IntMatrix B = j.at("B").get<IntMatrix>();
  std::optional<std::vector<long long>> sym;
  if (j.contains("symmetrizer")) sym = j.at("symmetrizer").get<std::vector<long long>>();
  return Seed(std::move(verts), std::move(B), std::move(sym));
}

WordSeedLayout WordSeedLayout::from_letters(const std::vector<int>& letters) {
  WordSeedLayout layout;
  layout.letters = letters;
  std::size_t k = letters.size();
  layout.successor.assign(k, 0);
  layout.frozen.assign(k, false);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t c = b + 1; c < k; ++c) {
      if (letters[c] == letters[b]) {
        layout.successor[b] = static_cast<int>(c) + 1;
        break;
      }
    }
    layout.frozen[b] = layout.successor[b] == 0;
  }
  return layout;
}

Seed initial_seed(const CartanMatrix& C, const std::vector<int>& word) {
  if (!C.simply_laced()) throw SeedError("initial seed requires a simply-laced diagram");
  RootSystem rs(C);
  if (!rs.is_reduced(word)) throw SeedError("word is not reduced");
  if (word.size() != rs.positive_count())
    throw SeedError("word is not a reduced word of the longest element");

  WordSeedLayout layout = WordSeedLayout::from_letters(word);
  std::size_t k = word.size();
  std::vector<std::string> vars(k);
  for (std::size_t p = 0; p < k; ++p) vars[p] = "x" + std::to_string(p + 1);

  std::vector<SeedVertex> verts(k);
  for (std::size_t p = 0; p < k; ++p) {
    verts[p].id = static_cast<int>(p) + 1;
    verts[p].frozen = layout.frozen[p];
    verts[p].variable = LaurentPoly::variable(vars, vars[p]);
  }

  const long long INF = std::numeric_limits<long long>::max();
  auto succ = [&](std::size_t p) {
    return layout.successor[p] == 0 ? INF : static_cast<long long>(layout.successor[p]);
  };
  IntMatrix B(k, std::vector<long long>(k, 0));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t c = b + 1; c < k; ++c) {
      long long sb = succ(b), sc = succ(c);
      long long cpos = static_cast<long long>(c) + 1;
      long long entry = 0;
      if (sb == cpos)
        entry = 1;
      else if (cpos < sb && sb < sc)  // INF < INF is false here by design
        entry = C.entry(word[b], word[c]);
      B[b][c] = entry;
      B[c][b] = -entry;
    }
  }
  return Seed(std::move(verts), std::move(B));
}

}  // namespace clusterfold
