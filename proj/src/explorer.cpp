#include "clusterfold/explorer.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace clusterfold {

// Stored node representatives are canonical forms, so the two directions of
// one exchange edge may carry different position labels; an undirected edge
// is therefore identified by its endpoints alone.
std::size_t ExchangeGraph::undirected_edge_count() const {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : edges) pairs.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
  return pairs.size();
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CLUSTERFOLD_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

using NeighborFn =
    std::function<std::vector<std::pair<int, Seed>>(const Seed&)>;

ExchangeGraph enumerate_impl(const Seed& start, const NeighborFn& neighbors, std::size_t cap,
                             unsigned threads) {
  if (threads == 0) threads = default_thread_count();

  ExchangeGraph g;
  std::map<std::string, int> seen;
  std::vector<Seed> nodes;
  std::vector<std::string> keys;
  std::vector<ExchangeGraph::Edge> edges;

  std::string start_key = start.canonical_key();
  nodes.push_back(start);
  keys.push_back(start_key);
  seen.emplace(start_key, 0);
  std::vector<int> frontier{0};
  bool complete = true;

  struct Expansion {
    int label;
    Seed seed;
    std::string key;
  };

  while (!frontier.empty()) {
    std::vector<std::vector<Expansion>> results(frontier.size());
    auto expand = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t fi = lo; fi < hi; ++fi) {
        for (auto& [label, seed] : neighbors(nodes[static_cast<std::size_t>(frontier[fi])])) {
          std::string key = seed.canonical_key();
          results[fi].push_back({label, std::move(seed), std::move(key)});
        }
      }
    };
    unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(threads, frontier.size()));
    if (workers <= 1) {
      expand(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (frontier.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(frontier.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(expand, lo, hi);
      }
      for (auto& t : pool) t.join();
    }

    // Sequential merge in frontier order keeps node numbering independent of
    // the schedule; the final sort-by-key makes the output canonical anyway.
    std::vector<int> next;
    for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
      for (auto& exp : results[fi]) {
        auto it = seen.find(exp.key);
        int to;
        if (it != seen.end()) {
          to = it->second;
        } else if (nodes.size() >= cap) {
          complete = false;
          continue;
        } else {
          to = static_cast<int>(nodes.size());
          nodes.push_back(std::move(exp.seed));
          keys.push_back(exp.key);
          seen.emplace(std::move(exp.key), to);
          next.push_back(to);
        }
        edges.push_back({frontier[fi], exp.label, to});
      }
    }
    frontier = std::move(next);
  }

  // Canonical presentation: renumber nodes by key order.
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<int> newpos(nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) newpos[order[r]] = static_cast<int>(r);

  g.nodes.reserve(nodes.size());
  g.keys.reserve(nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    g.nodes.push_back(std::move(nodes[order[r]]));
    g.keys.push_back(std::move(keys[order[r]]));
  }
  for (auto& e : edges)
    g.edges.push_back({newpos[static_cast<std::size_t>(e.from)], e.label,
                       newpos[static_cast<std::size_t>(e.to)]});
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  g.origin = newpos[0];
  g.complete = complete;
  return g;
}

}  // namespace

ExchangeGraph enumerate_ordinary(const Seed& start, std::size_t cap, unsigned threads) {
  NeighborFn nbrs = [](const Seed& s) {
    std::vector<std::pair<int, Seed>> out;
    for (int id : s.mutable_ids()) out.emplace_back(id, s.mutate(id));
    return out;
  };
  return enumerate_impl(start, nbrs, cap, threads);
}

ExchangeGraph enumerate_orbit(const Seed& start, const SeedFolding& sf, std::size_t cap,
                              unsigned threads) {
  NeighborFn nbrs = [&sf](const Seed& s) {
    std::vector<std::pair<int, Seed>> out;
    for (const auto& b : sf.blocks()) {
      bool mut = true;
      for (int p : b.positions) mut = mut && s.is_mutable(p);
      if (mut) out.emplace_back(b.id, sf.orbit_mutate(s, b.id));
    }
    return out;
  };
  return enumerate_impl(start, nbrs, cap, threads);
}

std::vector<LaurentPoly> cluster_variables(const ExchangeGraph& g) {
  if (!g.complete) throw IncompleteGraph("enumeration hit the node cap");
  std::vector<LaurentPoly> out;
  for (const auto& node : g.nodes)
    for (const auto& v : node.vertices()) out.push_back(v.variable);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Json IndependenceReport::to_json() const {
  Json j;
  j["monomials"] = monomial_count;
  j["rank"] = rank;
  j["degree_bound"] = degree_bound;
  j["independent"] = independent;
  return j;
}

IndependenceReport check_independence(const ExchangeGraph& g, int degree) {
  if (!g.complete) throw IncompleteGraph("enumeration hit the node cap");
  if (degree < 1) throw ExplorerError("degree bound must be at least 1");

  // Collect all cluster monomials of total degree <= degree, expanded in the
  // initial variables, deduplicated across overlapping clusters.
  std::map<std::string, LaurentPoly> monomials;
  for (const auto& node : g.nodes) {
    std::vector<std::vector<LaurentPoly>> powers;
    for (const auto& v : node.vertices()) {
      std::vector<LaurentPoly> ps{LaurentPoly::constant(v.variable.vars(), Rational(1))};
      for (int e = 1; e <= degree; ++e) ps.push_back(ps.back() * v.variable);
      powers.push_back(std::move(ps));
    }
    std::size_t k = powers.size();
    std::vector<int> expo(k, 0);
    std::function<void(std::size_t, int, const LaurentPoly&)> rec =
        [&](std::size_t slot, int left, const LaurentPoly& acc) {
          monomials.emplace(acc.str(), acc);
          if (slot == k || left == 0) return;
          for (int e = 1; e <= left; ++e)
            rec(slot + 1, left - e, acc * powers[slot][static_cast<std::size_t>(e)]);
          rec(slot + 1, left, acc);
        };
    const auto& vars = node.vertices()[0].variable.vars();
    rec(0, degree, LaurentPoly::constant(vars, Rational(1)));
  }

  // Coefficient matrix over the union of occurring exponent vectors.
  std::map<std::vector<int>, std::size_t> columns;
  for (const auto& [key, p] : monomials)
    for (const auto& t : p.terms())
      columns.emplace(t.exps, columns.size());
  std::vector<std::vector<Integer>> matrix;
  matrix.reserve(monomials.size());
  for (const auto& [key, p] : monomials) {
    Integer lcm_den(1);
    for (const auto& t : p.terms())
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    std::vector<Integer> row(columns.size(), Integer(0));
    for (const auto& t : p.terms())
      row[columns.at(t.exps)] = t.coeff.get_num() * (lcm_den / t.coeff.get_den());
    matrix.push_back(std::move(row));
  }

  IndependenceReport rep;
  rep.monomial_count = monomials.size();
  rep.rank = integer_matrix_rank(std::move(matrix));
  rep.degree_bound = degree;
  rep.independent = rep.rank == rep.monomial_count;
  return rep;
}

std::string fingerprint64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string to_dot(const ExchangeGraph& g) {
  std::string out = "graph exchange {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + fingerprint64(g.keys[i]) + "\"];\n";
  // One line per undirected edge, labeled from the lower endpoint's side.
  std::map<std::pair<int, int>, int> pairs;
  for (const auto& e : g.edges)
    if (e.from <= e.to) pairs.emplace(std::pair<int, int>{e.from, e.to}, e.label);
  for (const auto& e : g.edges)
    if (e.from > e.to) pairs.emplace(std::pair<int, int>{e.to, e.from}, e.label);
  for (const auto& [uv, label] : pairs)
    out += "  n" + std::to_string(uv.first) + " -- n" + std::to_string(uv.second) +
           " [label=\"" + std::to_string(label) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace clusterfold
