#include "clusterfold/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace clusterfold {

int grlex_compare(const std::vector<int>& a, const std::vector<int>& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Rational& c) {
  std::size_t n = vars.size();
  return monomial(std::move(vars), std::vector<int>(n, 0), c);
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw LaurentError("unknown variable: " + name);
  std::vector<int> exps(vars.size(), 0);
  exps[static_cast<std::size_t>(it - vars.begin())] = 1;
  return monomial(std::move(vars), std::move(exps), Rational(1));
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, std::vector<int> exps,
                                  const Rational& c) {
  if (exps.size() != vars.size())
    throw LaurentError("exponent vector length does not match variable count");
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exps.size() != vars.size())
      throw LaurentError("exponent vector length does not match variable count");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.exps, b.exps) < 0; });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && grlex_compare(out.back().exps, t.exps) == 0)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  LaurentPoly p(std::move(vars));
  p.terms_ = std::move(out);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(),
                     [](int e) { return e == 0; });
}

int LaurentPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw LaurentError("unknown variable: " + name);
  return static_cast<int>(it - vars_.begin());
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
  if (vars_ != o.vars_) throw VariableMismatch("mismatched variable lists");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_vars(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size())
      c = 1;
    else if (j == o.terms_.size())
      c = -1;
    else
      c = grlex_compare(terms_[i].exps, o.terms_[j].exps);
    if (c < 0) {
      merged.push_back(terms_[i++]);
    } else if (c > 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) merged.push_back({terms_[i].exps, s});
      ++i, ++j;
    }
  }
  LaurentPoly r(vars_);
  r.terms_ = std::move(merged);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_vars(o);
  std::map<std::vector<int>, Rational> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      std::vector<int> e(a.exps.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exps[k] + b.exps[k];
      acc[std::move(e)] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, c});
  return from_terms(vars_, std::move(terms));
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e == 0) return constant(vars_, Rational(1));
  if (e < 0) {
    if (!is_monomial()) throw LaurentError("negative power of a non-monomial");
    const Term& t = terms_[0];
    std::vector<int> exps(t.exps.size());
    for (std::size_t k = 0; k < exps.size(); ++k)
      exps[k] = static_cast<int>(t.exps[k] * e);
    Rational c(1);
    for (long i = 0; i < -e; ++i) c /= t.coeff;
    return monomial(vars_, std::move(exps), c);
  }
  if (is_monomial()) {
    const Term& t = terms_[0];
    std::vector<int> exps(t.exps.size());
    for (std::size_t k = 0; k < exps.size(); ++k)
      exps[k] = static_cast<int>(t.exps[k] * e);
    Rational c(1);
    for (long i = 0; i < e; ++i) c *= t.coeff;
    return monomial(vars_, std::move(exps), c);
  }
  LaurentPoly base(*this), acc = constant(vars_, Rational(1));
  long n = e;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

namespace {

// Componentwise minimum exponent over all terms (the monomial content).
std::vector<int> content_exps(const LaurentPoly& p) {
  std::vector<int> m = p.terms().front().exps;
  for (const auto& t : p.terms())
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], t.exps[k]);
  return m;
}

LaurentPoly shift(const LaurentPoly& p, const std::vector<int>& offset) {
  std::vector<LaurentPoly::Term> terms = p.terms();
  for (auto& t : terms)
    for (std::size_t k = 0; k < offset.size(); ++k) t.exps[k] += offset[k];
  return LaurentPoly::from_terms(p.vars(), std::move(terms));
}

}  // namespace

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  p.check_same_vars(q);
  if (q.is_zero()) throw LaurentError("division by zero");
  if (p.is_zero()) return LaurentPoly(p.vars_);

  // Strip monomial content so both operands become honest polynomials; a
  // Laurent quotient exists iff the polynomial parts divide exactly.
  std::vector<int> ca = content_exps(p), cb = content_exps(q);
  std::vector<int> neg_ca(ca.size()), neg_cb(cb.size()), off(ca.size());
  for (std::size_t k = 0; k < ca.size(); ++k) {
    neg_ca[k] = -ca[k];
    neg_cb[k] = -cb[k];
    off[k] = ca[k] - cb[k];
  }
  LaurentPoly r = shift(p, neg_ca);
  LaurentPoly d = shift(q, neg_cb);

  const Term& dl = d.terms_.back();
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term& rl = r.terms_.back();
    std::vector<int> te(rl.exps.size());
    for (std::size_t k = 0; k < te.size(); ++k) {
      te[k] = rl.exps[k] - dl.exps[k];
      if (te[k] < 0) throw NotDivisible("no exact Laurent quotient");
    }
    Rational tc = rl.coeff / dl.coeff;
    LaurentPoly t = monomial(p.vars_, te, tc);
    quot.push_back({std::move(te), tc});
    r = r - t * d;
  }
  return shift(from_terms(p.vars_, std::move(quot)), off);
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& images,
                                    const std::vector<std::string>& target_vars) const {
  std::vector<const LaurentPoly*> img(vars_.size(), nullptr);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = images.find(vars_[k]);
    if (it == images.end()) throw SubstitutionError("unmapped variable: " + vars_[k]);
    if (it->second.vars() != target_vars)
      throw SubstitutionError("image of " + vars_[k] + " is not over the target variables");
    img[k] = &it->second;
  }
  LaurentPoly result(target_vars);
  for (const auto& t : terms_) {
    LaurentPoly acc = constant(target_vars, t.coeff);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      int e = t.exps[k];
      if (e == 0) continue;
      if (e < 0 && !img[k]->is_monomial())
        throw SubstitutionError("non-invertible image for variable " + vars_[k] +
                                " occurring with negative exponent");
      acc = acc * img[k]->pow(e);
    }
    result = result + acc;
  }
  return result;
}

int LaurentPoly::compare(const LaurentPoly& o) const {
  if (vars_ != o.vars_) return vars_ < o.vars_ ? -1 : 1;
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grlex_compare(terms_[i].exps, o.terms_[i].exps);
    if (c != 0) return c;
    int s = cmp(terms_[i].coeff, o.terms_[i].coeff);
    if (s != 0) return s < 0 ? -1 : 1;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rational c = t.coeff;
    if (i > 0) {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string body;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (t.exps[k] == 0) continue;
      if (!body.empty()) body += "*";
      body += vars_[k];
      if (t.exps[k] != 1) body += "^" + std::to_string(t.exps[k]);
    }
    if (body.empty()) {
      out += rational_to_string(c);
    } else {
      if (c == 1)
        out += body;
      else if (c == -1)
        out += "-" + body;
      else
        out += rational_to_string(c) + "*" + body;
    }
  }
  return out;
}

Json LaurentPoly::to_json() const {
  Json j;
  j["vars"] = vars_;
  Json terms = Json::array();
  for (const auto& t : terms_) {
    Json jt;
    jt["coeff"] = rational_to_string(t.coeff);
    jt["exps"] = t.exps;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly LaurentPoly::from_json(const Json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  std::vector<Term> terms;
  for (const auto& jt : j.at("terms")) {
    Term t;
    t.coeff = rational_from_string(jt.at("coeff").get<std::string>());
    t.exps = jt.at("exps").get<std::vector<int>>();
    terms.push_back(std::move(t));
  }
  return from_terms(std::move(vars), std::move(terms));
}

}  // namespace clusterfold
