#ifndef CLUSTERFOLD_LAURENT_HPP
#define CLUSTERFOLD_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterfold/rational.hpp"

namespace clusterfold {

using Json = nlohmann::ordered_json;

struct LaurentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VariableMismatch : LaurentError {
  using LaurentError::LaurentError;
};
struct NotDivisible : LaurentError {
  using LaurentError::LaurentError;
};
struct SubstitutionError : LaurentError {
  using LaurentError::LaurentError;
};

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a canonical normal form: sorted by total degree, then
/// lexicographically on the exponent vector, with no zero coefficients.
/// Equality and the total order compare() are structural on that form.
class LaurentPoly {
 public:
  struct Term {
    std::vector<int> exps;
    Rational coeff;
  };

  LaurentPoly() = default;  // zero over the empty variable list
  explicit LaurentPoly(std::vector<std::string> vars);

  static LaurentPoly constant(std::vector<std::string> vars, const Rational& c);
  static LaurentPoly variable(std::vector<std::string> vars, const std::string& name);
  static LaurentPoly monomial(std::vector<std::string> vars, std::vector<int> exps,
                              const Rational& c);
  static LaurentPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  /// p^e. Negative e only for monomials (the invertible elements).
  LaurentPoly pow(long e) const;

  /// Exact quotient r with r*q == p; throws NotDivisible if none exists.
  static LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

  /// Ring homomorphism determined by images of the variables. Every source
  /// variable must be mapped; a variable occurring with a negative exponent
  /// needs an invertible (single-term) image.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& images,
                         const std::vector<std::string>& target_vars) const;

  /// Total order on canonical forms; 0 iff mathematically equal.
  int compare(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return compare(o) == 0; }
  bool operator!=(const LaurentPoly& o) const { return compare(o) != 0; }
  bool operator<(const LaurentPoly& o) const { return compare(o) < 0; }

  std::string str() const;
  Json to_json() const;
  static LaurentPoly from_json(const Json& j);

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;

  int var_index(const std::string& name) const;
  void check_same_vars(const LaurentPoly& o) const;
};

/// Graded-lex order on exponent vectors: total degree first, then lex.
int grlex_compare(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace clusterfold

#endif
