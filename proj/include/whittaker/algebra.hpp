#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

namespace whit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent of t and of x_1..x_n; ordering is lexicographic on (t, x).
struct Exponent {
  int t = 0;
  std::vector<int> x;
  auto operator<=>(const Exponent&) const = default;
};

enum class Base { TMinusOne, OneMinusT, NegT };

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  explicit LaurentPoly(int rank = 0) : rank_(rank) {}

  static LaurentPoly term(const Integer& coef, int t_exp, std::vector<int> x_exps);
  static LaurentPoly constant(const Integer& coef, int rank = 0);
  static LaurentPoly power(Base base, int k, int rank = 0);
  // sign * t^t_exp * (1-t)^k, the shape of every statistic-derived coefficient
  static LaurentPoly signed_t_binomial(int sign, int t_exp, int k, int rank = 0);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Integer coefficient(const Exponent& e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  // lift a rank-0 (t only) polynomial to rank x.size(), multiplied by x^x
  LaurentPoly times_monomial(const std::vector<int>& x) const;
  // rename x_i -> x_{perm[i]} (0-based)
  LaurentPoly permute_variables(const std::vector<int>& perm) const;

  Rational eval(const Rational& t0, const std::vector<Rational>& x0) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);
  std::string dump() const { return to_json().dump(); }
  static LaurentPoly parse(const std::string& text);

 private:
  void check_rank(const LaurentPoly& o) const;
  void add_term(const Exponent& e, const Integer& c);

  int rank_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// If p == sign * t^a * (1-t)^b, return (sign, a, b).
struct BinomialForm {
  int sign;
  int t_exp;
  int one_minus_t_exp;
};
std::optional<BinomialForm> as_binomial_form(const LaurentPoly& p);
std::string format_binomial_form(const LaurentPoly& p);

}  // namespace whit
