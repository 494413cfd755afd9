#include "whittaker/algebra.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace whit {

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero base raised to a negative exponent");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational r = 1, b = base;
  for (unsigned k = static_cast<unsigned>(e); k; k >>= 1) {
    if (k & 1U) r *= b;
    b *= b;
  }
  return r;
}

std::string monomial_str(const Exponent& e) {
  std::string s;
  auto push = [&s](const std::string& var, int k) {
    if (k == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (k != 1) s += '^' + std::to_string(k);
  };
  push("t", e.t);
  for (std::size_t i = 0; i < e.x.size(); ++i) push("x" + std::to_string(i + 1), e.x[i]);
  return s;
}

}  // namespace

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (rank_ != o.rank_)
    throw std::invalid_argument("rank mismatch: " + std::to_string(rank_) + " vs " +
                                std::to_string(o.rank_));
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::term(const Integer& coef, int t_exp, std::vector<int> x_exps) {
  LaurentPoly p(static_cast<int>(x_exps.size()));
  p.add_term(Exponent{t_exp, std::move(x_exps)}, coef);
  return p;
}

LaurentPoly LaurentPoly::constant(const Integer& coef, int rank) {
  return term(coef, 0, std::vector<int>(rank, 0));
}

LaurentPoly LaurentPoly::power(Base base, int k, int rank) {
  if (k < 0) throw std::invalid_argument("negative power");
  LaurentPoly p(rank);
  if (base == Base::NegT) {
    p.add_term(Exponent{k, std::vector<int>(rank, 0)}, (k % 2) ? -1 : 1);
    return p;
  }
  Integer binom = 1;
  for (int i = 0; i <= k; ++i) {
    // (1-t)^k has sign (-1)^i on t^i, (t-1)^k has (-1)^(k-i)
    int odd = base == Base::OneMinusT ? i % 2 : (k - i) % 2;
    p.add_term(Exponent{i, std::vector<int>(rank, 0)}, odd ? Integer(-binom) : binom);
    binom = binom * (k - i) / (i + 1);
  }
  return p;
}

LaurentPoly LaurentPoly::signed_t_binomial(int sign, int t_exp, int k, int rank) {
  return term(sign, t_exp, std::vector<int>(rank, 0)) * power(Base::OneMinusT, k, rank);
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b);
  LaurentPoly r(a.rank_);
  Exponent e{0, std::vector<int>(a.rank_, 0)};
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      e.t = ea.t + eb.t;
      for (int i = 0; i < a.rank_; ++i) e.x[i] = ea.x[i] + eb.x[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::times_monomial(const std::vector<int>& x) const {
  if (rank_ != 0 && rank_ != static_cast<int>(x.size())) throw std::invalid_argument("rank mismatch in lift");
  LaurentPoly r(static_cast<int>(x.size()));
  for (const auto& [e, c] : terms_) {
    Exponent f{e.t, x};
    for (int i = 0; i < rank_; ++i) f.x[i] += e.x[i];
    r.add_term(f, c);
  }
  return r;
}

LaurentPoly LaurentPoly::permute_variables(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != rank_) throw std::invalid_argument("permutation rank mismatch");
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent f{e.t, std::vector<int>(rank_, 0)};
    for (int i = 0; i < rank_; ++i) f.x[perm[i]] = e.x[i];
    r.add_term(f, c);
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& t0, const std::vector<Rational>& x0) const {
  if (static_cast<int>(x0.size()) != rank_) throw std::invalid_argument("evaluation point rank mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = rational_pow(t0, e.t);
    for (int i = 0; i < rank_; ++i) v *= rational_pow(x0[i], e.x[i]);
    sum += Rational(c) * v;
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::string m = monomial_str(e);
    if (m.empty())
      os << mag;
    else if (mag == 1)
      os << m;
    else
      os << mag << '*' << m;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json coef;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      coef = static_cast<long long>(c);
    else
      coef = c.str();
    terms.push_back({{"coef", coef}, {"t", e.t}, {"x", e.x}});
  }
  return {{"rank", rank_}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) { return std::invalid_argument("malformed polynomial JSON: " + why); };
  if (!j.is_object() || !j.contains("rank") || !j.contains("terms")) throw fail("need rank and terms");
  if (!j["rank"].is_number_integer() || j["rank"].get<long long>() < 0) throw fail("bad rank");
  if (!j["terms"].is_array()) throw fail("terms must be an array");
  LaurentPoly p(j["rank"].get<int>());
  for (const auto& tj : j["terms"]) {
    if (!tj.is_object() || !tj.contains("coef") || !tj.contains("t") || !tj.contains("x")) throw fail("bad term");
    Integer c;
    const auto& cj = tj["coef"];
    if (cj.is_number_integer()) {
      c = cj.get<long long>();
    } else if (cj.is_string()) {
      try {
        c = Integer(cj.get<std::string>());
      } catch (const std::exception&) {
        throw fail("bad coefficient string");
      }
    } else {
      throw fail("coefficient must be an integer");
    }
    if (!tj["t"].is_number_integer() || !tj["x"].is_array()) throw fail("bad exponent");
    Exponent e{tj["t"].get<int>(), {}};
    for (const auto& xj : tj["x"]) {
      if (!xj.is_number_integer()) throw fail("bad x exponent");
      e.x.push_back(xj.get<int>());
    }
    if (static_cast<int>(e.x.size()) != p.rank_) throw fail("x length differs from rank");
    p.add_term(e, c);
  }
  return p;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
  return from_json(j);
}

std::optional<BinomialForm> as_binomial_form(const LaurentPoly& p) {
  if (p.is_zero()) return std::nullopt;
  for (const auto& [e, c] : p.terms())
    for (int v : e.x)
      if (v != 0) return std::nullopt;
  int lo = p.terms().begin()->first.t;
  int hi = p.terms().rbegin()->first.t;
  const Integer& lead = p.terms().begin()->second;
  if (lead != 1 && lead != -1) return std::nullopt;
  int sign = lead > 0 ? 1 : -1;
  if (LaurentPoly::signed_t_binomial(sign, lo, hi - lo, p.rank()) != p) return std::nullopt;
  return BinomialForm{sign, lo, hi - lo};
}

std::string format_binomial_form(const LaurentPoly& p) {
  auto f = as_binomial_form(p);
  if (!f) return p.str();
  std::string s = f->sign < 0 ? "-" : "";
  std::string body;
  if (f->t_exp == 1) body = "t";
  else if (f->t_exp != 0) body = "t^" + std::to_string(f->t_exp);
  if (f->one_minus_t_exp > 0) {
    if (!body.empty()) body += '*';
    body += "(1-t)";
    if (f->one_minus_t_exp > 1) body += '^' + std::to_string(f->one_minus_t_exp);
  }
  return s + (body.empty() ? "1" : body);
}

}  // namespace whit
