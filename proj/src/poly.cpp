#include "arcmld/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arcmld/errors.hpp"

namespace arcmld {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    index_.emplace(names_[i], i);
  }
  if (index_.size() != names_.size()) {
    throw ArcError(ErrorCode::ParseError, "duplicate variable name in variable set");
  }
}

int VarSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<VarSet>(std::move(names));
}

int64_t total_degree(const Exps& e) {
  int64_t d = 0;
  for (int32_t x : e) d += x;
  return d;
}

Poly Poly::constant(VarSetPtr vars, Rat c) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exps(p.vars_->size(), 0), std::move(c));
  return p;
}

Poly Poly::variable(VarSetPtr vars, int index) {
  Poly p(std::move(vars));
  Exps e(p.vars_->size(), 0);
  e.at(index) = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

Poly Poly::monomial(VarSetPtr vars, Exps exps, Rat c) {
  Poly p(std::move(vars));
  if (static_cast<int>(exps.size()) != p.vars_->size()) {
    throw ArcError(ErrorCode::Internal, "monomial exponent size mismatch");
  }
  for (int32_t x : exps) {
    if (x < 0) throw ArcError(ErrorCode::Internal, "negative exponent");
  }
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

Poly Poly::from_terms(VarSetPtr vars, std::map<Exps, Rat> terms) {
  Poly p(std::move(vars));
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

bool Poly::is_unit_constant() const { return !terms_.empty() && is_constant(); }

int64_t Poly::degree() const {
  int64_t d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int64_t Poly::degree_in(int var) const {
  int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int64_t>(d, e[var]);
  return d;
}

void Poly::add_term(const Exps& e, const Rat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (!same_varset(vars_, o.vars_)) {
    throw ArcError(ErrorCode::Internal, "variable set mismatch in +");
  }
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!same_varset(vars_, o.vars_)) {
    throw ArcError(ErrorCode::Internal, "variable set mismatch in *");
  }
  Poly r(vars_);
  const int n = vars_ ? vars_->size() : 0;
  Exps e(n);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

bool Poly::operator==(const Poly& o) const {
  return same_varset(vars_, o.vars_) && terms_ == o.terms_;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw ArcError(ErrorCode::Internal, "negative power");
  Poly r = Poly::constant(vars_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

Poly Poly::primitive_part() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.begin()->second < 0) scale = -scale;
  return *this * scale;
}

Poly Poly::lift(const VarSetPtr& target) const {
  if (same_varset(vars_, target)) return *this;
  std::vector<int> remap(vars_->size(), -1);
  for (int i = 0; i < vars_->size(); ++i) {
    remap[i] = target->index_of(vars_->name(i));
  }
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Exps d(target->size(), 0);
    for (int i = 0; i < vars_->size(); ++i) {
      if (e[i] == 0) continue;
      if (remap[i] < 0) {
        throw ArcError(ErrorCode::Internal,
                       "variable " + vars_->name(i) + " missing in target ring");
      }
      d[remap[i]] = e[i];
    }
    r.add_term(d, c);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != vars_->size()) {
    throw ArcError(ErrorCode::Internal, "substitute: wrong image count");
  }
  VarSetPtr target = images.empty() ? vars_ : images.front().vars();
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (int i = 0; i < vars_->size(); ++i) {
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    }
    r = r + term;
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Print high-degree terms first; degree then reverse vector order.
  std::vector<const std::pair<const Exps, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    int64_t da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = total_degree(e) > 0;
    if (abs_c != 1 || !has_vars) {
      out << rat_to_string(abs_c);
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (int i = 0; i < vars_->size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << vars_->name(i);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

Ideal::Ideal(VarSetPtr v, std::vector<Poly> g) : vars(std::move(v)), gens(std::move(g)) {
  for (const auto& p : gens) {
    if (!same_varset(p.vars(), vars)) {
      throw ArcError(ErrorCode::Internal, "ideal generator in wrong ring");
    }
  }
}

bool Ideal::is_zero() const {
  for (const auto& g : gens) {
    if (!g.is_zero()) return false;
  }
  return true;
}

bool Ideal::has_unit_generator() const {
  for (const auto& g : gens) {
    if (g.is_unit_constant()) return true;
  }
  return false;
}

std::string Ideal::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ", ";
    out << gens[i].to_string();
  }
  out << ")";
  return out.str();
}

namespace {

// Recursive-descent parser for the polynomial syntax.
class PolyParser {
 public:
  PolyParser(const std::string& text, VarSetPtr vars)
      : text_(text), vars_(std::move(vars)) {}

  Poly parse() {
    Poly p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ArcError(ErrorCode::ParseError,
                   "polynomial syntax error at offset " + std::to_string(pos_) +
                       ": " + what + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly parse_expr() {
    bool neg = false;
    skip_ws();
    while (true) {
      if (eat('-')) neg = !neg;
      else if (eat('+')) continue;
      else break;
    }
    Poly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Poly t = parse_term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * parse_factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        // implicit multiplication: "2x", "x y", "3(x+1)"
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_primary();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int exp = std::stoi(text_.substr(start, pos_ - start));
      base = base.pow(exp);
    }
    return base;
  }

  Poly parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num = text_.substr(start, pos_ - start);
      // rational literal "p/q"; '/' binds to the literal, not to polynomials
      size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        num += "/" + text_.substr(dstart, pos_ - dstart);
      } else {
        pos_ = save;
      }
      return Poly::constant(vars_, rat_from_string(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      int idx = vars_->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Poly::variable(vars_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  VarSetPtr vars_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarSetPtr& vars) {
  return PolyParser(text, vars).parse();
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FractionalExponent: return "FractionalExponent";
    case ErrorCode::PseudoReflection: return "PseudoReflection";
    case ErrorCode::LevelTooSmall: return "LevelTooSmall";
    case ErrorCode::NonMonomial: return "NonMonomial";
    case ErrorCode::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorCode::MinorOrderTooHigh: return "MinorOrderTooHigh";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace arcmld
