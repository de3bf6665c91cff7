#include "cmlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cmlab/errors.hpp"

namespace cmlab {
namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i])) throw DomainError("invalid variable name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second) {
      throw DomainError("duplicate variable '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> VariableSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(VariableSet vars, Field field, MonomialOrder order) {
  if (order.kind() == MonomialOrder::Kind::block &&
      order.front().size() > vars.size()) {
    throw DomainError("block order does not fit the variable set");
  }
  return std::make_shared<const Ring>(Ring{std::move(vars), field, std::move(order)});
}

RingPtr make_ring(std::vector<std::string> names, Field field, MonomialOrder order) {
  return make_ring(VariableSet(std::move(names)), field, std::move(order));
}

RingPtr with_order(const RingPtr& ring, const MonomialOrder& order) {
  if (ring->order == order) return ring;
  return make_ring(ring->vars, ring->field, order);
}

bool same_space(const Ring& a, const Ring& b) {
  return &a == &b || (a.field == b.field && a.vars == b.vars);
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  Scalar v = p.field().coerce(c);
  if (!v.is_zero()) p.terms_.push_back({Monomial(p.ring().vars.size()), std::move(v)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(std::move(ring));
  if (index >= p.ring().vars.size()) throw DomainError("variable index out of range");
  Monomial m(p.ring().vars.size());
  m.set(index, 1);
  p.terms_.push_back({std::move(m), p.field().one()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const std::size_t i = ring->vars.index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring().order;
  const std::size_t n = p.ring().vars.size();
  for (auto& t : terms) {
    if (t.monomial.size() != n) throw DomainError("term has wrong number of exponents");
    t.coeff = p.field().coerce(t.coeff);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<bool> seen(ring().vars.size(), false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] != 0) seen[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
  if (ring.get() == ring_.get()) return *this;
  if (!same_space(*ring_, *ring)) throw DomainError("mismatched variable sets or fields");
  if (ring->order == ring_->order) return from_sorted_terms(ring, terms_);
  return from_terms(ring, terms_);
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  return in_ring(cmlab::with_order(ring_, order));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inverse();
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_space(*ring_, *o.ring_)) throw DomainError("mismatched variable sets or fields");
}

Polynomial Polynomial::merged(const Polynomial& o, bool negate) const {
  check_compatible(o);
  const bool same_order = o.ring_->order == ring_->order;
  const Polynomial resorted = same_order ? Polynomial(ring_) : o.in_ring(ring_);
  const std::vector<Term>& rhs = same_order ? o.terms_ : resorted.terms_;

  const auto& order = ring_->order;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.size()) {
    const auto c = order.compare(terms_[i].monomial, rhs[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(negate ? Term{rhs[j].monomial, -rhs[j].coeff} : rhs[j]);
      ++j;
    } else {
      Scalar s = negate ? terms_[i].coeff - rhs[j].coeff : terms_[i].coeff + rhs[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < rhs.size(); ++j) r.terms_.push_back(negate ? Term{rhs[j].monomial, -rhs[j].coeff} : rhs[j]);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = merged(o, false); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = merged(o, true); }
Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  const Scalar v = field().coerce(c);
  if (v.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= v;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const Polynomial bb = b.in_ring(a.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * bb.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : bb.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_space(*a.ring_, *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  const Polynomial bb = b.in_ring(a.ring_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == bb.terms_[i].monomial) || !(a.terms_[i].coeff == bb.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    const bool negative = t.coeff.sign() < 0;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Scalar mag = negative ? -t.coeff : t.coeff;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const Exponent e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring().vars.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.ring_ptr(), f.field().one());
  Polynomial base = f;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring().vars.size()) throw DomainError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const Exponent e = t.monomial[var];
    if (e == 0) continue;
    Scalar c = t.coeff * f.field().from_int(e);
    if (c.is_zero()) continue;  // characteristic divides the exponent
    Monomial m = t.monomial;
    m.set(var, static_cast<Exponent>(e - 1));
    out.push_back({std::move(m), std::move(c)});
  }
  // lowering one exponent can reorder terms under grevlex, so re-sort
  return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, std::string_view var) {
  return partial_derivative(f, f.ring().vars.index(var));
}

const Scalar& Point::at(const std::string& var) const {
  auto it = values_.find(var);
  if (it == values_.end()) throw DomainError("missing assignment for variable '" + var + "'");
  return it->second;
}

bool Point::is_total_on(const VariableSet& vars) const {
  return std::all_of(vars.names().begin(), vars.names().end(),
                     [&](const std::string& n) { return has(n); });
}

Scalar evaluate(const Polynomial& f, const Point& p) {
  const Field& field = f.field();
  const auto support = f.support();
  std::vector<Scalar> value(f.ring().vars.size());
  for (std::size_t i : support) value[i] = field.coerce(p.at(f.ring().vars.name(i)));

  Scalar sum = field.zero();
  for (const auto& t : f.terms()) {
    Scalar term = t.coeff;
    for (std::size_t i : support) {
      for (Exponent e = 0; e < t.monomial[i]; ++e) term *= value[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target) {
  if (images.size() != f.ring().vars.size()) throw DomainError("substitution needs one image per variable");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target, target->field.one()));
      cache.push_back(images[i].in_ring(target));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.monomial.size() && !term.is_zero(); ++i) {
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    }
    result += term;
  }
  return result;
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  if (f.field() != target->field) throw DomainError("mismatched fields");
  const auto& src = f.ring().vars;
  std::vector<std::optional<std::size_t>> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->vars.find(src.name(i));

  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->vars.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!where[i]) throw DomainError("variable '" + src.name(i) + "' is not in the target ring");
      m.set(*where[i], t.monomial[i]);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      if (starts_operand()) fail("expected operator (juxtaposition is not allowed)");
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_operand() const {
    if (pos_ >= text_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const mpz_class d = integer();
        if (d == 0) {
          pos_ = at;
          fail("division by zero");
        }
        try {
          acc *= ring_->field.from_rational(mpq_class(1, 1) / mpq_class(d));
        } catch (const DomainError& e) {
          pos_ = at;
          fail(e.what());
        }
      } else {
        skip_ws();
        if (starts_operand()) fail("expected operator (juxtaposition is not allowed)");
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      const mpz_class e = integer();
      if (e > std::numeric_limits<Exponent>::max()) {
        pos_ = at;
        fail("exponent too large");
      }
      base = pow(base, static_cast<unsigned>(e.get_ui()));
      if (peek('^')) fail("chained exponents need parentheses");
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class v = integer();
      return Polynomial::constant(ring_, ring_->field.from_rational(mpq_class(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->vars.find(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

Polynomial parse_polynomial(std::string_view text, const VariableSet& vars, const Field& field) {
  return parse_polynomial(text, make_ring(vars, field));
}

}  // namespace cmlab
