#include "hilbtan/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbtan {

namespace {

// Merges a + c*b where both are canonical term lists sorted descending.
std::vector<Term> merge_axpy(const PolyRing& ring, std::span<const Term> a, std::span<const Term> b,
                             const Scalar& c) {
  const auto& F = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = ring.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, F.mul(c, b[j].coeff)});
      ++j;
    } else {
      Scalar s = F.add(a[i].coeff, F.mul(c, b[j].coeff));
      if (!F.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, F.mul(c, b[j].coeff)});
  return out;
}

Scalar convert_coefficient(const FieldSpec& from, const FieldSpec& to, const Scalar& c) {
  if (from == to) return c;
  if (!from.is_prime()) return to.from_mpq(c.rational());
  if (to.is_prime()) throw std::invalid_argument("cannot convert between distinct prime fields");
  return to.from_int(c.residue());
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return monomial(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::from_int(RingPtr ring, long long c) {
  auto s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto m = Monomial::variable(ring->nvars(), index);
  auto one = ring->field().one();
  return monomial(std::move(ring), m, one);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& R = *ring;
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = R.field().add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && R.field().is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && R.field().is_zero(out.back().coeff)) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("ring mismatch");
}

bool Polynomial::is_bihomogeneous() const {
  if (terms_.empty()) return true;
  auto d = ring_->bidegree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_->bidegree(t.mono) == d; });
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree() == d; });
}

std::optional<Bidegree> Polynomial::bidegree() const {
  if (terms_.empty() || !is_bihomogeneous()) return std::nullopt;
  return ring_->bidegree(terms_.front().mono);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::component(Bidegree d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (ring_->bidegree(t.mono) == d) out.push_back(t);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  return Polynomial(ring_, merge_axpy(*ring_, terms_, o.terms_, field().one()));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  return Polynomial(ring_, merge_axpy(*ring_, terms_, o.terms_, field().neg(field().one())));
}

Polynomial Polynomial::operator-() const { return scale(field().neg(field().one())); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const auto& small = size() <= o.size() ? *this : o;
  const auto& large = size() <= o.size() ? o : *this;
  std::vector<Term> acc;
  for (const auto& t : small.terms_) {
    auto part = large.mul_term(t.mono, t.coeff);
    acc = merge_axpy(*ring_, acc, part.terms_, field().one());
  }
  return Polynomial(ring_, std::move(acc));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = field().mul(t.coeff, c);
    // integer coefficients can only vanish when c does
    if (!field().is_zero(s)) out.push_back({t.mono, std::move(s)});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    Scalar c = field().mul(t.coeff, field().from_int(e));
    if (!field().is_zero(c)) out.push_back({m, std::move(c)});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(leading().coeff));
}

Polynomial Polynomial::map_to(RingPtr target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->nvars()) throw std::invalid_argument("variable map size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    out.push_back({m, convert_coefficient(field(), target->field(), t.coeff)});
  }
  return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::change_field(RingPtr target) const {
  if (target->nvars() != ring_->nvars()) throw std::invalid_argument("variable count mismatch");
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.mono, convert_coefficient(field(), target->field(), t.coeff)});
  return from_terms(std::move(target), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_as(*b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = F.is_negative(t.coeff);
    Scalar mag = negative ? F.neg(t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      int e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variable_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += F.to_string(mag);
    else if (F.is_one(mag))
      out += mono;
    else
      out += F.to_string(mag) + "*" + mono;
  }
  return out;
}

std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!f.ring()->same_as(*g.ring())) throw std::invalid_argument("ring mismatch");
  const auto& F = f.field();
  const auto& lt = g.leading();
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto& head = rest.leading();
    if (!lt.mono.divides(head.mono)) return std::nullopt;
    Scalar c;
    try {
      c = F.is_field() ? F.div(head.coeff, lt.coeff) : F.exact_div(head.coeff, lt.coeff.rational().get_num());
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    Monomial m = head.mono / lt.mono;
    quotient.push_back({m, c});
    rest = rest - g.mul_term(m, c);
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(quotient));
}

}  // namespace hilbtan
