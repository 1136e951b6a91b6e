#include "hilbtan/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hilbtan {

PolyRing::PolyRing(FieldSpec field, std::vector<std::string> xvars, std::vector<std::string> yvars,
                   std::size_t elimination_block)
    : field_(field), xvars_(std::move(xvars)), yvars_(std::move(yvars)), elim_(elimination_block) {
  if (nvars() == 0) throw std::invalid_argument("ring needs at least one variable");
  if (nvars() > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  if (elim_ > nvars()) throw std::invalid_argument("elimination block larger than ring");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < nvars(); ++i) {
    const auto& name = variable_name(i);
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate variable name '" + name + "'");
  }
}

RingPtr PolyRing::make(FieldSpec field, std::vector<std::string> xvars, std::vector<std::string> yvars) {
  return std::make_shared<const PolyRing>(field, std::move(xvars), std::move(yvars));
}

const std::string& PolyRing::variable_name(std::size_t i) const {
  return i < xvars_.size() ? xvars_.at(i) : yvars_.at(i - xvars_.size());
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (variable_name(i) == name) return i;
  return std::nullopt;
}

Bidegree PolyRing::bidegree(const Monomial& m) const {
  Bidegree d;
  for (std::size_t i = 0; i < xvars_.size(); ++i) d.x += m[i];
  d.y = m.degree() - d.x;
  return d;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  if (elim_ > 0) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < elim_; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other || (field_ == other.field_ && xvars_ == other.xvars_ &&
                            yvars_ == other.yvars_ && elim_ == other.elim_);
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

void enumerate(const std::vector<std::size_t>& vars, std::size_t pos, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    cur.set(vars[pos], remaining);
    out.push_back(cur);
    cur.set(vars[pos], 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(vars[pos], e);
    enumerate(vars, pos + 1, remaining - e, cur, out);
  }
  cur.set(vars[pos], 0);
}

}  // namespace

std::string PolyRing::describe() const {
  std::string s = "ring char=" + std::to_string(field_.characteristic()) + " x=[" + join(xvars_) + "]";
  if (!yvars_.empty()) s += " y=[" + join(yvars_) + "]";
  return s;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, const std::vector<std::size_t>& vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(ring.nvars());
  if (vars.empty()) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  enumerate(vars, 0, d, cur, out);
  return out;
}

std::vector<Monomial> monomials_of_bidegree(const PolyRing& ring, Bidegree d) {
  std::vector<Monomial> out;
  if (!d.nonnegative()) return out;
  std::vector<std::size_t> xs, ys;
  for (std::size_t i = 0; i < ring.nx(); ++i) xs.push_back(i);
  for (std::size_t i = 0; i < ring.ny(); ++i) ys.push_back(ring.nx() + i);
  auto xpart = monomials_of_degree(ring, xs, d.x);
  auto ypart = monomials_of_degree(ring, ys, d.y);
  out.reserve(xpart.size() * ypart.size());
  for (const auto& a : xpart)
    for (const auto& b : ypart) out.push_back(a * b);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

}  // namespace hilbtan
