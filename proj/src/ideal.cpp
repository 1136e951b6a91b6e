#include "hilbtan/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace hilbtan {

struct IdealHandle::State {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::once_flag gb_once;
  std::shared_ptr<const std::vector<Polynomial>> gb;
  std::once_flag mg_once;
  std::vector<GradedGenerator> mingens;
};

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> generators) : s_(std::make_shared<State>()) {
  if (!ring) throw std::invalid_argument("null ring");
  for (const auto& g : generators)
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("ring mismatch");
  s_->ring = std::move(ring);
  s_->gens = std::move(generators);
}

IdealHandle IdealHandle::from_groebner_basis(RingPtr ring, std::vector<Polynomial> gb) {
  IdealHandle h(std::move(ring), gb);
  std::call_once(h.s_->gb_once,
                 [&] { h.s_->gb = std::make_shared<const std::vector<Polynomial>>(std::move(gb)); });
  return h;
}

const RingPtr& IdealHandle::ring() const { return s_->ring; }
const std::vector<Polynomial>& IdealHandle::generators() const { return s_->gens; }

std::shared_ptr<const std::vector<Polynomial>> IdealHandle::groebner_basis_ptr() const {
  std::call_once(s_->gb_once, [this] {
    s_->gb = std::make_shared<const std::vector<Polynomial>>(hilbtan::groebner_basis(s_->ring, s_->gens));
  });
  return s_->gb;
}

const std::vector<Polynomial>& IdealHandle::groebner_basis() const { return *groebner_basis_ptr(); }

const std::vector<GradedGenerator>& IdealHandle::minimal_generators() const {
  std::call_once(s_->mg_once, [this] {
    if (!is_bihomogeneous()) throw std::invalid_argument("minimal generators need bihomogeneous generators");
    std::vector<Vec> vs;
    for (const auto& g : s_->gens) vs.push_back(to_vec(g));
    auto idx = minimal_generating_subset(s_->ring, ModuleLayout::ideal(), vs);
    std::vector<GradedGenerator> out;
    for (auto i : idx) out.push_back({s_->gens[i], *s_->gens[i].bidegree()});
    s_->mingens = std::move(out);
  });
  return s_->mingens;
}

bool IdealHandle::is_bihomogeneous() const {
  return std::all_of(s_->gens.begin(), s_->gens.end(), [](const Polynomial& g) { return g.is_bihomogeneous(); });
}

bool IdealHandle::is_homogeneous() const {
  return std::all_of(s_->gens.begin(), s_->gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool IdealHandle::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().leading().mono.degree() == 0;
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& I) {
  if (!f.ring()->same_as(*I.ring())) throw std::invalid_argument("ring mismatch");
  return reduce_polynomial(f, I.groebner_basis());
}

bool contains(const IdealHandle& I, const Polynomial& f) { return normal_form(f, I).is_zero(); }

bool is_subset(const IdealHandle& I, const IdealHandle& J) {
  for (const auto& g : I.groebner_basis())
    if (!contains(J, g)) return false;
  return true;
}

bool equal(const IdealHandle& I, const IdealHandle& J) {
  return I.groebner_basis() == J.groebner_basis();
}

IdealHandle sum(const IdealHandle& I, const IdealHandle& J) { return sum(I, J.generators()); }

IdealHandle sum(const IdealHandle& I, const std::vector<Polynomial>& more) {
  auto gens = I.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle power_of_variables(const RingPtr& ring, const std::vector<std::size_t>& vars, int d) {
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(*ring, vars, d)) gens.push_back(Polynomial::monomial(ring, m, ring->field().one()));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle maximal_ideal(const RingPtr& ring) {
  std::vector<std::size_t> vars(ring->nvars());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  return power_of_variables(ring, vars, 1);
}

namespace {

// Drops redundant leads, tail-reduces and normalizes a Groebner basis.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G) {
  std::erase_if(G, [](const Polynomial& g) { return g.is_zero(); });
  if (G.empty()) return G;
  const auto& ring = G.front().ring();
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading().mono, b.leading().mono) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading().mono.divides(g.leading().mono)) redundant = true;
    if (!redundant) minimal.push_back(g.monic());
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const auto& g = minimal[i];
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    auto r = reduce_polynomial(Polynomial::from_sorted_terms(ring, std::move(tail)), minimal);
    std::vector<Term> terms{g.leading()};
    for (const auto& t : r.terms()) terms.push_back(t);
    out.push_back(Polynomial::from_sorted_terms(ring, std::move(terms)));
  }
  return out;
}

std::string fresh_name(const PolyRing& ring, std::string base) {
  while (ring.index_of(base)) base += "_";
  return base;
}

}  // namespace

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
  const auto& ring = I.ring();
  if (!J.ring()->same_as(*ring)) throw std::invalid_argument("ring mismatch");
  if (I.is_zero() || J.is_zero()) return IdealHandle(ring);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  std::vector<std::string> names{fresh_name(*ring, "_t")};
  for (std::size_t i = 0; i < ring->nvars(); ++i) names.push_back(ring->variable_name(i));
  auto big = std::make_shared<const PolyRing>(ring->field(), names, std::vector<std::string>{}, 1);
  std::vector<std::size_t> up(ring->nvars()), down(ring->nvars() + 1, 0);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    up[i] = i + 1;
    down[i + 1] = i;
  }
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::from_int(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.groebner_basis()) gens.push_back(t * f.map_to(big, up));
  for (const auto& g : J.groebner_basis()) gens.push_back(one_minus_t * g.map_to(big, up));
  std::vector<Polynomial> out;
  for (const auto& g : hilbtan::groebner_basis(big, gens))
    if (g.leading().mono[0] == 0) out.push_back(g.map_to(ring, down));
  return IdealHandle::from_groebner_basis(ring, reduce_basis(std::move(out)));
}

IdealHandle ideal_quotient(const IdealHandle& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
  const auto& ring = I.ring();
  if (f.leading().mono.degree() == 0 && f.size() == 1) return I;
  IdealHandle K = intersect(I, IdealHandle(ring, {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : K.groebner_basis()) {
    auto q = exact_quotient(g, f);
    if (!q) throw std::logic_error("intersection element not divisible by the quotient polynomial");
    gens.push_back(*q);
  }
  return IdealHandle::from_groebner_basis(ring, reduce_basis(std::move(gens)));
}

IdealHandle ideal_quotient(const IdealHandle& I, const IdealHandle& J) {
  std::optional<IdealHandle> acc;
  for (const auto& g : J.generators()) {
    if (g.is_zero()) continue;
    IdealHandle q = ideal_quotient(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return IdealHandle(I.ring(), {Polynomial::from_int(I.ring(), 1)});
  return *acc;
}

IdealHandle saturate(const IdealHandle& I, const IdealHandle& J) {
  if (J.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  IdealHandle cur = IdealHandle::from_groebner_basis(I.ring(), I.groebner_basis());
  while (true) {
    IdealHandle next = ideal_quotient(cur, J);
    if (is_subset(next, cur)) return cur;
    cur = next;
  }
}

namespace {

bool is_standard(const std::vector<Polynomial>& gb, const Monomial& m) {
  for (const auto& g : gb)
    if (g.leading().mono.divides(m)) return false;
  return true;
}

}  // namespace

std::vector<Monomial> standard_monomials(const IdealHandle& I, Bidegree d) {
  const auto& gb = I.groebner_basis();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_bidegree(*I.ring(), d))
    if (is_standard(gb, m)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> standard_monomials_of_degree(const IdealHandle& I, int d) {
  const auto& gb = I.groebner_basis();
  std::vector<std::size_t> vars(I.ring()->nvars());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*I.ring(), vars, d))
    if (is_standard(gb, m)) out.push_back(std::move(m));
  return out;
}

bool has_finite_colength(const IdealHandle& I) {
  const auto n = I.ring()->nvars();
  std::vector<char> seen(n, 0);
  for (const auto& g : I.groebner_basis()) {
    const auto& m = g.leading().mono;
    auto mask = m.support_mask();
    if (mask == 0) return true;
    if ((mask & (mask - 1)) == 0) seen[static_cast<std::size_t>(__builtin_ctz(mask))] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::optional<std::vector<Monomial>> all_standard_monomials(const IdealHandle& I) {
  if (!has_finite_colength(I)) return std::nullopt;
  const auto& gb = I.groebner_basis();
  const auto& ring = *I.ring();
  std::vector<Monomial> out;
  Monomial one(ring.nvars());
  if (!is_standard(gb, one)) return out;
  // Each standard monomial is reached once: extend only by variables at or
  // after the last variable present.
  std::vector<std::pair<Monomial, std::size_t>> stack{{one, 0}};
  while (!stack.empty()) {
    auto [m, from] = stack.back();
    stack.pop_back();
    out.push_back(m);
    for (std::size_t i = from; i < ring.nvars(); ++i) {
      Monomial next = m * Monomial::variable(ring.nvars(), i);
      if (is_standard(gb, next)) stack.push_back({next, i});
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

std::optional<std::uint64_t> colength(const IdealHandle& I) {
  auto s = all_standard_monomials(I);
  if (!s) return std::nullopt;
  return s->size();
}

}  // namespace hilbtan
