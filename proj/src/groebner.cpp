#include "hilbtan/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hilbtan {

ModuleOrder::ModuleOrder(RingPtr ring, ModuleLayout layout) : ring_(std::move(ring)), layout_(std::move(layout)) {
  if (!layout_.shifts.empty() && layout_.shifts.size() != layout_.rank)
    throw std::invalid_argument("shift count does not match module rank");
}

int ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
  int ba = layout_.block(ca), bb = layout_.block(cb);
  if (ba != bb) return ba < bb ? 1 : -1;
  if (ring_->degree_compatible()) {
    int da = degree(a, ca), db = degree(b, cb);
    if (da != db) return da > db ? 1 : -1;
  }
  int c = ring_->compare(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

Vec ModuleOrder::canonical(Vec v) const {
  const auto& F = ring_->field();
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && compare(out.back(), t) == 0) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (F.is_zero(out.back().coeff)) out.pop_back();
    } else if (!F.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Vec ModuleOrder::axpy(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b) const {
  const auto& F = ring_->field();
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial mb;
  while (j < b.size()) {
    mb = b[j].mono * m;
    while (i < a.size() && compare(a[i].mono, a[i].comp, mb, b[j].comp) > 0) out.push_back(a[i++]);
    if (i < a.size() && a[i].comp == b[j].comp && a[i].mono == mb) {
      Scalar s = F.add(a[i].coeff, F.mul(c, b[j].coeff));
      if (!F.is_zero(s)) out.push_back({mb, a[i].comp, std::move(s)});
      ++i;
    } else {
      out.push_back({mb, b[j].comp, F.mul(c, b[j].coeff)});
    }
    ++j;
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

Vec ModuleOrder::mul_term(const Vec& v, const Scalar& c, const Monomial& m) const {
  const auto& F = ring_->field();
  Vec out;
  if (F.is_zero(c)) return out;
  out.reserve(v.size());
  for (const auto& t : v) {
    Scalar s = F.mul(c, t.coeff);
    if (!F.is_zero(s)) out.push_back({t.mono * m, t.comp, std::move(s)});
  }
  return out;
}

int ModuleOrder::sugar(const Vec& v) const {
  int s = INT_MIN;
  for (const auto& t : v) s = std::max(s, degree(t));
  return s;
}

void ModuleOrder::make_monic(Vec& v) const {
  if (v.empty()) return;
  const auto& F = ring_->field();
  if (F.is_one(v.front().coeff)) return;
  Scalar inv = F.inv(v.front().coeff);
  for (auto& t : v) t.coeff = F.mul(inv, t.coeff);
}

namespace {

struct Element {
  Vec v;
  int sugar = 0;
  bool active = true;
};

struct Pair {
  int sugar;
  Monomial lcm;
  std::uint32_t comp;
  int i;
  int j;  // -1: pending generator number i
};

}  // namespace

struct GroebnerEngine::Impl {
  ModuleOrder order;
  std::vector<Element> basis;
  std::vector<int> active;
  std::vector<Vec> pending;

  struct PairLess {
    const ModuleOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order->compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };
  std::set<Pair, PairLess> queue;
  Stats stats;
  bool rank_one;

  Impl(RingPtr ring, ModuleLayout layout)
      : order(std::move(ring), std::move(layout)), queue(PairLess{&order}) {
    rank_one = order.layout().rank == 1;
    if (!order.ring()->field().is_field()) throw std::invalid_argument("Groebner bases need coefficients in a field");
  }

  const Element* find_divisor(const Monomial& m, std::uint32_t comp) const {
    for (int k : active) {
      const auto& lt = basis[k].v.front();
      if (lt.comp == comp && lt.mono.divides(m)) return &basis[k];
    }
    return nullptr;
  }

  // Top-reduces v; sugar is updated along the way.
  Vec top_reduce(Vec v, int& sugar) const {
    const auto& F = order.ring()->field();
    while (!v.empty()) {
      const auto& lt = v.front();
      const Element* g = find_divisor(lt.mono, lt.comp);
      if (!g) break;
      Monomial q = lt.mono / g->v.front().mono;
      sugar = std::max(sugar, g->sugar + q.degree());
      Scalar c = F.neg(F.div(lt.coeff, g->v.front().coeff));
      v = order.axpy(v, c, q, g->v);
    }
    return v;
  }

  Vec full_reduce(Vec v) const {
    const auto& F = order.ring()->field();
    Vec done;
    std::size_t pos = 0;
    while (pos < v.size()) {
      const auto& t = v[pos];
      const Element* g = find_divisor(t.mono, t.comp);
      if (!g) {
        done.push_back(t);
        ++pos;
        continue;
      }
      Monomial q = t.mono / g->v.front().mono;
      Scalar c = F.neg(F.div(t.coeff, g->v.front().coeff));
      Vec tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
      v = order.axpy(tail, c, q, g->v);
      pos = 0;
    }
    return done;
  }

  void insert(Vec h, int sugar) {
    order.make_monic(h);
    const int k = static_cast<int>(basis.size());
    const Monomial M = h.front().mono;
    const std::uint32_t comp = h.front().comp;

    // Chain criterion on queued pairs.
    for (auto it = queue.begin(); it != queue.end();) {
      const Pair& p = *it;
      if (p.j >= 0 && p.comp == comp && M.divides(p.lcm)) {
        const Monomial& li = basis[p.i].v.front().mono;
        const Monomial& lj = basis[p.j].v.front().mono;
        if (!(li.lcm(M) == p.lcm) && !(lj.lcm(M) == p.lcm)) {
          it = queue.erase(it);
          continue;
        }
      }
      ++it;
    }

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (int i : active) {
      const auto& lt = basis[i].v.front();
      if (lt.comp != comp) continue;
      C.push_back({i, lt.mono.lcm(M), rank_one && lt.mono.coprime(M)});
    }
    // New pairs: drop those whose lcm is a multiple of another lcm; among
    // equal lcms keep one, and none if one of them is a product pair.
    std::vector<char> in_d(C.size(), 0);
    std::vector<char> processed(C.size(), 0);
    for (std::size_t a = 0; a < C.size(); ++a) {
      processed[a] = 1;
      bool dominated = false;
      if (!C[a].coprime) {
        for (std::size_t b = 0; b < C.size() && !dominated; ++b) {
          if (b == a) continue;
          bool live = !processed[b] || in_d[b];
          if (live && C[b].lcm.divides(C[a].lcm)) dominated = true;
        }
      }
      if (!dominated) in_d[a] = 1;
    }
    for (std::size_t a = 0; a < C.size(); ++a) {
      if (!in_d[a] || C[a].coprime) continue;
      const auto& gi = basis[C[a].i];
      int s = std::max(gi.sugar + (C[a].lcm.degree() - gi.v.front().mono.degree()), sugar + (C[a].lcm.degree() - M.degree()));
      queue.insert({s, C[a].lcm, comp, C[a].i, k});
    }

    std::erase_if(active, [&](int i) {
      const auto& lt = basis[i].v.front();
      if (lt.comp == comp && M.divides(lt.mono)) {
        basis[i].active = false;
        return true;
      }
      return false;
    });
    basis.push_back({std::move(h), sugar, true});
    active.push_back(k);
    ++stats.basis_elements;
  }

  Vec spoly(const Pair& p) const {
    const auto& F = order.ring()->field();
    const auto& a = basis[p.i].v;
    const auto& b = basis[p.j].v;
    Vec va = order.mul_term(a, F.inv(a.front().coeff), p.lcm / a.front().mono);
    return order.axpy(va, F.neg(F.inv(b.front().coeff)), p.lcm / b.front().mono, b);
  }

  void run(int bound) {
    while (!queue.empty() && queue.begin()->sugar <= bound) {
      Pair p = *queue.begin();
      queue.erase(queue.begin());
      ++stats.pairs_considered;
      Vec v;
      int sugar = p.sugar;
      if (p.j < 0)
        v = std::move(pending[p.i]);
      else
        v = spoly(p);
      v = top_reduce(std::move(v), sugar);
      if (v.empty()) {
        ++stats.reductions_to_zero;
        continue;
      }
      insert(std::move(v), sugar);
    }
  }
};

GroebnerEngine::GroebnerEngine(RingPtr ring, ModuleLayout layout)
    : impl_(std::make_unique<Impl>(std::move(ring), std::move(layout))) {}
GroebnerEngine::~GroebnerEngine() = default;
GroebnerEngine::GroebnerEngine(GroebnerEngine&&) noexcept = default;

const ModuleOrder& GroebnerEngine::order() const { return impl_->order; }

void GroebnerEngine::add_generator(Vec v) {
  v = impl_->order.canonical(std::move(v));
  if (v.empty()) return;
  for (const auto& t : v)
    if (t.comp >= impl_->order.layout().rank) throw std::invalid_argument("component out of range");
  int s = impl_->order.sugar(v);
  Pair p{s, v.front().mono, v.front().comp, static_cast<int>(impl_->pending.size()), -1};
  impl_->pending.push_back(std::move(v));
  impl_->queue.insert(p);
}

void GroebnerEngine::run(int degree_bound) { impl_->run(degree_bound); }

bool GroebnerEngine::done(int degree_bound) const { return impl_->queue.empty() || next_degree() > degree_bound; }

int GroebnerEngine::next_degree() const { return impl_->queue.empty() ? INT_MAX : impl_->queue.begin()->sugar; }

Vec GroebnerEngine::reduce(const Vec& v, bool monic) const {
  Vec r = impl_->full_reduce(v);
  if (monic) impl_->order.make_monic(r);
  return r;
}

std::vector<Vec> GroebnerEngine::reduced_basis() const {
  std::vector<Vec> out;
  for (int k : impl_->active) {
    const Vec& g = impl_->basis[k].v;
    Vec tail(g.begin() + 1, g.end());
    Vec r{g.front()};
    for (auto& t : impl_->full_reduce(tail)) r.push_back(std::move(t));
    impl_->order.make_monic(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [&](const Vec& a, const Vec& b) { return impl_->order.compare(a.front(), b.front()) < 0; });
  return out;
}

std::size_t GroebnerEngine::size() const { return impl_->active.size(); }

GroebnerEngine::Stats GroebnerEngine::stats() const { return impl_->stats; }

Vec to_vec(const Polynomial& f, std::uint32_t comp) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.mono, comp, t.coeff});
  return v;
}

Polynomial from_vec(const RingPtr& ring, const Vec& v, std::uint32_t comp) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  GroebnerEngine eng(ring);
  for (const auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("ring mismatch");
    eng.add_generator(to_vec(g));
  }
  eng.run();
  std::vector<Polynomial> out;
  for (const auto& v : eng.reduced_basis()) out.push_back(from_vec(ring, v));
  return out;
}

namespace {

// a + c*m*b on descending term lists.
std::vector<Term> axpy_terms(const PolyRing& ring, const std::vector<Term>& a, const Scalar& c, const Monomial& m,
                             std::span<const Term> b) {
  const auto& F = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  for (const auto& tb : b) {
    Monomial mb = tb.mono * m;
    while (i < a.size() && ring.compare(a[i].mono, mb) > 0) out.push_back(a[i++]);
    if (i < a.size() && a[i].mono == mb) {
      Scalar s = F.add(a[i].coeff, F.mul(c, tb.coeff));
      if (!F.is_zero(s)) out.push_back({mb, std::move(s)});
      ++i;
    } else {
      out.push_back({mb, F.mul(c, tb.coeff)});
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

}  // namespace

Polynomial reduce_polynomial(const Polynomial& f, const std::vector<Polynomial>& gb) {
  const auto& ring = f.ring();
  const auto& F = ring->field();
  std::vector<Term> done;
  std::vector<Term> rest(f.terms().begin(), f.terms().end());
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const Term& t = rest[pos];
    const Polynomial* g = nullptr;
    for (const auto& h : gb)
      if (!h.is_zero() && h.leading().mono.divides(t.mono)) {
        g = &h;
        break;
      }
    if (!g) {
      done.push_back(t);
      ++pos;
      continue;
    }
    Scalar c = F.neg(F.div(t.coeff, g->leading().coeff));
    Monomial q = t.mono / g->leading().mono;
    std::vector<Term> tail(rest.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rest.end());
    rest = axpy_terms(*ring, tail, c, q, g->terms().subspan(1));
    pos = 0;
  }
  return Polynomial::from_sorted_terms(ring, std::move(done));
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& gb) {
  if (gb.empty()) return true;
  const auto& F = gb.front().field();
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const auto& a = gb[i].leading();
      const auto& b = gb[j].leading();
      Monomial l = a.mono.lcm(b.mono);
      Polynomial s = gb[i].mul_term(l / a.mono, F.inv(a.coeff)) - gb[j].mul_term(l / b.mono, F.inv(b.coeff));
      if (!reduce_polynomial(s, gb).is_zero()) return false;
    }
  return true;
}

namespace {

// out += c * src, both descending.
void add_scaled(const PolyRing& ring, std::vector<Term>& out, const std::vector<Term>& src, const Scalar& c) {
  const auto& F = ring.field();
  std::vector<Term> res;
  res.reserve(out.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < out.size() || j < src.size()) {
    int cmp = i == out.size() ? -1 : j == src.size() ? 1 : ring.compare(out[i].mono, src[j].mono);
    if (cmp > 0) {
      res.push_back(std::move(out[i++]));
    } else if (cmp < 0) {
      res.push_back({src[j].mono, F.mul(c, src[j].coeff)});
      ++j;
    } else {
      Scalar s = F.add(out[i].coeff, F.mul(c, src[j].coeff));
      if (!F.is_zero(s)) res.push_back({out[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out = std::move(res);
}

}  // namespace

MonomialReducer::MonomialReducer(RingPtr ring, std::shared_ptr<const std::vector<Polynomial>> gb)
    : ring_(std::move(ring)), gb_(std::move(gb)) {}

bool MonomialReducer::is_standard(const Monomial& m) const {
  for (const auto& g : *gb_)
    if (g.leading().mono.divides(m)) return false;
  return true;
}

const std::vector<Term>& MonomialReducer::normal_form(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  const auto& F = ring_->field();
  const Polynomial* g = nullptr;
  for (const auto& h : *gb_)
    if (h.leading().mono.divides(m)) {
      g = &h;
      break;
    }
  std::vector<Term> nf;
  if (!g) {
    nf.push_back({m, F.one()});
  } else {
    Monomial q = m / g->leading().mono;
    Scalar scale = F.neg(F.inv(g->leading().coeff));
    for (std::size_t k = 1; k < g->size(); ++k) {
      const auto& t = g->terms()[k];
      const auto& sub = normal_form(t.mono * q);
      add_scaled(*ring_, nf, sub, F.mul(scale, t.coeff));
    }
  }
  return cache_.emplace(m, std::move(nf)).first->second;
}

std::vector<Term> MonomialReducer::normal_form(const Polynomial& f, const Monomial& m) {
  std::vector<Term> out;
  bool unit = m.size() == 0;
  for (const auto& t : f.terms()) {
    const auto& sub = normal_form(unit ? t.mono : t.mono * m);
    add_scaled(*ring_, out, sub, t.coeff);
  }
  return out;
}

std::vector<std::size_t> minimal_generating_subset(const RingPtr& ring, const ModuleLayout& layout,
                                                   const std::vector<Vec>& gens) {
  ModuleOrder order(ring, layout);
  const auto& F = ring->field();
  std::vector<Vec> canon;
  std::vector<int> deg;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Vec v = order.canonical(gens[i]);
    int d = INT_MIN;
    for (const auto& t : v) {
      int td = order.degree(t);
      if (d != INT_MIN && td != d) throw std::invalid_argument("non-homogeneous input");
      d = td;
    }
    canon.push_back(std::move(v));
    deg.push_back(d);
    if (d != INT_MIN) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });

  GroebnerEngine eng(ring, layout);
  std::vector<std::size_t> chosen;
  std::size_t pos = 0;
  while (pos < idx.size()) {
    const int D = deg[idx[pos]];
    eng.run(D);
    // Independent remainders found so far in degree D, with distinct leads.
    std::vector<Vec> local;
    for (; pos < idx.size() && deg[idx[pos]] == D; ++pos) {
      Vec r = eng.reduce(canon[idx[pos]]);
      bool changed = true;
      while (!r.empty() && changed) {
        changed = false;
        for (const auto& l : local) {
          if (order.compare(l.front(), r.front()) != 0) continue;
          r = order.axpy(r, F.neg(r.front().coeff), Monomial(ring->nvars()), l);
          changed = true;
          break;
        }
      }
      if (r.empty()) continue;
      order.make_monic(r);
      local.push_back(std::move(r));
      chosen.push_back(idx[pos]);
    }
    for (std::size_t k = chosen.size() - local.size(); k < chosen.size(); ++k) eng.add_generator(canon[chosen[k]]);
  }
  return chosen;
}

}  // namespace hilbtan
