#include "hilbtan/tangent.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "hilbtan/resolution.hpp"

namespace hilbtan {

namespace {

Bidegree term_bidegree(const PolyRing& ring, const VTerm& t, const std::vector<GradedGenerator>& gens) {
  return ring.bidegree(t.mono) + gens[t.comp].degree;
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++) body(i, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("HILBTAN_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

TangentContext::TangentContext(IdealHandle J) : J_(std::move(J)) {
  if (!J_.is_bihomogeneous()) throw std::invalid_argument("tangent computations need a bihomogeneous ideal");
  auto sm = all_standard_monomials(J_);
  if (!sm) throw std::invalid_argument("tangent computations need finite colength");
  const auto& ring = *J_.ring();
  top_ = {-1, -1};
  for (const auto& m : *sm) {
    Bidegree b = ring.bidegree(m);
    standard_[b].push_back(m);
    top_.x = std::max(top_.x, b.x);
    top_.y = std::max(top_.y, b.y);
  }
  for (const auto& g : J_.minimal_generators())
    if (!g.poly.is_zero()) gens_.push_back(g);
  std::vector<Vec> vs;
  for (const auto& g : gens_) vs.push_back(to_vec(g.poly));
  if (!vs.empty()) syz_ = minimal_module_syzygies(J_.ring(), ModuleLayout::ideal(), vs);
}

std::pair<Bidegree, Bidegree> TangentContext::window() const {
  if (gens_.empty() || top_.x < 0) return {{0, 0}, {-1, -1}};
  Bidegree mx{INT_MIN, INT_MIN}, mn{INT_MAX, INT_MAX};
  for (const auto& g : gens_) {
    mx.x = std::max(mx.x, g.degree.x);
    mx.y = std::max(mx.y, g.degree.y);
    mn.x = std::min(mn.x, g.degree.x);
    mn.y = std::min(mn.y, g.degree.y);
  }
  return {{-mx.x, -mx.y}, {top_.x - mn.x, top_.y - mn.y}};
}

const std::vector<Monomial>& TangentContext::standard(Bidegree d) const {
  auto it = standard_.find(d);
  return it == standard_.end() ? empty_ : it->second;
}

namespace {

struct Columns {
  std::vector<std::vector<std::size_t>> col;  // col[i][k] for targets[i][k]
  std::size_t count = 0;
};

Columns layout_columns(const PolyRing& ring, const std::vector<std::vector<Monomial>>& targets) {
  struct Key {
    const Monomial* m;
    std::size_t i, k;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t k = 0; k < targets[i].size(); ++k) keys.push_back({&targets[i][k], i, k});
  std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    int c = ring.compare(*a.m, *b.m);
    if (c != 0) return c > 0;
    return a.i < b.i;
  });
  Columns out;
  out.col.resize(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) out.col[i].resize(targets[i].size());
  for (std::size_t c = 0; c < keys.size(); ++c) out.col[keys[c].i][keys[c].k] = c;
  out.count = keys.size();
  return out;
}

HomPiece compute_piece(const TangentContext& ctx, Bidegree d, bool with_basis, MonomialReducer& red) {
  const auto& ring = *ctx.ring();
  const auto& F = ring.field();
  const auto& gens = ctx.generators();
  HomPiece out;
  out.degree = d;
  for (const auto& g : gens) out.targets.push_back(ctx.standard(g.degree + d));
  Columns cols = layout_columns(ring, out.targets);
  if (cols.count == 0) return out;

  SparseLinearSystem sys(F, cols.count);
  for (const auto& s : ctx.syzygies()) {
    Bidegree t = term_bidegree(ring, s.front(), gens) + d;
    const auto& rowmons = ctx.standard(t);
    if (rowmons.empty()) continue;
    std::unordered_map<Monomial, std::size_t, MonomialHash> rowidx;
    for (std::size_t r = 0; r < rowmons.size(); ++r) rowidx.emplace(rowmons[r], r);
    std::vector<std::vector<SparseLinearSystem::Entry>> rows(rowmons.size());
    for (const auto& term : s) {
      const auto& tg = out.targets[term.comp];
      for (std::size_t k = 0; k < tg.size(); ++k) {
        const auto& nf = red.normal_form(term.mono * tg[k]);
        for (const auto& nt : nf) rows[rowidx.at(nt.mono)].push_back({cols.col[term.comp][k], F.mul(term.coeff, nt.coeff)});
      }
    }
    for (auto& r : rows)
      if (!r.empty()) sys.add_row(std::move(r));
  }
  auto sol = sys.solve(with_basis);
  out.dimension = sol.kernel_dimension;
  if (with_basis) {
    for (const auto& v : sol.kernel) {
      GeneratorImages img(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < out.targets[i].size(); ++k) img[i].push_back(v[cols.col[i][k]]);
      out.basis.push_back(std::move(img));
    }
  }
  return out;
}

}  // namespace

HomPiece TangentContext::piece(Bidegree d, bool with_basis) const {
  MonomialReducer red(ring(), J_.groebner_basis_ptr());
  return compute_piece(*this, d, with_basis, red);
}

bool TangentContext::is_homomorphism(Bidegree d, const GeneratorImages& images) const {
  const auto& ring = *this->ring();
  const auto& F = ring.field();
  if (images.size() != gens_.size()) throw std::invalid_argument("one image per generator expected");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (images[i].size() != standard(gens_[i].degree + d).size()) throw std::invalid_argument("image size mismatch");
  MonomialReducer red(this->ring(), J_.groebner_basis_ptr());
  for (const auto& s : syz_) {
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    for (const auto& term : s) {
      const auto& tg = standard(gens_[term.comp].degree + d);
      for (std::size_t k = 0; k < tg.size(); ++k) {
        const auto& u = images[term.comp][k];
        if (F.is_zero(u)) continue;
        Scalar c = F.mul(term.coeff, u);
        for (const auto& nt : red.normal_form(term.mono * tg[k])) {
          auto [it, fresh] = acc.emplace(nt.mono, F.zero());
          it->second = F.add(it->second, F.mul(c, nt.coeff));
        }
      }
    }
    for (const auto& [m, c] : acc)
      if (!F.is_zero(c)) return false;
  }
  return true;
}

GeneratorImages TangentContext::derivation_images(Bidegree d, const std::vector<Polynomial>& var_images) const {
  const auto& ring = this->ring();
  if (var_images.size() != ring->nvars()) throw std::invalid_argument("one image per variable expected");
  MonomialReducer red(ring, J_.groebner_basis_ptr());
  GeneratorImages out;
  for (const auto& g : gens_) {
    Polynomial Dg(ring);
    for (std::size_t j = 0; j < ring->nvars(); ++j) {
      if (var_images[j].is_zero()) continue;
      Dg = Dg + var_images[j] * g.poly.derivative(j);
    }
    const auto& tg = standard(g.degree + d);
    std::vector<Scalar> coords(tg.size(), ring->field().zero());
    for (const auto& t : red.normal_form(Dg)) {
      auto it = std::find(tg.begin(), tg.end(), t.mono);
      if (it == tg.end()) throw std::invalid_argument("derivation is not homogeneous of the requested bidegree");
      coords[static_cast<std::size_t>(it - tg.begin())] = t.coeff;
    }
    out.push_back(std::move(coords));
  }
  return out;
}

HomPiece hom_piece(const IdealHandle& J, Bidegree d, bool with_basis) {
  return TangentContext(J).piece(d, with_basis);
}

std::string HomProfile::serialize() const {
  std::ostringstream os;
  for (const auto& [d, n] : pieces) os << d.to_string() << ": " << n << "\n";
  os << "negative_total: " << negative_total << "\n";
  os << "gmap_total: " << gmap_total << "\n";
  return os.str();
}

HomProfile hom_profile(const TangentContext& ctx, ProfileScope scope, unsigned threads) {
  HomProfile prof;
  prof.scope = scope;
  auto [lo, hi] = ctx.window();
  prof.lo = lo;
  prof.hi = hi;
  std::vector<Bidegree> ds;
  for (int a = lo.x; a <= hi.x; ++a)
    for (int b = lo.y; b <= hi.y; ++b)
      if (scope == ProfileScope::full || a + b <= 0) ds.push_back({a, b});
  if (threads == 0) threads = default_thread_count();
  std::vector<std::size_t> dims(ds.size());
  std::vector<std::unique_ptr<MonomialReducer>> reducers(std::max(1u, threads));
  parallel_for(ds.size(), threads, [&](std::size_t i, unsigned t) {
    if (!reducers[t]) reducers[t] = std::make_unique<MonomialReducer>(ctx.ring(), ctx.ideal().groebner_basis_ptr());
    dims[i] = compute_piece(ctx, ds[i], false, *reducers[t]).dimension;
  });
  for (std::size_t i = 0; i < ds.size(); ++i) {
    prof.pieces[ds[i]] = dims[i];
    if (ds[i].x + ds[i].y < 0) prof.negative_total += dims[i];
    if (ds[i].x >= 1 && ds[i].y == -ds[i].x) prof.gmap_total += dims[i];
  }
  return prof;
}

HomProfile hom_profile(const IdealHandle& J, ProfileScope scope, unsigned threads) {
  return hom_profile(TangentContext(J), scope, threads);
}

TntReport tnt_check(const TangentContext& ctx, unsigned threads) {
  TntReport r;
  r.profile = hom_profile(ctx, ProfileScope::nonpositive, threads);
  r.negative_total = r.profile.negative_total;
  r.nvars = ctx.ring()->nvars();
  r.tnt = r.negative_total == r.nvars;
  return r;
}

TntReport tnt_check(const IdealHandle& J, unsigned threads) { return tnt_check(TangentContext(J), threads); }

LieTangentReport degree_zero_orbit(const TangentContext& ctx, unsigned threads) {
  const auto& ring = ctx.ring();
  const auto& F = ring->field();
  const std::size_t N = ring->nvars();
  LieTangentReport rep;
  rep.ambient_dim = N * N;
  MonomialReducer red(ring, ctx.ideal().groebner_basis_ptr());
  SparseLinearSystem sys(F, N * N);
  for (const auto& g : ctx.generators()) {
    const auto& tg = ctx.standard(g.degree);
    if (tg.empty()) continue;
    std::unordered_map<Monomial, std::size_t, MonomialHash> rowidx;
    for (std::size_t r = 0; r < tg.size(); ++r) rowidx.emplace(tg[r], r);
    std::vector<std::vector<SparseLinearSystem::Entry>> rows(tg.size());
    for (std::size_t j = 0; j < N; ++j) {
      Polynomial dg = g.poly.derivative(j);
      if (dg.is_zero()) continue;
      for (std::size_t k = 0; k < N; ++k) {
        // the matrix entry A_jk contributes x_k * d g / d x_j
        for (const auto& t : red.normal_form(dg, Monomial::variable(N, k)))
          rows[rowidx.at(t.mono)].push_back({j * N + k, t.coeff});
      }
    }
    for (auto& r : rows)
      if (!r.empty()) sys.add_row(std::move(r));
  }
  rep.derivation_kernel_dim = sys.solve(false).kernel_dimension;
  if (F.is_prime()) {
    const long p = static_cast<long>(F.characteristic());
    const int top = ctx.support_max().total();
    for (long pe = p; pe <= top + 1; pe *= p) {
      // V = {c : sum c_k x_k^pe in J}; a group element maps V into itself.
      std::unordered_map<Monomial, std::size_t, MonomialHash> rowidx;
      std::vector<std::vector<Scalar>> eqs;
      for (std::size_t k = 0; k < N; ++k)
        for (const auto& t : red.normal_form(Monomial::variable(N, k, static_cast<int>(pe)))) {
          auto [it, fresh] = rowidx.emplace(t.mono, eqs.size());
          if (fresh) eqs.emplace_back(N, F.zero());
          eqs[it->second][k] = t.coeff;
        }
      RowEchelon M(F, N);
      for (const auto& e : eqs) M.insert(e);
      if (M.rank() == 0 || M.rank() == N) continue;
      for (const auto& u : M.rows())
        for (const auto& v : M.nullspace()) {
          std::vector<SparseLinearSystem::Entry> row;
          for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k)
              if (!F.is_zero(v[j]) && !F.is_zero(u[k])) row.push_back({j * N + k, F.mul(v[j], u[k])});
          if (!row.empty()) sys.add_row(std::move(row));
        }
    }
  }
  rep.kernel_dim = sys.solve(false).kernel_dimension;
  rep.orbit_dim = rep.ambient_dim - rep.kernel_dim;

  auto [lo, hi] = ctx.window();
  std::vector<Bidegree> ds;
  for (int a = lo.x; a <= hi.x; ++a)
    if (-a >= lo.y && -a <= hi.y) ds.push_back({a, -a});
  if (threads == 0) threads = default_thread_count();
  std::vector<std::size_t> dims(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t i, unsigned) { dims[i] = ctx.piece(ds[i]).dimension; });
  for (auto v : dims) rep.hom0_dim += v;
  return rep;
}

LieTangentReport degree_zero_orbit(const IdealHandle& J, unsigned threads) {
  if (!J.is_homogeneous()) throw std::invalid_argument("non-homogeneous input");
  return degree_zero_orbit(TangentContext(J), threads);
}

std::size_t gprime_q_stabilizer(std::size_t n, const FieldSpec& field) {
  if (field.is_prime() && field.characteristic() == 2)
    throw std::invalid_argument("characteristic 2: the stabilizer of Q is not the antisymmetric matrices");
  const auto& F = field;
  SparseLinearSystem sys(F, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // coefficient of x_i x_j in sum A_ij x_i x_j
      if (i == j)
        sys.add_row({{i * n + i, F.one()}});
      else
        sys.add_row({{i * n + j, F.one()}, {j * n + i, F.one()}});
    }
  return sys.solve(false).kernel_dimension;
}

GMapReport gmap_check(const TangentContext& ctx, const HomProfile& profile) {
  const auto& ring = ctx.ring();
  const std::size_t n = ring->nx();
  if (ring->ny() != n) throw std::invalid_argument("the g-map check needs as many y- as x-variables");
  GMapReport rep;
  rep.expected = n * n;
  for (const auto& [d, dim] : profile.pieces)
    if (d.x >= 1 && d.y == -d.x) rep.gmap_total += dim;
  const Bidegree d{1, -1};
  std::size_t width = 0;
  for (const auto& g : ctx.generators()) width += ctx.standard(g.degree + d).size();
  RowEchelon ech(ring->field(), width);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Polynomial> images(ring->nvars(), Polynomial(ring));
      images[n + i] = Polynomial::variable(ring, j);
      std::vector<Scalar> flat;
      for (auto& part : ctx.derivation_images(d, images)) flat.insert(flat.end(), part.begin(), part.end());
      ech.insert(flat);
    }
  rep.derivation_rank = ech.rank();
  return rep;
}

namespace {

// Graded piece data for the oracle: J_e as a row-reduced span in the
// monomial basis of T_e, with quotient coordinates on the non-pivot columns.
struct Level {
  std::vector<Monomial> mons;
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  std::vector<std::vector<Scalar>> rows;  // reduced basis of J_e
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> quot;          // non-pivot columns
  std::vector<long> quot_pos;             // column -> quotient coordinate or -1
};

class Oracle {
 public:
  Oracle(const IdealHandle& J, std::size_t budget) : J_(J), ring_(J.ring()), budget_(budget) {
    for (const auto& g : J.generators()) {
      if (g.is_zero()) continue;
      if (!g.is_bihomogeneous()) throw std::invalid_argument("oracle needs bihomogeneous generators");
      gens_.push_back({g, *g.bidegree()});
    }
  }

  const Level& level(Bidegree e) {
    auto it = levels_.find(e);
    if (it != levels_.end()) return it->second;
    Level L;
    const auto& F = ring_->field();
    if (e.nonnegative() && (ring_->bigraded() || e.y == 0)) L.mons = monomials_of_bidegree(*ring_, e);
    if (L.mons.size() > budget_) throw OracleBudgetExceeded("graded piece too large for the oracle");
    for (std::size_t i = 0; i < L.mons.size(); ++i) L.idx.emplace(L.mons[i], i);
    RowEchelon ech(F, L.mons.size());
    for (const auto& g : gens_) {
      Bidegree rest = e - g.degree;
      if (!rest.nonnegative() || (!ring_->bigraded() && rest.y != 0)) continue;
      for (const auto& m : monomials_of_bidegree(*ring_, rest)) {
        if (ech.rank() == L.mons.size()) break;
        std::vector<Scalar> v(L.mons.size(), F.zero());
        for (const auto& t : g.poly.terms()) v[L.idx.at(t.mono * m)] = t.coeff;
        ech.insert(v);
      }
    }
    L.rows = ech.rows();
    L.pivots = ech.pivot_columns();
    L.quot_pos.assign(L.mons.size(), -1);
    std::vector<char> piv(L.mons.size(), 0);
    for (auto c : L.pivots) piv[c] = 1;
    for (std::size_t c = 0; c < L.mons.size(); ++c)
      if (!piv[c]) {
        L.quot_pos[c] = static_cast<long>(L.quot.size());
        L.quot.push_back(c);
      }
    return levels_.emplace(e, std::move(L)).first->second;
  }

  // Quotient coordinates of the class of monomial m in (T/J)_e.
  std::vector<Scalar> project(const Monomial& m, Bidegree e) {
    const Level& L = level(e);
    const auto& F = ring_->field();
    std::vector<Scalar> out(L.quot.size(), F.zero());
    std::size_t c = L.idx.at(m);
    if (L.quot_pos[c] >= 0) {
      out[static_cast<std::size_t>(L.quot_pos[c])] = F.one();
      return out;
    }
    for (std::size_t j = 0; j < L.pivots.size(); ++j)
      if (L.pivots[j] == c) {
        for (std::size_t q = 0; q < L.quot.size(); ++q) out[q] = F.neg(L.rows[j][L.quot[q]]);
        break;
      }
    return out;
  }

  std::size_t run(Bidegree d) {
    const auto& F = ring_->field();
    const std::size_t nv = ring_->nvars();
    // Support of T/J: stop at the first total degree where J fills T.
    std::set<Bidegree> supp;
    for (int t = 0;; ++t) {
      if (t > 200) throw OracleBudgetExceeded("quotient does not look finite");
      bool full = true;
      for (int y = 0; y <= (ring_->bigraded() ? t : 0); ++y) {
        Bidegree e{t - y, y};
        if (!level(e).quot.empty()) {
          supp.insert(e);
          full = false;
        }
      }
      if (full) break;
    }
    auto in_supp = [&](Bidegree e) { return supp.count(e) > 0; };

    // Unknown blocks phi_e : J_e -> (T/J)_{e+d}.
    std::map<Bidegree, std::size_t> offset;
    std::size_t ncols = 0;
    std::set<Bidegree> E;
    for (const auto& s : supp) {
      Bidegree e = s - d;
      if (!e.nonnegative() || (!ring_->bigraded() && e.y != 0)) continue;
      const Level& L = level(e);
      if (L.rows.empty()) continue;
      E.insert(e);
      offset[e] = ncols;
      ncols += L.rows.size() * level(s).quot.size();
      if (ncols > budget_ * 4) throw OracleBudgetExceeded("too many unknowns for the oracle");
    }
    if (ncols == 0) return 0;
    auto col = [&](Bidegree e, std::size_t k, std::size_t q) {
      return offset.at(e) + k * level(e + d).quot.size() + q;
    };
    auto var_degree = [&](std::size_t v) { return v < ring_->nx() ? Bidegree{1, 0} : Bidegree{0, 1}; };

    SparseLinearSystem sys(F, ncols);
    // phi_{e'}(v f) expressed through the reduced basis of J_{e'}.
    auto lhs = [&](Bidegree e2, const std::vector<Scalar>& w, std::vector<std::vector<SparseLinearSystem::Entry>>& rows) {
      const Level& L2 = level(e2);
      const std::size_t qn = level(e2 + d).quot.size();
      for (std::size_t j = 0; j < L2.pivots.size(); ++j) {
        const Scalar& cj = w[L2.pivots[j]];
        if (F.is_zero(cj)) continue;
        for (std::size_t r = 0; r < qn; ++r) rows[r].push_back({col(e2, j, r), cj});
      }
    };
    auto multiply = [&](const std::vector<Scalar>& f, const Level& L, std::size_t v, const Level& L2) {
      std::vector<Scalar> w(L2.mons.size(), F.zero());
      Monomial xv = Monomial::variable(nv, v);
      for (std::size_t c = 0; c < f.size(); ++c)
        if (!F.is_zero(f[c])) w[L2.idx.at(L.mons[c] * xv)] = f[c];
      return w;
    };

    for (const auto& e : E) {
      const Level& L = level(e);
      const Level& Q = level(e + d);
      for (std::size_t v = 0; v < nv; ++v) {
        Bidegree e2 = e + var_degree(v);
        if (!in_supp(e2 + d)) continue;
        const Level& L2 = level(e2);
        const std::size_t qn2 = level(e2 + d).quot.size();
        // projections of v * b_q
        std::vector<std::vector<Scalar>> vb;
        for (std::size_t q = 0; q < Q.quot.size(); ++q)
          vb.push_back(project(Q.mons[Q.quot[q]] * Monomial::variable(nv, v), e2 + d));
        for (std::size_t k = 0; k < L.rows.size(); ++k) {
          std::vector<std::vector<SparseLinearSystem::Entry>> rows(qn2);
          lhs(e2, multiply(L.rows[k], L, v, L2), rows);
          for (std::size_t q = 0; q < Q.quot.size(); ++q)
            for (std::size_t r = 0; r < qn2; ++r)
              if (!F.is_zero(vb[q][r])) rows[r].push_back({col(e, k, q), F.neg(vb[q][r])});
          for (auto& row : rows)
            if (!row.empty()) sys.add_row(std::move(row));
        }
      }
    }
    // Blocks outside E that map into E must vanish there.
    for (const auto& e2 : E) {
      for (std::size_t v = 0; v < nv; ++v) {
        Bidegree e = e2 - var_degree(v);
        if (!e.nonnegative() || E.count(e)) continue;
        const Level& L = level(e);
        if (L.rows.empty()) continue;
        const Level& L2 = level(e2);
        const std::size_t qn2 = level(e2 + d).quot.size();
        for (std::size_t k = 0; k < L.rows.size(); ++k) {
          std::vector<std::vector<SparseLinearSystem::Entry>> rows(qn2);
          lhs(e2, multiply(L.rows[k], L, v, L2), rows);
          for (auto& row : rows)
            if (!row.empty()) sys.add_row(std::move(row));
        }
      }
    }
    return sys.solve(false).kernel_dimension;
  }

 private:
  IdealHandle J_;
  RingPtr ring_;
  std::size_t budget_;
  std::vector<GradedGenerator> gens_;
  std::map<Bidegree, Level> levels_;
};

}  // namespace

std::size_t hom_brute_force_oracle(const IdealHandle& J, Bidegree d, std::size_t max_columns) {
  return Oracle(J, max_columns).run(d);
}

}  // namespace hilbtan
