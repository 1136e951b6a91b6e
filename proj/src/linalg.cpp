#include "hilbtan/linalg.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <span>
#include <type_traits>
#include <stdexcept>

#include "hilbtan/kernels.hpp"

namespace hilbtan {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void make_primitive(std::vector<mpz_class>& v, std::size_t from) {
  mpz_class g = 0;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i] != 0) mpz_divexact(v[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

struct RowEchelon::Impl {
  std::size_t ncols = 0;
  std::uint32_t p = 0;
  std::vector<std::size_t> piv;
  std::vector<std::vector<std::uint32_t>> modrows;
  std::vector<std::vector<mpz_class>> zrows;

  void reduce_mod(std::vector<std::uint32_t>& row) const {
    for (std::size_t i = 0; i < piv.size(); ++i) {
      std::size_t pc = piv[i];
      std::uint32_t c = row[pc];
      if (!c) continue;
      std::span<std::uint32_t> dst(row.data() + pc, ncols - pc);
      std::span<const std::uint32_t> src(modrows[i].data() + pc, ncols - pc);
      kernels::axpy_mod(dst, src, p - c, p);
    }
  }

  void reduce_z(std::vector<mpz_class>& row) const {
    mpz_class a, b;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      std::size_t pc = piv[i];
      if (row[pc] == 0) continue;
      const auto& r = zrows[i];
      a = r[pc];
      b = row[pc];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (row[j] != 0) row[j] *= a;
        if (j >= pc && r[j] != 0) row[j] -= b * r[j];
      }
      make_primitive(row, 0);
    }
  }

  bool insert_mod(std::vector<std::uint32_t> row) {
    reduce_mod(row);
    std::size_t f = kernels::first_nonzero(row, 0);
    if (f == ncols) return false;
    std::span<std::uint32_t> tail(row.data() + f, ncols - f);
    if (row[f] != 1) kernels::scale_mod(tail, inverse_mod(row[f], p), p);
    for (auto& r : modrows) {
      std::uint32_t c = r[f];
      if (!c) continue;
      kernels::axpy_mod(std::span<std::uint32_t>(r.data() + f, ncols - f), tail, p - c, p);
    }
    // keep rows sorted by pivot
    std::size_t pos = 0;
    while (pos < piv.size() && piv[pos] < f) ++pos;
    piv.insert(piv.begin() + static_cast<std::ptrdiff_t>(pos), f);
    modrows.insert(modrows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
  }

  bool insert_z(std::vector<mpz_class> row) {
    reduce_z(row);
    std::size_t f = 0;
    while (f < ncols && row[f] == 0) ++f;
    if (f == ncols) return false;
    if (row[f] < 0)
      for (auto& e : row) e = -e;
    make_primitive(row, f);
    mpz_class a, b;
    for (auto& r : zrows) {
      if (r[f] == 0) continue;
      a = row[f];
      b = r[f];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (r[j] != 0) r[j] *= a;
        if (row[j] != 0) r[j] -= b * row[j];
      }
      make_primitive(r, 0);
    }
    std::size_t pos = 0;
    while (pos < piv.size() && piv[pos] < f) ++pos;
    piv.insert(piv.begin() + static_cast<std::ptrdiff_t>(pos), f);
    zrows.insert(zrows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
  }

  std::vector<mpz_class> to_integers(const std::vector<Scalar>& row) const {
    mpz_class den = 1;
    for (const auto& s : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational().get_den_mpz_t());
    std::vector<mpz_class> out(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      const auto& q = row[j].rational();
      if (q == 0) continue;
      out[j] = q.get_num() * (den / q.get_den());
    }
    return out;
  }

  std::vector<std::uint32_t> to_residues(const std::vector<Scalar>& row) const {
    std::vector<std::uint32_t> out(ncols);
    for (std::size_t j = 0; j < ncols; ++j) out[j] = row[j].residue();
    return out;
  }
};

RowEchelon::RowEchelon(const FieldSpec& field, std::size_t ncols) : field_(field), impl_(std::make_unique<Impl>()) {
  if (!field.is_field()) throw std::invalid_argument("row echelon needs a field");
  impl_->ncols = ncols;
  impl_->p = field.is_prime() ? field.characteristic() : 0;
}

RowEchelon::~RowEchelon() = default;
RowEchelon::RowEchelon(RowEchelon&&) noexcept = default;
RowEchelon& RowEchelon::operator=(RowEchelon&&) noexcept = default;

std::size_t RowEchelon::ncols() const { return impl_->ncols; }
std::size_t RowEchelon::rank() const { return impl_->piv.size(); }

bool RowEchelon::insert(const std::vector<Scalar>& row) {
  if (row.size() != impl_->ncols) throw std::invalid_argument("row length mismatch");
  if (field_.is_prime()) return impl_->insert_mod(impl_->to_residues(row));
  return impl_->insert_z(impl_->to_integers(row));
}

bool RowEchelon::insert_residues(std::vector<std::uint32_t> row) {
  if (!field_.is_prime()) throw std::logic_error("residue rows need a prime field");
  if (row.size() != impl_->ncols) throw std::invalid_argument("row length mismatch");
  return impl_->insert_mod(std::move(row));
}

bool RowEchelon::contains(const std::vector<Scalar>& row) const {
  if (row.size() != impl_->ncols) throw std::invalid_argument("row length mismatch");
  if (field_.is_prime()) {
    auto r = impl_->to_residues(row);
    impl_->reduce_mod(r);
    return kernels::first_nonzero(r, 0) == impl_->ncols;
  }
  auto r = impl_->to_integers(row);
  impl_->reduce_z(r);
  for (const auto& e : r)
    if (e != 0) return false;
  return true;
}

std::vector<std::size_t> RowEchelon::pivot_columns() const { return impl_->piv; }

std::vector<std::vector<Scalar>> RowEchelon::rows() const {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < impl_->piv.size(); ++i) {
    std::vector<Scalar> r(impl_->ncols, field_.zero());
    if (field_.is_prime()) {
      for (std::size_t j = 0; j < impl_->ncols; ++j) r[j] = Scalar(impl_->modrows[i][j]);
    } else {
      const auto& z = impl_->zrows[i];
      mpz_class lead = z[impl_->piv[i]];
      for (std::size_t j = 0; j < impl_->ncols; ++j) {
        if (z[j] == 0) continue;
        mpq_class q(z[j], lead);
        q.canonicalize();
        r[j] = Scalar(std::move(q));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<Scalar>> RowEchelon::nullspace() const {
  const std::size_t n = impl_->ncols;
  std::vector<char> is_pivot(n, 0);
  for (auto c : impl_->piv) is_pivot[c] = 1;
  auto R = rows();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(n, field_.zero());
    v[c] = field_.one();
    for (std::size_t i = 0; i < R.size(); ++i)
      if (!field_.is_zero(R[i][c])) v[impl_->piv[i]] = field_.neg(R[i][c]);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct ModP {
  using T = std::uint32_t;
  std::uint32_t p;
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(T a) const { return Scalar(a); }
  bool is_zero(T a) const { return a == 0; }
  T sub(T a, T b) const { return a >= b ? a - b : a + (p - b); }
  T mul(T a, T b) const { return static_cast<T>(static_cast<std::uint64_t>(a) * b % p); }
  T neg(T a) const { return a ? p - a : 0; }
  T inv(T a) const { return inverse_mod(a, p); }
};

struct Rat {
  using T = mpq_class;
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const T& a) const { return Scalar(a); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
};

template <class K>
class SparseSolver {
 public:
  using T = typename K::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  SparseSolver(K k, const FieldSpec& field, std::size_t ncols) : k_(std::move(k)), field_(field), ncols_(ncols) {}

  SparseLinearSystem::Solution run(std::vector<Row> rows, bool want_kernel, std::size_t maxw) {
    SparseLinearSystem::Solution sol;
    std::vector<std::vector<std::uint32_t>> colrows(ncols_);
    std::vector<char> alive(rows.size(), 1), col_done(ncols_, 0);
    std::vector<std::vector<std::uint32_t>> buckets(maxw + 1);
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) {
        alive[r] = 0;
        continue;
      }
      for (const auto& e : rows[r]) colrows[e.first].push_back(r);
      if (rows[r].size() <= maxw) buckets[rows[r].size()].push_back(r);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;  // (row, col)

    std::size_t w = 1;
    while (true) {
      while (w <= maxw && buckets[w].empty()) ++w;
      if (w > maxw) break;
      std::uint32_t r = buckets[w].back();
      buckets[w].pop_back();
      if (!alive[r] || rows[r].size() != w) continue;
      // pivot column: the one shared with the fewest rows
      std::uint32_t c = rows[r].front().first;
      std::size_t best = SIZE_MAX;
      for (const auto& e : rows[r])
        if (colrows[e.first].size() < best) {
          best = colrows[e.first].size();
          c = e.first;
        }
      const T pv = value_at(rows[r], c);
      const T pinv = k_.inv(pv);
      std::vector<std::uint32_t> users;
      users.swap(colrows[c]);
      for (std::uint32_t r2 : users) {
        if (r2 == r || !alive[r2]) continue;
        auto it = find(rows[r2], c);
        if (it == rows[r2].end()) continue;
        T f = k_.mul(it->second, pinv);
        std::size_t before = rows[r2].size();
        rows[r2] = axpy(rows[r2], f, rows[r], colrows, r2);
        std::size_t after = rows[r2].size();
        if (after == 0) {
          alive[r2] = 0;
        } else if (after <= maxw && after != before) {
          buckets[after].push_back(r2);
          if (after < w) w = after;
        } else if (after <= maxw && after == before) {
          buckets[after].push_back(r2);
        }
      }
      alive[r] = 0;
      col_done[c] = 1;
      pivots.push_back({r, c});
      w = 1;
    }
    sol.sparse_pivots = pivots.size();

    // Dense phase on the columns still present in live rows.
    std::vector<std::int64_t> dense_index(ncols_, -1);
    std::vector<std::uint32_t> dense_cols;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      for (const auto& e : rows[r])
        if (dense_index[e.first] < 0) {
          dense_index[e.first] = 1;
          dense_cols.push_back(e.first);
        }
    }
    std::sort(dense_cols.begin(), dense_cols.end());
    for (std::size_t i = 0; i < dense_cols.size(); ++i) dense_index[dense_cols[i]] = static_cast<std::int64_t>(i);
    RowEchelon dense(field_, dense_cols.size());
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      ++sol.dense_rows;
      insert_dense(dense, rows[r], dense_index, dense_cols.size());
      if (dense.rank() == dense_cols.size()) break;
    }
    sol.dense_cols = dense_cols.size();
    sol.rank = pivots.size() + dense.rank();
    sol.kernel_dimension = ncols_ - sol.rank;
    if (!want_kernel) return sol;

    std::vector<char> is_dense_pivot(dense_cols.size(), 0);
    auto dpiv = dense.pivot_columns();
    for (auto c : dpiv) is_dense_pivot[c] = 1;
    auto drows = dense.rows();
    std::vector<std::vector<T>> kernel;
    for (std::uint32_t f = 0; f < ncols_; ++f) {
      if (col_done[f]) continue;
      if (dense_index[f] >= 0 && is_dense_pivot[static_cast<std::size_t>(dense_index[f])]) continue;
      std::vector<T> x(ncols_, T(0));
      x[f] = T(1);
      if (dense_index[f] >= 0) {
        auto df = static_cast<std::size_t>(dense_index[f]);
        for (std::size_t i = 0; i < dpiv.size(); ++i) {
          T v = k_.from(drows[i][df]);
          if (!k_.is_zero(v)) x[dense_cols[dpiv[i]]] = k_.neg(v);
        }
      }
      for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const Row& row = rows[it->first];
        T acc(0), pv(0);
        for (const auto& e : row) {
          if (e.first == it->second)
            pv = e.second;
          else if (!k_.is_zero(x[e.first]))
            acc = k_.sub(acc, k_.mul(e.second, x[e.first]));
        }
        x[it->second] = k_.mul(acc, k_.inv(pv));
      }
      kernel.push_back(std::move(x));
    }
    // Canonical basis: reduced echelon form of the kernel vectors.
    RowEchelon canon(field_, ncols_);
    for (const auto& v : kernel) {
      std::vector<Scalar> s(ncols_);
      for (std::size_t j = 0; j < ncols_; ++j) s[j] = k_.to(v[j]);
      canon.insert(s);
    }
    sol.kernel = canon.rows();
    return sol;
  }

 private:
  static typename Row::iterator find(Row& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t v) { return e.first < v; });
    return (it != row.end() && it->first == c) ? it : row.end();
  }

  T value_at(Row& row, std::uint32_t c) { return find(row, c)->second; }

  // a - f * b; registers fill-in columns of a in colrows.
  Row axpy(const Row& a, const T& f, const Row& b, std::vector<std::vector<std::uint32_t>>& colrows,
           std::uint32_t ra) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        T v = k_.neg(k_.mul(f, b[j].second));
        if (!k_.is_zero(v)) {
          colrows[b[j].first].push_back(ra);
          out.push_back({b[j].first, std::move(v)});
        }
        ++j;
      } else {
        T v = k_.sub(a[i].second, k_.mul(f, b[j].second));
        if (!k_.is_zero(v)) out.push_back({a[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void insert_dense(RowEchelon& dense, const Row& row, const std::vector<std::int64_t>& index, std::size_t n) {
    if constexpr (std::is_same_v<K, ModP>) {
      std::vector<std::uint32_t> v(n, 0);
      for (const auto& e : row) v[static_cast<std::size_t>(index[e.first])] = e.second;
      dense.insert_residues(std::move(v));
    } else {
      std::vector<Scalar> v(n, field_.zero());
      for (const auto& e : row) v[static_cast<std::size_t>(index[e.first])] = k_.to(e.second);
      dense.insert(v);
    }
  }

  K k_;
  FieldSpec field_;
  std::size_t ncols_;
};

}  // namespace

struct SparseLinearSystem::Impl {
  std::size_t ncols;
  std::vector<std::vector<Entry>> rows;
};

SparseLinearSystem::SparseLinearSystem(const FieldSpec& field, std::size_t ncols)
    : field_(field), impl_(std::make_unique<Impl>()) {
  if (!field.is_field()) throw std::invalid_argument("linear systems need a field");
  impl_->ncols = ncols;
}

SparseLinearSystem::~SparseLinearSystem() = default;
SparseLinearSystem::SparseLinearSystem(SparseLinearSystem&&) noexcept = default;

std::size_t SparseLinearSystem::ncols() const { return impl_->ncols; }
std::size_t SparseLinearSystem::nrows() const { return impl_->rows.size(); }

void SparseLinearSystem::add_row(std::vector<Entry> row) {
  for (const auto& e : row)
    if (e.first >= impl_->ncols) throw std::invalid_argument("column out of range");
  impl_->rows.push_back(std::move(row));
}

namespace {

template <class K>
std::vector<std::vector<std::pair<std::uint32_t, typename K::T>>> normalize_rows(
    const K& k, const FieldSpec& F, const std::vector<std::vector<SparseLinearSystem::Entry>>& in) {
  std::vector<std::vector<std::pair<std::uint32_t, typename K::T>>> out;
  out.reserve(in.size());
  for (auto row : in) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint32_t, typename K::T>> r;
    for (std::size_t i = 0; i < row.size();) {
      Scalar s = row[i].second;
      std::size_t j = i + 1;
      for (; j < row.size() && row[j].first == row[i].first; ++j) s = F.add(s, row[j].second);
      if (!F.is_zero(s)) r.push_back({static_cast<std::uint32_t>(row[i].first), k.from(s)});
      i = j;
    }
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SparseLinearSystem::Solution SparseLinearSystem::solve(bool want_kernel, std::size_t max_sparse_weight) const {
  if (field_.is_prime()) {
    ModP k{field_.characteristic()};
    SparseSolver<ModP> s(k, field_, impl_->ncols);
    return s.run(normalize_rows(k, field_, impl_->rows), want_kernel, max_sparse_weight);
  }
  Rat k;
  SparseSolver<Rat> s(k, field_, impl_->ncols);
  return s.run(normalize_rows(k, field_, impl_->rows), want_kernel, max_sparse_weight);
}

std::size_t matrix_rank(const FieldSpec& field, const std::vector<std::vector<Scalar>>& m, std::size_t ncols) {
  RowEchelon e(field, ncols);
  for (const auto& r : m) e.insert(r);
  return e.rank();
}

}  // namespace hilbtan
