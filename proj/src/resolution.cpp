#include "hilbtan/resolution.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace hilbtan {

std::optional<Bidegree> FreeModuleElement::degree() const {
  std::optional<Bidegree> d;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    auto b = coords[i].bidegree();
    if (!b) return std::nullopt;
    Bidegree total = *b + shifts[i];
    if (d && *d != total) return std::nullopt;
    d = total;
  }
  return d;
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string FreeModuleElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += coords[i].to_string();
  }
  return s + ")";
}

std::vector<Vec> module_syzygies(const RingPtr& ring, const ModuleLayout& layout, const std::vector<Vec>& gens) {
  const std::size_t R = layout.rank;
  ModuleOrder base(ring, layout);
  ModuleLayout aug;
  aug.rank = R + gens.size();
  aug.split = R;
  for (std::size_t c = 0; c < R; ++c) aug.shifts.push_back(layout.shift(static_cast<std::uint32_t>(c)));
  for (const auto& g : gens) aug.shifts.push_back(g.empty() ? 0 : base.sugar(g));

  GroebnerEngine eng(ring, aug);
  const auto& F = ring->field();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Vec v = gens[k];
    v.push_back({Monomial(ring->nvars()), static_cast<std::uint32_t>(R + k), F.one()});
    eng.add_generator(std::move(v));
  }
  eng.run();
  std::vector<Vec> out;
  for (auto& v : eng.reduced_basis()) {
    if (v.front().comp < R) continue;
    for (auto& t : v) t.comp -= static_cast<std::uint32_t>(R);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

ModuleLayout syzygy_layout(const RingPtr& ring, const ModuleLayout& layout, const std::vector<Vec>& gens) {
  ModuleOrder base(ring, layout);
  ModuleLayout next;
  next.rank = gens.size();
  for (const auto& g : gens) next.shifts.push_back(g.empty() ? 0 : base.sugar(g));
  return next;
}

}  // namespace

std::vector<Vec> minimal_module_syzygies(const RingPtr& ring, const ModuleLayout& layout,
                                         const std::vector<Vec>& gens) {
  auto syz = module_syzygies(ring, layout, gens);
  auto idx = minimal_generating_subset(ring, syzygy_layout(ring, layout, gens), syz);
  std::vector<Vec> out;
  for (auto i : idx) out.push_back(std::move(syz[i]));
  return out;
}

std::vector<FreeModuleElement> syzygy_module(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  const auto& ring = gens.front().ring();
  std::vector<Vec> vs;
  std::vector<Bidegree> shifts;
  for (const auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("ring mismatch");
    if (g.is_zero()) throw std::invalid_argument("syzygies need nonzero generators");
    vs.push_back(to_vec(g));
    shifts.push_back(g.bidegree().value_or(ring->bidegree(g.leading().mono)));
  }
  std::vector<FreeModuleElement> out;
  for (const auto& s : module_syzygies(ring, ModuleLayout::ideal(), vs)) {
    FreeModuleElement e;
    e.shifts = shifts;
    for (std::size_t i = 0; i < gens.size(); ++i) e.coords.push_back(from_vec(ring, s, static_cast<std::uint32_t>(i)));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<GradedGenerator> minimal_generators(const IdealHandle& I) { return I.minimal_generators(); }

std::size_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (!complete) throw BudgetExhausted("resolution step budget exhausted");
  int reg = INT_MIN;
  for (const auto& [k, b] : entries)
    if (b) reg = std::max(reg, k.second - k.first);
  return reg;
}

std::string BettiTable::serialize() const {
  std::ostringstream os;
  for (const auto& [k, b] : entries) os << k.first << ", " << k.second << ", " << b << "\n";
  return os.str();
}

Resolution minimal_free_resolution(const IdealHandle& I, int max_steps) {
  const auto& ring = I.ring();
  if (ring->bigraded()) throw std::invalid_argument("resolutions are only supported for singly graded rings");
  if (!I.is_homogeneous()) throw std::invalid_argument("non-homogeneous input");
  const int steps = max_steps < 0 ? static_cast<int>(ring->nvars()) + 1 : max_steps;

  Resolution res;
  std::vector<Vec> gens;
  for (const auto& g : I.minimal_generators()) {
    gens.push_back(to_vec(g.poly));
    ++res.betti.entries[{0, g.degree.total()}];
  }
  res.maps.push_back(gens);
  res.layouts.push_back(ModuleLayout::ideal());
  res.betti.complete = false;
  if (gens.empty()) {
    res.betti.complete = true;
    return res;
  }
  for (int i = 1; i <= steps; ++i) {
    const auto& prev = res.maps.back();
    const auto& layout = res.layouts.back();
    auto syz = minimal_module_syzygies(ring, layout, prev);
    if (syz.empty()) {
      res.betti.complete = true;
      break;
    }
    ModuleLayout next = syzygy_layout(ring, layout, prev);
    ModuleOrder order(ring, next);
    for (const auto& s : syz) ++res.betti.entries[{i, order.sugar(s)}];
    res.maps.push_back(std::move(syz));
    res.layouts.push_back(std::move(next));
  }
  return res;
}

int regularity(const IdealHandle& I, int max_steps) { return minimal_free_resolution(I, max_steps).betti.regularity(); }

std::map<Bidegree, std::size_t> hilbert_function(const IdealHandle& I, Bidegree lo, Bidegree hi) {
  std::map<Bidegree, std::size_t> out;
  const bool bi = I.ring()->bigraded();
  for (int a = lo.x; a <= hi.x; ++a)
    for (int b = lo.y; b <= hi.y; ++b) {
      Bidegree d{a, b};
      out[d] = (!d.nonnegative() || (!bi && b != 0)) ? 0 : standard_monomials(I, d).size();
    }
  return out;
}

}  // namespace hilbtan
