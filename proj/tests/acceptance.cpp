// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "hilbtan/frames.hpp"
#include "hilbtan/groebner.hpp"
#include "hilbtan/pathology.hpp"
#include "hilbtan/resolution.hpp"
#include "hilbtan/tangent.hpp"
#include "support.hpp"

using namespace hilbtan;
using namespace hilbtan::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

template <class T>
std::string eq(const char* name, T got, T want) {
  std::ostringstream os;
  os << name << " = " << got << " (want " << want << ")";
  return os.str();
}

void criterion1(Verdict& v) {
  auto J = build_q_example(3, 3);
  TangentContext ctx(J);
  auto hom0 = ctx.piece({0, 0}).dimension;
  auto tnt = tnt_check(ctx);
  auto orbit = degree_zero_orbit(ctx);
  v.detail << "hom0 " << hom0 << ", neg " << tnt.negative_total << ", stabilizer " << orbit.kernel_dim << ", orbit "
           << orbit.orbit_dim;
  v.expect(hom0 == 26, eq("hom0", hom0, std::size_t{26}));
  v.expect(tnt.negative_total == 6, eq("neg", tnt.negative_total, std::size_t{6}));
  v.expect(orbit.kernel_dim == 10, eq("stabilizer", orbit.kernel_dim, std::size_t{10}));
  v.expect(orbit.orbit_dim == 26, eq("orbit", orbit.orbit_dim, std::size_t{26}));
}

void criterion2(Verdict& v) {
  auto c5 = five_step_certificate(build_q_example(5, 5), 5, 5);
  v.detail << "q=5: verdict " << c5.verdict << " tnt " << c5.tnt << " step1 " << c5.step1_equal << " ("
           << c5.orbit_dim << "/" << c5.hom0_dim << ")";
  v.expect(c5.verdict && c5.tnt && c5.step1_equal, "q=5 certificate");
  auto c4 = five_step_certificate(build_q_example(4, 2), 2, 4);
  v.detail << "; q=4: tnt " << c4.tnt << " step1 " << c4.step1_equal << " (" << c4.orbit_dim << "/" << c4.hom0_dim
           << ") w2 " << (c4.w2_nf ? "ran" : "refused");
  v.expect(c4.tnt && c4.step1_equal, "q=4 tangent checks");
  v.expect(!c4.w2_nf && !c4.w2_refusal.empty(), "q=4 w2 must be refused");
}

void criterion3(Verdict& v) {
  auto J = build_q_example(3, 3);
  auto r = w2_check(J, 3);
  const auto& R = J.ring();
  Polynomial prod = Polynomial::from_int(R, 2);
  for (std::size_t i = 0; i < 6; ++i) prod = prod * Polynomial::variable(R, i);
  auto target = normal_form(prod, J);
  v.detail << "q=3 NF " << r.normal_form.to_string();
  v.expect(r.obstructed, "q=3 NF is zero");
  v.expect(r.normal_form == target, "NF differs from NF(2*x1*...*x6)");
  for (unsigned p : {2u, 3u, 5u}) {
    auto b = w2_check(build_berthelot_ogus(p), p);
    v.detail << "; BO p=" << p << " " << (b.obstructed ? "obstructed" : "inconclusive");
    v.expect(b.obstructed, "BO p=" + std::to_string(p));
  }
}

void criterion4(Verdict& v) {
  auto S = PolyRing::make(FieldSpec::prime_field(5), names("x", 3));
  auto J = build_frame(IdealHandle(S), 2);
  TangentContext ctx(J);
  auto prof = hom_profile(ctx, ProfileScope::full);
  for (const auto& [d, n] : prof.pieces)
    if ((d.x <= -2 || d.y <= -2) && n != 0) v.expect(false, "piece " + d.to_string() + " = " + std::to_string(n));
  auto at = [&](Bidegree d) { return prof.pieces.count(d) ? prof.pieces.at(d) : ctx.piece(d).dimension; };
  auto gm = gmap_check(ctx, prof);
  v.detail << "window " << prof.lo.to_string() << ".." << prof.hi.to_string() << ", (-1,0) " << at({-1, 0})
           << ", (0,-1) " << at({0, -1}) << ", (-1,-1) " << at({-1, -1}) << ", gmap total " << gm.gmap_total
           << ", derivation rank " << gm.derivation_rank << "/" << gm.expected;
  v.expect(at({-1, 0}) == 3, "(-1,0)");
  v.expect(at({0, -1}) == 3, "(0,-1)");
  v.expect(at({-1, -1}) == 0, "(-1,-1)");
  v.expect(gm.gmap_total == 9, "gmap total");
  v.expect(gm.injective(), "derivation map has a kernel");
}

void tweaked_report(Verdict& v, std::size_t n, int a) {
  auto S = PolyRing::make(FieldSpec::prime_field(2), names("x", n));
  auto spec = tweaked_frame_spec(IdealHandle(S), a);
  auto J = build_frame(spec);
  auto rep = frame_like_check(J, spec);
  v.detail << "a=" << a << ": neg " << rep.cond_a.negative_total << ", gmap total " << rep.gmap.gmap_total
           << ", derivation rank " << rep.gmap.derivation_rank << "/" << rep.gmap.expected << ", frame-like "
           << (rep.verdict ? "true" : "false");
  v.expect(rep.checked, "hypotheses unmet");
  v.expect(rep.cond_a.negative_total == 2 * n, eq("neg", rep.cond_a.negative_total, 2 * n));
  v.expect(rep.gmap.gmap_total == n * n, eq("gmap total", rep.gmap.gmap_total, n * n));
  v.expect(rep.gmap.injective(), "derivation map not injective");
  v.expect(rep.verdict, "frame-like verdict false");
}

void criterion5(Verdict& v) { tweaked_report(v, 4, 2); }

// Not criteria: the neighbouring frame sizes, printed for comparison.
void tweaked_n4_a3(Verdict& v) { tweaked_report(v, 4, 3); }

void tweaked_n5_a3(Verdict& v) { tweaked_report(v, 5, 3); }

void criterion6(Verdict& v) {
  auto m = build_mdp_example();
  v.detail << "reg K " << m.reg_K;
  v.expect(m.reg_K == 4, eq("reg K", m.reg_K, 4));
  for (std::size_t n = 1; n <= 4; ++n) {
    auto R = ring(0, n);
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(i);
    for (int d = 1; d <= 4; ++d) {
      int r = regularity(power_of_variables(R, vars, d));
      if (r != d) v.expect(false, "reg(m^" + std::to_string(d) + ") in " + std::to_string(n) + " vars = " + std::to_string(r));
    }
  }
  v.detail << ", reg(m^d) checked for d<=4 in 1..4 variables";
}

void criterion7(Verdict& v) {
  Rng rng(20240601);
  std::size_t ideals = 0, compared = 0, biggest = 0;
  while (ideals < 24) {
    std::size_t nx = 1 + rng() % 4, ny = rng() % 5;
    if (nx + ny > 6 && rng() % 2) ny = rng() % 2;
    std::uint64_t p = std::vector<std::uint64_t>{0, 2, 3, 5, 7}[rng() % 5];
    auto R = ring(p, nx, ny);
    auto J = random_artinian(R, rng, 60);
    TangentContext ctx(J);
    auto [lo, hi] = ctx.window();
    std::vector<Bidegree> ds;
    for (int a = lo.x; a <= hi.x; ++a)
      for (int b = lo.y; b <= hi.y; ++b) ds.push_back({a, b});
    std::shuffle(ds.begin(), ds.end(), rng);
    std::size_t done = 0;
    for (auto d : ds) {
      if (done == 8) break;
      std::size_t brute;
      try {
        brute = hom_brute_force_oracle(J, d);
      } catch (const OracleBudgetExceeded&) {
        continue;
      }
      std::size_t fast = ctx.piece(d).dimension;
      if (fast != brute)
        v.expect(false, R->describe() + " at " + d.to_string() + ": " + std::to_string(fast) + " vs " + std::to_string(brute));
      ++done;
    }
    if (done < 5) continue;
    ++ideals;
    compared += done;
    biggest = std::max(biggest, nx + ny);
  }
  v.detail << ideals << " ideals, " << compared << " bidegrees, up to " << biggest << " variables";
}

void criterion8(Verdict& v) {
  Rng rng(777);
  std::size_t gb_runs = 0, nf_runs = 0, sat_runs = 0, quo_runs = 0;
  for (int rep = 0; rep < 120; ++rep) {
    auto R = ring(rep % 3 == 0 ? 0 : (rep % 3 == 1 ? 2 : 32003), 3);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(R, rng, 3, 3));
    auto gb = groebner_basis(R, gens);
    if (!satisfies_buchberger_criterion(gb)) v.expect(false, "Buchberger criterion, instance " + std::to_string(rep));
    ++gb_runs;

    auto f = random_poly(R, rng, 5, 4), g = random_poly(R, rng, 5, 4);
    auto nf = reduce_polynomial(f, gb);
    auto c = random_scalar(R->field(), rng);
    bool ok = reduce_polynomial(nf, gb) == nf &&
              reduce_polynomial(f.scale(c) + g, gb) == nf.scale(c) + reduce_polynomial(g, gb);
    if (!ok) v.expect(false, "NF idempotence/linearity, instance " + std::to_string(rep));
    ++nf_runs;
  }
  for (int rep = 0; rep < 110; ++rep) {
    auto R = ring(rep % 2 ? 5 : 0, 3);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(random_bihomogeneous(R, rng, {1 + static_cast<int>(rng() % 3), 0}, 3));
    IdealHandle I(R, gens);
    auto m = maximal_ideal(R);
    auto S = saturate(I, m);
    if (!is_subset(I, S) || !equal(saturate(S, m), S)) v.expect(false, "saturation fixpoint, instance " + std::to_string(rep));
    ++sat_runs;

    auto h = random_bihomogeneous(R, rng, {1, 0}, 2);
    if (h.is_zero()) h = Polynomial::variable(R, 0);
    auto Q = ideal_quotient(I, h);
    bool sound = is_subset(I, Q);
    for (const auto& q : Q.groebner_basis()) sound = sound && contains(I, q * h);
    if (!sound) v.expect(false, "quotient soundness, instance " + std::to_string(rep));
    ++quo_runs;
  }
  v.detail << "GB " << gb_runs << ", NF " << nf_runs << ", saturation " << sat_runs << ", quotient " << quo_runs;
}

}  // namespace

int main() {
  struct Item {
    std::string name;
    std::function<void(Verdict&)> run;
    bool counted;
  };
  std::vector<Item> items{
      {"1 q=3 tangent and stabilizer", criterion1, true},
      {"2 q=5 certificate, q=4 tangents", criterion2, true},
      {"3 W2 obstruction", criterion3, true},
      {"4 frame(0, n=3, a=2) over F_5", criterion4, true},
      {"5 tweaked frame(0, n=4, a=2) over F_2", criterion5, true},
      {"5 (info) tweaked frame(0, n=4, a=3) over F_2", tweaked_n4_a3, false},
      {"5 (info) tweaked frame(0, n=5, a=3) over F_2", tweaked_n5_a3, false},
      {"6 regularity", criterion6, true},
      {"7 oracle equivalence", criterion7, true},
      {"8 Groebner engine properties", criterion8, true},
  };
  int failures = 0;
  for (auto& it : items) {
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    try {
      it.run(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << it.name << ": " << v.detail.str() << " ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s)" << std::endl;
    if (!v.pass && it.counted) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
