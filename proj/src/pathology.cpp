#include "hilbtan/pathology.hpp"

#include <future>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "json.hpp"
#include "hilbtan/resolution.hpp"

namespace hilbtan {

namespace {

std::vector<std::string> xnames(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

Polynomial pairing_form(const RingPtr& R, unsigned pairs) {
  Polynomial Q(R);
  for (unsigned i = 0; i < pairs; ++i) Q = Q + Polynomial::variable(R, 2 * i) * Polynomial::variable(R, 2 * i + 1);
  return Q;
}

void require_prime(unsigned p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
}

}  // namespace

Polynomial w2_obstruction_witness(unsigned p, unsigned pairs) {
  require_prime(p);
  if (pairs == 0) throw std::invalid_argument("pairs must be positive");
  auto Z = PolyRing::make(FieldSpec::integers(), xnames(2 * pairs));
  auto Fp = PolyRing::make(FieldSpec::prime_field(p), xnames(2 * pairs));
  Polynomial lifted = pairing_form(Z, pairs).pow(p);
  for (unsigned i = 0; i < pairs; ++i)
    lifted = lifted - (Polynomial::variable(Z, 2 * i) * Polynomial::variable(Z, 2 * i + 1)).pow(p);
  std::vector<Term> terms;
  for (const auto& t : lifted.terms()) {
    try {
      terms.push_back({t.mono, Z->field().exact_div(t.coeff, p)});
    } catch (const std::domain_error&) {
      throw std::logic_error("witness coefficient not divisible by p");
    }
  }
  return Polynomial::from_terms(Z, std::move(terms)).change_field(Fp);
}

W2Report w2_check(const IdealHandle& J, unsigned p, unsigned pairs) {
  require_prime(p);
  const auto& R = J.ring();
  if (!R->field().is_prime() || R->field().characteristic() != p)
    throw std::invalid_argument("the ideal must be defined over F_" + std::to_string(p));
  if (R->nvars() < 2 * pairs) throw std::invalid_argument("not enough variables for " + std::to_string(pairs) + " pairs");
  Polynomial Q = pairing_form(R, pairs);
  if (!contains(J, Q)) throw std::invalid_argument("precondition failed: " + Q.to_string() + " is not in J");
  for (unsigned i = 0; i < pairs; ++i) {
    Polynomial x = Polynomial::variable(R, 2 * i + 1).pow(p);
    if (!contains(J, x)) throw std::invalid_argument("precondition failed: " + x.to_string() + " is not in J");
  }
  Polynomial w = w2_obstruction_witness(p, pairs).map_to(R, identity_map(2 * pairs));
  Polynomial nf = normal_form(w, J);
  bool obstructed = !nf.is_zero();
  return W2Report{p, std::move(w), std::move(nf), obstructed};
}

IdealHandle build_q_example(unsigned q, unsigned p) {
  unsigned base = q == 4 ? 2 : q;
  if (q != 3 && q != 4 && q != 5) throw std::invalid_argument("unsupported q: " + std::to_string(q));
  if (p != base) throw std::invalid_argument("p must be the prime dividing q");
  auto R = PolyRing::make(FieldSpec::prime_field(p), xnames(6));
  std::vector<Polynomial> gens{pairing_form(R, 3)};
  for (std::size_t i : {1, 3, 5}) gens.push_back(Polynomial::variable(R, i).pow(q));
  IdealHandle I = saturate(IdealHandle(R, std::move(gens)), maximal_ideal(R));
  return sum(I, power_of_variables(R, {0, 2, 4}, static_cast<int>(q) + 1));
}

IdealHandle build_berthelot_ogus(unsigned p, unsigned pairs) {
  require_prime(p);
  auto R = PolyRing::make(FieldSpec::prime_field(p), xnames(2 * pairs));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 2 * pairs; ++i) gens.push_back(Polynomial::variable(R, i).pow(p));
  gens.push_back(pairing_form(R, pairs));
  return IdealHandle(R, std::move(gens));
}

MdpExample build_mdp_example() {
  auto S = PolyRing::make(FieldSpec::rationals(), xnames(7));
  auto x = [&](std::size_t i) { return Polynomial::variable(S, i - 1); };
  IdealHandle K(S, {x(1).pow(2), x(1) * x(2), x(2).pow(2) * (x(3) + x(4)),
                    x(1) * x(4).pow(3) + x(2) * (x(3) + x(4)) * x(3).pow(2)});
  IdealHandle I = intersect(K, power_of_variables(S, {0, 1, 2, 3}, 4));
  int reg_K = regularity(K);
  int reg_I = regularity(I);
  FrameSpec spec = standard_frame_spec(I, reg_I + 1);
  IdealHandle J = build_frame(spec);
  return MdpExample{K, I, reg_K, reg_I, spec, J};
}

std::string ideal_fingerprint(const IdealHandle& J) {
  std::string doc = J.ring()->describe() + "\n";
  for (const auto& g : J.groebner_basis()) doc += g.to_string() + "\n";
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(doc.data(), doc.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

namespace {

const std::vector<std::string> kCertKeys{"p",   "q",        "fingerprint", "orbit_dim", "hom0_dim", "step1_equal",
                                         "w2_obstructed", "w2_nf", "tnt", "neg_dim",   "verdict"};

}  // namespace

std::string ComponentCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["q"] = q;
  j["fingerprint"] = fingerprint;
  j["orbit_dim"] = orbit_dim;
  j["hom0_dim"] = hom0_dim;
  j["step1_equal"] = step1_equal;
  j["w2_obstructed"] = w2_obstructed;
  j["w2_nf"] = w2_nf ? nlohmann::ordered_json(*w2_nf) : nlohmann::ordered_json(nullptr);
  j["tnt"] = tnt;
  j["neg_dim"] = neg_dim;
  j["verdict"] = verdict;
  return j.dump(2) + "\n";
}

ComponentCertificate ComponentCertificate::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  std::set<std::string> known(kCertKeys.begin(), kCertKeys.end());
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw std::invalid_argument("unknown certificate key: " + k);
  for (const auto& k : kCertKeys)
    if (!j.contains(k)) throw std::invalid_argument("missing certificate key: " + k);
  ComponentCertificate c;
  try {
    c.p = j.at("p").get<unsigned>();
    c.q = j.at("q").get<unsigned>();
    c.fingerprint = j.at("fingerprint").get<std::string>();
    c.orbit_dim = j.at("orbit_dim").get<std::size_t>();
    c.hom0_dim = j.at("hom0_dim").get<std::size_t>();
    c.step1_equal = j.at("step1_equal").get<bool>();
    c.w2_obstructed = j.at("w2_obstructed").get<bool>();
    if (!j.at("w2_nf").is_null()) c.w2_nf = j.at("w2_nf").get<std::string>();
    c.tnt = j.at("tnt").get<bool>();
    c.neg_dim = j.at("neg_dim").get<std::size_t>();
    c.verdict = j.at("verdict").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad certificate value: ") + e.what());
  }
  return c;
}

bool operator==(const ComponentCertificate& a, const ComponentCertificate& b) {
  return a.to_json() == b.to_json();
}

ComponentCertificate five_step_certificate(const IdealHandle& J, unsigned p, unsigned q, unsigned threads) {
  require_prime(p);
  if (q == 0) q = p;
  const auto& F = J.ring()->field();
  if (!F.is_prime() || F.characteristic() != p) throw std::invalid_argument("the ideal must be defined over F_" + std::to_string(p));
  if (!J.is_homogeneous()) throw std::invalid_argument("non-homogeneous input");
  if (!has_finite_colength(J)) throw std::invalid_argument("the ideal must have finite colength");

  ComponentCertificate c;
  c.p = p;
  c.q = q;
  c.fingerprint = ideal_fingerprint(J);

  auto w2 = std::async(std::launch::async, [&]() -> std::optional<W2Report> {
    if (q != p) {
      c.w2_refusal = "q = " + std::to_string(q) + " is not the prime p = " + std::to_string(p) + "; the W2 argument needs q = p";
      return std::nullopt;
    }
    try {
      return w2_check(J, p, static_cast<unsigned>(J.ring()->nvars() / 2));
    } catch (const std::invalid_argument& e) {
      c.w2_refusal = e.what();
      return std::nullopt;
    }
  });

  TangentContext ctx(J);
  auto orbit = degree_zero_orbit(ctx, threads);
  c.orbit_dim = orbit.orbit_dim;
  c.hom0_dim = orbit.hom0_dim;
  c.step1_equal = orbit.orbit_dim == orbit.hom0_dim;
  auto tnt = tnt_check(ctx, threads);
  c.tnt = tnt.tnt;
  c.neg_dim = tnt.negative_total;

  if (auto r = w2.get()) {
    c.w2_obstructed = r->obstructed;
    c.w2_nf = r->normal_form.to_string();
  }
  c.verdict = c.step1_equal && c.w2_obstructed && c.tnt;
  return c;
}

}  // namespace hilbtan
