#include "hilbtan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "hilbtan/parse.hpp"
#include "hilbtan/pathology.hpp"
#include "hilbtan/resolution.hpp"
#include "hilbtan/tangent.hpp"

namespace hilbtan {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

// key=value fields; values in brackets may contain spaces.
std::map<std::string, std::pair<std::string, std::size_t>> fields(const std::string& line, std::size_t start,
                                                                  std::size_t lineno) {
  std::map<std::string, std::pair<std::string, std::size_t>> out;
  std::size_t i = start;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t key_at = i;
    auto eq = line.find('=', i);
    if (eq == std::string::npos) throw InputError("expected key=value", lineno, i + 1);
    std::string key = trim(line.substr(i, eq - i));
    std::size_t v = eq + 1;
    std::size_t end;
    if (v < line.size() && line[v] == '[') {
      end = line.find(']', v);
      if (end == std::string::npos) throw InputError("unterminated '['", lineno, v + 1);
      ++end;
    } else {
      end = line.find_first_of(" \t", v);
      if (end == std::string::npos) end = line.size();
    }
    if (out.count(key)) throw InputError("duplicate key '" + key + "'", lineno, key_at + 1);
    out[key] = {line.substr(v, end - v), v};
    i = end;
  }
  return out;
}

int parse_int(const std::string& s, std::size_t line, std::size_t col) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + s + "'", line, col);
  }
}

}  // namespace

IdealFile parse_ideal_file(const std::string& src) {
  struct {
    RingPtr ring;
    std::optional<FrameLine> frame;
  } f;
  std::vector<Polynomial> gens;
  std::istringstream in(src);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto wend = line.find_first_of(" \t\r", b);
    std::string word = line.substr(b, wend == std::string::npos ? std::string::npos : wend - b);
    std::size_t rest = wend == std::string::npos ? line.size() : wend;
    if (word == "ring") {
      if (f.ring) throw InputError("second ring line", lineno, b + 1);
      auto kv = fields(line, rest, lineno);
      for (const auto& [k, v] : kv)
        if (k != "char" && k != "x" && k != "y") throw InputError("unknown ring field '" + k + "'", lineno, v.second + 1);
      if (!kv.count("char")) throw InputError("ring line needs char=", lineno, b + 1);
      if (!kv.count("x")) throw InputError("ring line needs x=[...]", lineno, b + 1);
      auto list = [&](const std::string& key) {
        const auto& [v, at] = kv.at(key);
        if (v.size() < 2 || v.front() != '[' || v.back() != ']') throw InputError("expected a [...] list", lineno, at + 1);
        return split_list(v.substr(1, v.size() - 2));
      };
      const auto& [cs, cat] = kv.at("char");
      int c = parse_int(cs, lineno, cat + 1);
      if (c < 0 || (c > 0 && !is_prime(static_cast<std::uint64_t>(c))))
        throw InputError("characteristic must be 0 or a prime", lineno, cat + 1);
      auto xs = list("x");
      std::vector<std::string> ys;
      if (kv.count("y")) ys = list("y");
      try {
        f.ring = PolyRing::make(FieldSpec::from_characteristic(static_cast<std::uint64_t>(c)), xs, ys);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what(), lineno, b + 1);
      }
    } else if (word == "gen") {
      if (!f.ring) throw InputError("gen before ring line", lineno, b + 1);
      std::size_t at = line.find_first_not_of(" \t", rest);
      if (at == std::string::npos) throw InputError("empty generator", lineno, rest + 1);
      try {
        gens.push_back(parse_polynomial(trim(line.substr(at)), f.ring));
      } catch (const ParseError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" at position"));
        throw InputError(msg, lineno, at + e.position() + 1);
      }
    } else if (word == "frame") {
      if (f.frame) throw InputError("second frame line", lineno, b + 1);
      FrameLine fl;
      for (const auto& [k, v] : fields(line, rest, lineno)) {
        if (k == "a")
          fl.a = parse_int(v.first, lineno, v.second + 1);
        else if (k == "b")
          fl.b = parse_int(v.first, lineno, v.second + 1);
        else if (k == "tweaked")
          fl.tweaked = parse_int(v.first, lineno, v.second + 1) != 0;
        else
          throw InputError("unknown frame field '" + k + "'", lineno, v.second + 1);
      }
      f.frame = fl;
    } else {
      throw InputError("unknown directive '" + word + "'", lineno, b + 1);
    }
  }
  if (!f.ring) throw InputError("missing ring line", lineno + 1, 1);
  IdealHandle I(f.ring, std::move(gens));
  return IdealFile{f.ring, std::move(I), f.frame};
}

std::string format_ideal_file(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::string s = ring->describe() + "\n";
  for (const auto& g : gens) s += "gen " + g.to_string() + "\n";
  return s;
}

std::string format_frame_spec(const FrameSpec& spec) {
  return format_ideal_file(spec.base.ring(), spec.base.generators()) + "frame a=" + std::to_string(spec.a) +
         " b=" + std::to_string(spec.b) + " tweaked=" + (spec.tweaked ? "1" : "0") + "\n";
}

FrameSpec parse_frame_spec(const std::string& src) {
  auto f = parse_ideal_file(src);
  if (!f.frame) throw InputError("missing frame line", 1, 1);
  FrameSpec s{f.ideal, f.frame->a, f.frame->b.value_or(f.frame->tweaked ? static_cast<int>(f.ring->nx()) : 1),
              f.frame->tweaked};
  s.validate();
  return s;
}

namespace cli {

namespace {

using Json = nlohmann::ordered_json;

// Result of one command; status 2 means a checked property is false.
struct Outcome {
  std::string text;
  Json json;
  int status = 0;
};

struct Options {
  std::string file, file2, poly, degree, scope = "full", example, format = "text", output;
  int a = 0, steps = -1;
  unsigned p = 0, q = 0, pairs = 3, threads = 0;
  bool basis = false, tweaked = false, force = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

IdealFile load(const std::string& path) {
  try {
    return parse_ideal_file(read_file(path));
  } catch (const InputError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<Polynomial> presentable(const IdealHandle& I) {
  std::vector<Polynomial> out;
  if (I.is_homogeneous() && !I.is_zero()) {
    for (const auto& g : I.minimal_generators()) out.push_back(g.poly);
    return out;
  }
  return I.groebner_basis();
}

Outcome ideal_outcome(const IdealHandle& I, const std::vector<Polynomial>& gens) {
  Outcome o;
  o.text = format_ideal_file(I.ring(), gens);
  o.json["ring"] = I.ring()->describe();
  Json arr = Json::array();
  for (const auto& g : gens) arr.push_back(g.to_string());
  o.json["generators"] = arr;
  return o;
}

Bidegree parse_degree(const std::string& s) {
  auto parts = split_list(s);
  try {
    if (parts.size() == 1) return {std::stoi(parts[0]), 0};
    if (parts.size() == 2) return {std::stoi(parts[0]), std::stoi(parts[1])};
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--degree expects 'a' or 'a,b'");
}

IdealHandle named_example(const std::string& name, std::optional<FrameSpec>* frame = nullptr) {
  if (name == "q3") return build_q_example(3, 3);
  if (name == "q4") return build_q_example(4, 2);
  if (name == "q5") return build_q_example(5, 5);
  if (name == "bo2") return build_berthelot_ogus(2);
  if (name == "bo3") return build_berthelot_ogus(3);
  if (name == "bo5") return build_berthelot_ogus(5);
  if (name == "mdp-K" || name == "mdp-I" || name == "mdp-frame") {
    auto m = build_mdp_example();
    if (name == "mdp-K") return m.K;
    if (frame) *frame = m.spec;
    return m.I;
  }
  throw std::invalid_argument("unknown example '" + name + "' (q3, q4, q5, bo2, bo3, bo5, mdp-K, mdp-I, mdp-frame)");
}

Outcome cmd_gb(const Options& o) {
  auto f = load(o.file);
  return ideal_outcome(f.ideal, f.ideal.groebner_basis());
}

Outcome cmd_nf(const Options& o) {
  auto f = load(o.file);
  auto nf = normal_form(parse_polynomial(o.poly, f.ring), f.ideal);
  Outcome r;
  r.text = nf.to_string() + "\n";
  r.json["normal_form"] = nf.to_string();
  return r;
}

IdealHandle second_ideal(const Options& o, const IdealFile& f) {
  auto g = load(o.file2);
  if (!g.ring->same_as(*f.ring)) throw std::invalid_argument("the two ideal files use different rings");
  return g.ideal;
}

Outcome cmd_quotient(const Options& o) {
  auto f = load(o.file);
  if (o.poly.empty() == o.file2.empty()) throw std::invalid_argument("quotient needs exactly one of --poly or --by");
  auto Q = o.poly.empty() ? ideal_quotient(f.ideal, second_ideal(o, f)) : ideal_quotient(f.ideal, parse_polynomial(o.poly, f.ring));
  return ideal_outcome(Q, presentable(Q));
}

Outcome cmd_intersect(const Options& o) {
  auto f = load(o.file);
  auto I = intersect(f.ideal, second_ideal(o, f));
  return ideal_outcome(I, presentable(I));
}

Outcome cmd_sat(const Options& o) {
  auto f = load(o.file);
  auto I = saturate(f.ideal, o.file2.empty() ? maximal_ideal(f.ring) : second_ideal(o, f));
  return ideal_outcome(I, presentable(I));
}

Outcome cmd_resolve(const Options& o) {
  auto f = load(o.file);
  auto res = minimal_free_resolution(f.ideal, o.steps);
  Outcome r;
  r.text = res.betti.serialize() + "complete: " + (res.betti.complete ? "true" : "false") + "\n";
  Json rows = Json::array();
  for (const auto& [k, b] : res.betti.entries) rows.push_back({k.first, k.second, b});
  r.json["betti"] = rows;
  r.json["complete"] = res.betti.complete;
  return r;
}

Outcome cmd_reg(const Options& o) {
  auto f = load(o.file);
  int reg = regularity(f.ideal, o.steps);
  Outcome r;
  r.text = "regularity: " + std::to_string(reg) + "\n";
  r.json["regularity"] = reg;
  return r;
}

Outcome cmd_hom(const Options& o) {
  auto f = load(o.file);
  Bidegree d = parse_degree(o.degree);
  TangentContext ctx(f.ideal);
  auto piece = ctx.piece(d, o.basis);
  Outcome r;
  std::ostringstream os;
  os << "dim Hom_" << d.to_string() << " = " << piece.dimension << "\n";
  r.json["degree"] = {d.x, d.y};
  r.json["dimension"] = piece.dimension;
  if (o.basis) {
    const auto& F = f.ring->field();
    Json basis = Json::array();
    for (std::size_t k = 0; k < piece.basis.size(); ++k) {
      Json images = Json::array();
      os << "basis " << k + 1 << ":\n";
      for (std::size_t i = 0; i < ctx.generators().size(); ++i) {
        std::vector<Term> terms;
        for (std::size_t t = 0; t < piece.targets[i].size(); ++t)
          if (!F.is_zero(piece.basis[k][i][t])) terms.push_back({piece.targets[i][t], piece.basis[k][i][t]});
        auto img = Polynomial::from_terms(f.ring, std::move(terms));
        os << "  " << ctx.generators()[i].poly.to_string() << " -> " << img.to_string() << "\n";
        images.push_back(img.to_string());
      }
      basis.push_back(images);
    }
    r.json["basis"] = basis;
  }
  r.text = os.str();
  return r;
}

Json profile_json(const HomProfile& p) {
  Json pieces = Json::array();
  for (const auto& [d, n] : p.pieces) pieces.push_back({d.x, d.y, n});
  Json j;
  j["pieces"] = pieces;
  j["negative_total"] = p.negative_total;
  j["gmap_total"] = p.gmap_total;
  return j;
}

Outcome cmd_profile(const Options& o) {
  auto f = load(o.file);
  if (o.scope != "full" && o.scope != "nonpositive") throw std::invalid_argument("--scope is full or nonpositive");
  auto p = hom_profile(f.ideal, o.scope == "full" ? ProfileScope::full : ProfileScope::nonpositive, o.threads);
  return Outcome{p.serialize(), profile_json(p), 0};
}

Outcome cmd_tnt(const Options& o) {
  auto f = load(o.file);
  auto t = tnt_check(f.ideal, o.threads);
  Outcome r;
  r.text = std::string("TNT: ") + (t.tnt ? "true" : "false") + ", dim_{<0} = " + std::to_string(t.negative_total) +
           " (expected " + std::to_string(t.nvars) + ")\n";
  r.json["tnt"] = t.tnt;
  r.json["neg_dim"] = t.negative_total;
  r.json["nvars"] = t.nvars;
  r.status = t.tnt ? 0 : 2;
  return r;
}

Outcome cmd_orbit(const Options& o) {
  auto f = load(o.file);
  auto rep = degree_zero_orbit(f.ideal, o.threads);
  Outcome r;
  std::ostringstream os;
  os << "ambient: " << rep.ambient_dim << "\n"
     << "derivation kernel: " << rep.derivation_kernel_dim << "\n"
     << "stabilizer: " << rep.kernel_dim << "\n"
     << "orbit: " << rep.orbit_dim << "\n"
     << "hom0: " << rep.hom0_dim << "\n";
  r.text = os.str();
  r.json["ambient_dim"] = rep.ambient_dim;
  r.json["derivation_kernel_dim"] = rep.derivation_kernel_dim;
  r.json["kernel_dim"] = rep.kernel_dim;
  r.json["orbit_dim"] = rep.orbit_dim;
  r.json["hom0_dim"] = rep.hom0_dim;
  r.status = rep.orbit_dim == rep.hom0_dim ? 0 : 2;
  return r;
}

FrameSpec spec_from(const Options& o, const IdealFile& f, bool tweaked) {
  int a = o.a ? o.a : (f.frame ? f.frame->a : 0);
  if (a == 0) throw std::invalid_argument("frame size missing: pass --a or a frame line");
  bool tw = tweaked || (f.frame && f.frame->tweaked);
  FrameSpec s = tw ? tweaked_frame_spec(f.ideal, a) : standard_frame_spec(f.ideal, a);
  if (f.frame && f.frame->b) s.b = *f.frame->b;
  s.validate();
  return s;
}

Outcome cmd_frame(const Options& o, bool tweaked) {
  auto f = load(o.file);
  auto J = build_frame(spec_from(o, f, tweaked));
  return ideal_outcome(J, presentable(J));
}

Outcome cmd_framelike(const Options& o) {
  auto f = load(o.file);
  auto spec = spec_from(o, f, o.tweaked);
  auto J = build_frame(spec);
  auto rep = frame_like_check(J, spec, o.threads, o.force);
  if (!rep.hypotheses_met() && !o.force) {
    std::string msg = "frame-likeness hypothesis unmet: " + rep.unmet.front();
    for (std::size_t i = 1; i < rep.unmet.size(); ++i) msg += "; " + rep.unmet[i];
    throw std::invalid_argument(msg);
  }
  auto b2s = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream os;
  for (const auto& u : rep.unmet) os << "warning: " << u << "\n";
  os << "(a) TNT: " << b2s(rep.cond_a.tnt) << ", dim_{<0} = " << rep.cond_a.negative_total << "\n"
     << "(b) gmap: " << b2s(rep.cond_b) << ", sum_{a>=1} dim Hom_(a,-a) = " << rep.gmap.gmap_total
     << ", derivation rank = " << rep.gmap.derivation_rank << " of " << rep.gmap.expected << "\n"
     << "(c) b = " << rep.b << ": " << b2s(rep.cond_c) << " (containment " << b2s(rep.cond_c_containment)
     << ", I_b = 0 " << b2s(rep.cond_c_base_vanishes) << ")\n"
     << "frame-like: " << b2s(rep.verdict) << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  Outcome r;
  r.text = os.str();
  r.json["tnt"] = rep.cond_a.tnt;
  r.json["neg_dim"] = rep.cond_a.negative_total;
  r.json["gmap_total"] = rep.gmap.gmap_total;
  r.json["derivation_rank"] = rep.gmap.derivation_rank;
  r.json["cond_b"] = rep.cond_b;
  r.json["b"] = rep.b;
  r.json["cond_c"] = rep.cond_c;
  r.json["verdict"] = rep.verdict;
  r.status = rep.verdict ? 0 : 2;
  return r;
}

Outcome cmd_w2(const Options& o) {
  auto f = load(o.file);
  unsigned p = o.p ? o.p : f.ring->field().characteristic();
  auto rep = w2_check(f.ideal, p, o.pairs);
  Outcome r;
  r.text = "witness: " + rep.witness.to_string() + "\nnormal form: " + rep.normal_form.to_string() +
           "\nobstructed: " + (rep.obstructed ? "true" : "false (inconclusive)") + "\n";
  r.json["p"] = p;
  r.json["witness"] = rep.witness.to_string();
  r.json["normal_form"] = rep.normal_form.to_string();
  r.json["obstructed"] = rep.obstructed;
  r.status = rep.obstructed ? 0 : 2;
  return r;
}

Outcome cmd_example(const Options& o) {
  std::optional<FrameSpec> frame;
  auto I = named_example(o.example, &frame);
  if (o.example == "mdp-frame") {
    Outcome r;
    r.text = format_frame_spec(*frame);
    return r;
  }
  return ideal_outcome(I, presentable(I));
}

Outcome cmd_cert(const Options& o) {
  IdealHandle J = o.example.empty() ? load(o.file).ideal : named_example(o.example);
  unsigned p = o.p ? o.p : J.ring()->field().characteristic();
  unsigned q = o.q;
  if (!o.example.empty() && q == 0 && o.example.size() == 2 && o.example[0] == 'q')
    q = static_cast<unsigned>(o.example[1] - '0');
  auto c = five_step_certificate(J, p, q, o.threads);
  Outcome r;
  r.text = c.to_json();
  r.json = Json::parse(c.to_json());
  r.status = c.verdict ? 0 : 2;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert scheme tangent space and ideal toolkit", "hilbtan"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: HILBTAN_THREADS or all cores)");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output,-o", o.output, "write the result to this file");
  app.fallthrough();

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "ideal file")->required();
    return c;
  };
  auto* gb = file_cmd("gb", "reduced Groebner basis");
  auto* nf = file_cmd("nf", "normal form of --poly");
  nf->add_option("--poly", o.poly)->required();
  auto* quo = file_cmd("quotient", "ideal quotient by --poly or by the ideal in --by");
  quo->add_option("--poly", o.poly);
  quo->add_option("--by", o.file2);
  auto* inter = file_cmd("intersect", "intersection with the ideal in --with");
  inter->add_option("--with", o.file2)->required();
  auto* sat = file_cmd("sat", "saturation by --by (default: the maximal ideal)");
  sat->add_option("--by", o.file2);
  auto* res = file_cmd("resolve", "graded Betti numbers of a minimal free resolution");
  res->add_option("--steps", o.steps);
  auto* reg = file_cmd("reg", "Castelnuovo-Mumford regularity");
  reg->add_option("--steps", o.steps);
  auto* hom = file_cmd("hom", "one graded piece of Hom(J, T/J)");
  hom->add_option("--degree", o.degree, "a or a,b")->required();
  hom->add_flag("--basis", o.basis);
  auto* prof = file_cmd("profile", "all pieces of Hom(J, T/J) in the support window");
  prof->add_option("--scope", o.scope, "full or nonpositive");
  auto* tnt = file_cmd("tnt", "trivial negative tangents check");
  auto* orbit = file_cmd("orbit", "degree zero stabilizer and orbit dimensions");
  auto* frame = file_cmd("frame", "frame of the base ideal");
  frame->add_option("--a", o.a);
  auto* tframe = file_cmd("tweaked-frame", "characteristic 2 tweaked frame");
  tframe->add_option("--a", o.a);
  auto* fl = file_cmd("framelike", "frame-likeness checklist");
  fl->add_option("--a", o.a);
  fl->add_flag("--tweaked", o.tweaked);
  fl->add_flag("--force", o.force, "run the checks even when a hypothesis is unmet");
  auto* w2 = file_cmd("w2", "W2 lifting obstruction");
  w2->add_option("--p", o.p);
  w2->add_option("--pairs", o.pairs);
  auto* ex = app.add_subcommand("example", "print a named example ideal");
  ex->add_option("name", o.example)->required();
  auto* cert = app.add_subcommand("cert", "five step certificate");
  cert->add_option("file", o.file);
  cert->add_option("--example", o.example);
  cert->add_option("--p", o.p);
  cert->add_option("--q", o.q);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Outcome r;
    if (gb->parsed()) r = cmd_gb(o);
    else if (nf->parsed()) r = cmd_nf(o);
    else if (quo->parsed()) r = cmd_quotient(o);
    else if (inter->parsed()) r = cmd_intersect(o);
    else if (sat->parsed()) r = cmd_sat(o);
    else if (res->parsed()) r = cmd_resolve(o);
    else if (reg->parsed()) r = cmd_reg(o);
    else if (hom->parsed()) r = cmd_hom(o);
    else if (prof->parsed()) r = cmd_profile(o);
    else if (tnt->parsed()) r = cmd_tnt(o);
    else if (orbit->parsed()) r = cmd_orbit(o);
    else if (frame->parsed()) r = cmd_frame(o, false);
    else if (tframe->parsed()) r = cmd_frame(o, true);
    else if (fl->parsed()) r = cmd_framelike(o);
    else if (w2->parsed()) r = cmd_w2(o);
    else if (ex->parsed()) r = cmd_example(o);
    else if (cert->parsed()) {
      if (o.file.empty() == o.example.empty()) throw std::invalid_argument("cert needs a file or --example");
      r = cmd_cert(o);
    }
    std::string doc = o.format == "json" && !r.json.is_null() ? r.json.dump(2) + "\n" : r.text;
    if (o.output.empty()) {
      out << doc;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write '" + o.output + "'");
      f << doc;
    }
    return r.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli

}  // namespace hilbtan
