#include "hcyl/json_io.hpp"

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

[[noreturn]] void bad(const std::string& at, const std::string& msg) {
  throw ValidationError("at " + (at.empty() ? std::string("/") : at) + ": " + msg);
}

const json& field(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) bad(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(at + "/" + key, "missing field");
  return *it;
}

long integer(const json& j, const std::string& at) {
  if (!j.is_number_integer()) bad(at, "expected an integer, got " + j.dump());
  return j.get<long>();
}

const json& array(const json& j, const std::string& at) {
  if (!j.is_array()) bad(at, "expected an array, got " + j.dump());
  return j;
}

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json character_json(const Character& c) {
  return json{{"orders", c.orders}, {"values", c.values}};
}

Character character_from(const json& j, const std::string& at) {
  Character c;
  const auto& o = array(field(j, "orders", at), at + "/orders");
  for (std::size_t i = 0; i < o.size(); ++i) c.orders.push_back(integer(o[i], at + "/orders/" + std::to_string(i)));
  const auto& v = array(field(j, "values", at), at + "/values");
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::string ai = at + "/values/" + std::to_string(i);
    std::vector<long> row;
    for (std::size_t k = 0; k < array(v[i], ai).size(); ++k) row.push_back(integer(v[i][k], ai + "/" + std::to_string(k)));
    c.values.push_back(std::move(row));
  }
  return c;
}

std::vector<Word> words_from(const json& j, SurfaceBasis b, const std::string& at) {
  std::vector<Word> out;
  const auto& a = array(j, at);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(word_from_json(a[i], b, at + "/" + std::to_string(i)));
  return out;
}

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

}  // namespace

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

SurfaceBasis basis_from_json(const json& j, const std::string& at) {
  SurfaceBasis b{static_cast<int>(integer(field(j, "g", at), at + "/g")),
                 static_cast<int>(integer(field(j, "n", at), at + "/n"))};
  try {
    b.check();
  } catch (const Error& e) {
    bad(at, e.what());
  }
  return b;
}

json to_json(const SurfaceBasis& b) { return json{{"g", b.g}, {"n", b.n}}; }

Word word_from_json(const json& j, SurfaceBasis b, const std::string& at) {
  const auto& a = array(j, at);
  std::vector<int> raw;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string ai = at + "/" + std::to_string(i);
    long v = integer(a[i], ai);
    if (v == 0 || std::abs(v) > b.rank())
      bad(ai, "letter " + std::to_string(v) + " outside +-1..+-" + std::to_string(b.rank()));
    raw.push_back(static_cast<int>(v));
  }
  return Word::reduce(raw, b);
}

json to_json(const Word& w) { return json(w.letters()); }

NilAutomorphism aut_from_json(const json& j, SurfaceBasis b, const std::string& at) {
  NilAutomorphism a;
  a.basis = b;
  a.q = static_cast<int>(integer(field(j, "q", at), at + "/q"));
  if (a.q < 0) bad(at + "/q", "level must be nonnegative");
  a.images = words_from(field(j, "images", at), b, at + "/images");
  if (static_cast<int>(a.images.size()) != b.rank())
    bad(at + "/images", "expected " + std::to_string(b.rank()) + " images");
  return a;
}

json to_json(const NilAutomorphism& a) {
  return json{{"basis", to_json(a.basis)}, {"q", a.q}, {"images", words_json(a.images)}};
}

CylinderClass cylinder_from_json(const json& j, int Q, const std::string& at) {
  SurfaceBasis b = basis_from_json(field(j, "basis", at), at + "/basis");
  auto mu = words_from(field(j, "milnor", at), b, at + "/milnor");
  auto im = words_from(field(j, "aut_images", at), b, at + "/aut_images");
  if (static_cast<int>(mu.size()) != b.rank()) bad(at + "/milnor", "expected " + std::to_string(b.rank()) + " words");
  if (static_cast<int>(im.size()) != b.rank()) bad(at + "/aut_images", "expected " + std::to_string(b.rank()) + " words");
  int depth = Q;
  if (j.contains("depth")) depth = static_cast<int>(integer(j["depth"], at + "/depth"));
  if (depth < 0) bad(at + "/depth", "depth must be nonnegative");
  if (!j.contains("boundary")) {
    try {
      return from_data(b, std::move(mu), std::move(im), Q, depth);
    } catch (const ValidationError& e) {
      bad(at, e.what());
    }
  }
  CylinderClass M{b, std::move(mu), NilAutomorphism{b, depth, std::move(im)}, word_from_json(j["boundary"], b, at + "/boundary")};
  if (auto v = validate(M, Q))
    bad(at, v->what + " relation fails at level " + std::to_string(v->level) + ", residual " +
                          v->residual.str());
  return M;
}

json to_json(const CylinderClass& M) {
  return json{{"basis", to_json(M.basis)},
              {"depth", M.depth()},
              {"milnor", words_json(M.milnor)},
              {"aut_images", words_json(M.aut.images)},
              {"boundary", to_json(M.boundary)}};
}

json to_json(const FiltrationReport& r) {
  json lv = json::array();
  for (const auto& l : r.levels) {
    json e{{"q", l.q}, {"H", l.in_H}, {"H_bracket", l.in_Hb}, {"H0", l.in_H0}, {"p_checked", l.p_checked}};
    if (l.p_checked) {
      e["p_ok"] = l.p_ok;
      e["p_weight"] = l.p_weight ? json(*l.p_weight) : json(">=" + std::to_string(l.q + 1));
    }
    lv.push_back(e);
  }
  return json{{"levels", lv}, {"chain_ok", r.chain_ok}, {"violation", r.violation}};
}

json to_json(const TruncatedSeries& s) {
  json o = json::object();
  for (const auto& [m, c] : s.terms()) o[monomial_name(m)] = big(c);
  return o;
}

json to_json(const Aut2Report& r) {
  json wit = json::array();
  for (const auto& w : r.witness) wit.push_back(w ? to_json(*w) : json(nullptr));
  return json{{"q", r.q},         {"conj_pass", r.conj_pass}, {"witness", wit},
              {"method", r.method}, {"a_pass", r.a_pass},     {"b_pass", r.b_pass},
              {"boundary_residual", to_json(r.boundary_residual)}, {"lift_clause", r.lift_clause}};
}

PStructure tower_from_json(const json& j, const std::string& at) {
  SurfaceBasis b = basis_from_json(field(j, "basis", at), at + "/basis");
  long p = integer(field(j, "p", at), at + "/p");
  std::vector<Character> chars;
  const auto& lv = array(field(j, "levels", at), at + "/levels");
  for (std::size_t i = 0; i < lv.size(); ++i) chars.push_back(character_from(lv[i], at + "/levels/" + std::to_string(i)));
  const auto& phi = field(j, "phi", at);
  long d = integer(field(phi, "d", at + "/phi"), at + "/phi/d");
  std::vector<long> vals;
  const auto& pv = array(field(phi, "values", at + "/phi"), at + "/phi/values");
  for (std::size_t i = 0; i < pv.size(); ++i) vals.push_back(integer(pv[i], at + "/phi/values/" + std::to_string(i)));
  chars.push_back(cyclic_character(d, vals));
  try {
    return tower_build(b, p, std::move(chars));
  } catch (const ValidationError& e) {
    bad(at, e.what());
  }
}

json to_json(const PStructure& T) {
  json lv = json::array();
  for (int t = 0; t < T.height(); ++t) lv.push_back(character_json(T.chars[t]));
  std::vector<long> phi;
  for (const auto& v : T.phi().values) phi.push_back(v.at(0));
  std::vector<int> cosets;
  for (const auto& L : T.levels) cosets.push_back(L.cosets);
  return json{{"basis", to_json(T.basis)}, {"p", T.p},       {"levels", lv},
              {"phi", {{"d", T.d()}, {"values", phi}}}, {"cosets", cosets}};
}

json to_json(const LiftData& L) {
  json a = json::array();
  for (const auto& l : L.lifts) a.push_back(json{{"degree", l.degree}, {"psi", l.psi}, {"base", l.base}});
  return json{{"index", L.index}, {"lifts", a}};
}

SeifertMatrix seifert_from_json(const json& j, const std::string& at) {
  const auto& rows = array(j, at);
  SeifertMatrix A;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string ai = at + "/" + std::to_string(i);
    const auto& r = array(rows[i], ai);
    if (r.size() != rows.size()) bad(ai, "matrix is not square");
    std::vector<mpz_class> row;
    for (std::size_t k = 0; k < r.size(); ++k) row.push_back(mpz_class(integer(r[k], ai + "/" + std::to_string(k))));
    A.push_back(std::move(row));
  }
  return A;
}

json to_json(const SeifertMatrix& A) {
  json a = json::array();
  for (const auto& r : A) {
    json row = json::array();
    for (const auto& x : r) row.push_back(big(x));
    a.push_back(row);
  }
  return a;
}

std::string rational_str(const mpq_class& x) {
  mpq_class q = x;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

json to_json(const WittSignatureVector& w) {
  json s = json::object();
  for (std::size_t i = 0; i < w.classes.size(); ++i) s[std::to_string(w.classes[i])] = w.sig[i];
  return json{{"d", w.d}, {"rank", w.rank}, {"signatures", s}};
}

json to_json(const SignatureIntegral& I) {
  json arcs = json::array();
  for (const auto& a : I.arcs) arcs.push_back(json{{"from", a.from}, {"to", a.to}, {"signature", a.signature}});
  return json{{"exact", I.exact ? json(rational_str(*I.exact)) : json(nullptr)},
              {"enclosure", {I.lo, I.hi}},
              {"arcs", arcs}};
}

json cyc_matrix_to_json(const CycMatrix& H) {
  json a = json::array();
  for (const auto& r : H) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.str());
    a.push_back(row);
  }
  return json{{"d", H.empty() ? 0 : H[0][0].field().d()}, {"entries", a}};
}

json to_json(const FamilyReport& r) {
  json mem = json::array();
  for (const auto& m : r.members) {
    json rec = json::array();
    for (const auto& t : m.recipe) rec.push_back(json{{"knot", t.name}, {"coeff", t.coeff}});
    mem.push_back(json{{"d", m.d}, {"recipe", rec}, {"size", m.A.size()}});
  }
  json chk = json::array();
  for (const auto& c : r.checks)
    chk.push_back(json{{"member", c.member}, {"condition", c.condition}, {"ok", c.ok}, {"detail", c.detail}});
  return json{{"p", r.p}, {"members", mem}, {"checks", chk}, {"ok", r.ok()}};
}

FamilyReport family_from_json(const json& j, const std::string& base) {
  FamilyReport r;
  r.p = integer(field(j, "p", base), base + "/p");
  const auto& mem = array(field(j, "members", base), base + "/members");
  for (std::size_t i = 0; i < mem.size(); ++i) {
    std::string at = base + "/members/" + std::to_string(i);
    FamilyMember m;
    m.d = integer(field(mem[i], "d", at), at + "/d");
    if (mem[i].contains("matrix")) {
      m.A = seifert_from_json(mem[i]["matrix"], at + "/matrix");
    } else {
      const auto& rec = array(field(mem[i], "recipe", at), at + "/recipe");
      for (std::size_t k = 0; k < rec.size(); ++k) {
        std::string ak = at + "/recipe/" + std::to_string(k);
        const auto& name = field(rec[k], "knot", ak);
        if (!name.is_string()) bad(ak + "/knot", "expected a string");
        m.recipe.push_back({name.get<std::string>(), integer(field(rec[k], "coeff", ak), ak + "/coeff")});
      }
      try {
        m.A = assemble(m.recipe);
      } catch (const ValidationError& e) {
        bad(at + "/recipe", e.what());
      }
    }
    r.members.push_back(std::move(m));
  }
  return r;
}

json to_json(const GammaTower& gt) {
  json lv = json::array();
  for (const auto& c : gt.chars) lv.push_back(character_json(c));
  return json{{"basis", to_json(gt.basis)}, {"p", gt.p},     {"h", gt.h},
              {"gamma", to_json(gt.gamma)}, {"levels", lv},  {"phi", gt.phi},
              {"lift_values", gt.lift_values}, {"c", gt.c}};
}

GammaTower gamma_tower_from_json(const json& j, const std::string& at) {
  GammaTower gt;
  gt.basis = basis_from_json(field(j, "basis", at), at + "/basis");
  gt.p = integer(field(j, "p", at), at + "/p");
  gt.gamma = word_from_json(field(j, "gamma", at), gt.basis, at + "/gamma");
  const auto& lv = array(field(j, "levels", at), at + "/levels");
  for (std::size_t i = 0; i < lv.size(); ++i) gt.chars.push_back(character_from(lv[i], at + "/levels/" + std::to_string(i)));
  gt.h = static_cast<int>(gt.chars.size());
  const auto& phi = array(field(j, "phi", at), at + "/phi");
  for (std::size_t i = 0; i < phi.size(); ++i) gt.phi.push_back(integer(phi[i], at + "/phi/" + std::to_string(i)));
  if (j.contains("lift_values"))
    for (const auto& v : j["lift_values"]) gt.lift_values.push_back(v.get<long>());
  if (j.contains("c")) gt.c = static_cast<int>(integer(j["c"], at + "/c"));
  return gt;
}

json to_json(const Certificate& c) {
  json terms = json::array();
  for (const auto& t : c.terms)
    terms.push_back(json{{"coeff", t.coeff},
                         {"d", t.d},
                         {"effect", to_json(t.effect)},
                         {"defining_sign", t.defining_sign},
                         {"doubled_contribution", t.doubled_contribution},
                         {"zero_checks", t.zero_checks},
                         {"zeros_ok", t.zeros_ok}});
  return json{{"i0", c.i0},           {"d", c.d},          {"c", c.c},
              {"lifts", to_json(c.lifts)}, {"terms", terms}, {"sigma_i0", c.sigma_i0},
              {"claimed", c.claimed}, {"evaluated", c.evaluated}, {"verdict", c.verdict}};
}

}  // namespace hcyl
