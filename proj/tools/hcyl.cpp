#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "hcyl/config.hpp"
#include "hcyl/error.hpp"
#include "hcyl/json_io.hpp"
#include "hcyl/lyndon.hpp"

using namespace hcyl;

namespace {

const std::vector<std::string> kCommands{"magnus", "nilq", "cylinder", "tower", "forms", "infect", "ranks", "selftest"};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const json& doc, const std::string& out) {
  std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(out);
  if (!f) throw ValidationError("cannot write " + out);
  f << text;
}

// Results land in index order whatever the completion order.
template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> err(n);
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        err[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

const json& need(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError("at /" + key + ": missing field");
  return j[key];
}

long need_int(const json& j, const std::string& key) {
  const auto& v = need(j, key);
  if (!v.is_number_integer()) throw ValidationError("at /" + key + ": expected an integer");
  return v.get<long>();
}

json weight_json(std::optional<int> w, int cap) { return w ? json(*w) : json(">=" + std::to_string(cap)); }

BasisChange change_from_json(const json& j, SurfaceBasis b, int Q) {
  BasisChange c;
  c.Q = Q;
  const auto& k = need(j, "kind");
  if (!k.is_string()) throw ValidationError("at /change/kind: expected a string");
  std::string kind = k.get<std::string>();
  if (kind == "same_basepoint") c.kind = BasisChange::Kind::same_basepoint;
  else if (kind == "same_component") c.kind = BasisChange::Kind::same_component;
  else if (kind == "other_component") c.kind = BasisChange::Kind::other_component;
  else throw ValidationError("at /change/kind: unknown kind " + kind);
  if (j.contains("gamma"))
    for (std::size_t i = 0; i < j["gamma"].size(); ++i)
      c.gamma.push_back(word_from_json(j["gamma"][i], b, "/change/gamma/" + std::to_string(i)));
  if (j.contains("signs"))
    for (const auto& s : j["signs"]) c.signs.push_back(s.get<int>());
  return c;
}

EmbeddingSpec spec_by_name(const std::string& name) {
  if (name == "annulus") return annulus_into_pants(false);
  if (name == "annulus-basepoint") return annulus_into_pants(true);
  if (name == "handle") return handle_into_two_boundaries();
  throw ValidationError("at /spec: unknown embedding " + name + " (annulus, annulus-basepoint, handle)");
}

std::vector<long> coefficient_row(const json& r, const std::string& at) {
  if (!r.is_array()) throw ValidationError("at " + at + ": expected an array of integers");
  std::vector<long> row;
  bool any = false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r[i].is_number_integer()) throw ValidationError("at " + at + "/" + std::to_string(i) + ": expected an integer");
    row.push_back(r[i].get<long>());
    any = any || row.back() != 0;
  }
  if (!any) throw ValidationError("at " + at + ": all coefficients vanish");
  return row;
}

// One vector, or a list of vectors.
std::vector<std::vector<long>> coefficient_list(const json& j) {
  const auto& c = need(j, "coeffs");
  if (!c.is_array() || c.empty()) throw ValidationError("at /coeffs: expected a nonempty array");
  if (!c[0].is_array()) return {coefficient_row(c, "/coeffs")};
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(coefficient_row(c[i], "/coeffs/" + std::to_string(i)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology cylinder invariants: Magnus layers, nilpotent data, towers, signatures, infection."};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string input = "-";
  app.add_option("--deg", cfg.deg, "Magnus degree cap");
  app.add_option("--depth", cfg.depth, "validation depth Q");
  app.add_option("--precision", cfg.precision, "starting interval precision in bits (HCYL_PRECISION overrides)");
  app.add_option("--seed", cfg.seed, "seed for randomized runs");
  app.add_option("--out", cfg.out, "output file, default stdout");

  std::function<json()> action;
  auto with_input = [&](CLI::App* sc) { sc->add_option("--input,-i", input, "JSON input file, - for stdin"); };
  auto doc = [&] { return parse_json(read_input(input), input == "-" ? "stdin" : input); };

  // magnus
  auto* magnus = app.add_subcommand("magnus", "Magnus expansion and lower central series weight");
  magnus->require_subcommand(1);
  auto* m_expand = magnus->add_subcommand("expand", "truncated expansion of {basis, word}");
  auto* m_weight = magnus->add_subcommand("weight", "largest q with the word in F_q, below --deg + 1");
  for (auto* sc : {m_expand, m_weight}) with_input(sc);
  m_expand->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      Word w = word_from_json(need(j, "word"), b, "/word");
      return json{{"basis", to_json(b)}, {"word", to_json(w)}, {"degree", cfg.deg}, {"series", to_json(expand(w, cfg.deg))}};
    };
  });
  m_weight->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      Word w = word_from_json(need(j, "word"), b, "/word");
      return json{{"word", to_json(w)}, {"weight", weight_json(lcs_weight(w, cfg.deg + 1), cfg.deg + 1)}};
    };
  });

  // nilq
  auto* nilq = app.add_subcommand("nilq", "free nilpotent quotients and their automorphisms");
  nilq->require_subcommand(1);
  auto* n_eq = nilq->add_subcommand("eq", "{basis, q, u, v}: equality in F/F_q");
  auto* n_normal = nilq->add_subcommand("normal", "{basis, q, word}: normal form in F/F_q");
  auto* n_apply = nilq->add_subcommand("apply", "{basis, aut, word}");
  auto* n_compose = nilq->add_subcommand("compose", "{basis, phi, psi}: phi after psi");
  auto* n_invert = nilq->add_subcommand("invert", "{basis, aut}: inverse at level aut.q or --depth");
  auto* n_check = nilq->add_subcommand("check", "{basis, aut}: conjugacy and boundary conditions");
  for (auto* sc : {n_eq, n_normal, n_apply, n_compose, n_invert, n_check}) with_input(sc);
  n_eq->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      int q = static_cast<int>(need_int(j, "q"));
      Word u = word_from_json(need(j, "u"), b, "/u"), v = word_from_json(need(j, "v"), b, "/v");
      return json{{"q", q}, {"equal", nil_eq(u, v, q)}};
    };
  });
  n_normal->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      int q = static_cast<int>(need_int(j, "q"));
      Word w = word_from_json(need(j, "word"), b, "/word");
      return json{{"q", q}, {"normal_form", to_json(nil_normal_form(w, q))}};
    };
  });
  n_apply->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      auto phi = aut_from_json(need(j, "aut"), b, "/aut");
      Word w = word_from_json(need(j, "word"), b, "/word");
      Word img = phi.q ? nil_apply(phi, w, phi.q) : aut_apply(phi, w);
      return json{{"q", phi.q}, {"image", to_json(img)}};
    };
  });
  n_compose->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      return to_json(aut_compose(aut_from_json(need(j, "phi"), b, "/phi"), aut_from_json(need(j, "psi"), b, "/psi")));
    };
  });
  n_invert->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      auto phi = aut_from_json(need(j, "aut"), b, "/aut");
      return to_json(aut_invert(phi, phi.q ? phi.q : cfg.depth));
    };
  });
  n_check->callback([&] {
    action = [&] {
      json j = doc();
      auto b = basis_from_json(need(j, "basis"), "/basis");
      auto phi = aut_from_json(need(j, "aut"), b, "/aut");
      return to_json(aut2_check(phi, phi.q ? phi.q : cfg.depth));
    };
  });

  // cylinder
  auto* cyl = app.add_subcommand("cylinder", "homology cylinder classes");
  cyl->require_subcommand(1);
  auto* c_mul = cyl->add_subcommand("mul", "{left, right}: product of two classes");
  auto* c_inv = cyl->add_subcommand("inv", "class: inverse at --depth");
  auto* c_filt = cyl->add_subcommand("filtration", "class: filtration membership up to --depth");
  auto* c_change = cyl->add_subcommand("change-basis", "{class, change}");
  auto* c_embed = cyl->add_subcommand("embed", "{class, spec}: pushforward along a surface embedding");
  for (auto* sc : {c_mul, c_inv, c_filt, c_change, c_embed}) with_input(sc);
  c_mul->callback([&] {
    action = [&] {
      json j = doc();
      return to_json(compose(cylinder_from_json(need(j, "left"), cfg.depth, "/left"), cylinder_from_json(need(j, "right"), cfg.depth, "/right")));
    };
  });
  c_inv->callback([&] { action = [&] { return to_json(invert(cylinder_from_json(doc(), cfg.depth), cfg.depth)); }; });
  c_filt->callback([&] {
    action = [&] { return to_json(filtration_report(cylinder_from_json(doc(), cfg.depth), cfg.depth)); };
  });
  c_change->callback([&] {
    action = [&] {
      json j = doc();
      auto M = cylinder_from_json(need(j, "class"), cfg.depth, "/class");
      auto r = change_basis(M, change_from_json(need(j, "change"), M.basis, cfg.depth));
      json coords = json::array();
      for (const auto& w : r.coords_old) coords.push_back(to_json(w));
      return json{{"coords_old", coords}, {"class", to_json(r.cls)}};
    };
  });
  c_embed->callback([&] {
    action = [&] {
      json j = doc();
      auto M = cylinder_from_json(need(j, "class"), cfg.depth, "/class");
      return to_json(embed_pushforward(M, spec_by_name(need(j, "spec").get<std::string>())));
    };
  });

  // tower
  auto* tow = app.add_subcommand("tower", "p-towers of finite abelian covers");
  tow->require_subcommand(1);
  auto* t_build = tow->add_subcommand("build", "tower: normalized tower with coset counts");
  auto* t_order = tow->add_subcommand("order", "tower: least q with F_q in the top subgroup, up to --depth");
  auto* t_lift = tow->add_subcommand("lift", "{tower, alpha}: lifts of a loop to the top cover");
  auto* t_c5 = tow->add_subcommand("c5", "{tower, class, t, s}: additivity condition per coordinate");
  for (auto* sc : {t_build, t_order, t_lift, t_c5}) with_input(sc);
  t_build->callback([&] { action = [&] { return to_json(tower_from_json(doc())); }; });
  t_order->callback([&] {
    action = [&] {
      auto T = tower_from_json(doc());
      auto o = tower_order(T, cfg.depth);
      return json{{"order", o ? json(*o) : json(nullptr)}, {"cap", cfg.depth}};
    };
  });
  t_lift->callback([&] {
    action = [&] {
      json j = doc();
      auto T = tower_from_json(need(j, "tower"), "/tower");
      return to_json(lift_loop(T, word_from_json(need(j, "alpha"), T.basis, "/alpha")));
    };
  });
  t_c5->callback([&] {
    action = [&] {
      json j = doc();
      auto T = tower_from_json(need(j, "tower"), "/tower");
      auto M = cylinder_from_json(need(j, "class"), cfg.depth, "/class");
      json out = json::array();
      for (auto s : check_c5(T, M, static_cast<int>(need_int(j, "t")), static_cast<int>(need_int(j, "s"))))
        out.push_back(to_string(s));
      return json{{"coordinates", out}};
    };
  });

  // forms
  auto* forms = app.add_subcommand("forms", "Seifert forms and signatures");
  forms->require_subcommand(1);
  auto* f_sig = forms->add_subcommand("lt-sig", "{matrix, d, k}: signature at zeta_d^k, every embedding");
  auto* f_lam = forms->add_subcommand("lambda-r", "{matrix, d, k, r}: block form and its signatures");
  auto* f_int = forms->add_subcommand("integral", "{matrix}: normalized signature integral");
  auto* f_arf = forms->add_subcommand("arf", "{matrix}: Arf invariant");
  auto* f_search = forms->add_subcommand("knot-search", "search a knot family");
  for (auto* sc : {f_sig, f_lam, f_int, f_arf}) with_input(sc);
  long p = 2;
  int count = 3;
  f_search->add_option("--p", p, "prime")->required();
  f_search->add_option("--count", count, "family size")->required();
  f_search->add_option("--max-torus", cfg.knots.max_torus);
  f_search->add_option("--max-twist", cfg.knots.max_twist);
  f_search->add_option("--max-support", cfg.knots.max_support);
  f_search->add_option("--max-coeff", cfg.knots.max_coeff);
  f_search->add_option("--first-exponent", cfg.knots.first_exponent);
  auto seifert = [&](const json& j) {
    auto A = seifert_from_json(need(j, "matrix"), "/matrix");
    if (!is_seifert(A)) throw ValidationError("at /matrix: det(A - A^T) is not 1");
    return A;
  };
  auto root = [&](const json& j) {
    long d = need_int(j, "d");
    if (d < 1 || d > 4096) throw ValidationError("at /d: expected 1 <= d <= 4096");
    return RootSpec{static_cast<int>(d), need_int(j, "k")};
  };
  f_sig->callback([&] {
    action = [&] {
      json j = doc();
      auto A = seifert(j);
      auto w = root(j);
      return json{{"d", w.d}, {"k", w.k}, {"signature", lt_signature(A, w)}, {"witt", to_json(witt_signatures(lt_matrix(A, w), w.d))}};
    };
  });
  f_lam->callback([&] {
    action = [&] {
      json j = doc();
      auto A = seifert(j);
      auto w = root(j);
      int r = static_cast<int>(need_int(j, "r"));
      auto H = lambda_r(A, w, r);
      return json{{"r", r}, {"form", cyc_matrix_to_json(H)}, {"witt", to_json(witt_signatures(H, w.d))}};
    };
  });
  f_int->callback([&] { action = [&] { return to_json(lt_integral(seifert(doc()))); }; });
  f_arf->callback([&] { action = [&] { return json{{"arf", arf(seifert(doc()))}}; }; });
  f_search->callback([&] { action = [&] { return to_json(knot_family_search(p, count, cfg.knots)); }; });

  // infect
  auto* inf = app.add_subcommand("infect", "infection effects and independence certificates");
  inf->require_subcommand(1);
  auto* i_effect = inf->add_subcommand("effect", "{tower, alpha, knot}: Witt class of the infection effect");
  auto* i_cert = inf->add_subcommand("certify", "{family, gamma_tower, coeffs}: independence certificate(s)");
  auto* i_gamma = inf->add_subcommand("gamma-search", "infection curve and tower");
  for (auto* sc : {i_effect, i_cert}) with_input(sc);
  int g = 0, n = 3, h = 1;
  i_gamma->add_option("--g", g, "genus");
  i_gamma->add_option("--n", n, "boundary components");
  i_gamma->add_option("--p", p, "prime");
  i_gamma->add_option("--height", h, "tower height");
  i_effect->callback([&] {
    action = [&] {
      json j = doc();
      InfectionSpec s;
      s.tower = tower_from_json(need(j, "tower"), "/tower");
      s.alpha = word_from_json(need(j, "alpha"), s.tower.basis, "/alpha");
      s.knot = seifert_from_json(need(j, "knot"), "/knot");
      return to_json(lambda_effect(s));
    };
  });
  i_cert->callback([&] {
    action = [&] {
      json j = doc();
      auto fam = family_from_json(need(j, "family"), "/family");
      auto gt = gamma_tower_from_json(need(j, "gamma_tower"), "/gamma_tower");
      auto list = coefficient_list(j);
      auto certs = parallel_map<json>(list.size(), [&](std::size_t i) { return to_json(independence_certificate(fam, gt, list[i])); });
      if (!need(j, "coeffs")[0].is_array()) return certs[0];
      return json{{"certificates", certs}};
    };
  });
  i_gamma->callback([&] { action = [&] { return to_json(gamma_tower_search(SurfaceBasis{g, n}, p, h)); }; });

  // ranks
  auto* ranks = app.add_subcommand("ranks", "ranks of the lower central series quotients");
  long m = 2;
  int qmax = 4;
  ranks->add_option("--m", m, "free rank")->required();
  ranks->add_option("--q", qmax, "largest q")->required();
  ranks->callback([&] {
    action = [&] {
      json rows = json::array();
      for (int q = 1; q <= qmax; ++q) {
        json r{{"q", q}, {"N", witt_rank(q, m).get_str()}};
        r["r"] = q >= 2 ? json(rank_window(q, m).get_str()) : json(nullptr);
        rows.push_back(r);
      }
      return json{{"m", m}, {"rows", rows}};
    };
  });

  // selftest
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  bool all_pass = true;
  self->callback([&] {
    action = [&] {
      json out = json::array();
      for (const auto& r : acceptance::run_all(cfg.seed, [](const acceptance::Result& r) {
             std::fprintf(stderr, "%s criterion %d: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.detail.c_str());
           })) {
        out.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all_pass = all_pass && r.pass;
      }
      return json{{"seed", cfg.seed}, {"criteria", out}, {"pass", all_pass}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    bool known = false;
    for (int i = 1; i < argc; ++i)
      if (std::find(kCommands.begin(), kCommands.end(), argv[i]) != kCommands.end()) known = true;
    if (!known) {
      std::cerr << "unknown or missing subcommand\n" << app.help();
      return 64;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.apply();
    json result = action();
    write_output(result, cfg.out);
    return all_pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    write_output(json{{"error", {{"code", e.exit_code()}, {"message", e.what()}}}}, cfg.out);
    return e.exit_code();
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    write_output(json{{"error", {{"code", 2}, {"message", e.what()}}}}, cfg.out);
    return 2;
  }
}
