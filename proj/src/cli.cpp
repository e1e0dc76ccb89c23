#include "surfalg/cli.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "surfalg/affine.hpp"
#include "surfalg/common.hpp"
#include "surfalg/constellation.hpp"
#include "surfalg/f2gp.hpp"
#include "surfalg/grassmann.hpp"
#include "surfalg/lusztig.hpp"
#include "surfalg/order.hpp"
#include "surfalg/quiver.hpp"

namespace surfalg::cli {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return json::parse(in);
}

std::vector<long long> parse_csv(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw ParseError("bad integer list: " + text);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad integer list: " + text);
    } catch (const std::out_of_range&) {
      throw ParseError("bad integer list: " + text);
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

const char* bool_str(bool b) { return b ? "true" : "false"; }

// --- deterministic randomness for the equivariance command ---

long long bounded(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

RationalMatrix random_nilpotent(std::mt19937_64& rng, int n) {
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) m.set(r, c, Rational(static_cast<long>(bounded(rng, -2, 2))));
  return m;
}

RationalMatrix random_invertible(std::mt19937_64& rng, int n) {
  RationalMatrix g = RationalMatrix::identity(n);
  for (int step = 0; step < n * n; ++step) {
    int i = static_cast<int>(bounded(rng, 0, n - 1));
    int j = static_cast<int>(bounded(rng, 0, n - 1));
    if (i == j) continue;
    RationalMatrix e = RationalMatrix::identity(n);
    e.set(i, j, Rational(static_cast<long>(bounded(rng, -2, 2))));
    g = g * e;
  }
  return g;
}

// --- per-command workers ---

void constellation_validate(std::ostream& out, const std::string& path, const std::string& fmt) {
  auto c = permgroup::constellation_from_json(read_json_file(path));
  auto r = permgroup::validate_constellation(c);
  if (fmt == "json") {
    emit(out, json{{"product_identity", r.product_identity},
                   {"alpha_involution_fpf", r.alpha_involution_fpf},
                   {"transitive", r.transitive},
                   {"valid", r.ok()}});
  } else {
    out << "product_identity: " << bool_str(r.product_identity) << "\n"
        << "alpha_involution_fpf: " << bool_str(r.alpha_involution_fpf) << "\n"
        << "transitive: " << bool_str(r.transitive) << "\n"
        << "valid: " << bool_str(r.ok()) << "\n";
  }
}

void constellation_genus(std::ostream& out, const std::string& path, const std::string& fmt) {
  auto c = permgroup::constellation_from_json(read_json_file(path));
  auto d = permgroup::surface_data(c);
  if (fmt == "json") {
    emit(out, json{{"vertices", d.vertices},
                   {"edges", d.edges},
                   {"faces", d.faces},
                   {"euler", d.euler},
                   {"genus", d.genus}});
  } else {
    out << "V=" << d.vertices << "\nE=" << d.edges << "\nF=" << d.faces << "\neuler=" << d.euler
        << "\ngenus=" << d.genus << "\n";
  }
}

void constellation_monodromy(std::ostream& out, const std::string& path, const std::string& fmt,
                             long long cap) {
  auto c = permgroup::constellation_from_json(read_json_file(path));
  auto order = permgroup::monodromy_order(c, cap);
  if (fmt == "json") {
    emit(out, order ? json{{"order", *order}} : json{{"order", nullptr}, {"cap", cap}});
  } else if (order) {
    out << "order=" << *order << "\n";
  } else {
    out << "order exceeds cap " << cap << "\n";
  }
}

void quiver_build(std::ostream& out, const std::string& path, const std::string& fmt) {
  auto c = permgroup::constellation_from_json(read_json_file(path));
  auto [q, ideal] = quiver::medial_quiver(c);
  if (fmt == "json") {
    emit(out, json{{"quiver", q}, {"relations", ideal}});
  } else if (fmt == "dot") {
    out << quiver::quiver_dot(q, ideal);
  } else {
    out << "vertices: " << q.vertex_pairs.size() << "\n";
    for (size_t v = 0; v < q.vertex_pairs.size(); ++v)
      out << "  v" << v << " = {" << q.vertex_pairs[v].first << "," << q.vertex_pairs[v].second
          << "}\n";
    out << "arrows: " << q.arrows.size() << "\n";
    for (const auto& a : q.arrows)
      out << "  a" << a.id << ": v" << a.tail << " -> v" << a.head << " (tag " << a.cycle_tag
          << ")\n";
    out << "relations: " << ideal.forbidden.size() << "\n";
    for (const auto& [a, b] : ideal.forbidden) out << "  a" << a << " a" << b << "\n";
  }
}

void quiver_axioms(std::ostream& out, const std::string& path, const std::string& fmt) {
  auto c = permgroup::constellation_from_json(read_json_file(path));
  auto [q, ideal] = quiver::medial_quiver(c);
  auto r = quiver::check_surface_axioms(q, ideal);
  if (fmt == "json") {
    emit(out, json{{"regular_degree", r.regular_degree},
                   {"unique_forbidden", r.unique_forbidden},
                   {"unique_allowed", r.unique_allowed},
                   {"quadratic", r.quadratic},
                   {"all", r.all()}});
  } else {
    out << "regular_degree: " << bool_str(r.regular_degree) << "\n"
        << "unique_forbidden: " << bool_str(r.unique_forbidden) << "\n"
        << "unique_allowed: " << bool_str(r.unique_allowed) << "\n"
        << "quadratic: " << bool_str(r.quadratic) << "\n"
        << "all: " << bool_str(r.all()) << "\n";
  }
}

order::SurfaceOrder order_from_input(const json& j) {
  if (j.contains("constellation"))
    return order::build_surface_order(
        permgroup::constellation_from_json(j.at("constellation")));
  return j.at("order").get<order::SurfaceOrder>();
}

void order_member(std::ostream& out, const std::string& path, const std::string& fmt) {
  json j = read_json_file(path);
  auto s = order_from_input(j);
  std::vector<laurent::LaurentMatrix> element;
  for (const auto& m : j.at("element")) element.push_back(m.get<laurent::LaurentMatrix>());
  bool member = order::membership(s, element);
  if (fmt == "json")
    emit(out, json{{"member", member}});
  else
    out << "member: " << bool_str(member) << "\n";
}

void lattice_equal_cmd(std::ostream& out, const std::string& path, const std::string& fmt) {
  json j = read_json_file(path);
  grassmann::LatticeBasis a(j.at("a").get<laurent::LaurentMatrix>());
  grassmann::LatticeBasis b(j.at("b").get<laurent::LaurentMatrix>());
  bool eq = grassmann::lattice_equal(a, b);
  if (fmt == "json")
    emit(out, json{{"equal", eq}});
  else
    out << "equal: " << bool_str(eq) << "\n";
}

void lattice_component(std::ostream& out, const std::string& path, const std::string& fmt) {
  grassmann::LatticeBasis l(read_json_file(path).get<laurent::LaurentMatrix>());
  if (fmt == "json")
    emit(out, json{{"component", grassmann::component_index(l)}});
  else
    out << "component: " << grassmann::component_index(l) << "\n";
}

void lattice_flag(std::ostream& out, const std::string& path, const std::string& fmt) {
  json j = read_json_file(path);
  const json& chain_json = j.is_array() ? j : j.at("chain");
  std::vector<grassmann::LatticeBasis> chain;
  for (const auto& m : chain_json) chain.emplace_back(m.get<laurent::LaurentMatrix>());
  auto r = grassmann::validate_flag(chain);
  if (fmt == "json") {
    emit(out, json{{"chain_contained", r.chain_contained},
                   {"x_twist", r.x_twist},
                   {"unit_steps", r.unit_steps},
                   {"valid", r.ok()}});
  } else {
    out << "chain_contained: " << bool_str(r.chain_contained) << "\n"
        << "x_twist: " << bool_str(r.x_twist) << "\n"
        << "unit_steps: " << bool_str(r.unit_steps) << "\n"
        << "valid: " << bool_str(r.ok()) << "\n";
  }
}

void lusztig_embed(std::ostream& out, const std::string& path, const std::string& fmt,
                   long precision) {
  RationalMatrix n(0, 0);
  from_json(read_json_file(path), n);
  auto l = lusztig::phi_nilpotent(n, precision);
  if (fmt == "json") {
    emit(out, json{{"basis", l.matrix()}, {"component", grassmann::component_index(l)}});
  } else {
    out << l.matrix().str() << "component: " << grassmann::component_index(l) << "\n";
  }
}

void lusztig_rep(std::ostream& out, const std::string& path, const std::string& fmt,
                 long precision) {
  auto rep = lusztig::rep_from_json(read_json_file(path));
  bool nilpotent = lusztig::is_nilpotent_rep(rep);
  auto big = lusztig::big_matrix(rep, precision);
  if (fmt == "json") {
    json j{{"nilpotent", nilpotent}, {"big_matrix", big}};
    if (nilpotent) {
      json lambda = json::array();
      json components = json::array();
      for (const auto& l : lusztig::lambda_lattices(rep, precision)) {
        lambda.push_back(l.matrix());
        components.push_back(grassmann::component_index(l));
      }
      j["lambda"] = std::move(lambda);
      j["components"] = std::move(components);
    }
    emit(out, j);
  } else {
    out << "nilpotent: " << bool_str(nilpotent) << "\n";
    out << "big matrix:\n" << big.str();
    if (nilpotent) {
      auto lattices = lusztig::lambda_lattices(rep, precision);
      for (size_t i = 0; i < lattices.size(); ++i)
        out << "lambda " << (i + 1) << " (component " << grassmann::component_index(lattices[i])
            << "):\n"
            << lattices[i].matrix().str();
    }
  }
}

void lusztig_equivariance(std::ostream& out, const std::string& fmt, int n, long long seed,
                          int trials, long precision) {
  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  for (int t = 1; t <= trials; ++t) {
    RationalMatrix nil = random_nilpotent(rng, n);
    RationalMatrix g = random_invertible(rng, n);
    if (!lusztig::check_equivariance(g, nil, precision))
      throw DomainError("equivariance failed at trial " + std::to_string(t));
  }
  if (fmt == "json")
    emit(out, json{{"ok", true}, {"trials", trials}, {"n", n}, {"seed", seed}});
  else
    out << "equivariance: ok trials=" << trials << " n=" << n << " seed=" << seed << "\n";
}

void f2_encode(std::ostream& out, const std::string& word, const std::string& fmt) {
  auto enc = f2gp::encode(f2gp::parse_word(word));
  if (fmt == "json")
    emit(out, json{{"bits", enc.bits}, {"copy", enc.copy}});
  else
    out << enc.bits << "\n" << "copy: " << enc.copy << "\n";
}

void f2_compare(std::ostream& out, const std::string& w1, const std::string& w2,
                const std::string& fmt) {
  auto r = f2gp::compare(f2gp::parse_word(w1), f2gp::parse_word(w2));
  const char* name = r == f2gp::Ordering::Less ? "less"
                     : r == f2gp::Ordering::Greater ? "greater"
                                                    : "equal";
  if (fmt == "json")
    emit(out, json{{"order", name}});
  else
    out << name << "\n";
}

json ratmat_json(const RationalMatrix& m) {
  json j;
  to_json(j, m);
  return j;
}

void gp_string(std::ostream& out, const std::string& zigzag, const std::string& fmt) {
  auto m = f2gp::string_module(zigzag);
  if (fmt == "json") {
    emit(out, json{{"word", m.word},
                   {"dim", m.dim},
                   {"X", ratmat_json(m.X)},
                   {"Y", ratmat_json(m.Y)},
                   {"sinks", f2gp::zigzag_sinks(zigzag)}});
  } else {
    out << "dim: " << m.dim << "\n"
        << "sinks: " << f2gp::zigzag_sinks(zigzag) << "\n"
        << "X:\n" << m.X.str() << "Y:\n" << m.Y.str();
  }
}

void gp_sym(std::ostream& out, int n, const std::string& fmt) {
  auto rep = f2gp::sym_rep(n);
  if (fmt == "json") {
    emit(out, json{{"n", rep.n},
                   {"X", ratmat_json(rep.X)},
                   {"Y", ratmat_json(rep.Y)},
                   {"H", ratmat_json(rep.H)}});
  } else {
    out << "n: " << rep.n << "\n"
        << "X:\n" << rep.X.str() << "Y:\n" << rep.Y.str() << "H:\n" << rep.H.str();
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"surface algebra and affine Grassmannian toolkit"};
  app.require_subcommand(1);

  std::string path, fmt = "text", word, word2;
  std::string window_text, with_text;
  int n = 0;
  long long cap = 100000, seed = 1;
  int trials = 20;
  long precision = laurent::kDefaultPrecision;

  const auto text_json = CLI::IsMember({"text", "json"});
  const auto text_json_dot = CLI::IsMember({"text", "json", "dot"});

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "path to a JSON input file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_format = [&](CLI::App* cmd, const CLI::Validator& allowed) {
    cmd->add_option("--format", fmt, "output format")->check(allowed);
  };
  auto add_precision = [&](CLI::App* cmd) {
    cmd->add_option("--precision", precision, "series truncation exponent")
        ->check(CLI::Range(1L, 1000L));
  };

  auto* constellation = app.add_subcommand("constellation", "permutation constellations");
  constellation->require_subcommand(1);
  auto* c_validate = constellation->add_subcommand("validate", "check the three axioms");
  add_input(c_validate);
  add_format(c_validate, text_json);
  c_validate->callback([&] { constellation_validate(out, path, fmt); });
  auto* c_genus = constellation->add_subcommand("genus", "Euler data of the surface");
  add_input(c_genus);
  add_format(c_genus, text_json);
  c_genus->callback([&] { constellation_genus(out, path, fmt); });
  auto* c_mono = constellation->add_subcommand("monodromy", "order of <sigma, alpha>");
  add_input(c_mono);
  add_format(c_mono, text_json);
  c_mono->add_option("--cap", cap, "give up beyond this group size")->check(CLI::PositiveNumber);
  c_mono->callback([&] { constellation_monodromy(out, path, fmt, cap); });

  auto* quiver_cmd = app.add_subcommand("quiver", "medial quiver with gentle relations");
  quiver_cmd->require_subcommand(1);
  auto* q_build = quiver_cmd->add_subcommand("build", "construct quiver and relations");
  add_input(q_build);
  add_format(q_build, text_json_dot);
  q_build->callback([&] { quiver_build(out, path, fmt); });
  auto* q_axioms = quiver_cmd->add_subcommand("axioms", "surface-algebra axiom report");
  add_input(q_axioms);
  add_format(q_axioms, text_json);
  q_axioms->callback([&] { quiver_axioms(out, path, fmt); });
  auto* q_dot = quiver_cmd->add_subcommand("dot", "DOT rendering");
  add_input(q_dot);
  q_dot->callback([&] { quiver_build(out, path, "dot"); });

  auto* order_cmd = app.add_subcommand("order", "glued surface orders");
  order_cmd->require_subcommand(1);
  auto* o_build = order_cmd->add_subcommand("build", "construct the surface order");
  add_input(o_build);
  add_format(o_build, text_json);
  o_build->callback([&] {
    auto s = order::build_surface_order(permgroup::constellation_from_json(read_json_file(path)));
    if (fmt == "json")
      emit(out, json(s));
    else
      out << order::order_report(s);
  });
  auto* o_member = order_cmd->add_subcommand("member", "test membership of an element");
  add_input(o_member);
  add_format(o_member, text_json);
  o_member->callback([&] { order_member(out, path, fmt); });

  auto* affine_cmd = app.add_subcommand("affine", "affine symmetric group windows");
  affine_cmd->require_subcommand(1);
  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--window", window_text, "comma list, e.g. 0,3")->required();
  };
  auto* a_validate = affine_cmd->add_subcommand("validate", "check the window conditions");
  add_window(a_validate);
  add_format(a_validate, text_json);
  a_validate->callback([&] {
    bool ok = affine::validate_window(n, parse_csv(window_text));
    if (fmt == "json")
      emit(out, json{{"valid", ok}});
    else
      out << "valid: " << bool_str(ok) << "\n";
  });
  auto* a_split = affine_cmd->add_subcommand("split", "finite part and translations");
  add_window(a_split);
  add_format(a_split, text_json);
  a_split->callback([&] {
    affine::AffinePermutation s(n, parse_csv(window_text));
    auto parts = affine::split(s);
    if (fmt == "json")
      emit(out, json{{"finite", permgroup::cycles_to_json(parts.finite)},
                     {"translation", parts.translation}});
    else
      out << "finite: " << parts.finite.str() << "\n"
          << "translation: " << json(parts.translation).dump() << "\n";
  });
  auto* a_matrix = affine_cmd->add_subcommand("matrix", "monomial matrix realization");
  add_window(a_matrix);
  add_format(a_matrix, text_json);
  add_precision(a_matrix);
  a_matrix->callback([&] {
    affine::AffinePermutation s(n, parse_csv(window_text));
    auto m = affine::to_matrix(s, precision);
    if (fmt == "json")
      emit(out, json(m));
    else
      out << m.str();
  });
  auto* a_compose = affine_cmd->add_subcommand("compose", "compose two windows");
  add_window(a_compose);
  a_compose->add_option("--with", with_text, "second window, applied first")->required();
  add_format(a_compose, text_json);
  a_compose->callback([&] {
    affine::AffinePermutation u(n, parse_csv(window_text));
    affine::AffinePermutation v(n, parse_csv(with_text));
    auto w = affine::compose(u, v);
    if (fmt == "json")
      emit(out, json{{"n", w.n()}, {"window", w.window()}});
    else
      out << w.str() << "\n";
  });

  auto* lattice_cmd = app.add_subcommand("lattice", "lattices in the affine Grassmannian");
  lattice_cmd->require_subcommand(1);
  auto* l_equal = lattice_cmd->add_subcommand("equal", "decide equality of two lattices");
  add_input(l_equal);
  add_format(l_equal, text_json);
  l_equal->callback([&] { lattice_equal_cmd(out, path, fmt); });
  auto* l_component = lattice_cmd->add_subcommand("component", "determinant valuation");
  add_input(l_component);
  add_format(l_component, text_json);
  l_component->callback([&] { lattice_component(out, path, fmt); });
  auto* l_flag = lattice_cmd->add_subcommand("flag", "validate an affine flag");
  add_input(l_flag);
  add_format(l_flag, text_json);
  l_flag->callback([&] { lattice_flag(out, path, fmt); });

  auto* lusztig_cmd = app.add_subcommand("lusztig", "equivariant lattice embeddings");
  lusztig_cmd->require_subcommand(1);
  auto* lz_embed = lusztig_cmd->add_subcommand("embed", "lattice of a nilpotent matrix");
  add_input(lz_embed);
  add_format(lz_embed, text_json);
  add_precision(lz_embed);
  lz_embed->callback([&] { lusztig_embed(out, path, fmt, precision); });
  auto* lz_rep = lusztig_cmd->add_subcommand("rep", "cyclic-quiver representation report");
  add_input(lz_rep);
  add_format(lz_rep, text_json);
  add_precision(lz_rep);
  lz_rep->callback([&] { lusztig_rep(out, path, fmt, precision); });
  auto* lz_equiv = lusztig_cmd->add_subcommand("equivariance", "randomized equivariance check");
  lz_equiv->add_option("--n", n, "matrix size")->default_val(3)->check(CLI::Range(1, 6));
  lz_equiv->add_option("--seed", seed, "random seed");
  lz_equiv->add_option("--trials", trials, "number of random pairs")->check(CLI::PositiveNumber);
  add_format(lz_equiv, text_json);
  add_precision(lz_equiv);
  lz_equiv->callback([&] { lusztig_equivariance(out, fmt, n, seed, trials, precision); });

  auto* f2_cmd = app.add_subcommand("f2", "reduced words modulo xy, yx");
  f2_cmd->require_subcommand(1);
  auto* f2_enc = f2_cmd->add_subcommand("encode", "binary encoding with copy tag");
  f2_enc->add_option("word", word, "caret notation, e.g. x^2*y^-3")->required();
  add_format(f2_enc, text_json);
  f2_enc->callback([&] { f2_encode(out, word, fmt); });
  auto* f2_cmp = f2_cmd->add_subcommand("compare", "word order");
  f2_cmp->add_option("word1", word, "first word")->required();
  f2_cmp->add_option("word2", word2, "second word")->required();
  add_format(f2_cmp, text_json);
  f2_cmp->callback([&] { f2_compare(out, word, word2, fmt); });

  auto* gp_cmd = app.add_subcommand("gp", "zig-zag modules and symmetric powers");
  gp_cmd->require_subcommand(1);
  auto* gp_str = gp_cmd->add_subcommand("string", "string module of a zig-zag");
  gp_str->add_option("zigzag", word, "steps over {x,y}, e.g. xxy")->required();
  add_format(gp_str, text_json);
  gp_str->callback([&] { gp_string(out, word, fmt); });
  auto* gp_sym_cmd = gp_cmd->add_subcommand("sym", "sl2 action on a symmetric power");
  gp_sym_cmd->add_option("--n", n, "symmetric power")->required()->check(CLI::NonNegativeNumber);
  add_format(gp_sym_cmd, text_json);
  gp_sym_cmd->callback([&] { gp_sym(out, n, fmt); });

  std::vector<const char*> argv;
  argv.push_back("surfalg");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace surfalg::cli
