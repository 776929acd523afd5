#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plurival/approximation.hpp"
#include "plurival/errors.hpp"
#include "plurival/integral_oracle.hpp"
#include "plurival/integrability.hpp"
#include "plurival/json_io.hpp"
#include "plurival/tian.hpp"
#include "plurival/verify.hpp"

namespace {

using namespace plurival;

std::string g_output = "plain";  // plain | json | csv
std::string g_out_path;

void emit(const std::string& text) {
  if (g_out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g_out_path, std::ios::binary);
  if (!f) throw_validation("cannot open output path: " + g_out_path);
  f << text;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Inline JSON text, or "@path" to read it from a file.
Json load_json(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw_validation("cannot open input path: " + text.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    return Json::parse(ss.str());
  }
  return Json::parse(text);
}

// Scalar result in the selected rendering; exact first, decimal alongside.
void emit_scalar(const std::string& key, const Rational& value) {
  if (g_output == "json") {
    Json j{{key, value.str()}, {key + "_decimal", value.to_double()}};
    emit(j.dump() + "\n");
  } else if (g_output == "csv") {
    emit(key + ",decimal\n" + value.str() + "," + fmt_double(value.to_double()) + "\n");
  } else {
    emit(value.str() + "\n");
  }
}

struct WeightArgs {
  std::string pieces;
  std::string scale = "1";
  std::string json_text;

  void attach(CLI::App* cmd, const std::string& prefix, const std::string& what) {
    cmd->add_option("--" + prefix + "-pieces", pieces,
                    what + " pieces, semicolon-separated exponents, e.g. \"2,0;0,3\"");
    cmd->add_option("--" + prefix + "-scale", scale, what + " scale p/q (default 1)");
    cmd->add_option("--" + prefix + "-json", json_text, what + " as JSON {\"pieces\":..,\"scale\":..}");
  }

  bool provided() const { return !pieces.empty() || !json_text.empty(); }

  ToricWeight build(int expect_dim = 0) const {
    ToricWeight w = [&] {
      if (!json_text.empty()) return weight_from_json(load_json(json_text));
      if (pieces.empty()) throw_validation("missing weight pieces");
      return ToricWeight(parse_piece_list(pieces), Rational::parse(scale));
    }();
    if (expect_dim && w.dim() != expect_dim) throw_validation("weight dimension mismatch");
    return w;
  }
};

struct DiagonalArgs {
  std::string a;
  std::string scale = "1";
  bool normalize = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "diagonal weight entries a_j, e.g. \"2,2\" (needs sum 1/a_j = 1)");
    cmd->add_option("--a-scale", scale, "diagonal weight scale p/q (default 1)");
    cmd->add_flag("--normalize-a", normalize,
                  "rescale the entries onto the constraint sum 1/a_j = 1 first");
  }

  bool provided() const { return !a.empty(); }

  DiagonalZhouWeight build() const {
    RationalVec entries = parse_rational_list(a);
    if (normalize) entries = DiagonalZhouWeight::normalize_direction(entries);
    return DiagonalZhouWeight(entries, Rational::parse(scale));
  }
};

// Weight argument that may be either diagonal (--a) or a general toric weight.
ToricWeight build_weight(const DiagonalArgs& diag, const WeightArgs& toric) {
  if (diag.provided() && toric.provided())
    throw_validation("give either --a or --weight-pieces/--weight-json, not both");
  if (diag.provided()) return diag.build().to_toric();
  if (toric.provided()) return toric.build();
  throw_validation("missing weight: use --a or --weight-pieces/--weight-json");
}

std::vector<Rational> parse_grid(const std::string& spec) {
  // start:end[:kind[:count]]; geometric doubles from start up to end, linear
  // uses count evenly spaced nodes.
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  parts.push_back(cur);
  if (parts.size() < 2) throw_validation("grid spec needs start:end[:kind[:count]]");
  Rational lo = Rational::parse(parts[0]);
  Rational hi = Rational::parse(parts[1]);
  if (!(lo < hi)) throw_validation("grid needs start < end");
  std::string kind = parts.size() > 2 ? parts[2] : "geometric";
  std::vector<Rational> grid;
  if (kind == "geometric") {
    if (lo.sign() <= 0) throw_validation("geometric grid needs a positive start");
    for (Rational t = lo; t < hi; t *= 2) grid.push_back(t);
    grid.push_back(hi);
  } else if (kind == "linear") {
    int count = parts.size() > 3 ? std::stoi(parts[3]) : 6;
    if (count < 2) throw_validation("grid needs at least 2 nodes");
    Rational step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) grid.push_back(lo + step * i);
  } else {
    throw_validation("unknown grid kind: " + kind);
  }
  std::vector<Rational> out;
  for (const Rational& t : grid)
    if (out.empty() || out.back() < t) out.push_back(t);
  return out;
}

std::vector<int> parse_int_range(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return {std::stoi(spec)};
  int lo = std::stoi(spec.substr(0, colon));
  int hi = std::stoi(spec.substr(colon + 1));
  if (lo < 1 || hi < lo) throw_validation("bad integer range: " + spec);
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"plurival: exact singularity invariants of toric plurisubharmonic weights"};
  app.require_subcommand(1);
  app.fallthrough();  // --output/--out may follow the subcommand
  app.add_option("--output", g_output, "output rendering: plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", g_out_path, "write the result to this path instead of stdout");

  int workers = 1;
  if (const char* env = std::getenv("PLURIVAL_THREADS")) workers = std::max(1, std::atoi(env));

  // ---- lct ----------------------------------------------------------------
  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold of a toric weight");
  DiagonalArgs lct_diag;
  WeightArgs lct_weight;
  lct_diag.attach(lct_cmd);
  lct_weight.attach(lct_cmd, "weight", "weight");
  lct_cmd->callback([&] { emit_scalar("lct", lct(build_weight(lct_diag, lct_weight))); });

  // ---- jump ---------------------------------------------------------------
  auto* jump_cmd = app.add_subcommand("jump", "jumping number of |z^g|^2 e^{-2 phi0} against a weight");
  std::string jump_g;
  DiagonalArgs jump_diag;
  WeightArgs jump_weight, jump_phi0;
  std::string jump_f0;
  jump_cmd->add_option("--g", jump_g, "numerator exponent, e.g. \"1,0\"");
  jump_cmd->add_option("--f0", jump_f0, "alias of --g (reference numerator)");
  jump_diag.attach(jump_cmd);
  jump_weight.attach(jump_cmd, "weight", "weight");
  jump_phi0.attach(jump_cmd, "phi0", "twist");
  jump_cmd->callback([&] {
    ToricWeight w = build_weight(jump_diag, jump_weight);
    std::string gtext = !jump_g.empty() ? jump_g : jump_f0;
    Exponent g = gtext.empty() ? Exponent::zero(w.dim()) : Exponent(parse_rational_list(gtext));
    JumpingQuery q = jump_phi0.provided() ? JumpingQuery(g, jump_phi0.build(w.dim()), w)
                                          : JumpingQuery(g, w);
    emit_scalar("jumping_number", jumping_number(q));
  });

  // ---- type ---------------------------------------------------------------
  auto* type_cmd = app.add_subcommand("type", "relative type sigma(psi, s*Phi_a)");
  WeightArgs type_psi;
  DiagonalArgs type_diag;
  type_psi.attach(type_cmd, "psi", "psi");
  type_diag.attach(type_cmd);
  type_cmd->callback([&] {
    emit_scalar("relative_type", relative_type(type_psi.build(), type_diag.build()));
  });

  // ---- valuation ----------------------------------------------------------
  auto* val_cmd = app.add_subcommand("valuation", "Zhou valuation of a monomial");
  std::string val_g;
  DiagonalArgs val_diag;
  val_cmd->add_option("--g", val_g, "monomial exponent, e.g. \"2,3\"")->required();
  val_diag.attach(val_cmd);
  val_cmd->callback([&] {
    emit_scalar("valuation",
                zhou_valuation(Exponent(parse_rational_list(val_g)), val_diag.build()));
  });

  // ---- mideal -------------------------------------------------------------
  auto* mid_cmd = app.add_subcommand("mideal", "multiplier ideal I(t * weight)");
  DiagonalArgs mid_diag;
  WeightArgs mid_weight;
  std::string mid_t = "1";
  mid_diag.attach(mid_cmd);
  mid_weight.attach(mid_cmd, "weight", "weight");
  mid_cmd->add_option("--t", mid_t, "multiple t >= 0 (rational)");
  mid_cmd->callback([&] {
    MonomialIdeal ideal = multiplier_ideal(build_weight(mid_diag, mid_weight), Rational::parse(mid_t));
    if (g_output == "csv") {
      std::ostringstream os;
      for (int j = 0; j < ideal.dim(); ++j) os << (j ? "," : "") << "alpha_" << (j + 1);
      os << "\n";
      for (const Exponent& g : ideal.generators()) {
        for (int j = 0; j < ideal.dim(); ++j) os << (j ? "," : "") << g[j].str();
        os << "\n";
      }
      emit(os.str());
    } else {
      emit(ideal_to_json(ideal).dump() + "\n");
    }
  });

  // ---- tian ---------------------------------------------------------------
  auto* tian_cmd = app.add_subcommand("tian", "Tian function Tn(t) as exact piecewise-linear data");
  std::string tian_f, tian_range = "-1:4", tian_g0;
  WeightArgs tian_v, tian_phi0, tian_weight;
  DiagonalArgs tian_diag;
  tian_cmd->add_option("--f", tian_f, "monomial twist exponent (psi includes log|z^f|)");
  tian_cmd->add_option("--g0", tian_g0, "reference numerator exponent (default 0)");
  tian_v.attach(tian_cmd, "v", "toric twist");
  tian_phi0.attach(tian_cmd, "phi0", "reference twist");
  tian_weight.attach(tian_cmd, "weight", "weight");
  tian_diag.attach(tian_cmd);
  tian_cmd->add_option("--range", tian_range, "t range lo:hi (default -1:4)");
  tian_cmd->callback([&] {
    ToricWeight w = build_weight(tian_diag, tian_weight);
    int n = w.dim();
    std::optional<ToricWeight> psi;
    if (!tian_f.empty()) psi = ToricWeight::monomial(Exponent(parse_rational_list(tian_f)));
    if (tian_v.provided()) {
      ToricWeight v = tian_v.build(n);
      psi = psi ? weight_sum(*psi, v) : v;
    }
    if (!psi) throw_validation("tian needs --f and/or --v for the twist direction");
    Exponent g0 = tian_g0.empty() ? Exponent::zero(n) : Exponent(parse_rational_list(tian_g0));
    ToricWeight phi0 = tian_phi0.provided() ? tian_phi0.build(n) : ToricWeight::zero(n);
    auto colon = tian_range.find(':');
    if (colon == std::string::npos) throw_validation("range needs lo:hi");
    Rational lo = Rational::parse(tian_range.substr(0, colon));
    Rational hi = Rational::parse(tian_range.substr(colon + 1));
    TianFunction f = tian_function(TianQuery(g0, phi0, *psi, w), lo, hi);
    if (g_output == "json") {
      Json nodes = Json::array(), values = Json::array(), slopes = Json::array();
      for (const Rational& x : f.nodes()) nodes.push_back(x.str());
      for (const Rational& x : f.values()) values.push_back(x.str());
      for (const Rational& x : f.slopes()) slopes.push_back(x.str());
      emit(Json{{"nodes", nodes}, {"values", values}, {"slopes", slopes}}.dump() + "\n");
    } else {
      std::ostringstream os;
      os << "breakpoint,value,slope\n";
      for (std::size_t i = 0; i < f.nodes().size(); ++i) {
        os << f.nodes()[i].str() << "," << f.values()[i].str() << ","
           << (i < f.slopes().size() ? f.slopes()[i].str() : "") << "\n";
      }
      emit(os.str());
    }
  });

  // ---- integral -----------------------------------------------------------
  auto* int_cmd = app.add_subcommand("integral", "sublevel-set mass/moment ratios");
  std::string int_mode = "ratio", int_grid = "1:32:geometric", int_f0;
  long int_samples = 0;
  std::uint64_t int_seed = 0;
  bool seed_given = false;
  WeightArgs int_phi0, int_psi;
  DiagonalArgs int_diag;
  int_cmd->add_option("--mode", int_mode, "ratio|mass")->check(CLI::IsMember({"ratio", "mass"}));
  int_cmd->add_option("--t-grid", int_grid, "grid spec start:end[:kind[:count]]");
  int_cmd->add_option("--samples", int_samples, "Monte Carlo sample count (forces the MC path)");
  int_cmd->add_option("--seed", int_seed, "RNG seed (mandatory with --samples)")
      ->each([&](const std::string&) { seed_given = true; });
  int_cmd->add_option("--f0", int_f0, "reference numerator exponent (default 0)");
  int_phi0.attach(int_cmd, "phi0", "reference twist");
  int_psi.attach(int_cmd, "psi", "psi");
  int_diag.attach(int_cmd);
  int_cmd->callback([&] {
    DiagonalZhouWeight phi = int_diag.build();
    int n = phi.dim();
    Exponent f0 = int_f0.empty() ? Exponent::zero(n) : Exponent(parse_rational_list(int_f0));
    ToricWeight phi0 = int_phi0.provided() ? int_phi0.build(n) : ToricWeight::zero(n);
    ReferencePair ref(f0, phi0);
    std::vector<Rational> grid = parse_grid(int_grid);
    if (int_samples > 0 && !seed_given)
      throw_validation("--seed is mandatory for stochastic jobs");
    if (int_mode == "mass") {
      MassAsymptoticsReport rep = mass_asymptotics(ref, phi, grid);
      std::ostringstream os;
      os << "t,mass,neg_log_mass_over_2t,e2t_mass\n";
      for (std::size_t i = 0; i < rep.t_grid.size(); ++i) {
        double td = rep.t_grid[i].to_double();
        double logmass = std::log(rep.constant.to_double()) - 2 * rep.rate.to_double() * td;
        os << rep.t_grid[i].str() << "," << fmt_double(std::exp(logmass)) << ","
           << fmt_double(rep.neg_log_mass_over_2t[i]) << "," << fmt_double(rep.e2t_mass[i]) << "\n";
      }
      os << "# rate," << rep.rate.str() << ",constant," << rep.constant.str() << ",class,"
         << rep.classification << "\n";
      emit(os.str());
      return;
    }
    ToricWeight psi = int_psi.provided() ? int_psi.build(n) : ToricWeight::zero(n);
    if (psi.is_zero_weight()) throw_validation("integral ratio mode needs --psi-pieces");
    std::ostringstream os;
    os << "t,mass,moment,ratio,stderr\n";
    for (const Rational& t : grid) {
      SublevelIntegral s = int_samples > 0
                               ? sublevel_monte_carlo(ref, phi, psi, t, int_samples, int_seed, workers)
                               : sublevel_closed_form(ref, phi, psi, t);
      os << t.str() << "," << fmt_double(s.mass) << "," << fmt_double(s.moment) << ","
         << fmt_double(s.ratio) << "," << fmt_double(s.stderr_ratio) << "\n";
    }
    emit(os.str());
  });

  // ---- approx -------------------------------------------------------------
  auto* approx_cmd = app.add_subcommand("approx", "multiplier-ideal approximants of a diagonal weight");
  DiagonalArgs approx_diag;
  std::string approx_m = "1:16", approx_grid = "0.1:0.9:5";
  approx_diag.attach(approx_cmd);
  approx_cmd->add_option("--m", approx_m, "level range lo:hi (default 1:16)");
  approx_cmd->add_option("--grid", approx_grid, "per-coordinate modulus grid lo:hi:count");
  approx_cmd->callback([&] {
    DiagonalZhouWeight phi = approx_diag.build();
    std::vector<int> ms = parse_int_range(approx_m);
    // modulus grid: lo:hi:count per coordinate, full product grid.
    double glo = 0.1, ghi = 0.9;
    int gc = 5;
    {
      std::vector<std::string> parts;
      std::string cur;
      for (char c : approx_grid)
        if (c == ':') {
          parts.push_back(cur);
          cur.clear();
        } else
          cur += c;
      parts.push_back(cur);
      if (parts.size() != 3) throw_validation("grid spec needs lo:hi:count");
      glo = std::stod(parts[0]);
      ghi = std::stod(parts[1]);
      gc = std::stoi(parts[2]);
    }
    std::vector<std::vector<double>> zgrid;
    std::vector<double> z(static_cast<std::size_t>(phi.dim()), glo);
    std::function<void(int)> walk = [&](int j) {
      if (j == phi.dim()) {
        zgrid.push_back(z);
        return;
      }
      for (int i = 0; i < gc; ++i) {
        z[static_cast<std::size_t>(j)] = glo + (ghi - glo) * i / (gc - 1);
        walk(j + 1);
      }
    };
    walk(0);
    ConvergenceReport rep = pointwise_convergence(phi, zgrid, ms);
    std::ostringstream os;
    os << "m,sigma_m,sup_gap,bound_ok\n";
    for (std::size_t i = 0; i < rep.m_list.size(); ++i)
      os << rep.m_list[i] << "," << rep.sigma_m[i].str() << "," << fmt_double(rep.sup_gap[i]) << ","
         << (rep.sigma_lower_ok[i] && rep.sigma_upper_ok[i] ? 1 : 0) << "\n";
    emit(os.str());
  });

  // ---- green --------------------------------------------------------------
  auto* green_cmd = app.add_subcommand("green", "polydisc Green-function approximant at a point");
  std::string green_z;
  int green_m = 1;
  green_cmd->add_option("--z", green_z, "moduli |z_j|, e.g. \"0.5,0.25\"")->required();
  green_cmd->add_option("--m", green_m, "level m (the value is m-independent)");
  green_cmd->callback([&] {
    std::vector<double> z;
    std::string cur;
    for (char c : green_z + ",") {
      if (c == ',') {
        z.push_back(std::stod(cur));
        cur.clear();
      } else
        cur += c;
    }
    double v = green_approximant(green_m, z);
    if (g_output == "json")
      emit(Json{{"green", v}}.dump() + "\n");
    else
      emit(fmt_double(v) + "\n");
  });

  // ---- thmA ---------------------------------------------------------------
  auto* thma_cmd = app.add_subcommand("thmA", "jumping number vs supremum of Zhou numbers");
  std::string thma_gens;
  std::string thma_ideal_json;
  DiagonalArgs thma_diag;
  WeightArgs thma_weight;
  int thma_res = 100;
  thma_cmd->add_option("--gens", thma_gens, "ideal generators, e.g. \"2,0;0,3\"");
  thma_cmd->add_option("--ideal-json", thma_ideal_json, "ideal as JSON {\"dim\",\"generators\"}");
  thma_diag.attach(thma_cmd);
  thma_weight.attach(thma_cmd, "weight", "weight");
  thma_cmd->add_option("--resolution", thma_res, "direction-simplex grid resolution (default 100)");
  thma_cmd->callback([&] {
    MonomialIdeal ideal = !thma_ideal_json.empty()
                              ? ideal_from_json(load_json(thma_ideal_json))
                              : MonomialIdeal(parse_piece_list(thma_gens));
    ToricWeight w = build_weight(thma_diag, thma_weight);
    ThmAReport rep = thmA_check(ideal, w, thma_res);
    Json j{{"lhs", rep.lhs.str()},
           {"diagonal", rep.diagonal},
           {"grid_sup", rep.grid_sup.str()},
           {"grid_ok", rep.grid_ok},
           {"gap_flag", rep.gap_flag}};
    if (rep.diagonal) {
      Json a = Json::array();
      for (const Rational& x : rep.candidate_a) a.push_back(x.str());
      j["candidate_a"] = a;
      j["sigma_at_candidate"] = rep.sigma_at_candidate.str();
      j["product"] = rep.product.str();
      j["exact_equality"] = rep.exact_equality;
    }
    emit(j.dump() + "\n");
    if (!rep.grid_ok || (rep.diagonal && !rep.exact_equality))
      throw Error(ErrorKind::verification, "thmA check failed");
  });

  // ---- include ------------------------------------------------------------
  auto* inc_cmd = app.add_subcommand("include", "relative-type order vs multiplier-ideal inclusions");
  WeightArgs inc_u, inc_v;
  std::string inc_tmax = "20";
  int inc_samples = 10;
  inc_u.attach(inc_cmd, "u", "u");
  inc_v.attach(inc_cmd, "v", "v");
  inc_cmd->add_option("--t-max", inc_tmax, "largest t on the grid");
  inc_cmd->add_option("--samples", inc_samples, "number of grid nodes");
  inc_cmd->callback([&] {
    InclusionVerdict v =
        inclusion_equivalence(inc_u.build(), inc_v.build(), Rational::parse(inc_tmax), inc_samples);
    Json j{{"sigma_u_le_v", v.sigma_u_le_v}, {"sigma_v_le_u", v.sigma_v_le_u},
           {"ideals_u_le_v", v.ideals_u_le_v}, {"ideals_v_le_u", v.ideals_v_le_u},
           {"agree", v.agree}};
    auto witness = [](const std::optional<RationalVec>& w) {
      Json a = Json::array();
      if (w)
        for (const Rational& x : *w) a.push_back(x.str());
      return a;
    };
    j["witness_uv"] = witness(v.witness_uv);
    j["witness_vu"] = witness(v.witness_vu);
    emit(j.dump() + "\n");
    if (!v.agree) throw Error(ErrorKind::verification, "inclusion equivalence disagreement");
  });

  // ---- divides ------------------------------------------------------------
  auto* div_cmd = app.add_subcommand("divides", "monomial division, componentwise and valuative");
  std::string div_f, div_g;
  div_cmd->add_option("--f", div_f, "dividend exponent")->required();
  div_cmd->add_option("--g", div_g, "divisor exponent")->required();
  div_cmd->callback([&] {
    DivisionVerdict v = divides(Exponent(parse_rational_list(div_f)),
                                Exponent(parse_rational_list(div_g)));
    Json j{{"componentwise", v.componentwise}, {"valuative", v.valuative}};
    Json a = Json::array();
    if (v.witness_a)
      for (const Rational& x : *v.witness_a) a.push_back(x.str());
    j["witness_a"] = a;
    emit(j.dump() + "\n");
  });

  // ---- verify -------------------------------------------------------------
  auto* ver_cmd = app.add_subcommand("verify", "run the exact verification suites");
  std::string ver_suite = "all";
  std::uint64_t ver_seed = 20260809;
  ver_cmd->add_option("--suite", ver_suite, "suite name or 'all'");
  ver_cmd->add_option("--seed", ver_seed, "fixture seed (default 20260809)");
  ver_cmd->callback([&] {
    std::vector<SuiteResult> results;
    if (ver_suite == "all") {
      results = run_all_suites(ver_seed, workers);
    } else {
      results.push_back(run_verify_suite(ver_suite, ver_seed, workers));
    }
    std::ostringstream os;
    bool all_ok = true;
    for (const SuiteResult& r : results) {
      Json j{{"suite", r.name},     {"anchor", r.anchor},   {"passed", r.passed},
             {"checks", r.checks},  {"failures", r.failures},
             {"elapsed_ms", r.elapsed_ms}, {"limit_ms", r.limit_ms}};
      if (!r.detail.empty()) j["detail"] = r.detail;
      os << j.dump() << "\n";
      all_ok = all_ok && r.passed;
    }
    emit(os.str());
    if (!all_ok) throw Error(ErrorKind::verification, "verification suite failure");
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::capacity: return 2;
      case ErrorKind::verification: return 3;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
