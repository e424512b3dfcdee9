#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "grothkit/idcox.hpp"
#include "grothkit/shapes.hpp"
#include "grothkit/tableaux.hpp"
#include "grothkit/verify.hpp"

namespace {

using grothkit::EnumParams;
using grothkit::Family;
using grothkit::Flavor;
using grothkit::Poly;
using grothkit::ShapeRecord;
using grothkit::SignedPermutation;
using nlohmann::json;

constexpr const char* kSchema = "grothkit/1";

struct ElementArgs {
  std::string family_str = "C";
  int k = 0;
  int m = -1;  // alias for k in family A
  std::string shape_str, mu_str, window_str, word_str;
  int type = 0;
  int mu_type = 0;
  int n = 0;

  Family family() const {
    auto f = grothkit::parse_family(family_str);
    if (!f) throw CLI::ValidationError("--family must be one of A, B, C, D");
    return *f;
  }
};

void add_element_options(CLI::App* cmd, ElementArgs& args) {
  cmd->add_option("--family", args.family_str, "Lie family: A, B, C or D")->required();
  cmd->add_option("--k", args.k, "k of the (typed) k-strict shapes");
  cmd->add_option("--m", args.m, "Grassmannian descent position in family A");
  cmd->add_option("--shape", args.shape_str, "shape parts, e.g. 3,1");
  cmd->add_option("--mu", args.mu_str, "inner shape parts for a skew element");
  cmd->add_option("--type", args.type, "type of the shape (family D)");
  cmd->add_option("--mu-type", args.mu_type, "type of the inner shape (family D)");
  cmd->add_option("--window", args.window_str, "one-line window, e.g. 2,-3,1");
  cmd->add_option("--word", args.word_str, "reduced word, e.g. 2,B,1");
  cmd->add_option("--n", args.n, "window size (defaults to the smallest that fits)");
}

std::vector<int> parse_parts(const std::string& s) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    parts.push_back(std::stoi(s.substr(pos, comma == std::string::npos ? comma : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

int effective_k(const ElementArgs& args) { return args.m >= 0 ? args.m : args.k; }

std::optional<ShapeRecord> shape_of(const ElementArgs& args) {
  if (args.shape_str.empty() && args.mu_str.empty()) return std::nullopt;
  return ShapeRecord::make(args.family(), effective_k(args), parse_parts(args.shape_str),
                           args.type);
}

SignedPermutation resolve_element(const ElementArgs& args) {
  Family f = args.family();
  if (!args.window_str.empty()) return SignedPermutation::parse(f, args.window_str);
  if (!args.word_str.empty()) {
    grothkit::Word word = grothkit::Word::parse(args.word_str);
    int n = args.n;
    if (n == 0) {
      n = f == Family::D ? 2 : 1;
      for (grothkit::Gen a : word.letters) n = std::max(n, a + 1);
      if (f != Family::A && n < 1 + (f == Family::D ? 1 : 0)) n = 2;
    }
    return SignedPermutation::from_word(f, n, word);
  }
  auto lambda = shape_of(args);
  if (!lambda) throw CLI::ValidationError("give the element as --shape, --window or --word");
  ShapeRecord mu = ShapeRecord::make(f, effective_k(args), parse_parts(args.mu_str),
                                     args.mu_type);
  int n = args.n ? args.n : std::max(min_window(*lambda), min_window(mu));
  if (mu.empty() && args.mu_str.empty())
    return grothkit::grassmannian_element(*lambda, n);
  return grothkit::skew_element(*lambda, mu, n);
}

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [code, exp] : m.factors()) {
      grothkit::VarId v{static_cast<grothkit::VarClass>(code >> 28), code & 0x0fffffffu};
      exps[v.name()] = exp;
    }
    json term;
    if (c.fits_int64())
      term["coeff"] = c.to_int64();
    else
      term["coeff"] = c.str();
    term["exps"] = std::move(exps);
    terms.push_back(std::move(term));
  }
  return terms;
}

json shape_to_json(const ShapeRecord& s) {
  json j;
  j["k"] = s.k;
  if (s.family == Family::D) j["type"] = s.type;
  j["parts"] = s.parts;
  return j;
}

int run_compute(const ElementArgs& args, int nx, int ny, int nz,
                std::optional<long long> beta, bool mixed, const std::string& format) {
  SignedPermutation w = resolve_element(args);
  Poly p = mixed ? grothkit::mixed_stanley(w, nx, ny, nz)
                 : grothkit::grothendieck(w, nx, ny, nz);
  if (beta)
    p = p.substitute({{grothkit::VarId::beta(), Poly::constant(grothkit::BigInt(*beta))}});
  if (format == "json") {
    json out;
    out["schema"] = kSchema;
    out["command"] = "compute";
    out["family"] = grothkit::family_name(args.family());
    out["element"] = w.str();
    out["nx"] = nx;
    out["ny"] = ny;
    out["nz"] = nz;
    out["poly"] = poly_to_json(p);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int run_tableaux(const ElementArgs& args, const std::string& flavor_str, int nx, int ny,
                 int nz, const std::string& format) {
  auto flavor = grothkit::parse_flavor(flavor_str);
  if (!flavor) throw CLI::ValidationError("unknown --flavor " + flavor_str);
  auto lambda = shape_of(args);
  if (!lambda) throw CLI::ValidationError("tableaux needs --shape");
  ShapeRecord mu = ShapeRecord::make(args.family(), effective_k(args),
                                     parse_parts(args.mu_str), args.mu_type);
  EnumParams params;
  params.n = args.n ? args.n : min_window(*lambda);
  params.nx = nx;
  params.ny = ny;
  params.nz = nz;
  auto chains = grothkit::enumerate_tableaux(*flavor, *lambda, mu, params);
  Poly sum = grothkit::theorem_rhs(*flavor, *lambda, mu, params);
  if (format == "json") {
    json out;
    out["schema"] = kSchema;
    out["command"] = "tableaux";
    out["flavor"] = grothkit::flavor_name(*flavor);
    out["family"] = grothkit::family_name(args.family());
    out["lambda"] = shape_to_json(*lambda);
    out["mu"] = shape_to_json(mu);
    out["count"] = chains.size();
    out["sum"] = poly_to_json(sum);
    json list = json::array();
    for (const auto& chain : chains) {
      json jc;
      json lam = json::array(), nu = json::array();
      for (const auto& s : chain.lambda_chain) lam.push_back(shape_to_json(s));
      for (const auto& s : chain.nu_chain) nu.push_back(shape_to_json(s));
      jc["lambda_chain"] = std::move(lam);
      jc["nu_chain"] = std::move(nu);
      jc["weight"] = Poly::term(chain.weight(), grothkit::BigInt(1)).str();
      jc["size"] = chain.beta_size();
      json cells = json::array();
      for (const auto& [box, syms] : chain.filling().cells) {
        json cell;
        cell["row"] = box.row;
        cell["col"] = box.col;
        json entries = json::array();
        for (const auto& s : syms) entries.push_back(s.str());
        cell["entries"] = std::move(entries);
        cells.push_back(std::move(cell));
      }
      jc["filling"] = std::move(cells);
      list.push_back(std::move(jc));
    }
    out["tableaux"] = std::move(list);
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& chain : chains) {
      std::cout << chain.filling().render(*lambda, mu) << "\n";
      std::cout << "weight: " << Poly::term(chain.weight(), grothkit::BigInt(1)).str()
                << "  size: " << chain.beta_size() << "\n\n";
    }
    std::cout << "count: " << chains.size() << "\n";
    std::cout << "sum: " << sum.str() << "\n";
  }
  return 0;
}

int run_convert(const ElementArgs& args, const std::string& format) {
  Family f = args.family();
  if (!args.window_str.empty()) {
    SignedPermutation w = SignedPermutation::parse(f, args.window_str);
    ShapeRecord s = grothkit::shape_of_grassmannian(w, effective_k(args));
    if (format == "json") {
      json out;
      out["schema"] = kSchema;
      out["command"] = "convert";
      out["shape"] = shape_to_json(s);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << s.str() << "\n";
    }
    return 0;
  }
  SignedPermutation w = resolve_element(args);
  if (format == "json") {
    json out;
    out["schema"] = kSchema;
    out["command"] = "convert";
    out["window"] = w.str();
    out["word"] = w.canonical_word().str();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << w.str() << "\n";
  }
  return 0;
}

int run_verify(const std::string& family_str, const std::string& max_shape_str, int m_max,
               std::vector<int> ks, int n_max, int nz_max, bool structural) {
  auto family = grothkit::parse_family(family_str);
  if (!family) throw CLI::ValidationError("--family must be one of A, B, C, D");
  std::vector<int> max_shape = parse_parts(max_shape_str);
  if (ks.empty()) ks = *family == Family::D ? std::vector<int>{1, 2} : std::vector<int>{0, 1, 2};
  grothkit::SweepReport report =
      grothkit::sweep_theorems(*family, max_shape, ks, m_max, n_max, nz_max);
  for (const std::string& line : report.lines) std::cout << line << "\n";
  long long cases = report.result.cases;
  bool pass = report.result.pass;
  std::string first_failure = report.result.detail;
  if (structural) {
    std::vector<grothkit::CheckResult> extra;
    extra.push_back(grothkit::check_factorizations(*family, max_shape, ks, m_max, n_max));
    extra.push_back(grothkit::check_strip_equivalences(*family, max_shape, ks));
    if (*family != Family::A) {
      extra.push_back(grothkit::check_removable_boxes(*family, max_shape, ks));
      extra.push_back(grothkit::check_strip_counts(*family, max_shape, ks, n_max));
    }
    for (const auto& chk : extra) {
      std::cout << (chk.pass ? "ok " : "FAIL ") << chk.name << " checks=" << chk.cases << "\n";
      cases += chk.cases;
      if (!chk.pass && pass) {
        pass = false;
        first_failure = chk.detail;
      }
    }
  }
  if (!pass) {
    std::cout << "FAILED: " << first_failure << "\n";
    return 1;
  }
  std::cout << "verified " << cases << " checks: all passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grothkit: Grothendieck polynomials and set-valued tableaux for the classical"
               " Weyl groups"};
  app.require_subcommand(1);

  ElementArgs compute_args, tableaux_args, convert_args;
  int nx = 0, ny = 0, nz = 0;
  long long beta_value = 0;
  bool mixed = false;
  std::string format = "text";

  CLI::App* compute = app.add_subcommand("compute", "evaluate a Grothendieck polynomial");
  add_element_options(compute, compute_args);
  compute->add_option("--nx", nx, "number of x variables");
  compute->add_option("--ny", ny, "number of y variables");
  compute->add_option("--nz", nz, "number of z variables");
  CLI::Option* beta_opt =
      compute->add_option("--beta", beta_value, "substitute this integer for beta");
  compute->add_flag("--mixed", mixed, "use the stable mixed Stanley product");
  compute->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string flavor_str = "ktableau";
  int t_nx = 0, t_ny = 0, t_nz = 0;
  std::string t_format = "text";
  CLI::App* tableaux = app.add_subcommand("tableaux", "enumerate set-valued tableaux");
  add_element_options(tableaux, tableaux_args);
  tableaux->add_option("--flavor", flavor_str,
                       "bitableau, ktableau, tritableau, typed-ktableau, typed-tritableau,"
                       " barred, barred-typed, stable or mixed");
  tableaux->add_option("--nx", t_nx, "number of x variables");
  tableaux->add_option("--ny", t_ny, "number of y variables");
  tableaux->add_option("--nz", t_nz, "number of z variables");
  tableaux->add_option("--format", t_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string c_format = "text";
  CLI::App* convert = app.add_subcommand("convert", "convert between shapes, windows, words");
  add_element_options(convert, convert_args);
  convert->add_option("--format", c_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string v_family = "C", max_shape_str = "3,2,1";
  int v_m = 2, v_n = 3, v_nz = 2;
  std::vector<int> v_ks;
  bool v_structural = false;
  CLI::App* verify = app.add_subcommand("verify", "run the theorem-equality sweeps");
  verify->add_option("--family", v_family, "Lie family: A, B, C or D")->required();
  verify->add_option("--max-shape", max_shape_str, "largest shape, e.g. 3,2,1");
  verify->add_option("--m", v_m, "largest m (family A)");
  verify->add_option("--k", v_ks, "k values to sweep (B/C/D)");
  verify->add_option("--n", v_n, "largest window size");
  verify->add_option("--nz", v_nz, "largest z truncation");
  verify->add_flag("--structural", v_structural, "also run the factorization/strip sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed())
      return run_compute(compute_args, nx, ny, nz,
                         beta_opt->count() ? std::optional<long long>(beta_value)
                                           : std::nullopt,
                         mixed, format);
    if (tableaux->parsed())
      return run_tableaux(tableaux_args, flavor_str, t_nx, t_ny, t_nz, t_format);
    if (convert->parsed()) return run_convert(convert_args, c_format);
    if (verify->parsed())
      return run_verify(v_family, max_shape_str, v_m, v_ks, v_n, v_nz, v_structural);
  } catch (const grothkit::IncompatiblePairError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
