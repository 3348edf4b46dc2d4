#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffb/correspond.hpp"
#include "ffb/verify.hpp"
#include "ffb/xxz.hpp"
#include "json.hpp"

using json = nlohmann::json;
using ffb::cplx;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitConfig = 2;

// Flat key-value config: "key = value", '#' comments.  Keys mirror the flags.
std::map<std::string, std::string> parse_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

cplx parse_complex(const std::string& s) {
  // "re" or "re,im"
  auto comma = s.find(',');
  if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
  return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) out.push_back(parse_complex(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

json case_to_json(const ffb::VerifyCase& c) {
  return json{{"id", c.id},
              {"inputs", c.inputs},
              {"lhs", {c.lhs.real(), c.lhs.imag()}},
              {"rhs", {c.rhs.real(), c.rhs.imag()}},
              {"residual", c.residual},
              {"pass", c.pass}};
}

json report_to_json(const ffb::VerifyReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases) cases.push_back(case_to_json(c));
  json params(rep.params);
  return json{{"suite", rep.suite},
              {"params", params},
              {"cases", cases},
              {"summary",
               {{"total", rep.summary.total},
                {"passed", rep.summary.passed},
                {"failed", rep.summary.failed},
                {"max_residual", rep.summary.max_residual}}},
              {"notes", rep.notes}};
}

std::string report_to_csv(const ffb::VerifyReport& rep) {
  std::ostringstream os;
  os.precision(15);
  os << "id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,residual,pass\n";
  for (const auto& c : rep.cases) {
    std::string inputs = c.inputs;
    for (auto& ch : inputs) {
      if (ch == ',') ch = ';';
    }
    os << c.id << "," << inputs << "," << c.lhs.real() << "," << c.lhs.imag() << ","
       << c.rhs.real() << "," << c.rhs.imag() << "," << c.residual << "," << (c.pass ? 1 : 0)
       << "\n";
  }
  return os.str();
}

void emit(const ffb::VerifyReport& rep, const std::string& out_path, const std::string& format) {
  std::string payload =
      format == "csv" ? report_to_csv(rep) : report_to_json(rep).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    out << payload;
  }
}

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::map<std::string, std::string> file_kv;

  std::string value(const std::string& key, const std::string& fallback) const {
    auto it = file_kv.find(key);
    return it == file_kv.end() ? fallback : it->second;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-fermion / free-boson verification engine"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_option("--config", common.config_path, "flat key-value config file; flags override");
  app.add_option("--out", common.out_path, "write the report to this path");
  app.add_option("--format", common.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  // verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a named property suite");
  std::string suite;
  verify->add_option("suite", suite, "one of prop21|thm22|lemma23|integrals|restricted|barnes|commutators|correspondence")
      ->required();
  int max_degree = -1, charge_window = -1, cutoff = -1, grid = -1;
  double tol = -1.0;
  std::vector<std::string> nu_args, omega_args;
  verify->add_option("--max-degree", max_degree, "basis truncation degree");
  verify->add_option("--charge-window", charge_window, "|charge| <= window");
  verify->add_option("--nu", nu_args, "test value(s) of nu, repeatable");
  verify->add_option("--omega", omega_args, "test value(s) of omega as re[,im], repeatable");
  verify->add_option("--cutoff", cutoff, "restricted-sum degree cutoff");
  verify->add_option("--grid", grid, "points per quadrature circle");
  verify->add_option("--tol", tol, "primary tolerance");

  // xxz ---------------------------------------------------------------
  auto* xxz = app.add_subcommand("xxz", "solve the dressed-quantity integral equations");
  double zeta = -1.0, q = -1.0;
  int xxz_grid = -1;
  bool grid_doubling = false;
  xxz->add_option("--zeta", zeta, "anisotropy parameter, 0 < zeta < pi");
  xxz->add_option("--q", q, "Fermi boundary");
  xxz->add_option("--grid", xxz_grid, "quadrature size");
  xxz->add_flag("--grid-doubling", grid_doubling, "add grid-doubling stability columns");

  // asymptotics ---------------------------------------------------------
  auto* asym = app.add_subcommand("asymptotics", "r-point large-distance asymptotics");
  int kappa_cutoff = -1, degree_cutoff = -1;
  std::string xs_arg;
  asym->add_option("--cutoff", kappa_cutoff, "harmonic cutoff |kappa| <= cutoff");
  asym->add_option("--max-degree", degree_cutoff, "edge truncation degree");
  asym->add_option("--xs", xs_arg, "operator positions, ';'-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (!common.config_path.empty()) common.file_kv = parse_config(common.config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (verify->parsed()) {
      bool known = false;
      for (const auto& s : ffb::known_suites()) known = known || s == suite;
      if (!known) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitConfig;
      }
      ffb::VerifyOptions opt;
      opt.max_degree = max_degree > 0 ? max_degree : std::stoi(common.value("max-degree", "8"));
      opt.charge_window =
          charge_window >= 0 ? charge_window : std::stoi(common.value("charge-window", "2"));
      if (!nu_args.empty()) {
        for (const auto& s2 : nu_args) opt.nus.push_back(parse_complex(s2));
      } else if (common.file_kv.count("nu")) {
        opt.nus = parse_complex_list(common.file_kv.at("nu"));
      }
      if (!omega_args.empty()) {
        for (const auto& s2 : omega_args) opt.omegas.push_back(parse_complex(s2));
      } else if (common.file_kv.count("omega")) {
        opt.omegas = parse_complex_list(common.file_kv.at("omega"));
      }
      if (cutoff > 0) {
        opt.restricted_degree_r2 = cutoff;
        opt.restricted_degree_r3 = cutoff;
      } else {
        opt.restricted_degree_r2 = std::stoi(common.value("restricted-degree-r2", "20"));
        opt.restricted_degree_r3 = std::stoi(common.value("restricted-degree-r3", "16"));
      }
      if (grid > 0) opt.points_per_circle = grid;
      else opt.points_per_circle = std::stoi(common.value("grid", "512"));
      if (tol > 0) opt.tol = tol;
      else opt.tol = std::stod(common.value("tol", "1e-10"));

      ffb::VerifyReport rep = ffb::run_suite(suite, opt);
      emit(rep, common.out_path, common.format);
      return rep.all_pass() ? kExitPass : kExitNumerical;
    }

    if (xxz->parsed()) {
      ffb::XxzParams params;
      params.zeta = zeta > 0 ? zeta : std::stod(common.value("zeta", "1.2566370614359172"));
      params.q = q > 0 ? q : std::stod(common.value("q", "1.0"));
      params.grid_size = xxz_grid > 0 ? xxz_grid : std::stoi(common.value("grid", "64"));
      double xtol = std::stod(common.value("xxz-tol", "1e-8"));
      try {
        ffb::validate(params);
      } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
      }

      ffb::VerifyReport rep;
      rep.suite = "xxz";
      rep.params["zeta"] = std::to_string(params.zeta);
      rep.params["q"] = std::to_string(params.q);
      rep.params["grid"] = std::to_string(params.grid_size);
      ffb::XxzSolution sol(params);
      auto add = [&](const std::string& id, double lhs, double rhs, double tolv) {
        ffb::VerifyCase c;
        c.id = id;
        c.lhs = lhs;
        c.rhs = rhs;
        c.residual = std::abs(lhs - rhs);
        c.pass = c.residual <= tolv;
        rep.cases.push_back(c);
      };
      const double Q = params.q;
      add("Z(q)", sol.Z(Q), sol.Z(Q), 1.0);
      add("Z(-q)", sol.Z(-Q), sol.Z(Q), 1e-12);
      add("phi(q,q)", sol.phi(Q, Q), sol.phi(Q, Q), 1.0);
      add("p_F", sol.p_F(), sol.p_F(), 1.0);
      add("alpha_plus", sol.alpha_plus(), 1.0, 1e-10);
      add("alpha_minus", sol.alpha_minus(), 1.0, 1e-10);
      for (int o = 0; o <= 1; ++o) {
        for (int k = -1; k <= 1; ++k) {
          auto rn = ffb::relative_nu(sol, o, k, xtol);
          add("nu-identity[o=" + std::to_string(o) + ",k=" + std::to_string(k) + "]@q",
              rn.identity_residual_q, 0.0, xtol);
          add("nu-identity[o=" + std::to_string(o) + ",k=" + std::to_string(k) + "]@-q",
              rn.identity_residual_minus_q, 0.0, xtol);
          auto lut = ffb::luttinger_check(sol, o, k, xtol);
          add("reflection[o=" + std::to_string(o) + ",k=" + std::to_string(k) + "]",
              lut.reflection_residual, 0.0, xtol);
        }
      }
      {
        auto lut = ffb::luttinger_check(sol, 1, 1, xtol);
        add("vK", lut.vK, lut.vK, 1.0);
        add("v_over_K", lut.v_over_K, lut.v_over_K, 1.0);
      }
      if (grid_doubling) {
        ffb::XxzParams p2 = params;
        p2.grid_size *= 2;
        ffb::XxzSolution sol2(p2);
        add("stability:Z(q)", sol.Z(Q), sol2.Z(Q), xtol);
        add("stability:phi(q,q)", sol.phi(Q, Q), sol2.phi(Q, Q), xtol);
        add("stability:p_F", sol.p_F(), sol2.p_F(), xtol);
        add("stability:alpha_plus", sol.alpha_plus(), sol2.alpha_plus(), xtol);
      }
      ffb::finalize(rep);
      emit(rep, common.out_path, common.format);
      return rep.all_pass() ? kExitPass : kExitNumerical;
    }

    if (asym->parsed()) {
      // Operator table from the config file: opN.o, opN.nu_plus, opN.nu_minus,
      // opN.amp.<kappa>; positions from xs.
      std::vector<ffb::OperatorSpec> ops;
      try {
        for (int n = 1;; ++n) {
          std::string prefix = "op" + std::to_string(n) + ".";
          if (!common.file_kv.count(prefix + "o")) break;
          ffb::OperatorSpec op;
          op.o_r = std::stoi(common.file_kv.at(prefix + "o"));
          op.nu_plus = std::stod(common.value(prefix + "nu_plus", "0"));
          op.nu_minus = std::stod(common.value(prefix + "nu_minus", "0"));
          bool have_amp = false;
          for (const auto& [k, v] : common.file_kv) {
            if (k.rfind(prefix + "amp.", 0) == 0) {
              int kap = std::stoi(k.substr((prefix + "amp.").size()));
              op.amplitudes[kap] = parse_complex(v);
              have_amp = true;
            }
          }
          if (!have_amp) {
            for (int k = -2; k <= 2; ++k) op.amplitudes[k] = 1.0;
          }
          ops.push_back(op);
        }
        if (ops.empty()) {
          // Built-in two-point default.
          ops.push_back(ffb::default_operator(1, 0.3, -0.3, 2));
          ops.push_back(ffb::default_operator(-1, -0.3, 0.3, 2));
        }
      } catch (const std::exception& e) {
        std::cerr << "malformed operator table: " << e.what() << "\n";
        return kExitConfig;
      }
      std::vector<double> xs;
      if (!xs_arg.empty()) xs = parse_double_list(xs_arg);
      else if (common.file_kv.count("xs")) xs = parse_double_list(common.file_kv.at("xs"));
      else xs = {100.0, 400.0};
      if (xs.size() != ops.size()) {
        std::cerr << "config error: xs and operator table must have equal length\n";
        return kExitConfig;
      }
      ffb::MacroParams macro;
      macro.L = std::stod(common.value("L", "1e4"));
      macro.p_F = std::stod(common.value("p_F", "0.77"));
      macro.alpha_plus = std::stod(common.value("alpha_plus", "1.0"));
      macro.alpha_minus = std::stod(common.value("alpha_minus", "1.0"));
      int kc = kappa_cutoff > 0 ? kappa_cutoff : std::stoi(common.value("cutoff", "2"));
      int dc = degree_cutoff > 0 ? degree_cutoff : std::stoi(common.value("max-degree", "12"));

      auto res = ffb::rpoint_asymptotics(ops, xs, macro, kc, dc);
      ffb::VerifyReport rep;
      rep.suite = "asymptotics";
      rep.params["r"] = std::to_string(ops.size());
      rep.params["cutoff"] = std::to_string(kc);
      if (!res.selection_ok) rep.notes.push_back(res.warning);
      for (const auto& row : res.rows) {
        ffb::VerifyCase c;
        std::ostringstream id;
        id << "kappa=(";
        for (size_t i = 0; i < row.kappas.size(); ++i) id << (i ? "," : "") << row.kappas[i];
        id << ")";
        c.id = id.str();
        std::ostringstream in;
        in.precision(12);
        in << "phase=" << row.phase.real() << "+" << row.phase.imag() << "i"
           << ";Lpow=" << row.L_power << ";edge=" << row.edge_factor.real() << "+"
           << row.edge_factor.imag() << "i";
        c.inputs = in.str();
        c.lhs = row.total;
        c.rhs = row.total;
        c.residual = 0.0;
        c.pass = true;
        rep.cases.push_back(c);
      }
      ffb::VerifyCase sum;
      sum.id = "sum";
      sum.lhs = res.sum;
      sum.rhs = res.sum;
      sum.pass = true;
      rep.cases.push_back(sum);
      ffb::finalize(rep);
      emit(rep, common.out_path, common.format);
      return kExitPass;
    }
  } catch (const ffb::identity_violation& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
