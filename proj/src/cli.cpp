#include "apolar/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "apolar/errors.hpp"
#include "apolar/io.hpp"
#include "apolar/ledger.hpp"
#include "apolar/numeric.hpp"
#include "apolar/polarity.hpp"
#include "apolar/powersum.hpp"

namespace apolar::cli {

namespace {

struct Globals {
  std::string out_path;
  bool quiet = false;
};

// Collects machine output and writes it to --out or the given stream.
class Sink {
 public:
  Sink(const Globals& g, std::ostream& out) : globals_(g), out_(out) {}

  std::ostringstream& machine() { return machine_; }
  /// Human-readable framing; dropped by --quiet.
  void frame(const std::string& line) {
    if (!globals_.quiet) machine_ << line << "\n";
  }

  void flush() {
    if (globals_.out_path.empty()) {
      out_ << machine_.str();
      return;
    }
    std::ofstream f(globals_.out_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + globals_.out_path + "'");
    f << machine_.str();
  }

 private:
  const Globals& globals_;
  std::ostream& out_;
  std::ostringstream machine_;
};

Form load_form(const std::string& path) { return io::parse_form(io::read_file(path)); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string basis_line(const MonomialBasis& basis) {
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? " " : "") + basis[i].to_string();
  return s;
}

std::size_t nvars_from_s2(std::size_t dim) {
  for (std::size_t v = 1; v <= 64; ++v) {
    if (monomial_count(v, 2) == dim) return v;
    if (monomial_count(v, 2) > dim) break;
  }
  throw InputError("matrix size " + std::to_string(dim) + " is not dim S^2 for any number of variables");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polarity, apolarity and power-sum computations for homogeneous forms", "apolar"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--out", globals.out_path, "Write machine output to this file instead of stdout");
  app.add_flag("--quiet", globals.quiet, "Suppress human-readable framing");

  // Each subcommand stores its action here; it runs after parsing succeeds.
  std::function<int(Sink&)> action;

  // polar
  std::string form_path, point_text, g_path, f_path, matrix_path, rep_path, points_path;
  unsigned iterate = 1;
  unsigned k = 1;
  bool with_basis = false;
  std::size_t nvars_opt = 0;
  auto* polar_cmd = app.add_subcommand("polar", "First polar P_a(F), optionally iterated");
  polar_cmd->add_option("--form", form_path, "Form file")->required();
  polar_cmd->add_option("--point", point_text, "Point, e.g. 1,-2/3,0")->required();
  polar_cmd->add_option("--iterate", iterate, "Apply the polar this many times")->check(CLI::PositiveNumber);
  polar_cmd->callback([&] {
    action = [&](Sink& sink) {
      Form f = load_form(form_path);
      const auto a = io::parse_point(point_text, argument_role(f.space()));
      for (unsigned i = 0; i < iterate; ++i) f = polar(f, a);
      sink.machine() << io::serialize(f) << "\n";
      return kAffirmative;
    };
  });

  auto* pair_cmd = app.add_subcommand("pair", "Apolarity pairing <G, F>");
  pair_cmd->add_option("--g", g_path, "Form G (dual space)")->required();
  pair_cmd->add_option("--f", f_path, "Form F")->required();
  pair_cmd->callback([&] {
    action = [&](Sink& sink) {
      sink.machine() << to_string(pairing(load_form(g_path), load_form(f_path))) << "\n";
      return kAffirmative;
    };
  });

  auto* cat_cmd = app.add_subcommand("cat", "Catalecticant (apolarity map) matrix");
  cat_cmd->add_option("--form", form_path, "Form file")->required();
  cat_cmd->add_option("--k", k, "Polar degree")->required();
  cat_cmd->add_flag("--basis", with_basis, "Also list the row and column monomial bases");
  cat_cmd->callback([&] {
    action = [&](Sink& sink) {
      const auto cat = apolarity_matrix(load_form(form_path), k);
      sink.machine() << cat.entries.to_text();
      if (with_basis) {
        sink.machine() << "rows: " << basis_line(cat.row_basis) << "\n";
        sink.machine() << "cols: " << basis_line(cat.col_basis) << "\n";
      }
      return kAffirmative;
    };
  });

  auto* nondeg_cmd = app.add_subcommand("nondegenerate", "Is the middle catalecticant invertible");
  nondeg_cmd->add_option("--form", form_path, "Form file")->required();
  nondeg_cmd->callback([&] {
    action = [&](Sink& sink) {
      const bool nd = is_nondegenerate(load_form(form_path));
      sink.machine() << "nondegenerate=" << bool_text(nd) << "\n";
      return nd ? kAffirmative : kNegative;
    };
  });

  auto* dual_cmd = app.add_subcommand("dual", "Dual form, or the Hankel defect of the inverse catalecticant");
  dual_cmd->add_option("--form", form_path, "Form file")->required();
  dual_cmd->callback([&] {
    action = [&](Sink& sink) {
      const auto result = dual_form(load_form(form_path));
      if (const auto* f = std::get_if<Form>(&result)) {
        sink.machine() << io::serialize(*f) << "\n";
        return kAffirmative;
      }
      sink.machine() << std::get<HankelDefect>(result).report();
      return kNegative;
    };
  });

  auto* biq_cmd = app.add_subcommand("biquadric", "Quartic restituted from a symmetric S^2 x S^2 matrix");
  biq_cmd->add_option("--matrix", matrix_path, "Matrix text file")->required();
  biq_cmd->add_option("--nvars", nvars_opt, "Number of variables (inferred from the size by default)");
  biq_cmd->callback([&] {
    action = [&](Sink& sink) {
      const auto m = RationalMatrix::parse_text(io::read_file(matrix_path));
      const std::size_t v = nvars_opt ? nvars_opt : nvars_from_s2(m.rows());
      const auto result = quartic_from_biquadric(m, v);
      if (const auto* f = std::get_if<Form>(&result)) {
        sink.machine() << io::serialize(*f) << "\n";
        return kAffirmative;
      }
      sink.machine() << std::get<SymmetryDefect>(result).report();
      return kNegative;
    };
  });

  auto* vsp = app.add_subcommand("vsp", "Power-sum representations");
  vsp->require_subcommand(1);

  double tol = 1e-9;
  auto* verify_cmd = vsp->add_subcommand("verify", "Check sum alpha_i H_i^m = F");
  verify_cmd->add_option("--form", form_path, "Form file")->required();
  verify_cmd->add_option("--rep", rep_path, "Representation file")->required();
  verify_cmd->add_option("--tol", tol, "Squared-residual tolerance for floating-point representations");
  verify_cmd->callback([&] {
    action = [&](Sink& sink) {
      const Form f = load_form(form_path);
      const auto text = io::read_file(rep_path);
      if (io::is_numeric_representation(text)) {
        const double r = numeric::residual(f, io::parse_decomposition(text));
        sink.machine() << "residual=" << nlohmann::json(r).dump() << "\n";
        return r * r <= tol ? kAffirmative : kNegative;
      }
      const bool ok = verify_representation(f, io::parse_representation(text, coefficient_role(f.space())));
      sink.machine() << "verified=" << bool_text(ok) << "\n";
      return ok ? kAffirmative : kNegative;
    };
  });

  auto* solve_cmd = vsp->add_subcommand("solve", "Solve for the coefficients alpha_i");
  solve_cmd->add_option("--form", form_path, "Form file")->required();
  solve_cmd->add_option("--points", points_path, "Points file")->required();
  solve_cmd->callback([&] {
    action = [&](Sink& sink) {
      const Form f = load_form(form_path);
      const auto pts = io::parse_points(io::read_file(points_path), coefficient_role(f.space()));
      const auto sol = solve_alphas(f, pts);
      static const char* names[] = {"unique", "underdetermined", "inconsistent"};
      sink.machine() << "status=" << names[static_cast<int>(sol.status)] << "\n";
      sink.machine() << "alphas=";
      if (sol.exists()) {
        for (std::size_t i = 0; i < sol.alphas.size(); ++i) sink.machine() << (i ? "," : "") << to_string(sol.alphas[i]);
      } else {
        sink.machine() << "none";
      }
      sink.machine() << "\n";
      if (sol.status == linalg::SolveStatus::Unique) {
        sink.machine() << "vanishing=";
        for (std::size_t i = 0; i < sol.vanishing.size(); ++i) sink.machine() << (i ? "," : "") << sol.vanishing[i];
        sink.machine() << "\n";
      } else if (sol.status == linalg::SolveStatus::Underdetermined) {
        sink.machine() << "free_directions=" << sol.free_directions.size() << "\n";
      }
      return sol.exists() ? kAffirmative : kNegative;
    };
  });

  auto* mukai_cmd = vsp->add_subcommand("mukai", "Three-route membership certificate for a quartic");
  mukai_cmd->add_option("--form", form_path, "Form file (or plant bundle)")->required();
  mukai_cmd->add_option("--points", points_path, "Points file (or plant bundle)")->required();
  mukai_cmd->callback([&] {
    action = [&](Sink& sink) {
      const Form f = load_form(form_path);
      const auto pts = io::parse_points(io::read_file(points_path), coefficient_role(f.space()));
      const auto cert = mukai_conditions(f, pts);
      sink.machine() << cert.report(!globals.quiet);
      return cert.agree && cert.cond_54 ? kAffirmative : kNegative;
    };
  });

  std::uint64_t seed = 0;
  std::size_t plant_nvars = 3;
  long spread = 3;
  auto* plant_cmd = vsp->add_subcommand("plant", "Random tight instance F = sum alpha_i H_i^4");
  plant_cmd->add_option("--seed", seed, "Random seed")->required();
  plant_cmd->add_option("--nvars", plant_nvars, "Number of variables")->required();
  plant_cmd->add_option("--spread", spread, "Coordinate bound")->check(CLI::PositiveNumber);
  plant_cmd->callback([&] {
    action = [&](Sink& sink) {
      const auto inst = planted_instance(seed, plant_nvars, spread);
      nlohmann::ordered_json j;
      j["form"] = nlohmann::ordered_json::parse(io::serialize(inst.form));
      auto pts = nlohmann::ordered_json::array();
      std::vector<RepresentationEntry> entries;
      for (std::size_t i = 0; i < inst.points.size(); ++i) {
        pts.push_back(io::format_point(inst.points[i]));
        entries.push_back({inst.points[i], inst.alphas[i]});
      }
      j["points"] = std::move(pts);
      j["rep"] = nlohmann::ordered_json::parse(io::serialize(Representation(4, std::move(entries))));
      sink.machine() << j.dump() << "\n";
      return kAffirmative;
    };
  });

  std::size_t n_terms = 1;
  numeric::DecomposeConfig config;
  bool seed_given = false;
  auto* decompose_cmd = vsp->add_subcommand("decompose", "Floating-point Waring decomposition search");
  decompose_cmd->add_option("--form", form_path, "Form file")->required();
  decompose_cmd->add_option("--n", n_terms, "Number of terms")->required()->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--restarts", config.restarts, "Random restarts");
  decompose_cmd->add_option("--max-iter", config.max_iter, "Iterations per restart");
  decompose_cmd->add_option("--tol", config.tol, "Squared-residual acceptance threshold");
  decompose_cmd->add_option("--threads", config.threads, "Worker threads (0: all cores)");
  decompose_cmd->add_option("--seed", config.seed, "Random seed")->required();
  decompose_cmd->callback([&] {
    seed_given = true;
    action = [&](Sink& sink) {
      const auto result = numeric::waring_decompose_numeric(load_form(form_path), n_terms, config);
      nlohmann::ordered_json j;
      j["status"] = result.status == numeric::DecomposeStatus::Converged ? "converged" : "no-convergence";
      auto sols = nlohmann::ordered_json::array();
      for (const auto& d : result.solutions) {
        nlohmann::ordered_json s;
        s["residual"] = d.residual;
        s["subseed"] = d.subseed;
        s["rep"] = nlohmann::ordered_json::parse(io::serialize(d));
        sols.push_back(std::move(s));
      }
      j["solutions"] = std::move(sols);
      sink.machine() << j.dump() << "\n";
      return result.status == numeric::DecomposeStatus::Converged ? kAffirmative : kNoConvergence;
    };
  });

  long d = 0;
  long max_d = 0;
  auto* ledger_cmd = app.add_subcommand("ledger", "Closed-form invariants and their consistency identities");
  auto* d_opt = ledger_cmd->add_option("--d", d, "Curve degree (>= 5)");
  auto* max_opt = ledger_cmd->add_option("--max-d", max_d, "Run the identity sweep for 5 <= d <= max-d");
  ledger_cmd->callback([&] {
    if (d_opt->count() == 0 && max_opt->count() == 0) throw CLI::ValidationError("ledger", "need --d or --max-d");
    action = [&](Sink& sink) {
      bool ok = true;
      if (d_opt->count()) {
        const auto report = ledger::invariants(d);
        ok = report.all_pass();
        if (globals.out_path.empty()) {
          sink.machine() << report.table();
        } else {
          out << report.table();
          sink.machine() << report.json() << "\n";
        }
      }
      if (max_opt->count()) {
        const auto results = ledger::consistency_check(max_d);
        std::size_t failures = 0;
        for (const auto& r : results) {
          if (!r.pass) {
            ++failures;
            err << "identity failed: " << r.name << " lhs=" << r.lhs << " rhs=" << r.rhs << "\n";
          }
        }
        std::ostream& target = globals.out_path.empty() ? static_cast<std::ostream&>(sink.machine()) : out;
        target << "consistency d=5.." << max_d << " identities=" << results.size() << " failures=" << failures << "\n";
        ok = ok && failures == 0;
      }
      return ok ? kAffirmative : kNegative;
    };
  });

  std::vector<std::string> argv_store{"apolar"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "apolar: " << e.what() << "\n";
    return kInputError;
  }
  (void)seed_given;

  Sink sink(globals, out);
  try {
    const int code = action(sink);
    sink.flush();
    return code;
  } catch (const InputError& e) {
    err << "apolar: " << e.what() << "\n";
    return kInputError;
  } catch (const DegenerateError& e) {
    sink.machine() << "degenerate: " << e.what() << "\n";
    sink.flush();
    return kNegative;
  } catch (const ConvergenceError& e) {
    err << "apolar: " << e.what() << "\n";
    return kNoConvergence;
  }
}

}  // namespace apolar::cli
