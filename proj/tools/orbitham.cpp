// orbitham: exact construction of trigonometric Olshanetsky-Perelomov
// Hamiltonians in fundamental-trigonometric-invariant coordinates, their
// polynomial eigenfunctions and spectra, via the Weyl-orbit method.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "orbitham/cache.hpp"
#include "orbitham/json_io.hpp"
#include "orbitham/verify.hpp"

using namespace orbitham;
using nlohmann::json;

namespace {

struct GlobalOptions {
  int threads = 0;
  std::string cache_dir;
  bool json_out = false;
  std::size_t mem_cap_mb = 2048;
};

std::unique_ptr<CacheStore> make_cache(const GlobalOptions& g) {
  std::string dir = g.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("ORBITHAM_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return nullptr;
  return std::make_unique<CacheStore>(dir);
}

std::unique_ptr<OrbitAlgebra> make_algebra(const std::string& system, const GlobalOptions& g,
                                           CacheStore* cache) {
  AlgebraOptions opts;
  opts.threads = g.threads;
  opts.mem_cap_bytes = g.mem_cap_mb * (std::size_t(1) << 20);
  auto alg = std::make_unique<OrbitAlgebra>(RootSystem::build(system), opts);
  if (cache) alg->attach_cache(cache);
  return alg;
}

void emit(const GlobalOptions& g, const json& machine, const std::string& human) {
  if (g.json_out)
    std::cout << dump_stable(machine) << "\n";
  else
    std::cout << human;
}

std::string spectrum_text(const std::vector<SpectrumRow>& rows, std::optional<Rational> nu) {
  std::ostringstream out;
  out << "eps\tn\t(n,n)\tht\tlabel\n";
  for (const auto& r : rows) {
    std::string eps;
    if (nu) {
      auto v = r.eps.eval(*nu);
      eps = v ? rational_to_string(*v) : "pole";
    } else {
      eps = r.eps.str();
    }
    out << eps << "\t" << (r.fmin ? std::to_string(*r.fmin) : "-") << "\t"
        << rational_to_string(r.norm) << "\t" << rational_to_string(r.height) << "\t"
        << format_weight(r.n) << "\n";
  }
  return out.str();
}

json spectrum_json(const std::vector<SpectrumRow>& rows, std::optional<Rational> nu) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row{{"n", weight_to_json(r.n)},
             {"eps", nucoeff_to_json(r.eps)},
             {"norm", rational_to_string(r.norm)},
             {"ht", rational_to_string(r.height)}};
    if (r.fmin) row["fmin_grading"] = *r.fmin;
    if (nu) {
      auto v = r.eps.eval(*nu);
      row["eps_at_nu"] = v ? rational_to_string(*v) : "pole";
    }
    arr.push_back(row);
  }
  return arr;
}

json report_to_json(const ValidationReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json ent{{"entry", e.entry},
             {"max_rel_err", e.max_rel_err},
             {"mean_rel_err", e.mean_rel_err},
             {"ok", e.ok}};
    if (e.worst_sample >= 0) {
      ent["worst_sample"] = e.worst_sample;
      ent["worst_point"] = json(e.worst_point);
    }
    entries.push_back(ent);
  }
  return json{{"seed", rep.seed},
              {"samples", rep.samples},
              {"tol", rep.tol},
              {"ok", rep.ok},
              {"entries", entries}};
}

int print_checks(const std::vector<verify::Check>& checks, const GlobalOptions& g,
                 const json& extra = json()) {
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    if (g.json_out) {
      arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    } else {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " -- " << c.detail << "\n";
    }
  }
  if (g.json_out) {
    json out{{"checks", arr}, {"pass", all}};
    if (!extra.is_null()) out["reports"] = extra;
    std::cout << dump_stable(out) << "\n";
  }
  return all ? 0 : 1;
}

Rational parse_nu(const std::string& s) { return rational_from_string(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebraic form, spectra and eigenfunctions of trigonometric "
               "Olshanetsky-Perelomov models via the Weyl-orbit method"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after a subcommand too

  GlobalOptions g;
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_option("--cache-dir", g.cache_dir,
                 "persistent table cache directory (default: $ORBITHAM_CACHE_DIR)");
  app.add_flag("--json", g.json_out, "machine-readable JSON output");
  app.add_option("--mem-cap", g.mem_cap_mb, "orbit memory cap in MiB");

  std::string system, weight_arg, j_arg;
  int a_idx = 1;

  auto* roots = app.add_subcommand("roots", "root-system data (Cartan, Gram, Weyl vector)");
  roots->add_option("system", system)->required();

  auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a dominant weight");
  orbit->add_option("system", system)->required();
  orbit->add_option("weight", weight_arg, "dominant weight, e.g. w8 or [0,0,0,0,0,0,0,1]")
      ->required();
  std::string dump_path;
  orbit->add_option("--dump", dump_path, "write elements (one per line) to a file, - for stdout");

  auto* dec = app.add_subcommand("decompose", "orbit-function product M_j * M_a");
  dec->add_option("system", system)->required();
  dec->add_option("j", j_arg, "dominant weight")->required();
  dec->add_option("a", a_idx, "fundamental index")->required();

  auto* m2t = app.add_subcommand("m2tau", "orbit function M_n as a tau polynomial");
  m2t->add_option("system", system)->required();
  m2t->add_option("n", weight_arg, "dominant weight")->required();

  auto* coeffs = app.add_subcommand("coeffs", "operator coefficients A_ab, b_a, c_a");
  coeffs->add_option("system", system)->required();
  std::string only;
  bool slow = false;
  coeffs->add_option("--only", only, "A|b|c (default: all)");
  coeffs->add_flag("--slow", slow, "include the heaviest tier (E8: A_88 and c_8)");

  auto* spect = app.add_subcommand("spectrum", "low-lying spectrum table");
  spect->add_option("system", system)->required();
  long ht_bound = 135;
  std::string nu_str;
  spect->add_option("--ht-bound", ht_bound, "Weyl-height bound")->required();
  spect->add_option("--nu", nu_str, "evaluate eigenvalues at rational nu (p/q)");
  bool csv = false;
  spect->add_flag("--csv", csv, "CSV rows instead of the aligned table");

  auto* eig = app.add_subcommand("eigen", "polynomial eigenfunction of one state");
  eig->add_option("system", system)->required();
  eig->add_option("n", weight_arg, "dominant weight label")->required();
  std::string eig_nu;
  bool symbolic = false;
  eig->add_option("--nu", eig_nu, "numeric rational coupling");
  eig->add_flag("--symbolic", symbolic, "symbolic coupling (default)");

  auto* ver = app.add_subcommand("verify", "reproduction and consistency checks");
  ver->add_option("system", system)->required();
  bool paper_tables = false, numeric = false, flags = false;
  int samples = 10;
  double tol = 1e-8;
  ver->add_flag("--paper-tables", paper_tables, "compare against the published tables");
  ver->add_flag("--numeric", numeric, "floating-point cross-validation");
  ver->add_flag("--flags", flags, "flag (invariant subspace) checks");
  ver->add_flag("--slow", slow, "include the heaviest tier");
  ver->add_option("--samples", samples, "numeric samples");
  ver->add_option("--tol", tol, "numeric relative tolerance");

  auto* cache_cmd = app.add_subcommand("cache", "persistent table store");
  std::string cache_op;
  cache_cmd->add_option("op", cache_op, "stat | clear")->required();

  try {
    app.parse(argc, argv);

    auto cache = make_cache(g);

    if (*roots) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      json out = root_system_to_json(alg.rs());
      if (g.json_out) {
        std::cout << dump_stable(out) << "\n";
      } else {
        std::cout << alg.rs().name() << ", rank " << alg.rs().rank() << "\n";
        std::cout << "Weyl order " << alg.rs().weyl_order().get_str() << "\n";
        std::cout << "gram diagonal:";
        for (int a = 0; a < alg.rs().rank(); ++a)
          std::cout << " " << rational_to_string(alg.rs().gram()[a][a]);
        std::cout << "\nweight heights:";
        for (int a = 1; a <= alg.rs().rank(); ++a)
          std::cout << " " << rational_to_string(alg.rs().coweyl_dot_weight(a));
        std::cout << "\nhighest root coords:";
        for (int x : alg.rs().highest_root_coords()) std::cout << " " << x;
        std::cout << "\n";
      }
    } else if (*orbit) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      Weight w = parse_weight(weight_arg, alg.rs().rank());
      OrbitOptions oo;
      oo.mem_cap_bytes = g.mem_cap_mb * (std::size_t(1) << 20);
      WeylOrbit orb = enumerate_orbit(w, alg.rs(), oo);
      if (!dump_path.empty()) {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (dump_path != "-") {
          file.open(dump_path);
          os = &file;
        }
        for (std::size_t i = 0; i < orb.size(); ++i) {
          auto el = orb.element_span(i);
          for (int k = 0; k < orb.rank(); ++k) *os << (k ? " " : "") << el[k];
          *os << "\n";
        }
      }
      emit(g,
           json{{"system", alg.rs().name()},
                {"dominant", weight_to_json(w)},
                {"size", std::to_string(orb.size())}},
           "orbit of " + format_weight(w) + ": " + std::to_string(orb.size()) + " elements\n");
    } else if (*dec) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      Weight j = parse_weight(j_arg, alg.rs().rank());
      MExpansion d = alg.decompose_product(j, a_idx);
      std::ostringstream human;
      human << "M" << format_weight(j) << " * M_w" << a_idx << " =";
      for (const auto& [k, mu] : d.terms) human << " + " << mu.get_str() << " M" << format_weight(k);
      human << "\n";
      emit(g, mexpansion_to_json(d), human.str());
    } else if (*m2t) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      Weight n = parse_weight(weight_arg, alg.rs().rank());
      TauPoly p = alg.m_to_tau(n);
      emit(g, taupoly_to_json(p), "M" + format_weight(n) + " = " + tau_poly_str(p) + "\n");
    } else if (*coeffs) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      const int n = alg.rs().rank();
      bool is_e8 = alg.rs().name() == "E8";
      json out;
      std::ostringstream human;
      if (only.empty() || only == "b") {
        json arr = json::array();
        for (int a = 1; a <= n; ++a) {
          TauPoly b = coeff_b(a, alg);
          arr.push_back({{"a", a}, {"poly", taupoly_to_json(b)}});
          human << "b_" << a << " = " << tau_poly_str(b) << "\n";
        }
        out["b"] = arr;
      }
      if (only.empty() || only == "c") {
        json arr = json::array();
        for (int a = 1; a <= n; ++a) {
          if (is_e8 && a == 8 && !slow) continue;
          TauPoly c = coeff_c(a, alg);
          if (cache) cache->store_coeff(alg.rs(), "coeffC", std::to_string(a), c);
          arr.push_back({{"a", a}, {"poly", taupoly_to_json(c)}});
          human << "c_" << a << " = " << tau_poly_str(c) << "\n";
        }
        out["c"] = arr;
      }
      if (only.empty() || only == "A") {
        json arr = json::array();
        for (int a = 1; a <= n; ++a)
          for (int b = a; b <= n; ++b) {
            if (is_e8 && a == 8 && b == 8 && !slow) continue;
            TauPoly A = coeff_A(a, b, alg);
            if (cache)
              cache->store_coeff(alg.rs(), "coeffA", std::to_string(a) + "," + std::to_string(b), A);
            arr.push_back({{"a", a}, {"b", b}, {"poly", taupoly_to_json(A)}});
            human << "A_" << a << "," << b << " = " << tau_poly_str(A) << "\n";
          }
        out["A"] = arr;
      }
      emit(g, out, human.str());
    } else if (*spect) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      std::optional<Rational> nu;
      if (!nu_str.empty()) nu = parse_nu(nu_str);
      auto rows = enumerate_spectrum(alg.rs(), Rational(ht_bound));
      if (csv) {
        std::cout << "label,eps_const,eps_nu,norm,ht,fmin\n";
        for (const auto& r : rows) {
          auto lin = r.eps.as_linear();
          std::cout << '"' << format_weight(r.n) << '"' << ","
                    << rational_to_string(lin->first) << "," << rational_to_string(lin->second)
                    << "," << rational_to_string(r.norm) << "," << rational_to_string(r.height)
                    << "," << (r.fmin ? std::to_string(*r.fmin) : "") << "\n";
        }
      } else {
        emit(g, spectrum_json(rows, nu), spectrum_text(rows, nu));
      }
    } else if (*eig) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      Weight n = parse_weight(weight_arg, alg.rs().rank());
      std::optional<Rational> nu;
      if (!eig_nu.empty()) nu = parse_nu(eig_nu);
      Eigenstate st = eigenfunction(n, alg, nu);
      json exp_m = json::array();
      for (const auto& [m, c] : st.expansion_M)
        exp_m.push_back({{"m", weight_to_json(m)}, {"coeff", nucoeff_to_json(c)}});
      json out{{"label", weight_to_json(st.label)},
               {"eigenvalue", nucoeff_to_json(st.eigenvalue)},
               {"expansion_M", exp_m},
               {"expansion_tau", nutaupoly_to_json(st.expansion_tau)}};
      std::ostringstream human;
      human << "phi" << format_weight(n) << ", eps = " << st.eigenvalue.str() << "\n"
            << "phi = " << tau_poly_str(st.expansion_tau) << "\n";
      emit(g, out, human.str());
    } else if (*ver) {
      auto alg_ptr = make_algebra(system, g, cache.get());
      OrbitAlgebra& alg = *alg_ptr;
      std::vector<verify::Check> checks;
      json reports = json::array();
      bool any = paper_tables || numeric || flags;
      if (alg.rs().name() == "E8") {
        if (paper_tables || !any) {
          checks.push_back(verify::orbit_sizes(alg));
          checks.push_back(verify::product_fixture(alg));
          checks.push_back(verify::coeff_A12_fixture(alg));
          checks.push_back(verify::coeff_b_fixtures(alg));
          checks.push_back(verify::coeff_c_fixtures(alg, 1, slow ? 8 : 7));
          checks.push_back(verify::reflection_table_fixtures(alg));
          checks.push_back(verify::normalization_identities(alg, slow));
          checks.push_back(verify::spectrum_closed_form(alg));
          checks.push_back(verify::degeneracy_scan(alg));
          checks.push_back(verify::flag_angles());
        }
        if (flags) {
          AssembleOptions ao;
          ao.slow_tier = true;  // the strict degree-2 check needs every entry
          AlgebraicOperator op = assemble_operator(alg, ao);
          checks.push_back(verify::flag_preservation(op));
          checks.push_back(verify::spectrum_operator_diagonal(alg, op));
          checks.push_back(verify::eigenfunction_residuals(alg, op, 97));
        }
        if (numeric) {
          checks.push_back(verify::numeric_e8_entries(alg, samples, tol));
          if (g.json_out) {
            SampleOptions so;
            so.samples = samples;
            so.tol = tol;
            CoefficientSelection sel;
            sel.A_pairs = {{1, 1}, {1, 2}};
            sel.c_indices = {1, 2};
            reports.push_back(report_to_json(validate_coefficients(alg, sel, so)));
            reports.push_back(report_to_json(validate_reality(alg, so)));
          }
        }
      } else if (alg.rs().name() == "E6") {
        checks.push_back(verify::e6_footnote(alg, true));
      } else {
        if (numeric || !any) {
          checks.push_back(verify::numeric_rank2(alg.rs().name(), samples, tol));
          if (g.json_out) {
            SampleOptions so;
            so.samples = samples;
            so.tol = tol;
            reports.push_back(report_to_json(validate_coefficients(alg, {}, so)));
          }
        }
      }
      return print_checks(checks, g, reports);
    } else if (*cache_cmd) {
      if (!cache) fail(Errc::bad_argument, "no cache directory configured");
      if (cache_op == "stat") {
        auto s = cache->stats();
        emit(g,
             json{{"systems", s.systems}, {"records", s.records}, {"bytes", s.bytes}},
             "cache at " + cache->root().string() + ": " + std::to_string(s.systems) +
                 " systems, " + std::to_string(s.records) + " records, " +
                 std::to_string(s.bytes) + " bytes\n");
      } else if (cache_op == "clear") {
        cache->clear();
        emit(g, json{{"cleared", true}}, "cache cleared\n");
      } else {
        fail(Errc::bad_argument, "cache op must be stat or clear");
      }
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    json err{{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
    std::cerr << dump_stable(err) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cerr << dump_stable(err) << "\n";
    return 2;
  }
}
