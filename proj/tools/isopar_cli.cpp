// Command-line front end: catalog queries per symmetric pair (`space`),
// Clifford family classification (`fkm`), the projective-space census
// (`census`), and the golden verification suite (`check --tables`).
//
// Exit codes: 0 success, 1 classification-invariant failure, 2 argument
// errors.
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "isopar/checks.hpp"

namespace {

using namespace isopar;

// Labels that denote a single space carry their parameters implicitly.
std::optional<std::pair<int, int>> fixed_params(const std::string& label) {
  struct Fixed {
    const char* label;
    int p;
    int nu;
  };
  static const Fixed fixed[] = {{"E II", 6, 2},   {"E III", 6, 6}, {"E V", 7, 2},
                                {"E VI", 7, 1},   {"E VII", 7, 7}, {"E VIII", 8, 1},
                                {"E IX", 8, 8},   {"F I", 4, 4},   {"F II", 4, 1},
                                {"G", 2, 2}};
  for (const auto& f : fixed)
    if (label == f.label) return std::make_pair(f.p, f.nu);
  return std::nullopt;
}

std::string perm_cycles(const NodePerm& sigma) {
  std::string s;
  std::vector<char> seen(sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i] || sigma[i] == static_cast<int>(i)) continue;
    s += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += ' ';
      s += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(sigma[j]);
    }
    s += ')';
  }
  return s.empty() ? "identity" : s;
}

int run_space(const std::string& label, int p, int nu, bool verify, long long bound) {
  SymmetricPairRecord rec;
  try {
    if (auto f = fixed_params(label)) {
      if (p == 0) p = f->first;
      if (nu == 0) nu = f->second;
    }
    ISOPAR_REQUIRE(p > 0 && nu > 0, "label " + label + " needs --p and --nu");
    rec = catalog_record(label, p, nu);
  } catch (const std::exception& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  }
  try {
    auto d = dims(rec);
    std::cout << "symmetric pair " << rec.label << " (p=" << rec.p << ", nu=" << rec.nu << ")\n";
    std::cout << "  space: " << rec.space_desc << "\n";
    std::cout << "  g = " << rec.g_desc << ", k = " << rec.k_desc
              << (rec.hermitian ? "  [Hermitian]" : "") << "\n";
    std::cout << "  highest root mu = " << vec_str(rec.mu) << ", lowest admissible root lambda = "
              << vec_str(rec.lambda) << "\n";
    std::cout << "  dim g = " << d.dim_g << ", dim k = " << d.dim_k << ", dim p = " << d.dim_p
              << ", n = " << d.n << ", rank = " << d.rank_ss << ", codim = " << d.codim << "\n";
    if (rec.census_excluded) {
      if (d.rank_ss == 1)
        std::cout << "  note: rank-one projection (a single distance sphere); not a census source\n";
      else
        std::cout << "  note: alternative presentation of a quadric already counted in the "
                     "orthogonal families; not a census source\n";
    }
    auto cc = count_classes(rec);
    std::cout << "admissible set J (dual-basis coordinates):\n";
    for (const auto& orbit : cc.orbits)
      for (const auto& t : orbit) std::cout << "  " << vec_str(t) << "\n";
    auto autos = diagram_automorphisms(build_extended_vogan(rec));
    std::cout << "diagram symmetries (node cycles, 0 = affine node): group order "
              << cc.group.size() << "\n";
    for (const auto& sigma : autos) std::cout << "  " << perm_cycles(sigma) << "\n";
    std::cout << "orbits:\n";
    for (const auto& orbit : cc.orbits) {
      std::cout << "  {";
      for (std::size_t i = 0; i < orbit.size(); ++i)
        std::cout << (i ? ", " : " ") << vec_str(orbit[i]);
      std::cout << " }  " << (homogeneity(rec, orbit.front()) ? "homogeneous" : "inhomogeneous")
                << "\n";
    }
    std::cout << "N = " << cc.n << "\n";
    if (verify) {
      ISOPAR_REQUIRE(admissible_points(rec) == admissible_points_oracle(rec, bound),
                     "bounded search disagrees with the closed-form admissible set");
      std::cout << "verified: bounded search (bound " << bound
                << ") reproduces the admissible set\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  }
}

int run_fkm(long long m, long long k, long long kplus, long long kminus, bool verify,
            long long bound) {
  FkmFamily f;
  try {
    const bool split_args = kplus >= 0 || kminus >= 0;
    if (split_args) {
      ISOPAR_REQUIRE(kplus >= 0 && kminus >= 0, "--kplus and --kminus must be given together");
      ISOPAR_REQUIRE(k < 0, "give either --k or the --kplus/--kminus split, not both");
      f = clifford_family(m, kplus, kminus);
    } else {
      ISOPAR_REQUIRE(k >= 1, "--k is required unless --kplus/--kminus are given");
      f = clifford_family(m, k);
    }
  } catch (const std::exception& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  }
  try {
    std::cout << "Clifford family m=" << f.m;
    if (f.split)
      std::cout << ", k=(" << f.kplus << "," << f.kminus << ")";
    else
      std::cout << ", k=" << f.k;
    std::cout << "  (delta = " << f.delta << ", module algebra " << clifford_algebra_name(f.m)
              << ")\n";
    std::cout << "  sphere S^" << (2 * f.n + 1) << ", n = " << f.n << ", multiplicities (m1, m2) = ("
              << f.m1 << ", " << f.m2 << ")\n";
    std::cout << "  symmetry algebra " << f.symmetry_desc() << ", torus rank " << f.torus_rank()
              << "\n";
    if (!f.m1_le_m2) {
      std::cout << "note: m1 > m2 -- outside the projectable scope; no classification is attempted\n";
      return 0;
    }
    auto cc = count_classes_fkm(f);
    std::cout << "admissible set J (orthonormal dual coordinates, spin block first):\n";
    for (const auto& orbit : cc.orbits)
      for (const auto& t : orbit) std::cout << "  " << vec_str(t) << "\n";
    std::cout << "symmetry group order " << cc.group.size() << "; orbits:\n";
    for (const auto& orbit : cc.orbits) {
      std::cout << "  {";
      for (std::size_t i = 0; i < orbit.size(); ++i)
        std::cout << (i ? ", " : " ") << vec_str(orbit[i]);
      std::cout << " }\n";
    }
    std::cout << "N = " << cc.n << " (orbit count; closed form " << closed_form_N(f) << ")\n";
    if (verify) {
      ISOPAR_REQUIRE(admissible_points_fkm(f, bound) == reference_admissible_points_fkm(f),
                     "bounded search disagrees with the tabulated admissible set");
      std::cout << "verified: bounded search (bound " << bound
                << ") reproduces the tabulated admissible set\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  }
}

int run_census(long long n, const std::string& format) {
  try {
    auto records = enumerate_foliations(n);
    if (format == "json" || format == "csv") {
      std::cout << export_foliations(records, format);
      return 0;
    }
    std::cout << "census of CP^" << n << ": " << records.size() << " records, all_homogeneous = "
              << (all_homogeneous(n) ? "true" : "false") << "\n";
    for (const auto& fr : records) {
      std::cout << "  [" << fr.source << "] " << fr.label << "  codim=" << fr.codim
                << "  N=" << fr.N_within_source << "  homogeneous=" << tristate_str(fr.homogeneous);
      if (!fr.representative.empty()) std::cout << "  rep=" << vec_str(fr.representative);
      if (fr.overlap_candidate) std::cout << "  [overlap candidate]";
      std::cout << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  }
}

int run_check() {
  auto results = run_table_checks();
  for (const auto& r : results) std::cout << check_line(r) << "\n";
  if (all_checks_passed(results)) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cerr << "verification failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification of irreducible isoparametric foliations on CP^n"};
  app.require_subcommand(1);

  auto* space = app.add_subcommand("space", "classify the projections of one symmetric pair");
  std::string label;
  int p = 0, nu = 0;
  bool space_verify = false;
  long long space_bound = 2;
  space->add_option("--label", label, "catalog label, e.g. \"A III\" or \"E II\"")->required();
  space->add_option("--p", p, "rank of the ambient algebra (parametrized labels)");
  space->add_option("--nu", nu, "index of the painted simple root");
  space->add_flag("--verify", space_verify, "cross-check the admissible set by bounded search");
  space->add_option("--bound", space_bound, "search bound for --verify (default 2)");

  auto* fkm = app.add_subcommand("fkm", "classify the projections of one Clifford family");
  long long m = 0, k = -1, kplus = -1, kminus = -1, fkm_bound = 2;
  bool fkm_verify = false;
  fkm->add_option("--m", m, "number of Clifford generators")->required();
  fkm->add_option("--k", k, "module multiplicity (m not divisible by 4)");
  fkm->add_option("--kplus", kplus, "positive-module multiplicity (m divisible by 4)");
  fkm->add_option("--kminus", kminus, "negative-module multiplicity (m divisible by 4)");
  fkm->add_flag("--verify", fkm_verify, "cross-check the admissible set by bounded search");
  fkm->add_option("--bound", fkm_bound, "search bound for --verify (default 2)");

  auto* census = app.add_subcommand("census", "list the foliation census of CP^n");
  long long n = 0;
  std::string format = "human";
  census->add_option("--n", n, "complex dimension of the projective space")->required();
  census->add_option("--format", format, "output format (default human)")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  auto* check = app.add_subcommand("check", "run the golden verification suite");
  bool tables = false;
  check->add_flag("--tables", tables, "verify every catalog row and Clifford case class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (space->parsed()) return run_space(label, p, nu, space_verify, space_bound);
  if (fkm->parsed()) return run_fkm(m, k, kplus, kminus, fkm_verify, fkm_bound);
  if (census->parsed()) return run_census(n, format);
  if (check->parsed()) return run_check();
  return 2;
}
