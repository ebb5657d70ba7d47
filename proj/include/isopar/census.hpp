// Census of irreducible isoparametric foliations on the complex projective
// space CP^n.  Sources:
//
//   * symmetric pairs of rank r >= 2 whose isotropy representation has real
//     dimension 2n + 2 (each congruence class yields one foliation of
//     codimension r - 1),
//   * Clifford (FKM) families on the sphere S^(2n+1) with m1 <= m2, which
//     project to codimension-one foliations,
//   * one explicitly open case: the inhomogeneous multiplicity-(8,7) families
//     on S^31, whose projectability is not settled here.
//
// Codimension-one entries from the two sources may coincide as foliations;
// records are tagged as overlap candidates but never merged.
//
// The module also decides homogeneity of projected classes and carries the
// numeric criteria for the existence of inhomogeneous foliations: for
// codimension q >= 2 such a foliation exists on CP^n exactly when
// (q+1)^2 <= 2(n+1) and (q+1) | 2(n+1); for q = 1 exactly when n is odd and
// n >= 3.  Every foliation on CP^n is homogeneous exactly when n + 1 is
// prime -- asserted against the divisibility sweep on every call.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isopar/clifford.hpp"
#include "isopar/fkm.hpp"
#include "isopar/rational.hpp"
#include "isopar/symmetric_pair.hpp"
#include "isopar/vogan.hpp"

namespace isopar {

inline bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// A projected class is homogeneous exactly when the pair has rank one or the
// pair is Hermitian and the point is one of the central directions +-h_nu.
// Defined only on admissible points.
inline bool homogeneity(const SymmetricPairRecord& rec, const RatVec& t) {
  auto adm = admissible_points(rec);
  ISOPAR_REQUIRE(std::find(adm.begin(), adm.end(), t) != adm.end(),
                 "homogeneity is defined only for admissible torus points");
  if (dims(rec).rank_ss == 1) return true;
  if (!rec.hermitian) return false;
  for (int i = 0; i < rec.p; ++i)
    if (i != rec.nu - 1 && t[i] != Rat(0)) return false;
  return t[rec.nu - 1] == Rat(1) || t[rec.nu - 1] == Rat(-1);
}

inline bool inhomog_exists(long long n, long long q) {
  ISOPAR_REQUIRE(n >= 1 && q >= 1, "inhomog_exists needs n >= 1 and q >= 1");
  if (q == 1) return n >= 3 && n % 2 == 1;
  return (q + 1) * (q + 1) <= 2 * (n + 1) && (2 * (n + 1)) % (q + 1) == 0;
}

// When the codimension-q divisibility criterion holds (q >= 2), the witness
// foliation comes from the real Grassmannian pair SO(q+1+r)/SO(q+1)xSO(r)
// with r = 2(n+1)/(q+1): the even part of (q+1, r) fixes nu and the parity
// of the total fixes the B/D series.
inline std::optional<SymmetricPairRecord> inhomog_witness(long long n, long long q) {
  ISOPAR_REQUIRE(n >= 1 && q >= 2, "the witness construction applies to codimension >= 2");
  if ((q + 1) * (q + 1) > 2 * (n + 1) || (2 * (n + 1)) % (q + 1) != 0) return std::nullopt;
  const long long a = q + 1;
  const long long r = 2 * (n + 1) / (q + 1);
  std::string label;
  long long p = 0, nu = 0;
  if (a % 2 == 0 && r % 2 == 0) {
    label = "D I";
    p = (a + r) / 2;
    nu = a / 2;
  } else if (a % 2 == 0) {
    label = "B I";
    p = (a + r - 1) / 2;
    nu = a / 2;
  } else {  // a odd forces r even
    label = "B I";
    p = (a + r - 1) / 2;
    nu = r / 2;
  }
  auto rec = catalog_record(label, static_cast<int>(p), static_cast<int>(nu));
  auto d = dims(rec);
  ISOPAR_REQUIRE(d.dim_p == 2 * n + 2 && d.rank_ss == q + 1,
                 "witness record dimensions out of step with the divisibility data");
  return rec;
}

inline bool all_homogeneous(long long n) {
  ISOPAR_REQUIRE(n >= 1, "projective space dimension must be >= 1");
  bool any = inhomog_exists(n, 1);
  for (long long q = 2; !any && (q + 1) * (q + 1) <= 2 * (n + 1); ++q) any = inhomog_exists(n, q);
  const bool prime = is_prime(n + 1);
  ISOPAR_REQUIRE(prime == !any, "primality criterion disagrees with the divisibility sweep");
  return !any;
}

enum class Tristate { yes, no, unknown };

inline std::string tristate_str(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    default: return "unknown";
  }
}

// One foliation (or one open slot) of the census of CP^n.  Pair-sourced
// records carry (label, p, nu) and one record per congruence class;
// Clifford-sourced records carry (m, k) or (m, k_plus, k_minus) and one
// record per family, with N_within_source counting its projected classes.
struct FoliationRecord {
  std::string source;  // "pair" | "fkm" | "open-gap"
  std::string label;
  int p = 0;
  int nu = 0;
  long long m = 0;
  long long k = 0;
  long long k_plus = 0;
  long long k_minus = 0;
  long long n = 0;
  long long codim = 0;
  RatVec representative;  // empty for the open slot
  Tristate homogeneous = Tristate::unknown;
  long long N_within_source = 0;
  bool overlap_candidate = false;
};

namespace detail {

// Real dimension of the isotropy part, per family, as a closed form in
// (p, nu); used to invert "dim = 2n + 2" without materializing catalogs.
inline long long pair_dim_closed_form(const std::string& label, int p, int nu) {
  const long long P = p, V = nu;
  if (label == "A III") return 2 * V * (P + 1 - V);
  if (label == "B I") return 2 * V * (2 * P - 2 * V + 1);
  if (label == "C I") return P * (P + 1);
  if (label == "C II") return 4 * V * (P - V);
  if (label == "D I") return 4 * V * (P - V);
  if (label == "D III") return P * (P - 1);
  if (label == "E II") return 40;
  if (label == "E III") return 32;
  if (label == "E V") return 70;
  if (label == "E VI") return 64;
  if (label == "E VII") return 54;
  if (label == "E VIII") return 128;
  if (label == "E IX") return 112;
  if (label == "F I") return 28;
  if (label == "F II") return 16;
  if (label == "G") return 8;
  throw invariant_error("unknown symmetric pair label: " + label);
}

struct PairCandidate {
  std::string label;
  int p = 0;
  int nu = 0;
};

inline int family_order(const std::string& label) {
  static const char* order[] = {"A III", "B I", "C I", "C II", "D I", "D III", "E II", "E III",
                                "E V",   "E VI", "E VII", "E VIII", "E IX", "F I", "F II", "G"};
  for (int i = 0; i < 16; ++i)
    if (label == order[i]) return i;
  throw invariant_error("unknown symmetric pair label: " + label);
}

// All catalog parameters with isotropy dimension D, listing each underlying
// space once (nu and its mirror parameter describe the same space in the
// A III, C II and D I families; the smaller value is kept).
inline std::vector<PairCandidate> pair_candidates_with_dim(long long D) {
  std::vector<PairCandidate> out;
  for (long long nu = 2; 2 * nu * nu <= D; ++nu)
    if (D % (2 * nu) == 0) {
      const long long rest = D / (2 * nu);  // = p + 1 - nu
      const long long p = rest + nu - 1;
      if (p >= 3 && nu <= p - 1 && nu <= rest)
        out.push_back({"A III", static_cast<int>(p), static_cast<int>(nu)});
    }
  for (long long nu = 1; 2 * nu <= D; ++nu)
    if (D % (2 * nu) == 0 && (D / (2 * nu)) % 2 == 1) {
      const long long p = nu + (D / (2 * nu) - 1) / 2;
      out.push_back({"B I", static_cast<int>(p), static_cast<int>(nu)});
    }
  for (long long p = 2; p * (p + 1) <= D; ++p)
    if (p * (p + 1) == D) out.push_back({"C I", static_cast<int>(p), static_cast<int>(p)});
  if (D % 4 == 0) {
    for (long long nu = 2; 4 * nu * nu <= D; ++nu)
      if ((D / 4) % nu == 0) {
        const long long p = D / (4 * nu) + nu;
        if (p >= 4 && nu <= p - 2 && 2 * nu <= p)
          out.push_back({"C II", static_cast<int>(p), static_cast<int>(nu)});
      }
    for (long long nu = 1; 4 * nu * nu <= D; ++nu)
      if ((D / 4) % nu == 0) {
        const long long p = D / (4 * nu) + nu;
        if (p >= 4 && nu <= p - 2 && 2 * nu <= p)
          out.push_back({"D I", static_cast<int>(p), static_cast<int>(nu)});
      }
  }
  for (long long p = 4; p * (p - 1) <= D; ++p)
    if (p * (p - 1) == D) out.push_back({"D III", static_cast<int>(p), static_cast<int>(p)});
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
    if (pair_dim_closed_form(f.label, f.p, f.nu) == D) out.push_back({f.label, f.p, f.nu});
  std::sort(out.begin(), out.end(), [](const PairCandidate& x, const PairCandidate& y) {
    const int fx = family_order(x.label), fy = family_order(y.label);
    if (fx != fy) return fx < fy;
    if (x.p != y.p) return x.p < y.p;
    return x.nu < y.nu;
  });
  return out;
}

inline std::string fkm_label(const FkmFamily& f) {
  if (f.split)
    return "FKM m=" + std::to_string(f.m) + " k=(" + std::to_string(f.kplus) + "," +
           std::to_string(f.kminus) + ")";
  return "FKM m=" + std::to_string(f.m) + " k=" + std::to_string(f.k);
}

}  // namespace detail

// The census of CP^n: codimension >= 2 records first (pair sources of rank
// >= 3, one record per congruence class), then the codimension-one block
// (rank-two pair classes, Clifford families with m1 <= m2, and the open
// (7,8) slot when 2n + 2 = 32).  Ordering inside each block is by catalog
// family, then (p, nu), then orbit representative; Clifford families are
// ordered by ascending m and descending k_minus.
inline std::vector<FoliationRecord> enumerate_foliations(long long n) {
  ISOPAR_REQUIRE(n >= 1, "projective space dimension must be >= 1");
  const long long D = 2 * n + 2;
  struct Mat {
    SymmetricPairRecord rec;
    PairDims d;
  };
  std::vector<Mat> pairs;
  for (const auto& c : detail::pair_candidates_with_dim(D)) {
    auto rec = catalog_record(c.label, c.p, c.nu);
    if (rec.census_excluded) continue;
    auto d = dims(rec);
    ISOPAR_REQUIRE(d.dim_p == D && d.n == n, "candidate dimension bookkeeping failed");
    if (d.rank_ss >= 2) pairs.push_back({std::move(rec), d});
  }
  std::vector<FoliationRecord> out;
  auto emit_pair_orbits = [&](const Mat& m) {
    auto cc = count_classes(m.rec);
    for (const auto& orbit : cc.orbits) {
      FoliationRecord fr;
      fr.source = "pair";
      fr.label = m.rec.label;
      fr.p = m.rec.p;
      fr.nu = m.rec.nu;
      fr.n = n;
      fr.codim = m.d.codim;
      fr.representative = orbit.front();
      fr.homogeneous = homogeneity(m.rec, fr.representative) ? Tristate::yes : Tristate::no;
      fr.N_within_source = cc.n;
      out.push_back(std::move(fr));
    }
  };
  for (const auto& m : pairs)
    if (m.d.rank_ss >= 3) emit_pair_orbits(m);
  const std::size_t codim1_begin = out.size();
  for (const auto& m : pairs)
    if (m.d.rank_ss == 2) emit_pair_orbits(m);
  const bool have_pair_codim1 = out.size() > codim1_begin;
  bool have_fkm = false;
  for (const auto& f : families_with_dimV(D)) {
    if (!f.m1_le_m2) continue;
    ISOPAR_REQUIRE(f.n == n, "family dimension bookkeeping failed");
    have_fkm = true;
    FoliationRecord fr;
    fr.source = "fkm";
    fr.label = detail::fkm_label(f);
    fr.m = f.m;
    fr.k = f.k;
    fr.k_plus = f.kplus;
    fr.k_minus = f.kminus;
    fr.n = n;
    fr.codim = 1;
    fr.representative = admissible_points_fkm(f).front();
    fr.homogeneous = Tristate::unknown;
    fr.N_within_source = closed_form_N(f);
    out.push_back(std::move(fr));
  }
  if (D == 32) {
    FoliationRecord fr;
    fr.source = "open-gap";
    fr.label = "inhomogeneous (8,7) families on S^31";
    fr.n = n;
    fr.codim = 1;
    fr.homogeneous = Tristate::unknown;
    fr.N_within_source = 0;
    out.push_back(std::move(fr));
  }
  if (have_pair_codim1 && have_fkm)
    for (auto& fr : out)
      if (fr.codim == 1 && fr.source != "open-gap") fr.overlap_candidate = true;
  return out;
}

namespace detail {

inline Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace detail

inline nlohmann::ordered_json foliation_json(const FoliationRecord& fr) {
  nlohmann::ordered_json j;
  j["source"] = fr.source;
  j["label"] = fr.label;
  j["p"] = fr.p;
  j["nu"] = fr.nu;
  j["m"] = fr.m;
  j["k"] = fr.k;
  j["k_plus"] = fr.k_plus;
  j["k_minus"] = fr.k_minus;
  j["n"] = fr.n;
  j["codim"] = fr.codim;
  auto rep = nlohmann::ordered_json::array();
  for (const auto& c : fr.representative) rep.push_back(rat_str(c));
  j["representative"] = std::move(rep);
  j["homogeneous"] = tristate_str(fr.homogeneous);
  j["N_within_source"] = fr.N_within_source;
  j["overlap_candidate"] = fr.overlap_candidate;
  return j;
}

// Serialization with a fixed field order; rationals are written as "a" or
// "a/b" so reruns are byte-identical.
inline std::string export_foliations(const std::vector<FoliationRecord>& records,
                                     const std::string& format) {
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& fr : records) arr.push_back(foliation_json(fr));
    return arr.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out =
        "source,label,p,nu,m,k,k_plus,k_minus,n,codim,"
        "representative,homogeneous,N_within_source,overlap_candidate\n";
    for (const auto& fr : records) {
      std::string rep;
      for (std::size_t i = 0; i < fr.representative.size(); ++i) {
        if (i) rep += ' ';
        rep += rat_str(fr.representative[i]);
      }
      out += fr.source + ',' + fr.label + ',' + std::to_string(fr.p) + ',' +
             std::to_string(fr.nu) + ',' + std::to_string(fr.m) + ',' + std::to_string(fr.k) +
             ',' + std::to_string(fr.k_plus) + ',' + std::to_string(fr.k_minus) + ',' +
             std::to_string(fr.n) + ',' + std::to_string(fr.codim) + ',' + rep + ',' +
             tristate_str(fr.homogeneous) + ',' + std::to_string(fr.N_within_source) + ',' +
             (fr.overlap_candidate ? "true" : "false") + '\n';
    }
    return out;
  }
  throw invariant_error("unknown export format: " + format);
}

inline std::vector<FoliationRecord> parse_foliations_json(const std::string& text) {
  auto arr = nlohmann::ordered_json::parse(text);
  ISOPAR_REQUIRE(arr.is_array(), "foliation export must be a JSON array");
  std::vector<FoliationRecord> out;
  for (const auto& j : arr) {
    FoliationRecord fr;
    fr.source = j.at("source").get<std::string>();
    fr.label = j.at("label").get<std::string>();
    fr.p = j.at("p").get<int>();
    fr.nu = j.at("nu").get<int>();
    fr.m = j.at("m").get<long long>();
    fr.k = j.at("k").get<long long>();
    fr.k_plus = j.at("k_plus").get<long long>();
    fr.k_minus = j.at("k_minus").get<long long>();
    fr.n = j.at("n").get<long long>();
    fr.codim = j.at("codim").get<long long>();
    for (const auto& c : j.at("representative")) fr.representative.push_back(detail::parse_rat(c.get<std::string>()));
    const auto h = j.at("homogeneous").get<std::string>();
    fr.homogeneous = h == "yes" ? Tristate::yes : h == "no" ? Tristate::no : Tristate::unknown;
    fr.N_within_source = j.at("N_within_source").get<long long>();
    fr.overlap_candidate = j.at("overlap_candidate").get<bool>();
    out.push_back(std::move(fr));
  }
  return out;
}

}  // namespace isopar
