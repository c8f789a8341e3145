#include "sshecke/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <set>
#include <thread>

#include "sshecke/equidist.hpp"
#include "sshecke/errors.hpp"
#include "sshecke/modforms.hpp"
#include "sshecke/velu.hpp"

namespace sshecke {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  u64 p = 0;
  u64 seed = kDefaultSeed;
  unsigned threads = 1;
  std::string format = "csv";
  std::vector<std::string> phi_files;

  u64 m = 2;
  bool oracle = false;
  u64 index = 1;  // 1-based class index
  u64 m_max = 100;
  bool primes_only = false;
  u64 verify_m_max = 200;
};

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

void register_phi_files(PhiSource& phis, u64 p,
                        const std::vector<std::string>& specs) {
  for (const std::string& s : specs) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
      throw InvalidArgument("--phi-file expects L=PATH, got \"" + s + "\"");
    }
    u64 ell = 0;
    for (char c : s.substr(0, eq)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidArgument("--phi-file level must be a prime, got \"" +
                              s.substr(0, eq) + "\"");
      }
      ell = ell * 10 + u64(c - '0');
      if (ell > (u64(1) << 40)) {
        throw InvalidArgument("--phi-file level out of range");
      }
    }
    if (!is_prime(ell) || ell == p) {
      throw InvalidArgument("--phi-file level must be a prime distinct from p");
    }
    phis.register_file(ell, s.substr(eq + 1));
  }
}

bool weighted_symmetry_holds(const IntMatrix& B,
                             const SupersingularLocus& locus) {
  for (std::size_t i = 0; i < locus.n(); ++i) {
    for (std::size_t j = 0; j < locus.n(); ++j) {
      if (B.at(i, j) * i64(locus.weights[j]) !=
          B.at(j, i) * i64(locus.weights[i])) {
        return false;
      }
    }
  }
  return true;
}

// Primes q != p whose modular polynomial a skipped m would have needed.
std::vector<u64> missing_primes(const PhiSource& phis, u64 p, u64 m) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    if (q != p && !phis.available(q)) out.push_back(q);
  }
  if (m > 1 && m != p && !phis.available(m)) out.push_back(m);
  return out;
}

int cmd_locus(const RunConfig& cfg, const SupersingularLocus& locus,
              std::ostream& out) {
  Rational mass = locus.mass();
  std::string expected = std::to_string(locus.p - 1) + "/12";
  bool ok = mass == Rational(i64(locus.p - 1), 12);
  if (cfg.format == "json") {
    ordered_json doc;
    doc["p"] = locus.p;
    doc["n"] = locus.n();
    doc["classes"] = ordered_json::array();
    for (std::size_t i = 0; i < locus.n(); ++i) {
      ordered_json row;
      row["index"] = i + 1;
      row["j"] = to_string(locus.js[i]);
      row["w"] = locus.weights[i];
      doc["classes"].push_back(row);
    }
    doc["mass"] = mass.to_string();
    doc["mass_expected"] = expected;
    doc["mass_ok"] = ok;
    out << doc.dump(2) << "\n";
  } else {
    out << "index,j,w\n";
    for (std::size_t i = 0; i < locus.n(); ++i) {
      out << (i + 1) << ',' << to_string(locus.js[i]) << ','
          << locus.weights[i] << "\n";
    }
    out << "# n " << locus.n() << "\n";
    out << "# mass " << mass.to_string() << " = " << expected
        << (ok ? " OK" : " FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_brandt(const RunConfig& cfg, const SupersingularLocus& locus,
               const BrandtEngine& engine, std::ostream& out) {
  if (cfg.m == 0) throw InvalidArgument("--m must be at least 1");
  if (cfg.oracle && cfg.m != 2 && cfg.m != 3) {
    throw InvalidArgument("--oracle supports only m = 2 and m = 3");
  }
  auto B = engine.matrix(cfg.m);
  u64 sigma = sigma_p(cfg.m, locus.p);
  bool symmetric = weighted_symmetry_holds(B->mat, locus);

  std::optional<bool> oracle_match;
  if (cfg.oracle) {
    auto counts = velu_neighbour_counts(locus, cfg.m);
    bool match = true;
    for (std::size_t i = 0; i < locus.n() && match; ++i) {
      for (std::size_t j = 0; j < locus.n(); ++j) {
        if (counts[i][j] != B->mat.at(i, j)) {
          match = false;
          break;
        }
      }
    }
    oracle_match = match;
  }

  if (cfg.format == "json") {
    ordered_json doc;
    doc["p"] = locus.p;
    doc["m"] = cfg.m;
    doc["sigma_p"] = sigma;
    doc["matrix"] = ordered_json::array();
    doc["row_sums"] = ordered_json::array();
    for (std::size_t i = 0; i < locus.n(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < locus.n(); ++j) row.push_back(B->mat.at(i, j));
      doc["matrix"].push_back(row);
      doc["row_sums"].push_back(B->mat.row_sum(i));
    }
    doc["weighted_symmetry"] = symmetric ? "OK" : "FAIL";
    if (oracle_match) doc["oracle"] = *oracle_match ? "MATCH" : "MISMATCH";
    out << doc.dump(2) << "\n";
  } else {
    out << "i";
    for (std::size_t j = 0; j < locus.n(); ++j) out << ",b" << (j + 1);
    out << ",row_sum\n";
    for (std::size_t i = 0; i < locus.n(); ++i) {
      out << (i + 1);
      for (std::size_t j = 0; j < locus.n(); ++j) out << ',' << B->mat.at(i, j);
      out << ',' << B->mat.row_sum(i) << "\n";
    }
    out << "# sigma_p(" << cfg.m << ") = " << sigma << "\n";
    out << "# weighted_symmetry " << (symmetric ? "OK" : "FAIL") << "\n";
    if (oracle_match) {
      out << "# oracle " << (*oracle_match ? "MATCH" : "MISMATCH") << "\n";
    }
  }
  bool bad = !symmetric || (oracle_match && !*oracle_match);
  return bad ? 1 : 0;
}

struct SweepRow {
  u64 m = 0;
  Rational error;
  u64 sigma = 0;
};

int cmd_equidist(const RunConfig& cfg, const SupersingularLocus& locus,
                 const PhiSource& phis, const BrandtEngine& engine,
                 std::ostream& out) {
  if (cfg.index < 1 || cfg.index > locus.n()) {
    throw InvalidArgument("--i must be between 1 and " +
                          std::to_string(locus.n()));
  }
  std::size_t i = std::size_t(cfg.index - 1);
  if (cfg.m_max == 0) throw InvalidArgument("--m-max must be at least 1");

  std::vector<u64> wanted;
  for (u64 m = 1; m <= cfg.m_max; ++m) {
    if (cfg.primes_only && !is_prime(m)) continue;
    wanted.push_back(m);
  }

  std::vector<u64> todo;
  std::vector<u64> skipped;
  std::set<u64> needed;
  for (u64 m : wanted) {
    if (engine.can_compute(m)) {
      todo.push_back(m);
    } else {
      skipped.push_back(m);
      for (u64 q : missing_primes(phis, locus.p, m)) needed.insert(q);
    }
  }

  std::vector<SweepRow> rows(todo.size());
  unsigned workers = std::max(1u, cfg.threads);
  auto work = [&](unsigned w) {
    for (std::size_t k = w; k < todo.size(); k += workers) {
      rows[k].m = todo[k];
      rows[k].error = error_sup(engine, i, todo[k]);
      rows[k].sigma = sigma_p(todo[k], locus.p);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }

  std::vector<u64> fit_ms;
  std::size_t nonzero = 0;
  for (const SweepRow& row : rows) {
    if (row.m % locus.p != 0) {
      fit_ms.push_back(row.m);
      if (row.error != Rational(0)) ++nonzero;
    }
  }
  std::optional<RateFit> fit;
  std::string fit_note;
  if (nonzero == 0) {
    fit_note = "exact equidistribution";
  } else if (nonzero < 10) {
    fit_note = "rate_fit unavailable: " + std::to_string(nonzero) +
               " nonzero errors (need 10)";
  } else {
    fit = rate_fit(engine, i, fit_ms);
  }

  if (cfg.format == "json") {
    ordered_json doc;
    doc["p"] = locus.p;
    doc["i"] = cfg.index;
    doc["m_max"] = cfg.m_max;
    doc["rows"] = ordered_json::array();
    for (const SweepRow& row : rows) {
      ordered_json r;
      r["m"] = row.m;
      r["error"] = row.error.to_string();
      r["error_decimal"] = row.error.to_double();
      r["sigma_p"] = row.sigma;
      doc["rows"].push_back(r);
    }
    doc["skipped_m"] = skipped;
    doc["missing_primes"] = std::vector<u64>(needed.begin(), needed.end());
    if (fit) {
      ordered_json f;
      f["slope"] = fit->slope;
      f["intercept"] = fit->intercept;
      f["rms"] = fit->rms;
      f["used"] = fit->used;
      f["excluded_zero"] = fit->excluded_zero;
      doc["rate_fit"] = f;
    } else {
      doc["rate_fit"] = nullptr;
      doc["note"] = fit_note;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "m,error,error_decimal,sigma_p\n";
    for (const SweepRow& row : rows) {
      out << row.m << ',' << row.error.to_string() << ','
          << fmt_double(row.error.to_double()) << ',' << row.sigma << "\n";
    }
    if (!skipped.empty()) {
      out << "# skipped " << skipped.size()
          << " m values missing modular polynomials for primes:";
      for (u64 q : needed) out << ' ' << q;
      out << "\n";
    }
    if (fit) {
      out << "# rate_fit slope=" << fmt_double(fit->slope)
          << " intercept=" << fmt_double(fit->intercept)
          << " rms=" << fmt_double(fit->rms) << " used=" << fit->used
          << " excluded_zero=" << fit->excluded_zero << "\n";
    } else {
      out << "# " << fit_note << "\n";
    }
  }
  return 0;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

void run_verify_battery(const RunConfig& cfg, const SupersingularLocus& locus,
                        const PhiSource& phis, const BrandtEngine& engine,
                        std::vector<Check>& checks) {
  u64 p = locus.p;
  std::size_t n = locus.n();
  auto add = [&checks](std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  };

  std::vector<u64> ms;
  for (u64 m = 1; m <= cfg.verify_m_max; ++m) {
    if (engine.can_compute(m)) ms.push_back(m);
  }
  std::vector<u64> coprime_ms;
  for (u64 m : ms) {
    if (m % p != 0) coprime_ms.push_back(m);
  }

  guarded("locus_mass_formula", [&] {
    Rational mass = locus.mass();
    bool ok = mass == Rational(i64(p - 1), 12);
    add("locus_mass_formula", ok,
        "sum 1/w = " + mass.to_string() + ", expected " +
            std::to_string(p - 1) + "/12");
  });

  guarded("locus_frobenius_stable", [&] {
    auto tau = locus.frobenius_perm();
    bool ok = tau.size() == n;
    for (std::size_t i = 0; ok && i < n; ++i) {
      ok = tau[i] < n && tau[tau[i]] == i &&
           frobenius(locus.js[i]) == locus.js[tau[i]];
    }
    add("locus_frobenius_stable", ok,
        "j -> j^p is an involution on " + std::to_string(n) + " classes");
  });

  guarded("locus_weight_rule", [&] {
    const FieldCtx& F = *locus.field;
    Fq j0 = Fq::zero(F);
    Fq j1728 = Fq::from_int(F, 1728 % p);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      int expect = locus.js[i] == j0 ? 3 : locus.js[i] == j1728 ? 2 : 1;
      ok = locus.weights[i] == expect;
    }
    add("locus_weight_rule", ok, "w = 3 at j=0, 2 at j=1728, else 1");
  });

  if (p <= 200) {
    guarded("locus_exhaustive_scan", [&] {
      SupersingularLocus scanned = scan_locus(p);
      bool ok = scanned.n() == n;
      for (std::size_t i = 0; ok && i < n; ++i) {
        ok = to_string(scanned.js[i]) == to_string(locus.js[i]) &&
             scanned.weights[i] == locus.weights[i];
      }
      add("locus_exhaustive_scan", ok,
          "graph enumeration equals the full field scan");
    });
  }

  guarded("brandt_row_sums", [&] {
    bool ok = true;
    for (u64 m : ms) {
      auto B = engine.matrix(m);
      i64 sigma = i64(sigma_p(m, p));
      for (std::size_t i = 0; i < n && ok; ++i) {
        ok = B->mat.row_sum(i) == sigma;
      }
      if (!ok) break;
    }
    add("brandt_row_sums", ok,
        "checked " + std::to_string(ms.size()) + " values of m");
  });

  guarded("brandt_weighted_symmetry", [&] {
    bool ok = true;
    for (u64 m : ms) {
      if (!weighted_symmetry_holds(engine.matrix(m)->mat, locus)) {
        ok = false;
        break;
      }
    }
    add("brandt_weighted_symmetry", ok,
        "B(m) diag(1/w) symmetric for " + std::to_string(ms.size()) +
            " values of m");
  });

  guarded("brandt_commutativity", [&] {
    std::vector<u64> qs;
    for (u64 q = 2; q <= 100; ++q) {
      if (is_prime(q) && q != p && phis.available(q)) qs.push_back(q);
    }
    bool ok = true;
    for (std::size_t a = 0; a < qs.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < qs.size() && ok; ++b) {
        auto A = engine.matrix(qs[a]);
        auto B = engine.matrix(qs[b]);
        ok = A->mat * B->mat == B->mat * A->mat;
      }
    }
    std::string who;
    for (u64 q : qs) who += (who.empty() ? "" : ",") + std::to_string(q);
    add("brandt_commutativity", ok, "pairwise over primes " + who);
  });

  for (u64 ell : {2ull, 3ull}) {
    std::string name = "brandt_oracle_match_ell" + std::to_string(ell);
    guarded(name, [&] {
      auto counts = velu_neighbour_counts(locus, ell);
      IntMatrix B = engine.prime_matrix(ell);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (counts[i][j] != B.at(i, j)) {
            ok = false;
            break;
          }
        }
      }
      add(name, ok, "isogeny enumeration reproduces B(" +
                        std::to_string(ell) + ") entrywise");
    });
  }

  guarded("frobenius_involution", [&] {
    IntMatrix F = engine.frobenius_power(1);
    add("frobenius_involution", F * F == IntMatrix::identity(n),
        "B(p)^2 = I");
  });

  guarded("frobenius_commutes_hecke", [&] {
    bool ok = true;
    for (u64 q : {2ull, 3ull}) {
      CommuteReport rep = check_commuting(engine, engine.frobenius(), q);
      ok = ok && rep.commutes && rep.preserves_theta;
    }
    add("frobenius_commutes_hecke", ok, "B(p) commutes with B(2), B(3)");
  });

  guarded("frobenius_weight_compatible", [&] {
    const auto& tau = engine.frobenius();
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      ok = ok && locus.weights[i] == locus.weights[tau[i]];
    }
    add("frobenius_weight_compatible", ok, "w_i = w_tau(i)");
  });

  guarded("eisenstein_eigenvector", [&] {
    Divisor e = Divisor::eisenstein(locus);
    bool ok = true;
    for (u64 m : ms) {
      Divisor moved = hecke_apply(engine.matrix(m)->mat, e);
      Rational sigma(i64(sigma_p(m, p)));
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = moved.coeffs[j] == sigma * e.coeffs[j];
      }
      if (!ok) break;
    }
    add("eisenstein_eigenvector", ok,
        "T_m e = sigma(m)_p e for " + std::to_string(ms.size()) +
            " values of m");
  });

  guarded("theta_hecke_invariant", [&] {
    Measure theta = theta_star(locus);
    Divisor e = Divisor::eisenstein(locus);
    bool ok = true;
    for (u64 m : ms) {
      Divisor moved = hecke_apply(engine.matrix(m)->mat, e);
      Rational deg = moved.degree();
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = moved.coeffs[j] / deg == theta.weights[j];
      }
      if (!ok) break;
    }
    add("theta_hecke_invariant", ok, "orbit of the Eisenstein divisor is theta");
  });

  EisensteinData eis(p);
  std::vector<u64> res_ms;
  for (u64 m : ms) {
    if (m <= 150) res_ms.push_back(m);
  }
  std::vector<u64> res_coprime;
  for (u64 m : res_ms) {
    if (m % p != 0) res_coprime.push_back(m);
  }

  guarded("cusp_residual_denominator", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        i64 bound = i64(locus.weights[j]) * i64(p * p - 1);
        for (u64 m : res_ms) {
          Rational c = cusp_residual(engine, eis, i, j, m);
          if ((c * Rational(bound)).den() != 1) {
            ok = false;
            break;
          }
        }
      }
    }
    add("cusp_residual_denominator", ok, "w_j (p^2-1) c_m is an integer");
  });

  guarded("cusp_residual_formulas_agree", [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (u64 m : res_coprime) cusp_residual(engine, eis, i, j, m);
      }
    }
    add("cusp_residual_formulas_agree", true,
        "general and off-p formulas agree on " +
            std::to_string(res_coprime.size()) + " values of m");
  });

  guarded("cusp_residual_rowsum_identity", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (u64 m : res_coprime) {
        Rational total(0);
        for (std::size_t j = 0; j < n; ++j) {
          total += cusp_residual(engine, eis, i, j, m);
        }
        if (total != Rational(0)) {
          ok = false;
          break;
        }
      }
    }
    add("cusp_residual_rowsum_identity", ok,
        "sum_j c_m(i,j) = 0 off p");
  });

  guarded("error_sup_residual_consistency", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (u64 m : res_coprime) {
        Rational expect(0);
        for (std::size_t j = 0; j < n; ++j) {
          Rational c = cusp_residual(engine, eis, i, j, m).abs();
          if (c > expect) expect = c;
        }
        expect /= Rational(i64(sigma1(m)));
        if (error_sup(engine, i, m) != expect) {
          ok = false;
          break;
        }
      }
    }
    add("error_sup_residual_consistency", ok,
        "error_sup = max_j |c_m| / sigma1(m) off p");
  });

  if (n == 1) {
    guarded("cusp_residuals_zero", [&] {
      bool ok = true;
      for (u64 m : coprime_ms) {
        if (cusp_residual(engine, eis, 0, 0, m) != Rational(0)) {
          ok = false;
          break;
        }
      }
      add("cusp_residuals_zero", ok,
          "cusp residuals identically zero for " +
              std::to_string(coprime_ms.size()) + " values of m");
    });
  }

  if (p == 11) {
    guarded("cusp_ratio_c2_over_c1", [&] {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Rational c1 = cusp_residual(engine, eis, i, j, 1);
          Rational c2 = cusp_residual(engine, eis, i, j, 2);
          if (c2 != Rational(-2) * c1) {
            ok = false;
            break;
          }
        }
      }
      add("cusp_ratio_c2_over_c1", ok, "c_2 = -2 c_1 for all (i,j)");
    });
  }

  guarded("theorem_bound_random_functions", [&] {
    Measure theta = theta_star(locus);
    std::vector<u64> small_ms;
    for (u64 m : ms) {
      if (m <= 50) small_ms.push_back(m);
    }
    Rational classes{i64(n)};
    bool ok = true;
    for (u64 trial = 0; trial < 100 && ok; ++trial) {
      TestFunction f = TestFunction::random(n, cfg.seed + trial);
      for (u64 m : small_ms) {
        for (std::size_t i = 0; i < n && ok; ++i) {
          Measure orbit = orbit_measure(engine, i, m);
          Rational gap =
              (measure_integral(orbit, f) - measure_integral(theta, f)).abs();
          ok = gap <= classes * error_sup(engine, i, m);
        }
      }
    }
    add("theorem_bound_random_functions", ok,
        "|int f d(orbit) - int f d(theta)| <= n error_sup, 100 seeded f");
  });
}

int cmd_verify(const RunConfig& cfg, const SupersingularLocus& locus,
               const PhiSource& phis, const BrandtEngine& engine,
               std::ostream& out) {
  std::vector<Check> checks;
  run_verify_battery(cfg, locus, phis, engine, checks);
  ordered_json doc;
  doc["p"] = locus.p;
  doc["m_max"] = cfg.verify_m_max;
  doc["checks"] = ordered_json::array();
  bool all_pass = true;
  for (const Check& c : checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = c.pass ? "pass" : "fail";
    entry["detail"] = c.detail;
    doc["checks"].push_back(entry);
    all_pass = all_pass && c.pass;
  }
  out << doc.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"supersingular isogeny graphs, Brandt matrices, and "
               "equidistribution checks"};
  app.require_subcommand(1);
  app.add_option("--p", cfg.p, "characteristic, a prime >= 5")->required();
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--threads", cfg.threads, "worker count for sweeps")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--phi-file", cfg.phi_files,
                 "modular polynomial file as L=PATH, repeatable");

  CLI::App* locus_cmd =
      app.add_subcommand("locus", "list the supersingular classes and weights");
  CLI::App* brandt_cmd =
      app.add_subcommand("brandt", "print B(m) with row sums");
  brandt_cmd->add_option("--m", cfg.m, "Hecke index")->required();
  brandt_cmd->add_flag("--oracle", cfg.oracle,
                       "cross-check against isogeny enumeration (m = 2 or 3)");
  CLI::App* equi_cmd =
      app.add_subcommand("equidist", "equidistribution error sweep");
  equi_cmd->add_option("--i", cfg.index, "1-based class index")->required();
  equi_cmd->add_option("--m-max", cfg.m_max, "sweep bound")->required();
  equi_cmd->add_flag("--primes-only", cfg.primes_only, "sweep prime m only");
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the invariant battery, JSON report");
  verify_cmd->add_option("--m-max", cfg.verify_m_max, "Hecke index budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.p < 5 || !is_prime(cfg.p)) {
      throw InvalidArgument("p must be a prime >= 5 (got " +
                            std::to_string(cfg.p) + ")");
    }
    SupersingularLocus locus = enumerate_locus(cfg.p);
    PhiSource phis(cfg.p);
    register_phi_files(phis, cfg.p, cfg.phi_files);
    BrandtEngine engine(locus, phis);

    if (locus_cmd->parsed()) return cmd_locus(cfg, locus, out);
    if (brandt_cmd->parsed()) return cmd_brandt(cfg, locus, engine, out);
    if (equi_cmd->parsed()) return cmd_equidist(cfg, locus, phis, engine, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, locus, phis, engine, out);
    err << "error: no command given\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sshecke
