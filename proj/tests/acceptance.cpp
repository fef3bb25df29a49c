// Acceptance suite: one line per top-level requirement, nonzero exit when
// any of them fails.  Each block recomputes its claim from the library and
// the shipped data files; nothing here trusts cached results.

#include <algorithm>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "e6char/borel.hpp"
#include "e6char/context.hpp"
#include "e6char/report.hpp"

using namespace e6char;

namespace {

int g_failures = 0;

void outcome(int number, const std::string& name, bool ok,
             const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << " " << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

bool section_passes(const std::vector<CheckRecord>& records,
                    std::string* why) {
  for (const CheckRecord& r : records)
    if (r.status != "pass") {
      *why = r.name + ": " + r.details;
      return false;
    }
  return true;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn&& body) {
  std::string why;
  bool ok = false;
  try {
    ok = body(&why);
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  outcome(number, name, ok, why);
}

UCoeffs random_u(const BorelCtx&, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2);
  UCoeffs u{};
  for (int i = 0; i < kNumPositive; ++i) u[i] = static_cast<int8_t>(d(rng));
  return u;
}

}  // namespace

int main() {
  const Workspace& ws = Workspace::instance();
  const RunConfig cfg;  // both cases, default data directory, q in {3,9,27}

  criterion(1, "root-datum-invariants", [&](std::string* why) {
    return section_passes(check_root_datum(ws), why);
  });

  criterion(2, "reflection-group-structure", [&](std::string* why) {
    return section_passes(check_weyl(ws), why);
  });

  criterion(3, "unipotent-group-and-conjugacy-witness", [&](std::string* why) {
    const BorelCtx c = ws.borel();
    std::mt19937 rng(987654321);
    for (int rep = 0; rep < 10000; ++rep) {
      UCoeffs a = random_u(c, rng), b = random_u(c, rng), d = random_u(c, rng);
      if (!u_equal(u_multiply(c, u_multiply(c, a, b), d),
                   u_multiply(c, a, u_multiply(c, b, d)))) {
        *why = "associativity failed on a random triple";
        return false;
      }
    }
    for (bool tw : {false, true})
      if (!section_passes(check_witness(ws, tw), why)) return false;
    return true;
  });

  criterion(4, "family-pairing-matrix", [&](std::string* why) {
    return section_passes(check_fourier(ws), why);
  });

  criterion(5, "trace-column-cross-checks", [&](std::string* why) {
    for (bool tw : {false, true}) {
      const CaseContext& c = ws.ctx(tw);
      HeckeAlgebra h(c.group, c.param_degrees);
      verify_hecke_relations(h);  // quadratic + braid, throws on failure
      HeckeData d = HeckeData::load(hecke_path(default_data_dir(), tw));
      validate_hecke_data(d, c.table, c.labels, h, c.cox_id, tw);
      if (d.traces[d.row_by_name("phi_1_0")] != LaurentPoly::q_power(6)) {
        *why = c.case_name + ": index-representation trace is not q^6";
        return false;
      }
      if (family_trace_combination(d, tw) != LaurentPoly(Rational(3), 3)) {
        *why = c.case_name + ": family combination is not 3 q^3";
        return false;
      }
    }
    return true;
  });

  criterion(6, "sign-determination", [&](std::string* why) {
    for (bool tw : {false, true}) {
      CaseOutcome oc = run_case_pipeline(ws, tw, cfg);
      const SignLinear want(LaurentPoly::q_power(6),
                            LaurentPoly(Rational(2), 6));
      if (!(oc.solution.ok && oc.solution.m == want &&
            oc.solution.xi == 1)) {
        *why = oc.case_name + ": expected the count q^6 + xi*2*q^6 with the "
               "positive sign";
        for (const DerivationStep& s : oc.solution.log)
          if (!s.passed) *why += "; " + s.name + ": " + s.details;
        return false;
      }
    }
    return true;
  });

  criterion(7, "regular-unipotent-value-table", [&](std::string* why) {
    for (bool tw : {false, true}) {
      const CaseContext& c = ws.ctx(tw);
      Roster roster = Roster::load(roster_path(default_data_dir(), tw));
      const FourierMatrix& fm = ws.family_fourier();
      std::vector<ValueRow> rows = value_table(roster, fm, 1);
      if (rows.size() != 30) {
        *why = c.case_name + ": expected 30 rows";
        return false;
      }
      int nonzero = 0;
      for (const ValueRow& r : rows) {
        const RosterEntry& e = roster.entries[roster.index_of(r.label)];
        LaurentPoly want =
            e.label == "phi_1_0"
                ? LaurentPoly(1)
                : LaurentPoly(cuspidal_pair_coefficient(e, fm), 3);
        if (r.value != want) {
          *why = c.case_name + ": wrong value on " + r.label;
          return false;
        }
        if (!r.value.is_zero()) ++nonzero;
        for (long q : {3L, 9L, 27L})
          if (r.value.evaluate(Rational(q)).get_den() != 1) {
            *why = c.case_name + ": non-integral value on " + r.label;
            return false;
          }
      }
      if (nonzero != 7) {
        *why = c.case_name + ": expected exactly 7 nonzero values";
        return false;
      }
    }
    return true;
  });

  criterion(8, "characteristic-function-orthonormality", [&](std::string* why) {
    CuspidalFunctionTable t = CuspidalFunctionTable::build();
    if (!t.orthonormal()) {
      *why = "Gram matrix with centralizer order 3 q^6 is not the identity";
      return false;
    }
    return true;
  });

  criterion(9, "robustness-under-relabeling-and-corruption",
            [&](std::string* why) {
    const FourierMatrix& fm = ws.family_fourier();
    for (bool tw : {false, true}) {
      const CaseContext& c = ws.ctx(tw);
      Roster roster = Roster::load(roster_path(default_data_dir(), tw));
      HeckeData data = HeckeData::load(hecke_path(default_data_dir(), tw));
      ScalarSolution base = determine_xi(roster, fm, data, true, {3, 9, 27});
      std::vector<ValueRow> base_rows = value_table(roster, fm, base.xi);

      // exchanging the two cuspidal slots must change nothing observable
      Roster swapped = roster;
      int i1 = -1, i2 = -1;
      for (std::size_t i = 0; i < swapped.entries.size(); ++i) {
        if (swapped.entries[i].mpair == "g3:th") i1 = static_cast<int>(i);
        if (swapped.entries[i].mpair == "g3:th2") i2 = static_cast<int>(i);
      }
      std::swap(swapped.entries[i1].mpair, swapped.entries[i2].mpair);
      validate_roster(swapped, c.labels, fm, tw);
      ScalarSolution s = determine_xi(swapped, fm, data, true, {3, 9, 27});
      std::vector<ValueRow> rows = value_table(swapped, fm, s.xi);
      auto same_table = [](const std::vector<ValueRow>& a,
                           const std::vector<ValueRow>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i].label != b[i].label || !(a[i].value == b[i].value))
            return false;
        return true;
      };
      if (!(s.ok && s.xi == base.xi && same_table(rows, base_rows))) {
        *why = c.case_name + ": cuspidal-slot exchange changed the result";
        return false;
      }

      // the two equal-coefficient principal-series slots are interchangeable
      if (!tw) {
        Roster ex = roster;
        int a = ex.index_of("phi_90_8"), b = ex.index_of("phi_10_9");
        std::swap(ex.entries[a].mpair, ex.entries[b].mpair);
        validate_roster(ex, c.labels, fm, tw);
        ScalarSolution se = determine_xi(ex, fm, data, true, {3, 9, 27});
        if (!(se.ok && se.xi == base.xi &&
              same_table(value_table(ex, fm, se.xi), base_rows))) {
          *why = "exchanging the two equal-coefficient slots changed the "
                 "result";
          return false;
        }
      }

      // a corrupted trace column must be flagged before any sign is reported
      HeckeData bad = data;
      int row = bad.row_by_name(tw ? "phi_12_4" : "phi_20_10");
      bad.traces[row] = LaurentPoly::q_power(5);  // survives q -> 1
      bool flagged = false;
      try {
        HeckeAlgebra h(c.group, c.param_degrees);
        validate_hecke_data(bad, c.table, c.labels, h, c.cox_id, tw);
      } catch (const std::exception&) {
        flagged = true;
      }
      ScalarSolution sb = determine_xi(roster, fm, bad, true, {3, 9, 27});
      if (!flagged || sb.ok || sb.xi != 0) {
        *why = c.case_name + ": corrupted trace data was not flagged before "
               "the sign";
        return false;
      }
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "all criteria satisfied"
                                : std::to_string(g_failures) +
                                      " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
