#include "e6char/report.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "e6char/hecke.hpp"

namespace e6char {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string pass_or_fail(bool ok) { return ok ? "pass" : "fail"; }

// runs a step that signals failure by throwing; the record carries either
// the given success note or the exception message
template <typename Fn>
CheckRecord guarded(const std::string& name, const std::string& note, Fn&& fn) {
  try {
    fn();
    return CheckRecord{name, "pass", note};
  } catch (const std::exception& e) {
    return CheckRecord{name, "fail", e.what()};
  }
}

// valid field sizes 3^f, f >= 1
bool is_power_of_three(long v) {
  if (v < 3) return false;
  while (v % 3 == 0) v /= 3;
  return v == 1;
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

CheckRecord CheckRecord::make(const std::string& name, bool ok,
                              const std::string& details) {
  return CheckRecord{name, pass_or_fail(ok), details};
}

bool RunConfig::wants(bool twisted) const {
  if (case_filter == "both") return true;
  return case_filter == case_name_of(twisted);
}

std::vector<bool> RunConfig::cases() const {
  std::vector<bool> out;
  if (wants(false)) out.push_back(false);
  if (wants(true)) out.push_back(true);
  return out;
}

bool validate_config(const RunConfig& cfg, std::string* why) {
  auto reject = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cfg.case_filter != "e6" && cfg.case_filter != "2e6" &&
      cfg.case_filter != "both")
    return reject("unknown case: " + cfg.case_filter +
                  " (expected e6, 2e6 or both)");
  if (cfg.format != "json" && cfg.format != "tsv" && cfg.format != "text")
    return reject("unknown format: " + cfg.format +
                  " (expected json, tsv or text)");
  if (cfg.q_samples.empty()) return reject("at least one sample point needed");
  for (long q : cfg.q_samples)
    if (!is_power_of_three(q))
      return reject("sample points must be powers of three, got " +
                    std::to_string(q));
  if (cfg.jobs < 1) return reject("at least one worker needed");
  return true;
}

uint64_t fnv1a64_bytes(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for digest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64_bytes(buf.str());
}

std::string hex64(uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[i] = digits[value & 0xf];
  return out;
}

std::vector<CheckRecord> check_root_datum(const Workspace& ws) {
  std::vector<CheckRecord> out;
  const RootSystem& rs = ws.roots();

  out.push_back(CheckRecord::make(
      "roots/counts", rs.num_roots() == 72 && rs.num_positive() == 36,
      "72 roots, 36 positive"));

  const Coord want_high{1, 2, 2, 3, 2, 1};
  bool high_ok = rs.coord(rs.highest_root()) == want_high &&
                 rs.height(rs.highest_root()) == 11;
  out.push_back(CheckRecord::make("roots/highest_root", high_ok,
                                  "coefficients (1,2,2,3,2,1), height 11"));

  long long det = det_int(rs.cartan());
  out.push_back(CheckRecord::make("roots/cartan_determinant", det == 3,
                                  "det = " + std::to_string(det)));

  out.push_back(guarded("roots/smith_form", "diagonal (1,1,1,1,1,3), transforms unimodular, cross-checked by determinantal divisors", [&rs] {
    SmithResult smith = smith_normal_form(rs.cartan());
    std::array<long long, kRank> by_minors = smith_diagonal_by_minors(rs.cartan());
    const std::array<long long, kRank> want{1, 1, 1, 1, 1, 3};
    for (int i = 0; i < kRank; ++i) {
      if (smith.d[i][i] != want[i]) throw std::runtime_error("unexpected diagonal");
      if (by_minors[i] != want[i]) throw std::runtime_error("minor oracle disagrees");
    }
    if (det_int(smith.u) != 1 && det_int(smith.u) != -1)
      throw std::runtime_error("row transform not unimodular");
    if (det_int(smith.v) != 1 && det_int(smith.v) != -1)
      throw std::runtime_error("column transform not unimodular");
  }));

  out.push_back(guarded(
      "roots/structure_constants",
      "support, antisymmetry, negation, extraspecial normalization, cyclic "
      "and four-term Jacobi identities hold on all root pairs",
      [&] { verify_structure_identities(rs, ws.constants()); }));

  bool dagger_ok = RootSystem::dagger_simple(0) == 5 &&
                   RootSystem::dagger_simple(2) == 4 &&
                   RootSystem::dagger_simple(1) == 1 &&
                   RootSystem::dagger_simple(3) == 3;
  for (int r = 0; r < rs.num_roots() && dagger_ok; ++r)
    dagger_ok = rs.dagger(rs.dagger(r)) == r;
  out.push_back(CheckRecord::make(
      "roots/diagram_involution", dagger_ok,
      "swaps nodes 1<->6 and 3<->5, fixes 2 and 4, squares to the identity"));

  return out;
}

std::vector<CheckRecord> check_weyl(const Workspace& ws) {
  std::vector<CheckRecord> out;
  const CaseContext& e6 = ws.ctx(false);
  const CaseContext& f4 = ws.ctx(true);

  out.push_back(CheckRecord::make(
      "weyl/order", e6.group.size() == 51840,
      "|W| = " + std::to_string(e6.group.size())));
  out.push_back(CheckRecord::make(
      "weyl/class_count", e6.group.num_classes() == 25,
      std::to_string(e6.group.num_classes()) + " conjugacy classes"));

  int w0 = find_longest(e6.group);
  out.push_back(CheckRecord::make("weyl/longest_element",
                                  e6.group.length[w0] == 36,
                                  "length of the longest element is 36"));

  std::vector<int> degs = degrees_from_poincare(e6.group, 6);
  std::sort(degs.begin(), degs.end());
  out.push_back(CheckRecord::make(
      "weyl/invariant_degrees", degs == std::vector<int>{2, 5, 6, 8, 9, 12},
      "degrees 2, 5, 6, 8, 9, 12 from the length generating function"));

  out.push_back(guarded("weyl/orthogonality",
                        "row and column orthogonality hold exactly",
                        [&] { e6.table.verify_orthogonality(e6.group); }));

  bool labels_ok = true;
  for (const char* name : {"phi_80_7", "phi_90_8", "phi_20_10", "phi_10_9"})
    labels_ok = labels_ok && e6.labels.row_by_name(name) >= 0;
  out.push_back(CheckRecord::make(
      "weyl/family_labels", labels_ok,
      "unique characters with (d,b) = (80,7), (90,8), (20,10), (10,9)"));

  out.push_back(CheckRecord::make(
      "weyl/fixed_subgroup_order", f4.group.size() == 1152,
      "|W^sigma| = " + std::to_string(f4.group.size())));
  out.push_back(CheckRecord::make(
      "weyl/fixed_subgroup_classes", f4.group.num_classes() == 25,
      std::to_string(f4.group.num_classes()) + " conjugacy classes"));

  std::vector<int> fdegs = degrees_from_poincare(f4.group, 4);
  std::sort(fdegs.begin(), fdegs.end());
  out.push_back(CheckRecord::make(
      "weyl/fixed_subgroup_degrees", fdegs == std::vector<int>{2, 6, 8, 12},
      "degrees 2, 6, 8, 12"));

  bool coxeter_ok = true;
  const int want[4][4] = {{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int ord = f4.group.elem_order[f4.group.id_of_word({i, j})];
      if (ord != want[i][j]) coxeter_ok = false;
    }
  out.push_back(CheckRecord::make(
      "weyl/fixed_subgroup_coxeter_matrix", coxeter_ok,
      "generator-pair orders follow the chain 3, 4, 3"));

  out.push_back(guarded("weyl/orthogonality_fixed",
                        "row and column orthogonality hold exactly",
                        [&] { f4.table.verify_orthogonality(f4.group); }));

  return out;
}

std::vector<CheckRecord> check_fourier(const Workspace& ws) {
  std::vector<CheckRecord> out;

  out.push_back(guarded(
      "fourier/pairing_axioms",
      "hermitian with square the identity for ambient groups 1, Z2, Z3, S3; "
      "symmetric whenever rational",
      [] {
        for (const char* name : {"1", "Z2", "Z3", "S3"})
          FourierMatrix::build(SmallGroup::by_name(name)).verify();
      }));

  const FourierMatrix& fm = ws.family_fourier();
  out.push_back(CheckRecord::make("fourier/family_size",
                                  fm.pair_names.size() == 8,
                                  "8 pairs in the family parameter set"));

  bool rational = true;
  for (const std::vector<Cyc3>& row : fm.entries)
    for (const Cyc3& e : row) rational = rational && e.is_rational();
  out.push_back(CheckRecord::make("fourier/real_symmetric", rational,
                                  "all entries rational (hence symmetric)"));

  int c1 = fm.index_of("g3:th");
  int c2 = fm.index_of("g3:th2");
  bool anchors = c1 >= 0 && c2 >= 0 &&
                 fm.rational_entry(c1, c1) == Rational(2, 3) &&
                 fm.rational_entry(c1, c2) == Rational(-1, 3);
  out.push_back(CheckRecord::make(
      "fourier/cuspidal_anchors", anchors,
      "{(g3,th),(g3,th)} = 2/3 and {(g3,th),(g3,th2)} = -1/3"));

  bool columns = c1 >= 0 && c2 >= 0;
  for (int row = 0; columns && row < static_cast<int>(fm.pair_names.size());
       ++row) {
    if (row == c1 || row == c2) continue;
    columns = fm.rational_entry(row, c1) == fm.rational_entry(row, c2);
  }
  out.push_back(CheckRecord::make(
      "fourier/cuspidal_columns_equal", columns,
      "the two cuspidal columns agree on every non-cuspidal row"));

  return out;
}

std::vector<CheckRecord> check_witness(const Workspace& ws, bool twisted) {
  std::vector<CheckRecord> out;
  const std::string prefix = case_name_of(twisted) + "/witness/";
  BorelCtx bc = ws.borel();

  UCoeffs u0 = regular_element(bc, twisted);
  out.push_back(CheckRecord::make(
      prefix + "u0_regular", is_regular_unipotent(u0),
      "nonzero coefficient on every simple root"));

  bool rational_ok = twisted ? word_is_twisted_stable(bc, regular_word(twisted))
                             : true;
  out.push_back(CheckRecord::make(
      prefix + "u0_rational", rational_ok,
      twisted ? "fixed by the graph twist composed with the field map"
              : "coefficients lie in the prime field of the split form"));

  bool curated_ok = false;
  try {
    WitnessSpec wit = resolve_witness(bc, twisted, &curated_ok);
    std::string why;
    bool holds = verify_witness(bc, twisted, wit, &why);
    out.push_back(CheckRecord::make(
        prefix + "conjugating_pair", holds,
        holds ? (curated_ok ? "curated pair verified exactly: (ut) u0 (ut)^-1 "
                              "= u0^-1 on the rational form"
                            : "curated pair failed; bounded search found a "
                              "verified pair (convention flag)")
              : why));
  } catch (const std::exception& e) {
    out.push_back(CheckRecord::make(prefix + "conjugating_pair", false,
                                    e.what()));
  }

  return out;
}

bool CaseOutcome::all_passed() const {
  for (const CheckRecord& r : records)
    if (r.status != "pass") return false;
  return true;
}

CaseOutcome run_case_pipeline(const Workspace& ws, bool twisted,
                              const RunConfig& cfg) {
  CaseOutcome oc;
  oc.case_name = case_name_of(twisted);
  const CaseContext& cc = ws.ctx(twisted);
  const std::string prefix = oc.case_name + "/";
  const std::string data_dir =
      cfg.data_dir.empty() ? default_data_dir() : cfg.data_dir;

  for (CheckRecord& r : check_witness(ws, twisted)) {
    oc.records.push_back(r);
  }
  oc.witness_ok = oc.all_passed();

  HeckeAlgebra h(cc.group, cc.param_degrees);
  oc.records.push_back(guarded(
      prefix + "hecke/defining_relations",
      "quadratic relation per generator and braid relation per pair",
      [&] { verify_hecke_relations(h); }));

  Roster roster;
  HeckeData data;
  try {
    roster = Roster::load(roster_path(data_dir, twisted));
    data = HeckeData::load(hecke_path(data_dir, twisted));
    oc.records.push_back(CheckRecord::make(prefix + "data/loaded", true,
                                           "roster and trace tables parsed"));
  } catch (const std::exception& e) {
    oc.records.push_back(CheckRecord::make(prefix + "data/loaded", false,
                                           e.what()));
    return oc;
  }

  oc.records.push_back(guarded(
      prefix + "data/roster_valid",
      "30 slots, 25 principal-series, family slots and coefficient pattern "
      "match the computed Fourier matrix",
      [&] { validate_roster(roster, cc.labels, ws.family_fourier(), twisted); }));

  oc.records.push_back(guarded(
      prefix + "data/trace_table_valid",
      "labels resolve, class words land on the distinguished class, every "
      "entry specializes at q = 1 to the character value, one-dimensional "
      "rows forced, family combination is 3*q^3, induced-module oracle agrees",
      [&] { validate_hecke_data(data, cc.table, cc.labels, h, cc.cox_id,
                                twisted); }));

  LaurentPoly index_trace;
  int index_row = data.row_by_name("phi_1_0");
  if (index_row >= 0) index_trace = data.traces[index_row];
  oc.records.push_back(CheckRecord::make(
      prefix + "hecke/index_trace", index_trace == LaurentPoly::q_power(6),
      "trace of the distinguished element on the index module is q^6"));

  oc.records.push_back(CheckRecord::make(
      prefix + "chi/orthonormal", CuspidalFunctionTable::build().orthonormal(),
      "Gram matrix of the two cuspidal functions with centralizer order "
      "3*q^6 per regular class is the identity"));

  if (!oc.all_passed()) return oc;

  oc.solution = determine_xi(roster, ws.family_fourier(), data, oc.witness_ok,
                             cfg.q_samples);
  for (const DerivationStep& step : oc.solution.log)
    oc.records.push_back(CheckRecord::make(prefix + "scalar/" + step.name,
                                           step.passed, step.details));
  oc.records.push_back(CheckRecord::make(
      prefix + "scalar/sign_positive", oc.solution.ok && oc.solution.xi == 1,
      "the scalar relating the cuspidal characteristic functions to the "
      "almost characters is +1"));

  if (!oc.solution.ok) return oc;

  try {
    oc.table = value_table(roster, ws.family_fourier(), oc.solution.xi);
  } catch (const std::exception& e) {
    oc.records.push_back(
        CheckRecord::make(prefix + "values/table", false, e.what()));
    return oc;
  }

  bool pattern_ok = oc.table.size() == 30;
  bool integral_ok = true;
  const LaurentPoly two_thirds(Rational(2, 3), 3);
  const LaurentPoly third(Rational(1, 3), 3);
  for (const ValueRow& row : oc.table) {
    int idx = roster.index_of(row.label);
    const RosterEntry& e = roster.entries[idx];
    LaurentPoly want;
    if (e.label == "phi_1_0") want = LaurentPoly(1);
    else if (e.mpair == "1:1" || e.mpair == "1:eps") want = two_thirds;
    else if (e.mpair == "1:r" || e.mpair == "g3:1") want = LaurentPoly() - two_thirds;
    else if (e.mpair == "g3:th" || e.mpair == "g3:th2") want = third;
    if (!(row.value == want)) pattern_ok = false;
    for (long q : cfg.q_samples)
      if (row.value.evaluate(Rational(q)).get_den() != 1) integral_ok = false;
  }
  oc.records.push_back(CheckRecord::make(
      prefix + "values/pattern", pattern_ok,
      "30 rows; 1 on the trivial slot, 2/3*q^3 on the (1,1) and (1,eps) "
      "slots, -2/3*q^3 on the (1,r) and (g3,1) slots, 1/3*q^3 on the "
      "cuspidal slots, 0 elsewhere"));
  oc.records.push_back(CheckRecord::make(
      prefix + "values/integrality", integral_ok,
      "every value is a rational integer at q = " + join_longs(cfg.q_samples)));

  return oc;
}

bool FullReport::all_passed() const {
  for (const CheckRecord& r : checks)
    if (r.status != "pass") return false;
  for (const CaseOutcome& oc : outcomes)
    if (!oc.all_passed()) return false;
  return true;
}

FullReport run_full_report(const Workspace& ws, const RunConfig& cfg) {
  FullReport rep;
  rep.config = cfg;
  if (rep.config.data_dir.empty()) rep.config.data_dir = default_data_dir();

  for (bool twisted : cfg.cases()) {
    for (const std::string& path :
         {hecke_path(rep.config.data_dir, twisted),
          roster_path(rep.config.data_dir, twisted)}) {
      std::string name = path.substr(path.find_last_of('/') + 1);
      try {
        rep.digests[name] = "fnv1a64:" + hex64(fnv1a64_file(path));
      } catch (const std::exception&) {
        rep.digests[name] = "unreadable";
      }
    }
  }

  for (CheckRecord& r : check_root_datum(ws)) rep.checks.push_back(r);
  for (CheckRecord& r : check_weyl(ws)) rep.checks.push_back(r);
  for (CheckRecord& r : check_fourier(ws)) rep.checks.push_back(r);

  std::vector<bool> cases = cfg.cases();
  if (cfg.jobs > 1 && cases.size() > 1) {
    std::vector<std::future<CaseOutcome>> futs;
    for (bool twisted : cases)
      futs.push_back(std::async(std::launch::async, [&ws, twisted, &cfg] {
        return run_case_pipeline(ws, twisted, cfg);
      }));
    for (auto& f : futs) rep.outcomes.push_back(f.get());
  } else {
    for (bool twisted : cases)
      rep.outcomes.push_back(run_case_pipeline(ws, twisted, cfg));
  }

  return rep;
}

std::string FullReport::to_json() const {
  ordered_json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["config"] = {{"case", config.case_filter},
                   {"data_dir", config.data_dir},
                   {"format", config.format},
                   {"q_samples", config.q_samples},
                   {"jobs", config.jobs}};
  ordered_json digests_json = ordered_json::object();
  for (const auto& [name, digest] : digests) digests_json[name] = digest;
  doc["data_digests"] = digests_json;

  ordered_json checks_arr = ordered_json::array();
  int total = 0, failed = 0;
  auto add_record = [&](const CheckRecord& r) {
    checks_arr.push_back(ordered_json{{"name", r.name},
                                      {"status", r.status},
                                      {"details", r.details}});
    ++total;
    if (r.status != "pass") ++failed;
  };
  for (const CheckRecord& r : checks) add_record(r);

  ordered_json cases_arr = ordered_json::array();
  for (const CaseOutcome& oc : outcomes) {
    ordered_json case_json;
    case_json["case"] = oc.case_name;
    case_json["xi"] = oc.solution.ok ? ordered_json(oc.solution.xi)
                                     : ordered_json(nullptr);
    case_json["m_polynomial"] = oc.solution.m.str();
    ordered_json case_checks = ordered_json::array();
    for (const CheckRecord& r : oc.records) {
      case_checks.push_back(ordered_json{{"name", r.name},
                                         {"status", r.status},
                                         {"details", r.details}});
      ++total;
      if (r.status != "pass") ++failed;
    }
    case_json["checks"] = case_checks;
    ordered_json values = ordered_json::array();
    for (const ValueRow& row : oc.table)
      values.push_back(ordered_json{
          {"label", row.label},
          {"value", row.value.str()},
          {"at_q3", row.value.evaluate(Rational(3)).get_str()}});
    case_json["values"] = values;
    cases_arr.push_back(case_json);
  }

  doc["checks"] = checks_arr;
  doc["cases"] = cases_arr;
  doc["summary"] = {{"checks_total", total},
                    {"checks_failed", failed},
                    {"status", failed == 0 ? "pass" : "fail"}};
  return doc.dump(2) + "\n";
}

std::string value_table_tsv(const std::vector<ValueRow>& table) {
  std::ostringstream os;
  os << "# columns: label, value at the distinguished regular unipotent "
        "element, value at q = 3\n";
  for (const ValueRow& row : table)
    os << row.label << '\t' << row.value.str() << '\t'
       << row.value.evaluate(Rational(3)).get_str() << '\n';
  return os.str();
}

std::string checks_json(const std::vector<CheckRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const CheckRecord& r : records)
    arr.push_back(ordered_json{{"name", r.name},
                               {"status", r.status},
                               {"details", r.details}});
  return arr.dump(2) + "\n";
}

}  // namespace e6char
