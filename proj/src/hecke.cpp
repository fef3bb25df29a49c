#include "e6char/hecke.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace e6char {

HeckeAlgebra::HeckeAlgebra(const GroupArena& w, std::vector<int> param_deg)
    : m_w(&w), m_deg(std::move(param_deg)) {
  if (static_cast<int>(m_deg.size()) != w.n_gens)
    throw std::invalid_argument("one parameter degree per generator");
  for (int d : m_deg)
    if (d <= 0) throw std::invalid_argument("parameter degrees are positive");
}

HeckeAlgebra::Elt HeckeAlgebra::basis(int id) {
  Elt e;
  e.emplace(id, LaurentPoly(1));
  return e;
}

HeckeAlgebra::Elt HeckeAlgebra::mul_gen_left(int s, const Elt& x) const {
  const GroupArena& w = *m_w;
  Elt out;
  const LaurentPoly qs = LaurentPoly::q_power(m_deg[s]);
  const LaurentPoly qs_minus_one = qs - LaurentPoly(1);
  for (const auto& [id, coeff] : x) {
    int sid = w.left_cayley[static_cast<std::size_t>(id) * w.n_gens + s];
    if (w.length[sid] > w.length[id]) {
      out[sid] += coeff;
    } else {
      out[sid] += qs * coeff;
      out[id] += qs_minus_one * coeff;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::vector<int> HeckeAlgebra::left_word(int id) const {
  const GroupArena& w = *m_w;
  std::vector<int> word;
  while (id != 0) {
    int pick = -1;
    for (int s = 0; s < w.n_gens; ++s) {
      int sid = w.left_cayley[static_cast<std::size_t>(id) * w.n_gens + s];
      if (w.length[sid] < w.length[id]) {
        pick = s;
        id = sid;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("no left descent below a nontrivial element");
    word.push_back(pick);
  }
  return word;
}

HeckeAlgebra::Elt HeckeAlgebra::mul_basis_left(int id, const Elt& x) const {
  std::vector<int> word = left_word(id);
  Elt acc = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = mul_gen_left(*it, acc);
  return acc;
}

HeckeAlgebra::Elt HeckeAlgebra::mul(const Elt& a, const Elt& b) const {
  Elt acc;
  for (const auto& [id, coeff] : a) {
    Elt part = mul_basis_left(id, b);
    for (const auto& [pid, pcoeff] : part) acc[pid] += coeff * pcoeff;
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

int HeckeAlgebra::weight(int id) const {
  int acc = 0;
  for (int s : left_word(id)) acc += m_deg[s];
  return acc;
}

std::vector<int> HeckeAlgebra::parabolic_elements(const std::vector<int>& J) const {
  const GroupArena& w = *m_w;
  std::vector<int> elems{0};
  std::set<int> seen{0};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (int j : J) {
      int nxt = w.right_cayley[static_cast<std::size_t>(elems[head]) * w.n_gens + j];
      if (seen.insert(nxt).second) elems.push_back(nxt);
    }
  return elems;
}

LaurentPoly HeckeAlgebra::induced_trace(const Elt& h, const std::vector<int>& J,
                                        bool sign_rep) const {
  const GroupArena& w = *m_w;
  // minimal coset representatives: no right descent inside J
  std::vector<int> reps;
  for (std::size_t e = 0; e < w.size(); ++e) {
    bool minimal = true;
    for (int j : J) {
      int ej = w.right_cayley[e * w.n_gens + j];
      if (w.length[ej] < w.length[e]) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(static_cast<int>(e));
  }

  LaurentPoly trace;
  for (int x : reps) {
    Elt image = mul(h, basis(x));
    for (const auto& [y, coeff] : image) {
      int yy = y;
      int sign_steps = 0, weight_steps = 0;
      for (;;) {
        int pick = -1;
        for (int j : J) {
          int yj = w.right_cayley[static_cast<std::size_t>(yy) * w.n_gens + j];
          if (w.length[yj] < w.length[yy]) {
            pick = j;
            yy = yj;
            break;
          }
        }
        if (pick < 0) break;
        ++sign_steps;
        weight_steps += m_deg[pick];
      }
      if (yy != x) continue;  // off-diagonal in the coset basis
      if (sign_rep)
        trace += (sign_steps % 2 ? -coeff : coeff);
      else
        trace += coeff * LaurentPoly::q_power(weight_steps);
    }
  }
  return trace;
}

long long HeckeAlgebra::induced_multiplicity(const CharacterTable& t, int row,
                                             const std::vector<int>& J,
                                             bool sign_rep) const {
  const GroupArena& w = *m_w;
  std::vector<int> elems = parabolic_elements(J);
  long long acc = 0;
  for (int e : elems) {
    long long lam = sign_rep ? (w.length[e] % 2 ? -1 : 1) : 1;
    acc += lam * t.value(row, w.class_of[e]);
  }
  long long order = static_cast<long long>(elems.size());
  if (acc % order != 0)
    throw std::logic_error("induction multiplicity is not integral");
  return acc / order;
}

void verify_hecke_relations(const HeckeAlgebra& h) {
  const GroupArena& w = h.group();
  for (int s = 0; s < w.n_gens; ++s) {
    int sid = w.id_of_word({s});
    HeckeAlgebra::Elt square = h.mul_gen_left(s, HeckeAlgebra::basis(sid));
    const LaurentPoly qs = LaurentPoly::q_power(h.param_degrees()[s]);
    HeckeAlgebra::Elt expect;
    expect[sid] = qs - LaurentPoly(1);
    expect[0] = qs;
    if (!(square == expect))
      throw std::logic_error("quadratic relation fails for a generator");
  }
  for (int s = 0; s < w.n_gens; ++s)
    for (int t = s + 1; t < w.n_gens; ++t) {
      int m = w.elem_order[w.id_of_word({s, t})];
      std::vector<int> ws_word, wt_word;
      for (int i = 0; i < m; ++i) {
        ws_word.push_back(i % 2 ? t : s);
        wt_word.push_back(i % 2 ? s : t);
      }
      HeckeAlgebra::Elt lhs = HeckeAlgebra::unit(), rhs = HeckeAlgebra::unit();
      for (auto it = ws_word.rbegin(); it != ws_word.rend(); ++it)
        lhs = h.mul_gen_left(*it, lhs);
      for (auto it = wt_word.rbegin(); it != wt_word.rend(); ++it)
        rhs = h.mul_gen_left(*it, rhs);
      if (!(lhs == rhs))
        throw std::logic_error("braid relation fails for a generator pair");
    }
}

LaurentPoly coxeter_trace_row(const CharacterTable& t, int row,
                              const std::vector<int>& gen_classes,
                              const std::vector<int>& param_deg, int cox_class) {
  const long long dim = t.degrees[row];
  long long num = 0;
  for (std::size_t s = 0; s < gen_classes.size(); ++s)
    num += param_deg[s] * (dim + t.value(row, gen_classes[s]));
  const long long value = t.value(row, cox_class);
  if (num % (2 * dim) != 0) {
    // a fractional eigenvalue exponent forces a vanishing trace
    if (value != 0)
      throw std::logic_error("fractional twist exponent with nonzero trace");
    return LaurentPoly();
  }
  if (value == 0) return LaurentPoly();
  return LaurentPoly(Rational(static_cast<long>(value)),
                     static_cast<int>(num / (2 * dim)));
}

int HeckeData::row_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

HeckeData HeckeData::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace table: " + path);
  HeckeData d;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("case:");
      if (pos != std::string::npos) {
        std::string tail = line.substr(pos + 5);
        std::string word;
        std::istringstream(tail) >> word;
        if (!word.empty()) {
          if (!d.case_name.empty() && d.case_name != word)
            throw std::runtime_error("conflicting case headers in " + path);
          d.case_name = word;
        }
      }
      continue;
    }
    std::istringstream ss(line);
    std::string name, word_text, trace_text;
    if (!std::getline(ss, name, '\t') || !std::getline(ss, word_text, '\t') ||
        !std::getline(ss, trace_text))
      throw std::runtime_error("malformed trace table row: " + line);
    std::vector<int> word;
    std::istringstream ws(word_text);
    std::string item;
    while (std::getline(ws, item, ',')) {
      int s = std::stoi(item);
      if (s < 1) throw std::runtime_error("generator indices are one-based: " + line);
      word.push_back(s - 1);
    }
    if (word.empty())
      throw std::runtime_error("empty class word: " + line);
    d.names.push_back(name);
    d.class_words.push_back(std::move(word));
    d.traces.push_back(LaurentPoly::parse(trace_text));
  }
  if (d.case_name.empty())
    throw std::runtime_error("trace table lacks a case header: " + path);
  if (d.case_name != "e6" && d.case_name != "2e6")
    throw std::runtime_error("unknown case header: " + d.case_name);
  return d;
}

HeckeData HeckeData::compute(const CharacterTable& t, const LabeledCharacters& lc,
                             const GroupArena& w,
                             const std::vector<int>& param_deg,
                             const std::vector<int>& cox_word,
                             const std::string& case_name) {
  std::vector<int> gen_classes;
  for (int s = 0; s < w.n_gens; ++s)
    gen_classes.push_back(w.class_of[w.id_of_word({s})]);
  const int cox_class = w.class_of[w.id_of_word(cox_word)];

  HeckeData d;
  d.case_name = case_name;
  for (int row : lc.display_order) {
    d.names.push_back(lc.names[row]);
    d.class_words.push_back(cox_word);
    d.traces.push_back(
        coxeter_trace_row(t, row, gen_classes, param_deg, cox_class));
  }
  return d;
}

void HeckeData::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace table: " + path);
  out << "# case: " << case_name << "\n";
  out << "# columns: label, class word (one-based generator indices), trace\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << names[i] << '\t';
    for (std::size_t j = 0; j < class_words[i].size(); ++j)
      out << (j ? "," : "") << class_words[i][j] + 1;
    out << '\t' << traces[i].data_str() << '\n';
  }
  if (!out) throw std::runtime_error("failed writing trace table: " + path);
}

LaurentPoly family_trace_combination(const HeckeData& data, bool twisted) {
  auto row = [&data](const char* name) {
    int r = data.row_by_name(name);
    if (r < 0) throw std::runtime_error(std::string("missing trace row ") + name);
    return data.traces[r];
  };
  if (twisted) return row("phi_12_4") - row("phi_6_6_p") - row("phi_6_6_pp");
  return row("phi_80_7") + row("phi_20_10") - row("phi_90_8") - row("phi_10_9");
}

void validate_hecke_data(const HeckeData& data, const CharacterTable& t,
                         const LabeledCharacters& lc, const HeckeAlgebra& h,
                         int cox_id, bool twisted) {
  const GroupArena& w = h.group();
  const int k = t.num_chars();
  const std::string expect_case = twisted ? "2e6" : "e6";
  if (data.case_name != expect_case)
    throw std::runtime_error("trace table is for case " + data.case_name +
                             ", expected " + expect_case);
  if (static_cast<int>(data.names.size()) != k)
    throw std::runtime_error("trace table has the wrong number of rows");
  std::set<std::string> seen(data.names.begin(), data.names.end());
  if (static_cast<int>(seen.size()) != k)
    throw std::runtime_error("trace table has duplicate rows");

  const int cox_class = w.class_of[cox_id];
  std::vector<int> table_row(k);
  for (int i = 0; i < k; ++i) {
    int row = lc.row_by_name(data.names[i]);
    if (row < 0)
      throw std::runtime_error("unknown character label: " + data.names[i]);
    table_row[i] = row;
    for (int s : data.class_words[i])
      if (s < 0 || s >= w.n_gens)
        throw std::runtime_error("class word out of range for " + data.names[i]);
    int elem = w.id_of_word(data.class_words[i]);
    if (w.class_of[elem] != cox_class)
      throw std::runtime_error("class word off the distinguished class for " +
                               data.names[i]);
    if (!(data.traces[i].at_one() ==
          Rational(static_cast<long>(t.value(row, cox_class)))))
      throw std::runtime_error("specialization mismatch for " + data.names[i]);
  }

  // the two one-dimensional rows are forced directly by the defining
  // relations: all-(q^deg) and all-(-1)
  {
    int idx = data.row_by_name("phi_1_0");
    if (idx < 0 || !(data.traces[idx] == LaurentPoly::q_power(h.weight(cox_id))))
      throw std::runtime_error("index row mismatch");
    const char* sign_name = twisted ? "phi_1_24" : "phi_1_36";
    int sgn = data.row_by_name(sign_name);
    LaurentPoly expect(w.length[cox_id] % 2 ? -1 : 1);
    if (sgn < 0 || !(data.traces[sgn] == expect))
      throw std::runtime_error("sign row mismatch");
  }

  if (!(family_trace_combination(data, twisted) ==
        LaurentPoly(Rational(3), 3)))
    throw std::runtime_error("family combination is not 3 q^3");

  // induced-module traces, computed structurally on the coset basis and
  // compared with the multiplicity-weighted sum of table rows
  std::vector<std::vector<int>> parabolics;
  if (twisted) {
    parabolics = {{0, 1, 2}, {1, 2, 3}};
  } else {
    parabolics = {{1, 2, 3, 4, 5}, {0, 2, 3, 4, 5}};
  }
  const HeckeAlgebra::Elt tc = HeckeAlgebra::basis(cox_id);
  for (const std::vector<int>& J : parabolics)
    for (bool sign_rep : {false, true}) {
      LaurentPoly direct = h.induced_trace(tc, J, sign_rep);
      LaurentPoly via_rows;
      for (int i = 0; i < k; ++i) {
        long long m = h.induced_multiplicity(t, table_row[i], J, sign_rep);
        if (m == 0) continue;
        via_rows += LaurentPoly(Rational(static_cast<long>(m)), 0) * data.traces[i];
      }
      if (!(direct == via_rows))
        throw std::runtime_error("induced trace oracle mismatch");
    }
}

}  // namespace e6char
