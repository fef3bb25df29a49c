#include "e6char/fourier.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace e6char {

int SmallGroup::conjugate(int g, int x) const {
  return mul[mul[g][x]][inv[g]];
}

int SmallGroup::element_order(int x) const {
  int acc = x, n = 1;
  while (acc != 0) {
    acc = mul[acc][x];
    ++n;
  }
  return n;
}

namespace {

// characters of a subgroup H (all centralizers here are trivial, Z2, Z3
// or the whole S3); values are stored indexed by ambient element id.
// For a cyclic subgroup of order 3 the naming is pinned by a designated
// generator: th(generator) = t3.
void subgroup_characters(const SmallGroup& g, const std::vector<int>& h,
                         int designated_generator,
                         std::vector<std::string>* names,
                         std::vector<std::vector<Cyc3>>* values) {
  names->clear();
  values->clear();
  auto blank = [&] { return std::vector<Cyc3>(g.order, Cyc3(0)); };
  const int n = static_cast<int>(h.size());
  if (n == 1) {
    names->push_back("1");
    values->push_back(blank());
    values->back()[0] = Cyc3(1);
    return;
  }
  if (n == 2) {
    int t = h[0] == 0 ? h[1] : h[0];
    names->assign({"1", "eps"});
    values->assign(2, blank());
    (*values)[0][0] = Cyc3(1);
    (*values)[0][t] = Cyc3(1);
    (*values)[1][0] = Cyc3(1);
    (*values)[1][t] = Cyc3(-1);
    return;
  }
  if (n == 3) {
    int x = designated_generator;
    if (x == 0 || g.element_order(x) != 3)
      throw std::logic_error("order-3 centralizer needs a designated generator");
    int x2 = g.mul[x][x];
    names->assign({"1", "th", "th2"});
    values->assign(3, blank());
    for (int k = 0; k < 3; ++k) (*values)[k][0] = Cyc3(1);
    (*values)[0][x] = Cyc3(1);
    (*values)[0][x2] = Cyc3(1);
    (*values)[1][x] = Cyc3::omega();
    (*values)[1][x2] = Cyc3::omega2();
    (*values)[2][x] = Cyc3::omega2();
    (*values)[2][x2] = Cyc3::omega();
    return;
  }
  if (n == 6) {
    // nonabelian of order 6: trivial, two-dimensional, sign
    names->assign({"1", "r", "eps"});
    values->assign(3, blank());
    for (int e : h) {
      int ord = g.element_order(e);
      (*values)[0][e] = Cyc3(1);
      (*values)[1][e] = Cyc3(ord == 1 ? 2 : (ord == 2 ? 0 : -1));
      (*values)[2][e] = Cyc3(ord == 2 ? -1 : 1);
    }
    return;
  }
  throw std::logic_error("unsupported centralizer order");
}

void finish_group(SmallGroup* g) {
  const int n = g->order;
  g->inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g->mul[a][b] == 0) g->inv[a] = b;

  // conjugacy classes by closure
  g->class_of.assign(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (g->class_of[x] >= 0) continue;
    std::set<int> cls;
    for (int c = 0; c < n; ++c) cls.insert(g->conjugate(c, x));
    int id = static_cast<int>(classes.size());
    classes.emplace_back(cls.begin(), cls.end());
    for (int e : cls) g->class_of[e] = id;
  }
  std::vector<int> order(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    order[c] = static_cast<int>(c);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int oa = g->element_order(classes[a][0]);
    int ob = g->element_order(classes[b][0]);
    if (oa != ob) return oa < ob;
    return classes[a][0] < classes[b][0];
  });

  g->class_rep.clear();
  g->class_names.clear();
  std::vector<int> new_of(n);
  std::map<int, int> seen_order;
  for (int c : order) {
    int rep = classes[c][0];
    int idx = static_cast<int>(g->class_rep.size());
    g->class_rep.push_back(rep);
    for (int e : classes[c]) new_of[e] = idx;
    int eo = g->element_order(rep);
    int repeat = seen_order[eo]++;
    std::string nm = eo == 1 ? "1" : "g" + std::to_string(eo);
    if (repeat > 0) nm += std::string(static_cast<std::size_t>(repeat), 'b');
    g->class_names.push_back(nm);
  }
  g->class_of = new_of;

  // centralizer of each class representative, with its characters
  g->centralizers.clear();
  g->cent_char_names.clear();
  g->cent_char_values.clear();
  for (std::size_t c = 0; c < g->class_rep.size(); ++c) {
    int x = g->class_rep[c];
    std::vector<int> h;
    for (int e = 0; e < n; ++e)
      if (g->mul[e][x] == g->mul[x][e]) h.push_back(e);
    int gen = x;
    if (static_cast<int>(h.size()) == 3 && g->element_order(x) != 3) {
      gen = -1;  // ambient cyclic of order 3 centralizing its identity
      for (int e : h)
        if (g->element_order(e) == 3 && (gen < 0 || e < gen)) gen = e;
    }
    std::vector<std::string> names;
    std::vector<std::vector<Cyc3>> values;
    subgroup_characters(*g, h, gen, &names, &values);
    g->centralizers.push_back(std::move(h));
    g->cent_char_names.push_back(std::move(names));
    g->cent_char_values.push_back(std::move(values));
  }
}

}  // namespace

SmallGroup SmallGroup::trivial() {
  SmallGroup g;
  g.name = "1";
  g.order = 1;
  g.mul = {{0}};
  finish_group(&g);
  return g;
}

SmallGroup SmallGroup::cyclic(int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("cyclic order must be 2 or 3");
  SmallGroup g;
  g.name = "Z" + std::to_string(n);
  g.order = n;
  g.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  finish_group(&g);
  return g;
}

SmallGroup SmallGroup::symmetric3() {
  SmallGroup g;
  g.name = "S3";
  g.order = 6;
  // permutations of three points in lexicographic order
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    throw std::logic_error("permutation lookup");
  };
  g.mul.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int p[3];
      for (int i = 0; i < 3; ++i) p[i] = perms[a][perms[b][i]];
      g.mul[a][b] = find(p);
    }
  finish_group(&g);
  return g;
}

SmallGroup SmallGroup::by_name(const std::string& name) {
  std::string key;
  for (char ch : name) key.push_back(static_cast<char>(std::toupper(
      static_cast<unsigned char>(ch))));
  if (key == "1") return trivial();
  if (key == "Z2") return cyclic(2);
  if (key == "Z3") return cyclic(3);
  if (key == "S3") return symmetric3();
  throw std::invalid_argument("unknown family group: " + name);
}

int FourierMatrix::index_of(const std::string& pair_name) const {
  for (std::size_t i = 0; i < pair_names.size(); ++i)
    if (pair_names[i] == pair_name) return static_cast<int>(i);
  return -1;
}

Rational FourierMatrix::rational_entry(int i, int j) const {
  const Cyc3& e = entries[i][j];
  if (!e.is_rational()) throw std::logic_error("irrational pairing entry");
  return e.a;
}

FourierMatrix FourierMatrix::build(const SmallGroup& g) {
  FourierMatrix m;
  m.group_name = g.name;
  struct Pair {
    int cls, chr;
  };
  std::vector<Pair> pairs;
  for (std::size_t c = 0; c < g.class_rep.size(); ++c)
    for (std::size_t k = 0; k < g.cent_char_names[c].size(); ++k) {
      pairs.push_back({static_cast<int>(c), static_cast<int>(k)});
      m.pair_names.push_back(g.class_names[c] + ":" + g.cent_char_names[c][k]);
    }

  const std::size_t np = pairs.size();
  m.entries.assign(np, std::vector<Cyc3>(np, Cyc3(0)));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      const int x = g.class_rep[pairs[i].cls];
      const int y = g.class_rep[pairs[j].cls];
      const auto& sigma = g.cent_char_values[pairs[i].cls][pairs[i].chr];
      const auto& tau = g.cent_char_values[pairs[j].cls][pairs[j].chr];
      Cyc3 sum(0);
      for (int e = 0; e < g.order; ++e) {
        int yy = g.conjugate(e, y);
        if (g.mul[x][yy] != g.mul[yy][x]) continue;
        int xx = g.conjugate(g.inv[e], x);
        sum += sigma[yy].conj() * tau[xx];
      }
      long cx = static_cast<long>(g.centralizers[pairs[i].cls].size());
      long cy = static_cast<long>(g.centralizers[pairs[j].cls].size());
      Rational scale(1, cx * cy);
      m.entries[i][j] = Cyc3(sum.a * scale, sum.b * scale);
    }
  return m;
}

void FourierMatrix::verify() const {
  const std::size_t n = pair_names.size();
  bool all_rational = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!entries[i][j].is_rational()) all_rational = false;
      if (!(entries[i][j] == entries[j][i].conj()))
        throw std::logic_error("pairing matrix is not hermitian");
    }
  if (all_rational)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(entries[i][j] == entries[j][i]))
          throw std::logic_error("rational pairing matrix is not symmetric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyc3 acc(0);
      for (std::size_t k = 0; k < n; ++k) acc += entries[i][k] * entries[k][j];
      if (!(acc == Cyc3(i == j ? 1 : 0)))
        throw std::logic_error("pairing matrix is not involutive");
    }
}

}  // namespace e6char
