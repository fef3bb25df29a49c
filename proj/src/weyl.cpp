#include "e6char/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <stdexcept>

#include "e6char/kernels.hpp"

namespace e6char {

Perm perm_identity(int n) {
  Perm r;
  for (int i = 0; i < n; ++i) r.p[i] = static_cast<uint8_t>(i);
  return r;
}

Perm perm_compose(const Perm& a, const Perm& b, int n) {
  Perm r;
  kernels::compose_u8(a.p.data(), b.p.data(), r.p.data(), n);
  return r;
}

Perm perm_inverse(const Perm& a, int n) {
  Perm r;
  for (int i = 0; i < n; ++i) r.p[a.p[i]] = static_cast<uint8_t>(i);
  return r;
}

bool perm_equal(const Perm& a, const Perm& b, int n) {
  return std::memcmp(a.p.data(), b.p.data(), static_cast<std::size_t>(n)) == 0;
}

uint64_t perm_hash(const Perm& a, int n) {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n; ++i) {
    h ^= a.p[i];
    h *= 1099511628211ull;
  }
  return h;
}

int GroupArena::id_of(const Perm& q) const {
  auto it = m_lookup.find(perm_hash(q, n_points));
  if (it == m_lookup.end()) return -1;
  for (int32_t id : it->second)
    if (perm_equal(elems[id], q, n_points)) return id;
  return -1;
}

int GroupArena::compose_ids(int a, int b) const {
  int id = id_of(perm_compose(elems[a], elems[b], n_points));
  if (id < 0) throw std::logic_error("composite escaped the enumerated group");
  return id;
}

int GroupArena::conjugate_by_gen(int id, int g) const {
  Perm t = perm_compose(elems[id], gens[g], n_points);
  int r = id_of(perm_compose(gens[g], t, n_points));
  if (r < 0) throw std::logic_error("conjugate escaped the enumerated group");
  return r;
}

int GroupArena::id_of_word(const std::vector<int>& gen_word) const {
  int id = 0;
  for (int g : gen_word) id = right_cayley[static_cast<std::size_t>(id) * n_gens + g];
  return id;
}

int GroupArena::length_of_perm(const Perm& q) const {
  uint8_t buf[40] = {0};
  int m = static_cast<int>(unit_reps.size());
  for (int u = 0; u < m; ++u) buf[u] = q.p[unit_reps[u]];
  return static_cast<int>(kernels::count_ge_u8(
      buf, static_cast<std::size_t>(m), static_cast<uint8_t>(n_points / 2)));
}

GroupArena GroupArena::enumerate(int n_points, std::vector<Perm> gens,
                                 std::vector<uint8_t> unit_reps) {
  GroupArena g;
  g.n_points = n_points;
  g.n_gens = static_cast<int>(gens.size());
  g.gens = std::move(gens);
  g.unit_reps = std::move(unit_reps);

  Perm id = perm_identity(n_points);
  for (const Perm& s : g.gens)
    if (!perm_equal(perm_compose(s, s, n_points), id, n_points))
      throw std::invalid_argument("generators must be involutions");

  auto insert = [&g](const Perm& q) {
    int eid = static_cast<int>(g.elems.size());
    g.elems.push_back(q);
    g.m_lookup[perm_hash(q, g.n_points)].push_back(eid);
    return eid;
  };

  insert(id);
  for (std::size_t head = 0; head < g.elems.size(); ++head) {
    Perm cur = g.elems[head];  // copy: the arena vector may reallocate
    for (int s = 0; s < g.n_gens; ++s) {
      Perm nxt = perm_compose(cur, g.gens[s], n_points);
      int nid = g.id_of(nxt);
      if (nid < 0) nid = insert(nxt);
      g.right_cayley.push_back(nid);
    }
  }

  const int order = static_cast<int>(g.elems.size());
  g.left_cayley.resize(static_cast<std::size_t>(order) * g.n_gens);
  g.inv_id.resize(order);
  g.length.resize(order);
  g.elem_order.resize(order);
  for (int e = 0; e < order; ++e) {
    for (int s = 0; s < g.n_gens; ++s) {
      int nid = g.id_of(perm_compose(g.gens[s], g.elems[e], n_points));
      if (nid < 0) throw std::logic_error("left product escaped the group");
      g.left_cayley[static_cast<std::size_t>(e) * g.n_gens + s] = nid;
    }
    g.inv_id[e] = g.id_of(perm_inverse(g.elems[e], n_points));
    g.length[e] = static_cast<int16_t>(g.length_of_perm(g.elems[e]));
    // element order = lcm of cycle lengths of the faithful root action
    std::array<bool, 80> seen{};
    long long ord = 1;
    for (int i = 0; i < n_points; ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      do {
        seen[j] = true;
        j = g.elems[e].p[j];
        ++len;
      } while (j != i);
      ord = std::lcm(ord, static_cast<long long>(len));
    }
    g.elem_order[e] = static_cast<int16_t>(ord);
    g.exponent = std::lcm(g.exponent, ord);
  }

  // conjugacy classes by generator-conjugation closure
  std::vector<int32_t> cls(order, -1);
  std::vector<std::vector<int32_t>> members;
  for (int e = 0; e < order; ++e) {
    if (cls[e] >= 0) continue;
    int c = static_cast<int>(members.size());
    members.emplace_back();
    cls[e] = c;
    std::vector<int32_t> stack{e};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members[c].push_back(x);
      for (int s = 0; s < g.n_gens; ++s) {
        int y = g.conjugate_by_gen(x, s);
        if (cls[y] < 0) {
          cls[y] = c;
          stack.push_back(y);
        }
      }
    }
    std::sort(members[c].begin(), members[c].end());
  }

  const int k = static_cast<int>(members.size());
  std::vector<int> perm_cls(k);
  std::iota(perm_cls.begin(), perm_cls.end(), 0);
  std::sort(perm_cls.begin(), perm_cls.end(), [&](int a, int b) {
    int oa = g.elem_order[members[a][0]], ob = g.elem_order[members[b][0]];
    if (oa != ob) return oa < ob;
    if (members[a].size() != members[b].size())
      return members[a].size() < members[b].size();
    return members[a][0] < members[b][0];
  });

  g.class_members.resize(k);
  g.class_rep.resize(k);
  g.class_size.resize(k);
  g.class_of.resize(order);
  for (int c = 0; c < k; ++c) {
    g.class_members[c] = std::move(members[perm_cls[c]]);
    g.class_rep[c] = g.class_members[c][0];
    g.class_size[c] = static_cast<long long>(g.class_members[c].size());
    for (int32_t e : g.class_members[c]) g.class_of[e] = c;
  }
  g.class_inv.resize(k);
  for (int c = 0; c < k; ++c) g.class_inv[c] = g.class_of[g.inv_id[g.class_rep[c]]];
  return g;
}

GroupArena build_weyl_e6(const RootSystem& rs) {
  std::vector<Perm> gens(kRank);
  for (int i = 0; i < kRank; ++i)
    for (int r = 0; r < rs.num_roots(); ++r)
      gens[i].p[r] = static_cast<uint8_t>(rs.reflect_index(r, i));
  std::vector<uint8_t> units(rs.num_positive());
  std::iota(units.begin(), units.end(), 0);
  return GroupArena::enumerate(rs.num_roots(), std::move(gens), std::move(units));
}

GroupArena build_weyl_sigma(const RootSystem& rs) {
  auto refl = [&rs](int i) {
    Perm p;
    for (int r = 0; r < rs.num_roots(); ++r)
      p.p[r] = static_cast<uint8_t>(rs.reflect_index(r, i));
    return p;
  };
  // generators s2, s4, s3 s5, s1 s6 (0-based simple indices 1, 3, {2,4}, {0,5})
  std::vector<Perm> gens;
  gens.push_back(refl(1));
  gens.push_back(refl(3));
  gens.push_back(perm_compose(refl(2), refl(4), rs.num_roots()));
  gens.push_back(perm_compose(refl(0), refl(5), rs.num_roots()));

  std::vector<uint8_t> units;
  for (int r = 0; r < rs.num_positive(); ++r) {
    int d = rs.dagger(r);
    if (d >= rs.num_positive())
      throw std::logic_error("diagram involution must preserve positivity");
    if (d >= r) units.push_back(static_cast<uint8_t>(r));
  }
  return GroupArena::enumerate(rs.num_roots(), std::move(gens), std::move(units));
}

int find_longest(const GroupArena& g) {
  int best = -1;
  for (std::size_t e = 0; e < g.size(); ++e)
    if (best < 0 || g.length[e] > g.length[best]) best = static_cast<int>(e);
  for (std::size_t e = 0; e < g.size(); ++e)
    if (static_cast<int>(e) != best && g.length[e] == g.length[best])
      throw std::logic_error("longest element is not unique");
  return best;
}

namespace {

struct Fp {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const {
    if (a == 0) throw std::logic_error("division by zero in prime field");
    return pow(a, p - 2);
  }
  uint64_t reduce(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
  }
};

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Vec = std::vector<uint64_t>;
using Mat = std::vector<Vec>;

// coefficients of v in the span of the basis rows; throws when inconsistent
Vec solve_in_span(const Mat& basis, const Vec& v, const Fp& F) {
  const int d = static_cast<int>(basis.size());
  const int k = static_cast<int>(v.size());
  // augmented rows [basis_r | e_r], eliminated in place
  Mat rows(d, Vec(k + d, 0));
  for (int r = 0; r < d; ++r) {
    std::copy(basis[r].begin(), basis[r].end(), rows[r].begin());
    rows[r][k + r] = 1;
  }
  std::vector<int> pivot_col(d, -1);
  int rank = 0;
  for (int col = 0; col < k && rank < d; ++col) {
    int pr = -1;
    for (int r = rank; r < d; ++r)
      if (rows[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[pr], rows[rank]);
    uint64_t s = F.inv(rows[rank][col]);
    for (int c = 0; c < k + d; ++c) rows[rank][c] = F.mul(rows[rank][c], s);
    for (int r = 0; r < d; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      uint64_t f = rows[r][col];
      for (int c = 0; c < k + d; ++c)
        rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank != d) throw std::logic_error("block basis is not independent");
  Vec residual = v, coeff(d, 0);
  for (int r = 0; r < d; ++r) {
    uint64_t f = residual[pivot_col[r]];
    if (f == 0) continue;
    for (int c = 0; c < k; ++c)
      residual[c] = F.sub(residual[c], F.mul(f, rows[r][c]));
    for (int c = 0; c < d; ++c)
      coeff[c] = F.add(coeff[c], F.mul(f, rows[r][k + c]));
  }
  for (int c = 0; c < k; ++c)
    if (residual[c] != 0)
      throw std::logic_error("vector left the invariant block");
  return coeff;
}

// monic characteristic polynomial, low-degree coefficients first
Vec charpoly_mod(const Mat& m, const Fp& F) {
  const int d = static_cast<int>(m.size());
  Mat b = m;
  Vec c(d + 1, 0);
  c[d] = 1;
  for (int step = 1; step <= d; ++step) {
    if (step > 1) {
      // b <- m * (b - c_{step-1} I)
      Mat t = b;
      uint64_t prev = c[d - step + 1];
      for (int i = 0; i < d; ++i) t[i][i] = F.sub(t[i][i], prev);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          uint64_t acc = 0;
          for (int l = 0; l < d; ++l) acc = F.add(acc, F.mul(m[i][l], t[l][j]));
          b[i][j] = acc;
        }
    }
    uint64_t tr = 0;
    for (int i = 0; i < d; ++i) tr = F.add(tr, b[i][i]);
    c[d - step] = F.mul(tr, F.inv(step % F.p));
  }
  // p(x) = x^d - c_1 x^{d-1} - ... - c_d with the c's stored above
  Vec poly(d + 1, 0);
  poly[d] = 1;
  for (int i = 0; i < d; ++i) poly[i] = F.sub(0, c[i]);
  return poly;
}

uint64_t poly_eval(const Vec& poly, uint64_t x, const Fp& F) {
  uint64_t acc = 0;
  for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
    acc = F.add(F.mul(acc, x), poly[i]);
  return acc;
}

// divide by (x - r); returns remainder through *rem
Vec poly_deflate(const Vec& poly, uint64_t r, const Fp& F, uint64_t* rem) {
  const int d = static_cast<int>(poly.size()) - 1;
  Vec q(d, 0);
  uint64_t carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = F.add(F.mul(carry, r), poly[i]);
    q[i - 1] = carry;
  }
  *rem = F.add(F.mul(carry, r), poly[0]);
  return q;
}

// all roots with multiplicity; the polynomial must split completely
std::vector<std::pair<uint64_t, int>> poly_roots(Vec poly, const Fp& F) {
  std::vector<std::pair<uint64_t, int>> roots;
  int remaining = static_cast<int>(poly.size()) - 1;
  // central characters lift to small integers, so search small residues first
  for (uint64_t t = 0; t <= F.p / 2 && remaining > 0; ++t) {
    for (uint64_t cand : {t, F.p - t}) {
      if (cand == F.p) continue;
      if (t == 0 && cand != 0) continue;
      if (remaining == 0) break;
      if (poly_eval(poly, cand, F) != 0) continue;
      int mult = 0;
      for (;;) {
        uint64_t rem;
        Vec q = poly_deflate(poly, cand, F, &rem);
        if (rem != 0) break;
        poly = std::move(q);
        ++mult;
        --remaining;
        if (remaining == 0) break;
      }
      if (mult > 0) roots.emplace_back(cand, mult);
    }
  }
  if (remaining != 0)
    throw std::logic_error("characteristic polynomial failed to split");
  return roots;
}

// right null space basis of m
Mat null_space(Mat m, const Fp& F) {
  const int d = static_cast<int>(m.size());
  std::vector<int> pivot_of_col(d, -1);
  int rank = 0;
  for (int col = 0; col < d && rank < d; ++col) {
    int pr = -1;
    for (int r = rank; r < d; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[rank]);
    uint64_t s = F.inv(m[rank][col]);
    for (int c = 0; c < d; ++c) m[rank][c] = F.mul(m[rank][c], s);
    for (int r = 0; r < d; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      uint64_t f = m[r][col];
      for (int c = 0; c < d; ++c) m[r][c] = F.sub(m[r][c], F.mul(f, m[rank][c]));
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  Mat basis;
  for (int col = 0; col < d; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec v(d, 0);
    v[col] = 1;
    for (int c = 0; c < d; ++c)
      if (pivot_of_col[c] >= 0) v[c] = F.sub(0, m[pivot_of_col[c]][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

CharacterTable CharacterTable::dixon(const GroupArena& g) {
  const int k = g.num_classes();
  const long long n = static_cast<long long>(g.size());
  if (g.class_rep[0] != 0 || g.class_size[0] != 1)
    throw std::logic_error("identity class must come first");

  long long prime = 0;
  for (long long m = 2 * n / g.exponent;; ++m) {
    long long cand = m * g.exponent + 1;
    if (cand > 2 * n && is_prime_ll(cand)) {
      prime = cand;
      break;
    }
  }
  Fp F{static_cast<uint64_t>(prime)};

  // class algebra matrices: M[i][j][l] counts pairs (x, y) in C_i x C_j
  // with x y = rep_l
  std::vector<Mat> M(k, Mat(k, Vec(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int32_t x : g.class_members[i]) {
      Perm invx = perm_inverse(g.elems[x], g.n_points);
      for (int l = 0; l < k; ++l) {
        Perm prod = perm_compose(invx, g.elems[g.class_rep[l]], g.n_points);
        int idp = g.id_of(prod);
        if (idp < 0) throw std::logic_error("class product escaped the group");
        ++M[i][g.class_of[idp]][l];
      }
    }

  // split the class-function space into common eigenvectors
  std::vector<Mat> blocks;
  {
    Mat full(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    blocks.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    std::vector<Mat> next;
    bool all_split = true;
    for (Mat& B : blocks)
      if (B.size() > 1) all_split = false;
    if (all_split) break;
    for (Mat& B : blocks) {
      const int d = static_cast<int>(B.size());
      if (d == 1) {
        next.push_back(std::move(B));
        continue;
      }
      // action matrix: M_i b_r = sum_c act[c][r] b_c
      Mat act(d, Vec(d, 0));
      for (int r = 0; r < d; ++r) {
        Vec y(k, 0);
        for (int j = 0; j < k; ++j) {
          uint64_t acc = 0;
          for (int l = 0; l < k; ++l) acc = F.add(acc, F.mul(M[i][j][l], B[r][l]));
          y[j] = acc;
        }
        Vec coeff = solve_in_span(B, y, F);
        for (int c = 0; c < d; ++c) act[c][r] = coeff[c];
      }
      auto roots = poly_roots(charpoly_mod(act, F), F);
      if (roots.size() == 1) {
        next.push_back(std::move(B));
        continue;
      }
      int total = 0;
      for (auto& [lambda, mult] : roots) {
        Mat shifted = act;
        for (int r = 0; r < d; ++r) shifted[r][r] = F.sub(shifted[r][r], lambda);
        Mat null = null_space(std::move(shifted), F);
        if (static_cast<int>(null.size()) != mult)
          throw std::logic_error("class matrix is not semisimple on block");
        Mat sub;
        for (Vec& nu : null) {
          Vec row(k, 0);
          for (int r = 0; r < d; ++r)
            for (int c = 0; c < k; ++c)
              row[c] = F.add(row[c], F.mul(nu[r], B[r][c]));
          sub.push_back(std::move(row));
        }
        total += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (total != d) throw std::logic_error("block split lost dimensions");
    }
    blocks = std::move(next);
  }
  for (const Mat& B : blocks)
    if (B.size() != 1)
      throw std::logic_error("class algebra failed to split completely");
  if (static_cast<int>(blocks.size()) != k)
    throw std::logic_error("wrong number of central characters");

  CharacterTable t;
  t.prime = F.p;
  t.group_order = n;
  t.class_sizes = g.class_size;

  long long sum_sq = 0;
  std::vector<std::pair<int, std::vector<long long>>> rows;
  for (const Mat& B : blocks) {
    Vec omega = B[0];
    if (omega[0] == 0)
      throw std::logic_error("central character vanishes at the identity");
    uint64_t s = F.inv(omega[0]);
    for (uint64_t& v : omega) v = F.mul(v, s);
    // 1/degree^2 = sum_k omega_k omegabar_k / (|C_k| |G|)
    uint64_t acc = 0;
    for (int c = 0; c < k; ++c)
      acc = F.add(acc, F.mul(F.mul(omega[c], omega[g.class_inv[c]]),
                             F.inv(F.reduce(g.class_size[c]))));
    uint64_t dsq = F.mul(F.reduce(n), F.inv(acc));
    int degree = 0;
    for (long long dd = 1; dd * dd <= n; ++dd)
      if (F.mul(F.reduce(dd), F.reduce(dd)) == dsq) {
        if (degree != 0) throw std::logic_error("ambiguous character degree");
        degree = static_cast<int>(dd);
      }
    if (degree == 0) throw std::logic_error("no integral character degree");
    sum_sq += static_cast<long long>(degree) * degree;

    std::vector<long long> row(k);
    for (int c = 0; c < k; ++c) {
      uint64_t val = F.mul(F.mul(F.reduce(degree), omega[c]),
                           F.inv(F.reduce(g.class_size[c])));
      long long lifted = static_cast<long long>(val);
      if (lifted > prime / 2) lifted -= prime;
      if (std::llabs(lifted) > degree)
        throw std::logic_error("character value failed to lift");
      row[c] = lifted;
    }
    rows.emplace_back(degree, std::move(row));
  }
  if (sum_sq != n)
    throw std::logic_error("degrees do not satisfy the order relation");

  std::sort(rows.begin(), rows.end());
  for (auto& [deg, row] : rows) {
    t.degrees.push_back(deg);
    t.rows.push_back(std::move(row));
  }
  t.verify_orthogonality(g);
  return t;
}

void CharacterTable::verify_orthogonality(const GroupArena& g) const {
  const int k = num_chars();
  const long long n = group_order;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      __int128 acc = 0;
      for (int c = 0; c < k; ++c)
        acc += static_cast<__int128>(class_sizes[c]) * rows[i][c] *
               rows[j][g.class_inv[c]];
      if (acc != (i == j ? static_cast<__int128>(n) : 0))
        throw std::logic_error("row orthogonality failed");
    }
  for (int c = 0; c < k; ++c)
    for (int cc = 0; cc < k; ++cc) {
      __int128 acc = 0;
      for (int i = 0; i < k; ++i)
        acc += static_cast<__int128>(rows[i][c]) * rows[i][g.class_inv[cc]];
      __int128 want = (c == cc) ? static_cast<__int128>(n / class_sizes[c]) : 0;
      if (acc != want) throw std::logic_error("column orthogonality failed");
    }
}

long long det_ll(const SmallMat& m) {
  // fraction-free Bareiss elimination
  std::array<std::array<long long, 6>, 6> a = m.a;
  const int n = m.n;
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int kk = 0; kk < n - 1; ++kk) {
    if (a[kk][kk] == 0) {
      int p = -1;
      for (int r = kk + 1; r < n; ++r)
        if (a[r][kk] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[kk], a[p]);
      sign = -sign;
    }
    for (int i = kk + 1; i < n; ++i)
      for (int j = kk + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[kk][kk] - a[i][kk] * a[kk][j]) / prev;
    prev = a[kk][kk];
  }
  return sign * a[n - 1][n - 1];
}

LaurentPoly det_one_minus_q(const SmallMat& m) {
  // det(1 - q m) = sum over subsets S of (-q)^|S| det(m_S)
  LaurentPoly out;
  for (int mask = 0; mask < (1 << m.n); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < m.n; ++i)
      if (mask & (1 << i)) sel.push_back(i);
    SmallMat sub;
    sub.n = static_cast<int>(sel.size());
    for (int i = 0; i < sub.n; ++i)
      for (int j = 0; j < sub.n; ++j) sub.a[i][j] = m.a[sel[i]][sel[j]];
    long long d = det_ll(sub);
    int s = sub.n;
    out += LaurentPoly(Rational(static_cast<long>((s % 2 == 0) ? d : -d)), s);
  }
  return out;
}

std::vector<SmallMat> e6_reflection_matrices(const RootSystem& rs,
                                             const GroupArena& g) {
  std::vector<SmallMat> mats(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c) {
    const Perm& w = g.elems[g.class_rep[c]];
    SmallMat m;
    m.n = kRank;
    for (int j = 0; j < kRank; ++j) {
      const Coord& img = rs.coord(w.p[rs.simple_root(j)]);
      for (int i = 0; i < kRank; ++i) m.a[i][j] = img[i];
    }
    mats[c] = m;
  }
  return mats;
}

std::vector<SmallMat> folded_reflection_matrices(const RootSystem& rs,
                                                 const GroupArena& g) {
  // basis of the involution-fixed plane: a2, a4, a3 + a5, a1 + a6
  static constexpr int kParts[4][2] = {{1, -1}, {3, -1}, {2, 4}, {0, 5}};
  std::vector<SmallMat> mats(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c) {
    const Perm& w = g.elems[g.class_rep[c]];
    SmallMat m;
    m.n = 4;
    for (int j = 0; j < 4; ++j) {
      std::array<long long, kRank> x{};
      for (int part : kParts[j]) {
        if (part < 0) continue;
        const Coord& img = rs.coord(w.p[rs.simple_root(part)]);
        for (int i = 0; i < kRank; ++i) x[i] += img[i];
      }
      if (x[2] != x[4] || x[0] != x[5])
        throw std::logic_error("image of a fixed vector is not fixed");
      m.a[0][j] = x[1];
      m.a[1][j] = x[3];
      m.a[2][j] = x[2];
      m.a[3][j] = x[0];
    }
    mats[c] = m;
  }
  return mats;
}

LaurentPoly cyclotomic_poly(int d) {
  LaurentPoly num = LaurentPoly::q_power(d) - LaurentPoly(1);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    LaurentPoly quot;
    if (!LaurentPoly::divide_exact(num, cyclotomic_poly(e), &quot))
      throw std::logic_error("cyclotomic recursion failed");
    num = quot;
  }
  return num;
}

std::vector<int> degrees_from_poincare(const GroupArena& g, int rank) {
  LaurentPoly w;
  for (std::size_t e = 0; e < g.size(); ++e)
    w += LaurentPoly::q_power(g.length[e]);
  LaurentPoly shifted(1);
  const LaurentPoly qm1 = LaurentPoly::q_power(1) - LaurentPoly(1);
  for (int i = 0; i < rank; ++i) shifted *= qm1;
  shifted *= w;  // now = prod_i (q^{d_i} - 1)

  const int top = shifted.max_exponent();
  std::vector<int> mult(top + 1, 0);
  for (int d = 1; d <= top; ++d) {
    const LaurentPoly phi = cyclotomic_poly(d);
    LaurentPoly quot;
    while (LaurentPoly::divide_exact(shifted, phi, &quot)) {
      shifted = quot;
      ++mult[d];
      if (shifted == LaurentPoly(1)) break;
    }
  }
  if (!(shifted == LaurentPoly(1)))
    throw std::logic_error("length generating function is not cyclotomic");

  std::vector<int> degrees;
  for (int step = 0; step < rank; ++step) {
    int big = -1;
    for (int d = top; d >= 1; --d)
      if (mult[d] > 0) {
        big = d;
        break;
      }
    if (big < 0) throw std::logic_error("too few invariant degrees");
    degrees.push_back(big);
    for (int e = 1; e <= big; ++e) {
      if (big % e != 0) continue;
      if (mult[e] == 0) throw std::logic_error("inconsistent degree divisors");
      --mult[e];
    }
  }
  for (int d = 1; d <= top; ++d)
    if (mult[d] != 0) throw std::logic_error("leftover cyclotomic factors");
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

LaurentPoly fake_degree(const CharacterTable& t, int row,
                        const std::vector<SmallMat>& class_mats,
                        const std::vector<int>& degrees) {
  LaurentPoly product(1);
  for (int d : degrees) product *= LaurentPoly(1) - LaurentPoly::q_power(d);

  LaurentPoly acc;
  const int k = static_cast<int>(class_mats.size());
  for (int c = 0; c < k; ++c) {
    LaurentPoly hilb;
    if (!LaurentPoly::divide_exact(product, det_one_minus_q(class_mats[c]), &hilb))
      throw std::logic_error("coinvariant series division left a remainder");
    acc += LaurentPoly(
               Rational(static_cast<long>(t.class_sizes[c] * t.value(row, c))), 0) *
           hilb;
  }
  acc *= LaurentPoly(Rational(1) / Rational(static_cast<long>(t.group_order)), 0);
  if (!acc.all_integer_coefficients())
    throw std::logic_error("graded multiplicity is not integral");
  if (acc.is_zero() || !(acc.evaluate(1) == Rational(t.degrees[row])))
    throw std::logic_error("graded multiplicity has the wrong dimension");
  for (const auto& [e, coef] : acc.terms())
    if (e < 0 || coef < 0)
      throw std::logic_error("graded multiplicity has negative terms");
  return acc;
}

int LabeledCharacters::row_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

LabeledCharacters LabeledCharacters::build(const CharacterTable& t,
                                           const std::vector<LaurentPoly>& fakes) {
  const int k = t.num_chars();
  LabeledCharacters lc;
  lc.fake_degrees = fakes;
  lc.names.resize(k);
  lc.b_invariant.resize(k);
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) {
    lc.b_invariant[i] = fakes[i].min_exponent();
    groups[{t.degrees[i], lc.b_invariant[i]}].push_back(i);
  }
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return t.rows[a] < t.rows[b];
    });
    std::string base =
        "phi_" + std::to_string(key.first) + "_" + std::to_string(key.second);
    if (members.size() == 1) {
      lc.names[members[0]] = base;
    } else if (members.size() == 2) {
      lc.names[members[0]] = base + "_p";
      lc.names[members[1]] = base + "_pp";
    } else {
      throw std::logic_error("more than two characters share (d, b)");
    }
  }
  lc.display_order.resize(k);
  std::iota(lc.display_order.begin(), lc.display_order.end(), 0);
  std::sort(lc.display_order.begin(), lc.display_order.end(), [&](int a, int b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    if (lc.b_invariant[a] != lc.b_invariant[b])
      return lc.b_invariant[a] < lc.b_invariant[b];
    return t.rows[a] < t.rows[b];
  });
  return lc;
}

}  // namespace e6char
