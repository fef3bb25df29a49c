#include "e6char/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace e6char {

IntMat cartan_e6() {
  IntMat c{};
  for (int i = 0; i < kRank; ++i) c[i][i] = 2;
  auto join = [&c](int i, int j) { c[i][j] = c[j][i] = -1; };
  join(0, 2);  // 1-3
  join(2, 3);  // 3-4
  join(1, 3);  // 2-4
  join(3, 4);  // 4-5
  join(4, 5);  // 5-6
  return c;
}

long long det_int(const IntMat& m) {
  // fraction-free Bareiss elimination
  IntMat a = m;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < kRank - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < kRank; ++r)
        if (a[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < kRank; ++i)
      for (int j = k + 1; j < kRank; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[kRank - 1][kRank - 1];
}

namespace {

IntMat identity_mat() {
  IntMat m{};
  for (int i = 0; i < kRank; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IntMat& m, int a, int b) { std::swap(m[a], m[b]); }

void swap_cols(IntMat& m, int a, int b) {
  for (int i = 0; i < kRank; ++i) std::swap(m[i][a], m[i][b]);
}

// row[a] += f * row[b]
void add_row(IntMat& m, int a, int b, long long f) {
  for (int j = 0; j < kRank; ++j) m[a][j] += f * m[b][j];
}

void add_col(IntMat& m, int a, int b, long long f) {
  for (int i = 0; i < kRank; ++i) m[i][a] += f * m[i][b];
}

}  // namespace

SmithResult smith_normal_form(const IntMat& input) {
  IntMat a = input;
  IntMat u = identity_mat();
  IntMat v = identity_mat();

  for (int t = 0; t < kRank; ++t) {
    // pivot: nonzero entry of least magnitude in the trailing block
    for (;;) {
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < kRank; ++i)
        for (int j = t; j < kRank; ++j)
          if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;  // trailing block is zero
      if (pi != t) {
        swap_rows(a, t, pi);
        swap_rows(u, t, pi);
      }
      if (pj != t) {
        swap_cols(a, t, pj);
        swap_cols(v, t, pj);
      }
      bool again = false;
      for (int i = t + 1; i < kRank; ++i)
        if (a[i][t] != 0) {
          long long f = -(a[i][t] / a[t][t]);
          add_row(a, i, t, f);
          add_row(u, i, t, f);
          if (a[i][t] != 0) again = true;  // remainder left, new smaller pivot
        }
      for (int j = t + 1; j < kRank; ++j)
        if (a[t][j] != 0) {
          long long f = -(a[t][j] / a[t][t]);
          add_col(a, j, t, f);
          add_col(v, j, t, f);
          if (a[t][j] != 0) again = true;
        }
      if (again) continue;
      // divisibility: pivot must divide the whole trailing block
      bool fixed = true;
      for (int i = t + 1; i < kRank && fixed; ++i)
        for (int j = t + 1; j < kRank && fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (a[t][t] < 0) {
      for (int j = 0; j < kRank; ++j) a[t][j] = -a[t][j];
      for (int j = 0; j < kRank; ++j) u[t][j] = -u[t][j];
    }
  }
done:
  return SmithResult{u, a, v};
}

std::array<long long, kRank> smith_diagonal_by_minors(const IntMat& a) {
  std::array<long long, kRank> d{};
  long long prev = 1;
  for (int k = 1; k <= kRank; ++k) {
    // gcd over all k x k minors
    long long g = 0;
    auto next_comb = [](std::vector<int>& c, int n) {
      int k2 = static_cast<int>(c.size());
      for (int i = k2 - 1; i >= 0; --i) {
        if (c[i] < n - k2 + i) {
          ++c[i];
          for (int j = i + 1; j < k2; ++j) c[j] = c[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    std::vector<int> rsel(k);
    std::iota(rsel.begin(), rsel.end(), 0);
    do {
      std::vector<int> csel(k);
      std::iota(csel.begin(), csel.end(), 0);
      do {
        // determinant of the selected submatrix by rational-free expansion
        IntMat sub{};
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = a[rsel[i]][csel[j]];
        for (int i = k; i < kRank; ++i) sub[i][i] = 1;  // pad to full size
        long long det = det_int(sub);
        g = std::gcd(g, std::llabs(det));
      } while (next_comb(csel, kRank));
    } while (next_comb(rsel, kRank));
    if (g == 0) break;  // rank deficit: remaining diagonal entries are zero
    d[k - 1] = g / prev;
    prev = g;
  }
  return d;
}

namespace {

// positives ordered by (height, coordinates compared from alpha6 down to
// alpha1), which puts the simple roots in natural order alpha1 < ... < alpha6
bool root_before(const std::pair<int, Coord>& a, const std::pair<int, Coord>& b) {
  if (a.first != b.first) return a.first < b.first;
  for (int k = kRank - 1; k >= 0; --k)
    if (a.second[k] != b.second[k]) return a.second[k] < b.second[k];
  return false;
}

int height_of(const Coord& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

constexpr int kKeyBase = 9;
constexpr int kKeyShift = 4;

}  // namespace

int RootSystem::coord_key(const Coord& c) const {
  int key = 0;
  for (int i = 0; i < kRank; ++i) {
    int x = c[i] + kKeyShift;
    if (x < 0 || x >= kKeyBase) return -1;
    key = key * kKeyBase + x;
  }
  return key;
}

RootSystem RootSystem::generate(const IntMat& cartan) {
  RootSystem rs;
  rs.m_cartan = cartan;

  std::set<Coord> seen;
  std::vector<Coord> queue;
  for (int i = 0; i < kRank; ++i) {
    Coord c{};
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  constexpr int kMaxRoots = 400;
  constexpr int kMaxHeight = 60;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Coord c = queue[head];
    for (int i = 0; i < kRank; ++i) {
      Coord r = rs.reflect(c, i);
      if (seen.insert(r).second) {
        if (std::abs(height_of(r)) > kMaxHeight ||
            static_cast<int>(seen.size()) > kMaxRoots)
          throw std::runtime_error("root closure exceeds finite-type bounds");
        queue.push_back(r);
      }
    }
  }

  std::vector<std::pair<int, Coord>> pos;
  for (const Coord& c : seen) {
    int h = height_of(c);
    if (h > 0) pos.emplace_back(h, c);
  }
  if (2 * pos.size() != seen.size())
    throw std::runtime_error("root set is not symmetric");
  std::sort(pos.begin(), pos.end(), root_before);

  rs.m_coords.reserve(seen.size());
  for (const auto& [h, c] : pos) {
    rs.m_coords.push_back(c);
    rs.m_heights.push_back(h);
  }
  for (const auto& [h, c] : pos) {
    Coord n;
    for (int i = 0; i < kRank; ++i) n[i] = -c[i];
    rs.m_coords.push_back(n);
    rs.m_heights.push_back(-h);
  }

  int space = 1;
  for (int i = 0; i < kRank; ++i) space *= kKeyBase;
  rs.m_index.assign(space, -1);
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    int key = rs.coord_key(rs.m_coords[idx]);
    if (key < 0) throw std::runtime_error("root coordinates out of key range");
    rs.m_index[key] = idx;
  }
  return rs;
}

RootSystem RootSystem::build_e6() {
  RootSystem rs = generate(cartan_e6());
  if (rs.num_roots() != kNumRoots)
    throw std::runtime_error("E6 root generation produced wrong count");
  return rs;
}

int RootSystem::index_of(const Coord& c) const {
  int key = coord_key(c);
  return key < 0 ? -1 : m_index[key];
}

int RootSystem::negative(int idx) const {
  int n = num_positive();
  return idx < n ? idx + n : idx - n;
}

int RootSystem::simple_root(int i) const {
  Coord c{};
  c[i] = 1;
  return index_of(c);
}

int RootSystem::pairing(int root_idx, int i) const {
  const Coord& c = m_coords[root_idx];
  int acc = 0;
  for (int j = 0; j < kRank; ++j) acc += static_cast<int>(m_cartan[i][j]) * c[j];
  return acc;
}

Coord RootSystem::reflect(const Coord& c, int i) const {
  int p = 0;
  for (int j = 0; j < kRank; ++j) p += static_cast<int>(m_cartan[i][j]) * c[j];
  Coord r = c;
  r[i] -= p;
  return r;
}

int RootSystem::reflect_index(int root_idx, int i) const {
  return index_of(reflect(m_coords[root_idx], i));
}

int RootSystem::dagger_simple(int i) {
  static constexpr int map[kRank] = {5, 1, 4, 3, 2, 0};
  return map[i];
}

Coord RootSystem::dagger_coord(const Coord& c) const {
  Coord r{};
  for (int i = 0; i < kRank; ++i) r[dagger_simple(i)] = c[i];
  return r;
}

int RootSystem::dagger(int root_idx) const {
  return index_of(dagger_coord(m_coords[root_idx]));
}

StructureConstants::StructureConstants(const RootSystem& rs) {
  const int n = rs.num_roots();
  const int npos = rs.num_positive();
  m_sum.assign(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Coord s;
      for (int k = 0; k < kRank; ++k) s[k] = rs.coord(i)[k] + rs.coord(j)[k];
      m_sum[i * n + j] = static_cast<int16_t>(rs.index_of(s));
    }

  // positive-pair table, filled in height order of the sum
  constexpr int8_t kUnset = 0;
  std::vector<int8_t> pos(npos * npos, kUnset);

  // resolves any pair from the positive table via antisymmetry, negation and
  // the cyclic identity N(a,b) = N(b,c) = N(c,a) for a + b + c = 0
  struct Resolver {
    const std::vector<int16_t>& sum;
    std::vector<int8_t>& pos;
    int n, npos;
    int neg(int idx) const { return idx < npos ? idx + npos : idx - npos; }
    int get(int i, int j) const {
      int s = sum[i * n + j];
      if (s < 0) return 0;
      bool ip = i < npos, jp = j < npos;
      if (ip && jp) {
        int v = (i < j) ? pos[i * npos + j] : -pos[j * npos + i];
        if (v == 0) throw std::logic_error("positive pair not yet filled");
        return v;
      }
      if (!ip && !jp) return -get(neg(i), neg(j));
      if (!ip) return -get(j, i);
      // i positive, j negative, s = i + j
      if (s < npos) return get(s, neg(j));  // N(i,j) = N(s, -j)
      return get(neg(s), i);                // N(i,j) = N(-s, i)
    }
  };
  Resolver rv{m_sum, pos, n, npos};

  for (int g = 0; g < npos; ++g) {
    if (rs.height(g) < 2) continue;
    // special pairs (a, b), a < b, a + b = g; extraspecial = minimal a
    int a0 = -1, b0 = -1;
    for (int a = 0; a < npos; ++a) {
      int b = -1;
      for (int bb = a + 1; bb < npos; ++bb)
        if (m_sum[a * n + bb] == g) {
          b = bb;
          break;
        }
      if (b >= 0) {
        a0 = a;
        b0 = b;
        break;
      }
    }
    if (a0 < 0) throw std::logic_error("positive root without special pair");
    pos[a0 * npos + b0] = 1;
    for (int a = a0 + 1; a < npos; ++a)
      for (int b = a + 1; b < npos; ++b) {
        if (m_sum[a * n + b] != g) continue;
        // four-term Jacobi for a0 + b0 - a - b = 0 against the extraspecial pair
        int na = a + npos, nb = b + npos;  // indices of -a, -b
        int t1 = rv.get(b0, na) * rv.get(a0, nb);
        int t2 = rv.get(na, a0) * rv.get(b0, nb);
        int val = t1 + t2;
        if (val != 1 && val != -1)
          throw std::logic_error("structure constant derivation off +-1");
        pos[a * npos + b] = static_cast<int8_t>(val);
      }
  }

  m_n.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m_sum[i * n + j] >= 0) m_n[i * n + j] = static_cast<int8_t>(rv.get(i, j));
}

void verify_structure_identities(const RootSystem& rs,
                                 const StructureConstants& sc) {
  const int n = rs.num_roots();
  const int npos = rs.num_positive();
  auto fail = [](const char* what) { throw std::logic_error(what); };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool is_root = sc.sum_index(i, j) >= 0;
      if (is_root != (sc.n(i, j) != 0)) fail("support mismatch");
      if (!is_root) continue;
      if (sc.n(i, j) != 1 && sc.n(i, j) != -1) fail("constant off +-1");
      if (sc.n(i, j) != -sc.n(j, i)) fail("antisymmetry violated");
      if (sc.n(rs.negative(i), rs.negative(j)) != -sc.n(i, j))
        fail("negation rule violated");
    }

  // extraspecial normalization: minimal first member of each decomposition
  for (int g = 0; g < npos; ++g) {
    if (rs.height(g) < 2) continue;
    for (int a = 0; a < npos; ++a) {
      int found = -1;
      for (int b = a + 1; b < npos; ++b)
        if (sc.sum_index(a, b) == g) {
          found = b;
          break;
        }
      if (found >= 0) {
        if (sc.n(a, found) != 1) fail("extraspecial pair not normalized");
        break;
      }
    }
  }

  // cyclic identity on a + b + c = 0
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = sc.sum_index(a, b);
      if (s < 0) continue;
      int c = rs.negative(s);
      if (sc.n(a, b) != sc.n(b, c) || sc.n(b, c) != sc.n(c, a))
        fail("cyclic identity violated");
    }

  // four-term Jacobi on a + b + c + d = 0 with no two terms opposite
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (rs.negative(a) == b) continue;
      for (int c = b + 1; c < n; ++c) {
        if (rs.negative(a) == c || rs.negative(b) == c) continue;
        Coord dm;
        for (int k = 0; k < kRank; ++k)
          dm[k] = -rs.coord(a)[k] - rs.coord(b)[k] - rs.coord(c)[k];
        int d = rs.index_of(dm);
        if (d < 0 || d == rs.negative(a) || d == rs.negative(b) ||
            d == rs.negative(c))
          continue;
        int t1 = sc.n(a, b) * sc.n(c, d);
        int t2 = sc.n(b, c) * sc.n(a, d);
        int t3 = sc.n(c, a) * sc.n(b, d);
        if (t1 + t2 + t3 != 0) fail("four-term Jacobi violated");
      }
    }
}

}  // namespace e6char
