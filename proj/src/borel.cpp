#include "e6char/borel.hpp"

#include <algorithm>
#include <stdexcept>

namespace e6char {

std::vector<Letter> letters_of(const UCoeffs& u) {
  std::vector<Letter> w;
  for (int r = 0; r < kNumPositive; ++r)
    if (u[r] != 0) w.push_back(Letter{static_cast<int16_t>(r), u[r]});
  return w;
}

UCoeffs coeffs_of(const BorelCtx& c, const std::vector<Letter>& word) {
  std::vector<Letter> nf = collect(c, word);
  UCoeffs u{};
  for (const Letter& l : nf) u[l.root] = l.coeff;
  return u;
}

std::vector<Letter> collect(const BorelCtx& c, std::vector<Letter> word) {
  const int npos = c.rs.num_positive();
  for (const Letter& l : word)
    if (l.root < 0 || l.root >= npos)
      throw std::invalid_argument("letters must use positive roots");

  for (long guard = 0;; ++guard) {
    if (guard > 2000000) throw std::logic_error("collection did not terminate");
    bool changed = false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i].coeff == 0) {
        word.erase(word.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      if (i + 1 == word.size()) continue;
      if (word[i].root == word[i + 1].root) {
        word[i].coeff = f3_add(word[i].coeff, word[i + 1].coeff);
        word.erase(word.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
      if (word[i].root > word[i + 1].root) {
        // u_b(y) u_a(x) = u_a(x) u_b(y) u_{a+b}(-N(a, b) x y)
        Letter hi = word[i], lo = word[i + 1];
        word[i] = lo;
        word[i + 1] = hi;
        int s = c.sc.sum_index(lo.root, hi.root);
        if (s >= 0) {
          int8_t n = f3_norm(c.sc.n(lo.root, hi.root));
          int8_t coeff = f3_neg(f3_mul(n, f3_mul(lo.coeff, hi.coeff)));
          if (coeff != 0)
            word.insert(word.begin() + static_cast<long>(i) + 2,
                        Letter{static_cast<int16_t>(s), coeff});
        }
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  return word;
}

UCoeffs u_identity() { return UCoeffs{}; }

UCoeffs u_multiply(const BorelCtx& c, const UCoeffs& a, const UCoeffs& b) {
  std::vector<Letter> word = letters_of(a);
  std::vector<Letter> wb = letters_of(b);
  word.insert(word.end(), wb.begin(), wb.end());
  return coeffs_of(c, word);
}

UCoeffs u_inverse(const BorelCtx& c, const UCoeffs& a) {
  std::vector<Letter> word = letters_of(a);
  std::reverse(word.begin(), word.end());
  for (Letter& l : word) l.coeff = f3_neg(l.coeff);
  return coeffs_of(c, word);
}

UCoeffs u_conj_word(const BorelCtx& c, const std::vector<Letter>& v,
                    const UCoeffs& a) {
  std::vector<Letter> word = v;
  std::vector<Letter> mid = letters_of(a);
  word.insert(word.end(), mid.begin(), mid.end());
  std::vector<Letter> inv = v;
  std::reverse(inv.begin(), inv.end());
  for (Letter& l : inv) l.coeff = f3_neg(l.coeff);
  word.insert(word.end(), inv.begin(), inv.end());
  return coeffs_of(c, word);
}

bool u_equal(const UCoeffs& a, const UCoeffs& b) { return a == b; }

bool is_regular_unipotent(const UCoeffs& a) {
  for (int i = 0; i < kRank; ++i)
    if (a[i] == 0) return false;  // simple roots occupy the first slots
  return true;
}

int8_t root_value(const BorelCtx& c, const Torus& t, int root) {
  int sign = 1;
  for (int i = 0; i < kRank; ++i)
    if (t.v[i] == 2 && (c.rs.pairing(root, i) & 1)) sign = -sign;
  return sign > 0 ? int8_t{1} : int8_t{2};
}

UCoeffs u_conj_torus(const BorelCtx& c, const Torus& t, const UCoeffs& a) {
  UCoeffs r{};
  for (int root = 0; root < kNumPositive; ++root)
    if (a[root] != 0) r[root] = f3_mul(a[root], root_value(c, t, root));
  return r;
}

Torus torus_dagger(const Torus& t) {
  Torus r;
  for (int i = 0; i < kRank; ++i) r.v[RootSystem::dagger_simple(i)] = t.v[i];
  return r;
}

bool torus_equal(const Torus& a, const Torus& b) { return a.v == b.v; }

std::vector<Letter> word_dagger(const BorelCtx& c, std::vector<Letter> word) {
  for (Letter& l : word) l.root = static_cast<int16_t>(c.rs.dagger(l.root));
  return word;
}

bool word_is_twisted_stable(const BorelCtx& c, const std::vector<Letter>& word) {
  return coeffs_of(c, word) == coeffs_of(c, word_dagger(c, word));
}

std::vector<Letter> regular_word(bool twisted) {
  auto mk = [](std::initializer_list<int> simples) {
    std::vector<Letter> w;
    for (int s : simples) w.push_back(Letter{static_cast<int16_t>(s), 1});
    return w;
  };
  // simple indices are zero-based
  if (twisted) return mk({0, 5, 2, 4, 1, 3});  // u1 u6 u3 u5 u2 u4
  return mk({0, 1, 2, 3, 4, 5});
}

UCoeffs regular_element(const BorelCtx& c, bool twisted) {
  UCoeffs u = coeffs_of(c, regular_word(twisted));
  if (!is_regular_unipotent(u))
    throw std::logic_error("distinguished element is not regular");
  return u;
}

WitnessSpec curated_witness(bool twisted) {
  WitnessSpec w;
  w.t.v = {1, 2, 2, 2, 2, 1};  // coroot values -1 at positions 2..5
  auto put = [&w](int simple, int coeff) {
    w.word.push_back(Letter{static_cast<int16_t>(simple), f3_norm(coeff)});
  };
  if (twisted) {
    put(3, -1);  // u4(-1)
    put(5, 1);   // u6(1)
    put(0, 1);   // u1(1)
  } else {
    put(5, -1);
    put(4, -1);
    put(5, -1);
    put(3, -1);
    put(4, -1);
    put(5, -1);
    put(0, 1);
  }
  return w;
}

bool verify_witness(const BorelCtx& c, bool twisted, const WitnessSpec& w,
                    std::string* why) {
  auto fail = [&why](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  UCoeffs u0 = regular_element(c, twisted);
  if (twisted) {
    if (!word_is_twisted_stable(c, regular_word(twisted)))
      return fail("base element moves under the twisted Frobenius");
    if (!word_is_twisted_stable(c, w.word))
      return fail("conjugator moves under the twisted Frobenius");
    if (!torus_equal(w.t, torus_dagger(w.t)))
      return fail("torus part moves under the twisted Frobenius");
  }
  // (u t) u0 (u t)^{-1} = u . (t u0 t^{-1}) . u^{-1}
  UCoeffs conj = u_conj_word(c, w.word, u_conj_torus(c, w.t, u0));
  if (!u_equal(conj, u_inverse(c, u0)))
    return fail("conjugate does not equal the inverse");
  if (why) why->clear();
  return true;
}

std::optional<WitnessSpec> search_witness(
    const BorelCtx& c, bool twisted,
    const std::vector<std::vector<int>>& simple_patterns) {
  for (const std::vector<int>& pat : simple_patterns) {
    const int len = static_cast<int>(pat.size());
    for (int signs = 0; signs < (1 << len); ++signs) {
      WitnessSpec w;
      for (int i = 0; i < len; ++i)
        w.word.push_back(Letter{static_cast<int16_t>(pat[i]),
                                f3_norm((signs >> i) & 1 ? -1 : 1)});
      for (int tmask = 0; tmask < (1 << kRank); ++tmask) {
        for (int i = 0; i < kRank; ++i)
          w.t.v[i] = (tmask >> i) & 1 ? int8_t{2} : int8_t{1};
        if (verify_witness(c, twisted, w)) return w;
      }
    }
  }
  return std::nullopt;
}

WitnessSpec resolve_witness(const BorelCtx& c, bool twisted, bool* curated_ok) {
  WitnessSpec w = curated_witness(twisted);
  bool ok = verify_witness(c, twisted, w);
  if (curated_ok) *curated_ok = ok;
  if (ok) return w;

  std::vector<std::vector<int>> patterns;
  std::vector<int> base;
  for (const Letter& l : w.word) base.push_back(l.root);
  patterns.push_back(base);
  std::vector<int> rev(base.rbegin(), base.rend());
  patterns.push_back(rev);
  std::vector<int> dag;
  for (int s : base) dag.push_back(RootSystem::dagger_simple(s));
  patterns.push_back(dag);
  std::vector<int> dagrev(dag.rbegin(), dag.rend());
  patterns.push_back(dagrev);

  auto found = search_witness(c, twisted, patterns);
  if (!found)
    throw std::runtime_error("no conjugating witness in the search family");
  return *found;
}

}  // namespace e6char
