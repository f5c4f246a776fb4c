#include "tourney/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tourney/canonical.hpp"
#include "tourney/classify.hpp"
#include "tourney/enumerate.hpp"
#include "tourney/tour_io.hpp"

namespace tourney {

const std::string_view kMixedNineA =
    "9\n"
    "011110000\n"
    "001111000\n"
    "000101011\n"
    "000010111\n"
    "001000111\n"
    "100110100\n"
    "111000010\n"
    "110001001\n"
    "110001100\n";

const std::string_view kMixedNineB =
    "9\n"
    "011110000\n"
    "001010110\n"
    "000110101\n"
    "010001011\n"
    "000101011\n"
    "111000001\n"
    "100111000\n"
    "101001100\n"
    "110000110\n";

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over Z_p as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;  // m is monic
  for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
    const int c = a[d];
    if (c == 0) continue;
    for (int k = 0; k <= dm; ++k) a[d - dm + k] = mod(a[d - dm + k] - static_cast<long long>(c) * m[k], p);
  }
  a.resize(static_cast<std::size_t>(dm));
  return a;
}

Poly monic_from_index(long long idx, int degree, int p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int k = 0; k < degree; ++k, idx /= p) f[k] = static_cast<int>(idx % p);
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, int p) {
  const int degree = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= degree; ++d) {
    long long count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      const Poly rem = poly_mod(f, monic_from_index(idx, d, p), p);
      if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

Tournament from_symbol_set(int n, const std::vector<bool>& in_symbol) {
  return Tournament::from_pair_rule(n, [&](int i, int j) { return in_symbol[mod(j - i, n)]; });
}

Tournament compose_uniform(const Tournament& outer, const Tournament& block) {
  const std::vector<Tournament> reps(static_cast<std::size_t>(outer.order()), block);
  return compose(outer, reps);
}

Tournament kotzig7() {
  // Of the three regular 7-tournaments, the one that is neither locally
  // transitive nor doubly regular.
  static const Tournament kz = [] {
    const EnumCorpus corpus = enumerate_regular(7);
    for (const auto& cls : corpus.classes) {
      const Tournament& t = cls.representative;
      if (!is_locally_transitive(t, Side::Both) && !is_doubly_regular(t)) return t;
    }
    throw Error(Errc::UnknownName, "no regular 7-tournament outside RLT/DR found");
  }();
  return kz;
}

}  // namespace

void RotationalSymbol::validate() const {
  if (n < 1 || n % 2 == 0) throw Error(Errc::BadSymbol, "rotational order must be odd");
  if (n > kMaxOrder) throw Error(Errc::OrderTooLarge, "rotational order exceeds 64");
  std::set<int> s;
  for (int r : residues) {
    if (r <= 0 || r >= n) throw Error(Errc::BadSymbol, "residue " + std::to_string(r) + " not in 1..n-1");
    s.insert(r);
  }
  if (s.size() != residues.size() || static_cast<int>(s.size()) != (n - 1) / 2)
    throw Error(Errc::BadSymbol, "symbol must list (n-1)/2 distinct residues");
  for (int d : s)
    if (s.count(n - d)) throw Error(Errc::BadSymbol, "both " + std::to_string(d) + " and its negative present");
}

Tournament gen_transitive(int n) {
  if (n < 1 || n > kMaxOrder) throw Error(Errc::SizeMismatch, "order must be in 1..64");
  return Tournament::from_pair_rule(n, [](int, int) { return true; });
}

Tournament gen_rotational(const RotationalSymbol& sym) {
  sym.validate();
  std::vector<bool> in_symbol(static_cast<std::size_t>(sym.n), false);
  for (int r : sym.residues) in_symbol[r] = true;
  return from_symbol_set(sym.n, in_symbol);
}

Tournament gen_rlt(int n) {
  if (n < 1 || n % 2 == 0) throw Error(Errc::EvenOrder, "RLT needs odd n, got " + std::to_string(n));
  RotationalSymbol sym{n, {}};
  for (int r = 1; r <= (n - 1) / 2; ++r) sym.residues.push_back(r);
  return gen_rotational(sym);
}

Tournament gen_qr(int p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p % 4 != 3) throw Error(Errc::BadResidueClass, std::to_string(p) + " is not 3 mod 4");
  if (p > kMaxOrder) throw Error(Errc::OrderTooLarge, "order exceeds 64");
  std::vector<bool> square(static_cast<std::size_t>(p), false);
  for (long long x = 1; x < p; ++x) square[(x * x) % p] = true;
  return from_symbol_set(p, square);
}

Tournament gen_qr_field(int q) {
  int p = 0;
  int k = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) throw Error(Errc::NotPrime, "order must be a prime power");
  for (int r = q; r > 1; r /= p, ++k)
    if (r % p != 0) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  if (p % 4 != 3 || k % 2 == 0)
    throw Error(Errc::BadResidueClass, "need q = p^k with p = 3 mod 4 and k odd");
  if (q > kMaxOrder) throw Error(Errc::OrderTooLarge, "order exceeds 64");
  if (k == 1) return gen_qr(p);

  Poly modulus;
  for (long long idx = 0;; ++idx) {
    modulus = monic_from_index(idx, k, p);
    if (is_irreducible(modulus, p)) break;
  }
  auto decode = [&](int x) {
    Poly a(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, x /= p) a[i] = x % p;
    return a;
  };
  auto encode = [&](const Poly& a) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p + a[i];
    return x;
  };
  std::vector<bool> square(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) {
    const Poly a = decode(x);
    Poly prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[i + j] = mod(prod[i + j] + a[i] * a[j], p);
    square[encode(poly_mod(prod, modulus, p))] = true;
  }
  return Tournament::from_pair_rule(q, [&](int i, int j) {
    const Poly a = decode(i);
    Poly b = decode(j);
    for (int c = 0; c < k; ++c) b[c] = mod(b[c] - a[c], p);
    return square[encode(b)];
  });
}

Tournament gen_chain(std::span<const Tournament> blocks) {
  return compose(gen_transitive(static_cast<int>(blocks.size())), blocks);
}

std::vector<std::string> named_tournaments() {
  return {"delta",          "st4",           "mixed9_a",        "mixed9_b",
          "delta_tt2",      "delta_delta",   "kz7",            "dr7",
          "delta_o_tt3_o",  "delta_tt2_o_tt2", "delta_o_delta_o"};
}

Tournament gen_named(std::string_view name) {
  const Tournament o = gen_transitive(1);
  const Tournament tt2 = gen_transitive(2);
  const Tournament delta = gen_rlt(3);
  auto triple = [&](const Tournament& a, const Tournament& b, const Tournament& c) {
    const std::vector<Tournament> reps{a, b, c};
    return compose(delta, reps);
  };
  if (name == "delta") return delta;
  if (name == "st4") return triple(tt2, o, o);
  if (name == "mixed9_a") return parse_tour(kMixedNineA);
  if (name == "mixed9_b") return parse_tour(kMixedNineB);
  if (name == "delta_tt2") return compose_uniform(delta, tt2);
  if (name == "delta_delta") return compose_uniform(delta, delta);
  if (name == "kz7") return kotzig7();
  if (name == "dr7") return gen_qr(7);
  if (name == "delta_o_tt3_o") return triple(o, gen_transitive(3), o);
  if (name == "delta_tt2_o_tt2") return triple(tt2, o, tt2);
  if (name == "delta_o_delta_o") return triple(o, delta, o);
  throw Error(Errc::UnknownName, "unknown tournament name '" + std::string(name) + "'");
}

Tournament gen_random(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxOrder) throw Error(Errc::SizeMismatch, "order must be in 1..64");
  std::mt19937_64 rng(seed);
  return Tournament::from_pair_rule(n, [&](int, int) { return (rng() & 1U) != 0; });
}

}  // namespace tourney
