#pragma once

// Randomized property checks shared by the unit suite and the acceptance
// binary. Each returns how many cases ran and the first failure, if any.

#include "fixtures.hpp"

#include <numeric>
#include <sstream>

namespace props {

using namespace ldi;

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = "case " + std::to_string(cases) + ": " + why;
  }
};

inline constexpr int kCases = 240;

struct Drawn {
  StabilizerCode code;
  Int q;
};

inline Drawn draw(std::mt19937_64& rng, std::size_t max_n = 6) {
  static const Int primes[] = {2, 3, 5};
  const Int q = primes[rng() % 3];
  const std::size_t n = 1 + rng() % max_n, k = 1 + rng() % n;
  return {fx::random_code(n, k, q, rng), q};
}

inline SymplecticVector random_vector(std::size_t n, Int lo, Int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> d(lo, hi);
  SymplecticVector v(n, Modulus::integer());
  for (std::size_t i = 0; i < 2 * n; ++i) v.set(i, d(rng));
  return v;
}

// Invariance, agreement with the canonical form mod q, validity at other primes.
inline Outcome embed_postconditions(int cases = kCases, std::uint64_t seed = 101) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto [code, q] = draw(rng);
    if (!validate(code).valid()) {
      o.fail("generator produced an invalid code");
      continue;
    }
    const auto inv = embed(code);
    bool agree = true, exact = true;
    for (std::size_t i = 0; i < inv.k(); ++i)
      for (std::size_t j = 0; j < 2 * inv.n(); ++j) agree = agree && mod(inv.matrix.row(i)[j], q) == inv.canonical.matrix.row(i)[j];
    for (std::size_t i = 0; i < inv.k(); ++i)
      for (std::size_t j = 0; j < inv.k(); ++j)
        exact = exact && fx::plain_product(fx::flat(inv.matrix.row(i)), fx::flat(inv.matrix.row(j))) == 0;
    if (!agree) o.fail("embedding differs from the canonical form mod q");
    if (!exact) o.fail("rows do not commute over the integers");
    for (Int p : {2, 3, 5, 7})
      if (!validate(instantiate(inv.matrix, p)).valid()) o.fail("invalid at p = " + std::to_string(p));
  }
  return o;
}

inline Outcome symplectic_form(int cases = 400, std::uint64_t seed = 202) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const std::size_t n = 1 + rng() % 6;
    const auto u = random_vector(n, -9, 9, rng), v = random_vector(n, -9, 9, rng), w = random_vector(n, -9, 9, rng);
    const Int a = static_cast<Int>(rng() % 11) - 5;
    if (symplectic_product(u, v) != -symplectic_product(v, u)) o.fail("not antisymmetric");
    if (symplectic_product(u, u) != 0) o.fail("u.u != 0");
    auto au_w = u.scaled(a);
    au_w += w;
    if (symplectic_product(au_w, v) != a * symplectic_product(u, v) + symplectic_product(w, v)) o.fail("not linear");
    if (symplectic_product(u, v) != fx::plain_product(fx::flat(u), fx::flat(v))) o.fail("differs from the oracle");
    for (Int p : {2, 3, 5, 7}) {
      const Modulus m = Modulus::prime(p);
      if (symplectic_product(u.with_modulus(m), v.with_modulus(m), m) != mod(symplectic_product(u, v), p))
        o.fail("reduction does not commute with the product");
    }
  }
  return o;
}

inline Outcome b_within_bound(int cases = kCases, std::uint64_t seed = 303) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto [code, q] = draw(rng);
    const auto inv = embed(code);
    if (inv.max_entry_B > bound_B(code.n(), code.k(), q))
      o.fail("B = " + std::to_string(inv.max_entry_B) + " exceeds " + std::to_string(bound_B(code.n(), code.k(), q)));
  }
  return o;
}

// det(M)^2 <= B^{2m} m^m for random m×m minors of the invariant matrix.
inline Outcome hadamard_minor(int cases = kCases, std::uint64_t seed = 404) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto [code, q] = draw(rng);
    const auto inv = embed(code);
    const std::size_t k = inv.k(), cols = 2 * inv.n();
    const std::size_t m = 1 + rng() % std::min(k, cols);
    std::vector<std::size_t> r(k), c(cols);
    std::iota(r.begin(), r.end(), 0);
    std::iota(c.begin(), c.end(), 0);
    std::shuffle(r.begin(), r.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    IntMatrix minor(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) minor[i][j] = inv.matrix.row(r[i])[c[j]];
    const BigInt det = determinant(minor);
    const BigInt bound = ipow(BigInt(inv.max_entry_B), 2 * static_cast<unsigned>(m)) * ipow(BigInt(m), static_cast<unsigned>(m));
    if (det * det > bound) o.fail("minor determinant " + det.str() + " above the Hadamard bound");
  }
  return o;
}

inline Outcome pruned_vs_naive(int cases = kCases, std::uint64_t seed = 505) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const Int p = o.cases % 2 ? 3 : 2;
    // mostly k < n, so that logical errors exist
    const std::size_t n = 2 + rng() % 3, k = o.cases % 5 == 0 ? n : 1 + rng() % (n - 1);
    const auto code = fx::random_code(n, k, p, rng);
    for (bool exclude : {true, false}) {
      const auto mode = exclude ? DistanceMode::exclude_stabilizer : DistanceMode::kernel_only;
      const auto fast = distance(code, n, mode);
      const auto slow = fx::naive_distance(code.generators(), p, exclude);
      if (fast.distance != slow) {
        std::ostringstream os;
        os << (exclude ? "exclude" : "kernel") << " mode: search " << (fast.distance ? std::to_string(*fast.distance) : "none")
           << " vs naive " << (slow ? std::to_string(*slow) : "none");
        o.fail(os.str());
      }
      if (fast.witness)
        for (const auto& g : code.generators().rows())
          if (mod(fx::plain_product(fx::flat(*fast.witness), fx::flat(g)), p) != 0) o.fail("witness is detectable");
    }
  }
  return o;
}

inline std::vector<SymplecticMatrix> invariant_fixtures() {
  return {fx::load("bell_invariant.code").rows,
          fx::load("fourtwotwo_prime.code").rows,
          fx::load("five_qubit.code").rows.with_modulus(Modulus::integer()),
          embed(fx::steane()).matrix,
          embed(fx::load("five_qubit.code").code()).matrix,
          embed(fx::load("fourtwotwo.code").code()).matrix,
          embed(fx::load("bell.code").code()).matrix};
}

// Distance (kernel mode) at several primes never exceeds d*, on the
// invariant fixtures and on embeddings of random codes.
inline Outcome distance_below_dstar(int cases = kCases, std::uint64_t seed = 606) {
  Outcome o;
  auto check = [&](const SymplecticMatrix& m, const std::vector<Int>& primes) {
    const auto dstar = integer_distance(m, m.num_registers());
    if (!dstar.distance) return o.fail("no unavoidable error found");
    for (Int p : primes) {
      const auto d = distance(instantiate(m, p), m.num_registers(), DistanceMode::kernel_only);
      if (!d.distance || *d.distance > *dstar.distance)
        o.fail("distance at p = " + std::to_string(p) + " exceeds d* = " + std::to_string(*dstar.distance));
    }
  };
  for (const auto& m : invariant_fixtures()) {
    check(m, {2, 3, 5, 7});
    ++o.cases;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < cases; ++t, ++o.cases) check(embed(draw(rng, 4).code).matrix, {2, 3, 5});
  return o;
}

inline Outcome css_preserved(int cases = kCases, std::uint64_t seed = 707) {
  std::mt19937_64 rng(seed);
  Outcome o;
  static const Int primes[] = {2, 3, 5};
  while (o.cases < cases) {
    const Int q = primes[rng() % 3];
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k1 = 1 + rng() % (n - 1), k2 = rng() % (n - k1 + 1);
    const auto code = fx::random_css(n, k1, k2, q, rng);
    if (!code) continue;
    if (!validate(*code).valid()) o.fail("generator produced an invalid CSS code");
    const auto inv = embed_css(*code);
    if (!rows_are_css(inv.matrix)) o.fail("result is not CSS");
    if (!is_invariant(inv.matrix)) o.fail("result is not invariant");
    for (Int p : {2, 3, 5, 7})
      if (!validate(instantiate(inv, p)).valid()) o.fail("invalid at p = " + std::to_string(p));
    ++o.cases;
  }
  return o;
}

inline Outcome elementary_ops(int cases = kCases, std::uint64_t seed = 808) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    auto [code, q] = draw(rng);
    auto m = code.generators();
    const std::size_t k = m.num_rows(), n = m.num_registers();
    for (int s = 0; s < 8; ++s) {
      switch (rng() % 5) {
        case 0:
          if (k > 1) {
            const std::size_t a = rng() % k, b = (a + 1 + rng() % (k - 1)) % k;
            m.row_add(a, b, static_cast<Int>(rng() % static_cast<std::uint64_t>(q)));
          }
          break;
        case 1: m.row_swap(rng() % k, rng() % k); break;
        case 2: m.row_scale(rng() % k, 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(q - 1))); break;
        case 3: m.register_swap(rng() % n, rng() % n); break;
        default: m.fourier_swap(rng() % n); break;
      }
    }
    if (!validate(m, q).valid()) o.fail("operations broke validity");
  }
  return o;
}

inline Outcome instantiate_is_standard_form(int cases = kCases, std::uint64_t seed = 909) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto [code, q] = draw(rng);
    if (instantiate(embed(code), q).generators() != standard_form(code).matrix) o.fail("mismatch");
  }
  return o;
}

}  // namespace props
