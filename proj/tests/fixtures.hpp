#pragma once

// Shared test helpers: fixture loading, random code generators and a
// brute-force distance oracle that shares no code with the library search.

#include "ldi/io.hpp"
#include "ldi/ldi.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fx {

using namespace ldi;

inline std::string data_path(const std::string& name) { return std::string(LDI_DATA_DIR) + "/" + name; }

inline CodeFile load(const std::string& name) { return load_code_file(data_path(name)); }

inline StabilizerCode code(const std::vector<std::string>& paulis, Int q, std::string name = {}) {
  std::vector<SymplecticVector> rows;
  for (const auto& s : paulis) rows.push_back(parse_pauli_string(s, q));
  return StabilizerCode(SymplecticMatrix(std::move(rows)), std::move(name));
}

inline SymplecticMatrix integer_rows(const std::vector<std::vector<Int>>& flat) {
  std::vector<SymplecticVector> rows;
  for (const auto& r : flat) rows.push_back(SymplecticVector::from_flat(r, Modulus::integer()));
  return SymplecticMatrix(std::move(rows));
}

// Hamming [7,4] parity checks, used for both halves of the Steane code.
inline const std::vector<std::vector<Int>> kHamming = {
    {1, 0, 0, 1, 0, 1, 1}, {0, 1, 0, 1, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 1}};

inline StabilizerCode steane() {
  std::vector<SymplecticVector> rows;
  for (int half = 0; half < 2; ++half)
    for (const auto& h : kHamming) {
      SymplecticVector v(7, Modulus::prime(2));
      for (std::size_t m = 0; m < 7; ++m) (half == 0 ? v.set_x(m, h[m]) : v.set_z(m, h[m]));
      rows.push_back(v);
    }
  return StabilizerCode(SymplecticMatrix(std::move(rows)), "steane");
}

inline Int plain_product(const std::vector<Int>& u, const std::vector<Int>& v) {
  const std::size_t n = u.size() / 2;
  Int s = 0;
  for (std::size_t m = 0; m < n; ++m) s += u[m] * v[n + m] - v[m] * u[n + m];
  return s;
}

inline std::vector<Int> flat(const SymplecticVector& v) { return {v.coefficients().begin(), v.coefficients().end()}; }

// Rank mod p by a separate elimination written for the tests.
inline std::size_t oracle_rank(std::vector<std::vector<Int>> a, Int p) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (auto& row : a)
    for (auto& e : row) e = ((e % p) + p) % p;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Int inv = 1;
    while ((a[r][c] * inv) % p != 1) ++inv;
    for (auto& e : a[r]) e = (e * inv) % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Int f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Random valid [[n, n-k]]_q code: Z on the first k registers, pushed through
// random symplectic transvections v -> v + ⊙(v,h) h, then mixed by row ops.
inline StabilizerCode random_code(std::size_t n, std::size_t k, Int q, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> digit(0, q - 1);
  std::vector<std::vector<Int>> rows(k, std::vector<Int>(2 * n, 0));
  for (std::size_t i = 0; i < k; ++i) rows[i][n + i] = 1;
  const int sweeps = 3 + static_cast<int>(n);
  for (int t = 0; t < sweeps; ++t) {
    std::vector<Int> h(2 * n);
    for (auto& e : h) e = digit(rng);
    for (auto& r : rows) {
      const Int c = ((plain_product(r, h) % q) + q) % q;
      for (std::size_t j = 0; j < 2 * n; ++j) r[j] = (r[j] + c * h[j]) % q;
    }
  }
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t a = rng() % k, b = rng() % k;
    if (a == b) continue;
    const Int c = digit(rng);
    for (std::size_t j = 0; j < 2 * n; ++j) rows[a][j] = (rows[a][j] + c * rows[b][j]) % q;
  }
  std::vector<SymplecticVector> out;
  for (const auto& r : rows) out.push_back(SymplecticVector::from_flat(r, Modulus::prime(q)));
  return StabilizerCode(SymplecticMatrix(std::move(out)));
}

inline std::vector<Int> digits(std::uint64_t idx, std::size_t len, Int q) {
  std::vector<Int> v(len);
  for (std::size_t j = 0; j < len; ++j) {
    v[j] = static_cast<Int>(idx % static_cast<std::uint64_t>(q));
    idx /= static_cast<std::uint64_t>(q);
  }
  return v;
}

inline std::uint64_t upow(Int q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(q);
  return r;
}

// Random CSS code: k1 independent X checks, then k2 independent Z checks
// drawn from the vectors orthogonal to every X check (found by enumeration).
inline std::optional<StabilizerCode> random_css(std::size_t n, std::size_t k1, std::size_t k2, Int q,
                                                std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> digit(0, q - 1);
  std::vector<std::vector<Int>> hx;
  for (int tries = 0; hx.size() < k1 && tries < 100; ++tries) {
    std::vector<Int> v(n);
    for (auto& e : v) e = digit(rng);
    auto trial = hx;
    trial.push_back(v);
    if (oracle_rank(trial, q) == trial.size()) hx = trial;
  }
  if (hx.size() < k1) return std::nullopt;
  std::vector<std::vector<Int>> orth;
  for (std::uint64_t idx = 1; idx < upow(q, n); ++idx) {
    const auto v = digits(idx, n, q);
    bool ok = true;
    for (const auto& h : hx) {
      Int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += h[j] * v[j];
      ok = ok && s % q == 0;
    }
    if (ok) orth.push_back(v);
  }
  std::shuffle(orth.begin(), orth.end(), rng);
  std::vector<std::vector<Int>> hz;
  for (const auto& v : orth) {
    if (hz.size() == k2) break;
    auto trial = hz;
    trial.push_back(v);
    if (oracle_rank(trial, q) == trial.size()) hz = trial;
  }
  if (hz.size() < k2) return std::nullopt;
  std::vector<SymplecticVector> rows;
  for (const auto& h : hx) {
    SymplecticVector v(n, Modulus::prime(q));
    for (std::size_t j = 0; j < n; ++j) v.set_x(j, h[j]);
    rows.push_back(v);
  }
  for (const auto& h : hz) {
    SymplecticVector v(n, Modulus::prime(q));
    for (std::size_t j = 0; j < n; ++j) v.set_z(j, h[j]);
    rows.push_back(v);
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  return StabilizerCode(SymplecticMatrix(std::move(rows)));
}

// Every element of the row span mod p, by enumerating coefficient vectors.
inline std::vector<std::vector<Int>> span(const SymplecticMatrix& g, Int p) {
  std::vector<std::vector<Int>> out;
  const std::size_t k = g.num_rows(), len = 2 * g.num_registers();
  for (std::uint64_t idx = 0; idx < upow(p, k); ++idx) {
    const auto c = digits(idx, k, p);
    std::vector<Int> v(len, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < len; ++j) v[j] = (v[j] + c[i] * (((g.row(i)[j] % p) + p) % p)) % p;
    out.push_back(v);
  }
  return out;
}

// Minimum weight of a nonzero error in Z_p^{2n} with zero syndrome mod p
// (outside the stabilizer span when exclude is set), over all p^{2n} errors.
inline std::optional<std::size_t> naive_distance(const SymplecticMatrix& g, Int p, bool exclude) {
  const std::size_t n = g.num_registers();
  std::vector<std::vector<Int>> rows;
  for (const auto& r : g.rows()) {
    auto f = flat(r);
    for (auto& e : f) e = ((e % p) + p) % p;
    rows.push_back(f);
  }
  const auto s = exclude ? span(g, p) : std::vector<std::vector<Int>>{};
  std::optional<std::size_t> best;
  for (std::uint64_t idx = 1; idx < upow(p, 2 * n); ++idx) {
    const auto e = digits(idx, 2 * n, p);
    std::size_t w = 0;
    for (std::size_t m = 0; m < n; ++m) w += (e[m] || e[n + m]) ? 1 : 0;
    if (best && w >= *best) continue;
    bool undetected = true;
    for (const auto& r : rows) undetected = undetected && plain_product(e, r) % p == 0;
    if (!undetected) continue;
    if (exclude && std::find(s.begin(), s.end(), e) != s.end()) continue;
    best = w;
  }
  return best;
}

}  // namespace fx
