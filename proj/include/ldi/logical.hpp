#pragma once

#include "ldi/embedding.hpp"
#include "ldi/linalg.hpp"
#include "ldi/stabilizer_code.hpp"
#include "ldi/symplectic.hpp"

#include <stdexcept>
#include <vector>

namespace ldi {

struct LogicalSet {
  std::vector<SymplecticVector> x_logicals;
  std::vector<SymplecticVector> z_logicals;
  Modulus modulus = Modulus::integer();
  /// pairing[i][j] = ⊙(X̄_i, Z̄_j), reduced under `modulus`.
  IntMatrix pairing;

  std::size_t size() const { return x_logicals.size(); }
  bool empty() const { return x_logicals.empty(); }
};

inline IntMatrix product_matrix(const std::vector<SymplecticVector>& a, const std::vector<SymplecticVector>& b,
                                Modulus modulus) {
  IntMatrix out(a.size(), std::vector<Int>(b.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i][j] = symplectic_product(a[i], b[j], modulus);
  return out;
}

/// Rows (z_g | −x_g) such that M·e lists ⊙(e, g) for each generator g.
inline IntMatrix syndrome_map(const SymplecticMatrix& g) {
  const std::size_t n = g.num_registers();
  IntMatrix m(g.num_rows(), std::vector<Int>(2 * n));
  for (std::size_t i = 0; i < g.num_rows(); ++i)
    for (std::size_t c = 0; c < n; ++c) {
      m[i][c] = g.z(i, c);
      m[i][n + c] = g.modulus().reduce(checked::neg(g.x(i, c)));
    }
  return m;
}

/// n−k logical pairs mod q with ⊙(X̄_i, Z̄_j) = δ_ij and all other
/// logical–logical and logical–stabilizer products zero.
///
/// The normalizer of the stabilizer is completed from a basis of the
/// stabilizer span, and the complement is paired off by symplectic
/// Gram–Schmidt.
inline LogicalSet logical_operators(const StabilizerCode& code) {
  require_valid(code);
  const Int q = code.q();
  const Modulus mq = Modulus::prime(q);
  const std::size_t n = code.n();
  LogicalSet out;
  out.modulus = mq;
  if (code.logical_count() == 0) return out;

  const auto& g = code.generators();
  IntMatrix spanning = to_int_matrix(g);
  std::vector<SymplecticVector> complement;
  for (auto& v : nullspace_mod(syndrome_map(g), 2 * n, q)) {
    if (rref_mod(spanning, q).contains(v)) continue;
    spanning.push_back(v);
    complement.push_back(SymplecticVector::from_flat(v, mq));
  }
  if (complement.size() != 2 * code.logical_count())
    throw std::logic_error("logical_operators: normalizer has unexpected dimension");

  while (!complement.empty()) {
    SymplecticVector a = complement.front();
    std::size_t partner = 0;
    for (std::size_t i = 1; i < complement.size() && partner == 0; ++i)
      if (symplectic_product(a, complement[i]) != 0) partner = i;
    if (partner == 0) throw std::logic_error("logical_operators: degenerate symplectic complement");
    SymplecticVector b = complement[partner].scaled(inverse_mod(symplectic_product(a, complement[partner]), q));
    complement.erase(complement.begin() + static_cast<std::ptrdiff_t>(partner));
    complement.erase(complement.begin());
    for (auto& c : complement) {
      const Int alpha = mod(-symplectic_product(c, b), q);
      const Int beta = symplectic_product(c, a);
      c.add_scaled(a, alpha);
      c.add_scaled(b, beta);
    }
    out.x_logicals.push_back(std::move(a));
    out.z_logicals.push_back(std::move(b));
  }
  out.pairing = product_matrix(out.x_logicals, out.z_logicals, mq);
  return out;
}

struct InvariantLogicalSet {
  LogicalSet logicals;  // integer modulus
  IntMatrix xx_products;
  IntMatrix zz_products;
  BigInt pairing_determinant = 1;
  /// Primes dividing the pairing determinant; the logicals degenerate there.
  std::vector<BigInt> bad_primes;
};

inline std::vector<BigInt> prime_divisors(BigInt v) {
  if (v < 0) v = -v;
  std::vector<BigInt> out;
  if (v == 0) return out;
  for (BigInt d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// Corrects one logical, given in the frame of inv.matrix, so that it
/// commutes exactly over Z with every invariant stabilizer row. The logical
/// is appended below the stabilizers and receives the lower-triangular
/// correction in the Z_1 block; stabilizer rows are untouched.
inline SymplecticVector invariant_logical(const InvariantCode& inv, const SymplecticVector& logical) {
  const Int q = inv.q();
  if (logical.num_registers() != inv.n()) throw std::invalid_argument("logical register count mismatch");
  const SymplecticMatrix& s = inv.canonical_matrix;
  SymplecticVector ell = inv.to_canonical_frame(logical.with_modulus(Modulus::integer()));

  IntMatrix stacked = to_int_matrix(inv.canonical.matrix);
  stacked.emplace_back(ell.coefficients().begin(), ell.coefficients().end());
  if (rank_mod(stacked, q) != inv.k() + 1)
    throw std::invalid_argument("logical is not independent of the stabilizer rows mod q");

  for (std::size_t j = 0; j < inv.k(); ++j) {
    const Int c = symplectic_product(ell, s.row(j), Modulus::integer());
    if (mod(c, q) != 0) throw std::invalid_argument("logical does not commute with stabilizer " + std::to_string(j) + " mod q");
    // Relies on the identity X block of the canonical-frame stabilizers.
    if (c != 0) ell.set_z(j, checked::add(ell.z(j), c));
  }
  for (std::size_t j = 0; j < inv.k(); ++j)
    if (symplectic_product(ell, s.row(j), Modulus::integer()) != 0)
      throw std::logic_error("invariant_logical: correction did not produce exact commutation");
  return inv.from_canonical_frame(ell);
}

inline InvariantLogicalSet invariant_logicals(const InvariantCode& inv, const LogicalSet& logicals) {
  InvariantLogicalSet out;
  out.logicals.modulus = Modulus::integer();
  for (const auto& x : logicals.x_logicals) out.logicals.x_logicals.push_back(invariant_logical(inv, x));
  for (const auto& z : logicals.z_logicals) out.logicals.z_logicals.push_back(invariant_logical(inv, z));
  const Modulus zz = Modulus::integer();
  out.logicals.pairing = product_matrix(out.logicals.x_logicals, out.logicals.z_logicals, zz);
  out.xx_products = product_matrix(out.logicals.x_logicals, out.logicals.x_logicals, zz);
  out.zz_products = product_matrix(out.logicals.z_logicals, out.logicals.z_logicals, zz);
  out.pairing_determinant = determinant(out.logicals.pairing);
  out.bad_primes = prime_divisors(out.pairing_determinant);
  return out;
}

}  // namespace ldi
