#pragma once

// Conversion of a stabilizer code over Z_q into local-dimension-invariant
// form, and the bounds that govern distance preservation when the invariant
// code is read modulo another prime.

#include "ldi/linalg.hpp"
#include "ldi/stabilizer_code.hpp"
#include "ldi/symplectic.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ldi {

/// k×k matrix of exact integer symplectic products between rows.
inline IntMatrix commutator_matrix(const SymplecticMatrix& m) {
  const std::size_t k = m.num_rows();
  IntMatrix c(k, std::vector<Int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      c[i][j] = symplectic_product(m.row(i), m.row(j), Modulus::integer());
      c[j][i] = checked::neg(c[i][j]);
    }
  return c;
}

/// Strictly lower-triangular part of the commutator matrix.
inline IntMatrix lower_correction(const SymplecticMatrix& m) {
  IntMatrix l = commutator_matrix(m);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i; j < l.size(); ++j) l[i][j] = 0;
  return l;
}

struct InvariantCode {
  StabilizerCode source;
  /// Canonical form (mod q) the correction was applied to.
  CanonicalForm canonical;
  /// Strictly lower-triangular correction added into the Z_1 block.
  IntMatrix correction;
  /// Corrected matrix in the canonical register frame: (I_k X_2 | Z_1 + L, Z_2).
  SymplecticMatrix canonical_matrix;
  /// Register operations undone to obtain `matrix` from `canonical_matrix`;
  /// empty when `matrix` is expressed in the canonical frame.
  Transcript frame_change;
  /// The invariant generator matrix, integer modulus.
  SymplecticMatrix matrix;
  Int max_entry_B = 0;

  std::size_t n() const { return matrix.num_registers(); }
  std::size_t k() const { return matrix.num_rows(); }
  Int q() const { return source.q(); }

  /// Matrix-frame vector → canonical-frame vector.
  SymplecticVector to_canonical_frame(const SymplecticVector& v) const { return frame_change.forward_registers(v); }
  SymplecticVector from_canonical_frame(const SymplecticVector& v) const {
    return frame_change.backward_registers(v);
  }
};

namespace detail {

inline std::string describe_matrix_mismatch(const char* what) {
  return std::string("embedding post-condition violated: ") + what;
}

}  // namespace detail

/// Applies the lower-triangular correction to a canonical form of `source`.
/// Both post-conditions (entry-wise agreement mod q, exact commutation over
/// the integers) are re-checked before returning.
inline InvariantCode embed_canonical(const StabilizerCode& source, CanonicalForm canonical) {
  if (!has_identity_block(canonical.matrix))
    throw std::invalid_argument("embed needs a matrix with an identity X block");
  const std::size_t k = canonical.matrix.num_rows();
  SymplecticMatrix lifted = canonical.matrix.with_modulus(Modulus::integer());
  IntMatrix l = lower_correction(lifted);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (l[i][j] != 0) lifted.row(i).set_z(j, checked::add(lifted.z(i, j), l[i][j]));

  if (!is_invariant(lifted)) {
    std::ostringstream os;
    os << detail::describe_matrix_mismatch("rows do not commute exactly over the integers");
    throw std::logic_error(os.str());
  }
  if (lifted.with_modulus(canonical.matrix.modulus()) != canonical.matrix)
    throw std::logic_error(detail::describe_matrix_mismatch("result differs from the canonical form mod q"));

  InvariantCode out{source, std::move(canonical), std::move(l), lifted, {}, lifted, lifted.max_abs_entry()};
  return out;
}

inline InvariantCode embed(const StabilizerCode& code) { return embed_canonical(code, standard_form(code)); }

// ---------------------------------------------------------------------------
// Bounds

/// Upper bound (2 + (n−k)(q−1))(q−1) on the largest entry of an embedding.
inline Int bound_B(std::size_t n, std::size_t k, Int q) {
  if (k > n) throw std::invalid_argument("bound_B needs k <= n");
  require_prime(q);
  const Int qm = q - 1;
  return checked::mul(checked::add(2, checked::mul(static_cast<Int>(n - k), qm)), qm);
}

/// B^{2(d−1)} · (2(d−1))^{d−1}; every prime strictly above it preserves
/// distance d. Equals 1 for d = 1.
inline BigInt p_star(Int B, Int d) {
  if (B < 1 || d < 1) throw std::invalid_argument("p_star needs B >= 1 and d >= 1");
  const auto e = static_cast<unsigned>(d - 1);
  return ipow(BigInt(B), 2 * e) * ipow(BigInt(2 * (d - 1)), e);
}

/// Cutoff beyond which the integer distance d* is attained. Pass k when d*
/// is unknown, since d* ≤ k.
inline BigInt p_star_for_dstar(Int B, Int d_star_or_k) { return p_star(B, d_star_or_k); }

struct HammingCutoff {
  /// False when t ≥ k, where the bound says nothing.
  bool applicable = false;
  double value = 0.0;
  std::size_t t = 0;

  /// Only values above 2 restrict anything.
  bool restricts() const { return applicable && value > 2.0; }
  /// Primes strictly below the cutoff must lose distance.
  bool excludes(Int p) const { return restricts() && static_cast<double>(p) < value; }
};

inline BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

/// sqrt(1 + C(n,t)^{1/(k−t)}) with t = ⌊(d−1)/2⌋ and k the number of
/// stabilizer generators.
inline HammingCutoff p_double_star(std::size_t n, std::size_t k, std::size_t d) {
  if (d < 1) throw std::invalid_argument("p_double_star needs d >= 1");
  HammingCutoff h;
  h.t = (d - 1) / 2;
  if (h.t >= k) return h;
  h.applicable = true;
  const long double c = binomial(n, h.t).convert_to<long double>();
  h.value = static_cast<double>(std::sqrt(1.0L + std::pow(c, 1.0L / static_cast<long double>(k - h.t))));
  return h;
}

struct PrimeInstance {
  Int p = 0;
  bool valid = false;
  std::optional<std::size_t> distance;
};

struct EmbeddingReport {
  Int B = 0;
  Int B_bound = 0;
  std::optional<std::size_t> design_distance;
  std::optional<BigInt> p_star;
  BigInt p_star_loose = 1;
  std::optional<HammingCutoff> p_double_star;
  std::vector<PrimeInstance> per_prime;
};

/// B, its bound, and the two cutoffs for an invariant matrix derived from a
/// code over Z_q with known design distance d (when given).
inline EmbeddingReport bounds_report(const SymplecticMatrix& invariant_matrix, Int q, std::optional<std::size_t> d) {
  const std::size_t n = invariant_matrix.num_registers(), k = invariant_matrix.num_rows();
  EmbeddingReport r;
  r.B = invariant_matrix.max_abs_entry();
  r.B_bound = bound_B(n, k, q);
  const Int b = std::max<Int>(r.B, 1);
  r.p_star_loose = p_star_for_dstar(b, static_cast<Int>(std::max<std::size_t>(k, 1)));
  if (d) {
    r.design_distance = d;
    r.p_star = p_star(b, static_cast<Int>(*d));
    r.p_double_star = p_double_star(n, k, *d);
  }
  return r;
}

inline EmbeddingReport bounds_report(const InvariantCode& inv, std::optional<std::size_t> d) {
  return bounds_report(inv.matrix, inv.q(), d);
}

// ---------------------------------------------------------------------------

/// Reads an invariant code modulo a prime.
inline StabilizerCode instantiate(const SymplecticMatrix& integer_matrix, Int p, std::string name = {}) {
  require_prime(p, "instantiation prime");
  return StabilizerCode(integer_matrix.with_modulus(Modulus::prime(p)), std::move(name));
}

inline StabilizerCode instantiate(const InvariantCode& inv, Int p) {
  StabilizerCode code = instantiate(inv.matrix, p, inv.source.name());
  const auto rep = validate(code);
  if (!rep.valid()) throw std::logic_error("instantiation of an invariant code is invalid: " + rep.summary());
  return code;
}

// ---------------------------------------------------------------------------
// CSS codes

struct CssPartition {
  std::vector<std::size_t> x_rows;
  std::vector<std::size_t> z_rows;
};

/// Split into X-only and Z-only generators, if every generator is one or the other.
inline std::optional<CssPartition> is_css(const StabilizerCode& code) {
  CssPartition part;
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.num_rows(); ++i) {
    bool has_x = false, has_z = false;
    for (std::size_t m = 0; m < g.num_registers(); ++m) {
      has_x = has_x || g.x(i, m) != 0;
      has_z = has_z || g.z(i, m) != 0;
    }
    if (has_x && has_z) return std::nullopt;
    (has_z ? part.z_rows : part.x_rows).push_back(i);
  }
  return part;
}

inline bool rows_are_css(const SymplecticMatrix& m) {
  for (const auto& r : m.rows()) {
    bool has_x = false, has_z = false;
    for (std::size_t c = 0; c < m.num_registers(); ++c) {
      has_x = has_x || r.x(c) != 0;
      has_z = has_z || r.z(c) != 0;
    }
    if (has_x && has_z) return false;
  }
  return true;
}

namespace detail {

/// Gauss–Jordan on rows [begin, end) of one half (X when use_x), skipping
/// the listed registers. Returns the pivot register of each row.
inline std::vector<std::size_t> reduce_block(SymplecticMatrix& m, Transcript& t, std::size_t begin, std::size_t end,
                                             bool use_x, const std::vector<bool>& excluded) {
  const Int q = m.modulus().value();
  auto at = [&](std::size_t i, std::size_t c) { return use_x ? m.x(i, c) : m.z(i, c); };
  std::vector<std::size_t> pivots;
  std::size_t r = begin;
  for (std::size_t c = 0; c < m.num_registers() && r < end; ++c) {
    if (excluded[c]) continue;
    std::size_t row = r;
    while (row < end && at(row, c) == 0) ++row;
    if (row == end) continue;
    if (row != r) t.apply(m, RowSwap{r, row});
    if (at(r, c) != 1) t.apply(m, RowScale{r, inverse_mod(at(r, c), q)});
    for (std::size_t i = begin; i < end; ++i)
      if (i != r && at(i, c) != 0) t.apply(m, RowAdd{i, r, mod(-at(i, c), q)});
    pivots.push_back(c);
    ++r;
  }
  if (r != end) throw std::logic_error("CSS reduction: block is rank deficient");
  return pivots;
}

}  // namespace detail

/// Canonical form of a CSS code reached by reducing the X and Z generator
/// blocks separately and Fourier-swapping the Z pivot registers.
inline CanonicalForm css_standard_form(const StabilizerCode& code) {
  require_valid(code);
  const auto part = is_css(code);
  if (!part) throw std::invalid_argument("code is not CSS");
  const Int q = code.q();
  const std::size_t n = code.n(), k = code.k(), k1 = part->x_rows.size();

  CanonicalForm out{code.generators(), {}};
  SymplecticMatrix& m = out.matrix;
  Transcript& t = out.transcript;

  // X rows first, preserving relative order.
  std::vector<std::size_t> order = part->x_rows;
  order.insert(order.end(), part->z_rows.begin(), part->z_rows.end());
  std::vector<std::size_t> row_at(k), pos_of(k);
  for (std::size_t i = 0; i < k; ++i) row_at[i] = pos_of[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t from = pos_of[order[i]];
    if (from == i) continue;
    t.apply(m, RowSwap{i, from});
    const std::size_t displaced = row_at[i];
    std::swap(row_at[i], row_at[from]);
    pos_of[displaced] = from;
    pos_of[order[i]] = i;
  }

  std::vector<bool> excluded(n, false);
  const auto p1 = detail::reduce_block(m, t, 0, k1, true, excluded);
  for (auto c : p1) excluded[c] = true;
  const auto p2 = detail::reduce_block(m, t, k1, k, false, excluded);

  for (auto c : p2) t.apply(m, FourierSwap{c});
  for (std::size_t i = k1; i < k; ++i) t.apply(m, RowScale{i, q - 1});

  std::vector<std::size_t> pivot_register = p1;
  pivot_register.insert(pivot_register.end(), p2.begin(), p2.end());
  std::vector<std::size_t> reg_at(n), where(n);
  for (std::size_t i = 0; i < n; ++i) reg_at[i] = where[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t from = where[pivot_register[i]];
    if (from == i) continue;
    t.apply(m, RegisterSwap{i, from});
    const std::size_t displaced = reg_at[i];
    std::swap(reg_at[i], reg_at[from]);
    where[displaced] = from;
    where[pivot_register[i]] = i;
  }
  if (!has_identity_block(m)) throw std::logic_error("CSS reduction: identity block did not assemble");
  return out;
}

/// Embedding that keeps a CSS code CSS: reduce, embed, then undo the
/// register relabelling and Fourier swaps so rows are again X-only or Z-only.
inline InvariantCode embed_css(const StabilizerCode& code) {
  InvariantCode inv = embed_canonical(code, css_standard_form(code));
  inv.frame_change = inv.canonical.transcript.register_part();
  inv.matrix = inv.frame_change.backward_registers(inv.canonical_matrix);
  if (!rows_are_css(inv.matrix)) throw std::logic_error("embed_css: result is not CSS");
  if (!is_invariant(inv.matrix)) throw std::logic_error("embed_css: result is not invariant");
  return inv;
}

}  // namespace ldi
