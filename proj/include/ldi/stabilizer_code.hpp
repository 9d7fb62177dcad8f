#pragma once

#include "ldi/linalg.hpp"
#include "ldi/symplectic.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ldi {

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stabilizer generators over Z_q. Construction does not enforce the
/// definitional requirements; use validate() / require_valid().
class StabilizerCode {
 public:
  explicit StabilizerCode(SymplecticMatrix generators, std::string name = {})
      : generators_(std::move(generators)), name_(std::move(name)) {
    if (!generators_.modulus().is_prime()) throw std::invalid_argument("stabilizer code needs a prime modulus");
  }

  std::size_t n() const { return generators_.num_registers(); }
  std::size_t k() const { return generators_.num_rows(); }
  std::size_t logical_count() const { return n() - k(); }
  Int q() const { return generators_.modulus().value(); }
  const SymplecticMatrix& generators() const { return generators_; }
  const std::string& name() const { return name_; }

  bool operator==(const StabilizerCode&) const = default;

 private:
  SymplecticMatrix generators_;
  std::string name_;
};

inline IntMatrix to_int_matrix(const SymplecticMatrix& m) {
  IntMatrix a;
  a.reserve(m.num_rows());
  for (const auto& r : m.rows()) a.emplace_back(r.coefficients().begin(), r.coefficients().end());
  return a;
}

struct ValidationReport {
  Int q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  bool q_prime = false;
  bool commuting = false;
  /// First non-commuting generator pair (0-based) and its product mod q.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  Int offending_product = 0;
  std::size_t rank = 0;
  bool k_at_most_n = false;

  bool full_rank() const { return rank == k; }
  bool valid() const { return q_prime && commuting && full_rank() && k_at_most_n; }

  std::string summary() const {
    std::ostringstream os;
    if (valid()) {
      os << "valid [[" << n << "," << n - k << "]]_" << q << " stabilizer code";
      return os.str();
    }
    os << "invalid:";
    if (!q_prime) os << " q=" << q << " is not prime;";
    if (!commuting && offending_pair)
      os << " generators " << offending_pair->first << " and " << offending_pair->second
         << " have symplectic product " << offending_product << " mod " << q << ";";
    if (q_prime && !full_rank()) os << " rank " << rank << " < " << k << " generators;";
    if (!k_at_most_n) os << " k=" << k << " exceeds n=" << n << ";";
    return os.str();
  }
};

/// Checks q primality, pairwise commutation mod q and rank k over Z_q for a
/// generator matrix whose entries are read as integers.
inline ValidationReport validate(const SymplecticMatrix& generators, Int q) {
  ValidationReport rep;
  rep.q = q;
  rep.n = generators.num_registers();
  rep.k = generators.num_rows();
  rep.q_prime = is_prime(q);
  rep.k_at_most_n = rep.k <= rep.n;
  if (!rep.q_prime) return rep;

  const SymplecticMatrix reduced = generators.with_modulus(Modulus::prime(q));
  rep.commuting = true;
  for (std::size_t i = 0; i < rep.k && rep.commuting; ++i)
    for (std::size_t j = i + 1; j < rep.k; ++j) {
      const Int s = symplectic_product(reduced.row(i), reduced.row(j));
      if (s != 0) {
        rep.commuting = false;
        rep.offending_pair = {i, j};
        rep.offending_product = s;
        break;
      }
    }
  rep.rank = rank_mod(to_int_matrix(reduced), q);
  return rep;
}

inline ValidationReport validate(const StabilizerCode& code) { return validate(code.generators(), code.q()); }

inline void require_valid(const StabilizerCode& code) {
  const auto rep = validate(code);
  if (!rep.valid()) throw validation_error(rep.summary());
}

/// True iff every pairwise symplectic product vanishes exactly over Z.
inline bool is_invariant(const SymplecticMatrix& m) {
  for (std::size_t i = 0; i < m.num_rows(); ++i)
    for (std::size_t j = i + 1; j < m.num_rows(); ++j)
      if (symplectic_product(m.row(i), m.row(j), Modulus::integer()) != 0) return false;
  return true;
}

/// Generator matrix shaped (I_k X_2 | Z_1 Z_2) mod q, with the operations
/// that produced it from the source generators.
struct CanonicalForm {
  SymplecticMatrix matrix;
  Transcript transcript;
};

/// True iff the left k×k block of the X half is the identity.
inline bool has_identity_block(const SymplecticMatrix& m) {
  if (m.num_rows() > m.num_registers()) return false;
  for (std::size_t i = 0; i < m.num_rows(); ++i)
    for (std::size_t j = 0; j < m.num_rows(); ++j)
      if (m.x(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

/// Symplectic Gaussian elimination to (I_k X_2 | Z_1 Z_2).
///
/// Registers are scanned left to right. A register becomes the pivot of the
/// next row if some remaining row has a nonzero X entry there; if only Z
/// entries are present, the register is Fourier-swapped first. Each register
/// is pivoted at most once, and only never-pivoted registers are swapped.
/// Pivot registers are finally relabelled into the leading block.
inline CanonicalForm standard_form(const StabilizerCode& code) {
  require_valid(code);
  const Int q = code.q();
  const std::size_t n = code.n(), k = code.k();
  CanonicalForm out{code.generators(), {}};
  SymplecticMatrix& m = out.matrix;
  Transcript& t = out.transcript;

  std::vector<std::size_t> pivot_register;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < k; ++c) {
    std::optional<std::size_t> row;
    for (std::size_t i = r; i < k && !row; ++i)
      if (m.x(i, c) != 0) row = i;
    if (!row) {
      for (std::size_t i = r; i < k && !row; ++i)
        if (m.z(i, c) != 0) row = i;
      if (!row) continue;
      t.apply(m, FourierSwap{c});
    }
    if (*row != r) t.apply(m, RowSwap{r, *row});
    if (m.x(r, c) != 1) t.apply(m, RowScale{r, inverse_mod(m.x(r, c), q)});
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || m.x(i, c) == 0) continue;
      t.apply(m, RowAdd{i, r, mod(-m.x(i, c), q)});
    }
    pivot_register.push_back(c);
    ++r;
  }
  if (r != k) throw std::logic_error("standard_form: ran out of pivot registers on a full-rank input");

  // pivot_register is increasing, so position pivot_register[r] still holds
  // its original register when it is reached.
  for (std::size_t i = 0; i < k; ++i)
    if (pivot_register[i] != i) t.apply(m, RegisterSwap{i, pivot_register[i]});

  if (!has_identity_block(m)) throw std::logic_error("standard_form: identity block did not assemble");
  return out;
}

}  // namespace ldi
