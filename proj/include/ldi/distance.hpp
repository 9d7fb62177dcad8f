#pragma once

// Brute-force code distance over Z_p, integer distance d*, and
// classification of undetectable errors as artifact or unavoidable.

#include "ldi/embedding.hpp"
#include "ldi/linalg.hpp"
#include "ldi/stabilizer_code.hpp"
#include "ldi/symplectic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ldi {

enum class Verdict { detectable, artifact, unavoidable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::detectable: return "detectable";
    case Verdict::artifact: return "artifact";
    case Verdict::unavoidable: return "unavoidable";
  }
  return "?";
}

struct ErrorVerdict {
  SymplecticVector error;
  /// ⊙(error, g_i) over the integers, one entry per generator.
  std::vector<Int> integer_syndrome;
  Verdict verdict = Verdict::detectable;
  /// Error lies in the row span of the generators mod p.
  bool in_stabilizer = false;
};

/// Classifies the integer representative of `error` against the integer
/// generator rows at prime p. Entries of prime-modulus inputs are read as
/// their stored residues.
inline ErrorVerdict classify(const SymplecticVector& error, const SymplecticMatrix& generators, Int p) {
  require_prime(p);
  if (error.num_registers() != generators.num_registers())
    throw std::invalid_argument("error acts on " + std::to_string(error.num_registers()) + " registers, code has " +
                                std::to_string(generators.num_registers()));
  ErrorVerdict v{error.with_modulus(Modulus::integer()), {}, Verdict::detectable, false};
  bool zero_mod_p = true, zero_exact = true;
  for (const auto& g : generators.rows()) {
    const Int s = symplectic_product(v.error, g.with_modulus(Modulus::integer()), Modulus::integer());
    v.integer_syndrome.push_back(s);
    zero_exact = zero_exact && s == 0;
    zero_mod_p = zero_mod_p && mod(s, p) == 0;
  }
  if (zero_exact) v.verdict = Verdict::unavoidable;
  else if (zero_mod_p) v.verdict = Verdict::artifact;

  const auto echelon = rref_mod(to_int_matrix(generators), p);
  const auto coeffs = error.coefficients();
  v.in_stabilizer = echelon.contains(std::vector<Int>(coeffs.begin(), coeffs.end()));
  return v;
}

inline ErrorVerdict classify(const SymplecticVector& error, const InvariantCode& inv, Int p) {
  return classify(error, inv.matrix, p);
}

inline ErrorVerdict classify(const SymplecticVector& error, const StabilizerCode& code, Int p) {
  return classify(error, code.generators(), p);
}

enum class DistanceMode {
  /// Undetectable errors outside the stabilizer span (N(S) \ S).
  exclude_stabilizer,
  /// Every nonzero error commuting with all generators.
  kernel_only,
};

inline const char* to_string(DistanceMode m) {
  return m == DistanceMode::exclude_stabilizer ? "exclude_stabilizer" : "kernel_only";
}

struct DistanceResult {
  /// Empty when no qualifying error exists up to max_weight.
  std::optional<std::size_t> distance;
  std::optional<SymplecticVector> witness;
  DistanceMode mode = DistanceMode::exclude_stabilizer;
  std::size_t max_weight = 0;
  std::uint64_t errors_enumerated = 0;
  double seconds = 0.0;
};

// ---------------------------------------------------------------------------

namespace detail {

/// Lexicographic k-subsets of {0, …, n−1}.
inline std::vector<std::vector<std::size_t>> supports(std::size_t n, std::size_t w) {
  std::vector<std::vector<std::size_t>> out;
  if (w > n) return out;
  std::vector<std::size_t> s(w);
  for (std::size_t i = 0; i < w; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = w;
    while (i > 0 && s[i - 1] == n - w + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < w; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

/// All (a, b) ≠ (0, 0) in Z_p² with a·u + b·v ≡ rhs, in lexicographic order.
inline void solve_register(const std::vector<Int>& u, const std::vector<Int>& v, const std::vector<Int>& rhs, Int p,
                           std::vector<std::pair<Int, Int>>& out) {
  out.clear();
  IntMatrix aug;
  aug.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) aug.push_back({u[i], v[i], rhs[i]});
  const auto e = rref_mod(std::move(aug), p);
  for (auto c : e.pivots)
    if (c == 2) return;  // inconsistent
  bool a_pivot = false, b_pivot = false;
  std::size_t a_row = 0, b_row = 0;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == 0) a_pivot = true, a_row = r;
    if (e.pivots[r] == 1) b_pivot = true, b_row = r;
  }
  auto push = [&](Int a, Int b) {
    if (a != 0 || b != 0) out.emplace_back(a, b);
  };
  if (a_pivot && b_pivot) {
    push(e.rows[a_row][2], e.rows[b_row][2]);
  } else if (a_pivot) {
    // a = rhs − c·b, b free
    for (Int b = 0; b < p; ++b) push(mod(e.rows[a_row][2] - mul_mod(e.rows[a_row][1], b, p), p), b);
    std::sort(out.begin(), out.end());
  } else if (b_pivot) {
    for (Int a = 0; a < p; ++a) push(a, e.rows[b_row][2]);
  } else {
    for (Int a = 0; a < p; ++a)
      for (Int b = 0; b < p; ++b) push(a, b);
  }
}

/// Depth-first search over exponent patterns on one support. Registers but
/// the last are enumerated in odometer order; the last register is solved
/// for directly, cutting every partial syndrome that cannot be cancelled.
/// `visit` returns true to stop.
class SupportSearch {
 public:
  SupportSearch(const SymplecticMatrix& generators_mod_p, Int p) : g_(generators_mod_p), p_(p), k_(g_.num_rows()) {}

  template <typename Visit>
  bool run(const std::vector<std::size_t>& support, std::uint64_t& enumerated, Visit&& visit) {
    support_ = &support;
    pattern_.assign(support.size(), {0, 0});
    std::vector<Int> syndrome(k_, 0);
    return descend(0, syndrome, enumerated, visit);
  }

 private:
  template <typename Visit>
  bool descend(std::size_t depth, const std::vector<Int>& syndrome, std::uint64_t& enumerated, Visit& visit) {
    const std::size_t reg = (*support_)[depth];
    if (depth + 1 == support_->size()) {
      std::vector<Int> u(k_), v(k_), rhs(k_);
      for (std::size_t i = 0; i < k_; ++i) {
        u[i] = g_.z(i, reg);
        v[i] = mod(-g_.x(i, reg), p_);
        rhs[i] = mod(-syndrome[i], p_);
      }
      solve_register(u, v, rhs, p_, solutions_);
      const auto local = solutions_;
      for (const auto& [a, b] : local) {
        ++enumerated;
        pattern_[depth] = {a, b};
        if (visit(*support_, pattern_)) return true;
      }
      return false;
    }
    std::vector<Int> next(k_);
    for (Int a = 0; a < p_; ++a)
      for (Int b = 0; b < p_; ++b) {
        if (a == 0 && b == 0) continue;
        for (std::size_t i = 0; i < k_; ++i)
          next[i] = mod(syndrome[i] + mul_mod(a, g_.z(i, reg), p_) - mul_mod(b, g_.x(i, reg), p_), p_);
        pattern_[depth] = {a, b};
        if (descend(depth + 1, next, enumerated, visit)) return true;
      }
    return false;
  }

  const SymplecticMatrix& g_;
  Int p_;
  std::size_t k_;
  const std::vector<std::size_t>* support_ = nullptr;
  std::vector<std::pair<Int, Int>> pattern_;
  std::vector<std::pair<Int, Int>> solutions_;
};

inline SymplecticVector make_error(std::size_t n, Modulus modulus, const std::vector<std::size_t>& support,
                                   const std::vector<std::pair<Int, Int>>& pattern) {
  SymplecticVector e(n, modulus);
  for (std::size_t i = 0; i < support.size(); ++i) {
    e.set_x(support[i], pattern[i].first);
    e.set_z(support[i], pattern[i].second);
  }
  return e;
}

inline std::vector<Int> flat(const SymplecticVector& v) {
  const auto c = v.coefficients();
  return {c.begin(), c.end()};
}

}  // namespace detail

/// Minimum weight of an undetectable error, by increasing weight. Supports
/// are searched in lexicographic order, patterns in odometer order, so the
/// witness is the lexicographically first one of minimum weight regardless
/// of the thread count.
inline DistanceResult distance(const StabilizerCode& code, std::size_t max_weight,
                               DistanceMode mode = DistanceMode::exclude_stabilizer, unsigned threads = 1) {
  require_valid(code);
  const std::size_t n = code.n();
  if (max_weight < 1 || max_weight > n)
    throw std::invalid_argument("max_weight must lie in [1, " + std::to_string(n) + "]");
  const auto start = std::chrono::steady_clock::now();
  const Int p = code.q();
  const auto& g = code.generators();
  const auto echelon = rref_mod(to_int_matrix(g), p);
  threads = std::max(1u, threads);

  DistanceResult result;
  result.mode = mode;
  result.max_weight = max_weight;

  for (std::size_t w = 1; w <= max_weight && !result.distance; ++w) {
    const auto all = detail::supports(n, w);
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0}, best{none};
    std::atomic<std::uint64_t> enumerated{0};
    std::mutex mu;
    std::optional<SymplecticVector> best_witness;

    auto worker = [&] {
      detail::SupportSearch search(g, p);
      std::uint64_t local_count = 0;
      for (std::size_t idx = next++; idx < all.size() && idx < best.load(); idx = next++) {
        std::optional<SymplecticVector> found;
        search.run(all[idx], local_count, [&](const auto& s, const auto& pattern) {
          SymplecticVector e = detail::make_error(n, g.modulus(), s, pattern);
          if (mode == DistanceMode::exclude_stabilizer && echelon.contains(detail::flat(e))) return false;
          found = std::move(e);
          return true;
        });
        if (found) {
          std::lock_guard lock(mu);
          if (idx < best.load()) {
            best = idx;
            best_witness = std::move(found);
          }
        }
      }
      enumerated += local_count;
    };

    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    result.errors_enumerated += enumerated.load();
    if (best_witness) {
      result.distance = w;
      result.witness = std::move(best_witness);
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

/// Every error of weight 1..max_weight with zero syndrome mod p against the
/// given rows, classified. Errors carry balanced representatives in
/// (−p/2, p/2] so that exact cancellations over Z are visible. The rows need
/// not commute mod p.
inline std::vector<ErrorVerdict> enumerate_undetectable(const SymplecticMatrix& generators, Int p,
                                                        std::size_t max_weight) {
  require_prime(p);
  const std::size_t n = generators.num_registers();
  if (max_weight < 1 || max_weight > n)
    throw std::invalid_argument("max_weight must lie in [1, " + std::to_string(n) + "]");
  const SymplecticMatrix g = generators.with_modulus(Modulus::prime(p));
  std::vector<ErrorVerdict> out;
  detail::SupportSearch search(g, p);
  std::uint64_t count = 0;
  for (std::size_t w = 1; w <= max_weight; ++w)
    for (const auto& s : detail::supports(n, w))
      search.run(s, count, [&](const auto& sup, const auto& pattern) {
        SymplecticVector e(n, Modulus::integer());
        for (std::size_t i = 0; i < sup.size(); ++i) {
          e.set_x(sup[i], balanced_mod(pattern[i].first, p));
          e.set_z(sup[i], balanced_mod(pattern[i].second, p));
        }
        out.push_back(classify(e, generators, p));
        return false;
      });
  return out;
}

inline std::vector<ErrorVerdict> enumerate_undetectable(const InvariantCode& inv, Int p, std::size_t max_weight) {
  return enumerate_undetectable(inv.matrix, p, max_weight);
}

/// Integer distance d*: the smallest support on which some nonzero integer
/// error has exactly zero symplectic product with every row, found from the
/// rational rank of the k×2w syndrome submatrix. In exclude_stabilizer mode
/// the error must also lie outside the rational row span of the matrix;
/// kernel_only is the literal minimum over all unavoidable errors.
inline DistanceResult integer_distance(const SymplecticMatrix& matrix, std::size_t max_weight,
                                       DistanceMode mode = DistanceMode::kernel_only) {
  if (!is_invariant(matrix)) throw std::invalid_argument("integer_distance needs an invariant matrix");
  const std::size_t n = matrix.num_registers(), k = matrix.num_rows();
  if (max_weight < 1 || max_weight > n)
    throw std::invalid_argument("max_weight must lie in [1, " + std::to_string(n) + "]");
  const auto start = std::chrono::steady_clock::now();
  const SymplecticMatrix g = matrix.with_modulus(Modulus::integer());
  const IntMatrix rows = to_int_matrix(g);
  const std::size_t row_rank = rank_rational(rows);

  DistanceResult result;
  result.mode = mode;
  result.max_weight = max_weight;
  for (std::size_t w = 1; w <= max_weight && !result.distance; ++w) {
    for (const auto& s : detail::supports(n, w)) {
      ++result.errors_enumerated;
      // ⊙(e, g_i) = Σ_m x_e[m]·z_i[m] − z_e[m]·x_i[m]
      IntMatrix sub(k, std::vector<Int>(2 * w));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < w; ++j) {
          sub[i][j] = g.z(i, s[j]);
          sub[i][w + j] = checked::neg(g.x(i, s[j]));
        }
      if (rank_rational(sub) == 2 * w) continue;
      for (const auto& kv : nullspace_rational(sub, 2 * w)) {
        SymplecticVector e(n, Modulus::integer());
        for (std::size_t j = 0; j < w; ++j) {
          e.set_x(s[j], narrow(kv[j]));
          e.set_z(s[j], narrow(kv[w + j]));
        }
        if (mode == DistanceMode::exclude_stabilizer) {
          IntMatrix stacked = rows;
          stacked.push_back(detail::flat(e));
          if (rank_rational(stacked) == row_rank) continue;
        }
        result.distance = w;
        result.witness = std::move(e);
        break;
      }
      if (result.distance) break;
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline DistanceResult integer_distance(const InvariantCode& inv, std::size_t max_weight,
                                       DistanceMode mode = DistanceMode::kernel_only) {
  return integer_distance(inv.matrix, max_weight, mode);
}

/// Instantiates the invariant code at each prime and records validity and distance.
inline std::vector<PrimeInstance> evaluate_primes(const SymplecticMatrix& invariant_matrix, const std::vector<Int>& primes,
                                                  std::size_t max_weight,
                                                  DistanceMode mode = DistanceMode::exclude_stabilizer,
                                                  unsigned threads = 1) {
  std::vector<PrimeInstance> out;
  for (Int p : primes) {
    PrimeInstance pi;
    pi.p = p;
    StabilizerCode code = instantiate(invariant_matrix, p);
    pi.valid = validate(code).valid();
    if (pi.valid) pi.distance = distance(code, max_weight, mode, threads).distance;
    out.push_back(pi);
  }
  return out;
}

}  // namespace ldi
