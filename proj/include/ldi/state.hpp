#pragma once

// Dense state-vector check of stabilizer codes: generalized Paulis are lifted
// to explicit tensor-product actions on C^{p^n} and the joint +1 eigenspace
// of the generators is computed numerically, independent of the symplectic
// algebra used elsewhere.

#include "ldi/stabilizer_code.hpp"
#include "ldi/symplectic.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldi {

using Complex = std::complex<double>;
using State = std::vector<Complex>;

class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultAmplitudeCap = 300'000;

inline std::size_t state_dimension(Int p, std::size_t n, std::size_t cap = kDefaultAmplitudeCap) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (d > cap / static_cast<std::size_t>(p))
      throw cap_exceeded(std::to_string(p) + "^" + std::to_string(n) + " amplitudes exceed the cap of " +
                         std::to_string(cap));
    d *= static_cast<std::size_t>(p);
  }
  return d;
}

/// ⊗_m X^{x_m} Z^{z_m} acting on |j_1 … j_n⟩ (register 0 is the most
/// significant digit), times a global phase. Applied as a permutation with
/// phases; never materialized as a matrix.
///
/// Phase convention: for odd p the bare product is used, which has order p.
/// For p = 2 each register carries an extra factor i^{x_m z_m} so that every
/// lift is Hermitian (X·Z becomes Y).
class DenseOperator {
 public:
  DenseOperator(const SymplecticVector& v, Int p, std::size_t cap = kDefaultAmplitudeCap)
      : provenance_(v.with_modulus(Modulus::prime(p))), p_(p), dim_(state_dimension(p, v.num_registers(), cap)) {
    const std::size_t n = v.num_registers();
    const double two_pi = 2.0 * std::numbers::pi;
    omega_.resize(static_cast<std::size_t>(p));
    for (Int j = 0; j < p; ++j) omega_[static_cast<std::size_t>(j)] = std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(p));
    stride_.assign(n, 1);
    for (std::size_t m = n; m-- > 1;) stride_[m - 1] = stride_[m] * static_cast<std::size_t>(p);
    if (p == 2)
      for (std::size_t m = 0; m < n; ++m)
        if (provenance_.x(m) * provenance_.z(m) % 2 == 1) phase_ *= Complex(0.0, 1.0);
  }

  Int prime() const { return p_; }
  std::size_t dimension() const { return dim_; }
  const SymplecticVector& provenance() const { return provenance_; }
  Complex phase() const { return phase_; }
  void multiply_phase(Complex c) { phase_ *= c; }

  std::string phase_convention() const {
    return p_ == 2 ? "p=2: per-register factor i^{x*z} (Hermitian lift)" : "odd p: bare product X^x Z^z";
  }

  State apply(const State& in) const {
    if (in.size() != dim_) throw std::invalid_argument("state dimension mismatch");
    State out(dim_);
    const std::size_t n = stride_.size();
    const auto p = static_cast<std::size_t>(p_);
    for (std::size_t idx = 0; idx < dim_; ++idx) {
      std::size_t target = 0, rest = idx;
      Int exponent = 0;
      for (std::size_t m = 0; m < n; ++m) {
        const std::size_t j = rest / stride_[m];
        rest %= stride_[m];
        exponent += provenance_.z(m) * static_cast<Int>(j);
        target += ((j + static_cast<std::size_t>(provenance_.x(m))) % p) * stride_[m];
      }
      out[target] = phase_ * omega_[static_cast<std::size_t>(exponent % p_)] * in[idx];
    }
    return out;
  }

  /// (1/p) Σ_a U^a ψ; the projector onto the +1 eigenspace when U^p = 1.
  State average(const State& in) const {
    const std::size_t order = p_ == 2 ? 2 : static_cast<std::size_t>(p_);
    State acc = in, power = in;
    for (std::size_t a = 1; a < order; ++a) {
      power = apply(power);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += power[i];
    }
    for (auto& c : acc) c /= static_cast<double>(order);
    return acc;
  }

 private:
  SymplecticVector provenance_;
  Int p_;
  std::size_t dim_;
  Complex phase_{1.0, 0.0};
  std::vector<Complex> omega_;
  std::vector<std::size_t> stride_;
};

inline DenseOperator lift(const SymplecticVector& v, Int p, std::size_t cap = kDefaultAmplitudeCap) {
  require_prime(p);
  return DenseOperator(v, p, cap);
}

inline double norm(const State& s) {
  double acc = 0.0;
  for (const auto& c : s) acc += std::norm(c);
  return std::sqrt(acc);
}

inline Complex inner(const State& a, const State& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline State basis_state(Int p, const std::vector<Int>& digits) {
  std::size_t idx = 0, dim = 1;
  for (Int d : digits) {
    idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(mod(d, p));
    dim *= static_cast<std::size_t>(p);
  }
  State s(dim, 0.0);
  s[idx] = 1.0;
  return s;
}

/// (1/√q) Σ_j |j, −j mod q⟩
inline State bell_codeword(Int q) {
  require_prime(q);
  const auto dim = static_cast<std::size_t>(q * q);
  State s(dim, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(q));
  for (Int j = 0; j < q; ++j) s[static_cast<std::size_t>(j * q + mod(q - j, q))] += amp;
  return s;
}

/// s|ψ⟩ = |ψ⟩ for every generator, to the given tolerance.
inline bool verify_stabilized(const State& psi, const StabilizerCode& code, double tol = 1e-10) {
  const std::size_t dim = state_dimension(code.q(), code.n(), std::max(psi.size(), kDefaultAmplitudeCap));
  if (psi.size() != dim) throw std::invalid_argument("state dimension does not match the code");
  for (const auto& g : code.generators().rows()) {
    const State out = lift(g, code.q(), dim).apply(psi);
    double diff = 0.0;
    for (std::size_t i = 0; i < dim; ++i) diff += std::norm(out[i] - psi[i]);
    if (std::sqrt(diff) > tol) return false;
  }
  return true;
}

struct CodespaceCertificate {
  Int p = 0;
  std::size_t n = 0, k = 0;
  std::size_t dimension = 0;
  std::size_t expected = 0;
  /// Orthonormal basis of the joint +1 eigenspace.
  std::vector<State> basis;
  /// Generators whose lift had to be rescaled by a root of unity.
  std::vector<std::string> adjustments;
  std::string phase_convention;

  bool matches() const { return dimension == expected; }
};

namespace detail {

inline State random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  State s(dim);
  for (auto& c : s) c = Complex(gauss(rng), gauss(rng));
  const double nr = norm(s);
  for (auto& c : s) c /= nr;
  return s;
}

}  // namespace detail

/// Lifted generators at the code's prime, with any phase rescaling needed
/// to give each one a nonempty +1 eigenspace.
inline std::vector<DenseOperator> lift_generators(const StabilizerCode& code, std::size_t cap,
                                                  std::vector<std::string>* adjustments = nullptr) {
  const Int p = code.q();
  const std::size_t dim = state_dimension(p, code.n(), cap);
  std::mt19937_64 rng(0x5eed);
  std::vector<DenseOperator> ops;
  for (std::size_t i = 0; i < code.k(); ++i) {
    DenseOperator op = lift(code.generators().row(i), p, cap);
    const State probe = detail::random_state(dim, rng);
    if (norm(op.average(probe)) < 1e-9) {
      const std::size_t roots = p == 2 ? 4 : static_cast<std::size_t>(p);
      bool fixed = false;
      for (std::size_t c = 1; c < roots && !fixed; ++c) {
        DenseOperator trial = op;
        trial.multiply_phase(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(c) / static_cast<double>(roots)));
        if (norm(trial.average(probe)) >= 1e-9) {
          if (adjustments)
            adjustments->push_back("generator " + std::to_string(i) + " rescaled by exp(2πi·" + std::to_string(c) + "/" +
                                   std::to_string(roots) + ")");
          op = trial;
          fixed = true;
        }
      }
      if (!fixed) throw std::runtime_error("generator " + std::to_string(i) + " has no +1 eigenspace under any phase");
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

/// Orthonormal basis of the joint +1 eigenspace, grown from projected random
/// vectors until two successive draws add nothing new.
inline CodespaceCertificate codespace_dimension(const StabilizerCode& code, std::size_t cap = kDefaultAmplitudeCap) {
  const Int p = code.q();
  CodespaceCertificate cert;
  cert.p = p;
  cert.n = code.n();
  cert.k = code.k();
  const std::size_t dim = state_dimension(p, code.n(), cap);
  cert.expected = 1;
  for (std::size_t i = 0; i < code.n() - std::min(code.n(), code.k()); ++i) cert.expected *= static_cast<std::size_t>(p);

  const auto ops = lift_generators(code, cap, &cert.adjustments);
  cert.phase_convention = ops.empty() ? lift(code.generators().row(0), p, cap).phase_convention() : ops.front().phase_convention();

  std::mt19937_64 rng(0xc0de);
  int misses = 0;
  while (misses < 2 && cert.basis.size() < dim) {
    State v = detail::random_state(dim, rng);
    for (const auto& op : ops) v = op.average(v);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : cert.basis) {
        const Complex c = inner(b, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= c * b[i];
      }
    const double nr = norm(v);
    if (nr < 1e-8) {
      ++misses;
      continue;
    }
    misses = 0;
    for (auto& c : v) c /= nr;
    cert.basis.push_back(std::move(v));
  }
  cert.dimension = cert.basis.size();
  return cert;
}

/// Largest ‖(1 − Π)Uψ‖ over the basis vectors ψ, Π the projector onto span(basis).
inline double codespace_leakage(const DenseOperator& op, const std::vector<State>& basis) {
  double worst = 0.0;
  for (const auto& psi : basis) {
    State v = op.apply(psi);
    for (const auto& b : basis) {
      const Complex c = inner(b, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    worst = std::max(worst, norm(v));
  }
  return worst;
}

/// ⟨b_i|U|b_j⟩ on the given basis.
inline std::vector<std::vector<Complex>> restricted_matrix(const DenseOperator& op, const std::vector<State>& basis) {
  std::vector<std::vector<Complex>> m(basis.size(), std::vector<Complex>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const State v = op.apply(basis[j]);
    for (std::size_t i = 0; i < basis.size(); ++i) m[i][j] = inner(basis[i], v);
  }
  return m;
}

}  // namespace ldi
