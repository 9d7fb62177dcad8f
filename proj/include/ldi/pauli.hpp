#pragma once

#include "ldi/symplectic.hpp"

#include <span>
#include <string>
#include <vector>

namespace ldi {

/// X^x Z^z on one register.
struct RegisterPower {
  Int x = 0;
  Int z = 0;
  bool operator==(const RegisterPower&) const = default;
};

using PauliExponents = std::vector<RegisterPower>;

/// φ_q: exponents are reduced mod q, the global phase is discarded.
inline SymplecticVector phi_encode(std::span<const RegisterPower> pauli, Int q) {
  require_prime(q);
  std::vector<Int> x, z;
  x.reserve(pauli.size());
  z.reserve(pauli.size());
  for (const auto& r : pauli) {
    x.push_back(r.x);
    z.push_back(r.z);
  }
  return {std::move(x), std::move(z), Modulus::prime(q)};
}

/// φ_∞: exponents kept as signed integers.
inline SymplecticVector phi_encode_integer(std::span<const RegisterPower> pauli) {
  std::vector<Int> x, z;
  for (const auto& r : pauli) {
    x.push_back(r.x);
    z.push_back(r.z);
  }
  return {std::move(x), std::move(z), Modulus::integer()};
}

inline PauliExponents exponents(const SymplecticVector& v) {
  PauliExponents out(v.num_registers());
  for (std::size_t m = 0; m < v.num_registers(); ++m) out[m] = {v.x(m), v.z(m)};
  return out;
}

namespace detail {

inline std::string power_token(char letter, Int e) {
  if (e == 1) return std::string(1, letter);
  if (e < 0) return std::string(1, letter) + "^{" + std::to_string(e) + "}";
  return std::string(1, letter) + "^" + std::to_string(e);
}

inline std::string register_token(Int x, Int z, bool qubit) {
  if (x == 0 && z == 0) return "I";
  if (qubit && x == 1 && z == 1) return "Y";
  std::string s;
  if (x != 0) s += power_token('X', x);
  if (z != 0) s += power_token('Z', z);
  return s;
}

}  // namespace detail

/// Inverse of φ up to phase. Registers print as I, X, Z, X^2, X^{-1}Z, ...
/// (Y for X·Z over qubits); all-single-letter strings are printed contiguously.
inline std::string phi_decode(const SymplecticVector& v) {
  const bool qubit = v.modulus().is_prime() && v.modulus().value() == 2;
  std::vector<std::string> tokens;
  bool contiguous = true;
  for (std::size_t m = 0; m < v.num_registers(); ++m) {
    tokens.push_back(detail::register_token(v.x(m), v.z(m), qubit));
    contiguous = contiguous && tokens.back().size() == 1;
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !contiguous) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace ldi
