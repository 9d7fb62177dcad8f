#pragma once

// Phase-free symplectic representation of n-qudit generalized Paulis.
//
// A Pauli ω^α ⊗_m X^{a_m} Z^{b_m} is stored as the length-2n vector
// (a_1 … a_n | b_1 … b_n). Entries are residues in {0, …, p−1} when the
// modulus is a prime p, and arbitrary signed integers when the modulus is
// Modulus::integer(). The phase α is not represented.

#include "ldi/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ldi {

class Modulus {
 public:
  static constexpr Modulus integer() { return Modulus{}; }
  static Modulus prime(Int p) {
    require_prime(p);
    Modulus m;
    m.value_ = p;
    return m;
  }

  constexpr bool is_integer() const { return value_ == 0; }
  constexpr bool is_prime() const { return value_ != 0; }
  /// The prime, or 0 for the integer modulus.
  constexpr Int value() const { return value_; }

  Int reduce(Int v) const { return is_integer() ? v : mod(v, value_); }

  std::string to_string() const { return is_integer() ? "integer" : std::to_string(value_); }

  constexpr bool operator==(const Modulus&) const = default;

 private:
  constexpr Modulus() = default;
  Int value_ = 0;
};

class SymplecticVector {
 public:
  SymplecticVector(std::size_t n, Modulus modulus) : n_(n), modulus_(modulus), data_(2 * n, 0) {
    if (n == 0) throw std::invalid_argument("symplectic vector needs at least one register");
  }

  SymplecticVector(std::vector<Int> x, std::vector<Int> z, Modulus modulus)
      : n_(x.size()), modulus_(modulus) {
    if (x.size() != z.size()) throw std::invalid_argument("x and z halves differ in length");
    if (n_ == 0) throw std::invalid_argument("symplectic vector needs at least one register");
    data_ = std::move(x);
    data_.insert(data_.end(), z.begin(), z.end());
    for (auto& v : data_) v = modulus_.reduce(v);
  }

  /// From a flat (x | z) coefficient list of even length.
  static SymplecticVector from_flat(std::span<const Int> flat, Modulus modulus) {
    if (flat.empty() || flat.size() % 2 != 0)
      throw std::invalid_argument("flat symplectic row must have even, nonzero length");
    const std::size_t n = flat.size() / 2;
    return {std::vector<Int>(flat.begin(), flat.begin() + n), std::vector<Int>(flat.begin() + n, flat.end()),
            modulus};
  }

  std::size_t num_registers() const { return n_; }
  Modulus modulus() const { return modulus_; }

  Int x(std::size_t m) const { return data_.at(m); }
  Int z(std::size_t m) const { return data_.at(n_ + m); }
  void set_x(std::size_t m, Int v) { data_.at(m) = modulus_.reduce(v); }
  void set_z(std::size_t m, Int v) { data_.at(n_ + m) = modulus_.reduce(v); }

  std::span<const Int> xs() const { return {data_.data(), n_}; }
  std::span<const Int> zs() const { return {data_.data() + n_, n_}; }
  /// Flat (x | z) view, length 2n.
  std::span<const Int> coefficients() const { return data_; }

  Int operator[](std::size_t i) const { return data_[i]; }
  void set(std::size_t i, Int v) { data_.at(i) = modulus_.reduce(v); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Int v) { return v == 0; });
  }

  /// Same coefficients read under another modulus. Reducing to a prime takes
  /// residues; widening to the integers keeps the stored representatives.
  SymplecticVector with_modulus(Modulus target) const {
    SymplecticVector r = *this;
    r.modulus_ = target;
    for (auto& v : r.data_) v = target.reduce(v);
    return r;
  }

  SymplecticVector& operator+=(const SymplecticVector& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = modulus_.reduce(checked::add(data_[i], other.data_[i]));
    return *this;
  }

  /// this += c·other
  void add_scaled(const SymplecticVector& other, Int c) {
    check_compatible(other);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      Int term = modulus_.is_integer() ? checked::mul(c, other.data_[i]) : mul_mod(c, other.data_[i], modulus_.value());
      data_[i] = modulus_.reduce(checked::add(data_[i], term));
    }
  }

  SymplecticVector scaled(Int c) const {
    SymplecticVector r(n_, modulus_);
    r.add_scaled(*this, c);
    return r;
  }

  friend SymplecticVector operator+(SymplecticVector a, const SymplecticVector& b) { return a += b; }

  bool operator==(const SymplecticVector&) const = default;

  void swap_registers(std::size_t a, std::size_t b) {
    check_register(a);
    check_register(b);
    std::swap(data_[a], data_[b]);
    std::swap(data_[n_ + a], data_[n_ + b]);
  }

  /// (x_m, z_m) ↦ (−z_m, x_m)
  void fourier_swap(std::size_t m) {
    check_register(m);
    const Int x = data_[m], z = data_[n_ + m];
    data_[m] = modulus_.reduce(checked::neg(z));
    data_[n_ + m] = x;
  }

  /// Inverse of fourier_swap: (x_m, z_m) ↦ (z_m, −x_m)
  void inverse_fourier_swap(std::size_t m) {
    check_register(m);
    const Int x = data_[m], z = data_[n_ + m];
    data_[m] = z;
    data_[n_ + m] = modulus_.reduce(checked::neg(x));
  }

 private:
  void check_compatible(const SymplecticVector& other) const {
    if (other.n_ != n_) throw std::invalid_argument("register count mismatch");
    if (other.modulus_ != modulus_) throw std::invalid_argument("modulus mismatch");
  }
  void check_register(std::size_t m) const {
    if (m >= n_) throw std::out_of_range("register index " + std::to_string(m) + " out of range");
  }

  std::size_t n_;
  Modulus modulus_;
  std::vector<Int> data_;
};

/// ⊙(u, v) = Σ_m x_u[m]·z_v[m] − x_v[m]·z_u[m], exact over the integers
/// or reduced mod p. ⊙(XX, ZZ) = +2.
inline Int symplectic_product(const SymplecticVector& u, const SymplecticVector& v, Modulus modulus) {
  if (u.num_registers() != v.num_registers()) throw std::invalid_argument("register count mismatch");
  const std::size_t n = u.num_registers();
  if (modulus.is_prime()) {
    const Int p = modulus.value();
    Int acc = 0;
    for (std::size_t m = 0; m < n; ++m) {
      acc += mul_mod(u.x(m), v.z(m), p);
      acc -= mul_mod(v.x(m), u.z(m), p);
      acc = mod(acc, p);
    }
    return acc;
  }
  Int acc = 0;
  for (std::size_t m = 0; m < n; ++m) {
    acc = checked::add(acc, checked::mul(u.x(m), v.z(m)));
    acc = checked::sub(acc, checked::mul(v.x(m), u.z(m)));
  }
  return acc;
}

/// Product under the vectors' own modulus.
inline Int symplectic_product(const SymplecticVector& u, const SymplecticVector& v) {
  return symplectic_product(u, v, u.modulus());
}

inline std::size_t weight(const SymplecticVector& v) {
  std::size_t w = 0;
  for (std::size_t m = 0; m < v.num_registers(); ++m)
    if (v.x(m) != 0 || v.z(m) != 0) ++w;
  return w;
}

/// Registers on which v acts non-trivially.
inline std::vector<std::size_t> support(const SymplecticVector& v) {
  std::vector<std::size_t> s;
  for (std::size_t m = 0; m < v.num_registers(); ++m)
    if (v.x(m) != 0 || v.z(m) != 0) s.push_back(m);
  return s;
}

// ---------------------------------------------------------------------------
// Elementary operations

/// row[target] += factor · row[source]
struct RowAdd {
  std::size_t target, source;
  Int factor;
  bool operator==(const RowAdd&) const = default;
};
struct RowSwap {
  std::size_t a, b;
  bool operator==(const RowSwap&) const = default;
};
struct RowScale {
  std::size_t row;
  Int factor;
  bool operator==(const RowScale&) const = default;
};
/// Relabel registers a and b (exchanges column pairs (a, a+n) and (b, b+n)).
struct RegisterSwap {
  std::size_t a, b;
  bool operator==(const RegisterSwap&) const = default;
};
/// Conjugation by the discrete Fourier transform on one register.
struct FourierSwap {
  std::size_t reg;
  bool operator==(const FourierSwap&) const = default;
};

using ElementaryOp = std::variant<RowAdd, RowSwap, RowScale, RegisterSwap, FourierSwap>;

inline bool is_register_op(const ElementaryOp& op) {
  return std::holds_alternative<RegisterSwap>(op) || std::holds_alternative<FourierSwap>(op);
}

inline std::string describe(const ElementaryOp& op) {
  struct {
    std::string operator()(const RowAdd& o) const {
      return "row_add(" + std::to_string(o.target) + "," + std::to_string(o.source) + "," + std::to_string(o.factor) + ")";
    }
    std::string operator()(const RowSwap& o) const {
      return "row_swap(" + std::to_string(o.a) + "," + std::to_string(o.b) + ")";
    }
    std::string operator()(const RowScale& o) const {
      return "row_scale(" + std::to_string(o.row) + "," + std::to_string(o.factor) + ")";
    }
    std::string operator()(const RegisterSwap& o) const {
      return "register_swap(" + std::to_string(o.a) + "," + std::to_string(o.b) + ")";
    }
    std::string operator()(const FourierSwap& o) const { return "fourier_swap(" + std::to_string(o.reg) + ")"; }
  } visitor;
  return std::visit(visitor, op);
}

class SymplecticMatrix {
 public:
  SymplecticMatrix(std::size_t n, Modulus modulus) : n_(n), modulus_(modulus) {
    if (n == 0) throw std::invalid_argument("matrix needs at least one register");
  }

  explicit SymplecticMatrix(std::vector<SymplecticVector> rows) : n_(0), modulus_(Modulus::integer()) {
    if (rows.empty()) throw std::invalid_argument("cannot infer shape from an empty row list");
    n_ = rows.front().num_registers();
    modulus_ = rows.front().modulus();
    for (auto& r : rows) append(std::move(r));
  }

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_registers() const { return n_; }
  Modulus modulus() const { return modulus_; }

  const std::vector<SymplecticVector>& rows() const { return rows_; }
  const SymplecticVector& row(std::size_t i) const { return rows_.at(i); }
  SymplecticVector& row(std::size_t i) { return rows_.at(i); }

  Int x(std::size_t i, std::size_t m) const { return rows_.at(i).x(m); }
  Int z(std::size_t i, std::size_t m) const { return rows_.at(i).z(m); }

  void append(SymplecticVector v) {
    if (v.num_registers() != n_) throw std::invalid_argument("row register count mismatch");
    if (v.modulus() != modulus_) throw std::invalid_argument("row modulus mismatch");
    if (rows_.size() + 1 > 2 * n_) throw std::invalid_argument("more than 2n rows");
    rows_.push_back(std::move(v));
  }

  SymplecticMatrix with_modulus(Modulus target) const {
    SymplecticMatrix r(n_, target);
    for (const auto& row : rows_) r.append(row.with_modulus(target));
    return r;
  }

  Int max_abs_entry() const {
    Int b = 0;
    for (const auto& r : rows_)
      for (Int v : r.coefficients()) b = std::max(b, v < 0 ? checked::neg(v) : v);
    return b;
  }

  bool operator==(const SymplecticMatrix&) const = default;

  // Elementary operations, applied in place.

  void row_add(std::size_t target, std::size_t source, Int factor) {
    check_row(target);
    check_row(source);
    if (target == source) throw std::invalid_argument("row_add needs distinct rows");
    rows_[target].add_scaled(rows_[source], factor);
  }

  void row_swap(std::size_t a, std::size_t b) {
    check_row(a);
    check_row(b);
    std::swap(rows_[a], rows_[b]);
  }

  void row_scale(std::size_t i, Int factor) {
    check_row(i);
    if (modulus_.is_integer() ? (factor != 1 && factor != -1) : modulus_.reduce(factor) == 0)
      throw std::domain_error("row scale factor " + std::to_string(factor) + " is not invertible mod " +
                              modulus_.to_string());
    rows_[i] = rows_[i].scaled(factor);
  }

  void register_swap(std::size_t a, std::size_t b) {
    for (auto& r : rows_) r.swap_registers(a, b);
    if (rows_.empty()) check_register(a), check_register(b);
  }

  void fourier_swap(std::size_t m) {
    for (auto& r : rows_) r.fourier_swap(m);
    if (rows_.empty()) check_register(m);
  }

  void inverse_fourier_swap(std::size_t m) {
    for (auto& r : rows_) r.inverse_fourier_swap(m);
    if (rows_.empty()) check_register(m);
  }

  void apply(const ElementaryOp& op) {
    std::visit(
        [this](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, RowAdd>) row_add(o.target, o.source, o.factor);
          else if constexpr (std::is_same_v<T, RowSwap>) row_swap(o.a, o.b);
          else if constexpr (std::is_same_v<T, RowScale>) row_scale(o.row, o.factor);
          else if constexpr (std::is_same_v<T, RegisterSwap>) register_swap(o.a, o.b);
          else fourier_swap(o.reg);
        },
        op);
  }

 private:
  void check_row(std::size_t i) const {
    if (i >= rows_.size()) throw std::out_of_range("row index " + std::to_string(i) + " out of range");
  }
  void check_register(std::size_t m) const {
    if (m >= n_) throw std::out_of_range("register index " + std::to_string(m) + " out of range");
  }

  std::size_t n_;
  Modulus modulus_;
  std::vector<SymplecticVector> rows_;
};

/// Ordered record of elementary operations. Register-level entries can be
/// pushed through to other vectors (errors, logicals) or undone.
class Transcript {
 public:
  void push(ElementaryOp op) { ops_.push_back(std::move(op)); }

  /// Apply op to m and record it.
  void apply(SymplecticMatrix& m, ElementaryOp op) {
    m.apply(op);
    ops_.push_back(std::move(op));
  }

  void replay(SymplecticMatrix& m) const {
    for (const auto& op : ops_) m.apply(op);
  }

  /// The register relabelling/Fourier part of the transcript applied to v.
  SymplecticVector forward_registers(SymplecticVector v) const {
    for (const auto& op : ops_) {
      if (const auto* s = std::get_if<RegisterSwap>(&op)) v.swap_registers(s->a, s->b);
      else if (const auto* f = std::get_if<FourierSwap>(&op)) v.fourier_swap(f->reg);
    }
    return v;
  }

  /// Inverse of forward_registers.
  SymplecticVector backward_registers(SymplecticVector v) const {
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
      if (const auto* s = std::get_if<RegisterSwap>(&*it)) v.swap_registers(s->a, s->b);
      else if (const auto* f = std::get_if<FourierSwap>(&*it)) v.inverse_fourier_swap(f->reg);
    }
    return v;
  }

  SymplecticMatrix backward_registers(const SymplecticMatrix& m) const {
    SymplecticMatrix r(m.num_registers(), m.modulus());
    for (const auto& row : m.rows()) r.append(backward_registers(row));
    return r;
  }

  Transcript register_part() const {
    Transcript t;
    for (const auto& op : ops_)
      if (is_register_op(op)) t.push(op);
    return t;
  }

  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }
  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }
  const std::vector<ElementaryOp>& ops() const { return ops_; }

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<ElementaryOp> ops_;
};

}  // namespace ldi
