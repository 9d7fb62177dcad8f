#pragma once

// Code file format
//
//   # comment
//   q: 2
//   n: 7
//   name: steane          (optional)
//   integer: true         (optional; rows are φ_∞ rows, kept unreduced)
//   XZZXI                 one generator per line, as a Pauli string ...
//   1 0 0 1 0 | 0 1 1 0 0 ... or as 2n integers, "|" between halves optional
//
// Pauli tokens per register: I, X, Z, Y (q = 2 only), X<e>, Z<e>, X<e>Z<e>,
// with <e> written as 2, -1, ^2, ^-1 or ^{-1}, or a pair (a,b). Tokens are
// whitespace separated; a line made only of the letters IXYZ may also be
// written without spaces, one letter per register.

#include "ldi/embedding.hpp"
#include "ldi/pauli.hpp"
#include "ldi/stabilizer_code.hpp"
#include "ldi/symplectic.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ldi {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline Int parse_int(std::string_view s, std::string_view context) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw parse_error("expected an integer, got '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

/// Parses an optional exponent at the front of s: "", "2", "-1", "^2", "^-1", "^{-1}".
inline Int take_exponent(std::string_view& s, std::string_view token) {
  if (s.empty() || s.front() == 'Z') return 1;
  if (s.front() == '^') {
    s.remove_prefix(1);
    if (!s.empty() && s.front() == '{') {
      const auto close = s.find('}');
      if (close == std::string_view::npos) throw parse_error("unterminated exponent in '" + std::string(token) + "'");
      const Int v = parse_int(s.substr(1, close - 1), token);
      s.remove_prefix(close + 1);
      return v;
    }
  }
  std::size_t len = 0;
  if (len < s.size() && (s[len] == '-' || s[len] == '+')) ++len;
  while (len < s.size() && std::isdigit(static_cast<unsigned char>(s[len]))) ++len;
  if (len == 0) throw parse_error("malformed exponent in '" + std::string(token) + "'");
  const Int v = parse_int(s.substr(0, len), token);
  s.remove_prefix(len);
  return v;
}

inline RegisterPower parse_token(std::string_view token, Int q) {
  if (token == "I") return {0, 0};
  if (token == "Y") {
    if (q != 2) throw parse_error("'Y' is only defined for q = 2");
    return {1, 1};
  }
  if (token.front() == '(') {
    if (token.back() != ')') throw parse_error("unterminated pair '" + std::string(token) + "'");
    const auto inner = token.substr(1, token.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw parse_error("pair needs a comma: '" + std::string(token) + "'");
    return {parse_int(trim(inner.substr(0, comma)), token), parse_int(trim(inner.substr(comma + 1)), token)};
  }
  RegisterPower r;
  std::string_view s = token;
  bool any = false;
  if (!s.empty() && s.front() == 'X') {
    s.remove_prefix(1);
    r.x = take_exponent(s, token);
    any = true;
  }
  if (!s.empty() && s.front() == 'Z') {
    s.remove_prefix(1);
    r.z = s.empty() ? 1 : take_exponent(s, token);
    any = true;
  }
  if (!any || !s.empty()) throw parse_error("unknown Pauli token '" + std::string(token) + "'");
  return r;
}

inline bool is_letter_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') return false;
  return true;
}

inline bool is_numeric_row(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (c != '-' && c != '+' && c != '|' && !std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return digit;
}

}  // namespace detail

/// Per-register exponents of a Pauli string, unreduced.
inline PauliExponents parse_pauli_exponents(std::string_view line, Int q, std::optional<std::size_t> n = std::nullopt) {
  line = detail::trim(line);
  if (line.empty()) throw parse_error("empty Pauli string");
  std::vector<std::string> tokens = detail::split_ws(line);
  if (tokens.size() == 1 && detail::is_letter_run(tokens[0]) && !(n && *n == 1)) {
    const std::string run = tokens[0];
    tokens.clear();
    for (char c : run) tokens.emplace_back(1, c);
  }
  PauliExponents out;
  for (const auto& t : tokens) out.push_back(detail::parse_token(t, q));
  if (n && out.size() != *n)
    throw parse_error("Pauli string '" + std::string(line) + "' has " + std::to_string(out.size()) +
                      " registers, expected " + std::to_string(*n));
  return out;
}

/// Pauli string → symplectic vector mod q.
inline SymplecticVector parse_pauli_string(std::string_view line, Int q, std::optional<std::size_t> n = std::nullopt) {
  if (!is_prime(q)) throw parse_error("q must be prime, got " + std::to_string(q));
  return phi_encode(parse_pauli_exponents(line, q, n), q);
}

/// Symplectic row "a_1 … a_n | b_1 … b_n" (the bar is optional).
inline std::vector<Int> parse_symplectic_row(std::string_view line, std::optional<std::size_t> n = std::nullopt) {
  std::string spaced;
  for (char c : line) {
    if (c == '|') spaced += " | ";
    else spaced += c;
  }
  std::vector<Int> values;
  std::optional<std::size_t> bar;
  for (const auto& tok : detail::split_ws(spaced)) {
    if (tok == "|") {
      if (bar) throw parse_error("more than one '|' in row '" + std::string(line) + "'");
      bar = values.size();
      continue;
    }
    values.push_back(detail::parse_int(tok, line));
  }
  if (values.empty() || values.size() % 2 != 0)
    throw parse_error("symplectic row needs an even number of entries: '" + std::string(line) + "'");
  if (bar && *bar * 2 != values.size()) throw parse_error("'|' does not split the row in half: '" + std::string(line) + "'");
  if (n && values.size() != 2 * *n)
    throw parse_error("row '" + std::string(line) + "' has " + std::to_string(values.size() / 2) +
                      " registers, expected " + std::to_string(*n));
  return values;
}

struct CodeFile {
  Int q = 2;
  std::size_t n = 0;
  std::string name;
  /// Rows were given as φ_∞ rows and are kept as signed integers.
  bool integer = false;
  SymplecticMatrix rows{1, Modulus::integer()};

  /// The code over Z_q (integer rows are reduced mod q).
  StabilizerCode code() const { return StabilizerCode(rows.with_modulus(Modulus::prime(q)), name); }

  bool operator==(const CodeFile&) const = default;
};

inline CodeFile parse_code_file(std::string_view text) {
  CodeFile f;
  std::optional<Int> q;
  std::optional<std::size_t> n;
  std::vector<std::string> body;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      const std::string key{detail::trim(line.substr(0, colon))};
      const std::string_view value = detail::trim(line.substr(colon + 1));
      try {
        if (key == "q") q = detail::parse_int(value, line);
        else if (key == "n") n = static_cast<std::size_t>(detail::parse_int(value, line));
        else if (key == "name") f.name = std::string(value);
        else if (key == "integer") {
          if (value != "true" && value != "false") throw parse_error("integer must be true or false");
          f.integer = value == "true";
        } else {
          throw parse_error("unknown header key '" + key + "'");
        }
      } catch (const parse_error& e) {
        throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
      }
      continue;
    }
    body.emplace_back(line);
  }
  if (!q) throw parse_error("missing header 'q'");
  if (!is_prime(*q)) throw parse_error("q must be prime, got " + std::to_string(*q));
  if (body.empty()) throw parse_error("no generator rows");
  f.q = *q;
  const Modulus modulus = f.integer ? Modulus::integer() : Modulus::prime(f.q);

  std::vector<SymplecticVector> rows;
  for (const auto& line : body) {
    if (detail::is_numeric_row(line)) {
      rows.push_back(SymplecticVector::from_flat(parse_symplectic_row(line, n), modulus));
    } else {
      const auto exps = parse_pauli_exponents(line, f.q, n);
      rows.push_back(f.integer ? phi_encode_integer(exps) : phi_encode(exps, f.q));
    }
    if (!n) n = rows.back().num_registers();
  }
  f.n = *n;
  if (f.n == 0) throw parse_error("n must be positive");
  try {
    f.rows = SymplecticMatrix(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
  return f;
}

inline CodeFile load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code_file(ss.str());
}

inline std::string format_row(const SymplecticVector& v) {
  std::ostringstream os;
  for (std::size_t m = 0; m < v.num_registers(); ++m) os << (m ? " " : "") << v.x(m);
  os << " |";
  for (std::size_t m = 0; m < v.num_registers(); ++m) os << " " << v.z(m);
  return os.str();
}

inline std::string format_matrix(const SymplecticMatrix& m) {
  std::string out;
  for (const auto& r : m.rows()) out += format_row(r) + "\n";
  return out;
}

inline std::string serialize(const CodeFile& f) {
  std::ostringstream os;
  os << "q: " << f.q << "\n";
  os << "n: " << f.n << "\n";
  if (!f.name.empty()) os << "name: " << f.name << "\n";
  if (f.integer) os << "integer: true\n";
  os << format_matrix(f.rows);
  return os.str();
}

inline CodeFile make_code_file(const SymplecticMatrix& m, Int q, std::string name = {}) {
  CodeFile f;
  f.q = q;
  f.n = m.num_registers();
  f.name = std::move(name);
  f.integer = m.modulus().is_integer();
  f.rows = m;
  return f;
}

}  // namespace ldi
