#pragma once

// JSON rendering of pipeline results. Matrices are arrays of rows, each row
// the 2n integers (x_1 … x_n, z_1 … z_n). Integers that do not fit in 64 bits
// are emitted as decimal strings.

#include "ldi/distance.hpp"
#include "ldi/embedding.hpp"
#include "ldi/logical.hpp"
#include "ldi/pauli.hpp"
#include "ldi/stabilizer_code.hpp"
#include "ldi/state.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

namespace ldi::report {

using nlohmann::json;

inline json big(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<Int>::max()) && v >= BigInt(std::numeric_limits<Int>::min()))
    return static_cast<Int>(v);
  return v.str();
}

inline json row(const SymplecticVector& v) {
  const auto c = v.coefficients();
  return json(std::vector<Int>(c.begin(), c.end()));
}

inline json matrix(const SymplecticMatrix& m) {
  json a = json::array();
  for (const auto& r : m.rows()) a.push_back(row(r));
  return a;
}

inline json matrix(const IntMatrix& m) { return json(m); }

inline json paulis(const SymplecticMatrix& m) {
  json a = json::array();
  for (const auto& r : m.rows()) a.push_back(phi_decode(r));
  return a;
}

inline json transcript(const Transcript& t) {
  json a = json::array();
  for (const auto& op : t) a.push_back(describe(op));
  return a;
}

inline json code(const StabilizerCode& c) {
  return {{"name", c.name()}, {"n", c.n()}, {"k", c.k()}, {"logical", c.logical_count()}, {"q", c.q()},
          {"generators", matrix(c.generators())}, {"paulis", paulis(c.generators())}};
}

inline json validation(const ValidationReport& r) {
  json j{{"valid", r.valid()},          {"q", r.q},       {"n", r.n}, {"k", r.k}, {"q_prime", r.q_prime},
         {"commuting", r.commuting},    {"rank", r.rank}, {"k_at_most_n", r.k_at_most_n},
         {"summary", r.summary()}};
  if (r.offending_pair)
    j["offending_pair"] = {{"rows", {r.offending_pair->first, r.offending_pair->second}},
                           {"product_mod_q", r.offending_product}};
  return j;
}

inline json canonical(const CanonicalForm& c) {
  return {{"matrix", matrix(c.matrix)}, {"transcript", transcript(c.transcript)}};
}

inline json invariant(const InvariantCode& inv) {
  return {{"n", inv.n()},
          {"k", inv.k()},
          {"q", inv.q()},
          {"canonical_form", canonical(inv.canonical)},
          {"commutator", commutator_matrix(inv.canonical.matrix.with_modulus(Modulus::integer()))},
          {"L", inv.correction},
          {"matrix", matrix(inv.matrix)},
          {"paulis", paulis(inv.matrix)},
          {"register_frame", inv.frame_change.empty() ? "canonical" : "source"},
          {"B", inv.max_entry_B},
          {"is_invariant", is_invariant(inv.matrix)}};
}

inline json hamming(const HammingCutoff& h) {
  json j{{"applicable", h.applicable}, {"t", h.t}};
  if (h.applicable) {
    j["value"] = std::round(h.value * 1e4) / 1e4;
    j["restricts"] = h.restricts();
  }
  return j;
}

inline json bounds(const EmbeddingReport& r) {
  json j{{"B", r.B}, {"B_bound", r.B_bound}, {"p_star_loose", big(r.p_star_loose)}};
  if (r.design_distance) j["design_distance"] = *r.design_distance;
  if (r.p_star) j["p_star"] = big(*r.p_star);
  if (r.p_double_star) j["p_double_star"] = hamming(*r.p_double_star);
  if (!r.per_prime.empty()) {
    json a = json::array();
    for (const auto& pi : r.per_prime) {
      json e{{"p", pi.p}, {"valid", pi.valid}};
      e["distance"] = pi.distance ? json(*pi.distance) : json(nullptr);
      a.push_back(e);
    }
    j["per_prime"] = a;
  }
  return j;
}

inline json verdict(const ErrorVerdict& v) {
  return {{"error", row(v.error)},
          {"pauli", phi_decode(v.error)},
          {"weight", weight(v.error)},
          {"integer_syndrome", v.integer_syndrome},
          {"verdict", to_string(v.verdict)},
          {"in_stabilizer", v.in_stabilizer}};
}

inline json distance(const DistanceResult& d) {
  json j{{"mode", to_string(d.mode)}, {"max_weight", d.max_weight}, {"errors_enumerated", d.errors_enumerated}};
  j["distance"] = d.distance ? json(*d.distance) : json(nullptr);
  if (d.witness) j["witness"] = {{"row", row(*d.witness)}, {"pauli", phi_decode(*d.witness)}};
  return j;
}

inline json logicals(const LogicalSet& l) {
  json xs = json::array(), zs = json::array();
  for (const auto& x : l.x_logicals) xs.push_back({{"row", row(x)}, {"pauli", phi_decode(x)}});
  for (const auto& z : l.z_logicals) zs.push_back({{"row", row(z)}, {"pauli", phi_decode(z)}});
  return {{"modulus", l.modulus.to_string()}, {"x", xs}, {"z", zs}, {"pairing", l.pairing}};
}

inline json invariant_logicals(const InvariantLogicalSet& l) {
  json j = logicals(l.logicals);
  j["xx_products"] = l.xx_products;
  j["zz_products"] = l.zz_products;
  j["pairing_determinant"] = big(l.pairing_determinant);
  json bad = json::array();
  for (const auto& p : l.bad_primes) bad.push_back(big(p));
  j["bad_primes"] = bad;
  return j;
}

inline json codespace(const CodespaceCertificate& c) {
  return {{"p", c.p},
          {"n", c.n},
          {"k", c.k},
          {"dimension", c.dimension},
          {"expected", c.expected},
          {"matches", c.matches()},
          {"phase_convention", c.phase_convention},
          {"adjustments", c.adjustments}};
}

}  // namespace ldi::report
