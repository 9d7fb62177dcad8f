// Command-line front end: reads a code file and runs one pipeline stage.

#include "ldi/io.hpp"
#include "ldi/ldi.hpp"
#include "ldi/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace ldi;

enum Exit { ok = 0, usage = 1, invalid = 2, resource = 3 };

struct Options {
  std::string file;
  bool json_out = false;
  std::string output;
  Int prime = 0;
  std::size_t max_weight = 0;
  std::size_t design_distance = 0;
  std::string mode = "exclude-stab";
  bool integer = false;
  bool css = false;
  unsigned threads = 1;
  std::string error;
  std::size_t cap = kDefaultAmplitudeCap;
  std::vector<Int> primes;
};

struct Failure {
  Exit code;
  std::string kind;
  std::string message;
};

// The matrix whose integer products vanish: integer files that are already
// invariant are taken as given, everything else goes through embed.
struct InvariantSource {
  SymplecticMatrix matrix;
  std::optional<InvariantCode> embedded;
};

InvariantSource invariant_source(const CodeFile& f, bool css = false) {
  if (f.integer && is_invariant(f.rows)) return {f.rows, std::nullopt};
  const StabilizerCode code = f.code();
  if (!validate(code).valid()) throw Failure{invalid, "validation", validate(code).summary()};
  InvariantCode inv = css ? embed_css(code) : embed(code);
  SymplecticMatrix m = inv.matrix;
  return {m, std::move(inv)};
}

// Code at prime p: integer rows are read mod p, a code over Z_p is used as
// is, and anything else is embedded first.
StabilizerCode code_at(const CodeFile& f, Int p) {
  require_prime(p, "prime");
  if (f.integer) return instantiate(f.rows, p, f.name);
  if (p == f.q) return f.code();
  return instantiate(invariant_source(f).matrix, p, f.name);
}

void require(const StabilizerCode& c) {
  const auto r = validate(c);
  if (!r.valid()) throw Failure{invalid, "validation", r.summary()};
}

std::string hamming_text(const HammingCutoff& h, std::optional<Int> p = std::nullopt) {
  if (!h.applicable) return "p** not applicable (t >= k)";
  std::ostringstream os;
  os << "p** = " << std::fixed << std::setprecision(4) << h.value;
  if (!h.restricts()) os << " (excludes no prime)";
  else if (p) os << (h.excludes(*p) ? " (excludes p = " : " (does not exclude p = ") << *p << ")";
  else os << " (excludes primes below it)";
  return os.str();
}

std::string int_matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  for (const auto& r : m) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << std::setw(3) << r[j];
    os << "\n";
  }
  return os.str();
}

std::string logicals_text(const LogicalSet& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.size(); ++i) {
    os << "  X" << i << ": " << format_row(l.x_logicals[i]) << "   " << phi_decode(l.x_logicals[i]) << "\n";
    os << "  Z" << i << ": " << format_row(l.z_logicals[i]) << "   " << phi_decode(l.z_logicals[i]) << "\n";
  }
  return os.str();
}

struct Output {
  json doc;
  std::string text;
};

Output run_validate(const Options& o, const CodeFile& f) {
  const StabilizerCode c = o.prime ? code_at(f, o.prime) : f.code();
  const auto r = validate(c);
  Output out{{{"command", "validate"}, {"code", report::code(c)}, {"validation", report::validation(r)}}, ""};
  if (f.integer) out.doc["is_invariant"] = is_invariant(f.rows);
  out.text = r.summary() + "\n";
  if (f.integer) out.text += std::string("integer rows commute exactly: ") + (is_invariant(f.rows) ? "yes" : "no") + "\n";
  if (!r.valid()) throw std::pair<Output, Failure>{out, Failure{invalid, "validation", r.summary()}};
  return out;
}

Output run_standard_form(const Options&, const CodeFile& f) {
  const StabilizerCode c = f.code();
  require(c);
  const auto cf = standard_form(c);
  Output out{{{"command", "standard-form"}, {"code", report::code(c)}, {"canonical_form", report::canonical(cf)}}, ""};
  std::ostringstream os;
  os << format_matrix(cf.matrix) << "operations:";
  for (const auto& op : cf.transcript) os << " " << describe(op);
  os << "\n";
  out.text = os.str();
  return out;
}

Output run_embed(const Options& o, const CodeFile& f) {
  const StabilizerCode c = f.code();
  require(c);
  if (o.css && !is_css(c)) throw Failure{invalid, "validation", "--css given but the code is not CSS"};
  const InvariantCode inv = o.css ? embed_css(c) : embed(c);
  Output out{{{"command", "embed"}, {"code", report::code(c)}, {"invariant", report::invariant(inv)}}, ""};
  std::ostringstream os;
  os << "canonical form:\n" << format_matrix(inv.canonical.matrix);
  os << "commutator:\n" << int_matrix_text(commutator_matrix(inv.canonical.matrix.with_modulus(Modulus::integer())));
  os << "L:\n" << int_matrix_text(inv.correction);
  os << "invariant matrix (" << (inv.frame_change.empty() ? "canonical" : "source") << " register order):\n"
     << format_matrix(inv.matrix);
  os << "B = " << inv.max_entry_B << "\n";
  out.text = os.str();
  return out;
}

Output run_bounds(const Options& o, const CodeFile& f) {
  const auto src = invariant_source(f);
  auto r = bounds_report(src.matrix, f.q, o.design_distance ? std::optional<std::size_t>(o.design_distance) : std::nullopt);
  if (!o.primes.empty()) {
    const std::size_t w = o.max_weight ? o.max_weight : std::max<std::size_t>(o.design_distance, 1);
    r.per_prime = evaluate_primes(src.matrix, o.primes, std::min(w, src.matrix.num_registers()),
                                  DistanceMode::exclude_stabilizer, o.threads);
  }
  Output out{{{"command", "bounds"}, {"n", src.matrix.num_registers()}, {"k", src.matrix.num_rows()}, {"q", f.q},
              {"bounds", report::bounds(r)}},
             ""};
  std::ostringstream os;
  os << "B = " << r.B << "\nB_bound = " << r.B_bound << "\n";
  if (r.p_star) os << "p* = " << *r.p_star << "\n";
  os << "p* for d* (d* <= k) = " << r.p_star_loose << "\n";
  if (r.p_double_star) os << hamming_text(*r.p_double_star) << "\n";
  for (const auto& pi : r.per_prime) {
    os << "p = " << pi.p << ": ";
    if (!pi.valid) os << "invalid";
    else if (pi.distance) os << "distance " << *pi.distance;
    else os << "no undetectable error found";
    if (r.p_double_star && r.p_double_star->excludes(pi.p)) os << " (below p**)";
    os << "\n";
  }
  out.text = os.str();
  return out;
}

DistanceMode parse_mode(const std::string& m) {
  if (m == "kernel") return DistanceMode::kernel_only;
  return DistanceMode::exclude_stabilizer;
}

Output run_distance(const Options& o, const CodeFile& f) {
  const DistanceMode mode = parse_mode(o.mode);
  if (o.integer) {
    const auto src = invariant_source(f);
    const std::size_t w = std::min(o.max_weight, src.matrix.num_registers());
    const auto lit = integer_distance(src.matrix, w, DistanceMode::kernel_only);
    const auto ex = integer_distance(src.matrix, w, DistanceMode::exclude_stabilizer);
    Output out{{{"command", "distance"},
                {"integer", true},
                {"kernel_only", report::distance(lit)},
                {"exclude_stabilizer", report::distance(ex)}},
               ""};
    auto line = [](const char* label, const DistanceResult& d) {
      std::ostringstream os;
      os << label << ": ";
      if (d.distance) os << *d.distance << " (witness " << phi_decode(*d.witness) << ")";
      else os << "none up to weight " << d.max_weight;
      return os.str() + "\n";
    };
    out.text = line("d* (kernel)", lit) + line("d* (excluding stabilizer span)", ex);
    return out;
  }
  if (!o.prime) throw Failure{usage, "usage", "distance needs --prime unless --integer is given"};
  const StabilizerCode c = code_at(f, o.prime);
  require(c);
  const auto d = distance(c, std::min(o.max_weight, c.n()), mode, o.threads);
  Output out{{{"command", "distance"}, {"p", o.prime}, {"result", report::distance(d)}}, ""};
  std::ostringstream os;
  if (d.distance) os << *d.distance << "\nwitness: " << phi_decode(*d.witness) << "\n";
  else os << "none up to weight " << d.max_weight << "\n";
  out.text = os.str();
  return out;
}

Output run_classify(const Options& o, const CodeFile& f) {
  if (!o.prime) throw Failure{usage, "usage", "classify needs --prime"};
  require_prime(o.prime, "prime");
  const SymplecticVector e = phi_encode_integer(parse_pauli_exponents(o.error, f.q, f.n));
  const SymplecticMatrix g = f.integer ? f.rows : (o.prime == f.q ? f.code().generators() : invariant_source(f).matrix);
  const auto v = classify(e, g, o.prime);
  Output out{{{"command", "classify"}, {"p", o.prime}, {"classification", report::verdict(v)}}, ""};
  std::ostringstream os;
  os << to_string(v.verdict) << "\nsyndrome over Z:";
  for (Int s : v.integer_syndrome) os << " " << s;
  os << "\nin stabilizer span: " << (v.in_stabilizer ? "yes" : "no") << "\n";
  out.text = os.str();
  return out;
}

Output run_logicals(const Options&, const CodeFile& f) {
  const StabilizerCode c = f.code();
  require(c);
  const InvariantCode inv = embed(c);
  const LogicalSet mod_q = logical_operators(instantiate(inv, f.q));
  const InvariantLogicalSet lifted = invariant_logicals(inv, mod_q);
  Output out{{{"command", "logicals"},
              {"invariant_matrix", report::matrix(inv.matrix)},
              {"logicals", report::logicals(mod_q)},
              {"invariant_logicals", report::invariant_logicals(lifted)}},
             ""};
  std::ostringstream os;
  os << "invariant stabilizers:\n" << format_matrix(inv.matrix);
  os << "logicals mod " << f.q << ":\n" << logicals_text(mod_q);
  os << "invariant logicals:\n" << logicals_text(lifted.logicals);
  os << "pairing determinant = " << lifted.pairing_determinant << "\nbad primes:";
  for (const auto& p : lifted.bad_primes) os << " " << p;
  os << "\n";
  out.text = os.str();
  return out;
}

Output run_verify(const Options& o, const CodeFile& f) {
  if (!o.prime) throw Failure{usage, "usage", "verify needs --prime"};
  const StabilizerCode c = code_at(f, o.prime);
  require(c);
  const auto cert = codespace_dimension(c, o.cap);
  Output out{{{"command", "verify"}, {"codespace", report::codespace(cert)}}, ""};
  std::ostringstream os;
  os << "codespace dimension " << cert.dimension << ", expected " << cert.expected
     << (cert.matches() ? " (match)" : " (MISMATCH)") << "\nphase convention: " << cert.phase_convention << "\n";
  for (const auto& a : cert.adjustments) os << a << "\n";
  out.text = os.str();
  if (!cert.matches()) throw std::pair<Output, Failure>{out, Failure{invalid, "validation", "codespace dimension mismatch"}};
  return out;
}

void emit(const Options& o, const std::string& s) {
  if (o.output.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw Failure{usage, "io", "cannot write '" + o.output + "'"};
  f << s;
}

std::string render(const Options& o, const Output& out) { return o.json_out ? out.doc.dump(2) + "\n" : out.text; }

int fail(const Options& o, const Failure& f) {
  const json err{{"error", {{"kind", f.kind}, {"message", f.message}, {"exit_code", static_cast<int>(f.code)}}}};
  if (o.json_out) std::cout << err.dump(2) << "\n";
  else std::cerr << "error (" << f.kind << "): " << f.message << "\n";
  return f.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-dimension-invariant qudit stabilizer codes"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("file", o.file, "code file")->required();
    s->add_flag("--json", o.json_out, "emit JSON");
    s->add_option("--output,-o", o.output, "write the report to a file");
  };
  auto prime_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--prime,-p", o.prime, "prime local dimension");
    if (required) opt->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "check primality, commutation and independence");
  common(validate_cmd);
  prime_opt(validate_cmd, false);

  auto* standard_cmd = app.add_subcommand("standard-form", "reduce to (I X2 | Z1 Z2)");
  common(standard_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "local-dimension-invariant form");
  common(embed_cmd);
  embed_cmd->add_flag("--css", o.css, "keep the CSS structure");

  auto* bounds_cmd = app.add_subcommand("bounds", "B, p* and p**");
  common(bounds_cmd);
  bounds_cmd->add_option("--distance,-d", o.design_distance, "known distance of the source code")->required()
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--primes", o.primes, "also compute the distance at these primes")->delimiter(',');
  bounds_cmd->add_option("--max-weight", o.max_weight, "search limit for --primes");
  bounds_cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* distance_cmd = app.add_subcommand("distance", "minimum weight of an undetectable error");
  common(distance_cmd);
  prime_opt(distance_cmd, false);
  distance_cmd->add_option("--max-weight,-w", o.max_weight, "largest weight searched")->required()
      ->check(CLI::PositiveNumber);
  distance_cmd->add_flag("--integer", o.integer, "integer distance d*");
  distance_cmd->add_option("--mode", o.mode, "kernel or exclude-stab")
      ->check(CLI::IsMember({"kernel", "exclude-stab"}));
  distance_cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "detectable, artifact or unavoidable");
  common(classify_cmd);
  prime_opt(classify_cmd, true);
  classify_cmd->add_option("--error,-e", o.error, "Pauli string")->required();

  auto* logicals_cmd = app.add_subcommand("logicals", "logical operators mod q and over Z");
  common(logicals_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "dense codespace dimension check");
  common(verify_cmd);
  prime_opt(verify_cmd, true);
  verify_cmd->add_option("--cap", o.cap, "maximum number of amplitudes")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    if (rc == 0) return 0;
    return fail(o, {usage, "usage", e.what()});
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const CodeFile f = load_code_file(o.file);
    Output out;
    if (cmd == "validate") out = run_validate(o, f);
    else if (cmd == "standard-form") out = run_standard_form(o, f);
    else if (cmd == "embed") out = run_embed(o, f);
    else if (cmd == "bounds") out = run_bounds(o, f);
    else if (cmd == "distance") out = run_distance(o, f);
    else if (cmd == "classify") out = run_classify(o, f);
    else if (cmd == "logicals") out = run_logicals(o, f);
    else out = run_verify(o, f);
    emit(o, render(o, out));
    return ok;
  } catch (const std::pair<Output, Failure>& e) {
    // report still useful: print it, then fail
    if (!o.json_out) emit(o, e.first.text);
    else {
      json doc = e.first.doc;
      doc["error"] = {{"kind", e.second.kind}, {"message", e.second.message}, {"exit_code", static_cast<int>(e.second.code)}};
      emit(o, doc.dump(2) + "\n");
      return e.second.code;
    }
    return fail(o, e.second);
  } catch (const Failure& e) {
    return fail(o, e);
  } catch (const parse_error& e) {
    return fail(o, {usage, "parse", e.what()});
  } catch (const cap_exceeded& e) {
    return fail(o, {resource, "resource_cap", e.what()});
  } catch (const validation_error& e) {
    return fail(o, {invalid, "validation", e.what()});
  } catch (const std::invalid_argument& e) {
    return fail(o, {usage, "invalid_argument", e.what()});
  } catch (const std::exception& e) {
    return fail(o, {usage, "error", e.what()});
  }
}
