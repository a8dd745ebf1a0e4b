#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alglength/bounds.hpp"
#include "alglength/families.hpp"
#include "alglength/io.hpp"
#include "alglength/length.hpp"
#include "alglength/oracle.hpp"
#include "alglength/report.hpp"

namespace alglength::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

namespace detail {

/// Errors raised while reading inputs map to exit code 2.
struct InputFailure {
  std::string kind;
  std::string message;
};

struct Common {
  std::string algebra_path;
  std::string gens;
  std::string json_path;
  bool lc_shortcut = false;
  bool require_generating = false;
};

template <class Seq> std::string tuple_string(const Seq &seq) {
  std::string out = "(";
  bool first = true;
  for (const auto &x : seq) {
    if (!first)
      out += ",";
    first = false;
    out += std::to_string(x);
  }
  return out + ")";
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputFailure{"IOError", "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedAlgebra {
  StructureTable table;
  std::string sha256;
};

inline LoadedAlgebra load_algebra(const Common &c) {
  if (c.algebra_path.empty())
    throw InputFailure{"UsageError", "--algebra PATH is required"};
  const std::string text = read_file(c.algebra_path);
  try {
    return {parse_algebra(text), sha256_hex(text)};
  } catch (const Error &e) {
    throw InputFailure{e.kind(), c.algebra_path + ": " + e.what()};
  }
}

inline GenSet load_gens(const StructureTable &a, const Common &c) {
  if (c.gens.empty())
    throw InputFailure{"UsageError", "--gens is required"};
  try {
    GenSet g = parse_gens(a, c.gens);
    for (const auto &v : g.vectors)
      check_vector(a, v);
    return g;
  } catch (const Error &e) {
    throw InputFailure{e.kind(), e.what()};
  }
}

inline Json common_options(const Common &c) {
  return Json{{"lc_shortcut", c.lc_shortcut}, {"require_generating", c.require_generating}};
}

inline Json algebra_input(const LoadedAlgebra &a, const Common &c) {
  return Json{{"algebra_sha256", a.sha256},
              {"gens", c.gens},
              {"dim", a.table.dim()},
              {"field", a.table.field().to_string()},
              {"lc_flag", a.table.lc_flag()}};
}

inline void write_json(const Common &c, const Json &report) {
  if (c.json_path.empty())
    return;
  std::ofstream out(c.json_path, std::ios::binary);
  if (!out)
    throw InputFailure{"IOError", "cannot write '" + c.json_path + "'"};
  out << report.dump(2) << '\n';
}

inline LengthOptions length_options(const Common &c) {
  LengthOptions opts;
  opts.lc_shortcut = c.lc_shortcut;
  return opts;
}

inline void print_report(std::ostream &out, const LengthReport &r) {
  if (r.length)
    out << "l(S) = " << *r.length << '\n';
  else
    out << "l(S) = not generating\n";
  out << "charseq = " << tuple_string(r.charseq.terms) << (r.charseq.partial ? " partial" : "")
      << '\n';
  out << "dims = " << tuple_string(r.dims) << '\n';
  out << "stop_reason = " << to_string(r.stop_reason) << '\n';
}

/// Turns a finished LengthReport into an exit status.
inline void require_outcome(const LengthReport &r, const Common &c) {
  if (r.stop_reason == StopReason::cap_exceeded)
    throw InternalError("word-length cap exceeded before the filtration stabilized");
  if (c.require_generating && !r.generating())
    throw NotGenerating("the given set does not generate the algebra");
}

struct CheckFailed : Error {
  explicit CheckFailed(const std::string &m) : Error("CheckFailed", m) {}
};

struct OracleMismatch : Error {
  explicit OracleMismatch(const std::string &m) : Error("OracleMismatch", m) {}
};

inline int cmd_length(const Common &c, bool charseq_only, std::ostream &out) {
  const auto alg = load_algebra(c);
  const GenSet gens = load_gens(alg.table, c);
  const LengthReport r = compute_length(alg.table, gens, length_options(c));
  if (charseq_only)
    out << "charseq = " << tuple_string(r.charseq.terms) << (r.charseq.partial ? " partial" : "")
        << '\n';
  else
    print_report(out, r);
  write_json(c, make_run_report(charseq_only ? "charseq" : "length", common_options(c),
                                algebra_input(alg, c), to_json(r)));
  require_outcome(r, c);
  return exit_ok;
}

inline int cmd_dims(const Common &c, std::uint64_t kmax, std::ostream &out) {
  const auto alg = load_algebra(c);
  const GenSet gens = load_gens(alg.table, c);
  const auto dims = filtration_dims(alg.table, gens, kmax);
  out << "dims = " << tuple_string(dims) << '\n';
  Json opts = common_options(c);
  opts["kmax"] = kmax;
  write_json(c, make_run_report("dims", opts, algebra_input(alg, c), Json{{"dims", dims}}));
  if (c.require_generating)
    require_outcome(compute_length(alg.table, gens, length_options(c)), c);
  return exit_ok;
}

inline const std::vector<std::string> &known_checks() {
  static const std::vector<std::string> names{"wellformed", "chain", "chain-strict", "power",
                                              "fib",        "k-fib", "lc-basis",     "gap"};
  return names;
}

inline std::string violation_text(const std::vector<Violation> &vs) {
  std::string out;
  for (const auto &v : vs)
    out += " h=" + std::to_string(v.h) + ":" + std::to_string(v.value);
  return out;
}

inline int cmd_verify(const Common &c, const std::string &checks, std::ostream &out) {
  std::vector<std::string> wanted;
  for (const auto &name : alglength::detail::split_on(checks, ',')) {
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
      throw InputFailure{"UsageError", "unknown check '" + name + "'"};
    wanted.push_back(name);
  }
  const auto alg = load_algebra(c);
  const GenSet gens = load_gens(alg.table, c);
  const LengthReport r = compute_length(alg.table, gens, length_options(c));
  print_report(out, r);
  require_outcome(r, c);
  if (!r.generating())
    throw NotGenerating("verify needs a generating set");

  const std::size_t k = r.dims.size() > 1 ? r.dims[1] - 1 : 1;
  const BoundReport bounds = verify_bounds(r.charseq, k);
  std::map<std::string, Json> results;
  std::vector<std::string> failed;
  for (const auto &name : wanted) {
    bool ok = false;
    std::string detail;
    Json json;
    if (name == "wellformed") {
      ok = bounds.wellformed;
      json = ok;
    } else if (name == "chain" || name == "chain-strict") {
      const auto &v = name == "chain" ? bounds.addition_chain : bounds.strict_addition_chain;
      ok = v && v->holds;
      if (v) {
        detail = violation_text(v->violations);
        json = to_json(*v);
      }
    } else if (name == "power" || name == "fib" || name == "k-fib") {
      const auto &v = name == "power" ? bounds.power_bound
                      : name == "fib" ? bounds.fibonacci_bound
                                      : bounds.k_bound;
      // A sequence with a single term has nothing to bound.
      ok = !v || v->holds;
      if (v) {
        detail = violation_text(v->violations);
        json = to_json(*v);
      }
    } else if (name == "lc-basis") {
      ok = check_lc_basis(alg.table);
      json = ok;
    } else if (name == "gap") {
      const auto v = check_dimension_gap(r.dims, alg.table.dim());
      ok = v.holds;
      detail = violation_text(v.violations);
      json = to_json(v);
    }
    out << (ok ? "PASS " : "FAIL ") << name << detail << '\n';
    results[name] = json;
    if (!ok)
      failed.push_back(name);
  }
  Json opts = common_options(c);
  opts["checks"] = wanted;
  Json result{{"length_report", to_json(r)}, {"bounds", to_json(bounds)}, {"checks", results}};
  write_json(c, make_run_report("verify", opts, algebra_input(alg, c), result));
  if (!failed.empty()) {
    std::string list;
    for (const auto &f : failed)
      list += (list.empty() ? "" : ",") + f;
    throw CheckFailed(list);
  }
  return exit_ok;
}

inline int cmd_gen_example(const Common &c, const std::string &family_name,
                           std::optional<std::size_t> n, std::optional<std::uint64_t> prime,
                           const std::string &out_path, std::ostream &out) {
  const auto family = family_from_string(family_name);
  if (!family)
    throw InputFailure{"UsageError", "unknown family '" + family_name + "'"};
  FieldDescriptor field = FieldDescriptor::rational();
  if (prime) {
    try {
      field = FieldDescriptor::prime(*prime);
    } catch (const FieldError &e) {
      throw InputFailure{e.kind(), e.what()};
    }
  }
  const FamilySpec spec{*family, n.value_or(family_min_n(*family))};
  Example ex = [&] {
    try {
      return make_example(spec, field);
    } catch (const RangeError &e) {
      throw InputFailure{e.kind(), e.what()};
    }
  }();
  const std::string text = serialize_algebra(ex.table);
  std::ofstream file(out_path, std::ios::binary);
  if (!file)
    throw InputFailure{"IOError", "cannot write '" + out_path + "'"};
  file << text;
  file.close();

  std::string names;
  for (const auto &v : ex.gens.vectors)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero())
        names += (names.empty() ? "" : ",") + ex.table.basis_names()[i];
  out << "wrote " << out_path << ": family " << family_name << ", n = " << spec.n << ", dim "
      << ex.table.dim() << ", field " << field.to_string() << '\n';
  out << "gens = " << names << '\n';
  Json input{{"family", family_name}, {"n", spec.n}, {"field", field.to_string()}};
  write_json(c, make_run_report("gen-example", common_options(c), input,
                                Json{{"algebra_sha256", sha256_hex(text)},
                                     {"dim", ex.table.dim()},
                                     {"gens", names}}));
  return exit_ok;
}

inline int cmd_oracle_check(const Common &c, std::uint64_t kmax, std::ostream &out) {
  const auto alg = load_algebra(c);
  const GenSet gens = load_gens(alg.table, c);
  const WordSpanResult words = enumerate_words_spans(alg.table, gens, kmax);
  const auto engine = filtration_dims(alg.table, gens, kmax);
  const bool agree = words.dims == engine;
  out << "oracle dims = " << tuple_string(words.dims) << '\n';
  out << "engine dims = " << tuple_string(engine) << '\n';
  out << (agree ? "agree" : "DISAGREE") << '\n';
  Json opts = common_options(c);
  opts["kmax"] = kmax;
  write_json(c, make_run_report("oracle-check", opts, algebra_input(alg, c),
                                Json{{"oracle", to_json(words)},
                                     {"engine_dims", engine},
                                     {"agree", agree}}));
  if (!agree)
    throw OracleMismatch("word enumeration and length engine disagree");
  return exit_ok;
}

inline int cmd_brute_force(const Common &c, std::uint64_t max_subspaces, std::ostream &out) {
  const auto alg = load_algebra(c);
  BruteForceOptions opts;
  opts.max_subspaces = max_subspaces;
  const BruteForceResult r = brute_force_algebra_length(alg.table, opts);
  out << "l(A) = " << r.length << '\n';
  out << "witness = " << format_gens(r.witness) << '\n';
  out << "subspaces = " << r.subspaces_examined << '\n';
  Json jopts = common_options(c);
  jopts["max_subspaces"] = max_subspaces;
  write_json(c, make_run_report("brute-force", jopts, algebra_input(alg, c), to_json(r)));
  return exit_ok;
}

} // namespace detail

/// Runs one command line (args excludes the program name). Text output goes
/// to out; errors are a single "error: <Class>: <message>" line on err.
/// Exit status: 0 success, 1 domain error, 2 usage or input error.
inline int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  using namespace detail;
  CLI::App app{"Length of generating sets of finite-dimensional non-associative algebras",
               "alglength"};
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App *sub, bool needs_gens) {
    sub->add_option("--algebra", c.algebra_path, "algebra file (v1 text format)");
    if (needs_gens)
      sub->add_option("--gens", c.gens, "generating set: 'e1,e2' or '[1, 0, 1/2]', ';'-separated");
    sub->add_option("--json", c.json_path, "write a machine-readable report to PATH");
    sub->add_flag("--lc-shortcut", c.lc_shortcut, "use the locally-complex stabilization window");
    sub->add_flag("--require-generating", c.require_generating,
                  "exit 1 when the set does not generate");
  };

  auto *length = app.add_subcommand("length", "length, characteristic sequence and dims");
  add_common(length, true);
  auto *charseq = app.add_subcommand("charseq", "characteristic sequence only");
  add_common(charseq, true);

  std::uint64_t kmax = 0;
  auto *dims = app.add_subcommand("dims", "dim L_0 ... dim L_K");
  add_common(dims, true);
  dims->add_option("--kmax", kmax, "largest word length")->required();

  std::string checks = "wellformed,chain,power";
  auto *verify = app.add_subcommand("verify", "check structural bounds on the sequence");
  add_common(verify, true);
  verify->add_option("--checks", checks,
                     "comma list of wellformed,chain,chain-strict,power,fib,k-fib,lc-basis,gap");

  std::string family;
  std::optional<std::size_t> family_n;
  std::optional<std::uint64_t> prime;
  std::string out_path;
  auto *gen = app.add_subcommand("gen-example", "write one of the built-in example algebras");
  add_common(gen, false);
  gen->add_option("--family", family, "power2, stall-chain, fib-lc, lc-gap7, lc-gap-family")
      ->required();
  gen->add_option("--n", family_n, "size parameter");
  gen->add_option("--prime", prime, "build over GF(p) instead of Q");
  gen->add_option("--out", out_path, "output file")->required();

  std::uint64_t oracle_kmax = 0;
  auto *oracle = app.add_subcommand("oracle-check", "compare with brute-force word enumeration");
  add_common(oracle, true);
  oracle->add_option("--kmax", oracle_kmax, "largest word length")->required();

  std::uint64_t max_subspaces = 10000;
  auto *brute = app.add_subcommand("brute-force", "length of a finite algebra by enumeration");
  add_common(brute, false);
  brute->add_option("--max-subspaces", max_subspaces, "enumeration budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: UsageError: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (length->parsed())
      return cmd_length(c, false, out);
    if (charseq->parsed())
      return cmd_length(c, true, out);
    if (dims->parsed())
      return cmd_dims(c, kmax, out);
    if (verify->parsed())
      return cmd_verify(c, checks, out);
    if (gen->parsed())
      return cmd_gen_example(c, family, family_n, prime, out_path, out);
    if (oracle->parsed())
      return cmd_oracle_check(c, oracle_kmax, out);
    if (brute->parsed())
      return cmd_brute_force(c, max_subspaces, out);
  } catch (const InputFailure &f) {
    err << "error: " << f.kind << ": " << f.message << '\n';
    return exit_usage;
  } catch (const Error &e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return exit_domain;
  }
  err << "error: UsageError: no subcommand\n";
  return exit_usage;
}

} // namespace alglength::cli
