#pragma once

// `afi` command-line dispatcher. Kept in a header so the test suites can
// drive it with in-memory streams.
//
// Exit codes: 0 success, 1 domain error (infeasible parameters, matrix not
// idempotent where that is required or being verified), 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afi/afi.hpp"

namespace afi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void render_human(std::ostream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    out << pad << it.key() << ':';
    const bool string_array = v.is_array() && !v.empty() &&
                              std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_string(); });
    if (v.is_object()) {
      out << '\n';
      render_human(out, v, indent + 2);
    } else if (string_array) {
      out << '\n';
      for (const auto& e : v) out << pad << "  " << e.get<std::string>() << '\n';
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()) &&
               !std::all_of(v.begin(), v.end(), [](const json& e) {
                 return e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) { return x.is_primitive(); });
               })) {
      out << '\n';
      std::size_t idx = 0;
      for (const auto& e : v) {
        out << pad << "  - [" << idx++ << "]\n";
        if (e.is_object()) render_human(out, e, indent + 4);
        else out << pad << "    " << e.dump() << '\n';
      }
    } else {
      out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

struct Emitter {
  std::ostream& out;
  bool as_json = false;
  std::string command;
  json inputs = json::object();

  void emit(const json& result) const {
    if (as_json) {
      json env{{"command", command}, {"inputs", inputs}, {"result", result}, {"version", kVersion}};
      out << env.dump(2) << '\n';
    } else {
      out << "command: " << command << '\n';
      out << "version: " << kVersion << '\n';
      if (!inputs.empty()) {
        out << "inputs:\n";
        render_human(out, inputs, 2);
      }
      out << "result:\n";
      render_human(out, result.is_object() ? result : json{{"value", result}}, 2);
    }
  }
};

inline ScaledMatrix load_matrix(const std::string& path, std::istream& in, std::size_t cap) {
  if (path == "-") return parse_matrix(in, cap);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open matrix file '" + path + "'");
  return parse_matrix(f, cap);
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << content;
}

inline json matrix_json(const SignMatrix& m, std::int64_t k) {
  return json{{"n", m.size()}, {"k", k}, {"rows", row_strings(m)}};
}

inline json types_json(const TypePartition& tp) {
  return json{{"count", tp.count()}, {"multiplicity", tp.multiplicity}, {"classes", tp.classes}};
}

}  // namespace detail

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                    std::istream& in = std::cin) {
  CLI::App app{"afi: absolutely flat idempotent matrices (exact arithmetic)", "afi"};
  app.require_subcommand(1);
  std::size_t max_n = 0;
  app.add_option("--max-n", max_n,
                 "Raise every dimension cap (matrix 32, canonical form 12, census 6 general / 12 rank-2) to N");

  bool as_json = false;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Structured JSON output"); };

  std::int64_t n_max = 0, n = 0, k = 0, r = 0, t = 0, q = 0, l = 0;
  std::string method = "auto", out_path, file_a, file_b;
  bool no_transpose = false, rank2_only = false;
  std::size_t jobs = 1;

  auto* feasible = app.add_subcommand("feasible", "List every (n,k,r) with n <= N that admits a flat idempotent");
  feasible->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  add_json(feasible);

  auto* bounds = app.add_subcommand("bounds", "Bounds on the number of inequivalent (n,k,2) idempotents");
  bounds->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_json(bounds);

  auto* construct_cmd = app.add_subcommand("construct", "Build an (n,k,r) flat idempotent");
  construct_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--method", method, "auto | rank1 | block | rank2")
      ->check(CLI::IsMember({"auto", "rank1", "block", "rank2"}));
  construct_cmd->add_option("--t", t, "rank2 coordinate t");
  construct_cmd->add_option("--q", q, "rank2 coordinate q");
  construct_cmd->add_option("--l", l, "rank2 coordinate l");
  construct_cmd->add_option("--out", out_path, "Write the matrix here instead of stdout");
  add_json(construct_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check B^2 = kB exactly and report rank, trace, m, u");
  verify_cmd->add_option("matrix", file_a, "Matrix file ('-' for stdin)")->required();
  add_json(verify_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Row/column types, standard form, canonical representative");
  classify_cmd->add_option("matrix", file_a, "Matrix file ('-' for stdin)")->required();
  add_json(classify_cmd);

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide permutation/signature (and transposition) equivalence");
  equiv_cmd->add_option("a", file_a)->required();
  equiv_cmd->add_option("b", file_b)->required();
  equiv_cmd->add_flag("--no-transpose", no_transpose, "Similarity only");
  add_json(equiv_cmd);

  auto* census_cmd = app.add_subcommand("census", "Enumerate all classes for (n,k)");
  census_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  census_cmd->add_flag("--rank2-only", rank2_only, "Only rank-2 classes (two-row-type search)");
  census_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--out", out_path, "Record file (JSON Lines)");
  add_json(census_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::size_t dim_cap = max_n ? std::max(max_n, kDefaultDimensionCap) : kDefaultDimensionCap;
  const std::size_t canon_cap = max_n ? max_n : kDefaultCanonicalCap;
  detail::Emitter em{out, as_json, app.get_subcommands().front()->get_name()};

  try {
    if (feasible->parsed()) {
      em.inputs = {{"n_max", n_max}};
      json list = json::array();
      for (const auto& tr : feasible_triples(n_max)) list.push_back(tr);
      em.emit(json{{"count", list.size()}, {"triples", list}});
      return kExitOk;
    }
    if (bounds->parsed()) {
      em.inputs = {{"n", n}, {"k", k}};
      em.emit(rank2_bounds(n, k));
      return kExitOk;
    }
    if (construct_cmd->parsed()) {
      em.inputs = {{"n", n}, {"k", k}, {"r", r}, {"method", method}};
      ConstructMethod cm = ConstructMethod::kAuto;
      if (method == "rank1") cm = ConstructMethod::kRank1;
      else if (method == "block") cm = ConstructMethod::kBlock;
      else if (method == "rank2") cm = ConstructMethod::kRank2;
      if (cm == ConstructMethod::kRank2) {
        em.inputs["t"] = t;
        em.inputs["q"] = q;
        em.inputs["l"] = l;
      }
      const auto mat = construct(n, k, r, cm, {t, q, l}, dim_cap);
      const std::string text = format_matrix(mat, k);
      if (!out_path.empty()) {
        detail::write_file(out_path, text);
        em.inputs["out"] = out_path;
      }
      if (as_json) em.emit(detail::matrix_json(mat, k));
      else if (out_path.empty()) out << text;
      else out << "wrote " << out_path << '\n';
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      em.inputs = {{"matrix", file_a}};
      const auto sm = detail::load_matrix(file_a, in, dim_cap);
      const auto rep = full_report(sm.matrix, sm.k);
      em.emit(rep);
      return rep.is_idempotent ? kExitOk : kExitDomain;
    }
    if (classify_cmd->parsed()) {
      em.inputs = {{"matrix", file_a}};
      const auto sm = detail::load_matrix(file_a, in, dim_cap);
      const auto& b = sm.matrix;
      const bool idem = is_flat_idempotent(b, sm.k);
      const auto rank = exact_rank(b);
      json res{{"n", b.size()},
               {"k", sm.k},
               {"is_idempotent", idem},
               {"rank", rank},
               {"row_types", detail::types_json(row_types(b))},
               {"col_types", detail::types_json(col_types(b))},
               {"standard_form", nullptr}};
      if (idem && rank == 2) {
        const auto sf = to_standard_form(b, sm.k);
        res["standard_form"] = json{{"params", sf.params}, {"x", sf.x}, {"y", sf.y}, {"rows", row_strings(sf.matrix)}};
      }
      const auto canon = canonical_rep(b, {.include_transpose = true, .cap = canon_cap});
      res["canonical_hash"] = canonical_hash(canon);
      res["canonical"] = row_strings(canon);
      em.emit(res);
      return kExitOk;
    }
    if (equiv_cmd->parsed()) {
      em.inputs = {{"a", file_a}, {"b", file_b}, {"transpose", !no_transpose}};
      const auto a = detail::load_matrix(file_a, in, dim_cap);
      const auto b = detail::load_matrix(file_b, in, dim_cap);
      if (a.matrix.size() != b.matrix.size()) throw UsageError("equiv: matrices differ in dimension");
      const bool eq = are_equivalent(a.matrix, b.matrix, {.include_transpose = !no_transpose, .cap = canon_cap});
      em.emit(json{{"equivalent", eq}});
      return kExitOk;
    }
    if (census_cmd->parsed()) {
      em.inputs = {{"n", n}, {"k", k}, {"rank2_only", rank2_only}, {"jobs", jobs}};
      CensusOptions opt{.jobs = jobs};
      if (max_n) opt.general_cap = opt.rank2_cap = max_n;
      const auto records = rank2_only ? census_rank2(static_cast<std::size_t>(n), k, opt)
                                      : census_general(static_cast<std::size_t>(n), k, opt);
      if (!out_path.empty()) {
        std::ostringstream buf;
        write_records(buf, records);
        detail::write_file(out_path, buf.str());
        em.inputs["out"] = out_path;
      }
      json summary = json::array();
      for (const auto& [tr, count] : census_summary(records)) {
        json row = tr;
        row["classes"] = count;
        if (tr.r == 2 && tr.n % 2 == 0) {
          const auto bd = rank2_bounds(tr.n, tr.k);
          row["bounds"] = json{{"lower", bd.lower}, {"upper", bd.upper}};
        }
        summary.push_back(row);
      }
      if (as_json) {
        em.emit(json{{"summary", summary}, {"records", records}});
      } else {
        out << "n   k   r   m   u   classes  raw\n";
        for (const auto& [tr, count] : census_summary(records)) {
          std::int64_t raw = 0;
          for (const auto& rec : records)
            if (rec.triple == tr) raw += rec.raw_count;
          char line[96];
          std::snprintf(line, sizeof line, "%-3lld %-3lld %-3lld %-3lld %-3lld %-8zu %lld\n",
                        static_cast<long long>(tr.n), static_cast<long long>(tr.k),
                        static_cast<long long>(tr.r), static_cast<long long>(tr.m),
                        static_cast<long long>(tr.u), count, static_cast<long long>(raw));
          out << line;
        }
        out << "total classes: " << records.size() << '\n';
        if (!out_path.empty()) out << "records written to " << out_path << '\n';
      }
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << "afi: " << e.what() << '\n';
    return kExitDomain;
  } catch (const OverflowError& e) {
    err << "afi: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "afi: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "afi: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "afi: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "afi: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace afi::cli
