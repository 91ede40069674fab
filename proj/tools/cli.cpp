#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sheffer/parser.hpp"
#include "sheffer/proof.hpp"
#include "sheffer/proof_io.hpp"
#include "sheffer/semantics.hpp"
#include "sheffer/transforms.hpp"

namespace sheffer::cli {

namespace {

using nlohmann::json;

// Raised for bad input files and arguments that CLI11 cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool unicode = false;
  Dialect dialect() const { return unicode ? Dialect::Unicode : Dialect::Ascii; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// "@file" arguments name a file holding the formula.
Formula formula_arg(const std::string& arg) {
  if (arg.size() > 1 && arg.front() == '@') return parse(read_file(arg.substr(1)));
  return parse(arg);
}

std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  std::size_t w = display_width(s);
  if (w < width) out.append(width - w, ' ');
  return out;
}

std::string assignment_text(const std::vector<std::string>& atoms, const Assignment& a) {
  std::string out;
  for (const auto& name : atoms) {
    if (!out.empty()) out += ' ';
    out += name + "=" + (a.at(name) ? "1" : "0");
  }
  return out;
}

json assignment_json(const std::vector<std::string>& atoms, const Assignment& a) {
  json j = json::object();
  for (const auto& name : atoms) j[name] = a.at(name) ? 1 : 0;
  return j;
}

json dump_values(const std::vector<std::uint8_t>& v) {
  json arr = json::array();
  for (auto b : v) arr.push_back(static_cast<int>(b));
  return arr;
}

int cmd_parse(const Options& opt, const std::string& text, std::ostream& out) {
  Formula f = formula_arg(text);
  auto atoms = atoms_of(f);
  if (opt.json) {
    json j = {{"formula", render(f, opt.dialect())},
              {"language", language_name(language_of(f))},
              {"atoms", atoms},
              {"size", f.size()},
              {"depth", f.depth()}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << render(f, opt.dialect()) << '\n';
  out << "language: " << language_name(language_of(f)) << '\n';
  out << "atoms:";
  for (const auto& a : atoms) out << ' ' << a;
  out << '\n';
  return kOk;
}

int cmd_table(const Options& opt, const std::string& text, std::ostream& out) {
  Formula f = formula_arg(text);
  TruthTable t = truth_table(f);
  auto tokens = token_layout(f, t, opt.unicode);

  if (opt.json) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const auto& name : t.atom_order) r.push_back(row.at(name) ? 1 : 0);
      rows.push_back(r);
    }
    json columns = json::array();
    for (const auto& c : t.columns) {
      columns.push_back({{"path", c.path.to_string()},
                         {"formula", render(subformula_at(f, c.path), opt.dialect())},
                         {"values", dump_values(c.values)}});
    }
    json layout = json::array();
    for (const auto& tok : tokens) {
      layout.push_back({{"label", tok.label}, {"column", tok.column_index}});
    }
    json j = {{"formula", render(f, opt.dialect())},
              {"atoms", t.atom_order},
              {"rows", rows},
              {"columns", columns},
              {"tokens", layout},
              {"final", {{"column", t.final_index},
                         {"path", t.final_column().path.to_string()},
                         {"values", dump_values(t.final_column().values)}}}};
    out << j.dump(2) << '\n';
    return kOk;
  }

  // Header: atoms, then one column per token; the final analysis is
  // underlined with '=' instead of '-'.
  std::vector<std::size_t> widths;
  std::string header;
  std::string rule;
  for (const auto& name : t.atom_order) {
    std::size_t w = display_width(name);
    header += pad(name, w) + ' ';
    rule += std::string(w, '-') + ' ';
  }
  header += "|";
  rule += "+";
  for (const auto& tok : tokens) {
    std::size_t w = display_width(tok.label);
    widths.push_back(w);
    header += ' ' + tok.label;
    rule += ' ' + std::string(w, tok.column_index == t.final_index ? '=' : '-');
  }
  out << header << '\n' << rule << '\n';
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    std::string line;
    for (const auto& name : t.atom_order) {
      line += pad(t.rows[r].at(name) ? "1" : "0", display_width(name)) + ' ';
    }
    line += "|";
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      std::size_t w = widths[k];
      std::size_t left = (w - 1) / 2;
      line += ' ' + std::string(left, ' ') +
              (t.columns[tokens[k].column_index].values[r] ? "1" : "0") +
              std::string(w - 1 - left, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return kOk;
}

int cmd_check(const Options& opt, const std::string& text, std::ostream& out) {
  Formula f = formula_arg(text);
  TruthTable t = truth_table(f);
  const auto& values = t.final_column().values;
  std::optional<std::size_t> first_true;
  std::optional<std::size_t> first_false;
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] && !first_true) first_true = r;
    if (!values[r] && !first_false) first_false = r;
  }
  std::string verdict = !first_false  ? "TAUTOLOGY"
                        : !first_true ? "CONTRADICTION"
                                      : "CONTINGENT";
  if (opt.json) {
    json j = {{"formula", render(f, opt.dialect())}, {"classification", verdict}};
    if (first_true && first_false) {
      j["witness"] = {{"true", assignment_json(t.atom_order, t.rows[*first_true])},
                      {"false", assignment_json(t.atom_order, t.rows[*first_false])}};
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << verdict << '\n';
  if (first_true && first_false) {
    out << "true at:  " << assignment_text(t.atom_order, t.rows[*first_true]) << '\n';
    out << "false at: " << assignment_text(t.atom_order, t.rows[*first_false]) << '\n';
  }
  return kOk;
}

int cmd_relate(const Options& opt, const std::string& a_text, const std::string& b_text,
               std::ostream& out, std::ostream& err) {
  Formula a = formula_arg(a_text);
  Formula b = formula_arg(b_text);
  Language la = language_of(a);
  Language lb = language_of(b);
  bool a_fo = la == Language::FoOnly || la == Language::Atomic;
  bool b_nfo = lb == Language::NfoOnly || lb == Language::Atomic;
  if (!a_fo || !b_nfo) {
    err << "warning: relations are defined for an FO formula against an NFO formula; got "
        << language_name(la) << " and " << language_name(lb) << '\n';
  }
  auto atoms = combined_atoms(a, b);
  RelationVerdict par = is_parallel(a, b);
  RelationVerdict perp = is_perpendicular(a, b);

  if (opt.json) {
    json j = {{"a", render(a, opt.dialect())},
              {"b", render(b, opt.dialect())},
              {"parallel", par.holds},
              {"perpendicular", perp.holds}};
    if (par.witness) j["parallel_witness"] = assignment_json(atoms, *par.witness);
    if (perp.witness) j["perpendicular_witness"] = assignment_json(atoms, *perp.witness);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "parallel: " << (par.holds ? "true" : "false") << '\n';
  out << "perpendicular: " << (perp.holds ? "true" : "false") << '\n';
  if (par.witness) out << "not parallel at: " << assignment_text(atoms, *par.witness) << '\n';
  if (perp.witness) {
    out << "not perpendicular at: " << assignment_text(atoms, *perp.witness) << '\n';
  }
  return kOk;
}

json trace_json(const EncryptionTrace& trace) {
  json paths = json::array();
  for (const auto& p : trace.removed_negations) paths.push_back(p.to_string());
  return {{"removed_negations", paths}};
}

EncryptionTrace trace_from_file(const std::string& path) {
  try {
    json j = json::parse(read_file(path));
    EncryptionTrace trace;
    for (const auto& p : j.at("removed_negations")) {
      trace.removed_negations.push_back(Path::from_string(p.get<std::string>()));
    }
    return trace;
  } catch (const json::exception& e) {
    throw UsageError("malformed trace file '" + path + "': " + e.what());
  } catch (const PathError& e) {
    throw UsageError("malformed trace file '" + path + "': " + e.what());
  }
}

int cmd_transform(const Options& opt, const std::string& rule, const std::string& text,
                  const std::string& trace_path, std::ostream& out) {
  Formula f = formula_arg(text);
  Formula result = f;
  std::optional<EncryptionTrace> trace;
  if (rule == "upsilon") {
    Encrypted enc = upsilon_encrypt(f);
    result = enc.formula;
    trace = enc.trace;
    if (!trace_path.empty()) write_file(trace_path, trace_json(enc.trace).dump(2) + "\n");
  } else if (rule == "upsilon-inv") {
    if (trace_path.empty()) throw UsageError("upsilon-inv needs --trace <file>");
    result = upsilon_decrypt(f, trace_from_file(trace_path));
  } else if (rule == "psi") {
    result = psi_apply(f);
  } else if (rule == "psi-inv") {
    result = psi_invert(f);
  } else {
    result = desugar(f);
  }

  if (opt.json) {
    json j = {{"rule", rule}, {"input", render(f, opt.dialect())},
              {"output", render(result, opt.dialect())}};
    if (trace) j["trace"] = trace_json(*trace);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << render(result, opt.dialect()) << '\n';
  if (trace && trace_path.empty()) {
    out << "trace:";
    for (const auto& p : trace->removed_negations) out << ' ' << p.to_string();
    out << '\n';
  }
  return kOk;
}

std::string proof_text(const Proof& p, bool as_json) {
  return as_json ? write_proof_json(p, 2) + "\n" : write_proof_text(p);
}

int cmd_prove(const Options& opt, const std::string& text, const std::string& out_path,
              bool main_results, const std::string& dir, std::ostream& out) {
  if (main_results) {
    if (dir.empty()) throw UsageError("--main-results needs --dir <directory>");
    std::filesystem::create_directories(dir);
    auto proofs = prove_main_results();
    const char* names[] = {"a", "b", "c", "d"};
    json summary = json::array();
    for (std::size_t i = 0; i < proofs.size(); ++i) {
      std::string file = (std::filesystem::path(dir) /
                          (std::string("main_") + names[i] + (opt.json ? ".json" : ".prf")))
                             .string();
      write_file(file, proof_text(proofs[i], opt.json));
      summary.push_back({{"result", names[i]},
                         {"goal", render(proofs[i].goal, opt.dialect())},
                         {"file", file},
                         {"lines", proofs[i].lines.size()}});
      if (!opt.json) {
        out << "(" << names[i] << ") " << file << ": " << proofs[i].lines.size() << " lines\n";
      }
    }
    if (opt.json) out << summary.dump(2) << '\n';
    return kOk;
  }

  if (text.empty()) throw UsageError("prove needs a formula or --main-results");
  Formula f = formula_arg(text);
  Proof p = prove_tautology(f);
  if (out_path.empty()) {
    out << proof_text(p, opt.json);
  } else {
    write_file(out_path, proof_text(p, opt.json));
    out << out_path << ": " << p.lines.size() << " lines\n";
  }
  return kOk;
}

int cmd_verify(const Options& opt, const std::string& path, std::ostream& out) {
  const std::string text = read_file(path);
  Proof p = [&] {
    try {
      return read_proof(text);
    } catch (const ProofFormatError& e) {
      throw UsageError(path + ": " + e.what());
    }
  }();
  CheckResult r = check_proof(p);
  if (opt.json) {
    json j = {{"accepted", r.accepted}, {"lines", p.lines.size()}};
    if (!r.accepted) {
      j["line"] = r.line;
      j["reason"] = reject_reason_name(*r.reason);
      j["message"] = r.message;
    }
    out << j.dump(2) << '\n';
  } else if (r.accepted) {
    out << "accepted: " << p.lines.size() << " lines\n";
  } else {
    out << "rejected at line " << r.line << ": " << reject_reason_name(*r.reason) << ": "
        << r.message << '\n';
  }
  return r.accepted ? kOk : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truth tables, transforms and Hilbert-style proofs for FO/NFO formulas", "sheffer"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print JSON instead of text");
  app.add_flag("--unicode", opt.unicode, "Render formulas with logic glyphs");

  std::string formula;
  std::string formula_b;
  std::string rule;
  std::string out_path;
  std::string trace_path;
  std::string dir;
  bool main_results = false;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and re-render a formula")->fallthrough();
  parse_cmd->add_option("formula", formula, "Formula text or @file")->required();

  auto* table_cmd = app.add_subcommand("table", "Print the truth table")->fallthrough();
  table_cmd->add_option("formula", formula, "Formula text or @file")->required();

  auto* check_cmd =
      app.add_subcommand("check", "Classify as tautology, contradiction or contingent")
          ->fallthrough();
  check_cmd->add_option("formula", formula, "Formula text or @file")->required();

  auto* relate_cmd =
      app.add_subcommand("relate", "Decide the parallel and perpendicular relations")
          ->fallthrough();
  relate_cmd->add_option("a", formula, "FO formula")->required();
  relate_cmd->add_option("b", formula_b, "NFO formula")->required();

  auto* transform_cmd = app.add_subcommand("transform", "Apply a rewriting rule")->fallthrough();
  transform_cmd->add_option("rule", rule, "Rule name")
      ->required()
      ->check(CLI::IsMember({"upsilon", "upsilon-inv", "psi", "psi-inv", "desugar"}));
  transform_cmd->add_option("formula", formula, "Formula text or @file")->required();
  transform_cmd->add_option("-t,--trace", trace_path, "Trace file (written by upsilon)");

  auto* prove_cmd = app.add_subcommand("prove", "Generate a proof of a tautology")->fallthrough();
  prove_cmd->add_option("formula", formula, "Formula text or @file");
  prove_cmd->add_option("-o,--out", out_path, "Output file");
  prove_cmd->add_flag("--main-results", main_results, "Prove the four pseudo-laws");
  prove_cmd->add_option("-d,--dir", dir, "Output directory for --main-results");

  auto* verify_cmd = app.add_subcommand("verify", "Check a proof file")->fallthrough();
  verify_cmd->add_option("file", formula, "Proof file (text or JSON)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(opt, formula, out);
    if (table_cmd->parsed()) return cmd_table(opt, formula, out);
    if (check_cmd->parsed()) return cmd_check(opt, formula, out);
    if (relate_cmd->parsed()) return cmd_relate(opt, formula, formula_b, out, err);
    if (transform_cmd->parsed()) return cmd_transform(opt, rule, formula, trace_path, out);
    if (prove_cmd->parsed()) return cmd_prove(opt, formula, out_path, main_results, dir, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, formula, out);
  } catch (const ParseError& e) {
    err << "parse error (" << parse_error_name(e.kind()) << "): " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotATautologyError& e) {
    std::vector<std::string> atoms;
    for (const auto& [name, value] : e.counterexample()) atoms.push_back(name);
    err << "error: not a tautology; countermodel: " << assignment_text(atoms, e.counterexample())
        << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace sheffer::cli
