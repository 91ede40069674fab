#include "sheffer/proof_io.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

#include "sheffer/parser.hpp"

namespace sheffer {

using nlohmann::json;

ProofFormatError::ProofFormatError(std::size_t file_line, const std::string& detail)
    : Error(file_line == 0 ? detail : "line " + std::to_string(file_line) + ": " + detail),
      file_line_(file_line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t parse_number(std::string_view s, std::size_t file_line, const char* what) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ProofFormatError(file_line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

Formula parse_formula_at(std::string_view text, std::size_t file_line) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ProofFormatError(file_line, e.what());
  }
}

std::string_view direction_name(DefDirection d) {
  return d == DefDirection::Unfold ? "UNFOLD" : "FOLD";
}

DefDirection direction_from(std::string_view s, std::size_t file_line) {
  if (s == "UNFOLD") return DefDirection::Unfold;
  if (s == "FOLD") return DefDirection::Fold;
  throw ProofFormatError(file_line, "expected UNFOLD or FOLD, found '" + std::string(s) + "'");
}

Op def_name_from(std::string_view s, std::size_t file_line) {
  auto op = op_from_name(s);
  if (!op) throw ProofFormatError(file_line, "unknown definition '" + std::string(s) + "'");
  return *op;
}

Path path_from(std::string_view s, std::size_t file_line) {
  try {
    return Path::from_string(trim(s));
  } catch (const PathError& e) {
    throw ProofFormatError(file_line, e.what());
  }
}

Justification parse_justification(std::string_view text, std::size_t file_line) {
  text = trim(text);
  if (text.starts_with("AX")) {
    std::string_view rest = text.substr(2);
    std::size_t bracket = rest.find('[');
    AxiomStep ax;
    ax.schema = static_cast<int>(
        parse_number(rest.substr(0, bracket), file_line, "axiom number"));
    if (bracket != std::string_view::npos) {
      std::size_t close = rest.rfind(']');
      if (close == std::string_view::npos || close < bracket) {
        throw ProofFormatError(file_line, "unterminated substitution");
      }
      std::string_view body = rest.substr(bracket + 1, close - bracket - 1);
      while (!trim(body).empty()) {
        std::size_t comma = body.find(',');
        std::string_view entry = trim(body.substr(0, comma));
        std::size_t assign = entry.find(":=");
        if (assign == std::string_view::npos) {
          throw ProofFormatError(file_line, "expected <var>:=<formula> in substitution");
        }
        std::string name(trim(entry.substr(0, assign)));
        if (ax.subst.contains(name)) {
          throw ProofFormatError(file_line, "metavariable " + name + " given twice");
        }
        ax.subst.emplace(name, parse_formula_at(entry.substr(assign + 2), file_line));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
    }
    return ax;
  }
  if (text.starts_with("MP")) {
    std::string_view rest = text.substr(2);
    std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ProofFormatError(file_line, "MP needs two line numbers");
    }
    return MpStep{parse_number(rest.substr(0, comma), file_line, "line number"),
                  parse_number(rest.substr(comma + 1), file_line, "line number")};
  }
  if (text.starts_with("DEF")) {
    std::string_view rest = trim(text.substr(3));
    std::size_t at = rest.find('@');
    if (at == std::string_view::npos) throw ProofFormatError(file_line, "DEF needs '@ <path>'");
    std::string_view head = trim(rest.substr(0, at));
    std::size_t space = head.find(' ');
    if (space == std::string_view::npos) {
      throw ProofFormatError(file_line, "DEF needs a name and a direction");
    }
    DefStep def;
    def.name = def_name_from(trim(head.substr(0, space)), file_line);
    def.direction = direction_from(trim(head.substr(space + 1)), file_line);
    def.path = path_from(rest.substr(at + 1), file_line);
    return def;
  }
  if (text == "PREMISE") return PremiseStep{};
  throw ProofFormatError(file_line, "unknown justification '" + std::string(text) + "'");
}

json justification_json(const Justification& just) {
  return std::visit(
      [](const auto& j) -> json {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, AxiomStep>) {
          json subst = json::object();
          for (const auto& [name, f] : j.subst) subst[name] = render(f);
          return {{"rule", "AX"}, {"schema", j.schema}, {"subst", subst}};
        } else if constexpr (std::is_same_v<T, MpStep>) {
          return {{"rule", "MP"}, {"major", j.major}, {"minor", j.minor}};
        } else if constexpr (std::is_same_v<T, DefStep>) {
          return {{"rule", "DEF"},
                  {"name", std::string(op_name(j.name))},
                  {"direction", std::string(direction_name(j.direction))},
                  {"path", j.path.to_string()}};
        } else {
          return {{"rule", "PREMISE"}};
        }
      },
      just);
}

Justification justification_from_json(const json& j) {
  const std::string rule = j.at("rule").get<std::string>();
  if (rule == "AX") {
    AxiomStep ax;
    ax.schema = j.at("schema").get<int>();
    for (const auto& [name, f] : j.at("subst").items()) {
      ax.subst.emplace(name, parse_formula_at(f.get<std::string>(), 0));
    }
    return ax;
  }
  if (rule == "MP") {
    return MpStep{j.at("major").get<std::size_t>(), j.at("minor").get<std::size_t>()};
  }
  if (rule == "DEF") {
    DefStep def;
    def.name = def_name_from(j.at("name").get<std::string>(), 0);
    def.direction = direction_from(j.at("direction").get<std::string>(), 0);
    def.path = path_from(j.at("path").get<std::string>(), 0);
    return def;
  }
  if (rule == "PREMISE") return PremiseStep{};
  throw ProofFormatError(0, "unknown rule '" + rule + "'");
}

}  // namespace

std::string justification_text(const Justification& just) {
  return std::visit(
      [](const auto& j) -> std::string {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, AxiomStep>) {
          std::string out = "AX" + std::to_string(j.schema) + " [";
          bool first = true;
          for (const auto& [name, f] : j.subst) {
            if (!first) out += ", ";
            first = false;
            out += name + ":=" + render(f);
          }
          return out + "]";
        } else if constexpr (std::is_same_v<T, MpStep>) {
          return "MP " + std::to_string(j.major) + "," + std::to_string(j.minor);
        } else if constexpr (std::is_same_v<T, DefStep>) {
          return "DEF " + std::string(op_name(j.name)) + " " +
                 std::string(direction_name(j.direction)) + " @ " + j.path.to_string();
        } else {
          return "PREMISE";
        }
      },
      just);
}

std::string write_proof_text(const Proof& proof) {
  std::string out = "goal: " + render(proof.goal) + "\n";
  for (const ProofLine& line : proof.lines) {
    out += std::to_string(line.index);
    out += ". ";
    out += render(line.formula);
    out += " ; ";
    out += justification_text(line.just);
    out += '\n';
  }
  return out;
}

Proof read_proof_text(std::string_view text) {
  std::optional<Formula> goal;
  std::vector<ProofLine> lines;
  std::size_t file_line = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++file_line;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("goal:")) {
      if (goal) throw ProofFormatError(file_line, "second goal line");
      goal = parse_formula_at(line.substr(5), file_line);
      continue;
    }
    if (!goal) throw ProofFormatError(file_line, "expected 'goal: <formula>' first");
    std::size_t dot = line.find('.');
    std::size_t semi = line.find(';');
    if (dot == std::string_view::npos || semi == std::string_view::npos || semi < dot) {
      throw ProofFormatError(file_line, "expected '<index>. <formula> ; <justification>'");
    }
    ProofLine pl{parse_number(line.substr(0, dot), file_line, "line index"),
                 parse_formula_at(line.substr(dot + 1, semi - dot - 1), file_line),
                 parse_justification(line.substr(semi + 1), file_line)};
    lines.push_back(std::move(pl));
  }
  if (!goal) throw ProofFormatError(file_line, "missing 'goal:' line");
  return Proof{*goal, std::move(lines)};
}

std::string write_proof_json(const Proof& proof, int indent) {
  json lines = json::array();
  for (const ProofLine& line : proof.lines) {
    lines.push_back({{"index", line.index},
                     {"formula", render(line.formula)},
                     {"just", justification_json(line.just)}});
  }
  json doc = {{"goal", render(proof.goal)}, {"lines", std::move(lines)}};
  return doc.dump(indent);
}

Proof read_proof_json(std::string_view text) {
  try {
    json doc = json::parse(text);
    Proof proof{parse_formula_at(doc.at("goal").get<std::string>(), 0), {}};
    for (const json& line : doc.at("lines")) {
      proof.lines.push_back(ProofLine{line.at("index").get<std::size_t>(),
                                      parse_formula_at(line.at("formula").get<std::string>(), 0),
                                      justification_from_json(line.at("just"))});
    }
    return proof;
  } catch (const json::exception& e) {
    throw ProofFormatError(0, std::string("malformed proof JSON: ") + e.what());
  }
}

Proof read_proof(std::string_view text) {
  std::string_view t = trim(text);
  while (!t.empty() && (t.front() == '\n')) t = trim(t.substr(1));
  if (!t.empty() && t.front() == '{') return read_proof_json(text);
  return read_proof_text(text);
}

}  // namespace sheffer
