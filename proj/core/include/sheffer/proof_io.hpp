#pragma once

// Proof files.
//
// Text, one line each after a goal header; '#' starts a comment line:
//
//   goal: <formula>
//   <index>. <formula> ; AX<k> [A:=<f>, B:=<f>, C:=<f>]
//   <index>. <formula> ; MP <major>,<minor>
//   <index>. <formula> ; DEF <name> <UNFOLD|FOLD> @ <path>
//
// Formulas are written in the ASCII dialect; paths use L/R/C with "." for
// the root. The JSON mirror carries the same fields.

#include <cstddef>
#include <string>
#include <string_view>

#include "sheffer/error.hpp"
#include "sheffer/proof.hpp"

namespace sheffer {

class ProofFormatError : public Error {
 public:
  ProofFormatError(std::size_t file_line, const std::string& detail);
  /// 1-based line of the input text (0 for JSON structure errors).
  std::size_t file_line() const { return file_line_; }

 private:
  std::size_t file_line_;
};

std::string justification_text(const Justification& just);

std::string write_proof_text(const Proof& proof);
Proof read_proof_text(std::string_view text);

std::string write_proof_json(const Proof& proof, int indent = -1);
Proof read_proof_json(std::string_view text);

/// Dispatches on the first non-blank character ('{' means JSON).
Proof read_proof(std::string_view text);

}  // namespace sheffer
