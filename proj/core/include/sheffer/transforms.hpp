#pragma once

// The two reversible rewriting rules used to read the NFO contradictions as
// pseudo-associativity / pseudo-distributivity laws, plus NFO -> FO desugaring.
//
//   upsilon: drops a negation that guards a ↓/↑-rooted operand of a binary NFO
//            node. This is notation, not an equivalence, so the removed
//            positions are kept in a trace for exact decryption.
//   psi:     swaps the root ⊕ for ↕, which flips the final analysis.

#include <vector>

#include "sheffer/error.hpp"
#include "sheffer/formula.hpp"

namespace sheffer {

struct EncryptionTrace {
  /// Paths in the encrypted formula where a negation was removed, in removal
  /// (preorder) order.
  std::vector<Path> removed_negations;

  friend bool operator==(const EncryptionTrace&, const EncryptionTrace&) = default;
};

struct Encrypted {
  Formula formula;
  EncryptionTrace trace;
};

class NotXorRootError : public Error {
 public:
  using Error::Error;
};

class NotUpdownRootError : public Error {
 public:
  using Error::Error;
};

Encrypted upsilon_encrypt(const Formula& f);

/// Throws PathError when a traced path does not apply.
Formula upsilon_decrypt(const Formula& f, const EncryptionTrace& trace);

Formula psi_apply(const Formula& f);
Formula psi_invert(const Formula& f);

/// Rewrites every NFO node into FO connectives and negation, bottom-up.
Formula desugar(const Formula& f);

}  // namespace sheffer
