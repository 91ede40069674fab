#include "sheffer/transforms.hpp"

#include "sheffer/parser.hpp"

namespace sheffer {

namespace {

bool hosts_encryption(Op op) {
  return op == Op::Nor || op == Op::Nand || op == Op::Xor || op == Op::Updown;
}

bool is_guarded_stroke(const Formula& f) {
  return f.is_not() && (f.child().is_binary(Op::Nor) || f.child().is_binary(Op::Nand));
}

Formula encrypt_at(const Formula& f, Path& path, EncryptionTrace& trace) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::Not: {
      path.steps.push_back(Step::Child);
      Formula child = encrypt_at(f.child(), path, trace);
      path.steps.pop_back();
      return neg(std::move(child));
    }
    case Formula::Kind::Binary: {
      const bool host = hosts_encryption(f.op());
      auto operand = [&](const Formula& g, Step side) {
        path.steps.push_back(side);
        const Formula* target = &g;
        if (host && is_guarded_stroke(g)) {
          trace.removed_negations.push_back(path);
          target = &g.child();
        }
        Formula out = encrypt_at(*target, path, trace);
        path.steps.pop_back();
        return out;
      };
      Formula l = operand(f.left(), Step::Left);
      Formula r = operand(f.right(), Step::Right);
      return bin(f.op(), std::move(l), std::move(r));
    }
  }
  return f;
}

}  // namespace

Encrypted upsilon_encrypt(const Formula& f) {
  EncryptionTrace trace;
  Path path;
  Formula out = encrypt_at(f, path, trace);
  return {std::move(out), std::move(trace)};
}

Formula upsilon_decrypt(const Formula& f, const EncryptionTrace& trace) {
  Formula out = f;
  for (auto it = trace.removed_negations.rbegin(); it != trace.removed_negations.rend(); ++it) {
    out = replace_at(out, *it, neg(subformula_at(out, *it)));
  }
  return out;
}

Formula psi_apply(const Formula& f) {
  if (!f.is_binary(Op::Xor)) {
    throw NotXorRootError("psi needs a formula whose root connective is XOR: " + render(f));
  }
  return bin(Op::Updown, f.left(), f.right());
}

Formula psi_invert(const Formula& f) {
  if (!f.is_binary(Op::Updown)) {
    throw NotUpdownRootError("inverse psi needs a formula whose root connective is UPDOWN: " +
                             render(f));
  }
  return bin(Op::Xor, f.left(), f.right());
}

Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::Not:
      return neg(desugar(f.child()));
    case Formula::Kind::Binary: {
      Formula l = desugar(f.left());
      Formula r = desugar(f.right());
      switch (f.op()) {
        case Op::Nor: return neg(lor(std::move(l), std::move(r)));
        case Op::Nand: return neg(land(std::move(l), std::move(r)));
        case Op::Nimp: return neg(imp(std::move(l), std::move(r)));
        case Op::Xor: return neg(iff(std::move(l), std::move(r)));
        case Op::Updown: return iff(std::move(l), std::move(r));
        default: return bin(f.op(), std::move(l), std::move(r));
      }
    }
  }
  return f;
}

}  // namespace sheffer
