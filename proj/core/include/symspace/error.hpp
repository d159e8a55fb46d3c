#pragma once

#include <stdexcept>
#include <string>

namespace symspace {

// Failure conditions surfaced by the library. Each operation documents which
// of these it can raise; everything else indicates a malformed input.
enum class Errc {
  InvalidInput,       // construction/parse-level violation
  SpaceMismatch,      // operands live on measure spaces of different total mass
  IndeterminateForm,  // reserved: cannot occur for well-formed inputs
  InfiniteBlock,      // reserved: averaging over an infinite-mass block
  WeightNotIntegrable,
  UnrepresentableTail,
  NormInfinite,
  QuasiNormSpec,
  InvalidConstant,
  NegativeValues,
  TailPresent,
  NotAChain,
  NoConvergence,
  NotAMember,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace symspace
