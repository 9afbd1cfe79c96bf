#ifndef BLOCKDESC_ERRORS_HPP
#define BLOCKDESC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blockdesc {

/// Malformed or out-of-contract input (bad file, dimension mismatch, ...).
/// CLI exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A verifier ran and the property does not hold. CLI exit code 1.
class VerificationFailure : public std::runtime_error {
public:
  explicit VerificationFailure(const std::string& msg) : std::runtime_error(msg) {}
};

/// A theorem hypothesis failed on this input (e.g. stabilizer mismatch,
/// non-abelian Sylow). Distinct from a falsified conclusion. CLI exit code 3.
class HypothesisFailure : public std::runtime_error {
public:
  explicit HypothesisFailure(const std::string& msg) : std::runtime_error(msg) {}
};

/// An identity that should hold unconditionally failed; indicates a bug in
/// this library or a genuinely falsified statement. CLI exit code 1.
class InternalInconsistency : public std::logic_error {
public:
  explicit InternalInconsistency(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace blockdesc

#endif
