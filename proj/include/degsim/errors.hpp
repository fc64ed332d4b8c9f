#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degsim {

// Base of every error raised on invalid input or an unsatisfiable request.
// The CLI maps these to exit code 1; anything else is an internal error.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define DEGSIM_DEFINE_ERROR(Name)                                                                  \
    class Name : public Error {                                                                    \
      public:                                                                                      \
        using Error::Error;                                                                        \
    }

DEGSIM_DEFINE_ERROR(ValidationError);
DEGSIM_DEFINE_ERROR(InfeasibleSequence);
DEGSIM_DEFINE_ERROR(PreconditionViolated);
DEGSIM_DEFINE_ERROR(DomainError);
DEGSIM_DEFINE_ERROR(Overflow);
DEGSIM_DEFINE_ERROR(ConvergenceFailure);
DEGSIM_DEFINE_ERROR(RejectionBudgetExceeded);
DEGSIM_DEFINE_ERROR(RejectionUnsuitable);
DEGSIM_DEFINE_ERROR(EdgeNotPresent);
DEGSIM_DEFINE_ERROR(TooLarge);
DEGSIM_DEFINE_ERROR(IsolatedVertex);
DEGSIM_DEFINE_ERROR(InconsistentPaths);
DEGSIM_DEFINE_ERROR(EmptyS0);
DEGSIM_DEFINE_ERROR(InfeasibleScenario);

#undef DEGSIM_DEFINE_ERROR

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace degsim
