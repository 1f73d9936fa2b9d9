#ifndef WITTLAB_ERROR_HPP
#define WITTLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wittlab {

// Every failure mode carries a machine-readable kind; the CLI maps kinds to
// exit codes (cap overruns -> 3, everything else -> 2).
enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    RingMismatch,
    LengthMismatch,
    CompositeP,
    IntegralityViolation,
    NotInWindow,
    OrderCapExceeded,
    CapExceeded,
    NotNormal,
    NotSubgroup,
    NotSurjective,
    NotHomomorphic,
    ActionNotHomomorphic,
    NotSurjectiveOnGp,
    NotMinimalNormal,
    NotTransitive,
    GroupMismatch,
    NonIntegralGenus,
    WildRamification,
    ParseError,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kind_name() const { return error_kind_name(kind_); }

    // true for the cap-style failures (CLI exit code 3)
    bool is_cap() const {
        return kind_ == ErrorKind::OrderCapExceeded || kind_ == ErrorKind::CapExceeded;
    }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) raise(kind, what);
}

} // namespace wittlab

#endif
