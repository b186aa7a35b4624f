#pragma once

#include <stdexcept>
#include <string>

namespace lctb {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

    /// Input or configuration problem (CLI exit code 2) as opposed to a
    /// numerical failure (exit code 3).
    virtual bool is_validation_error() const noexcept { return true; }

private:
    std::string kind_;
};

#define LCTB_DEFINE_ERROR(Name, validation)                                   \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
        bool is_validation_error() const noexcept override { return validation; } \
    }

LCTB_DEFINE_ERROR(DeterminantError, true);
LCTB_DEFINE_ERROR(NonFiniteError, true);
LCTB_DEFINE_ERROR(BranchError, true);
LCTB_DEFINE_ERROR(GridError, true);
LCTB_DEFINE_ERROR(ShapeError, true);
LCTB_DEFINE_ERROR(SmoothnessError, true);
LCTB_DEFINE_ERROR(ParseError, true);
LCTB_DEFINE_ERROR(ConfigError, true);
LCTB_DEFINE_ERROR(DomainError, false);
LCTB_DEFINE_ERROR(ToleranceError, false);
LCTB_DEFINE_ERROR(ConvergenceError, false);

#undef LCTB_DEFINE_ERROR

}  // namespace lctb
