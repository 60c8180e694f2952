#ifndef FIBERCERT_ERRORS_HPP
#define FIBERCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibercert {

// Bad user input: malformed files, invalid presentations, out-of-range config.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with position information (1-based line, 0 = unknown).
struct ParseError : InputError {
    int line;
    int column;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : InputError(format(msg, line_, column_)), line(line_), column(column_) {}

  private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0)
            return msg;
        std::string s = "line " + std::to_string(line);
        if (column > 0)
            s += ", col " + std::to_string(column);
        return s + ": " + msg;
    }
};

// Inputs excluded by the degree criterion itself (S^1 x D^2 / S^1 x S^2 style
// presentations); callers may catch this and mark the entry "n/a".
struct ExcludedInputError : InputError {
    explicit ExcludedInputError(const std::string& msg) : InputError(msg) {}
};

// Violation of an internal invariant: indicates a bug or a non-manifold
// presentation fed to a manifold-only code path.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace fibercert

#endif
