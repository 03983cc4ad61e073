#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed mathematical input: an id out of range, a tensor table of the
// wrong shape, a relation that is not a partial order, a structure that
// fails its defining axioms.  The message carries the offending witness.
class input_error : public error {
public:
    explicit input_error(const std::string& what) : error(what) {}
};

// Textual input that cannot be read at all.  Records a 1-based position.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int col = 0)
        : error(what + " (line " + std::to_string(line) +
                (col > 0 ? ", col " + std::to_string(col) : std::string{}) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// An operation was called on a structure that does not satisfy the
// operation's stated precondition (e.g. a divisibility-only construction
// applied to a non-divisible tensor).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// A cross-check that is provably redundant disagreed anyway.  This always
// indicates a bug in the library (or a broken invariant upstream), never
// bad user input.
class internal_check_error : public error {
public:
    explicit internal_check_error(const std::string& what) : error(what) {}
};

}  // namespace qlab
