#ifndef EIDEAL_ERRORS_HPP
#define EIDEAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eideal {

/// Malformed graph document. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structural misuse of a graph: unknown vertex, loop, duplicate, name clash.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A formula or surgery was applied outside its hypotheses
/// (not a leaf, operand not Cohen-Macaulay bipartite, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The homology oracle refused an instance above its vertex cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t vertices, std::size_t cap)
        : std::runtime_error("graph has " + std::to_string(vertices) +
                             " vertices; oracle cap is " + std::to_string(cap) +
                             " (raise with --max-vertices)"),
          vertices_(vertices), cap_(cap) {}

    std::size_t vertices() const noexcept { return vertices_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t vertices_;
    std::size_t cap_;
};

} // namespace eideal

#endif // EIDEAL_ERRORS_HPP
