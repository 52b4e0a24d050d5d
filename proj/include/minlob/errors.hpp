#pragma once

#include <stdexcept>
#include <string>

namespace minlob {

// Machine-checkable reason attached to every library exception.
enum class Errc {
    vertex_out_of_range,
    loop_arc,
    duplicate_arc,
    bad_parameter,
    unreachable_vertices,
    arc_missing,
    arc_in_tree,
    arc_into_root,
    backward_arc,
    vertex_not_covered,
    not_spanning,
    not_locally_minimal,
    cyclic_input,
    no_unique_source,
    not_a_cover,
    dependent_set,
    missing_in_neighbor,
    oracle_bound_exceeded,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace minlob
