#pragma once

#include "p2g/json_io.hpp"

#include <string>
#include <vector>

namespace p2g::cli {

struct RunResult {
    int exit_code = 0;  // 0 split / success, 3 non-split, 2 error
    std::string out;
    std::string err;
};

// Full command-line entry point (used by the permsym binary and by tests):
//   permsym analyze  <group-expr>    [--json] [--method M] [--cap-order N] [--seed S] [--timing]
//   permsym groupoid <spec>          [same flags]
//   permsym table    <family> <a..b> [--json] [--cap-order N] [--timing]
// Group expressions: dihedral:N | symmetric:N | cyclic:N | product(e1,e2,...) | table:@file.
// Groupoid specs: "2xdihedral:4, 1xsymmetric:3" (also the multiplication sign)
// or a JSON array [{"n":2,"group":"dihedral:4"}, ...].
RunResult run(const std::vector<std::string>& args);

struct ParseError : InvalidInput {
    ParseError(std::size_t pos, const std::string& what)
        : InvalidInput("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};

GroupPtr parse_group_expression(const std::string& text, const Caps& caps = default_caps());
std::vector<GroupoidComponent> parse_groupoid_spec(const std::string& text,
                                                   const Caps& caps = default_caps());

/// Short structure description: invariant factors for abelian groups, family tag otherwise.
std::string group_structure_string(const GroupPtr& g);

}  // namespace p2g::cli
