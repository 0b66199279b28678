#pragma once

#include <string>
#include <vector>

#include "dpclab/rewrite.hpp"
#include "dpclab/trs.hpp"

namespace dpclab {

// Built-in example systems. "Rl" is a parametrised family and needs a
// parameter l >= 2; all other names ignore the parameter.
const std::vector<std::string>& builtin_example_names();
bool is_builtin_example(const std::string& name);
Trs builtin_example(const std::string& name, int param = 0);
// raw source text (empty for the generated family)
std::string builtin_example_source(const std::string& name);

// Start terms of the composition family: towers of i applied to the leftmost
// constant, with a descending chain of indexed composition symbols.
Term composition_start_term(int m, int n);

struct BuiltinTrace {
    std::string name;
    std::string example;
    std::string source;
};

const std::vector<BuiltinTrace>& builtin_traces();
bool is_builtin_trace(const std::string& name);
// parsed and replay-validated against its system
Derivation builtin_trace(const std::string& name);

}  // namespace dpclab
