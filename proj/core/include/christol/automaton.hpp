#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "christol/kernel.hpp"

namespace christol {

/// Deterministic finite automaton with output over the digit alphabet
/// {0..p-1}. Input is the base-p expansion of n, least significant digit
/// first; the output of the state reached is a_n. Reading the empty string
/// yields the output of the start state, a_0.
struct Dfao {
  struct State {
    Residue output = 0;
    std::vector<std::size_t> next;  ///< p entries

    friend bool operator==(const State&, const State&) = default;
  };

  Prime p;
  std::size_t start = 0;
  std::vector<State> states;

  std::size_t size() const noexcept { return states.size(); }
  friend bool operator==(const Dfao&, const Dfao&) = default;
};

/// States are the distinct series reachable from f under sections (compared
/// at precision cfg.n_eq), numbered breadth-first; output is the constant
/// term.
Dfao build_dfao(const BranchSpec& spec, const ClosureConfig& cfg = {});

/// The coordinate-vector machine: states are the alpha vectors reachable from
/// rep.initial under alpha_step, output alpha_output.
Dfao dfao_from_linear(const KernelRepresentation& rep,
                      std::size_t max_states = ClosureConfig{}.max_states);

/// Moore partition refinement starting from the partition by output.
/// Unreachable states are dropped and the result is numbered breadth-first
/// from the start state, so equivalent machines minimize to equal values.
Dfao minimize(const Dfao& a);

/// Drops unreachable states and renumbers breadth-first (digits ascending).
Dfao canonicalize(const Dfao& a);

/// Base-p digits of a decimal string, least significant first, no trailing
/// zeros ("0" -> {}). Arbitrary length. Throws MalformedNumber.
std::vector<unsigned> to_digits_lsd(std::string_view decimal, Prime p);

/// Base-p digits of a machine-size integer, least significant first.
std::vector<unsigned> to_digits_lsd(std::uint64_t n, Prime p);

FpElement run(const Dfao& a, std::span<const unsigned> digits);
FpElement run(const KernelRepresentation& rep, std::span<const unsigned> digits);
FpElement query(const Dfao& a, std::string_view decimal);
FpElement query(const KernelRepresentation& rep, std::string_view decimal);

/// Graphviz rendering; parallel edges are merged with comma-separated digit
/// labels.
std::string export_dot(const Dfao& a);

/// dfao-v1 JSON, e.g.
/// {"format":"dfao-v1","p":2,"digit_order":"lsd","start":0,
///  "states":[{"output":0,"next":[0,1]},{"output":1,"next":[1,0]}]}
/// (emitted on one line).
std::string serialize(const Dfao& a);
/// Throws SchemaError on malformed input.
Dfao deserialize(std::string_view json);

/// Throws SchemaError if ids or outputs are out of range.
void validate(const Dfao& a);

}  // namespace christol
