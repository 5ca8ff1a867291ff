#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmbp/instance.hpp"

namespace mmbp {

// The mixed integer linear program for an instance:
//   maximize U
//   dim_l:  U <= sum_e w_el y_e            (one row per coordinate)
//   lb_e:   x_u + x_v >= y_e               (one row per edge)
//   ub_e:   x_u + x_v + y_e <= 2           (one row per edge)
//   bal:    sum_i x_i = n/2
//   x_i, y_e binary; U continuous >= 0.
// Weight coefficients keep milli-unit fidelity. Stored generatively (the
// rows are a deterministic function of these fields), so model equality is
// field equality.
struct MilpModel {
  std::int32_t vertex_count = 0;
  std::int32_t dim = 0;
  std::vector<Edge> edges;
  std::vector<std::int64_t> weights_milli;  // m x dim, row per edge

  std::size_t edge_count() const { return edges.size(); }
  // k + 2|E| + 1
  std::size_t constraint_count() const {
    return static_cast<std::size_t>(dim) + 2 * edges.size() + 1;
  }
  // |V| + |E| binaries
  std::size_t binary_count() const {
    return static_cast<std::size_t>(vertex_count) + edges.size();
  }
  // binaries plus the continuous U
  std::size_t variable_count() const { return binary_count() + 1; }

  std::span<const std::int64_t> weight_row(std::size_t e) const {
    return {weights_milli.data() + e * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }

  bool operator==(const MilpModel&) const = default;
};

MilpModel build_model(const Instance& instance);

// LP-format text with sections Maximize / Subject To / Bounds / Binary /
// End; variables "x{i}", "y{u}_{v}", "U"; rows "dim{l}", "lb{u}_{v}",
// "ub{u}_{v}", "bal". Deterministic; weights printed with three fraction
// digits.
std::string emit_lp(const MilpModel& model);

// Inverse of emit_lp on its own output. Throws ParseError on malformed
// sections, unknown variable names, or coefficients that do not carry
// exactly three fraction digits.
MilpModel parse_lp(std::string_view text);

// An assignment to the model variables. x is 1-based (x[0] ignored), y
// follows edge order. u_milli may hold any value the checker should judge.
struct Witness {
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> y;
  std::int64_t u_milli = 0;
};

Witness witness_from_bisection(const Instance& instance, const Bisection& s);

struct FamilyReport {
  bool satisfied = true;
  std::vector<std::string> violated;  // row names, in model order
};

// Outcome of checking a witness against every constraint family. Feasible
// means every family holds. Tight additionally means y marks exactly the
// cut of S = {i | x_i = 1} and U equals that cut's weight; optima are
// tight, but feasible points need not be (y may undercount the cut).
struct CheckReport {
  FamilyReport dim_rows;   // U <= sum w_el y_e per coordinate
  FamilyReport cut_lower;  // x_u + x_v >= y_e
  FamilyReport cut_upper;  // x_u + x_v + y_e <= 2
  FamilyReport balance;    // sum x_i = n/2
  FamilyReport domains;    // x, y binary; U >= 0
  bool tight = false;

  bool feasible() const {
    return dim_rows.satisfied && cut_lower.satisfied && cut_upper.satisfied &&
           balance.satisfied && domains.satisfied;
  }
};

// Exact integer evaluation of every family. Throws std::invalid_argument on
// witness size mismatch.
CheckReport check_solution(const MilpModel& model, const Witness& witness);

// Solution text for the CLI: one "<name> <value>" pair per line, '#'
// comments and blank lines ignored, omitted variables default to 0.
Witness parse_solution(const MilpModel& model, std::string_view text);

}  // namespace mmbp
