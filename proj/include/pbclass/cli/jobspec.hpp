#pragma once

// Textual input for the command-line tool.
//
// Complexes: "sphere", "orientable:g", "nonorientable:k", the aliases "torus",
// "klein", "rp2", or an inline presentation
//   {generators: [a, b], relators: ["a b a^-1 b^-1"]}
// Groups: a catalog name such as "PO(6)", or an inline descriptor
//   {pi0: {torsion: [2]}, pi1: {rank: 1, torsion: []}, action: {g0: [[-1]]}}
// where an action entry may also be {table: [[1], [2], [3], [0]]}.
// mu1: one coordinate list (or a bare integer) per generator of the complex,
//   e.g. "[[1], [0]]" or "[1, 0]".
// Inline text is YAML flow syntax, so JSON is accepted as well.

#include "pbclass/classify.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbclass::cli {

enum class OutputFormat { Table, Machine };

struct JobSpec {
  TwoComplex complex = sphere();
  GroupDescriptor group;
  std::optional<std::vector<AbElement>> mu1;
  std::size_t max_reps = 10;
  OutputFormat format = OutputFormat::Table;
};

/// Throws SchemaError for malformed text.
TwoComplex parse_complex(std::string_view text);
/// Throws SchemaError for malformed text. Validation is left to the caller.
GroupDescriptor parse_group(std::string_view text);
/// Parses generator images and reduces them into pi0. Throws SchemaError for
/// malformed text or a count mismatch.
std::vector<AbElement> parse_mu1(std::string_view text, const TwoComplex& x,
                                 const GroupDescriptor& d);
OutputFormat parse_format(std::string_view text);

/// A whole job: {complex: ..., group: ..., mu1: ..., options: {max_reps, format}}.
JobSpec parse_job(std::string_view text);

/// Canonical inline form of a job (JSON), accepted by parse_job.
std::string emit_spec(const JobSpec& spec);

} // namespace pbclass::cli
