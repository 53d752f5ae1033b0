#pragma once

#include <iosfwd>
#include <string>

#include "lb/lindblad.hpp"

namespace lb {

/// Parses a model description file. The format is flat key-value text:
///
///   # comment
///   dim = 3
///   hamiltonian =
///   complex-matrix 3 3
///   <re> <im>
///   ...
///   collapse =
///   complex-matrix 3 3
///   ...
///
/// `hamiltonian` and each (repeatable) `collapse` key introduce a matrix in
/// the interchange format on the following lines. Alternatively
///
///   preset = transmon
///   t1 = 30e-6
///   tphi = inf
///   anharmonicity = -1.5e9
///   drive_amp = 1.5e8
///
/// selects the built-in three-level transmon; the four parameter keys are
/// optional and default to the library constants. `inf` disables a channel.
///
/// Throws std::runtime_error on malformed input and std::invalid_argument
/// when the assembled model violates its invariants (e.g. non-Hermitian H).
LindbladModel read_model(std::istream& is);
LindbladModel read_model_file(const std::string& path);

}  // namespace lb
