#ifndef SCARLAB_IO_CSV_HPP
#define SCARLAB_IO_CSV_HPP

#include "scarlab/basis.hpp"
#include "scarlab/eigensystem.hpp"
#include "scarlab/entanglement.hpp"
#include "scarlab/evolution.hpp"
#include "scarlab/spectral.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace scarlab::io {

/// Shortest round-trip-safe form: printf "%.17g".
std::string format_double(double value);

/// Compact signed label for file names: -1 -> "-1", 0.5 -> "+0.5".
std::string format_g_label(double g);

std::string trace_header();
std::string entropy_header();
std::string pnup_header(int length);

void write_basis_csv(std::ostream& out, const ConstrainedBasis& basis);
void write_spectrum_csv(std::ostream& out, const EigenSystem& eig);
void write_scars_csv(std::ostream& out, const EigenSystem& eig, const Eigen::VectorXd& overlaps,
                     const ScarLabeling& scars);

/// Columns: t, p_z2, p_z2bar, log_norm_sq, re/im of both Néel amplitudes.
void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

/// Columns: alpha, g, energy, overlap, is_scar, nup_0 .. nup_{L/2}.
void write_pnup_csv(std::ostream& out, int length, const EigenSystem& eig, const Eigen::VectorXd& overlaps,
                    const ScarLabeling& scars, const std::vector<NupDistribution>& rows);

/// Columns: alpha, energy, g, entropy_bits, is_scar.
void write_entropy_csv(std::ostream& out, const std::vector<EntropyRecord>& records, const ScarLabeling& scars);

}  // namespace scarlab::io

#endif  // SCARLAB_IO_CSV_HPP
