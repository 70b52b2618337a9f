#include "scarlab/io/csv.hpp"

#include <cstdio>
#include <ostream>

namespace scarlab::io {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_g_label(double g) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%+.6g", g == 0.0 ? 0.0 : g);
  return buf;
}

std::string trace_header() {
  return "t,p_z2,p_z2bar,log_norm_sq,re_amp_z2,im_amp_z2,re_amp_z2bar,im_amp_z2bar";
}

std::string entropy_header() { return "alpha,energy,g,entropy_bits,is_scar"; }

std::string pnup_header(int length) {
  std::string h = "alpha,g,energy,overlap,is_scar";
  for (int n = 0; n <= length / 2; ++n) h += ",nup_" + std::to_string(n);
  return h;
}

void write_basis_csv(std::ostream& out, const ConstrainedBasis& basis) {
  out << "index,bits,state,n_up\n";
  for (Index k = 0; k < basis.dim(); ++k) {
    out << k << ',' << basis.bits(k) << ',' << basis.state(k).to_string() << ',' << basis.nup(k) << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const EigenSystem& eig) {
  out << "alpha,energy\n";
  for (Index a = 0; a < eig.dim(); ++a) out << a << ',' << format_double(eig.energies[a]) << '\n';
}

void write_scars_csv(std::ostream& out, const EigenSystem& eig, const Eigen::VectorXd& overlaps,
                     const ScarLabeling& scars) {
  out << "alpha,energy,overlap,is_scar\n";
  for (Index a = 0; a < eig.dim(); ++a) {
    out << a << ',' << format_double(eig.energies[a]) << ',' << format_double(overlaps[a]) << ','
        << (scars.contains(a) ? 1 : 0) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace) {
  out << trace_header() << '\n';
  for (Index k = 0; k < trace.size(); ++k) {
    out << format_double(trace.times[k]) << ',' << format_double(trace.p_z2[k]) << ','
        << format_double(trace.p_z2bar[k]) << ',' << format_double(trace.log_norm_sq[k]) << ','
        << format_double(trace.amp_z2[k].real()) << ',' << format_double(trace.amp_z2[k].imag()) << ','
        << format_double(trace.amp_z2bar[k].real()) << ',' << format_double(trace.amp_z2bar[k].imag())
        << '\n';
  }
}

void write_pnup_csv(std::ostream& out, int length, const EigenSystem& eig, const Eigen::VectorXd& overlaps,
                    const ScarLabeling& scars, const std::vector<NupDistribution>& rows) {
  out << pnup_header(length) << '\n';
  for (const NupDistribution& row : rows) {
    out << row.alpha << ',' << format_double(row.g) << ',' << format_double(eig.energies[row.alpha]) << ','
        << format_double(overlaps[row.alpha]) << ',' << (scars.contains(row.alpha) ? 1 : 0);
    for (Index n = 0; n < row.p.size(); ++n) out << ',' << format_double(row.p[n]);
    out << '\n';
  }
}

void write_entropy_csv(std::ostream& out, const std::vector<EntropyRecord>& records, const ScarLabeling& scars) {
  out << entropy_header() << '\n';
  for (const EntropyRecord& r : records) {
    out << r.alpha << ',' << format_double(r.energy) << ',' << format_double(r.g) << ','
        << format_double(r.entropy_bits) << ',' << (scars.contains(r.alpha) ? 1 : 0) << '\n';
  }
}

}  // namespace scarlab::io
