#include "sffkit/harness/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sffkit/error.hpp"

namespace sffkit::harness {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string results_header(int n_max) {
  std::ostringstream os;
  os << "t,tau";
  for (int k = 1; k <= n_max; ++k) os << ",mean_sff" << k;
  for (int k = 1; k <= n_max; ++k) os << ",se_sff" << k;
  os << ",mean_u_re,mean_u_im,sff_c,se_sff_c,var_ratio,se_var_ratio,conn2_empirical,se_conn2"
     << ",pred_z,pred_conn2,pred_sff2,envelope,envelope_conn2";
  return os.str();
}

std::string results_csv(const MomentTable& table, const PredictionCurve& pred, std::uint64_t n_sim) {
  std::ostringstream os;
  os << kResultsVersion << "\n" << results_header(table.n_max) << "\n";
  const int dim = table.grid.dim;
  const double n = static_cast<double>(n_sim);
  for (std::size_t j = 0; j < table.rows.size(); ++j) {
    const auto& r = table.rows[j];
    auto put = [&](double x) { os << "," << format_double(x); };
    os << format_double(r.t);
    put(r.tau);
    for (double m : r.mean) put(m);
    for (double s : r.se) put(s);
    put(r.mean_u.real());
    put(r.mean_u.imag());
    put(r.sffc);
    put(r.sffc_se);
    put(r.var_ratio);
    put(r.var_ratio_se);
    put(r.conn2);
    put(r.conn2_se);
    put(pred.z[j]);
    put(pred.conn2[j]);
    put(pred.sff2_exact[j]);
    put(sampling_envelope(1, dim, pred.z[j], n));
    put(conn2_envelope(dim, pred.z[j], n));
    os << "\n";
  }
  return os.str();
}

std::string predictions_header() {
  return "t,tau,z,conn2,gauss1,gauss2,gauss3,gauss4,ubar_re,ubar_im,sff2_exact,sff2_approx,"
         "envelope1,envelope2,envelope3,envelope4,envelope_conn2";
}

std::string predictions_csv(const PredictionCurve& pred, double n_sim) {
  std::ostringstream os;
  os << kPredictionsVersion << "\n" << predictions_header() << "\n";
  for (std::size_t j = 0; j < pred.grid.size(); ++j) {
    auto put = [&](double x) { os << "," << format_double(x); };
    os << format_double(pred.grid.times[j]);
    put(pred.grid.taus[j]);
    put(pred.z[j]);
    put(pred.conn2[j]);
    for (int n = 0; n < 4; ++n) put(pred.gaussian[n][j]);
    put(pred.ubar[j].real());
    put(pred.ubar[j].imag());
    put(pred.sff2_exact[j]);
    put(pred.sff2_approx[j]);
    for (int n = 1; n <= 4; ++n) put(pred.envelope(n, j, n_sim));
    put(conn2_envelope(pred.grid.dim, pred.z[j], n_sim));
    os << "\n";
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace sffkit::harness
