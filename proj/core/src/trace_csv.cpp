#include "asrc/trace_csv.hpp"

#include <cmath>
#include <cstdio>

#include "asrc/analysis.hpp"
#include "asrc/errors.hpp"

namespace asrc {
namespace {

void indexed(std::vector<std::string>& cols, std::string_view stem, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) cols.push_back(std::string(stem) + "_" + std::to_string(i));
}

class Row {
 public:
  explicit Row(std::ostream& out) : out_(out) {}
  ~Row() { out_ << '\n'; }
  Row(const Row&) = delete;
  Row& operator=(const Row&) = delete;

  Row& num(double v) { return text(format_float(v)); }
  Row& vec(const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) num(v[i]);
    return *this;
  }
  Row& integer(long long v) { return text(std::to_string(v)); }
  Row& text(std::string_view s) {
    if (!first_) out_ << ',';
    first_ = false;
    out_ << s;
    return *this;
  }

 private:
  std::ostream& out_;
  bool first_ = true;
};

}  // namespace

std::string format_float(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<std::string> trace_csv_columns(const SimTrace& trace) {
  const std::size_t n = trace.dof;
  std::vector<std::string> cols{"t_s"};
  indexed(cols, "q", n);
  indexed(cols, "qd", n);
  indexed(cols, "e", n);
  indexed(cols, "e_dot", n);
  for (const char* c : {"e_norm", "e_f_norm", "xi_norm", "error_growth", "theta_hat_0",
                        "theta_hat_1", "theta_hat_2", "gamma", "k", "k_dot", "rho_hat"})
    cols.emplace_back(c);
  indexed(cols, "tau", n);
  indexed(cols, "delta_tau", n);
  for (const char* c : {"branch", "mode", "cond_error_growing", "cond_theta_floor",
                        "cond_gamma_floor", "clamp_events", "case", "v", "v1"})
    cols.emplace_back(c);
  if (trace.pose) {
    for (const char* c : {"x_c_m", "y_c_m", "phi_rad", "x_d_m", "y_d_m", "phi_d_rad", "e_p_m"})
      cols.emplace_back(c);
  }
  return cols;
}

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  {
    Row header(out);
    for (const std::string& c : trace_csv_columns(trace)) header.text(c);
  }
  for (std::size_t k = 0; k < trace.records.size(); ++k) {
    const TraceRecord& r = trace.records[k];
    Row row(out);
    row.num(r.t).vec(r.q).vec(r.qd).vec(r.e).vec(r.e_dot);
    row.num(r.e_norm).num(r.e_f_norm).num(r.xi_norm).num(r.error_growth);
    for (double g : r.gains) row.num(g);
    row.num(r.k).num(r.k_dot).num(r.rho_hat).vec(r.tau).vec(r.delta_tau);
    row.text(r.branch == Branch::Switching ? "switching" : "boundary_layer");
    row.text(to_string(r.mode));
    row.integer(r.conditions.error_growing)
        .integer(r.conditions.theta_at_floor)
        .integer(r.conditions.gamma_at_floor);
    row.integer(r.clamp_events);
    row.text(to_string(case_classifier(r, trace.varpi)));
    row.num(r.v).num(r.v1);
    if (trace.pose) {
      const Pose& a = trace.pose->actual[k];
      const Pose& d = trace.pose->desired[k];
      row.num(a.x).num(a.y).num(a.heading).num(d.x).num(d.y).num(d.heading);
      row.num(trace.pose->position_error[k]);
    }
  }
}

void write_gains_csv(std::ostream& out, const SimTrace& trace) {
  out << "t_s,theta_hat_0,theta_hat_1,theta_hat_2,gamma,k,rho_hat\n";
  for (const TraceRecord& r : trace.records) {
    Row row(out);
    row.num(r.t);
    for (double g : r.gains) row.num(g);
    row.num(r.k).num(r.rho_hat);
  }
}

void write_series_csv(std::ostream& out, std::string_view x_name, std::string_view y_name,
                      std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ConfigError("write_series_csv: series lengths differ");
  out << x_name << ',' << y_name << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) out << format_float(xs[i]) << ',' << format_float(ys[i]) << '\n';
}

}  // namespace asrc
