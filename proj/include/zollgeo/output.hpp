#pragma once

// CSV writers. Headers and column order are part of the interface.

#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "zollgeo/darboux.hpp"
#include "zollgeo/geodesics.hpp"
#include "zollgeo/metric.hpp"
#include "zollgeo/returnmap.hpp"

namespace zollgeo::csv {

inline std::string num(double v) { return fmt::format("{:.15g}", v); }

inline void write_trajectory(std::ostream& os, const MetricOfRevolution& m, const Trajectory& traj) {
  os << "s,r,theta,beta,c,energy\n";
  for (const auto& rec : traj.steps) {
    const detail::OdeState y{rec.r, rec.theta, rec.beta};
    const double c = std::sin(rec.r) * std::cos(rec.beta);
    const double energy = 1.0 + (traj.meridian ? 0.0 : detail::energy_defect(m, y));
    fmt::print(os, "{},{},{},{},{},{}\n", num(rec.s), num(rec.r), num(wrap_positive(rec.theta)),
               num(wrap_positive(rec.beta)), num(c), num(energy));
  }
}

inline void write_events(std::ostream& os, const Trajectory& traj) {
  os << "s,type,theta,direction\n";
  for (const auto& e : traj.events)
    fmt::print(os, "{},{},{},{}\n", num(e.s), to_string(e.type), num(wrap_positive(e.theta)),
               to_string(e.direction));
}

inline void write_curvature(std::ostream& os, const CurvatureProfile& prof) {
  os << "r,sigma\n";
  for (const auto& s : prof.samples) fmt::print(os, "{},{}\n", num(s.r), num(s.sigma));
}

inline void write_scan(std::ostream& os, const DarbouxScan& sc) {
  os << "t,I,deviation\n";
  for (const auto& p : sc.grid) fmt::print(os, "{},{},{}\n", num(p.t), num(p.value), num(p.value - sc.mean));
  fmt::print(os, "# rotation={} verdict={} mean={} max_deviation={}\n",
             sc.rotation_number ? sc.rotation_number->str() : "undetermined", to_string(sc.verdict),
             num(sc.mean), num(sc.max_deviation));
}

inline void write_report(std::ostream& os, const ReturnMapReport& rep) {
  os << "x,alpha,alpha_norm,Fx,Falpha,flight,Per,crossings,simple\n";
  for (const auto& s : rep.samples) {
    const bool has_f = !s.orbit.empty();
    fmt::print(os, "{},{},{},{},{},{},{},{},{}\n", num(s.v.x), num(s.v.alpha), num(s.v.alpha_norm()),
               has_f ? num(s.Fv.x) : "NA", has_f ? num(s.Fv.alpha) : "NA",
               has_f ? num(s.flight) : "NA", s.per ? std::to_string(*s.per) : "NA",
               s.crossings ? std::to_string(*s.crossings) : "NA",
               s.simple ? (*s.simple ? "1" : "0") : "NA");
  }
  std::string spectrum;
  for (const int p : rep.spectrum) spectrum += (spectrum.empty() ? "" : " ") + std::to_string(p);
  fmt::print(os, "# m0={}\n", rep.m0 ? std::to_string(*rep.m0) : "NA");
  fmt::print(os, "# spectrum={{{}}} spectrum_ok={}\n", spectrum, rep.spectrum_ok ? 1 : 0);
  fmt::print(os, "# max_displacement={} max_first_return_displacement={}\n", num(rep.max_displacement),
             num(rep.max_first_return_displacement));
  fmt::print(os, "# resolved={} unresolved={} simple={} relation_2per_eq_crossings={} injective={}\n",
             rep.resolved, rep.unresolved, rep.simple_count, rep.relation_holds_everywhere ? 1 : 0,
             rep.injective ? 1 : 0);
  for (const auto& b : rep.boundary)
    fmt::print(os, "# boundary alpha={} displacement={} flight={}\n", num(b.alpha), num(b.displacement),
               num(b.flight));
}

}  // namespace zollgeo::csv
