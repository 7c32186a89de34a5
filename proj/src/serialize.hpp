// Deterministic CSV / JSON / SVG emitters.  Floats go through "%.17g" so
// identical configurations reproduce identical bytes; plots are simple
// native polyline charts and are always paired with their underlying CSV.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "asymptotics.hpp"
#include "coeffs.hpp"
#include "equidist.hpp"
#include "norms.hpp"

namespace wl::serialize {

std::string fmt(double v);

/// lambda,n,l1_low,l1_high,l2,ratio_low,ratio_high,constant_low,constant_high,partial_l1_In
std::string sweep_csv(const std::vector<norms::SweepRecord>& rows);
nlohmann::json sweep_json(const std::vector<norms::SweepRecord>& rows);

/// lambda,n,k,t,predicted,exact,abs_err,scaled_err,amplitude,phase_mod_2pi
std::string asym_csv(double lambda,
                     const std::vector<asym::AsymptoticRecord>& records);
nlohmann::json asym_json(double lambda,
                         const std::vector<asym::AsymptoticRecord>& records);

/// lambda,n,M,X,ratio_xm
std::string equidist_csv(double lambda,
                         const std::vector<equidist::EquidistReport>& reports);
/// lambda,n,j,max_weyl_over_sqrt_n,y_over_m
std::string weyl_csv(double lambda,
                     const std::vector<equidist::EquidistReport>& reports);
nlohmann::json equidist_json(double lambda,
                             const std::vector<equidist::EquidistReport>& reports);

/// k,coeff
std::string coeffs_csv(const coeffs::Spectrum& s);
nlohmann::json coeffs_json(const coeffs::Spectrum& s);

const char* engine_name(coeffs::Engine e);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

std::string svg_chart(const ChartOptions& opt, const std::vector<Series>& data);

}  // namespace wl::serialize
