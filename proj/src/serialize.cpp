#include "serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wl::serialize {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* engine_name(coeffs::Engine e) {
  switch (e) {
    case coeffs::Engine::Recurrence: return "recurrence";
    case coeffs::Engine::ClosedForm: return "closed_form";
    case coeffs::Engine::FFT: return "fft";
  }
  return "unknown";
}

std::string sweep_csv(const std::vector<norms::SweepRecord>& rows) {
  std::string out =
      "lambda,n,l1_low,l1_high,l2,ratio_low,ratio_high,constant_low,"
      "constant_high,partial_l1_In\n";
  for (const auto& r : rows) {
    out += fmt(r.lambda) + "," + std::to_string(r.n) + "," + fmt(r.l1.lo) +
           "," + fmt(r.l1.hi) + "," + fmt(r.l2) + "," + fmt(r.ratio.lo) + "," +
           fmt(r.ratio.hi) + "," + fmt(r.constant.lo) + "," +
           fmt(r.constant.hi) + "," + fmt(r.partial_l1_window) + "\n";
  }
  return out;
}

nlohmann::json sweep_json(const std::vector<norms::SweepRecord>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"lambda", r.lambda},
                   {"n", r.n},
                   {"l1_low", r.l1.lo},
                   {"l1_high", r.l1.hi},
                   {"l2", r.l2},
                   {"ratio_low", r.ratio.lo},
                   {"ratio_high", r.ratio.hi},
                   {"constant_low", r.constant.lo},
                   {"constant_high", r.constant.hi},
                   {"partial_l1_In", r.partial_l1_window}});
  }
  return arr;
}

std::string asym_csv(double lambda,
                     const std::vector<asym::AsymptoticRecord>& records) {
  std::string out =
      "lambda,n,k,t,predicted,exact,abs_err,scaled_err,amplitude,"
      "phase_mod_2pi\n";
  for (const auto& r : records) {
    out += fmt(lambda) + "," + std::to_string(r.n) + "," +
           std::to_string(r.k) + "," + fmt(r.t) + "," + fmt(r.predicted) +
           "," + fmt(r.exact) + "," + fmt(r.abs_err) + "," +
           fmt(r.scaled_err) + "," + fmt(r.amplitude) + "," +
           fmt(r.phase_mod_2pi) + "\n";
  }
  return out;
}

nlohmann::json asym_json(double lambda,
                         const std::vector<asym::AsymptoticRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"lambda", lambda},
                   {"n", r.n},
                   {"k", r.k},
                   {"t", r.t},
                   {"predicted", r.predicted},
                   {"exact", r.exact},
                   {"abs_err", r.abs_err},
                   {"scaled_err", r.scaled_err},
                   {"amplitude", r.amplitude},
                   {"phase_mod_2pi", r.phase_mod_2pi}});
  }
  return arr;
}

std::string equidist_csv(double lambda,
                         const std::vector<equidist::EquidistReport>& reports) {
  std::string out = "lambda,n,M,X,ratio_xm\n";
  for (const auto& r : reports) {
    out += fmt(lambda) + "," + std::to_string(r.n) + "," + fmt(r.big_m) + "," +
           fmt(r.big_x) + "," + fmt(r.ratio_xm) + "\n";
  }
  return out;
}

std::string weyl_csv(double lambda,
                     const std::vector<equidist::EquidistReport>& reports) {
  std::string out = "lambda,n,j,max_weyl_over_sqrt_n,y_over_m\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.weyl_over_sqrt_n.size(); ++i) {
      out += fmt(lambda) + "," + std::to_string(r.n) + "," +
             std::to_string(r.weyl_over_sqrt_n[i].first) + "," +
             fmt(r.weyl_over_sqrt_n[i].second) + "," +
             fmt(r.y_over_m[i].second) + "\n";
    }
  }
  return out;
}

nlohmann::json equidist_json(
    double lambda, const std::vector<equidist::EquidistReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json weyl = nlohmann::json::array();
    for (std::size_t i = 0; i < r.weyl_over_sqrt_n.size(); ++i) {
      weyl.push_back({{"j", r.weyl_over_sqrt_n[i].first},
                      {"max_weyl_over_sqrt_n", r.weyl_over_sqrt_n[i].second},
                      {"y_over_m", r.y_over_m[i].second}});
    }
    arr.push_back({{"lambda", lambda},
                   {"n", r.n},
                   {"k_lo", r.window.lo},
                   {"k_hi", r.window.hi},
                   {"M", r.big_m},
                   {"X", r.big_x},
                   {"ratio_xm", r.ratio_xm},
                   {"weyl", weyl}});
  }
  return arr;
}

std::string coeffs_csv(const coeffs::Spectrum& s) {
  std::string out = "k,coeff\n";
  for (long k = 0; k <= s.truncation; ++k)
    out += std::to_string(k) + "," + fmt(s.c[static_cast<std::size_t>(k)]) +
           "\n";
  return out;
}

nlohmann::json coeffs_json(const coeffs::Spectrum& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (long k = 0; k <= s.truncation; ++k)
    arr.push_back({{"k", k}, {"coeff", s.c[static_cast<std::size_t>(k)]}});
  return nlohmann::json{{"engine", engine_name(s.engine)},
                        {"precision_bits", s.precision_bits},
                        {"tail_bound", s.tail_bound},
                        {"lambda", s.lambda},
                        {"n", s.n},
                        {"coeffs", arr}};
}

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

constexpr const char* kPalette[] = {"#1f6fb2", "#c44e52", "#55a868",
                                    "#8172b2", "#ccb974", "#64b5cd"};

}  // namespace

std::string svg_chart(const ChartOptions& opt, const std::vector<Series>& data) {
  const double width = 900, height = 560;
  const double ml = 80, mr = 30, mt = 50, mb = 60;
  const double pw = width - ml - mr, ph = height - mt - mb;

  auto tx = [&](double v) { return opt.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return opt.log_y ? std::log10(v) : v; };

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : data) {
    for (auto [x, y] : s.points) {
      if (!std::isfinite(tx(x)) || !std::isfinite(ty(y))) continue;
      xmin = std::min(xmin, tx(x));
      xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, ty(y));
      ymax = std::max(ymax, ty(y));
    }
  }
  if (xmin > xmax) { xmin = 0; xmax = 1; }
  if (ymin > ymax) { ymin = 0; ymax = 1; }
  if (xmax - xmin < 1e-12) { xmax += 0.5; xmin -= 0.5; }
  if (ymax - ymin < 1e-12) { ymax += 0.5; ymin -= 0.5; }

  auto X = [&](double v) { return ml + (tx(v) - xmin) / (xmax - xmin) * pw; };
  auto Y = [&](double v) { return mt + ph - (ty(v) - ymin) / (ymax - ymin) * ph; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) +
         "\" height=\"" + px(height) + "\" viewBox=\"0 0 " + px(width) + " " +
         px(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + px(width / 2) + "\" y=\"28\" font-size=\"16\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\">" + opt.title +
         "</text>\n";

  // axes
  svg += "<line x1=\"" + px(ml) + "\" y1=\"" + px(mt + ph) + "\" x2=\"" +
         px(ml + pw) + "\" y2=\"" + px(mt + ph) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + px(ml) + "\" y1=\"" + px(mt) + "\" x2=\"" + px(ml) +
         "\" y2=\"" + px(mt + ph) + "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    double fx = xmin + (xmax - xmin) * i / 5.0;
    double fy = ymin + (ymax - ymin) * i / 5.0;
    double vx = opt.log_x ? std::pow(10.0, fx) : fx;
    double vy = opt.log_y ? std::pow(10.0, fy) : fy;
    double sx = ml + pw * i / 5.0;
    double sy = mt + ph - ph * i / 5.0;
    svg += "<line x1=\"" + px(sx) + "\" y1=\"" + px(mt + ph) + "\" x2=\"" +
           px(sx) + "\" y2=\"" + px(mt + ph + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + px(sx) + "\" y=\"" + px(mt + ph + 20) +
           "\" font-size=\"11\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">" + tick_label(vx) + "</text>\n";
    svg += "<line x1=\"" + px(ml - 5) + "\" y1=\"" + px(sy) + "\" x2=\"" +
           px(ml) + "\" y2=\"" + px(sy) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + px(ml - 8) + "\" y=\"" + px(sy + 4) +
           "\" font-size=\"11\" text-anchor=\"end\" "
           "font-family=\"sans-serif\">" + tick_label(vy) + "</text>\n";
  }
  svg += "<text x=\"" + px(ml + pw / 2) + "\" y=\"" + px(height - 15) +
         "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\">" + opt.x_label + "</text>\n";
  svg += "<text x=\"20\" y=\"" + px(mt + ph / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 20 " +
         px(mt + ph / 2) + ")\">" + opt.y_label + "</text>\n";

  for (std::size_t si = 0; si < data.size(); ++si) {
    const char* color = kPalette[si % 6];
    std::string pts;
    for (auto [x, y] : data[si].points) {
      if (!std::isfinite(tx(x)) || !std::isfinite(ty(y))) continue;
      pts += px(X(x)) + "," + px(Y(y)) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    double ly = mt + 16.0 * (si + 1);
    svg += "<line x1=\"" + px(ml + pw - 150) + "\" y1=\"" + px(ly - 4) +
           "\" x2=\"" + px(ml + pw - 125) + "\" y2=\"" + px(ly - 4) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + px(ml + pw - 120) + "\" y=\"" + px(ly) +
           "\" font-size=\"12\" font-family=\"sans-serif\">" +
           data[si].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace wl::serialize
