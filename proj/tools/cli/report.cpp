#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace jetspec::cli {

using nlohmann::json;

namespace {

std::string num(double x, int digits = 12) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

template <class M>
std::string aligned(const M& a, auto&& render) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cells.push_back(render(a(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& c = cells[i * a.cols() + j];
      if (j > 0) out += "  ";
      out += std::string(width - c.size(), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

template <Field T>
std::vector<SpectrumRow> rows_of(const Spectrum<T>& s) {
  std::vector<SpectrumRow> rows;
  for (const auto& p : s.points) rows.push_back({to_complex(p.lambda), p.k, p.label, scalar_json(p.lambda)});
  return rows;
}

template std::vector<SpectrumRow> rows_of(const Spectrum<GaussRational>&);
template std::vector<SpectrumRow> rows_of(const Spectrum<Complex>&);

std::string polar_text(Complex z) {
  const double r = std::abs(z);
  if (r == 0.0) return "0";
  const double degrees = std::arg(z) * 180.0 / std::numbers::pi;
  if (std::abs(degrees) < 5e-5) return num(r, 4);
  return num(r, 4) + "∠" + num(degrees, 4) + "°";
}

json scalar_json(const GaussRational& z) { return {{"re", z.re().get_str()}, {"im", z.im().get_str()}}; }

json scalar_json(const Complex& z) { return {{"re", num(z.real(), 17)}, {"im", num(z.imag(), 17)}}; }

std::string spectrum_text(const std::vector<SpectrumRow>& rows) {
  std::string out;
  for (const auto& r : rows) out += "(" + polar_text(r.value) + ", " + std::to_string(r.k) + ")\n";
  return out;
}

json spectrum_json(const std::vector<SpectrumRow>& rows) {
  json blocks = json::array();
  for (const auto& r : rows) {
    json b{{"lambda", r.repr}, {"k", r.k}};
    if (!r.label.empty()) b["label"] = r.label;
    blocks.push_back(std::move(b));
  }
  return {{"jordan", std::move(blocks)}};
}

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
  std::string out = "re,im,k\r\n";
  for (const auto& r : rows) out += num(r.value.real()) + "," + num(r.value.imag()) + "," + std::to_string(r.k) + "\r\n";
  return out;
}

std::string matrix_text(const ExactMatrix& a) {
  return aligned(a, [](const GaussRational& z) { return z.to_string(); });
}

std::string matrix_text(const FloatMatrix& a) {
  return aligned(a, [](const Complex& z) { return format_complex(z); });
}

json matrix_json(const ExactMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back({a(i, j).re().get_str(), a(i, j).im().get_str()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const FloatMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back({num(a(i, j).real(), 17), num(a(i, j).imag(), 17)});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string figure_svg(const std::vector<SpectrumRow>& rows) {
  constexpr double width = 640, height = 560;
  constexpr double cx = 320, cy = 380;  // disk center on screen
  constexpr double radius = 240;
  constexpr double tilt = 0.4;   // vertical squash of the disk plane
  constexpr double level = 44;   // stem height per unit of k

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
    << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<ellipse cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" rx=\"" << num(radius) << "\" ry=\""
    << num(radius * tilt) << "\" fill=\"#f2f5fa\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
    << "<line x1=\"" << num(cx - radius) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(cx + radius) << "\" y2=\""
    << num(cy) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n"
    << "<line x1=\"" << num(cx) << "\" y1=\"" << num(cy - radius * tilt) << "\" x2=\"" << num(cx) << "\" y2=\""
    << num(cy + radius * tilt) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n"
    << "<text x=\"" << num(cx + radius + 6) << "\" y=\"" << num(cy + 4) << "\" font-family=\"sans-serif\" "
    << "font-size=\"12\">Re</text>\n"
    << "<text x=\"" << num(cx + 6) << "\" y=\"" << num(cy - radius * tilt - 6) << "\" font-family=\"sans-serif\" "
    << "font-size=\"12\">Im</text>\n";

  for (const auto& r : rows) {
    const double x = cx + radius * r.value.real();
    const double y = cy - radius * tilt * r.value.imag();
    const double top = y - level * r.k;
    s << "<g>\n<title>" << polar_text(r.value) << ", k=" << r.k << "</title>\n"
      << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x) << "\" y2=\"" << num(top)
      << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n"
      << "<ellipse cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" rx=\"5\" ry=\"2\" fill=\"#1f4e9c\"/>\n";
    for (int j = 1; j <= r.k; ++j) {
      s << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y - level * j) << "\" r=\"5\" fill=\"#c0392b\"/>\n";
    }
    s << "<text x=\"" << num(x + 8) << "\" y=\"" << num(top - 6) << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\">" << (r.label.empty() ? "" : xml_escape(r.label) + " ") << "k=" << r.k << "</text>\n</g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace jetspec::cli
