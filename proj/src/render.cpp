#include "diffsres/render.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace diffsres {

namespace {

constexpr std::array<std::string_view, 24> kGreek = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta",   "theta", "iota",  "kappa", "lambda", "mu",
    "nu",    "xi",   "pi",    "rho",   "sigma",   "tau",  "upsilon", "phi", "chi",   "psi",   "omega",  "nabla"};

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [s, e] : m.factors()) {
    if (!out.empty()) out += " ";
    out += latex_symbol(s);
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

}  // namespace

Json to_json(const Element& e) { return e.to_string(); }

Json to_json(const Odo& a) {
  Json out;
  out["order"] = a.is_zero() ? Json(nullptr) : Json(a.order());
  Json coeffs = Json::array();
  for (const auto& c : a.coefficients()) coeffs.push_back(c.to_string());
  out["coefficients"] = std::move(coeffs);
  out["domain"] = a.domain()->spec();
  return out;
}

Json to_json(const DiffMatrix& m) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const SubresultantRecord& r) {
  Json out;
  out["index"] = r.index;
  out["operator"] = to_json(r.op);
  Json minors = Json::array();
  for (const auto& m : r.minors) minors.push_back(to_json(m));
  out["minors"] = std::move(minors);
  return out;
}

Json to_json(const BezoutPair& b, const Element& resultant) {
  Json out;
  out["P"] = to_json(b.p);
  out["Q"] = to_json(b.q);
  out["resultant"] = resultant.to_string();
  return out;
}

Json to_json(const CommutingPair& pair, const CurveGcrd& g) {
  Json out;
  out["A"] = to_json(pair.a);
  out["B"] = to_json(pair.b);
  out["h"] = pair.h.to_string();
  out["f"] = pair.curve.f.to_string();
  out["d"] = g.index;
  out["gcrd"] = to_json(g.gcrd);
  return out;
}

std::string latex_symbol(Symbol s) {
  std::string base = s.base();
  std::string out;
  if (base == "wp") {
    out = "\\wp";
  } else if (base == "wpp") {
    out = "\\wp'";
  } else if (std::find(kGreek.begin(), kGreek.end(), base) != kGreek.end()) {
    out = "\\" + base;
  } else {
    std::size_t k = base.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(base[k - 1]))) --k;
    out = (k == 0 || k == base.size()) ? base : base.substr(0, k) + "_{" + base.substr(k) + "}";
  }
  return out + std::string(s.jet_order(), '\'');
}

std::string to_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool negative = sgn(coeff) < 0;
    const Rational mag = abs(coeff);
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (mono.is_one()) {
      out += latex_rational(mag);
      continue;
    }
    if (mag != 1) out += latex_rational(mag) + " ";
    out += latex_monomial(mono);
  }
  return out;
}

std::string to_latex(const Element& e) {
  if (e.den().is_one()) return to_latex(e.num());
  if (e.num().is_monomial() && sgn(e.num().leading_coefficient()) < 0) {
    return "-\\frac{" + to_latex(-e.num()) + "}{" + to_latex(e.den()) + "}";
  }
  return "\\frac{" + to_latex(e.num()) + "}{" + to_latex(e.den()) + "}";
}

std::string to_latex(const Odo& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t k = a.coefficients().size(); k-- > 0;) {
    const Element& c = a.coefficients()[k];
    if (c.is_zero()) continue;
    const std::string d = k == 0 ? "" : k == 1 ? "\\partial" : "\\partial^{" + std::to_string(k) + "}";
    std::string piece;
    if (k == 0) {
      piece = to_latex(c);
    } else if (c.is_one()) {
      piece = d;
    } else if ((-c).is_one()) {
      piece = "-" + d;
    } else if (c.den().is_one() && c.num().size() > 1) {
      piece = "\\left(" + to_latex(c) + "\\right)" + d;
    } else {
      piece = to_latex(c) + d;
    }
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

std::string to_latex(const DiffMatrix& m) {
  std::string out = "\\begin{bmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += " & ";
      out += to_latex(m(r, c));
    }
    out += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return out + "\\end{bmatrix}";
}

}  // namespace diffsres
