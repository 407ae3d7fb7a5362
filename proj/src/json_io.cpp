#include "superholonomy/json_io.hpp"

#include <cmath>

#include "superholonomy/errors.hpp"

namespace superholonomy {

Json to_json(const SuperMatrix& x) {
  Json j;
  j["m"] = x.m();
  j["n"] = x.n();
  j["N"] = x.generators();
  j["parity"] = x.parity() == Parity::Even ? "even" : "odd";
  Json entries = Json::array();
  for (int r = 0; r < x.size(); ++r)
    for (int c = 0; c < x.size(); ++c)
      for (const auto& [mono, value] : x(r, c).terms()) {
        Json gens = Json::array();
        for (int i = 0; i < kMaxGenerators; ++i)
          if (mono & (1u << i)) gens.push_back(i + 1);
        entries.push_back({{"row", r}, {"col", c}, {"monomial", gens}, {"value", value}});
      }
  j["entries"] = entries;
  return j;
}

SuperMatrix supermatrix_from_json(const Json& j) {
  try {
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const int N = j.at("N").get<int>();
    if (m < 0 || n < 0) throw DimensionError("negative block size");
    Parity parity = Parity::Even;
    if (j.contains("parity")) {
      const std::string p = j.at("parity").get<std::string>();
      if (p == "odd") {
        parity = Parity::Odd;
      } else if (p != "even") {
        throw ParityError("parity must be \"even\" or \"odd\"");
      }
    }
    std::vector<std::vector<GrassmannElement::Term>> cells(static_cast<size_t>(m + n) * (m + n));
    for (const auto& e : j.at("entries")) {
      const int r = e.at("row").get<int>();
      const int c = e.at("col").get<int>();
      if (r < 0 || c < 0 || r >= m + n || c >= m + n) throw DimensionError("entry out of range");
      Monomial mono = 0;
      int last = 0;
      for (const auto& g : e.at("monomial")) {
        const int i = g.get<int>();
        if (i <= last || i > N) throw DimensionError("monomial indices must increase within 1..N");
        mono |= 1u << (i - 1);
        last = i;
      }
      cells[r * (m + n) + c].emplace_back(mono, e.at("value").get<double>());
    }
    GMatrix g(m + n, m + n, N);
    for (int r = 0; r < m + n; ++r)
      for (int c = 0; c < m + n; ++c) g(r, c) = GrassmannElement(N, cells[r * (m + n) + c]);
    return SuperMatrix(m, n, g, parity);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed supermatrix JSON: ") + e.what());
  }
}

Json to_json(const SuperAlgebra& alg) {
  Json j;
  j["name"] = alg.name();
  Json basis = Json::array();
  for (int i = 0; i < alg.dim(); ++i) {
    basis.push_back({{"label", alg.label(i)}, {"parity", as_int(alg.parity(i))}});
  }
  j["basis"] = basis;
  Json f = Json::array();
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b)
      for (int c = 0; c < alg.dim(); ++c)
        if (alg.f(a, b, c) != 0.0) f.push_back({a, b, c, alg.f(a, b, c)});
  j["structure_constants"] = f;
  Json eta = Json::array();
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b)
      if (alg.eta()(a, b) != 0.0) eta.push_back({a, b, alg.eta()(a, b)});
  j["eta"] = eta;
  j["str_normalization"] = alg.str_normalization();
  if (alg.osp12_fit()) {
    const Osp12Fit& fit = *alg.osp12_fit();
    j["fit"] = {{"j_scale", fit.j_scale},
                {"q_scale", fit.q_scale},
                {"epsilon_012", fit.epsilon_012},
                {"residuals", {fit.residual_jj, fit.residual_jq, fit.residual_qq}},
                {"convention", fit.convention}};
  }
  return j;
}

Json to_json(const SectorReport& r) {
  Json j;
  j["group"] = r.group;
  j["bosonic_sectors"] = r.bosonic_sectors;
  Json ferm = Json::array();
  Json all = Json::array();
  for (const auto& s : r.sectors) {
    Json d = {{"a0", s.a0}, {"b0", s.b0}, {"eps", s.eps1}, {"eps2", s.eps2},
              {"type", to_string(s.type)}, {"moduli", s.moduli},
              {"closed_form_moduli", s.closed_form_moduli}, {"rank1", s.rank1},
              {"rank2", s.rank2}};
    if (s.fermionic) ferm.push_back(d);
    all.push_back(d);
  }
  j["fermionic_sectors"] = ferm;
  j["sectors"] = all;
  j["parabolic_c"] = {{"c1", r.c1}, {"c2", r.c2}, {"c1^2+c2^2", r.c_norm_squared}};
  return j;
}

SectorReport sector_report_from_json(const Json& j) {
  try {
    SectorReport r;
    r.group = j.at("group").get<std::string>();
    r.bosonic_sectors = j.at("bosonic_sectors").get<int>();
    r.fermionic_sectors = static_cast<int>(j.at("fermionic_sectors").size());
    for (const auto& d : j.at("sectors")) {
      SectorDescriptor s;
      s.a0 = d.at("a0").get<int>();
      s.b0 = d.at("b0").get<int>();
      s.eps1 = d.at("eps").get<int>();
      s.eps2 = d.at("eps2").get<int>();
      const std::string type = d.at("type").get<std::string>();
      if (type == "so2") {
        s.type = AbelianType::So2;
      } else if (type == "hyperbolic") {
        s.type = AbelianType::Hyperbolic;
      } else if (type == "parabolic") {
        s.type = AbelianType::Parabolic;
      } else {
        throw Error("unknown sector type " + type);
      }
      s.moduli = d.at("moduli").get<int>();
      s.fermionic = s.moduli > 0;
      s.closed_form_moduli = d.at("closed_form_moduli").get<int>();
      s.rank1 = d.at("rank1").get<int>();
      s.rank2 = d.at("rank2").get<int>();
      r.sectors.push_back(s);
    }
    const Json& c = j.at("parabolic_c");
    r.c1 = c.at("c1").get<double>();
    r.c2 = c.at("c2").get<double>();
    r.c_norm_squared = c.at("c1^2+c2^2").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed sector report JSON: ") + e.what());
  }
}

Json to_json(const Osp22Report& r) {
  return {{"group", "osp(2|2)"},
          {"partial", r.partial},
          {"det_formula", {{"grid_points", r.grid_points}, {"max_error", r.max_det_error}}},
          {"so2_so2_sector",
           {{"rank", r.so2_rank}, {"moduli", r.so2_moduli},
            {"bruteforce_moduli", r.so2_bruteforce_moduli}}}};
}

Json to_json(const JacobiReport& r) {
  return {{"max_residual", r.max_residual}, {"worst", r.worst}, {"pass", r.pass}};
}

namespace {

Json constant_list(const std::vector<double>& g, int dim, const SuperAlgebra& alg) {
  Json out = Json::array();
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        const double v = g[(a * dim + b) * dim + c];
        if (std::abs(v) > kRankThreshold) out.push_back({alg.label(a), alg.label(b), alg.label(c), v});
      }
  return out;
}

}  // namespace

Json to_json(const ClosureReport& r, const SuperAlgebra& alg) {
  return {{"algebra", alg.name()},
          {"max_residual", r.max_residual},
          {"lambda", r.lambda},
          {"proportionality_residual", r.proportionality_residual},
          {"induced_constants", constant_list(r.induced, r.dim, alg)},
          {"component_constants", constant_list(r.component, r.dim, alg)},
          {"pass", r.pass}};
}

Json to_json(const EfmReport& r) {
  return {{"det", r.det + 0.0}, {"rank", r.rank}, {"odd_dim", r.odd_dim}, {"moduli", r.moduli}};
}

}  // namespace superholonomy
