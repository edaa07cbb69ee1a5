#include "qrook/io.hpp"

#include <json.hpp>

namespace qrook {

using nlohmann::json;

namespace {

json qpoly_to_json_obj(const QPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return json{{"valuation", p.valuation()}, {"coeffs", coeffs}};
}

}  // namespace

std::string qpoly_json(const QPoly& p) { return qpoly_to_json_obj(p).dump(); }

QPoly qpoly_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return QPoly::from_coeffs(j.at("valuation").get<long long>(), std::move(coeffs));
}

std::string board_json(const Board& b) {
  json cells = json::array();
  for (auto c : b.cells()) cells.push_back(json::array({c.row, c.col}));
  return json{{"m", b.m()}, {"n", b.n()}, {"cells", cells}}.dump();
}

Board board_from_json(const std::string& text) {
  json j = json::parse(text);
  Board b(j.at("m").get<int>(), j.at("n").get<int>());
  for (const auto& c : j.at("cells")) b.add(c.at(0).get<int>(), c.at(1).get<int>());
  return b;
}

Board board_from_text(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return board_from_json(text);
    break;
  }
  return Board::from_grid(text);
}

std::string m_profile_json(const RankCounts& reduced, int board_size) {
  json M = json::array();
  for (const auto& p : reduced.entries) M.push_back(p.str());
  return json{{"m", reduced.m},
              {"n", reduced.n},
              {"board_size", board_size},
              {"M", M}}
      .dump();
}

std::string h_profile_json(const HitProfile& h, bool partition_check) {
  json H = json::array();
  for (const auto& p : h.hits) H.push_back(p.str());
  return json{{"m", h.m}, {"n", h.n}, {"H", H}, {"partition_check", partition_check}}
      .dump();
}

std::string conjecture_report_json(const ConjectureReport& report) {
  json v = json::array();
  for (const auto& viol : report.violations)
    v.push_back(json{{"w", viol.w.str()}, {"r", viol.r}, {"poly", viol.poly.str()}});
  json stats{{"scanned", report.stats.scanned},
             {"computed", report.stats.computed},
             {"memo_hits", report.stats.memo_hits},
             {"wall_ms", report.stats.wall_ms},
             {"partial", report.stats.partial}};
  return json{{"family", report.family},
              {"n", report.n},
              {"ranks", report.ranks},
              {"violations", v},
              {"stats", stats}}
      .dump();
}

}  // namespace qrook
