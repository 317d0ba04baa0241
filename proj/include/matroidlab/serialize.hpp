#pragma once

// JSON serialization for symbolic sets and certificates, plus the terse
// one-line set syntax used on the command line. Output key order and
// element order are fixed, so identical inputs serialize byte-identically.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/grid_sets.hpp"

namespace matroidlab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Point& p) { return Json::array({p.row, p.col}); }

inline Json to_json(const Tail& t) {
  Json j;
  if (const auto* c = std::get_if<ColumnTail>(&t)) {
    j["type"] = "column";
    j["col"] = c->col;
    j["start_row"] = c->start_row;
  } else {
    const Ray& r = std::get<Ray>(t);
    j["type"] = "ray";
    j["start"] = to_json(r.start);
    j["col_step"] = r.col_step;
  }
  return j;
}

inline Json to_json(const SetExpr& s) {
  Json j;
  j["finite_in"] = Json::array();
  for (const Point& p : s.finite_in) j["finite_in"].push_back(to_json(p));
  j["tails"] = Json::array();
  for (const Tail& t : s.tails) j["tails"].push_back(to_json(t));
  j["finite_out"] = Json::array();
  for (const Point& p : s.finite_out) j["finite_out"].push_back(to_json(p));
  return j;
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("point must be a [row, col] pair");
  return Point{j[0].get<int>(), j[1].get<int>()};
}

inline Tail tail_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "column")
    return ColumnTail{j.at("col").get<int>(), j.at("start_row").get<int>()};
  if (type == "ray")
    return Ray{point_from_json(j.at("start")), j.at("col_step").get<int>()};
  throw ParseError("unknown tail type: " + type);
}

inline SetExpr set_expr_from_json(const Json& j) {
  try {
    SetExpr s;
    for (const Json& p : j.at("finite_in")) s.finite_in.push_back(point_from_json(p));
    for (const Json& t : j.at("tails")) s.tails.push_back(tail_from_json(t));
    for (const Json& p : j.at("finite_out")) s.finite_out.push_back(point_from_json(p));
    return normalize(std::move(s));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed set expression: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed set expression: ") + e.what());
  }
}

// Terse forms: "empty", "coltail COL START", "ray ROW COL STEP",
// "points (r,c) (r,c) ...", or inline JSON starting with '{'.
inline SetExpr parse_set_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON set expression");
    return set_expr_from_json(j);
  }
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind == "empty") return SetExpr::empty();
  if (kind == "coltail") {
    int col = 0, start = 0;
    if (!(in >> col >> start)) throw ParseError("usage: coltail COL START_ROW");
    return SetExpr::column_tail(col, start);
  }
  if (kind == "ray") {
    int row = 0, col = 0, step = 0;
    if (!(in >> row >> col >> step)) throw ParseError("usage: ray ROW COL STEP");
    return SetExpr::ray(Point{row, col}, step);
  }
  if (kind == "points") {
    std::vector<Point> pts;
    char ch = 0;
    int r = 0, c = 0;
    while (in >> ch) {
      if (ch != '(') throw ParseError("usage: points (r,c) (r,c) ...");
      char comma = 0, close = 0;
      if (!(in >> r >> comma >> c >> close) || comma != ',' || close != ')')
        throw ParseError("usage: points (r,c) (r,c) ...");
      pts.push_back(Point{r, c});
    }
    return SetExpr::points(std::move(pts));
  }
  throw ParseError("unknown set syntax: " + text);
}

inline std::string to_string(const Point& p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

inline std::string to_string(const SetExpr& s) {
  std::string out;
  const auto join = [&](const std::vector<Point>& ps) {
    std::string r;
    for (const Point& p : ps) r += to_string(p);
    return r;
  };
  out += "in=" + join(s.finite_in);
  out += " tails=";
  for (const Tail& t : s.tails) {
    if (const auto* c = std::get_if<ColumnTail>(&t)) {
      out += "coltail(" + std::to_string(c->col) + "," + std::to_string(c->start_row) + ")";
    } else {
      const Ray& r = std::get<Ray>(t);
      out += "ray(" + to_string(r.start) + "," + std::to_string(r.col_step) + ")";
    }
  }
  out += " out=" + join(s.finite_out);
  return out;
}

}  // namespace matroidlab
