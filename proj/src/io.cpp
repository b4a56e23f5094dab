#include "abn/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace abn {

json to_json(const Integer& n) {
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

json to_json(const Rational& q) { return q.str(); }

json to_json(const Character& v) { return json::array({to_json(v.r()), to_json(v.c()), to_json(v.chi())}); }

json to_json(const Surface& s) { return json{{"h_squared", to_json(s.h_squared())}}; }

json to_json(const Wall& w) {
  json j{{"a", to_json(w.a())}, {"b", to_json(w.b())}, {"c", to_json(w.c())}};
  if (w.is_vertical()) {
    j["vertical_beta"] = w.b() != 0 ? to_json(w.vertical_beta()) : json(nullptr);
  } else {
    j["center"] = to_json(w.center());
    j["radius_sq"] = to_json(w.radius_sq());
  }
  return j;
}

json to_json(const WallRecord& rec) {
  json j = to_json(rec.wall);
  j["u"] = to_json(rec.destabilizer);
  return j;
}

namespace {

json fiber_json(const std::optional<GrassmannianFiber>& f) {
  if (!f) {
    return nullptr;
  }
  return json{{"D", to_json(f->D)}, {"n", to_json(f->n)}};
}

template <typename T>
json optional_json(const std::optional<T>& x) {
  return x ? to_json(*x) : json(nullptr);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    if (auto n = parse_integer(j.get<std::string>())) {
      return *n;
    }
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

json to_json(const BNVerdict& v) {
  return json{
      {"g", to_json(v.g)},
      {"d", to_json(v.d)},
      {"r", to_json(v.r)},
      {"chi", to_json(v.chi)},
      {"rho", to_json(v.rho)},
      {"D", to_json(v.D)},
      {"nonempty", v.nonempty},
      {"dim", optional_json(v.dim)},
      {"structure", to_string(v.structure)},
      {"component_count", optional_json(v.component_count)},
      {"fiber", fiber_json(v.fiber)},
      {"dualized", v.dualized},
      {"reduced", {{"d", to_json(v.reduced_d)}, {"r", to_json(v.reduced_r)}, {"chi", to_json(v.reduced_chi)}}},
      {"lhs", to_json(v.lhs)},
      {"threshold", to_json(v.threshold)},
      {"R", optional_json(v.R)},
      {"w0", v.w0 ? to_json(*v.w0) : json(nullptr)},
      {"note", v.note},
  };
}

json to_json(const ModuliVerdict& v) {
  return json{{"v", to_json(v.v)},         {"r", to_json(v.r)},   {"square", to_json(v.square)},
              {"D", to_json(v.D)},         {"nonempty", v.nonempty}, {"dim", optional_json(v.dim)}};
}

json to_json(const StratumDescriptor& d) {
  return json{{"k", to_json(d.k)},
              {"k_red", to_json(d.k_red)},
              {"h", to_json(d.h)},
              {"status", to_string(d.status)},
              {"equality", d.equality},
              {"dim", optional_json(d.dim)},
              {"fiber", fiber_json(d.fiber)}};
}

Character character_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("a character is a JSON array [r, c, chi]");
  }
  return Character(integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2]));
}

Surface surface_from_json(const json& j) {
  if (!j.is_object() || !j.contains("h_squared")) {
    throw std::invalid_argument("a surface is a JSON object {\"h_squared\": n}");
  }
  return Surface(integer_from_json(j.at("h_squared")));
}

LabelGrid compute_grid(const Integer& g, const Integer& d_lo, const Integer& d_hi,
                       const Integer& r_lo, const Integer& r_hi) {
  if (g < 2 || d_lo < 1 || r_lo < 1 || d_lo > d_hi || r_lo > r_hi) {
    throw Error(ErrorKind::InvalidRange, "table needs g >= 2 and 1 <= lo <= hi for d and r");
  }
  LabelGrid grid;
  grid.g = g;
  for (Integer d = d_lo; d <= d_hi; ++d) {
    grid.degrees.push_back(d);
  }
  for (Integer r = r_lo; r <= r_hi; ++r) {
    grid.ranks.push_back(r);
  }
  for (const auto& d : grid.degrees) {
    std::vector<std::string> row;
    for (const auto& r : grid.ranks) {
      if (d + 1 - g == 0) {
        row.emplace_back("-");
      } else {
        row.emplace_back(to_string(classify_cell(g, d, r)));
      }
    }
    grid.labels.push_back(std::move(row));
  }
  return grid;
}

std::string grid_to_csv(const LabelGrid& grid) {
  std::ostringstream out;
  out << "d/r";
  for (const auto& r : grid.ranks) {
    out << ',' << r;
  }
  out << '\n';
  for (std::size_t i = 0; i < grid.degrees.size(); ++i) {
    out << grid.degrees[i];
    for (const auto& label : grid.labels[i]) {
      out << ',' << label;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

LabelGrid grid_from_csv(const std::string& text, const Integer& g) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty CSV");
  }
  LabelGrid grid;
  grid.g = g;
  auto header = split(line, ',');
  if (header.empty() || header[0] != "d/r") {
    throw std::invalid_argument("CSV header must start with d/r");
  }
  for (std::size_t i = 1; i < header.size(); ++i) {
    auto r = parse_integer(header[i]);
    if (!r) {
      throw std::invalid_argument("bad rank in CSV header: " + header[i]);
    }
    grid.ranks.push_back(*r);
  }
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw std::invalid_argument("ragged CSV row: " + line);
    }
    auto d = parse_integer(cells[0]);
    if (!d) {
      throw std::invalid_argument("bad degree in CSV: " + cells[0]);
    }
    grid.degrees.push_back(*d);
    grid.labels.emplace_back(cells.begin() + 1, cells.end());
  }
  return grid;
}

std::string grid_to_text(const LabelGrid& grid) {
  std::ostringstream out;
  out << "g = " << grid.g << "\n";
  out << std::setw(6) << "d\\r";
  for (const auto& r : grid.ranks) {
    out << std::setw(7) << r;
  }
  out << '\n';
  for (std::size_t i = 0; i < grid.degrees.size(); ++i) {
    out << std::setw(6) << grid.degrees[i];
    for (const auto& label : grid.labels[i]) {
      out << std::setw(7) << label;
    }
    out << '\n';
  }
  return out.str();
}

json grid_to_json(const LabelGrid& grid) {
  json cells = json::array();
  for (std::size_t i = 0; i < grid.degrees.size(); ++i) {
    for (std::size_t j = 0; j < grid.ranks.size(); ++j) {
      cells.push_back({{"d", to_json(grid.degrees[i])}, {"r", to_json(grid.ranks[j])}, {"label", grid.labels[i][j]}});
    }
  }
  return json{{"g", to_json(grid.g)}, {"cells", cells}};
}

std::string reference_to_computed(const std::string& published) {
  if (published == "phi") {
    return "EMPTY";
  }
  if (published == "Delta" || published == "Thm1.1") {
    return "NEW";
  }
  return published;
}

std::vector<TableDiff> compare_with_reference(const LabelGrid& grid) {
  std::vector<TableDiff> diffs;
  if (grid.g != 28) {
    return diffs;
  }
  for (const auto& cell : reference_table_g28()) {
    for (std::size_t i = 0; i < grid.degrees.size(); ++i) {
      if (grid.degrees[i] != cell.d) {
        continue;
      }
      for (std::size_t j = 0; j < grid.ranks.size(); ++j) {
        if (grid.ranks[j] != cell.r) {
          continue;
        }
        const std::string& computed = grid.labels[i][j];
        if (reference_to_computed(cell.label) != computed) {
          diffs.push_back({cell.d, cell.r, cell.label, computed, cell.d == 20 && cell.r == 3});
        }
      }
    }
  }
  return diffs;
}

}  // namespace abn
